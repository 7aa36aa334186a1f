use serde::{Deserialize, Serialize};

use crate::disjoint::{
    verify_witness, DisjointPair, PlanEntry, SeparablePartition, Separator, Side, Verification, VerifyIssue,
    WitnessMethod, WitnessReport,
};
use crate::geom::{convex_layers, hull_vertices, ConvexPolygon, LayerSignature, Point, PointSet};
use crate::holes::{Hole, NinePointClassification};

use super::IoError;

pub const SCHEMA_VERSION: &str = "1";

/// A point given both by its index in the canonical point set and by its
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedPoint {
    pub index: usize,
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedSeparator {
    pub from: IndexedPoint,
    pub to: IndexedPoint,
    pub from_side: Side,
    pub to_side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Hull {
        vertices: Vec<IndexedPoint>,
    },
    Layers {
        signature: LayerSignature,
        layers: Vec<Vec<IndexedPoint>>,
    },
    Hole {
        vertices: Vec<IndexedPoint>,
    },
    Holes {
        k: usize,
        holes: Vec<Vec<IndexedPoint>>,
    },
    DisjointPair {
        a: Vec<IndexedPoint>,
        b: Vec<IndexedPoint>,
        separator: IndexedSeparator,
    },
    SeparablePartition {
        m: usize,
        s1: Vec<IndexedPoint>,
        s2: Vec<IndexedPoint>,
        s3: Vec<IndexedPoint>,
        hole: Vec<IndexedPoint>,
    },
    NinePointClassification {
        has_five_hole: bool,
        hole: Option<Vec<IndexedPoint>>,
        signature: LayerSignature,
    },
    WitnessReport {
        n: usize,
        holes: Vec<Vec<IndexedPoint>>,
        bound_claimed: usize,
        method: WitnessMethod,
        verified: bool,
        sweep: Option<(i64, i64)>,
        strip_plan: Vec<PlanEntry>,
    },
    /// The query has no answer on this input.
    NotFound {
        query: String,
    },
}

/// The single JSON schema for every command's output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub seed: Option<u64>,
    pub input_digest: String,
    pub payload: Payload,
    pub verified: bool,
}

fn index(s: &PointSet, points: &[Point]) -> Vec<IndexedPoint> {
    points
        .iter()
        .map(|&p| IndexedPoint {
            index: s.index_of(p).expect("payload points belong to the input set"),
            x: p.x,
            y: p.y,
        })
        .collect()
}

fn resolve(s: &PointSet, points: &[IndexedPoint]) -> Result<Vec<Point>, IoError> {
    points
        .iter()
        .map(|ip| match s.get(ip.index) {
            Some(p) if p == Point::new(ip.x, ip.y) => Ok(p),
            Some(p) => Err(IoError::ReportMismatch(format!(
                "index {} is {p} in the input but ({}, {}) in the report",
                ip.index, ip.x, ip.y
            ))),
            None => Err(IoError::ReportMismatch(format!("index {} out of range", ip.index))),
        })
        .collect()
}

impl Payload {
    pub fn hull(s: &PointSet) -> Payload {
        Payload::Hull { vertices: index(s, &hull_vertices(s.points())) }
    }

    pub fn layers(s: &PointSet) -> Payload {
        let layers = convex_layers(s);
        Payload::Layers {
            signature: layers.signature.clone(),
            layers: layers.layers.iter().map(|l| index(s, l.points())).collect(),
        }
    }

    pub fn hole(s: &PointSet, hole: &Hole) -> Payload {
        Payload::Hole { vertices: index(s, hole.vertices()) }
    }

    pub fn holes(s: &PointSet, k: usize, holes: &[Hole]) -> Payload {
        Payload::Holes { k, holes: holes.iter().map(|h| index(s, h.vertices())).collect() }
    }

    pub fn pair(s: &PointSet, pair: &DisjointPair) -> Payload {
        let sep = pair.separator;
        let ends = index(s, &[sep.from, sep.to]);
        Payload::DisjointPair {
            a: index(s, pair.a.vertices()),
            b: index(s, pair.b.vertices()),
            separator: IndexedSeparator { from: ends[0], to: ends[1], from_side: sep.from_side, to_side: sep.to_side },
        }
    }

    pub fn partition(s: &PointSet, p: &SeparablePartition) -> Payload {
        Payload::SeparablePartition {
            m: p.m,
            s1: index(s, p.s1.points()),
            s2: index(s, p.s2.points()),
            s3: index(s, p.s3.points()),
            hole: index(s, p.hole.vertices()),
        }
    }

    pub fn classification(s: &PointSet, c: &NinePointClassification) -> Payload {
        match c {
            NinePointClassification::HasFiveHole(h) => Payload::NinePointClassification {
                has_five_hole: true,
                hole: Some(index(s, h.vertices())),
                signature: convex_layers(s).signature,
            },
            NinePointClassification::NoFiveHole(sig) => {
                Payload::NinePointClassification { has_five_hole: false, hole: None, signature: sig.clone() }
            }
        }
    }

    pub fn witness(s: &PointSet, r: &WitnessReport) -> Payload {
        Payload::WitnessReport {
            n: r.n,
            holes: r.holes.iter().map(|h| index(s, h.vertices())).collect(),
            bound_claimed: r.bound_claimed,
            method: r.method,
            verified: r.verified,
            sweep: r.sweep,
            strip_plan: r.strip_plan.clone(),
        }
    }

    /// Every polygon the payload claims to be a hole, resolved against `s`.
    pub fn hole_lists(&self, s: &PointSet) -> Result<Vec<Vec<Point>>, IoError> {
        let lists: Vec<&Vec<IndexedPoint>> = match self {
            Payload::Hole { vertices } => vec![vertices],
            Payload::Holes { holes, .. } | Payload::WitnessReport { holes, .. } => holes.iter().collect(),
            Payload::DisjointPair { a, b, .. } => vec![a, b],
            Payload::SeparablePartition { hole, .. } => vec![hole],
            Payload::NinePointClassification { hole: Some(h), .. } => vec![h],
            _ => Vec::new(),
        };
        lists.into_iter().map(|l| resolve(s, l)).collect()
    }
}

impl ReportDocument {
    pub fn new(command: &str, seed: Option<u64>, s: &PointSet, payload: Payload, verified: bool) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            seed,
            input_digest: s.digest(),
            payload,
            verified,
        }
    }

    /// Pretty JSON with a trailing newline; stable for equal inputs.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<ReportDocument, IoError> {
        let doc: ReportDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(IoError::ReportMismatch(format!("unsupported schema version {}", doc.schema_version)));
        }
        Ok(doc)
    }

    /// Independently re-checks the document against its input `s`: digest,
    /// index/coordinate agreement, and every geometric claim of the payload.
    pub fn verify(&self, s: &PointSet) -> Result<Verification, IoError> {
        if self.input_digest != s.digest() {
            return Err(IoError::ReportMismatch("input digest differs".into()));
        }
        let polygons = self.payload.hole_lists(s)?;
        let mut holes = Vec::with_capacity(polygons.len());
        let mut issues = Vec::new();
        for (i, vertices) in polygons.iter().enumerate() {
            match ConvexPolygon::new(vertices.clone()) {
                Ok(poly) => holes.push(Hole::from_parts(poly, s.digest())),
                Err(_) => issues.push(VerifyIssue::NotEmptyConvex { hole: i }),
            }
        }
        if !issues.is_empty() {
            return Ok(Verification { valid: false, issues });
        }
        let report = match &self.payload {
            Payload::WitnessReport { n, bound_claimed, method, sweep, strip_plan, .. } => WitnessReport {
                n: *n,
                holes,
                bound_claimed: *bound_claimed,
                method: *method,
                verified: false,
                sweep: *sweep,
                strip_plan: strip_plan.clone(),
            },
            _ => WitnessReport::direct(s, holes),
        };
        // single-hole payloads need no disjointness; k-hole lists may overlap
        if let Payload::Holes { k, .. } = &self.payload {
            let k = *k;
            let mut verdict = Verification { valid: true, issues: Vec::new() };
            for (i, h) in report.holes.iter().enumerate() {
                let ok = h.k() == k && crate::holes::is_empty_convex(h.vertices(), s).unwrap_or(false);
                if !ok {
                    verdict.valid = false;
                    verdict.issues.push(VerifyIssue::NotEmptyConvex { hole: i });
                }
            }
            return Ok(verdict);
        }
        let verdict = verify_witness(&report, s);
        match &self.payload {
            Payload::Hull { vertices } => {
                if resolve(s, vertices)? != hull_vertices(s.points()) {
                    return Err(IoError::ReportMismatch("hull differs from the input hull".into()));
                }
            }
            Payload::Layers { .. } => {
                if self.payload != Payload::layers(s) {
                    return Err(IoError::ReportMismatch("layers differ from the input layers".into()));
                }
            }
            Payload::DisjointPair { a, b, separator } => {
                let ends = resolve(s, &[separator.from, separator.to])?;
                let sep = Separator { from: ends[0], to: ends[1], from_side: separator.from_side, to_side: separator.to_side };
                if !sep.separates(&resolve(s, a)?, &resolve(s, b)?) {
                    return Err(IoError::ReportMismatch("separator does not split the pair".into()));
                }
            }
            Payload::SeparablePartition { m, s1, s2, s3, .. } => {
                let part = SeparablePartition {
                    s1: s.subset(resolve(s, s1)?),
                    s2: s.subset(resolve(s, s2)?),
                    s3: s.subset(resolve(s, s3)?),
                    hole: report.holes[0].clone(),
                    m: *m,
                };
                if let Err(e) = part.check(s) {
                    return Err(IoError::ReportMismatch(e));
                }
            }
            _ => {}
        }
        Ok(verdict)
    }
}
