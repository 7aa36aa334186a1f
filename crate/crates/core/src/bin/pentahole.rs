//! Command-line front end. Exit codes: 0 success, 1 nothing found (or a
//! report failed verification), 2 invalid input, 3 contract violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pentahole::disjoint::{
    find_two_disjoint_5holes, separable_partition, witness_5n_47, witness_doubling, DisjointError,
};
use pentahole::geom::{convex_layers, hull_vertices, GeomError, PointSet, C_MAX};
use pentahole::holes::{classify_9points, enumerate_k_holes, find_5hole, HoleError, NinePointClassification};
use pentahole::io::{emit, parse_points, random_general_position, render_svg, IoError, Overlay, Payload, ReportDocument};

#[derive(Parser)]
#[command(name = "pentahole", version, about = "Empty convex pentagons in planar point sets")]
struct Cli {
    /// Points file to read (one "x y" per line); default: generate from -n/--seed
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Where to write the result; default: stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also draw the result as SVG
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
    /// Emit a JSON report instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Number of random points (with --seed, when no --in is given)
    #[arg(short, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = C_MAX)]
    coord_max: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate random points in general position
    Gen,
    /// Convex hull
    Hull,
    /// Convex layers and their signature
    Layers,
    /// Some 5-hole
    Hole,
    /// Every k-hole, by brute force
    Holes {
        #[arg(short, default_value_t = 5)]
        k: usize,
    },
    /// Two disjoint 5-holes
    Pair,
    /// Classify a 9-point set
    Classify9,
    /// Separable partition into m + 9 + m points
    Partition {
        #[arg(short)]
        m: usize,
    },
    /// Many pairwise-disjoint 5-holes
    Witness {
        #[arg(long, value_enum, default_value_t = Method::Strip)]
        method: Method,
    },
    /// Re-check a JSON report against its input
    Verify {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Strip,
    Doubling,
}

enum Failure {
    Invalid(String),
    Contract(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<HoleError> for Failure {
    fn from(e: HoleError) -> Self {
        match e {
            HoleError::ContractViolation(_) => Failure::Contract(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<DisjointError> for Failure {
    fn from(e: DisjointError) -> Self {
        match e {
            DisjointError::ContractViolation(_) | DisjointError::Hole(HoleError::ContractViolation(_)) => {
                Failure::Contract(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// What a command produced: a payload, whether the answer was positive, a
/// plain-text rendering and the overlays to draw.
struct Outcome {
    payload: Payload,
    found: bool,
    verified: bool,
    text: String,
    overlays: Vec<Overlay>,
}

impl Outcome {
    fn found(payload: Payload, text: String, overlays: Vec<Overlay>) -> Outcome {
        Outcome { payload, found: true, verified: true, text, overlays }
    }

    fn none(query: &str) -> Outcome {
        Outcome {
            payload: Payload::NotFound { query: query.to_string() },
            found: false,
            verified: true,
            text: "none\n".to_string(),
            overlays: Vec::new(),
        }
    }
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| format!("{i}\n")).collect()
}

fn load(cli: &Cli) -> Result<PointSet, Failure> {
    match (&cli.input, cli.n) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            Ok(parse_points(&text)?)
        }
        (None, Some(n)) => Ok(random_general_position(n, cli.seed, cli.coord_max)?),
        (None, None) => Err(Failure::Invalid("give --in FILE or -n N".into())),
    }
}

fn run(cli: &Cli, s: &PointSet) -> Result<Outcome, Failure> {
    Ok(match &cli.command {
        Command::Gen => unreachable!("handled before loading a report"),
        Command::Hull => {
            let hull = hull_vertices(s.points());
            let text = lines(&hull);
            Outcome::found(Payload::hull(s), text, vec![Overlay::Polygon(hull)])
        }
        Command::Layers => {
            let layers = convex_layers(s);
            let mut text = format!("{}\n", layers.signature);
            for l in &layers.layers {
                text.push_str(&l.points().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
                text.push('\n');
            }
            let overlays = layers.layers.iter().map(|l| Overlay::Polygon(l.points().to_vec())).collect();
            Outcome::found(Payload::layers(s), text, overlays)
        }
        Command::Hole => match find_5hole(s) {
            Some(h) => Outcome::found(Payload::hole(s, &h), format!("{h}\n"), vec![Overlay::Hole(h.vertices().to_vec())]),
            None => Outcome::none("5-hole"),
        },
        Command::Holes { k } => {
            let holes = enumerate_k_holes(s, *k)?;
            if holes.is_empty() {
                Outcome::none(&format!("{k}-hole"))
            } else {
                let overlays = holes.iter().map(|h| Overlay::Hole(h.vertices().to_vec())).collect();
                Outcome::found(Payload::holes(s, *k, &holes), lines(&holes), overlays)
            }
        }
        Command::Pair => match find_two_disjoint_5holes(s)? {
            Some(p) => {
                let text = format!("{}\n{}\n", p.a, p.b);
                let overlays = vec![
                    Overlay::Hole(p.a.vertices().to_vec()),
                    Overlay::Hole(p.b.vertices().to_vec()),
                    Overlay::Line(p.separator.from, p.separator.to),
                ];
                Outcome::found(Payload::pair(s, &p), text, overlays)
            }
            None => Outcome::none("two disjoint 5-holes"),
        },
        Command::Classify9 => {
            let c = classify_9points(s)?;
            let (text, overlays) = match &c {
                NinePointClassification::HasFiveHole(h) => {
                    (format!("HasFiveHole {h}\n"), vec![Overlay::Hole(h.vertices().to_vec())])
                }
                NinePointClassification::NoFiveHole(sig) => (format!("NoFiveHole {sig}\n"), Vec::new()),
            };
            Outcome::found(Payload::classification(s, &c), text, overlays)
        }
        Command::Partition { m } => {
            let p = separable_partition(s, *m)?;
            let mut overlays: Vec<Overlay> =
                [&p.s1, &p.s2, &p.s3].iter().map(|part| Overlay::Polygon(hull_vertices(part.points()))).collect();
            overlays.push(Overlay::Hole(p.hole.vertices().to_vec()));
            let text = format!("S1 {}\nS2 {}\nS3 {}\nhole {}\n", p.s1.len(), p.s2.len(), p.s3.len(), p.hole);
            Outcome::found(Payload::partition(s, &p), text, overlays)
        }
        Command::Witness { method } => {
            let r = match method {
                Method::Strip => witness_5n_47(s)?,
                Method::Doubling => witness_doubling(s)?,
            };
            let mut text = format!("{} holes, bound {}, verified {}\n", r.holes.len(), r.bound_claimed, r.verified);
            text.push_str(&lines(&r.holes));
            let overlays = r.holes.iter().map(|h| Overlay::Hole(h.vertices().to_vec())).collect();
            let mut out = Outcome::found(Payload::witness(s, &r), text, overlays);
            out.verified = r.verified;
            out
        }
        Command::Verify { report } => {
            let text = std::fs::read_to_string(report)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", report.display())))?;
            let doc = ReportDocument::from_json(&text)?;
            let (valid, detail) = match doc.verify(s) {
                Ok(v) => (v.valid, format!("{:?}", v.issues)),
                Err(IoError::ReportMismatch(e)) => (false, e),
                Err(e) => return Err(e.into()),
            };
            let polygons = doc.payload.hole_lists(s).unwrap_or_default();
            let overlays = polygons.into_iter().map(Overlay::Hole).collect();
            let text = if valid { "valid\n".to_string() } else { format!("invalid: {detail}\n") };
            Outcome { payload: doc.payload, found: valid, verified: valid, text, overlays }
        }
    })
}

fn write_out(cli: &Cli, content: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, content).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen => "gen",
        Command::Hull => "hull",
        Command::Layers => "layers",
        Command::Hole => "hole",
        Command::Holes { .. } => "holes",
        Command::Pair => "pair",
        Command::Classify9 => "classify9",
        Command::Partition { .. } => "partition",
        Command::Witness { .. } => "witness",
        Command::Verify { .. } => "verify",
    }
}

fn main_inner(cli: &Cli) -> Result<bool, Failure> {
    let s = load(cli)?;
    if let Command::Gen = cli.command {
        write_out(cli, &emit(&s))?;
        if let Some(path) = &cli.svg {
            render_svg(&s, &[], path)?;
        }
        return Ok(true);
    }
    let outcome = run(cli, &s)?;
    let seed = if cli.input.is_none() { Some(cli.seed) } else { None };
    if cli.json {
        let doc = ReportDocument::new(command_name(&cli.command), seed, &s, outcome.payload, outcome.verified);
        write_out(cli, &doc.to_json())?;
    } else {
        write_out(cli, &outcome.text)?;
    }
    if let Some(path) = &cli.svg {
        render_svg(&s, &outcome.overlays, path)?;
    }
    Ok(outcome.found)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match main_inner(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Contract(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
