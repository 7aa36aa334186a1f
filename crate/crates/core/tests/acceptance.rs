//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs as a plain binary (no test harness) so the summary is always shown
//! by `cargo test`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pentahole::disjoint::{
    find_two_disjoint_5holes, separable_partition, verify_witness, witness_5n_47, witness_doubling, DisjointError,
    DisjointPair,
};
use pentahole::geom::{convex_polygons_disjoint, cross, layer_signature, orientation, Point, PointSet, C_MAX};
use pentahole::holes::{classify_9points, enumerate_k_holes, find_5hole, is_empty_convex, NinePointClassification};
use pentahole::io::{parse_points, random_general_position};

type Outcome = Result<String, String>;

fn points(n: usize, seed: u64) -> PointSet {
    random_general_position(n, seed, C_MAX).expect("random set")
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {:.1?}, limit {:?}", t, limit))
    } else {
        Ok(())
    }
}

/// Pair certificate re-checked with the emptiness test, polygon
/// disjointness and the stored separator.
fn pair_ok(pair: &DisjointPair, s: &PointSet) -> bool {
    pair.holes().iter().all(|h| h.k() == 5 && is_empty_convex(h.vertices(), s) == Ok(true))
        && convex_polygons_disjoint(pair.a.polygon(), pair.b.polygon())
        && pair.separator.separates(pair.a.vertices(), pair.b.vertices())
}

/// Brute force: some two 5-holes from the full enumeration are disjoint.
fn pair_oracle(s: &PointSet) -> bool {
    let holes = enumerate_k_holes(s, 5).expect("oracle");
    (0..holes.len()).any(|i| (i + 1..holes.len()).any(|j| convex_polygons_disjoint(holes[i].polygon(), holes[j].polygon())))
}

fn stored(name: &str) -> PointSet {
    let path = format!("{}/../../data/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    parse_points(&std::fs::read_to_string(path).expect("stored configuration")).expect("valid stored set")
}

fn c1_ten_points() -> Outcome {
    let start = Instant::now();
    let trials = 10_000;
    for seed in 0..trials {
        let s = points(10, 1_000_000 + seed);
        match find_5hole(&s) {
            Some(h) if is_empty_convex(h.vertices(), &s) == Ok(true) && h.k() == 5 => {}
            _ => return Err(format!("seed {seed}: no verified 5-hole")),
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{trials} sets, 0 failures, {:.1?}", start.elapsed()))
}

fn c2_nineteen_points() -> Outcome {
    let start = Instant::now();
    let trials = 1_000;
    for seed in 0..trials {
        let s = points(19, 2_000_000 + seed);
        match find_two_disjoint_5holes(&s) {
            Ok(Some(pair)) if pair_ok(&pair, &s) => {}
            other => return Err(format!("seed {seed}: {other:?}")),
        }
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("{trials} sets, 0 failures, {:.1?}", start.elapsed()))
}

fn c3_partitions() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for m in (1..=10).chain([19]) {
        for seed in 0..100 {
            let s = points(2 * m + 9, 3_000_000 + 1000 * m as u64 + seed);
            match separable_partition(&s, m) {
                Ok(p) => p.check(&s).map_err(|e| format!("m = {m}, seed {seed}: {e}"))?,
                Err(e) => return Err(format!("m = {m}, seed {seed}: {e}")),
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} partitions, 0 contract violations, {:.1?}", start.elapsed()))
}

fn c4_forty_seven() -> Outcome {
    let start = Instant::now();
    let mut min = usize::MAX;
    for seed in 0..100 {
        let s = points(47, 4_000_000 + seed);
        let r = witness_5n_47(&s).map_err(|e| format!("seed {seed}: {e}"))?;
        let check = verify_witness(&r, &s);
        if r.holes.len() < 5 || !check.valid {
            return Err(format!("seed {seed}: {} holes, issues {:?}", r.holes.len(), check.issues));
        }
        min = min.min(r.holes.len());
    }
    Ok(format!("100 sets, at least {min} verified disjoint holes each, {:.1?}", start.elapsed()))
}

fn c5_strip_bound() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut total_n = 0;
    for trial in 0..200u64 {
        let n = rng.gen_range(9..=300);
        total_n += n;
        let s = points(n, 5_000_000 + trial);
        let r = witness_5n_47(&s).map_err(|e| format!("n = {n}: {e}"))?;
        let check = verify_witness(&r, &s);
        if r.holes.len() < 5 * n / 47 || !check.valid {
            return Err(format!("n = {n}: {} holes, issues {:?}", r.holes.len(), check.issues));
        }
    }
    within(Duration::from_secs(900), start)?;
    Ok(format!("200 sets ({total_n} points in all), bound met and verified, {:.1?}", start.elapsed()))
}

fn c6_doubling() -> Outcome {
    let start = Instant::now();
    for (n, want) in [(19, 2), (47, 5)] {
        for seed in 0..50 {
            let s = points(n, 6_000_000 + 100 * n as u64 + seed);
            let r = witness_doubling(&s).map_err(|e| format!("n = {n}: {e}"))?;
            if r.holes.len() < want || !verify_witness(&r, &s).valid {
                return Err(format!("n = {n}, seed {seed}: {} holes", r.holes.len()));
            }
        }
    }
    let s = points(103, 6_103_000);
    let r = witness_doubling(&s).map_err(|e| format!("n = 103: {e}"))?;
    if r.holes.len() < 11 || !verify_witness(&r, &s).valid {
        return Err(format!("n = 103: {} holes", r.holes.len()));
    }
    match witness_doubling(&points(20, 0)) {
        Err(DisjointError::NotADoublingSize(20)) => {}
        other => return Err(format!("n = 20 accepted: {other:?}")),
    }
    Ok(format!("n = 19: >= 2, n = 47: >= 5 on 50 sets each; n = 103: {}, {:.1?}", r.holes.len(), start.elapsed()))
}

fn c7_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut with_hole, mut with_pair) = (0, 0);
    for trial in 0..1_000u64 {
        let n = rng.gen_range(5..=12);
        let coord_max = [C_MAX, 1000, 30][trial as usize % 3];
        let s = random_general_position(n, 7_000_000 + trial, coord_max).map_err(|e| e.to_string())?;
        let oracle_hole = !enumerate_k_holes(&s, 5).map_err(|e| e.to_string())?.is_empty();
        let found = find_5hole(&s);
        if found.is_some() != oracle_hole {
            return Err(format!("trial {trial}: find_5hole {} vs oracle {oracle_hole}", found.is_some()));
        }
        let pair = find_two_disjoint_5holes(&s).map_err(|e| e.to_string())?;
        if pair.is_some() != pair_oracle(&s) {
            return Err(format!("trial {trial}: pair search disagrees with the oracle"));
        }
        if let Some(p) = &pair {
            if !pair_ok(p, &s) {
                return Err(format!("trial {trial}: bad pair certificate"));
            }
        }
        with_hole += usize::from(oracle_hole);
        with_pair += usize::from(pair.is_some());
    }
    Ok(format!(
        "1000 sets, exact agreement ({with_hole} with a 5-hole, {with_pair} with a disjoint pair), {:.1?}",
        start.elapsed()
    ))
}

fn c8_nine_points() -> Outcome {
    let start = Instant::now();
    let mut sets: Vec<PointSet> = vec![stored("L333"), stored("L351")];
    let mut no_hole = 0;
    for seed in 0..100_000u64 {
        let coord_max = [C_MAX, 100, 12][seed as usize % 3];
        sets.push(random_general_position(9, 8_000_000 + seed, coord_max).map_err(|e| e.to_string())?);
    }
    for (i, s) in sets.iter().enumerate() {
        let oracle_empty = enumerate_k_holes(s, 5).map_err(|e| e.to_string())?.is_empty();
        match classify_9points(s).map_err(|e| format!("set {i}: {e}"))? {
            NinePointClassification::NoFiveHole(sig) => {
                if !oracle_empty || !(sig.is(&[3, 3, 3]) || sig.is(&[3, 5, 1])) || sig != layer_signature(s) {
                    return Err(format!("set {i}: NoFiveHole({sig}) is wrong"));
                }
                no_hole += 1;
            }
            NinePointClassification::HasFiveHole(h) => {
                if oracle_empty || is_empty_convex(h.vertices(), s) != Ok(true) {
                    return Err(format!("set {i}: bad hole {h}"));
                }
            }
        }
    }
    if no_hole < 2 {
        return Err("stored hole-free configurations not recognised".into());
    }
    Ok(format!("{} sets, verdicts match the oracle ({no_hole} without a 5-hole), {:.1?}", sets.len(), start.elapsed()))
}

fn c9_predicates() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let coord = |rng: &mut ChaCha8Rng| -> i64 {
        match rng.gen_range(0..4) {
            0 => C_MAX,
            1 => -C_MAX,
            2 => (C_MAX - rng.gen_range(0..3)) * if rng.gen() { 1 } else { -1 },
            _ => rng.gen_range(-C_MAX..=C_MAX),
        }
    };
    for i in 0..1_000_000 {
        let [a, b, c] = [0; 3].map(|_| Point::new(coord(&mut rng), coord(&mut rng)));
        let wide = |p: Point, q: Point, r: Point| {
            (q.x as i128 - p.x as i128) * (r.y as i128 - p.y as i128) - (q.y as i128 - p.y as i128) * (r.x as i128 - p.x as i128)
        };
        let o = orientation(a, b, c);
        if cross(a, b, c) as i128 != wide(a, b, c)
            || o != orientation(b, c, a)
            || o != orientation(c, a, b)
            || o != orientation(b, a, c).reversed()
            || o.sign() != wide(a, b, c).signum() as i32
        {
            return Err(format!("triple {i}: {a} {b} {c}"));
        }
    }
    Ok(format!("10^6 triples at +/-{C_MAX}, identities exact, {:.1?}", start.elapsed()))
}

fn c10_determinism() -> Outcome {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("pentahole-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let run = |tag: &str| -> Result<(Vec<u8>, Vec<u8>), String> {
        let svg = dir.join(format!("{tag}.svg"));
        let out = Command::new(env!("CARGO_BIN_EXE_pentahole"))
            .args(["witness", "--method", "strip", "-n", "120", "--seed", "10", "--json", "--svg"])
            .arg(&svg)
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok((out.stdout, std::fs::read(&svg).map_err(|e| e.to_string())?))
    };
    let first = run("first")?;
    let second = run("second")?;
    let _ = std::fs::remove_dir_all(&dir);
    if first != second {
        return Err("outputs differ between runs".into());
    }
    Ok(format!("JSON ({} bytes) and SVG identical across two runs, {:.1?}", first.0.len(), start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 find_5hole on 10^4 random 10-point sets", c1_ten_points),
        ("2 two disjoint 5-holes in 10^3 random 19-point sets", c2_nineteen_points),
        ("3 separable partitions, m in 1..10 and 19", c3_partitions),
        ("4 five disjoint 5-holes in 47 points", c4_forty_seven),
        ("5 floor(5n/47) bound for n in [9, 300]", c5_strip_bound),
        ("6 doubling bound at n = 19, 47, 103", c6_doubling),
        ("7 oracle equivalence for n <= 12", c7_oracle_equivalence),
        ("8 nine-point classification", c8_nine_points),
        ("9 exact predicates at the coordinate limit", c9_predicates),
        ("10 byte-identical reports", c10_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
