//! floor(5n/47) disjoint 5-holes by cutting the set into strips, with an
//! independent verification and the JSON report.
//!
//!     cargo run --release --example witness_strip -- [n] [seed]

use pentahole::disjoint::{verify_witness, witness_5n_47};
use pentahole::io::{random_general_position, Payload, ReportDocument};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(141);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let s = random_general_position(n, seed, 1_000_000).expect("generate points");

    let report = witness_5n_47(&s).expect("witness");
    println!("n = {n}, sweep direction {:?}", report.sweep);
    for entry in &report.strip_plan {
        println!("  points {:3}..{:3}  {:?} -> {} holes", entry.start, entry.end, entry.method, entry.holes);
    }
    let check = verify_witness(&report, &s);
    println!("{} holes, bound {}, verified {}", report.holes.len(), report.bound_claimed, check.valid);

    let doc = ReportDocument::new("witness", Some(seed), &s, Payload::witness(&s, &report), check.valid);
    let json = doc.to_json();
    println!("report: {} bytes, first lines:", json.len());
    for line in json.lines().take(8) {
        println!("  {line}");
    }
}
