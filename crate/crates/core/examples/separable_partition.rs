//! Splits 2m + 9 random points into three hull-disjoint parts of sizes m, 9
//! and m, the middle one holding a 5-hole.
//!
//!     cargo run --release --example separable_partition -- [m] [seed]

use pentahole::disjoint::{label_uvw, separable_partition};
use pentahole::io::random_general_position;

fn main() {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    let s = random_general_position(2 * m + 9, seed, 1_000_000).expect("generate points");

    let lab = label_uvw(&s, m, 0).expect("labeling");
    println!("anchor u1 = {}, u2 = {}, w_m = {}", lab.anchor[0], lab.anchor[1], lab.anchor[2]);
    println!("|U| = {}, |V| = {}, |W| = {}", lab.u.len(), lab.v.len(), lab.w.len());

    let p = separable_partition(&s, m).expect("the partition always exists");
    p.check(&s).expect("invariants hold");
    for (name, part) in [("S1", &p.s1), ("S2", &p.s2), ("S3", &p.s3)] {
        let pts: Vec<String> = part.iter().map(|q| q.to_string()).collect();
        println!("{name}: {}", pts.join(" "));
    }
    println!("5-hole in S2: {}", p.hole);
}
