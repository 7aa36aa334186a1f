//! (3n - 1)/28 disjoint 5-holes for n = 19, 47, 103 by recursive
//! separable partitions.
//!
//!     cargo run --release --example witness_doubling

use pentahole::disjoint::{doubling_size, verify_witness, witness_doubling};
use pentahole::io::random_general_position;

fn main() {
    for k in 1..=3 {
        let n = doubling_size(k);
        let s = random_general_position(n, k as u64, 1_000_000).expect("generate points");
        let report = witness_doubling(&s).expect("witness");
        let check = verify_witness(&report, &s);
        println!(
            "k = {k}, n = {n}: {} disjoint 5-holes (bound {}), verified {}",
            report.holes.len(),
            report.bound_claimed,
            check.valid
        );
    }
}
