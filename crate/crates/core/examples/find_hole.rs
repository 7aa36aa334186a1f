//! Finds a 5-hole in random sets of 10 points and checks each answer
//! against the brute-force enumeration.
//!
//!     cargo run --release --example find_hole -- [trials]

use pentahole::holes::{constructive::local_fallback_count, enumerate_k_holes, find_5hole};
use pentahole::io::random_general_position;

fn main() {
    let trials: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1000);
    let mut total_holes = 0;
    for seed in 0..trials {
        let s = random_general_position(10, seed, 1_000_000).expect("generate points");
        let hole = find_5hole(&s).expect("every 10 points contain a 5-hole");
        let all = enumerate_k_holes(&s, 5).expect("oracle");
        assert!(all.contains(&hole), "seed {seed}: {hole} not among the oracle's holes");
        total_holes += all.len();
        if seed == 0 {
            println!("seed 0: {hole}");
        }
    }
    println!("{trials} sets, every one has a 5-hole");
    println!("average number of 5-holes per set: {:.2}", total_holes as f64 / trials as f64);
    println!("local fallbacks: {}", local_fallback_count());
}
