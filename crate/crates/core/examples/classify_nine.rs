//! Classifies the stored hole-free configurations and a batch of random
//! 9-point sets.
//!
//!     cargo run --release --example classify_nine

use std::collections::BTreeMap;

use pentahole::holes::{classify_9points, NinePointClassification};
use pentahole::io::{parse_points, random_general_position};

fn main() {
    for name in ["L333", "L351"] {
        let path = format!("{}/../../data/{name}.txt", env!("CARGO_MANIFEST_DIR"));
        let s = parse_points(&std::fs::read_to_string(&path).expect("read stored set")).expect("valid set");
        match classify_9points(&s).expect("classify") {
            NinePointClassification::NoFiveHole(sig) => println!("{name}: no 5-hole, layers {sig}"),
            NinePointClassification::HasFiveHole(h) => println!("{name}: unexpected hole {h}"),
        }
    }

    let mut by_class: BTreeMap<String, usize> = BTreeMap::new();
    for seed in 0..10_000 {
        let s = random_general_position(9, seed, 50).expect("generate points");
        let key = match classify_9points(&s).expect("classify") {
            NinePointClassification::HasFiveHole(_) => "has a 5-hole".to_string(),
            NinePointClassification::NoFiveHole(sig) => format!("no 5-hole, {sig}"),
        };
        *by_class.entry(key).or_default() += 1;
    }
    for (class, count) in by_class {
        println!("{count:6}  {class}");
    }
}
