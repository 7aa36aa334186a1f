//! Convex hull and onion layers of a random set.
//!
//!     cargo run --example hull_layers -- [n] [seed]

use pentahole::geom::{convex_hull, convex_layers, Layer};
use pentahole::io::random_general_position;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let s = random_general_position(n, seed, 1000).expect("generate points");

    let hull = convex_hull(&s).expect("at least 3 points");
    println!("hull ({} vertices):", hull.len());
    for p in hull.vertices() {
        println!("  {p}");
    }

    let layers = convex_layers(&s);
    println!("layer signature {}", layers.signature);
    for (i, layer) in layers.layers.iter().enumerate() {
        let kind = match layer {
            Layer::Polygon(_) => "polygon",
            Layer::Degenerate(_) => "degenerate",
        };
        println!("  layer {}: {} points ({kind})", i + 1, layer.len());
    }
}
