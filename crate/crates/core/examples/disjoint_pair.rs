//! Two disjoint 5-holes in 19 random points, with the separating line, and
//! an SVG drawing of the result.
//!
//!     cargo run --example disjoint_pair -- [seed] [out.svg]

use std::path::PathBuf;

use pentahole::disjoint::{dividing_diagonals, find_two_disjoint_5holes};
use pentahole::io::{random_general_position, render_svg, Overlay};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let out = args.next().map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("pair.svg"));

    let s = random_general_position(19, seed, 1000).expect("generate points");
    if let Ok(diagonals) = dividing_diagonals(&s) {
        for d in diagonals {
            println!("dividing diagonal {} -> {}: {:?}-splitter", d.from, d.to, d.splitter());
        }
    }
    let pair = find_two_disjoint_5holes(&s).expect("search").expect("19 points always hold a pair");
    println!("a = {}", pair.a);
    println!("b = {}", pair.b);
    println!("separator {} -> {} (tags {:?}, {:?})", pair.separator.from, pair.separator.to, pair.separator.from_side, pair.separator.to_side);

    let overlays = [
        Overlay::Hole(pair.a.vertices().to_vec()),
        Overlay::Hole(pair.b.vertices().to_vec()),
        Overlay::Line(pair.separator.from, pair.separator.to),
    ];
    render_svg(&s, &overlays, &out).expect("write svg");
    println!("drawing written to {}", out.display());
}
