//! Exact orientation tests at the coordinate limit.
//!
//!     cargo run --example predicates

use pentahole::geom::{cross, orientation, validate_general_position, Point, C_MAX};

fn main() {
    let a = Point::new(-C_MAX, -C_MAX);
    let b = Point::new(C_MAX, C_MAX - 1);
    let c = Point::new(C_MAX - 1, C_MAX);
    // nearly collinear, decided exactly
    println!("cross(a, b, c) = {}", cross(a, b, c));
    println!("orientation(a, b, c) = {:?}", orientation(a, b, c));
    println!("orientation(b, a, c) = {:?}", orientation(b, a, c));

    let pts = [Point::new(0, 0), Point::new(1, 1), Point::new(5, 0), Point::new(2, 2)];
    match validate_general_position(&pts) {
        Ok(s) => println!("valid: {s:?}"),
        Err(e) => println!("rejected: {e}"),
    }
}
