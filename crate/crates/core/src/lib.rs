//! Empty convex pentagons ("5-holes") in planar point sets.
//!
//! The crate finds 5-holes, pairs of disjoint 5-holes and `2m + 9`
//! separable partitions in integer point sets in general position, and
//! assembles them into families of pairwise-disjoint 5-holes whose size
//! meets the `floor(5n/47)` and `(3n - 1)/28` lower bounds. Every returned
//! object is re-checked against its host set before it leaves the library.

pub mod geom;
pub mod disjoint;
pub mod holes;
pub mod io;

