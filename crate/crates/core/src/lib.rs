//! Exact combinatorial machinery for curve complexes, marking complexes and
//! hierarchies on the low-complexity surfaces S_{1,1}, S_{0,4} and S_{0,5}.
//!
//! The ξ=1 surfaces (once-punctured torus, four-punctured sphere) have curve
//! complexes isometric to the Farey graph; slopes, twist charts and exact
//! Farey distances live in [`farey`].  Complete clean markings and their
//! elementary-move graph live in [`markings`].  Hierarchies (a main Farey
//! geodesic plus one annular geodesic per vertex), their resolutions and the
//! large-domain projection live in [`hierarchy`].  The S_{0,5} engine —
//! normal curves over a fixed ideal triangulation, geometric intersection
//! numbers, Dehn twists and subsurface projections by arc surgery — lives in
//! [`curves05`], with the pants complex of S_{0,5} in [`pants05`].

pub mod curves05;
pub mod farey;
pub mod hierarchy;
pub mod markings;
pub mod pants05;
pub mod profile;
