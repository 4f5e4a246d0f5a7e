//! Exact reconstruction of the moduli spaces of rank-2 holomorphic bundles
//! with canonical determinant and vanishing second Chern class on minimal
//! class VII surfaces with second Betti number 1.
//!
//! Everything is computed symbolically over the rationals: line bundles are
//! points of a coordinatized Picard group, cohomology dimensions come from
//! an exact Riemann-Roch formula plus effective-divisor solving, and the
//! moduli reports assemble the classification (a closed disc, possibly
//! degenerated by nodes, punctures, and boundary touches) without any
//! floating-point arithmetic.
//!
//! Module map:
//!
//! * [`rat`]: rational scalars and their textual/serde conventions;
//! * [`picard`]: line bundles as canonical power plus a flat factor;
//! * [`surface`]: the three surface families and their numerical data;
//! * [`cohomology`]: dimensions, Euler characteristics, and the torsion
//!   parameter sets R(S) and Q(S);
//! * [`bundles`]: rank-2 extension bundles, stability, canonical forms;
//! * [`moduli`]: assembled polystable and simple moduli reports;
//! * [`render`]: deterministic SVG pictures of the polystable disc.

pub mod bundles;
pub mod cohomology;
pub mod error;
pub mod moduli;
pub mod picard;
pub mod rat;
pub mod render;
pub mod surface;

pub use error::Error;
