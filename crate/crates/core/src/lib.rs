//! Weak-order lattices of simply-laced Weyl groups, lattice-congruence and
//! forcing machinery, and the module calculus of preprojective algebras
//! (ideals `I(w)`, layers, bricks, stones, tau-rigid modules) over exact
//! rationals, together with a verification suite that machine-checks the
//! bijections, labellings, and order isomorphisms relating them at small
//! rank.

pub mod arrays;
pub mod bits;
pub mod export;
pub mod ideals;
pub mod lattice;
pub mod linalg;
pub mod pi;
pub mod rep;
pub mod scalar;
pub mod strings;
pub mod verify;
pub mod weyl;

/// The working field: arbitrary-precision rationals. Every kernel is generic
/// over [`scalar::Scalar`]; this is the instantiation the crate exports.
pub type Q = num_rational::BigRational;

pub use lattice::FiniteLattice;
pub use weyl::{CartanType, Family, WeylElement, WeylGroup};

/// Convenience constructor for small rational constants.
pub fn q(n: i64) -> Q {
    use num_traits::FromPrimitive;
    Q::from_i64(n).expect("i64 embeds in Q")
}
