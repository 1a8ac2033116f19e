//! Scalar abstraction for the linear-algebra kernels.
//!
//! All module-theoretic decisions in this crate (brick tests, isomorphism,
//! Ext dimensions) are rank computations, so the kernels are written against
//! an exact field. The crate-level alias [`crate::Q`] instantiates everything
//! with arbitrary-precision rationals; any other exact field implementing
//! these bounds works as well.

use num_traits::{FromPrimitive, One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Div, Mul, Neg, Sub};

/// An exact field scalar. `Zero`/`One` bring in `Add` and `Mul`.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer must embed into the scalar field")
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + FromPrimitive
{
}

/// Deterministic xorshift generator for the isomorphism-search fallback.
/// Not a statistical RNG; it only needs to hit a Zariski-open set.
#[derive(Debug, Clone)]
pub struct SmallRng {
    state: u64,
}

impl SmallRng {
    pub fn new(seed: u64) -> Self {
        SmallRng {
            state: seed | 1 | (seed << 1),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// A small integer in `[-bound, bound]`.
    pub fn small_int(&mut self, bound: u64) -> i64 {
        let span = 2 * bound + 1;
        (self.next_u64() % span) as i64 - bound as i64
    }
}
