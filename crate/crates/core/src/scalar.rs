//! Scalar types that stream prefixes can be decoded into.
//!
//! Exact work uses [`Rational`]; `f64`/`f32` are handy for quick inspection
//! and for plotting-style output, with the usual rounding caveats.

use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::rational::{self, Rational};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// `2^e`.
    fn pow2(e: i64) -> Self;

    fn halve(&self) -> Self {
        self.clone() * Self::pow2(-1)
    }

    fn max_of(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn pow2(e: i64) -> Self {
        rational::pow2(e)
    }

    fn halve(&self) -> Self {
        self / Rational::from_integer(2.into())
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn pow2(e: i64) -> Self {
        2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    fn halve(&self) -> Self {
        self * 0.5
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn pow2(e: i64) -> Self {
        2f32.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    fn halve(&self) -> Self {
        self * 0.5
    }
}
