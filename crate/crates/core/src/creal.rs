//! Concrete reals: a Cauchy sequence together with a modulus of convergence.
//!
//! `approx(n)` is the `n`-th approximation and `modulus(p)` an index after
//! which all approximations are within `2^-p` of each other.

use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;
use crate::sd_ops::decode_sd_as;
use crate::stream::SdStream;

type Approx<T> = Arc<dyn Fn(u64) -> T + Send + Sync>;
type Modulus = Arc<dyn Fn(u32) -> u64 + Send + Sync>;

#[derive(Clone)]
pub struct CReal<T: Scalar> {
    approx: Approx<T>,
    modulus: Modulus,
}

impl<T: Scalar> fmt::Debug for CReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CReal")
            .field("a_M(8)", &self.approx(self.modulus(8)))
            .finish()
    }
}

impl<T: Scalar> CReal<T> {
    pub fn new<A, M>(approx: A, modulus: M) -> Self
    where
        A: Fn(u64) -> T + Send + Sync + 'static,
        M: Fn(u32) -> u64 + Send + Sync + 'static,
    {
        CReal {
            approx: Arc::new(approx),
            modulus: Arc::new(modulus),
        }
    }

    /// The constant sequence `a`, with modulus constantly `0`.
    pub fn from_value(a: T) -> Self {
        CReal::new(move |_| a.clone(), |_| 0)
    }

    /// `a_n` is the `n`-digit partial sum of `u`, `M(p) = p`.
    pub fn from_sd_stream(u: &SdStream) -> Self {
        let u = u.clone();
        CReal::new(move |n| decode_sd_as::<T>(&u, n as usize), |p| p as u64)
    }

    pub fn approx(&self, n: u64) -> T {
        (self.approx)(n)
    }

    pub fn modulus(&self, p: u32) -> u64 {
        (self.modulus)(p)
    }

    /// An approximation within `2^-p` of the limit.
    pub fn at_precision(&self, p: u32) -> T {
        self.approx(self.modulus(p))
    }

    /// Smallest `B >= 0` with `|a_n| <= 2^B` for every `n >= M(1)`.
    fn bound_exponent(&self) -> u32 {
        let limit = self.approx(self.modulus(1)).abs() + T::pow2(-1);
        let mut b = 0u32;
        while T::pow2(b as i64) < limit {
            b += 1;
        }
        b
    }

    pub fn add(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a - b)
    }

    fn pointwise(&self, other: &Self, f: fn(T, T) -> T) -> Self {
        let (ax, ay) = (self.approx.clone(), other.approx.clone());
        let (mx, my) = (self.modulus.clone(), other.modulus.clone());
        CReal::new(move |n| f(ax(n), ay(n)), move |p| mx(p + 1).max(my(p + 1)))
    }

    pub fn neg(&self) -> Self {
        let a = self.approx.clone();
        CReal {
            approx: Arc::new(move |n| -a(n)),
            modulus: self.modulus.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        let a = self.approx.clone();
        CReal {
            approx: Arc::new(move |n| a(n).abs()),
            modulus: self.modulus.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bx = self.bound_exponent();
        let by = other.bound_exponent();
        let (ax, ay) = (self.approx.clone(), other.approx.clone());
        let (mx, my) = (self.modulus.clone(), other.modulus.clone());
        CReal::new(
            move |n| ax(n) * ay(n),
            move |p| {
                // the bounds B only hold from M(1) on
                mx(p + 1 + by).max(my(p + 1 + bx)).max(mx(1)).max(my(1))
            },
        )
    }

    /// `a_{M(p+1)} <= b_{N(p+1)} + 2^-p`.
    pub fn leq_up_to(&self, other: &Self, p: u32) -> bool {
        let a = self.approx(self.modulus(p + 1));
        let b = other.approx(other.modulus(p + 1));
        a <= b + T::pow2(-(p as i64))
    }

    /// Whether `|a_n - a_m| <= 2^-p`, as the modulus promises once
    /// `n, m >= M(p)`. Returns `true` for pairs below the modulus.
    pub fn cauchy_holds(&self, n: u64, m: u64, p: u32) -> bool {
        let k = self.modulus(p);
        if n < k || m < k {
            return true;
        }
        (self.approx(n) - self.approx(m)).abs() <= T::pow2(-(p as i64))
    }
}
