//! Signed-digit stream algorithms.
//!
//! Everything here is lazy: building a stream reads no input digits, and the
//! number of input cells forced per output digit is bounded (see the
//! look-ahead tests).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::digits::SignedDigit::{self, Neg, Pos};
use crate::rational::{pow2, Rational};
use crate::scalar::Scalar;
use crate::stream::{unfold_sd, SdStream, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("not-in-unit-interval")]
    NotInUnitInterval,
}

/// Canonical signed-digit code of `a` in `[-1, 1]`.
///
/// Emits `+1` when `a >= 1/4`, `-1` when `a <= -1/4`, else `0`, and
/// continues with `2a - d`.
pub fn encode_sd(a: &Rational) -> Result<SdStream, EncodeError> {
    if a.abs() > Rational::one() {
        return Err(EncodeError::NotInUnitInterval);
    }
    let quarter = pow2(-2);
    Ok(unfold_sd(a.clone(), move |a: Rational| {
        let d = if a >= quarter {
            Pos
        } else if a <= -quarter.clone() {
            Neg
        } else {
            SignedDigit::Zero
        };
        let next = a * Rational::from_integer(2.into()) - Rational::from_integer(d.value().into());
        (d, Step::Next(next))
    }))
}

/// `sum_{k=1..n} d_k 2^-k`, exactly. Forces `n` cells.
pub fn decode_sd(u: &SdStream, n: usize) -> Rational {
    let mut num = BigInt::zero();
    for d in u.digits().take(n) {
        num <<= 1;
        num += d.value();
    }
    Rational::new(num, BigInt::one() << n)
}

/// The same partial sum, evaluated in any scalar type.
pub fn decode_sd_as<T: Scalar>(u: &SdStream, n: usize) -> T {
    let digits: Vec<SignedDigit> = u.digits().take(n).collect();
    digits.iter().rev().fold(T::zero(), |acc, d| {
        (acc + T::from_i64(d.value() as i64)).halve()
    })
}

pub fn negate(u: &SdStream) -> SdStream {
    unfold_sd(u.clone(), |u: SdStream| {
        let (d, t) = u.uncons();
        (-d, Step::Next(t))
    })
}

/// `0 :: u`.
pub fn half(u: &SdStream) -> SdStream {
    SdStream::cons(SignedDigit::Zero, u.clone())
}

/// `+1 +1 +1 ...`, the code of 1.
pub fn coi_one() -> SdStream {
    SdStream::repeat(Pos)
}

/// `x + 1`, for `x <= 0`.
pub fn add1(u: &SdStream) -> SdStream {
    unfold_sd(u.clone(), |u: SdStream| {
        let (d, t) = u.uncons();
        match d {
            Pos => (Pos, Step::Done(coi_one())),
            SignedDigit::Zero => (Pos, Step::Next(t)),
            Neg => (Pos, Step::Done(t)),
        }
    })
}

/// `x - 1`, for `x >= 0`.
pub fn sub1(u: &SdStream) -> SdStream {
    unfold_sd(u.clone(), |u: SdStream| {
        let (d, t) = u.uncons();
        match d {
            Neg => (Neg, Step::Done(negate(&coi_one()))),
            SignedDigit::Zero => (Neg, Step::Next(t)),
            Pos => (Neg, Step::Done(t)),
        }
    })
}

/// `2x`, for `|x| <= 1/2`.
pub fn double(u: &SdStream) -> SdStream {
    let u = u.clone();
    SdStream::delay(move || {
        let (d, t) = u.uncons();
        match d {
            Pos => add1(&t),
            SignedDigit::Zero => t,
            Neg => sub1(&t),
        }
    })
}

enum AvgState {
    Start(SdStream, SdStream),
    Carry(i8, SdStream, SdStream),
}

/// `(x + y) / 2`.
///
/// Carry automaton: with carry `i` and remaining inputs `u'`, `v'`, the
/// output still to come denotes `(i + x_u' + x_v') / 4`.
pub fn average(u: &SdStream, v: &SdStream) -> SdStream {
    unfold_sd(AvgState::Start(u.clone(), v.clone()), |s| {
        let (i, u, v) = match s {
            AvgState::Start(u, v) => {
                let (a, u) = u.uncons();
                let (b, v) = v.uncons();
                (a.value() + b.value(), u, v)
            }
            AvgState::Carry(i, u, v) => (i, u, v),
        };
        let (a, u) = u.uncons();
        let (b, v) = v.uncons();
        let k = 2 * i + a.value() + b.value();
        let d = if k >= 2 {
            Pos
        } else if k <= -2 {
            Neg
        } else {
            SignedDigit::Zero
        };
        let carry = k - 4 * d.value();
        debug_assert!((-2..=2).contains(&carry));
        (d, Step::Next(AvgState::Carry(carry, u, v)))
    })
}

/// `2x - y`, for `1/4 <= y`, `0 <= x <= y`.
pub fn aux_r(u: &SdStream, v: &SdStream) -> SdStream {
    double(&double(&average(u, &half(&negate(v)))))
}

/// `2x + y`, for `1/4 <= y`, `-y <= x <= 0`.
pub fn aux_l(u: &SdStream, v: &SdStream) -> SdStream {
    double(&double(&average(u, &half(v))))
}

/// What the division step does next, decided by at most three leading digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivCase {
    /// `x >= 0` is certain: emit `+1`, continue on `2x - y`.
    Up,
    /// `|x| <= 1/8`: emit `0`, continue on `2x`.
    Stay,
    /// `x <= 0` is certain: emit `-1`, continue on `2x + y`.
    Down,
}

impl DivCase {
    pub fn digit(self) -> SignedDigit {
        match self {
            DivCase::Up => Pos,
            DivCase::Stay => SignedDigit::Zero,
            DivCase::Down => Neg,
        }
    }
}

/// Classifies `u` by its first nonzero digit among the first three.
pub fn div_case(u: &SdStream) -> DivCase {
    let mut cur = u.clone();
    for _ in 0..3 {
        let (d, t) = cur.uncons();
        match d {
            Pos => return DivCase::Up,
            Neg => return DivCase::Down,
            SignedDigit::Zero => cur = t,
        }
    }
    DivCase::Stay
}

/// `x / y`, for `1/4 <= y` and `|x| <= y`.
pub fn div_sd(u: &SdStream, v: &SdStream) -> SdStream {
    unfold_sd((u.clone(), v.clone()), |(u, v): (SdStream, SdStream)| {
        let case = div_case(&u);
        let next = match case {
            DivCase::Up => aux_r(&u, &v),
            DivCase::Stay => double(&u),
            DivCase::Down => aux_l(&u, &v),
        };
        (case.digit(), Step::Next((next, v)))
    })
}
