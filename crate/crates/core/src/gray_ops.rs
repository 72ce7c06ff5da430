//! Gray-code algorithms and the bridges to signed-digit streams.
//!
//! Constructor meanings: in mode G, `Lr(d, u)` is `-d (x_u - 1) / 2` and
//! `U(v)` is `x_v / 2`; in mode H, `Fin(d, u)` is `d (x_u + 1) / 2` and
//! `D(v)` is `x_v / 2`. `Lr` and `Fin` continue in mode G, `U` and `D` in
//! mode H. `ProperDigit::Pos` stands for the boolean `true`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digits::ProperDigit;
use crate::digits::SignedDigit::{self, Neg, Pos};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::sd_ops;
use crate::stream::{
    unfold_gray_g, unfold_sd, GNode, GrayCode, GrayG, GrayH, HNode, SdStream, Step, StepG, StepH,
};

/// `(a, c)` with the constructor acting as `t -> (a t + c) / 2`.
fn affine(code: &GrayCode) -> (i8, i8, GrayCode) {
    match code {
        GrayCode::G(g) => match g.force() {
            GNode::Lr(d, u) => (-d.value(), d.value(), GrayCode::G(u.clone())),
            GNode::U(v) => (1, 0, GrayCode::H(v.clone())),
        },
        GrayCode::H(h) => match h.force() {
            HNode::Fin(d, u) => (d.value(), d.value(), GrayCode::G(u.clone())),
            HNode::D(v) => (1, 0, GrayCode::H(v.clone())),
        },
    }
}

/// Midpoint of the image of `[-1, 1]` under the first `n` constructors.
pub fn decode_gray(g: &GrayG, n: usize) -> Rational {
    let mut num = BigInt::zero();
    let mut sign = 1i8;
    let mut cur = GrayCode::G(g.clone());
    for _ in 0..n {
        let (a, c, rest) = affine(&cur);
        num <<= 1;
        num += sign * c;
        sign *= a;
        cur = rest;
    }
    Rational::new(num, BigInt::one() << n)
}

pub fn decode_gray_as<T: Scalar>(g: &GrayG, n: usize) -> T {
    let mut maps = Vec::with_capacity(n);
    let mut cur = GrayCode::G(g.clone());
    for _ in 0..n {
        let (a, c, rest) = affine(&cur);
        maps.push((a, c));
        cur = rest;
    }
    maps.iter().rev().fold(T::zero(), |t, &(a, c)| {
        (T::from_i64(a as i64) * t + T::from_i64(c as i64)).halve()
    })
}

/// `-x`. Only the first proper sign flips; `U`/`D` are passed through.
pub fn gray_minus(g: &GrayG) -> GrayG {
    let g = g.clone();
    GrayG::lazy(move || match g.force() {
        GNode::Lr(d, u) => GNode::Lr(-*d, u.clone()),
        GNode::U(v) => GNode::U(gray_minus_h(v)),
    })
}

pub fn gray_minus_h(h: &GrayH) -> GrayH {
    let h = h.clone();
    GrayH::lazy(move || match h.force() {
        HNode::Fin(d, u) => HNode::Fin(-*d, u.clone()),
        HNode::D(v) => HNode::D(gray_minus_h(v)),
    })
}

pub fn to_co_h(g: &GrayG) -> GrayH {
    let g = g.clone();
    GrayH::lazy(move || match g.force() {
        GNode::Lr(b, u) => HNode::Fin(*b, gray_minus(u)),
        GNode::U(v) => HNode::D(v.clone()),
    })
}

pub fn to_co_g(h: &GrayH) -> GrayG {
    let h = h.clone();
    GrayG::lazy(move || match h.force() {
        HNode::Fin(b, u) => GNode::Lr(*b, gray_minus(u)),
        HNode::D(v) => GNode::U(v.clone()),
    })
}

/// `Lr(-1, Lr(-1, ...))`, the code of `-1`.
pub fn gray_minus_one() -> GrayG {
    unfold_gray_g(
        (),
        |()| StepG::Lr(ProperDigit::Neg, Step::Next(())),
        |()| StepH::D(Step::Next(())),
    )
}

/// `Lr(+1, code of -1)`, the code of `1`.
pub fn gray_one() -> GrayG {
    GrayG::lr(ProperDigit::Pos, gray_minus_one())
}

/// For `x <= 0`: `x + 1` when `b` is `Pos`, `-(x + 1)` when `Neg`.
pub fn sh_g(g: &GrayG, b: ProperDigit) -> GrayG {
    let g = g.clone();
    GrayG::lazy(move || {
        let w = match g.force() {
            GNode::Lr(ProperDigit::Pos, _) => gray_minus_one(),
            GNode::Lr(ProperDigit::Neg, u) => gray_minus(u),
            GNode::U(v) => sh_g(&to_co_g(v), ProperDigit::Neg),
        };
        GNode::Lr(b, w)
    })
}

/// Mode-H counterpart of [`sh_g`].
pub fn sh_h(h: &GrayH, b: ProperDigit) -> GrayH {
    let h = h.clone();
    GrayH::lazy(move || {
        let w = match h.force() {
            HNode::Fin(ProperDigit::Pos, _) => gray_one(),
            HNode::Fin(ProperDigit::Neg, u) => gray_minus(u),
            HNode::D(v) => sh_g(&to_co_g(v), ProperDigit::Pos),
        };
        HNode::Fin(b, w)
    })
}

/// `2x`, for `|x| <= 1/2`.
pub fn gray_double(g: &GrayG) -> GrayG {
    let g = g.clone();
    GrayG::delay(move || match g.force() {
        GNode::Lr(b, u) => sh_g(&gray_minus(u), *b),
        GNode::U(v) => to_co_g(v),
    })
}

/// `x / 2`.
pub fn gray_half(g: &GrayG) -> GrayG {
    GrayG::u(to_co_h(g))
}

/// `(x + y) / 2`, computed through the signed-digit average.
pub fn gray_average(a: &GrayG, b: &GrayG) -> GrayG {
    sds_to_gray(&sd_ops::average(&gray_to_sds(a), &gray_to_sds(b)))
}

/// `2x - y`, for `1/4 <= y`, `0 <= x <= y`.
pub fn gray_aux_r(a: &GrayG, b: &GrayG) -> GrayG {
    gray_double(&gray_double(&gray_average(a, &gray_half(&gray_minus(b)))))
}

/// `2x + y`, for `1/4 <= y`, `-y <= x <= 0`.
pub fn gray_aux_l(a: &GrayG, b: &GrayG) -> GrayG {
    gray_double(&gray_double(&gray_average(a, &gray_half(b))))
}

/// One division step: a digit `d` and `x'` with `x / y = (x' / y + d) / 2`
/// and `|x'| <= y`. Forces at most three constructors of `x`.
pub fn gray_div_step(x: &GrayG, y: &GrayG) -> (SignedDigit, GrayG) {
    let sign = match x.force() {
        GNode::Lr(d, _) => Ok(*d),
        GNode::U(v) => match v.force() {
            HNode::Fin(d, _) => Ok(*d),
            HNode::D(w) => match w.force() {
                HNode::Fin(d, _) => Ok(*d),
                HNode::D(v2) => Err(v2.clone()),
            },
        },
    };
    match sign {
        Ok(ProperDigit::Pos) => (Pos, gray_aux_r(x, y)),
        Ok(ProperDigit::Neg) => (Neg, gray_aux_l(x, y)),
        // x = v''/8, so 2x = U(D(v''))
        Err(v2) => (SignedDigit::Zero, GrayG::u(GrayH::d(v2))),
    }
}

/// `x / y`, for `1/4 <= y` and `|x| <= y`.
pub fn gray_div(x: &GrayG, y: &GrayG) -> GrayG {
    let y_g = y.clone();
    let y_h = y.clone();
    unfold_gray_g(
        x.clone(),
        move |x: GrayG| match gray_div_step(&x, &y_g) {
            (Pos, x2) => StepG::Lr(ProperDigit::Pos, Step::Next(gray_minus(&x2))),
            (Neg, x2) => StepG::Lr(ProperDigit::Neg, Step::Next(x2)),
            (SignedDigit::Zero, x2) => StepG::U(Step::Next(x2)),
        },
        move |x: GrayG| match gray_div_step(&x, &y_h) {
            (Pos, x2) => StepH::Fin(ProperDigit::Pos, Step::Next(x2)),
            (Neg, x2) => StepH::Fin(ProperDigit::Neg, Step::Next(gray_minus(&x2))),
            (SignedDigit::Zero, x2) => StepH::D(Step::Next(x2)),
        },
    )
}

/// Digit stream to Gray code. The state carries the pending negation of
/// the remaining digits instead of stacking `negate` wrappers.
pub fn sds_to_gray(u: &SdStream) -> GrayG {
    let read = |(u, neg): (SdStream, bool)| {
        let (d, t) = u.uncons();
        (if neg { -d } else { d }, t, neg)
    };
    unfold_gray_g(
        (u.clone(), false),
        move |s| match read(s) {
            (Pos, t, neg) => StepG::Lr(ProperDigit::Pos, Step::Next((t, !neg))),
            (Neg, t, neg) => StepG::Lr(ProperDigit::Neg, Step::Next((t, neg))),
            (SignedDigit::Zero, t, neg) => StepG::U(Step::Next((t, neg))),
        },
        move |s| match read(s) {
            (Pos, t, neg) => StepH::Fin(ProperDigit::Pos, Step::Next((t, neg))),
            (Neg, t, neg) => StepH::Fin(ProperDigit::Neg, Step::Next((t, !neg))),
            (SignedDigit::Zero, t, neg) => StepH::D(Step::Next((t, neg))),
        },
    )
}

/// Gray code to digit stream, the inverse automaton of [`sds_to_gray`].
pub fn gray_to_sds(g: &GrayG) -> SdStream {
    unfold_sd((GrayCode::G(g.clone()), false), |(code, neg)| {
        let (d, rest, flip) = match &code {
            GrayCode::G(g) => match g.force() {
                GNode::Lr(ProperDigit::Pos, u) => (Pos, GrayCode::G(u.clone()), true),
                GNode::Lr(ProperDigit::Neg, u) => (Neg, GrayCode::G(u.clone()), false),
                GNode::U(v) => (SignedDigit::Zero, GrayCode::H(v.clone()), false),
            },
            GrayCode::H(h) => match h.force() {
                HNode::Fin(ProperDigit::Pos, u) => (Pos, GrayCode::G(u.clone()), false),
                HNode::Fin(ProperDigit::Neg, u) => (Neg, GrayCode::G(u.clone()), true),
                HNode::D(v) => (SignedDigit::Zero, GrayCode::H(v.clone()), false),
            },
        };
        let out = if neg { -d } else { d };
        (out, Step::Next((rest, neg ^ flip)))
    })
}

/// Canonical Gray code of a rational: the conversion of its canonical
/// signed-digit code.
pub fn gray_encode(a: &Rational) -> Result<GrayG, sd_ops::EncodeError> {
    sd_ops::encode_sd(a).map(|u| sds_to_gray(&u))
}
