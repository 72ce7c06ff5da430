//! Exact real arithmetic on lazy infinite digit streams.
//!
//! Reals in `[-1, 1]` are coded either as signed-digit streams ([`SdStream`])
//! or as Gray codes ([`GrayG`]/[`GrayH`]). Streams are built lazily and
//! memoize each cell, so asking for `n` output digits forces only a bounded
//! prefix of every input. Exact rationals serve as the ground truth, and
//! [`CReal`] gives the Cauchy-sequence view of a stream.
//!
//! ```
//! use exreal::rational::{pow2, within};
//! use exreal::{decode_sd, div_sd, encode_sd, rat};
//!
//! let x = encode_sd(&rat(1, 4)).unwrap();
//! let y = encode_sd(&rat(1, 2)).unwrap();
//! let q = div_sd(&x, &y);
//! assert!(within(&decode_sd(&q, 30), &rat(1, 2), &pow2(-30)));
//! ```

pub mod bench;
pub mod cli;
pub mod creal;
pub mod digits;
pub mod gray_ops;
pub mod rational;
pub mod scalar;
pub mod sd_ops;
pub mod stream;

pub use creal::CReal;
pub use digits::{digit_negate, ProperDigit, SignedDigit};
pub use gray_ops::{
    decode_gray, decode_gray_as, gray_aux_l, gray_aux_r, gray_average, gray_div, gray_div_step,
    gray_double, gray_encode, gray_half, gray_minus, gray_minus_h, gray_minus_one, gray_one,
    gray_to_sds, sds_to_gray, sh_g, sh_h, to_co_g, to_co_h,
};
pub use rational::{format_rational, parse_rational, rat, rat_compare, rat_normalize, Rational};
pub use scalar::Scalar;
pub use sd_ops::{
    add1, aux_l, aux_r, average, coi_one, decode_sd, decode_sd_as, div_sd, double, encode_sd, half,
    negate, sub1, EncodeError,
};
pub use stream::{take_prefix, with_counter, ForceCounter, GrayG, GrayH, GrayToken, SdStream};

/// Exact concrete reals.
pub type RealQ = CReal<Rational>;
/// Double-precision approximations; rounding makes the modulus advisory.
pub type RealF64 = CReal<f64>;
pub type RealF32 = CReal<f32>;
