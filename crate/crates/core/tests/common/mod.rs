#![allow(dead_code)]

use exreal::rational::pow2;
use exreal::{rat, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random fraction in `[lo, hi]` with denominator at most `2^20`.
pub fn rational_in(r: &mut StdRng, lo: &Rational, hi: &Rational) -> Rational {
    let q: i64 = r.gen_range(1..=1 << 20);
    let qq = Rational::from_integer(BigInt::from(q));
    let p_lo = (lo * &qq).ceil().to_integer().to_i64().unwrap();
    let p_hi = (hi * &qq).floor().to_integer().to_i64().unwrap();
    if p_lo > p_hi {
        return lo.clone();
    }
    rat(r.gen_range(p_lo..=p_hi), q)
}

pub fn unit(r: &mut StdRng) -> Rational {
    rational_in(r, &rat(-1, 1), &rat(1, 1))
}

/// `(x, y)` with `1/4 <= y <= 1` and `|x| <= y`.
pub fn div_pair(r: &mut StdRng) -> (Rational, Rational) {
    let y = rational_in(r, &rat(1, 4), &rat(1, 1));
    let x = rational_in(r, &-y.clone(), &y);
    (x, y)
}

pub fn eps(n: usize) -> Rational {
    pow2(-(n as i64))
}
