use std::fmt;
use std::sync::{Arc, LazyLock};

use super::{Step, Thunk};
use crate::digits::SignedDigit;

/// An infinite stream of signed digits `d1 d2 d3 ...`, denoting
/// `sum d_k 2^-k` in `[-1, 1]`.
///
/// Cloning is cheap and shares the memoized cells.
#[derive(Clone)]
pub struct SdStream(Arc<LazyLock<Cell, Thunk<Cell>>>);

type Cell = (SignedDigit, SdStream);

impl SdStream {
    /// A stream whose first cell is computed by `f` on first demand.
    pub fn lazy<F>(f: F) -> SdStream
    where
        F: FnOnce() -> (SignedDigit, SdStream) + Send + 'static,
    {
        SdStream(Arc::new(LazyLock::new(Box::new(f))))
    }

    /// `d :: tail`.
    pub fn cons(d: SignedDigit, tail: SdStream) -> SdStream {
        SdStream::lazy(move || (d, tail))
    }

    /// A stream that becomes whatever stream `f` returns, once forced.
    pub fn delay<F>(f: F) -> SdStream
    where
        F: FnOnce() -> SdStream + Send + 'static,
    {
        SdStream::lazy(move || f().uncons())
    }

    /// Forces the first cell.
    #[inline]
    pub fn force(&self) -> &(SignedDigit, SdStream) {
        LazyLock::force(&self.0)
    }

    pub fn uncons(&self) -> (SignedDigit, SdStream) {
        let (d, t) = self.force();
        (*d, t.clone())
    }

    pub fn head(&self) -> SignedDigit {
        self.force().0
    }

    pub fn tail(&self) -> SdStream {
        self.force().1.clone()
    }

    /// Infinite iterator over the digits; each `next` forces exactly one cell.
    pub fn digits(&self) -> SdDigits {
        SdDigits { cur: self.clone() }
    }

    /// Constant stream `d d d ...`.
    pub fn repeat(d: SignedDigit) -> SdStream {
        unfold_sd((), move |()| (d, Step::Next(())))
    }

    /// The finite prefix `digits` followed by `rest`.
    pub fn from_prefix(digits: &[SignedDigit], rest: SdStream) -> SdStream {
        digits
            .iter()
            .rev()
            .fold(rest, |tail, &d| SdStream::cons(d, tail))
    }

    /// Finite prefix padded with zeros.
    pub fn from_digits(digits: &[SignedDigit]) -> SdStream {
        SdStream::from_prefix(digits, SdStream::repeat(SignedDigit::Zero))
    }
}

impl fmt::Debug for SdStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SdStream(..)")
    }
}

pub struct SdDigits {
    cur: SdStream,
}

impl Iterator for SdDigits {
    type Item = SignedDigit;

    fn next(&mut self) -> Option<SignedDigit> {
        let (d, t) = self.cur.uncons();
        self.cur = t;
        Some(d)
    }
}

/// The first `n` digits of `u`; forces exactly `n` cells.
pub fn take_prefix(u: &SdStream, n: usize) -> Vec<SignedDigit> {
    u.digits().take(n).collect()
}

/// Corecursion: builds the stream whose cells are produced by repeatedly
/// applying `step` to a state. A `Step::Done(w)` result splices `w` in as
/// the rest of the stream.
pub fn unfold_sd<S, F>(seed: S, step: F) -> SdStream
where
    S: Send + 'static,
    F: Fn(S) -> (SignedDigit, Step<S, SdStream>) + Send + Sync + 'static,
{
    unfold_shared(seed, Arc::new(step))
}

fn unfold_shared<S, F>(seed: S, step: Arc<F>) -> SdStream
where
    S: Send + 'static,
    F: Fn(S) -> (SignedDigit, Step<S, SdStream>) + Send + Sync + 'static,
{
    SdStream::lazy(move || {
        let (d, next) = step(seed);
        let tail = match next {
            Step::Done(w) => w,
            Step::Next(s) => unfold_shared(s, step),
        };
        (d, tail)
    })
}
