//! Lazy, memoized codata shared by both codings.
//!
//! Every stream cell is a [`LazyLock`](std::sync::LazyLock): the first reader
//! runs the cell's thunk, concurrent readers block on it, and everybody
//! afterwards sees the same cached constructor. Tails are handles to further
//! unforced cells, so forcing `n` cells of a stream never touches cell `n + 1`.

mod counter;
mod gray;
mod sd;

pub use counter::{with_counter, Codata, CountedStream, ForceCounter};
pub use gray::{
    unfold_gray_g, unfold_gray_h, GNode, GrayCode, GrayG, GrayH, GrayToken, GrayTokens, HNode,
    StepG, StepH,
};
pub use sd::{take_prefix, unfold_sd, SdDigits, SdStream};

/// Outcome of one corecursion step: either splice in an already existing
/// stream, or continue corecursively from a new state.
#[derive(Debug, Clone)]
pub enum Step<S, W> {
    Done(W),
    Next(S),
}

type Thunk<T> = Box<dyn FnOnce() -> T + Send>;
