use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::gray::{GNode, GrayG, GrayH, HNode};
use super::sd::SdStream;

/// Shared tally of how many cells of a watched stream have been forced.
#[derive(Clone, Debug, Default)]
pub struct ForceCounter(Arc<AtomicU64>);

impl ForceCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::SeqCst)
    }

    pub fn incr(&self) {
        self.0.fetch_add(1, Ordering::SeqCst);
    }
}

/// Stream types that can be wrapped so each forced cell bumps a counter.
pub trait Codata: Clone {
    /// A stream with the same value as `self`; forcing its `k`-th cell
    /// forces the `k`-th cell of `self` and increments `counter` once.
    fn counted_by(&self, counter: &ForceCounter) -> Self;
}

impl Codata for SdStream {
    fn counted_by(&self, counter: &ForceCounter) -> Self {
        let src = self.clone();
        let c = counter.clone();
        SdStream::lazy(move || {
            let (d, t) = src.uncons();
            c.incr();
            (d, t.counted_by(&c))
        })
    }
}

impl Codata for GrayG {
    fn counted_by(&self, counter: &ForceCounter) -> Self {
        let src = self.clone();
        let c = counter.clone();
        GrayG::lazy(move || {
            let node = match src.force() {
                GNode::Lr(d, u) => GNode::Lr(*d, u.counted_by(&c)),
                GNode::U(v) => GNode::U(v.counted_by(&c)),
            };
            c.incr();
            node
        })
    }
}

impl Codata for GrayH {
    fn counted_by(&self, counter: &ForceCounter) -> Self {
        let src = self.clone();
        let c = counter.clone();
        GrayH::lazy(move || {
            let node = match src.force() {
                HNode::Fin(d, u) => HNode::Fin(*d, u.counted_by(&c)),
                HNode::D(v) => HNode::D(v.counted_by(&c)),
            };
            c.incr();
            node
        })
    }
}

/// A stream paired with the counter observing it.
#[derive(Clone, Debug)]
pub struct CountedStream<S> {
    pub stream: S,
    pub counter: ForceCounter,
}

impl<S> CountedStream<S> {
    pub fn forced(&self) -> u64 {
        self.counter.get()
    }
}

pub fn with_counter<S: Codata>(s: &S) -> (CountedStream<S>, ForceCounter) {
    let counter = ForceCounter::new();
    let stream = s.counted_by(&counter);
    (
        CountedStream {
            stream,
            counter: counter.clone(),
        },
        counter,
    )
}
