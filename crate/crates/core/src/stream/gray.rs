use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use super::{Step, Thunk};
use crate::digits::ProperDigit;

/// Gray code in mode G. `Lr(d, u)` denotes `-d (x_u - 1) / 2` and `U(v)`
/// denotes `x_v / 2` for `v` in mode H.
#[derive(Clone)]
pub struct GrayG(Arc<LazyLock<GNode, Thunk<GNode>>>);

/// Gray code in mode H. `Fin(d, u)` denotes `d (x_u + 1) / 2` and `D(v)`
/// denotes `x_v / 2`.
#[derive(Clone)]
pub struct GrayH(Arc<LazyLock<HNode, Thunk<HNode>>>);

#[derive(Clone, Debug)]
pub enum GNode {
    Lr(ProperDigit, GrayG),
    U(GrayH),
}

#[derive(Clone, Debug)]
pub enum HNode {
    Fin(ProperDigit, GrayG),
    D(GrayH),
}

impl GrayG {
    pub fn lazy<F>(f: F) -> GrayG
    where
        F: FnOnce() -> GNode + Send + 'static,
    {
        GrayG(Arc::new(LazyLock::new(Box::new(f))))
    }

    pub fn lr(d: ProperDigit, u: GrayG) -> GrayG {
        GrayG::lazy(move || GNode::Lr(d, u))
    }

    pub fn u(v: GrayH) -> GrayG {
        GrayG::lazy(move || GNode::U(v))
    }

    pub fn delay<F>(f: F) -> GrayG
    where
        F: FnOnce() -> GrayG + Send + 'static,
    {
        GrayG::lazy(move || f().force().clone())
    }

    #[inline]
    pub fn force(&self) -> &GNode {
        LazyLock::force(&self.0)
    }

    pub fn tokens(&self) -> GrayTokens {
        GrayTokens {
            cur: GrayCode::G(self.clone()),
        }
    }

    pub fn take_tokens(&self, n: usize) -> Vec<GrayToken> {
        self.tokens().take(n).collect()
    }
}

impl GrayH {
    pub fn lazy<F>(f: F) -> GrayH
    where
        F: FnOnce() -> HNode + Send + 'static,
    {
        GrayH(Arc::new(LazyLock::new(Box::new(f))))
    }

    pub fn fin(d: ProperDigit, u: GrayG) -> GrayH {
        GrayH::lazy(move || HNode::Fin(d, u))
    }

    pub fn d(v: GrayH) -> GrayH {
        GrayH::lazy(move || HNode::D(v))
    }

    pub fn delay<F>(f: F) -> GrayH
    where
        F: FnOnce() -> GrayH + Send + 'static,
    {
        GrayH::lazy(move || f().force().clone())
    }

    #[inline]
    pub fn force(&self) -> &HNode {
        LazyLock::force(&self.0)
    }

    pub fn tokens(&self) -> GrayTokens {
        GrayTokens {
            cur: GrayCode::H(self.clone()),
        }
    }

    pub fn take_tokens(&self, n: usize) -> Vec<GrayToken> {
        self.tokens().take(n).collect()
    }
}

impl fmt::Debug for GrayG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GrayG(..)")
    }
}

impl fmt::Debug for GrayH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("GrayH(..)")
    }
}

/// A Gray code in either mode.
#[derive(Clone, Debug)]
pub enum GrayCode {
    G(GrayG),
    H(GrayH),
}

impl GrayCode {
    /// Forces one cell; returns its token and the rest.
    pub fn next_token(&self) -> (GrayToken, GrayCode) {
        match self {
            GrayCode::G(g) => match g.force() {
                GNode::Lr(ProperDigit::Pos, u) => (GrayToken::R, GrayCode::G(u.clone())),
                GNode::Lr(ProperDigit::Neg, u) => (GrayToken::L, GrayCode::G(u.clone())),
                GNode::U(v) => (GrayToken::U, GrayCode::H(v.clone())),
            },
            GrayCode::H(h) => match h.force() {
                HNode::Fin(ProperDigit::Pos, u) => (GrayToken::Fr, GrayCode::G(u.clone())),
                HNode::Fin(ProperDigit::Neg, u) => (GrayToken::Fl, GrayCode::G(u.clone())),
                HNode::D(v) => (GrayToken::D, GrayCode::H(v.clone())),
            },
        }
    }
}

pub struct GrayTokens {
    cur: GrayCode,
}

impl Iterator for GrayTokens {
    type Item = GrayToken;

    fn next(&mut self) -> Option<GrayToken> {
        let (t, rest) = self.cur.next_token();
        self.cur = rest;
        Some(t)
    }
}

/// One constructor on the wire. `R`/`L` are `Lr` with sign `+1`/`-1`,
/// `Fr`/`Fl` are `Fin` with sign `+1`/`-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrayToken {
    R,
    L,
    U,
    Fr,
    Fl,
    D,
}

impl GrayToken {
    pub fn as_str(self) -> &'static str {
        match self {
            GrayToken::R => "R",
            GrayToken::L => "L",
            GrayToken::U => "U",
            GrayToken::Fr => "Fr",
            GrayToken::Fl => "Fl",
            GrayToken::D => "D",
        }
    }

    /// Whether this constructor belongs to mode G.
    pub fn is_g(self) -> bool {
        matches!(self, GrayToken::R | GrayToken::L | GrayToken::U)
    }

    /// Whether the constructor's argument is in mode G.
    pub fn continues_in_g(self) -> bool {
        matches!(
            self,
            GrayToken::R | GrayToken::L | GrayToken::Fr | GrayToken::Fl
        )
    }

    pub fn format_list(tokens: &[GrayToken]) -> String {
        tokens
            .iter()
            .map(|t| t.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a space-separated token list, checking that each token is a
    /// constructor of the mode its predecessor leaves us in (starting in G).
    pub fn parse_list(text: &str) -> Result<Vec<GrayToken>, String> {
        let mut in_g = true;
        let mut out = Vec::new();
        for (i, word) in text.split_whitespace().enumerate() {
            let t: GrayToken = word.parse()?;
            if t.is_g() != in_g {
                return Err(format!(
                    "token {} ({word}) is not a mode-{} constructor",
                    i + 1,
                    if in_g { 'G' } else { 'H' }
                ));
            }
            in_g = t.continues_in_g();
            out.push(t);
        }
        Ok(out)
    }
}

impl fmt::Display for GrayToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GrayToken {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "R" => GrayToken::R,
            "L" => GrayToken::L,
            "U" => GrayToken::U,
            "Fr" => GrayToken::Fr,
            "Fl" => GrayToken::Fl,
            "D" => GrayToken::D,
            _ => return Err(format!("unknown gray token {s:?}")),
        })
    }
}

/// What one mode-G corecursion step emits.
pub enum StepG<S> {
    Lr(ProperDigit, Step<S, GrayG>),
    U(Step<S, GrayH>),
}

/// What one mode-H corecursion step emits.
pub enum StepH<S> {
    Fin(ProperDigit, Step<S, GrayG>),
    D(Step<S, GrayH>),
}

struct Steps<FG, FH> {
    g: FG,
    h: FH,
}

/// Mutual corecursion into mode G. `step_g` runs for states whose cell is a
/// G constructor, `step_h` for H cells.
pub fn unfold_gray_g<S, FG, FH>(seed: S, step_g: FG, step_h: FH) -> GrayG
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    unfold_g(
        seed,
        Arc::new(Steps {
            g: step_g,
            h: step_h,
        }),
    )
}

/// Like [`unfold_gray_g`], starting in mode H.
pub fn unfold_gray_h<S, FG, FH>(seed: S, step_g: FG, step_h: FH) -> GrayH
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    unfold_h(
        seed,
        Arc::new(Steps {
            g: step_g,
            h: step_h,
        }),
    )
}

fn cont_g<S, FG, FH>(next: Step<S, GrayG>, steps: Arc<Steps<FG, FH>>) -> GrayG
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    match next {
        Step::Done(g) => g,
        Step::Next(s) => unfold_g(s, steps),
    }
}

fn cont_h<S, FG, FH>(next: Step<S, GrayH>, steps: Arc<Steps<FG, FH>>) -> GrayH
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    match next {
        Step::Done(h) => h,
        Step::Next(s) => unfold_h(s, steps),
    }
}

fn unfold_g<S, FG, FH>(seed: S, steps: Arc<Steps<FG, FH>>) -> GrayG
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    GrayG::lazy(move || match (steps.g)(seed) {
        StepG::Lr(d, next) => GNode::Lr(d, cont_g(next, steps)),
        StepG::U(next) => GNode::U(cont_h(next, steps)),
    })
}

fn unfold_h<S, FG, FH>(seed: S, steps: Arc<Steps<FG, FH>>) -> GrayH
where
    S: Send + 'static,
    FG: Fn(S) -> StepG<S> + Send + Sync + 'static,
    FH: Fn(S) -> StepH<S> + Send + Sync + 'static,
{
    GrayH::lazy(move || match (steps.h)(seed) {
        StepH::Fin(d, next) => HNode::Fin(d, cont_g(next, steps)),
        StepH::D(next) => HNode::D(cont_h(next, steps)),
    })
}
