//! Runtime scaling of stream division.
//!
//! Times the production of `n` quotient digits of `1001/3001 / 10001/20001`
//! for several `n`. Only forcing the digits is timed; encoding the inputs,
//! decoding the result and freeing the streams are not.

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;

use crate::gray_ops::{gray_div, gray_encode};
use crate::rational::{rat, Rational};
use crate::sd_ops::{div_sd, encode_sd};
use crate::stream::take_prefix;

/// Stack for threads that force long dependency chains: forcing digit `n`
/// of a quotient recurses through about `n` nested streams.
pub const BIG_STACK: usize = 1 << 30;

/// Runs `f` on a fresh thread with [`BIG_STACK`] bytes of stack.
pub fn with_big_stack<R, F>(f: F) -> R
where
    F: FnOnce() -> R + Send + 'static,
    R: Send + 'static,
{
    std::thread::Builder::new()
        .name("exreal-deep".into())
        .stack_size(BIG_STACK)
        .spawn(f)
        .expect("spawn worker thread")
        .join()
        .unwrap_or_else(|e| std::panic::resume_unwind(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Code {
    Sd,
    Gray,
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Code::Sd => "sd",
            Code::Gray => "gray",
        })
    }
}

pub fn bench_inputs() -> (Rational, Rational) {
    (rat(1001, 3001), rat(10001, 20001))
}

/// Wall time to force the first `n` quotient symbols.
pub fn time_division(n: usize, code: Code) -> Duration {
    let (x, y) = bench_inputs();
    match code {
        Code::Sd => {
            let q = div_sd(&encode_sd(&x).unwrap(), &encode_sd(&y).unwrap());
            let start = Instant::now();
            let digits = take_prefix(&q, n);
            let t = start.elapsed();
            debug_assert_eq!(digits.len(), n);
            t
        }
        Code::Gray => {
            let q = gray_div(&gray_encode(&x).unwrap(), &gray_encode(&y).unwrap());
            let start = Instant::now();
            let tokens = q.take_tokens(n);
            let t = start.elapsed();
            debug_assert_eq!(tokens.len(), n);
            t
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub rows: Vec<(usize, f64)>,
    /// `log(t_max / t_min) / log(n_max / n_min)`; absent for fewer than two rows.
    pub exponent: Option<f64>,
}

pub fn growth_exponent(rows: &[(usize, f64)]) -> Option<f64> {
    let (n_min, t_min) = *rows.iter().min_by_key(|r| r.0)?;
    let (n_max, t_max) = *rows.iter().max_by_key(|r| r.0)?;
    if n_max == n_min || t_min <= 0.0 {
        return None;
    }
    Some((t_max / t_min).ln() / (n_max as f64 / n_min as f64).ln())
}

/// Times each count on a big-stack thread.
pub fn run_bench(counts: &[usize], code: Code) -> BenchReport {
    let counts = counts.to_vec();
    with_big_stack(move || {
        let rows: Vec<(usize, f64)> = counts
            .iter()
            .map(|&n| (n, time_division(n, code).as_secs_f64()))
            .collect();
        let exponent = growth_exponent(&rows);
        BenchReport { rows, exponent }
    })
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>8} {:>12}", "digits", "seconds")?;
        for (n, t) in &self.rows {
            writeln!(f, "{n:>8} {t:>12.6}")?;
        }
        if let Some(e) = self.exponent {
            writeln!(f, "exponent={e:.3}")?;
        }
        Ok(())
    }
}
