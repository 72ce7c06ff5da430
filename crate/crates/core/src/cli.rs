//! Command-line front end.
//!
//! Positional forms follow `encode 1/2 4 sd` and
//! `div 1001/3001 10001/20001 19 sd --stats`; `--digits` and `--code` may be
//! used instead of the trailing count and coding.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};

use crate::bench::run_bench;
pub use crate::bench::Code;
use crate::digits::ProperDigit;
use crate::gray_ops::{
    decode_gray, gray_aux_l, gray_aux_r, gray_average, gray_div, gray_double, gray_encode,
    gray_half, gray_minus, gray_to_sds, sds_to_gray, sh_g,
};
use crate::rational::{format_rational, parse_rational, pow2, rat, Rational};
use crate::sd_ops::{
    add1, aux_l, aux_r, average, decode_sd, div_sd, double, encode_sd, half, negate, sub1,
};
use crate::stream::{
    take_prefix, with_counter, CountedStream, ForceCounter, GrayG, GrayToken, SdStream,
};

const DEFAULT_DIGITS: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "exreal",
    version,
    about = "Exact real arithmetic on digit streams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug)]
pub struct StreamArgs {
    /// Rational inputs, then optionally the digit count and the coding.
    #[arg(required = true, allow_hyphen_values = true, value_name = "ARG")]
    pub args: Vec<String>,
    #[arg(long)]
    pub digits: Option<usize>,
    #[arg(long, value_enum)]
    pub code: Option<Code>,
    /// Append a key=value run report.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the first digits of a rational's canonical code.
    Encode(StreamArgs),
    /// Apply a stream operation to encoded rationals.
    Op {
        #[arg(value_enum)]
        name: OpName,
        #[command(flatten)]
        rest: StreamArgs,
    },
    /// Divide two rationals digit by digit.
    Div(StreamArgs),
    /// Time division for several digit counts.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [100, 500, 2000])]
        digits: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Code::Sd)]
        code: Code,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    Neg,
    Half,
    Double,
    Add1,
    Sub1,
    Avg,
    Auxr,
    Auxl,
    Convert,
}

impl OpName {
    fn arity(self) -> usize {
        match self {
            OpName::Avg | OpName::Auxr | OpName::Auxl => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violated: {m}"),
        }
    }
}

/// Result of one streamed computation.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub digits: usize,
    pub u_forced: u64,
    pub v_forced: u64,
    pub elapsed: f64,
    pub decoded: Rational,
    pub exact: Rational,
}

impl RunReport {
    pub fn error_bound_ok(&self) -> bool {
        (&self.decoded - &self.exact).abs() <= pow2(-(self.digits as i64))
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "digits={} u_forced={} v_forced={} elapsed={:.6} decoded={} exact={} error_bound_ok={}",
            self.digits,
            self.u_forced,
            self.v_forced,
            self.elapsed,
            format_rational(&self.decoded),
            format_rational(&self.exact),
            self.error_bound_ok()
        )
    }
}

struct Resolved {
    values: Vec<Rational>,
    digits: usize,
    code: Code,
}

fn resolve(a: &StreamArgs, arity: usize) -> Result<Resolved, CliError> {
    if a.args.len() < arity {
        return Err(CliError::Parse(format!(
            "expected {arity} rational argument(s), got {}",
            a.args.len()
        )));
    }
    let values = a.args[..arity]
        .iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::Parse(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut extra = a.args[arity..].iter();
    let mut digits = a.digits;
    let mut code = a.code;
    if let Some(s) = extra.next() {
        let n = s
            .parse::<usize>()
            .map_err(|_| CliError::Parse(format!("digit count {s:?} is not a natural number")))?;
        digits.get_or_insert(n);
    }
    if let Some(s) = extra.next() {
        let c = Code::from_str(s, true)
            .map_err(|_| CliError::Parse(format!("unknown coding {s:?} (expected sd or gray)")))?;
        code.get_or_insert(c);
    }
    if let Some(s) = extra.next() {
        return Err(CliError::Parse(format!("unexpected argument {s:?}")));
    }
    Ok(Resolved {
        values,
        digits: digits.unwrap_or(DEFAULT_DIGITS),
        code: code.unwrap_or(Code::Sd),
    })
}

fn require(ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Precondition(format!("{what} failed")))
    }
}

fn in_unit(name: &str, a: &Rational) -> Result<(), CliError> {
    require(a.abs() <= Rational::one(), &format!("|{name}| <= 1"))
}

fn divisor_ok(x: &Rational, y: &Rational) -> Result<(), CliError> {
    require(rat(1, 4) <= *y, "1/4 <= y")?;
    require(*y <= Rational::one(), "y <= 1")?;
    require(x.abs() <= *y, "|x| <= y")
}

/// Inputs as streams in the chosen coding, with per-input counters.
enum Inputs {
    Sd(Vec<CountedStream<SdStream>>),
    Gray(Vec<CountedStream<GrayG>>),
}

impl Inputs {
    fn new(values: &[Rational], code: Code) -> Inputs {
        match code {
            Code::Sd => Inputs::Sd(
                values
                    .iter()
                    .map(|v| with_counter(&encode_sd(v).expect("range checked")).0)
                    .collect(),
            ),
            Code::Gray => Inputs::Gray(
                values
                    .iter()
                    .map(|v| with_counter(&gray_encode(v).expect("range checked")).0)
                    .collect(),
            ),
        }
    }

    fn counter(&self, i: usize) -> Option<ForceCounter> {
        match self {
            Inputs::Sd(s) => s.get(i).map(|c| c.counter.clone()),
            Inputs::Gray(s) => s.get(i).map(|c| c.counter.clone()),
        }
    }
}

enum Output {
    Sd(SdStream),
    Gray(GrayG),
}

impl Output {
    fn render(&self, n: usize) -> (String, Rational) {
        match self {
            Output::Sd(u) => {
                let text: String = take_prefix(u, n).iter().map(|d| d.symbol()).collect();
                (text, decode_sd(u, n))
            }
            Output::Gray(g) => (GrayToken::format_list(&g.take_tokens(n)), decode_gray(g, n)),
        }
    }
}

fn apply_op(op: OpName, inputs: &Inputs) -> Output {
    match inputs {
        Inputs::Sd(s) => {
            let u = &s[0].stream;
            let v = s.get(1).map(|c| &c.stream);
            Output::Sd(match op {
                OpName::Neg => negate(u),
                OpName::Half => half(u),
                OpName::Double => double(u),
                OpName::Add1 => add1(u),
                OpName::Sub1 => sub1(u),
                OpName::Avg => average(u, v.unwrap()),
                OpName::Auxr => aux_r(u, v.unwrap()),
                OpName::Auxl => aux_l(u, v.unwrap()),
                OpName::Convert => gray_to_sds(&sds_to_gray(u)),
            })
        }
        Inputs::Gray(s) => {
            let g = &s[0].stream;
            let h = s.get(1).map(|c| &c.stream);
            Output::Gray(match op {
                OpName::Neg => gray_minus(g),
                OpName::Half => gray_half(g),
                OpName::Double => gray_double(g),
                OpName::Add1 => sh_g(g, ProperDigit::Pos),
                OpName::Sub1 => sh_g(&gray_minus(g), ProperDigit::Neg),
                OpName::Avg => gray_average(g, h.unwrap()),
                OpName::Auxr => gray_aux_r(g, h.unwrap()),
                OpName::Auxl => gray_aux_l(g, h.unwrap()),
                // inputs are already sdsToGray of the canonical code
                OpName::Convert => g.clone(),
            })
        }
    }
}

fn check_op(op: OpName, v: &[Rational]) -> Result<Rational, CliError> {
    for (i, a) in v.iter().enumerate() {
        in_unit(["x", "y"][i], a)?;
    }
    let zero = Rational::zero();
    let one = Rational::one();
    Ok(match op {
        OpName::Neg => -&v[0],
        OpName::Half => &v[0] / Rational::from_integer(2.into()),
        OpName::Double => {
            require(v[0].abs() <= rat(1, 2), "|x| <= 1/2")?;
            &v[0] * Rational::from_integer(2.into())
        }
        OpName::Add1 => {
            require(v[0] <= zero, "x <= 0")?;
            &v[0] + one
        }
        OpName::Sub1 => {
            require(v[0] >= zero, "0 <= x")?;
            &v[0] - one
        }
        OpName::Avg => (&v[0] + &v[1]) / Rational::from_integer(2.into()),
        OpName::Auxr => {
            divisor_ok(&v[0], &v[1])?;
            require(v[0] >= zero, "0 <= x")?;
            &v[0] * Rational::from_integer(2.into()) - &v[1]
        }
        OpName::Auxl => {
            divisor_ok(&v[0], &v[1])?;
            require(v[0] <= zero, "x <= 0")?;
            &v[0] * Rational::from_integer(2.into()) + &v[1]
        }
        OpName::Convert => v[0].clone(),
    })
}

fn run_stream(
    inputs: &Inputs,
    output: Output,
    digits: usize,
    exact: Rational,
    stats: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let start = Instant::now();
    let (text, decoded) = output.render(digits);
    let elapsed = start.elapsed().as_secs_f64();
    writeln!(out, "{text}")?;
    if stats {
        let forced = |i| inputs.counter(i).map_or(0, |c| c.get());
        let report = RunReport {
            digits,
            u_forced: forced(0),
            v_forced: forced(1),
            elapsed,
            decoded,
            exact,
        };
        writeln!(out, "{report}")?;
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Parse(format!("write failed: {e}"));
    match cmd {
        Command::Encode(a) => {
            let r = resolve(&a, 1)?;
            in_unit("x", &r.values[0])?;
            let inputs = Inputs::new(&r.values, r.code);
            let output = match &inputs {
                Inputs::Sd(s) => Output::Sd(s[0].stream.clone()),
                Inputs::Gray(s) => Output::Gray(s[0].stream.clone()),
            };
            run_stream(&inputs, output, r.digits, r.values[0].clone(), a.stats, out).map_err(io)
        }
        Command::Op { name, rest } => {
            let r = resolve(&rest, name.arity())?;
            let exact = check_op(name, &r.values)?;
            let inputs = Inputs::new(&r.values, r.code);
            let output = apply_op(name, &inputs);
            run_stream(&inputs, output, r.digits, exact, rest.stats, out).map_err(io)
        }
        Command::Div(a) => {
            let r = resolve(&a, 2)?;
            let (x, y) = (&r.values[0], &r.values[1]);
            divisor_ok(x, y)?;
            let exact = x / y;
            let inputs = Inputs::new(&r.values, r.code);
            let output = match &inputs {
                Inputs::Sd(s) => Output::Sd(div_sd(&s[0].stream, &s[1].stream)),
                Inputs::Gray(s) => Output::Gray(gray_div(&s[0].stream, &s[1].stream)),
            };
            run_stream(&inputs, output, r.digits, exact, a.stats, out).map_err(io)
        }
        Command::Bench { digits, code } => {
            if digits.is_empty() || digits.contains(&0) {
                return Err(CliError::Precondition("digit counts > 0 failed".into()));
            }
            if !digits.windows(2).all(|w| w[0] < w[1]) {
                return Err(CliError::Precondition(
                    "ascending digit counts failed".into(),
                ));
            }
            write!(out, "{}", run_bench(&digits, code)).map_err(io)
        }
    }
}

/// Moves `--flag [value]` tokens in front of the positional arguments.
///
/// Positionals accept leading hyphens so that `-1/2` is a value; without
/// this, a flag written after them would be taken as one more value.
fn hoist_flags(args: Vec<std::ffi::OsString>) -> Vec<std::ffi::OsString> {
    let head_len = match args.get(1).and_then(|a| a.to_str()) {
        Some("op") => 3,
        Some("encode" | "div") => 2,
        _ => return args,
    };
    if args.len() <= head_len {
        return args;
    }
    let mut head = args[..head_len].to_vec();
    let mut positional = Vec::new();
    let mut rest = args[head_len..].iter();
    while let Some(a) = rest.next() {
        match a.to_str() {
            Some(flag @ ("--digits" | "--code")) => {
                head.push(flag.into());
                head.extend(rest.next().cloned());
            }
            Some(f) if f.starts_with("--") => head.push(a.clone()),
            _ => positional.push(a.clone()),
        }
    }
    head.extend(positional);
    head
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code: 0 on success, 2 on a parse error, 3 when an input
/// precondition fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString>,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(hoist_flags(args)) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "exreal: {e}");
            e.exit_code()
        }
    }
}
