//! Acceptance suite. Runs every criterion in sequence (so the timing
//! criterion is not disturbed by other work) and prints one line each.

#![allow(clippy::int_plus_one)]

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{div_pair, eps, rational_in, rng, unit};
use exreal::bench::{growth_exponent, run_bench, with_big_stack, Code};
use exreal::rational::{pow2, within};
use exreal::stream::{unfold_sd, Step};
use exreal::*;
use num_traits::Signed;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

// 1. canonical encoder and partial-sum decoder
fn encoder_decoder() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    for _ in 0..1000 {
        let a = unit(&mut r);
        let u = encode_sd(&a).map_err(|e| e.to_string())?;
        for n in 1..=64 {
            let d = decode_sd(&u, n);
            check(within(&d, &a, &eps(n)), || {
                format!("a={a} n={n} decoded {d}")
            })?;
        }
    }
    let t = within_time(start, Duration::from_secs(10), "1000 encodings")?;
    Ok(format!("1000 rationals, n=1..64, {t:.2?}"))
}

type SdUnary = fn(&SdStream) -> SdStream;
type SdBinary = fn(&SdStream, &SdStream) -> SdStream;
type GrayUnary = fn(&GrayG) -> GrayG;
type GrayBinary = fn(&GrayG, &GrayG) -> GrayG;
type UnaryCase = (
    &'static str,
    SdUnary,
    GrayUnary,
    Rational,
    Rational,
    fn(&Rational) -> Rational,
);
type Criterion = (&'static str, fn() -> Outcome);

fn gray_add1(g: &GrayG) -> GrayG {
    sh_g(g, ProperDigit::Pos)
}

fn gray_sub1(g: &GrayG) -> GrayG {
    sh_g(&gray_minus(g), ProperDigit::Neg)
}

// 2. every operation against the exact oracle
fn operation_oracle() -> Outcome {
    const N: usize = 100;
    let start = Instant::now();
    let mut r = rng(2);
    let e = eps(N);
    let one = rat(1, 1);
    let zero = rat(0, 1);

    let unary: [UnaryCase; 5] = [
        (
            "negate",
            negate,
            gray_minus,
            -one.clone(),
            one.clone(),
            |a| -a,
        ),
        ("half", half, gray_half, -one.clone(), one.clone(), |a| {
            a / rat(2, 1)
        }),
        ("add1", add1, gray_add1, -one.clone(), zero.clone(), |a| {
            a + rat(1, 1)
        }),
        ("sub1", sub1, gray_sub1, zero.clone(), one.clone(), |a| {
            a - rat(1, 1)
        }),
        ("double", double, gray_double, rat(-1, 2), rat(1, 2), |a| {
            a * rat(2, 1)
        }),
    ];
    for (name, f, g, lo, hi, sem) in unary {
        for _ in 0..200 {
            let a = rational_in(&mut r, &lo, &hi);
            let want = sem(&a);
            let u = encode_sd(&a).unwrap();
            let got = decode_sd(&f(&u), N);
            check(within(&got, &want, &e), || {
                format!("{name}({a}) gave {got}")
            })?;
            let got = decode_gray(&g(&sds_to_gray(&u)), N);
            check(within(&got, &want, &e), || {
                format!("gray {name}({a}) gave {got}")
            })?;
        }
    }

    let binary: [(&str, SdBinary, GrayBinary); 3] = [
        ("average", average, gray_average),
        ("auxR", aux_r, gray_aux_r),
        ("auxL", aux_l, gray_aux_l),
    ];
    for (name, f, g) in binary {
        for _ in 0..200 {
            let (x, y, want) = match name {
                "average" => {
                    let (x, y) = (unit(&mut r), unit(&mut r));
                    let w = (&x + &y) / rat(2, 1);
                    (x, y, w)
                }
                "auxR" => {
                    let y = rational_in(&mut r, &rat(1, 4), &one);
                    let x = rational_in(&mut r, &zero, &y);
                    let w = &x * rat(2, 1) - &y;
                    (x, y, w)
                }
                _ => {
                    let y = rational_in(&mut r, &rat(1, 4), &one);
                    let x = rational_in(&mut r, &-y.clone(), &zero);
                    let w = &x * rat(2, 1) + &y;
                    (x, y, w)
                }
            };
            let (u, v) = (encode_sd(&x).unwrap(), encode_sd(&y).unwrap());
            let got = decode_sd(&f(&u, &v), N);
            check(within(&got, &want, &e), || {
                format!("{name}({x}, {y}) gave {got}")
            })?;
            let got = decode_gray(&g(&sds_to_gray(&u), &sds_to_gray(&v)), N);
            check(within(&got, &want, &e), || {
                format!("gray {name}({x}, {y}) gave {got}")
            })?;
        }
    }
    let t = within_time(start, Duration::from_secs(60), "operation suite")?;
    Ok(format!("8 ops x 2 codings x 200 inputs at n=100, {t:.2?}"))
}

// 3. division, the fixed case and random pairs
fn division() -> Outcome {
    let (x, y) = (rat(1001, 3001), rat(10001, 20001));
    let exact = &x / &y;
    let (u, v) = (encode_sd(&x).unwrap(), encode_sd(&y).unwrap());
    let start = Instant::now();
    let q = div_sd(&u, &v);
    take_prefix(&q, 19);
    let t_sd = start.elapsed();
    let got = decode_sd(&q, 19);
    check(within(&got, &exact, &eps(19)), || {
        format!("sd 19 digits gave {got}")
    })?;
    let start = Instant::now();
    let g = gray_div(&sds_to_gray(&u), &sds_to_gray(&v));
    g.take_tokens(19);
    let t_gray = start.elapsed();
    let got = decode_gray(&g, 19);
    check(within(&got, &exact, &eps(19)), || {
        format!("gray 19 symbols gave {got}")
    })?;

    const N: usize = 200;
    let mut r = rng(3);
    for _ in 0..200 {
        let (x, y) = div_pair(&mut r);
        let exact = &x / &y;
        let (u, v) = (encode_sd(&x).unwrap(), encode_sd(&y).unwrap());
        let got = decode_sd(&div_sd(&u, &v), N);
        check(within(&got, &exact, &eps(N)), || {
            format!("sd {x}/{y} gave {got}")
        })?;
        let got = decode_gray(&gray_div(&sds_to_gray(&u), &sds_to_gray(&v)), N);
        check(within(&got, &exact, &eps(N)), || {
            format!("gray {x}/{y} gave {got}")
        })?;
    }
    Ok(format!(
        "19-symbol case in {t_sd:.2?} (sd) / {t_gray:.2?} (gray); 200 random pairs at n=200"
    ))
}

fn counted(x: &Rational) -> (SdStream, ForceCounter) {
    let (c, n) = with_counter(&encode_sd(x).unwrap());
    (c.stream, n)
}

// 4. instrumented look-ahead
fn look_ahead() -> Outcome {
    let mut r = rng(4);
    let mut worst = [0u64; 2];
    for _ in 0..100 {
        let (x, y) = div_pair(&mut r);
        let a = unit(&mut r);
        let b = unit(&mut r);

        let (u, cu) = counted(&a);
        let (v, cv) = counted(&b);
        let avg = average(&u, &v);
        let (nu, cnu) = counted(&a);
        let neg = negate(&nu);
        let (hu, chu) = counted(&a);
        let hf = half(&hu);
        for n in 1..=50u64 {
            take_prefix(&avg, n as usize);
            check(cu.get() <= n + 1 && cv.get() <= n + 1, || {
                format!("average({a}, {b}) n={n}: {} / {}", cu.get(), cv.get())
            })?;
            take_prefix(&neg, n as usize);
            check(cnu.get() <= n, || format!("negate n={n}: {}", cnu.get()))?;
            take_prefix(&hf, n as usize);
            check(chu.get() <= n - 1, || format!("half n={n}: {}", chu.get()))?;
        }

        let xs = x.abs();
        for (name, xx) in [("auxR", xs.clone()), ("auxL", -xs.clone())] {
            let (u, cu) = counted(&xx);
            let (v, cv) = counted(&y);
            let w = if name == "auxR" {
                aux_r(&u, &v)
            } else {
                aux_l(&u, &v)
            };
            for n in 1..=50u64 {
                take_prefix(&w, n as usize);
                check(cu.get() <= n + 3 && cv.get() <= n + 2, || {
                    format!("{name}({xx}, {y}) n={n}: {} / {}", cu.get(), cv.get())
                })?;
                worst[0] = worst[0].max(cu.get() - n);
                worst[1] = worst[1].max(cv.get() - n);
            }
        }

        let (u, cu) = counted(&x);
        let (v, cv) = counted(&y);
        let q = div_sd(&u, &v);
        for n in 1..=50u64 {
            take_prefix(&q, n as usize);
            check(cu.get() <= 3 * n && cv.get() <= 3 * n - 1, || {
                format!("div({x}, {y}) n={n}: {} / {}", cu.get(), cv.get())
            })?;
        }
    }
    Ok(format!(
        "100 inputs, n=1..50; max excess over n for aux: u+{} v+{}",
        worst[0], worst[1]
    ))
}

// 5. Gray division agrees with signed-digit division
fn cross_coding() -> Outcome {
    const N: usize = 100;
    let mut r = rng(5);
    for _ in 0..200 {
        let (x, y) = div_pair(&mut r);
        let (u, v) = (encode_sd(&x).unwrap(), encode_sd(&y).unwrap());
        let via_gray = gray_to_sds(&gray_div(&sds_to_gray(&u), &sds_to_gray(&v)));
        let a = decode_sd(&via_gray, N);
        let b = decode_sd(&div_sd(&u, &v), N);
        check(within(&a, &b, &pow2(1 - N as i64)), || {
            format!("{x}/{y}: gray route {a}, sd route {b}")
        })?;
    }
    Ok("200 pairs at n=100 within 2^(1-n)".into())
}

// 6. quadratic growth of division time
fn runtime_scaling() -> Outcome {
    let counts = [100, 500, 2000];
    // best of three runs per count, to damp scheduler noise
    let mut rows: Vec<(usize, f64)> = counts.iter().map(|&n| (n, f64::INFINITY)).collect();
    for _ in 0..3 {
        let report = run_bench(&counts, Code::Sd);
        for (row, (_, t)) in rows.iter_mut().zip(report.rows) {
            row.1 = row.1.min(t);
        }
    }
    let e = growth_exponent(&rows).ok_or("no exponent")?;
    let table = rows
        .iter()
        .map(|(n, t)| format!("{n}:{t:.4}s"))
        .collect::<Vec<_>>()
        .join(" ");
    check((1.5..=2.5).contains(&e), || {
        format!("exponent {e:.3} ({table})")
    })?;
    Ok(format!("exponent {e:.3} ({table})"))
}

// 7. involutions, co-conversions, memoization
fn structural() -> Outcome {
    let mut r = rng(7);
    for _ in 0..50 {
        let a = unit(&mut r);
        let u = encode_sd(&a).unwrap();
        check(
            take_prefix(&negate(&negate(&u)), 200) == take_prefix(&u, 200),
            || format!("negate involution at {a}"),
        )?;
        let g = sds_to_gray(&u);
        check(
            gray_minus(&gray_minus(&g)).take_tokens(200) == g.take_tokens(200),
            || format!("gray minus involution at {a}"),
        )?;
        check(
            decode_gray(&to_co_g(&to_co_h(&g)), 50) == decode_gray(&g, 50),
            || format!("toCoG(toCoH) at {a}"),
        )?;
        let h = to_co_h(&g);
        check(
            to_co_h(&to_co_g(&h)).take_tokens(50) == h.take_tokens(50),
            || format!("toCoH(toCoG) at {a}"),
        )?;
    }

    let calls = Arc::new(AtomicUsize::new(0));
    let c = calls.clone();
    let s = unfold_sd(0u32, move |k| {
        c.fetch_add(1, Ordering::SeqCst);
        (SignedDigit::ALL[(k % 3) as usize], Step::Next(k + 1))
    });
    let (w, cnt) = with_counter(&s);
    let consumer = double(&average(&w.stream, &negate(&w.stream)));
    take_prefix(&consumer, 40);
    take_prefix(&consumer, 40);
    check(calls.load(Ordering::SeqCst) as u64 == cnt.get(), || {
        format!(
            "{} evaluations for {} cells",
            calls.load(Ordering::SeqCst),
            cnt.get()
        )
    })?;
    std::thread::scope(|sc| {
        for _ in 0..4 {
            sc.spawn(|| take_prefix(&w.stream, 300));
        }
    });
    check(calls.load(Ordering::SeqCst) == 300, || {
        format!(
            "{} evaluations after concurrent forcing of 300 cells",
            calls.load(Ordering::SeqCst)
        )
    })?;
    Ok("involutions to 200, co-conversions to 50, one evaluation per cell".into())
}

// 8. concrete reals
fn creal_layer() -> Outcome {
    let mut r = rng(8);
    let mut reals: Vec<(String, RealQ)> = Vec::new();
    for _ in 0..4 {
        let a = unit(&mut r);
        let b = unit(&mut r);
        let x = RealQ::from_sd_stream(&encode_sd(&a).unwrap());
        let y = RealQ::from_sd_stream(&encode_sd(&b).unwrap());
        reals.push((format!("stream({a})"), x.clone()));
        reals.push((format!("const({a})"), RealQ::from_value(a.clone())));
        reals.push((format!("{a}+{b}"), x.add(&y)));
        reals.push((format!("{a}-{b}"), x.sub(&y)));
        reals.push((format!("{a}*{b}"), x.mul(&y)));
        reals.push((format!("-|{a}|"), x.abs().neg()));
    }
    use rand::Rng;
    for (name, x) in &reals {
        for _ in 0..100 {
            let p: u32 = r.gen_range(1..=24);
            let k = x.modulus(p);
            let n = k + r.gen_range(0..40);
            let m = k + r.gen_range(0..40);
            check(x.cauchy_holds(n, m, p), || {
                format!("{name}: n={n} m={m} p={p}")
            })?;
        }
    }

    let mut decided = 0;
    for _ in 0..300 {
        let (a, b) = (unit(&mut r), unit(&mut r));
        let p: u32 = r.gen_range(1..=20);
        let x = RealQ::from_sd_stream(&encode_sd(&a).unwrap());
        let y = RealQ::from_sd_stream(&encode_sd(&b).unwrap());
        if (&a - &b).abs() > pow2(1 - p as i64) {
            decided += 1;
            check(x.leq_up_to(&y, p) == (a <= b), || {
                format!("leq({a}, {b}, {p})")
            })?;
        }
    }
    Ok(format!(
        "{} reals x 100 triples; leq matched on {decided} separated pairs",
        reals.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("encoder/decoder soundness", encoder_decoder),
        ("operation oracle suite", operation_oracle),
        ("division correctness", division),
        ("look-ahead bounds", look_ahead),
        ("cross-coding consistency", cross_coding),
        ("runtime scaling", runtime_scaling),
        ("structural properties", structural),
        ("CReal layer", creal_layer),
    ];
    let results = with_big_stack(move || {
        criteria
            .iter()
            .enumerate()
            .map(|(i, (name, f))| {
                let res = catch_unwind(AssertUnwindSafe(f))
                    .unwrap_or_else(|_| Err("panicked".to_string()));
                let line = match &res {
                    Ok(d) => format!("criterion {} [{name}]: PASS - {d}", i + 1),
                    Err(d) => format!("criterion {} [{name}]: FAIL - {d}", i + 1),
                };
                // straight to the stream, so the line shows even when the
                // harness captures test output
                let mut out = std::io::stdout().lock();
                let _ = writeln!(out, "{line}");
                let _ = out.flush();
                res.is_ok()
            })
            .collect::<Vec<bool>>()
    });
    let failed: Vec<usize> = (1..=8).filter(|i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
