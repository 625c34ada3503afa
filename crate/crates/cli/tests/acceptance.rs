//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_FAILURES` cannot hold as stated; they are still
//! run and printed as FAIL. The target fails if any other criterion fails,
//! or if a known failure starts passing.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use qsym_cli::cmd_hilbert;
use qsym_core::compositions::{catalan_number, count_e_catalan, enumerate_e_catalan, weak_compositions};
use qsym_core::verify::{self, Bounds, Suite};
use qsym_core::Ideal;

/// Exact arithmetic everywhere: no numeric tolerance applies.
const TOLERANCE: u64 = 0;

/// The leading-monomial relation between consecutive S-polynomials fails
/// whenever the middle block ends in a zero; the polynomial identities hold.
const KNOWN_FAILURES: &[u32] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Lattice paths (0,0) → (n+e, n) with unit east/north steps staying on or
/// above y = x − e, counted by brute force over all step sequences.
fn brute_force_paths(n: u32, e: u32) -> u64 {
    let steps = 2 * n + e;
    let mut count = 0;
    for mask in 0u64..(1 << steps) {
        if mask.count_ones() != n {
            continue;
        }
        let (mut x, mut y) = (0i64, 0i64);
        let mut ok = true;
        for i in 0..steps {
            if mask >> i & 1 == 1 {
                y += 1;
            } else {
                x += 1;
            }
            if y < x - e as i64 {
                ok = false;
                break;
            }
        }
        count += ok as u64;
    }
    count
}

fn by_degree_oracle(n: usize, e: u32, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for a in enumerate_e_catalan(n, e) {
        out[a.degree() as usize] += 1;
    }
    out
}

fn c1(calc: &Ideal) -> Outcome {
    let catalan = [1u64, 2, 5, 14, 42];
    let mut ok = true;
    let mut totals = Vec::new();
    let mut equal = Vec::new();
    for n in 1..=5usize {
        let r = cmd_hilbert(calc, n, 0, None).expect("n ≥ 1");
        let total = r.results["total"].as_u64().unwrap();
        let bound = r.results["catalan_bound"].as_u64().unwrap();
        ok &= bound == catalan[n - 1] && BigUint::from(bound) == count_e_catalan(n, 0);
        ok &= total <= bound + TOLERANCE;
        totals.push(total);
        equal.push(total == bound);
    }
    outcome(ok, format!("totals {totals:?} bounds {catalan:?} equality {equal:?}"))
}

fn c2(calc: &Ideal) -> Outcome {
    let h3 = calc.hilbert_function(3, 0, 3);
    let h4 = calc.hilbert_function(4, 0, 4);
    let oracle = by_degree_oracle(4, 0, 5);
    let ok = h3.dims == [1, 2, 2, 0]
        && oracle == [1, 3, 5, 5, 0]
        && h4.dims.iter().zip(&oracle).all(|(a, b)| a <= b);
    outcome(
        ok,
        format!(
            "n=3 {:?}; n=4 {:?} vs paths {:?}, equality {}",
            h3.dims,
            h4.dims,
            oracle,
            h4.dims == oracle
        ),
    )
}

fn c3() -> Outcome {
    let known = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
    let mut ok = true;
    for n in 0..=8u32 {
        ok &= catalan_number(n as u64) == BigUint::from(known[n as usize]);
        ok &= count_e_catalan(n as usize, 0) == BigUint::from(known[n as usize]);
        for e in 0..=3u32 {
            let listed = enumerate_e_catalan(n as usize, e).len() as u64;
            let brute = brute_force_paths(n, e);
            ok &= count_e_catalan(n as usize, e) == BigUint::from(brute) && listed == brute;
        }
    }
    outcome(ok, "n ≤ 8, e ≤ 3 against brute-force paths; e = 0 against Catalan numbers")
}

fn suite_line(r: &verify::VerifyReport) -> String {
    format!("{} {}/{} failed", r.suite, r.failures.len(), r.instances)
}

fn c4(calc: &Ideal) -> Outcome {
    let b = Bounds { max_len: 5, max_deg: 6, window: Some(8), ..Bounds::default() };
    let fam = calc.family();
    // the exact statement: every index once, at window 8
    let mut exact = 0usize;
    let mut failures = 0usize;
    for len in 0..=5 {
        for a in weak_compositions(len, 6) {
            if a.parts().last() == Some(&0) {
                continue;
            }
            exact += 1;
            failures += !fam.check_lm(&a, 8).unwrap() as usize;
        }
    }
    let all_windows = verify::run(calc, Suite::Lm, &b);
    outcome(
        failures == 0 && all_windows.passed(),
        format!("{failures}/{exact} failed at n=8; every window ≤ 8: {}", suite_line(&all_windows)),
    )
}

fn c5(calc: &Ideal) -> Outcome {
    let frel = verify::run(
        calc,
        Suite::Frel,
        &Bounds { max_deg: 6, window: Some(7), ..Bounds::default() },
    );
    let shift = verify::run(
        calc,
        Suite::Shift,
        &Bounds { max_len: 4, max_deg: 5, ..Bounds::default() },
    );
    outcome(frel.passed() && shift.passed(), format!("{}; {} (with remainders)", suite_line(&frel), suite_line(&shift)))
}

fn c6(calc: &Ideal) -> Outcome {
    let r = verify::run(calc, Suite::Syzygy, &Bounds { max_len: 4, max_deg: 5, ..Bounds::default() });
    let identity = r.failures.iter().filter(|f| !f.ends_with("[leading monomial]")).count();
    let leading = r.failures.len() - identity;
    let first = r.failures.first().cloned().unwrap_or_default();
    outcome(
        r.passed(),
        format!(
            "{} instances: identities {identity} failed, leading-monomial relation {leading} failed (first: {first})",
            r.instances
        ),
    )
}

fn c7(calc: &Ideal) -> Outcome {
    let r = verify::run(
        calc,
        Suite::Membership,
        &Bounds { max_len: 4, max_deg: 5, window: Some(5), max_level: 2, ..Bounds::default() },
    );
    outcome(r.passed(), suite_line(&r))
}

fn c8(calc: &Ideal) -> Outcome {
    let r = verify::run(
        calc,
        Suite::ReduceEquiv,
        &Bounds { max_len: 4, max_deg: 5, window: Some(4), max_level: 2, samples: 1000, seed: 1 },
    );
    outcome(r.passed() && r.instances == 1000, suite_line(&r))
}

fn c9(calc: &Ideal) -> Outcome {
    let r = verify::run(calc, Suite::Pairing, &Bounds { window: Some(4), max_level: 1, ..Bounds::default() });
    outcome(r.passed(), suite_line(&r))
}

fn c10(calc: &Ideal) -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    // degrees n ≤ d < n+e that are nonzero; the range n ≤ d only vanishes for e = 0
    let mut below = 0;
    for n in 1..=5usize {
        for e in 0..=2u32 {
            let top = n as u32 + e + 1;
            let h = calc.hilbert_function(n, e, top);
            below += (n as u32..n as u32 + e).filter(|&d| h.dims[d as usize] > 0).count();
            for d in (n as u32 + e)..=top {
                ok &= h.dims[d as usize] == 0;
                checked += 1;
            }
            // the last possibly nonzero degree is n − 1 + e
            ok &= h.dims[(n as u32 + e - 1) as usize] > 0;
        }
    }
    outcome(
        ok,
        format!(
            "{checked} degrees n+e ≤ d ≤ n+e+1 vanish, degree n−1+e nonzero (n ≤ 5, e ≤ 2); \
             {below} nonzero degrees in n ≤ d < n+e"
        ),
    )
}

fn main() {
    let calc = Ideal::new();
    type Check<'a> = (u32, &'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let secs = Duration::from_secs;
    let checks: Vec<Check> = vec![
        (1, "Catalan bound n ≤ 5", secs(60), Box::new(|| c1(&calc))),
        (2, "graded refinement", secs(60), Box::new(|| c2(&calc))),
        (3, "level-e path counts", secs(5), Box::new(c3)),
        (4, "leading-monomial law", secs(120), Box::new(|| c4(&calc))),
        (5, "recurrence identities", secs(120), Box::new(|| c5(&calc))),
        (6, "syzygy suite", secs(120), Box::new(|| c6(&calc))),
        (7, "membership and generator equivalence", secs(120), Box::new(|| c7(&calc))),
        (8, "reduction coherence", secs(120), Box::new(|| c8(&calc))),
        (9, "pairing consistency", secs(60), Box::new(|| c9(&calc))),
        (10, "vanishing above the top degree", secs(60), Box::new(|| c10(&calc))),
    ];
    let mut unexpected = Vec::new();
    for (id, name, limit, check) in &checks {
        let start = Instant::now();
        let mut o = check();
        let elapsed = start.elapsed();
        if elapsed > *limit {
            o.pass = false;
            o.detail.push_str(&format!("; over the {}s limit", limit.as_secs()));
        }
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2} {name}: {} ({:.2}s)", o.detail, elapsed.as_secs_f64());
        if o.pass == KNOWN_FAILURES.contains(id) {
            unexpected.push(*id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
