//! Exhaustive and randomized sweeps over the identities of the other
//! modules. Instances are enumerated up front in a fixed order, checked in
//! parallel, and reported in enumeration order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::compositions::{compositions_up_to, weak_compositions, Composition, GenComposition};
use crate::error::{Error, Result};
use crate::gbverify::{
    check_lattice, check_syzygy_base, check_telescoping, check_telescoping_chain, reduce_by_gbasis,
    syzygy_recursion_outcome,
};
use crate::idealcalc::{supported_on_catalan, IdealCalc};
use crate::polyring::{Monomial, Polynomial};
use crate::qsym::{check_f_recurrence, fundamental_qsym, fundamental_qsym_by_chains};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Frel,
    Lm,
    Shift,
    Syzygy,
    Lattice,
    Filtration,
    Pairing,
    ReduceEquiv,
    Membership,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Frel,
        Suite::Lm,
        Suite::Shift,
        Suite::Syzygy,
        Suite::Lattice,
        Suite::Filtration,
        Suite::Pairing,
        Suite::ReduceEquiv,
        Suite::Membership,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Frel => "frel",
            Suite::Lm => "lm",
            Suite::Shift => "shift",
            Suite::Syzygy => "syzygy",
            Suite::Lattice => "lattice",
            Suite::Filtration => "filtration",
            Suite::Pairing => "pairing",
            Suite::ReduceEquiv => "reduce-equiv",
            Suite::Membership => "membership",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds. `window` of `None` lets each suite pick the smallest
/// window that keeps leading monomials faithful.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_len: usize,
    pub max_deg: u32,
    pub window: Option<usize>,
    pub max_level: u32,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_len: 4, max_deg: 5, window: None, max_level: 2, samples: 1000, seed: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every instance in parallel; failures keep the instance order.
fn sweep<I, F>(suite: Suite, instances: Vec<I>, check: F) -> VerifyReport
where
    I: fmt::Display + Sync,
    F: Fn(&I) -> Result<std::result::Result<(), String>> + Sync,
{
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|inst| match check(inst) {
            Ok(Ok(())) => None,
            Ok(Err(what)) if what.is_empty() => Some(inst.to_string()),
            Ok(Err(what)) => Some(format!("{inst} [{what}]")),
            Err(e) => Some(format!("{inst} [error: {e}]")),
        })
        .collect();
    VerifyReport { suite: suite.name().into(), instances: instances.len(), failures }
}

fn verdict(ok: bool) -> Result<std::result::Result<(), String>> {
    Ok(if ok { Ok(()) } else { Err(String::new()) })
}

/// Weak compositions of every length `0..=max_len`, degree ≤ `max_deg`.
fn weak_up_to(max_len: usize, max_deg: u32) -> Vec<GenComposition> {
    (0..=max_len).flat_map(|l| weak_compositions(l, max_deg)).collect()
}

/// Distinct indices (up to trailing zeros) of length ≤ `max_len`.
fn indices(max_len: usize, max_deg: u32) -> Vec<GenComposition> {
    weak_up_to(max_len, max_deg).into_iter().filter(|a| a.parts().last() != Some(&0)).collect()
}

pub fn run<T: Scalar>(calc: &IdealCalc<T>, suite: Suite, b: &Bounds) -> VerifyReport {
    match suite {
        Suite::Frel => frel(calc, b),
        Suite::Lm => lm(calc, b),
        Suite::Shift => shift(calc, b),
        Suite::Syzygy => syzygy(calc, b),
        Suite::Lattice => lattice(b),
        Suite::Filtration => filtration(calc, b),
        Suite::Pairing => pairing(calc, b),
        Suite::ReduceEquiv => reduce_equiv(calc, b),
        Suite::Membership => membership(calc, b),
    }
}

pub fn run_all<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> Vec<VerifyReport> {
    Suite::ALL.iter().map(|&s| run(calc, s, b)).collect()
}

struct Windowed<A>(A, usize);

impl<A: fmt::Display> fmt::Display for Windowed<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.0, self.1)
    }
}

/// F recurrences and agreement of the two F constructions.
fn frel<T: Scalar>(_calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let n = b.window.unwrap_or(b.max_deg as usize + 1);
    let inst: Vec<_> = compositions_up_to(b.max_deg, usize::MAX)
        .into_iter()
        .filter(|a| !a.is_empty())
        .map(|a| Windowed(a, n))
        .collect();
    sweep(Suite::Frel, inst, |Windowed(a, n)| {
        if !check_f_recurrence::<T>(a, *n)? {
            return Ok(Err("recurrence".into()));
        }
        let chains: Polynomial<T> = fundamental_qsym_by_chains(a, *n);
        verdict(chains == fundamental_qsym(a, *n))
    })
}

/// `LM(G_α̃) = X^α̃` with coefficient 1, in every window from `ℓ(α̃)` up to
/// the bound.
fn lm<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let n = b.window.unwrap_or(b.max_len).max(b.max_len);
    let inst: Vec<_> = indices(b.max_len, b.max_deg)
        .into_iter()
        .flat_map(|a| (a.len().max(1)..=n).map(move |w| Windowed(a.clone(), w)))
        .collect();
    sweep(Suite::Lm, inst, |Windowed(a, n)| verdict(calc.family().check_lm(a, *n)?))
}

/// The shift relation and the `x1`-free remainders.
fn shift<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let fam = calc.family();
    let n = b.window.unwrap_or(b.max_len).max(b.max_len);
    let inst: Vec<_> = indices(b.max_len, b.max_deg).into_iter().map(|a| Windowed(a, n)).collect();
    sweep(Suite::Shift, inst, |Windowed(a, n)| {
        if a.len() < *n && !fam.check_shift_relation(a, *n)? {
            return Ok(Err("shift".into()));
        }
        if a.part(0) == 0 {
            return Ok(Ok(()));
        }
        let r = fam.m_remainder(a, *n)?;
        if r.max_exponent(1) != 0 {
            return Ok(Err("remainder involves x1".into()));
        }
        if let Some(nu) = a.to_composition() {
            let want = fam.fundamental(&nu, n - 1).shift_variables();
            if r != want {
                return Ok(Err("remainder differs from shifted F".into()));
            }
        }
        Ok(Ok(()))
    })
}

enum SyzygyInstance {
    Base { gamma: GenComposition, a: u32, nu: Composition },
    Recursion { gamma: GenComposition, a: u32, pi: GenComposition, b: u32, mu: Composition },
}

impl SyzygyInstance {
    /// Length of the larger S-pair index `γ̃ a ν` or `γ̃ a π̃ 0 b μ`.
    fn pair_len(&self) -> usize {
        match self {
            SyzygyInstance::Base { gamma, nu, .. } => gamma.len() + 1 + nu.len(),
            SyzygyInstance::Recursion { gamma, pi, mu, .. } => gamma.len() + pi.len() + 3 + mu.len(),
        }
    }

    fn window(&self) -> usize {
        // one spare variable beyond the longest index involved
        match self {
            SyzygyInstance::Base { .. } => self.pair_len() + 2,
            SyzygyInstance::Recursion { .. } => self.pair_len() + 1,
        }
    }
}

impl fmt::Display for SyzygyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &GenComposition| if g.is_empty() { "-".to_string() } else { g.to_string() };
        match self {
            SyzygyInstance::Base { gamma, a, nu } => write!(
                f,
                "base gamma={} a={a} nu={} n={}",
                show(gamma),
                show(&nu.to_gen()),
                self.window()
            ),
            SyzygyInstance::Recursion { gamma, a, pi, b, mu } => write!(
                f,
                "recursion gamma={} a={a} pi={} b={b} mu={} n={}",
                show(gamma),
                show(pi),
                show(&mu.to_gen()),
                self.window()
            ),
        }
    }
}

/// Syzygy instances whose S-pair index has length ≤ `max_len` and degree
/// ≤ `max_deg`.
fn syzygy_instances(max_len: usize, max_deg: u32) -> Vec<SyzygyInstance> {
    let mut out = Vec::new();
    let prefixes = weak_up_to(max_len, max_deg);
    let tails = compositions_up_to(max_deg, max_len);
    for gamma in &prefixes {
        for a in 1..=max_deg.saturating_sub(gamma.degree()) {
            for nu in &tails {
                let inst = SyzygyInstance::Base { gamma: gamma.clone(), a, nu: nu.clone() };
                if gamma.degree() + a + nu.degree() <= max_deg && inst.pair_len() <= max_len {
                    out.push(inst);
                }
            }
        }
    }
    for gamma in &prefixes {
        for a in 1..=max_deg {
            for pi in &prefixes {
                for b in 1..=max_deg {
                    for mu in &tails {
                        let deg = gamma.degree() + a + pi.degree() + b + mu.degree();
                        let inst = SyzygyInstance::Recursion {
                            gamma: gamma.clone(),
                            a,
                            pi: pi.clone(),
                            b,
                            mu: mu.clone(),
                        };
                        if deg <= max_deg && inst.pair_len() <= max_len {
                            out.push(inst);
                        }
                    }
                }
            }
        }
    }
    out
}

fn syzygy<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let fam = calc.family();
    sweep(Suite::Syzygy, syzygy_instances(b.max_len, b.max_deg), |inst| {
        let n = inst.window();
        match inst {
            SyzygyInstance::Base { gamma, a, nu } => verdict(check_syzygy_base(fam, gamma, *a, nu, n)?),
            SyzygyInstance::Recursion { gamma, a, pi, b, mu } => {
                let o = syzygy_recursion_outcome(fam, gamma, *a, pi, *b, mu, n)?;
                Ok(match (o.identity, o.leading) {
                    (true, true) => Ok(()),
                    (false, _) => Err("identity".into()),
                    (true, false) => Err("leading monomial".into()),
                })
            }
        }
    })
}

struct LatticeInstance(GenComposition, GenComposition, u32);

impl fmt::Display for LatticeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} rho={} e={}", self.0, self.1, self.2)
    }
}

fn lattice(b: &Bounds) -> VerifyReport {
    let all = weak_compositions(b.max_len, b.max_deg);
    let mut inst = Vec::new();
    for e in 0..=b.max_level {
        for alpha in &all {
            for rho in &all {
                inst.push(LatticeInstance(alpha.clone(), rho.clone(), e));
            }
        }
    }
    sweep(Suite::Lattice, inst, |LatticeInstance(a, r, e)| verdict(check_lattice(a, r, *e)))
}

struct SliceInstance {
    n: usize,
    e: u32,
    d: u32,
}

impl fmt::Display for SliceInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} e={} d={}", self.n, self.e, self.d)
    }
}

fn slice_instances(max_n: usize, max_level: u32, d_of: impl Fn(usize, u32) -> u32) -> Vec<SliceInstance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for e in 0..=max_level {
            for d in 0..=d_of(n, e) {
                out.push(SliceInstance { n, e, d });
            }
        }
    }
    out
}

/// `J^(e+1) ⊆ J^(e)` slice by slice, plus the telescoping identities for
/// S-polynomials along componentwise chains.
fn filtration<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let max_n = b.window.unwrap_or(b.max_len);
    let inst = slice_instances(max_n, b.max_level.saturating_sub(1), |_, _| b.max_deg);
    let mut report = sweep(Suite::Filtration, inst, |s| {
        let upper = calc.level_generators(s.e + 1, s.d, s.n);
        let lower = calc.level_generators(s.e, s.d, s.n);
        if !upper.iter().all(|(a, _)| lower.iter().any(|(c, _)| c == a)) {
            return Ok(Err("generators".into()));
        }
        verdict(calc.ideal_slice(s.n, s.e, s.d).contains_slice(&calc.ideal_slice(s.n, s.e + 1, s.d))?)
    });
    let tele = telescoping(calc, b);
    report.instances += tele.instances;
    report.failures.extend(tele.failures);
    report
}

enum TelescopingInstance {
    /// Any pair, split at the index of their lcm.
    Pair(GenComposition, GenComposition),
    /// A componentwise chain `α̃ ≤ ρ̃ ≤ π̃` with `d(π̃) − d(α̃) = 2`.
    Chain(GenComposition, GenComposition, GenComposition),
}

impl fmt::Display for TelescopingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TelescopingInstance::Pair(a, p) => write!(f, "telescoping alpha={a} pi={p}"),
            TelescopingInstance::Chain(a, r, p) => write!(f, "telescoping alpha={a} rho={r} pi={p}"),
        }
    }
}

fn telescoping<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let len = b.max_len.saturating_sub(1).max(1);
    let all: Vec<GenComposition> =
        weak_compositions(len, b.max_deg.min(4)).into_iter().filter(|a| a.degree() > 0).collect();
    let mut inst = Vec::new();
    for alpha in &all {
        for pi in &all {
            if alpha != pi {
                inst.push(TelescopingInstance::Pair(alpha.clone(), pi.clone()));
            }
            if pi.degree() != alpha.degree() + 2 || !alpha.le_componentwise(pi) {
                continue;
            }
            for rho in &all {
                if alpha.le_componentwise(rho) && rho.le_componentwise(pi) {
                    inst.push(TelescopingInstance::Chain(alpha.clone(), rho.clone(), pi.clone()));
                }
            }
        }
    }
    let n = len + 1;
    let fam = calc.family();
    sweep(Suite::Filtration, inst, |t| match t {
        TelescopingInstance::Pair(a, p) => verdict(check_telescoping(fam, a, p, n)?),
        TelescopingInstance::Chain(a, r, p) => verdict(check_telescoping_chain(fam, a, r, p, n)?),
    })
}

/// Super-harmonic dimensions against quotient dimensions.
fn pairing<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let max_n = b.window.unwrap_or(b.max_len);
    let inst = slice_instances(max_n, b.max_level.min(1), |n, e| n as u32 + e);
    sweep(Suite::Pairing, inst, |s| {
        let quotient = calc.ideal_slice(s.n, s.e, s.d).quotient_dim();
        let basis = calc.superharmonic_basis(s.n, s.e, s.d);
        if basis.len() != quotient {
            return Ok(Err(format!("dim {} vs quotient {quotient}", basis.len())));
        }
        let rows = calc.ideal_slice(s.n, s.e, s.d).rows();
        for h in &basis {
            for r in &rows {
                if !crate::idealcalc::apolar_pair(h, r)?.is_zero() {
                    return Ok(Err("not orthogonal".into()));
                }
            }
        }
        Ok(Ok(()))
    })
}

/// Every `G_α̃` with `α̃` reaching level `e` lies in the ideal, and the `G`
/// products span the same slices as the `F` products.
fn membership<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let max_n = b.window.unwrap_or(b.max_len + 1);
    let mut inst = Vec::new();
    for n in 1..=max_n {
        for e in 0..=b.max_level {
            for a in indices(b.max_len.min(n), b.max_deg) {
                if a.reaches_level(e) {
                    inst.push(MemberInstance::G(a, n, e));
                }
            }
        }
    }
    for s in slice_instances(max_n, b.max_level, |_, _| b.max_deg) {
        inst.push(MemberInstance::Span(s));
    }
    sweep(Suite::Membership, inst, |m| match m {
        MemberInstance::G(a, n, e) => verdict(calc.contains(&*calc.family().gfun(a, *n)?, *n, *e)?),
        MemberInstance::Span(s) => {
            let g = calc.g_slice(s.n, s.e, s.d)?;
            verdict(g.same_span(&calc.ideal_slice(s.n, s.e, s.d)))
        }
    })
}

enum MemberInstance {
    G(GenComposition, usize, u32),
    Span(SliceInstance),
}

impl fmt::Display for MemberInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MemberInstance::G(a, n, e) => write!(f, "G alpha={a} n={n} e={e}"),
            MemberInstance::Span(s) => write!(f, "span {s}"),
        }
    }
}

/// A seeded random homogeneous polynomial and the context it is reduced in.
pub struct Sample<T> {
    pub index: usize,
    pub n: usize,
    pub e: u32,
    pub poly: Polynomial<T>,
}

impl<T: Scalar> fmt::Display for Sample<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sample {} n={} e={} P={}", self.index, self.n, self.e, self.poly)
    }
}

/// Homogeneous test polynomials with `n ≤ max_n`, degree ≤ `max_deg`.
/// Every third sample is an explicit ideal element `Σ c·X^δ·G_α̃`, so
/// both sides of the membership equivalence are exercised.
pub fn random_samples<T: Scalar>(
    calc: &IdealCalc<T>,
    max_n: usize,
    max_deg: u32,
    max_level: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<Sample<T>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for index in 0..count {
        let n = rng.gen_range(1..=max_n);
        let e = rng.gen_range(0..=max_level);
        let d = rng.gen_range(0..=max_deg);
        let coeff = |rng: &mut ChaCha8Rng| {
            let v: i64 = rng.gen_range(1..=9);
            T::from_int(if rng.gen_bool(0.5) { v } else { -v })
        };
        let mut poly = Polynomial::zero(n);
        if index % 3 == 2 {
            let leads: Vec<Monomial> = (1..=d)
                .flat_map(|k| Monomial::all_of_degree(n, k))
                .filter(|m| m.to_gen().reaches_level(e))
                .collect();
            for _ in 0..rng.gen_range(1..=3) {
                let Some(m) = leads.choose(&mut rng) else { break };
                let delta = Monomial::all_of_degree(n, d - m.degree());
                let delta = delta.choose(&mut rng).expect("some monomial of every degree");
                let g = calc.family().gfun(&m.to_gen(), n)?;
                poly = poly.add(&g.mul_term(&coeff(&mut rng), delta)?)?;
            }
        } else {
            let monos = Monomial::all_of_degree(n, d);
            for _ in 0..rng.gen_range(1..=4) {
                let m = monos.choose(&mut rng).expect("some monomial of every degree").clone();
                poly = poly.add(&Polynomial::term(coeff(&mut rng), m))?;
            }
        }
        out.push(Sample { index, n, e, poly });
    }
    Ok(out)
}

/// The two reducers agree, are idempotent, land on e-Catalan monomials,
/// differ from the input by an ideal element, and vanish exactly on ideal
/// members.
fn reduce_equiv<T: Scalar>(calc: &IdealCalc<T>, b: &Bounds) -> VerifyReport {
    let max_n = b.window.unwrap_or(b.max_len);
    let samples = match random_samples(calc, max_n, b.max_deg, b.max_level, b.samples, b.seed) {
        Ok(s) => s,
        Err(e) => {
            return VerifyReport {
                suite: Suite::ReduceEquiv.name().into(),
                instances: 0,
                failures: vec![format!("sampling failed: {e}")],
            }
        }
    };
    sweep(Suite::ReduceEquiv, samples, |s| check_reducers(calc, &s.poly, s.n, s.e))
}

/// All reducer properties for one input.
pub fn check_reducers<T: Scalar>(
    calc: &IdealCalc<T>,
    p: &Polynomial<T>,
    n: usize,
    e: u32,
) -> Result<std::result::Result<(), String>> {
    let nf = calc.normal_form(p, n, e)?;
    let rb = reduce_by_gbasis(calc.family(), p, n, e)?;
    let fail = |what: &str| Ok(Err(what.to_string()));
    if nf != rb {
        return fail("reducers disagree");
    }
    if calc.normal_form(&nf, n, e)? != nf || reduce_by_gbasis(calc.family(), &rb, n, e)? != rb {
        return fail("not idempotent");
    }
    if !supported_on_catalan(&nf, e) {
        return fail("remainder not e-Catalan");
    }
    if !calc.contains(&p.sub(&nf)?, n, e)? {
        return fail("difference outside the ideal");
    }
    if rb.is_zero() != calc.contains(p, n, e)? {
        return fail("zero remainder and membership disagree");
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn small() -> Bounds {
        Bounds { max_len: 3, max_deg: 3, window: None, max_level: 1, samples: 40, seed: 7 }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let calc = IdealCalc::<Rational>::new();
        for suite in [
            Suite::Frel,
            Suite::Lm,
            Suite::Shift,
            Suite::Lattice,
            Suite::Filtration,
            Suite::Pairing,
            Suite::Membership,
            Suite::ReduceEquiv,
        ] {
            let r = run(&calc, suite, &small());
            assert!(r.instances > 0, "{suite} is empty");
            assert!(r.passed(), "{suite}: {:?}", r.failures);
        }
    }

    #[test]
    fn syzygy_identities_hold_in_small_range() {
        let calc = IdealCalc::<Rational>::new();
        let r = run(&calc, Suite::Syzygy, &small());
        assert!(r.instances > 0);
        assert!(r.failures.iter().all(|f| f.ends_with("[leading monomial]")), "{:?}", r.failures);
    }

    #[test]
    fn samples_are_reproducible() {
        let calc = IdealCalc::<Rational>::new();
        let a = random_samples(&calc, 3, 3, 1, 12, 99).unwrap();
        let b = random_samples(&calc, 3, 3, 1, 12, 99).unwrap();
        let show = |v: &[Sample<Rational>]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(show(&a), show(&b));
        assert!(a.iter().all(|s| s.poly.is_homogeneous()));
    }
}
