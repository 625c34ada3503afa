//! Monomial and fundamental quasi-symmetric polynomials in `n` variables.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// `M_α(x1..xn) = Σ_{i1<⋯<ik≤n} x_{i1}^{α1} ⋯ x_{ik}^{αk}`.
pub fn monomial_qsym<T: Scalar>(alpha: &Composition, n: usize) -> Polynomial<T> {
    let k = alpha.len();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return Polynomial::zero(n);
    }
    loop {
        let mut exps = vec![0; n];
        for (&i, &a) in idx.iter().zip(alpha.parts()) {
            exps[i] = a;
        }
        out.push((Monomial::new(exps), T::one()));
        // next k-subset of 0..n in lexicographic order
        let Some(pos) = (0..k).rev().find(|&j| idx[j] < n - k + j) else { break };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Polynomial::from_terms(n, out).expect("window matches")
}

/// `F_α = Σ_{β ≼ α} M_β`.
pub fn fundamental_qsym<T: Scalar>(alpha: &Composition, n: usize) -> Polynomial<T> {
    let mut out = Polynomial::zero(n);
    for beta in alpha.refinements() {
        if beta.len() <= n {
            out = out.add(&monomial_qsym(&beta, n)).expect("window matches");
        }
    }
    out
}

/// `F_α` as the sum of `x_{j1}⋯x_{jd}` over weakly increasing `j` with a
/// strict rise at every descent of `α`.
pub fn fundamental_qsym_by_chains<T: Scalar>(alpha: &Composition, n: usize) -> Polynomial<T> {
    fn rec(
        pos: u32,
        d: u32,
        last: usize,
        n: usize,
        strict: &[bool],
        exps: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos > d {
            out.push(exps.clone());
            return;
        }
        // strict rise when pos−1 is a descent
        let lo = if pos == 1 { 0 } else if strict[pos as usize - 1] { last + 1 } else { last };
        for j in lo..n {
            exps[j] += 1;
            rec(pos + 1, d, j, n, strict, exps, out);
            exps[j] -= 1;
        }
    }
    let d = alpha.degree();
    let mut strict = vec![false; d as usize + 1];
    for i in alpha.descent_set() {
        strict[i as usize] = true;
    }
    let mut chains = Vec::new();
    rec(1, d, 0, n, &strict, &mut vec![0; n], &mut chains);
    Polynomial::from_terms(n, chains.into_iter().map(|e| (Monomial::new(e), T::one())))
        .expect("window matches")
}

/// Checks the first-variable recurrences of `F_α` exactly in window `n`:
/// for `α1 > 1`, `F_α = x1·F_{(α1−1)α2…} + F_α(x2..xn)`; for `α1 = 1`,
/// `F_α = x1·F_{α2…}(x2..xn) + F_α(x2..xn)`.
pub fn check_f_recurrence<T: Scalar>(alpha: &Composition, n: usize) -> Result<bool> {
    let parts = alpha.parts();
    let Some(&first) = parts.first() else {
        return Err(Error::Precondition("recurrence needs a nonempty composition".into()));
    };
    if n == 0 {
        return Err(Error::Precondition("recurrence needs at least one variable".into()));
    }
    let lhs: Polynomial<T> = fundamental_qsym(alpha, n);
    let x1 = Polynomial::variable(1, n)?;
    let tail: Polynomial<T> = fundamental_qsym(alpha, n - 1).shift_variables();
    let head = if first > 1 {
        let mut reduced = parts.to_vec();
        reduced[0] -= 1;
        fundamental_qsym(&Composition::new(reduced)?, n)
    } else {
        fundamental_qsym(&Composition::new(parts[1..].to_vec())?, n - 1).shift_variables()
    };
    let rhs = x1.mul(&head)?.add(&tail)?;
    Ok(lhs == rhs)
}

/// The F-to-M change of basis row: coefficient 1 on every refinement.
pub fn expand_in_m(alpha: &Composition) -> Vec<(Composition, i64)> {
    let mut r = alpha.refinements();
    r.sort();
    r.into_iter().map(|b| (b, 1)).collect()
}

type Key = (Composition, usize);

/// Memo of `F_α(x1..xn)` keyed by `(α, n)`. Insertions are idempotent, so
/// racing writers store equal values.
#[derive(Debug, Default)]
pub struct QsymCache<T> {
    fundamental: RwLock<HashMap<Key, Arc<Polynomial<T>>>>,
}

impl<T: Scalar> QsymCache<T> {
    pub fn new() -> Self {
        QsymCache { fundamental: RwLock::new(HashMap::new()) }
    }

    pub fn fundamental(&self, alpha: &Composition, n: usize) -> Arc<Polynomial<T>> {
        let key = (alpha.clone(), n);
        if let Some(p) = self.fundamental.read().get(&key) {
            return Arc::clone(p);
        }
        let p = Arc::new(fundamental_qsym(alpha, n));
        Arc::clone(self.fundamental.write().entry(key).or_insert(p))
    }
}
