//! S-polynomials and the identities showing the `G` family is a Gröbner
//! basis of `J^(e)`, checked exactly in finite windows.

use std::collections::HashMap;

use crate::compositions::{Composition, GenComposition};
use crate::error::{Error, Result};
use crate::gfunctions::GFamily;
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// `S(P, Q) = LC(Q)·M1·P − LC(P)·M2·Q` where
/// `lcm(LM(P), LM(Q)) = M1·LM(P) = M2·LM(Q)`.
pub fn s_polynomial<T: Scalar>(p: &Polynomial<T>, q: &Polynomial<T>) -> Result<Polynomial<T>> {
    if p.window() != q.window() {
        return Err(Error::WindowMismatch { left: p.window(), right: q.window() });
    }
    let (lm_p, lc_p) = p.leading_term()?;
    let (lm_q, lc_q) = q.leading_term()?;
    let lcm = lm_p.lcm(lm_q)?;
    let m1 = lm_p.quotient_of(&lcm).expect("LM(P) divides the lcm");
    let m2 = lm_q.quotient_of(&lcm).expect("LM(Q) divides the lcm");
    p.mul_term(lc_q, &m1)?.sub(&q.mul_term(lc_p, &m2)?)
}

fn gen_concat(pieces: &[&[u32]]) -> GenComposition {
    GenComposition::new(pieces.concat())
}

/// `G_α̃` restricted to `n` variables. When the index is longer than the
/// window it is computed in the smallest sufficient window and the extra
/// variables are set to zero.
fn g_restricted<T: Scalar>(family: &GFamily<T>, alpha: &GenComposition, n: usize) -> Result<Polynomial<T>> {
    let need = alpha.stripped().len();
    if need <= n {
        Ok((*family.gfun(alpha, n)?).clone())
    } else {
        Ok(family.gfun(alpha, need)?.truncate(n))
    }
}

/// `S(G_{γ̃ a ν}, G_{γ̃ (a−1) ν}) = G_{γ̃ a ν} − x_k G_{γ̃ (a−1) ν} = G_{γ̃ 0 a ν}`
/// with `k = ℓ(γ̃) + 1`, for standard `ν`. Indices longer than the window
/// are evaluated with the surplus variables set to zero.
pub fn check_syzygy_base<T: Scalar>(
    family: &GFamily<T>,
    gamma: &GenComposition,
    a: u32,
    nu: &Composition,
    n: usize,
) -> Result<bool> {
    if a == 0 {
        return Err(Error::Precondition("syzygy needs a > 0".into()));
    }
    if gamma.len() >= n {
        return Err(Error::Precondition(format!("x_{} lies outside a window of {n}", gamma.len() + 1)));
    }
    let g = gamma.parts();
    let upper = g_restricted(family, &gen_concat(&[g, &[a], nu.parts()]), n)?;
    let lower = g_restricted(family, &gen_concat(&[g, &[a - 1], nu.parts()]), n)?;
    let merged = g_restricted(family, &gen_concat(&[g, &[0, a], nu.parts()]), n)?;
    let xk = Monomial::variable(gamma.len() + 1, n)?;
    let direct = upper.sub(&lower.mul_monomial(&xk)?)?;
    let s = s_polynomial(&upper, &lower)?;
    Ok(direct == merged && s == merged)
}

/// Outcome of one instance of the four-term resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SyzygyOutcome {
    /// The S-polynomial equals `G_{…a…} − x_k G_{…(a−1)…}` and the
    /// four-term identity holds exactly.
    pub identity: bool,
    /// `LM(S_top) = x_ℓ · LM(S_{b−1})`.
    pub leading: bool,
}

impl SyzygyOutcome {
    pub fn holds(&self) -> bool {
        self.identity && self.leading
    }
}

/// The four-term resolution of `S(G_{γ̃ a π̃ 0 b μ}, G_{γ̃ (a−1) π̃ 0 b μ})`:
///
/// ```text
/// S(G_{γ̃aπ̃bμ}, G_{γ̃(a−1)π̃bμ}) − x_ℓ · S(G_{γ̃aπ̃(b−1)μ}, G_{γ̃(a−1)π̃(b−1)μ})
/// ```
///
/// with `ℓ = ℓ(γ̃ a π̃) + 1`, together with the leading-monomial relation
/// `LM(lhs) = x_ℓ · LM(S(G_{γ̃aπ̃(b−1)μ}, G_{γ̃(a−1)π̃(b−1)μ}))`.
pub fn syzygy_recursion_outcome<T: Scalar>(
    family: &GFamily<T>,
    gamma: &GenComposition,
    a: u32,
    pi: &GenComposition,
    b: u32,
    mu: &Composition,
    n: usize,
) -> Result<SyzygyOutcome> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition("syzygy recursion needs a > 0 and b > 0".into()));
    }
    let (g, p, m) = (gamma.parts(), pi.parts(), mu.parts());
    let pair = |tail: &[u32]| -> Result<(Polynomial<T>, Polynomial<T>)> {
        let hi = family.gfun(&gen_concat(&[g, &[a], p, tail]), n)?;
        let lo = family.gfun(&gen_concat(&[g, &[a - 1], p, tail]), n)?;
        Ok(((*hi).clone(), (*lo).clone()))
    };
    let with = |head: &[u32]| -> Vec<u32> { [head, m].concat() };

    let (hi, lo) = pair(&with(&[0, b]))?;
    let lhs = s_polynomial(&hi, &lo)?;
    let xk = Monomial::variable(gamma.len() + 1, n)?;
    let direct = hi.sub(&lo.mul_monomial(&xk)?)?;

    let (hi1, lo1) = pair(&with(&[b]))?;
    let (hi2, lo2) = pair(&with(&[b - 1]))?;
    let s1 = s_polynomial(&hi1, &lo1)?;
    let s2 = s_polynomial(&hi2, &lo2)?;
    let xl = Monomial::variable(gamma.len() + 1 + pi.len() + 1, n)?;
    let rhs = s1.sub(&s2.mul_monomial(&xl)?)?;

    let leading = match (lhs.leading_monomial(), s2.leading_monomial()) {
        (Ok(l), Ok(r)) => *l == r.mul(&xl)?,
        _ => false,
    };
    Ok(SyzygyOutcome { identity: lhs == direct && lhs == rhs, leading })
}

/// Both parts of [`syzygy_recursion_outcome`] at once.
pub fn check_syzygy_recursion<T: Scalar>(
    family: &GFamily<T>,
    gamma: &GenComposition,
    a: u32,
    pi: &GenComposition,
    b: u32,
    mu: &Composition,
    n: usize,
) -> Result<bool> {
    Ok(syzygy_recursion_outcome(family, gamma, a, pi, b, mu, n)?.holds())
}

/// `S(G_α̃, G_π̃) = S(G_α̃, G_ρ̃) + S(G_ρ̃, G_π̃)` where `X^ρ̃ = lcm(X^α̃, X^π̃)`.
pub fn check_telescoping<T: Scalar>(
    family: &GFamily<T>,
    alpha: &GenComposition,
    pi: &GenComposition,
    n: usize,
) -> Result<bool> {
    let len = alpha.len().max(pi.len());
    let rho = GenComposition::new((0..len).map(|i| alpha.part(i).max(pi.part(i))).collect());
    let (ga, gp, gr) = (family.gfun(alpha, n)?, family.gfun(pi, n)?, family.gfun(&rho, n)?);
    let lhs = s_polynomial(&ga, &gp)?;
    let rhs = s_polynomial(&ga, &gr)?.add(&s_polynomial(&gr, &gp)?)?;
    Ok(lhs == rhs)
}

/// For `α̃ ≤ ρ̃ ≤ π̃` componentwise:
/// `S(G_α̃, G_π̃) = X^{π̃−ρ̃} · S(G_α̃, G_ρ̃) + S(G_ρ̃, G_π̃)`.
pub fn check_telescoping_chain<T: Scalar>(
    family: &GFamily<T>,
    alpha: &GenComposition,
    rho: &GenComposition,
    pi: &GenComposition,
    n: usize,
) -> Result<bool> {
    if !alpha.le_componentwise(rho) || !rho.le_componentwise(pi) {
        return Err(Error::Precondition(format!("{alpha} ≤ {rho} ≤ {pi} fails componentwise")));
    }
    let (ga, gr, gp) = (family.gfun(alpha, n)?, family.gfun(rho, n)?, family.gfun(pi, n)?);
    let gap = Monomial::from_gen(rho, n)?
        .quotient_of(&Monomial::from_gen(pi, n)?)
        .expect("componentwise order gives divisibility");
    let lhs = s_polynomial(&ga, &gp)?;
    let rhs = s_polynomial(&ga, &gr)?.mul_monomial(&gap)?.add(&s_polynomial(&gr, &gp)?)?;
    Ok(lhs == rhs)
}

/// The lattice property for one instance: if `α̃` reaches level `e` and
/// `α̃ ≤ ρ̃` componentwise, then `ρ̃` reaches level `e`.
pub fn check_lattice(alpha: &GenComposition, rho: &GenComposition, e: u32) -> bool {
    !alpha.reaches_level(e) || !alpha.le_componentwise(rho) || rho.reaches_level(e)
}

/// Division by `{G_α̃ : α̃ reaches level e}`: each homogeneous component is
/// swept once over its monomials in descending order, cancelling every
/// reducible monomial with the `G` of the same exponent.
pub fn reduce_by_gbasis<T: Scalar>(
    family: &GFamily<T>,
    p: &Polynomial<T>,
    n: usize,
    e: u32,
) -> Result<Polynomial<T>> {
    if p.window() != n {
        return Err(Error::WindowMismatch { left: p.window(), right: n });
    }
    let mut remainder = Vec::new();
    for (d, comp) in p.homogeneous_components() {
        let mut coeffs: HashMap<Monomial, T> =
            comp.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        for m in Monomial::all_of_degree(n, d) {
            let Some(c) = coeffs.remove(&m) else { continue };
            let alpha = m.to_gen();
            if !alpha.reaches_level(e) {
                remainder.push((m, c));
                continue;
            }
            // the leading term of G_α̃ is X^α̃ itself, already removed
            let g = family.gfun(&alpha, n)?;
            for (t, v) in g.terms().skip(1) {
                let entry = coeffs.entry(t.clone()).or_insert_with(T::zero);
                *entry = entry.clone() - c.clone() * v.clone();
                if entry.is_zero() {
                    coeffs.remove(t);
                }
            }
        }
    }
    Polynomial::from_terms(n, remainder)
}
