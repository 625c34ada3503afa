//! The recursive generator family `G_α̃`.
//!
//! For a standard `ν`, `G_{ν 0 0 ⋯} = F_ν`. Otherwise the stripped index is
//! split as `γ̃ · 0 · a · β` around its last zero and, with `k = ℓ(γ̃) + 1`,
//!
//! ```text
//! G_{γ̃ 0 a β} = G_{γ̃ a β} − x_k · G_{γ̃ (a−1) β}
//! ```
//!
//! Every polynomial here lives in a window of `n` variables, which amounts
//! to setting `x_{n+1} = x_{n+2} = ⋯ = 0`. Both branches of the recursion
//! commute with that substitution, so the recursion runs in the window
//! directly.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::compositions::{Composition, GenComposition};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};
use crate::qsym::QsymCache;
use crate::scalar::Scalar;

/// Memo key: zero-stripped parts and the window size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GFunctionKey {
    pub parts: Vec<u32>,
    pub window: usize,
}

impl GFunctionKey {
    pub fn new(alpha: &GenComposition, window: usize) -> Result<Self> {
        let parts = alpha.stripped().to_vec();
        if parts.len() > window {
            return Err(Error::Precondition(format!(
                "G_{{{alpha}}} needs at least {} variables, window has {window}",
                parts.len()
            )));
        }
        Ok(GFunctionKey { parts, window })
    }
}

/// The `G` family together with the caches it draws on. Cheap to share
/// between threads; lookups take a read lock and inserts are idempotent.
#[derive(Debug, Default)]
pub struct GFamily<T> {
    qsym: QsymCache<T>,
    memo: RwLock<HashMap<GFunctionKey, Arc<Polynomial<T>>>>,
}

impl<T: Scalar> GFamily<T> {
    pub fn new() -> Self {
        GFamily { qsym: QsymCache::new(), memo: RwLock::new(HashMap::new()) }
    }

    pub fn qsym(&self) -> &QsymCache<T> {
        &self.qsym
    }

    /// `F_α(x1..xn)`, memoized.
    pub fn fundamental(&self, alpha: &Composition, n: usize) -> Arc<Polynomial<T>> {
        self.qsym.fundamental(alpha, n)
    }

    /// `G_α̃(x1..xn)`. Requires `ℓ(stripped α̃) ≤ n`.
    pub fn gfun(&self, alpha: &GenComposition, n: usize) -> Result<Arc<Polynomial<T>>> {
        let key = GFunctionKey::new(alpha, n)?;
        Ok(self.gfun_key(key))
    }

    fn gfun_key(&self, key: GFunctionKey) -> Arc<Polynomial<T>> {
        if let Some(p) = self.memo.read().get(&key) {
            return Arc::clone(p);
        }
        let n = key.window;
        let alpha = GenComposition::new(key.parts.clone());
        let value = match alpha.to_composition() {
            Some(nu) => self.fundamental(&nu, n),
            None => {
                let (gamma, a, beta) =
                    alpha.factorize_for_recursion().expect("non-standard index factorizes");
                let k = gamma.len() + 1;
                let beta = GenComposition::from(beta);
                let with_a = gamma.concat(&GenComposition::new(vec![a])).concat(&beta);
                let with_a_minus = gamma.concat(&GenComposition::new(vec![a - 1])).concat(&beta);
                let left = self.gfun_key(GFunctionKey { parts: with_a.stripped().to_vec(), window: n });
                let right =
                    self.gfun_key(GFunctionKey { parts: with_a_minus.stripped().to_vec(), window: n });
                let xk = Monomial::variable(k, n).expect("k within window");
                let shifted = right.mul_monomial(&xk).expect("window matches");
                Arc::new(left.sub(&shifted).expect("window matches"))
            }
        };
        Arc::clone(self.memo.write().entry(key).or_insert(value))
    }

    /// `LM(G_α̃) = X^α̃` with leading coefficient 1.
    pub fn check_lm(&self, alpha: &GenComposition, n: usize) -> Result<bool> {
        let g = self.gfun(alpha, n)?;
        let want = Monomial::from_gen(alpha, n)?;
        Ok(match g.leading_term() {
            Ok((lm, lc)) => *lm == want && lc.is_one(),
            Err(_) => false,
        })
    }

    /// `G_{0 ρ̃}(x1..x_{n+1}) = G_ρ̃(x2..x_{n+1})`.
    pub fn check_shift_relation(&self, rho: &GenComposition, n: usize) -> Result<bool> {
        let zero_rho = GenComposition::new(vec![0]).concat(rho);
        let lhs = self.gfun(&zero_rho, n + 1)?;
        let rhs = self.gfun(rho, n)?.shift_variables();
        Ok(*lhs == rhs)
    }

    /// The remainder `G_{b ρ̃} − x1 · G_{(b−1) ρ̃}` for `b > 0`, which
    /// involves no `x1`.
    pub fn m_remainder(&self, alpha: &GenComposition, n: usize) -> Result<Polynomial<T>> {
        let b = alpha.part(0);
        if b == 0 {
            return Err(Error::Precondition(format!(
                "remainder needs a positive first part, got {alpha}"
            )));
        }
        let mut lowered = alpha.parts().to_vec();
        lowered[0] -= 1;
        let g = self.gfun(alpha, n)?;
        let h = self.gfun(&GenComposition::new(lowered), n)?;
        g.sub(&h.mul_monomial(&Monomial::variable(1, n)?)?)
    }

    pub fn cached_len(&self) -> usize {
        self.memo.read().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn gc(v: &[u32]) -> GenComposition {
        GenComposition::new(v.to_vec())
    }

    #[test]
    fn gfun_examples() {
        let fam = GFamily::<Rational>::new();
        let f21 = fam.fundamental(&Composition::new(vec![2, 1]).unwrap(), 3);
        assert_eq!(*fam.gfun(&gc(&[2, 1]), 3).unwrap(), *f21);
        assert_eq!(fam.gfun(&gc(&[0, 1]), 2).unwrap().to_string(), "x2");
        assert_eq!(fam.gfun(&gc(&[1, 0, 1]), 3).unwrap().to_string(), "x1*x3 - x2^2");
        assert_eq!(*fam.gfun(&gc(&[]), 2).unwrap(), Polynomial::one(2));
        // trailing zeros are immaterial
        assert_eq!(fam.gfun(&gc(&[0, 1, 0, 0]), 2).unwrap().to_string(), "x2");
    }

    #[test]
    fn window_too_small() {
        let fam = GFamily::<Rational>::new();
        assert!(matches!(fam.gfun(&gc(&[1, 0, 1]), 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn lm_examples() {
        let fam = GFamily::<Rational>::new();
        assert!(fam.check_lm(&gc(&[1, 0, 1]), 3).unwrap());
        assert!(fam.check_lm(&gc(&[0, 1]), 2).unwrap());
        assert!(fam.check_lm(&gc(&[]), 1).unwrap());
    }

    #[test]
    fn shift_examples() {
        let fam = GFamily::<Rational>::new();
        assert!(fam.check_shift_relation(&gc(&[1]), 2).unwrap());
        assert_eq!(fam.gfun(&gc(&[0, 1]), 3).unwrap().to_string(), "x2 + x3");
        assert!(fam.check_shift_relation(&gc(&[]), 1).unwrap());
        assert!(fam.check_shift_relation(&gc(&[2, 1]), 3).unwrap());
    }

    #[test]
    fn remainder_examples() {
        let fam = GFamily::<Rational>::new();
        assert_eq!(fam.m_remainder(&gc(&[2]), 2).unwrap().to_string(), "x2^2");
        assert_eq!(fam.m_remainder(&gc(&[1, 1]), 3).unwrap().to_string(), "x2*x3");
        assert!(fam.m_remainder(&gc(&[1]), 1).unwrap().is_zero());
        assert!(matches!(fam.m_remainder(&gc(&[0, 1]), 2), Err(Error::Precondition(_))));
    }
}
