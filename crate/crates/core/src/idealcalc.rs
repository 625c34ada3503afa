//! Graded pieces of the level-`e` ideal `J_n^(e)`, Hilbert functions of the
//! quotient, Catalan normal forms, and the apolar pairing.
//!
//! `J_n^(e)` is generated by the `F_α(x1..xn)` whose composition reaches
//! level `e`. Its degree-`d` piece is spanned by the products `X^δ · F_α`
//! with `|δ| + d(α) = d`; we store that span as a reduced echelon basis
//! whose columns are the degree-`d` monomials in descending order.
//!
//! Level-`(e+1)` generators are a subset of level-`e` generators, so
//! `J^(e+1) ⊆ J^(e)` and the quotients grow with `e`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::ToPrimitive;
use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;

use crate::compositions::{
    compositions_up_to, count_e_catalan, count_e_catalan_by_degree, weak_compositions, Composition,
};
use crate::error::{Error, Result};
use crate::gfunctions::GFamily;
use crate::linalg::{Echelon, SparseRow};
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// Reduced echelon basis of one homogeneous piece of an ideal.
#[derive(Clone, Debug)]
pub struct GradedSliceBasis<T> {
    pub window: usize,
    pub level: u32,
    pub degree: u32,
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon<T>,
}

impl<T: Scalar> GradedSliceBasis<T> {
    /// Echelon basis of the span of `generators`, all homogeneous of
    /// degree `degree` in `window` variables.
    pub fn from_generators<I>(window: usize, level: u32, degree: u32, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial<T>>,
    {
        let mut slice = Self::empty(window, level, degree);
        for g in generators {
            if slice.echelon.is_full() {
                break;
            }
            let row = slice.to_row(&g)?;
            slice.echelon.insert(&row);
        }
        Ok(slice)
    }

    /// Every polynomial of degree `degree`.
    pub fn full(window: usize, level: u32, degree: u32) -> Self {
        let mut slice = Self::empty(window, level, degree);
        slice.echelon = Echelon::identity(slice.columns.len());
        slice
    }

    pub fn is_full(&self) -> bool {
        self.echelon.is_full()
    }

    fn empty(window: usize, level: u32, degree: u32) -> Self {
        let columns = Monomial::all_of_degree(window, degree);
        let index = columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let echelon = Echelon::new(columns.len());
        GradedSliceBasis { window, level, degree, columns, index, echelon }
    }

    fn to_row(&self, p: &Polynomial<T>) -> Result<SparseRow<T>> {
        if p.window() != self.window {
            return Err(Error::WindowMismatch { left: p.window(), right: self.window });
        }
        let mut row: SparseRow<T> = p
            .terms()
            .map(|(m, c)| {
                self.index.get(m).map(|&i| (i, c.clone())).ok_or_else(|| {
                    Error::Precondition(format!(
                        "term {m} is not of degree {} (polynomial must be homogeneous)",
                        self.degree
                    ))
                })
            })
            .collect::<Result<_>>()?;
        row.sort_by_key(|(c, _)| *c);
        Ok(row)
    }

    fn row_to_poly(&self, row: &[(usize, T)]) -> Polynomial<T> {
        Polynomial::from_terms(self.window, row.iter().map(|(i, c)| (self.columns[*i].clone(), c.clone())))
            .expect("window matches")
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Number of degree-`d` monomials in the window.
    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    /// Codimension: the quotient dimension in this degree.
    pub fn quotient_dim(&self) -> usize {
        self.columns.len() - self.rank()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    /// Monic basis rows ordered by pivot, largest pivot first.
    pub fn rows(&self) -> Vec<Polynomial<T>> {
        self.echelon.rows_by_pivot().into_iter().map(|r| self.row_to_poly(r)).collect()
    }

    pub fn pivots(&self) -> Vec<Monomial> {
        self.echelon.pivots().into_iter().map(|i| self.columns[i].clone()).collect()
    }

    /// Remainder of a degree-`d` polynomial modulo the slice; supported off
    /// the pivot monomials.
    pub fn reduce(&self, p: &Polynomial<T>) -> Result<Polynomial<T>> {
        let row = self.to_row(p)?;
        Ok(self.row_to_poly(&self.echelon.reduce(&row)))
    }

    pub fn contains(&self, p: &Polynomial<T>) -> Result<bool> {
        Ok(self.echelon.contains(&self.to_row(p)?))
    }

    /// Whether every row of `other` lies in `self`.
    pub fn contains_slice(&self, other: &GradedSliceBasis<T>) -> Result<bool> {
        for r in other.rows() {
            if !self.contains(&r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same span. The echelon form is canonical, so rows are compared directly.
    pub fn same_span(&self, other: &GradedSliceBasis<T>) -> bool {
        self.window == other.window && self.degree == other.degree && self.rows() == other.rows()
    }

    /// Basis of the orthogonal complement under the apolar pairing.
    pub fn orthogonal_complement(&self) -> Vec<Polynomial<T>> {
        let weights: Vec<T> = self.columns.iter().map(Monomial::factorial_weight).collect();
        let mut scaled = Echelon::new(self.columns.len());
        for r in self.echelon.rows_by_pivot() {
            let row: SparseRow<T> = r.iter().map(|(i, c)| (*i, c.clone() * weights[*i].clone())).collect();
            scaled.insert(&row);
        }
        scaled.nullspace().iter().map(|v| self.row_to_poly(v)).collect()
    }
}

/// Per-degree quotient dimensions of `R_n^(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    #[serde(rename = "n")]
    pub window: usize,
    #[serde(rename = "e")]
    pub level: u32,
    pub dims: Vec<u64>,
    pub total: u64,
    /// Number of length-`n` e-Catalan paths.
    pub catalan_bound: u64,
    /// Those paths split by degree, padded to the table length.
    pub catalan_by_degree: Vec<u64>,
    pub equality: bool,
}

impl HilbertTable {
    /// Per-degree `dims[d] ≤ catalan_by_degree[d]` and `total ≤ catalan_bound`.
    pub fn within_bound(&self) -> bool {
        self.total <= self.catalan_bound
            && self.dims.iter().zip(&self.catalan_by_degree).all(|(a, b)| a <= b)
    }
}

type SliceKey = (usize, u32, u32);

/// Ideal computations with shared caches for `F`, `G` and graded slices.
#[derive(Debug, Default)]
pub struct IdealCalc<T> {
    family: GFamily<T>,
    slices: RwLock<HashMap<SliceKey, Arc<GradedSliceBasis<T>>>>,
}

impl<T: Scalar> IdealCalc<T> {
    pub fn new() -> Self {
        IdealCalc { family: GFamily::new(), slices: RwLock::new(HashMap::new()) }
    }

    pub fn family(&self) -> &GFamily<T> {
        &self.family
    }

    /// `F_α(x1..xn)` for every nonempty `α` with `d(α) ≤ d_max`, `ℓ(α) ≤ n`
    /// that reaches level `e`. Longer compositions vanish in `n` variables.
    pub fn level_generators(&self, e: u32, d_max: u32, n: usize) -> Vec<(Composition, Arc<Polynomial<T>>)> {
        compositions_up_to(d_max, n)
            .into_iter()
            .filter(|a| a.degree() >= 1 && a.to_gen().reaches_level(e))
            .map(|a| {
                let f = self.family.fundamental(&a, n);
                (a, f)
            })
            .collect()
    }

    /// Degree-`d` piece of `J_n^(e)`, built from the previous degree as
    /// `Σ x_i · J_{d−1}` plus the generators of degree exactly `d`.
    pub fn ideal_slice(&self, n: usize, e: u32, d: u32) -> Arc<GradedSliceBasis<T>> {
        let key = (n, e, d);
        if let Some(s) = self.slices.read().get(&key) {
            return Arc::clone(s);
        }
        let slice = if d == 0 {
            GradedSliceBasis::from_generators(n, e, 0, std::iter::empty()).expect("no generators")
        } else {
            let prev = self.ideal_slice(n, e, d - 1);
            if d > 1 && prev.is_full() {
                GradedSliceBasis::full(n, e, d)
            } else {
                let fresh = self
                    .level_generators(e, d, n)
                    .into_iter()
                    .filter(|(a, _)| a.degree() == d)
                    .map(|(_, f)| (*f).clone());
                let raised = prev.rows().into_iter().flat_map(|r| {
                    (1..=n).map(move |i| {
                        r.mul_monomial(&Monomial::variable(i, n).expect("i within window"))
                            .expect("window matches")
                    })
                });
                GradedSliceBasis::from_generators(n, e, d, fresh.chain(raised))
                    .expect("generators are homogeneous")
            }
        };
        Arc::clone(self.slices.write().entry(key).or_insert_with(|| Arc::new(slice)))
    }

    /// The same slice from every product `X^δ · F_α` directly, uncached.
    pub fn ideal_slice_direct(&self, n: usize, e: u32, d: u32) -> GradedSliceBasis<T> {
        let gens = self.level_generators(e, d, n);
        let products = gens.into_iter().flat_map(move |(a, f)| {
            Monomial::all_of_degree(n, d - a.degree())
                .into_iter()
                .map(move |delta| f.mul_monomial(&delta).expect("window matches"))
        });
        GradedSliceBasis::from_generators(n, e, d, products).expect("generators are homogeneous")
    }

    /// Degree-`d` span of `X^δ · G_α̃` over the `α̃` (length ≤ n) reaching level `e`.
    pub fn g_slice(&self, n: usize, e: u32, d: u32) -> Result<GradedSliceBasis<T>> {
        let mut products = Vec::new();
        for alpha in weak_compositions(n, d) {
            if alpha.degree() == 0 || !alpha.reaches_level(e) {
                continue;
            }
            let g = self.family.gfun(&alpha, n)?;
            for delta in Monomial::all_of_degree(n, d - alpha.degree()) {
                products.push(g.mul_monomial(&delta)?);
            }
        }
        GradedSliceBasis::from_generators(n, e, d, products)
    }

    /// Quotient dimensions for degrees `0..=d_max`, with the path-count bound.
    pub fn hilbert_function(&self, n: usize, e: u32, d_max: u32) -> HilbertTable {
        let dims: Vec<u64> = (0..=d_max)
            .into_par_iter()
            .map(|d| self.ideal_slice(n, e, d).quotient_dim() as u64)
            .collect();
        let total = dims.iter().sum();
        let catalan_bound = count_e_catalan(n, e).to_u64().expect("path count fits in u64");
        let mut catalan_by_degree: Vec<u64> = count_e_catalan_by_degree(n, e)
            .iter()
            .map(|c| c.to_u64().expect("path count fits in u64"))
            .collect();
        catalan_by_degree.resize(dims.len().max(catalan_by_degree.len()), 0);
        catalan_by_degree.truncate(dims.len());
        HilbertTable {
            window: n,
            level: e,
            equality: total == catalan_bound,
            dims,
            total,
            catalan_bound,
            catalan_by_degree,
        }
    }

    /// Membership in `J_n^(e)`, tested per homogeneous component.
    pub fn contains(&self, p: &Polynomial<T>, n: usize, e: u32) -> Result<bool> {
        check_window(p, n)?;
        for (d, comp) in p.homogeneous_components() {
            if !self.ideal_slice(n, e, d).contains(&comp)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Repeatedly cancels the largest monomial `X^α̃` with `α̃` reaching level
    /// `e` using `G_α̃`, until only e-Catalan monomials remain.
    pub fn normal_form(&self, p: &Polynomial<T>, n: usize, e: u32) -> Result<Polynomial<T>> {
        check_window(p, n)?;
        let mut cur = p.clone();
        loop {
            let next = cur
                .terms()
                .find(|(m, _)| m.to_gen().reaches_level(e))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = next else { return Ok(cur) };
            let g = self.family.gfun(&m.to_gen(), n)?;
            cur = cur.sub(&g.scale(&c))?;
        }
    }

    /// Dimension of the degree-`d` super-harmonic space, the apolar
    /// orthogonal complement of the degree-`d` piece of `J_n^(e)`.
    pub fn superharmonic_dim(&self, n: usize, e: u32, d: u32) -> usize {
        self.superharmonic_basis(n, e, d).len()
    }

    pub fn superharmonic_basis(&self, n: usize, e: u32, d: u32) -> Vec<Polynomial<T>> {
        self.ideal_slice(n, e, d).orthogonal_complement()
    }
}

fn check_window<T: Scalar>(p: &Polynomial<T>, n: usize) -> Result<()> {
    if p.window() != n {
        return Err(Error::WindowMismatch { left: p.window(), right: n });
    }
    Ok(())
}

/// `⟨P, Q⟩ = (P(∂) Q)(0)`: monomials are orthogonal and `⟨X^a, X^a⟩ = ∏ aᵢ!`.
pub fn apolar_pair<T: Scalar>(p: &Polynomial<T>, q: &Polynomial<T>) -> Result<T> {
    if p.window() != q.window() {
        return Err(Error::WindowMismatch { left: p.window(), right: q.window() });
    }
    let mut acc = T::zero();
    for (m, c) in p.terms() {
        let d = q.coeff(m);
        if !d.is_zero() {
            acc = acc + c.clone() * d * m.factorial_weight::<T>();
        }
    }
    Ok(acc)
}

/// The e-Catalan monomials of degree `d` in `n` variables.
pub fn catalan_monomials(n: usize, e: u32, d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(n, d).into_iter().filter(|m| !m.to_gen().reaches_level(e)).collect()
}

/// Whether every monomial of `p` is e-Catalan.
pub fn supported_on_catalan<T: Scalar>(p: &Polynomial<T>, e: u32) -> bool {
    p.terms().all(|(m, _)| !m.to_gen().reaches_level(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::GenComposition;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn gen(v: &[u32]) -> GenComposition {
        GenComposition::new(v.to_vec())
    }

    fn mono(e: &[u32]) -> P {
        P::monomial(Monomial::new(e.to_vec()))
    }

    #[test]
    fn level_generator_examples() {
        let calc = IdealCalc::<Rational>::new();
        let g = calc.level_generators(0, 1, 2);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1.to_string(), "x1 + x2");
        assert!(calc.level_generators(1, 1, 2).is_empty());
        let g = calc.level_generators(1, 2, 2);
        let comps: Vec<String> = g.iter().map(|(a, _)| a.to_string()).collect();
        assert_eq!(comps, vec!["2"]);
    }

    #[test]
    fn slice_examples() {
        let calc = IdealCalc::<Rational>::new();
        assert_eq!(calc.ideal_slice(2, 0, 2).rank(), 3);
        let s = calc.ideal_slice(2, 0, 1);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.pivots(), vec![Monomial::new(vec![1, 0])]);
        assert_eq!(s.rows()[0].to_string(), "x1 + x2");
        for n in 1..4 {
            assert_eq!(calc.ideal_slice(n, 0, 0).rank(), 0);
        }
    }

    #[test]
    fn recursive_slices_match_direct_products() {
        let calc = IdealCalc::<Rational>::new();
        for n in 1..=3 {
            for e in 0..=2 {
                for d in 0..=n as u32 + e + 1 {
                    let direct = calc.ideal_slice_direct(n, e, d);
                    assert!(calc.ideal_slice(n, e, d).same_span(&direct), "n={n} e={e} d={d}");
                }
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let calc = IdealCalc::<Rational>::new();
        let t = calc.hilbert_function(3, 0, 3);
        assert_eq!(t.dims, vec![1, 2, 2, 0]);
        assert_eq!((t.total, t.catalan_bound, t.equality), (5, 5, true));
        let t = calc.hilbert_function(2, 0, 2);
        assert_eq!(t.dims, vec![1, 1, 0]);
        assert_eq!(t.total, 2);
    }

    #[test]
    fn membership_examples() {
        let calc = IdealCalc::<Rational>::new();
        let f11 = calc.family().fundamental(&Composition::new(vec![1, 1]).unwrap(), 3);
        assert!(calc.contains(&f11, 3, 0).unwrap());
        let g = calc.family().gfun(&gen(&[0, 2]), 3).unwrap();
        assert!(calc.contains(&g, 3, 0).unwrap());
        assert!(!calc.contains(&mono(&[0, 1]), 2, 0).unwrap());
        assert!(calc.contains(&mono(&[0, 1]), 3, 0).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let calc = IdealCalc::<Rational>::new();
        assert_eq!(calc.normal_form(&mono(&[1, 0]), 2, 0).unwrap().to_string(), "-x2");
        assert_eq!(calc.normal_form(&mono(&[0, 1]), 2, 0).unwrap().to_string(), "x2");
        assert!(calc.normal_form(&mono(&[1, 1]), 2, 0).unwrap().is_zero());
        assert_eq!(calc.normal_form(&P::one(3), 3, 1).unwrap(), P::one(3));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(apolar_pair(&mono(&[1, 1]), &mono(&[1, 1])).unwrap(), q(1));
        assert_eq!(apolar_pair(&mono(&[2, 0]), &mono(&[2, 0])).unwrap(), q(2));
        assert_eq!(apolar_pair(&mono(&[1, 0]), &mono(&[0, 1])).unwrap(), q(0));
        assert!(apolar_pair(&mono(&[1]), &mono(&[1, 0])).is_err());
    }

    #[test]
    fn superharmonic_examples() {
        let calc = IdealCalc::<Rational>::new();
        let basis = calc.superharmonic_basis(2, 0, 1);
        assert_eq!(basis.len(), 1);
        // proportional to x1 − x2
        let b = &basis[0];
        assert_eq!(b.coeff(&Monomial::new(vec![1, 0])), -b.coeff(&Monomial::new(vec![0, 1])));
        assert_eq!(calc.superharmonic_dim(2, 0, 2), 0);
        for n in 1..4 {
            assert_eq!(calc.superharmonic_dim(n, 0, 0), 1);
            assert_eq!(calc.superharmonic_dim(n, 1, 0), 1);
        }
    }

    #[test]
    fn slice_rejects_inhomogeneous_rows() {
        let calc = IdealCalc::<Rational>::new();
        let s = calc.ideal_slice(2, 0, 1);
        assert!(s.contains(&mono(&[1, 1])).is_err());
    }
}
