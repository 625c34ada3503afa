//! Sparse multivariate polynomials over an exact field in a fixed window of
//! variables `x1..xn`, ordered by the degree-then-lex monomial order.
//!
//! The order ranks *smaller* total degree higher; within a degree the
//! exponent vector that is lexicographically larger wins. Terms are kept in a
//! `BTreeMap` whose key order is exactly this order, so the leading term is
//! the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::compositions::GenComposition;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A monomial `x1^a1 ⋯ xn^an`. The window `n` is the length of the exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(window: usize) -> Self {
        Monomial { exps: vec![0; window], degree: 0 }
    }

    /// The variable `x_i`, 1-based.
    pub fn variable(i: usize, window: usize) -> Result<Self> {
        if i == 0 || i > window {
            return Err(Error::Domain(format!("variable x{i} outside window of {window}")));
        }
        let mut exps = vec![0; window];
        exps[i - 1] = 1;
        Ok(Monomial { exps, degree: 1 })
    }

    /// `X^α̃` in a window of `window` variables.
    pub fn from_gen(alpha: &GenComposition, window: usize) -> Result<Self> {
        Ok(Monomial::new(alpha.with_len(window)?.into_parts()))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn window(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn to_gen(&self) -> GenComposition {
        GenComposition::new(self.exps.clone())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_window(self.window(), other.window())?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.window() == other.window() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            Monomial::new(other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect())
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_window(self.window(), other.window())?;
        Ok(Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect()))
    }

    /// `∏ aᵢ!`, the apolar norm of the monomial.
    pub fn factorial_weight<T: Scalar>(&self) -> T {
        self.exps.iter().fold(T::one(), |acc, &a| acc * T::factorial(a))
    }

    /// All monomials of degree `d` in `window` variables, in descending order.
    pub fn all_of_degree(window: usize, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = crate::compositions::weak_compositions(window, d)
            .into_iter()
            .filter(|g| g.degree() == d)
            .map(|g| Monomial::new(g.into_parts()))
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

/// Monomials of different windows are ordered by window first so that the
/// impl is total; [`cmp_lex`] reports that case as an error instead.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then(other.degree.cmp(&self.degree))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

fn check_window(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::WindowMismatch { left, right });
    }
    Ok(())
}

/// `a < b` iff `a` has larger degree, or equal degree and the leftmost
/// nonzero entry of `b − a` is positive.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_window(a.window(), b.window())?;
    Ok(a.cmp(b))
}

/// A polynomial with nonzero exact coefficients, canonical by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    window: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(window: usize) -> Self {
        Polynomial { window, terms: BTreeMap::new() }
    }

    pub fn one(window: usize) -> Self {
        Self::constant(T::one(), window)
    }

    pub fn constant(c: T, window: usize) -> Self {
        Self::term(c, Monomial::one(window))
    }

    pub fn term(c: T, m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.window());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(T::one(), m)
    }

    /// The variable `x_i`, 1-based.
    pub fn variable(i: usize, window: usize) -> Result<Self> {
        Ok(Self::monomial(Monomial::variable(i, window)?))
    }

    /// Sums the given terms; zero sums are dropped.
    pub fn from_terms<I>(window: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, T)>,
    {
        let mut p = Polynomial::zero(window);
        for (m, c) in terms {
            check_window(window, m.window())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// `(LM(P), LC(P))`.
    pub fn leading_term(&self) -> Result<(&Monomial, &T)> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial<T>> {
        let mut out: BTreeMap<u32, Polynomial<T>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.window))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Largest exponent of `x_i` (1-based) over all terms.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exps.get(i - 1).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_window(self.window, other.window)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_window(self.window, other.window)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            window: self.window,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_window(self.window, other.window)?;
        let mut out = Polynomial::zero(self.window);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul_unchecked(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.window);
        }
        Polynomial {
            window: self.window,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Multiplication by a monomial is injective on terms and preserves the order.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        check_window(self.window, m.window())?;
        Ok(Polynomial {
            window: self.window,
            terms: self.terms.iter().map(|(t, c)| (t.mul_unchecked(m), c.clone())).collect(),
        })
    }

    /// `c · m · self`.
    pub fn mul_term(&self, c: &T, m: &Monomial) -> Result<Self> {
        Ok(self.mul_monomial(m)?.scale(c))
    }

    /// Substitutes `x_i ↦ x_{i+1}`, landing in a window one larger.
    pub fn shift_variables(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = Vec::with_capacity(m.exps.len() + 1);
                exps.push(0);
                exps.extend_from_slice(&m.exps);
                (Monomial { exps, degree: m.degree }, c.clone())
            })
            .collect();
        Polynomial { window: self.window + 1, terms }
    }

    /// Zero-pads every exponent vector to a larger window.
    pub fn embed(&self, window: usize) -> Result<Self> {
        if window < self.window {
            return Err(Error::Precondition(format!(
                "cannot embed a polynomial in {} variables into {window}",
                self.window
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                exps.resize(window, 0);
                (Monomial { exps, degree: m.degree }, c.clone())
            })
            .collect();
        Ok(Polynomial { window, terms })
    }

    /// Sets `x_{window+1} = x_{window+2} = ⋯ = 0`.
    pub fn truncate(&self, window: usize) -> Self {
        if window >= self.window {
            return self.embed(window).expect("window not smaller");
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[window..].iter().all(|&a| a == 0))
            .map(|(m, c)| (Monomial { exps: m.exps[..window].to_vec(), degree: m.degree }, c.clone()))
            .collect();
        Polynomial { window, terms }
    }

    /// `∂^m self`, the derivative by each `x_i` taken `m_i` times.
    pub fn differentiate(&self, m: &Monomial) -> Result<Self> {
        check_window(self.window, m.window())?;
        let mut out = Polynomial::zero(self.window);
        'terms: for (t, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = t.exps.clone();
            for (e, &k) in exps.iter_mut().zip(&m.exps) {
                if *e < k {
                    continue 'terms;
                }
                for j in 0..k {
                    coeff = coeff * T::from_count((*e - j) as u64);
                }
                *e -= k;
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        Ok(out)
    }

    /// `self(∂) q`, applying `self` as a constant-coefficient differential operator.
    pub fn apply_as_operator(&self, q: &Self) -> Result<Self> {
        check_window(self.window, q.window)?;
        let mut out = Polynomial::zero(self.window);
        for (m, c) in &self.terms {
            out = out.add(&q.differentiate(m)?.scale(c))?;
        }
        Ok(out)
    }

    /// Coefficient list in descending order, for serialization.
    pub fn to_json_terms(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(m, c)| TermRecord { coeff: c.to_string(), exponents: m.exps.clone() })
            .collect()
    }
}

/// One term of the JSON rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

impl<T: Scalar> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermRef { coeff: c.to_string(), exponents: &m.exps })?;
        }
        seq.end()
    }
}

struct TermRef<'a> {
    coeff: String,
    exponents: &'a [u32],
}

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Term", 2)?;
        st.serialize_field("coeff", &self.coeff)?;
        st.serialize_field("exponents", self.exponents)?;
        st.end()
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
