//! Compositions, generalized compositions and their lattice paths.
//!
//! A [`Composition`] is a finite list of positive parts and indexes the
//! quasi-symmetric bases. A [`GenComposition`] also admits zero parts; it is
//! the exponent vector of a monomial and, read as a staircase, a north/east
//! lattice path. Generalized compositions stand for infinite sequences with
//! a tail of zeros, so equality and hashing ignore trailing zeros.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parses the comma-separated text format shared by both composition types.
/// `-` spells the empty list.
fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "-" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::Parse("empty input (use \"-\" for the empty composition)".into()));
    }
    s.split(',')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid part {tok:?} in {s:?}")));
            }
            tok.parse::<u32>()
                .map_err(|e| Error::Parse(format!("invalid part {tok:?}: {e}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// An ordered list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Domain(format!(
                "composition part {} is zero; parts must be positive",
                pos + 1
            )));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `α₁, α₁+α₂, …`, excluding the total.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`] at degree `d`.
    pub fn from_subset(set: &BTreeSet<u32>, d: u32) -> Result<Self> {
        if d == 0 {
            if set.is_empty() {
                return Ok(Composition::empty());
            }
            return Err(Error::Domain("degree 0 admits only the empty subset".into()));
        }
        if let Some(&bad) = set.iter().find(|&&a| a == 0 || a >= d) {
            return Err(Error::Domain(format!("subset element {bad} outside {{1,…,{}}}", d - 1)));
        }
        let mut prev = 0;
        let mut parts = Vec::with_capacity(set.len() + 1);
        for &a in set.iter().chain(std::iter::once(&d)) {
            parts.push(a - prev);
            prev = a;
        }
        Ok(Composition(parts))
    }

    /// `self ≼ other`: same degree and `D(other) ⊆ D(self)`.
    pub fn refines(&self, other: &Composition) -> bool {
        self.degree() == other.degree() && other.descent_set().is_subset(&self.descent_set())
    }

    /// Every composition refining `self`, ordered by their descent sets
    /// (as bit masks), starting with `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let d = self.degree();
        if d == 0 {
            return vec![Composition::empty()];
        }
        let fixed = self.descent_set();
        let free: Vec<u32> = (1..d).filter(|i| !fixed.contains(i)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = fixed.clone();
            for (bit, &i) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    set.insert(i);
                }
            }
            out.push(Composition::from_subset(&set, d).expect("subset within range"));
        }
        out
    }

    /// All compositions of `d`, in lexicographic order of their parts.
    pub fn all_of_degree(d: u32) -> Vec<Composition> {
        fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), &mut out);
        out
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn to_gen(&self) -> GenComposition {
        GenComposition(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A finite list of nonnegative parts standing for the sequence padded with
/// zeros. The stored length is kept (it is a window size for monomials), but
/// `==` and `Hash` compare the zero-stripped parts.
#[derive(Clone, Debug, Default)]
pub struct GenComposition(Vec<u32>);

impl GenComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        GenComposition(parts)
    }

    pub fn zeros(len: usize) -> Self {
        GenComposition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Parts up to and including the last nonzero one.
    pub fn stripped(&self) -> &[u32] {
        let end = self.0.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Explicit length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the stripped parts contain no zero.
    pub fn is_standard(&self) -> bool {
        !self.stripped().contains(&0)
    }

    /// The stripped parts as a standard composition, if there is no internal zero.
    pub fn to_composition(&self) -> Option<Composition> {
        self.is_standard().then(|| Composition(self.stripped().to_vec()))
    }

    /// Pads with zeros (or drops trailing zeros) to explicit length `len`.
    pub fn with_len(&self, len: usize) -> Result<GenComposition> {
        let s = self.stripped();
        if s.len() > len {
            return Err(Error::Precondition(format!(
                "generalized composition {self} has {} significant parts, more than {len}",
                s.len()
            )));
        }
        let mut parts = s.to_vec();
        parts.resize(len, 0);
        Ok(GenComposition(parts))
    }

    pub fn concat(&self, other: &GenComposition) -> GenComposition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        GenComposition(parts)
    }

    /// Componentwise `self ≤ other`, with the implicit zero tails.
    pub fn le_componentwise(&self, other: &GenComposition) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|i| self.part(i) <= other.part(i))
    }

    /// The `i`-th part (0-based), zero past the explicit length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Some nonempty prefix `π` has `d(π) − ℓ(π) ≥ e`.
    pub fn reaches_level(&self, e: u32) -> bool {
        let e = e as i64;
        let mut deficit = 0i64;
        for &p in self.stripped() {
            deficit += p as i64 - 1;
            if deficit >= e {
                return true;
            }
        }
        false
    }

    /// The path stays weakly above `y = x − e`, i.e. `x − y ≤ e` at every
    /// lattice point it visits.
    pub fn is_e_catalan(&self, e: u32) -> bool {
        path_points(&self.0).iter().all(|&(x, y)| x as i64 - y as i64 <= e as i64)
    }

    /// Splits the stripped parts as `γ̃ · 0 · a · β` around the last internal
    /// zero, with `a > 0` and `β` standard (possibly empty).
    pub fn factorize_for_recursion(&self) -> Result<(GenComposition, u32, Composition)> {
        let s = self.stripped();
        let zero = s.iter().rposition(|&p| p == 0).ok_or_else(|| {
            Error::Precondition(format!(
                "{self} is standard; the base case applies instead of the recursion"
            ))
        })?;
        // the last stripped part is nonzero, so a zero is never the final entry
        let gamma = GenComposition(s[..zero].to_vec());
        let a = s[zero + 1];
        let beta = Composition(s[zero + 2..].to_vec());
        Ok((gamma, a, beta))
    }

    pub fn render_path(&self) -> PathDiagram {
        PathDiagram::new(self)
    }
}

impl PartialEq for GenComposition {
    fn eq(&self, other: &Self) -> bool {
        self.stripped() == other.stripped()
    }
}

impl Eq for GenComposition {}

impl Hash for GenComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.stripped().hash(state);
    }
}

impl fmt::Display for GenComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for GenComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(GenComposition)
    }
}

impl From<Composition> for GenComposition {
    fn from(c: Composition) -> Self {
        GenComposition(c.0)
    }
}

/// Every lattice point the path visits, one per unit step, starting at the origin.
fn path_points(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut pts = vec![(0, 0)];
    let (mut x, mut y) = (0, 0);
    for &p in parts {
        for _ in 0..p {
            x += 1;
            pts.push((x, y));
        }
        y += 1;
        pts.push((x, y));
    }
    pts
}

/// A north/east staircase: part `i` contributes that many east steps at
/// height `i − 1`, each labelled `x_i`, followed by one north step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDiagram {
    pub points: Vec<(u32, u32)>,
    /// Height of each east step, in path order.
    pub east_heights: Vec<u32>,
    pub text: String,
}

impl PathDiagram {
    fn new(alpha: &GenComposition) -> Self {
        let parts = alpha.parts();
        let points = path_points(parts);
        let east_heights = parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i as u32, p as usize))
            .collect();

        // One cell per unit square: a left-edge character (north step) followed
        // by a body that carries the label when its bottom edge is an east step.
        let width = parts.len().to_string().len() + 2;
        let cols = alpha.degree() as usize + 1;
        let mut lines = Vec::with_capacity(parts.len());
        let mut start = 0usize;
        for (i, &p) in parts.iter().enumerate() {
            let end = start + p as usize;
            let label = format!("x{}", i + 1);
            let mut line = String::new();
            for c in 0..cols {
                line.push(if c == end { '|' } else { ' ' });
                if (start..end).contains(&c) {
                    line.push_str(&format!("{label:_<width$}"));
                } else {
                    line.push_str(&" ".repeat(width));
                }
            }
            lines.push(line.trim_end().to_string());
            start = end;
        }
        lines.reverse();
        let mut text = lines.join("\n");
        text.push('\n');
        PathDiagram { points, east_heights, text }
    }
}

/// Weak compositions of explicit length `len` with degree at most `max_deg`,
/// in ascending lexicographic order.
pub fn weak_compositions(len: usize, max_deg: u32) -> Vec<GenComposition> {
    fn rec(len: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<GenComposition>) {
        if cur.len() == len {
            out.push(GenComposition(cur.clone()));
            return;
        }
        for p in 0..=budget {
            cur.push(p);
            rec(len, budget - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_deg, &mut Vec::new(), &mut out);
    out
}

/// Compositions (all parts positive) with degree at most `max_deg` and at
/// most `max_len` parts, ordered by degree and then lexicographically. The
/// empty composition is included.
pub fn compositions_up_to(max_deg: u32, max_len: usize) -> Vec<Composition> {
    (0..=max_deg)
        .flat_map(Composition::all_of_degree)
        .filter(|c| c.len() <= max_len)
        .collect()
}

/// All e-Catalan generalized compositions of length `n`, in ascending
/// lexicographic order. A prefix of `k` parts may sum to at most `k − 1 + e`.
pub fn enumerate_e_catalan(n: usize, e: u32) -> Vec<GenComposition> {
    fn rec(n: usize, e: u32, sum: u32, cur: &mut Vec<u32>, out: &mut Vec<GenComposition>) {
        if cur.len() == n {
            out.push(GenComposition(cur.clone()));
            return;
        }
        let k = cur.len() as u32 + 1;
        let cap = k - 1 + e;
        for p in 0..=cap.saturating_sub(sum) {
            cur.push(p);
            rec(n, e, sum + p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, e, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of length-`n` e-Catalan generalized compositions, by a ballot
/// recurrence on the running prefix sum.
pub fn count_e_catalan(n: usize, e: u32) -> BigUint {
    count_e_catalan_by_degree(n, e).into_iter().fold(BigUint::zero(), |a, b| a + b)
}

/// The same count split by degree: entry `d` counts paths with `d` east
/// steps below height `n`. The vector has length `n + e` (top degree
/// `n − 1 + e`), or 1 when `n = 0`.
pub fn count_e_catalan_by_degree(n: usize, e: u32) -> Vec<BigUint> {
    if n == 0 {
        return vec![BigUint::one()];
    }
    let top = n - 1 + e as usize;
    // ways[s] = number of admissible prefixes with sum s
    let mut ways = vec![BigUint::zero(); top + 1];
    ways[0] = BigUint::one();
    for k in 1..=n {
        let cap = k - 1 + e as usize;
        let mut next = vec![BigUint::zero(); top + 1];
        let mut running = BigUint::zero();
        for s in 0..=cap.min(top) {
            running += &ways[s];
            next[s] = running.clone();
        }
        ways = next;
    }
    ways
}

/// `binomial(2n, n) / (n + 1)`.
pub fn catalan_number(n: u64) -> BigUint {
    let mut b = BigUint::one();
    for i in 0..n {
        b = b * (2 * n - i) / (i + 1);
    }
    b / (n + 1)
}
