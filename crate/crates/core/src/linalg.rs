//! Exact reduced row echelon form over sparse rows.
//!
//! Columns are indexed so that a smaller index is a more significant
//! column; the pivot of a row is its smallest nonzero column. Rows are kept
//! monic and fully reduced (no row has a nonzero entry in another row's
//! pivot column), which makes the echelon form canonical for the span.

use crate::scalar::Scalar;

/// A sparse row: `(column, value)` pairs, ascending columns, no zeros.
pub type SparseRow<T> = Vec<(usize, T)>;

#[derive(Clone, Debug)]
pub struct Echelon<T> {
    ncols: usize,
    rows: Vec<SparseRow<T>>,
    pivot_row: Vec<Option<usize>>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    /// The whole space: one unit row per column.
    pub fn identity(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: (0..ncols).map(|c| vec![(c, T::one())]).collect(),
            pivot_row: (0..ncols).map(Some).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduces `row` against the current basis. The result has no entry in
    /// any pivot column; it is empty iff `row` lies in the span.
    pub fn reduce(&self, row: &[(usize, T)]) -> SparseRow<T> {
        let mut dense: Vec<T> = vec![T::zero(); self.ncols];
        for (c, v) in row {
            dense[*c] = v.clone();
        }
        // Basis rows vanish on each other's pivots, so the original entries
        // of `row` at pivot columns are the exact multipliers.
        for (c, v) in row {
            if let Some(r) = self.pivot_row[*c] {
                for (cc, w) in &self.rows[r] {
                    dense[*cc] = dense[*cc].clone() - v.clone() * w.clone();
                }
            }
        }
        dense.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn contains(&self, row: &[(usize, T)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row` to the span. Returns false when it was already dependent.
    pub fn insert(&mut self, row: &[(usize, T)]) -> bool {
        if self.is_full() {
            return false;
        }
        let mut rem = self.reduce(row);
        if rem.is_empty() {
            return false;
        }
        let (pivot, lead) = rem[0].clone();
        let inv = T::one() / lead;
        for (_, v) in rem.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for existing in self.rows.iter_mut() {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = existing[pos].1.clone();
                *existing = axpy(existing, &factor, &rem);
            }
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(rem);
        true
    }

    /// Rows sorted by pivot column.
    pub fn rows_by_pivot(&self) -> Vec<&SparseRow<T>> {
        self.pivot_row.iter().flatten().map(|&r| &self.rows[r]).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// A basis of `{v : row · v = 0 for every row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<SparseRow<T>> {
        (0..self.ncols)
            .filter(|&f| self.pivot_row[f].is_none())
            .map(|f| {
                let mut v: SparseRow<T> = vec![(f, T::one())];
                for (p, r) in self.pivot_row.iter().enumerate() {
                    if let Some(r) = r {
                        if let Ok(pos) = self.rows[*r].binary_search_by_key(&f, |(c, _)| *c) {
                            v.push((p, -self.rows[*r][pos].1.clone()));
                        }
                    }
                }
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// `a − factor · b` on sorted sparse rows.
fn axpy<T: Scalar>(a: &[(usize, T)], factor: &T, b: &[(usize, T)]) -> SparseRow<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(factor.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
