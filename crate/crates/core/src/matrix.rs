//! Sparse matrices over an exact [`Field`], with deterministic
//! Gaussian elimination for ranks and membership tests.
//!
//! Rows are kept as sorted `(column, coefficient)` pairs with no zero
//! entries.  Elimination always picks the surviving row with the
//! smallest leading column (first such row on ties), so ranks are
//! reproducible across runs and fields behave identically up to
//! characteristic.

use crate::field::Field;

#[derive(Debug, Clone)]
pub struct ExactMatrix<F: Field> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> ExactMatrix<F> {
        ExactMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, field: &F, row: usize, col: usize, value: &F::Elem) {
        assert!(row < self.nrows && col < self.ncols, "entry ({row}, {col}) out of bounds");
        if field.is_zero(value) {
            return;
        }
        let entries = &mut self.rows[row];
        match entries.binary_search_by_key(&col, |e| e.0) {
            Ok(k) => {
                let sum = field.add(&entries[k].1, value);
                if field.is_zero(&sum) {
                    entries.remove(k);
                } else {
                    entries[k].1 = sum;
                }
            }
            Err(k) => entries.insert(k, (col, value.clone())),
        }
    }

    pub fn entry(&self, field: &F, row: usize, col: usize) -> F::Elem {
        self.rows[row]
            .binary_search_by_key(&col, |e| e.0)
            .map(|k| self.rows[row][k].1.clone())
            .unwrap_or_else(|_| field.zero())
    }

    pub fn row(&self, row: usize) -> &[(usize, F::Elem)] {
        &self.rows[row]
    }

    pub fn is_zero_row(&self, row: usize) -> bool {
        self.rows[row].is_empty()
    }

    pub fn is_zero_column(&self, col: usize) -> bool {
        self.rows.iter().all(|r| r.binary_search_by_key(&col, |e| e.0).is_err())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Applies the matrix to a dense vector of length `ncols`.
    pub fn apply(&self, field: &F, vec: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(vec.len(), self.ncols, "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = field.zero();
                for (c, v) in row {
                    acc = field.mul_add(&acc, v, &vec[*c]);
                }
                acc
            })
            .collect()
    }

    /// The composite `self · other` (apply `other` first).
    pub fn compose(&self, field: &F, other: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!(self.ncols, other.nrows, "composition shape mismatch");
        let mut out = ExactMatrix::zero(self.nrows, other.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            for (mid, v) in row {
                for (c, w) in &other.rows[*mid] {
                    let prod = field.mul(v, w);
                    out.add_to(field, r, *c, &prod);
                }
            }
        }
        out
    }

    pub fn rank(&self, field: &F) -> usize {
        self.rank_of_rows(field, self.rows.clone())
    }

    /// Whether the dense vector (length `nrows`) lies in the span of
    /// the matrix's columns, i.e. in the image of the linear map the
    /// matrix represents.
    pub fn in_image(&self, field: &F, target: &[F::Elem]) -> bool {
        assert_eq!(target.len(), self.nrows, "target length mismatch");
        let mut augmented = self.rows.clone();
        for (r, value) in target.iter().enumerate() {
            if !field.is_zero(value) {
                augmented[r].push((self.ncols, value.clone()));
            }
        }
        self.rank(field) == self.rank_of_rows(field, augmented)
    }

    fn rank_of_rows(&self, field: &F, rows: Vec<Vec<(usize, F::Elem)>>) -> usize {
        let mut work: Vec<Vec<(usize, F::Elem)>> =
            rows.into_iter().filter(|r| !r.is_empty()).collect();
        let mut rank = 0;
        while !work.is_empty() {
            let lead = |r: &Vec<(usize, F::Elem)>| r[0].0;
            let min_lead = work.iter().map(lead).min().expect("work is non-empty");
            let pivot_at = work.iter().position(|r| lead(r) == min_lead).unwrap();
            let pivot = work.remove(pivot_at);
            rank += 1;
            let scale = field.inv(&pivot[0].1);
            let pivot: Vec<(usize, F::Elem)> =
                pivot.iter().map(|(c, v)| (*c, field.mul(v, &scale))).collect();
            work = work
                .into_iter()
                .filter_map(|row| {
                    if row[0].0 != min_lead {
                        return Some(row);
                    }
                    let factor = field.neg(&row[0].1);
                    let combined = row_axpy(field, &row, &factor, &pivot);
                    if combined.is_empty() {
                        None
                    } else {
                        Some(combined)
                    }
                })
                .collect();
        }
        rank
    }
}

/// `target + factor · source` on sorted sparse rows, dropping zeros.
fn row_axpy<F: Field>(
    field: &F,
    target: &[(usize, F::Elem)],
    factor: &F::Elem,
    source: &[(usize, F::Elem)],
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let next_t = target.get(i).map(|e| e.0);
        let next_s = source.get(j).map(|e| e.0);
        match (next_t, next_s) {
            (Some(ct), Some(cs)) if ct == cs => {
                let v = field.mul_add(&target[i].1, factor, &source[j].1);
                if !field.is_zero(&v) {
                    out.push((ct, v));
                }
                i += 1;
                j += 1;
            }
            (Some(ct), Some(cs)) if ct < cs => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                let v = field.mul(factor, &source[j].1);
                if !field.is_zero(&v) {
                    out.push((source[j].0, v));
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(target[i].clone());
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn dense<F: Field>(field: &F, entries: &[&[i64]]) -> ExactMatrix<F> {
        let nrows = entries.len();
        let ncols = entries.first().map_or(0, |r| r.len());
        let mut m = ExactMatrix::zero(nrows, ncols);
        for (r, row) in entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.add_to(field, r, c, &field.from_i64(v));
            }
        }
        m
    }

    #[test]
    fn rank_examples() {
        let f = Rationals;
        assert_eq!(dense(&f, &[&[1, 2], &[2, 4]]).rank(&f), 1);
        assert_eq!(dense(&f, &[&[1, 2], &[3, 4]]).rank(&f), 2);
        assert_eq!(dense(&f, &[&[0, 0], &[0, 0]]).rank(&f), 0);
        let m = dense(&f, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(&f), 2);
        // Same matrix over a prime field that does not divide the
        // relevant minors.
        let g = PrimeField::new(101).unwrap();
        let m = dense(&g, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(&g), 2);
        // Characteristic can drop the rank: det [[1,2],[3,4]] = -2.
        let h = PrimeField::new(2).unwrap();
        assert_eq!(dense(&h, &[&[1, 2], &[3, 4]]).rank(&h), 1);
    }

    #[test]
    fn rank_is_insensitive_to_fractions() {
        let f = Rationals;
        let mut m = ExactMatrix::zero(2, 2);
        let third = f.inv(&f.from_i64(3));
        m.add_to(&f, 0, 0, &third);
        m.add_to(&f, 0, 1, &f.from_i64(1));
        m.add_to(&f, 1, 0, &f.from_i64(1));
        m.add_to(&f, 1, 1, &f.from_i64(3));
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn accumulation_cancels() {
        let f = Rationals;
        let mut m = ExactMatrix::zero(1, 1);
        m.add_to(&f, 0, 0, &f.from_i64(5));
        m.add_to(&f, 0, 0, &f.from_i64(-5));
        assert!(m.is_zero());
        assert!(m.is_zero_row(0));
        assert!(m.is_zero_column(0));
    }

    #[test]
    fn image_membership() {
        let f = Rationals;
        // Columns (1,0,1) and (0,1,1) span the plane z = x + y.
        let m = dense(&f, &[&[1, 0], &[0, 1], &[1, 1]]);
        let yes = vec![f.from_i64(2), f.from_i64(3), f.from_i64(5)];
        let no = vec![f.from_i64(1), f.from_i64(1), f.from_i64(3)];
        assert!(m.in_image(&f, &yes));
        assert!(!m.in_image(&f, &no));
        let zero = vec![f.zero(), f.zero(), f.zero()];
        assert!(m.in_image(&f, &zero));
    }

    #[test]
    fn apply_and_compose() {
        let f = Rationals;
        let a = dense(&f, &[&[1, 2], &[3, 4]]);
        let v = vec![f.from_i64(5), f.from_i64(6)];
        let av = a.apply(&f, &v);
        assert_eq!(av, vec![f.from_i64(17), f.from_i64(39)]);
        let b = dense(&f, &[&[0, 1], &[1, 0]]);
        let ab = a.compose(&f, &b);
        assert_eq!(ab.entry(&f, 0, 0), f.from_i64(2));
        assert_eq!(ab.entry(&f, 0, 1), f.from_i64(1));
        assert_eq!(ab.entry(&f, 1, 0), f.from_i64(4));
        assert_eq!(ab.entry(&f, 1, 1), f.from_i64(3));
        // A composable pair that annihilates: projection then inclusion
        // of complementary coordinates.
        let p = dense(&f, &[&[1, 0]]);
        let q = dense(&f, &[&[0], &[1]]);
        assert!(p.compose(&f, &q).is_zero());
    }
}
