//! Exact linear algebra over the rationals: sparse operator matrices
//! (generator actions are very sparse) plus dense elimination for rank,
//! nullspace and determinant questions.

use std::collections::BTreeMap;
use std::ops::Range;

use num::{One, Signed, Zero};

use crate::numeric::{Int, Rat};

/// Sparse matrix with exact rational entries, keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rat::one());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rat) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rat {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_assign_at(&mut self, row: usize, col: usize, value: &Rat) {
        if value.is_zero() {
            return;
        }
        let entry = self.entries.entry((row, col)).or_insert_with(Rat::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    fn row_range(&self, row: usize) -> Range<(usize, usize)> {
        (row, 0)..(row + 1, 0)
    }

    pub fn scale(&self, factor: &Rat) -> SparseMat {
        if factor.is_zero() {
            return SparseMat::zero(self.rows, self.cols);
        }
        let entries = self
            .entries
            .iter()
            .map(|(&k, v)| (k, v * factor))
            .collect();
        SparseMat {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&k, v) in &other.entries {
            out.add_assign_at(k.0, k.1, v);
        }
        out
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = SparseMat::zero(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range(other.row_range(k)) {
                out.add_assign_at(i, j, &(a * b));
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; the row/column index of `(i, j)` is `i * other.dim + j`.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.rows * other.rows, self.cols * other.cols);
        for (&(i, j), a) in &self.entries {
            for (&(p, q), b) in &other.entries {
                out.entries
                    .insert((i * other.rows + p, j * other.cols + q), a * b);
            }
        }
        out
    }

    /// Applies the matrix to a dense column vector.
    pub fn apply(&self, vec: &[Rat]) -> Vec<Rat> {
        assert_eq!(vec.len(), self.cols);
        let mut out = vec![Rat::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !vec[j].is_zero() {
                out[i] += a * &vec[j];
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut out = vec![vec![Rat::zero(); self.cols]; self.rows];
        for (&(i, j), a) in &self.entries {
            out[i][j] = a.clone();
        }
        out
    }
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Rows are normalized so every pivot is 1.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone().recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &rows[r][j] * &f;
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of the right nullspace `{x : M x = 0}` of the matrix with the given
/// rows, each of length `ncols`. The basis is deterministic: one vector per
/// free column, with a 1 in that column.
pub fn nullspace(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for f in 0..ncols {
        if pivot_set.contains(&f) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Incrementally maintained row space with reduced pivots, for span
/// saturation and membership queries.
#[derive(Clone, Debug)]
pub struct RowBasis {
    ncols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.ncols {
                    if !row[j].is_zero() {
                        let delta = &row[j] * &f;
                        v[j] -= delta;
                    }
                }
            }
        }
    }

    /// Inserts `v` if it is independent of the current span; returns true if
    /// the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].clone().recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Keep earlier rows reduced against the new pivot.
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in 0..self.ncols {
                    let delta = &v[j] * &f;
                    row[j] -= delta;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }
}

/// Exact determinant of an integer matrix by fraction-free (Bareiss)
/// elimination: every division performed is exact in the integers.
pub fn bareiss_det(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Cofactor-expansion determinant, exponential time. Kept as an independent
/// cross-check for the elimination route on small matrices.
pub fn cofactor_det(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Int::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Int>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Dimension of the intersection of `span(rows)` with the coordinate subspace
/// supported on `keep`: the nullity of the projection onto the complement.
pub fn span_intersect_coords_dim(rows: &[Vec<Rat>], ncols: usize, keep: &[bool]) -> usize {
    assert_eq!(keep.len(), ncols);
    let projected: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .zip(keep)
                .filter(|(_, &k)| !k)
                .map(|(x, _)| x.clone())
                .collect()
        })
        .collect();
    rows.len() - rank(projected)
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{frac, int, rat};

    fn mat(rows: Vec<Vec<i64>>) -> Vec<Vec<Rat>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(rat).collect())
            .collect()
    }

    #[test]
    fn rref_and_rank() {
        let m = mat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(m), 2);
    }

    #[test]
    fn nullspace_solves() {
        let rows = mat(vec![vec![1, 2, 3], vec![0, 1, 1]]);
        let basis = nullspace(rows.clone(), 3);
        assert_eq!(basis.len(), 1);
        for r in &rows {
            let dot: Rat = r
                .iter()
                .zip(&basis[0])
                .map(|(a, b)| a * b)
                .fold(Rat::zero(), |acc, x| acc + x);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![int(2), int(-1), int(3)],
            vec![int(0), int(5), int(1)],
            vec![int(4), int(2), int(-2)],
        ];
        assert_eq!(bareiss_det(m.clone()), cofactor_det(&m));
        let singular = vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
        ];
        assert_eq!(bareiss_det(singular), int(0));
    }

    #[test]
    fn row_basis_membership() {
        let mut b = RowBasis::new(3);
        assert!(b.insert(vec![rat(1), rat(0), rat(1)]));
        assert!(b.insert(vec![rat(0), rat(1), rat(1)]));
        assert!(!b.insert(vec![rat(1), rat(1), rat(2)]));
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&[rat(2), frac(1, 2), frac(5, 2)]));
        assert!(!b.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn sparse_matrix_algebra() {
        let mut a = SparseMat::zero(2, 2);
        a.set(0, 1, rat(1));
        let mut b = SparseMat::zero(2, 2);
        b.set(1, 0, rat(1));
        let h = a.commutator(&b);
        assert_eq!(h.get(0, 0), rat(1));
        assert_eq!(h.get(1, 1), rat(-1));
        let k = a.kron(&SparseMat::identity(2));
        assert_eq!(k.nrows(), 4);
        assert_eq!(k.get(0, 2), rat(1));
        assert_eq!(k.get(1, 3), rat(1));
    }
}
