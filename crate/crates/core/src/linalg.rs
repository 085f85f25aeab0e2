//! Dense and sparse exact linear algebra over a [`Field`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: F::Ctx) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![F::zero(ctx); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m[(i, i)] = F::one(ctx);
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<F>>, ctx: F::Ctx) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            ctx,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>], rows: usize, ctx: F::Ctx) -> Self {
        let mut m = Self::zeros(rows, cols.len(), ctx);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols, self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let cell = &mut out[(i, j)];
                        *cell = cell.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, F::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, F::sub)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows, self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        *v == F::one(self.ctx)
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        (0..self.rows).fold(F::zero(self.ctx), |acc, i| acc.add(&self[(i, i)]))
    }

    /// Reduced row echelon form and the pivot columns. Pivots are chosen as
    /// the first nonzero entry of each column, scanning rows top-down.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = m[(i, j)].sub(&factor.mul(&m[(r, j)]));
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `self · x = b`, returning `None` when `b` is outside the column
    /// space. Free variables are set to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        self.solve_columns(&[b.to_vec()])
            .ok()
            .map(|mut x| x.remove(0))
    }

    /// Solves `self · X = B` column by column. On failure returns the index
    /// of the first right-hand side outside the column space.
    pub fn solve_columns(&self, rhs: &[Vec<F>]) -> core::result::Result<Vec<Vec<F>>, usize> {
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + rhs.len(), self.ctx);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for (k, b) in rhs.iter().enumerate() {
                assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
                aug[(i, n + k)] = b[i].clone();
            }
        }
        let (red, pivots) = aug.rref();
        if let Some(&p) = pivots.iter().find(|&&p| p >= n) {
            return Err(p - n);
        }
        Ok((0..rhs.len())
            .map(|k| {
                let mut x = vec![F::zero(self.ctx); n];
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = red[(row, n + k)].clone();
                }
                x
            })
            .collect())
    }

    /// A basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(self.ctx); self.cols];
                v[f] = F::one(self.ctx);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = red[(row, f)].neg();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = F::one(self.ctx);
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero(self.ctx);
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m[(c, c)].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].mul(&inv);
                for j in c..m.cols {
                    let v = m[(i, j)].sub(&factor.mul(&m[(c, j)]));
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let id: Vec<Vec<F>> = (0..n)
            .map(|j| {
                let mut e = vec![F::zero(self.ctx); n];
                e[j] = F::one(self.ctx);
                e
            })
            .collect();
        if self.rank() < n {
            return None;
        }
        let cols = self.solve_columns(&id).ok()?;
        Some(Self::from_columns(&cols, n, self.ctx))
    }

    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field + Eq> Eq for Matrix<F> {}

impl<F: Field + Ord> PartialOrd for Matrix<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field + Ord> Ord for Matrix<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.data.cmp(&other.data))
    }
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

/// Sparse vector: `(column, value)` pairs, strictly increasing in column,
/// with no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Incrementally maintained reduced row echelon basis of a subspace of Fⁿ,
/// stored sparsely.
///
/// Every row is monic at its pivot and vanishes at every other pivot column,
/// so reducing a vector modulo the span is a single pass.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    ctx: F::Ctx,
    rows: Vec<SparseVec<F>>,
    pivot_row: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize, ctx: F::Ctx) -> Self {
        Echelon {
            ncols,
            ctx,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.pivot_row.values().map(|&r| &self.rows[r])
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec<F>> {
        self.pivot_row.get(&col).map(|&r| &self.rows[r])
    }

    /// The remainder of `v` modulo the span, supported on free columns.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        if !v.iter().any(|(c, _)| self.is_pivot(*c)) {
            return v.clone();
        }
        let mut dense: Vec<Option<F>> = vec![None; self.ncols];
        for (c, x) in v {
            dense[*c] = Some(x.clone());
        }
        for (c, x) in v {
            if let Some(&r) = self.pivot_row.get(c) {
                for (col, y) in &self.rows[r] {
                    let slot = &mut dense[*col];
                    let prod = x.mul(y);
                    *slot = Some(match slot.take() {
                        Some(cur) => cur.sub(&prod),
                        None => prod.neg(),
                    });
                }
            }
        }
        dense
            .into_iter()
            .enumerate()
            .filter_map(|(c, x)| x.filter(|x| !x.is_zero()).map(|x| (c, x)))
            .collect()
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inv();
        let row: SparseVec<F> = r.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
        for existing in &mut self.rows {
            if let Ok(pos) = existing.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = existing[pos].1.clone();
                *existing = axpy(existing, &factor.neg(), &row);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// `x + a·y` for sparse vectors.
pub fn axpy<F: Field>(x: &SparseVec<F>, a: &F, y: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, a.mul(&y[j].1)));
            j += 1;
        } else {
            let v = x[i].1.add(&a.mul(&y[j].1));
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn to_sparse<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

pub fn to_dense<F: Field>(sparse: &SparseVec<F>, len: usize, ctx: F::Ctx) -> Vec<F> {
    let mut v = vec![F::zero(ctx); len];
    for (c, x) in sparse {
        v[*c] = x.clone();
    }
    v
}

/// Rank of a collection of sparse vectors by forward elimination only.
pub fn sparse_rank<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut rows: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
    for mut v in vectors {
        while let Some((lead, x)) = v.first().cloned() {
            match rows.get(&lead) {
                Some(row) => {
                    let factor = x.div(&row[0].1).neg();
                    v = axpy(&v, &factor, row);
                }
                None => {
                    rows.insert(lead, v);
                    break;
                }
            }
        }
    }
    rows.len()
}

/// Trace of a linear map on the subspace spanned by `basis`, where `action`
/// maps each basis vector back into that span.
///
/// Each image is expressed in the basis by an exact solve and the diagonal
/// coordinates are summed.
pub fn invariant_subspace_trace<F: Field>(
    basis: &[Vec<F>],
    ctx: F::Ctx,
    mut action: impl FnMut(&[F]) -> Vec<F>,
) -> Result<F> {
    if basis.is_empty() {
        return Ok(F::zero(ctx));
    }
    let n = basis[0].len();
    let m = Matrix::from_columns(basis, n, ctx);
    if m.rank() < basis.len() {
        return Err(Error::DependentBasis);
    }
    let images: Vec<Vec<F>> = basis.iter().map(|b| action(b)).collect();
    let coords = m
        .solve_columns(&images)
        .map_err(|index| Error::NotStable { index })?;
    Ok(coords
        .iter()
        .enumerate()
        .fold(F::zero(ctx), |acc, (j, x)| acc.add(&x[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclotomic, Rational};

    fn w(k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(3, k)
    }

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(3, n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Cyclotomic>::identity(3, 3).rank(), 3);
        let m = Matrix::from_rows(vec![vec![c(1), w(1)], vec![w(1), w(2)]], 3);
        assert_eq!(m.rank(), 1);
        let v = Matrix::from_rows(
            (0..3).map(|i| (0..3).map(|j| w(i * j)).collect()).collect(),
            3,
        );
        assert_eq!(v.rank(), 3);
        assert!(!v.det().is_zero());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::<Cyclotomic>::identity(2, 3);
        let b = vec![w(1), c(5)];
        assert_eq!(id.solve(&b), Some(b.clone()));
        let m = Matrix::from_rows(vec![vec![c(1)], vec![w(1)]], 3);
        assert_eq!(m.solve(&[c(2), &c(2) * &w(1)]), Some(vec![c(2)]));
        let m = Matrix::from_rows(vec![vec![c(1)], vec![c(0)]], 3);
        assert_eq!(m.solve(&[c(0), c(1)]), None);
    }

    #[test]
    fn det_inverse_nullspace() {
        let m = Matrix::from_rows(
            vec![
                vec![Rational::from(2), Rational::from(1)],
                vec![Rational::from(4), Rational::from(3)],
            ],
            (),
        );
        assert_eq!(m.det(), Rational::from(2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_rows(
            vec![
                vec![Rational::from(1), Rational::from(2), Rational::from(3)],
                vec![Rational::from(2), Rational::from(4), Rational::from(6)],
            ],
            (),
        );
        let ns = sing.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(sing.mul_vec(v).iter().all(Rational::is_zero));
        }
        assert!(sing.transpose().mul(&sing).inverse().is_none());
    }

    #[test]
    fn invariant_trace_examples() {
        // full space under the identity
        let basis: Vec<Vec<Cyclotomic>> = (0..3)
            .map(|i| (0..3).map(|j| c((i == j) as i64)).collect())
            .collect();
        let t = invariant_subspace_trace(&basis, 3, |v| v.to_vec()).unwrap();
        assert_eq!(t, c(3));
        // span{x, y} with each coordinate scaled by ζ₃⁻¹
        let basis = vec![vec![c(1), c(0)], vec![c(0), c(1)]];
        let t = invariant_subspace_trace(&basis, 3, |v| v.iter().map(|x| x * &w(-1)).collect())
            .unwrap();
        assert_eq!(t, &c(2) * &w(2));
        // a line that is not stable
        let basis = vec![vec![c(1), c(0)]];
        let err = invariant_subspace_trace(&basis, 3, |v| vec![v[1].clone(), v[0].clone()]);
        assert_eq!(err, Err(Error::NotStable { index: 0 }));
    }

    #[test]
    fn echelon_reduces_to_complement() {
        let mut e = Echelon::<Rational>::new(3, ());
        let r = |v: &[i64]| to_sparse(&v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>());
        assert!(e.insert(&r(&[1, 1, 0])));
        assert!(e.insert(&r(&[0, 2, 2])));
        assert!(!e.insert(&r(&[1, 3, 2])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_columns(), vec![2]);
        let rem = e.reduce(&r(&[0, 0, 5]));
        assert_eq!(rem, r(&[0, 0, 5]));
        let rem = e.reduce(&r(&[1, 0, 0]));
        assert_eq!(rem, r(&[0, 0, 1]));
        assert_eq!(
            sparse_rank(vec![r(&[1, 1, 0]), r(&[0, 2, 2]), r(&[1, 3, 2])]),
            2
        );
    }
}
