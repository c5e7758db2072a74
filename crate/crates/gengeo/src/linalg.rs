//! Exact linear algebra over rational-function scalars.
//!
//! Elimination runs over the function field with full pivoting under a fixed
//! deterministic rule: among the eligible nonzero entries, pick the one whose
//! numerator has the smallest total degree, breaking ties by column and then
//! row index. This keeps expression swell down and makes every reduction,
//! kernel basis and inverse reproducible.

use std::fmt;

use crate::symbolic::Scalar;

/// A dense matrix of scalars, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct SMat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl SMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SMat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        SMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        SMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> SMat {
        SMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> SMat {
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn add(&self, other: &SMat) -> SMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SMat) -> SMat {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> SMat {
        SMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &SMat) -> SMat {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        SMat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix/vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// First nonzero entry in row-major order, for failure witnesses.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Scalar)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let s = self.get(i, j);
                if !s.is_zero() {
                    return Some((i, j, s));
                }
            }
        }
        None
    }

    /// Outer product `col · rowᵀ`.
    pub fn outer(col: &[Scalar], row: &[Scalar]) -> SMat {
        SMat::from_fn(col.len(), row.len(), |i, j| col[i].mul(&row[j]))
    }
}

impl fmt::Display for SMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss–Jordan reduction: the reduced matrix plus the pivot
/// positions in selection order.
pub struct Reduction {
    pub mat: SMat,
    pub pivots: Vec<(usize, usize)>,
}

/// Gauss–Jordan reduction. Columns at index `pivotable_cols` and beyond are
/// carried along but never chosen as pivots (used for augmented systems).
pub fn row_reduce(input: &SMat, pivotable_cols: usize) -> Reduction {
    let mut m = input.clone();
    let mut used_row = vec![false; m.rows()];
    let mut used_col = vec![false; m.cols()];
    let mut pivots = Vec::new();
    loop {
        // pivot rule: minimal numerator total degree, ties by column, then row
        let mut best: Option<(u32, usize, usize)> = None;
        for j in 0..pivotable_cols.min(m.cols()) {
            if used_col[j] {
                continue;
            }
            for i in 0..m.rows() {
                if used_row[i] {
                    continue;
                }
                let entry = m.get(i, j);
                if entry.is_zero() {
                    continue;
                }
                let deg = entry.numerator().total_degree();
                let cand = (deg, j, i);
                if best.map(|b| cand < b).unwrap_or(true) {
                    best = Some(cand);
                }
            }
        }
        let Some((_, pc, pr)) = best else { break };
        used_row[pr] = true;
        used_col[pc] = true;
        pivots.push((pr, pc));
        let pivot = m.get(pr, pc).clone();
        for i in 0..m.rows() {
            if i == pr {
                continue;
            }
            let entry = m.get(i, pc).clone();
            if entry.is_zero() {
                continue;
            }
            let factor = entry.div(&pivot).expect("pivot is nonzero");
            for j in 0..m.cols() {
                let delta = factor.mul(m.get(pr, j));
                let val = m.get(i, j).sub(&delta);
                m.set(i, j, val);
            }
        }
    }
    Reduction { mat: m, pivots }
}

pub fn rank(m: &SMat) -> usize {
    row_reduce(m, m.cols()).pivots.len()
}

/// Basis of the right kernel `{x : Mx = 0}`, one vector per free column.
pub fn kernel_basis(m: &SMat) -> Vec<Vec<Scalar>> {
    let red = row_reduce(m, m.cols());
    let pivot_cols: Vec<usize> = red.pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for f in 0..m.cols() {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut x = vec![Scalar::zero(); m.cols()];
        x[f] = Scalar::one();
        for &(r, c) in &red.pivots {
            let num = red.mat.get(r, f);
            if num.is_zero() {
                continue;
            }
            x[c] = num.div(red.mat.get(r, c)).expect("pivot nonzero").neg();
        }
        out.push(x);
    }
    out
}

/// Outcome of solving `A c = rhs` over the function field. When the system
/// is inconsistent, `coeffs` holds the pivot-column solution with free
/// columns zeroed and `residual = rhs − A·coeffs` is the nonzero leftover.
pub enum SolveOutcome {
    Solution(Vec<Scalar>),
    Inconsistent {
        coeffs: Vec<Scalar>,
        residual: Vec<Scalar>,
    },
}

pub fn solve(a: &SMat, rhs: &[Scalar]) -> SolveOutcome {
    assert_eq!(a.rows(), rhs.len(), "rhs length mismatch");
    let aug = SMat::from_fn(a.rows(), a.cols() + 1, |i, j| {
        if j < a.cols() {
            a.get(i, j).clone()
        } else {
            rhs[i].clone()
        }
    });
    let red = row_reduce(&aug, a.cols());
    let mut coeffs = vec![Scalar::zero(); a.cols()];
    for &(r, c) in &red.pivots {
        coeffs[c] = red
            .mat
            .get(r, a.cols())
            .div(red.mat.get(r, c))
            .expect("pivot nonzero");
    }
    let image = a.mul_vec(&coeffs);
    let residual: Vec<Scalar> = rhs.iter().zip(&image).map(|(b, ax)| b.sub(ax)).collect();
    if residual.iter().all(Scalar::is_zero) {
        SolveOutcome::Solution(coeffs)
    } else {
        SolveOutcome::Inconsistent { coeffs, residual }
    }
}

/// Exact determinant: the signed product of the pivots of a full reduction.
pub fn det(m: &SMat) -> Scalar {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let red = row_reduce(m, m.cols());
    if red.pivots.len() < m.rows() {
        return Scalar::zero();
    }
    let mut value = Scalar::one();
    for &(r, c) in &red.pivots {
        value = value.mul(red.mat.get(r, c));
    }
    // parity of the permutation sending pivot columns to pivot rows
    let mut perm: Vec<usize> = vec![0; m.rows()];
    for &(r, c) in &red.pivots {
        perm[c] = r;
    }
    if permutation_parity(&perm) {
        value = value.neg();
    }
    value
}

fn permutation_parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Exact inverse, `None` when the matrix is singular over the function field.
pub fn inverse(m: &SMat) -> Option<SMat> {
    assert_eq!(m.rows(), m.cols(), "inverse of non-square matrix");
    let n = m.rows();
    let aug = SMat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let red = row_reduce(&aug, n);
    if red.pivots.len() < n {
        return None;
    }
    let mut inv = SMat::zero(n, n);
    for &(r, c) in &red.pivots {
        let pivot = red.mat.get(r, c).clone();
        for k in 0..n {
            let v = red.mat.get(r, n + k).div(&pivot).expect("pivot nonzero");
            inv.set(c, k, v);
        }
    }
    Some(inv)
}
