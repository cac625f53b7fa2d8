//! Integer matrices, Smith normal form over `Z`, and linear congruence systems.
//!
//! Generic over the signed machine integer used for entries. All arithmetic is
//! checked; overflow surfaces as [`LinAlgError::Overflow`].

use num_integer::Integer;
use num_traits::{PrimInt, Signed};
use thiserror::Error;

/// Entry type for [`IntMatrix`].
pub trait IntScalar: PrimInt + Signed + Integer + std::fmt::Debug {}

impl<T: PrimInt + Signed + Integer + std::fmt::Debug> IntScalar for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("integer overflow during elimination")]
    Overflow,
    #[error("modulus must be positive")]
    BadModulus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> IntMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for l in 0..self.cols {
                    let term = self[(i, l)].checked_mul(&other[(l, j)]).ok_or(LinAlgError::Overflow)?;
                    acc = acc.checked_add(&term).ok_or(LinAlgError::Overflow)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        (0..self.rows)
            .map(|i| {
                (0..self.cols).try_fold(T::zero(), |acc, l| {
                    let term = self[(i, l)].checked_mul(&v[l]).ok_or(LinAlgError::Overflow)?;
                    acc.checked_add(&term).ok_or(LinAlgError::Overflow)
                })
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] -= factor * row[source]`
    fn row_axpy(&mut self, target: usize, source: usize, factor: T) -> Result<(), LinAlgError> {
        for j in 0..self.cols {
            let delta = self[(source, j)].checked_mul(&factor).ok_or(LinAlgError::Overflow)?;
            self[(target, j)] = self[(target, j)].checked_sub(&delta).ok_or(LinAlgError::Overflow)?;
        }
        Ok(())
    }

    /// `col[target] -= factor * col[source]`
    fn col_axpy(&mut self, target: usize, source: usize, factor: T) -> Result<(), LinAlgError> {
        for i in 0..self.rows {
            let delta = self[(i, source)].checked_mul(&factor).ok_or(LinAlgError::Overflow)?;
            self[(i, target)] = self[(i, target)].checked_sub(&delta).ok_or(LinAlgError::Overflow)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for IntMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for IntMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, `d[i] | d[i+1]`.
#[derive(Debug, Clone)]
pub struct SmithForm<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub v: IntMatrix<T>,
    pub rank: usize,
}

impl<T: IntScalar> SmithForm<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)]).collect()
    }
}

/// Smith normal form over the integers using row/column swaps, integer row and
/// column combinations, and sign flips only.
pub fn smith_normal_form<T: IntScalar>(a: &IntMatrix<T>) -> Result<SmithForm<T>, LinAlgError> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut rank = 0;

    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize, T)> = None;
            for i in t..m {
                for j in t..n {
                    let e = d[(i, j)].abs();
                    if !e.is_zero() && best.is_none_or(|(_, _, b)| e < b) {
                        best = Some((i, j, e));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return Ok(SmithForm { u, d, v, rank });
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)] / pivot;
                if !q.is_zero() {
                    d.row_axpy(i, t, q)?;
                    u.row_axpy(i, t, q)?;
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)] / pivot;
                if !q.is_zero() {
                    d.col_axpy(j, t, q)?;
                    v.col_axpy(j, t, q)?;
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offending = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(d[(i, j)] % pivot).is_zero()));
            match offending {
                Some(i) => {
                    d.row_axpy(t, i, -T::one())?;
                    u.row_axpy(t, i, -T::one())?;
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank = t + 1;
    }
    Ok(SmithForm { u, d, v, rank })
}

/// Some `x` with `a x = v (mod modulus)`, entries in `[0, modulus)`, or `None`.
pub fn solve_linear_mod<T: IntScalar>(
    a: &IntMatrix<T>,
    v: &[T],
    modulus: T,
) -> Result<Option<Vec<T>>, LinAlgError> {
    if modulus <= T::zero() {
        return Err(LinAlgError::BadModulus);
    }
    if v.len() != a.rows {
        return Err(LinAlgError::DimensionMismatch(format!(
            "{} right-hand entries for {} equations",
            v.len(),
            a.rows
        )));
    }
    let snf = smith_normal_form(a)?;
    let rhs: Vec<T> = snf.u.mul_vec(v)?.into_iter().map(|e| e.mod_floor(&modulus)).collect();

    let mut y = vec![T::zero(); a.cols];
    for (i, &w) in rhs.iter().enumerate() {
        if i < snf.rank {
            let di = snf.d[(i, i)].mod_floor(&modulus);
            match solve_scalar_congruence(di, w, modulus) {
                Some(s) => y[i] = s,
                None => return Ok(None),
            }
        } else if !w.is_zero() {
            return Ok(None);
        }
    }
    let x: Vec<T> = snf.v.mul_vec(&y)?.into_iter().map(|e| e.mod_floor(&modulus)).collect();
    debug_assert!(a
        .mul_vec(&x)
        .map(|ax| ax.iter().zip(v).all(|(l, r)| (*l - *r).mod_floor(&modulus).is_zero()))
        .unwrap_or(true));
    Ok(Some(x))
}

/// Least `s` in `[0, modulus)` with `coeff * s = target (mod modulus)`.
pub fn solve_scalar_congruence<T: IntScalar>(coeff: T, target: T, modulus: T) -> Option<T> {
    let coeff = coeff.mod_floor(&modulus);
    let target = target.mod_floor(&modulus);
    let g = coeff.gcd(&modulus);
    if !(target % g).is_zero() {
        return None;
    }
    let reduced_mod = modulus / g;
    if reduced_mod.is_one() {
        return Some(T::zero());
    }
    let inv = (coeff / g).extended_gcd(&reduced_mod).x.mod_floor(&reduced_mod);
    let t = (target / g).mod_floor(&reduced_mod);
    // Both factors are below reduced_mod, which is at most the modulus.
    let prod = inv.checked_mul(&t)?;
    Some(prod.mod_floor(&reduced_mod))
}
