//! Dense integer matrices with exact fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, size, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from row vectors; all rows must have the same length.
    pub fn from_rows<R, C>(rows: impl IntoIterator<Item = R>) -> Result<Self>
    where
        R: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut data = Vec::new();
        let mut nrows = 0;
        let mut ncols = None;
        for row in rows {
            let before = data.len();
            data.extend(row.into_iter().map(Into::into));
            let len = data.len() - before;
            match ncols {
                None => ncols = Some(len),
                Some(c) if c != len => {
                    return Err(Error::DimensionMismatch(format!(
                        "row {nrows} has {len} entries, expected {c}"
                    )))
                }
                _ => {}
            }
            nrows += 1;
        }
        Ok(Self {
            rows: nrows,
            cols: ncols.unwrap_or(0),
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Upper-left `rows x cols` block.
    pub fn upper_left(&self, rows: usize, cols: usize) -> Option<Self> {
        if rows > self.rows || cols > self.cols {
            return None;
        }
        Some(Self::from_fn(rows, cols, |i, j| self.get(i, j).clone()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|j| v.iter().enumerate().map(|(i, x)| x * self.get(i, j)).sum())
            .collect())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let mut work = self.clone();
        let elim = work.bareiss_forward(self.cols);
        Ok(elim.det(&work))
    }

    /// Determinant and adjugate, from fraction-free Gauss-Jordan on `[A | I]`.
    pub fn det_and_adjugate(&self) -> Result<(BigInt, Self)> {
        self.require_square()?;
        let size = self.rows;
        if size == 0 {
            return Ok((BigInt::one(), Self::zeros(0, 0)));
        }
        let mut aug = Self::from_fn(size, 2 * size, |i, j| {
            if j < size {
                self.get(i, j).clone()
            } else if j - size == i {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let elim = aug.bareiss_forward(size);
        let det = elim.det(&aug);
        if det.is_zero() {
            return Ok((det, Self::zeros(size, size)));
        }
        // After the forward pass the left block U is upper triangular with
        // U X = d B for d = U[last][last]; X = d A^-1 is integral, so every
        // division below is exact.
        let d = aug.get(size - 1, size - 1).clone();
        let mut x = Self::zeros(size, size);
        for i in (0..size).rev() {
            let pivot = aug.get(i, i).clone();
            for c in 0..size {
                let mut acc = &d * aug.get(i, size + c);
                for j in i + 1..size {
                    acc -= aug.get(i, j) * x.get(j, c);
                }
                let (q, r) = acc.div_rem(&pivot);
                debug_assert!(r.is_zero(), "inexact back substitution");
                x.set(i, c, q);
            }
        }
        // x = d * A^-1 and adj(A) = det * A^-1, with d = ±det.
        let adj = if d == det {
            x
        } else {
            Self::from_fn(size, size, |i, j| -x.get(i, j))
        };
        Ok((det, adj))
    }

    /// One-step Bareiss elimination on the first `pivot_cols` columns with
    /// row pivoting. Each entry stays an exact minor of the input.
    fn bareiss_forward(&mut self, pivot_cols: usize) -> Elimination {
        let size = self.rows.min(pivot_cols);
        let mut prev = BigInt::one();
        let mut swaps = 0usize;
        for k in 0..size {
            let Some(p) = (k..self.rows).find(|&r| !self.get(r, k).is_zero()) else {
                return Elimination { swaps, singular: true };
            };
            if p != k {
                self.swap_rows(p, k);
                swaps += 1;
            }
            let pivot = self.get(k, k).clone();
            for i in k + 1..self.rows {
                let lead = self.get(i, k).clone();
                for j in k + 1..self.cols {
                    let num = &pivot * self.get(i, j) - &lead * self.get(k, j);
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "inexact Bareiss division");
                    self.set(i, j, q);
                }
                self.set(i, k, BigInt::zero());
            }
            prev = pivot;
        }
        Elimination {
            swaps,
            singular: false,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

struct Elimination {
    swaps: usize,
    singular: bool,
}

impl Elimination {
    fn det(&self, reduced: &IntMatrix) -> BigInt {
        let size = reduced.rows;
        if self.singular {
            return BigInt::zero();
        }
        if size == 0 {
            return BigInt::one();
        }
        let last = reduced.get(size - 1, size - 1).clone();
        if self.swaps % 2 == 1 {
            -last
        } else {
            last
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())).unwrap()
    }

    fn cofactor_det(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor = IntMatrix::from_fn(n - 1, n - 1, |r, c| {
                    a.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let term = a.get(0, j) * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det().unwrap(), BigInt::from(-2));
        assert_eq!(IntMatrix::identity(7).det().unwrap(), BigInt::one());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), BigInt::zero());
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).det().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0, 3], &[0, 0, 5, 1], &[7, 2, -2, 0], &[1, 1, 1, 1]]);
        assert_eq!(a.det().unwrap(), cofactor_det(&a));
    }

    #[test]
    fn adjugate_identity() {
        let a = m(&[&[2, -1, 0, 3], &[0, 0, 5, 1], &[7, 2, -2, 0], &[1, 1, 1, 1]]);
        let (det, adj) = a.det_and_adjugate().unwrap();
        let scaled = IntMatrix::from_fn(4, 4, |i, j| {
            if i == j {
                det.clone()
            } else {
                BigInt::zero()
            }
        });
        assert_eq!(a.mul(&adj).unwrap(), scaled);
        assert_eq!(adj.mul(&a).unwrap(), scaled);
    }

    #[test]
    fn non_square_is_rejected() {
        let a = IntMatrix::zeros(2, 3);
        assert_eq!(a.det().unwrap_err(), Error::NotSquare { rows: 2, cols: 3 });
        assert!(a.det_and_adjugate().is_err());
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let rows: Vec<Vec<i64>> = vec![vec![1, 2], vec![3]];
        assert!(IntMatrix::from_rows(rows).is_err());
    }
}
