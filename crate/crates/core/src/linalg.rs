//! Exact dense linear algebra over the rationals.
//!
//! Entries are [`Scalar`] (`i64` fractions). Rank, kernel and linear solves all
//! go through one routine: rows are scaled to integers and brought to echelon
//! form by Bareiss' fraction-free elimination, so every intermediate entry is
//! a minor of the input and no rounding or fraction growth occurs. Only the
//! final back-substitution works with fractions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Scalar = Ratio<i64>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * out.cols + c;
                    out.data[idx] += a * rhs.get(k, c);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|r| (0..self.cols).fold(Scalar::zero(), |acc, c| acc + self.get(r, c) * v[c])).collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let ech = Echelon::of(self);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if ech.pivots.contains(&free) {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            ech.back_substitute(&mut x, self.cols);
            basis.push(x);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let augmented =
            Matrix::from_fn(self.rows, self.cols + 1, |r, c| if c < self.cols { self.get(r, c) } else { b[r] });
        let ech = Echelon::of(&augmented);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols + 1];
        x[self.cols] = -Scalar::one();
        ech.back_substitute(&mut x, self.cols);
        x.truncate(self.cols);
        Some(x)
    }

    /// Whether `v` lies in the column space.
    pub fn spans(&self, v: &[Scalar]) -> bool {
        self.solve(v).is_some()
    }
}

/// Fraction-free row echelon form with the pivot column of each nonzero row.
struct Echelon {
    cols: usize,
    data: Vec<i128>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn of(m: &Matrix) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let lcm = (0..cols).fold(1i64, |acc, c| acc.lcm(m.get(r, c).denom()));
            for c in 0..cols {
                let q = m.get(r, c);
                data.push(i128::from(*q.numer()) * i128::from(lcm / q.denom()));
            }
        }

        let mut pivots = Vec::new();
        let mut prev: i128 = 1;
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(p) = (row..rows).find(|&r| data[r * cols + col] != 0) else {
                continue;
            };
            if p != row {
                for c in 0..cols {
                    data.swap(p * cols + c, row * cols + c);
                }
            }
            let pivot = data[row * cols + col];
            for r in row + 1..rows {
                let lead = data[r * cols + col];
                for c in col + 1..cols {
                    let num = pivot * data[r * cols + c] - lead * data[row * cols + c];
                    debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                    data[r * cols + c] = num / prev;
                }
                data[r * cols + col] = 0;
            }
            prev = pivot;
            pivots.push(col);
            row += 1;
        }
        Echelon { cols, data, pivots }
    }

    /// Fills the pivot entries of `x` (indices `< unknowns`) so that every
    /// echelon row is satisfied, given the non-pivot entries already in `x`.
    fn back_substitute(&self, x: &mut [Scalar], unknowns: usize) {
        for (k, &pc) in self.pivots.iter().enumerate().rev() {
            debug_assert!(pc < unknowns);
            let row = &self.data[k * self.cols..(k + 1) * self.cols];
            let mut acc = Scalar::zero();
            for c in pc + 1..x.len() {
                if row[c] != 0 {
                    acc += int(row[c]) * x[c];
                }
            }
            x[pc] = -acc / int(row[pc]);
        }
    }
}

fn int(v: i128) -> Scalar {
    Scalar::from_integer(i64::try_from(v).expect("echelon entry exceeds i64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| Scalar::from_integer(vals[r * cols + c]))
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).rank(), 1);
        assert_eq!(m(3, 3, &[2, 0, 1, 0, 3, 0, 1, 0, 5]).rank(), 3);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        // skipped pivot column in the middle
        assert_eq!(m(3, 4, &[0, 1, 2, 3, 0, 2, 4, 7, 0, 0, 0, 1]).rank(), 2);
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = m(2, 4, &[1, 1, 0, 2, 0, 3, 1, -1]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(2, 2, &[2, 1, 4, 3]);
        let b = [Scalar::from_integer(1), Scalar::from_integer(1)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b.to_vec());
        assert_eq!(x[0], Scalar::new(1, 1));
        assert_eq!(x[1], Scalar::new(-1, 1));

        let singular = m(2, 2, &[1, 1, 1, 1]);
        assert!(singular.solve(&[Scalar::one(), Scalar::zero()]).is_none());
    }

    #[test]
    fn fractional_entries() {
        let a = Matrix::from_fn(2, 2, |r, c| Scalar::new((r + c + 1) as i64, 3));
        assert_eq!(a.rank(), 2);
        let x = a.solve(&[Scalar::one(), Scalar::one()]).unwrap();
        assert_eq!(a.apply(&x), vec![Scalar::one(), Scalar::one()]);
    }

    proptest::proptest! {
        #[test]
        fn rank_nullity(vals in proptest::collection::vec(-3i64..=3, 12)) {
            let a = m(3, 4, &vals);
            let ns = a.nullspace();
            proptest::prop_assert_eq!(a.rank() + ns.len(), 4);
            for v in &ns {
                proptest::prop_assert!(a.apply(v).iter().all(Zero::is_zero));
            }
            // transpose has the same rank
            let t = Matrix::from_fn(4, 3, |r, c| a.get(c, r));
            proptest::prop_assert_eq!(t.rank(), a.rank());
        }
    }
}
