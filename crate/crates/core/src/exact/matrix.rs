use num_traits::{One, Zero};

use super::rational::Rational;
use super::ExactError;

/// Scalar domain for exact elimination: a field presented through the
/// operations Bareiss actually needs. `exact_div` must be exact division
/// (both `Rational` and `Cyclotomic` are fields, so it always is).
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
}

impl Scalar for Rational {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Dense rectangular matrix over one exact scalar domain.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut rows = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            rows.push((0..self.rows).map(|i| self.at(i, j).clone()).collect());
        }
        Self::from_rows(rows)
    }

    /// Rank over the fraction field, by fraction-free (Bareiss) elimination
    /// with first-nonzero pivoting. Deterministic: no pivot heuristics.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (nr, nc) = (self.rows, self.cols);
        let idx = |i: usize, j: usize| i * nc + j;
        let mut prev_pivot: Option<T> = None;
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..nc {
            if pivot_row == nr {
                break;
            }
            let found = (pivot_row..nr).find(|&r| !m[idx(r, col)].is_zero_elem());
            let Some(found) = found else { continue };
            if found != pivot_row {
                for j in 0..nc {
                    m.swap(idx(found, j), idx(pivot_row, j));
                }
            }
            let pivot = m[idx(pivot_row, col)].clone();
            for r in pivot_row + 1..nr {
                let factor = m[idx(r, col)].clone();
                for j in 0..nc {
                    // Sylvester identity keeps this division exact.
                    let mut v = pivot.mul(&m[idx(r, j)]).sub(&factor.mul(&m[idx(pivot_row, j)]));
                    if let Some(p) = &prev_pivot {
                        v = v.exact_div(p);
                    }
                    m[idx(r, j)] = v;
                }
            }
            prev_pivot = Some(pivot);
            pivot_row += 1;
            rank += 1;
        }
        rank
    }

    /// Solves `self * x = b` for square nonsingular `self` by Gaussian
    /// elimination with exact division.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>, ExactError> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut m: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut row: Vec<T> =
                    (0..n).map(|j| self.at(i, j).clone()).collect();
                row.push(b[i].clone());
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero_elem());
            let Some(piv) = piv else {
                return Err(ExactError::SingularMatrix);
            };
            m.swap(col, piv);
            let pivot = m[col][col].clone();
            for j in col..=n {
                m[col][j] = m[col][j].exact_div(&pivot);
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero_elem() {
                    continue;
                }
                let factor = m[r][col].clone();
                for j in col..=n {
                    m[r][j] = m[r][j].sub(&factor.mul(&m[col][j]));
                }
            }
        }
        Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }
}

impl ExactMatrix<Rational> {
    /// Basis of the right nullspace `{ x : self * x = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (nr, nc) = (self.rows, self.cols);
        let mut m: Vec<Vec<Rational>> = (0..nr)
            .map(|i| (0..nc).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..nc {
            if row == nr {
                break;
            }
            let Some(piv) = (row..nr).find(|&r| !m[r][col].is_zero_elem()) else {
                continue;
            };
            m.swap(row, piv);
            let pivot = m[row][col].clone();
            for j in col..nc {
                m[row][j] = &m[row][j] / &pivot;
            }
            for r in 0..nr {
                if r == row || Zero::is_zero(&m[r][col]) {
                    continue;
                }
                let factor = m[r][col].clone();
                for j in col..nc {
                    let delta = &factor * &m[row][j];
                    m[r][j] = &m[r][j] - &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); nc];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Cyclotomic};

    fn rmat(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
        )
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rmat(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(rmat(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(rmat(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(rmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]).rank(), 2);
    }

    #[test]
    fn rank_over_cyclotomics() {
        // [[1, z3], [z3^2, 1]] has det 1 - z3^3 = 0
        let z = Cyclotomic::root_power(3, 1);
        let one = Cyclotomic::one(3);
        let m = ExactMatrix::from_rows(vec![
            vec![one.clone(), z.clone()],
            vec![z.mul(&z), one.clone()],
        ]);
        assert_eq!(m.rank(), 1);

        // [[1+i, 1], [1, 1-i]] has det (1+i)(1-i) - 1 = 1, so full rank
        let i = Cyclotomic::root_power(4, 1);
        let m = ExactMatrix::from_rows(vec![
            vec![Cyclotomic::one(4).add(&i), Cyclotomic::one(4)],
            vec![Cyclotomic::one(4), Cyclotomic::one(4).sub(&i)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_identity_and_2x2() {
        let id = rmat(&[&[1, 0], &[0, 1]]);
        let b = vec![rat(5, 7), rat(-3, 1)];
        assert_eq!(id.solve(&b).unwrap(), b);

        // the system behind the two-screening Gram at p=3
        let m = ExactMatrix::from_rows(vec![
            vec![rat(2, 3), rat(-1, 3)],
            vec![rat(-1, 3), rat(2, 3)],
        ]);
        let x = m.solve(&[rat(-2, 3), rat(-2, 3)]).unwrap();
        assert_eq!(x, vec![rat(-2, 1), rat(-2, 1)]);
    }

    #[test]
    fn solve_singular_is_an_error() {
        let m = rmat(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[rat(1, 1), rat(1, 1)]), Err(ExactError::SingularMatrix));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = rmat(&[&[1, 2], &[2, 4]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![rat(-2, 1), rat(1, 1)]);
    }
}
