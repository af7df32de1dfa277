//! Dense exact linear algebra over a [`Field`].

use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let rv = self.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * rv);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref().len()
    }

    /// Basis of the right null space `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A subquotient `Z / B` of `k^n` with a chosen basis of the quotient.
///
/// `basis` are vectors of `Z` whose classes form a basis of `Z / B`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub field: Field,
    pub ambient: usize,
    pub boundaries: Vec<Vec<Scalar>>,
    pub basis: Vec<Vec<Scalar>>,
    // [B-pivots | basis] reduced, for coordinate extraction
    solver: Matrix,
}

impl Subquotient {
    pub fn new(field: Field, ambient: usize, cycles: &[Vec<Scalar>], boundaries: &[Vec<Scalar>]) -> Subquotient {
        // independent boundaries
        let bmat = Matrix::from_columns(field, ambient, boundaries);
        let mut bt = bmat.transpose();
        let bp = bt.rref();
        let bvecs: Vec<Vec<Scalar>> = (0..bp.len())
            .map(|r| (0..ambient).map(|j| bt.get(r, j).clone()).collect())
            .collect();
        let mut cols = bvecs.clone();
        let mut basis = Vec::new();
        let mut rank = Matrix::from_columns(field, ambient, &cols).rank();
        for z in cycles {
            cols.push(z.clone());
            let r = Matrix::from_columns(field, ambient, &cols).rank();
            if r > rank {
                rank = r;
                basis.push(z.clone());
            } else {
                cols.pop();
            }
        }
        let solver = Matrix::from_columns(field, ambient, &cols);
        Subquotient {
            field,
            ambient,
            boundaries: bvecs,
            basis,
            solver,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of `z` (which must lie in `Z`).
    pub fn coords(&self, z: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.solver.cols == 0 {
            return if z.iter().all(Scalar::is_zero) {
                Some(Vec::new())
            } else {
                None
            };
        }
        let x = self.solver.solve(z)?;
        Some(x[self.boundaries.len()..].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_columns(
            Field::Rationals,
            2,
            &[vec![q(1), q(2)], vec![q(2), q(4)], vec![q(0), q(1)]],
        );
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Scalar::is_zero));
        let x = m.solve(&[q(3), q(7)]).unwrap();
        assert_eq!(m.apply(&x), vec![q(3), q(7)]);
    }

    #[test]
    fn subquotient_coordinates() {
        // Z = k^2, B = span(e1): quotient spanned by e2
        let sq = Subquotient::new(
            Field::Prime(3),
            2,
            &[vec![Field::Prime(3).one(), Field::Prime(3).zero()], vec![Field::Prime(3).one(), Field::Prime(3).one()]],
            &[vec![Field::Prime(3).one(), Field::Prime(3).zero()]],
        );
        assert_eq!(sq.dim(), 1);
        let c = sq.coords(&[Field::Prime(3).from_i64(2), Field::Prime(3).from_i64(2)]).unwrap();
        assert_eq!(c, vec![Field::Prime(3).from_i64(2)]);
    }
}
