//! Dense square matrices over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Square integer matrix, row-major, `dim >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("matrix dimension must be at least 1".into()));
        }
        Ok(IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidInput("matrix dimension must be at least 1".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::InvalidInput(format!(
                "row {bad} has length {} in a {dim}x{dim} matrix",
                rows[bad].len()
            )));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(<[BigInt]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.dim, rhs.dim
            )));
        }
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(IntMatrix { dim: n, entries: out })
    }

    fn add_scaled_identity(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += c;
        }
        out
    }

    /// `self^n` by binary exponentiation; `self^0` is the identity.
    pub fn pow(&self, mut n: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.dim).expect("dim >= 1");
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// Submatrix on the given (sorted, distinct) row/column indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<IntMatrix> {
        if idx.is_empty() || idx.iter().any(|&i| i >= self.dim) {
            return Err(Error::InvalidInput(format!(
                "principal index set {idx:?} out of range for dimension {}",
                self.dim
            )));
        }
        let entries = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Ok(IntMatrix {
            dim: idx.len(),
            entries,
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = t.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Monic characteristic polynomial `det(xI - self)` by Berkowitz's
    /// division-free algorithm.
    ///
    /// The coefficient of `x^{dim-i}` is `(-1)^i` times the sum of the
    /// order-`i` principal minors.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.dim;
        // descending coefficients of the charpoly of the trailing 1x1 block
        let mut vec = vec![BigInt::one(), -self.get(n - 1, n - 1)];
        for s in (0..n - 1).rev() {
            let size = n - s;
            let col: Vec<BigInt> = (s + 1..n).map(|i| self.get(i, s).clone()).collect();
            let row: Vec<BigInt> = (s + 1..n).map(|j| self.get(s, j).clone()).collect();

            let mut diags = Vec::with_capacity(size + 1);
            diags.push(BigInt::one());
            diags.push(-self.get(s, s));
            let mut d = col;
            for step in 0..size - 1 {
                let dot: BigInt = row.iter().zip(&d).map(|(r, x)| r * x).sum();
                diags.push(-dot);
                if step + 1 < size - 1 {
                    d = (s + 1..n)
                        .map(|i| {
                            (s + 1..n)
                                .zip(&d)
                                .map(|(j, x)| self.get(i, j) * x)
                                .sum()
                        })
                        .collect();
                }
            }

            // lower-triangular Toeplitz (size+1) x size times vec
            vec = (0..=size)
                .map(|i| {
                    (0..size.min(i + 1))
                        .map(|j| &diags[i - j] * &vec[j])
                        .sum()
                })
                .collect();
        }
        vec.reverse();
        IntPolynomial::new(vec)
    }

    /// `p(self)` by Horner's rule over matrices.
    pub fn eval_poly(&self, p: &IntPolynomial) -> IntMatrix {
        let mut acc = IntMatrix::zeros(self.dim).expect("dim >= 1");
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).expect("same dimension").add_scaled_identity(c);
        }
        acc
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    /// Cofactor expansion along the first row; exponential, tests only.
    fn laplace_det(m: &IntMatrix) -> BigInt {
        let n = m.dim();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c).clone()).collect())
                .collect();
            let term = m.get(0, j) * laplace_det(&IntMatrix::from_rows(minor).unwrap());
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(IntMatrix::zeros(0).is_err());
        assert!(IntMatrix::from_rows(vec![]).is_err());
        assert!(IntMatrix::from_i64_rows(&[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn mul_examples() {
        let a2 = mat(&[&[1, 1], &[1, 0]]);
        assert_eq!(a2.mul(&a2).unwrap(), mat(&[&[2, 1], &[1, 1]]));
        let x = mat(&[&[3, -1, 4], &[1, 5, -9], &[2, 6, 5]]);
        assert_eq!(IntMatrix::identity(3).unwrap().mul(&x).unwrap(), x);
        assert!(matches!(a2.mul(&x), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn pow_examples() {
        let a2 = mat(&[&[1, 1], &[1, 0]]);
        assert!(a2.pow(0).is_identity());
        assert_eq!(a2.pow(5).trace(), BigInt::from(11));
        assert_eq!(a2.pow(10), (0..10).fold(IntMatrix::identity(2).unwrap(), |acc, _| acc.mul(&a2).unwrap()));
    }

    #[test]
    fn det_examples() {
        assert_eq!(mat(&[&[1, 1], &[1, 0]]).det(), BigInt::from(-1));
        assert_eq!(mat(&[&[1, 1, 0], &[1, 0, 1], &[1, 0, 0]]).det(), BigInt::from(1));
        assert_eq!(IntMatrix::identity(5).unwrap().det(), BigInt::from(1));
        assert_eq!(mat(&[&[7]]).det(), BigInt::from(7));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).det(), BigInt::from(0));
    }

    #[test]
    fn charpoly_examples() {
        let a2 = mat(&[&[1, 1], &[1, 0]]);
        assert_eq!(a2.charpoly(), IntPolynomial::from_i64(&[-1, -1, 1]));
        let a4 = mat(&[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0]]);
        assert_eq!(a4.charpoly(), IntPolynomial::from_i64(&[-1, -1, -1, -1, 1]));
        assert_eq!(mat(&[&[5]]).charpoly(), IntPolynomial::from_i64(&[-5, 1]));
    }

    #[test]
    fn horner_over_matrices() {
        let a = mat(&[&[2, 1], &[0, 3]]);
        // a^2 - 5a + 6I = 0
        assert!(a.eval_poly(&IntPolynomial::from_i64(&[6, -5, 1])).is_zero());
        assert_eq!(a.eval_poly(&IntPolynomial::from_i64(&[1])), IntMatrix::identity(2).unwrap());
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(-6i64..6, n * n).prop_map(move |v| {
                IntMatrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_laplace(m in arb_matrix()) {
            prop_assert_eq!(m.det(), laplace_det(&m));
        }

        #[test]
        fn cayley_hamilton_holds(m in arb_matrix()) {
            prop_assert!(m.eval_poly(&m.charpoly()).is_zero());
        }

        #[test]
        fn charpoly_ends_in_trace_and_det(m in arb_matrix()) {
            let p = m.charpoly();
            let n = m.dim();
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(n));
            prop_assert_eq!(-p.coeff(n - 1), m.trace());
            let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(p.coeff(0) * sign, m.det());
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix(), seed in prop::collection::vec(-6i64..6, 25)) {
            let n = a.dim();
            let b = IntMatrix::from_rows(seed[..n * n].chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap();
            prop_assert_eq!(a.mul(&b).unwrap().det(), a.det() * b.det());
        }
    }
}
