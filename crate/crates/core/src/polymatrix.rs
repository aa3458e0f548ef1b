//! The order-`m` Polymatrix `A_m` and its inverse `B_m`.
//!
//! `A_m` has an all-ones first column and an all-ones first superdiagonal;
//! for `m = 2` it is the Fibonacci matrix `[[1, 1], [1, 0]]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{IntMatrix, IntPolynomial};
use crate::error::Result;
use crate::order::Order;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatrix {
    order: Order,
    matrix: IntMatrix,
}

/// Pieces of `A_m = [[A_{m-1}, col], [row', corner]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub block: IntMatrix,
    pub column: Vec<BigInt>,
    pub row: Vec<BigInt>,
    pub corner: BigInt,
}

impl Polymatrix {
    pub fn new(order: Order) -> Self {
        Polymatrix {
            order,
            matrix: raw_polymatrix(order.get()).expect("m >= 2"),
        }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn pow(&self, n: u64) -> IntMatrix {
        self.matrix.pow(n)
    }

    /// Splits off the last row and column. The leading block equals
    /// `A_{m-1}` when `m >= 3`.
    pub fn partition(&self) -> Partition {
        let m = self.order.get();
        let rows = self.matrix.to_rows();
        let block = IntMatrix::from_rows(
            rows[..m - 1].iter().map(|r| r[..m - 1].to_vec()).collect(),
        )
        .expect("m - 1 >= 1");
        Partition {
            block,
            column: rows[..m - 1].iter().map(|r| r[m - 1].clone()).collect(),
            row: rows[m - 1][..m - 1].to_vec(),
            corner: rows[m - 1][m - 1].clone(),
        }
    }

    /// `x^m - x^{m-1} - ... - x - 1`, ascending coefficients `[-1, ..., -1, 1]`.
    pub fn characteristic_polynomial(order: Order) -> IntPolynomial {
        let m = order.get();
        let mut c = vec![-BigInt::one(); m];
        c.push(BigInt::one());
        IntPolynomial::new(c)
    }

    /// `1 - x - ... - x^m`, the reflection of the characteristic polynomial
    /// up to sign.
    pub fn reflected_polynomial(order: Order) -> IntPolynomial {
        Self::characteristic_polynomial(order)
            .reflect()
            .expect("nonzero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversePolymatrix {
    order: Order,
    matrix: IntMatrix,
}

impl InversePolymatrix {
    pub fn new(order: Order) -> Self {
        let m = order.get();
        let mut b = IntMatrix::zeros(m).expect("m >= 2");
        b.set(0, m - 1, BigInt::one());
        for i in 1..m {
            b.set(i, m - 1, -BigInt::one());
            b.set(i, i - 1, BigInt::one());
        }
        InversePolymatrix { order, matrix: b }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn pow(&self, n: u64) -> IntMatrix {
        self.matrix.pow(n)
    }
}

/// The Polymatrix pattern at any dimension `m >= 1`; `m = 1` gives `[1]`.
///
/// Only the trace-collapse check needs `m = 1` (it compares against
/// `A_k^k` with `k = 1`); everything else goes through [`Polymatrix`].
pub fn raw_polymatrix(m: usize) -> Result<IntMatrix> {
    let mut a = IntMatrix::zeros(m)?;
    for i in 0..m {
        a.set(i, 0, BigInt::one());
        if i + 1 < m {
            a.set(i, i + 1, BigInt::one());
        }
    }
    Ok(a)
}

/// `e_2' A_m^i e_1`, i.e. entry `(1, m)` of `A_m^i`.
pub fn corner_scalar(order: Order, i: u64) -> BigInt {
    Polymatrix::new(order)
        .pow(i)
        .get(0, order.get() - 1)
        .clone()
}

/// Elementary symmetric functions `S_1..S_m` of the eigenvalues of `A_m`,
/// read off the exact characteristic polynomial: `S_i = (-1)^i [x^{m-i}]`.
pub fn elementary_symmetric(order: Order) -> Vec<BigInt> {
    let m = order.get();
    let p = Polymatrix::new(order).matrix().charpoly();
    (1..=m)
        .map(|i| {
            let c = p.coeff(m - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// `(-1)^{m+1}`.
pub fn expected_determinant(order: Order) -> BigInt {
    if order.get() % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub(crate) fn is_unit_vector(v: &[BigInt], at: usize) -> bool {
    v.iter()
        .enumerate()
        .all(|(k, x)| if k == at { x.is_one() } else { x.is_zero() })
}
