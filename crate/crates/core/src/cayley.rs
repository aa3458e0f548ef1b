//! Cayley–Hamilton coefficients of `A_m^n`.
//!
//! `c_i^{(n)}` is the sum of the order-`i` principal minors of `A_m^n`, so
//! the characteristic polynomial of `A_m^n` is
//! `x^m - c_1 x^{m-1} + c_2 x^{m-2} - ... + (-1)^m c_m`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exact::IntMatrix;
use crate::order::Order;
use crate::polymatrix::{expected_determinant, Polymatrix};
use crate::sequences::SequenceFamily;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChCoefficients {
    pub order: Order,
    pub power: u64,
    /// `c[i]` is `c_{i+1}^{(n)}`.
    pub c: Vec<BigInt>,
}

impl ChCoefficients {
    /// `c_i` with the 1-based index used in the identities.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.c[i - 1]
    }
}

fn signed(i: usize, v: BigInt) -> BigInt {
    if i % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Reads `c_1..c_m` off the exact characteristic polynomial of `A_m^n`.
pub fn ch_coefficients(order: Order, power: u64) -> ChCoefficients {
    let m = order.get();
    let p = Polymatrix::new(order).pow(power).charpoly();
    ChCoefficients {
        order,
        power,
        c: (1..=m).map(|i| signed(i, p.coeff(m - i))).collect(),
    }
}

/// Sums of principal minors by enumerating every index subset.
///
/// Exponential in the dimension; a small-instance oracle for the
/// characteristic-polynomial route.
pub fn principal_minor_sums(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.dim();
    let mut sums = vec![BigInt::zero(); n];
    for mask in 1u64..(1u64 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let det = a.principal_submatrix(&idx).expect("valid subset").det();
        sums[idx.len() - 1] += det;
    }
    sums
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub expected: String,
    pub actual: String,
}

impl IdentityCheck {
    fn new(expected: BigInt, actual: &BigInt) -> Self {
        IdentityCheck {
            holds: &expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChReport {
    pub order: usize,
    pub power: u64,
    /// `c_1 = U_n`
    pub trace: IdentityCheck,
    /// `c_m = (-1)^{(m+1)n}`
    pub determinant: IdentityCheck,
    /// `c_{m-1} = (-1)^{(m+1)n} Ũ_n`
    pub reflected: IdentityCheck,
    /// At `m = 2`, `c_{m-1}` and `c_1` are the same coefficient.
    pub degenerate_overlap: bool,
}

impl ChReport {
    pub fn passed(&self) -> bool {
        self.trace.holds && self.determinant.holds && self.reflected.holds
    }
}

pub fn verify_ch_identities(order: Order, power: u64) -> ChReport {
    verify_with(
        &SequenceFamily::standard(order),
        &SequenceFamily::reflected(order),
        power,
    )
}

pub(crate) fn verify_with(standard: &SequenceFamily, reflected: &SequenceFamily, power: u64) -> ChReport {
    let order = standard.order();
    let m = order.get();
    let ch = ch_coefficients(order, power);
    // (-1)^{(m+1)n}: det(A_m)^n
    let det_pow = if power % 2 == 0 {
        BigInt::from(1)
    } else {
        expected_determinant(order)
    };
    let n = power as i64;
    ChReport {
        order: m,
        power,
        trace: IdentityCheck::new(standard.term(n), ch.get(1)),
        determinant: IdentityCheck::new(det_pow.clone(), ch.get(m)),
        reflected: IdentityCheck::new(det_pow * reflected.term(n), ch.get(m - 1)),
        degenerate_overlap: m == 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(m: usize) -> Order {
        Order::new(m).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(ch_coefficients(ord(2), 1).c, ints(&[1, -1]));
        assert_eq!(ch_coefficients(ord(3), 1).c, ints(&[1, -1, 1]));
        assert_eq!(ch_coefficients(ord(3), 2).c, ints(&[3, -1, 1]));
    }

    #[test]
    fn zeroth_power_is_identity() {
        for m in Order::range(2, 7) {
            let ch = ch_coefficients(m, 0);
            assert_eq!(ch.get(1), &BigInt::from(m.get()));
            assert_eq!(ch.get(m.get()), &BigInt::from(1));
        }
    }

    #[test]
    fn first_power_alternates() {
        for m in Order::range(2, 10) {
            let ch = ch_coefficients(m, 1);
            for (i, c) in ch.c.iter().enumerate() {
                assert_eq!(c, &BigInt::from(if i % 2 == 0 { 1 } else { -1 }), "m={m}");
            }
        }
    }

    #[test]
    fn identity_examples() {
        let r = verify_ch_identities(ord(3), 5);
        assert!(r.passed());
        assert_eq!(r.reflected.actual, SequenceFamily::reflected(ord(3)).term(5).to_string());
        let r = verify_ch_identities(ord(4), 3);
        assert!(r.passed());
        assert_eq!(r.reflected.actual, "1");
        let r = verify_ch_identities(ord(2), 4);
        assert!(r.passed() && r.degenerate_overlap);
        assert!(!verify_ch_identities(ord(3), 4).degenerate_overlap);
    }

    #[test]
    fn identities_hold_on_grid() {
        for m in Order::range(2, 7) {
            for n in 0..=10 {
                let r = verify_ch_identities(m, n);
                assert!(r.passed(), "m={m} n={n}: {r:?}");
            }
        }
    }

    #[test]
    fn principal_minors_agree_with_charpoly() {
        for m in Order::range(2, 4) {
            for n in 1..=4 {
                let a = Polymatrix::new(m).pow(n);
                assert_eq!(principal_minor_sums(&a), ch_coefficients(m, n).c, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn corrupted_family_fails_trace_identity() {
        let bad = SequenceFamily::with_recurrence(ord(3), crate::sequences::Kind::Standard, ints(&[1, 1, 1]), ints(&[3, 1, 4]))
            .unwrap();
        let r = verify_with(&bad, &SequenceFamily::reflected(ord(3)), 2);
        assert!(!r.trace.holds);
        assert_eq!(r.trace.expected, "4");
        assert_eq!(r.trace.actual, "3");
    }
}
