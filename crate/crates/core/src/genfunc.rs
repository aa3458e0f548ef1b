//! Closed-form ordinary generating functions of the three families.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, RationalFunction};
use crate::order::Order;
use crate::sequences::{Kind, SequenceFamily};

/// Default number of coefficients compared in verification reports.
pub const DEFAULT_EXPANSION_COUNT: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OgfSpec {
    pub order: Order,
    pub kind: Kind,
    pub function: RationalFunction,
}

/// `1 + x + ... + x^{m-1} - x^m`, shared by the reflected and inverted
/// generating functions.
fn reflected_denominator(m: usize) -> IntPolynomial {
    let mut c = vec![BigInt::one(); m];
    c.push(-BigInt::one());
    IntPolynomial::new(c)
}

pub fn build_ogf(order: Order, kind: Kind) -> OgfSpec {
    let m = order.get();
    let (num, den) = match kind {
        // (m - (m-1)x - ... - x^{m-1}) / (1 - x - ... - x^m)
        Kind::Standard => {
            let num = (0..m)
                .map(|k| if k == 0 { BigInt::from(m) } else { -BigInt::from(m - k) })
                .collect();
            let mut den = vec![-BigInt::one(); m + 1];
            den[0] = BigInt::one();
            (IntPolynomial::new(num), IntPolynomial::new(den))
        }
        // (m + (m-1)x + ... + x^{m-1}) / (1 + x + ... + x^{m-1} - x^m)
        Kind::Reflected => (
            IntPolynomial::new((0..m).map(|k| BigInt::from(m - k)).collect()),
            reflected_denominator(m),
        ),
        // (1 + 2x + ... + (m-1)x^{m-2} - m x^{m-1}) / (1 + x + ... + x^{m-1} - x^m)
        Kind::Inverted => {
            let num = (0..m)
                .map(|k| {
                    if k + 1 == m {
                        -BigInt::from(m)
                    } else {
                        BigInt::from(k + 1)
                    }
                })
                .collect();
            (IntPolynomial::new(num), reflected_denominator(m))
        }
    };
    OgfSpec {
        order,
        kind,
        function: RationalFunction::new(num, den).expect("nonzero denominator"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InversionReport {
    pub order: usize,
    /// `(1/x) G(1/x)` equals the inverted closed form after normalization.
    pub transform_matches: bool,
    /// The inverted numerator is the derivative of its denominator.
    pub numerator_is_derivative: bool,
}

impl InversionReport {
    pub fn passed(&self) -> bool {
        self.transform_matches && self.numerator_is_derivative
    }
}

pub fn verify_inversion_link(order: Order) -> Result<InversionReport> {
    let standard = build_ogf(order, Kind::Standard).function;
    let inverted = build_ogf(order, Kind::Inverted).function;
    let transformed = standard.reciprocal_transform()?;
    Ok(InversionReport {
        order: order.get(),
        transform_matches: transformed == inverted.normalized(),
        numerator_is_derivative: inverted.num() == &inverted.den().derivative(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionReport {
    pub order: usize,
    pub kind: Kind,
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the first `count` OGF coefficients with the recurrence terms
/// `0..count`. `expected` in a mismatch is the recurrence value.
pub fn expansion_matches_recurrence(order: Order, kind: Kind, count: usize) -> Result<ExpansionReport> {
    expansion_against(&SequenceFamily::new(order, kind), count)
}

pub(crate) fn expansion_against(family: &SequenceFamily, count: usize) -> Result<ExpansionReport> {
    let order = family.order();
    if count < order.get() {
        return Err(Error::InvalidInput(format!(
            "expansion check needs count >= m ({count} < {order})"
        )));
    }
    let series = build_ogf(order, family.kind()).function.expand(count)?;
    let first_mismatch = series.iter().enumerate().find_map(|(n, actual)| {
        let expected = family.term(n as i64);
        (&expected != actual).then(|| Mismatch {
            index: n as i64,
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    });
    Ok(ExpansionReport {
        order: order.get(),
        kind: family.kind(),
        compared: count,
        first_mismatch,
    })
}
