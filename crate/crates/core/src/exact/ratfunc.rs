//! Rational functions used as ordinary generating functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// `num / den` with a nonzero denominator.
///
/// No reduction to lowest terms happens implicitly, so equality is
/// structural: `(2 - 2x)/(2 - 2x^2)` and `1/(1 + x)` compare unequal. Use
/// [`RationalFunction::same_function`] for value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// Cross-multiplied equality, `a/b == c/d` iff `a*d == c*b`.
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Multiplies numerator and denominator by -1 when the denominator's
    /// constant term is negative.
    pub fn normalized(&self) -> RationalFunction {
        if self.den.constant_term().is_negative() {
            RationalFunction {
                num: -&self.num,
                den: -&self.den,
            }
        } else {
            self.clone()
        }
    }

    /// First `count` power-series coefficients of `num / den`.
    pub fn expand(&self, count: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.constant_term();
        let unit_sign = if d0.is_one() {
            BigInt::one()
        } else if (-&d0).is_one() {
            -BigInt::one()
        } else {
            return Err(Error::UnsupportedExpansion(d0));
        };
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(count);
        for n in 0..count {
            let mut acc = self.num.coeff(n);
            for (k, d) in den.iter().enumerate().take(n + 1).skip(1) {
                if !d.is_zero() {
                    acc -= d * &out[n - k];
                }
            }
            out.push(acc * &unit_sign);
        }
        Ok(out)
    }

    /// `(1/x) * f(1/x)` rewritten with polynomial numerator and denominator,
    /// then sign-normalized. Requires `deg(num) < deg(den)`.
    pub fn reciprocal_transform(&self) -> Result<RationalFunction> {
        let q = self
            .den
            .degree()
            .expect("denominator is nonzero by construction");
        let num = match self.num.degree() {
            None => IntPolynomial::zero(),
            Some(p) if p < q => {
                // (1/x) * x^{-p} rev(N) / (x^{-q} rev_q(D)) = x^{q-p-1} rev(N) / rev_q(D)
                self.num.reflect()?.shift(q - p - 1)
            }
            Some(p) => {
                return Err(Error::UnsupportedInput(format!(
                    "reciprocal transform needs deg(num) < deg(den), got {p} >= {q}"
                )))
            }
        };
        let den = self.den.reversed_to(q);
        Ok(RationalFunction { num, den }.normalized())
    }

    /// `f(-x)`.
    pub fn negate_argument(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.negate_argument(),
            den: self.den.negate_argument(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPolynomial::from_i64(n), IntPolynomial::from_i64(d)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rejects_zero_denominator() {
        let r = RationalFunction::new(IntPolynomial::from_i64(&[1]), IntPolynomial::zero());
        assert!(matches!(r, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(rf(&[2, -1], &[1, -1, -1]).expand(6).unwrap(), ints(&[2, 1, 3, 4, 7, 11]));
        assert_eq!(rf(&[1], &[1, -1]).expand(4).unwrap(), ints(&[1, 1, 1, 1]));
        // reflected Lucas: a_n = -a_{n-1} + a_{n-2}, a_0 = 2, a_1 = -1
        assert_eq!(rf(&[2, 1], &[1, 1, -1]).expand(4).unwrap(), ints(&[2, -1, 3, -4]));
        assert!(rf(&[1], &[1]).expand(0).unwrap().is_empty());
    }

    #[test]
    fn expand_negative_unit_denominator() {
        // -1/(-1 + x) = 1/(1 - x)
        assert_eq!(rf(&[-1], &[-1, 1]).expand(3).unwrap(), ints(&[1, 1, 1]));
    }

    #[test]
    fn expand_rejects_non_unit_constant() {
        let e = rf(&[1], &[2, 1]).expand(3);
        assert!(matches!(e, Err(Error::UnsupportedExpansion(c)) if c == BigInt::from(2)));
        assert!(matches!(rf(&[1], &[0, 1]).expand(1), Err(Error::UnsupportedExpansion(_))));
    }

    #[test]
    fn reciprocal_transform_examples() {
        let g2 = rf(&[2, -1], &[1, -1, -1]);
        assert_eq!(g2.reciprocal_transform().unwrap(), rf(&[1, -2], &[1, 1, -1]));
        let g3 = rf(&[3, -2, -1], &[1, -1, -1, -1]);
        assert_eq!(g3.reciprocal_transform().unwrap(), rf(&[1, 2, -3], &[1, 1, 1, -1]));
        assert_eq!(g2.reciprocal_transform().unwrap().reciprocal_transform().unwrap(), g2);
    }

    #[test]
    fn reciprocal_transform_rejects_improper() {
        let e = rf(&[1, 1, 1], &[1, 1]).reciprocal_transform();
        assert!(matches!(e, Err(Error::UnsupportedInput(_))));
    }

    #[test]
    fn negate_argument_examples() {
        assert_eq!(rf(&[2, 1], &[1, 1, -1]).negate_argument(), rf(&[2, -1], &[1, -1, -1]));
        let even = rf(&[1], &[1, 0, -1]);
        assert_eq!(even.negate_argument(), even);
        let g = rf(&[3, -2, -1], &[1, -1, -1, -1]);
        assert_eq!(g.negate_argument().negate_argument(), g);
    }

    #[test]
    fn same_function_ignores_common_factors() {
        assert!(rf(&[2, -2], &[2, 0, -2]).same_function(&rf(&[1], &[1, 1])));
        assert_ne!(rf(&[2, -2], &[2, 0, -2]), rf(&[1], &[1, 1]));
    }

    proptest! {
        #[test]
        fn expand_is_prefix_consistent(
            num in prop::collection::vec(-9i64..9, 0..5),
            mut den in prop::collection::vec(-3i64..3, 1..5),
            neg in any::<bool>(),
            k in 0usize..30,
        ) {
            den[0] = if neg { -1 } else { 1 };
            let f = rf(&num, &den);
            let short = f.expand(k).unwrap();
            let long = f.expand(k + 1).unwrap();
            prop_assert_eq!(&long[..k], &short[..]);
        }

        #[test]
        fn expansion_times_denominator_recovers_numerator(
            num in prop::collection::vec(-9i64..9, 0..5),
            mut den in prop::collection::vec(-3i64..3, 1..5),
        ) {
            den[0] = 1;
            let f = rf(&num, &den);
            let n = 12;
            let series = IntPolynomial::new(f.expand(n).unwrap());
            let prod = &series * f.den();
            for k in 0..n {
                prop_assert_eq!(prod.coeff(k), f.num().coeff(k));
            }
        }
    }
}
