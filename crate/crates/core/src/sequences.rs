//! Generalized Polynacci sequences and their reflected and inverted
//! companions, at every integer index.
//!
//! The standard family `U_n` satisfies `U_n = U_{n-1} + ... + U_{n-m}` with
//! initial conditions chosen so that `U_n = tr(A_m^n)`; for `m = 2` this is
//! the Lucas sequence. The reflected family `Ũ_n = tr(B_m^n)` runs the
//! reversed recurrence `Ũ_n = -Ũ_{n-1} - ... - Ũ_{n-m+1} + Ũ_{n-m}`, and the
//! inverted family `Û_n = -Ũ_{n+1}` shares that recurrence.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::Order;
use crate::polymatrix::{elementary_symmetric, InversePolymatrix, Polymatrix};
use crate::roots::find_roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Standard,
    Reflected,
    Inverted,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Standard, Kind::Reflected, Kind::Inverted];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Standard => "standard",
            Kind::Reflected => "reflected",
            Kind::Inverted => "inverted",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Kind::Standard),
            "reflected" => Ok(Kind::Reflected),
            "inverted" => Ok(Kind::Inverted),
            other => Err(Error::InvalidInput(format!(
                "unknown sequence kind {other:?} (expected standard, reflected or inverted)"
            ))),
        }
    }
}

/// Recurrence coefficients, lag-`j` coefficient at position `j - 1`.
pub fn recurrence_coeffs(order: Order, kind: Kind) -> Vec<BigInt> {
    let m = order.get();
    match kind {
        Kind::Standard => vec![BigInt::one(); m],
        Kind::Reflected | Kind::Inverted => {
            let mut c = vec![-BigInt::one(); m - 1];
            c.push(BigInt::one());
            c
        }
    }
}

/// The first `m` terms of the family.
///
/// * standard: `m, 1, 3, 7, ..., 2^{m-1} - 1`
/// * reflected: `m, -1, ..., -1`
/// * inverted: `1, ..., 1, 1 - 2m`
pub fn initial_conditions(order: Order, kind: Kind) -> Vec<BigInt> {
    let m = order.get();
    match kind {
        Kind::Standard => (0..m)
            .map(|i| match i {
                0 => BigInt::from(m),
                _ => (BigInt::one() << i) - 1,
            })
            .collect(),
        Kind::Reflected => (0..m)
            .map(|i| if i == 0 { BigInt::from(m) } else { -BigInt::one() })
            .collect(),
        Kind::Inverted => (0..m)
            .map(|i| {
                if i + 1 == m {
                    BigInt::one() - BigInt::from(2 * m)
                } else {
                    BigInt::one()
                }
            })
            .collect(),
    }
}

#[derive(Debug, Default, Clone)]
struct TwoSided {
    /// indices 0, 1, 2, ...
    forward: Vec<BigInt>,
    /// indices -1, -2, -3, ...
    backward: Vec<BigInt>,
}

impl TwoSided {
    fn get(&self, n: i64) -> Option<&BigInt> {
        if n >= 0 {
            self.forward.get(n as usize)
        } else {
            self.backward.get((-n - 1) as usize)
        }
    }
}

/// One order-`m` family: its recurrence, initial conditions and a two-sided
/// term cache.
///
/// The cache sits behind a mutex, so concurrent [`SequenceFamily::term`]
/// calls on a shared family are fine and return identical values.
#[derive(Debug)]
pub struct SequenceFamily {
    order: Order,
    kind: Kind,
    coeffs: Vec<BigInt>,
    initial: Vec<BigInt>,
    cache: Mutex<TwoSided>,
}

impl Clone for SequenceFamily {
    fn clone(&self) -> Self {
        SequenceFamily {
            order: self.order,
            kind: self.kind,
            coeffs: self.coeffs.clone(),
            initial: self.initial.clone(),
            cache: Mutex::new(self.lock().clone()),
        }
    }
}

impl PartialEq for SequenceFamily {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.kind == other.kind
            && self.coeffs == other.coeffs
            && self.initial == other.initial
    }
}

impl SequenceFamily {
    pub fn new(order: Order, kind: Kind) -> Self {
        Self::with_recurrence(
            order,
            kind,
            recurrence_coeffs(order, kind),
            initial_conditions(order, kind),
        )
        .expect("built-in families have unit trailing coefficient")
    }

    pub fn standard(order: Order) -> Self {
        Self::new(order, Kind::Standard)
    }

    pub fn reflected(order: Order) -> Self {
        Self::new(order, Kind::Reflected)
    }

    pub fn inverted(order: Order) -> Self {
        Self::new(order, Kind::Inverted)
    }

    /// Arbitrary integer recurrence; the lag-`m` coefficient must be a unit
    /// so negative indices stay integral.
    pub(crate) fn with_recurrence(
        order: Order,
        kind: Kind,
        coeffs: Vec<BigInt>,
        initial: Vec<BigInt>,
    ) -> Result<Self> {
        let m = order.get();
        if coeffs.len() != m || initial.len() != m {
            return Err(Error::InvalidInput(format!(
                "order {m} needs {m} coefficients and {m} initial terms"
            )));
        }
        if !coeffs[m - 1].abs().is_one() {
            return Err(Error::InvalidInput(
                "lag-m coefficient must be +1 or -1".into(),
            ));
        }
        Ok(SequenceFamily {
            order,
            kind,
            cache: Mutex::new(TwoSided {
                forward: initial.clone(),
                backward: Vec::new(),
            }),
            coeffs,
            initial,
        })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn recurrence_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initial_conditions(&self) -> &[BigInt] {
        &self.initial
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, TwoSided> {
        // the cache is only ever extended with fully computed terms
        self.cache.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// The term at any integer index.
    pub fn term(&self, n: i64) -> BigInt {
        let mut cache = self.lock();
        if let Some(v) = cache.get(n) {
            return v.clone();
        }
        let m = self.order.get();
        if n >= 0 {
            while cache.forward.len() <= n as usize {
                let len = cache.forward.len();
                let next = self
                    .coeffs
                    .iter()
                    .zip(cache.forward[len - m..].iter().rev())
                    .map(|(c, a)| c * a)
                    .sum();
                cache.forward.push(next);
            }
            cache.forward[n as usize].clone()
        } else {
            let unit = &self.coeffs[m - 1];
            while cache.backward.len() < n.unsigned_abs() as usize {
                // solve a_j = sum_i s_i a_{j-i} for a_{j-m}, with j - m the next index down
                let target = -(cache.backward.len() as i64) - 1;
                let j = target + m as i64;
                let mut acc = cache.get(j).expect("window is cached").clone();
                for (i, c) in self.coeffs[..m - 1].iter().enumerate() {
                    acc -= c * cache.get(j - 1 - i as i64).expect("window is cached");
                }
                cache.backward.push(acc * unit);
            }
            cache.backward[(-n - 1) as usize].clone()
        }
    }

    /// Terms `from, from + 1, ..., from + count - 1`.
    pub fn terms(&self, from: i64, count: usize) -> Vec<BigInt> {
        (0..count as i64).map(|k| self.term(from + k)).collect()
    }
}

/// `a_{j-m}` from `a_{j-m+1}, ..., a_j` for a recurrence with rational
/// coefficients; `window[0]` is the highest index.
///
/// This is the unspecialized backward step; the integer families above only
/// need the unit-coefficient case.
pub(crate) fn backward_step_rational(coeffs: &[BigRational], window: &[BigRational]) -> BigRational {
    let m = coeffs.len();
    let s_m = &coeffs[m - 1];
    // a_{-n} = -s_{m-1}/s_m a_{-(n-1)} - ... - s_1/s_m a_{-(n-m+1)} + 1/s_m a_{-(n-m)}
    let mut acc = &window[0] / s_m;
    for i in 1..m {
        acc -= &coeffs[i - 1] / s_m * &window[i];
    }
    acc
}

/// `tr(A_m^n)` for `n >= 0`, `tr(B_m^{|n|})` for `n < 0`.
pub fn term_by_trace(order: Order, n: i64) -> BigInt {
    if n >= 0 {
        Polymatrix::new(order).pow(n as u64).trace()
    } else {
        InversePolymatrix::new(order).pow(n.unsigned_abs()).trace()
    }
}

/// `V_n = V_{n-1} + ... + V_{n-m}` with `V_0 = ... = V_{m-1} = 1`.
pub fn v_sequence(order: Order, n: u64) -> BigInt {
    v_prefix(order, n as usize + 1).pop().expect("nonempty")
}

fn v_prefix(order: Order, len: usize) -> Vec<BigInt> {
    let m = order.get();
    let mut v: Vec<BigInt> = vec![BigInt::one(); m.min(len)];
    while v.len() < len {
        let next = v[v.len() - m..].iter().sum();
        v.push(next);
    }
    v
}

/// Complete homogeneous symmetric polynomial `h_n` of the roots of
/// `x^m - x^{m-1} - ... - 1`, by Newton's identity
/// `h_n = sum_{i=1}^{min(n,m)} (-1)^{i-1} e_i h_{n-i}` over the exact
/// elementary symmetric values.
pub fn homogeneous_sum(order: Order, n: u64) -> BigInt {
    homogeneous_prefix(order, n as usize + 1).pop().expect("nonempty")
}

fn homogeneous_prefix(order: Order, len: usize) -> Vec<BigInt> {
    let e = elementary_symmetric(order);
    let mut h = vec![BigInt::one()];
    while h.len() < len {
        let k = h.len();
        let mut acc = BigInt::zero();
        for i in 1..=k.min(e.len()) {
            let t = &e[i - 1] * &h[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        h.push(acc);
    }
    h.truncate(len);
    h
}

/// The nested multinomial root-power sum evaluated literally: every
/// composition `i_1 + ... + i_m = n` contributes `r_1^{i_1} ... r_m^{i_m}`.
///
/// Numeric oracle for [`homogeneous_sum`]; limited to `m <= 6`, `n <= 12`.
pub fn homogeneous_sum_bruteforce(order: Order, n: u32, tol: f64) -> Result<BigInt> {
    let m = order.get();
    if m > 6 || n > 12 {
        return Err(Error::InvalidInput(format!(
            "brute-force multinomial sum needs m <= 6 and n <= 12, got m = {m}, n = {n}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let roots = find_roots(order, 1e-12)?;
    let r = roots.roots();

    fn walk(
        r: &[num_complex::Complex64],
        remaining: u32,
        acc: num_complex::Complex64,
        out: &mut num_complex::Complex64,
    ) {
        match r {
            [last] => *out += acc * last.powu(remaining),
            [first, rest @ ..] => {
                for e in 0..=remaining {
                    walk(rest, remaining - e, acc * first.powu(e), out);
                }
            }
            [] => unreachable!("m >= 2"),
        }
    }

    let mut total = num_complex::Complex64::new(0.0, 0.0);
    walk(r, n, num_complex::Complex64::new(1.0, 0.0), &mut total);

    let nearest = total.re.round();
    let residue = total.im.abs().max((total.re - nearest).abs());
    if !(residue < tol) {
        return Err(Error::NumericInstability(format!(
            "multinomial sum {total} is {residue:e} from an integer (tol {tol:e})"
        )));
    }
    Ok(BigInt::from(nearest.to_i64().expect("n <= 12 keeps the sum small")))
}

/// Observed index relation between `h_n` and the all-ones sequence `V`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VRelation {
    pub order: usize,
    pub checked_up_to: u64,
    /// `s` with `h_n = V_{n+s}` for every checked `n`, if one exists in
    /// `[-2, 2]`.
    pub shift: Option<i64>,
}

impl VRelation {
    pub fn describe(&self) -> String {
        match self.shift {
            Some(0) => format!("m={}: h_n = V_n for n <= {}", self.order, self.checked_up_to),
            Some(s) => format!(
                "m={}: h_n = V_{{n{s:+}}} for n <= {}",
                self.order, self.checked_up_to
            ),
            None => format!(
                "m={}: no shift in [-2, 2] gives h_n = V_(n+s) for n <= {}",
                self.order, self.checked_up_to
            ),
        }
    }
}

pub fn v_relation(order: Order, max_n: u64) -> VRelation {
    let len = max_n as usize + 1;
    let h = homogeneous_prefix(order, len);
    let v = v_prefix(order, len + 3);
    let shift = (-2i64..=2)
        .filter(|&s| {
            (0..len as i64)
                .filter(|&n| n + s >= 0)
                .all(|n| h[n as usize] == v[(n + s) as usize])
        })
        .min_by_key(|s| s.abs());
    VRelation {
        order: order.get(),
        checked_up_to: max_n,
        shift,
    }
}
