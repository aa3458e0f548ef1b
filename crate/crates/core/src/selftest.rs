//! Runs every identity check over a grid of orders and indices.
//!
//! Orders are evaluated in parallel; the report is merged in order so its
//! content does not depend on scheduling.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::{self, principal_minor_sums};
use crate::error::{Error, Result};
use crate::genfunc::{self, build_ogf};
use crate::order::Order;
use crate::polymatrix::{
    corner_scalar, elementary_symmetric, expected_determinant, is_unit_vector, raw_polymatrix,
    InversePolymatrix, Polymatrix,
};
use crate::roots::{dominant_root, find_roots};
use crate::sequences::{
    backward_step_rational, homogeneous_sum, homogeneous_sum_bruteforce, term_by_trace,
    v_relation, Kind, SequenceFamily,
};

/// Largest order with numeric root checks.
pub const NUMERIC_MAX_M: usize = 16;
/// Largest index certified through double-precision Binet sums.
pub const NUMERIC_MAX_N: u64 = 30;
/// Largest order in the dominant-root monotonicity check; beyond this the
/// gap to 2 falls under double-precision resolution.
pub const DOMINANT_MAX_M: usize = 32;
pub const BINET_RELATIVE_TOL: f64 = 1e-8;
pub const RECIPROCAL_BINET_ABSOLUTE_TOL: f64 = 1e-6;
pub const SYMMETRIC_TOL: f64 = 1e-6;
pub const HOMOGENEOUS_TOL: f64 = 1e-6;
const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: u64,
    pub tol: f64,
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_m < Order::MIN || self.max_m > MAX_ORDER {
            return Err(Error::InvalidInput(format!(
                "max_m must lie in [2, {MAX_ORDER}], got {}",
                self.max_m
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tol must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Determinant,
    Inverse,
    PartitionedForm,
    CornerScalar,
    CharacteristicPolynomial,
    CayleyHamiltonEquation,
    SymmetricFunctions,
    TraceCollapse,
    InitialConditions,
    TraceOracle,
    ReflectionDuality,
    InversionShift,
    NegativeIndexStep,
    OgfExpansion,
    OgfInversionLink,
    OgfSignAlternation,
    ChIdentities,
    PrincipalMinors,
    Binet,
    ReciprocalBinet,
    NumericSymmetric,
    HomogeneousSum,
    DominantRoot,
}

impl Check {
    const ALL: [Check; 23] = [
        Check::Determinant,
        Check::Inverse,
        Check::PartitionedForm,
        Check::CornerScalar,
        Check::CharacteristicPolynomial,
        Check::CayleyHamiltonEquation,
        Check::SymmetricFunctions,
        Check::TraceCollapse,
        Check::InitialConditions,
        Check::TraceOracle,
        Check::ReflectionDuality,
        Check::InversionShift,
        Check::NegativeIndexStep,
        Check::OgfExpansion,
        Check::OgfInversionLink,
        Check::OgfSignAlternation,
        Check::ChIdentities,
        Check::PrincipalMinors,
        Check::Binet,
        Check::ReciprocalBinet,
        Check::NumericSymmetric,
        Check::HomogeneousSum,
        Check::DominantRoot,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Determinant => "determinant",
            Check::Inverse => "inverse",
            Check::PartitionedForm => "partitioned-form",
            Check::CornerScalar => "corner-scalar",
            Check::CharacteristicPolynomial => "characteristic-polynomial",
            Check::CayleyHamiltonEquation => "cayley-hamilton-equation",
            Check::SymmetricFunctions => "symmetric-functions",
            Check::TraceCollapse => "trace-collapse",
            Check::InitialConditions => "initial-conditions",
            Check::TraceOracle => "trace-oracle",
            Check::ReflectionDuality => "reflection-duality",
            Check::InversionShift => "inversion-shift",
            Check::NegativeIndexStep => "negative-index-step",
            Check::OgfExpansion => "ogf-expansion",
            Check::OgfInversionLink => "ogf-inversion-link",
            Check::OgfSignAlternation => "ogf-sign-alternation",
            Check::ChIdentities => "ch-identities",
            Check::PrincipalMinors => "principal-minors",
            Check::Binet => "binet",
            Check::ReciprocalBinet => "reciprocal-binet",
            Check::NumericSymmetric => "numeric-symmetric",
            Check::HomogeneousSum => "homogeneous-sum",
            Check::DominantRoot => "dominant-root",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub m: usize,
    pub n: i64,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} expected={} actual={}",
            self.m, self.n, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfTestReport {
    pub bounds: Bounds,
    pub checks: Vec<CheckOutcome>,
    /// Informational findings; never failures.
    pub notes: Vec<String>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        self.checks
            .iter()
            .find_map(|c| c.counterexample.as_ref().map(|cx| (c.name, cx)))
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    cases: usize,
    counterexample: Option<Counterexample>,
}

/// Per-order accumulator, one tally per check.
struct Ledger {
    m: usize,
    tallies: Vec<Tally>,
    notes: Vec<String>,
}

impl Ledger {
    fn new(m: usize) -> Self {
        Ledger {
            m,
            tallies: vec![Tally::default(); Check::ALL.len()],
            notes: Vec::new(),
        }
    }

    fn record(&mut self, check: Check, n: i64, expected: impl ToString, actual: impl ToString, ok: bool) {
        let t = &mut self.tallies[check as usize];
        t.cases += 1;
        if !ok && t.counterexample.is_none() {
            t.counterexample = Some(Counterexample {
                m: self.m,
                n,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn eq<T: PartialEq + ToString>(&mut self, check: Check, n: i64, expected: T, actual: T) {
        let ok = expected == actual;
        self.record(check, n, expected, actual, ok);
    }
}

type FamilySource<'a> = dyn Fn(Order, Kind) -> SequenceFamily + Sync + 'a;

pub fn run(bounds: Bounds) -> Result<SelfTestReport> {
    run_with(bounds, &SequenceFamily::new)
}

pub(crate) fn run_with(bounds: Bounds, families: &FamilySource<'_>) -> Result<SelfTestReport> {
    bounds.validate()?;
    let ledgers: Vec<Ledger> = Order::range(2, bounds.max_m)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m| check_order(m, &bounds, families))
        .collect::<Result<_>>()?;

    let mut global = Ledger::new(0);
    check_dominant_roots(&bounds, &mut global)?;

    let mut notes = Vec::new();
    let mut checks: Vec<CheckOutcome> = Check::ALL
        .iter()
        .map(|c| CheckOutcome {
            name: c.name(),
            cases: 0,
            counterexample: None,
        })
        .collect();
    for ledger in ledgers.into_iter().chain(std::iter::once(global)) {
        for (out, t) in checks.iter_mut().zip(ledger.tallies) {
            out.cases += t.cases;
            if out.counterexample.is_none() {
                out.counterexample = t.counterexample;
            }
        }
        notes.extend(ledger.notes);
    }
    if bounds.max_m > NUMERIC_MAX_M {
        notes.push(format!("numeric root checks cover m <= {NUMERIC_MAX_M} only"));
    }
    Ok(SelfTestReport {
        bounds,
        checks,
        notes,
    })
}

fn sign_pow(n: u64) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn check_order(order: Order, bounds: &Bounds, families: &FamilySource<'_>) -> Result<Ledger> {
    let m = order.get();
    let mut l = Ledger::new(m);
    let a = Polymatrix::new(order);
    let b = InversePolymatrix::new(order);
    let max_n = bounds.max_n as i64;

    // structure of A_m and B_m
    l.eq(Check::Determinant, 1, expected_determinant(order), a.matrix().det());
    let ba = b.matrix().mul(a.matrix())?.is_identity();
    let ab = a.matrix().mul(b.matrix())?.is_identity();
    l.record(Check::Inverse, 1, "identity", if ba && ab { "identity" } else { "not identity" }, ba && ab);
    if m >= 3 {
        let p = a.partition();
        let prev = Polymatrix::new(Order::new(m - 1)?);
        let ok = &p.block == prev.matrix()
            && is_unit_vector(&p.column, m - 2)
            && is_unit_vector(&p.row, 0)
            && p.corner.is_zero();
        l.record(Check::PartitionedForm, 1, "[[A_{m-1}, e1], [e2', 0]]", a.matrix(), ok);
    }
    for i in 0..=(m as u64 - 2) {
        l.eq(Check::CornerScalar, i as i64, BigInt::zero(), corner_scalar(order, i));
    }
    let cp = a.matrix().charpoly();
    l.eq(Check::CharacteristicPolynomial, 1, Polymatrix::characteristic_polynomial(order), cp.clone());
    let residual_zero = a.matrix().eval_poly(&cp).is_zero();
    l.record(Check::CayleyHamiltonEquation, 1, "zero matrix", "nonzero matrix", residual_zero);
    for (i, s) in elementary_symmetric(order).into_iter().enumerate() {
        l.eq(Check::SymmetricFunctions, i as i64 + 1, sign_pow(i as u64), s);
    }
    for k in 1..m as u64 {
        let collapsed = raw_polymatrix(k as usize)?.pow(k).trace();
        l.eq(Check::TraceCollapse, k as i64, collapsed, a.pow(k).trace());
    }

    let u = families(order, Kind::Standard);
    let r = families(order, Kind::Reflected);
    let inv = families(order, Kind::Inverted);

    // initial conditions
    for i in 2..=m {
        l.eq(Check::InitialConditions, i as i64, (BigInt::one() << i) - 1, u.term(i as i64));
    }
    l.eq(Check::InitialConditions, 0, BigInt::from(m), r.term(0));
    for i in 1..m as i64 {
        l.eq(Check::InitialConditions, i, -BigInt::one(), r.term(i));
    }
    l.eq(Check::InitialConditions, m as i64, BigInt::from(2 * m - 1), r.term(m as i64));
    for i in 0..m as i64 - 1 {
        l.eq(Check::InitialConditions, i, BigInt::one(), inv.term(i));
    }
    l.eq(Check::InitialConditions, m as i64 - 1, BigInt::from(1 - 2 * m as i64), inv.term(m as i64 - 1));

    // sequence identities
    for n in -max_n..=max_n {
        l.eq(Check::TraceOracle, n, term_by_trace(order, n), u.term(n));
    }
    for n in 0..=max_n {
        l.eq(Check::ReflectionDuality, n, u.term(-n), r.term(n));
        l.eq(Check::InversionShift, n, -r.term(n + 1), inv.term(n));
    }
    let as_q = |x: BigInt| BigRational::from_integer(x);
    let coeffs: Vec<BigRational> = u.recurrence_coeffs().iter().cloned().map(as_q).collect();
    for k in 1..=max_n.max(1) {
        let window: Vec<BigRational> = (0..m as i64).map(|j| as_q(u.term(-k + m as i64 - j))).collect();
        l.eq(Check::NegativeIndexStep, -k, as_q(u.term(-k)), backward_step_rational(&coeffs, &window));
    }

    // generating functions
    let count = (bounds.max_n as usize + 1).max(m);
    for (kind, fam) in [(Kind::Standard, &u), (Kind::Reflected, &r), (Kind::Inverted, &inv)] {
        let rep = genfunc::expansion_against(fam, count)?;
        match rep.first_mismatch {
            None => l.record(Check::OgfExpansion, count as i64, kind, kind, true),
            Some(mm) => l.record(Check::OgfExpansion, mm.index, mm.expected, mm.actual, false),
        }
    }
    let link = genfunc::verify_inversion_link(order)?;
    l.record(Check::OgfInversionLink, 0, "(1/x)G(1/x) = Ĝ", link.transform_matches, link.transform_matches);
    l.record(Check::OgfInversionLink, 0, "numerator = d/dx denominator", link.numerator_is_derivative, link.numerator_is_derivative);
    let alt = build_ogf(order, Kind::Reflected).function.negate_argument().expand(count)?;
    for (n, c) in alt.into_iter().enumerate() {
        let t = r.term(n as i64);
        l.eq(Check::OgfSignAlternation, n as i64, sign_pow(n as u64) * t, c);
    }

    // Cayley–Hamilton coefficients
    for n in 0..=bounds.max_n {
        let rep = cayley::verify_with(&u, &r, n);
        for chk in [&rep.trace, &rep.determinant, &rep.reflected] {
            l.record(Check::ChIdentities, n as i64, &chk.expected, &chk.actual, chk.holds);
        }
    }
    if m == 2 {
        l.notes.push("m=2: c_1 and c_{m-1} are the same coefficient; both identities checked".into());
    }
    if m <= 4 {
        for n in 1..=bounds.max_n.min(4) {
            let brute = principal_minor_sums(&a.pow(n));
            let ch = cayley::ch_coefficients(order, n).c;
            l.eq(Check::PrincipalMinors, n as i64, format!("{brute:?}"), format!("{ch:?}"));
        }
    }

    // numeric cross-checks
    if m <= NUMERIC_MAX_M {
        let roots = find_roots(order, bounds.tol)?;
        for n in 0..=bounds.max_n.min(NUMERIC_MAX_N) {
            let exact = u.term(n as i64);
            let approx = roots.binet(n as u32, f64::INFINITY)?.value;
            let e = exact.to_f64().unwrap_or(f64::NAN);
            let ok = (approx - e).abs() / e.abs().max(1.0) < BINET_RELATIVE_TOL;
            l.record(Check::Binet, n as i64, &exact, approx, ok);

            let exact = r.term(n as i64);
            let approx = roots.reciprocal_binet(n as u32, f64::INFINITY)?.value;
            let ok = (approx - exact.to_f64().unwrap_or(f64::NAN)).abs() < RECIPROCAL_BINET_ABSOLUTE_TOL;
            l.record(Check::ReciprocalBinet, n as i64, &exact, approx, ok);
        }
        for (i, e) in roots.elementary_symmetric().into_iter().enumerate() {
            let expect = if i % 2 == 0 { 1.0 } else { -1.0 };
            let ok = (e - expect).norm() < SYMMETRIC_TOL;
            l.record(Check::NumericSymmetric, i as i64 + 1, expect, e, ok);
        }
    }
    if m <= 6 {
        for n in 0..=bounds.max_n.min(12) {
            let exact = homogeneous_sum(order, n);
            match homogeneous_sum_bruteforce(order, n as u32, HOMOGENEOUS_TOL) {
                Ok(brute) => l.eq(Check::HomogeneousSum, n as i64, exact, brute),
                Err(e) => l.record(Check::HomogeneousSum, n as i64, exact, e, false),
            }
        }
    }
    l.notes.push(format!("V-relation {}", v_relation(order, bounds.max_n).describe()));
    Ok(l)
}

fn check_dominant_roots(bounds: &Bounds, l: &mut Ledger) -> Result<()> {
    let top = bounds.max_m.min(DOMINANT_MAX_M);
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let first = dominant_root(Order::new(2)?, 1e-15)?;
    l.m = 2;
    l.record(Check::DominantRoot, 0, golden, first, (first - golden).abs() < 1e-10);
    let mut prev = first;
    for m in Order::range(3, top) {
        let rho = dominant_root(m, 1e-15)?;
        l.m = m.get();
        let ok = rho > prev && rho < 2.0 && (2.0 - rho) < (2.0 - prev);
        l.record(Check::DominantRoot, 0, format!("> {prev}"), rho, ok);
        prev = rho;
    }
    if top < bounds.max_m {
        l.notes.push(format!("dominant-root monotonicity checked for m <= {DOMINANT_MAX_M}"));
    }
    Ok(())
}

/// The family a sign-flipped recurrence would produce; used to exercise
/// the failure path.
#[cfg(test)]
pub(crate) fn sign_flipped(order: Order, kind: Kind) -> SequenceFamily {
    let mut coeffs = crate::sequences::recurrence_coeffs(order, kind);
    if kind == Kind::Reflected {
        coeffs[0] = -&coeffs[0];
    }
    SequenceFamily::with_recurrence(order, kind, coeffs, crate::sequences::initial_conditions(order, kind))
        .expect("unit trailing coefficient")
}
