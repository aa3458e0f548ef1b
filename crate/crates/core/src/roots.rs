//! Numeric roots of `g(x) = x^m - x^{m-1} - ... - 1` and Binet-form sums.
//!
//! Everything here is double precision and serves as a cross-check on the
//! exact paths; no exact claim depends on it.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::order::Order;
use crate::polymatrix::Polymatrix;

const MAX_ITERATIONS: usize = 500;
const INITIAL_RADIUS: f64 = 1.5;
const NEWTON_POLISH_STEPS: usize = 3;

/// All `m` roots of `g`, with the worst `|g(r)|` over the set.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    order: Order,
    roots: Vec<Complex64>,
    residual: f64,
}

/// Real part of a complex root-power sum together with its imaginary
/// leftover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetValue {
    pub value: f64,
    pub imag_residue: f64,
}

impl RootSet {
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// The root with the largest real part (the dominant real root).
    pub fn dominant(&self) -> Complex64 {
        self.roots
            .iter()
            .copied()
            .max_by(|a, b| a.re.total_cmp(&b.re))
            .expect("at least two roots")
    }

    pub fn product(&self) -> Complex64 {
        self.roots.iter().product()
    }

    /// `e_1, ..., e_m` of the roots, from expanding `prod (x - r_i)`.
    pub fn elementary_symmetric(&self) -> Vec<Complex64> {
        // coeffs of prod (1 + r_i t): e_k is the t^k coefficient
        let mut e = vec![Complex64::new(1.0, 0.0)];
        for &r in &self.roots {
            e.push(Complex64::new(0.0, 0.0));
            for k in (1..e.len()).rev() {
                let prev = e[k - 1];
                e[k] += r * prev;
            }
        }
        e.remove(0);
        e
    }

    /// `sum r_i^n`.
    pub fn binet(&self, n: u32, max_imag: f64) -> Result<BinetValue> {
        let s: Complex64 = self.roots.iter().map(|r| r.powu(n)).sum();
        check_imag(s, max_imag)
    }

    /// `sum r_i^{-n}`.
    pub fn reciprocal_binet(&self, n: u32, max_imag: f64) -> Result<BinetValue> {
        let s: Complex64 = self.roots.iter().map(|r| r.inv().powu(n)).sum();
        check_imag(s, max_imag)
    }
}

fn check_imag(s: Complex64, max_imag: f64) -> Result<BinetValue> {
    if !(s.im.abs() <= max_imag) {
        return Err(Error::NumericInstability(format!(
            "imaginary residue {:e} exceeds {max_imag:e}",
            s.im.abs()
        )));
    }
    Ok(BinetValue {
        value: s.re,
        imag_residue: s.im.abs(),
    })
}

/// Roots of `g` for `m` in `[2, 16]` by Aberth iteration started on a
/// circle of radius 1.5, then Newton-polished.
pub fn find_roots(order: Order, tol: f64) -> Result<RootSet> {
    let m = order.get();
    if m > 16 {
        return Err(Error::InvalidInput(format!(
            "numeric root finding supports m <= 16, got {m}"
        )));
    }
    check_tol(tol)?;
    let coeffs = Polymatrix::characteristic_polynomial(order).to_f64();
    let (roots, residual) = aberth(&coeffs, tol)?;

    let min_sep = roots
        .iter()
        .enumerate()
        .flat_map(|(i, a)| roots[i + 1..].iter().map(move |b| (a - b).norm()))
        .fold(f64::INFINITY, f64::min);
    if min_sep <= 10.0 * tol {
        return Err(Error::NumericInstability(format!(
            "roots not separated: minimum distance {min_sep:e}"
        )));
    }
    Ok(RootSet {
        order,
        roots,
        residual,
    })
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")))
    }
}

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    coeffs.iter().rev().fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
}

/// Simultaneous Aberth–Ehrlich iteration on a polynomial with ascending
/// real coefficients and nonzero leading term.
fn aberth(coeffs: &[f64], tol: f64) -> Result<(Vec<Complex64>, f64)> {
    let n = coeffs.len() - 1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(INITIAL_RADIUS, TAU * k as f64 / n as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }

    for r in z.iter_mut() {
        for _ in 0..NEWTON_POLISH_STEPS {
            let (p, dp) = eval_with_derivative(coeffs, *r);
            let step = p / dp;
            if step.is_finite() {
                *r -= step;
            }
        }
    }

    let lead = coeffs[n];
    let residual = z
        .iter()
        .map(|&r| (eval_with_derivative(coeffs, r).0 / lead).norm())
        .fold(0.0, f64::max);
    if !(residual <= tol) {
        return Err(Error::Convergence { residual });
    }
    z.sort_by(|a, b| b.re.total_cmp(&a.re).then(a.im.total_cmp(&b.im)));
    Ok((z, residual))
}

/// The real root of `g` in `(1, 2)`, by bisection to width `tol`.
///
/// `g` is evaluated as `x^m (x - 2) + 1`, which is `(x - 1) g(x)` and keeps
/// its sign on `(1, 2)` without the cancellation of the expanded form.
pub fn dominant_root(order: Order, tol: f64) -> Result<f64> {
    let m = order.get();
    if m > 64 {
        return Err(Error::InvalidInput(format!("dominant root supports m <= 64, got {m}")));
    }
    check_tol(tol)?;
    let h = |x: f64| x.powi(m as i32) * (x - 2.0) + 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
