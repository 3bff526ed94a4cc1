//! Largest admissible `alpha` per parameter row, and the coefficients of the
//! per-case lower bounds on the recurrence index `m`.
//!
//! Each row imposes two quadratic constraints on `alpha`:
//!
//! ```text
//! alpha^2 + (1 + 1/(2 B0 C0)) alpha <= 4
//! 3 alpha^2 + (4 B0 (lambda + rho^(-1/2)) + 2 (lambda + rho^(1/2)) / C0) alpha <= 4 B0
//! ```
//!
//! with `lambda = sqrt((A0+1)/(rho A0 + 1))`. Both are solved in closed form
//! with interval coefficients; the reported maximum is the certified lower
//! endpoint of the smaller positive root, truncated to 1e-6, and is then
//! re-certified by substitution.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::table::CaseParams;

/// Which of the two quadratic constraints produced the binding root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Binding {
    /// The constraint with leading coefficient 1 (bounded by 4).
    PlainQuadratic,
    /// The constraint with leading coefficient 3 (bounded by 4 B0).
    WeightedQuadratic,
}

#[derive(Debug, Clone)]
pub struct AlphaSolution {
    /// Certified admissible maximum, truncated to resolution 1e-6.
    pub alpha_max: Interval,
    pub lambda: Interval,
    pub binding: Binding,
    /// Enclosures of the two positive roots (diagnostic).
    pub roots: (Interval, Interval),
}

/// `lambda = sqrt((A0+1)/(rho A0+1))`.
pub fn compute_lambda(a0: u64, rho: &Interval) -> Result<Interval> {
    let one = Interval::from_u64(1);
    if !rho.gt_certain(&one) {
        return Err(Error::Domain("rho must exceed 1".into()));
    }
    let a0i = Interval::from_u64(a0);
    let num = &a0i + &one;
    let den = rho * &a0i + one;
    Ok((num / den).sqrt())
}

/// Coefficient of the linear term in the first constraint.
fn coeff_one(p: &CaseParams) -> Interval {
    let one = Interval::from_u64(1);
    let two_b0_c0 = &Interval::from_u64(2 * p.b0) * &p.c0;
    &one + &two_b0_c0.recip()
}

/// Coefficient of the linear term in the second constraint.
fn coeff_two(p: &CaseParams, lambda: &Interval) -> Interval {
    let four_b0 = Interval::from_u64(4 * p.b0);
    let two = Interval::from_u64(2);
    let sqrt_rho = p.rho.sqrt();
    let t1 = &four_b0 * &(lambda + &sqrt_rho.recip());
    let t2 = &two * &(lambda + &sqrt_rho) / &p.c0;
    &t1 + &t2
}

/// First constraint holds at `alpha` (certified).
pub fn constraint_one_holds(p: &CaseParams, alpha: &Interval) -> bool {
    let lhs = &alpha.powi(2) + &(&coeff_one(p) * alpha);
    lhs.le_certain(&Interval::from_u64(4))
}

/// Second constraint holds at `alpha` (certified).
pub fn constraint_two_holds(p: &CaseParams, alpha: &Interval) -> Result<bool> {
    let lambda = compute_lambda(p.a0, &p.rho)?;
    let three = Interval::from_u64(3);
    let lhs = &(&three * &alpha.powi(2)) + &(&coeff_two(p, &lambda) * alpha);
    Ok(lhs.le_certain(&Interval::from_u64(4 * p.b0)))
}

/// First constraint certifiably fails at `alpha`.
fn constraint_one_violated(p: &CaseParams, alpha: &Interval) -> bool {
    let lhs = &alpha.powi(2) + &(&coeff_one(p) * alpha);
    lhs.gt_certain(&Interval::from_u64(4))
}

fn constraint_two_violated(p: &CaseParams, lambda: &Interval, alpha: &Interval) -> bool {
    let three = Interval::from_u64(3);
    let lhs = &(&three * &alpha.powi(2)) + &(&coeff_two(p, lambda) * alpha);
    lhs.gt_certain(&Interval::from_u64(4 * p.b0))
}

/// Positive root of `q x^2 + c x - k = 0`.
fn positive_root(q: u64, c: &Interval, k: &Interval) -> Interval {
    let qi = Interval::from_u64(q);
    let disc = &c.powi(2) + &(&Interval::from_u64(4 * q) * k);
    (&disc.sqrt() - c) / (&Interval::from_u64(2) * &qi)
}

/// Truncate the lower endpoint down to a multiple of 1e-6.
fn truncate_micro(x: &Interval) -> Result<Interval> {
    let million = Interval::from_u64(1_000_000);
    let scaled = x * &million;
    let units: BigUint = scaled
        .floor_lo()
        .ok_or_else(|| Error::Infeasible("no positive alpha".into()))?;
    let u = units
        .to_u64()
        .ok_or_else(|| Error::Arith("alpha out of range".into()))?;
    Ok(Interval::from_ratio(u as i64, 1_000_000))
}

/// Largest admissible `alpha` for a row, certified by substitution.
pub fn max_alpha(p: &CaseParams) -> Result<AlphaSolution> {
    p.validate()?;
    let lambda = compute_lambda(p.a0, &p.rho)?;
    let r1 = positive_root(1, &coeff_one(p), &Interval::from_u64(4));
    let r2 = positive_root(3, &coeff_two(p, &lambda), &Interval::from_u64(4 * p.b0));
    let binding = if r1.le_certain(&r2) {
        Binding::PlainQuadratic
    } else {
        Binding::WeightedQuadratic
    };
    let alpha = truncate_micro(&r1.min(&r2))?;
    if !alpha.gt_certain(&Interval::from_u64(0)) {
        return Err(Error::Infeasible(format!(
            "{}: no positive admissible alpha",
            p.tag.label()
        )));
    }
    // Certify admissibility of the truncated value...
    if !(constraint_one_holds(p, &alpha) && constraint_two_holds(p, &alpha)?) {
        return Err(Error::Certification(format!(
            "{}: truncated alpha failed substitution",
            p.tag.label()
        )));
    }
    // ...and that a step of 1e-4 above it is certifiably inadmissible.
    let bumped = &alpha + &Interval::from_ratio(1, 10_000);
    if !(constraint_one_violated(p, &bumped) || constraint_two_violated(p, &lambda, &bumped)) {
        return Err(Error::Certification(format!(
            "{}: alpha + 1e-4 not certified inadmissible",
            p.tag.label()
        )));
    }
    Ok(AlphaSolution {
        alpha_max: alpha,
        lambda,
        binding,
        roots: (r1, r2),
    })
}

/// The per-row lower bound on `m`: `m > coeff * d^(num/den)` with
/// `coeff = alpha sqrt(beta)` and exponent `(1 - tau)/2`.
pub fn m_lower_coeff(p: &CaseParams, alpha: &Interval) -> (Interval, (u32, u32)) {
    let coeff = alpha * &p.beta.sqrt();
    let (tn, td) = p.tau;
    let mut num = td - tn;
    let mut den = 2 * td;
    let g = gcd(num, den);
    num /= g;
    den /= g;
    (coeff, (num, den))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
