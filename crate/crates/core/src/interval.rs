//! Outward-rounded interval arithmetic.
//!
//! Every operation returns an enclosure of the exact result: the low
//! endpoint is computed with rounding toward negative infinity, the high
//! endpoint toward positive infinity. A comparison such as [`Interval::lt_certain`]
//! only reports `true` when it holds for every point of both enclosures,
//! which is what makes downstream inequality checks certified rather than
//! merely plausible.
//!
//! Endpoints are arbitrary-precision binary floats; the default precision is
//! 128 significant bits and can be raised globally with [`set_default_precision`].

use std::cell::RefCell;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

const DOWN: RoundingMode = RoundingMode::Down;
const UP: RoundingMode = RoundingMode::Up;

static DEFAULT_PREC: AtomicUsize = AtomicUsize::new(128);

/// Set the default endpoint precision in bits (minimum 64).
pub fn set_default_precision(bits: usize) {
    DEFAULT_PREC.store(bits.max(64), AtomicOrdering::Relaxed);
}

/// Current default endpoint precision in bits.
pub fn default_precision() -> usize {
    DEFAULT_PREC.load(AtomicOrdering::Relaxed)
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// A closed real interval `[lo, hi]` with outward-rounded endpoints.
#[derive(Clone)]
pub struct Interval {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

fn bf_le(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(c) if c <= 0)
}

fn bf_min(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_le(&a, &b) {
        a
    } else {
        b
    }
}

fn bf_max(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_le(&a, &b) {
        b
    } else {
        a
    }
}

impl Interval {
    fn make(lo: BigFloat, hi: BigFloat, prec: usize) -> Self {
        debug_assert!(
            lo.is_nan() || hi.is_nan() || bf_le(&lo, &hi),
            "interval endpoints out of order"
        );
        Interval { lo, hi, prec }
    }

    fn poisoned(prec: usize) -> Self {
        Interval {
            lo: BigFloat::nan(None),
            hi: BigFloat::nan(None),
            prec,
        }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    /// True when both endpoints are ordinary finite numbers.
    pub fn is_finite(&self) -> bool {
        !(self.lo.is_nan() || self.hi.is_nan() || self.lo.is_inf() || self.hi.is_inf())
    }

    pub fn check(&self) -> Result<&Self> {
        if self.lo.is_nan() || self.hi.is_nan() {
            Err(Error::Arith("NaN endpoint in interval".into()))
        } else {
            Ok(self)
        }
    }

    // ---- constructors ----

    pub fn from_u64(v: u64) -> Self {
        let p = default_precision();
        let x = BigFloat::from_u64(v, p.max(64));
        Interval::make(x.clone(), x, p)
    }

    pub fn from_i64(v: i64) -> Self {
        let p = default_precision();
        let x = BigFloat::from_i64(v, p.max(64));
        Interval::make(x.clone(), x, p)
    }

    pub fn from_u128(v: u128) -> Self {
        let p = default_precision();
        let x = BigFloat::from_u128(v, p.max(128));
        Interval::make(x.clone(), x, p)
    }

    pub fn from_f64(v: f64) -> Self {
        let p = default_precision();
        let x = BigFloat::from_f64(v, p.max(64));
        Interval::make(x.clone(), x, p)
    }

    /// Exact enclosure of an arbitrary-precision integer.
    pub fn from_biguint(v: &BigUint) -> Self {
        let p = default_precision();
        let s = v.to_string();
        let lo = with_cc(|cc| BigFloat::parse(&s, Radix::Dec, p, DOWN, cc));
        let hi = with_cc(|cc| BigFloat::parse(&s, Radix::Dec, p, UP, cc));
        Interval::make(lo, hi, p)
    }

    /// Enclosure of an exact rational `num/den`.
    pub fn from_ratio(num: i64, den: u64) -> Self {
        Interval::from_i64(num) / Interval::from_u64(den)
    }

    /// Outward enclosure of a decimal literal such as `"1.5013e11"` or `"-0.957"`.
    ///
    /// This is how published decimal constants enter the computation: the
    /// literal is treated as an exact rational and enclosed from both sides.
    pub fn parse_dec(s: &str) -> Result<Self> {
        let p = default_precision();
        let lo = with_cc(|cc| BigFloat::parse(s, Radix::Dec, p, DOWN, cc));
        let hi = with_cc(|cc| BigFloat::parse(s, Radix::Dec, p, UP, cc));
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::Validation(format!("not a decimal literal: {s:?}")));
        }
        Ok(Interval::make(lo, hi, p))
    }

    /// Interval from explicit endpoints (already outward).
    pub fn from_endpoints(lo: &Interval, hi: &Interval) -> Self {
        Interval::make(lo.lo.clone(), hi.hi.clone(), lo.prec.max(hi.prec))
    }

    pub fn pi() -> Self {
        let p = default_precision();
        let lo = with_cc(|cc| cc.pi(p, DOWN));
        let hi = with_cc(|cc| cc.pi(p, UP));
        Interval::make(lo, hi, p)
    }

    // ---- arithmetic ----

    fn binop_prec(&self, rhs: &Interval) -> usize {
        self.prec.max(rhs.prec)
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        let p = self.binop_prec(rhs);
        Interval::make(
            self.lo.add(&rhs.lo, p, DOWN),
            self.hi.add(&rhs.hi, p, UP),
            p,
        )
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        let p = self.binop_prec(rhs);
        Interval::make(
            self.lo.sub(&rhs.hi, p, DOWN),
            self.hi.sub(&rhs.lo, p, UP),
            p,
        )
    }

    pub fn neg(&self) -> Interval {
        Interval::make(self.hi.neg(), self.lo.neg(), self.prec)
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let p = self.binop_prec(rhs);
        if self.lo.is_nan() || rhs.lo.is_nan() {
            return Interval::poisoned(p);
        }
        // Fast path: both intervals non-negative.
        if !self.lo.is_negative() && !rhs.lo.is_negative() {
            return Interval::make(
                self.lo.mul(&rhs.lo, p, DOWN),
                self.hi.mul(&rhs.hi, p, UP),
                p,
            );
        }
        let cands_d = [
            self.lo.mul(&rhs.lo, p, DOWN),
            self.lo.mul(&rhs.hi, p, DOWN),
            self.hi.mul(&rhs.lo, p, DOWN),
            self.hi.mul(&rhs.hi, p, DOWN),
        ];
        let cands_u = [
            self.lo.mul(&rhs.lo, p, UP),
            self.lo.mul(&rhs.hi, p, UP),
            self.hi.mul(&rhs.lo, p, UP),
            self.hi.mul(&rhs.hi, p, UP),
        ];
        let mut lo = cands_d[0].clone();
        for c in &cands_d[1..] {
            lo = bf_min(lo, c.clone());
        }
        let mut hi = cands_u[0].clone();
        for c in &cands_u[1..] {
            hi = bf_max(hi, c.clone());
        }
        Interval::make(lo, hi, p)
    }

    /// True when the interval contains zero (including an endpoint).
    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn div(&self, rhs: &Interval) -> Interval {
        let p = self.binop_prec(rhs);
        if self.lo.is_nan() || rhs.lo.is_nan() {
            return Interval::poisoned(p);
        }
        if rhs.contains_zero() {
            // Sound but useless enclosure; certified comparisons downstream fail.
            return Interval::make(astro_float::INF_NEG, astro_float::INF_POS, p);
        }
        if !self.lo.is_negative() && rhs.lo.is_positive() {
            return Interval::make(
                self.lo.div(&rhs.hi, p, DOWN),
                self.hi.div(&rhs.lo, p, UP),
                p,
            );
        }
        let cands_d = [
            self.lo.div(&rhs.lo, p, DOWN),
            self.lo.div(&rhs.hi, p, DOWN),
            self.hi.div(&rhs.lo, p, DOWN),
            self.hi.div(&rhs.hi, p, DOWN),
        ];
        let cands_u = [
            self.lo.div(&rhs.lo, p, UP),
            self.lo.div(&rhs.hi, p, UP),
            self.hi.div(&rhs.lo, p, UP),
            self.hi.div(&rhs.hi, p, UP),
        ];
        let mut lo = cands_d[0].clone();
        for c in &cands_d[1..] {
            lo = bf_min(lo, c.clone());
        }
        let mut hi = cands_u[0].clone();
        for c in &cands_u[1..] {
            hi = bf_max(hi, c.clone());
        }
        Interval::make(lo, hi, p)
    }

    pub fn recip(&self) -> Interval {
        Interval::from_u64(1).div(self)
    }

    /// Square root; requires a non-negative lower endpoint.
    pub fn sqrt(&self) -> Interval {
        if self.lo.is_negative() || self.lo.is_nan() {
            return Interval::poisoned(self.prec);
        }
        let p = self.prec;
        Interval::make(self.lo.sqrt(p, DOWN), self.hi.sqrt(p, UP), p)
    }

    pub fn cbrt(&self) -> Interval {
        let p = self.prec;
        Interval::make(self.lo.cbrt(p, DOWN), self.hi.cbrt(p, UP), p)
    }

    /// Natural logarithm; requires a positive lower endpoint.
    pub fn ln(&self) -> Interval {
        if !self.lo.is_positive() || self.lo.is_nan() {
            return Interval::poisoned(self.prec);
        }
        let p = self.prec;
        let lo = with_cc(|cc| self.lo.ln(p, DOWN, cc));
        let hi = with_cc(|cc| self.hi.ln(p, UP, cc));
        Interval::make(lo, hi, p)
    }

    pub fn log10(&self) -> Interval {
        if !self.lo.is_positive() || self.lo.is_nan() {
            return Interval::poisoned(self.prec);
        }
        let p = self.prec;
        let lo = with_cc(|cc| self.lo.log10(p, DOWN, cc));
        let hi = with_cc(|cc| self.hi.log10(p, UP, cc));
        Interval::make(lo, hi, p)
    }

    pub fn exp(&self) -> Interval {
        if self.lo.is_nan() {
            return Interval::poisoned(self.prec);
        }
        let p = self.prec;
        let lo = with_cc(|cc| self.lo.exp(p, DOWN, cc));
        let hi = with_cc(|cc| self.hi.exp(p, UP, cc));
        Interval::make(lo, hi, p)
    }

    /// Integer power; requires a non-negative lower endpoint (all uses here
    /// have positive bases).
    pub fn powi(&self, n: usize) -> Interval {
        if self.lo.is_negative() || self.lo.is_nan() {
            return Interval::poisoned(self.prec);
        }
        if n == 0 {
            return Interval::from_u64(1);
        }
        let p = self.prec;
        Interval::make(self.lo.powi(n, p, DOWN), self.hi.powi(n, p, UP), p)
    }

    /// General power for positive bases, via `exp(y ln x)`.
    pub fn pow(&self, y: &Interval) -> Interval {
        self.ln().mul(y).exp()
    }

    /// Rational power `x^(num/den)` for positive bases.
    pub fn pow_ratio(&self, num: i64, den: u64) -> Interval {
        self.pow(&Interval::from_ratio(num, den))
    }

    /// Exponentiation of 10 (used for seed bounds given as log10 values).
    pub fn exp10(&self) -> Interval {
        Interval::from_u64(10).pow(self)
    }

    // ---- lattice helpers ----

    /// Pointwise minimum: encloses `min(x, y)` for `x` in `self`, `y` in `rhs`.
    pub fn min(&self, rhs: &Interval) -> Interval {
        Interval::make(
            bf_min(self.lo.clone(), rhs.lo.clone()),
            bf_min(self.hi.clone(), rhs.hi.clone()),
            self.binop_prec(rhs),
        )
    }

    /// Pointwise maximum.
    pub fn max(&self, rhs: &Interval) -> Interval {
        Interval::make(
            bf_max(self.lo.clone(), rhs.lo.clone()),
            bf_max(self.hi.clone(), rhs.hi.clone()),
            self.binop_prec(rhs),
        )
    }

    /// Union hull of two enclosures.
    pub fn hull(&self, rhs: &Interval) -> Interval {
        Interval::make(
            bf_min(self.lo.clone(), rhs.lo.clone()),
            bf_max(self.hi.clone(), rhs.hi.clone()),
            self.binop_prec(rhs),
        )
    }

    // ---- certified comparisons ----

    /// Certified `self < rhs`: true only if every point of `self` is below
    /// every point of `rhs`.
    pub fn lt_certain(&self, rhs: &Interval) -> bool {
        matches!(self.hi.cmp(&rhs.lo), Some(c) if c < 0)
    }

    pub fn le_certain(&self, rhs: &Interval) -> bool {
        matches!(self.hi.cmp(&rhs.lo), Some(c) if c <= 0)
    }

    pub fn gt_certain(&self, rhs: &Interval) -> bool {
        rhs.lt_certain(self)
    }

    pub fn ge_certain(&self, rhs: &Interval) -> bool {
        rhs.le_certain(self)
    }

    /// Certified comparison against an exact `f64` (e.g. a tolerance).
    pub fn le_f64(&self, rhs: f64) -> bool {
        self.le_certain(&Interval::from_f64(rhs))
    }

    pub fn ge_f64(&self, rhs: f64) -> bool {
        self.ge_certain(&Interval::from_f64(rhs))
    }

    /// True when `x` is contained in the enclosure.
    pub fn contains_f64(&self, x: f64) -> bool {
        let v = BigFloat::from_f64(x, self.prec);
        bf_le(&self.lo, &v) && bf_le(&v, &self.hi)
    }

    pub fn contains(&self, other: &Interval) -> bool {
        bf_le(&self.lo, &other.lo) && bf_le(&other.hi, &self.hi)
    }

    // ---- export ----

    pub fn lo_f64(&self) -> f64 {
        bf_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        bf_to_f64(&self.hi)
    }

    /// Approximate midpoint as `f64` (display only, not certified).
    pub fn mid_f64(&self) -> f64 {
        let (a, b) = (self.lo_f64(), self.hi_f64());
        a + (b - a) / 2.0
    }

    /// Relative width `(hi - lo) / |mid|` as `f64`; 0 for a point.
    pub fn rel_width(&self) -> f64 {
        let (a, b) = (self.lo_f64(), self.hi_f64());
        if a == b {
            return 0.0;
        }
        let m = self.mid_f64().abs();
        if m == 0.0 {
            b - a
        } else {
            (b - a) / m
        }
    }

    /// Largest integer certainly `<=` every point of the interval, i.e.
    /// `floor(lo)`; `None` for negative, NaN or infinite lower endpoints.
    pub fn floor_lo(&self) -> Option<BigUint> {
        bf_floor_biguint(&self.lo)
    }

    /// `floor` of the whole enclosure when unambiguous: requires
    /// `floor(lo) == floor(hi)`.
    pub fn floor_exact(&self) -> Option<BigUint> {
        let a = bf_floor_biguint(&self.lo)?;
        let b = bf_floor_biguint(&self.hi)?;
        if a == b {
            Some(a)
        } else {
            None
        }
    }
}

/// Approximate conversion to `f64` from the leading mantissa bits.
pub fn bf_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let (words, _n, sign, exp, _) = x.as_raw_parts().expect("finite value has raw parts");
    let word_bits = astro_float::WORD_BIT_SIZE;
    // Collect the top 64 mantissa bits.
    let mut top: u128 = 0;
    let mut got = 0usize;
    for w in words.iter().rev() {
        top = (top << word_bits) | (*w as u128);
        got += word_bits;
        if got >= 64 {
            break;
        }
    }
    let shift = got.saturating_sub(64);
    let m = (top >> shift) as u64;
    let e = exp as i64 - 64;
    let mut v = m as f64;
    // Apply 2^e in two steps to avoid premature overflow of powi.
    let half = (e / 2) as i32;
    v *= 2f64.powi(half);
    v *= 2f64.powi((e - half as i64) as i32);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// `floor` of a non-negative finite value as an exact big integer.
pub fn bf_floor_biguint(x: &BigFloat) -> Option<BigUint> {
    if x.is_nan() || x.is_inf() {
        return None;
    }
    if x.is_zero() {
        return Some(BigUint::zero());
    }
    if x.is_negative() {
        return None;
    }
    let (words, _n, _sign, exp, _) = x.as_raw_parts()?;
    let word_bits = astro_float::WORD_BIT_SIZE;
    let total_bits = (words.len() * word_bits) as i64;
    let mut m = BigUint::zero();
    for w in words.iter().rev() {
        m = (m << word_bits) | BigUint::from(*w);
    }
    let shift = exp as i64 - total_bits;
    if shift >= 0 {
        Some(m << (shift as usize))
    } else {
        Some(m >> ((-shift) as usize))
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo_f64(), self.hi_f64())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.lo_f64(), self.hi_f64());
        if a == b {
            write!(f, "{a:.6e}")
        } else {
            write!(f, "{:.6e} (∈ [{:.6e}, {:.6e}])", self.mid_f64(), a, b)
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Interval {
            type Output = Interval;
            fn $method(self, rhs: &Interval) -> Interval {
                Interval::$method(self, rhs)
            }
        }
        impl std::ops::$trait for Interval {
            type Output = Interval;
            fn $method(self, rhs: Interval) -> Interval {
                Interval::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Interval> for Interval {
            type Output = Interval;
            fn $method(self, rhs: &Interval) -> Interval {
                Interval::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Interval> for &Interval {
            type Output = Interval;
            fn $method(self, rhs: Interval) -> Interval {
                Interval::$method(self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl std::ops::Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(self)
    }
}
