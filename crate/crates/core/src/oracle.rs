//! Exact desk-scale ground truth for Diophantine tuples: membership tests,
//! regular extensions, triple classification and exhaustive searches.
//!
//! Everything in this module is integer-exact brute force. It exists to
//! validate the discard lemmas where they are directly checkable and to give
//! the bound modules something concrete to be tested against.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{is_perfect_square, is_square_u128, isqrt};
use num_integer::Roots;

/// Search guard for pairs and triples.
pub const SEARCH_LIMIT_SMALL: u64 = 1_000_000;
/// Search guard for quadruples.
pub const SEARCH_LIMIT_QUAD: u64 = 100_000;

/// A set of 2 to 5 distinct positive integers in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tuple {
    elements: Vec<BigUint>,
}

impl Tuple {
    pub fn new(elements: Vec<BigUint>) -> Result<Self> {
        if elements.len() < 2 || elements.len() > 5 {
            return Err(Error::Validation(format!(
                "tuple must have 2..=5 elements, got {}",
                elements.len()
            )));
        }
        if elements[0] < BigUint::one() {
            return Err(Error::Validation("elements must be positive".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation(
                "elements must be strictly increasing".into(),
            ));
        }
        Ok(Tuple { elements })
    }

    pub fn from_u64(elements: &[u64]) -> Result<Self> {
        Tuple::new(elements.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl std::fmt::Display for Tuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Triple types used to split the quintuple count into cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleType {
    A,
    B,
    C,
    D,
    /// Triples excluded from quintuples by other means; not classified.
    None,
}

/// True iff every pairwise product plus one is a perfect square.
pub fn is_diophantine(t: &Tuple) -> bool {
    let e = t.elements();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if !is_perfect_square(&(&e[i] * &e[j] + BigUint::one())) {
                return false;
            }
        }
    }
    true
}

/// The regular third element `c = a + b + 2r` with `r = sqrt(ab+1)`.
pub fn regular_third(a: &BigUint, b: &BigUint) -> Result<BigUint> {
    let n = a * b + BigUint::one();
    let r = isqrt(&n);
    if &r * &r != n {
        return Err(Error::Domain(format!("{a}*{b}+1 is not a perfect square")));
    }
    Ok(a + b + (r << 1u32))
}

/// The regular fourth element `d+ = a + b + c + 2abc + 2rst`.
///
/// The result is re-validated with the membership oracle so that any slip in
/// this imported formula would be caught at the call site.
pub fn regular_fourth(a: &BigUint, b: &BigUint, c: &BigUint) -> Result<BigUint> {
    let (r, s, t) = triple_roots(a, b, c)?;
    let d = a + b + c + ((a * b * c) << 1u32) + ((&r * &s * &t) << 1u32);
    let quad = Tuple::new(vec![a.clone(), b.clone(), c.clone(), d.clone()])?;
    if !is_diophantine(&quad) {
        return Err(Error::Certification(format!(
            "regular fourth of {{{a}, {b}, {c}}} failed the membership oracle"
        )));
    }
    Ok(d)
}

/// Square roots `r, s, t` of `ab+1`, `ac+1`, `bc+1`; errors unless all exist.
fn triple_roots(a: &BigUint, b: &BigUint, c: &BigUint) -> Result<(BigUint, BigUint, BigUint)> {
    let mut roots = Vec::with_capacity(3);
    for (x, y) in [(a, b), (a, c), (b, c)] {
        let n = x * y + BigUint::one();
        let r = isqrt(&n);
        if &r * &r != n {
            return Err(Error::Domain(format!(
                "{{{a}, {b}, {c}}} is not a Diophantine triple"
            )));
        }
        roots.push(r);
    }
    Ok((roots.remove(0), roots.remove(0), roots.remove(0)))
}

/// Classify a Diophantine triple `a < b < c` into the case types.
///
/// The `b^(3/2)` comparisons are exact (`c^2` against `b^3`). Returns an
/// error rather than guessing if the conditions ever overlap.
pub fn classify_triple(a: &BigUint, b: &BigUint, c: &BigUint) -> Result<TripleType> {
    if !(a < b && b < c) {
        return Err(Error::Domain("triple must satisfy a < b < c".into()));
    }
    let (r, _, _) = triple_roots(a, b, c)?;
    let four_a = a << 2u32;
    let four_a_lt_b = four_a < *b;
    let regular = *c == a + b + (&r << 1u32);
    let c2 = c * c;
    let b3 = b * b * b;
    let mut tags = Vec::new();
    if four_a_lt_b && ((a * b) << 2u32) + b + a < *c && c2 < b3 {
        tags.push(TripleType::A);
    }
    if four_a_lt_b && regular {
        tags.push(TripleType::B);
    }
    if four_a_lt_b && c2 > b3 {
        tags.push(TripleType::C);
    }
    if *b < four_a && regular {
        tags.push(TripleType::D);
    }
    match tags.len() {
        0 => Ok(TripleType::None),
        1 => Ok(tags[0]),
        _ => Err(Error::Certification(format!(
            "type conditions overlap on {{{a}, {b}, {c}}}: {tags:?}"
        ))),
    }
}

fn divisor_pairs_fast(r: u64, limit: u64) -> Vec<(u64, u64)> {
    let n = r * r - 1;
    // factor r-1 and r+1 separately (each small), then merge
    let mut f = crate::exact::factor_u64(r - 1).expect("small factor");
    for (p, e) in crate::exact::factor_u64(r + 1).expect("small factor") {
        match f.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e0)) => *e0 += e,
            None => f.push((p, e)),
        }
    }
    let mut divs = vec![1u64];
    for (p, e) in f {
        let prev_len = divs.len();
        let mut pe = 1u64;
        for _ in 0..e {
            pe = pe.saturating_mul(p);
            for i in 0..prev_len {
                if let Some(v) = divs[i].checked_mul(pe) {
                    if v <= n {
                        divs.push(v);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for &a in &divs {
        if (a as u128) * (a as u128) < n as u128 {
            let b = n / a;
            if b <= limit {
                out.push((a, b));
            }
        }
    }
    out
}

fn search_pairs(limit: u64) -> Vec<[u64; 2]> {
    let mut out = Vec::new();
    for r in 2..=limit {
        for (a, b) in divisor_pairs_fast(r, limit) {
            out.push([a, b]);
        }
    }
    out.sort_unstable();
    out
}

/// All `c` in `(above, limit]` such that `ac+1` and `bc+1` are both squares.
fn extensions(a: u64, b: u64, above: u64, limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let lo = (a as u128) * (above as u128) + 1;
    let hi = (a as u128) * (limit as u128) + 1;
    let mut s = lo.sqrt();
    while s * s < lo {
        s += 1;
    }
    while s * s <= hi {
        let m = s * s - 1;
        if m.is_multiple_of(a as u128) {
            let c = m / (a as u128);
            if c > above as u128 && c <= limit as u128 && is_square_u128((b as u128) * c + 1) {
                out.push(c as u64);
            }
        }
        s += 1;
    }
    out
}

fn search_triples(limit: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for [a, b] in search_pairs(limit) {
        for c in extensions(a, b, b, limit) {
            out.push([a, b, c]);
        }
    }
    out.sort_unstable();
    out
}

fn search_quads(limit: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for [a, b, c] in search_triples(limit) {
        for d in extensions(a, b, c, limit) {
            if is_square_u128((c as u128) * (d as u128) + 1) {
                out.push([a, b, c, d]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Exhaustive, lexicographically ordered list of all Diophantine tuples of
/// the given size with maximum element `<= limit`.
pub fn search_tuples(limit: u64, size: usize) -> Result<Vec<Tuple>> {
    let guard = match size {
        2 | 3 => SEARCH_LIMIT_SMALL,
        4 => SEARCH_LIMIT_QUAD,
        _ => {
            return Err(Error::Validation(format!(
                "search size must be 2, 3 or 4, got {size}"
            )))
        }
    };
    if limit > guard {
        return Err(Error::Refused(format!(
            "search limit {limit} exceeds guard {guard} for size {size}"
        )));
    }
    let raw: Vec<Vec<u64>> = match size {
        2 => search_pairs(limit)
            .into_iter()
            .map(|t| t.to_vec())
            .collect(),
        3 => search_triples(limit)
            .into_iter()
            .map(|t| t.to_vec())
            .collect(),
        _ => search_quads(limit)
            .into_iter()
            .map(|t| t.to_vec())
            .collect(),
    };
    raw.into_iter().map(|v| Tuple::from_u64(&v)).collect()
}

/// All `a <= a_max` such that `ab + 1` is a perfect square, by exhaustive scan.
pub fn check_pair_nonextension(b: &BigUint, a_max: u64) -> Result<Vec<BigUint>> {
    if *b < BigUint::from(2u32) {
        return Err(Error::Domain("b must be at least 2".into()));
    }
    let mut out = Vec::new();
    let mut prod = b + BigUint::one(); // 1*b + 1
    for a in 1..=a_max {
        if is_perfect_square(&prod) {
            out.push(BigUint::from(a));
        }
        prod += b;
    }
    Ok(out)
}
