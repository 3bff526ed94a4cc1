//! Upper bounds on the fourth element `d` from linear forms in logarithms:
//! the numerical constant of the underlying lower-bound theorem, the
//! `g1..g6` coefficient functions with their side conditions, the resulting
//! bound on the recurrence index `j`, and the shrinking iteration that turns
//! it into the per-case bounds on `d`.

use crate::alpha::{m_lower_coeff, max_alpha};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::table::{Case, CaseParams, CaseTag, RunConfig};

/// Constant of the `j` bound (the linear-form constant with the additive
/// remainder absorbed into the last digit).
pub const J_BOUND_CONSTANT: &str = "1.50131e11";

/// Iteration stops when log10 of the bound moves by less than this.
pub const CONVERGENCE_LOG10: f64 = 1e-3;

/// Default gap between `C0` and `C1` inside the iteration, in log10.
pub const DEFAULT_C0_OFFSET: &str = "0.01";

const MAX_ITERATIONS: usize = 200;

/// Numerical constant of the lower-bound theorem for a linear form in `n`
/// logarithms over a degree-`d` field (without the height and `log E`
/// factors): `5.3 n^(1/2-n) (n+1)^(n+1) (n+8)^2 (n+5) (31.44)^n d^2 log(3nd)`.
pub fn aleksentsev_constant(n: u64, d: u64) -> Interval {
    let ni = Interval::from_u64(n);
    let di = Interval::from_u64(d);
    let c = Interval::parse_dec("5.3").expect("literal");
    let base = Interval::parse_dec("31.44").expect("literal");
    let t_n = ni.pow_ratio(1 - 2 * n as i64, 2);
    let t_n1 = Interval::from_u64(n + 1).powi((n + 1) as usize);
    let t_n8 = Interval::from_u64(n + 8).powi(2);
    let t_n5 = Interval::from_u64(n + 5);
    let t_pow = base.powi(n as usize);
    let t_d = di.powi(2);
    let t_log = Interval::from_u64(3 * n * d).ln();
    &c * &t_n * &t_n1 * &t_n8 * &t_n5 * &t_pow * &t_d * &t_log
}

/// Which of `C0`/`C1` a coefficient used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSel {
    C0,
    C1,
}

/// The six height coefficients for one row at a given `(C0, C1)`, with the
/// certified side conditions they rely on.
#[derive(Debug, Clone)]
pub struct GVector {
    pub g1: Interval,
    pub g2: Interval,
    pub g3: Interval,
    pub g4: Interval,
    pub g5: Interval,
    pub g6: Interval,
    pub e_choice: BoundSel,
    pub f_choice: BoundSel,
    /// Variant of `g6` with the denominator `1 - rho A0/C1` that appears in
    /// the derivation; kept for comparison, numerically negligible for
    /// `C1 > 1e12`.
    pub g6_alt: Interval,
}

/// Compute `g1..g6`, certifying every side condition on the way.
pub fn g_values(p: &CaseParams, c0: &Interval, c1: &Interval) -> Result<GVector> {
    if !c0.lt_certain(c1) {
        return Err(Error::Domain("need C0 < C1".into()));
    }
    let one = Interval::from_u64(1);
    let four = Interval::from_u64(4);
    let tau = p.tau_interval();
    let (tn, td) = p.tau;
    let ln4 = four.ln();
    let ln_c1 = c1.ln();
    let a0 = Interval::from_u64(p.a0);
    let b0 = Interval::from_u64(p.b0);

    // side condition: beta * rho > 4
    if !(&p.beta * &p.rho).gt_certain(&four) {
        return Err(Error::Certification(format!(
            "{}: beta*rho > 4",
            p.tag.label()
        )));
    }
    // side condition for the fourth conjugate of the third logarithm:
    // rho B0^(1-tau) (sqrt(rho)-1)^(2 tau) > 2^(2 tau)
    let lhs = &p.rho
        * &b0.pow_ratio((td - tn) as i64, td as u64)
        * (&p.rho.sqrt() - &one).pow_ratio(2 * tn as i64, td as u64);
    let rhs = Interval::from_u64(2).pow_ratio(2 * tn as i64, td as u64);
    if !lhs.gt_certain(&rhs) {
        return Err(Error::Certification(format!(
            "{}: rho B0^(1-tau) (sqrt(rho)-1)^(2tau) > 2^(2tau)",
            p.tag.label()
        )));
    }

    let g1 = &(&one + &tau) + &(&(&ln4 - &(&p.beta * &p.rho).ln()) / &ln_c1);
    let g2 = &one + &(&(&ln4 + &a0.ln()) / &ln_c1);

    // e = C0 when beta < 4, C1 when beta > 4
    let (e, e_choice) = if p.beta.lt_certain(&four) {
        (c0, BoundSel::C0)
    } else if p.beta.gt_certain(&four) {
        (c1, BoundSel::C1)
    } else {
        return Err(Error::Certification(format!(
            "{}: beta vs 4 undecidable",
            p.tag.label()
        )));
    };
    let ln_e = e.ln();
    let e_neg_pow = e.pow_ratio(-((td + tn) as i64), td as u64); // e^-(1+tau)
    let g3 = &(&one + &tau) + &(&(&ln4 + &(&p.beta.recip() + &e_neg_pow).ln()) / &ln_e);

    let g4 = &one + &(&(&ln4 + &b0.ln()) / &ln_c1);

    // f = C1 when beta > 1, C0 when beta < 1
    let (f, f_choice) = if p.beta.gt_certain(&one) {
        (c1, BoundSel::C1)
    } else if p.beta.lt_certain(&one) {
        (c0, BoundSel::C0)
    } else {
        return Err(Error::Certification(format!(
            "{}: beta vs 1 undecidable",
            p.tag.label()
        )));
    };
    let two = Interval::from_u64(2);
    let g5 = &(&two + &(&two * &tau)) - &(&(&two * &p.beta.ln()) / &f.ln());

    let quarter_beta_rho2 = &p.beta * &p.rho.powi(2) / &four;
    let one_minus_a0 = &one - &(&a0 / c1);
    let one_minus_4 = &one - &(&four / c1);
    let g6_num = &(&quarter_beta_rho2.ln() + &(&two * &one_minus_a0.ln())) - &one_minus_4.ln();
    let g6 = &(&one - &tau) + &(&g6_num / &ln_c1);
    let one_minus_rho_a0 = &one - &(&(&p.rho * &a0) / c1);
    let g6_alt_num =
        &(&quarter_beta_rho2.ln() + &(&two * &one_minus_a0.ln())) - &one_minus_rho_a0.ln();
    let g6_alt = &(&one - &tau) + &(&g6_alt_num / &ln_c1);

    // positivity and the orderings the argument leans on
    for (name, g) in [
        ("g1", &g1),
        ("g2", &g2),
        ("g3", &g3),
        ("g4", &g4),
        ("g5", &g5),
        ("g6", &g6),
    ] {
        if !g.gt_certain(&Interval::from_u64(0)) {
            return Err(Error::Certification(format!(
                "{}: {name} > 0",
                p.tag.label()
            )));
        }
    }
    if !g2.lt_certain(&g4) {
        return Err(Error::Certification(format!("{}: g2 < g4", p.tag.label())));
    }
    if !g2.gt_certain(&g6) {
        return Err(Error::Certification(format!("{}: g2 > g6", p.tag.label())));
    }

    Ok(GVector {
        g1,
        g2,
        g3,
        g4,
        g5,
        g6,
        e_choice,
        f_choice,
        g6_alt,
    })
}

/// Right-hand side of the `j` bound at a fixed `C = C1`.
fn j_rhs(g: &GVector, ln_c0: &Interval, ln_c1: &Interval, j: &Interval) -> Interval {
    let k = Interval::parse_dec(J_BOUND_CONSTANT).expect("literal");
    let arg = &(&Interval::from_u64(2) * j) / &(&g.g6 * ln_c0);
    &k * &g.g3 * &g.g5 * &ln_c1.powi(2) * &arg.ln()
}

/// Search cap for the `j` bisection, as log10.
const J_CAP_LOG10: f64 = 60.0;

/// Largest `j` (within relative 1e-6) satisfying
/// `j < 1.50131e11 g3 g5 (log^2 C1) log(2j / (g6 log C0))`.
///
/// The bound holds on an interval of `j`; this returns a certified enclosure
/// of its upper crossing, found by bisection in log10.
pub fn solve_j_bound(p: &CaseParams, c0: &Interval, c1: &Interval) -> Result<Interval> {
    let g = g_values(p, c0, c1)?;
    solve_j_bound_with(&g, c0, c1)
}

pub fn solve_j_bound_with(g: &GVector, c0: &Interval, c1: &Interval) -> Result<Interval> {
    let ln_c0 = c0.ln();
    let ln_c1 = c1.ln();
    let admissible = |t: f64| -> Option<bool> {
        // j = 10^t as an enclosure
        let j = Interval::from_f64(t).exp10();
        let rhs = j_rhs(g, &ln_c0, &ln_c1, &j);
        if rhs.check().is_err() {
            return Some(false); // log argument not positive: unsatisfiable here
        }
        if j.lt_certain(&rhs) {
            Some(true)
        } else if j.gt_certain(&rhs) {
            Some(false)
        } else {
            None
        }
    };
    // natural scale: j ~ K g3 g5 ln^2 C1 is inside the admissible window
    let k = Interval::parse_dec(J_BOUND_CONSTANT).expect("literal");
    let base = &k * &g.g3 * &g.g5 * &ln_c1.powi(2);
    let mut t_lo = base.log10().mid_f64();
    if admissible(t_lo) != Some(true) {
        // nudge around the natural scale before giving up
        let found = [0.5f64, -0.5, 1.0, -1.0, 2.0]
            .iter()
            .map(|d| t_lo + d)
            .find(|&t| admissible(t) == Some(true));
        match found {
            Some(t) => t_lo = t,
            None => {
                return Err(Error::Divergence(
                    "no admissible j found near the natural scale".into(),
                ))
            }
        }
    }
    let mut t_hi = J_CAP_LOG10;
    if admissible(t_hi) != Some(false) {
        return Err(Error::Divergence(format!(
            "no crossing found below 1e{J_CAP_LOG10}"
        )));
    }
    // bisect to relative 1e-6 in j
    let tol = (1f64 + 1e-6).log10();
    while t_hi - t_lo > tol {
        let mid = 0.5 * (t_lo + t_hi);
        match admissible(mid) {
            Some(true) => t_lo = mid,
            Some(false) => t_hi = mid,
            None => break, // enclosure-limited; the bracket is still sound
        }
    }
    let j_lo = Interval::from_f64(t_lo).exp10();
    let j_hi = Interval::from_f64(t_hi).exp10();
    Ok(Interval::from_endpoints(&j_lo, &j_hi))
}

/// One iteration record: log10 of the bound going in and coming out.
pub type IterationStep = (f64, f64);

/// Result of the shrinking iteration for one case.
#[derive(Debug, Clone)]
pub struct DBoundResult {
    pub case_label: String,
    pub log10_d_bound: Interval,
    pub iterations: Vec<IterationStep>,
    pub converged: bool,
    /// Row whose bound was binding in the final iteration.
    pub binding_row: CaseTag,
}

/// Per-row data the iteration reuses every round.
struct RowEngine<'a> {
    params: &'a CaseParams,
    coeff: Interval,
    expo: (u32, u32),
}

impl<'a> RowEngine<'a> {
    fn new(params: &'a CaseParams) -> Result<Self> {
        // Each row contributes its own certified maximal alpha; the published
        // per-case constants correspond to the binding row.
        let sol = max_alpha(params)?;
        let (coeff, expo) = m_lower_coeff(params, &sol.alpha_max);
        Ok(RowEngine {
            params,
            coeff,
            expo,
        })
    }

    /// Upper bound on `d` assuming `d < C1`: combine the index bound
    /// `j = 2m <= j_up(C1)` with `m > coeff * d^(num/den)`.
    fn d_bound(&self, c0: &Interval, c1: &Interval) -> Result<Interval> {
        let j_up = solve_j_bound(self.params, c0, c1)?;
        let m_up = &j_up / &Interval::from_u64(2);
        let (num, den) = self.expo;
        let base = &m_up / &self.coeff;
        Ok(base.pow_ratio(den as i64, num as u64))
    }
}

/// Run the shrinking iteration over a set of rows.
///
/// Starting from the seed bound, each round assumes `d < C1`, takes `C0`
/// just below `C1`, computes every row's implied bound on `d` and keeps the
/// weakest (largest). The new bound becomes the next `C1`; iteration stops
/// when log10 moves by less than [`CONVERGENCE_LOG10`].
pub fn iterate_rows(
    rows: &[&CaseParams],
    seed_log10: &Interval,
    c0_offset_log10: &Interval,
    label: &str,
) -> Result<DBoundResult> {
    if rows.is_empty() {
        return Err(Error::Incomplete(format!("no rows for case {label}")));
    }
    let engines: Vec<RowEngine> = rows
        .iter()
        .map(|r| RowEngine::new(r))
        .collect::<Result<_>>()?;
    let mut log10_c1 = seed_log10.clone();
    let mut iterations = Vec::new();
    let mut converged = false;
    let mut binding_row = rows[0].tag;
    let mut bound = log10_c1.clone();
    for round in 0..MAX_ITERATIONS {
        let c1 = log10_c1.exp10();
        let c0 = (&log10_c1 - c0_offset_log10).exp10();
        let mut new_log10: Option<Interval> = None;
        for eng in &engines {
            let d_row = eng.d_bound(&c0, &c1)?;
            let l = d_row.log10();
            match &mut new_log10 {
                None => {
                    binding_row = eng.params.tag;
                    new_log10 = Some(l);
                }
                Some(cur) => {
                    if cur.lt_certain(&l) {
                        binding_row = eng.params.tag;
                    }
                    *cur = cur.max(&l);
                }
            }
        }
        let new_log10 = new_log10.expect("at least one row");
        iterations.push((log10_c1.mid_f64(), new_log10.mid_f64()));
        let drop = log10_c1.mid_f64() - new_log10.mid_f64();
        if drop <= 0.0 {
            if round == 0 {
                return Err(Error::NonContraction(format!(
                    "case {label}: seed 10^{:.3} does not contract (next bound 10^{:.3})",
                    log10_c1.mid_f64(),
                    new_log10.mid_f64()
                )));
            }
            // a monotone map iterated from above cannot rise; stop defensively
            bound = log10_c1.clone();
            break;
        }
        bound = new_log10.clone();
        if drop < CONVERGENCE_LOG10 {
            converged = true;
            break;
        }
        log10_c1 = new_log10;
    }
    Ok(DBoundResult {
        case_label: label.to_string(),
        log10_d_bound: bound,
        iterations,
        converged,
        binding_row,
    })
}

/// Iterated upper bound on `d` for one case, from the configured seed.
pub fn iterate_d_bound(cfg: &RunConfig, case: Case) -> Result<DBoundResult> {
    let rows = cfg.rows_for(case);
    let offset = Interval::parse_dec(DEFAULT_C0_OFFSET).expect("literal");
    iterate_rows(&rows, &cfg.seed_log10_c1, &offset, case.label())
}

/// Outcome of the small-first-element argument for case A.
#[derive(Debug, Clone)]
pub struct CaseAMaxA {
    /// Bound on `d` with the trial lower bound on `a` in force.
    pub d_result: DBoundResult,
    /// Derived bound `a < d^(1/6) / 4`.
    pub a_bound: Interval,
    /// The trial threshold (7.4e7).
    pub trial_a0: u64,
    /// Whether `a_bound < trial_a0` was certified (the contradiction closes).
    pub closes: bool,
}

/// Parameter row implied by case A when every first element is at least
/// `a0`: type A triples satisfy `a < sqrt(b)/4`, i.e. `b > 16 a^2`.
pub fn case_a_trial_row(a0: u64) -> CaseParams {
    // b > 16 a^2 >= 16 A0 a gives the ratio bound and B0 = 16 A0^2 + 1
    let sixteen_a0_sq = 16 * a0 * a0;
    let beta = Interval::from_u64(sixteen_a0_sq + 4 * a0).sqrt();
    // C > (16 a^2 + 4a) b^2; only feeds the alpha constraints, which barely
    // depend on it at this size
    let c0 = &beta.powi(2) * &Interval::from_u64(sixteen_a0_sq).powi(2);
    CaseParams {
        tag: CaseTag::AI,
        a0,
        b0: sixteen_a0_sq + 1,
        c0,
        rho: Interval::from_u64(16 * a0),
        beta,
        tau: (1, 2),
        published_alpha: Interval::parse_dec("1.5615").expect("literal"),
    }
}

/// Rerun the case A pipeline with the trial bound `a >= 7.4e7` and derive
/// the contradiction on the size of `a`.
pub fn case_a_max_a(cfg: &RunConfig) -> Result<CaseAMaxA> {
    let trial_a0: u64 = 74_000_000;
    // seed from the proven case A bound
    let case_a = iterate_d_bound(cfg, Case::A)?;
    let row = case_a_trial_row(trial_a0);
    let offset = Interval::parse_dec(DEFAULT_C0_OFFSET).expect("literal");
    let d_result = iterate_rows(&[&row], &case_a.log10_d_bound, &offset, "A(a large)")?;
    let d = d_result.log10_d_bound.exp10();
    let a_bound = &d.pow_ratio(1, 6) / &Interval::from_u64(4);
    let closes = a_bound.lt_certain(&Interval::from_u64(trial_a0));
    if !closes {
        return Err(Error::Certification(format!(
            "a < {} not certified (got a < {:.4e})",
            trial_a0,
            a_bound.hi_f64()
        )));
    }
    Ok(CaseAMaxA {
        d_result,
        a_bound,
        trial_a0,
        closes,
    })
}
