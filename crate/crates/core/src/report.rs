//! Certification records: every recomputed constant next to its published
//! value, the check applied, and the outcome. The CLI renders these as a
//! table or as stable machine-readable records; the acceptance suite asserts
//! on them.

use num_bigint::BigUint;
use serde::Serialize;

use crate::alpha::{m_lower_coeff, max_alpha};
use crate::counting::{
    count_case_a, count_case_b, count_case_c, count_case_d, m_split_thresholds, optimize_eta,
    present_upper, Multipliers, TotalReport,
};
use crate::error::Result;
use crate::interval::Interval;
use crate::logforms::{aleksentsev_constant, case_a_max_a, iterate_d_bound};
use crate::primeswap::run_prime_swap;
use crate::table::{Case, CaseTag, RunConfig};

/// One recomputed constant with its published reference and check outcome.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantRecord {
    /// Stable reference id, e.g. `dbound.A.log10`.
    pub id: String,
    /// Acceptance criterion this record belongs to.
    pub criterion: u32,
    /// Enclosure endpoints (approximate display values).
    pub lo: f64,
    pub hi: f64,
    /// Published value or expectation this is checked against.
    pub published: String,
    /// Description of the check.
    pub check: String,
    pub pass: bool,
    /// Extra context, especially for known discrepancies.
    pub note: String,
}

impl ConstantRecord {
    fn new(
        id: &str,
        criterion: u32,
        value: Option<&Interval>,
        published: &str,
        check: &str,
        pass: bool,
        note: &str,
    ) -> Self {
        ConstantRecord {
            id: id.to_string(),
            criterion,
            lo: value.map_or(f64::NAN, |v| v.lo_f64()),
            hi: value.map_or(f64::NAN, |v| v.hi_f64()),
            published: published.to_string(),
            check: check.to_string(),
            pass,
            note: note.to_string(),
        }
    }
}

/// Relative agreement with a published decimal, judged at the midpoint.
fn rel_check(
    id: &str,
    criterion: u32,
    value: &Interval,
    published: &str,
    pct: f64,
    note: &str,
) -> ConstantRecord {
    let p = Interval::parse_dec(published).expect("published literal");
    let rel = (value.mid_f64() - p.mid_f64()).abs() / p.mid_f64().abs();
    ConstantRecord::new(
        id,
        criterion,
        Some(value),
        published,
        &format!("relative deviation {rel:.2e} <= {:.0e}", pct / 100.0),
        rel <= pct / 100.0,
        note,
    )
}

/// Absolute agreement (for log10 values and fixed-decimal constants).
fn abs_check(
    id: &str,
    criterion: u32,
    value: &Interval,
    published: f64,
    tol: f64,
    note: &str,
) -> ConstantRecord {
    let dev = (value.mid_f64() - published).abs();
    ConstantRecord::new(
        id,
        criterion,
        Some(value),
        &format!("{published}"),
        &format!("absolute deviation {dev:.2e} <= {tol:.0e}"),
        dev <= tol,
        note,
    )
}

/// Certified one-sided bound: `value <= published`.
fn upper_check(
    id: &str,
    criterion: u32,
    value: &Interval,
    published: &str,
    note: &str,
) -> ConstantRecord {
    let p = Interval::parse_dec(published).expect("published literal");
    ConstantRecord::new(
        id,
        criterion,
        Some(value),
        published,
        "certified <= published",
        value.le_certain(&p),
        note,
    )
}

fn exact_check(
    id: &str,
    criterion: u32,
    value: &BigUint,
    published: &str,
    note: &str,
) -> ConstantRecord {
    let pass = value.to_string() == published;
    ConstantRecord::new(
        id,
        criterion,
        None,
        published,
        &format!("exact integer match (got {value})"),
        pass,
        note,
    )
}

fn flag_check(id: &str, criterion: u32, pass: bool, expectation: &str) -> ConstantRecord {
    ConstantRecord::new(
        id,
        criterion,
        None,
        expectation,
        "expected condition",
        pass,
        "",
    )
}

/// The full certification pipeline over every published constant.
#[derive(Debug, Serialize)]
pub struct CertificationReport {
    pub records: Vec<ConstantRecord>,
    pub overrides: Vec<String>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn first_failure(&self) -> Option<&ConstantRecord> {
        self.records.iter().find(|r| !r.pass)
    }
}

/// Run the full pipeline and populate one record per published constant.
pub fn run_certification(cfg: &RunConfig) -> Result<CertificationReport> {
    let mut rec = Vec::new();

    // ---- admissible alphas and their analytic limits (criterion 1) ----
    let lim_a = (&Interval::from_u64(17).sqrt() - &Interval::from_u64(1)) / &Interval::from_u64(2);
    let lim_d = (&Interval::from_u64(1) + &Interval::from_u64(3).sqrt()) / &Interval::from_u64(2);
    rec.push(abs_check(
        "alpha.limit.caseA",
        1,
        &lim_a,
        1.561_552_8,
        1e-6,
        "root of x^2 + x = 4",
    ));
    rec.push(abs_check(
        "alpha.limit.caseD",
        1,
        &lim_d,
        1.366_025,
        1e-6,
        "(1 + sqrt(3))/2",
    ));
    for row in &cfg.rows {
        let sol = max_alpha(row)?;
        let tag = row.tag.label();
        let admissible = crate::alpha::constraint_one_holds(row, &row.published_alpha)
            && crate::alpha::constraint_two_holds(row, &row.published_alpha)?;
        rec.push(flag_check(
            &format!("alpha.{tag}.published-admissible"),
            1,
            admissible,
            "published alpha satisfies both constraints (certified)",
        ));
        let limit = match row.tag.case() {
            Case::D => &lim_d,
            _ => &lim_a,
        };
        let in_window = row.published_alpha.le_certain(&sol.alpha_max)
            && sol
                .alpha_max
                .le_certain(&(limit + &Interval::parse_dec("1e-6").expect("literal")));
        rec.push(ConstantRecord::new(
            &format!("alpha.{tag}.max"),
            1,
            Some(&sol.alpha_max),
            &format!("in [published alpha, {}]", limit.mid_f64()),
            "certified window membership",
            in_window,
            "",
        ));
    }

    // ---- index lower-bound coefficients (criterion 2) ----
    let coeff_at_published = |tag: CaseTag| -> Interval {
        let row = cfg.rows.iter().find(|r| r.tag == tag).expect("row");
        m_lower_coeff(row, &row.published_alpha).0
    };
    let min_a = coeff_at_published(CaseTag::AI).min(&coeff_at_published(CaseTag::AII));
    rec.push(abs_check("mcoeff.A", 2, &min_a, 3.3022, 1e-4, ""));
    let min_c = coeff_at_published(CaseTag::CI).min(&coeff_at_published(CaseTag::CII));
    rec.push(abs_check("mcoeff.C", 2, &min_c, 2.0604, 1e-4, ""));
    rec.push(abs_check(
        "mcoeff.D",
        2,
        &coeff_at_published(CaseTag::D),
        1.0080,
        1e-4,
        "",
    ));
    rec.push(abs_check(
        "mcoeff.B.BI",
        2,
        &coeff_at_published(CaseTag::BI),
        1.5002,
        1e-4,
        "",
    ));
    let bii = coeff_at_published(CaseTag::BII);
    rec.push(abs_check(
        "mcoeff.B.BII",
        2,
        &bii,
        1.3458,
        1e-3,
        "discrepancy: at the shared published alpha the BII row gives ~1.3458, \
         weaker than the published case constant 1.5002 (which matches BI); \
         the bound pipeline closes the gap by running BII at its own larger \
         certified alpha",
    ));

    // ---- linear-form constant (criterion 3) ----
    let alek = aleksentsev_constant(3, 4);
    let window_lo = Interval::parse_dec("1.50125e11").expect("literal");
    let window_hi = Interval::parse_dec("1.50135e11").expect("literal");
    rec.push(ConstantRecord::new(
        "logform.constant.3.4",
        3,
        Some(&alek),
        "1.5013e11",
        "rounds to the published 4 significant figures (certified window)",
        window_lo.le_certain(&alek) && alek.le_certain(&window_hi),
        "",
    ));

    // ---- iterated bounds on d (criterion 4) ----
    let mut uds = Vec::new();
    for (case, published) in [
        (Case::A, 67.859),
        (Case::B, 60.057),
        (Case::C, 56.528),
        (Case::D, 51.416),
    ] {
        let r = iterate_d_bound(cfg, case)?;
        rec.push(abs_check(
            &format!("dbound.{}.log10", case.label()),
            4,
            &r.log10_d_bound,
            published,
            0.1,
            &format!(
                "converged in {} iterations, binding row {}",
                r.iterations.len(),
                r.binding_row.label()
            ),
        ));
        let (bound, from_published) = crate::counting::counting_bound(&r, case);
        rec.push(flag_check(
            &format!("dbound.{}.certifies-published", case.label()),
            4,
            from_published,
            "recomputed bound certifiably at or below the published one",
        ));
        // counts are evaluated at the published bound it certifies
        uds.push(bound);
    }

    // ---- small-first-element contradiction (criterion 5) ----
    let maxa = case_a_max_a(cfg)?;
    rec.push(abs_check(
        "largea.d.log10",
        5,
        &maxa.d_result.log10_d_bound,
        6.1e50f64.log10(),
        0.1,
        "bound on d with a >= 7.4e7 in force",
    ));
    rec.push(upper_check(
        "largea.a",
        5,
        &maxa.a_bound,
        "7.29e7",
        "derived a < d^(1/6)/4; contradicts a >= 7.4e7",
    ));
    rec.push(flag_check(
        "largea.contradiction",
        5,
        maxa.closes,
        "a bound certifiably below the trial threshold",
    ));

    // ---- case counts (criterion 7) ----
    let mult = Multipliers::default();
    let case_a = count_case_a(&uds[0], &cfg.m_thresholds, cfg.prime_swap, &mult)?;
    rec.push(rel_check(
        "counts.A.radius",
        7,
        &case_a.radius,
        "4.611e16",
        1.0,
        "",
    ));
    rec.push(rel_check(
        "counts.A.doubles",
        7,
        &case_a.doubles,
        "4.080e19",
        1.0,
        "",
    ));
    rec.push(rel_check(
        "counts.A.unrefined",
        7,
        &case_a.unrefined_published,
        "8.215e27",
        1.0,
        "one-range form at the window cap 23",
    ));
    let case_b = count_case_b(&uds[1], &mult)?;
    rec.push(rel_check(
        "counts.B.total",
        7,
        &case_b.subtotal,
        "2.0e23",
        1.0,
        &format!(
            "recomputed {:.4e}; the published 2.0e23 is the two-digit round-up \
             of 4 x 4.91e22 and sits ~2% above the closed-form value, outside \
             the 1% tolerance; the presentation round-up reproduces the digits: {}",
            case_b.subtotal.mid_f64(),
            present_upper(&case_b.subtotal, 2)
                .map(|p| p.0)
                .unwrap_or_default()
        ),
    ));
    rec.push(rel_check(
        "counts.B.doubles",
        7,
        &(&case_b.subtotal / &Interval::from_u64(4)),
        "4.91e22",
        1.0,
        "half the divisor sum at R_B",
    ));
    let eta_pub = Interval::parse_dec("6.76e10").expect("literal");
    let split_pub = count_case_c(&uds[2], &eta_pub, &mult)?;
    rec.push(rel_check(
        "counts.C.minmax-at-published-eta",
        7,
        &split_pub.minmax(),
        "2.41e22",
        1.0,
        &format!(
            "recomputed {:.4e}: both branch formulas evaluate near 2.41e24 and \
             cross at the published eta (ratio {:.3}), which points to an \
             exponent misprint in the published 2.41e22",
            split_pub.minmax().mid_f64(),
            split_pub.branch_large_a.mid_f64() / split_pub.branch_small_a.mid_f64()
        ),
    ));
    let opt = match &cfg.eta {
        Some(eta) => count_case_c(&uds[2], eta, &mult)?,
        None => optimize_eta(&uds[2], &mult)?,
    };
    rec.push(rel_check(
        "counts.C.eta-optimum",
        7,
        &opt.eta,
        "6.76e10",
        1.0,
        "split point minimising the larger branch",
    ));
    rec.push(rel_check(
        "counts.C.minmax-recomputed",
        7,
        &opt.minmax(),
        "2.41e24",
        1.0,
        "the published value with the exponent corrected",
    ));
    let case_d = count_case_d(&uds[3], &mult)?;
    rec.push(rel_check(
        "counts.D.total",
        7,
        &case_d.subtotal,
        "2.07e19",
        1.0,
        "",
    ));
    rec.push(rel_check(
        "counts.D.radius",
        7,
        &case_d.radius,
        "1.05e17",
        1.0,
        "",
    ));

    // ---- split thresholds and the refined count (criterion 8) ----
    let (ud_a_lit, ud_a_presented) = present_upper(&uds[0], 4)?;
    let thresholds = m_split_thresholds(&ud_a_presented, &[14, 15, 16, 17, 18, 19, 20, 21])?;
    rec.push(exact_check(
        "split.m1",
        8,
        &thresholds[0].exact,
        "177",
        &format!("from the presented bound {ud_a_lit}"),
    ));
    rec.push(exact_check(
        "split.m2",
        8,
        &thresholds[1].exact,
        "499686",
        "",
    ));
    for (t, published) in thresholds[2..].iter().zip([
        "1700000000",
        "6400000000000",
        "29000000000000000",
        "140000000000000000000",
        "780000000000000000000000",
        "4800000000000000000000000000",
    ]) {
        rec.push(exact_check(
            &format!("split.m{}", t.omega - 13),
            8,
            &t.two_sig,
            published,
            "two significant figures, rounded down",
        ));
    }
    rec.push(rel_check(
        "counts.A.refined",
        8,
        &case_a.refined,
        "1.177e27",
        1.0,
        "range-split form with the prime-swap cap",
    ));
    rec.push(flag_check(
        "counts.A.refined-below-unrefined",
        8,
        case_a.refined.lt_certain(&case_a.unrefined_published),
        "refined count certifiably below the one-range form",
    ));

    // ---- grand total (criterion 9) ----
    let total = &(&case_a.refined + &case_b.subtotal) + &(&opt.minmax() + &case_d.subtotal);
    rec.push(upper_check(
        "counts.total",
        9,
        &total,
        "1.18e27",
        "sum of refined case A, B, C (at the optimum), D",
    ));

    // ---- prime-swap enumeration (criterion 10) ----
    let swap = run_prime_swap(&uds[0])?;
    let vs: Vec<u32> = swap.v_by_a.iter().map(|&(_, v)| v).collect();
    rec.push(flag_check(
        "primeswap.v",
        10,
        vs == vec![2, 3, 0, 3, 0, 0, 0],
        "v = (2,3,0,3,0,0,0) for a = 1..7",
    ));
    let (wlo, whi) = crate::primeswap::published_window();
    let forced = crate::primeswap::forced_small_primes(&wlo, &whi)?;
    rec.push(flag_check(
        "primeswap.forced",
        10,
        forced == vec![2, 3, 5, 7, 11],
        "forced primes {2,3,5,7,11}",
    ));
    rec.push(flag_check(
        "primeswap.q",
        10,
        swap.candidates.iter().all(|c| c.q == 1),
        "excess multiplier q = 1 throughout",
    ));
    let survivors: usize = swap.reports.iter().map(|r| r.survivors.len()).sum();
    rec.push(ConstantRecord::new(
        "primeswap.survivors",
        10,
        None,
        "0",
        &format!(
            "square-pair discharge over {} candidates left {survivors}",
            swap.candidates.len()
        ),
        survivors == 0,
        "zero survivors lowers the distinct-prime-factor cap to 22",
    ));

    Ok(CertificationReport {
        records: rec,
        overrides: cfg.overrides.clone(),
    })
}

/// Render records as an aligned text table.
pub fn render_table(report: &CertificationReport) -> String {
    let mut out = String::new();
    if !report.overrides.is_empty() {
        out.push_str("overrides:\n");
        for o in &report.overrides {
            out.push_str(&format!("  {o}\n"));
        }
    }
    out.push_str(&format!(
        "{:<34} {:>4} {:<6} {:<22} check\n",
        "id", "crit", "status", "published"
    ));
    for r in &report.records {
        let status = if r.pass { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "{:<34} {:>4} {:<6} {:<22} {}\n",
            r.id, r.criterion, status, r.published, r.check
        ));
        if !r.note.is_empty() {
            out.push_str(&format!("{:<34} {:>4} note   {}\n", "", "", r.note));
        }
    }
    let (pass, total) = (
        report.records.iter().filter(|r| r.pass).count(),
        report.records.len(),
    );
    out.push_str(&format!("{pass}/{total} records pass\n"));
    out
}

/// Render records as JSON lines (stable field order via serde).
pub fn render_records(report: &CertificationReport) -> String {
    let mut out = String::new();
    for r in &report.records {
        out.push_str(&serde_json::to_string(r).expect("serializable record"));
        out.push('\n');
    }
    out
}

/// Convenience wrapper for the counting pipeline used by the CLI.
pub fn run_total(cfg: &RunConfig) -> Result<TotalReport> {
    crate::counting::total_count(cfg)
}
