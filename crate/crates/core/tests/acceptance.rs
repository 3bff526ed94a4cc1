//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Criteria 7B and 7C are currently red by design: the recomputation shows
//! the published 2.0e23 to be a two-significant-figure round-up (2.02% off
//! the closed form, outside the 1% tolerance) and the published 2.41e22 to
//! be an exponent misprint for 2.41e24 (the branch formulas cross at the
//! published split point with values near 2.41e24). The failure messages
//! carry the details; everything else is green.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use quintbound::counting::present_upper;
use quintbound::exact::nth_prime;
use quintbound::interval::Interval;
use quintbound::oracle;
use quintbound::primeswap;
use quintbound::report::{run_certification, CertificationReport};
use quintbound::sums;
use quintbound::table::RunConfig;

fn report() -> &'static CertificationReport {
    static REPORT: OnceLock<CertificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run_certification(&RunConfig::default()).expect("pipeline runs"))
}

/// Assert every record of one criterion, with one summary line.
fn assert_criterion(n: u32, extra: &str) {
    let recs: Vec<_> = report()
        .records
        .iter()
        .filter(|r| r.criterion == n)
        .collect();
    assert!(!recs.is_empty(), "criterion {n} produced no records");
    let failures: Vec<String> = recs
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} [{}] — {}", r.id, r.check, r.note))
        .collect();
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {n}: {status} ({}/{} records){}{}",
        recs.len() - failures.len(),
        recs.len(),
        if extra.is_empty() { "" } else { " — " },
        extra
    );
    assert!(
        failures.is_empty(),
        "criterion {n} failures:\n  {}",
        failures.join("\n  ")
    );
}

#[test]
fn criterion_01_alpha_certification() {
    assert_criterion(
        1,
        "published alphas admissible; maxima within analytic limits",
    );
}

#[test]
fn criterion_02_index_bound_coefficients() {
    // the BII discrepancy must be flagged in the record, not hidden
    let bii = report()
        .records
        .iter()
        .find(|r| r.id == "mcoeff.B.BII")
        .expect("BII record");
    assert!(
        bii.note.contains("discrepancy"),
        "the BII coefficient must carry the discrepancy note"
    );
    assert_criterion(
        2,
        "3.3022 / 1.5002 / 2.0604 / 1.0080, BII flagged at ~1.3458",
    );
}

#[test]
fn criterion_03_linear_form_constant() {
    assert_criterion(3, "5.3 n^(1/2-n) ... log(3nd) at (3,4) rounds to 1.5013e11");
}

#[test]
fn criterion_04_iterated_d_bounds() {
    assert_criterion(
        4,
        "67.859 / 60.057 / 56.528 / 51.416 within 0.1 from seed 72.188",
    );
}

#[test]
fn criterion_05_small_first_element() {
    assert_criterion(5, "trial a >= 7.4e7 forces d < ~6.1e50 and a < 7.29e7");
}

#[test]
fn criterion_06_divisor_sum_domination() {
    // exact sums never exceed the closed forms on the log grid
    let mut x = 10u64;
    while x <= 10_000_000 {
        let s = sums::exact_sums(x).expect("sums");
        let xi = Interval::from_u64(x);
        let (e_b, f_b) = sums::ef_bounds(&xi).expect("bounds");
        assert!(Interval::from_u64(s.e).le_certain(&e_b), "E at {x}");
        assert!(s.f.le_certain(&f_b), "F at {x}");
        assert!(s.g.le_certain(&sums::g_bound(&xi)), "G at {x}");
        x *= 10;
    }
    // 20-point (N, H) grid: exact below both closed forms
    let ns = [100u64, 1_000, 10_000, 50_000, 100_000];
    let hs = [8u64, 320, 10_000, 100_000];
    for n in ns {
        for h in hs {
            let exact = Interval::from_biguint(&sums::dh_sum_exact(n, h).expect("exact"));
            let ni = Interval::from_u64(n);
            let hi = Interval::from_u64(h);
            assert!(
                exact.le_certain(&sums::milk_bound(&ni, &hi)),
                "milk at ({n}, {h})"
            );
            assert!(
                exact.le_certain(&sums::dh_sum_bound(&ni, &hi).expect("bound")),
                "closed form at ({n}, {h})"
            );
        }
    }
    println!("criterion 6: PASS — certified domination on the full grid");
}

#[test]
fn criterion_07_case_counts() {
    assert_criterion(
        7,
        "known red: B (2-digit round-up, 2.02% vs 1%) and C (exponent misprint 2.41e22 vs recomputed 2.41e24)",
    );
}

#[test]
fn criterion_08_split_thresholds() {
    assert_criterion(
        8,
        "m1 = 177, m2 = 499686 exact; m3..m8 to 2 significant figures; refined <= 1.177e27",
    );
}

#[test]
fn criterion_09_grand_total() {
    assert_criterion(9, "grand total certified <= 1.18e27");
}

/// Brute-force oracle for the prime-swap enumeration: every integer with 23
/// distinct prime factors in the window below `UB(a)` arises as a 23-subset
/// of the first 38 primes containing {2,3,5,7,11} times a small excess.
/// Index 38 suffices because any later prime costs a factor above `UB/b1`
/// even in the cheapest swap. Independent of the swap-structured search.
fn brute_force_values(a: u64, ud: &Interval) -> Vec<BigUint> {
    let ub = primeswap::ub_of(a, ud).expect("ub");
    let limit = u128::try_from(&quintbound::interval::bf_floor_biguint(ub.lo()).expect("floor"))
        .expect("fits u128");
    let required_v2: u32 = match a {
        _ if a % 2 == 1 => 2,
        2 | 6 => 1,
        _ => 0,
    };
    let primes: Vec<u128> = (1..=38).map(|i| nth_prime(i) as u128).collect();
    let base: u128 = primes[..5].iter().product();
    let mut out = Vec::new();
    fn rec(
        next: usize,
        count: usize,
        prod: u128,
        primes: &[u128],
        limit: u128,
        required_v2: u32,
        out: &mut Vec<u128>,
    ) {
        if count == 23 {
            let mut t: u128 = 1;
            while let Some(val) = prod.checked_mul(t) {
                if val > limit {
                    break;
                }
                if required_v2 == 0 || t % (1u128 << required_v2) == 0 {
                    out.push(val);
                }
                t += 1;
            }
            return;
        }
        let need = 23 - count;
        if next + need - 1 > primes.len() {
            return;
        }
        let mut cheapest = prod;
        for p in &primes[next - 1..next - 1 + need] {
            match cheapest.checked_mul(*p) {
                Some(v) => cheapest = v,
                None => return,
            }
        }
        if cheapest > limit {
            return;
        }
        if let Some(with) = prod.checked_mul(primes[next - 1]) {
            rec(next + 1, count + 1, with, primes, limit, required_v2, out);
        }
        rec(next + 1, count, prod, primes, limit, required_v2, out);
    }
    rec(6, 5, base, &primes, limit, required_v2, &mut out);
    out.sort_unstable();
    out.dedup();
    out.into_iter().map(BigUint::from).collect()
}

#[test]
fn criterion_10_prime_swap() {
    let ud = Interval::parse_dec("67.859").unwrap().exp10();
    // swap enumeration against the independent subset oracle
    for a in 1..=7u64 {
        let mut swept: Vec<BigUint> = primeswap::enumerate_candidates(a, &ud)
            .expect("enumeration")
            .into_iter()
            .map(|c| c.value)
            .collect();
        swept.sort();
        swept.dedup();
        assert_eq!(
            swept,
            brute_force_values(a, &ud),
            "oracle mismatch at a = {a}"
        );
    }
    // census against the golden file
    let golden = include_str!("data/prime_swap_census.jsonl");
    let mut lines = Vec::new();
    for a in 1..=7u64 {
        for c in primeswap::enumerate_candidates(a, &ud).expect("enumeration") {
            lines.push(serde_json::to_string(&c).expect("serializable"));
        }
    }
    let expected: Vec<&str> = golden.lines().collect();
    assert_eq!(lines.len(), expected.len(), "census size changed");
    for (got, want) in lines.iter().zip(expected) {
        assert_eq!(got, want, "census drifted");
    }
    assert_criterion(
        10,
        "v = (2,3,0,3,0,0,0); forced {2,3,5,7,11}; q = 1; zero survivors; oracle match",
    );
}

#[test]
fn criterion_11_oracle_suite() {
    // all pairs and triples up to 1e4,each one certified by the membership test
    let pairs = oracle::search_tuples(10_000, 2).expect("pairs");
    assert!(pairs.len() > 100, "expected a substantial pair census");
    for p in &pairs {
        assert!(oracle::is_diophantine(p));
    }
    let triples = oracle::search_tuples(10_000, 3).expect("triples");
    assert!(!triples.is_empty());
    for t in &triples {
        assert!(oracle::is_diophantine(t));
        let e = t.elements();
        // every triple extends regularly to a valid quadruple
        let d = oracle::regular_fourth(&e[0], &e[1], &e[2]).expect("regular fourth");
        let quad = oracle::Tuple::new(vec![e[0].clone(), e[1].clone(), e[2].clone(), d])
            .expect("quadruple");
        assert!(oracle::is_diophantine(&quad));
    }
    // the classical quadruple
    assert_eq!(
        oracle::regular_fourth(
            &BigUint::from(1u32),
            &BigUint::from(3u32),
            &BigUint::from(8u32)
        )
        .expect("classical"),
        BigUint::from(120u32)
    );
    // the pair {a, 4001} with 12a < 4001 cannot pair below 334, and the
    // unique solution in the full range is 3999
    let b = BigUint::from(4001u32);
    assert!(oracle::check_pair_nonextension(&b, 333)
        .expect("scan")
        .is_empty());
    assert_eq!(
        oracle::check_pair_nonextension(&b, 4000).expect("scan"),
        vec![BigUint::from(3999u32)]
    );
    println!(
        "criterion 11: PASS — {} pairs, {} triples to 1e4; regular extensions verified",
        pairs.len(),
        triples.len()
    );
    let one = BigUint::one();
    let quads = oracle::search_tuples(120, 4).expect("quads");
    assert!(quads
        .iter()
        .any(|q| q.elements()[0] == one && q.elements()[3] == BigUint::from(120u32)));
}
