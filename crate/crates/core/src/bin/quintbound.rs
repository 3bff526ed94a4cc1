//! Command-line entry point: recompute any stage of the quintuple-count
//! bound, or certify the whole chain against the published constants.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use quintbound::counting::{
    count_case_c, m_split_thresholds, optimize_eta, present_upper, Multipliers,
};
use quintbound::interval::{set_default_precision, Interval};
use quintbound::logforms::iterate_d_bound;
use quintbound::oracle;
use quintbound::report::{render_records, render_table, run_certification, run_total};
use quintbound::sums;
use quintbound::table::{parse_value, Case, RunConfig};
use quintbound::{alpha, primeswap, Error};

#[derive(Parser)]
#[command(
    name = "quintbound",
    version,
    about = "Certified recomputation of the quintuple-count bound"
)]
struct Cli {
    /// Output style for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Endpoint precision in bits for interval arithmetic.
    #[arg(long, global = true)]
    precision: Option<usize>,

    /// TOML file overriding the built-in parameter table.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible alpha per parameter row and the index-bound coefficients.
    Alpha,
    /// Iterated upper bound on the fourth element.
    Dbound {
        /// Case to iterate (A, B, C, D or all).
        #[arg(long, default_value = "all")]
        case: String,
        /// Seed bound as log10.
        #[arg(long)]
        seed: Option<f64>,
    },
    /// Arithmetic sums: exact evaluation and closed-form bounds.
    Sums {
        /// Evaluation point.
        #[arg(long, conflicts_with = "grid")]
        x: Option<u64>,
        /// Print only the exact sums.
        #[arg(long)]
        exact: bool,
        /// Print only the closed-form bounds.
        #[arg(long)]
        bounds: bool,
        /// Print both (the default when neither is given).
        #[arg(long)]
        both: bool,
        /// Run the domination suite over a logarithmic grid.
        #[arg(long)]
        grid: bool,
    },
    /// Per-case quintuple counts and the grand total.
    Counts {
        /// Restrict to one case.
        #[arg(long)]
        case: Option<String>,
        /// Keep the distinct-prime-factor cap at 23 (skip the enumeration).
        #[arg(long)]
        no_prime_swap: bool,
        /// Case C split point (default: optimize).
        #[arg(long)]
        eta: Option<String>,
    },
    /// Enumerate and discharge the 23-factor candidates.
    PrimeSwap {
        /// Restrict to one value of the smallest element (1..=7).
        #[arg(long)]
        a: Option<u64>,
        /// Bound on the fourth element as log10 (default 67.859).
        #[arg(long)]
        ud: Option<f64>,
    },
    /// Exact desk-scale searches and membership tests.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Recompute every published constant and certify the chain.
    CertifyAll,
}

#[derive(Subcommand)]
enum OracleOp {
    /// All Diophantine tuples of a given size up to a limit.
    Search {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = 2)]
        size: usize,
    },
    /// Classify a triple into the counting cases.
    Classify { a: u64, b: u64, c: u64 },
    /// Regular extensions of a pair or triple.
    Extend { a: u64, b: u64, c: Option<u64> },
    /// All a up to a bound pairing with a given b.
    PairScan { b: u64, a_max: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(bits) = cli.precision {
        set_default_precision(bits);
    }
    let cfg = match load_config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Config(_) | Error::Validation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig, Error> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            RunConfig::from_toml(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(bits) = cli.precision {
        cfg.precision_bits = bits;
        cfg.overrides.push(format!("precision_bits = {bits}"));
    }
    Ok(cfg)
}

fn run(cli: &Cli, mut cfg: RunConfig) -> Result<ExitCode, Error> {
    let started = std::time::Instant::now();
    match &cli.command {
        Command::Alpha => {
            for row in &cfg.rows {
                let sol = alpha::max_alpha(row)?;
                let (coeff, expo) = alpha::m_lower_coeff(row, &sol.alpha_max);
                let (coeff_pub, _) = alpha::m_lower_coeff(row, &row.published_alpha);
                match cli.format {
                    Format::Records => println!(
                        "{}",
                        serde_json::json!({
                            "row": row.tag.label(),
                            "a0": row.a0,
                            "b0": row.b0,
                            "c0": row.c0.mid_f64(),
                            "rho": row.rho.mid_f64(),
                            "beta": row.beta.mid_f64(),
                            "tau": format!("{}/{}", row.tau.0, row.tau.1),
                            "lambda": sol.lambda.mid_f64(),
                            "alpha_published": row.published_alpha.mid_f64(),
                            "alpha_max": sol.alpha_max.mid_f64(),
                            "m_coeff_at_max": coeff.mid_f64(),
                            "m_coeff_at_published": coeff_pub.mid_f64(),
                            "m_exponent": format!("{}/{}", expo.0, expo.1),
                        })
                    ),
                    Format::Table => {
                        if row.tag == quintbound::table::CaseTag::AI {
                            println!(
                                "{:<4} {:>6} {:>7} {:>9} {:>8} {:>9} {:>4} {:>10} {:>9} {:>8} {:>6}",
                                "row", "A0", "B0", "C0", "rho", "beta", "tau", "alpha_pub",
                                "alpha_max", "m_coeff", "m_exp"
                            );
                        }
                        println!(
                            "{:<4} {:>6} {:>7} {:>9.3e} {:>8.4} {:>9.4} {:>4} {:>10} {:>9.6} {:>8.5} {:>6}",
                            row.tag.label(),
                            row.a0,
                            row.b0,
                            row.c0.mid_f64(),
                            row.rho.mid_f64(),
                            row.beta.mid_f64(),
                            format!("{}/{}", row.tau.0, row.tau.1),
                            row.published_alpha.mid_f64(),
                            sol.alpha_max.mid_f64(),
                            coeff.mid_f64(),
                            format!("{}/{}", expo.0, expo.1),
                        );
                    }
                }
            }
            if cli.format == Format::Table {
                println!("elapsed: {:.2?}", started.elapsed());
            }
        }
        Command::Dbound { case, seed } => {
            if let Some(s) = seed {
                cfg.seed_log10_c1 = Interval::from_f64(*s);
                cfg.overrides.push(format!("seed_log10_c1 = {s}"));
            }
            let cases: Vec<Case> = if case.eq_ignore_ascii_case("all") {
                Case::all().to_vec()
            } else {
                vec![Case::parse(case)?]
            };
            for c in cases {
                let r = iterate_d_bound(&cfg, c)?;
                match cli.format {
                    Format::Records => {
                        println!(
                            "{}",
                            serde_json::json!({
                                "case": c.label(),
                                "log10_d_bound": r.log10_d_bound.mid_f64(),
                                "converged": r.converged,
                                "binding_row": r.binding_row.label(),
                                "iterations": r.iterations,
                            })
                        );
                    }
                    Format::Table => {
                        println!("case {}: d < 10^{:.4}", c.label(), r.log10_d_bound.hi_f64());
                        for (i, (cin, cout)) in r.iterations.iter().enumerate() {
                            println!("  iter {}: 10^{cin:.4} -> 10^{cout:.4}", i + 1);
                        }
                        println!(
                            "  converged: {} (binding row {})",
                            r.converged,
                            r.binding_row.label()
                        );
                    }
                }
            }
            if cli.format == Format::Table {
                println!("elapsed: {:.2?}", started.elapsed());
            }
        }
        Command::Sums {
            x,
            exact,
            bounds,
            both,
            grid,
        } => {
            if *grid {
                let mut xv = 10u64;
                let mut all_ok = true;
                while xv <= 10_000_000 {
                    let s = sums::exact_sums(xv)?;
                    let xi = Interval::from_u64(xv);
                    let (e_b, f_b) = sums::ef_bounds(&xi)?;
                    let g_b = sums::g_bound(&xi);
                    let ok = Interval::from_u64(s.e).le_certain(&e_b)
                        && s.f.le_certain(&f_b)
                        && s.g.le_certain(&g_b);
                    all_ok &= ok;
                    println!(
                        "x = 1e{}: E {} <= {:.6e}, F {:.6} <= {:.6}, G {:.6} <= {:.6} [{}]",
                        (xv as f64).log10() as u32,
                        s.e,
                        e_b.hi_f64(),
                        s.f.hi_f64(),
                        f_b.hi_f64(),
                        s.g.hi_f64(),
                        g_b.hi_f64(),
                        if ok { "pass" } else { "FAIL" }
                    );
                    xv *= 10;
                }
                if !all_ok {
                    return Ok(ExitCode::from(1));
                }
            } else {
                let xv = x.ok_or_else(|| Error::Validation("--x or --grid required".into()))?;
                let both = *both || !(*exact ^ *bounds);
                if *exact || both {
                    let s = sums::exact_sums(xv)?;
                    println!("E({xv}) = {}", s.e);
                    println!("F({xv}) = {}", s.f);
                    println!("G({xv}) = {}", s.g);
                }
                if *bounds || both {
                    let xi = Interval::from_u64(xv);
                    let (e_b, f_b) = sums::ef_bounds(&xi)?;
                    println!("E bound = {e_b}");
                    println!("F bound = {f_b}");
                    println!("G bound = {}", sums::g_bound(&xi));
                }
            }
        }
        Command::Counts {
            case,
            no_prime_swap,
            eta,
        } => {
            if *no_prime_swap {
                cfg.prime_swap = false;
                cfg.overrides.push("prime_swap = false".into());
            }
            if let Some(e) = eta {
                cfg.eta = Some(parse_value(e)?);
                cfg.overrides.push(format!("eta = {e}"));
            }
            match case.as_deref() {
                Some(c) if !c.eq_ignore_ascii_case("all") => {
                    let case = Case::parse(c)?;
                    let iterated = iterate_d_bound(&cfg, case)?;
                    let (ud, from_published) =
                        quintbound::counting::counting_bound(&iterated, case);
                    println!(
                        "bound: d < 10^{:.4} recomputed{}",
                        iterated.log10_d_bound.hi_f64(),
                        if from_published {
                            "; counting at the published bound it certifies"
                        } else {
                            " (published bound not certified; counting at the recomputed one)"
                        }
                    );
                    let mult = Multipliers::default();
                    print_case_count(&cfg, case, &ud, &mult)?;
                }
                _ => {
                    let report = run_total(&cfg)?;
                    for o in &cfg.overrides {
                        println!("override: {o}");
                    }
                    println!(
                        "case A refined  <= {:.4e}  (unrefined one-range form {:.4e})",
                        report.case_a.refined.hi_f64(),
                        report.case_a.unrefined_published.hi_f64()
                    );
                    println!("case B          <= {:.4e}", report.case_b.subtotal.hi_f64());
                    println!(
                        "case C          <= {:.4e}  (eta {} {:.4e})",
                        report.case_c.minmax().hi_f64(),
                        if report.eta_optimized {
                            "optimized to"
                        } else {
                            "fixed at"
                        },
                        report.case_c.eta.mid_f64()
                    );
                    println!("case D          <= {:.4e}", report.case_d.subtotal.hi_f64());
                    println!("grand total     <= {:.4e}", report.total.hi_f64());
                    let m = Multipliers::default();
                    println!(
                        "imported multipliers: A {:?} and split {:?} (x 2^(w+1)); B {:?}; \
                         C {:?} / {:?} (x 2^w); D {:?}",
                        m.case_a_unrefined,
                        m.case_a_split,
                        m.case_b,
                        m.case_c_large,
                        m.case_c_small,
                        m.case_d
                    );
                    let (lit, _) = present_upper(&report.total, 3)?;
                    println!(
                        "headline: total <= {lit}; certified <= 1.18e27: {}",
                        report.certified_headline()
                    );
                    if !report.certified_headline() {
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        Command::PrimeSwap { a, ud } => {
            let ud_i = match ud {
                Some(l) => Interval::from_f64(*l).exp10(),
                None => Interval::parse_dec("67.859")?.exp10(),
            };
            let targets: Vec<u64> = match a {
                Some(v) if (1..=7).contains(v) => vec![*v],
                Some(v) => return Err(Error::Validation(format!("a must be in 1..=7, got {v}"))),
                None => (1..=7).collect(),
            };
            let mut survivors = 0usize;
            for a in targets {
                let v = primeswap::max_v(a, &ud_i)?;
                let cands = primeswap::enumerate_candidates(a, &ud_i)?;
                let rep = primeswap::discharge_candidates(a, &cands);
                survivors += rep.survivors.len();
                match cli.format {
                    Format::Records => {
                        for c in &cands {
                            println!("{}", serde_json::to_string(c).expect("serializable"));
                        }
                    }
                    Format::Table => {
                        println!(
                            "a = {a}: v = {v}, candidates = {}, pair-test survivors = {}",
                            rep.checked,
                            rep.survivors.len()
                        );
                    }
                }
            }
            if cli.format == Format::Table {
                println!(
                    "distinct-prime-factor cap lowered to 22: {}",
                    survivors == 0
                );
            }
        }
        Command::Oracle { op } => run_oracle(cli, op)?,
        Command::CertifyAll => {
            let report = run_certification(&cfg)?;
            match cli.format {
                Format::Records => print!("{}", render_records(&report)),
                Format::Table => {
                    print!("{}", render_table(&report));
                    let total = run_total(&cfg)?;
                    let (lit, _) = present_upper(&total.total, 3)?;
                    println!(
                        "total <= {lit} (certified <= 1.18e27: {})",
                        total.certified_headline()
                    );
                    println!("elapsed: {:.2?}", started.elapsed());
                }
            }
            if !report.passed() {
                if let Some(f) = report.first_failure() {
                    eprintln!("certification failed at: {} ({})", f.id, f.note);
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_case_count(
    cfg: &RunConfig,
    case: Case,
    ud: &Interval,
    mult: &Multipliers,
) -> Result<(), Error> {
    match case {
        Case::A => {
            let r =
                quintbound::counting::count_case_a(ud, &cfg.m_thresholds, cfg.prime_swap, mult)?;
            println!("R_A = {}", r.radius);
            println!("doubles <= {}", r.doubles);
            println!(
                "unrefined (cap {}) <= {}",
                r.omega_cap_window, r.unrefined_published
            );
            for (w, h, term) in &r.split_terms {
                println!(
                    "  range cap {w}: H = {:.4e}, term {:.4e}",
                    h.mid_f64(),
                    term.hi_f64()
                );
            }
            println!("refined (cap {}) <= {}", r.omega_cap_used, r.refined);
            let thresholds =
                m_split_thresholds(&present_upper(ud, 4)?.1, &[14, 15, 16, 17, 18, 19, 20, 21])?;
            let pretty: Vec<String> = thresholds
                .iter()
                .map(|t| format!("m(omega<={}) = {}", t.omega, t.exact))
                .collect();
            println!("recomputed thresholds: {}", pretty.join(", "));
        }
        Case::B => {
            let r = quintbound::counting::count_case_b(ud, mult)?;
            println!("R_B = {}", r.radius);
            println!("count <= {}", r.subtotal);
        }
        Case::C => {
            let split = match &cfg.eta {
                Some(eta) => count_case_c(ud, eta, mult)?,
                None => optimize_eta(ud, mult)?,
            };
            println!("eta = {:.5e}", split.eta.mid_f64());
            println!("b_max = {} (omega cap {})", split.b_max, split.omega_cap);
            println!("branch a>eta <= {}", split.branch_large_a);
            println!("branch a<=eta <= {}", split.branch_small_a);
            println!("count <= {}", split.minmax());
        }
        Case::D => {
            let r = quintbound::counting::count_case_d(ud, mult)?;
            println!("R_D = {}", r.radius);
            println!("count <= {}", r.subtotal);
        }
    }
    Ok(())
}

fn run_oracle(cli: &Cli, op: &OracleOp) -> Result<(), Error> {
    match op {
        OracleOp::Search { limit, size } => {
            let tuples = oracle::search_tuples(*limit, *size)?;
            match cli.format {
                Format::Records => {
                    for t in &tuples {
                        let elems: Vec<String> =
                            t.elements().iter().map(|e| e.to_string()).collect();
                        println!("{}", serde_json::json!({ "tuple": elems }));
                    }
                }
                Format::Table => {
                    for t in &tuples {
                        println!("{t}");
                    }
                    println!("{} tuples of size {size} up to {limit}", tuples.len());
                }
            }
        }
        OracleOp::Classify { a, b, c } => {
            let t = oracle::classify_triple(
                &BigUint::from(*a),
                &BigUint::from(*b),
                &BigUint::from(*c),
            )?;
            println!("{{{a}, {b}, {c}}}: type {t:?}");
        }
        OracleOp::Extend { a, b, c } => match c {
            Some(c) => {
                let d = oracle::regular_fourth(
                    &BigUint::from(*a),
                    &BigUint::from(*b),
                    &BigUint::from(*c),
                )?;
                println!("regular fourth of {{{a}, {b}, {c}}} = {d}");
            }
            None => {
                let c = oracle::regular_third(&BigUint::from(*a), &BigUint::from(*b))?;
                println!("regular third of {{{a}, {b}}} = {c}");
            }
        },
        OracleOp::PairScan { b, a_max } => {
            let found = oracle::check_pair_nonextension(&BigUint::from(*b), *a_max)?;
            let list: Vec<String> = found.iter().map(|a| a.to_string()).collect();
            println!("a <= {a_max} with a*{b}+1 square: [{}]", list.join(", "));
        }
    }
    Ok(())
}
