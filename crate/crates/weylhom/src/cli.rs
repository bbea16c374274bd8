//! Command-line front end: every computation as a subcommand with table or
//! JSON output.
//!
//! Exit codes: 0 success, 1 check failure, 2 validation error,
//! 3 inconclusive (window too small or saturation budget exhausted).

use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::bimodule::{stabilization_check, BimoduleError, TruncatedBimodule, Window};
use crate::characters::{fundamental_invariant_character, hom_rank, HomRankTable};
use crate::numeric::format_rat;
use crate::polyring::{binom_matrix_det, binom_matrix_det_predicted, comultiply_element, RingElement, SymmetrizerContext};
use crate::reps::parse_configuration;
use crate::roots::{Family, RootSystem, Weight, DEFAULT_MAX_RANK};
use crate::suite;

/// Rank cap: `WEYLHOM_MAX_RANK` when set and valid, otherwise the default.
pub fn max_rank_from_env() -> usize {
    std::env::var("WEYLHOM_MAX_RANK")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_RANK)
}

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_VALIDATION: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "weylhom",
    about = "Exact Hom-rank computations between global Weyl modules for loop algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hom-rank table c_s(lambda) over R_{k,l}
    Homrank {
        /// Family letter: A, B, C or D
        family: String,
        rank: usize,
        /// Comma-separated tuple s over the nodes, e.g. 1,0,2
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s: Vec<i64>,
        /// Number of Laurent variables in the coefficient ring
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        json: bool,
        /// Also print exact root-lattice coordinates
        #[arg(long)]
        root_coords: bool,
    },
    /// Fundamental invariant character of one node over R_{k,l}
    Fundchar {
        family: String,
        rank: usize,
        /// Node index (1-based, Bourbaki numbering)
        #[arg(long)]
        node: usize,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exact determinant of the binomial matrix C(N, K)
    Detcnk {
        n: u64,
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Comultiplication expansion of a ring element
    Coexpand {
        /// Element in the text format, e.g. "t1*u1" or "u1^2 + 2*t1"
        element: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
    /// Loop-invariant dimension of an evaluation tensor configuration
    Invdim {
        /// Configuration, e.g. "A:2; 1@0, 2@1"
        config: String,
        /// Weight in fundamental coordinates, e.g. 1,1
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Vec<i64>,
        /// Laurent variables of the ambient ring
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Polynomial variables of the ambient ring
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
    /// Window-scale checks on the twisted bimodule (V (x) A)_h
    Weylglob {
        /// One of: highest, cyclic, invariants, udegree, stabilization, factorization
        check: String,
        /// Base configuration; bimodule checks require base-point factors
        #[arg(long)]
        config: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        /// u-degree window cap D
        #[arg(long, default_value_t = 4)]
        window_u: u64,
        /// t-exponent window band T
        #[arg(long, default_value_t = 3)]
        window_t: i64,
        /// Sub-window u-cap for the cyclic check (default D - 1)
        #[arg(long)]
        sub_u: Option<u64>,
        /// Sub-window t-band for the cyclic check (default T - 1)
        #[arg(long)]
        sub_t: Option<i64>,
        /// Degree threshold K for udegree / stabilization
        #[arg(long, default_value_t = 1)]
        threshold: u64,
        #[arg(long)]
        json: bool,
    },
    /// Randomized symmetrizer-algebra checks for one block shape
    Symcheck {
        /// Block sizes r_1,...,r_n, e.g. 2,1
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the full cross-validation battery
    CheckSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn validation_error(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_VALIDATION
}

fn parse_family_rank(family: &str, rank: usize) -> Result<Arc<RootSystem>, i32> {
    let family = Family::parse(family)
        .ok_or_else(|| validation_error(format!("unknown family `{family}` (expected A, B, C or D)")))?;
    RootSystem::with_max_rank(family, rank, max_rank_from_env())
        .map(Arc::new)
        .map_err(|e| validation_error(e))
}

fn weight_rows(
    rs: &Arc<RootSystem>,
    entries: impl Iterator<Item = (Weight, u64)>,
    root_coords: bool,
) -> Vec<String> {
    entries
        .map(|(w, c)| {
            if root_coords {
                let coords = rs
                    .weight_to_root_coords(&w)
                    .expect("table weights are valid")
                    .iter()
                    .map(format_rat)
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{:<16} {c:<6} [{coords}]", w.to_string())
            } else {
                format!("{:<16} {c}", w.to_string())
            }
        })
        .collect()
}

fn print_homrank_table(table: &HomRankTable, root_coords: bool) {
    let rs = table.root_system();
    println!(
        "hom-rank table for {}{}: s = {:?}, k = {}",
        rs.family(),
        rs.rank(),
        table.s(),
        table.k()
    );
    println!("{:<16} {}", "lambda", "c_s(lambda)");
    for line in weight_rows(
        rs,
        table.entries().map(|(w, c)| (w.clone(), c)),
        root_coords,
    ) {
        println!("{line}");
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Homrank {
            family,
            rank,
            s,
            k,
            json,
            root_coords,
        } => {
            let rs = match parse_family_rank(&family, rank) {
                Ok(rs) => rs,
                Err(code) => return code,
            };
            match hom_rank(&rs, &s, k) {
                Ok(table) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&table.to_json()).unwrap());
                    } else {
                        print_homrank_table(&table, root_coords);
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(e),
            }
        }
        Command::Fundchar {
            family,
            rank,
            node,
            k,
            json,
        } => {
            let rs = match parse_family_rank(&family, rank) {
                Ok(rs) => rs,
                Err(code) => return code,
            };
            match fundamental_invariant_character(&rs, node, k) {
                Ok(c) => {
                    let convention_note = k == 0 && !rs.i0().contains(&node);
                    if json {
                        let value = json!({
                            "family": rs.family().to_string(),
                            "rank": rs.rank(),
                            "node": node,
                            "k": k,
                            "entries": c.to_json(),
                            "k0_convention_dependent": convention_note,
                        });
                        println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    } else {
                        println!(
                            "fundamental invariant character of {}{} at node {node}, k = {k}",
                            rs.family(),
                            rs.rank()
                        );
                        println!("{:<16} {}", "mu", "dim");
                        for line in weight_rows(&rs, c.terms().map(|(w, c)| (w.clone(), c)), false)
                        {
                            println!("{line}");
                        }
                        if convention_note {
                            println!("note: k = 0 outside I_0 relies on the binomial convention binom(-1,0) = 1");
                        }
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(e),
            }
        }
        Command::Detcnk { n, k, json } => {
            let det = binom_matrix_det(n, k);
            let predicted = binom_matrix_det_predicted(n);
            let matched = det == predicted;
            if json {
                let value = json!({
                    "N": n, "K": k,
                    "det": det.to_string(),
                    "predicted": predicted.to_string(),
                    "match": matched,
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!(
                    "det = {det}, predicted = {predicted}, {}",
                    if matched { "match" } else { "MISMATCH" }
                );
            }
            if matched {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Command::Coexpand { element, k, l, json } => {
            let parsed = match RingElement::parse(k, l, &element) {
                Ok(x) => x,
                Err(e) => return validation_error(e),
            };
            let expansion = comultiply_element(&parsed);
            if json {
                let terms: Vec<_> = expansion
                    .terms()
                    .map(|((a, b), c)| {
                        json!({"left": a.to_string(), "right": b.to_string(), "coeff": format_rat(c)})
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"element": element, "k": k, "l": l, "terms": terms}))
                        .unwrap()
                );
            } else {
                println!("{expansion}");
            }
            EXIT_OK
        }
        Command::Invdim {
            config,
            mu,
            k,
            l,
            json,
        } => {
            let cfg = match parse_configuration(&config, k, l) {
                Ok(c) => c,
                Err(e) => return validation_error(e),
            };
            let mu = Weight::new(mu);
            match cfg.loop_invariants(&mu) {
                Ok(inv) => {
                    if json {
                        let value = json!({
                            "config": config,
                            "k": k, "l": l,
                            "mu": mu.coords(),
                            "dim": inv.dim(),
                            "weight_space_dim": inv.basis_indices.len(),
                        });
                        println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    } else {
                        println!("dim = {}", inv.dim());
                    }
                    EXIT_OK
                }
                Err(e) => validation_error(e),
            }
        }
        Command::Weylglob {
            check,
            config,
            k,
            l,
            window_u,
            window_t,
            sub_u,
            sub_t,
            threshold,
            json,
        } => run_weylglob(
            &check, &config, k, l, window_u, window_t, sub_u, sub_t, threshold, json,
        ),
        Command::Symcheck {
            blocks,
            k,
            l,
            samples,
            seed,
            json,
        } => run_symcheck(&blocks, k, l, samples, seed, json),
        Command::CheckSuite { seed, json } => {
            let report = suite::run_all(seed);
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{}", report.render_table());
            }
            if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
    }
}

fn bimodule_exit(e: &BimoduleError) -> i32 {
    match e {
        BimoduleError::WindowTooSmall { .. } | BimoduleError::InconclusiveSaturation => {
            eprintln!("inconclusive: {e}");
            EXIT_INCONCLUSIVE
        }
        _ => validation_error(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_weylglob(
    check: &str,
    config: &str,
    k: usize,
    l: usize,
    window_u: u64,
    window_t: i64,
    sub_u: Option<u64>,
    sub_t: Option<i64>,
    threshold: u64,
    json: bool,
) -> i32 {
    let cfg = match parse_configuration(config, k, l) {
        Ok(c) => c,
        Err(e) => return validation_error(e),
    };
    let window = Window::new(window_u, window_t);
    let emit = |value: serde_json::Value, passed: bool, table: String| -> i32 {
        if json {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!("{table}");
        }
        if passed {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    };
    match check {
        "stabilization" => match stabilization_check(&cfg, threshold) {
            Ok(passed) => emit(
                json!({
                    "check": "stabilization",
                    "params": {"config": config, "K": threshold},
                    "window": null,
                    "verdict": if passed { "pass" } else { "fail" },
                }),
                passed,
                format!(
                    "stabilization at K = {threshold}: {}",
                    if passed { "pass" } else { "fail" }
                ),
            ),
            Err(e) => bimodule_exit(&e),
        },
        "factorization" => match cfg.verify_tensor_factorization() {
            Ok(report) => {
                let passed = report.passed();
                let mut table = format!(
                    "tensor factorization for {config}: {}\n",
                    if passed { "pass" } else { "fail" }
                );
                for c in &report.checks {
                    table.push_str(&format!(
                        "  mu = {:<12} invariants {:<3} predicted {:<3} {}\n",
                        c.mu.to_string(),
                        c.invariant_dim,
                        c.predicted,
                        if c.ok() { "ok" } else { "DIVERGES" }
                    ));
                }
                table.push_str(&format!(
                    "  cyclic span {} / {}",
                    report.cyclic_span_dim, report.total_dim
                ));
                emit(report.to_json(), passed, table)
            }
            Err(e) => validation_error(e),
        },
        "highest" | "cyclic" | "invariants" | "udegree" => {
            let tb = match TruncatedBimodule::new(cfg, window) {
                Ok(t) => t,
                Err(e) => return bimodule_exit(&e),
            };
            match check {
                "highest" => match tb.check_highest_relations() {
                    Ok(report) => {
                        let passed = report.passed();
                        emit(
                            report.to_json(),
                            passed,
                            format!(
                                "highest relations over {} monomials: {}",
                                report.checked_monomials,
                                if passed { "pass" } else { "fail" }
                            ),
                        )
                    }
                    Err(e) => bimodule_exit(&e),
                },
                "cyclic" => {
                    let sub = Window::new(
                        sub_u.unwrap_or(window_u.saturating_sub(1)),
                        sub_t.unwrap_or((window_t - 1).max(0)),
                    );
                    match tb.cyclic_span_dimension(sub) {
                        Ok(dim) => {
                            let expected = tb.base_dim() * sub.monomials(k, l).len();
                            let passed = dim == expected;
                            emit(
                                json!({
                                    "check": "cyclic-span",
                                    "params": {"config": config, "sub_window": sub.to_json()},
                                    "window": tb.window().to_json(),
                                    "verdict": if passed { "pass" } else { "fail" },
                                    "dim": dim,
                                    "expected": expected,
                                }),
                                passed,
                                format!("cyclic span dimension {dim}, expected {expected}"),
                            )
                        }
                        Err(e) => bimodule_exit(&e),
                    }
                }
                "invariants" => match tb.invariants_equal_base() {
                    Ok(report) => {
                        let passed = report.passed();
                        emit(
                            report.to_json(),
                            passed,
                            format!(
                                "window invariants {} vs base x window {}: {}",
                                report.computed_dim,
                                report.expected_dim,
                                if passed { "pass" } else { "fail" }
                            ),
                        )
                    }
                    Err(e) => bimodule_exit(&e),
                },
                "udegree" => match tb.u_degree_invariant_criterion(threshold) {
                    Ok(passed) => emit(
                        json!({
                            "check": "u-degree-detection",
                            "params": {"config": config, "K": threshold},
                            "window": tb.window().to_json(),
                            "verdict": if passed { "pass" } else { "fail" },
                        }),
                        passed,
                        format!(
                            "u-degree detection at K = {threshold}: {}",
                            if passed { "pass" } else { "fail" }
                        ),
                    ),
                    Err(e) => bimodule_exit(&e),
                },
                _ => unreachable!(),
            }
        }
        other => validation_error(format!(
            "unknown check `{other}` (expected highest, cyclic, invariants, udegree, stabilization or factorization)"
        )),
    }
}

fn run_symcheck(blocks: &[usize], k: usize, l: usize, samples: usize, seed: u64, json: bool) -> i32 {
    use rand::{Rng, SeedableRng};
    if blocks.is_empty() {
        return validation_error("at least one block size is required");
    }
    let ctx = SymmetrizerContext::new(k, l, blocks.to_vec());
    let nonempty: Vec<usize> = (1..=blocks.len()).filter(|&i| blocks[i - 1] > 0).collect();
    if nonempty.is_empty() {
        return validation_error("all blocks are empty");
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    let mut failure: Option<String> = None;
    while checked < samples && failure.is_none() {
        let mut a = RingElement::zero(k, l);
        for _ in 0..rng.gen_range(1..=3) {
            let t_exps: Vec<i64> = (0..k).map(|_| rng.gen_range(-2..=2)).collect();
            let u_exps: Vec<u64> = (0..l).map(|_| rng.gen_range(0..=2)).collect();
            let num = rng.gen_range(-5..=5i64);
            let den = rng.gen_range(1..=3i64);
            a.add_term(
                crate::polyring::Monomial::new(t_exps, u_exps),
                &crate::numeric::frac(num, den),
            );
        }
        let bi = nonempty[rng.gen_range(0..nonempty.len())];
        let bj = nonempty[rng.gen_range(0..nonempty.len())];
        let sa = match ctx.sym_element(bi, &a) {
            Ok(s) => s,
            Err(e) => return validation_error(e),
        };
        let sb = ctx.sym_element(bj, &a).unwrap();
        if !ctx.is_block_invariant(&sa) {
            failure = Some(format!("sym^{bi} output is not block-invariant"));
        } else if !ctx.is_block_invariant(&sa.mul(&sb)) {
            failure = Some("product of symmetrizer elements is not block-invariant".into());
        }
        checked += 1;
    }
    let passed = failure.is_none();
    if json {
        let value = json!({
            "check": "symmetrizer-closure",
            "params": {"blocks": blocks, "k": k, "l": l, "samples": checked, "seed": seed},
            "verdict": if passed { "pass" } else { "fail" },
            "witness": failure,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else if passed {
        println!("symmetrizer closure: {checked} samples pass for blocks {blocks:?}");
    } else {
        println!("symmetrizer closure failed: {}", failure.clone().unwrap());
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
