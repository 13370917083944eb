//! Command-line surface over the exact Nichols-algebra/CFT toolkit.
//!
//! Every verb prints human-readable text by default and machine JSON with
//! `--json`; all numbers are exact rational strings. Exit code 0 means
//! every check of the invoked verb passed, 1 a failed check or
//! computation error, 2 a usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nichols_cft::braiding::{self, BraidingMatrix};
use nichols_cft::catalog::{self, Params};
use nichols_cft::charge::{self, parse_gram_json, GramMatrix, ScanBounds};
use nichols_cft::exact::format_rational;
use nichols_cft::freefield;
use nichols_cft::nichols::{BraidedSpace, NicholsDimension, DEFAULT_DEGREE_CAP, DEFAULT_WORD_CAP};
use nichols_cft::suite;

#[derive(Parser)]
#[command(
    name = "nichols-cft",
    about = "Exact computations for rank-2 diagonal Nichols algebras and their conformal field theory data",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Infer the generalized Cartan matrix of a braiding matrix.
    Cartan {
        /// Braiding JSON, e.g. '{"theta":2,"q":[["1/5","9/10"],["9/10","1/5"]]}'.
        #[arg(long)]
        braiding: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Weyl reflection of a braiding matrix at a vertex.
    Reflect {
        #[arg(long)]
        braiding: String,
        /// Reflection vertex, 1-based.
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Weyl orbit of a braiding matrix modulo twist equivalence.
    Orbit {
        #[arg(long)]
        braiding: String,
        /// Size cap for the orbit closure.
        #[arg(long, default_value_t = braiding::DEFAULT_ORBIT_CAP)]
        cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Central charge of a Gram matrix of screening momenta.
    Charge {
        /// Gram JSON: either {"theta":2,"g":[[..]]} or a bare row array
        /// like '[["2/3","-1/3"],["-1/3","2/3"]]'.
        #[arg(long)]
        gram: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Solve the dimension-one system: background charge and xi data.
    Solve {
        #[arg(long)]
        gram: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The rank-2 catalog of finite-dimensional diagonal Nichols algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Scan integer parameters of an item for solutions of the lifted
    /// Cartan conditions; emits records {params, gram, branches, class,
    /// charge}.
    Enumerate {
        #[arg(long)]
        item: String,
        #[arg(long, default_value_t = 10)]
        int_bound: i64,
        #[arg(long, default_value_t = 2)]
        order_min: i64,
        #[arg(long, default_value_t = 12)]
        order_max: i64,
    },
    /// Graded dimension of the Nichols algebra of a braiding matrix.
    #[command(name = "nichols-dim")]
    NicholsDim {
        #[arg(long)]
        braiding: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
        /// Print the full Hilbert series.
        #[arg(long)]
        hilbert: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Check that the recorded ideal generators of an item vanish in the
    /// Nichols quotient.
    Relations {
        #[arg(long)]
        item: String,
        #[arg(long, default_value_t = 3)]
        p: i64,
        /// Probe every bracketing of each generator word, not just the
        /// recorded nesting.
        #[arg(long)]
        all_nestings: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Verify the spin-3 generator of the two-screening A2 system.
    W3 {
        #[arg(long, default_value_t = 3)]
        p: i64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Verify the coset currents of a fermionic item.
    Coset {
        #[arg(long)]
        item: String,
        #[arg(long, default_value_t = 3)]
        p: i64,
        /// Deliberately miscalibrate the current (negative control).
        #[arg(long)]
        negative_control: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Build the octuplet of primaries from the long screenings.
    Octuplet {
        #[arg(long, default_value_t = 2)]
        p: i64,
        /// Also verify the octuplet OPE structure.
        #[arg(long)]
        opes: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The unique primary in the screening centralizer at a weight.
    Primary {
        #[arg(long)]
        item: String,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        weight: u32,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Run the verification battery.
    Verify {
        /// Which suite to run; only "paper" is defined.
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Include the deep tier (octuplet at p = 3).
        #[arg(long)]
        deep: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List all item identifiers.
    List {
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Show one item record.
    Show {
        id: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Export the whole catalog as one JSON document.
    Export,
    /// Match a braiding matrix against the defining conditions of every
    /// item.
    Match {
        #[arg(long)]
        braiding: String,
        #[command(flatten)]
        json: JsonFlag,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. piped into `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

/// Cap on entry orders for CLI input; the exact engines are desk-scale.
const MAX_CLI_CONDUCTOR: u64 = 1_000_000;

fn parse_braiding(s: &str) -> Result<BraidingMatrix, String> {
    let b: BraidingMatrix =
        serde_json::from_str(s).map_err(|e| format!("invalid braiding JSON: {e}"))?;
    match b.try_conductor() {
        Some(n) if n <= MAX_CLI_CONDUCTOR => Ok(b),
        _ => Err(format!(
            "braiding entry orders exceed the supported bound (lcm of orders must be <= {MAX_CLI_CONDUCTOR})"
        )),
    }
}

fn parse_gram(s: &str) -> Result<GramMatrix, String> {
    parse_gram_json(s).map_err(|e| format!("invalid Gram JSON: {e}"))
}

fn braiding_json(b: &BraidingMatrix) -> serde_json::Value {
    serde_json::to_value(b).expect("braiding serializes")
}

/// Item parameters for the free-field verbs: regular solution at j = 0.
fn default_params(item: &str, p: i64) -> Params {
    let mut pairs = vec![("m", 0), ("n", 0), ("j", 0)];
    match item {
        "3.2.1" | "3.2.2" => {
            pairs = vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)];
        }
        "2.3" => pairs = vec![("m", 0), ("s", 1), ("j", 0), ("p", p)],
        "2.5" | "2.6" => pairs = vec![("m", 0), ("n", 0), ("j", 0), ("r", 1)],
        _ => pairs.push(("p", p)),
    }
    Params::from_pairs(&pairs)
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Cartan { braiding, json } => {
            let b = parse_braiding(&braiding)?;
            let a = braiding::generalized_cartan(&b).map_err(|e| e.to_string())?;
            if json.json {
                println!(
                    "{}",
                    json!({ "cartan": a.a, "dynkin": b.dynkin_diagram().to_string() })
                );
            } else {
                println!("generalized Cartan matrix: {a}");
                println!("Dynkin diagram: {}", b.dynkin_diagram());
            }
            Ok(true)
        }
        Command::Reflect { braiding, k, json } => {
            let b = parse_braiding(&braiding)?;
            if k == 0 || k > b.theta() {
                return Err(format!("k must be in 1..={}", b.theta()));
            }
            let r = braiding::reflect(&b, k - 1).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", braiding_json(&r));
            } else {
                println!("reflected braiding: {}", serde_json::to_string(&r).unwrap());
                println!("Dynkin diagram: {}", r.dynkin_diagram());
            }
            Ok(true)
        }
        Command::Orbit { braiding, cap, json } => {
            let b = parse_braiding(&braiding)?;
            let orbit = braiding::weyl_orbit(&b, cap).map_err(|e| e.to_string())?;
            if json.json {
                let classes: Vec<_> = orbit
                    .iter()
                    .map(|c| {
                        json!({
                            "representative": braiding_json(&c.representative),
                            "cartan": c.cartan.a,
                            "dynkin": c.representative.dynkin_diagram().to_string(),
                        })
                    })
                    .collect();
                println!("{}", json!({ "classes": classes }));
            } else {
                println!("{} twist class(es) in the Weyl orbit:", orbit.len());
                for (i, c) in orbit.iter().enumerate() {
                    println!(
                        "  {}: {}   cartan {}",
                        i + 1,
                        c.representative.dynkin_diagram(),
                        c.cartan
                    );
                }
            }
            Ok(true)
        }
        Command::Charge { gram, json } => {
            let g = parse_gram(&gram)?;
            let solution = charge::solve_xi(&g).map_err(|e| e.to_string())?;
            if json.json {
                println!(
                    "{}",
                    json!({
                        "theta": g.theta(),
                        "charge": format_rational(&solution.charge),
                    })
                );
            } else {
                println!("c = {}", format_rational(&solution.charge));
            }
            Ok(true)
        }
        Command::Solve { gram, json } => {
            let g = parse_gram(&gram)?;
            let solution = charge::solve_xi(&g).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_value(&solution).unwrap());
            } else {
                let x: Vec<String> = solution.x.iter().map(format_rational).collect();
                println!("x = ({})", x.join(", "));
                println!("xi.xi = {}", format_rational(&solution.xi_norm));
                println!("c = {}", format_rational(&solution.charge));
            }
            Ok(true)
        }
        Command::Catalog { action } => run_catalog(action),
        Command::Enumerate { item, int_bound, order_min, order_max } => {
            let spec = catalog::get_item(&item).map_err(|e| e.to_string())?;
            let bounds = ScanBounds { int_bound, order_min, order_max };
            let records = charge::enumerate_solutions(spec, &bounds);
            let rows: Vec<_> = records
                .iter()
                .map(|r| {
                    let params: serde_json::Map<String, serde_json::Value> = r
                        .params
                        .iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect();
                    let branches: Vec<_> = r
                        .branches
                        .pairs
                        .iter()
                        .map(|((i, j), br)| json!({ "pair": [i + 1, j + 1], "branch": br.to_string() }))
                        .collect();
                    json!({
                        "params": params,
                        "gram": serde_json::to_value(&r.gram).unwrap(),
                        "branches": branches,
                        "class": r.class.as_ref().map(|(name, class)| json!({
                            "family": name, "class": class.to_string(),
                        })),
                        "charge": r.charge.as_ref().map(format_rational),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            Ok(true)
        }
        Command::NicholsDim { braiding, cap, hilbert, json } => {
            let b = parse_braiding(&braiding)?;
            let space = BraidedSpace::with_caps(b, degree_cap_env(cap), word_cap_env());
            let result = space.nichols_dimension(cap).map_err(|e| e.to_string())?;
            let (status, total, series) = match result {
                NicholsDimension::Finite { total, series } => ("finite", Some(total), series),
                NicholsDimension::Unbounded { partial, .. } => ("unbounded-at-cap", None, partial),
            };
            if json.json {
                println!(
                    "{}",
                    json!({ "dims": series, "total": total, "status": status })
                );
            } else {
                match total {
                    Some(t) => println!("dim = {t}"),
                    None => println!("no zero graded piece below degree {cap}"),
                }
                if hilbert || total.is_none() {
                    println!("series: {series:?}");
                }
            }
            Ok(true)
        }
        Command::Relations { item, p, all_nestings, json } => run_relations(&item, p, all_nestings, json.json),
        Command::W3 { p, json } => {
            let report = freefield::w3_generator(p).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_value(&report).unwrap());
            } else {
                println!("order p = {}, central charge {}", report.p, report.charge);
                print_checks_text(&report.checks);
            }
            Ok(report.pass)
        }
        Command::Coset { item, p, negative_control, json } => {
            let report =
                freefield::coset_currents(&item, p, negative_control).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_value(&report).unwrap());
            } else {
                println!("item {}, p = {}, level k = {}", report.item, report.p, report.level);
                print_checks_text(&report.checks);
            }
            Ok(report.pass)
        }
        Command::Octuplet { p, opes, json } => {
            let report = freefield::octuplet(p).map_err(|e| e.to_string())?;
            let mut pass = report.pass;
            if json.json {
                let mut value = serde_json::to_value(&report).unwrap();
                if opes {
                    let ope_report = freefield::octuplet_opes(p).map_err(|e| e.to_string())?;
                    pass &= ope_report.pass;
                    value["opes"] = serde_json::to_value(&ope_report).unwrap();
                }
                println!("{value}");
            } else {
                println!("octuplet at p = {}, central charge {}", report.p, report.charge);
                for f in &report.fields {
                    println!(
                        "  {:<7} momentum {:<12} weight {:<5} order {}",
                        f.name, f.momentum, f.weight, f.poly_order
                    );
                }
                print_checks_text(&report.checks);
                if opes {
                    let ope_report = freefield::octuplet_opes(p).map_err(|e| e.to_string())?;
                    pass &= ope_report.pass;
                    println!(
                        "OPE coefficients: c1 = {}, c2 = {}, c3 = {}, c3' = {}",
                        ope_report.c1, ope_report.c2, ope_report.c3, ope_report.c3_prime
                    );
                    print_checks_text(&ope_report.checks);
                }
            }
            Ok(pass)
        }
        Command::Primary { item, p, weight, json } => {
            let report =
                freefield::find_unique_primary(&item, p, weight).map_err(|e| e.to_string())?;
            if json.json {
                println!("{}", serde_json::to_value(&report).unwrap());
            } else {
                println!(
                    "item {} at p = {}: centralizer dimension {} at weight {}, unique primary:",
                    report.item, report.p, report.centralizer_dim, report.weight
                );
                for (mono, coeff) in &report.coefficients {
                    println!("  {coeff} * {mono}");
                }
            }
            Ok(true)
        }
        Command::Verify { suite: which, deep, json } => {
            if which != "paper" {
                return Err(format!("unknown suite `{which}`"));
            }
            let results = suite::run_paper_suite(deep);
            let all_pass = results.iter().all(|c| c.pass);
            if json.json {
                let rows: Vec<_> = results
                    .iter()
                    .map(|c| {
                        json!({
                            "criterion": c.id,
                            "name": c.name,
                            "pass": c.pass,
                            "details": c.details,
                        })
                    })
                    .collect();
                println!("{}", json!({ "suite": "paper", "deep": deep, "pass": all_pass, "criteria": rows }));
            } else {
                for c in &results {
                    println!(
                        "criterion {:>2} [{}] {} -- {}",
                        c.id,
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.details
                    );
                }
                println!("suite: {}", if all_pass { "PASS" } else { "FAIL" });
            }
            Ok(all_pass)
        }
    }
}

fn run_catalog(action: CatalogAction) -> Result<bool, String> {
    match action {
        CatalogAction::List { json } => {
            let ids = catalog::item_ids();
            if json.json {
                println!("{}", json!(ids));
            } else {
                for id in ids {
                    let item = catalog::get_item(id).unwrap();
                    let kind = if item.conditions_only { " (conditions only)" } else { "" };
                    println!("{id}{kind}");
                }
            }
            Ok(true)
        }
        CatalogAction::Show { id, json } => {
            let item = catalog::get_item(&id).map_err(|e| e.to_string())?;
            let record = catalog::item_record(item);
            if json.json {
                println!("{}", serde_json::to_string_pretty(&record).unwrap());
            } else {
                println!("item {}", record.id);
                if let Some(label) = record.cartan_type {
                    println!("  Cartan type: {label}");
                }
                println!("  conditions: {}", record.conditions);
                if let Some(sc) = record.scalar_conditions {
                    println!("  scalar form: {sc}");
                }
                for f in &record.families {
                    println!("  family `{}` ({}): {}", f.name, f.class.to_string().to_lowercase(), f.constraint);
                    if let Some(c) = f.charge {
                        println!("    charge: {c}");
                    }
                }
                for p in &record.presentation {
                    println!(
                        "  presentation [{}]: {}; dim = {}",
                        p.domain,
                        p.generators.join(", "),
                        p.dimension
                    );
                }
                if !record.notes.is_empty() {
                    println!("  notes: {}", record.notes);
                }
            }
            Ok(true)
        }
        CatalogAction::Export => {
            println!("{}", catalog::catalog_json());
            Ok(true)
        }
        CatalogAction::Match { braiding, json } => {
            let b = parse_braiding(&braiding)?;
            let ids = catalog::match_braiding(&b);
            if json.json {
                println!("{}", json!(ids));
            } else if ids.is_empty() {
                println!("no catalog item matches");
            } else {
                println!("{}", ids.join(", "));
            }
            Ok(true)
        }
    }
}

fn run_relations(item: &str, p: i64, all_nestings: bool, as_json: bool) -> Result<bool, String> {
    let spec = catalog::get_item(item).map_err(|e| e.to_string())?;
    let params = default_params(item, p);
    let generators = catalog::presentation_generators(item, &params).map_err(|e| e.to_string())?;
    let b = spec.braiding(&params).map_err(|e| e.to_string())?;
    let space = BraidedSpace::with_caps(b, degree_cap_env(DEFAULT_DEGREE_CAP), word_cap_env());
    let mut rows = Vec::new();
    let mut pass = true;
    for g in &generators {
        let element = space.generator_element(&g.word, g.power);
        let vanishes = space.vanishes_in_nichols(&element).map_err(|e| e.to_string())?;
        pass &= vanishes;
        rows.push(json!({ "generator": g.to_string(), "vanishes": vanishes }));
        if all_nestings {
            let letters = g.word.word();
            if letters.len() > 2 {
                for bw in catalog::BracketWord::all_bracketings(&letters) {
                    let e = space.element_power(&space.q_commutator(&bw), g.power);
                    let v = !e.is_zero() && space.vanishes_in_nichols(&e).map_err(|er| er.to_string())?;
                    rows.push(json!({ "generator": format!("{bw}^{}", g.power), "vanishes": v, "nesting_probe": true }));
                }
            }
        }
    }
    if as_json {
        println!("{}", json!({ "item": item, "p": p, "relations": rows, "pass": pass }));
    } else {
        println!("item {item} at p = {p}:");
        for row in &rows {
            println!(
                "  {} {}",
                if row["vanishes"].as_bool().unwrap() { "vanishes " } else { "SURVIVES " },
                row["generator"].as_str().unwrap()
            );
        }
    }
    Ok(pass)
}

fn print_checks_text(checks: &[freefield::CheckLine]) {
    for c in checks {
        if c.pass {
            println!("  [ok] {}", c.name);
        } else {
            println!("  [FAIL] {}: expected {}, got {}", c.name, c.expected, c.actual);
        }
    }
}

fn degree_cap_env(cli_cap: usize) -> usize {
    std::env::var("NICHOLS_CFT_DEGREE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(cli_cap)
        .max(cli_cap)
}

fn word_cap_env() -> usize {
    std::env::var("NICHOLS_CFT_WORD_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_WORD_CAP)
}
