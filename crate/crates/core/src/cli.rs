//! The `hc` command line: evaluation, seeded verification suites, timing.
//!
//! Every command writes one JSON document to stdout and returns an exit code.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use log::{info, warn};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{concat, f_prod, format_rational, int, serde_text, shift, sign, Rational, VarSet};
use crate::error::Error;
use crate::khc::{k_det, k_pole_expand, k_residue_at_coincidence, k_sym, k_value};
use crate::lattice::{
    yang_baxter_check, z_lattice_enum_with_budget, z_lattice_transfer, LatticeSpec, DEFAULT_ENUM_BUDGET,
};
use crate::repr::Representation;
use crate::residue::{
    fresh_abscissae, pole_decompose, pole_structure_check, verify_recursion_nontriv, verify_recursion_triv, z_recursive,
};
use crate::sampler::{sample_point, Sampler};
use crate::zhc::{partitions, twin_identity_sides, z_small, z_sum, PointConfig, SumFormulaId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

/// Environment variable overriding the lattice enumeration budget.
pub const BUDGET_ENV: &str = "HC_MAX_LATTICE";

#[derive(Debug, Parser)]
#[command(name = "hc", version, about = "Exact highest coefficients of SU(3) scalar products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Z at the point given in a JSON request file.
    Eval { file: PathBuf },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 2)]
        max_a: usize,
        #[arg(long, default_value_t = 2)]
        max_b: usize,
    },
    /// Time one representation (or all of them) at a sampled point.
    Bench {
        /// Representation name, or "all".
        #[arg(long, default_value = "all")]
        rep: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Cross,
    Recursions,
    Lattice,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Cross => "cross",
            Suite::Recursions => "recursions",
            Suite::Lattice => "lattice",
            Suite::All => "all",
        }
    }
}

/// Enumeration budget from [`BUDGET_ENV`], else the default.
pub fn enum_budget() -> usize {
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text.trim().parse().unwrap_or_else(|_| {
            warn!("ignoring unparsable {BUDGET_ENV}={text:?}");
            DEFAULT_ENUM_BUDGET
        }),
        Err(_) => DEFAULT_ENUM_BUDGET,
    }
}

fn default_c() -> Rational {
    int(1)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalRequest {
    #[serde(default = "default_c", with = "serde_text")]
    pub c: Rational,
    #[serde(with = "serde_text::vec")]
    pub t: VarSet,
    #[serde(with = "serde_text::vec")]
    pub x: VarSet,
    #[serde(with = "serde_text::vec")]
    pub s: VarSet,
    #[serde(with = "serde_text::vec")]
    pub y: VarSet,
    #[serde(default)]
    pub representation: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub suite: String,
    pub trial: u64,
    pub check: String,
    pub point: Value,
    pub values: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub attempted: u64,
    pub passed: u64,
    pub failures: Vec<Failure>,
    pub duration_ms: u64,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::DegeneratePoint(_) | Error::ZeroCoupling | Error::DivisionByCoincidence { .. } => EXIT_DEGENERATE,
        Error::SizeMismatch(_) | Error::ParseRational(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn emit(out: &mut dyn Write, value: &Value) {
    // stdout going away is not something the caller can act on
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Eval { file } => cmd_eval(&file, out),
        Command::Verify {
            suite,
            seed,
            trials,
            max_a,
            max_b,
        } => {
            let report = cmd_verify(suite, seed, trials, max_a, max_b);
            emit(out, &serde_json::to_value(&report).expect("report serializes"));
            if report.passed == report.attempted {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Command::Bench {
            rep,
            a,
            b,
            trials,
            seed,
        } => cmd_bench(&rep, a, b, trials, seed, out),
    }
}

pub fn cmd_eval(file: &std::path::Path, out: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            emit(out, &json!({ "error": format!("cannot read {}: {e}", file.display()) }));
            return EXIT_USAGE;
        }
    };
    let request: EvalRequest = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => {
            emit(out, &json!({ "error": format!("invalid request: {e}") }));
            return EXIT_USAGE;
        }
    };
    let selection = match request.representation.as_deref() {
        None => Some(Representation::Sum(SumFormulaId::RhcIhc)),
        Some(name) if name.eq_ignore_ascii_case("all") => None,
        Some(name) => match name.parse::<Representation>() {
            Ok(rep) => Some(rep),
            Err(e) => {
                emit(out, &json!({ "error": e }));
                return EXIT_USAGE;
            }
        },
    };
    let pt = match PointConfig::new(request.c, request.t, request.x, request.s, request.y) {
        Ok(pt) => pt,
        Err(e) => {
            emit(out, &json!({ "error": e.to_string() }));
            return exit_code_for(&e);
        }
    };
    let budget = enum_budget();
    match selection {
        Some(rep) => match rep.evaluate_with_budget(&pt, budget) {
            Ok(v) => {
                emit(
                    out,
                    &json!({ "representation": rep.name(), "value": format_rational(&v) }),
                );
                EXIT_OK
            }
            Err(e) => {
                emit(out, &json!({ "representation": rep.name(), "error": e.to_string() }));
                exit_code_for(&e)
            }
        },
        None => {
            let (values, errors) = evaluate_table(&pt, budget);
            let distinct: std::collections::BTreeSet<&String> = values.values().collect();
            let agree = errors.is_empty() && distinct.len() == 1;
            let mut doc = json!({ "values": values, "agree": agree });
            if !errors.is_empty() {
                doc["errors"] = json!(errors);
            }
            emit(out, &doc);
            EXIT_OK
        }
    }
}

/// Every formula, plus the lattice oracles when `a + b ≤ 4`.
fn evaluate_table(pt: &PointConfig, budget: usize) -> (BTreeMap<String, String>, BTreeMap<String, String>) {
    let mut reps = Representation::formulas();
    if pt.a() + pt.b() <= 4 {
        reps.push(Representation::LatticeEnum);
        reps.push(Representation::LatticeTransfer);
    }
    let mut values = BTreeMap::new();
    let mut errors = BTreeMap::new();
    for rep in reps {
        match rep.evaluate_with_budget(pt, budget) {
            Ok(v) => {
                values.insert(rep.name().to_string(), format_rational(&v));
            }
            Err(e) => {
                errors.insert(rep.name().to_string(), e.to_string());
            }
        }
    }
    (values, errors)
}

/// Outcome of one trial: `Ok(None)` passes, `Ok(Some(..))` names the failed
/// check with the values involved.
type TrialOutcome = std::result::Result<Option<(String, BTreeMap<String, String>)>, Error>;

fn mismatch(check: &str, values: &[(&str, &Rational)]) -> TrialOutcome {
    Ok(Some((
        check.to_string(),
        values
            .iter()
            .map(|(k, v)| (k.to_string(), format_rational(v)))
            .collect(),
    )))
}

fn check_equal(check: &str, left: (&str, &Rational), right: (&str, &Rational)) -> TrialOutcome {
    if left.1 == right.1 {
        Ok(None)
    } else {
        mismatch(check, &[left, right])
    }
}

macro_rules! require {
    ($outcome:expr) => {
        if let Some(fail) = $outcome? {
            return Ok(Some(fail));
        }
    };
}

pub fn cmd_verify(suite: Suite, seed: u64, trials: u64, max_a: usize, max_b: usize) -> VerifyReport {
    let start = Instant::now();
    let suites = match suite {
        Suite::All => vec![Suite::Identities, Suite::Cross, Suite::Recursions, Suite::Lattice],
        one => vec![one],
    };
    let mut attempted = 0;
    let mut passed = 0;
    let mut failures = Vec::new();
    for current in suites {
        let mut sampler = Sampler::new(seed);
        for trial in 0..trials {
            attempted += 1;
            let mut point = Value::Null;
            let outcome = run_trial(current, trial, &mut sampler, max_a, max_b, &mut point);
            match outcome {
                Ok(None) => passed += 1,
                Ok(Some((check, values))) => {
                    warn!("{} trial {trial}: {check} failed", current.name());
                    failures.push(Failure {
                        suite: current.name().into(),
                        trial,
                        check,
                        point,
                        values,
                    });
                }
                Err(e) => {
                    warn!("{} trial {trial}: {e}", current.name());
                    failures.push(Failure {
                        suite: current.name().into(),
                        trial,
                        check: format!("error: {e}"),
                        point,
                        values: BTreeMap::new(),
                    });
                }
            }
        }
        info!("suite {} done", current.name());
    }
    VerifyReport {
        suite: suite.name().into(),
        seed,
        attempted,
        passed,
        failures,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

fn size_pairs(max_a: usize, max_b: usize, min_b: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for a in 0..=max_a {
        for b in min_b..=max_b {
            if a + b >= 1 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

fn point_json(pt: &PointConfig) -> Value {
    serde_json::to_value(pt).expect("points serialize")
}

fn run_trial(
    suite: Suite,
    trial: u64,
    sampler: &mut Sampler,
    max_a: usize,
    max_b: usize,
    point: &mut Value,
) -> TrialOutcome {
    match suite {
        Suite::Identities => identities_trial(sampler, max_a, max_b, point),
        Suite::Cross => {
            let pairs = size_pairs(max_a, max_b, 0);
            if pairs.is_empty() {
                return Err(Error::SizeMismatch("no (a, b) with a + b >= 1 in range".into()));
            }
            let (a, b) = pairs[trial as usize % pairs.len()];
            let c = sampler.coupling();
            let pt = sampler.point(a, b, &c)?;
            *point = point_json(&pt);
            cross_trial(&pt)
        }
        Suite::Recursions => {
            let pairs = size_pairs(max_a, max_b.max(1), 1);
            let (a, b) = pairs[trial as usize % pairs.len()];
            let c = sampler.coupling();
            let pt = sampler.point(a, b, &c)?;
            *point = point_json(&pt);
            recursions_trial(&pt)
        }
        Suite::Lattice => lattice_trial(sampler, trial, max_a, max_b, point),
        Suite::All => unreachable!("expanded by cmd_verify"),
    }
}

/// All formulas agree; the lattice oracles join in when `a + b ≤ 4`.
pub fn cross_trial(pt: &PointConfig) -> TrialOutcome {
    let (values, errors) = evaluate_table(pt, enum_budget().max(DEFAULT_ENUM_BUDGET));
    if let Some((rep, e)) = errors.into_iter().next() {
        return Ok(Some((format!("{rep} failed: {e}"), values)));
    }
    let distinct: std::collections::BTreeSet<&String> = values.values().collect();
    if distinct.len() == 1 {
        Ok(None)
    } else {
        Ok(Some(("representations disagree".into(), values)))
    }
}

fn recursions_trial(pt: &PointConfig) -> TrialOutcome {
    if !verify_recursion_triv(pt)? {
        return Ok(Some(("residue at s_b = y_b".into(), BTreeMap::new())));
    }
    if pt.a() >= 1 && !verify_recursion_nontriv(pt)? {
        return Ok(Some(("residue at s_b = t_a".into(), BTreeMap::new())));
    }
    if !pole_structure_check(pt, 3)? {
        return Ok(Some(("pole structure in s_b".into(), BTreeMap::new())));
    }
    if pt.a() + pt.b() <= 3 {
        let direct = z_sum(SumFormulaId::RhcIhc, pt)?;
        require!(check_equal(
            "rebuilt from recursions",
            ("RHC_IHC", &direct),
            ("recursive", &z_recursive(pt)?)
        ));
    }
    Ok(None)
}

fn identities_trial(sampler: &mut Sampler, max_a: usize, max_b: usize, point: &mut Value) -> TrialOutcome {
    let c = sampler.coupling();
    let n = sampler.integer(0, 4) as usize;
    let vars = sampler.fresh(&[], &c, 2 * n + 1)?;
    let (x, rest) = vars.split_at(n);
    let (y, z) = rest.split_at(n);
    let z = &z[0];
    *point = json!({
        "c": format_rational(&c),
        "x": x.iter().map(format_rational).collect::<Vec<_>>(),
        "y": y.iter().map(format_rational).collect::<Vec<_>>(),
        "z": format_rational(z),
    });
    require!(k_identities(x, y, z, &c, sampler));

    let a = sampler.integer(0, max_a as i64) as usize;
    let b = sampler.integer(0, max_b as i64) as usize;
    let pt = sampler.point(a, b, &c)?;
    point["z_point"] = point_json(&pt);
    require!(z_identities(&pt, sampler));
    Ok(None)
}

/// Triple agreement, symmetry, shift identities and the residue in `x_n` of
/// `K_n(x̄|ȳ)`; `z` is one more admissible variable.
pub fn k_identities(x: &[Rational], y: &[Rational], z: &Rational, c: &Rational, sampler: &mut Sampler) -> TrialOutcome {
    let n = x.len();
    let det = k_det(x, y, c)?;
    require!(check_equal("k_sym", ("k_det", &det), ("k_sym", &k_sym(x, y, c)?)));
    require!(check_equal(
        "k_pole_expand",
        ("k_det", &det),
        ("k_pole_expand", &k_pole_expand(x, y, c)?)
    ));

    let (mut xp, mut yp) = (x.to_vec(), y.to_vec());
    sampler.shuffle(&mut xp);
    sampler.shuffle(&mut yp);
    require!(check_equal("symmetry", ("K", &det), ("permuted", &k_det(&xp, &yp, c)?)));

    // K_{n+1}(x̄, z-c | ȳ, z) = K_{n+1}(x̄, z | ȳ, z+c) = -K_n(x̄|ȳ)
    let minus = -det.clone();
    let zc = std::slice::from_ref(z);
    let z_down = [z - c];
    let z_up = [z + c];
    for (label, xs, ys) in [
        ("reduction K(x, z-c | y, z)", concat(x, &z_down), concat(y, zc)),
        ("reduction K(x, z | y, z+c)", concat(x, zc), concat(y, &z_up)),
    ] {
        require!(check_equal(label, ("-K_n", &minus), ("k_sym", &k_sym(&xs, &ys, c)?)));
        require!(check_equal(
            label,
            ("-K_n", &minus),
            ("k_pole_expand", &k_pole_expand(&xs, &ys, c)?)
        ));
        require!(check_equal(
            label,
            ("-K_n", &minus),
            ("k_value", &k_value(&xs, &ys, c)?)
        ));
    }

    // K_n(x̄-c|ȳ) = K_n(x̄|ȳ+c) = (-1)^n f(ȳ,x̄)^{-1} K_n(ȳ|x̄)
    let neg_c = -c.clone();
    let left = k_det(&shift(x, &neg_c), y, c)?;
    let middle = k_det(x, &shift(y, c), c)?;
    let right = sign(n) * k_det(y, x, c)? / f_prod(y, x, c)?;
    require!(check_equal(
        "shift reflection",
        ("K(x-c|y)", &left),
        ("K(x|y+c)", &middle)
    ));
    require!(check_equal(
        "shift reflection",
        ("K(x-c|y)", &left),
        ("reflected", &right)
    ));

    // x_n -> K_n is Σ_k r_k / (x_n - y_k); its residue at y_n is known
    if n >= 1 {
        let x_rest = &x[..n - 1];
        let avoid = concat(x, y);
        let samples = fresh_abscissae(&avoid, c, n + 1)
            .into_iter()
            .map(|u| {
                let mut xs = x_rest.to_vec();
                xs.push(u.clone());
                Ok((u, k_det(&xs, y, c)?))
            })
            .collect::<crate::error::Result<Vec<_>>>()?;
        let residues = match pole_decompose(&samples, y) {
            Ok(r) => r,
            Err(Error::InconsistentSamples) => return mismatch("decay in x_n", &[]),
            Err(e) => return Err(e),
        };
        let predicted = k_residue_at_coincidence(x_rest, y, c)?;
        require!(check_equal(
            "residue at x_n = y_n",
            ("extracted", &residues[n - 1]),
            ("predicted", &predicted)
        ));
    }
    Ok(None)
}

/// Boundary cases, twin-identity splits and symmetry of `Z`.
pub fn z_identities(pt: &PointConfig, sampler: &mut Sampler) -> TrialOutcome {
    let (a, b) = (pt.a(), pt.b());
    let z = z_sum(SumFormulaId::RhcIhc, pt)?;
    if a == 0 || b == 0 {
        let small = z_small(pt)?;
        for id in SumFormulaId::ALL {
            require!(check_equal(
                "boundary case",
                ("z_small", &small),
                (id.name(), &z_sum(id, pt)?)
            ));
        }
    }
    for split in partitions(a + b, &[b, a])? {
        let (left, right) = twin_identity_sides(pt, &split)?;
        require!(check_equal(
            "twin identity",
            ("(-1)^a K_a", &left),
            ("(-1)^b K_b", &right)
        ));
    }
    let mut permuted = pt.clone();
    sampler.shuffle(&mut permuted.t);
    sampler.shuffle(&mut permuted.x);
    sampler.shuffle(&mut permuted.s);
    sampler.shuffle(&mut permuted.y);
    require!(check_equal(
        "Z symmetry",
        ("Z", &z),
        ("permuted", &z_sum(SumFormulaId::RhcIhc, &permuted)?)
    ));
    Ok(None)
}

fn lattice_trial(sampler: &mut Sampler, trial: u64, max_a: usize, max_b: usize, point: &mut Value) -> TrialOutcome {
    let c = sampler.coupling();
    let xyz = sampler.fresh(&[], &c, 3)?;
    *point = json!({ "c": format_rational(&c), "xyz": xyz.iter().map(format_rational).collect::<Vec<_>>() });
    if !yang_baxter_check(&xyz[0], &xyz[1], &xyz[2], &c)? {
        return mismatch("Yang-Baxter", &[]);
    }
    let pairs: Vec<_> = size_pairs(max_a, max_b, 0)
        .into_iter()
        .filter(|(a, b)| a + b <= 4)
        .collect();
    if pairs.is_empty() {
        return Ok(None);
    }
    let (a, b) = pairs[trial as usize % pairs.len()];
    let pt = sampler.point(a, b, &c)?;
    point["z_point"] = point_json(&pt);
    let spec = LatticeSpec::canonical(&pt);
    let transfer = z_lattice_transfer(&spec)?;
    let enumerated = z_lattice_enum_with_budget(&spec, enum_budget().max(DEFAULT_ENUM_BUDGET))?;
    require!(check_equal(
        "enum = transfer",
        ("enum", &enumerated),
        ("transfer", &transfer)
    ));
    let formula = z_sum(SumFormulaId::Gf, &pt)?;
    require!(check_equal("lattice = GF", ("transfer", &transfer), ("GF", &formula)));
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchEntry {
    pub representation: String,
    pub term_count: Option<u128>,
    pub median_ms: f64,
    pub times_ms: Vec<f64>,
    pub value: String,
}

pub fn cmd_bench(rep: &str, a: usize, b: usize, trials: u64, seed: u64, out: &mut dyn Write) -> i32 {
    let budget = enum_budget();
    let vertices = (a + b) * (a + b);
    let reps = if rep.eq_ignore_ascii_case("all") {
        let mut reps = Representation::formulas();
        if vertices <= budget {
            reps.push(Representation::LatticeEnum);
        }
        reps.push(Representation::LatticeTransfer);
        reps
    } else {
        match rep.parse::<Representation>() {
            Ok(Representation::LatticeEnum) if vertices > budget => {
                emit(
                    out,
                    &json!({ "error": Error::BudgetExceeded { vertices, budget }.to_string() }),
                );
                return EXIT_USAGE;
            }
            Ok(r) => vec![r],
            Err(e) => {
                emit(out, &json!({ "error": e }));
                return EXIT_USAGE;
            }
        }
    };
    let pt = match sample_point(seed, a, b, &int(1)) {
        Ok(pt) => pt,
        Err(e) => {
            emit(out, &json!({ "error": e.to_string() }));
            return EXIT_USAGE;
        }
    };
    let mut results = Vec::new();
    for r in reps {
        let mut times = Vec::new();
        let mut value = None;
        for _ in 0..trials {
            let start = Instant::now();
            match r.evaluate_with_budget(&pt, budget) {
                Ok(v) => value = Some(v),
                Err(e) => {
                    emit(out, &json!({ "representation": r.name(), "error": e.to_string() }));
                    return EXIT_FAILURE;
                }
            }
            times.push(start.elapsed().as_secs_f64() * 1e3);
        }
        let mut sorted = times.clone();
        sorted.sort_by(|p, q| p.total_cmp(q));
        let median = sorted[sorted.len() / 2];
        info!("{}: median {median:.3} ms", r.name());
        results.push(BenchEntry {
            representation: r.name().into(),
            term_count: r.term_count(a, b),
            median_ms: median,
            times_ms: times,
            value: format_rational(&value.expect("trials >= 1")),
        });
    }
    emit(
        out,
        &json!({ "a": a, "b": b, "seed": seed, "point": point_json(&pt), "results": results }),
    );
    EXIT_OK
}
