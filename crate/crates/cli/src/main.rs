//! `blchain`: command-line front end for the evaluation, checking,
//! separation and classification routines.
//!
//! Exit status: 0 when a result was computed (including failures of a
//! principle), 1 for input errors, 2 when an internal re-check fails.

use std::io::Write;
use std::process::ExitCode;

use blchain::algebra::{decompose_table, ChainTable};
use blchain::mcnaughton::{eval_at_point, literal_to_pwl, pwl_zero_set, separate_points, threshold_literal};
use blchain::principles::{
    census, check_p1, check_p2, check_p2_on_pairs, classify_chain, verify_report, Principle, PrincipleReport,
};
use blchain::rational::{fmt_rational, parse_rational, rat, Rational};
use blchain::semantics::{eval, is_tautology, are_equivalent, semantic_consequence, Judgment, Valuation};
use blchain::{enumerate_finite_chains, parse_formula, Algebra, Error, Formula};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "blchain", version, about = "Exact workbench for t-norm based many-valued logics")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    P2,
    P2prime,
    P2doubleprime,
}

impl From<Variant> for Principle {
    fn from(v: Variant) -> Principle {
        match v {
            Variant::P2 => Principle::P2,
            Variant::P2prime => Principle::P2prime,
            Variant::P2doubleprime => Principle::P2doubleprime,
        }
    }
}

#[derive(Args, Debug)]
struct AlgArg {
    /// Algebra descriptor, e.g. "MV[2] (+) MV[1]", "MVQ", "GQ", "PQ"
    #[arg(long)]
    alg: String,
}

#[derive(Args, Debug)]
struct VarsArg {
    /// Use variables X1..Xn (default: the formula's own variables)
    #[arg(long)]
    vars: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a formula under a valuation
    Eval {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        formula: String,
        /// Valuation literal, e.g. "X1=1/2, X2=top"
        #[arg(long)]
        val: String,
    },
    /// Decide validity on a finite algebra
    Taut {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        vars: VarsArg,
    },
    /// Decide equivalence of two formulas on a finite algebra
    Equiv {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        formula: String,
        #[arg(long)]
        formula2: String,
        #[command(flatten)]
        vars: VarsArg,
    },
    /// Decide semantic consequence on a finite algebra
    Conseq {
        #[command(flatten)]
        alg: AlgArg,
        /// Semicolon-separated premises
        #[arg(long, default_value = "")]
        premises: String,
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        vars: VarsArg,
    },
    /// Find a formula positive at p and zero at q over the standard MV-algebra
    Separate {
        /// Comma-separated rationals
        #[arg(long)]
        p: String,
        /// Comma-separated rationals
        #[arg(long)]
        q: String,
    },
    /// Basic literal with zero set [0, h/k]
    Threshold {
        #[arg(long)]
        h: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 16)]
        step_bound: u32,
    },
    /// Check principle P1
    CheckP1 {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Check principle P2 or one of its variants
    CheckP2 {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Variant::P2)]
        variant: Variant,
        /// Check random valuation pairs drawn with this seed instead of the grid
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random pairs when --seed is given
        #[arg(long, default_value_t = 100)]
        pairs: usize,
    },
    /// Classify a chain structurally
    Classify {
        #[command(flatten)]
        alg: AlgArg,
    },
    /// Classify and check both principles on every finite chain up to a size
    Census {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// List all finite BL-chains with 2..=max-size elements
    EnumerateChains {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// Split a finite chain into MV-chain summands
    Decompose {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        alg: Option<String>,
        /// Product table as a JSON array of rows of element indices
        #[arg(long)]
        table: Option<String>,
    },
}

/// Result of a subcommand: JSON payload and its plain-text rendering.
struct Output {
    json: Value,
    text: String,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Run = Result<Output, Failure>;

fn internal(msg: String) -> Failure {
    Failure::Internal(format!("re-verification failed: {msg}"))
}

fn algebra(desc: &str) -> Result<Algebra, Failure> {
    Ok(desc.parse::<Algebra>()?)
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure::Input(format!("in `{text}`: {e}")))
}

/// Variable list: X1..Xn when given, else the free variables (at least X1).
fn var_list(vars: &VarsArg, formulas: &[&Formula]) -> Vec<u32> {
    match vars.vars {
        Some(n) => (1..=n).collect(),
        None => {
            let mut set: Vec<u32> = formulas.iter().flat_map(|f| f.free_variables()).collect();
            set.sort();
            set.dedup();
            if set.is_empty() {
                set.push(1);
            }
            set
        }
    }
}

fn judgment_output(kind: &str, alg: &Algebra, j: &Judgment, extra: Value) -> Output {
    let witness = j.witness.as_ref().map(|v| v.format(alg));
    let mut json = json!({ "command": kind, "algebra": alg.to_string(), "verdict": j.holds, "witness": witness });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    let text = match &witness {
        None => format!("{kind}: true"),
        Some(w) => format!("{kind}: false\ncounterexample: {w}"),
    };
    Output { json, text }
}

fn cmd_eval(a: &AlgArg, f: &str, val: &str) -> Run {
    let alg = algebra(&a.alg)?;
    let f = formula(f)?;
    let v = Valuation::parse(&alg, val)?;
    let value = eval(&alg, &v, &f)?;
    let shown = alg.format_value(&value);
    Ok(Output {
        json: json!({
            "command": "eval",
            "algebra": alg.to_string(),
            "formula": f.render(),
            "valuation": v.format(&alg),
            "value": shown,
        }),
        text: shown,
    })
}

fn cmd_taut(a: &AlgArg, f: &str, vars: &VarsArg) -> Run {
    let alg = algebra(&a.alg)?;
    let f = formula(f)?;
    let j = is_tautology(&alg, &f, &var_list(vars, &[&f]))?;
    if let Some(w) = &j.witness {
        if eval(&alg, w, &f)?.is_top() {
            return Err(internal(format!("{f} is 1 at the reported counterexample")));
        }
    }
    Ok(judgment_output("taut", &alg, &j, json!({ "formula": f.render() })))
}

fn cmd_equiv(a: &AlgArg, f: &str, g: &str, vars: &VarsArg) -> Run {
    let alg = algebra(&a.alg)?;
    let (f, g) = (formula(f)?, formula(g)?);
    let j = are_equivalent(&alg, &f, &g, &var_list(vars, &[&f, &g]))?;
    if let Some(w) = &j.witness {
        if eval(&alg, w, &f)? == eval(&alg, w, &g)? {
            return Err(internal("the formulas agree at the reported counterexample".into()));
        }
    }
    Ok(judgment_output("equiv", &alg, &j, json!({ "formula": f.render(), "formula2": g.render() })))
}

fn cmd_conseq(a: &AlgArg, premises: &str, f: &str, vars: &VarsArg) -> Run {
    let alg = algebra(&a.alg)?;
    let f = formula(f)?;
    let ps: Vec<Formula> =
        premises.split(';').map(str::trim).filter(|s| !s.is_empty()).map(formula).collect::<Result<_, _>>()?;
    let mut all: Vec<&Formula> = ps.iter().collect();
    all.push(&f);
    let j = semantic_consequence(&alg, &ps, &f, &var_list(vars, &all))?;
    if let Some(w) = &j.witness {
        for p in &ps {
            if !eval(&alg, w, p)?.is_top() {
                return Err(internal(format!("premise {p} is not 1 at the counterexample")));
            }
        }
        if eval(&alg, w, &f)?.is_top() {
            return Err(internal("conclusion is 1 at the counterexample".into()));
        }
    }
    let rendered: Vec<String> = ps.iter().map(Formula::render).collect();
    Ok(judgment_output("conseq", &alg, &j, json!({ "premises": rendered, "formula": f.render() })))
}

fn point(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',').map(|s| parse_rational(s.trim()).map_err(Failure::from)).collect()
}

fn cmd_separate(p: &str, q: &str) -> Run {
    let (p, q) = (point(p)?, point(q)?);
    let s = separate_points(&p, &q)?;
    let (vp, vq) = (eval_at_point(&s.formula, &p)?, eval_at_point(&s.formula, &q)?);
    if vp != s.value_p || vq != s.value_q || vq != rat(0, 1) || vp <= rat(0, 1) {
        return Err(internal(format!("{} does not separate the points", s.formula)));
    }
    let (vp, vq) = (fmt_rational(&vp), fmt_rational(&vq));
    let json = json!({
        "command": "separate",
        "formula": s.formula.render(),
        "variable": s.var,
        "negated": s.negated,
        "literal": s.literal.to_string(),
        "threshold": fmt_rational(&s.threshold),
        "doubling_steps": s.raw_steps,
        "step_bound": s.step_bound,
        "value_p": vp,
        "value_q": vq,
    });
    let text = format!("{}\nvalue at p: {vp}\nvalue at q: {vq}", s.formula);
    Ok(Output { json, text })
}

fn cmd_threshold(h: i64, k: i64, bound: u32) -> Run {
    let lit = threshold_literal(h, k, bound)?;
    let pwl = literal_to_pwl(&lit);
    let zero_set = pwl_zero_set(&pwl)?;
    if zero_set.sup() != Some(rat(h, k)) {
        return Err(internal(format!("zero set of {lit} is {zero_set}")));
    }
    let json = json!({
        "command": "threshold",
        "literal": lit.to_string(),
        "formula": lit.expand().render(),
        "zero_set": zero_set.to_string(),
        "pwl": pwl.to_json(),
    });
    let text = format!("{lit}\nzero set: {zero_set}\nfunction: {pwl}");
    Ok(Output { json, text })
}

fn report_output(r: PrincipleReport) -> Run {
    verify_report(&r).map_err(|e| internal(e.to_string()))?;
    Ok(Output { json: r.to_json(), text: r.to_string() })
}

fn random_pairs(alg: &Algebra, n: usize, count: usize, seed: u64) -> Result<Vec<(Valuation, Valuation)>, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Option<Vec<Rational>> = alg.finite_sizes().map(|s| {
        let m = i64::from(s[0]);
        (0..=m).map(|j| rat(j, m)).collect()
    });
    let draw = |rng: &mut ChaCha8Rng| -> Result<Valuation, Failure> {
        let mut pairs = Vec::new();
        for v in 1..=n as u32 {
            let r = match &values {
                Some(vals) => vals[rng.gen_range(0..vals.len())].clone(),
                None => {
                    let d = rng.gen_range(1..=32);
                    rat(rng.gen_range(0..=d), d)
                }
            };
            pairs.push((v, alg.embed(&r)?));
        }
        Ok(Valuation::new(pairs)?)
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (mu, nu) = (draw(&mut rng)?, draw(&mut rng)?);
        if mu != nu {
            out.push((mu, nu));
        } else if alg.cardinality().is_some_and(|c| c.pow(n as u32) < 2) {
            break;
        }
    }
    Ok(out)
}

fn cmd_check_p2(a: &AlgArg, vars: usize, depth: usize, variant: Variant, seed: Option<u64>, pairs: usize) -> Run {
    let alg = algebra(&a.alg)?;
    let r = match seed {
        None => check_p2(&alg, vars, depth, variant.into())?,
        Some(s) => {
            if vars == 0 {
                return Err(Failure::Input("--vars must be at least 1".into()));
            }
            let mut r = check_p2_on_pairs(&alg, &random_pairs(&alg, vars, pairs, s)?, variant.into())?;
            r.depth = depth;
            r.basis = format!("{} (random pairs, seed {s})", r.basis);
            r
        }
    };
    report_output(r)
}

fn cmd_classify(a: &AlgArg) -> Run {
    let alg = algebra(&a.alg)?;
    let c = classify_chain(&alg)?;
    let text = format!("{alg}: {}", c.verdict);
    Ok(Output { json: c.to_json(&alg), text })
}

fn cmd_census(max_size: usize, vars: usize, depth: usize) -> Run {
    let rows = census(max_size, vars, depth)?;
    let json = Value::Array(rows.iter().map(|r| r.to_json()).collect());
    let text = rows
        .iter()
        .map(|r| {
            format!(
                "{:<28} size {:>2}  {:<22} P1 {:<20} P2 {}",
                r.algebra.to_string(),
                r.algebra.cardinality().unwrap_or(0),
                r.classification.verdict.to_string(),
                r.p1.verdict.to_string(),
                r.p2.verdict
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output { json, text })
}

fn cmd_enumerate(max_size: usize) -> Run {
    if max_size < 2 {
        return Err(Failure::Input("--max-size must be at least 2".into()));
    }
    let mut list = Vec::new();
    for n in 2..=max_size {
        for alg in enumerate_finite_chains(n)? {
            list.push((n, alg));
        }
    }
    let json = Value::Array(
        list.iter()
            .map(|(n, a)| json!({ "size": n, "algebra": a.to_string(), "summands": a.finite_sizes() }))
            .collect(),
    );
    let text = list.iter().map(|(n, a)| format!("{n}  {a}")).collect::<Vec<_>>().join("\n");
    Ok(Output { json, text })
}

fn cmd_decompose(alg: Option<&str>, table: Option<&str>) -> Run {
    let (source, sizes) = match (alg, table) {
        (Some(a), _) => {
            let alg = algebra(a)?;
            (alg.to_string(), alg.decompose()?)
        }
        (None, Some(t)) => {
            let rows: Vec<Vec<usize>> =
                serde_json::from_str(t).map_err(|e| Failure::Input(format!("table is not a JSON matrix: {e}")))?;
            let sizes = decompose_table(&rows)?;
            let rebuilt = ChainTable::from_sizes(&sizes)?;
            if rebuilt.product_rows() != rows {
                return Err(internal("rebuilt table differs from the input".into()));
            }
            ("table".to_string(), sizes)
        }
        (None, None) => return Err(Failure::Input("give --alg or --table".into())),
    };
    let descriptor = Algebra::from_sizes(&sizes)?.to_string();
    let json = json!({ "command": "decompose", "source": source, "summands": sizes, "descriptor": descriptor });
    Ok(Output { json, text: descriptor })
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Eval { alg, formula, val } => cmd_eval(alg, formula, val),
        Command::Taut { alg, formula, vars } => cmd_taut(alg, formula, vars),
        Command::Equiv { alg, formula, formula2, vars } => cmd_equiv(alg, formula, formula2, vars),
        Command::Conseq { alg, premises, formula, vars } => cmd_conseq(alg, premises, formula, vars),
        Command::Separate { p, q } => cmd_separate(p, q),
        Command::Threshold { h, k, step_bound } => cmd_threshold(*h, *k, *step_bound),
        Command::CheckP1 { alg, vars, depth } => report_output(check_p1(&algebra(&alg.alg)?, *vars, *depth)?),
        Command::CheckP2 { alg, vars, depth, variant, seed, pairs } => {
            cmd_check_p2(alg, *vars, *depth, *variant, *seed, *pairs)
        }
        Command::Classify { alg } => cmd_classify(alg),
        Command::Census { max_size, vars, depth } => cmd_census(*max_size, *vars, *depth),
        Command::EnumerateChains { max_size } => cmd_enumerate(*max_size),
        Command::Decompose { alg, table } => cmd_decompose(alg.as_deref(), table.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text,
            };
            // a closed pipe downstream is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
