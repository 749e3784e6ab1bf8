//! `maxab`: exact computations on abelian subgroups of compact classical
//! groups — commutator pairings and canonical decompositions, block
//! invariants of orthogonal/symplectic/twisted quotients, Clifford and
//! Spin subgroup checks, F2 metric-space classification, root-system fixed
//! subsystems, and the batch verification driver.
//!
//! Exit codes: 0 success, 1 mathematical-property failure, 2 usage error,
//! 3 resource cap exceeded.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use maxab_core::catalog;
use maxab_core::clifford::{parse_element, PinElement};
use maxab_core::error::Error;
use maxab_core::f2struct::{self, DefectConstraint};
use maxab_core::fixedspace::{condition_star, AlgFamily, LieAlgebraBasis, Summand};
use maxab_core::json::{subgroup_from_json, subgroup_to_json, MatrixDto, SCHEMA};
use maxab_core::pairing::{self, BdFamily};
use maxab_core::rootsys::{
    central_in_levi, fixed_subsystem, torus_element_order, torus_element_order_simply_connected,
    LeviDatum, RootSystem, SimpleType, TorusElement,
};
use maxab_core::spin::isotropic_search;
use maxab_core::verify;
use maxab_core::{cyclotomic, FiniteSubgroup};

#[derive(Parser)]
#[command(name = "maxab", version, about)]
struct Cli {
    /// Configuration file with key=value lines (closure_cap, search_bound,
    /// threads). Flags override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Cap on closure enumeration size.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,

    /// Bound for the Spin isotropic search.
    #[arg(long, global = true)]
    search_bound: Option<usize>,

    /// Worker threads for batch jobs (accepted for compatibility; jobs here
    /// are pure and small enough to run serially).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Commutator pairing table of an abelian subgroup.
    Pairing(SubgroupArgs),
    /// Canonical H_{n_1} x ... x H_{n_s} x T decomposition in PU(n).
    Decompose(SubgroupArgs),
    /// Block invariants (k, s0, s1) in an orthogonal/symplectic/twisted
    /// quotient.
    BdInvariants {
        #[command(flatten)]
        subgroup: SubgroupArgs,
        /// orthogonal | symplectic | twisted
        #[arg(long)]
        family: String,
    },
    /// Lift of a twisted abelian subgroup to (U(n)/<-I>) >< tau.
    TwistedLift(SubgroupArgs),
    /// Fixed-subalgebra dimension and the condition dim g^F = dim F.
    Star {
        #[command(flatten)]
        subgroup: SubgroupArgs,
        /// Algebra spec like so8, su6, sp2, or sums like su6+sp1. Defaults
        /// to the algebra of the subgroup's own context.
        #[arg(long)]
        algebra: Option<String>,
        /// Informational group label recorded in the report.
        #[arg(long)]
        group: Option<String>,
        /// Exit with status 1 when the condition fails.
        #[arg(long)]
        assert: bool,
    },
    /// Clifford algebra elements: parse, multiply, and project to O(n).
    Clifford {
        /// Number of generators.
        #[arg(long)]
        n: usize,
        /// Element expressions (each parsed, then all multiplied).
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Also compute the vector projection matrix.
        #[arg(long)]
        project: bool,
    },
    /// Exhaustive isotropic-subspace search for Spin(n).
    SpinSearch {
        #[arg(long)]
        n: usize,
    },
    /// F2 symplectic metric space classification.
    F2 {
        #[command(subcommand)]
        cmd: F2Cmd,
    },
    /// Root system computations.
    Root {
        #[command(subcommand)]
        cmd: RootCmd,
    },
    /// Levi subalgebra data and the central-element criterion.
    Levi {
        /// Ambient simple type, e.g. E7.
        #[arg(long = "type")]
        simple_type: String,
        /// Comma-separated simple-root indices, e.g. 2,5,7.
        #[arg(long = "Y")]
        subset: String,
        /// Optional coweight q_1,...,q_r to test for membership in
        /// span{H'_j : j in Y} + coroot lattice.
        #[arg(long)]
        central_coweight: Option<String>,
    },
    /// Catalog of named constructions.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Run the verification suites and print one line per criterion.
    VerifyPaper {
        /// all | heisenberg | cor-a | spin | bd | f2 | root | fixtures | props
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct SubgroupArgs {
    /// Path to a subgroup definition file (schema maxab/1) or a catalog key
    /// prefixed "catalog:", e.g. catalog:E7-F1 or
    /// "catalog:H-product?chain=2,2&n=4".
    #[arg(long)]
    subgroup: String,
}

#[derive(Subcommand)]
enum F2Cmd {
    /// Orbit classification of mu-tuples under Sp(2k, F2).
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// plus | minus | any
        #[arg(long, default_value = "any")]
        constraint: String,
    },
}

#[derive(Subcommand)]
enum RootCmd {
    /// Fixed subsystem of a torus element.
    FixedType {
        #[arg(long = "type")]
        simple_type: String,
        /// Comma-separated rational coefficients of sum q_j H'_j.
        #[arg(long)]
        coweight: String,
    },
    /// Adjoint and simply connected orders of a torus element.
    Order {
        #[arg(long = "type")]
        simple_type: String,
        #[arg(long)]
        coweight: String,
    },
    /// Levi data (same as the top-level levi verb).
    Levi {
        #[arg(long = "type")]
        simple_type: String,
        #[arg(long = "Y")]
        subset: String,
        #[arg(long)]
        central_coweight: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List known keys.
    List,
    /// Build one construction.
    Build {
        key: String,
        /// Parameters as key=value (repeatable).
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

struct Caps {
    closure_cap: usize,
    search_bound: usize,
}

fn load_caps(cli: &Cli) -> Result<Caps, Error> {
    let mut closure_cap = maxab_core::group::DEFAULT_CLOSURE_CAP;
    let mut search_bound = maxab_core::spin::DEFAULT_SEARCH_BOUND;
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::Parse(format!(
                    "config line {} is not key=value",
                    lineno + 1
                )));
            };
            let v = v.trim();
            match k.trim() {
                "closure_cap" => {
                    closure_cap = v
                        .parse()
                        .map_err(|_| Error::Parse("bad closure_cap".into()))?
                }
                "search_bound" => {
                    search_bound = v
                        .parse()
                        .map_err(|_| Error::Parse("bad search_bound".into()))?
                }
                "threads" => {
                    let _: usize =
                        v.parse().map_err(|_| Error::Parse("bad threads".into()))?;
                }
                other => {
                    return Err(Error::Parse(format!("unknown config key {other}")));
                }
            }
        }
    }
    if let Some(c) = cli.closure_cap {
        closure_cap = c;
    }
    if let Some(b) = cli.search_bound {
        search_bound = b;
    }
    if closure_cap == 0 || search_bound == 0 {
        return Err(Error::Parse("caps must be positive".into()));
    }
    Ok(Caps {
        closure_cap,
        search_bound,
    })
}

fn load_subgroup(spec: &str) -> Result<FiniteSubgroup, Error> {
    if let Some(key) = spec.strip_prefix("catalog:") {
        let (key, params) = split_key_params(key)?;
        let entry = catalog::build(&key, &params)?;
        match entry.realization {
            catalog::Realization::Subgroup(f) => Ok(f),
            _ => Err(Error::Parse(format!(
                "catalog entry {key} is not a subgroup"
            ))),
        }
    } else {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        let v: Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        subgroup_from_json(v)
    }
}

/// "Key" or "Key?a=1&b=2" (list-valued parameters keep their commas).
fn split_key_params(s: &str) -> Result<(String, BTreeMap<String, String>), Error> {
    match s.split_once('?') {
        None => Ok((s.to_string(), BTreeMap::new())),
        Some((k, rest)) => {
            let mut params = BTreeMap::new();
            for item in rest.split('&').filter(|x| !x.is_empty()) {
                let (a, b) = item
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad parameter {item}")))?;
                params.insert(a.trim().to_string(), b.trim().to_string());
            }
            Ok((k.to_string(), params))
        }
    }
}

fn parse_algebra(spec: &str) -> Result<LieAlgebraBasis, Error> {
    let mut summands = Vec::new();
    for part in spec.split('+') {
        let part = part.trim();
        let (fam, n) = if let Some(rest) = part.strip_prefix("so") {
            (AlgFamily::So, rest)
        } else if let Some(rest) = part.strip_prefix("su") {
            (AlgFamily::Su, rest)
        } else if let Some(rest) = part.strip_prefix("sp") {
            (AlgFamily::Sp, rest)
        } else if let Some(rest) = part.strip_prefix('u') {
            (AlgFamily::U, rest)
        } else {
            return Err(Error::Parse(format!("unknown algebra {part}")));
        };
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad algebra rank in {part}")))?;
        summands.push(Summand { family: fam, n });
    }
    Ok(LieAlgebraBasis { summands })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(RunError::Math(msg)) => {
            eprintln!("property failure: {msg}");
            ExitCode::from(1)
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}

enum RunError {
    Math(String),
    Usage(String),
    Cap(String),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::ClosureTooLarge(_) | Error::SearchTooLarge(_) => RunError::Cap(e.to_string()),
            Error::Parse(_) | Error::UnknownKey(_) | Error::CtxMismatch
            | Error::SizeMismatch(_, _) | Error::Unsupported(_) | Error::BadCenter => {
                RunError::Usage(e.to_string())
            }
            other => RunError::Math(other.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<Value, RunError> {
    let caps = load_caps(cli)?;
    match &cli.cmd {
        Cmd::Pairing(args) => cmd_pairing(args, &caps),
        Cmd::Decompose(args) => cmd_decompose(args, &caps),
        Cmd::BdInvariants { subgroup, family } => cmd_bd(subgroup, family, &caps),
        Cmd::TwistedLift(args) => cmd_twisted_lift(args, &caps),
        Cmd::Star {
            subgroup,
            algebra,
            group,
            assert,
        } => cmd_star(subgroup, algebra.as_deref(), group.as_deref(), *assert),
        Cmd::Clifford { n, exprs, project } => cmd_clifford(*n, exprs, *project),
        Cmd::SpinSearch { n } => cmd_spin_search(*n, &caps),
        Cmd::F2 { cmd } => cmd_f2(cmd),
        Cmd::Root { cmd } => cmd_root(cmd),
        Cmd::Levi {
            simple_type,
            subset,
            central_coweight,
        } => cmd_levi(simple_type, subset, central_coweight.as_deref()),
        Cmd::Catalog { cmd } => cmd_catalog(cmd, &caps),
        Cmd::VerifyPaper { suite } => cmd_verify(suite),
    }
}

fn cmd_pairing(args: &SubgroupArgs, caps: &Caps) -> Result<Value, RunError> {
    let mut f = load_subgroup(&args.subgroup)?;
    let t = pairing::pairing_m(&mut f, caps.closure_cap)?;
    let c = f.closure.as_ref().unwrap();
    let gens = f.generators.len();
    let mut gram = Vec::new();
    for i in 0..gens {
        let mut row = Vec::new();
        for j in 0..gens {
            let v = pairing::commutator_value(&f, i, j)?;
            row.push(serde_json::to_value(&v).unwrap());
        }
        gram.push(Value::Array(row));
    }
    let kernel = pairing::pairing_kernel_indices(&f, &t);
    Ok(json!({
        "schema": SCHEMA,
        "group": f.ctx.label,
        "order": c.elements.len(),
        "abelian": c.abelian,
        "generator_gram": gram,
        "kernel_size": kernel.len(),
    }))
}

fn cmd_decompose(args: &SubgroupArgs, caps: &Caps) -> Result<Value, RunError> {
    let mut f = load_subgroup(&args.subgroup)?;
    let inv = pairing::heisenberg_decompose(&mut f, caps.closure_cap)?;
    let pairs: Vec<Value> = inv
        .pairs
        .iter()
        .map(|(x, y)| {
            json!({
                "x": element_json(x),
                "y": element_json(y),
            })
        })
        .collect();
    Ok(json!({
        "schema": SCHEMA,
        "invariants": inv.invariants,
        "torus_dim": inv.torus_dim,
        "standard_pairs": pairs,
    }))
}

fn element_json(e: &maxab_core::ProjElement) -> Value {
    serde_json::to_value(maxab_core::json::ElementDto::from(e)).unwrap()
}

fn cmd_bd(args: &SubgroupArgs, family: &str, caps: &Caps) -> Result<Value, RunError> {
    let fam = match family {
        "orthogonal" => BdFamily::Orthogonal,
        "symplectic" => BdFamily::Symplectic,
        "twisted" => BdFamily::Twisted,
        other => return Err(RunError::Usage(format!("unknown family {other}"))),
    };
    let mut f = load_subgroup(&args.subgroup)?;
    let inv = pairing::bd_invariants(&mut f, fam, caps.closure_cap)?;
    let mus: Vec<String> = inv
        .metric
        .as_ref()
        .map(|m| {
            m.mus
                .iter()
                .map(|mu| {
                    mu.table
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect::<String>()
                })
                .collect()
        })
        .unwrap_or_default();
    Ok(json!({
        "schema": SCHEMA,
        "family": family,
        "k": inv.k,
        "s0": inv.s0,
        "s1": inv.s1,
        "toral": inv.toral,
        "rank_ker_mod_f0": inv.rank_ker_mod_f0,
        "block_sizes": inv.block_sizes,
        "bf_order": inv.bf_order,
        "mu_tables": mus,
    }))
}

fn cmd_twisted_lift(args: &SubgroupArgs, caps: &Caps) -> Result<Value, RunError> {
    let mut f = load_subgroup(&args.subgroup)?;
    let lifted = pairing::twisted_lift(&mut f, caps.closure_cap)?;
    Ok(subgroup_to_json(&lifted))
}

fn cmd_star(
    args: &SubgroupArgs,
    algebra: Option<&str>,
    group: Option<&str>,
    assert: bool,
) -> Result<Value, RunError> {
    let f = load_subgroup(&args.subgroup)?;
    let alg = match algebra {
        Some(spec) => parse_algebra(spec)?,
        None => LieAlgebraBasis::for_context(&f.ctx),
    };
    let r = condition_star(&f, &alg)?;
    if assert && !r.holds {
        return Err(RunError::Math(format!(
            "condition (*) fails: dim_fixed = {}, dim_F = {}",
            r.dim_fixed, r.dim_f
        )));
    }
    Ok(json!({
        "schema": SCHEMA,
        "group": group.unwrap_or(&f.ctx.label),
        "dim_fixed": r.dim_fixed,
        "dim_F": r.dim_f,
        "condition_star": r.holds,
    }))
}

fn cmd_clifford(n: usize, exprs: &[String], project: bool) -> Result<Value, RunError> {
    let mut acc = maxab_core::clifford::CliffordElement::one(n);
    for e in exprs {
        acc = acc.mul(&parse_element(n, e)?);
    }
    let mut report = json!({
        "schema": SCHEMA,
        "n": n,
        "element": acc.to_string(),
        "element_json": serde_json::to_value(&acc).unwrap(),
        "terms": acc.num_terms(),
        "pin_unit": acc.is_pin_unit(),
    });
    if project {
        let pin = PinElement::new(acc.clone())?;
        let m = maxab_core::clifford::pin_project(&pin)?;
        report["projection"] = serde_json::to_value(MatrixDto::from(&m)).unwrap();
        report["spin"] = Value::Bool(pin.is_spin());
    }
    Ok(report)
}

fn cmd_spin_search(n: usize, caps: &Caps) -> Result<Value, RunError> {
    let r = isotropic_search(n, caps.search_bound)?;
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            let masks: Vec<String> = w
                .basis_masks
                .iter()
                .map(|&m| {
                    let mut s = String::new();
                    let mut mm = m;
                    while mm != 0 {
                        let i = mm.trailing_zeros() as usize + 1;
                        mm &= mm - 1;
                        s.push_str(&format!("e{i}"));
                    }
                    s
                })
                .collect();
            json!({"rank": w.rank, "basis": masks})
        })
        .collect();
    Ok(json!({
        "schema": SCHEMA,
        "n": n,
        "witness_rank": r.witness_rank,
        "witness_count": r.witnesses.len(),
        "witnesses": witnesses,
        "searched_max_rank": r.searched_max_rank,
    }))
}

fn cmd_f2(cmd: &F2Cmd) -> Result<Value, RunError> {
    match cmd {
        F2Cmd::Classify { k, t, constraint } => {
            let c = match constraint.as_str() {
                "plus" => DefectConstraint::AllPositive,
                "minus" => DefectConstraint::AllNegative,
                "any" => DefectConstraint::Unconstrained,
                other => return Err(RunError::Usage(format!("unknown constraint {other}"))),
            };
            let r = f2struct::classify_tuples(*k, *t, c)?;
            let reps: Vec<Vec<String>> = r
                .representatives
                .iter()
                .map(|tuple| {
                    tuple
                        .iter()
                        .map(|mu| {
                            mu.table
                                .iter()
                                .map(|&b| if b { '1' } else { '0' })
                                .collect()
                        })
                        .collect()
                })
                .collect();
            Ok(json!({
                "schema": SCHEMA,
                "k": k,
                "t": t,
                "constraint": constraint,
                "classes": r.orbit_count,
                "representatives": reps,
            }))
        }
    }
}

fn cmd_root(cmd: &RootCmd) -> Result<Value, RunError> {
    match cmd {
        RootCmd::FixedType {
            simple_type,
            coweight,
        } => {
            let st = SimpleType::parse(simple_type)?;
            let rs = RootSystem::new(st)?;
            let cw = parse_coweight_cli(coweight)?;
            let t = TorusElement::new(cw);
            let rep = fixed_subsystem(&rs, &t)?;
            Ok(json!({
                "schema": SCHEMA,
                "ambient": format!("{st}"),
                "type": rep.type_string(),
                "fixed_roots": rep.fixed_roots.len(),
                "dim": rep.dim,
                "center_dim": rep.center_dim,
                "order_adjoint": torus_element_order(&rs, &t),
                "order_simply_connected": torus_element_order_simply_connected(&rs, &t),
            }))
        }
        RootCmd::Order {
            simple_type,
            coweight,
        } => {
            let st = SimpleType::parse(simple_type)?;
            let rs = RootSystem::new(st)?;
            let t = TorusElement::new(parse_coweight_cli(coweight)?);
            Ok(json!({
                "schema": SCHEMA,
                "ambient": format!("{st}"),
                "order_adjoint": torus_element_order(&rs, &t),
                "order_simply_connected": torus_element_order_simply_connected(&rs, &t),
            }))
        }
        RootCmd::Levi {
            simple_type,
            subset,
            central_coweight,
        } => cmd_levi(simple_type, subset, central_coweight.as_deref()),
    }
}

fn parse_coweight_cli(s: &str) -> Result<Vec<num_rational::BigRational>, RunError> {
    Ok(s.split(',')
        .map(|x| cyclotomic::rational_from_str(x.trim()))
        .collect::<Result<_, _>>()?)
}

fn cmd_levi(
    simple_type: &str,
    subset: &str,
    central: Option<&str>,
) -> Result<Value, RunError> {
    let st = SimpleType::parse(simple_type)?;
    let rs = RootSystem::new(st)?;
    let y: Vec<usize> = subset
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| RunError::Usage(format!("bad index {x}")))
        })
        .collect::<Result<_, _>>()?;
    let datum = LeviDatum { subset: y };
    let rep = maxab_core::rootsys::levi_center(&rs, &datum)?;
    let mut out = json!({
        "schema": SCHEMA,
        "ambient": format!("{st}"),
        "levi_type": rep.type_string(),
        "center_dim": rep.center_dim,
    });
    if let Some(cw) = central {
        let v = TorusElement::new(parse_coweight_cli(cw)?);
        out["central_in_levi"] = Value::Bool(central_in_levi(&rs, &v, &datum)?);
    }
    Ok(out)
}

fn cmd_catalog(cmd: &CatalogCmd, caps: &Caps) -> Result<Value, RunError> {
    match cmd {
        CatalogCmd::List => {
            let entries: Vec<Value> = catalog::catalog_keys()
                .into_iter()
                .map(|(k, d)| json!({"key": k, "description": d}))
                .collect();
            Ok(json!({"schema": SCHEMA, "entries": entries}))
        }
        CatalogCmd::Build { key, params } => {
            let mut map = BTreeMap::new();
            for p in params {
                let (a, b) = p
                    .split_once('=')
                    .ok_or_else(|| RunError::Usage(format!("bad --param {p}")))?;
                map.insert(a.trim().to_string(), b.trim().to_string());
            }
            let entry = catalog::build(key, &map)?;
            let realization = match &entry.realization {
                catalog::Realization::Subgroup(f) => subgroup_to_json(f),
                catalog::Realization::Matrix(m) => {
                    serde_json::to_value(MatrixDto::from(m)).unwrap()
                }
                catalog::Realization::Spin(s) => {
                    let gens: Vec<String> =
                        s.generators.iter().map(|g| g.to_string()).collect();
                    json!({"n": s.n, "generators": gens,
                           "half_spin": s.center == maxab_core::spin::SpinCenter::HalfSpin})
                }
                catalog::Realization::Torus {
                    simple_type,
                    coweight,
                } => json!({
                    "ambient": format!("{simple_type}"),
                    "coweight": coweight.iter().map(cyclotomic::rational_to_string).collect::<Vec<_>>(),
                }),
            };
            let _ = caps;
            Ok(json!({
                "schema": SCHEMA,
                "key": entry.key,
                "description": entry.description,
                "disputed": entry.disputed,
                "realization": realization,
            }))
        }
    }
}

fn cmd_verify(suite: &str) -> Result<Value, RunError> {
    let results = verify::run_suite(suite)?;
    let mut all_pass = true;
    let mut lines = Vec::new();
    for r in &results {
        eprintln!("{}", r.line());
        all_pass &= r.pass;
        lines.push(json!({
            "id": r.id,
            "name": r.name,
            "pass": r.pass,
            "details": r.details,
        }));
    }
    if !all_pass {
        return Err(RunError::Math("one or more criteria failed".into()));
    }
    Ok(json!({"schema": SCHEMA, "suite": suite, "criteria": lines, "pass": all_pass}))
}
