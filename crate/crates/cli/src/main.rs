//! `barhom`: verification sweeps, cohomology and homotopy evaluation from the
//! command line.
//!
//! Exit status: 0 when every check passes or the computation succeeds, 1 on a
//! verification failure, 2 on a usage or validation error.

use std::fmt;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use barhom::cochain::{homotopy_action, homotopy_action_by_pairing, homotopy_cup, homotopy_cup_by_pairing, Variant};
use barhom::group::{build_group, Group, GroupSpec};
use barhom::homotopies::SignConvention;
use barhom::io::{cochain_from_json, cochain_to_json};
use barhom::lab::cohomology::{cohomology_group, DEFAULT_SIZE_LIMIT};
use barhom::lab::verify::{
    envelope, verify_action_identity, verify_cup_identity, verify_oracle, verify_resolution, Path,
    VerificationReport,
};
use barhom::module::{build_gmodule, tensor_modules, GModule, ModuleSpec};
use barhom::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "barhom", version, about = "Explicit cohomology homotopies over the bar resolution")]
struct Cli {
    /// Worker threads for verification sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Write the JSON result here.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Basis-size guard: |G|^(n+1)·rank may not exceed this.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_LIMIT)]
    size_limit: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exhaustive identity sweeps.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Closed-form homotopies against the inductive construction.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Invariant factors of H^n(G, M).
    Cohomology(CohomologyArgs),
    /// Apply a homotopy to cochains read from files.
    #[command(subcommand)]
    Eval(EvalCommand),
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// s·a − a = (h_s d + d h_s)(a) on every basis cochain.
    Action(ActionArgs),
    /// (−1)^pq t_*(b∪a) − a∪b = (hd + dh)(a⊗b) on every basis pair.
    Cup(CupArgs),
    /// Chain-level identities of the resolution and its homotopies.
    Resolution(ResolutionArgs),
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    Compare(OracleArgs),
}

#[derive(Subcommand, Debug)]
enum EvalCommand {
    /// h_s(a) for a cochain a and a group element s.
    Hs(HsArgs),
    /// h(a⊗b) for cochains a and b.
    Hcup(HcupArgs),
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Builtin spec such as cyclic:4, symmetric:3, cyclic:2xcyclic:2, or a JSON file.
    #[arg(long)]
    group: String,
}

#[derive(Args, Debug)]
struct ActionArgs {
    #[command(flatten)]
    group: GroupArg,
    /// trivial-int, trivial-mod:m, sign, regular, or a JSON file.
    #[arg(long)]
    module: String,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, default_value = "main")]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = PathArg::Formula)]
    path: PathArg,
}

#[derive(Args, Debug)]
struct CupArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Coefficients of the left factor.
    #[arg(long)]
    module: String,
    /// Coefficients of the right factor; defaults to --module.
    #[arg(long)]
    module_right: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_total: usize,
    #[arg(long, default_value = "main")]
    variant: Variant,
    #[arg(long, default_value = "ascending")]
    sign_convention: SignConvention,
    #[arg(long, value_enum, default_value_t = PathArg::Formula)]
    path: PathArg,
}

#[derive(Args, Debug)]
struct ResolutionArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, default_value = "ascending")]
    sign_convention: SignConvention,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long)]
    module: String,
    #[arg(long)]
    degree: usize,
}

#[derive(Args, Debug)]
struct HsArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Must agree with the module named in the cochain file when given.
    #[arg(long)]
    module: Option<String>,
    /// Group element, by name or index.
    #[arg(long)]
    s: String,
    #[arg(long)]
    cochain: PathBuf,
    #[arg(long, default_value = "main")]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = PathArg::Formula)]
    path: PathArg,
}

#[derive(Args, Debug)]
struct HcupArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
    #[arg(long, default_value = "main")]
    variant: Variant,
    #[arg(long, default_value = "ascending")]
    sign_convention: SignConvention,
    #[arg(long, value_enum, default_value_t = PathArg::Formula)]
    path: PathArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PathArg {
    /// Inhomogeneous closed formulas.
    Formula,
    /// Dualised chain maps paired against the resolution.
    Pairing,
}

impl From<PathArg> for Path {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Formula => Path::Formula,
            PathArg::Pairing => Path::Pairing,
        }
    }
}

/// A validation error tied to the flag or file field that caused it.
#[derive(Debug)]
struct Invalid {
    field: String,
    message: String,
}

impl Invalid {
    fn new(field: impl Into<String>, message: impl fmt::Display) -> Self {
        Invalid {
            field: field.into(),
            message: message.to_string(),
        }
    }

    /// Attributes a library error to `field`, keeping any inner field path.
    fn from_core(field: &str, e: Error) -> Self {
        match e {
            Error::Field { field: inner, message } => Invalid::new(format!("{field}: {inner}"), message),
            other => Invalid::new(field, other),
        }
    }
}

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

enum Outcome {
    Reports(Vec<VerificationReport>),
    Computed { summary: String, json: Value },
}

fn read_json(path: &FsPath, field: &str) -> Result<Value, Invalid> {
    let text = fs::read_to_string(path).map_err(|e| Invalid::new(field, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Invalid::new(field, format!("{}: {e}", path.display())))
}

fn is_file_arg(s: &str) -> bool {
    s.ends_with(".json") || FsPath::new(s).is_file()
}

fn load_group(s: &str) -> Result<Arc<Group>, Invalid> {
    let spec = if is_file_arg(s) {
        GroupSpec::from_json(&read_json(FsPath::new(s), "--group")?)
    } else {
        s.parse::<GroupSpec>()
    }
    .map_err(|e| Invalid::from_core("--group", e))?;
    build_group(&spec)
        .map(Arc::new)
        .map_err(|e| Invalid::from_core("--group", e))
}

fn module_spec(flag: &str, s: &str) -> Result<ModuleSpec, Invalid> {
    if is_file_arg(s) {
        ModuleSpec::from_json(&read_json(FsPath::new(s), flag)?)
    } else {
        s.parse::<ModuleSpec>()
    }
    .map_err(|e| Invalid::from_core(flag, e))
}

fn load_module(flag: &str, s: &str, g: &Arc<Group>) -> Result<Arc<GModule>, Invalid> {
    build_gmodule(&module_spec(flag, s)?, g).map_err(|e| Invalid::from_core(flag, e))
}

fn check_size(flag: &str, order: usize, degree: usize, rank: usize, limit: u128) -> Result<(), Invalid> {
    let basis = (order as u128)
        .checked_pow(degree as u32 + 1)
        .and_then(|b| b.checked_mul(rank as u128));
    match basis {
        Some(b) if b <= limit => Ok(()),
        _ => Err(Invalid::new(
            flag,
            format!(
                "{order}^{} x {rank} basis elements exceed the size limit {limit} (see --size-limit)",
                degree + 1
            ),
        )),
    }
}

fn convention_notice(conv: SignConvention) {
    if conv != SignConvention::Ascending {
        println!(
            "notice: sign convention {} is not the validated default (ascending); identities are expected to fail",
            conv.name()
        );
    }
}

fn run(cli: &Cli) -> Result<Outcome, Invalid> {
    let limit = cli.size_limit;
    match &cli.command {
        Command::Verify(VerifyCommand::Action(a)) => {
            let g = load_group(&a.group.group)?;
            let m = load_module("--module", &a.module, &g)?;
            check_size("--max-degree", g.order(), a.max_degree, m.rank(), limit)?;
            Ok(Outcome::Reports(vec![verify_action_identity(
                &m,
                a.max_degree,
                a.variant,
                a.path.into(),
            )]))
        }
        Command::Verify(VerifyCommand::Cup(a)) => {
            convention_notice(a.sign_convention);
            let g = load_group(&a.group.group)?;
            let m = load_module("--module", &a.module, &g)?;
            let n = match &a.module_right {
                Some(s) => load_module("--module-right", s, &g)?,
                None => Arc::clone(&m),
            };
            let t = tensor_modules(&m, &n).map_err(|e| Invalid::from_core("--module-right", e))?;
            check_size("--max-total", g.order(), a.max_total, t.rank(), limit)?;
            Ok(Outcome::Reports(vec![verify_cup_identity(
                &m,
                &n,
                a.max_total,
                a.variant,
                a.sign_convention,
                a.path.into(),
            )]))
        }
        Command::Verify(VerifyCommand::Resolution(a)) => {
            convention_notice(a.sign_convention);
            let g = load_group(&a.group.group)?;
            check_size("--max-degree", g.order(), a.max_degree + 1, 1, limit)?;
            Ok(Outcome::Reports(verify_resolution(&g, a.max_degree, a.sign_convention)))
        }
        Command::Oracle(OracleCommand::Compare(a)) => {
            let g = load_group(&a.group.group)?;
            check_size("--max-degree", g.order(), a.max_degree + 1, 1, limit)?;
            Ok(Outcome::Reports(verify_oracle(&g, a.max_degree)))
        }
        Command::Cohomology(a) => {
            let g = load_group(&a.group.group)?;
            let m = load_module("--module", &a.module, &g)?;
            let h = cohomology_group(&m, a.degree, limit).map_err(|e| Invalid::from_core("--degree", e))?;
            Ok(Outcome::Computed {
                summary: h.to_string(),
                json: json!({
                    "group": g.label(),
                    "module": m.label(),
                    "degree": a.degree,
                    "free_rank": h.free_rank,
                    "torsion": h.torsion,
                    "display": h.to_string(),
                }),
            })
        }
        Command::Eval(EvalCommand::Hs(a)) => {
            let g = load_group(&a.group.group)?;
            let s = g.parse_element(&a.s).map_err(|e| Invalid::from_core("--s", e))?;
            let (spec, c) = cochain_from_json(&read_json(&a.cochain, "--cochain")?, &g)
                .map_err(|e| Invalid::from_core("--cochain", e))?;
            if let Some(flag) = &a.module {
                if module_spec("--module", flag)? != spec {
                    return Err(Invalid::new(
                        "--module",
                        format!("{flag} does not match the cochain file's module {}", spec.label()),
                    ));
                }
            }
            let out = match a.path {
                PathArg::Formula => homotopy_action(s, &c, a.variant),
                PathArg::Pairing => homotopy_action_by_pairing(s, &c, a.variant),
            }
            .map_err(|e| Invalid::from_core("--cochain: degree", e))?;
            let json = cochain_to_json(&out, &spec);
            Ok(Outcome::Computed {
                summary: serde_json::to_string_pretty(&json).expect("serializable"),
                json,
            })
        }
        Command::Eval(EvalCommand::Hcup(a)) => {
            convention_notice(a.sign_convention);
            let g = load_group(&a.group.group)?;
            let (ls, l) = cochain_from_json(&read_json(&a.left, "--left")?, &g)
                .map_err(|e| Invalid::from_core("--left", e))?;
            let (rs, r) = cochain_from_json(&read_json(&a.right, "--right")?, &g)
                .map_err(|e| Invalid::from_core("--right", e))?;
            let out = match a.path {
                PathArg::Formula => homotopy_cup(&l, &r, a.variant, a.sign_convention),
                PathArg::Pairing => homotopy_cup_by_pairing(&l, &r, a.variant, a.sign_convention),
            }
            .map_err(|e| Invalid::from_core("--right", e))?;
            let json = cochain_to_json(&out, &ModuleSpec::Tensor(Box::new(ls), Box::new(rs)));
            Ok(Outcome::Computed {
                summary: serde_json::to_string_pretty(&json).expect("serializable"),
                json,
            })
        }
    }
}

fn write_output(path: &FsPath, v: &Value) -> Result<(), Invalid> {
    let mut text = serde_json::to_string_pretty(v).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| Invalid::new("--output", format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    };
    let result = pool.install(|| run(&cli)).and_then(|outcome| {
        let (code, json) = match outcome {
            Outcome::Reports(reports) => {
                for r in &reports {
                    println!("{r}");
                }
                let pass = reports.iter().all(|r| r.pass);
                let attempted: u64 = reports.iter().map(|r| r.attempted).sum();
                let passed: u64 = reports.iter().map(|r| r.passed).sum();
                println!("{}: {passed}/{attempted} checks passed", if pass { "PASS" } else { "FAIL" });
                (if pass { 0 } else { 1 }, envelope(&reports))
            }
            Outcome::Computed { summary, json } => {
                println!("{summary}");
                (0, json!({"schema": "barhom.result/1", "pass": true, "result": json}))
            }
        };
        if let Some(path) = &cli.output {
            write_output(path, &json)?;
        }
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
