use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use minuscule::chevalley::{build_chevalley, ChevalleyAlgebra, LieElement};
use minuscule::embeddings::{check_minuscule, highest_root_sl2, long_root_subalgebra, minuscule_sl3, so44, Cocharacter, Embedding};
use minuscule::gradings::{centralizer_decomposition, grade_by_center, grade_by_cocharacter};
use minuscule::root_system::{RootSystem, RootSystemType, DEFAULT_MAX_CLASSICAL_RANK};
use minuscule::sampling::DEFAULT_SEED;
use minuscule::tensors::{JordanContext, SymplecticContext};
use minuscule::verify::{run_suite, SampleCounts, Suite, VerifyOptions};
use minuscule::Error;

const SEED_ENV: &str = "MINUSCULE_SEED";

/// Split Lie algebras, minuscule embeddings, gradings and invariant tensors.
#[derive(Parser, Debug)]
#[command(name = "minuscule", version)]
struct Cli {
    /// Largest rank accepted for classical types.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLASSICAL_RANK)]
    max_rank: usize,
    /// Seed for sampled checks (default: $MINUSCULE_SEED, then a fixed value).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override every sample count.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Write the JSON payload to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, positive roots and highest root.
    RootSystem { ty: String },
    /// Chevalley basis labels and structure-constant summary.
    Build { ty: String },
    /// Construct an embedding and report its centralizer decomposition.
    Embed { kind: EmbedKind, ty: String },
    /// Grade by a cocharacter or by the center of an embedded subgroup.
    Grade {
        #[command(subcommand)]
        how: GradeCmd,
    },
    /// Evaluate an invariant tensor.
    Eval {
        #[command(subcommand)]
        what: EvalCmd,
    },
    /// Reproduce a group of claims.
    Verify { suite: SuiteArg },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EmbedKind {
    Sl2,
    Sl3,
    Longroot,
    So44,
}

#[derive(Subcommand, Debug)]
enum GradeCmd {
    /// 𝔤(m) = span of root spaces with ⟨μ, γ⟩ = m.
    Cochar {
        ty: String,
        /// Pairings ⟨μ, αᵢ⟩, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        mu: Vec<i64>,
    },
    /// Eigenspaces of the center of an embedded subgroup.
    Center {
        ty: String,
        #[arg(long, value_enum, default_value = "sl2")]
        embedding: EmbedKind,
    },
}

#[derive(Subcommand, Debug)]
enum EvalCmd {
    /// q(w) with (ad w)⁴F = q(w)E.
    Quartic {
        ty: String,
        /// Element as JSON `{label: "num/den"}` or `@file.json`.
        #[arg(long)]
        w: String,
    },
    /// ⟨w, w2⟩ with [w, w2] = ⟨w, w2⟩E.
    Symplectic {
        ty: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        w2: String,
    },
    /// t(x, y, z).
    Trilinear {
        ty: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
    /// Cubic norm f(x) of x ∈ 𝔤′(1).
    Cubic {
        ty: String,
        #[arg(long)]
        x: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Table1,
    Table2,
    Table3,
    Traces,
    Tensors,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Table1 => Suite::Table1,
            SuiteArg::Table2 => Suite::Table2,
            SuiteArg::Table3 => Suite::Table3,
            SuiteArg::Traces => Suite::Traces,
            SuiteArg::Tensors => Suite::Tensors,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(Value, bool), Failure>;

struct Ctx {
    max_rank: usize,
    seed: u64,
    samples: Option<usize>,
}

impl Ctx {
    fn parse_type(&self, s: &str) -> Result<RootSystemType, Error> {
        s.parse::<RootSystemType>()?.check_cap(self.max_rank)
    }

    fn algebra(&self, s: &str) -> Result<Arc<ChevalleyAlgebra>, Error> {
        let t = self.parse_type(s)?;
        Ok(Arc::new(build_chevalley(&RootSystem::build_capped(t, self.max_rank)?)))
    }
}

fn read_element(alg: &ChevalleyAlgebra, arg: &str) -> Result<LieElement, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("element JSON: {e}")))?;
    Ok(alg.element_from_json(&v)?)
}

fn embed(kind: EmbedKind, alg: &Arc<ChevalleyAlgebra>) -> Result<Embedding, Error> {
    match kind {
        EmbedKind::Sl2 => highest_root_sl2(alg),
        EmbedKind::Sl3 => minuscule_sl3(alg),
        EmbedKind::Longroot => long_root_subalgebra(alg),
        EmbedKind::So44 => so44(alg),
    }
}

fn run(cli: &Cli, ctx: &Ctx) -> Outcome {
    match &cli.command {
        Command::RootSystem { ty } => {
            let t = ctx.parse_type(ty)?;
            let rs = RootSystem::build_capped(t, ctx.max_rank)?;
            let pos: Vec<&Vec<i64>> = rs.positive_roots().iter().map(|r| &r.coords).collect();
            Ok((
                json!({
                    "type": t.to_string(),
                    "rank": rs.rank(),
                    "cartan": rs.cartan(),
                    "num_positive": rs.num_positive(),
                    "highest_root": rs.highest_root().coords,
                    "positive_roots": pos,
                }),
                true,
            ))
        }
        Command::Build { ty } => {
            let alg = ctx.algebra(ty)?;
            let mut nonzero = 0usize;
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    if !alg.bracket_basis(i, j).is_zero() {
                        nonzero += 1;
                    }
                }
            }
            Ok((
                json!({
                    "type": alg.root_type().to_string(),
                    "dim": alg.dim(),
                    "labels": alg.labels(),
                    "nonzero_brackets": nonzero,
                }),
                true,
            ))
        }
        Command::Embed { kind, ty } => {
            let alg = ctx.algebra(ty)?;
            let emb = embed(*kind, &alg)?;
            let iso = centralizer_decomposition(&emb)?;
            let minuscule = check_minuscule(&emb)?;
            Ok((
                json!({
                    "embedding": emb.to_json(),
                    "decomposition": iso,
                    "identity": iso.identity_holds(),
                    "minuscule": minuscule.minuscule,
                    "witness": minuscule.witness,
                }),
                iso.identity_holds() && minuscule.minuscule,
            ))
        }
        Command::Grade { how } => {
            let (alg, grading) = match how {
                GradeCmd::Cochar { ty, mu } => {
                    let alg = ctx.algebra(ty)?;
                    let g = grade_by_cocharacter(&alg, &Cocharacter::new(mu.clone()))?;
                    (alg, g)
                }
                GradeCmd::Center { ty, embedding } => {
                    let alg = ctx.algebra(ty)?;
                    let g = grade_by_center(&embed(*embedding, &alg)?)?;
                    (alg, g)
                }
            };
            let multiplicative = grading.is_multiplicative(&alg)?;
            let mut v = grading.to_json();
            v["multiplicative"] = json!(multiplicative);
            Ok((v, multiplicative))
        }
        Command::Eval { what } => match what {
            EvalCmd::Quartic { ty, w } => {
                let alg = ctx.algebra(ty)?;
                let sc = SymplecticContext::new(&alg)?;
                let q = sc.quartic_eval(&read_element(&alg, w)?)?;
                Ok((json!({ "q": q.to_string() }), true))
            }
            EvalCmd::Symplectic { ty, w, w2 } => {
                let alg = ctx.algebra(ty)?;
                let sc = SymplecticContext::new(&alg)?;
                let v = sc.symplectic_form(&read_element(&alg, w)?, &read_element(&alg, w2)?)?;
                Ok((json!({ "form": v.to_string() }), true))
            }
            EvalCmd::Trilinear { ty, x, y, z } => {
                let alg = ctx.algebra(ty)?;
                let sc = SymplecticContext::new(&alg)?;
                let t = sc.trilinear_t(&read_element(&alg, x)?, &read_element(&alg, y)?, &read_element(&alg, z)?)?;
                Ok((json!({ "t": alg.element_to_json(&t) }), true))
            }
            EvalCmd::Cubic { ty, x } => {
                let alg = ctx.algebra(ty)?;
                let jc = JordanContext::new(&alg, ctx.seed)?;
                let f = jc.cubic_norm(&read_element(&alg, x)?)?;
                Ok((json!({ "f": f.to_string(), "seed": ctx.seed }), true))
            }
        },
        Command::Verify { suite } => {
            let opts = VerifyOptions {
                max_rank: ctx.max_rank,
                seed: ctx.seed,
                samples: ctx.samples.map(SampleCounts::uniform).unwrap_or_default(),
                ..VerifyOptions::default()
            };
            let reports = run_suite((*suite).into(), &opts);
            let all = reports.iter().all(|r| r.passed());
            Ok((serde_json::to_value(&reports).expect("reports serialize"), all))
        }
    }
}

fn error_json(e: &Error) -> (Value, u8) {
    match e {
        Error::UnknownType(input) => (json!({ "error": "unknown type", "input": input }), 2),
        Error::Usage(m) => (json!({ "error": "usage", "message": m }), 2),
        Error::Parse(m) => (json!({ "error": "parse", "message": m }), 2),
        Error::Structural(m) => (json!({ "error": "structural", "message": m }), 1),
    }
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), String> {
    // Object keys are kept sorted, which makes the output canonical.
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            println!("{}", json!({ "error": "usage", "message": e.to_string().trim_end() }));
            return ExitCode::from(2);
        }
    };
    let seed = match (cli.seed, std::env::var(SEED_ENV)) {
        (Some(s), _) => s,
        (None, Ok(v)) => match v.trim().parse() {
            Ok(s) => s,
            Err(_) => {
                println!("{}", json!({ "error": "usage", "message": format!("{SEED_ENV} is not an integer: {v:?}") }));
                return ExitCode::from(2);
            }
        },
        (None, Err(_)) => DEFAULT_SEED,
    };
    let ctx = Ctx { max_rank: cli.max_rank, seed, samples: cli.samples };
    let (value, code) = match run(&cli, &ctx) {
        Ok((v, ok)) => (v, if ok { 0 } else { 1 }),
        Err(Failure::Lib(e)) => error_json(&e),
        Err(Failure::Io(m)) => (json!({ "error": "io", "message": m }), 2),
    };
    if let Err(m) = emit(&value, cli.out.as_ref()) {
        println!("{}", json!({ "error": "io", "message": m }));
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
