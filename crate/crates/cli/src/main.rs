mod config;
mod object;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use two_rig_lab::bialgebra::{self, DeltaRule, PolyMatrix, RNG_NAME};
use two_rig_lab::rig::{self, RigObject, TwoIdeal};
use two_rig_lab::schur_eval::{self, SchurModule};
use two_rig_lab::verify::{self, VerifyConfig};
use two_rig_lab::{coend, Error, Partition, Result};

use config::{Config, ConfigArgs, Output};
use object::parse_object;

#[derive(Parser, Debug)]
#[command(name = "two-rig-lab", version, about = "Exact computations in the free 2-rig on one generator")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tensor product of two objects, truncated at the degree bound.
    Tensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// k-th exterior power of an object.
    Lambda {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        object: String,
        /// Report the dimension after evaluating at k^n instead of the object.
        #[arg(long)]
        eval: bool,
    },
    /// k-th symmetric power of an object.
    Sym {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        object: String,
        #[arg(long)]
        eval: bool,
    },
    /// Dimension of Hom(source, target), optionally modulo a 2-ideal.
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Generators of the 2-ideal to quotient by.
        #[arg(long)]
        modulo: Option<String>,
    },
    /// Members of the 2-ideal generated by an object, up to the degree bound.
    Ideal {
        #[arg(long)]
        generators: String,
        /// Only test membership of this partition.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Image of an object in the quotient by a 2-ideal.
    Quotient {
        #[arg(long)]
        object: String,
        #[arg(long)]
        generators: String,
    },
    /// Dimension of an object evaluated at k^n.
    Eval {
        #[arg(long)]
        object: String,
    },
    /// Coaction matrix of the Schur module S^λ(k^n).
    Coaction {
        #[arg(long)]
        partition: String,
    },
    /// Sampled bialgebra axioms for the coordinate ring of n x n matrices.
    BialgCheck {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Use a deliberately broken comultiplication.
        #[arg(long)]
        corrupt: bool,
    },
    /// Comodule axioms for a polynomial matrix.
    ComoduleCheck {
        /// JSON file holding the matrix, or `-` for stdin.
        #[arg(long, conflicts_with = "partition", required_unless_present = "partition")]
        input: Option<PathBuf>,
        /// Check the coaction of S^λ(k^n) instead.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Degree-m part of the coend of the evaluation functor.
    Coend {
        #[arg(long)]
        m: usize,
        /// Check the isomorphism with the degree-m symmetric power.
        #[arg(long, conflicts_with = "times")]
        iso: bool,
        /// Check products and coproducts against degree `times`.
        #[arg(long, value_name = "M2")]
        times: Option<usize>,
    },
    /// Both sides of the RSK count of degree-m monomials in n² variables.
    Rsk {
        #[arg(long)]
        m: usize,
    },
    /// Image of k[S_m] in End((k^n)^⊗m) against the quotient hom count.
    SchurWeyl {
        #[arg(long)]
        m: usize,
    },
    /// Run every acceptance check.
    VerifyAll,
}

fn parse_partition(text: &str) -> Result<Partition> {
    serde_json::from_str(text.trim()).map_err(|e| Error::InvalidPartition(format!("{text:?}: {e}")))
}

fn ideal(generators: &str, config: &Config) -> Result<TwoIdeal> {
    let bound = config.limits.degree_bound;
    TwoIdeal::generated_by(&parse_object(generators, bound)?, bound)
}

fn dim_or_object(obj: RigObject, eval: bool, config: &Config) -> Result<Value> {
    if eval {
        Ok(json!({"dim": schur_eval::phi_n_object(&obj, config.require_n()?)}))
    } else {
        Ok(json!({"object": obj}))
    }
}

fn read_matrix(path: &PathBuf) -> Result<PolyMatrix> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("polynomial matrix: {e}")))
}

fn run(command: &Command, config: &Config) -> Result<Value> {
    let bound = config.limits.degree_bound;
    let limits = &config.limits;
    let value = match command {
        Command::Tensor { left, right } => {
            let t = rig::tensor(&parse_object(left, bound)?, &parse_object(right, bound)?, bound)?;
            json!({"object": t.value, "truncated": t.truncated})
        }
        Command::Lambda { k, object, eval } => {
            let obj = rig::lambda_power(&parse_object(object, bound)?, *k, bound)?;
            dim_or_object(obj, *eval, config)?
        }
        Command::Sym { k, object, eval } => {
            let obj = rig::sym_power(&parse_object(object, bound)?, *k, bound)?;
            dim_or_object(obj, *eval, config)?
        }
        Command::Hom { source, target, modulo } => {
            let (a, b) = (parse_object(source, bound)?, parse_object(target, bound)?);
            let dim = match modulo {
                Some(g) => rig::quotient_hom_dim(&a, &b, &ideal(g, config)?)?,
                None => rig::hom_dim(&a, &b),
            };
            json!({"dim": dim})
        }
        Command::Ideal { generators, partition } => {
            let i = ideal(generators, config)?;
            match partition {
                Some(p) => {
                    let p = parse_partition(p)?;
                    json!({"partition": p, "member": i.contains(&p)?})
                }
                None => json!({
                    "generators": i.generators(),
                    "degree_bound": i.degree_bound(),
                    "members": i.members(),
                }),
            }
        }
        Command::Quotient { object, generators } => {
            let q = rig::quotient_object(&parse_object(object, bound)?, &ideal(generators, config)?)?;
            json!({"object": q})
        }
        Command::Eval { object } => {
            json!({"dim": schur_eval::phi_n_object(&parse_object(object, bound)?, config.require_n()?)})
        }
        Command::Coaction { partition } => {
            let m = SchurModule::new(&parse_partition(partition)?, config.require_n()?, limits)?;
            serde_json::to_value(m.coaction()?)?
        }
        Command::BialgCheck { degree, corrupt } => {
            let n = config.require_n()?;
            let report = if *corrupt {
                bialgebra::check_bialgebra_with(&DeltaRule::corrupted(n)?, *degree, config.seed)?
            } else {
                bialgebra::check_bialgebra(n, *degree, config.seed)?
            };
            serde_json::to_value(report)?
        }
        Command::ComoduleCheck { input, partition } => {
            let p = match (input, partition) {
                (Some(path), _) => read_matrix(path)?,
                (None, Some(l)) => {
                    SchurModule::new(&parse_partition(l)?, config.require_n()?, limits)?.coaction()?
                }
                (None, None) => unreachable!("clap requires one of --input, --partition"),
            };
            serde_json::to_value(bialgebra::check_comodule(&p)?)?
        }
        Command::Coend { m, iso, times } => {
            let n = config.require_n()?;
            match (iso, times) {
                (true, _) => serde_json::to_value(coend::coend_to_sym_iso(*m, n, limits)?)?,
                (false, Some(m2)) => {
                    serde_json::to_value(coend::coend_comultiplication_check(*m, *m2, n, limits)?)?
                }
                (false, None) => serde_json::to_value(coend::coend_degree(*m, n, limits)?)?,
            }
        }
        Command::Rsk { m } => serde_json::to_value(coend::rsk_identity(*m, config.require_n()?))?,
        Command::SchurWeyl { m } => {
            let n = config.require_n()?;
            let image_dim = schur_eval::schur_weyl_image_dim(*m, n, limits)?;
            let formula = schur_eval::schur_weyl_formula(*m, n);
            let ideal_bound = bound.max(n + 1);
            let x_m = RigObject::tensor_power_of_generator(*m, bound)?;
            let quotient = rig::quotient_hom_dim(&x_m, &x_m, &rig::subdimension_ideal(n, ideal_bound)?)?;
            json!({
                "m": m,
                "n": n,
                "image_dim": image_dim,
                "formula": formula,
                "quotient_hom_dim": quotient,
                "match": image_dim as u64 == formula && formula == quotient,
            })
        }
        Command::VerifyAll => {
            let reports = verify::run_all(&VerifyConfig { seed: config.seed, limits: *limits })?;
            json!({
                "seed": config.seed,
                "rng": RNG_NAME,
                "passed": reports.iter().all(|r| r.passed),
                "checks": reports,
            })
        }
    };
    Ok(value)
}

fn failed(value: &Value) -> bool {
    ["passed", "match", "equal"]
        .iter()
        .any(|k| value.get(k) == Some(&Value::Bool(false)))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceBound { .. } | Error::DegreeOverflow { .. } | Error::OutOfRange { .. } => 3,
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn verify_table(value: &Value) -> String {
    let mut lines: Vec<String> = value["checks"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|c| {
            let status = if c["passed"] == Value::Bool(true) { "PASS" } else { "FAIL" };
            format!("{status} {}", c["name"].as_str().unwrap_or_default())
        })
        .collect();
    lines.push(format!("seed {} ({})", value["seed"], RNG_NAME));
    lines.join("\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            eprintln!("{}", error_json("usage", first));
            return ExitCode::from(2);
        }
    };
    let result = cli.config.resolve().and_then(|config| {
        two_rig_lab::cache::set_cache_dir(config.cache_dir.clone());
        run(&cli.command, &config).map(|v| (v, config.output))
    });
    match result {
        Ok((value, output)) => {
            let text = match (&cli.command, output) {
                (Command::VerifyAll, Output::Table) => verify_table(&value),
                _ => render::render(&value, output),
            };
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{text}").is_err() {
                return ExitCode::from(2);
            }
            if failed(&value) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(exit_code(&e))
        }
    }
}
