//! Settings resolved from flags, `TWORIG_*` environment variables, a TOML
//! file, and built-in defaults, in that order of precedence. Clap handles
//! the first two; this module layers the file and the defaults underneath.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;
use two_rig_lab::{Error, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Json,
    Table,
}

#[derive(Args, Debug, Default)]
pub struct ConfigArgs {
    /// TOML file with default settings.
    #[arg(long, global = true, env = "TWORIG_CONFIG")]
    pub config: Option<PathBuf>,
    /// Largest degree kept by tensor products and plethysms.
    #[arg(long, global = true, env = "TWORIG_DEGREE_BOUND")]
    pub degree_bound: Option<usize>,
    /// Dimension of the vector space x is evaluated at.
    #[arg(long, global = true, env = "TWORIG_N")]
    pub n: Option<usize>,
    /// Largest ambient dimension n^(2m) for coend ranks.
    #[arg(long, global = true, env = "TWORIG_AMBIENT_BOUND")]
    pub ambient_bound: Option<usize>,
    /// Largest tensor space n^m for Young symmetrizers.
    #[arg(long, global = true, env = "TWORIG_SCHUR_BOUND")]
    pub schur_bound: Option<usize>,
    /// Directory for cached character tables, LR tables and Schur modules.
    #[arg(long, global = true, env = "TWORIG_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, env = "TWORIG_OUTPUT", value_enum)]
    pub output: Option<Output>,
    /// Seed for the sampled checks.
    #[arg(long, global = true, env = "TWORIG_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    degree_bound: Option<usize>,
    n: Option<usize>,
    ambient_bound: Option<usize>,
    schur_bound: Option<usize>,
    cache_dir: Option<PathBuf>,
    output: Option<Output>,
    seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub n: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub output: Output,
    pub seed: u64,
}

fn read_file(path: &Path) -> Result<FileConfig, Error> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text)
        .map_err(|e| Error::Parse(format!("config file {}: {e}", path.display())))
}

impl ConfigArgs {
    pub fn resolve(&self) -> Result<Config, Error> {
        let file = match &self.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let defaults = Limits::default();
        let limits = Limits {
            degree_bound: self.degree_bound.or(file.degree_bound).unwrap_or(defaults.degree_bound),
            coend_ambient: self.ambient_bound.or(file.ambient_bound).unwrap_or(defaults.coend_ambient),
            tensor_coords: self.schur_bound.or(file.schur_bound).unwrap_or(defaults.tensor_coords),
            ..defaults
        };
        for (name, v) in [
            ("degree_bound", limits.degree_bound),
            ("ambient_bound", limits.coend_ambient),
            ("schur_bound", limits.tensor_coords),
        ] {
            if v == 0 {
                return Err(Error::InvalidArgument(format!("{name} must be positive")));
            }
        }
        Ok(Config {
            limits,
            n: self.n.or(file.n),
            cache_dir: self.cache_dir.clone().or(file.cache_dir),
            output: self.output.or(file.output).unwrap_or(Output::Json),
            seed: self.seed.or(file.seed).unwrap_or(0),
        })
    }
}

impl Config {
    pub fn require_n(&self) -> Result<usize, Error> {
        match self.n {
            Some(n) if n > 0 => Ok(n),
            Some(_) => Err(Error::InvalidArgument("n must be positive".into())),
            None => Err(Error::InvalidArgument(
                "this command needs --n (or TWORIG_N, or n in the config file)".into(),
            )),
        }
    }
}
