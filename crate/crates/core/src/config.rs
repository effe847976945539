//! Run settings layered from defaults, a TOML file, `PRCLAB_*` environment
//! variables and command-line flags, later layers winning.
//!
//! | key | env | flag |
//! |-----|-----|------|
//! | `node_budget` | `PRCLAB_BUDGET_NODES` | `--budget-nodes` |
//! | `time_budget_secs` | `PRCLAB_BUDGET_SECS` | `--budget-secs` |
//! | `colour_cap` | `PRCLAB_COLOUR_CAP` | `--colour-cap` |
//! | `seed` | `PRCLAB_SEED` | `--seed` |
//! | `jobs` | `PRCLAB_JOBS` | `--jobs` |
//! | `determinism` | `PRCLAB_DETERMINISM` | `--determinism` |
//! | `rainbow_pruning` | `PRCLAB_RAINBOW_PRUNING` | `--rainbow-pruning` |
//!
//! The file is named by `--config`, else by `PRCLAB_CONFIG`.

use crate::error::{Error, Result};
use crate::random::DEFAULT_SEED;
use crate::solver::{Determinism, SearchConfig};
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// One layer of optional settings.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Layer {
    pub node_budget: Option<u64>,
    pub time_budget_secs: Option<f64>,
    pub colour_cap: Option<usize>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub determinism: Option<Determinism>,
    pub rainbow_pruning: Option<bool>,
}

impl Layer {
    pub fn from_toml(text: &str) -> Result<Layer> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Layer> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Reads the `PRCLAB_*` variables through `get`.
    pub fn from_env(get: impl Fn(&str) -> Option<String>) -> Result<Layer> {
        fn parse<T: FromStr>(
            get: &impl Fn(&str) -> Option<String>,
            key: &str,
        ) -> Result<Option<T>> {
            get(key)
                .map(|v| {
                    v.trim()
                        .parse::<T>()
                        .map_err(|_| Error::Config(format!("{key}: cannot parse `{v}`")))
                })
                .transpose()
        }
        let determinism = get("PRCLAB_DETERMINISM")
            .map(|v| parse_determinism(&v))
            .transpose()?;
        Ok(Layer {
            node_budget: parse(&get, "PRCLAB_BUDGET_NODES")?,
            time_budget_secs: parse(&get, "PRCLAB_BUDGET_SECS")?,
            colour_cap: parse(&get, "PRCLAB_COLOUR_CAP")?,
            seed: parse(&get, "PRCLAB_SEED")?,
            jobs: parse(&get, "PRCLAB_JOBS")?,
            determinism,
            rainbow_pruning: parse(&get, "PRCLAB_RAINBOW_PRUNING")?,
        })
    }

    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: &Layer) -> Layer {
        Layer {
            node_budget: over.node_budget.or(self.node_budget),
            time_budget_secs: over.time_budget_secs.or(self.time_budget_secs),
            colour_cap: over.colour_cap.or(self.colour_cap),
            seed: over.seed.or(self.seed),
            jobs: over.jobs.or(self.jobs),
            determinism: over.determinism.or(self.determinism),
            rainbow_pruning: over.rainbow_pruning.or(self.rainbow_pruning),
        }
    }
}

pub fn parse_determinism(s: &str) -> Result<Determinism> {
    match s.trim() {
        "sequential" | "sequential_canonical" => Ok(Determinism::SequentialCanonical),
        "parallel" | "parallel_value_only" => Ok(Determinism::ParallelValueOnly),
        other => Err(Error::Config(format!(
            "unknown determinism mode `{other}` (expected sequential or parallel)"
        ))),
    }
}

/// Fully resolved settings.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub search: SearchConfig,
    pub seed: u64,
    pub jobs: usize,
}

impl Settings {
    pub fn from_layer(layer: &Layer) -> Result<Settings> {
        let d = SearchConfig::default();
        let search = SearchConfig {
            node_budget: layer.node_budget.unwrap_or(d.node_budget),
            time_budget_secs: layer.time_budget_secs.unwrap_or(d.time_budget_secs),
            colour_cap: layer.colour_cap.unwrap_or(d.colour_cap),
            determinism: layer.determinism.unwrap_or(d.determinism),
            rainbow_pruning: layer.rainbow_pruning.unwrap_or(d.rainbow_pruning),
            ..d
        };
        search.validate()?;
        let jobs = layer.jobs.unwrap_or(0);
        Ok(Settings {
            search,
            seed: layer.seed.unwrap_or(DEFAULT_SEED),
            jobs: if jobs == 0 { default_jobs() } else { jobs },
        })
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Resolves file < environment < command line. `config_path` (from the
/// command line) takes precedence over `PRCLAB_CONFIG`.
pub fn resolve(
    cli: &Layer,
    config_path: Option<&Path>,
    env: impl Fn(&str) -> Option<String>,
) -> Result<Settings> {
    Settings::from_layer(&resolve_layer(cli, config_path, env)?)
}

/// The merged layer before defaults are filled in, for callers that need to
/// know whether a setting was given at all.
pub fn resolve_layer(
    cli: &Layer,
    config_path: Option<&Path>,
    env: impl Fn(&str) -> Option<String>,
) -> Result<Layer> {
    let path: Option<PathBuf> = config_path
        .map(Path::to_path_buf)
        .or_else(|| env("PRCLAB_CONFIG").map(PathBuf::from));
    let file = match path {
        Some(p) => Layer::from_file(&p)?,
        None => Layer::default(),
    };
    Ok(file.overlay(&Layer::from_env(&env)?).overlay(cli))
}
