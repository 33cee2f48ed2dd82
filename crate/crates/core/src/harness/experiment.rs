use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolean::{is_bent, GowersValue, TruthTable};
use crate::ga::{run_ga, GaConfig, GenerationStats};
use crate::rng::{derive_seed, Role};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Emit {
    pub csv: bool,
    pub json: bool,
    pub tt: bool,
}

impl Default for Emit {
    fn default() -> Self {
        Self {
            csv: true,
            json: true,
            tt: true,
        }
    }
}

/// Everything needed to reproduce an experiment. `ga.seed` is the master
/// seed; repetition `r` runs with [`repetition_seed`]`(ga.seed, r)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub ga: GaConfig,
    pub repetitions: usize,
    pub emit: Emit,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        self.ga.validate()?;
        if self.repetitions < 1 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        Ok(())
    }
}

pub fn repetition_seed(master: u64, repetition: usize) -> u64 {
    derive_seed(master, Role::Repetition, 0, repetition as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub repetition: usize,
    pub seed: u64,
    /// Search-evaluator fitness of the last generation.
    pub final_best_fitness: f64,
    pub final_avg_fitness: f64,
    /// Exact norm of the all-time best individual.
    pub best_norm: f64,
    pub best_u4: f64,
    pub best_generation: usize,
    pub best_tt: TruthTable,
    /// `None` for odd `n`.
    pub is_bent: Option<bool>,
    pub gap_to_threshold: f64,
    pub wall_clock_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    /// `2^{-n/4}`, the norm of a bent function.
    pub threshold: f64,
    pub threshold_u4: f64,
    pub runs: Vec<RunSummary>,
    /// Index into `runs` of the lowest `best_norm`.
    pub overall_best_run: usize,
    pub wall_clock_seconds: f64,
}

/// `generation,best_fitness,avg_fitness`, one row per generation.
pub fn write_generations_csv(path: &Path, history: &[GenerationStats]) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "generation,best_fitness,avg_fitness")?;
    for s in history {
        writeln!(
            w,
            "{},{:.15},{:.15}",
            s.generation, s.best_fitness, s.avg_fitness
        )?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a `generations.csv` back into `(generation, best, avg)` rows.
pub fn read_generations_csv(path: &Path) -> Result<Vec<(usize, f64, f64)>> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    if lines.next() != Some("generation,best_fitness,avg_fitness") {
        return Err(Error::Parse(format!(
            "{}: unexpected header",
            path.display()
        )));
    }
    lines
        .map(|line| {
            let bad = || Error::Parse(format!("{}: bad row {line:?}", path.display()));
            let mut it = line.split(',');
            let g = it.next().and_then(|v| v.parse().ok()).ok_or_else(bad)?;
            let b = it.next().and_then(|v| v.parse().ok()).ok_or_else(bad)?;
            let a = it.next().and_then(|v| v.parse().ok()).ok_or_else(bad)?;
            Ok((g, b, a))
        })
        .collect()
}

fn run_dir(out: &Path, r: usize) -> PathBuf {
    out.join(format!("run_{r}"))
}

/// Runs every repetition (concurrently) and writes the requested files.
pub fn run_experiment(config: &ExperimentConfig, out: &Path) -> Result<ExperimentSummary> {
    config.validate()?;
    fs::create_dir_all(out)?;
    let n = config.ga.n;
    let floor = GowersValue::bent_floor(n);
    let start = Instant::now();

    let runs: Vec<RunSummary> = (0..config.repetitions)
        .into_par_iter()
        .map(|r| -> Result<RunSummary> {
            let t0 = Instant::now();
            let seed = repetition_seed(config.ga.seed, r);
            let ga = GaConfig {
                seed,
                ..config.ga.clone()
            };
            let outcome = run_ga(&ga)?;
            let dir = run_dir(out, r);
            if config.emit.csv || config.emit.tt {
                fs::create_dir_all(&dir)?;
            }
            if config.emit.csv {
                write_generations_csv(&dir.join("generations.csv"), &outcome.history)?;
            }
            if config.emit.tt {
                fs::write(dir.join("best.tt"), format!("{}\n", outcome.best))?;
            }
            let last = outcome.history.last().expect("generations >= 1");
            Ok(RunSummary {
                repetition: r,
                seed,
                final_best_fitness: last.best_fitness,
                final_avg_fitness: last.avg_fitness,
                best_norm: outcome.best_exact.norm,
                best_u4: outcome.best_exact.u4,
                best_generation: outcome.best_generation,
                is_bent: is_bent(&outcome.best).ok(),
                gap_to_threshold: outcome.best_exact.norm - floor.norm,
                best_tt: outcome.best,
                wall_clock_seconds: t0.elapsed().as_secs_f64(),
            })
        })
        .collect::<Result<_>>()?;

    let overall_best_run = runs
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| a.best_norm.total_cmp(&b.best_norm).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("repetitions >= 1");

    let summary = ExperimentSummary {
        config: config.clone(),
        threshold: floor.norm,
        threshold_u4: floor.u4,
        runs,
        overall_best_run,
        wall_clock_seconds: start.elapsed().as_secs_f64(),
    };
    if config.emit.json {
        let mut w = BufWriter::new(fs::File::create(out.join("summary.json"))?);
        serde_json::to_writer_pretty(&mut w, &summary)?;
        writeln!(w)?;
        w.flush()?;
    }
    Ok(summary)
}
