use rayon::prelude::*;
use serde::Serialize;

use super::operators::{apply_elitism, crossover_single_point, mutate_bitflip, tournament_select};
use super::{Evaluator, GaConfig};
use crate::boolean::{GowersValue, TruthTable};
use crate::quantum::GowersEstimate;
use crate::rng::{derive_seed, stream, Role};
use crate::Result;

/// Population summary for one generation. Fitness is the U2 `norm`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationStats {
    /// 1-based.
    pub generation: usize,
    pub best_fitness: f64,
    pub avg_fitness: f64,
    pub best_individual: TruthTable,
}

#[derive(Clone, Debug)]
pub struct GaOutcome {
    /// Lowest exact norm among the per-generation winners.
    pub best: TruthTable,
    /// Exact classical score of `best`, whatever evaluator drove the search.
    pub best_exact: GowersValue,
    /// Generation at which `best` was first recorded.
    pub best_generation: usize,
    pub history: Vec<GenerationStats>,
}

fn evaluate_all(
    eval: &Evaluator,
    pop: &[TruthTable],
    master: u64,
    generation: usize,
) -> Result<Vec<GowersEstimate>> {
    pop.par_iter()
        .enumerate()
        .map(|(i, f)| {
            eval.evaluate(
                f,
                derive_seed(master, Role::Evaluation, generation as u64, i as u64),
            )
        })
        .collect()
}

fn argmin(fit: &[f64]) -> usize {
    fit.iter()
        .enumerate()
        .min_by(|(i, x), (j, y)| x.total_cmp(y).then(i.cmp(j)))
        .map(|(i, _)| i)
        .expect("non-empty population")
}

/// Runs exactly `config.generations` generations.
///
/// Randomness is drawn from per-generation, per-role substreams of
/// `config.seed`, so the result is bitwise reproducible and independent of
/// how evaluations are scheduled across threads.
pub fn run_ga(config: &GaConfig) -> Result<GaOutcome> {
    config.validate()?;
    let eval = Evaluator::new(config.evaluator, config.shots);
    let classical = Evaluator::classical();
    let master = config.seed;
    let p = config.population;

    let mut pop: Vec<TruthTable> = (0..p)
        .map(|i| TruthTable::random(config.n, &mut stream(master, Role::Init, 0, i as u64)))
        .collect::<Result<_>>()?;
    let mut fit: Vec<f64> = evaluate_all(&eval, &pop, master, 1)?
        .iter()
        .map(|e| e.norm)
        .collect();

    let mut history = Vec::with_capacity(config.generations);
    let mut best: Option<(TruthTable, GowersValue, usize)> = None;

    for g in 1..=config.generations {
        let elite_idx = argmin(&fit);
        let elite = pop[elite_idx].clone();
        history.push(GenerationStats {
            generation: g,
            best_fitness: fit[elite_idx],
            avg_fitness: fit.iter().sum::<f64>() / p as f64,
            best_individual: elite.clone(),
        });

        let exact =
            crate::boolean::gowers_u2_from_spectrum(&crate::boolean::walsh_hadamard(&elite))?;
        if best.as_ref().is_none_or(|(_, v, _)| exact.norm < v.norm) {
            best = Some((elite.clone(), exact, g));
        }

        if g == config.generations {
            break;
        }

        let gen = g as u64;
        let mut sel = stream(master, Role::Selection, gen, 0);
        let mut cx = stream(master, Role::Crossover, gen, 0);
        let mut mu = stream(master, Role::Mutation, gen, 0);
        let mut offspring = Vec::with_capacity(p + 1);
        while offspring.len() < p {
            let i = tournament_select(&fit, config.tournament_size, &mut sel);
            let j = tournament_select(&fit, config.tournament_size, &mut sel);
            let (c1, c2) =
                crossover_single_point(&pop[i], &pop[j], config.crossover_prob, &mut cx)?;
            offspring.push(mutate_bitflip(&c1, config.mutation_prob, &mut mu));
            offspring.push(mutate_bitflip(&c2, config.mutation_prob, &mut mu));
        }
        offspring.truncate(p);

        let mut off_fit: Vec<f64> = evaluate_all(&eval, &offspring, master, g + 1)?
            .iter()
            .map(|e| e.norm)
            .collect();
        let elite_fit = if config.evaluator.is_exact() {
            fit[elite_idx]
        } else {
            // fresh shots; a lucky noisy value is not carried forward
            eval.evaluate(&elite, derive_seed(master, Role::Elite, gen + 1, 0))?
                .norm
        };
        apply_elitism(&mut offspring, &mut off_fit, elite, elite_fit);
        pop = offspring;
        fit = off_fit;
    }

    let (best, best_exact, best_generation) = best.expect("at least one generation");
    debug_assert_eq!(classical.evaluate(&best, 0)?.norm, best_exact.norm);
    Ok(GaOutcome {
        best,
        best_exact,
        best_generation,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::is_bent;
    use crate::ga::EvaluatorKind;

    fn cfg(n: u32, generations: usize, seed: u64) -> GaConfig {
        GaConfig {
            n,
            generations,
            seed,
            ..GaConfig::default()
        }
    }

    #[test]
    fn degenerate_no_variation() {
        let c = GaConfig {
            n: 4,
            population: 2,
            generations: 1,
            tournament_size: 2,
            crossover_prob: 0.0,
            mutation_prob: 0.0,
            ..GaConfig::default()
        };
        let out = run_ga(&c).unwrap();
        let init: Vec<TruthTable> = (0..2)
            .map(|i| TruthTable::random(4, &mut stream(c.seed, Role::Init, 0, i)).unwrap())
            .collect();
        let norms: Vec<f64> = init
            .iter()
            .map(|f| Evaluator::classical().evaluate(f, 0).unwrap().norm)
            .collect();
        let want = &init[argmin(&norms)];
        assert_eq!(&out.best, want);
        assert_eq!(out.history.len(), 1);
        assert_eq!(out.history[0].best_fitness, norms[0].min(norms[1]));
    }

    #[test]
    fn no_variation_keeps_population_multiset_close() {
        // with k = 1, p_c = p_m = 0 offspring are copies of members
        let c = GaConfig {
            n: 3,
            population: 4,
            generations: 5,
            tournament_size: 1,
            crossover_prob: 0.0,
            mutation_prob: 0.0,
            ..GaConfig::default()
        };
        let out = run_ga(&c).unwrap();
        let first = out.history[0].best_fitness;
        assert!(out.history.iter().all(|s| s.best_fitness == first));
    }

    #[test]
    fn elitist_monotonicity_over_seeds() {
        for seed in 0..20 {
            let out = run_ga(&cfg(4, 50, seed)).unwrap();
            assert_eq!(out.history.len(), 50);
            for w in out.history.windows(2) {
                assert!(w[1].best_fitness <= w[0].best_fitness);
            }
            for s in &out.history {
                assert!(s.best_fitness <= s.avg_fitness);
            }
            assert_eq!(
                out.best_exact.norm,
                out.history.last().unwrap().best_fitness
            );
        }
    }

    #[test]
    fn deterministic_histories() {
        let a = run_ga(&cfg(6, 30, 17)).unwrap();
        let b = run_ga(&cfg(6, 30, 17)).unwrap();
        assert_eq!(a.history, b.history);
        let c = run_ga(&cfg(6, 30, 18)).unwrap();
        assert_ne!(a.history, c.history);
    }

    #[test]
    fn quantum_exact_matches_classical() {
        for seed in 0..3 {
            let classical = run_ga(&cfg(5, 40, seed)).unwrap();
            let quantum = run_ga(&GaConfig {
                evaluator: EvaluatorKind::QuantumExact,
                ..cfg(5, 40, seed)
            })
            .unwrap();
            assert_eq!(classical.history, quantum.history);
        }
    }

    #[test]
    fn n2_finds_a_bent_function() {
        let c = GaConfig {
            n: 2,
            population: 10,
            generations: 50,
            ..GaConfig::default()
        };
        let out = run_ga(&c).unwrap();
        assert!(is_bent(&out.best).unwrap());
        assert_eq!(out.best_exact, GowersValue::bent_floor(2));
    }

    #[test]
    fn shot_evaluators_run_and_rescore_exactly() {
        for kind in [
            EvaluatorKind::QuantumShotsAllzero,
            EvaluatorKind::QuantumShotsHadamard,
        ] {
            let c = GaConfig {
                evaluator: kind,
                shots: 500,
                ..cfg(4, 20, 3)
            };
            let a = run_ga(&c).unwrap();
            let b = run_ga(&c).unwrap();
            assert_eq!(a.history, b.history);
            let exact = Evaluator::classical().evaluate(&a.best, 0).unwrap();
            assert_eq!(exact.norm, a.best_exact.norm);
            assert!(a.best_exact.norm >= GowersValue::bent_floor(4).norm);
        }
    }
}
