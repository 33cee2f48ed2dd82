use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::MAX_VARS;
use crate::quantum::EXACT_AMPLITUDE_MAX_VARS;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvaluatorKind {
    Classical,
    QuantumExact,
    QuantumShotsAllzero,
    QuantumShotsHadamard,
}

impl EvaluatorKind {
    pub const ALL: [EvaluatorKind; 4] = [
        Self::Classical,
        Self::QuantumExact,
        Self::QuantumShotsAllzero,
        Self::QuantumShotsHadamard,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Classical => "classical",
            Self::QuantumExact => "quantum-exact",
            Self::QuantumShotsAllzero => "quantum-shots-allzero",
            Self::QuantumShotsHadamard => "quantum-shots-hadamard",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Self::Classical | Self::QuantumExact)
    }
}

impl fmt::Display for EvaluatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvaluatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown evaluator {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub n: u32,
    pub population: usize,
    pub generations: usize,
    pub tournament_size: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub seed: u64,
    pub evaluator: EvaluatorKind,
    /// Shots per estimate; only read by the shot-based evaluators.
    pub shots: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            n: 6,
            population: 25,
            generations: 250,
            tournament_size: 3,
            crossover_prob: 0.5,
            mutation_prob: 0.8,
            seed: 0,
            evaluator: EvaluatorKind::Classical,
            shots: 1000,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        let max_n = if self.evaluator == EvaluatorKind::Classical {
            MAX_VARS
        } else {
            EXACT_AMPLITUDE_MAX_VARS
        };
        if self.n == 0 || self.n > max_n {
            return Err(Error::Config(format!(
                "n = {} outside 1..={max_n} for the {} evaluator",
                self.n, self.evaluator
            )));
        }
        if self.population < 2 {
            return Err(Error::Config("population must be at least 2".into()));
        }
        if self.generations < 1 {
            return Err(Error::Config("generations must be at least 1".into()));
        }
        if self.tournament_size < 1 || self.tournament_size > self.population {
            return Err(Error::Config(format!(
                "tournament size {} outside 1..={}",
                self.tournament_size, self.population
            )));
        }
        for (name, p) in [
            ("crossover", self.crossover_prob),
            ("mutation", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Config(format!(
                    "{name} probability {p} outside [0, 1]"
                )));
            }
        }
        if !self.evaluator.is_exact() && self.shots == 0 {
            return Err(Error::Config(
                "shot-based evaluators need shots >= 1".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        GaConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        let base = GaConfig::default();
        let bad = [
            GaConfig {
                population: 1,
                ..base.clone()
            },
            GaConfig {
                generations: 0,
                ..base.clone()
            },
            GaConfig {
                tournament_size: 0,
                ..base.clone()
            },
            GaConfig {
                tournament_size: 26,
                ..base.clone()
            },
            GaConfig {
                crossover_prob: 1.5,
                ..base.clone()
            },
            GaConfig {
                mutation_prob: -0.1,
                ..base.clone()
            },
            GaConfig {
                n: 0,
                ..base.clone()
            },
            GaConfig {
                n: 13,
                evaluator: EvaluatorKind::QuantumExact,
                ..base.clone()
            },
            GaConfig {
                shots: 0,
                evaluator: EvaluatorKind::QuantumShotsHadamard,
                ..base.clone()
            },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn evaluator_names_round_trip() {
        for k in EvaluatorKind::ALL {
            assert_eq!(k.as_str().parse::<EvaluatorKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{k}\""));
        }
        assert!("quantum".parse::<EvaluatorKind>().is_err());
    }
}
