//! Run configuration: one JSON document with a section per subsystem.
//!
//! The schema is strict — unknown keys anywhere in the document are a
//! deserialization error, and [`RunConfig::validate`] rejects out-of-range
//! values before anything runs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::agent::TrainConfig;
use crate::rss::RssParams;
use crate::sim::{PedAction, WorldConfig};

/// A configuration value that fails validation, naming the offending key.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid config value for `{key}`: {reason}")]
pub struct ConfigError {
    pub key: &'static str,
    pub reason: String,
}

impl ConfigError {
    pub fn new(key: &'static str, reason: impl core::fmt::Display) -> Self {
        Self {
            key,
            reason: format!("{reason}"),
        }
    }
}

pub(crate) fn require(cond: bool, key: &'static str, reason: &str) -> Result<(), ConfigError> {
    if cond {
        Ok(())
    } else {
        Err(ConfigError::new(key, reason))
    }
}

pub(crate) fn require_finite(value: f64, key: &'static str) -> Result<(), ConfigError> {
    require(value.is_finite(), key, "must be finite")
}

/// Network shape and Adam settings for the two DQN function approximators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeuralConfig {
    /// Hidden layer widths; the full shape is `[2, hidden[0], hidden[1], 40]`.
    pub hidden: Vec<usize>,
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps_hat: f64,
}

impl Default for NeuralConfig {
    fn default() -> Self {
        Self {
            hidden: alloc::vec![24, 24],
            learning_rate: 0.01,
            beta1: 0.9,
            beta2: 0.999,
            eps_hat: 1e-8,
        }
    }
}

impl NeuralConfig {
    /// Full layer sizes for the policy networks: two state inputs, one output
    /// per pedestrian action.
    pub fn layer_dims(&self) -> Vec<usize> {
        let mut dims = Vec::with_capacity(self.hidden.len() + 2);
        dims.push(crate::nn::STATE_DIM);
        dims.extend_from_slice(&self.hidden);
        dims.push(PedAction::COUNT);
        dims
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        require(
            self.hidden.len() == 2,
            "neural.hidden",
            "exactly two hidden layer widths are required",
        )?;
        require(
            self.hidden.iter().all(|&h| h > 0),
            "neural.hidden",
            "hidden widths must be positive",
        )?;
        require_finite(self.learning_rate, "neural.learning_rate")?;
        require(
            self.learning_rate > 0.0,
            "neural.learning_rate",
            "must be positive",
        )?;
        require(
            self.beta1 >= 0.0 && self.beta1 < 1.0,
            "neural.beta1",
            "must lie in [0, 1)",
        )?;
        require(
            self.beta2 >= 0.0 && self.beta2 < 1.0,
            "neural.beta2",
            "must lie in [0, 1)",
        )?;
        require(
            self.eps_hat > 0.0 && self.eps_hat.is_finite(),
            "neural.eps_hat",
            "must be positive and finite",
        )?;
        Ok(())
    }
}

/// Which timesteps form the denominator of an episode's success fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionBasis {
    /// Every timestep counts; out-of-region and collision steps are successes.
    AllTimesteps,
    /// Only timesteps with the pedestrian inside the detection region count.
    InRoi,
}

/// Episode classification and report settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationConfig {
    /// An episode is a success scenario when its success fraction is
    /// strictly greater than this threshold.
    pub success_threshold: f64,
    pub fraction_basis: FractionBasis,
    /// How many top-reward episodes the report lists as edge cases.
    pub top_k: usize,
    /// Window of the trailing reward moving average.
    pub ma_window: usize,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        Self {
            success_threshold: 0.75,
            fraction_basis: FractionBasis::AllTimesteps,
            top_k: 5,
            ma_window: 100,
        }
    }
}

impl ValidationConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        require(
            self.success_threshold >= 0.0 && self.success_threshold < 1.0,
            "validation.success_threshold",
            "must lie in [0, 1)",
        )?;
        require(self.top_k >= 1, "validation.top_k", "must be at least 1")?;
        require(
            self.ma_window >= 1,
            "validation.ma_window",
            "must be at least 1",
        )?;
        Ok(())
    }
}

/// The whole run configuration, one section per subsystem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub world: WorldConfig,
    pub rss: RssParams,
    pub neural: NeuralConfig,
    pub agent: TrainConfig,
    pub validation: ValidationConfig,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.world.validate()?;
        self.rss.validate()?;
        self.neural.validate()?;
        self.agent.validate()?;
        self.validation.validate()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = serde_json::from_str::<RunConfig>(
            r#"{"world": {"dtt": 0.1}, "rss": {}, "neural": {}, "agent": {}, "validation": {}}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("dtt"), "{err}");
    }

    #[test]
    fn config_error_names_the_key() {
        let mut cfg = RunConfig::default();
        cfg.neural.learning_rate = -1.0;
        let err = cfg.validate().unwrap_err();
        assert_eq!(err.key, "neural.learning_rate");
    }

    #[test]
    fn policy_layer_dims() {
        assert_eq!(NeuralConfig::default().layer_dims(), [2, 24, 24, 40]);
    }
}
