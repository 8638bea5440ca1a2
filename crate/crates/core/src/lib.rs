//! Core engine for `edge-forge`: a deterministic pedestrian-crossing
//! simulator with a pluggable collision-avoidance controller, the RSS
//! longitudinal safe-distance metric, a small DQN adversary that learns to
//! steer scenarios toward safety violations, and the statistics that turn
//! episode logs into a probability of specification satisfaction.
//!
//! The crate is `no_std`-compatible (with `alloc`); everything here is pure
//! computation over values. File formats, the CLI, and logging live in the
//! companion `edge-forge` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod agent;
pub mod config;
mod math;
pub mod nn;
pub mod rss;
pub mod sim;
pub mod validation;

pub use config::{ConfigError, FractionBasis, NeuralConfig, RunConfig, ValidationConfig};
pub use sim::{AgentState, CollisionAvoidance, PedAction, ReferenceCas, SimState, TermReason, WorldConfig};
