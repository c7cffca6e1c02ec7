//! Deterministic real-time-strategy skirmish simulation and two-population
//! competitive coevolution of unit micromanagement parameters.
//!
//! The crate is organised bottom-up:
//!
//! - [`sim`]: fixed-timestep skirmish engine and damage-based scoring.
//! - [`micro`]: the twelve-parameter unit controller (influence map target
//!   selection, potential-field movement, targeting, kiting, fleeing).
//! - [`coevo`]: bit-string chromosomes, genetic operators, pairwise and
//!   sampled evaluation, competitive fitness sharing, shared sampling and the
//!   hall of fame.
//! - [`harness`]: formations, baselines, progress and robustness measurement.
//! - [`run`]: configuration files, seed derivation, CSV/trace/manifest
//!   artifacts and the command dispatcher used by the `rts-coevo` binary.

pub mod coevo;
pub mod error;
pub mod geom;
pub mod harness;
pub mod micro;
pub mod run;
pub mod seed;
pub mod sim;
pub mod unit;

pub use coevo::{
    BitChromosome, Coevolution, EvaluationMatrix, EvolutionMode, Evaluator, GaSettings,
    HallOfFame, ProgressRecord, SharedSample,
};
pub use error::{Error, Result};
pub use geom::Vec2;
pub use harness::{BaselineRecord, FormationKind, FormationSpec, RobustnessReport};
pub use micro::{MicroGenome, RangeTable};
pub use sim::{run_skirmish, ReplayTrace, SimulationState, SkirmishConfig, SkirmishResult, Winner};
pub use unit::{BehaviorMode, Side, UnitState, UnitTypeSpec};
