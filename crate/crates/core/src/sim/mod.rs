//! Deterministic fixed-timestep skirmish simulation.
//!
//! One step is one frame. Every live unit decides from the frame-start state,
//! then attacks resolve simultaneously, units move, cooldowns tick and the
//! dead drop out of the active roster. The run ends when a side is wiped out
//! or the frame cap is reached.

mod config;
mod result;
mod score;
mod state;
mod trace;

pub use config::{default_unit_values, RosterEntry, ScoreWeights, SkirmishConfig};
pub use result::{ResultRow, SkirmishResult, Winner};
pub use score::{compute_score, ScoreBreakdown};
pub use state::{run_skirmish, run_skirmish_traced, spawn_skirmish, SimulationState};
pub use trace::{FrameSnapshot, ReplayTrace, Shot, UnitSnapshot};
