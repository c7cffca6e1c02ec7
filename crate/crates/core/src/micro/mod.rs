//! The parameterised unit controller.
//!
//! One [`MicroGenome`] drives every unit of one type on one side. Each frame a
//! unit picks exactly one behaviour in strict priority order: flee, kite,
//! attack (or hold/pursue its selected target), and finally group movement
//! toward the influence-map attack location.

mod controller;
mod field;
mod flee;
mod genome;
mod influence;
mod kite;
mod targeting;

pub use controller::{decide_action, Decision, UnitCommand, WorldView};
pub use field::{attraction, group_move_vector, pf_force, repulsion, MIN_FIELD_DISTANCE};
pub use flee::flee_decision;
pub use genome::{MicroGenome, ParamRange, RangeTable, PARAM_COUNT, PARAM_NAMES};
pub use influence::{build_influence_grid, select_target_cell, Cell, GridSpec, InfluenceGrid};
pub use kite::{kite_decision, KiteAction, KiteParams};
pub use targeting::choose_attack_target;
