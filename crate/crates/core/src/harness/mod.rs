//! Experiment orchestration: spawn formations, baselines found by random
//! search, per-generation progress against baselines, and robustness checks
//! over unseen starting positions.

mod baseline;
mod formation;
mod progress;
mod robustness;

pub use baseline::{build_baseline, random_chromosome, BaselineRecord, BaselineSearch};
pub use formation::{generate_formation, FormationGeometry, FormationKind, FormationSpec};
pub use progress::{progress_eval, ProgressScore};
pub use robustness::{robustness_eval, start_set_seed, RobustnessEntry, RobustnessReport, RobustnessSummary};
