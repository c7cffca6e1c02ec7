//! Two-population competitive coevolution over bit-string micro genomes.
//!
//! Simple mode plays every red member against every blue member and uses
//! mean scores as fitness. Enhanced mode evaluates each population against a
//! small shared sample of the opposing population plus the opposing hall of
//! fame, and ranks members by competitive fitness sharing with the mean raw
//! score as a tie-breaker.

mod chromosome;
mod engine;
mod evaluate;
mod hof;
mod matrix;
mod sampling;

pub use chromosome::{crossover, crossover_at, mutate, BitChromosome, BITS_PER_PARAM, BITS_PER_TYPE};
pub use engine::{
    champion_index, next_generation, tournament_select, Coevolution, EvolutionMode, GaSettings, GenerationOutcome,
    Population, ProgressRecord,
};
pub use evaluate::{Evaluator, PairwiseEvaluation};
pub use hof::HallOfFame;
pub use matrix::{shared_fitness, shared_score_fitness, EvaluationMatrix, FitnessKey, Outcome};
pub use sampling::{build_shared_sample, random_sample, SharedSample};
