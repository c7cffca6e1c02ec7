use crate::coevo::{BitChromosome, Evaluator};
use crate::error::Result;
use crate::sim::Winner;
use crate::unit::Side;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgressScore {
    pub champion: f64,
    pub baseline: f64,
    pub winner: Winner,
}

/// One skirmish of `champion` (playing `side`) against the opposing
/// `baseline`, under the evaluator's training config.
pub fn progress_eval(
    evaluator: &Evaluator,
    side: Side,
    champion: &BitChromosome,
    baseline: &BitChromosome,
) -> Result<ProgressScore> {
    let pair = match side {
        Side::Red => (champion, baseline),
        Side::Blue => (baseline, champion),
    };
    let r = &evaluator.play(&[pair])?[0];
    Ok(ProgressScore {
        champion: r.score(side),
        baseline: r.score(side.opponent()),
        winner: r.winner,
    })
}
