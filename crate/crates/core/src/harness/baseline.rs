use crate::coevo::{BitChromosome, Evaluator};
use crate::error::{Error, Result};
use crate::seed::rng_for;
use crate::sim::Winner;
use crate::unit::Side;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A fixed opponent found by random search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineRecord {
    pub side: Side,
    pub chromosome: BitChromosome,
    pub win_rate: f64,
    pub opponent_count: usize,
    pub candidate_index: usize,
    pub seed: u64,
    /// Result of every skirmish against the random opponents, in order.
    pub outcomes: Vec<Winner>,
}

impl BaselineRecord {
    /// Win rate recomputed from `outcomes`, draws counting half.
    pub fn recomputed_win_rate(&self) -> f64 {
        win_rate(self.side, &self.outcomes)
    }
}

fn win_rate(side: Side, outcomes: &[Winner]) -> f64 {
    if outcomes.is_empty() {
        return 0.0;
    }
    let credit: f64 = outcomes
        .iter()
        .map(|w| match w.side() {
            Some(s) if s == side => 1.0,
            Some(_) => 0.0,
            None => 0.5,
        })
        .sum();
    credit / outcomes.len() as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineSearch {
    pub side: Side,
    /// Random opponents every candidate plays.
    pub random_count: usize,
    pub candidate_count: usize,
    pub threshold: f64,
    pub seed: u64,
}

impl BaselineSearch {
    pub fn new(side: Side, seed: u64) -> Self {
        BaselineSearch {
            side,
            random_count: 200,
            candidate_count: 100,
            threshold: 0.90,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.random_count == 0 {
            return Err(Error::validation("baseline.random_count", "must be >= 1"));
        }
        if self.candidate_count == 0 {
            return Err(Error::validation("baseline.candidate_count", "must be >= 1"));
        }
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(Error::validation("baseline.threshold", "must lie in [0, 1]"));
        }
        Ok(())
    }
}

/// Uniform random bit string of the right length for `side`.
pub fn random_chromosome(evaluator: &Evaluator, side: Side, rng: &mut impl Rng) -> BitChromosome {
    BitChromosome::random(evaluator.chromosome_bits(side), rng)
}

/// Random-search a baseline for `search.side`.
///
/// Every candidate plays the same `random_count` uniform random opponents.
/// The candidate with the highest win rate (lowest index on ties) is
/// returned if it reaches the threshold; otherwise `BaselineNotFound`
/// carries the best record found. A perfect candidate ends the search early.
pub fn build_baseline(evaluator: &Evaluator, search: &BaselineSearch) -> Result<BaselineRecord> {
    search.validate()?;
    let side = search.side;
    let mut opp_rng = rng_for(search.seed, &format!("baseline/opponents/{side}"));
    let opponents: Vec<BitChromosome> = (0..search.random_count)
        .map(|_| random_chromosome(evaluator, side.opponent(), &mut opp_rng))
        .collect();
    let mut cand_rng = rng_for(search.seed, &format!("baseline/candidates/{side}"));

    let mut best: Option<BaselineRecord> = None;
    for index in 0..search.candidate_count {
        let candidate = random_chromosome(evaluator, side, &mut cand_rng);
        let pairs: Vec<(&BitChromosome, &BitChromosome)> = opponents
            .iter()
            .map(|o| match side {
                Side::Red => (&candidate, o),
                Side::Blue => (o, &candidate),
            })
            .collect();
        let outcomes: Vec<Winner> = evaluator.play(&pairs)?.iter().map(|r| r.winner).collect();
        let rate = win_rate(side, &outcomes);
        if best.as_ref().is_none_or(|b| rate > b.win_rate) {
            best = Some(BaselineRecord {
                side,
                chromosome: candidate,
                win_rate: rate,
                opponent_count: opponents.len(),
                candidate_index: index,
                seed: search.seed,
                outcomes,
            });
        }
        if rate >= 1.0 {
            break;
        }
    }
    let best = best.expect("candidate_count >= 1");
    if best.win_rate >= search.threshold {
        Ok(best)
    } else {
        Err(Error::BaselineNotFound {
            best_win_rate: best.win_rate,
            threshold: search.threshold,
            best: Box::new(best),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::micro::RangeTable;
    use crate::sim::SkirmishConfig;

    fn evaluator() -> Evaluator {
        Evaluator::new(SkirmishConfig::one_type(2, 3).with_max_frames(300), RangeTable::default(), 1).unwrap()
    }

    #[test]
    fn single_opponent_rate_is_a_half_step() {
        let ev = evaluator();
        let search = BaselineSearch {
            random_count: 1,
            candidate_count: 1,
            threshold: 0.0,
            ..BaselineSearch::new(Side::Blue, 9)
        };
        let b = build_baseline(&ev, &search).unwrap();
        assert!([0.0, 0.5, 1.0].contains(&b.win_rate));
        assert_eq!(b.win_rate, b.recomputed_win_rate());
    }

    #[test]
    fn unreachable_gate_reports_best() {
        let ev = evaluator();
        let search = BaselineSearch {
            random_count: 4,
            candidate_count: 2,
            threshold: 1.0,
            ..BaselineSearch::new(Side::Red, 2)
        };
        match build_baseline(&ev, &search) {
            Ok(b) => assert_eq!(b.win_rate, 1.0),
            Err(Error::BaselineNotFound { best, best_win_rate, .. }) => {
                assert_eq!(best.win_rate, best_win_rate);
                assert_eq!(best.outcomes.len(), 4);
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn record_round_trips_through_json() {
        let ev = evaluator();
        let search = BaselineSearch {
            random_count: 3,
            candidate_count: 2,
            threshold: 0.0,
            ..BaselineSearch::new(Side::Blue, 4)
        };
        let b = build_baseline(&ev, &search).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        let back: BaselineRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
    }
}
