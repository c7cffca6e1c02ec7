use crate::coevo::{BitChromosome, Evaluator};
use crate::error::{Error, Result};
use crate::harness::{FormationKind, FormationSpec};
use crate::seed::derive_seed;
use crate::sim::{SkirmishConfig, Winner};
use crate::unit::Side;
use serde::{Deserialize, Serialize};

/// One champion-versus-baseline skirmish from an unseen start.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessEntry {
    pub side: Side,
    pub formation: FormationKind,
    pub start_set: u32,
    pub placement_seed: u64,
    pub score_champion: f64,
    pub score_baseline: f64,
    pub winner: Winner,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessSummary {
    pub side: Side,
    pub formation: FormationKind,
    pub runs: usize,
    pub mean_champion: f64,
    pub std_champion: f64,
    pub mean_baseline: f64,
    pub win_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RobustnessReport {
    /// Formation-major, then start set.
    pub entries: Vec<RobustnessEntry>,
    pub summaries: Vec<RobustnessSummary>,
}

impl RobustnessReport {
    pub fn summary(&self, side: Side, formation: FormationKind) -> Option<&RobustnessSummary> {
        self.summaries.iter().find(|s| s.side == side && s.formation == formation)
    }

    pub fn merge(mut self, other: RobustnessReport) -> Self {
        self.entries.extend(other.entries);
        self.summaries.extend(other.summaries);
        self
    }
}

fn summarize(side: Side, formation: FormationKind, entries: &[RobustnessEntry]) -> RobustnessSummary {
    let n = entries.len() as f64;
    let mean_champion = entries.iter().map(|e| e.score_champion).sum::<f64>() / n;
    let var = entries.iter().map(|e| (e.score_champion - mean_champion).powi(2)).sum::<f64>() / n;
    RobustnessSummary {
        side,
        formation,
        runs: entries.len(),
        mean_champion,
        std_champion: var.sqrt(),
        mean_baseline: entries.iter().map(|e| e.score_baseline).sum::<f64>() / n,
        win_rate: entries
            .iter()
            .map(|e| match e.winner.side() {
                Some(s) if s == side => 1.0,
                Some(_) => 0.0,
                None => 0.5,
            })
            .sum::<f64>()
            / n,
    }
}

/// Placement seed of start set `i` for `kind`, independent of the training
/// placement.
pub fn start_set_seed(master: u64, kind: FormationKind, i: u32) -> u64 {
    derive_seed(master, &format!("robustness/{kind}/{i}"))
}

/// Plays `champion` (on `side`) against `baseline` from `start_sets` fresh
/// placements of every formation in `formations`.
pub fn robustness_eval(
    evaluator: &Evaluator,
    side: Side,
    champion: &BitChromosome,
    baseline: &BitChromosome,
    formations: &[FormationKind],
    start_sets: u32,
    master_seed: u64,
) -> Result<RobustnessReport> {
    if start_sets == 0 {
        return Err(Error::validation("robustness.start_sets", "must be >= 1"));
    }
    let pair = match side {
        Side::Red => (champion, baseline),
        Side::Blue => (baseline, champion),
    };
    let mut report = RobustnessReport::default();
    for &kind in formations {
        let seeds: Vec<u64> = (0..start_sets).map(|i| start_set_seed(master_seed, kind, i)).collect();
        let configs: Vec<SkirmishConfig> = seeds
            .iter()
            .map(|s| {
                let mut spec = FormationSpec::new(kind, *s);
                spec.geometry = evaluator.config().formation.geometry;
                evaluator.config().clone().with_formation(spec)
            })
            .collect();
        let mut entries = Vec::with_capacity(start_sets as usize);
        for (i, cfg) in configs.iter().enumerate() {
            let r = &evaluator.play_with(cfg, &[pair])?[0];
            entries.push(RobustnessEntry {
                side,
                formation: kind,
                start_set: i as u32,
                placement_seed: seeds[i],
                score_champion: r.score(side),
                score_baseline: r.score(side.opponent()),
                winner: r.winner,
            });
        }
        report.summaries.push(summarize(side, kind, &entries));
        report.entries.extend(entries);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::micro::RangeTable;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn entries_and_means_are_exact() {
        let ev = Evaluator::new(SkirmishConfig::one_type(2, 4).with_max_frames(200), RangeTable::default(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = BitChromosome::random(96, &mut rng);
        let b = BitChromosome::random(96, &mut rng);
        let rep = robustness_eval(&ev, Side::Red, &a, &b, &FormationKind::ALL, 10, 77).unwrap();
        assert_eq!(rep.entries.len(), 30);
        for kind in FormationKind::ALL {
            let scores: Vec<f64> = rep.entries.iter().filter(|e| e.formation == kind).map(|e| e.score_champion).collect();
            assert_eq!(scores.len(), 10);
            let mean = scores.iter().sum::<f64>() / 10.0;
            assert_eq!(rep.summary(Side::Red, kind).unwrap().mean_champion, mean);
        }
    }
}
