use crate::error::{Error, Result};
use crate::micro::{MicroGenome, RangeTable};
use crate::sim::{run_skirmish, SkirmishConfig, SkirmishResult};
use crate::unit::Side;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};

use super::{BitChromosome, EvaluationMatrix};

/// Runs batches of skirmishes on a fixed-size worker pool.
///
/// Results always come back in job order, so nothing downstream depends on
/// how the pool scheduled the work.
pub struct Evaluator {
    config: SkirmishConfig,
    ranges: RangeTable,
    pool: rayon::ThreadPool,
    skirmishes: AtomicU64,
}

#[derive(Debug, Clone)]
pub struct PairwiseEvaluation {
    /// Red members as rows, blue members as columns.
    pub matrix: EvaluationMatrix,
    pub red_fitness: Vec<f64>,
    pub blue_fitness: Vec<f64>,
}

impl Evaluator {
    pub fn new(config: SkirmishConfig, ranges: RangeTable, workers: usize) -> Result<Self> {
        config.validate()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
        Ok(Evaluator {
            config,
            ranges,
            pool,
            skirmishes: AtomicU64::new(0),
        })
    }

    pub fn config(&self) -> &SkirmishConfig {
        &self.config
    }

    pub fn ranges(&self) -> &RangeTable {
        &self.ranges
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Total skirmishes run through this evaluator.
    pub fn skirmish_count(&self) -> u64 {
        self.skirmishes.load(Ordering::Relaxed)
    }

    pub fn chromosome_bits(&self, side: Side) -> usize {
        self.config.roster(side).len() * super::BITS_PER_TYPE
    }

    pub fn decode(&self, side: Side, c: &BitChromosome) -> Result<Vec<MicroGenome>> {
        c.decode(&self.ranges, self.config.roster(side).len())
    }

    fn decode_all(&self, side: Side, pop: &[BitChromosome]) -> Result<Vec<Vec<MicroGenome>>> {
        pop.iter().map(|c| self.decode(side, c)).collect()
    }

    /// Plays every `(red, blue)` pair under `config`.
    pub fn play_genomes(
        &self,
        config: &SkirmishConfig,
        pairs: &[(&[MicroGenome], &[MicroGenome])],
    ) -> Result<Vec<SkirmishResult>> {
        let out = self
            .pool
            .install(|| pairs.par_iter().map(|(r, b)| run_skirmish(config, r, b)).collect::<Result<Vec<_>>>())?;
        self.skirmishes.fetch_add(pairs.len() as u64, Ordering::Relaxed);
        Ok(out)
    }

    /// Plays every `(red, blue)` chromosome pair under the training config.
    pub fn play(&self, pairs: &[(&BitChromosome, &BitChromosome)]) -> Result<Vec<SkirmishResult>> {
        self.play_with(&self.config, pairs)
    }

    pub fn play_with(
        &self,
        config: &SkirmishConfig,
        pairs: &[(&BitChromosome, &BitChromosome)],
    ) -> Result<Vec<SkirmishResult>> {
        let decoded = pairs
            .iter()
            .map(|(r, b)| Ok((self.decode(Side::Red, r)?, self.decode(Side::Blue, b)?)))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<(&[MicroGenome], &[MicroGenome])> =
            decoded.iter().map(|(r, b)| (r.as_slice(), b.as_slice())).collect();
        self.play_genomes(config, &refs)
    }

    /// Every red member against every blue member; fitness is the mean score
    /// over all opponents.
    pub fn evaluate_pairwise(&self, red: &[BitChromosome], blue: &[BitChromosome]) -> Result<PairwiseEvaluation> {
        if red.is_empty() || blue.is_empty() {
            return Err(Error::Config("pairwise evaluation needs non-empty populations".into()));
        }
        let r = self.decode_all(Side::Red, red)?;
        let b = self.decode_all(Side::Blue, blue)?;
        let mut pairs = Vec::with_capacity(red.len() * blue.len());
        for rg in &r {
            for bg in &b {
                pairs.push((rg.as_slice(), bg.as_slice()));
            }
        }
        let results = self.play_genomes(&self.config, &pairs)?;
        let matrix = EvaluationMatrix::from_results(red.len(), blue.len(), Side::Red, &results);
        let red_fitness = matrix.mean_scores();
        let blue_fitness = matrix.transposed().mean_scores();
        Ok(PairwiseEvaluation {
            matrix,
            red_fitness,
            blue_fitness,
        })
    }

    /// Every member of `side`'s population against each listed opponent.
    pub fn evaluate_against(
        &self,
        side: Side,
        members: &[BitChromosome],
        opponents: &[&BitChromosome],
    ) -> Result<EvaluationMatrix> {
        if opponents.is_empty() {
            return Err(Error::Config("sampled evaluation needs at least one opponent".into()));
        }
        let m = self.decode_all(side, members)?;
        let o = opponents
            .iter()
            .map(|c| self.decode(side.opponent(), c))
            .collect::<Result<Vec<_>>>()?;
        let mut pairs = Vec::with_capacity(m.len() * o.len());
        for mg in &m {
            for og in &o {
                pairs.push(match side {
                    Side::Red => (mg.as_slice(), og.as_slice()),
                    Side::Blue => (og.as_slice(), mg.as_slice()),
                });
            }
        }
        let results = self.play_genomes(&self.config, &pairs)?;
        Ok(EvaluationMatrix::from_results(members.len(), opponents.len(), side, &results))
    }
}
