use crate::error::{Error, Result};
use crate::harness::progress_eval;
use crate::seed::rng_for;
use crate::unit::Side;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use super::{
    build_shared_sample, crossover, mutate, random_sample, shared_fitness, shared_score_fitness, BitChromosome,
    EvaluationMatrix, Evaluator, FitnessKey, HallOfFame,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvolutionMode {
    /// Full pairwise evaluation, mean raw score fitness.
    Simple,
    /// Shared sampling, hall of fame and competitive fitness sharing.
    Enhanced,
}

impl fmt::Display for EvolutionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvolutionMode::Simple => "simple",
            EvolutionMode::Enhanced => "enhanced",
        })
    }
}

impl FromStr for EvolutionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" => Ok(EvolutionMode::Simple),
            "enhanced" => Ok(EvolutionMode::Enhanced),
            other => Err(Error::parse("mode", format!("expected simple|enhanced, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GaSettings {
    pub population_size: usize,
    pub generations: u32,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub mode: EvolutionMode,
    pub sample_size: usize,
    pub hof_size: usize,
    pub tournament_size: usize,
    /// Share damage scores instead of win credit in enhanced mode.
    pub share_scores: bool,
}

impl Default for GaSettings {
    fn default() -> Self {
        GaSettings {
            population_size: 50,
            generations: 60,
            crossover_rate: 0.95,
            mutation_rate: 0.03,
            mode: EvolutionMode::Enhanced,
            sample_size: 5,
            hof_size: 5,
            tournament_size: 2,
            share_scores: false,
        }
    }
}

impl GaSettings {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::validation("ga.population_size", "must be >= 2"));
        }
        for (name, p) in [("ga.crossover_rate", self.crossover_rate), ("ga.mutation_rate", self.mutation_rate)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::validation(name, format!("probability {p} outside [0, 1]")));
            }
        }
        if self.tournament_size < 1 {
            return Err(Error::validation("ga.tournament_size", "must be >= 1"));
        }
        if self.mode == EvolutionMode::Enhanced && self.sample_size == 0 {
            return Err(Error::validation("ga.sample_size", "enhanced mode needs a sample of at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Population {
    pub side: Side,
    pub members: Vec<BitChromosome>,
    pub generation: u32,
    rng: ChaCha8Rng,
}

impl Population {
    pub fn random(side: Side, size: usize, bits: usize, mut rng: ChaCha8Rng) -> Self {
        let members = (0..size).map(|_| BitChromosome::random(bits, &mut rng)).collect();
        Population {
            side,
            members,
            generation: 0,
            rng,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Index of the best key; the lowest index wins ties.
pub fn champion_index(keys: &[FitnessKey]) -> usize {
    let mut best = 0;
    for (i, k) in keys.iter().enumerate().skip(1) {
        if k.cmp_key(&keys[best]).is_gt() {
            best = i;
        }
    }
    best
}

/// Tournament with replacement; the first drawn among equals wins.
pub fn tournament_select(keys: &[FitnessKey], size: usize, rng: &mut impl Rng) -> usize {
    let mut best = rng.gen_range(0..keys.len());
    for _ in 1..size {
        let c = rng.gen_range(0..keys.len());
        if keys[c].cmp_key(&keys[best]).is_gt() {
            best = c;
        }
    }
    best
}

/// Elitism of one, then tournament selection, crossover and mutation until
/// the population is refilled.
pub fn next_generation(
    members: &[BitChromosome],
    keys: &[FitnessKey],
    settings: &GaSettings,
    rng: &mut impl Rng,
) -> Vec<BitChromosome> {
    let p = members.len();
    let mut next = Vec::with_capacity(p);
    next.push(members[champion_index(keys)].clone());
    while next.len() < p {
        let a = tournament_select(keys, settings.tournament_size, rng);
        let b = tournament_select(keys, settings.tournament_size, rng);
        let (c1, c2) = crossover(&members[a], &members[b], settings.crossover_rate, rng);
        next.push(mutate(&c1, settings.mutation_rate, rng));
        if next.len() < p {
            next.push(mutate(&c2, settings.mutation_rate, rng));
        }
    }
    next
}

/// One row of the per-generation progress table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProgressRecord {
    pub generation: u32,
    pub mode: EvolutionMode,
    /// Skirmishes spent on fitness evaluation this generation.
    pub evaluations: u64,
    pub cumulative_evaluations: u64,
    pub red_champion_fitness: f64,
    pub blue_champion_fitness: f64,
    pub red_champion_raw: f64,
    pub blue_champion_raw: f64,
    /// Red champion's score against the blue baseline, and the baseline's.
    pub red_vs_baseline: Option<f64>,
    pub red_baseline_score: Option<f64>,
    /// Blue champion's score against the red baseline, and the baseline's.
    pub blue_vs_baseline: Option<f64>,
    pub blue_baseline_score: Option<f64>,
}

impl ProgressRecord {
    pub fn progress_score(&self, side: Side) -> Option<f64> {
        match side {
            Side::Red => self.red_vs_baseline,
            Side::Blue => self.blue_vs_baseline,
        }
    }
}

/// Per side, red then blue: (sample size, hall of fame size).
pub type OpponentCounts = [(usize, usize); 2];

#[derive(Debug, Clone)]
pub struct GenerationOutcome {
    pub record: ProgressRecord,
    /// Red then blue champion of the evaluated generation.
    pub champions: [BitChromosome; 2],
    /// Opponents each side was evaluated against.
    pub opponent_counts: OpponentCounts,
}

struct SideEvaluation {
    matrix: EvaluationMatrix,
    keys: Vec<FitnessKey>,
}

/// State of a two-population coevolution run.
pub struct Coevolution<'e> {
    settings: GaSettings,
    evaluator: &'e Evaluator,
    populations: [Population; 2],
    halls: [HallOfFame; 2],
    /// Each side's previous evaluation (rows = its members) and population.
    previous: [Option<(EvaluationMatrix, Vec<BitChromosome>)>; 2],
    sample_rng: ChaCha8Rng,
    baselines: Option<[BitChromosome; 2]>,
    generation: u32,
    cumulative: u64,
}

impl<'e> Coevolution<'e> {
    /// Random initial populations seeded from `master_seed`. `baselines`
    /// (red, blue) enable per-generation progress measurement.
    pub fn new(
        settings: GaSettings,
        evaluator: &'e Evaluator,
        master_seed: u64,
        baselines: Option<[BitChromosome; 2]>,
    ) -> Result<Self> {
        settings.validate()?;
        let pop = |side: Side| {
            Population::random(
                side,
                settings.population_size,
                evaluator.chromosome_bits(side),
                rng_for(master_seed, &format!("population/{side}")),
            )
        };
        let populations = [pop(Side::Red), pop(Side::Blue)];
        if let Some(b) = &baselines {
            for side in Side::BOTH {
                evaluator.decode(side, &b[side.index()])?;
            }
        }
        Ok(Coevolution {
            halls: [HallOfFame::new(settings.hof_size), HallOfFame::new(settings.hof_size)],
            settings,
            evaluator,
            populations,
            previous: [None, None],
            sample_rng: rng_for(master_seed, "shared-sample"),
            baselines,
            generation: 0,
            cumulative: 0,
        })
    }

    pub fn settings(&self) -> &GaSettings {
        &self.settings
    }

    pub fn generation(&self) -> u32 {
        self.generation
    }

    pub fn population(&self, side: Side) -> &Population {
        &self.populations[side.index()]
    }

    pub fn hall_of_fame(&self, side: Side) -> &HallOfFame {
        &self.halls[side.index()]
    }

    fn keys_from(primary: &[f64], raw: &[f64]) -> Vec<FitnessKey> {
        primary
            .iter()
            .zip(raw)
            .map(|(p, r)| FitnessKey {
                primary: *p,
                secondary: *r,
            })
            .collect()
    }

    fn evaluate_simple(&self) -> Result<[SideEvaluation; 2]> {
        let eval = self
            .evaluator
            .evaluate_pairwise(&self.populations[0].members, &self.populations[1].members)?;
        let blue_matrix = eval.matrix.transposed();
        Ok([
            SideEvaluation {
                keys: Self::keys_from(&eval.red_fitness, &eval.red_fitness),
                matrix: eval.matrix,
            },
            SideEvaluation {
                keys: Self::keys_from(&eval.blue_fitness, &eval.blue_fitness),
                matrix: blue_matrix,
            },
        ])
    }

    fn opponents_for(&mut self, side: Side) -> (Vec<BitChromosome>, usize, usize) {
        let opp = side.opponent();
        let k = self.settings.sample_size;
        let sample = match &self.previous[opp.index()] {
            Some((matrix, pop)) => build_shared_sample(matrix, pop, k),
            None => random_sample(&self.populations[opp.index()].members, k, &mut self.sample_rng),
        };
        let hof = &self.halls[opp.index()];
        let (s, h) = (sample.len(), hof.len());
        let mut list = sample.opponents;
        list.extend(hof.iter().cloned());
        (list, s, h)
    }

    fn evaluate_enhanced(&mut self) -> Result<([SideEvaluation; 2], OpponentCounts)> {
        let mut counts = [(0, 0); 2];
        let mut out = Vec::with_capacity(2);
        let mut opponent_lists = Vec::with_capacity(2);
        for side in Side::BOTH {
            let (list, s, h) = self.opponents_for(side);
            counts[side.index()] = (s, h);
            opponent_lists.push(list);
        }
        for side in Side::BOTH {
            let refs: Vec<&BitChromosome> = opponent_lists[side.index()].iter().collect();
            let matrix = self
                .evaluator
                .evaluate_against(side, &self.populations[side.index()].members, &refs)?;
            let raw = matrix.mean_scores();
            let shared = if self.settings.share_scores {
                shared_score_fitness(&matrix)
            } else {
                shared_fitness(&matrix)
            };
            out.push(SideEvaluation {
                keys: Self::keys_from(&shared, &raw),
                matrix,
            });
        }
        let blue = out.pop().expect("two sides");
        let red = out.pop().expect("two sides");
        Ok(([red, blue], counts))
    }

    /// Evaluates the current generation, measures champions against the
    /// baselines and breeds the next generation.
    pub fn step(&mut self) -> Result<GenerationOutcome> {
        let (evals, counts) = match self.settings.mode {
            EvolutionMode::Simple => {
                let p = self.evaluate_simple()?;
                let c = [(p[1].matrix.members(), 0), (p[0].matrix.members(), 0)];
                (p, c)
            }
            EvolutionMode::Enhanced => self.evaluate_enhanced()?,
        };
        let evaluations = match self.settings.mode {
            EvolutionMode::Simple => evals[0].matrix.evaluations() as u64,
            EvolutionMode::Enhanced => evals.iter().map(|e| e.matrix.evaluations() as u64).sum(),
        };
        self.cumulative += evaluations;

        let champ_idx = [champion_index(&evals[0].keys), champion_index(&evals[1].keys)];
        let champions = [
            self.populations[0].members[champ_idx[0]].clone(),
            self.populations[1].members[champ_idx[1]].clone(),
        ];

        let mut progress = [None, None];
        if let Some(baselines) = &self.baselines {
            for side in Side::BOTH {
                let s = progress_eval(
                    self.evaluator,
                    side,
                    &champions[side.index()],
                    &baselines[side.opponent().index()],
                )?;
                progress[side.index()] = Some(s);
            }
        }

        let record = ProgressRecord {
            generation: self.generation,
            mode: self.settings.mode,
            evaluations,
            cumulative_evaluations: self.cumulative,
            red_champion_fitness: evals[0].keys[champ_idx[0]].primary,
            blue_champion_fitness: evals[1].keys[champ_idx[1]].primary,
            red_champion_raw: evals[0].keys[champ_idx[0]].secondary,
            blue_champion_raw: evals[1].keys[champ_idx[1]].secondary,
            red_vs_baseline: progress[0].map(|p| p.champion),
            red_baseline_score: progress[0].map(|p| p.baseline),
            blue_vs_baseline: progress[1].map(|p| p.champion),
            blue_baseline_score: progress[1].map(|p| p.baseline),
        };

        if self.settings.mode == EvolutionMode::Enhanced {
            for side in Side::BOTH {
                self.halls[side.index()].push(champions[side.index()].clone());
            }
        }

        let [red_eval, blue_eval] = evals;
        for (side, eval) in [(Side::Red, red_eval), (Side::Blue, blue_eval)] {
            let pop = &mut self.populations[side.index()];
            let next = next_generation(&pop.members, &eval.keys, &self.settings, &mut pop.rng);
            let prev = std::mem::replace(&mut pop.members, next);
            pop.generation += 1;
            self.previous[side.index()] = Some((eval.matrix, prev));
        }
        self.generation += 1;

        Ok(GenerationOutcome {
            record,
            champions,
            opponent_counts: counts,
        })
    }

    /// Runs the configured number of generations, handing each outcome to
    /// `on_generation` as it completes.
    pub fn run(&mut self, mut on_generation: impl FnMut(&GenerationOutcome) -> Result<()>) -> Result<Vec<ProgressRecord>> {
        let mut records = Vec::with_capacity(self.settings.generations as usize);
        while self.generation < self.settings.generations {
            let outcome = self.step()?;
            on_generation(&outcome)?;
            records.push(outcome.record);
        }
        Ok(records)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn keys(v: &[f64]) -> Vec<FitnessKey> {
        v.iter().map(|x| FitnessKey { primary: *x, secondary: 0.0 }).collect()
    }

    #[test]
    fn champion_prefers_first_on_tie() {
        assert_eq!(champion_index(&keys(&[1.0, 3.0, 3.0, 2.0])), 1);
    }

    #[test]
    fn elite_survives_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let members: Vec<BitChromosome> = (0..10).map(|_| BitChromosome::random(96, &mut rng)).collect();
        let k = keys(&[0.0, 1.0, 9.0, 2.0, 3.0, 0.5, 0.0, 0.0, 1.0, 1.0]);
        let next = next_generation(&members, &k, &GaSettings::default(), &mut rng);
        assert_eq!(next.len(), 10);
        assert_eq!(next[0], members[2]);
    }

    #[test]
    fn binary_tournament_favours_the_fit() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let k = keys(&[0.0, 1.0, 2.0, 3.0]);
        let mut hits = [0usize; 4];
        for _ in 0..20_000 {
            hits[tournament_select(&k, 2, &mut rng)] += 1;
        }
        // P(win) for rank r of 4 under binary tournament: (2r + 1) / 16.
        for (r, h) in hits.iter().enumerate() {
            let expect = (2 * r + 1) as f64 / 16.0;
            assert!((*h as f64 / 20_000.0 - expect).abs() < 0.015, "{hits:?}");
        }
    }

    #[test]
    fn settings_validation_names_fields() {
        let s = GaSettings {
            crossover_rate: 1.5,
            ..GaSettings::default()
        };
        assert!(s.validate().unwrap_err().to_string().contains("ga.crossover_rate"));
        let s = GaSettings {
            population_size: 1,
            ..GaSettings::default()
        };
        assert!(s.validate().is_err());
    }
}
