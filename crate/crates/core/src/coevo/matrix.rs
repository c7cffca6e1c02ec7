use crate::sim::{SkirmishResult, Winner};
use crate::unit::Side;
use std::cmp::Ordering;

/// Result of one skirmish from the member's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Win,
    Loss,
    Draw,
}

/// Scores and outcomes of every evaluated (member, opponent) pair.
///
/// Rows are members of the evaluated population, columns their opponents.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationMatrix {
    members: usize,
    opponents: usize,
    member_scores: Vec<f64>,
    opponent_scores: Vec<f64>,
    outcomes: Vec<Outcome>,
}

impl EvaluationMatrix {
    /// Builds the matrix from row-major skirmish results in which members
    /// played as `member_side`.
    pub fn from_results(members: usize, opponents: usize, member_side: Side, results: &[SkirmishResult]) -> Self {
        assert_eq!(results.len(), members * opponents, "one result per pair");
        let mut m = EvaluationMatrix {
            members,
            opponents,
            member_scores: Vec::with_capacity(results.len()),
            opponent_scores: Vec::with_capacity(results.len()),
            outcomes: Vec::with_capacity(results.len()),
        };
        for r in results {
            m.member_scores.push(r.score(member_side));
            m.opponent_scores.push(r.score(member_side.opponent()));
            m.outcomes.push(match r.winner.side() {
                None => Outcome::Draw,
                Some(s) if s == member_side => Outcome::Win,
                Some(_) => Outcome::Loss,
            });
        }
        m
    }

    /// Builds a matrix directly from a defeat relation; scores are zero.
    pub fn from_defeats(defeats: &[Vec<bool>]) -> Self {
        let members = defeats.len();
        let opponents = defeats.first().map_or(0, Vec::len);
        let outcomes = defeats
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), opponents);
                row.iter().map(|d| if *d { Outcome::Win } else { Outcome::Loss })
            })
            .collect();
        EvaluationMatrix {
            members,
            opponents,
            member_scores: vec![0.0; members * opponents],
            opponent_scores: vec![0.0; members * opponents],
            outcomes,
        }
    }

    pub fn with_member_scores(mut self, scores: Vec<f64>) -> Self {
        assert_eq!(scores.len(), self.members * self.opponents);
        self.member_scores = scores;
        self
    }

    pub fn members(&self) -> usize {
        self.members
    }

    pub fn opponents(&self) -> usize {
        self.opponents
    }

    pub fn evaluations(&self) -> usize {
        self.members * self.opponents
    }

    fn at(&self, m: usize, o: usize) -> usize {
        debug_assert!(m < self.members && o < self.opponents);
        m * self.opponents + o
    }

    pub fn score(&self, m: usize, o: usize) -> f64 {
        self.member_scores[self.at(m, o)]
    }

    pub fn opponent_score(&self, m: usize, o: usize) -> f64 {
        self.opponent_scores[self.at(m, o)]
    }

    pub fn outcome(&self, m: usize, o: usize) -> Outcome {
        self.outcomes[self.at(m, o)]
    }

    /// Member `m` defeated opponent `o`.
    pub fn defeats(&self, m: usize, o: usize) -> bool {
        self.outcome(m, o) == Outcome::Win
    }

    /// The same skirmishes seen from the opponents' side.
    pub fn transposed(&self) -> Self {
        let mut t = EvaluationMatrix {
            members: self.opponents,
            opponents: self.members,
            member_scores: Vec::with_capacity(self.evaluations()),
            opponent_scores: Vec::with_capacity(self.evaluations()),
            outcomes: Vec::with_capacity(self.evaluations()),
        };
        for o in 0..self.opponents {
            for m in 0..self.members {
                t.member_scores.push(self.opponent_score(m, o));
                t.opponent_scores.push(self.score(m, o));
                t.outcomes.push(match self.outcome(m, o) {
                    Outcome::Win => Outcome::Loss,
                    Outcome::Loss => Outcome::Win,
                    Outcome::Draw => Outcome::Draw,
                });
            }
        }
        t
    }

    /// Mean score of each member over its opponents, summed in column order.
    pub fn mean_scores(&self) -> Vec<f64> {
        (0..self.members)
            .map(|m| {
                let row = &self.member_scores[m * self.opponents..(m + 1) * self.opponents];
                row.iter().sum::<f64>() / self.opponents as f64
            })
            .collect()
    }

    /// How many opponents each member defeated.
    pub fn defeat_counts(&self) -> Vec<usize> {
        (0..self.members)
            .map(|m| (0..self.opponents).filter(|o| self.defeats(m, *o)).count())
            .collect()
    }

    /// How many members defeated each opponent.
    pub fn times_defeated(&self) -> Vec<usize> {
        (0..self.opponents)
            .map(|o| (0..self.members).filter(|m| self.defeats(*m, o)).count())
            .collect()
    }
}

/// Competitive fitness sharing: defeating opponent `i` is worth `1 / N_i`,
/// where `N_i` is how many members defeated `i`.
pub fn shared_fitness(matrix: &EvaluationMatrix) -> Vec<f64> {
    let beaten_by = matrix.times_defeated();
    (0..matrix.members())
        .map(|m| {
            (0..matrix.opponents())
                .filter(|o| matrix.defeats(m, *o))
                .map(|o| 1.0 / beaten_by[o] as f64)
                .sum()
        })
        .collect()
}

/// Score sharing: each opponent hands out one unit of credit in proportion
/// to the (non-negative) scores members earned against it.
pub fn shared_score_fitness(matrix: &EvaluationMatrix) -> Vec<f64> {
    let totals: Vec<f64> = (0..matrix.opponents())
        .map(|o| (0..matrix.members()).map(|m| matrix.score(m, o).max(0.0)).sum())
        .collect();
    (0..matrix.members())
        .map(|m| {
            (0..matrix.opponents())
                .filter(|o| totals[*o] > 0.0)
                .map(|o| matrix.score(m, o).max(0.0) / totals[o])
                .sum()
        })
        .collect()
}

/// Lexicographic selection key.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessKey {
    pub primary: f64,
    pub secondary: f64,
}

impl FitnessKey {
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.primary
            .total_cmp(&other.primary)
            .then(self.secondary.total_cmp(&other.secondary))
    }
}

impl Winner {
    /// Outcome for `side` of a skirmish with this winner.
    pub fn outcome_for(self, side: Side) -> Outcome {
        match self.side() {
            None => Outcome::Draw,
            Some(s) if s == side => Outcome::Win,
            Some(_) => Outcome::Loss,
        }
    }
}
