use super::{BitChromosome, EvaluationMatrix};
use rand::seq::index::sample;
use rand::Rng;

/// Opponents drawn from the opposing population's previous generation.
#[derive(Debug, Clone, PartialEq)]
pub struct SharedSample {
    /// Indices into the opposing previous population.
    pub indices: Vec<usize>,
    pub opponents: Vec<BitChromosome>,
}

impl SharedSample {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn from_indices(indices: Vec<usize>, population: &[BitChromosome]) -> Self {
        let opponents = indices.iter().map(|i| population[*i].clone()).collect();
        SharedSample { indices, opponents }
    }
}

/// `k` distinct opponents chosen uniformly (used before any results exist).
pub fn random_sample(population: &[BitChromosome], k: usize, rng: &mut impl Rng) -> SharedSample {
    let k = k.min(population.len());
    let indices = sample(rng, population.len(), k).into_vec();
    SharedSample::from_indices(indices, population)
}

/// Greedy coverage sample.
///
/// `opponent_matrix` holds the previous evaluation of the opposing population:
/// rows are its members (parallel to `opponents`), columns are the members of
/// our population they played. Repeatedly pick the opponent that defeated the
/// most of our members not yet defeated by an already picked opponent (ties:
/// more total defeats, then lower index). Once no pick adds coverage, fill the
/// remaining slots with the best remaining opponents by mean raw score.
pub fn build_shared_sample(opponent_matrix: &EvaluationMatrix, opponents: &[BitChromosome], k: usize) -> SharedSample {
    assert_eq!(opponent_matrix.members(), opponents.len(), "matrix rows must match the opponents");
    let k = k.min(opponents.len());
    let ours = opponent_matrix.opponents();
    let totals = opponent_matrix.defeat_counts();
    let mut covered = vec![false; ours];
    let mut chosen = vec![false; opponents.len()];
    let mut picked = Vec::with_capacity(k);

    while picked.len() < k {
        let mut best: Option<(usize, usize, usize)> = None;
        for o in (0..opponents.len()).filter(|o| !chosen[*o]) {
            let gain = (0..ours)
                .filter(|m| !covered[*m] && opponent_matrix.defeats(o, *m))
                .count();
            let better = match best {
                None => true,
                Some((bg, bt, _)) => (gain, totals[o]) > (bg, bt),
            };
            if better {
                best = Some((gain, totals[o], o));
            }
        }
        match best {
            Some((gain, _, o)) if gain > 0 => {
                chosen[o] = true;
                picked.push(o);
                for (m, c) in covered.iter_mut().enumerate() {
                    if opponent_matrix.defeats(o, m) {
                        *c = true;
                    }
                }
            }
            _ => break,
        }
    }

    if picked.len() < k {
        let raw = opponent_matrix.mean_scores();
        let mut rest: Vec<usize> = (0..opponents.len()).filter(|o| !chosen[*o]).collect();
        rest.sort_by(|a, b| raw[*b].total_cmp(&raw[*a]).then(a.cmp(b)));
        picked.extend(rest.into_iter().take(k - picked.len()));
    }
    SharedSample::from_indices(picked, opponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pop(n: usize) -> Vec<BitChromosome> {
        (0..n).map(|i| BitChromosome::from_fields(&[i as u8])).collect()
    }

    #[test]
    fn dominant_opponent_first_then_padding() {
        let defeats = vec![vec![false; 4], vec![true; 4], vec![true, false, false, false], vec![false; 4]];
        let m = EvaluationMatrix::from_defeats(&defeats).with_member_scores(vec![
            1.0, 1.0, 1.0, 1.0, //
            0.0, 0.0, 0.0, 0.0, //
            5.0, 5.0, 5.0, 5.0, //
            3.0, 3.0, 3.0, 3.0,
        ]);
        let s = build_shared_sample(&m, &pop(4), 3);
        assert_eq!(s.indices, vec![1, 2, 3]);
    }

    #[test]
    fn disjoint_sets_in_size_order() {
        // Opponents 0..5 beat disjoint groups of our 15 members, sized 1,3,5,2,4.
        let sizes = [1, 3, 5, 2, 4];
        let mut start = 0;
        let mut defeats = Vec::new();
        for s in sizes {
            let mut row = vec![false; 15];
            row[start..start + s].iter_mut().for_each(|b| *b = true);
            start += s;
            defeats.push(row);
        }
        let m = EvaluationMatrix::from_defeats(&defeats);
        assert_eq!(build_shared_sample(&m, &pop(5), 5).indices, vec![2, 4, 1, 3, 0]);
    }

    #[test]
    fn no_defeats_falls_back_to_raw_fitness() {
        let m = EvaluationMatrix::from_defeats(&vec![vec![false; 2]; 4])
            .with_member_scores(vec![1.0, 1.0, 9.0, 9.0, 4.0, 4.0, 9.0, 9.0]);
        assert_eq!(build_shared_sample(&m, &pop(4), 3).indices, vec![1, 3, 2]);
    }

    #[test]
    fn random_sample_is_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = random_sample(&pop(20), 5, &mut rng);
        let mut idx = s.indices.clone();
        idx.sort();
        idx.dedup();
        assert_eq!(idx.len(), 5);
        assert_eq!(random_sample(&pop(3), 5, &mut rng).len(), 3);
    }
}
