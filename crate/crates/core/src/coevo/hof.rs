use super::BitChromosome;
use std::collections::VecDeque;

/// Recent generation champions, newest first.
#[derive(Debug, Clone, PartialEq)]
pub struct HallOfFame {
    capacity: usize,
    champions: VecDeque<BitChromosome>,
}

impl HallOfFame {
    pub fn new(capacity: usize) -> Self {
        HallOfFame {
            capacity,
            champions: VecDeque::with_capacity(capacity + 1),
        }
    }

    /// Adds this generation's champion, evicting the oldest beyond capacity.
    pub fn push(&mut self, champion: BitChromosome) {
        if self.capacity == 0 {
            return;
        }
        self.champions.push_front(champion);
        self.champions.truncate(self.capacity);
    }

    pub fn len(&self) -> usize {
        self.champions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.champions.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn iter(&self) -> impl Iterator<Item = &BitChromosome> {
        self.champions.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tagged(g: u8) -> BitChromosome {
        BitChromosome::from_fields(&[g])
    }

    #[test]
    fn ring_buffer_eviction() {
        let mut hof = HallOfFame::new(5);
        assert!(hof.is_empty());
        hof.push(tagged(1));
        assert_eq!(hof.len(), 1);
        for g in 2..=6 {
            hof.push(tagged(g));
        }
        assert_eq!(hof.len(), 5);
        let held: Vec<u8> = hof.iter().map(|c| c.fields()[0]).collect();
        assert_eq!(held, vec![6, 5, 4, 3, 2]);
    }
}
