use crate::error::{Error, Result};
use crate::micro::{MicroGenome, RangeTable, PARAM_COUNT};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

pub const BITS_PER_PARAM: usize = 8;
pub const BITS_PER_TYPE: usize = BITS_PER_PARAM * PARAM_COUNT;

/// Fixed-length bit string, eight bits per parameter, most significant bit
/// first within each field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitChromosome {
    bits: Vec<bool>,
}

impl BitChromosome {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitChromosome { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self::from_bits(vec![false; len])
    }

    pub fn ones(len: usize) -> Self {
        Self::from_bits(vec![true; len])
    }

    pub fn random(len: usize, rng: &mut impl Rng) -> Self {
        Self::from_bits((0..len).map(|_| rng.gen::<bool>()).collect())
    }

    /// Chromosome whose 8-bit fields are `fields`.
    pub fn from_fields(fields: &[u8]) -> Self {
        let mut bits = Vec::with_capacity(fields.len() * BITS_PER_PARAM);
        for f in fields {
            for b in (0..BITS_PER_PARAM).rev() {
                bits.push((f >> b) & 1 == 1);
            }
        }
        Self::from_bits(bits)
    }

    /// Encodes genomes (one per unit type) at the nearest field value.
    pub fn encode(genomes: &[MicroGenome], table: &RangeTable) -> Self {
        let fields: Vec<u8> = genomes.iter().flat_map(|g| table.encode(g)).collect();
        Self::from_fields(&fields)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    /// The 8-bit fields; a trailing partial field is padded with zeros.
    pub fn fields(&self) -> Vec<u8> {
        self.bits
            .chunks(BITS_PER_PARAM)
            .map(|c| {
                let mut v = 0u8;
                for (i, b) in c.iter().enumerate() {
                    if *b {
                        v |= 1 << (BITS_PER_PARAM - 1 - i);
                    }
                }
                v
            })
            .collect()
    }

    /// Decodes one genome per unit type, in roster order.
    pub fn decode(&self, table: &RangeTable, unit_types: usize) -> Result<Vec<MicroGenome>> {
        if self.len() != unit_types * BITS_PER_TYPE {
            return Err(Error::Encoding(format!(
                "chromosome has {} bits, expected {} for {unit_types} unit type(s)",
                self.len(),
                unit_types * BITS_PER_TYPE
            )));
        }
        self.fields().chunks(PARAM_COUNT).map(|f| table.decode(f)).collect()
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.fields())
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::Encoding(format!("bad hex chromosome: {e}")))?;
        Ok(Self::from_fields(&bytes))
    }
}

impl Serialize for BitChromosome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for BitChromosome {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for BitChromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitChromosome({})", self.to_hex())
    }
}

/// One-point crossover at `cut`: the children swap tails from `cut` on.
pub fn crossover_at(a: &BitChromosome, b: &BitChromosome, cut: usize) -> (BitChromosome, BitChromosome) {
    assert_eq!(a.len(), b.len(), "crossover needs equal lengths");
    let cut = cut.min(a.len());
    let mut c1 = a.bits[..cut].to_vec();
    c1.extend_from_slice(&b.bits[cut..]);
    let mut c2 = b.bits[..cut].to_vec();
    c2.extend_from_slice(&a.bits[cut..]);
    (BitChromosome::from_bits(c1), BitChromosome::from_bits(c2))
}

/// With probability `rate`, one-point crossover at a cut drawn uniformly from
/// `1..len`; otherwise copies of the parents.
pub fn crossover(a: &BitChromosome, b: &BitChromosome, rate: f64, rng: &mut impl Rng) -> (BitChromosome, BitChromosome) {
    assert_eq!(a.len(), b.len(), "crossover needs equal lengths");
    if a.len() >= 2 && rng.gen_bool(rate) {
        let cut = rng.gen_range(1..a.len());
        crossover_at(a, b, cut)
    } else {
        (a.clone(), b.clone())
    }
}

/// Flips each bit independently with probability `rate`.
pub fn mutate(c: &BitChromosome, rate: f64, rng: &mut impl Rng) -> BitChromosome {
    BitChromosome::from_bits(c.bits.iter().map(|b| b ^ rng.gen_bool(rate)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn field_layout_is_msb_first() {
        let c = BitChromosome::from_fields(&[0b1000_0001, 0xff]);
        assert_eq!(c.len(), 16);
        assert!(c.bits()[0] && c.bits()[7] && !c.bits()[1]);
        assert_eq!(c.fields(), vec![0b1000_0001, 0xff]);
        assert_eq!(c.to_hex(), "81ff");
        assert_eq!(BitChromosome::from_hex("81ff").unwrap(), c);
    }

    #[test]
    fn decode_extremes() {
        let t = RangeTable::default();
        let lo = BitChromosome::zeros(96).decode(&t, 1).unwrap();
        let hi = BitChromosome::ones(96).decode(&t, 1).unwrap();
        assert_eq!(lo[0].repulse_exp, -3.0);
        assert_eq!(hi[0].repulse_exp, 0.0);
        assert_eq!(hi[0].target_radius, 640.0);
        assert_eq!(BitChromosome::zeros(192).decode(&t, 2).unwrap().len(), 2);
    }

    #[test]
    fn decode_length_mismatch() {
        let t = RangeTable::default();
        assert!(matches!(BitChromosome::zeros(95).decode(&t, 1), Err(Error::Encoding(_))));
        assert!(BitChromosome::zeros(96).decode(&t, 2).is_err());
    }

    #[test]
    fn crossover_construction() {
        let (c1, c2) = crossover_at(&BitChromosome::zeros(96), &BitChromosome::ones(96), 48);
        assert!(c1.bits()[..48].iter().all(|b| !b) && c1.bits()[48..].iter().all(|b| *b));
        assert!(c2.bits()[..48].iter().all(|b| *b) && c2.bits()[48..].iter().all(|b| !b));
    }

    #[test]
    fn boundary_cuts_copy_parents() {
        let a = BitChromosome::zeros(8);
        let b = BitChromosome::ones(8);
        assert_eq!(crossover_at(&a, &b, 0), (b.clone(), a.clone()));
        assert_eq!(crossover_at(&a, &b, 8), (a.clone(), b.clone()));
    }

    #[test]
    fn disabled_operators_are_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = BitChromosome::random(96, &mut rng);
        let b = BitChromosome::random(96, &mut rng);
        for _ in 0..100 {
            assert_eq!(crossover(&a, &b, 0.0, &mut rng), (a.clone(), b.clone()));
            assert_eq!(mutate(&a, 0.0, &mut rng), a);
        }
        let flipped = mutate(&a, 1.0, &mut rng);
        assert!(flipped.bits().iter().zip(a.bits()).all(|(x, y)| x != y));
    }

    #[test]
    fn sampled_cut_is_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = BitChromosome::zeros(96);
        let b = BitChromosome::ones(96);
        for _ in 0..500 {
            let (c1, _) = crossover(&a, &b, 1.0, &mut rng);
            let ones = c1.count_ones();
            assert!((1..96).contains(&ones), "cut produced {ones} ones");
        }
    }
}
