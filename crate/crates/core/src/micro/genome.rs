use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const PARAM_COUNT: usize = 12;

/// Parameter labels in chromosome order.
pub const PARAM_NAMES: [&str; PARAM_COUNT] = [
    "influence_weight",
    "influence_range",
    "attract_coeff",
    "attract_exp",
    "repulse_coeff",
    "repulse_exp",
    "target_hp_threshold",
    "target_radius",
    "kite_distance",
    "kite_wait",
    "kite_back_distance",
    "flee_hp_threshold",
];

/// Decoded micro parameters for one unit type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MicroGenome {
    /// Influence contributed to each cell an enemy occupies.
    pub influence_weight: f64,
    /// Cells beyond which an enemy's influence vanishes.
    pub influence_range: f64,
    pub attract_coeff: f64,
    pub attract_exp: f64,
    pub repulse_coeff: f64,
    pub repulse_exp: f64,
    /// Enemies below this many hitpoints are preferred targets.
    pub target_hp_threshold: f64,
    /// Radius (map-units) searched for attack targets.
    pub target_radius: f64,
    /// Threat distance that triggers kiting.
    pub kite_distance: f64,
    /// Frames to hold position after firing before retreating.
    pub kite_wait: f64,
    /// How far (map-units) a kiting unit retreats.
    pub kite_back_distance: f64,
    /// Units below this many hitpoints flee.
    pub flee_hp_threshold: f64,
}

impl MicroGenome {
    pub fn from_array(v: [f64; PARAM_COUNT]) -> Self {
        MicroGenome {
            influence_weight: v[0],
            influence_range: v[1],
            attract_coeff: v[2],
            attract_exp: v[3],
            repulse_coeff: v[4],
            repulse_exp: v[5],
            target_hp_threshold: v[6],
            target_radius: v[7],
            kite_distance: v[8],
            kite_wait: v[9],
            kite_back_distance: v[10],
            flee_hp_threshold: v[11],
        }
    }

    pub fn to_array(&self) -> [f64; PARAM_COUNT] {
        [
            self.influence_weight,
            self.influence_range,
            self.attract_coeff,
            self.attract_exp,
            self.repulse_coeff,
            self.repulse_exp,
            self.target_hp_threshold,
            self.target_radius,
            self.kite_distance,
            self.kite_wait,
            self.kite_back_distance,
            self.flee_hp_threshold,
        ]
    }
}

impl fmt::Display for MicroGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (name, v)) in PARAM_NAMES.iter().zip(self.to_array()).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={v:.4}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub lo: f64,
    pub hi: f64,
}

impl ParamRange {
    pub const fn new(lo: f64, hi: f64) -> Self {
        ParamRange { lo, hi }
    }

    /// Linear map of an 8-bit field onto `[lo, hi]`.
    pub fn decode(&self, field: u8) -> f64 {
        self.lo + (f64::from(field) / 255.0) * (self.hi - self.lo)
    }

    /// Nearest 8-bit field for `value`, saturating outside the range.
    pub fn encode(&self, value: f64) -> u8 {
        if self.hi == self.lo {
            return 0;
        }
        let t = ((value - self.lo) / (self.hi - self.lo)).clamp(0.0, 1.0);
        (t * 255.0).round() as u8
    }

    pub fn contains(&self, value: f64) -> bool {
        (self.lo..=self.hi).contains(&value)
    }
}

/// Per-parameter ranges for one unit type, in [`PARAM_NAMES`] order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeTable {
    pub influence_weight: ParamRange,
    pub influence_range: ParamRange,
    pub attract_coeff: ParamRange,
    pub attract_exp: ParamRange,
    pub repulse_coeff: ParamRange,
    pub repulse_exp: ParamRange,
    pub target_hp_threshold: ParamRange,
    pub target_radius: ParamRange,
    pub kite_distance: ParamRange,
    pub kite_wait: ParamRange,
    pub kite_back_distance: ParamRange,
    pub flee_hp_threshold: ParamRange,
}

impl Default for RangeTable {
    fn default() -> Self {
        RangeTable {
            influence_weight: ParamRange::new(0.0, 64.0),
            influence_range: ParamRange::new(0.0, 10.0),
            attract_coeff: ParamRange::new(0.0, 64.0),
            attract_exp: ParamRange::new(0.0, 2.0),
            repulse_coeff: ParamRange::new(0.0, 64.0),
            repulse_exp: ParamRange::new(-3.0, 0.0),
            target_hp_threshold: ParamRange::new(0.0, 160.0),
            target_radius: ParamRange::new(0.0, 640.0),
            kite_distance: ParamRange::new(0.0, 256.0),
            kite_wait: ParamRange::new(0.0, 60.0),
            kite_back_distance: ParamRange::new(0.0, 128.0),
            flee_hp_threshold: ParamRange::new(0.0, 160.0),
        }
    }
}

impl RangeTable {
    pub fn ranges(&self) -> [ParamRange; PARAM_COUNT] {
        [
            self.influence_weight,
            self.influence_range,
            self.attract_coeff,
            self.attract_exp,
            self.repulse_coeff,
            self.repulse_exp,
            self.target_hp_threshold,
            self.target_radius,
            self.kite_distance,
            self.kite_wait,
            self.kite_back_distance,
            self.flee_hp_threshold,
        ]
    }

    pub fn decode(&self, fields: &[u8]) -> Result<MicroGenome> {
        if fields.len() != PARAM_COUNT {
            return Err(Error::Encoding(format!(
                "expected {PARAM_COUNT} parameter fields, got {}",
                fields.len()
            )));
        }
        let ranges = self.ranges();
        let mut v = [0.0; PARAM_COUNT];
        for i in 0..PARAM_COUNT {
            v[i] = ranges[i].decode(fields[i]);
        }
        Ok(MicroGenome::from_array(v))
    }

    pub fn encode(&self, genome: &MicroGenome) -> [u8; PARAM_COUNT] {
        let ranges = self.ranges();
        let values = genome.to_array();
        let mut out = [0u8; PARAM_COUNT];
        for i in 0..PARAM_COUNT {
            out[i] = ranges[i].encode(values[i]);
        }
        out
    }

    pub fn contains(&self, genome: &MicroGenome) -> bool {
        self.ranges()
            .iter()
            .zip(genome.to_array())
            .all(|(r, v)| r.contains(v))
    }

    pub fn validate(&self) -> Result<()> {
        for (name, r) in PARAM_NAMES.iter().zip(self.ranges()) {
            if !(r.lo.is_finite() && r.hi.is_finite()) || r.lo > r.hi {
                return Err(Error::validation(
                    format!("ranges.{name}"),
                    format!("need finite lo <= hi, got [{}, {}]", r.lo, r.hi),
                ));
            }
        }
        if self.influence_range.lo < 0.0 {
            return Err(Error::validation("ranges.influence_range", "must be >= 0"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_bounds() {
        let t = RangeTable::default();
        let lo = t.decode(&[0; PARAM_COUNT]).unwrap();
        let hi = t.decode(&[255; PARAM_COUNT]).unwrap();
        for ((r, a), b) in t.ranges().iter().zip(lo.to_array()).zip(hi.to_array()) {
            assert_eq!(a, r.lo);
            assert_eq!(b, r.hi);
        }
    }

    #[test]
    fn field_128_on_0_64() {
        let v = ParamRange::new(0.0, 64.0).decode(128);
        assert!((v - 32.125_490_196).abs() < 1e-6, "{v}");
    }

    #[test]
    fn encode_decode_fixed_point() {
        let t = RangeTable::default();
        for b in 0..=255u8 {
            let g = t.decode(&[b; PARAM_COUNT]).unwrap();
            assert_eq!(t.encode(&g), [b; PARAM_COUNT]);
            assert!(t.contains(&g));
        }
    }

    #[test]
    fn wrong_arity_is_an_encoding_error() {
        assert!(matches!(
            RangeTable::default().decode(&[0; 11]),
            Err(Error::Encoding(_))
        ));
    }
}
