use crate::coevo::{EvolutionMode, GaSettings};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::harness::{BaselineSearch, FormationGeometry, FormationKind, FormationSpec};
use crate::micro::RangeTable;
use crate::sim::{RosterEntry, SkirmishConfig};
use crate::unit::{Side, UnitTypeSpec};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// Red vultures against blue zealots, 96-bit chromosomes.
    OneType,
    /// Vultures and zealots on both sides, 192-bit chromosomes.
    TwoType,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SkirmishSection {
    pub map_width: f64,
    pub map_height: f64,
    pub max_frames: u32,
    pub vultures: usize,
    pub zealots: usize,
    pub formation: FormationKind,
    pub placement_seed: u64,
    pub geometry: FormationGeometry,
    pub normalize_damage: bool,
    pub cell_size: f64,
    pub retarget_interval: u32,
    pub vulture: UnitTypeSpec,
    pub zealot: UnitTypeSpec,
}

impl Default for SkirmishSection {
    fn default() -> Self {
        SkirmishSection {
            map_width: 2048.0,
            map_height: 2048.0,
            max_frames: 2500,
            vultures: 5,
            zealots: 25,
            formation: FormationKind::Circle,
            placement_seed: 0,
            geometry: FormationGeometry::default(),
            normalize_damage: false,
            cell_size: 32.0,
            retarget_interval: 8,
            vulture: UnitTypeSpec::vulture(),
            zealot: UnitTypeSpec::zealot(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BaselineSection {
    pub random_count: usize,
    pub candidate_count: usize,
    /// Defaults to 0.90 for one type per side and 0.99 for two.
    pub threshold: Option<f64>,
}

impl Default for BaselineSection {
    fn default() -> Self {
        BaselineSection {
            random_count: 200,
            candidate_count: 100,
            threshold: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RobustnessSection {
    pub formations: Vec<FormationKind>,
    pub start_sets: u32,
}

impl Default for RobustnessSection {
    fn default() -> Self {
        RobustnessSection {
            formations: FormationKind::ALL.to_vec(),
            start_sets: 10,
        }
    }
}

/// Everything a run needs. Every field has a default, so an empty file is a
/// valid configuration; unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub master_seed: u64,
    pub output_dir: PathBuf,
    pub ga: GaSettings,
    pub skirmish: SkirmishSection,
    pub ranges: RangeTable,
    pub baseline: BaselineSection,
    pub robustness: RobustnessSection,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            scenario: Scenario::OneType,
            master_seed: 0,
            output_dir: PathBuf::from("runs/default"),
            ga: GaSettings::default(),
            skirmish: SkirmishSection::default(),
            ranges: RangeTable::default(),
            baseline: BaselineSection::default(),
            robustness: RobustnessSection::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::parse("config", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        self.ga.validate()?;
        self.ranges.validate()?;
        if self.skirmish.max_frames == 0 {
            return Err(Error::validation("skirmish.max_frames", "must be > 0"));
        }
        if let Some(t) = self.baseline.threshold {
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::validation("baseline.threshold", format!("{t} outside [0, 1]")));
            }
        }
        if self.baseline.random_count == 0 {
            return Err(Error::validation("baseline.random_count", "must be >= 1"));
        }
        if self.baseline.candidate_count == 0 {
            return Err(Error::validation("baseline.candidate_count", "must be >= 1"));
        }
        if self.robustness.start_sets == 0 {
            return Err(Error::validation("robustness.start_sets", "must be >= 1"));
        }
        if self.robustness.formations.is_empty() {
            return Err(Error::validation("robustness.formations", "must list at least one formation"));
        }
        self.skirmish_config().validate()
    }

    pub fn skirmish_config(&self) -> SkirmishConfig {
        let s = &self.skirmish;
        let v = RosterEntry::new(s.vulture.clone(), s.vultures);
        let z = RosterEntry::new(s.zealot.clone(), s.zealots);
        let mut cfg = match self.scenario {
            Scenario::OneType => SkirmishConfig::new(vec![v], vec![z]),
            Scenario::TwoType => SkirmishConfig::new(vec![v.clone(), z.clone()], vec![v, z]),
        };
        cfg.map_size = Vec2::new(s.map_width, s.map_height);
        cfg.max_frames = s.max_frames;
        cfg.formation = FormationSpec {
            kind: s.formation,
            placement_seed: s.placement_seed,
            geometry: s.geometry,
        };
        cfg.normalize_damage = s.normalize_damage;
        cfg.cell_size = s.cell_size;
        cfg.retarget_interval = s.retarget_interval;
        cfg
    }

    pub fn baseline_threshold(&self) -> f64 {
        self.baseline.threshold.unwrap_or(match self.scenario {
            Scenario::OneType => 0.90,
            Scenario::TwoType => 0.99,
        })
    }

    pub fn baseline_search(&self, side: Side) -> BaselineSearch {
        BaselineSearch {
            side,
            random_count: self.baseline.random_count,
            candidate_count: self.baseline.candidate_count,
            threshold: self.baseline_threshold(),
            seed: self.master_seed,
        }
    }

    pub fn with_mode(mut self, mode: EvolutionMode) -> Self {
        self.ga.mode = mode;
        self
    }

    /// Short digest of every setting that influences results (the output
    /// directory is excluded).
    pub fn hash(&self) -> String {
        let mut c = self.clone();
        c.output_dir = PathBuf::new();
        let canonical = serde_json::to_string(&c).expect("config serializes");
        hex::encode(&Sha256::digest(canonical.as_bytes())[..8])
    }
}

/// Reads, parses and validates a TOML run configuration.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    RunConfig::from_toml(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_is_all_defaults() {
        let c = RunConfig::from_toml("").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(c.ga.population_size, 50);
        assert_eq!(c.ga.generations, 60);
        assert_eq!(c.ga.crossover_rate, 0.95);
        assert_eq!(c.ga.mutation_rate, 0.03);
        assert_eq!((c.ga.sample_size, c.ga.hof_size), (5, 5));
        assert_eq!(c.skirmish.max_frames, 2500);
    }

    #[test]
    fn out_of_range_probability_names_field() {
        let e = RunConfig::from_toml("[ga]\ncrossover_rate = 1.5\n").unwrap_err();
        assert!(e.to_string().contains("ga.crossover_rate"), "{e}");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(RunConfig::from_toml("colour = 3\n").is_err());
        assert!(RunConfig::from_toml("[ga]\npop = 3\n").is_err());
    }

    #[test]
    fn round_trips_through_toml() {
        let mut c = RunConfig {
            scenario: Scenario::TwoType,
            ..RunConfig::default()
        };
        c.ga.mode = EvolutionMode::Simple;
        c.baseline.threshold = Some(0.5);
        let back = RunConfig::from_toml(&c.to_toml()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.hash(), c.hash());
    }

    #[test]
    fn hash_ignores_output_dir_only() {
        let a = RunConfig::default();
        let mut b = a.clone();
        b.output_dir = "elsewhere".into();
        assert_eq!(a.hash(), b.hash());
        b.master_seed = 1;
        assert_ne!(a.hash(), b.hash());
    }

    #[test]
    fn two_type_default_gate() {
        let c = RunConfig::from_toml("scenario = \"two-type\"\n").unwrap();
        assert_eq!(c.baseline_threshold(), 0.99);
        assert_eq!(c.skirmish_config().roster(Side::Blue).len(), 2);
    }
}
