use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::harness::{FormationKind, FormationSpec};
use crate::unit::{Side, UnitTypeSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RosterEntry {
    pub unit: UnitTypeSpec,
    pub count: usize,
}

impl RosterEntry {
    pub fn new(unit: UnitTypeSpec, count: usize) -> Self {
        RosterEntry { unit, count }
    }
}

/// Score weights for one side: the value of preserving each friendly roster
/// entry and of damaging each enemy roster entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreWeights {
    /// Indexed by the side's own roster entries.
    pub preserve: Vec<f64>,
    /// Indexed by the enemy's roster entries.
    pub damage: Vec<f64>,
}

impl ScoreWeights {
    /// Weights looked up per unit type through `value_of`, which returns
    /// `(preserve, damage)` for a unit class.
    pub fn from_unit_values(
        own: &[RosterEntry],
        enemy: &[RosterEntry],
        value_of: impl Fn(&UnitTypeSpec) -> (f64, f64),
    ) -> Self {
        ScoreWeights {
            preserve: own.iter().map(|e| value_of(&e.unit).0).collect(),
            damage: enemy.iter().map(|e| value_of(&e.unit).1).collect(),
        }
    }
}

/// Default per-type score values: vultures 400 to preserve and 80 to damage,
/// zealots 160 and 160. Unknown types fall back to their maximum hitpoints.
pub fn default_unit_values(unit: &UnitTypeSpec) -> (f64, f64) {
    match unit.name.as_str() {
        "vulture" => (400.0, 80.0),
        "zealot" => (160.0, 160.0),
        _ => {
            let hp = f64::from(unit.max_hitpoints);
            (hp, hp)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkirmishConfig {
    pub map_size: Vec2,
    pub max_frames: u32,
    /// Red then blue.
    pub rosters: [Vec<RosterEntry>; 2],
    pub formation: FormationSpec,
    pub score_weights: [ScoreWeights; 2],
    /// Divide the damage term by each enemy's maximum hitpoints.
    pub normalize_damage: bool,
    /// Influence-map cell edge in map-units.
    pub cell_size: f64,
    /// Frames between attack-location recomputations.
    pub retarget_interval: u32,
}

impl SkirmishConfig {
    pub fn new(red: Vec<RosterEntry>, blue: Vec<RosterEntry>) -> Self {
        let score_weights = [
            ScoreWeights::from_unit_values(&red, &blue, default_unit_values),
            ScoreWeights::from_unit_values(&blue, &red, default_unit_values),
        ];
        SkirmishConfig {
            map_size: Vec2::new(2048.0, 2048.0),
            max_frames: 2500,
            rosters: [red, blue],
            formation: FormationSpec::new(FormationKind::Circle, 0),
            score_weights,
            normalize_damage: false,
            cell_size: 32.0,
            retarget_interval: 8,
        }
    }

    /// Red vultures against blue zealots.
    pub fn one_type(vultures: usize, zealots: usize) -> Self {
        Self::new(
            vec![RosterEntry::new(UnitTypeSpec::vulture(), vultures)],
            vec![RosterEntry::new(UnitTypeSpec::zealot(), zealots)],
        )
    }

    /// Mixed vultures and zealots on both sides.
    pub fn two_type(vultures: usize, zealots: usize) -> Self {
        let roster = vec![
            RosterEntry::new(UnitTypeSpec::vulture(), vultures),
            RosterEntry::new(UnitTypeSpec::zealot(), zealots),
        ];
        Self::new(roster.clone(), roster)
    }

    pub fn roster(&self, side: Side) -> &[RosterEntry] {
        &self.rosters[side.index()]
    }

    pub fn unit_count(&self, side: Side) -> usize {
        self.roster(side).iter().map(|e| e.count).sum()
    }

    pub fn with_formation(mut self, formation: FormationSpec) -> Self {
        self.formation = formation;
        self
    }

    pub fn with_max_frames(mut self, max_frames: u32) -> Self {
        self.max_frames = max_frames;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.map_size.x > 0.0 && self.map_size.y > 0.0) {
            return Err(Error::validation("skirmish.map_size", "must be positive"));
        }
        if self.cell_size.is_nan() || self.cell_size <= 0.0 {
            return Err(Error::validation("skirmish.cell_size", "must be > 0"));
        }
        if self.retarget_interval == 0 {
            return Err(Error::validation("skirmish.retarget_interval", "must be >= 1"));
        }
        for side in Side::BOTH {
            let roster = self.roster(side);
            if roster.is_empty() || roster.iter().any(|e| e.count == 0) {
                return Err(Error::validation(
                    format!("roster.{side}"),
                    "must list at least one unit type with a positive count",
                ));
            }
            for e in roster {
                e.unit.validate()?;
            }
            let w = &self.score_weights[side.index()];
            if w.preserve.len() != roster.len() || w.damage.len() != self.roster(side.opponent()).len() {
                return Err(Error::validation(
                    format!("score_weights.{side}"),
                    "weight count does not match the rosters",
                ));
            }
        }
        Ok(())
    }
}
