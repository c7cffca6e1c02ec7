//! Unit classes and per-unit simulation state.

use crate::error::{Error, Result};
use crate::geom::Vec2;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Units with an attack range above this are treated as ranged and may kite.
pub const MELEE_RANGE_LIMIT: f64 = 32.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Red,
    Blue,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Red, Side::Blue];

    pub fn opponent(self) -> Side {
        match self {
            Side::Red => Side::Blue,
            Side::Blue => Side::Red,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Side::Red => 0,
            Side::Blue => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Red => "red",
            Side::Blue => "blue",
        })
    }
}

/// Static combat statistics of a unit class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitTypeSpec {
    pub name: String,
    pub max_hitpoints: u32,
    /// Map-units per frame.
    pub move_speed: f64,
    pub attack_range: f64,
    pub attack_damage: u32,
    /// Frames the weapon stays unavailable after firing.
    pub attack_cooldown: u32,
}

impl UnitTypeSpec {
    /// Fast, fragile ranged unit.
    pub fn vulture() -> Self {
        UnitTypeSpec {
            name: "vulture".into(),
            max_hitpoints: 80,
            move_speed: 6.4,
            attack_range: 160.0,
            attack_damage: 20,
            attack_cooldown: 30,
        }
    }

    /// Slow, durable melee unit.
    pub fn zealot() -> Self {
        UnitTypeSpec {
            name: "zealot".into(),
            max_hitpoints: 160,
            move_speed: 4.0,
            attack_range: 12.0,
            attack_damage: 16,
            attack_cooldown: 22,
        }
    }

    pub fn is_ranged(&self) -> bool {
        self.attack_range > MELEE_RANGE_LIMIT
    }

    pub fn validate(&self) -> Result<()> {
        let field = |f: &str| format!("units.{}.{}", self.name, f);
        if self.max_hitpoints == 0 {
            return Err(Error::validation(field("max_hitpoints"), "must be > 0"));
        }
        if !(self.move_speed > 0.0 && self.move_speed.is_finite()) {
            return Err(Error::validation(field("move_speed"), "must be > 0"));
        }
        if !(self.attack_range >= 0.0 && self.attack_range.is_finite()) {
            return Err(Error::validation(field("attack_range"), "must be >= 0"));
        }
        if self.attack_cooldown < 1 {
            return Err(Error::validation(field("attack_cooldown"), "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum BehaviorMode {
    #[default]
    Approach,
    Engage,
    KiteRetreat,
    Flee,
}

/// Dynamic state of one unit.
///
/// `type_index` points into the owning side's roster, which also selects the
/// genome that drives the unit.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitState {
    pub id: u32,
    pub side: Side,
    pub type_index: usize,
    pub position: Vec2,
    pub hitpoints: u32,
    pub cooldown_remaining: u32,
    pub mode: BehaviorMode,
    /// Frame of the most recent shot; the kite timer is `frame - last_fired`.
    pub last_fired: Option<u32>,
    pub kite_waypoint: Option<Vec2>,
}

impl UnitState {
    pub fn is_alive(&self) -> bool {
        self.hitpoints > 0
    }

    /// Frames since the unit last fired, as seen at `frame`.
    pub fn kite_timer(&self, frame: u32) -> Option<u32> {
        self.last_fired.map(|f| frame.saturating_sub(f))
    }
}
