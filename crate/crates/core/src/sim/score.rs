use crate::unit::{Side, UnitState};

use super::SkirmishConfig;

/// The two terms of a side's score, kept apart so each can be checked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreBreakdown {
    /// `sum preserve_w * hp / hp_max` over friendly units.
    pub preserved: f64,
    /// `sum damage_w * (hp_max - hp)` over enemy units (divided by `hp_max`
    /// when damage normalisation is on).
    pub damage: f64,
}

impl ScoreBreakdown {
    pub fn total(&self) -> f64 {
        self.preserved + self.damage
    }
}

/// Damage-based score of `side` for the given unit list. Dead units count
/// with zero hitpoints.
pub fn compute_score(side: Side, units: &[UnitState], config: &SkirmishConfig) -> ScoreBreakdown {
    let weights = &config.score_weights[side.index()];
    let mut preserved = 0.0;
    let mut damage = 0.0;
    for u in units {
        let spec = &config.rosters[u.side.index()][u.type_index].unit;
        let max = f64::from(spec.max_hitpoints);
        if u.side == side {
            preserved += weights.preserve[u.type_index] * (f64::from(u.hitpoints) / max);
        } else {
            let lost = f64::from(spec.max_hitpoints - u.hitpoints);
            damage += if config.normalize_damage {
                weights.damage[u.type_index] * (lost / max)
            } else {
                weights.damage[u.type_index] * lost
            };
        }
    }
    ScoreBreakdown { preserved, damage }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Vec2;
    use crate::unit::BehaviorMode;

    fn unit(side: Side, hp: u32) -> UnitState {
        UnitState {
            id: 0,
            side,
            type_index: 0,
            position: Vec2::ZERO,
            hitpoints: hp,
            cooldown_remaining: 0,
            mode: BehaviorMode::Approach,
            last_fired: None,
            kite_waypoint: None,
        }
    }

    fn state(vultures: &[u32], zealots: &[u32]) -> Vec<UnitState> {
        vultures
            .iter()
            .map(|hp| unit(Side::Red, *hp))
            .chain(zealots.iter().map(|hp| unit(Side::Blue, *hp)))
            .collect()
    }

    #[test]
    fn full_health_no_damage() {
        let cfg = SkirmishConfig::one_type(5, 25);
        let s = compute_score(Side::Red, &state(&[80; 5], &[160; 25]), &cfg);
        assert_eq!(s.total(), 2000.0);
    }

    #[test]
    fn all_dead_both_sides() {
        let cfg = SkirmishConfig::one_type(5, 25);
        let s = compute_score(Side::Red, &state(&[0; 5], &[0; 25]), &cfg);
        assert_eq!(s.total(), 640_000.0);
    }

    #[test]
    fn partial_damage() {
        let cfg = SkirmishConfig::one_type(1, 25);
        let mut z = vec![160; 25];
        z[0] = 80;
        let s = compute_score(Side::Red, &state(&[40], &z), &cfg);
        assert_eq!(s.total(), 13_000.0);
    }

    #[test]
    fn blue_perspective_and_normalized_variant() {
        let mut cfg = SkirmishConfig::one_type(5, 25);
        let units = state(&[0, 0, 80, 80, 80], &[160; 25]);
        // 160 * 25 + 80 * 160
        assert_eq!(compute_score(Side::Blue, &units, &cfg).total(), 4000.0 + 12_800.0);
        cfg.normalize_damage = true;
        assert_eq!(compute_score(Side::Blue, &units, &cfg).total(), 4000.0 + 160.0);
    }
}
