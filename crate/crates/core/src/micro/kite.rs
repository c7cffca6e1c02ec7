//! Hit-and-run state machine for ranged units.
//!
//! After firing, a unit that has a threat closer than the trigger distance
//! holds position for the wait time, then retreats a fixed distance directly
//! away from that threat. On reaching the waypoint it returns to engaging.
//! A retreating unit does not fire, and kiting never starts while the weapon
//! is ready.

use crate::geom::Vec2;
use crate::unit::{BehaviorMode, UnitState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KiteParams {
    pub trigger_distance: f64,
    pub wait_frames: f64,
    pub retreat_distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KiteAction {
    /// Kiting has nothing to say this frame.
    None,
    /// Stand still while waiting out the post-fire delay.
    Hold,
    /// Move toward the waypoint; `arrives` is set when it is reached this frame.
    Retreat { waypoint: Vec2, arrives: bool },
}

impl KiteAction {
    pub fn mode(&self) -> Option<BehaviorMode> {
        match self {
            KiteAction::None => None,
            KiteAction::Hold => Some(BehaviorMode::Engage),
            KiteAction::Retreat { arrives: true, .. } => Some(BehaviorMode::Engage),
            KiteAction::Retreat { arrives: false, .. } => Some(BehaviorMode::KiteRetreat),
        }
    }
}

/// Advances the kiting state machine for `unit` at `frame`.
///
/// `threat` is the nearest live enemy; `speed` the unit's move speed and
/// `map` the map extent used to clamp retreat waypoints.
pub fn kite_decision(
    unit: &UnitState,
    frame: u32,
    speed: f64,
    threat: Option<Vec2>,
    params: &KiteParams,
    map: Vec2,
) -> KiteAction {
    if unit.mode == BehaviorMode::KiteRetreat {
        if let Some(wp) = unit.kite_waypoint {
            let d = unit.position.distance(wp);
            if d > 0.0 {
                return KiteAction::Retreat {
                    waypoint: wp,
                    arrives: d <= speed,
                };
            }
        }
        return KiteAction::None;
    }

    let Some(threat) = threat else {
        return KiteAction::None;
    };
    let Some(elapsed) = unit.kite_timer(frame) else {
        return KiteAction::None;
    };
    if unit.cooldown_remaining == 0 || unit.position.distance(threat) >= params.trigger_distance {
        return KiteAction::None;
    }
    if f64::from(elapsed) < params.wait_frames {
        return KiteAction::Hold;
    }
    let away = (unit.position - threat).normalized();
    let waypoint = (unit.position + away * params.retreat_distance)
        .quantize_round()
        .clamp_to(map.x, map.y);
    let d = unit.position.distance(waypoint);
    if d == 0.0 {
        // Zero retreat distance or pinned against a wall: enter and leave
        // the retreat in the same frame.
        return KiteAction::None;
    }
    KiteAction::Retreat {
        waypoint,
        arrives: d <= speed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::Side;

    const MAP: Vec2 = Vec2::new(2048.0, 2048.0);

    fn unit(pos: Vec2, last_fired: Option<u32>, cooldown: u32) -> UnitState {
        UnitState {
            id: 0,
            side: Side::Red,
            type_index: 0,
            position: pos,
            hitpoints: 80,
            cooldown_remaining: cooldown,
            mode: BehaviorMode::Engage,
            last_fired,
            kite_waypoint: None,
        }
    }

    fn params(d_k: f64, s_t: f64, d_kb: f64) -> KiteParams {
        KiteParams {
            trigger_distance: d_k,
            wait_frames: s_t,
            retreat_distance: d_kb,
        }
    }

    #[test]
    fn distant_threat_does_not_trigger() {
        let u = unit(Vec2::new(500.0, 500.0), Some(10), 20);
        let a = kite_decision(&u, 20, 6.4, Some(Vec2::new(700.0, 500.0)), &params(100.0, 0.0, 64.0), MAP);
        assert_eq!(a, KiteAction::None);
    }

    #[test]
    fn zero_retreat_is_a_no_op() {
        let u = unit(Vec2::new(500.0, 500.0), Some(10), 20);
        let a = kite_decision(&u, 20, 6.4, Some(Vec2::new(550.0, 500.0)), &params(100.0, 0.0, 0.0), MAP);
        assert_eq!(a, KiteAction::None);
    }

    #[test]
    fn ready_weapon_never_kites() {
        let u = unit(Vec2::new(500.0, 500.0), Some(10), 0);
        let a = kite_decision(&u, 20, 6.4, Some(Vec2::new(550.0, 500.0)), &params(100.0, 0.0, 64.0), MAP);
        assert_eq!(a, KiteAction::None);
    }

    #[test]
    fn holds_then_retreats_away_from_threat() {
        let u = unit(Vec2::new(500.0, 500.0), Some(100), 25);
        let p = params(100.0, 5.0, 64.0);
        let threat = Some(Vec2::new(550.0, 500.0));
        for f in 101..105 {
            assert_eq!(kite_decision(&u, f, 6.4, threat, &p, MAP), KiteAction::Hold);
        }
        assert_eq!(
            kite_decision(&u, 105, 6.4, threat, &p, MAP),
            KiteAction::Retreat {
                waypoint: Vec2::new(436.0, 500.0),
                arrives: false
            }
        );
    }

    #[test]
    fn waypoint_is_clamped_to_the_map() {
        let u = unit(Vec2::new(10.0, 500.0), Some(0), 25);
        let a = kite_decision(&u, 9, 6.4, Some(Vec2::new(60.0, 500.0)), &params(100.0, 0.0, 64.0), MAP);
        assert_eq!(
            a,
            KiteAction::Retreat {
                waypoint: Vec2::new(0.0, 500.0),
                arrives: false
            }
        );
    }
}
