use crate::geom::Vec2;
use crate::unit::{BehaviorMode, UnitState, UnitTypeSpec};

use super::{choose_attack_target, flee_decision, group_move_vector, kite_decision, KiteAction, KiteParams, MicroGenome};

/// What a unit sees when deciding. Coordinates are in the deciding side's
/// frame; enemy slices are parallel and list live enemies only.
#[derive(Debug, Clone, Copy)]
pub struct WorldView<'a> {
    pub frame: u32,
    pub map: Vec2,
    /// `(id, position)` of every live friendly unit, possibly including the
    /// deciding unit itself.
    pub friends: &'a [(u32, Vec2)],
    pub enemy_ids: &'a [u32],
    pub enemy_positions: &'a [Vec2],
    /// `(position, hitpoints)` per enemy.
    pub enemy_status: &'a [(Vec2, u32)],
    /// Influence-map attack location for this unit's type, if computed.
    pub attack_location: Option<Vec2>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCommand {
    pub move_vector: Vec2,
    pub attack_target: Option<u32>,
}

impl UnitCommand {
    pub fn hold() -> Self {
        UnitCommand {
            move_vector: Vec2::ZERO,
            attack_target: None,
        }
    }

    pub fn travel(v: Vec2) -> Self {
        UnitCommand {
            move_vector: v.quantize_trunc(),
            attack_target: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decision {
    pub command: UnitCommand,
    pub mode: BehaviorMode,
    pub waypoint: Option<Vec2>,
}

impl Decision {
    fn new(command: UnitCommand, mode: BehaviorMode) -> Self {
        Decision {
            command,
            mode,
            waypoint: None,
        }
    }
}

/// One frame of micro for one unit: flee, else kite, else fight the
/// selected target, else move with the group toward the attack location.
pub fn decide_action(unit: &UnitState, spec: &UnitTypeSpec, view: &WorldView<'_>, genome: &MicroGenome) -> Decision {
    let speed = spec.move_speed;

    if let Some(v) = flee_decision(
        unit.position,
        unit.hitpoints,
        speed,
        view.enemy_positions,
        genome.flee_hp_threshold,
        genome.target_radius,
    ) {
        return Decision::new(UnitCommand::travel(v), BehaviorMode::Flee);
    }

    if spec.is_ranged() {
        let threat = view
            .enemy_positions
            .iter()
            .copied()
            .min_by(|a, b| unit.position.distance_sq(*a).total_cmp(&unit.position.distance_sq(*b)));
        let params = KiteParams {
            trigger_distance: genome.kite_distance,
            wait_frames: genome.kite_wait,
            retreat_distance: genome.kite_back_distance,
        };
        let action = kite_decision(unit, view.frame, speed, threat, &params, view.map);
        match action {
            KiteAction::None => {}
            KiteAction::Hold => return Decision::new(UnitCommand::hold(), BehaviorMode::Engage),
            KiteAction::Retreat { waypoint, arrives } => {
                let v = (waypoint - unit.position).clamp_length(speed);
                let mode = action.mode().expect("retreat has a mode");
                return Decision {
                    command: UnitCommand::travel(v),
                    mode,
                    waypoint: (!arrives).then_some(waypoint),
                };
            }
        }
    }

    if let Some(i) = choose_attack_target(
        unit.position,
        view.enemy_status,
        genome.target_hp_threshold,
        genome.target_radius,
    ) {
        let target = view.enemy_positions[i];
        let d = unit.position.distance(target);
        let command = if d <= spec.attack_range {
            if unit.cooldown_remaining == 0 {
                UnitCommand {
                    move_vector: Vec2::ZERO,
                    attack_target: Some(view.enemy_ids[i]),
                }
            } else {
                UnitCommand::hold()
            }
        } else {
            UnitCommand::travel((target - unit.position).clamp_length(speed))
        };
        return Decision::new(command, BehaviorMode::Engage);
    }

    let goal = view.attack_location.unwrap_or(view.map * 0.5);
    let mut friends = Vec::with_capacity(view.friends.len());
    friends.extend(view.friends.iter().filter(|(id, _)| *id != unit.id).map(|(_, p)| *p));
    let v = group_move_vector(unit.position, speed, goal, &friends, genome);
    Decision::new(UnitCommand::travel(v), BehaviorMode::Approach)
}
