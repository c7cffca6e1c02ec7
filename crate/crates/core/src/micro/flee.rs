use crate::geom::Vec2;

/// Flee vector for a unit with `hitpoints` below `hp_threshold` (strict).
///
/// The unit runs at full `speed` directly away from the centroid of enemies
/// within `radius`, or from the nearest enemy when none is that close.
/// Returns `None` when the unit should not flee.
pub fn flee_decision(
    position: Vec2,
    hitpoints: u32,
    speed: f64,
    enemies: &[Vec2],
    hp_threshold: f64,
    radius: f64,
) -> Option<Vec2> {
    if f64::from(hitpoints) >= hp_threshold || enemies.is_empty() {
        return None;
    }
    let radius_sq = radius * radius;
    let (sum, n) = enemies
        .iter()
        .filter(|p| position.distance_sq(**p) <= radius_sq)
        .fold((Vec2::ZERO, 0usize), |(s, n), p| (s + *p, n + 1));
    let threat = if n > 0 {
        sum * (1.0 / n as f64)
    } else {
        *enemies
            .iter()
            .min_by(|a, b| position.distance_sq(**a).total_cmp(&position.distance_sq(**b)))
            .expect("non-empty")
    };
    Some((position - threat).normalized() * speed)
}
