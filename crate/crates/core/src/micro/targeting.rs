use crate::geom::Vec2;

/// Chooses an attack target among `enemies` (position, hitpoints) within
/// `radius` of `position`.
///
/// Enemies strictly below `hp_threshold` are preferred, weakest first; without
/// any, the nearest enemy is chosen. Remaining ties go to the nearer enemy,
/// then the lower index. Returns an index into `enemies`.
pub fn choose_attack_target(position: Vec2, enemies: &[(Vec2, u32)], hp_threshold: f64, radius: f64) -> Option<usize> {
    let radius_sq = radius * radius;
    let mut weak: Option<(u32, f64, usize)> = None;
    let mut nearest: Option<(f64, usize)> = None;
    for (i, &(p, hp)) in enemies.iter().enumerate() {
        let d = position.distance_sq(p);
        if d > radius_sq {
            continue;
        }
        if f64::from(hp) < hp_threshold && weak.is_none_or(|(whp, wd, _)| (hp, d) < (whp, wd)) {
            weak = Some((hp, d, i));
        }
        if nearest.is_none_or(|(nd, _)| d < nd) {
            nearest = Some((d, i));
        }
    }
    weak.map(|w| w.2).or(nearest.map(|n| n.1))
}
