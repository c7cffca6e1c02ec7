//! Attractive/repulsive potential fields of the form `c * d^e`.

use crate::geom::Vec2;

use super::MicroGenome;

/// Distances below this are clamped before exponentiation.
pub const MIN_FIELD_DISTANCE: f64 = 0.5;

#[inline]
fn term(c: f64, e: f64, d: f64) -> f64 {
    c * d.max(MIN_FIELD_DISTANCE).powf(e)
}

/// Combined field magnitude `c_a * d^e_a + c_r * d^e_r`.
pub fn pf_force(attract_coeff: f64, attract_exp: f64, repulse_coeff: f64, repulse_exp: f64, d: f64) -> f64 {
    term(attract_coeff, attract_exp, d) + term(repulse_coeff, repulse_exp, d)
}

/// Pull toward `target`. Zero when already there.
pub fn attraction(from: Vec2, target: Vec2, coeff: f64, exp: f64) -> Vec2 {
    let delta = target - from;
    let d = delta.length();
    if d == 0.0 {
        return Vec2::ZERO;
    }
    delta * (term(coeff, exp, d) / d)
}

/// Push away from `other`. Zero for coincident points.
pub fn repulsion(from: Vec2, other: Vec2, coeff: f64, exp: f64) -> Vec2 {
    let delta = from - other;
    let d = delta.length();
    if d == 0.0 {
        return Vec2::ZERO;
    }
    delta * (term(coeff, exp, d) / d)
}

/// Group movement: attraction toward `target` plus repulsion from every
/// friend, clamped to `speed`.
pub fn group_move_vector(position: Vec2, speed: f64, target: Vec2, friends: &[Vec2], genome: &MicroGenome) -> Vec2 {
    let mut v = attraction(position, target, genome.attract_coeff, genome.attract_exp);
    for &f in friends {
        v += repulsion(position, f, genome.repulse_coeff, genome.repulse_exp);
    }
    v.clamp_length(speed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genome(ca: f64, ea: f64, cr: f64, er: f64) -> MicroGenome {
        let mut a = [0.0; 12];
        a[2] = ca;
        a[3] = ea;
        a[4] = cr;
        a[5] = er;
        MicroGenome::from_array(a)
    }

    #[test]
    fn unit_distance_ignores_exponents() {
        assert_eq!(pf_force(3.0, 1.7, 5.0, -2.2, 1.0), 8.0);
    }

    #[test]
    fn direct_substitution() {
        assert_eq!(pf_force(2.0, 1.0, 0.0, 0.0, 3.0), 6.0);
        assert_eq!(pf_force(1.0, 2.0, 4.0, -1.0, 2.0), 6.0);
    }

    #[test]
    fn zero_distance_is_clamped() {
        let f = pf_force(0.0, 0.0, 1.0, -2.0, 0.0);
        assert_eq!(f, 4.0);
    }

    #[test]
    fn fixed_point_at_target() {
        let p = Vec2::new(48.0, 48.0);
        assert_eq!(group_move_vector(p, 6.4, p, &[], &genome(10.0, 1.0, 0.0, 0.0)), Vec2::ZERO);
    }

    #[test]
    fn single_force_points_east() {
        let g = genome(0.01, 1.0, 0.0, 0.0);
        let v = group_move_vector(Vec2::ZERO, 6.4, Vec2::new(100.0, 0.0), &[], &g);
        assert_eq!(v.y, 0.0);
        assert!((v.x - 1.0).abs() < 1e-12);
        let g = genome(2.0, 1.0, 0.0, 0.0);
        let v = group_move_vector(Vec2::ZERO, 6.4, Vec2::new(100.0, 0.0), &[], &g);
        assert!((v.x - 6.4).abs() < 1e-12 && v.y == 0.0);
    }

    #[test]
    fn symmetric_friends_cancel() {
        let g = genome(0.01, 1.0, 8.0, -1.0);
        let p = Vec2::new(500.0, 500.0);
        let friends = [Vec2::new(500.0, 510.0), Vec2::new(500.0, 490.0)];
        let v = group_move_vector(p, 6.4, Vec2::new(600.0, 500.0), &friends, &g);
        assert_eq!(v.y, 0.0);
        assert!(v.x > 0.0);
    }
}
