//! Planar vector math.
//!
//! Positions and per-frame displacements are kept on a dyadic lattice of
//! `1/QUANTUM` map-units. Sums and differences of lattice values are exact in
//! `f64`, and reflecting across the map's vertical centre line is exact too,
//! so mirrored skirmishes stay bitwise mirrored for their whole duration.

use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Lattice resolution in steps per map-unit.
pub const QUANTUM: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn length(self) -> f64 {
        self.length_sq().sqrt()
    }

    pub fn length_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (other - self).length()
    }

    pub fn distance_sq(self, other: Vec2) -> f64 {
        (other - self).length_sq()
    }

    /// Unit vector, or zero for the zero vector.
    pub fn normalized(self) -> Vec2 {
        let len = self.length();
        if len > 0.0 {
            Vec2::new(self.x / len, self.y / len)
        } else {
            Vec2::ZERO
        }
    }

    /// Scales the vector down so its length is at most `max`.
    pub fn clamp_length(self, max: f64) -> Vec2 {
        let len = self.length();
        if len > max && len > 0.0 {
            let s = max / len;
            Vec2::new(self.x * s, self.y * s)
        } else {
            self
        }
    }

    /// Snaps onto the lattice by truncation toward zero. Never increases the
    /// magnitude of either component and commutes with negation.
    pub fn quantize_trunc(self) -> Vec2 {
        Vec2::new(
            (self.x * QUANTUM).trunc() / QUANTUM,
            (self.y * QUANTUM).trunc() / QUANTUM,
        )
    }

    /// Snaps onto the lattice by rounding half away from zero.
    pub fn quantize_round(self) -> Vec2 {
        Vec2::new(
            (self.x * QUANTUM).round() / QUANTUM,
            (self.y * QUANTUM).round() / QUANTUM,
        )
    }

    pub fn clamp_to(self, width: f64, height: f64) -> Vec2 {
        Vec2::new(self.x.clamp(0.0, width), self.y.clamp(0.0, height))
    }

    pub fn within(self, width: f64, height: f64) -> bool {
        (0.0..=width).contains(&self.x) && (0.0..=height).contains(&self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}
