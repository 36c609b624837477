use std::ops::{Add, Div, Neg, Sub};

use crate::float::Real;

/// A 3-vector in the working precision.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<F: Real = f64> {
    pub x: F,
    pub y: F,
    pub z: F,
}

/// Curve vertices are stored in double precision.
pub type Point3 = Vec3<f64>;

impl<F: Real> Vec3<F> {
    #[inline]
    pub const fn new(x: F, y: F, z: F) -> Self {
        Vec3 { x, y, z }
    }

    #[inline]
    pub fn dot(self, o: Self) -> F {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Self) -> Self {
        Vec3 {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    #[inline]
    pub fn norm(self) -> F {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn scale(self, s: F) -> Self {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Componentwise conversion (rounds when narrowing).
    pub fn cast<G: Real>(self) -> Vec3<G> {
        Vec3 {
            x: G::from_f64(self.x.to_f64()),
            y: G::from_f64(self.y.to_f64()),
            z: G::from_f64(self.z.to_f64()),
        }
    }

    pub fn scale_pow2(self, k: i32) -> Self {
        Vec3 {
            x: self.x.scale_pow2(k),
            y: self.y.scale_pow2(k),
            z: self.z.scale_pow2(k),
        }
    }
}

impl<F: Real> Add for Vec3<F> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<F: Real> Sub for Vec3<F> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<F: Real> Div<F> for Vec3<F> {
    type Output = Self;
    #[inline]
    fn div(self, d: F) -> Self {
        Vec3::new(self.x / d, self.y / d, self.z / d)
    }
}

impl<F: Real> Neg for Vec3<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl<F: Real> From<[F; 3]> for Vec3<F> {
    fn from(a: [F; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl<F: Real> From<Vec3<F>> for [F; 3] {
    fn from(v: Vec3<F>) -> Self {
        [v.x, v.y, v.z]
    }
}
