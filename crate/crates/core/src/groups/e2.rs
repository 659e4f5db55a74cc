use std::f64::consts::TAU;
use std::fmt;

use num_traits::Num;

use super::Matrix3;
use crate::numeric::Rational;

/// Rigid motion of the plane: rotate by `theta`, then translate by `(x, y)`.
///
/// `theta` is kept in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct E2Element {
    x: f64,
    y: f64,
    theta: f64,
}

fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if t >= TAU {
        0.0
    } else {
        t
    }
}

impl E2Element {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        E2Element {
            x,
            y,
            theta: wrap_angle(theta),
        }
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Apply to the point `(a, b)`.
    pub fn apply(&self, (a, b): (f64, f64)) -> (f64, f64) {
        let (s, c) = self.theta.sin_cos();
        (a * c - b * s + self.x, a * s + b * c + self.y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &E2Element) -> E2Element {
        let (x, y) = self.apply((other.x, other.y));
        Self::new(x, y, self.theta + other.theta)
    }

    /// Rotate back, then undo the translation.
    pub fn inverse(&self) -> E2Element {
        let (s, c) = self.theta.sin_cos();
        Self::new(
            -(self.x * c + self.y * s),
            self.x * s - self.y * c,
            -self.theta,
        )
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        let (s, c) = self.theta.sin_cos();
        Matrix3::from_rows([[c, -s, self.x], [s, c, self.y], [0.0, 0.0, 1.0]])
    }
}

impl fmt::Display for E2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x={}, y={}, θ={})", self.x, self.y, self.theta)
    }
}

/// Apply `g` to `p`; same as [`E2Element::apply`].
pub fn e2_apply(g: &E2Element, p: (f64, f64)) -> (f64, f64) {
    g.apply(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// `I + t·P_axis`. The translation generators square to zero, so this is the
/// whole exponential.
pub fn e2_exp_translation<T: Clone + Num>(t: T, axis: Axis) -> Matrix3<T> {
    let p = match axis {
        Axis::X => e2_generator::<T>(1),
        Axis::Y => e2_generator::<T>(2),
    };
    Matrix3::identity().add(&p.scale(&t))
}

pub fn e2_exp_rotation(theta: f64) -> Matrix3<f64> {
    E2Element::new(0.0, 0.0, theta).to_matrix()
}

/// Generators of the Euclidean algebra as 3×3 matrices: `1` and `2` are the
/// translations `P_x`, `P_y`; `3` is the rotation.
pub fn e2_generator<T: Clone + Num>(index: usize) -> Matrix3<T> {
    match index {
        1 => Matrix3::unit(0, 2),
        2 => Matrix3::unit(1, 2),
        3 => Matrix3::unit(1, 0).sub(&Matrix3::unit(0, 1)),
        _ => panic!("E2 generator index must be 1, 2 or 3"),
    }
}

/// Exact generators, for the commutation-table checks.
pub fn e2_generator_exact(index: usize) -> Matrix3<Rational> {
    e2_generator(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12
    }

    #[test]
    fn apply_examples() {
        assert_eq!(E2Element::new(1.0, 2.0, 0.0).apply((0.0, 0.0)), (1.0, 2.0));
        assert!(close(
            E2Element::new(0.0, 0.0, FRAC_PI_2).apply((1.0, 0.0)),
            (0.0, 1.0)
        ));
    }

    #[test]
    fn apply_matches_homogeneous_product() {
        let g = E2Element::new(0.3, -1.2, 2.1);
        let (a, b) = (0.7, 1.9);
        let m = g.to_matrix();
        let v = [a, b, 1.0];
        let row = |i: usize| (0..3).map(|k| m.get(i, k) * v[k]).sum::<f64>();
        assert!(close(g.apply((a, b)), (row(0), row(1))));
        assert_eq!(row(2), 1.0);
    }

    #[test]
    fn angle_is_wrapped() {
        let g = E2Element::new(0.0, 0.0, -0.5);
        assert!((g.theta() - (TAU - 0.5)).abs() < 1e-15);
        let h = E2Element::new(0.0, 0.0, 4.0).compose(&E2Element::new(0.0, 0.0, 4.0));
        assert!(h.theta() < TAU && (h.theta() - (8.0 - TAU)).abs() < 1e-12);
    }

    #[test]
    fn translation_exponential() {
        assert_eq!(e2_exp_translation(0.0, Axis::X), Matrix3::identity());
        let m = e2_exp_translation(Rational::from(num_bigint::BigInt::from(3)), Axis::X);
        assert_eq!(m.get(0, 2), &Rational::from(num_bigint::BigInt::from(3)));
        let p: Matrix3<f64> = e2_generator(1).scale(&2.5);
        assert!(p.mul(&p).is_zero());
        let t = e2_exp_translation(0.25, Axis::Y);
        let v = [1.0, 2.0, 1.0];
        let y = (0..3).map(|k| t.get(1, k) * v[k]).sum::<f64>();
        assert_eq!(y, 2.25);
    }

    #[test]
    fn generators_satisfy_algebra() {
        let (x, y, z) = (
            e2_generator_exact(1),
            e2_generator_exact(2),
            e2_generator_exact(3),
        );
        assert!(x.commutator(&y).is_zero());
        assert_eq!(z.commutator(&x), y);
        assert_eq!(y.commutator(&z), x);
    }

    #[test]
    fn translations_commute() {
        let a = e2_exp_translation(crate::numeric::rat(3, 4), Axis::X);
        let b = e2_exp_translation(crate::numeric::rat(-5, 2), Axis::Y);
        assert_eq!(a.mul(&b), b.mul(&a));
    }
}
