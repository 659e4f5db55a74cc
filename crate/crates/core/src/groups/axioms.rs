use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{e2_generator, h3_generator, E2Element, H3Element, Matrix3};
use crate::numeric::{rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    H3,
    E2,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::H3 => "h3",
            Group::E2 => "e2",
        })
    }
}

/// Step of the central difference used by [`generators_at_identity`].
pub const GENERATOR_STEP: f64 = 1e-5;

/// The parametrized group element, as a float matrix.
fn param_matrix(group: Group, p: [f64; 3]) -> Matrix3<f64> {
    match group {
        Group::H3 => Matrix3::from_rows([[1.0, p[0], p[1]], [0.0, 1.0, p[2]], [0.0, 0.0, 1.0]]),
        Group::E2 => E2Element::new(p[0], p[1], p[2]).to_matrix(),
    }
}

/// Central-difference derivative of the parametrized matrix at the identity
/// with respect to parameter `index` (1-based).
pub fn generators_at_identity(group: Group, index: usize) -> Matrix3<f64> {
    assert!(
        (1..=3).contains(&index),
        "parameter index must be 1, 2 or 3"
    );
    let h = GENERATOR_STEP;
    let mut plus = [0.0; 3];
    let mut minus = [0.0; 3];
    plus[index - 1] = h;
    minus[index - 1] = -h;
    param_matrix(group, plus)
        .sub(&param_matrix(group, minus))
        .scale(&(1.0 / (2.0 * h)))
}

/// The exact generator the finite difference should reproduce.
pub fn exact_generator(group: Group, index: usize) -> Matrix3<f64> {
    match group {
        Group::H3 => h3_generator(index).map(rational_to_f64),
        Group::E2 => e2_generator(index),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Closure,
    Associativity,
    Identity,
    Inverse,
    /// Parameter-space composition agrees with the matrix product.
    Homomorphism,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Closure,
        Axiom::Associativity,
        Axiom::Identity,
        Axiom::Inverse,
        Axiom::Homomorphism,
    ];
}

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Largest absolute matrix-entry residual, computed exactly.
    Exact(Rational),
    Float(f64),
}

impl Residual {
    pub fn to_f64(&self) -> f64 {
        match self {
            Residual::Exact(r) => rational_to_f64(r),
            Residual::Float(x) => *x,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Residual::Exact(r) if r.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub group: Group,
    pub samples: usize,
    pub seed: u64,
    pub residuals: Vec<(Axiom, Residual)>,
}

impl AxiomReport {
    pub fn residual(&self, axiom: Axiom) -> &Residual {
        &self
            .residuals
            .iter()
            .find(|(a, _)| *a == axiom)
            .expect("every axiom is reported")
            .1
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.random_range(-50..=50);
    let d: i64 = rng.random_range(1..=20);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn random_h3(rng: &mut ChaCha8Rng) -> H3Element {
    H3Element::new(
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
    )
}

fn random_e2(rng: &mut ChaCha8Rng) -> E2Element {
    E2Element::new(
        rng.random_range(-10.0..10.0),
        rng.random_range(-10.0..10.0),
        rng.random_range(0.0..std::f64::consts::TAU),
    )
}

fn max_rational(a: Rational, b: Rational) -> Rational {
    if b > a {
        b
    } else {
        a
    }
}

/// Check the group axioms on `samples` pseudorandom elements (triples for
/// associativity). H3 residuals are exact; E2 residuals are floats.
pub fn axiom_suite(group: Group, samples: usize, seed: u64) -> AxiomReport {
    assert!(samples >= 1, "axiom_suite needs at least one sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let residuals = match group {
        Group::H3 => h3_axioms(&mut rng, samples),
        Group::E2 => e2_axioms(&mut rng, samples),
    };
    AxiomReport {
        group,
        samples,
        seed,
        residuals,
    }
}

fn h3_axioms(rng: &mut ChaCha8Rng, samples: usize) -> Vec<(Axiom, Residual)> {
    let mut worst = [(); 5].map(|_| Rational::zero());
    let e = H3Element::identity();
    let diff = |a: &H3Element, b: &H3Element| a.to_matrix().max_abs_diff(&b.to_matrix());
    for _ in 0..samples {
        let (g, h, k) = (random_h3(rng), random_h3(rng), random_h3(rng));
        let prod = g.to_matrix().mul(&h.to_matrix());
        // the product must again be upper unitriangular
        let closure = match H3Element::from_matrix(&prod) {
            Some(_) => Rational::zero(),
            None => (0..3)
                .flat_map(|i| (0..=i).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let target = if i == j {
                        Rational::from(BigInt::from(1))
                    } else {
                        Rational::zero()
                    };
                    (prod.get(i, j) - target).abs()
                })
                .fold(Rational::zero(), max_rational),
        };
        let assoc = diff(&g.compose(&h).compose(&k), &g.compose(&h.compose(&k)));
        let ident = max_rational(diff(&e.compose(&g), &g), diff(&g.compose(&e), &g));
        let inv = max_rational(
            diff(&g.compose(&g.inverse()), &e),
            diff(&g.inverse().compose(&g), &e),
        );
        let hom = g.compose(&h).to_matrix().max_abs_diff(&prod);
        for (slot, r) in worst.iter_mut().zip([closure, assoc, ident, inv, hom]) {
            *slot = max_rational(slot.clone(), r);
        }
    }
    Axiom::ALL
        .iter()
        .copied()
        .zip(worst.into_iter().map(Residual::Exact))
        .collect()
}

fn e2_axioms(rng: &mut ChaCha8Rng, samples: usize) -> Vec<(Axiom, Residual)> {
    let mut worst = [0.0f64; 5];
    let e = E2Element::identity();
    let diff = |a: &E2Element, b: &E2Element| a.to_matrix().max_abs_diff(&b.to_matrix());
    for _ in 0..samples {
        let (g, h, k) = (random_e2(rng), random_e2(rng), random_e2(rng));
        let prod = g.to_matrix().mul(&h.to_matrix());
        // rotation block orthogonal with unit determinant, bottom row (0, 0, 1)
        let (a, b, c, d) = (
            *prod.get(0, 0),
            *prod.get(0, 1),
            *prod.get(1, 0),
            *prod.get(1, 1),
        );
        let closure = [
            (a * a + c * c - 1.0).abs(),
            (b * b + d * d - 1.0).abs(),
            (a * b + c * d).abs(),
            (a * d - b * c - 1.0).abs(),
            prod.get(2, 0).abs(),
            prod.get(2, 1).abs(),
            (prod.get(2, 2) - 1.0).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        let assoc = diff(&g.compose(&h).compose(&k), &g.compose(&h.compose(&k)));
        let ident = diff(&e.compose(&g), &g).max(diff(&g.compose(&e), &g));
        let inv = diff(&g.compose(&g.inverse()), &e).max(diff(&g.inverse().compose(&g), &e));
        let hom = g.compose(&h).to_matrix().max_abs_diff(&prod);
        for (slot, r) in worst.iter_mut().zip([closure, assoc, ident, inv, hom]) {
            *slot = slot.max(r);
        }
    }
    Axiom::ALL
        .iter()
        .copied()
        .zip(worst.into_iter().map(Residual::Float))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_difference_generators_match() {
        for group in [Group::H3, Group::E2] {
            for i in 1..=3 {
                let fd = generators_at_identity(group, i);
                let exact = exact_generator(group, i);
                assert!(fd.max_abs_diff(&exact) < 1e-8, "{group} index {i}");
            }
        }
        let a = generators_at_identity(Group::H3, 1);
        assert!((a.get(0, 1) - 1.0).abs() < 1e-8);
        let rot = generators_at_identity(Group::E2, 3);
        assert!((rot.get(0, 1) + 1.0).abs() < 1e-8 && (rot.get(1, 0) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn h3_axioms_are_exact() {
        let r = axiom_suite(Group::H3, 100, 7);
        assert!(r.residuals.iter().all(|(_, x)| x.is_exact_zero()), "{r:?}");
    }

    #[test]
    fn e2_axioms_within_tolerance() {
        let r = axiom_suite(Group::E2, 100, 7);
        for (axiom, x) in &r.residuals {
            assert!(x.to_f64() < 1e-12, "{axiom:?}: {x:?}");
        }
    }

    #[test]
    fn same_seed_same_report() {
        assert_eq!(axiom_suite(Group::E2, 10, 3), axiom_suite(Group::E2, 10, 3));
    }
}
