use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::config::SuiteConfig;
use super::report::{CheckRecord, SuiteReport};
use crate::contraction::{
    assoc_legendre, bessel_equation_residual, contracted_relations, contraction_residual,
    jacobi_residual, legendre_ode_residual, mehler_heine_check, polar_ladder_limit, ratios,
    scaled_commutator_check, so3_relations, LimitTestFunction, VectorFieldOp,
};
use crate::error::{Error, Result};
use crate::euclidean::{
    apply_polar_op, bessel_j_real, bessel_zero_bisect, e2_operator_relations,
    flow_genfunc_diagnostic, flow_solve, polar_numeric_crosscheck, translation_genfunc_check,
    translation_genfunc_corrected, verify_bessel_identity, BesselIdentity, CylFunc, CylTerm,
    PolarOp, CROSSCHECK_STEP,
};
use crate::groups::{
    axiom_suite, e2_exp_translation, e2_generator_exact, exact_generator, generators_at_identity,
    h3_generator, Axiom, Axis, Group, H3AlgebraElement, H3Element, Residual,
};
use crate::heisenberg::{
    apply_ladder, discrete_matrix, disentangle_check, hermite_genfunc_check,
    hermite_recurrence_table, hermite_rodrigues_table, ladder_consistency, ladder_relations_hold,
    parity_residual, shift_series, substituted_shift, verify_hermite_identity, DiscreteOp,
    GaussianWeighted, HermiteIdentity, ScaledLadderOp,
};
use crate::numeric::{int, rat, ComplexValue, Polynomial, Rational, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Groups,
    Hermite,
    Bessel,
    Contraction,
    Diagnostics,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [
        SuiteName::Groups,
        SuiteName::Hermite,
        SuiteName::Bessel,
        SuiteName::Contraction,
        SuiteName::Diagnostics,
    ];

    /// `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<SuiteName>> {
        Ok(match s {
            "all" => Self::ALL.to_vec(),
            "groups" => vec![SuiteName::Groups],
            "hermite" => vec![SuiteName::Hermite],
            "bessel" => vec![SuiteName::Bessel],
            "contraction" => vec![SuiteName::Contraction],
            "diagnostics" => vec![SuiteName::Diagnostics],
            _ => {
                return Err(Error::Config(format!(
                    "unknown suite {s:?}; expected groups, hermite, bessel, contraction, diagnostics or all"
                )))
            }
        })
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteName::Groups => "groups",
            SuiteName::Hermite => "hermite",
            SuiteName::Bessel => "bessel",
            SuiteName::Contraction => "contraction",
            SuiteName::Diagnostics => "diagnostics",
        })
    }
}

pub fn run_suite(name: SuiteName, config: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match name {
        SuiteName::Groups => groups_checks(config)?,
        SuiteName::Hermite => hermite_checks(config)?,
        SuiteName::Bessel => bessel_checks(config)?,
        SuiteName::Contraction => contraction_checks(config)?,
        SuiteName::Diagnostics => diagnostics_checks(config)?,
    };
    Ok(SuiteReport::new(name.to_string(), checks))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.random_range(-50i64..=50)),
        BigInt::from(rng.random_range(1i64..=20)),
    )
}

fn groups_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let tol = &cfg.tolerances;
    let samples = cfg.groups.samples;
    let mut out = Vec::new();
    for group in [Group::H3, Group::E2] {
        let rep = axiom_suite(group, samples, cfg.seed);
        for axiom in Axiom::ALL {
            let id = format!("axioms/{group}/{axiom:?}").to_lowercase();
            let params = format!("samples={samples}, seed={}", cfg.seed);
            out.push(match rep.residual(axiom) {
                Residual::Exact(r) => CheckRecord::exact(id, params, r == &int(0), r),
                Residual::Float(x) => CheckRecord::below(id, params, *x, tol.e2_axioms),
            });
        }
        for i in 1..=3 {
            let diff = generators_at_identity(group, i).max_abs_diff(&exact_generator(group, i));
            out.push(CheckRecord::below(
                format!("generators/{group}/{i}"),
                "h=1e-5",
                diff,
                tol.generators,
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let example =
        H3Element::new(int(1), int(2), int(3)).compose(&H3Element::new(int(4), int(5), int(6)));
    out.push(CheckRecord::holds(
        "h3/compose_example",
        "(1,2,3)∘(4,5,6) = (5,13,9)",
        example == H3Element::new(int(5), int(13), int(9)),
    ));
    let e = H3AlgebraElement::new(int(1), int(0), int(1)).exp();
    out.push(CheckRecord::holds(
        "h3/exp_example",
        "exp(1,0,1) = (1,1/2,1)",
        e == H3Element::new(int(1), rat(1, 2), int(1)),
    ));
    let mut exp_ok = true;
    let mut log_ok = true;
    for _ in 0..samples {
        let m = H3AlgebraElement::new(
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        exp_ok &= m.exp().to_matrix() == m.exp_series() && m.to_matrix().pow(3).is_zero();
        log_ok &= m.exp().log() == m;
    }
    out.push(CheckRecord::holds(
        "h3/exp_closed_form",
        format!("samples={samples}"),
        exp_ok,
    ));
    out.push(CheckRecord::holds(
        "h3/log_exp",
        format!("samples={samples}"),
        log_ok,
    ));

    let (a, b, c) = (h3_generator(1), h3_generator(2), h3_generator(3));
    out.push(CheckRecord::holds(
        "h3/relations/[A,B]=0",
        "3x3",
        a.commutator(&b).is_zero(),
    ));
    out.push(CheckRecord::holds(
        "h3/relations/[B,C]=0",
        "3x3",
        b.commutator(&c).is_zero(),
    ));
    out.push(CheckRecord::holds(
        "h3/relations/[A,C]=B",
        "3x3",
        a.commutator(&c) == b,
    ));

    let (x, y, z) = (
        e2_generator_exact(1),
        e2_generator_exact(2),
        e2_generator_exact(3),
    );
    out.push(CheckRecord::holds(
        "e2/relations/[X,Y]=0",
        "3x3",
        x.commutator(&y).is_zero(),
    ));
    out.push(CheckRecord::holds(
        "e2/relations/[Z,X]=Y",
        "3x3",
        z.commutator(&x) == y,
    ));
    out.push(CheckRecord::holds(
        "e2/relations/[Y,Z]=X",
        "3x3",
        y.commutator(&z) == x,
    ));
    out.push(CheckRecord::holds(
        "e2/translation_nilpotent",
        "P_x^2 = P_y^2 = 0",
        x.mul(&x).is_zero() && y.mul(&y).is_zero(),
    ));
    let mut commute = true;
    for _ in 0..samples {
        let (t, s) = (random_rational(&mut rng), random_rational(&mut rng));
        let tx = e2_exp_translation(t, Axis::X);
        let sy = e2_exp_translation(s, Axis::Y);
        commute &= tx.mul(&sy) == sy.mul(&tx);
    }
    out.push(CheckRecord::holds(
        "e2/translations_commute",
        format!("samples={samples}"),
        commute,
    ));
    Ok(out)
}

fn hermite_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let h = &cfg.hermite;
    let max_n = h.max_n;
    let mut out = Vec::new();
    let rod = hermite_rodrigues_table(max_n, max_n)?;
    let rec = hermite_recurrence_table(max_n);
    for n in 0..=max_n {
        let p = format!("n={n}");
        let diff = &rod[n as usize] - &rec[n as usize];
        out.push(CheckRecord::exact(
            format!("rodrigues_vs_recurrence/n={n:03}"),
            p.clone(),
            diff.is_zero(),
            &diff,
        ));
        let par = parity_residual(n, max_n)?;
        out.push(CheckRecord::exact(
            format!("parity/n={n:03}"),
            p.clone(),
            par.is_zero(),
            &par,
        ));
        let mut ids = vec![HermiteIdentity::Ode, HermiteIdentity::DifferentialRelation];
        if n < max_n {
            ids.push(HermiteIdentity::Recursion);
        }
        if n <= h.anticommutator_max_n {
            ids.push(HermiteIdentity::Anticommutator);
        }
        if n <= h.orthonormality_max_n {
            ids.push(HermiteIdentity::Orthonormality);
        }
        for which in ids {
            let r = verify_hermite_identity(which, n, max_n)?;
            let shown = match &r {
                crate::heisenberg::ExactResidual::Polynomial(p) => p.to_string(),
                crate::heisenberg::ExactResidual::Scalar(s) => s.to_string(),
            };
            out.push(CheckRecord::exact(
                format!("{}/n={n:03}", which.id()),
                p.clone(),
                r.is_zero(),
                shown,
            ));
        }
    }

    let dim = h.discrete_dim;
    let am = discrete_matrix(DiscreteOp::AMinus, dim);
    let ap = discrete_matrix(DiscreteOp::APlus, dim);
    let anti = am.anticommutator(&ap);
    let spectrum_ok = anti.as_ref().is_some_and(|m| {
        m.is_diagonal()
            && (0..=dim - 2).all(|n| m.get(n, n).to_rational() == Some(int(2 * n as i64 + 1)))
    });
    out.push(CheckRecord::holds(
        "discrete/anticommutator_spectrum",
        format!("N={dim}, n<={}", dim - 2),
        spectrum_ok,
    ));
    let comm =
        discrete_matrix(DiscreteOp::AMinus, 8).commutator(&discrete_matrix(DiscreteOp::APlus, 8));
    let edge_ok = comm.as_ref().is_some_and(|m| {
        m.is_diagonal()
            && (0..7).all(|n| m.get(n, n).to_rational() == Some(int(1)))
            && m.get(7, 7).to_rational() == Some(int(-7))
    });
    out.push(CheckRecord::holds(
        "discrete/commutator_truncation",
        "N=8",
        edge_ok,
    ));

    let order = h.genfunc_order.min(max_n as usize);
    let g = hermite_genfunc_check(order, max_n)?;
    out.push(CheckRecord::holds(
        "genfunc/exp(2xt-t^2)",
        format!("K={order}"),
        g.is_zero(),
    ));
    let d = disentangle_check(h.disentangle_order)?;
    out.push(CheckRecord::holds(
        "disentangle",
        format!("K={}", h.disentangle_order),
        d.is_zero(),
    ));
    for n in 0..=8.min(max_n) {
        let ok = shift_series(&rod[n as usize], n as usize)
            == substituted_shift(&rod[n as usize], n as usize);
        out.push(CheckRecord::holds(
            format!("shift_series/n={n:03}"),
            format!("K={n}"),
            ok,
        ));
    }
    out.push(CheckRecord::holds(
        "ladder/annihilates_ground",
        "b- (1 w) = 0",
        apply_ladder(ScaledLadderOp::BMinus, &GaussianWeighted::ground())
            .p
            .is_zero(),
    ));
    out.push(CheckRecord::holds(
        "ladder/relations",
        format!("degree<={}", h.operator_degree),
        ladder_relations_hold(h.operator_degree),
    ));
    for n in 0..h.orthonormality_max_n.min(max_n) {
        out.push(CheckRecord::holds(
            format!("ladder/consistency/n={n:03}"),
            format!("n={n}"),
            ladder_consistency(n, max_n)?,
        ));
    }
    Ok(out)
}

fn fmt_c(t: ComplexValue) -> String {
    format!("{}{:+}i", t.re, t.im)
}

fn bessel_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let b = &cfg.bessel;
    let tol = &cfg.tolerances;
    let mut out = Vec::new();
    for which in BesselIdentity::ALL {
        for &n in &b.orders {
            for &r in &b.radii {
                let res = verify_bessel_identity(which, n, r)?;
                let gate = if which == BesselIdentity::Ode && r <= 0.1 {
                    tol.bessel_ode_small_r
                } else {
                    tol.bessel
                };
                out.push(CheckRecord::below(
                    format!("identity/{}/n={n:+03}/r={r:07.3}", which.id()),
                    format!("n={n}, r={r}"),
                    res,
                    gate,
                ));
            }
        }
    }
    for op in [PolarOp::PPlus, PolarOp::PMinus] {
        for &n in &b.crosscheck_orders {
            for &r in &b.crosscheck_radii {
                for &phi in &b.crosscheck_angles {
                    let res = polar_numeric_crosscheck(op, n, r, phi, CROSSCHECK_STEP)?;
                    out.push(CheckRecord::below(
                        format!("crosscheck/{op:?}/n={n:+03}/r={r:07.3}/phi={phi:.4}")
                            .to_lowercase(),
                        format!("n={n}, r={r}, phi={phi}, h={CROSSCHECK_STEP}"),
                        res,
                        tol.crosscheck,
                    ));
                }
            }
        }
    }
    let f = CylFunc::from_terms([
        CylTerm {
            n: -2,
            coeff: ComplexValue::new(0.5, -1.0),
        },
        CylTerm {
            n: 0,
            coeff: ComplexValue::new(1.0, 0.0),
        },
        CylTerm {
            n: 3,
            coeff: ComplexValue::new(0.0, 2.0),
        },
    ]);
    let pm = apply_polar_op(PolarOp::PMinus, &apply_polar_op(PolarOp::PPlus, &f));
    let mp = apply_polar_op(PolarOp::PPlus, &apply_polar_op(PolarOp::PMinus, &f));
    out.push(CheckRecord::holds(
        "polar_ladder/p-p+=p+p-=1",
        "orders -2,0,3",
        pm == f && mp == f,
    ));
    let lz_ok = apply_polar_op(PolarOp::Lz, &CylFunc::basis(0)).is_zero()
        && apply_polar_op(PolarOp::Lz, &CylFunc::basis(4))
            == CylFunc::from_terms([CylTerm {
                n: 4,
                coeff: ComplexValue::new(4.0, 0.0),
            }]);
    out.push(CheckRecord::holds(
        "polar_ladder/lz_eigenvalue",
        "n=0,4",
        lz_ok,
    ));
    for c in e2_operator_relations(b.operator_degree) {
        out.push(CheckRecord::holds(
            format!("e2_operators/{}", c.name.replace(' ', "")),
            format!("degree<={}", b.operator_degree),
            c.holds,
        ));
    }
    let z = bessel_zero_bisect(0, 2.0, 3.0)?;
    out.push(CheckRecord::below(
        "bessel_zero/j0",
        format!("z={z:.12}"),
        bessel_j_real(0, z)?.abs(),
        tol.bessel,
    ));

    for &n in &b.genfunc_orders {
        for &r in &b.genfunc_radii {
            for &phi in &b.genfunc_angles {
                for t in &b.genfunc_t {
                    let t = ComplexValue::new(t[0], t[1]);
                    let key = format!("n={n:+03}/r={r:07.3}/phi={phi:.4}/t={}", fmt_c(t));
                    let params = format!(
                        "n={n}, r={r}, phi={phi}, t={}, M={}",
                        fmt_c(t),
                        b.genfunc_terms
                    );
                    out.push(
                        match translation_genfunc_check(n, r, phi, t, b.genfunc_terms) {
                            Ok(res) => CheckRecord::below(
                                format!("genfunc/printed/{key}"),
                                params.clone(),
                                res,
                                tol.genfunc,
                            ),
                            Err(Error::BranchAmbiguity { re, im }) => CheckRecord::skipped(
                                format!("genfunc/printed/{key}"),
                                params.clone(),
                                format!("branch guard: radicand {re:e}{im:+e}i"),
                            ),
                            Err(e) => return Err(e),
                        },
                    );
                    let res = translation_genfunc_corrected(n, r, phi, t, b.genfunc_terms)?;
                    out.push(CheckRecord::below(
                        format!("genfunc/corrected/{key}"),
                        params,
                        res,
                        tol.genfunc,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Test polynomials for the contraction rate. The residual at the tangent
/// point is `y f_z / R` in local coordinates, so each has a term linear in `z`.
fn contraction_rate_polys() -> Vec<(&'static str, Polynomial)> {
    let (x, y, z) = (
        Polynomial::var(Var::X),
        Polynomial::var(Var::Y),
        Polynomial::var(Var::Z),
    );
    vec![
        ("xz", &x * &z),
        ("x^2y+yz", &(&x * &x) * &y + &y * &z),
        ("x^2z+yz^3", &(&x * &x) * &z + &y * &z.pow(3)),
        ("xy^2z+z^2", &(&x * &y.pow(2)) * &z + z.pow(2)),
        (
            "x^3yz-z^6+y^2z",
            &(&x.pow(3) * &y) * &z - z.pow(6) + &y.pow(2) * &z,
        ),
    ]
}

fn contraction_zero_polys() -> Vec<(&'static str, Polynomial)> {
    let (x, y) = (Polynomial::var(Var::X), Polynomial::var(Var::Y));
    vec![
        ("1", Polynomial::one()),
        ("y", y.clone()),
        ("x^2y", &(&x * &x) * &y),
        ("x^3y^3", &x.pow(3) * &y.pow(3)),
    ]
}

/// Largest ratio; a non-finite ratio (zero or NaN residual) counts as infinite.
fn worst_ratio(q: &[f64]) -> f64 {
    q.iter()
        .map(|&x| if x.is_finite() { x } else { f64::INFINITY })
        .fold(0.0, f64::max)
}

fn contraction_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let c = &cfg.contraction;
    let tol = &cfg.tolerances;
    let mut out = Vec::new();
    for rel in so3_relations(6) {
        out.push(CheckRecord::holds(
            format!("so3/{}", rel.name.replace(' ', "")),
            "degree<=6",
            rel.holds,
        ));
    }
    let (lx, ly, lz) = (
        VectorFieldOp::lx(),
        VectorFieldOp::ly(),
        VectorFieldOp::lz(),
    );
    out.push(CheckRecord::holds(
        "so3/jacobi",
        "Lx,Ly,Lz",
        jacobi_residual(&lx, &ly, &lz).is_zero(),
    ));
    for &r in &c.scaled_r {
        for rel in scaled_commutator_check(&int(r as i64)) {
            out.push(CheckRecord::holds(
                format!("scaled/R={r:05}/{}", rel.name.replace(' ', "")),
                format!("R={r}"),
                rel.holds,
            ));
        }
    }
    for rel in contracted_relations() {
        out.push(CheckRecord::holds(
            format!("contracted/{}", rel.name.replace(' ', "")),
            "x,y",
            rel.holds,
        ));
    }

    let rs: Vec<Rational> = c.r_list.iter().map(|&r| int(r as i64)).collect();
    let r_desc = format!("R={:?}", c.r_list);
    for (name, f) in contraction_rate_polys() {
        let res: Vec<f64> = contraction_residual(&f, &rs)?
            .into_iter()
            .map(|x| x.1)
            .collect();
        let dev = ratios(&res)
            .iter()
            .map(|q| {
                if q.is_finite() {
                    (q - 0.5).abs()
                } else {
                    f64::INFINITY
                }
            })
            .fold(0.0, f64::max);
        out.push(
            CheckRecord::below(
                format!("contraction_rate/{name}"),
                r_desc.clone(),
                dev,
                tol.contraction_ratio_band,
            )
            .with_note(format!(
                "max |ratio - 0.5|; residual at R={} is {:.3e}",
                c.r_list[c.r_list.len() - 1],
                res[res.len() - 1]
            )),
        );
    }
    for (name, f) in contraction_zero_polys() {
        let res = contraction_residual(&f, &rs)?;
        let zero = res.iter().all(|x| x.1 == 0.0);
        out.push(CheckRecord::holds(
            format!("contraction_zero/{name}"),
            r_desc.clone(),
            zero,
        ));
    }

    let big_r: Vec<f64> = c.r_list.iter().map(|&r| r as f64).collect();
    for &n in &c.polar_orders {
        for &r in &c.polar_radii {
            let res: Vec<f64> = polar_ladder_limit(LimitTestFunction::Bessel(n), r, 0.4, &big_r)?
                .into_iter()
                .map(|x| x.1)
                .collect();
            let q = ratios(&res);
            let worst = worst_ratio(&q);
            let monotone = res.windows(2).all(|w| w[1] < w[0]);
            let mut rec = CheckRecord::below(
                format!("polar_limit/n={n:+03}/r={r:05.2}"),
                format!("n={n}, r={r}, phi=0.4, {r_desc}"),
                worst,
                tol.polar_ratio,
            )
            .with_note(format!("worst ratio per doubling; monotone={monotone}"));
            if !monotone {
                rec.status = super::report::Status::Fail;
            }
            out.push(rec);
        }
    }
    let constant = polar_ladder_limit(LimitTestFunction::Constant, 1.0, 0.0, &big_r)?;
    out.push(CheckRecord::holds(
        "polar_limit/constant",
        r_desc.clone(),
        constant.iter().all(|x| x.1 == 0.0),
    ));

    let l_desc = format!("l={:?}", c.l_list);
    for &m in &c.legendre_orders {
        for &r in &c.radii {
            let res: Vec<f64> = c
                .l_list
                .iter()
                .map(|&l| legendre_ode_residual(l, m, r))
                .collect::<Result<_>>()?;
            let worst = worst_ratio(&ratios(&res));
            let id = format!("legendre_rate/m={m}/r={r:05.2}");
            let params = format!("m={m}, r={r}, {l_desc}");
            let mut rec = CheckRecord::at_most(id, params.clone(), worst, tol.legendre_ratio)
                .with_note("worst ratio per doubling, gate ratio <= 0.5");
            if m > 0 {
                rec = rec.with_note("worst ratio per doubling, gate ratio <= 0.5; the J_m(r)/l leading term carries an O(1/l^2) correction of the same sign");
            }
            out.push(rec);
            let errs = mehler_heine_check(m, r, &c.l_list)?;
            let j = bessel_j_real(m as i32, r)?;
            let gate = tol.mehler_heine_rel * j.abs() + tol.mehler_heine_abs;
            let last = errs[errs.len() - 1].1;
            let decreasing = errs.windows(2).all(|w| w[1].1 < w[0].1);
            let mut rec = CheckRecord::below(
                format!("mehler_heine/m={m}/r={r:05.2}"),
                params.clone(),
                last,
                gate,
            )
            .with_note(format!("scaling l^-m; error decreasing={decreasing}"));
            if !decreasing {
                rec.status = super::report::Status::Fail;
            }
            out.push(rec);
            out.push(CheckRecord::below(
                format!("bessel_equation/m={m}/r={r:05.2}"),
                format!("m={m}, r={r}"),
                bessel_equation_residual(m, r)?,
                tol.bessel_equation,
            ));
        }
    }
    let mut closed = 0.0f64;
    for x in [-0.9f64, -0.2, 0.0, 0.4, 1.0] {
        closed = closed.max((assoc_legendre(2, 0, x)? - (3.0 * x * x - 1.0) / 2.0).abs());
        closed = closed.max((assoc_legendre(2, 1, x)? - 3.0 * x * (1.0 - x * x).sqrt()).abs());
    }
    out.push(CheckRecord::below(
        "legendre/closed_forms",
        "l=2, m=0,1",
        closed,
        1e-12,
    ));
    Ok(out)
}

/// Evaluation points for the flow-based generating function diagnostic.
pub const FLOW_DIAGNOSTIC_POINTS: [(i32, f64, f64, f64); 4] = [
    (0, 2.0, 0.5, 0.2),
    (1, 3.0, 1.0, 0.1),
    (2, 1.0, 0.7, 0.3),
    (0, 5.0, 1.0471975511965976, -0.4),
];

fn diagnostics_checks(cfg: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let b = &cfg.bessel;
    let mut out = Vec::new();
    for (n, r, phi, t) in FLOW_DIAGNOSTIC_POINTS {
        let key = format!("n={n:+03}/r={r:07.3}/phi={phi:.4}/t={t:+.3}");
        let params = format!("n={n}, r={r}, phi={phi}, t={t}, M={}", b.genfunc_terms);
        let d = flow_genfunc_diagnostic(n, r, phi, ComplexValue::new(t, 0.0), b.genfunc_terms)?;
        out.push(
            CheckRecord::diagnostic(
                format!("flow_genfunc/{key}/printed"),
                params.clone(),
                d.residual_printed_form,
            )
            .with_note(format!("smaller of printed/corrected: {}", d.smaller)),
        );
        out.push(CheckRecord::diagnostic(
            format!("flow_genfunc/{key}/corrected"),
            params.clone(),
            d.residual_corrected_form,
        ));
        out.push(CheckRecord::diagnostic(
            format!("flow_genfunc/{key}/integrated"),
            params,
            d.residual_integrated_form,
        ));
    }
    let rep = flow_solve(2.0, 0.5, 0.3, b.flow_steps)?;
    let params = format!("r0=2, phi0=0.5, t=0.3, steps={}", b.flow_steps);
    out.push(
        CheckRecord::diagnostic("flow/r_vs_closed_form", params.clone(), rep.r_discrepancy)
            .with_note(format!(
                "integrated r = {}, closed form r = {}",
                fmt_c(rep.endpoint.r),
                fmt_c(rep.closed_r)
            )),
    );
    out.push(
        CheckRecord::diagnostic(
            "flow/phi_vs_closed_form",
            params.clone(),
            rep.phi_discrepancy,
        )
        .with_note(format!(
            "integrated phi = {}, closed form phi = {}",
            fmt_c(rep.endpoint.phi),
            fmt_c(rep.closed_phi)
        )),
    );
    out.push(CheckRecord::diagnostic(
        "flow/q_minus_one",
        params.clone(),
        (rep.endpoint.q - 1.0).norm(),
    ));
    out.push(
        CheckRecord::diagnostic("flow/invariant_drift", params, rep.invariant_drift)
            .with_note("drift of r e^{i phi}, conserved by the exact flow"),
    );
    Ok(out)
}
