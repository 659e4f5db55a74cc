use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::contraction::{
    contraction_residual, legendre_ode_residual, mehler_heine_check, polar_ladder_limit,
    LimitTestFunction,
};
use crate::error::{Error, Result};
use crate::euclidean::bessel_j_real;
use crate::groups::{
    e2_exp_rotation, e2_exp_translation, h3_generator, Axis, E2Element, Group, H3AlgebraElement,
    H3Element,
};
use crate::heisenberg::hermite_recurrence_table;
use crate::numeric::{int, rat, Polynomial, Rational, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    HermiteCoeffs,
    BesselValues,
    ContractionConvergence,
    GroupDemo,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite_coeffs" => Ok(TableKind::HermiteCoeffs),
            "bessel_values" => Ok(TableKind::BesselValues),
            "contraction_convergence" => Ok(TableKind::ContractionConvergence),
            "group_demo" => Ok(TableKind::GroupDemo),
            _ => Err(Error::Config(format!(
                "unknown table {s:?}; expected hermite_coeffs, bessel_values, contraction_convergence or group_demo"
            ))),
        }
    }
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(raw: &[String], allowed: &[&str]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for p in raw {
            let (k, v) = p.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "table parameter {p:?} is not of the form key=value"
                ))
            })?;
            if !allowed.contains(&k) {
                return Err(Error::Config(format!(
                    "unknown table parameter {k:?}; allowed: {}",
                    allowed.join(", ")
                )));
            }
            map.insert(k.to_string(), v.to_string());
        }
        Ok(Params(map))
    }

    fn get<T: FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::Config(format!("cannot parse {key}={v}"))),
        }
    }

    fn list<T: FromStr>(&self, key: &str, default: Vec<T>) -> Result<Vec<T>> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Error::Config(format!("cannot parse {key}={v}")))
                })
                .collect(),
        }
    }
}

/// Fixed-point decimal with 15 significant digits; scientific notation
/// outside `1e-5 <= |x| < 1e15`.
pub fn format_sig15(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.14}", 0.0);
    }
    let e = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&e) {
        return format!("{x:.14e}");
    }
    let s = format!("{:.*}", (14 - e).max(0) as usize, x);
    // rounding can carry into a new leading digit
    let digits = s.chars().filter(char::is_ascii_digit).collect::<String>();
    if digits.trim_start_matches('0').len() > 15 && e < 14 {
        return format!("{:.*}", (13 - e).max(0) as usize, x);
    }
    s
}

/// Render a table. Parameters are `key=value` strings.
pub fn emit_table(kind: TableKind, params: &[String]) -> Result<String> {
    match kind {
        TableKind::HermiteCoeffs => hermite_coeffs(&Params::parse(params, &["max_n"])?),
        TableKind::BesselValues => bessel_values(&Params::parse(params, &["orders", "r"])?),
        TableKind::ContractionConvergence => {
            contraction_convergence(&Params::parse(params, &["max_r", "max_l"])?)
        }
        TableKind::GroupDemo => {
            let p = Params::parse(params, &["group"])?;
            let group: String = p.get("group", "h3".to_string())?;
            group_demo(match group.as_str() {
                "h3" => Group::H3,
                "e2" => Group::E2,
                _ => {
                    return Err(Error::Config(format!(
                        "unknown group {group:?}; expected h3 or e2"
                    )))
                }
            })
        }
    }
}

fn hermite_coeffs(p: &Params) -> Result<String> {
    let max_n: u32 = p.get("max_n", 10)?;
    if max_n > 64 {
        return Err(Error::Envelope(format!(
            "hermite_coeffs max_n={max_n} exceeds 64"
        )));
    }
    let mut out = String::from("# H_n coefficients, descending powers of x\n");
    for (n, h) in hermite_recurrence_table(max_n).iter().enumerate() {
        let coeffs = h.coefficients_descending(Var::X).unwrap_or_default();
        let row: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        writeln!(out, "H_{n}: {}", row.join(", ")).unwrap();
    }
    Ok(out)
}

fn bessel_values(p: &Params) -> Result<String> {
    let orders: Vec<i32> = p.list("orders", (0..=5).collect())?;
    let radii: Vec<f64> = p.list("r", vec![0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0])?;
    let mut out = String::from("r");
    for n in &orders {
        write!(out, ",J_{n}(r)").unwrap();
    }
    out.push('\n');
    for &r in &radii {
        out.push_str(&r.to_string());
        for &n in &orders {
            write!(out, ",{}", format_sig15(bessel_j_real(n, r)?)).unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn ratio(prev: Option<f64>, cur: f64) -> String {
    match prev {
        Some(p) if p != 0.0 => format!("{:.4}", cur / p),
        _ => "-".to_string(),
    }
}

fn contraction_convergence(p: &Params) -> Result<String> {
    let max_r: u32 = p.get("max_r", 1024)?;
    let max_l: u32 = p.get("max_l", 1024)?;
    let rs: Vec<u32> = std::iter::successors(Some(8u32), |r| r.checked_mul(2))
        .take_while(|&r| r <= max_r)
        .collect();
    let ls: Vec<u32> = std::iter::successors(Some(64u32), |l| l.checked_mul(2))
        .take_while(|&l| l <= max_l)
        .collect();
    let (x, y, z) = (
        Polynomial::var(Var::X),
        Polynomial::var(Var::Y),
        Polynomial::var(Var::Z),
    );
    let f = &(&x * &y) * &z + z.pow(3);
    let exact: Vec<Rational> = rs.iter().map(|&r| int(r as i64)).collect();
    let poly = contraction_residual(&f, &exact)?;
    let rf: Vec<f64> = rs.iter().map(|&r| r as f64).collect();
    let polar = polar_ladder_limit(LimitTestFunction::Bessel(1), 1.0, 0.4, &rf)?;

    let mut out =
        String::from("# test polynomial xyz + z^3; polar test J_1(r)e^{i phi} at r=1, phi=0.4\n");
    out.push_str("R,vector_field_residual,ratio,polar_residual,ratio\n");
    for i in 0..rs.len() {
        let pp = if i == 0 { None } else { Some(poly[i - 1].1) };
        let pq = if i == 0 { None } else { Some(polar[i - 1].1) };
        writeln!(
            out,
            "{},{:.6e},{},{:.6e},{}",
            rs[i],
            poly[i].1,
            ratio(pp, poly[i].1),
            polar[i].1,
            ratio(pq, polar[i].1)
        )
        .unwrap();
    }
    out.push_str("\n# Legendre to Bessel, m=0 and m=1 at r=2\n");
    out.push_str("l,ode_residual_m0,ratio,mehler_heine_error_m0,ode_residual_m1,ratio,mehler_heine_error_m1\n");
    let mh0 = mehler_heine_check(0, 2.0, &ls)?;
    let mh1 = mehler_heine_check(1, 2.0, &ls)?;
    let mut prev: Option<(f64, f64)> = None;
    for (i, &l) in ls.iter().enumerate() {
        let (o0, o1) = (
            legendre_ode_residual(l, 0, 2.0)?,
            legendre_ode_residual(l, 1, 2.0)?,
        );
        writeln!(
            out,
            "{l},{o0:.6e},{},{:.6e},{o1:.6e},{},{:.6e}",
            ratio(prev.map(|p| p.0), o0),
            mh0[i].1,
            ratio(prev.map(|p| p.1), o1),
            mh1[i].1
        )
        .unwrap();
        prev = Some((o0, o1));
    }
    Ok(out)
}

fn h3_alg(a: i64, b: i64, c: i64) -> H3AlgebraElement {
    H3AlgebraElement::new(int(a), int(b), int(c))
}

fn group_demo(group: Group) -> Result<String> {
    let mut out = String::new();
    match group {
        Group::H3 => {
            let g = H3Element::new(int(1), int(2), int(3));
            let h = H3Element::new(int(4), int(5), int(6));
            writeln!(
                out,
                "# H3 with g = (x1, x2, x3) and product (x1+y1, x2+y2+x1*y3, x3+y3)"
            )
            .unwrap();
            writeln!(out, "{g} * {h} = {}", g.compose(&h)).unwrap();
            writeln!(out, "{h} * {g} = {}", h.compose(&g)).unwrap();
            writeln!(out, "inverse{g} = {}", g.inverse()).unwrap();
            writeln!(out, "{g} * inverse{g} = {}", g.compose(&g.inverse())).unwrap();
            let half = H3Element::new(rat(1, 2), rat(-3, 4), int(2));
            writeln!(out, "inverse{half} = {}", half.inverse()).unwrap();
            for (a, b, c) in [(1, 0, 1), (1, 1, 1), (2, 0, 3), (0, 5, 0)] {
                writeln!(out, "exp({a},{b},{c}) = {}", h3_alg(a, b, c).exp()).unwrap();
            }
            let l = g.log();
            writeln!(out, "log{g} = {}A + {}B + {}C", l.a, l.b, l.c).unwrap();
            writeln!(out, "exp(log{g}) = {}", l.exp()).unwrap();
            let (a, b, c) = (h3_generator(1), h3_generator(2), h3_generator(3));
            writeln!(out, "[A,C] = B: {}", a.commutator(&c) == b).unwrap();
            writeln!(out, "[A,B] = 0: {}", a.commutator(&b).is_zero()).unwrap();
            writeln!(out, "[B,C] = 0: {}", b.commutator(&c).is_zero()).unwrap();
            writeln!(out, "matrix{g} =\n{}", g.to_matrix()).unwrap();
        }
        Group::E2 => {
            let g = E2Element::new(1.0, 0.0, PI / 2.0);
            let h = E2Element::new(0.0, 2.0, PI);
            writeln!(
                out,
                "# E2 with g = (x, y, theta) acting as p -> R(theta)p + (x, y)"
            )
            .unwrap();
            writeln!(out, "{g} * {h} = {}", g.compose(&h)).unwrap();
            writeln!(out, "{h} * {g} = {}", h.compose(&g)).unwrap();
            writeln!(out, "inverse{g} = {}", g.inverse()).unwrap();
            let (px, py) = g.apply((1.0, 1.0));
            writeln!(out, "{g} applied to (1, 1) = ({px}, {py})").unwrap();
            writeln!(out, "exp(2 P_x) =\n{}", e2_exp_translation(int(2), Axis::X)).unwrap();
            writeln!(
                out,
                "exp(-1/3 P_y) =\n{}",
                e2_exp_translation(rat(-1, 3), Axis::Y)
            )
            .unwrap();
            writeln!(out, "exp(pi/2 L_z) =\n{}", e2_exp_rotation(PI / 2.0)).unwrap();
            writeln!(out, "matrix{g} =\n{}", g.to_matrix()).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig15_examples() {
        assert_eq!(format_sig15(1.0), "1.00000000000000");
        assert_eq!(format_sig15(0.0), "0.00000000000000");
        assert_eq!(format_sig15(-0.1775967713143383), "-0.177596771314338");
        assert_eq!(format_sig15(12.5), "12.5000000000000");
        assert_eq!(format_sig15(9.999999999999999), "10.0000000000000");
    }

    #[test]
    fn hermite_row_two() {
        let t = emit_table(TableKind::HermiteCoeffs, &["max_n=3".into()]).unwrap();
        assert!(t.lines().any(|l| l == "H_2: 4, 0, -2"));
        assert!(t.lines().any(|l| l == "H_3: 8, 0, -12, 0"));
    }

    #[test]
    fn bessel_origin() {
        let t = emit_table(
            TableKind::BesselValues,
            &["orders=0,1".into(), "r=0".into()],
        )
        .unwrap();
        assert_eq!(t, "r,J_0(r),J_1(r)\n0,1.00000000000000,0.00000000000000\n");
    }

    #[test]
    fn h3_demo_exp_line() {
        let t = emit_table(TableKind::GroupDemo, &["group=h3".into()]).unwrap();
        assert!(t.lines().any(|l| l == "exp(1,0,1) = (1, 1/2, 1)"));
    }

    #[test]
    fn envelope_and_usage_errors() {
        assert!(matches!(
            emit_table(TableKind::BesselValues, &["orders=21".into()]),
            Err(Error::Envelope(_))
        ));
        assert!(matches!(
            emit_table(TableKind::HermiteCoeffs, &["max_n=65".into()]),
            Err(Error::Envelope(_))
        ));
        assert!(matches!(
            emit_table(TableKind::HermiteCoeffs, &["bogus=1".into()]),
            Err(Error::Config(_))
        ));
    }
}
