use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "LIEGEN_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Config(format!(
                "unknown format {s:?}; expected json, csv or text"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub e2_axioms: f64,
    pub generators: f64,
    pub bessel: f64,
    pub bessel_ode_small_r: f64,
    pub crosscheck: f64,
    pub genfunc: f64,
    pub contraction_ratio_band: f64,
    pub polar_ratio: f64,
    pub legendre_ratio: f64,
    pub mehler_heine_rel: f64,
    pub mehler_heine_abs: f64,
    pub bessel_equation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            e2_axioms: 1e-12,
            generators: 1e-8,
            bessel: 1e-10,
            bessel_ode_small_r: 1e-9,
            crosscheck: 1e-6,
            genfunc: 1e-8,
            contraction_ratio_band: 0.1,
            polar_ratio: 0.3,
            legendre_ratio: 0.5,
            mehler_heine_rel: 0.02,
            mehler_heine_abs: 0.005,
            bessel_equation: 1e-9,
        }
    }
}

impl Tolerances {
    /// Replace every absolute residual tolerance; ratio gates are unchanged.
    pub fn override_residuals(&mut self, tol: f64) {
        self.e2_axioms = tol;
        self.generators = tol;
        self.bessel = tol;
        self.bessel_ode_small_r = tol;
        self.crosscheck = tol;
        self.genfunc = tol;
        self.bessel_equation = tol;
    }

    fn all(&self) -> [(&'static str, f64); 12] {
        [
            ("e2_axioms", self.e2_axioms),
            ("generators", self.generators),
            ("bessel", self.bessel),
            ("bessel_ode_small_r", self.bessel_ode_small_r),
            ("crosscheck", self.crosscheck),
            ("genfunc", self.genfunc),
            ("contraction_ratio_band", self.contraction_ratio_band),
            ("polar_ratio", self.polar_ratio),
            ("legendre_ratio", self.legendre_ratio),
            ("mehler_heine_rel", self.mehler_heine_rel),
            ("mehler_heine_abs", self.mehler_heine_abs),
            ("bessel_equation", self.bessel_equation),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GroupsConfig {
    pub samples: usize,
}

impl Default for GroupsConfig {
    fn default() -> Self {
        GroupsConfig { samples: 100 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HermiteConfig {
    pub max_n: u32,
    pub orthonormality_max_n: u32,
    pub anticommutator_max_n: u32,
    pub discrete_dim: usize,
    pub genfunc_order: usize,
    pub disentangle_order: usize,
    pub operator_degree: u32,
}

impl Default for HermiteConfig {
    fn default() -> Self {
        HermiteConfig {
            max_n: 64,
            orthonormality_max_n: 20,
            anticommutator_max_n: 32,
            discrete_dim: 40,
            genfunc_order: 64,
            disentangle_order: 32,
            operator_degree: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BesselConfig {
    pub orders: Vec<i32>,
    pub radii: Vec<f64>,
    pub crosscheck_orders: Vec<i32>,
    pub crosscheck_radii: Vec<f64>,
    pub crosscheck_angles: Vec<f64>,
    pub genfunc_orders: Vec<i32>,
    pub genfunc_radii: Vec<f64>,
    pub genfunc_angles: Vec<f64>,
    /// Translation parameters as `[re, im]` pairs.
    pub genfunc_t: Vec<[f64; 2]>,
    pub genfunc_terms: usize,
    pub flow_steps: usize,
    pub operator_degree: u32,
}

impl Default for BesselConfig {
    fn default() -> Self {
        BesselConfig {
            orders: (0..=10).collect(),
            radii: vec![0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0],
            crosscheck_orders: (0..=5).collect(),
            crosscheck_radii: vec![0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0],
            crosscheck_angles: vec![0.0, 1.1, std::f64::consts::FRAC_PI_3],
            genfunc_orders: vec![0, 1, 2],
            genfunc_radii: vec![1.0, 2.0, 5.0],
            genfunc_angles: vec![0.0, 0.7, std::f64::consts::FRAC_PI_3],
            genfunc_t: vec![
                [0.1, 0.0],
                [0.3, 0.0],
                [0.5, 0.0],
                [-0.5, 0.0],
                [0.0, 0.1],
                [0.0, 0.3],
                [0.0, 0.5],
                [0.0, -0.5],
            ],
            genfunc_terms: 30,
            flow_steps: 10_000,
            operator_degree: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ContractionConfig {
    pub r_list: Vec<u32>,
    pub l_list: Vec<u32>,
    pub scaled_r: Vec<u32>,
    pub legendre_orders: Vec<u32>,
    pub radii: Vec<f64>,
    pub polar_orders: Vec<i32>,
    pub polar_radii: Vec<f64>,
}

impl Default for ContractionConfig {
    fn default() -> Self {
        ContractionConfig {
            r_list: vec![8, 16, 32, 64, 128, 256, 512, 1024],
            l_list: vec![64, 128, 256, 512, 1024],
            scaled_r: vec![1, 10, 1000],
            legendre_orders: vec![0, 1, 2, 3],
            radii: vec![1.0, 2.0, 4.0],
            polar_orders: vec![0, 1, 2],
            polar_radii: vec![0.5, 1.0, 2.5, 5.0],
        }
    }
}

/// Everything a verification run depends on. A config file may set any
/// subset; the rest keeps its default.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub format: OutputFormat,
    pub tolerances: Tolerances,
    pub groups: GroupsConfig,
    pub hermite: HermiteConfig,
    pub bessel: BesselConfig,
    pub contraction: ContractionConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            format: OutputFormat::Text,
            tolerances: Tolerances::default(),
            groups: GroupsConfig::default(),
            hermite: HermiteConfig::default(),
            bessel: BesselConfig::default(),
            contraction: ContractionConfig::default(),
        }
    }
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: SuiteConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Load from `path`, else from the file named by [`CONFIG_ENV`], else
    /// defaults.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            Some(p) => Self::from_file(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Self::from_file(Path::new(&p)),
                _ => Ok(Self::default()),
            },
        }
    }

    /// Cap every Hermite degree bound at `n`.
    pub fn cap_max_n(&mut self, n: u32) {
        let h = &mut self.hermite;
        h.max_n = n;
        h.orthonormality_max_n = h.orthonormality_max_n.min(n);
        h.anticommutator_max_n = h.anticommutator_max_n.min(n);
        h.genfunc_order = h.genfunc_order.min(n as usize);
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in self.tolerances.all() {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Config(format!(
                    "tolerance {name} must be positive, got {v}"
                )));
            }
        }
        let b = &self.bessel;
        let c = &self.contraction;
        let empties = [
            ("bessel.orders", b.orders.is_empty()),
            ("bessel.radii", b.radii.is_empty()),
            ("bessel.crosscheck_orders", b.crosscheck_orders.is_empty()),
            ("bessel.crosscheck_radii", b.crosscheck_radii.is_empty()),
            ("bessel.crosscheck_angles", b.crosscheck_angles.is_empty()),
            ("bessel.genfunc_orders", b.genfunc_orders.is_empty()),
            ("bessel.genfunc_radii", b.genfunc_radii.is_empty()),
            ("bessel.genfunc_angles", b.genfunc_angles.is_empty()),
            ("bessel.genfunc_t", b.genfunc_t.is_empty()),
            ("contraction.r_list", c.r_list.len() < 2),
            ("contraction.l_list", c.l_list.len() < 2),
            ("contraction.scaled_r", c.scaled_r.is_empty()),
            ("contraction.legendre_orders", c.legendre_orders.is_empty()),
            ("contraction.radii", c.radii.is_empty()),
            ("contraction.polar_orders", c.polar_orders.is_empty()),
            ("contraction.polar_radii", c.polar_radii.is_empty()),
        ];
        if let Some((name, _)) = empties.iter().find(|(_, e)| *e) {
            return Err(Error::Config(format!(
                "grid {name} must not be empty (ratio grids need two points)"
            )));
        }
        if self.groups.samples == 0 {
            return Err(Error::Config("groups.samples must be at least 1".into()));
        }
        if c.r_list.contains(&0) || c.scaled_r.contains(&0) {
            return Err(Error::Config("contraction radii must be positive".into()));
        }
        if self.hermite.discrete_dim < 2 {
            return Err(Error::Config(
                "hermite.discrete_dim must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let cfg = SuiteConfig::from_toml("seed = 7\n[hermite]\nmax_n = 16\n").unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.hermite.max_n, 16);
        assert_eq!(cfg.hermite.discrete_dim, 40);
        assert_eq!(cfg.bessel, BesselConfig::default());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(matches!(
            SuiteConfig::from_toml("[tolerances]\nbessel = -1.0\n"),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SuiteConfig::from_toml("[bessel]\nradii = []\n"),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SuiteConfig::from_toml("unknown = 3\n"),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            SuiteConfig::from_toml("seed = \n"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn defaults_round_trip_through_toml() {
        let text = toml::to_string(&SuiteConfig::default()).unwrap();
        assert_eq!(
            SuiteConfig::from_toml(&text).unwrap(),
            SuiteConfig::default()
        );
    }
}
