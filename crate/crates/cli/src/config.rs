//! Walk definitions read from JSON.
//!
//! ```text
//! {"group": "kpn", "n": 6, "k_max": 50,
//!  "coefficients": [["rho+:0", [1, 0]], ["rho+:2", {"eta_pow": 2, "scale": 1}]]}
//! ```

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qgwalk_core::dual::{DualCentralElement, DualLabel};
use qgwalk_core::kp8::{KpCoefficients, KpLabel};
use qgwalk_core::sekine::{CentralElement, IrrepLabel, Sekine};
use qgwalk_core::DEFAULT_TOL;

use crate::error::{CliError, Result};

pub const TOL_ENV: &str = "QGWALK_TOL";

pub const DEFAULT_K_MAX: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "kp")]
    Kp,
    #[serde(rename = "kpn")]
    Kpn,
    #[serde(rename = "kpn-dual")]
    KpnDual,
}

/// A coefficient: `[re, im]`, or `scale · η^eta_pow` with `η = e^{2πi/n}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Pair([f64; 2]),
    RootOfUnity { eta_pow: i64, scale: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkConfig {
    pub group: GroupKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub coefficients: Vec<(String, Value)>,
    #[serde(default = "default_k_max")]
    pub k_max: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

fn default_k_max() -> u64 {
    DEFAULT_K_MAX
}

/// The driving element a config describes.
#[derive(Clone, Debug)]
pub enum Driver {
    Kp(KpCoefficients),
    Kpn(CentralElement),
    Dual(DualCentralElement),
}

/// Parses and validates a config document.
pub fn parse_config(text: &str) -> Result<WalkConfig> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let config: WalkConfig =
        serde_path_to_error::deserialize(de).map_err(|e| CliError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
    config.driver()?;
    Ok(config)
}

/// Tolerance from `QGWALK_TOL`, or the library default.
pub fn env_tolerance() -> Result<f64> {
    match std::env::var(TOL_ENV) {
        Ok(s) => {
            let tol: f64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("{TOL_ENV} = {s:?} is not a number")))?;
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Config(format!(
                    "{TOL_ENV} must be positive, got {tol}"
                )));
            }
            Ok(tol)
        }
        Err(_) => Ok(DEFAULT_TOL),
    }
}

impl WalkConfig {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// The config's own `tol`, else the environment, else the default.
    pub fn tolerance(&self) -> Result<f64> {
        match self.tol {
            Some(t) if t > 0.0 && t.is_finite() => Ok(t),
            Some(t) => Err(CliError::Config(format!("tol must be positive, got {t}"))),
            None => env_tolerance(),
        }
    }

    fn require_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| CliError::Config(format!("group {:?} needs n", self.group)))
    }

    fn value(&self, label: &str, v: Value) -> Result<Complex64> {
        match v {
            Value::Pair([re, im]) => Ok(Complex64::new(re, im)),
            Value::RootOfUnity { eta_pow, scale } => {
                let n = self.n.ok_or_else(|| {
                    CliError::Config(format!("{label}: eta_pow needs n, and KP has no n"))
                })?;
                Ok(Sekine::new(n)?.eta_pow(eta_pow) * scale)
            }
        }
    }

    pub fn driver(&self) -> Result<Driver> {
        if self.k_max == 0 {
            return Err(CliError::Config("k_max must be at least 1".into()));
        }
        self.tolerance()?;
        let mut seen = BTreeSet::new();
        for (label, _) in &self.coefficients {
            if !seen.insert(label.as_str()) {
                return Err(CliError::Config(format!("label {label} given twice")));
            }
        }
        match self.group {
            GroupKind::Kp => {
                if self.n.is_some() {
                    return Err(CliError::Config("group kp takes no n".into()));
                }
                let mut g = KpCoefficients::zero();
                for (label, v) in &self.coefficients {
                    let parsed: KpLabel = label.parse()?;
                    g.set(parsed, self.value(label, *v)?)?;
                }
                Ok(Driver::Kp(g))
            }
            GroupKind::Kpn => {
                let n = self.require_n()?;
                let mut a = CentralElement::zero(n)?;
                for (label, v) in &self.coefficients {
                    let parsed: IrrepLabel = label.parse()?;
                    a.set(parsed, self.value(label, *v)?)?;
                }
                Ok(Driver::Kpn(a))
            }
            GroupKind::KpnDual => {
                let n = self.require_n()?;
                let mut a = DualCentralElement::new(n, [])?;
                for (label, v) in &self.coefficients {
                    let parsed: DualLabel = label.parse()?;
                    a.set(parsed, self.value(label, *v)?)?;
                }
                Ok(Driver::Dual(a))
            }
        }
    }
}
