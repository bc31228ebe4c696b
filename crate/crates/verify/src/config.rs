//! Optional JSON configuration mirroring the series controls and the
//! dispatch thresholds. Command-line flags take precedence.

use std::path::Path;

use humbert_core::psi1::Psi1Config;
use serde::Deserialize;

use crate::error::{VerifyError, VerifyResult};

/// Every field is optional; absent fields keep their defaults.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub rel_tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub stagnation_window: Option<usize>,
    pub z_direct: Option<f64>,
    pub quad_tol: Option<f64>,
    pub quad_max_level: Option<u32>,
    pub double_radius: Option<f64>,
    pub near_unit_radius: Option<f64>,
    pub large_x_radius: Option<f64>,
    pub moderate_y: Option<f64>,
}

impl FileConfig {
    pub fn from_json(text: &str) -> VerifyResult<Self> {
        serde_json::from_str(text).map_err(|e| VerifyError::Usage(format!("bad configuration: {e}")))
    }

    pub fn load(path: &Path) -> VerifyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| VerifyError::Usage(format!("cannot read configuration {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Applies the file values on top of `base`.
    pub fn apply(&self, mut base: Psi1Config) -> Psi1Config {
        let s = &mut base.series;
        if let Some(v) = self.rel_tol {
            s.rel_tol = v;
        }
        if let Some(v) = self.max_terms {
            s.max_terms = v;
        }
        if let Some(v) = self.stagnation_window {
            s.stagnation_window = v;
        }
        if let Some(v) = self.z_direct {
            s.z_direct = v;
        }
        for (slot, v) in [
            (&mut base.quad_tol, self.quad_tol),
            (&mut base.double_radius, self.double_radius),
            (&mut base.near_unit_radius, self.near_unit_radius),
            (&mut base.large_x_radius, self.large_x_radius),
            (&mut base.moderate_y, self.moderate_y),
        ] {
            if let Some(v) = v {
                *slot = v;
            }
        }
        if let Some(v) = self.quad_max_level {
            base.quad_max_level = v;
        }
        base
    }
}

/// Builds the effective configuration: defaults, then the file, then
/// `--tol` (series and quadrature tolerance) and `--max-terms`.
pub fn resolve(file: Option<&Path>, tol: Option<f64>, max_terms: Option<usize>) -> VerifyResult<Psi1Config> {
    let mut cfg = Psi1Config::default();
    if let Some(path) = file {
        cfg = FileConfig::load(path)?.apply(cfg);
    }
    if let Some(t) = tol {
        cfg.series.rel_tol = t;
        cfg.quad_tol = t;
    }
    if let Some(m) = max_terms {
        cfg.series.max_terms = m;
    }
    cfg.series.validate().map_err(|e| VerifyError::Usage(e.to_string()))?;
    if !(cfg.quad_tol > 0.0) {
        return Err(VerifyError::Usage(format!("quadrature tolerance must be positive, got {}", cfg.quad_tol)));
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_defaults() {
        let f = FileConfig::from_json(r#"{"quad_tol": 1e-10, "moderate_y": 4}"#).unwrap();
        let cfg = f.apply(Psi1Config::default());
        assert_eq!(cfg.quad_tol, 1e-10);
        assert_eq!(cfg.moderate_y, 4.0);
        assert_eq!(cfg.series, Psi1Config::default().series);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(FileConfig::from_json(r#"{"tolerance": 1}"#), Err(VerifyError::Usage(_))));
    }

    #[test]
    fn flags_override() {
        let cfg = resolve(None, Some(1e-10), Some(500)).unwrap();
        assert_eq!(cfg.series.rel_tol, 1e-10);
        assert_eq!(cfg.quad_tol, 1e-10);
        assert_eq!(cfg.series.max_terms, 500);
        assert!(resolve(None, Some(-1.0), None).is_err());
    }
}
