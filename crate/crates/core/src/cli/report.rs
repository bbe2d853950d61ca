use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::energy::Variant;
use crate::error::Result;
use crate::grid::GridFamily;
use crate::segmentation::{ChangePointResult, KappaMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Divisive,
    Agglomerative,
}

/// Run settings echoed into the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub input: String,
    pub min_size: usize,
    pub permutations: usize,
    pub level: f64,
    pub kappa: KappaMode,
    pub grid: GridFamily,
    pub seed: u64,
    pub block: Option<usize>,
    pub max_change_points: Option<usize>,
}

/// JSON report of one detection run.
///
/// `change_points` are 0-based: a change point `i` means rows `[0, i)` and
/// `[i, t)` of the input differ in distribution. Field order is the
/// serialized key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub t: usize,
    pub d: usize,
    pub method: Method,
    pub alpha: f64,
    pub variant: Variant,
    pub change_points: Vec<usize>,
    pub p_values: Vec<f64>,
    pub statistics: Vec<f64>,
    pub config: ReportConfig,
    /// Wall-clock seconds; `null` unless timing was requested, so that
    /// reports are byte-stable by default.
    pub elapsed_seconds: Option<f64>,
}

impl RunReport {
    pub fn new(
        t: usize,
        d: usize,
        method: Method,
        result: &ChangePointResult,
        input: String,
        block: Option<usize>,
        elapsed_seconds: Option<f64>,
    ) -> Self {
        let cfg = &result.config;
        Self {
            t,
            d,
            method,
            alpha: cfg.energy.alpha,
            variant: cfg.energy.variant,
            change_points: result.change_points.clone(),
            p_values: result.p_values.clone(),
            statistics: result.statistics.clone(),
            config: ReportConfig {
                input,
                min_size: cfg.min_size,
                permutations: cfg.n_permutations,
                level: cfg.sig_level,
                kappa: cfg.kappa_mode,
                grid: cfg.grid,
                seed: cfg.seed,
                block,
                max_change_points: cfg.max_change_points,
            },
            elapsed_seconds,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn emit_json(report: &RunReport, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, report.to_json()?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segmentation::DetectConfig;

    fn sample(change_points: Vec<usize>) -> RunReport {
        let result = ChangePointResult {
            p_values: vec![0.005; change_points.len()],
            statistics: vec![12.5; change_points.len()],
            candidates: change_points.clone(),
            change_points,
            config: DetectConfig::default(),
        };
        RunReport::new(
            200,
            2,
            Method::Divisive,
            &result,
            "x.csv".into(),
            None,
            None,
        )
    }

    #[test]
    fn keys_in_order() {
        let json = sample(vec![]).to_json().unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["change_points"], serde_json::json!([]));
        let keys = [
            "\"t\"",
            "\"d\"",
            "\"method\"",
            "\"alpha\"",
            "\"variant\"",
            "\"change_points\"",
            "\"p_values\"",
            "\"statistics\"",
            "\"config\"",
            "\"elapsed_seconds\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v.as_object().unwrap().len(), keys.len());
        assert_eq!(v["variant"], "ustat");
        assert_eq!(v["config"]["kappa"], "segment_end");
    }

    #[test]
    fn round_trip() {
        let r = sample(vec![100]);
        let back: RunReport = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.change_points, vec![100]);
    }

    #[test]
    fn unwritable_path() {
        assert!(emit_json(&sample(vec![]), "/nonexistent-dir/r.json").is_err());
    }
}
