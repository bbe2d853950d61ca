//! Two-sample energy statistics on ranks.
//!
//! For samples `A` (size `m`) and `B` (size `n`) and exponent `alpha`:
//!
//! ```text
//! E = 2/(m n) sum_{a,b} |a - b|^alpha
//!     - W(A) - W(B)
//! ```
//!
//! where the within-sample term `W` averages over unordered distinct pairs
//! (`C(m, 2)` normalization) for [`Variant::UStat`], or over all ordered
//! pairs (`m^2` normalization) for [`Variant::VStat`]. The scaled divergence
//! is `Q = m n / (m + n) * E`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::UnitGrid;
use crate::ranks::{compute_rank_map, PooledSample};
use crate::series::SeriesView;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Unbiased within-sample averages over distinct pairs.
    #[default]
    UStat,
    /// Within-sample averages over all ordered pairs, diagonal included.
    VStat,
}

impl Variant {
    /// Smallest sample size on either side for which the statistic exists.
    pub fn min_side(self) -> usize {
        match self {
            Variant::UStat => 2,
            Variant::VStat => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyConfig {
    /// Distance exponent, `0 < alpha <= 2`. At `alpha = 2` the statistic
    /// only sees differences in means.
    pub alpha: f64,
    pub variant: Variant,
}

impl Default for EnergyConfig {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            variant: Variant::UStat,
        }
    }
}

impl EnergyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            return Err(Error::invalid(format!(
                "alpha must lie in (0, 2], got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    #[inline]
    fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        let sq: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
        if self.alpha == 1.0 {
            sq.sqrt()
        } else if self.alpha == 2.0 {
            sq
        } else {
            sq.powf(0.5 * self.alpha)
        }
    }

    fn combine(&self, m: usize, n: usize, cross: f64, within_a: f64, within_b: f64) -> f64 {
        let (mf, nf) = (m as f64, n as f64);
        let between = 2.0 * cross / (mf * nf);
        match self.variant {
            Variant::UStat => {
                between - within_a / (mf * (mf - 1.0) / 2.0) - within_b / (nf * (nf - 1.0) / 2.0)
            }
            Variant::VStat => between - 2.0 * within_a / (mf * mf) - 2.0 * within_b / (nf * nf),
        }
    }
}

/// Energy statistic for a candidate split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitStatistic {
    /// Size of the left sample (split index within the segment).
    pub tau: usize,
    /// Right end (exclusive) of the pooled sample within the segment.
    pub kappa: usize,
    pub e_value: f64,
    pub q_value: f64,
}

/// `m n / (m + n) * e_value`.
pub fn scaled_divergence(m: usize, n: usize, e_value: f64) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    mf * nf / (mf + nf) * e_value
}

fn check_sizes(m: usize, n: usize, cfg: &EnergyConfig) -> Result<()> {
    let need = cfg.variant.min_side();
    if m < need || n < need {
        return Err(Error::SizeMismatch(format!(
            "{:?} energy needs at least {need} points per side, got {m} and {n}",
            cfg.variant
        )));
    }
    Ok(())
}

/// Energy statistic between two point sets.
pub fn pairwise_energy(a: SeriesView<'_>, b: SeriesView<'_>, cfg: &EnergyConfig) -> Result<f64> {
    cfg.validate()?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    check_sizes(a.len(), b.len(), cfg)?;
    let within = |s: SeriesView<'_>| {
        let mut acc = 0.0;
        for i in 0..s.len() {
            for k in i + 1..s.len() {
                acc += cfg.distance(s.row(i), s.row(k));
            }
        }
        acc
    };
    let mut cross = 0.0;
    for x in a.rows() {
        for y in b.rows() {
            cross += cfg.distance(x, y);
        }
    }
    Ok(cfg.combine(a.len(), b.len(), cross, within(a), within(b)))
}

/// Energy between the ranks of the first `tau` points of `sample` and the
/// ranks of the rest, with one rank map computed on the whole sample.
pub fn rank_energy(
    sample: PooledSample<'_>,
    tau: usize,
    grid: &UnitGrid,
    cfg: &EnergyConfig,
) -> Result<f64> {
    cfg.validate()?;
    check_sizes(tau, sample.len().saturating_sub(tau), cfg)?;
    let rm = compute_rank_map(sample, grid)?;
    let ranks = rm.ranks();
    pairwise_energy(ranks.slice(0, tau), ranks.slice(tau, ranks.len()), cfg)
}

/// Energy for every split `tau` of one fixed point sequence, in `O(N^2)`
/// total.
#[derive(Debug, Clone)]
pub struct EnergyProfile {
    cfg: EnergyConfig,
    /// `within_left[tau]` = sum of distances among points `0..tau`.
    within_left: Vec<f64>,
    /// `within_right[tau]` = sum of distances among points `tau..N`.
    within_right: Vec<f64>,
    total: f64,
}

impl EnergyProfile {
    #[allow(clippy::needless_range_loop)]
    pub fn new(points: SeriesView<'_>, cfg: &EnergyConfig) -> Result<Self> {
        cfg.validate()?;
        let n = points.len();
        // sum of distances from point j to earlier / later points
        let mut to_earlier = vec![0.0; n];
        let mut to_later = vec![0.0; n];
        for i in 0..n {
            let pi = points.row(i);
            for k in i + 1..n {
                let dist = cfg.distance(pi, points.row(k));
                to_later[i] += dist;
                to_earlier[k] += dist;
            }
        }
        let mut within_left = vec![0.0; n + 1];
        for t in 1..=n {
            within_left[t] = within_left[t - 1] + to_earlier[t - 1];
        }
        let mut within_right = vec![0.0; n + 1];
        for t in (0..n).rev() {
            within_right[t] = within_right[t + 1] + to_later[t];
        }
        Ok(Self {
            cfg: *cfg,
            total: within_left[n],
            within_left,
            within_right,
        })
    }

    pub fn len(&self) -> usize {
        self.within_left.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn e_value(&self, tau: usize) -> Result<f64> {
        let n = self.len();
        if tau > n {
            return Err(Error::invalid(format!("split {tau} beyond sample of {n}")));
        }
        let m_side = tau;
        let n_side = n - tau;
        check_sizes(m_side, n_side, &self.cfg)?;
        let wl = self.within_left[tau];
        let wr = self.within_right[tau];
        let cross = self.total - wl - wr;
        Ok(self.cfg.combine(m_side, n_side, cross, wl, wr))
    }

    pub fn split(&self, tau: usize) -> Result<SplitStatistic> {
        let e_value = self.e_value(tau)?;
        Ok(SplitStatistic {
            tau,
            kappa: self.len(),
            e_value,
            q_value: scaled_divergence(tau, self.len() - tau, e_value),
        })
    }
}
