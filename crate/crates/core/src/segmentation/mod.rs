//! Change point estimation.
//!
//! Two procedures share the same split statistic, the scaled rank energy
//! divergence between the observations before and after a candidate index:
//!
//! * [`divisive_detect`] finds the best split of a segment, keeps it if a
//!   seeded permutation test rejects homogeneity, and recurses on both sides.
//! * [`agglomerative_detect`] starts from fixed-size blocks, greedily merges
//!   the adjacent pair that leaves the largest goodness-of-fit, and returns
//!   the clustering with the best goodness-of-fit seen along the way.
//!
//! All indices are 0-based. A change point `i` means observations `[.., i)`
//! and `[i, ..)` come from different distributions.

mod agglomerative;
mod divisive;
mod permutation;
mod split;

pub use agglomerative::{
    agglomerative_detect, goodness_of_fit, legal_merges, MergeLevel, MergeStep, MergeTrace,
};
pub use divisive::divisive_detect;
pub use permutation::{permutation_p_value, permutation_test};
pub use split::best_split;

use serde::{Deserialize, Serialize};

use crate::energy::EnergyConfig;
use crate::error::{Error, Result};
use crate::grid::GridFamily;

/// How the right end of the pooled sample is chosen when searching a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaMode {
    /// Pool the whole segment; one assignment per segment.
    #[default]
    SegmentEnd,
    /// Also search every prefix end; one assignment per prefix.
    FullSweep,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectConfig {
    pub energy: EnergyConfig,
    /// Minimum observations on each side of a split. Values of 5 or more
    /// give more stable permutation p-values.
    pub min_size: usize,
    pub n_permutations: usize,
    pub sig_level: f64,
    pub kappa_mode: KappaMode,
    pub grid: GridFamily,
    pub seed: u64,
    pub max_change_points: Option<usize>,
}

impl Default for DetectConfig {
    fn default() -> Self {
        Self {
            energy: EnergyConfig::default(),
            min_size: 2,
            n_permutations: 199,
            sig_level: 0.05,
            kappa_mode: KappaMode::SegmentEnd,
            grid: GridFamily::Halton,
            seed: 0,
            max_change_points: None,
        }
    }
}

impl DetectConfig {
    pub fn validate(&self) -> Result<()> {
        self.energy.validate()?;
        let floor = self.energy.variant.min_side();
        if self.min_size < floor {
            return Err(Error::invalid(format!(
                "min_size must be at least {floor} for the {:?} statistic, got {}",
                self.energy.variant, self.min_size
            )));
        }
        if self.n_permutations == 0 {
            return Err(Error::invalid("number of permutations must be >= 1"));
        }
        if !(self.sig_level > 0.0 && self.sig_level < 1.0) {
            return Err(Error::invalid(format!(
                "significance level must lie in (0, 1), got {}",
                self.sig_level
            )));
        }
        Ok(())
    }
}

/// Estimated change points with the statistics behind them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChangePointResult {
    /// Sorted, strictly increasing, 0-based.
    pub change_points: Vec<usize>,
    /// Divisive: one p-value per tested segment, in detection order.
    /// Agglomerative: empty.
    pub p_values: Vec<f64>,
    /// Divisive: maximal scaled divergence per tested segment, in detection
    /// order. Agglomerative: divergence between each pair of adjacent
    /// clusters of the selected clustering.
    pub statistics: Vec<f64>,
    /// Divisive: global index of the best split per tested segment, aligned
    /// with `p_values`.
    pub candidates: Vec<usize>,
    pub config: DetectConfig,
}
