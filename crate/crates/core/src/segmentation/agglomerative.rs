use std::collections::HashMap;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::{ChangePointResult, DetectConfig};
use crate::energy::{pairwise_energy, scaled_divergence};
use crate::error::{Error, Result};
use crate::ranks::rank_map;
use crate::series::ObservationSeries;

/// One clustering along the merge sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeLevel {
    /// `[0, b_1, ..., b_{k-1}, T]`; cluster `i` is `bounds[i]..bounds[i + 1]`.
    pub bounds: Vec<usize>,
    /// Divergence between cluster `i` and cluster `i + 1`.
    pub adjacent: Vec<f64>,
    /// Goodness-of-fit: the sum of `adjacent`.
    pub gof: f64,
}

impl MergeLevel {
    fn new(bounds: Vec<usize>, adjacent: Vec<f64>) -> Self {
        let gof = adjacent.iter().sum();
        Self {
            bounds,
            adjacent,
            gof,
        }
    }

    pub fn n_clusters(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn clusters(&self) -> Vec<Range<usize>> {
        self.bounds.windows(2).map(|w| w[0]..w[1]).collect()
    }

    /// Internal boundaries, i.e. the change points this clustering implies.
    pub fn change_points(&self) -> &[usize] {
        &self.bounds[1..self.bounds.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeStep {
    /// Left index of the merged pair `(merged, merged + 1)` in the
    /// clustering before the merge.
    pub merged: usize,
    pub level: MergeLevel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeTrace {
    pub initial: MergeLevel,
    pub steps: Vec<MergeStep>,
    /// Step whose clustering maximizes the goodness-of-fit; `None` when the
    /// initial clustering does.
    pub best_step: Option<usize>,
}

impl MergeTrace {
    /// Initial clustering followed by each post-merge clustering.
    pub fn levels(&self) -> impl Iterator<Item = &MergeLevel> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.level))
    }

    pub fn best(&self) -> &MergeLevel {
        match self.best_step {
            None => &self.initial,
            Some(i) => &self.steps[i].level,
        }
    }
}

/// The `n - 1` adjacent pairs `(i, i + 1)` of a clustering with `n` clusters.
pub fn legal_merges(clusters: &[Range<usize>]) -> Vec<(usize, usize)> {
    (1..clusters.len()).map(|i| (i - 1, i)).collect()
}

/// Sum of divergences between adjacent clusters. Each pair is ranked on its
/// own pooled observations.
pub fn goodness_of_fit(
    clusters: &[Range<usize>],
    series: &ObservationSeries,
    cfg: &DetectConfig,
) -> Result<f64> {
    cfg.energy.validate()?;
    let floor = cfg.energy.variant.min_side();
    for (i, c) in clusters.iter().enumerate() {
        if c.end > series.len() || c.len() < floor {
            return Err(Error::invalid(format!(
                "cluster {i} ({}..{}) is out of range or shorter than {floor}",
                c.start, c.end
            )));
        }
        if i > 0 && clusters[i - 1].end != c.start {
            return Err(Error::invalid(format!(
                "clusters {} and {i} are not contiguous",
                i - 1
            )));
        }
    }
    let mut total = 0.0;
    for w in clusters.windows(2) {
        total += adjacent_divergence(series, w[0].start, w[0].end, w[1].end, cfg)?;
    }
    Ok(total)
}

/// Divergence between `start..mid` and `mid..end`, ranked jointly.
fn adjacent_divergence(
    series: &ObservationSeries,
    start: usize,
    mid: usize,
    end: usize,
    cfg: &DetectConfig,
) -> Result<f64> {
    let ranks = rank_map(series.segment(start, end), cfg.grid)?;
    let r = ranks.ranks();
    let split = mid - start;
    let e = pairwise_energy(r.slice(0, split), r.slice(split, r.len()), &cfg.energy)?;
    Ok(scaled_divergence(split, end - mid, e))
}

struct DivergenceCache<'a> {
    series: &'a ObservationSeries,
    cfg: &'a DetectConfig,
    memo: HashMap<(usize, usize, usize), f64>,
}

impl DivergenceCache<'_> {
    fn get(&mut self, start: usize, mid: usize, end: usize) -> Result<f64> {
        if let Some(&q) = self.memo.get(&(start, mid, end)) {
            return Ok(q);
        }
        let q = adjacent_divergence(self.series, start, mid, end, self.cfg)?;
        self.memo.insert((start, mid, end), q);
        Ok(q)
    }

    fn adjacent(&mut self, bounds: &[usize]) -> Result<Vec<f64>> {
        bounds
            .windows(3)
            .map(|w| self.get(w[0], w[1], w[2]))
            .collect()
    }
}

/// Bottom-up segmentation preserving time order.
///
/// Starts from consecutive blocks of `initial_block` observations (the last
/// block absorbs any remainder). Each step merges the adjacent pair whose
/// merge leaves the largest goodness-of-fit, ties going to the leftmost
/// pair, until one cluster remains. The clustering with the largest
/// goodness-of-fit over the whole sequence is returned; ties go to the one
/// with fewer clusters.
pub fn agglomerative_detect(
    series: &ObservationSeries,
    initial_block: usize,
    cfg: &DetectConfig,
) -> Result<(ChangePointResult, MergeTrace)> {
    cfg.energy.validate()?;
    let floor = cfg.energy.variant.min_side();
    if initial_block < floor {
        return Err(Error::invalid(format!(
            "initial block must be at least {floor} for the {:?} statistic, got {initial_block}",
            cfg.energy.variant
        )));
    }
    let t = series.len();
    if t < 2 * initial_block {
        return Err(Error::TooShort {
            len: t,
            min: 2 * initial_block,
        });
    }

    let n_blocks = t / initial_block;
    let mut bounds: Vec<usize> = (0..n_blocks).map(|i| i * initial_block).collect();
    bounds.push(t);

    let mut cache = DivergenceCache {
        series,
        cfg,
        memo: HashMap::new(),
    };
    let initial = MergeLevel::new(bounds.clone(), cache.adjacent(&bounds)?);
    let mut steps: Vec<MergeStep> = Vec::with_capacity(n_blocks - 1);

    while bounds.len() > 2 {
        let mut best: Option<MergeStep> = None;
        for merged in 0..bounds.len() - 2 {
            let mut candidate = bounds.clone();
            candidate.remove(merged + 1);
            let level = MergeLevel::new(candidate.clone(), cache.adjacent(&candidate)?);
            if best.as_ref().is_none_or(|b| level.gof > b.level.gof) {
                best = Some(MergeStep { merged, level });
            }
        }
        let step = best.expect("at least one adjacent pair");
        bounds.clone_from(&step.level.bounds);
        steps.push(step);
    }

    let mut best_step = None;
    let mut best_gof = initial.gof;
    for (i, s) in steps.iter().enumerate() {
        if s.level.gof >= best_gof {
            best_gof = s.level.gof;
            best_step = Some(i);
        }
    }
    let trace = MergeTrace {
        initial,
        steps,
        best_step,
    };
    let chosen = trace.best();
    let result = ChangePointResult {
        change_points: chosen.change_points().to_vec(),
        p_values: Vec::new(),
        statistics: chosen.adjacent.clone(),
        candidates: Vec::new(),
        config: cfg.clone(),
    };
    Ok((result, trace))
}
