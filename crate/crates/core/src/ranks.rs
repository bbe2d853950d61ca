//! Multivariate ranks by optimal transport onto a reference grid.
//!
//! The pooled sample of `N` points is matched one-to-one onto an `N`-point
//! grid minimizing total squared Euclidean distance. The grid point a sample
//! point receives is its rank. In one dimension with the `i/N` grid this is
//! exactly the classical rank divided by `N`.
//!
//! Exact duplicates (which have probability zero under continuous data)
//! receive the mean of the grid points assigned to their group, the usual
//! mid-rank convention. Without ties the rank map is a bijection onto the
//! grid.

use crate::assignment::{solve_lsap, CostMatrix};
use crate::error::{Error, Result};
use crate::grid::{make_grid, GridFamily, UnitGrid};
use crate::series::{cmp_rows, SeriesView};

/// The pooled sample whose ranks are computed: all points of both sides in
/// time order.
pub type PooledSample<'a> = SeriesView<'a>;

#[derive(Debug, Clone, PartialEq)]
pub struct RankMap {
    ranks: Vec<f64>,
    assignment: Vec<usize>,
    grid: UnitGrid,
    tied_points: usize,
}

impl RankMap {
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.grid.dim()
    }

    /// Rank of sample point `i`.
    pub fn rank(&self, i: usize) -> &[f64] {
        let d = self.dim();
        &self.ranks[i * d..(i + 1) * d]
    }

    /// All ranks as a view, in sample order.
    pub fn ranks(&self) -> SeriesView<'_> {
        SeriesView::new(&self.ranks, self.dim())
    }

    /// Grid index matched to each sample point by the optimal assignment.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn grid(&self) -> &UnitGrid {
        &self.grid
    }

    /// Number of sample points that share their exact value with another
    /// point. Zero means the ranks are a permutation of the grid.
    pub fn tied_points(&self) -> usize {
        self.tied_points
    }
}

/// Squared Euclidean distances between every sample point and grid point.
pub fn cost_matrix(sample: PooledSample<'_>, grid: &UnitGrid) -> Result<CostMatrix> {
    if sample.dim() != grid.dim() {
        return Err(Error::DimensionMismatch {
            expected: grid.dim(),
            got: sample.dim(),
        });
    }
    if sample.len() != grid.len() {
        return Err(Error::SizeMismatch(format!(
            "sample has {} points but grid has {}",
            sample.len(),
            grid.len()
        )));
    }
    let n = sample.len();
    let mut entries = Vec::with_capacity(n * n);
    for p in sample.rows() {
        for g in grid.points() {
            entries.push(p.iter().zip(g).map(|(a, b)| (a - b) * (a - b)).sum());
        }
    }
    CostMatrix::new(entries, n)
}

/// Optimal-transport ranks of `sample` on `grid`.
pub fn compute_rank_map(sample: PooledSample<'_>, grid: &UnitGrid) -> Result<RankMap> {
    let cost = cost_matrix(sample, grid)?;
    let assignment = solve_lsap(&cost).perm;
    let d = grid.dim();
    let mut ranks = Vec::with_capacity(sample.len() * d);
    for &j in &assignment {
        ranks.extend_from_slice(grid.point(j));
    }
    let tied_points = average_ties(sample, &mut ranks);
    Ok(RankMap {
        ranks,
        assignment,
        grid: grid.clone(),
        tied_points,
    })
}

/// Ranks on a freshly generated grid of the sample's size.
pub fn rank_map(sample: PooledSample<'_>, family: GridFamily) -> Result<RankMap> {
    if sample.is_empty() {
        return Err(Error::invalid("cannot rank an empty sample"));
    }
    let grid = make_grid(family, sample.len(), sample.dim())?;
    compute_rank_map(sample, &grid)
}

fn average_ties(sample: PooledSample<'_>, ranks: &mut [f64]) -> usize {
    let n = sample.len();
    let d = sample.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cmp_rows(sample.row(a), sample.row(b)));
    let mut tied = 0;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && sample.row(order[end]) == sample.row(order[start]) {
            end += 1;
        }
        let group = &order[start..end];
        if group.len() > 1 {
            tied += group.len();
            let mut mean = vec![0.0; d];
            for &i in group {
                for (m, r) in mean.iter_mut().zip(&ranks[i * d..(i + 1) * d]) {
                    *m += r;
                }
            }
            let k = group.len() as f64;
            mean.iter_mut().for_each(|m| *m /= k);
            for &i in group {
                ranks[i * d..(i + 1) * d].copy_from_slice(&mean);
            }
        }
        start = end;
    }
    tied
}
