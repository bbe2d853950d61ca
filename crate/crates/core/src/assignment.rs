//! Exact linear sum assignment on dense square cost matrices.

use crate::error::{Error, Result};

/// Dense `n x n` matrix of finite, non-negative transport costs.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    entries: Vec<f64>,
    n: usize,
}

impl CostMatrix {
    /// Builds from a row-major buffer of length `n * n`.
    pub fn new(entries: Vec<f64>, n: usize) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidCost(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::InvalidCost(format!(
                "entry ({}, {}) = {} is not a finite non-negative number",
                pos / n.max(1),
                pos % n.max(1),
                entries[pos]
            )));
        }
        Ok(Self { entries, n })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidCost(format!(
                    "matrix is not square: row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::new(entries, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    /// `sum_i cost[i, perm[i]]`, accumulated in row order.
    pub fn cost_of(&self, perm: &[usize]) -> f64 {
        perm.iter().enumerate().map(|(i, &j)| self.get(i, j)).sum()
    }
}

/// A perfect matching: `perm[row] = column`.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub perm: Vec<usize>,
    pub total_cost: f64,
}

/// Minimum-cost perfect matching by successive shortest augmenting paths with
/// dual potentials (Hungarian / Jonker-Volgenant family), `O(n^3)`.
///
/// Rows are inserted in index order and columns scanned in index order, with
/// strict comparisons, so ties between equally optimal matchings always
/// resolve the same way.
pub fn solve_lsap(cost: &CostMatrix) -> Assignment {
    let n = cost.n();
    if n == 0 {
        return Assignment {
            perm: Vec::new(),
            total_cost: 0.0,
        };
    }
    // 1-based internals; index 0 is the virtual source column.
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut col_owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut minv = vec![0.0f64; n + 1];
    let mut used = vec![false; n + 1];

    for i in 1..=n {
        col_owner[0] = i;
        let mut j0 = 0usize;
        minv.fill(f64::INFINITY);
        used.fill(false);
        loop {
            used[j0] = true;
            let i0 = col_owner[j0];
            let row = cost.row(i0 - 1);
            let ui0 = u[i0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = row[j - 1] - ui0 - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[col_owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if col_owner[j0] == 0 {
                break;
            }
        }
        // augment along the alternating path back to the source
        loop {
            let j1 = way[j0];
            col_owner[j0] = col_owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut perm = vec![0usize; n];
    for j in 1..=n {
        perm[col_owner[j] - 1] = j - 1;
    }
    let total_cost = cost.cost_of(&perm);
    Assignment { perm, total_cost }
}

/// Largest side accepted by [`lsap_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 9;

/// Exhaustive minimum over all `n!` permutations. Test oracle only.
///
/// Permutations are visited in lexicographic order and the first minimizer
/// is kept.
pub fn lsap_bruteforce(cost: &CostMatrix) -> Result<Assignment> {
    let n = cost.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::invalid(format!(
            "brute-force assignment limited to n <= {BRUTEFORCE_MAX_N}, got {n}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = Assignment {
        total_cost: cost.cost_of(&perm),
        perm: perm.clone(),
    };
    while next_permutation(&mut perm) {
        let c = cost.cost_of(&perm);
        if c < best.total_cost {
            best.total_cost = c;
            best.perm.copy_from_slice(&perm);
        }
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
