//! Fixed reference grids in the unit cube.
//!
//! Ranks are defined by transporting a pooled sample onto one of these point
//! sets. Every generator here is deterministic and skips the origin so that
//! all coordinates lie in `(0, 1]` and points are pairwise distinct.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which generator produced a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Halton,
    Torus,
    Uniform1d,
}

/// Grid family requested by a caller. `Halton` falls back to the uniform
/// `i/n` grid in one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridFamily {
    #[default]
    Halton,
    Torus,
}

/// `n` points in `[0, 1]^d`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitGrid {
    points: Vec<f64>,
    dim: usize,
    kind: GridKind,
}

impl UnitGrid {
    pub fn len(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.dim)
    }

    pub fn values(&self) -> &[f64] {
        &self.points
    }
}

/// Base-`base` digit reversal of `index`.
pub fn radical_inverse(index: u64, base: u64) -> Result<f64> {
    if index == 0 {
        return Err(Error::invalid("radical inverse index must be >= 1"));
    }
    if base < 2 {
        return Err(Error::invalid("radical inverse base must be >= 2"));
    }
    let inv_base = 1.0 / base as f64;
    let mut scale = inv_base;
    let mut acc = 0.0;
    let mut i = index;
    while i > 0 {
        acc += (i % base) as f64 * scale;
        i /= base;
        scale *= inv_base;
    }
    Ok(acc)
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while primes.len() < count {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| !candidate.is_multiple_of(p))
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// Unscrambled Halton points `1..=n` using the first `d` primes as bases.
pub fn halton_grid(n: usize, d: usize) -> Result<UnitGrid> {
    if n == 0 {
        return Err(Error::invalid("grid size must be >= 1"));
    }
    if d < 2 {
        return Err(Error::invalid(
            "halton grid needs d >= 2; use unit_grid_1d for one dimension",
        ));
    }
    let bases = first_primes(d);
    let mut points = Vec::with_capacity(n * d);
    for i in 1..=n as u64 {
        for &b in &bases {
            points.push(radical_inverse(i, b)?);
        }
    }
    Ok(UnitGrid {
        points,
        dim: d,
        kind: GridKind::Halton,
    })
}

/// `(1/n, 2/n, ..., 1)`.
pub fn unit_grid_1d(n: usize) -> Result<UnitGrid> {
    if n == 0 {
        return Err(Error::invalid("grid size must be >= 1"));
    }
    let nf = n as f64;
    Ok(UnitGrid {
        points: (1..=n).map(|i| i as f64 / nf).collect(),
        dim: 1,
        kind: GridKind::Uniform1d,
    })
}

/// Kronecker sequence: fractional parts of `i * sqrt(p_j)` for `i = 1..=n`.
pub fn torus_grid(n: usize, d: usize) -> Result<UnitGrid> {
    if n == 0 {
        return Err(Error::invalid("grid size must be >= 1"));
    }
    if d == 0 {
        return Err(Error::invalid("grid dimension must be >= 1"));
    }
    let roots: Vec<f64> = first_primes(d).iter().map(|&p| (p as f64).sqrt()).collect();
    let mut points = Vec::with_capacity(n * d);
    for i in 1..=n {
        for &r in &roots {
            points.push((i as f64 * r).fract());
        }
    }
    Ok(UnitGrid {
        points,
        dim: d,
        kind: GridKind::Torus,
    })
}

/// Grid of `n` points in dimension `d` for the requested family.
pub fn make_grid(family: GridFamily, n: usize, d: usize) -> Result<UnitGrid> {
    match (family, d) {
        (GridFamily::Halton, 1) => unit_grid_1d(n),
        (GridFamily::Halton, _) => halton_grid(n, d),
        (GridFamily::Torus, _) => torus_grid(n, d),
    }
}
