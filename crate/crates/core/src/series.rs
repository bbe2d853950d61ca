use crate::error::{Error, Result};

/// A `T x d` matrix of time-ordered observations, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationSeries {
    values: Vec<f64>,
    dim: usize,
}

impl ObservationSeries {
    /// Builds a series from a flat row-major buffer.
    pub fn new(values: Vec<f64>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("series dimension must be at least 1"));
        }
        if !values.len().is_multiple_of(dim) {
            return Err(Error::SizeMismatch(format!(
                "buffer of {} values is not a multiple of dimension {dim}",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!(
                "non-finite value at row {}, column {}",
                pos / dim,
                pos % dim
            )));
        }
        Ok(Self { values, dim })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut values = Vec::with_capacity(rows.len() * dim);
        for row in rows {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        Self::new(values, dim)
    }

    /// Univariate convenience constructor.
    pub fn univariate(values: Vec<f64>) -> Result<Self> {
        Self::new(values, 1)
    }

    pub fn len(&self) -> usize {
        self.values.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn view(&self) -> SeriesView<'_> {
        SeriesView {
            values: &self.values,
            dim: self.dim,
        }
    }

    /// Rows `start..end` as a borrowed view.
    pub fn segment(&self, start: usize, end: usize) -> SeriesView<'_> {
        assert!(start <= end && end <= self.len(), "segment out of range");
        SeriesView {
            values: &self.values[start * self.dim..end * self.dim],
            dim: self.dim,
        }
    }

    /// Number of rows that repeat an earlier row exactly.
    pub fn duplicate_rows(&self) -> usize {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| cmp_rows(self.row(a), self.row(b)));
        idx.windows(2)
            .filter(|w| self.row(w[0]) == self.row(w[1]))
            .count()
    }
}

/// Borrowed, contiguous run of observations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesView<'a> {
    values: &'a [f64],
    dim: usize,
}

impl<'a> SeriesView<'a> {
    /// Wraps a row-major buffer. Panics if the buffer is not a whole number of rows.
    pub fn new(values: &'a [f64], dim: usize) -> Self {
        assert!(
            dim > 0 && values.len().is_multiple_of(dim),
            "ragged point buffer"
        );
        Self { values, dim }
    }

    pub fn len(&self) -> usize {
        self.values.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &'a [f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    pub fn values(&self) -> &'a [f64] {
        self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &'a [f64]> + 'a {
        self.values.chunks_exact(self.dim)
    }

    pub fn slice(&self, start: usize, end: usize) -> SeriesView<'a> {
        SeriesView {
            values: &self.values[start * self.dim..end * self.dim],
            dim: self.dim,
        }
    }

    /// Copies the rows in the order given by `order`.
    pub fn gather(&self, order: &[usize]) -> Vec<f64> {
        let mut out = Vec::with_capacity(order.len() * self.dim);
        for &i in order {
            out.extend_from_slice(self.row(i));
        }
        out
    }
}

pub(crate) fn cmp_rows(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}
