//! Offline multiple change point detection for multivariate series.
//!
//! Observations are mapped to multivariate ranks by solving an optimal
//! assignment of the pooled sample onto a fixed low-discrepancy grid in
//! `[0, 1]^d`. A two-sample energy statistic computed on those ranks is
//! distribution-free in finite samples, and drives two segmentation
//! procedures:
//!
//! * [`segmentation::divisive_detect`]: recursive binary splitting with a
//!   seeded permutation test at every split.
//! * [`segmentation::agglomerative_detect`]: greedy merging of adjacent
//!   clusters, keeping the clustering with the best goodness-of-fit.
//!
//! ```
//! use rankcp::datagen::{generate, SegmentSpec};
//! use rankcp::segmentation::{divisive_detect, DetectConfig};
//!
//! let series = generate(
//!     &[
//!         SegmentSpec::gaussian(40, vec![0.0, 0.0], vec![1.0, 1.0]),
//!         SegmentSpec::gaussian(40, vec![6.0, 6.0], vec![1.0, 1.0]),
//!     ],
//!     3,
//! )
//! .unwrap();
//! let cfg = DetectConfig { n_permutations: 49, ..DetectConfig::default() };
//! let result = divisive_detect(&series, &cfg).unwrap();
//! assert_eq!(result.change_points, vec![40]);
//! ```

pub mod assignment;
pub mod cli;
pub mod datagen;
pub mod energy;
mod error;
pub mod grid;
pub mod ranks;
pub mod segmentation;
mod series;

pub use error::{Error, Result};
pub use series::{ObservationSeries, SeriesView};
