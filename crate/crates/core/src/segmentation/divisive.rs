use std::collections::VecDeque;

use super::{best_split, permutation_test, ChangePointResult, DetectConfig};
use crate::error::{Error, Result};
use crate::series::ObservationSeries;

/// Hierarchical binary segmentation with a permutation test at each split.
///
/// Segments are processed first-in first-out starting from the whole
/// series. A segment's best split is accepted when its p-value is at most
/// `cfg.sig_level`; both halves are then queued if they can still hold two
/// sides of `cfg.min_size`. Stops when the queue drains or
/// `cfg.max_change_points` change points have been accepted.
pub fn divisive_detect(
    series: &ObservationSeries,
    cfg: &DetectConfig,
) -> Result<ChangePointResult> {
    cfg.validate()?;
    let t = series.len();
    let min_len = 2 * cfg.min_size;
    if t < min_len {
        return Err(Error::TooShort {
            len: t,
            min: min_len,
        });
    }

    let mut change_points = Vec::new();
    let mut p_values = Vec::new();
    let mut statistics = Vec::new();
    let mut candidates = Vec::new();
    let mut queue = VecDeque::from([(0usize, t)]);

    while let Some((start, end)) = queue.pop_front() {
        if cfg
            .max_change_points
            .is_some_and(|cap| change_points.len() >= cap)
        {
            break;
        }
        let view = series.segment(start, end);
        let split = best_split(view, cfg)?;
        let p = permutation_test(view, &split, cfg)?;
        let location = start + split.tau;
        p_values.push(p);
        statistics.push(split.q_value);
        candidates.push(location);
        if p <= cfg.sig_level {
            change_points.push(location);
            for (s, e) in [(start, location), (location, end)] {
                if e - s >= min_len {
                    queue.push_back((s, e));
                }
            }
        }
    }

    change_points.sort_unstable();
    Ok(ChangePointResult {
        change_points,
        p_values,
        statistics,
        candidates,
        config: cfg.clone(),
    })
}
