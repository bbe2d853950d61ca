use super::{DetectConfig, KappaMode};
use crate::energy::{EnergyProfile, SplitStatistic};
use crate::error::{Error, Result};
use crate::ranks::rank_map;
use crate::series::SeriesView;

/// The split of `data` maximizing the scaled rank energy divergence.
///
/// `tau` and `kappa` in the result are relative to the start of `data`.
/// With [`KappaMode::SegmentEnd`] the ranks are computed once on the whole
/// segment and `kappa` is its length. With [`KappaMode::FullSweep`] every
/// prefix `0..kappa` is ranked separately. Ties go to the smallest `tau`,
/// then the smallest `kappa`.
pub fn best_split(data: SeriesView<'_>, cfg: &DetectConfig) -> Result<SplitStatistic> {
    cfg.validate()?;
    let len = data.len();
    let min = cfg.min_size;
    if len < 2 * min {
        return Err(Error::TooShort { len, min: 2 * min });
    }
    let kappas = match cfg.kappa_mode {
        KappaMode::SegmentEnd => len..=len,
        KappaMode::FullSweep => 2 * min..=len,
    };
    let mut best: Option<SplitStatistic> = None;
    for kappa in kappas {
        let ranks = rank_map(data.slice(0, kappa), cfg.grid)?;
        let profile = EnergyProfile::new(ranks.ranks(), &cfg.energy)?;
        for tau in min..=kappa - min {
            let s = profile.split(tau)?;
            let better = match &best {
                None => true,
                Some(b) => s.q_value > b.q_value || (s.q_value == b.q_value && s.tau < b.tau),
            };
            if better {
                best = Some(s);
            }
        }
    }
    Ok(best.expect("non-empty search range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::{pairwise_energy, scaled_divergence, EnergyConfig};
    use crate::grid::unit_grid_1d;

    fn v(points: &[f64]) -> SeriesView<'_> {
        SeriesView::new(points, 1)
    }

    #[test]
    fn step_series_splits_in_the_middle() {
        let data = [0.0, 0.0, 0.0, 0.0, 10.0, 10.0, 10.0, 10.0];
        let s = best_split(v(&data), &DetectConfig::default()).unwrap();
        assert_eq!(s.tau, 4);
        assert_eq!(s.kappa, 8);

        // brute force over tau on the mid-ranks (0.3125 x4, 0.8125 x4)
        let ranks = [
            0.3125, 0.3125, 0.3125, 0.3125, 0.8125, 0.8125, 0.8125, 0.8125,
        ];
        let cfg = EnergyConfig::default();
        let qs: Vec<f64> = (2..=6)
            .map(|t| {
                let e = pairwise_energy(v(&ranks[..t]), v(&ranks[t..]), &cfg).unwrap();
                scaled_divergence(t, 8 - t, e)
            })
            .collect();
        let arg = (0..qs.len())
            .max_by(|&a, &b| qs[a].total_cmp(&qs[b]))
            .unwrap()
            + 2;
        assert_eq!(arg, 4);
        assert!((s.q_value - qs[2]).abs() < 1e-12);
    }

    #[test]
    fn constant_series_ties_to_min_size() {
        let data = [3.0; 12];
        let cfg = DetectConfig {
            min_size: 3,
            ..Default::default()
        };
        let s = best_split(v(&data), &cfg).unwrap();
        assert_eq!(s.q_value, 0.0);
        assert_eq!(s.tau, 3);
    }

    #[test]
    fn too_short_rejected() {
        let data = [1.0, 2.0, 3.0];
        assert!(matches!(
            best_split(v(&data), &DetectConfig::default()),
            Err(Error::TooShort { .. })
        ));
    }

    #[test]
    fn full_sweep_covers_segment_end() {
        let data: Vec<f64> = (0..16)
            .map(|i| ((i * 7) % 5) as f64 + if i < 6 { 0.0 } else { 50.0 })
            .collect();
        let seg = best_split(v(&data), &DetectConfig::default()).unwrap();
        let full = best_split(
            v(&data),
            &DetectConfig {
                kappa_mode: KappaMode::FullSweep,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(full.q_value >= seg.q_value);
        assert_eq!(seg.tau, 6);

        // every candidate recomputed directly
        let cfg = EnergyConfig::default();
        let mut best = f64::NEG_INFINITY;
        for kappa in 4..=16 {
            let grid = unit_grid_1d(kappa).unwrap();
            for tau in 2..=kappa - 2 {
                let e = crate::energy::rank_energy(v(&data[..kappa]), tau, &grid, &cfg).unwrap();
                best = best.max(scaled_divergence(tau, kappa - tau, e));
            }
        }
        assert!((full.q_value - best).abs() < 1e-12);
    }
}
