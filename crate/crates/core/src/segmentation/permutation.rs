use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{best_split, DetectConfig};
use crate::energy::SplitStatistic;
use crate::error::Result;
use crate::series::SeriesView;

/// `(1 + exceedances) / (replicates + 1)`.
pub fn permutation_p_value(exceedances: usize, replicates: usize) -> f64 {
    (1 + exceedances) as f64 / (replicates + 1) as f64
}

/// Random stream for replicate `r`: ChaCha8 keyed by `seed`, stream `r`.
fn replicate_rng(seed: u64, replicate: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate as u64);
    rng
}

/// Permutation p-value of `observed` under exchangeability of the segment.
///
/// Each of the `cfg.n_permutations` replicates shuffles the observations,
/// reruns [`best_split`] and counts whether its maximal divergence reaches
/// the observed one. Replicates are independent and evaluated in parallel;
/// the result does not depend on scheduling.
pub fn permutation_test(
    data: SeriesView<'_>,
    observed: &SplitStatistic,
    cfg: &DetectConfig,
) -> Result<f64> {
    cfg.validate()?;
    let maxima = (1..=cfg.n_permutations)
        .into_par_iter()
        .map(|r| {
            let mut order: Vec<usize> = (0..data.len()).collect();
            order.shuffle(&mut replicate_rng(cfg.seed, r));
            let shuffled = data.gather(&order);
            best_split(SeriesView::new(&shuffled, data.dim()), cfg).map(|s| s.q_value)
        })
        .collect::<Result<Vec<f64>>>()?;
    let exceedances = maxima.iter().filter(|&&q| q >= observed.q_value).count();
    Ok(permutation_p_value(exceedances, cfg.n_permutations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn p_value_formula() {
        assert_abs_diff_eq!(permutation_p_value(0, 199), 0.005);
        assert_eq!(permutation_p_value(199, 199), 1.0);
        assert_abs_diff_eq!(permutation_p_value(9, 199), 0.05);
    }

    #[test]
    fn constant_segment_is_never_significant() {
        let data = [1.0; 10];
        let view = SeriesView::new(&data, 1);
        let cfg = DetectConfig {
            n_permutations: 19,
            ..Default::default()
        };
        let obs = best_split(view, &cfg).unwrap();
        assert_eq!(permutation_test(view, &obs, &cfg).unwrap(), 1.0);
    }

    #[test]
    fn replicate_streams_differ_and_repeat() {
        use rand::Rng;
        let a: u64 = replicate_rng(5, 1).random();
        let b: u64 = replicate_rng(5, 2).random();
        let c: u64 = replicate_rng(5, 1).random();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn p_values_lie_on_the_lattice() {
        let data: Vec<f64> = (0..24).map(|i| ((i * 7919) % 31) as f64).collect();
        let view = SeriesView::new(&data, 1);
        let cfg = DetectConfig {
            n_permutations: 39,
            seed: 11,
            ..Default::default()
        };
        let obs = best_split(view, &cfg).unwrap();
        let p = permutation_test(view, &obs, &cfg).unwrap();
        let c = p * 40.0 - 1.0;
        assert!((c - c.round()).abs() < 1e-9 && (0.0..=39.0).contains(&c));
        assert_eq!(p, permutation_test(view, &obs, &cfg).unwrap());
    }
}
