//! Cross-checks of the rank and energy pipeline against brute-force routes.

use approx::assert_abs_diff_eq;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use rankcp::assignment::lsap_bruteforce;
use rankcp::energy::{pairwise_energy, rank_energy, EnergyConfig, Variant};
use rankcp::grid::{halton_grid, unit_grid_1d};
use rankcp::ranks::{compute_rank_map, cost_matrix};
use rankcp::SeriesView;

#[test]
fn rank_energy_through_bruteforce_assignment() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pts: Vec<f64> = (0..16).map(|_| StandardNormal.sample(&mut rng)).collect();
    let sample = SeriesView::new(&pts, 2);
    let grid = halton_grid(8, 2).unwrap();
    let cfg = EnergyConfig::default();

    let oracle = lsap_bruteforce(&cost_matrix(sample, &grid).unwrap()).unwrap();
    let ranks: Vec<f64> = oracle
        .perm
        .iter()
        .flat_map(|&j| grid.point(j).to_vec())
        .collect();
    let expected = pairwise_energy(
        SeriesView::new(&ranks[..8], 2),
        SeriesView::new(&ranks[8..], 2),
        &cfg,
    )
    .unwrap();
    let got = rank_energy(sample, 4, &grid, &cfg).unwrap();
    assert_abs_diff_eq!(got, expected, epsilon = 1e-12);
}

#[test]
fn rank_energy_of_sorted_sample() {
    // ranks (0.25, 0.5 | 0.75, 1.0): 2/4 * 2.0 - 0.25 - 0.25
    let data = [0.1, 0.2, 0.3, 0.4];
    let e = rank_energy(
        SeriesView::new(&data, 1),
        2,
        &unit_grid_1d(4).unwrap(),
        &EnergyConfig::default(),
    )
    .unwrap();
    assert_abs_diff_eq!(e, 0.5, epsilon = 1e-15);
}

#[test]
fn ranks_depend_only_on_order_in_one_dimension() {
    let a = [3.0, -1.0, 7.5, 2.0, 0.0];
    let b = [30.0, -100.0, 1e6, 4.0, 3.9]; // same ordering
    let grid = unit_grid_1d(5).unwrap();
    let ra = compute_rank_map(SeriesView::new(&a, 1), &grid).unwrap();
    let rb = compute_rank_map(SeriesView::new(&b, 1), &grid).unwrap();
    assert_eq!(ra.ranks(), rb.ranks());
}

fn points(n: usize, d: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n * d)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn energy_is_symmetric(
        m in 2usize..30, n in 2usize..30, d in 1usize..4,
        alpha in prop::sample::select(vec![0.5, 1.0, 1.5, 2.0]),
        vstat in any::<bool>(), seed in any::<u64>(),
    ) {
        let a = points(m, d, seed);
        let b = points(n, d, seed.wrapping_add(1));
        let cfg = EnergyConfig { alpha, variant: if vstat { Variant::VStat } else { Variant::UStat } };
        let ab = pairwise_energy(SeriesView::new(&a, d), SeriesView::new(&b, d), &cfg).unwrap();
        let ba = pairwise_energy(SeriesView::new(&b, d), SeriesView::new(&a, d), &cfg).unwrap();
        prop_assert!((ab - ba).abs() <= 1e-12);
    }

    #[test]
    fn vstat_is_non_negative(
        m in 1usize..30, n in 1usize..30, d in 1usize..4,
        alpha in prop::sample::select(vec![0.25, 0.5, 1.0, 1.5, 2.0]),
        seed in any::<u64>(),
    ) {
        let a = points(m, d, seed);
        let b = points(n, d, seed ^ 0x5555);
        let cfg = EnergyConfig { alpha, variant: Variant::VStat };
        let e = pairwise_energy(SeriesView::new(&a, d), SeriesView::new(&b, d), &cfg).unwrap();
        prop_assert!(e >= -1e-12);
    }
}
