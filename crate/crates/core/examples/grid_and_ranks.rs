//! Builds reference grids and maps a small bivariate sample onto one.
//!
//! Run with `cargo run --example grid_and_ranks`.

use rankcp::assignment::{solve_lsap, CostMatrix};
use rankcp::grid::{halton_grid, torus_grid, unit_grid_1d};
use rankcp::ranks::compute_rank_map;
use rankcp::ObservationSeries;

fn main() -> rankcp::Result<()> {
    let halton = halton_grid(8, 2)?;
    println!("Halton grid, n = 8, d = 2:");
    for (i, p) in halton.points().enumerate() {
        println!("  {i}: ({:.4}, {:.4})", p[0], p[1]);
    }
    let torus = torus_grid(4, 2)?;
    println!("first torus point: {:?}", torus.point(0));
    println!("1-D grid, n = 4: {:?}", unit_grid_1d(4)?.values());

    // a small assignment problem on its own
    let cost = CostMatrix::from_rows(&[[4.0, 1.0, 3.0], [2.0, 0.0, 5.0], [3.0, 2.0, 2.0]])?;
    let a = solve_lsap(&cost);
    println!("\nassignment {:?} with cost {}", a.perm, a.total_cost);

    let sample = ObservationSeries::from_rows(&[
        [0.3, -1.2],
        [2.5, 0.4],
        [-0.7, 1.9],
        [1.1, 1.0],
        [-2.0, -0.5],
        [0.0, 0.0],
        [3.1, -2.2],
        [-1.4, 2.8],
    ])?;
    let map = compute_rank_map(sample.view(), &halton)?;
    println!("\nsample point -> rank");
    for i in 0..sample.len() {
        let (x, r) = (sample.row(i), map.rank(i));
        println!(
            "  ({:5.2}, {:5.2}) -> ({:.4}, {:.4})",
            x[0], x[1], r[0], r[1]
        );
    }
    Ok(())
}
