//! Agglomerative detection from fixed blocks, printing the merge sequence.
//!
//! Run with `cargo run --release --example agglomerative`.

use rankcp::datagen::{generate, SegmentSpec};
use rankcp::segmentation::{agglomerative_detect, DetectConfig};

fn main() -> rankcp::Result<()> {
    let series = generate(
        &[
            SegmentSpec::gaussian(50, vec![0.0], vec![1.0]),
            SegmentSpec::gaussian(50, vec![3.0], vec![1.0]),
            SegmentSpec::gaussian(50, vec![-1.0], vec![1.0]),
        ],
        2,
    )?;
    let (result, trace) = agglomerative_detect(&series, 10, &DetectConfig::default())?;

    println!("clusters  goodness-of-fit  change points");
    for level in trace.levels() {
        println!(
            "{:>8}  {:>15.3}  {:?}",
            level.n_clusters(),
            level.gof,
            level.change_points()
        );
    }
    println!("\nselected: {:?}", result.change_points);
    Ok(())
}
