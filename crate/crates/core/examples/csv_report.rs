//! Writes a CSV, runs the command-line front end on it, and prints the JSON
//! report. The same run from a shell:
//!
//! ```text
//! rankcp --input series.csv --seed 7 --json report.json --plot series.svg
//! ```
//!
//! Run with `cargo run --release --example csv_report`.

use rankcp::cli::{run_with, write_csv};
use rankcp::datagen::{generate, SegmentSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("rankcp-csv-report");
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("series.csv");
    let json = dir.join("report.json");
    let svg = dir.join("series.svg");

    let series = generate(
        &[
            SegmentSpec::gaussian(100, vec![0.0, 0.0], vec![1.0, 1.0]),
            SegmentSpec::gaussian(100, vec![3.0, 3.0], vec![1.0, 1.0]),
        ],
        7,
    )?;
    write_csv(&series, &input)?;

    let argv = [
        "rankcp",
        "--input",
        input.to_str().unwrap(),
        "--seed",
        "7",
        "--json",
        json.to_str().unwrap(),
        "--plot",
        svg.to_str().unwrap(),
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    eprint!("{}", String::from_utf8_lossy(&err));
    println!(
        "exit code {code}, change points:\n{}",
        String::from_utf8_lossy(&out)
    );
    println!("{}", std::fs::read_to_string(&json)?);
    println!("plot written to {}", svg.display());
    Ok(())
}
