//! Cut-method timings on long phenylene chains. Run with `--release`.

use std::time::Instant;

use szeged_cut::molgen::linear_phenylene;

fn main() -> szeged_cut::Result<()> {
    for n in [100, 1_000, 10_000, 100_000] {
        let ph = linear_phenylene(n)?;
        let start = Instant::now();
        let report = ph.suite(false)?;
        println!(
            "PH_{n}: {} vertices, {:.3?}, wSz = {}",
            ph.graph.vertex_count(),
            start.elapsed(),
            report.wsz
        );
    }
    Ok(())
}
