//! Linear phenylenes PH_n: closed formulas against the cut method.
//!
//! `cargo run --example linear_phenylene -- 25`

use szeged_cut::molgen::{linear_phenylene, ph_closed_formulas};

fn main() -> szeged_cut::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    println!(
        "{:>4} {:>12} {:>10} {:>12} {:>10}",
        "n", "wSz", "wPI_v", "wSz_e", "wPI"
    );
    for n in 2..=max {
        let ph = linear_phenylene(n)?;
        let cut = ph.suite(false)?;
        let [sz, piv, sze, pi] = cut.values();
        assert_eq!(cut.values(), ph_closed_formulas(n)?.values());
        println!("{n:>4} {sz:>12} {piv:>10} {sze:>12} {pi:>10}");
    }
    Ok(())
}
