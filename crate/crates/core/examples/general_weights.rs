//! Arbitrary vertex and edge weights, including decimal ones.

use szeged_cut::decimal::parse_decimal_weights;
use szeged_cut::oracle::oracle_general;
use szeged_cut::{general_cut_index, theta_star_partition, Graph, IndexKind, WeightAssignment};

fn main() -> szeged_cut::Result<()> {
    // a 6-cycle with a pendant vertex
    let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)])?;
    let p = theta_star_partition(&g)?;

    let wa = WeightAssignment::new(
        &g,
        vec![1, 2, 3, 1, 2, 3, 5],
        vec![1, 1, 2, 2, 3, 3, 4],
        vec![2; 7],
    )?;
    for kind in [IndexKind::Sz, IndexKind::PiV, IndexKind::SzE, IndexKind::Pi] {
        let cut = general_cut_index(&g, &wa, &p, kind)?;
        assert_eq!(cut, oracle_general(&g, &wa, kind)?);
        println!("{kind:>5} = {cut}");
    }

    let scaled = parse_decimal_weights(
        &g,
        &["0.5", "1", "1", "1", "1", "1", "2.25"],
        &["1.5"; 7],
        &["1"; 7],
    )?;
    let sz = general_cut_index(&g, &scaled.weights, &p, IndexKind::Sz)?;
    println!("decimal SZ = {}", scaled.render(sz, IndexKind::Sz));
    Ok(())
}
