//! The corannulene patch: Θ*-classes, the two-class coarsening, and the four
//! weighted indices by cut and by direct evaluation.

use szeged_cut::molgen::corannulene;
use szeged_cut::oracle::oracle_suite;
use szeged_cut::{coarsen, theta_star_partition, weighted_suite_cut};

fn main() -> szeged_cut::Result<()> {
    let g = corannulene();
    let star = theta_star_partition(&g)?;
    println!(
        "{} vertices, {} edges, {} Θ*-classes",
        g.vertex_count(),
        g.edge_count(),
        star.len()
    );
    print!("{}", star.describe(&g));

    // F1 is the class through the pentagon, F2 the rest
    let f1 = star.class_of(0);
    let grouping: Vec<usize> = (0..star.len()).map(|c| usize::from(c != f1)).collect();
    let two = coarsen(&star, &grouping)?;

    let cut = weighted_suite_cut(&g, &two, false)?;
    let direct = oracle_suite(&g, false)?;
    println!("{}", cut.to_json());
    assert_eq!(cut.values(), direct.values());
    Ok(())
}
