//! Builds a benzenoid from axial hexagon coordinates and prints the three
//! weighted quotient trees.

use szeged_cut::molgen::{benzenoid_quotient_trees, build_benzenoid, HexSpec};

fn main() -> szeged_cut::Result<()> {
    // phenanthrene-like kink plus one more ring
    let spec = HexSpec::parse("0 0\n1 0\n1 1\n2 1\n")?;
    let b = build_benzenoid(&spec)?;
    println!(
        "{} vertices, {} edges",
        b.graph.vertex_count(),
        b.graph.edge_count()
    );
    for (label, tree) in b.labels().iter().zip(benzenoid_quotient_trees(&b)?) {
        println!("direction {label}:");
        print!("{}", tree.to_annotated_text());
    }
    let report = b.suite(false)?;
    println!("{}", report.to_text());
    Ok(())
}
