//! Θ*-classes of a graph read from an edge-list file (or a built-in cube).

use szeged_cut::{is_partial_cube, theta_star_partition, Graph};

const CUBE: &str = "8 12
0 1
1 2
2 3
3 0
4 5
5 6
6 7
7 4
0 4
1 5
2 6
3 7
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => CUBE.to_string(),
    };
    let g = Graph::parse_edge_list(&text)?;
    let star = theta_star_partition(&g)?;
    println!("partial cube: {}", is_partial_cube(&g)?);
    for (i, line) in star.describe(&g).lines().enumerate() {
        println!("class {i}: {line}");
    }
    Ok(())
}
