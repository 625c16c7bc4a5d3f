//! Molecular graph generators: benzenoid systems cut out of the hexagonal
//! lattice, phenylenes built from catacondensed cell sets, the linear
//! phenylenes `PH_n`, and the corannulene fullerene patch.
//!
//! Cells are pointy-top hexagons in axial coordinates `(q, r)`. Lattice
//! points are kept in integer coordinates: `x` in units of `√3/2` and `y`
//! in units of `1/2`, so a cell centre sits at `(2q + r, 3r)` and corners
//! never need floating-point merging.
//!
//! Every edge carries a direction label: 1 for vertical edges, 2 and 3 for
//! the two diagonal families, and (phenylenes only) 4 for the edges of the
//! squares inserted between adjacent hexagons.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{suite_from_quotients, ClassContribution, IndexReport, Method};
use crate::quotient::{quotient_graph, QuotientGraph, WeightAssignment};
use crate::theta::EdgePartition;

/// Corner offsets from the cell centre, counter-clockwise from 30°.
const CORNERS: [(i64, i64); 6] = [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)];

/// Direction of the side from corner `k` to corner `k + 1`.
const SIDE_LABEL: [u8; 6] = [2, 3, 1, 2, 3, 1];

/// Axial offsets of the six neighbouring cells.
const NEIGHBORS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

pub const SQUARE_LABEL: u8 = 4;

fn corner(cell: (i64, i64), k: usize) -> (i64, i64) {
    let (q, r) = cell;
    (2 * q + r + CORNERS[k].0, 3 * r + CORNERS[k].1)
}

/// A nonempty set of distinct hexagon cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexSpec {
    cells: Vec<(i64, i64)>,
}

impl HexSpec {
    pub fn new(cells: Vec<(i64, i64)>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptySpec);
        }
        let mut seen = std::collections::HashSet::new();
        for &(q, r) in &cells {
            if !seen.insert((q, r)) {
                return Err(Error::DuplicateCell { q, r });
            }
        }
        Ok(HexSpec { cells })
    }

    /// `h` cells in a straight row sharing vertical sides.
    pub fn linear_chain(h: usize) -> Result<Self> {
        Self::new((0..h as i64).map(|q| (q, 0)).collect())
    }

    pub fn cells(&self) -> &[(i64, i64)] {
        &self.cells
    }

    /// One `q r` pair per line; `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(i + 1, "expected `q r`"));
            }
            let coord = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| Error::parse(i + 1, format!("`{s}` is not an integer")))
            };
            cells.push((coord(fields[0])?, coord(fields[1])?));
        }
        Self::new(cells)
    }

    /// Pairs `(i, j)`, `i < j`, of cells sharing a side.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let index: HashMap<(i64, i64), usize> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut pairs = Vec::new();
        for (i, &(q, r)) in self.cells.iter().enumerate() {
            for (dq, dr) in NEIGHBORS {
                if let Some(&j) = index.get(&(q + dq, r + dr)) {
                    if i < j {
                        pairs.push((i, j));
                    }
                }
            }
        }
        pairs
    }

    /// The inner dual: cells as vertices, shared sides as edges.
    pub fn cell_graph(&self) -> Graph {
        Graph::new(self.cells.len(), &self.adjacent_pairs()).expect("cell pairs are simple")
    }

    /// No lattice point lies in three cells.
    pub fn is_catacondensed(&self) -> bool {
        let mut count: HashMap<(i64, i64), u8> = HashMap::new();
        for &cell in &self.cells {
            for k in 0..6 {
                *count.entry(corner(cell, k)).or_default() += 1;
            }
        }
        count.values().all(|&c| c < 3)
    }
}

/// Where an edge of a generated molecule came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    /// Side of this cell (the first cell listing it, for shared sides).
    Hexagon(usize),
    /// Edge of the square inserted between these two cells.
    Square(usize, usize),
}

#[derive(Debug, Clone)]
pub struct DirectionLabeledGraph {
    pub graph: Graph,
    pub direction_of: Vec<u8>,
    pub origin: Vec<EdgeOrigin>,
    pub spec: HexSpec,
    /// The cell set encloses holes, so it is not bounded by a single cycle.
    pub nonstandard_region: bool,
}

impl DirectionLabeledGraph {
    /// Direction labels present in the graph, ascending.
    pub fn labels(&self) -> Vec<u8> {
        let mut labels = self.direction_of.clone();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// Edge ids of each present label, in label order.
    pub fn direction_classes(&self) -> Vec<(u8, Vec<usize>)> {
        self.labels()
            .into_iter()
            .map(|label| {
                let edges = (0..self.direction_of.len())
                    .filter(|&e| self.direction_of[e] == label)
                    .collect();
                (label, edges)
            })
            .collect()
    }

    /// The direction partition. It is taken to be a c-partition without a Θ*
    /// check unless the region has holes.
    pub fn partition(&self) -> EdgePartition {
        let p = EdgePartition::from_labels(&self.direction_of);
        if self.nonstandard_region {
            p
        } else {
            p.assume_refined()
        }
    }

    /// Quotients by each direction class, each required to be a tree.
    pub fn direction_quotients(&self, wa: &WeightAssignment) -> Result<Vec<(u8, QuotientGraph)>> {
        self.direction_classes()
            .into_iter()
            .map(|(label, class)| {
                let q = quotient_graph(&self.graph, wa, &class)?;
                if q.graph().is_tree() {
                    Ok((label, q))
                } else {
                    Err(Error::NotATree { label })
                }
            })
            .collect()
    }

    /// The suite by the cut method over direction quotient trees. Per-class
    /// entries are in label order.
    pub fn suite(&self, starred: bool) -> Result<IndexReport> {
        self.graph.require_connected()?;
        if self.nonstandard_region {
            self.partition().certify(&self.graph)?;
        }
        let wa = WeightAssignment::for_suite(&self.graph, starred);
        let quotients: Vec<QuotientGraph> = self
            .direction_quotients(&wa)?
            .into_iter()
            .map(|(_, q)| q)
            .collect();
        let mut report = suite_from_quotients(&quotients, starred)?;
        report.nonstandard_region = Some(self.nonstandard_region);
        Ok(report)
    }

    /// `edge_id label` lines.
    pub fn labels_text(&self) -> String {
        let mut out = String::new();
        for (e, label) in self.direction_of.iter().enumerate() {
            let _ = writeln!(out, "{e} {label}");
        }
        out
    }
}

/// Parses `edge_id label` lines back into a label table for `m` edges.
pub fn parse_labels(text: &str, m: usize) -> Result<Vec<u8>> {
    let mut labels = vec![None; m];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [e, l] => e.parse::<usize>().ok().zip(l.parse::<u8>().ok()),
            _ => None,
        };
        let (e, label) = parsed.ok_or_else(|| Error::parse(i + 1, "expected `edge_id label`"))?;
        if e >= m {
            return Err(Error::EdgeOutOfRange { edge: e, m });
        }
        if labels[e].replace(label).is_some() {
            return Err(Error::parse(i + 1, format!("edge {e} listed twice")));
        }
    }
    labels
        .into_iter()
        .collect::<Option<Vec<u8>>>()
        .ok_or(Error::PartitionNotCovering)
}

fn require_connected_cells(spec: &HexSpec) -> Result<Graph> {
    let cells = spec.cell_graph();
    if cells.is_connected() {
        Ok(cells)
    } else {
        Err(Error::DisconnectedCells)
    }
}

/// The graph of all lattice points and sides of the given cells.
pub fn build_benzenoid(spec: &HexSpec) -> Result<DirectionLabeledGraph> {
    require_connected_cells(spec)?;
    let mut points: HashMap<(i64, i64), usize> = HashMap::new();
    let mut sides: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut direction_of = Vec::new();
    let mut origin = Vec::new();
    for (i, &cell) in spec.cells().iter().enumerate() {
        let ids: Vec<usize> = (0..6)
            .map(|k| {
                let next = points.len();
                *points.entry(corner(cell, k)).or_insert(next)
            })
            .collect();
        for k in 0..6 {
            let (a, b) = (ids[k], ids[(k + 1) % 6]);
            let next = edges.len();
            if *sides.entry((a.min(b), a.max(b))).or_insert(next) == next {
                edges.push((a, b));
                direction_of.push(SIDE_LABEL[k]);
                origin.push(EdgeOrigin::Hexagon(i));
            }
        }
    }
    let graph = Graph::new(points.len(), &edges)?;
    // Euler: V - E + (cells + holes + 1) = 2
    let holes = 1 + edges.len() as i64 - points.len() as i64 - spec.cells().len() as i64;
    Ok(DirectionLabeledGraph {
        graph,
        direction_of,
        origin,
        spec: spec.clone(),
        nonstandard_region: holes > 0,
    })
}

/// The three direction quotients of a benzenoid under the degree-sum
/// weights, in label order. Fails if any of them is not a tree.
pub fn benzenoid_quotient_trees(b: &DirectionLabeledGraph) -> Result<Vec<QuotientGraph>> {
    let wa = WeightAssignment::degree_sum(&b.graph);
    Ok(b.direction_quotients(&wa)?
        .into_iter()
        .filter(|(label, _)| *label != SQUARE_LABEL)
        .map(|(_, q)| q)
        .collect())
}

/// A separate hexagon per cell, with a square inserted between every pair
/// of adjacent cells. The square's two new edges join the two copies of
/// each endpoint of the side the cells share on the lattice.
pub fn build_phenylene(spec: &HexSpec) -> Result<DirectionLabeledGraph> {
    let cells = require_connected_cells(spec)?;
    if !spec.is_catacondensed() {
        return Err(Error::NotCatacondensed);
    }
    if !cells.is_tree() {
        return Err(Error::CellsNotTree);
    }
    let h = spec.cells().len();
    let mut edges = Vec::with_capacity(8 * h);
    let mut direction_of = Vec::with_capacity(8 * h);
    let mut origin = Vec::with_capacity(8 * h);
    for i in 0..h {
        for (k, &label) in SIDE_LABEL.iter().enumerate() {
            edges.push((6 * i + k, 6 * i + (k + 1) % 6));
            direction_of.push(label);
            origin.push(EdgeOrigin::Hexagon(i));
        }
    }
    for (i, j) in spec.adjacent_pairs() {
        let (ci, cj) = (spec.cells()[i], spec.cells()[j]);
        for ki in 0..6 {
            if let Some(kj) = (0..6).find(|&kj| corner(cj, kj) == corner(ci, ki)) {
                edges.push((6 * i + ki, 6 * j + kj));
                direction_of.push(SQUARE_LABEL);
                origin.push(EdgeOrigin::Square(i, j));
            }
        }
    }
    Ok(DirectionLabeledGraph {
        graph: Graph::new(6 * h, &edges)?,
        direction_of,
        origin,
        spec: spec.clone(),
        nonstandard_region: false,
    })
}

/// `PH_n`: the phenylene of a straight chain of `n` hexagons.
pub fn linear_phenylene(n: usize) -> Result<DirectionLabeledGraph> {
    if n < 2 {
        return Err(Error::NTooSmall { n });
    }
    build_phenylene(&HexSpec::linear_chain(n)?)
}

fn poly(n: i128, coeffs: &[i128]) -> Result<i128> {
    // coefficients from the highest power down
    coeffs
        .iter()
        .try_fold(0i128, |acc, &c| acc.checked_mul(n)?.checked_add(c))
        .ok_or(Error::Overflow)
}

fn exact_third(numerator: i128) -> i128 {
    assert_eq!(
        numerator % 3,
        0,
        "numerator {numerator} is not divisible by 3"
    );
    numerator / 3
}

fn to_value(x: i128) -> Result<u128> {
    u128::try_from(x).map_err(|_| Error::Overflow)
}

/// Closed formulas for the suite of `PH_n`. The per-class table holds the
/// quotient trees of the vertical, the two diagonal, and the square classes.
pub fn ph_closed_formulas(n: usize) -> Result<IndexReport> {
    if n < 2 {
        return Err(Error::NTooSmall { n });
    }
    let x = n as i128;
    let vertical = [
        poly(x, &[108, -36, 0, 0])?,
        poly(x, &[72, -24, 0])?,
        poly(x, &[108, -108, 36, -4])?,
        poly(x, &[72, -48, 8])?,
    ];
    let diagonal = [
        poly(x, &[60, 0, -6, 18])?,
        poly(x, &[60, -12, 0])?,
        exact_third(poly(x, &[320, -480, 184, 72])?),
        poly(x, &[80, -56, 8])?,
    ];
    let square = [
        poly(x, &[72, 0, -72, 0])?,
        poly(x, &[72, -72, 0])?,
        poly(x, &[128, -192, 112, -48])?,
        poly(x, &[96, -144, 48])?,
    ];
    let totals = [
        poly(x, &[300, -36, -84, 36])?,
        poly(x, &[264, -120, 0])?,
        exact_third(poly(x, &[1348, -1860, 812, -12])?),
        poly(x, &[328, -304, 72])?,
    ];
    for k in 0..4 {
        assert_eq!(
            vertical[k] + 2 * diagonal[k] + square[k],
            totals[k],
            "per-tree formulas disagree with the totals"
        );
    }
    let edges = [2 * n, 2 * n, 2 * n, 2 * (n - 1)];
    let per_class = [vertical, diagonal, diagonal, square]
        .iter()
        .enumerate()
        .map(|(i, v)| {
            Ok(ClassContribution {
                class: i,
                edges: edges[i],
                wsz: to_value(v[0])?,
                wpi_v: to_value(v[1])?,
                wsz_e: to_value(v[2])?,
                wpi: to_value(v[3])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexReport {
        method: Method::Formula,
        starred: false,
        wsz: to_value(totals[0])?,
        wpi_v: to_value(totals[1])?,
        wsz_e: to_value(totals[2])?,
        wpi: to_value(totals[3])?,
        per_class,
        nonstandard_region: Some(false),
    })
}

/// The fullerene patch made of a pentagon ringed by five hexagons
/// (corannulene, 20 vertices and 25 edges).
///
/// Vertices `0..5` form the pentagon, `5..10` are the spoke ends (`i + 5`
/// is joined to pentagon vertex `i`), and `10..20` are the degree-2 rim
/// vertices. Edges come as pentagon sides, spokes, then the 15-cycle rim.
pub fn corannulene() -> Graph {
    let mut edges = Vec::with_capacity(25);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        let (a, b) = (10 + 2 * i, 11 + 2 * i);
        edges.push((i + 5, a));
        edges.push((a, b));
        edges.push((b, (i + 1) % 5 + 5));
    }
    Graph::new(20, &edges).expect("corannulene is simple")
}
