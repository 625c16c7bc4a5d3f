//! Immutable simple undirected graphs with dense vertex and edge ids, hop
//! distances and the plain-text edge-list format.
//!
//! Vertices are `0..n` and edges are `0..m` in the order they were supplied.
//! Disconnected graphs can be built; every index entry point checks
//! connectivity itself and fails with [`Error::Disconnected`].

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Distance value used for unreachable vertices inside BFS rows.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `(neighbor, edge id)` pairs in edge-id order.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge ids follow the order of
    /// `edge_list`; loops and repeated pairs (in either orientation) are
    /// rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges: edge_list.to_vec(),
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e` in the orientation it was created with.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    /// Hop distances from `source`, with [`UNREACHABLE`] for vertices in
    /// other components. Never fails on disconnected graphs.
    pub fn bfs_row(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &(v, _) in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || !self.bfs_row(0).contains(&UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Two-colouring by BFS; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(v, _) in &self.adjacency[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A connected graph is a tree iff it has exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
        let (n, m) = parse_pair(line, header)?;

        let mut edge_list = Vec::with_capacity(m);
        for (line, body) in lines {
            if edge_list.len() == m {
                return Err(Error::parse(line, format!("more than {m} edge lines")));
            }
            edge_list.push(parse_pair(line, body)?);
        }
        if edge_list.len() != m {
            return Err(Error::parse(
                0,
                format!("header announces {m} edges, found {}", edge_list.len()),
            ));
        }
        Graph::new(n, &edge_list)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(12 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut field = |name: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing {name}")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("`{tok}` is not a vertex index")))
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if it.next().is_some() {
        return Err(Error::parse(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Exact hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    let row = g.bfs_row(source);
    if row.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(row)
}

/// Symmetric `n x n` table of hop distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// One BFS per source vertex, run in parallel.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| g.bfs_row(s)).collect();
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        if row.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        data.extend_from_slice(&row);
    }
    Ok(DistanceMatrix { n, data })
}

/// `d(u, e) = min(d(u, x), d(u, y))` for `e = xy`.
pub fn edge_vertex_distance(g: &Graph, dm: &DistanceMatrix, u: usize, e: usize) -> Result<u32> {
    g.check_vertex(u)?;
    g.check_edge(e)?;
    let (x, y) = g.edge(e);
    Ok(dm.get(u, x).min(dm.get(u, y)))
}
