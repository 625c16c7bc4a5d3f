//! Weighted quotient graphs `G/F`.
//!
//! The vertices of `G/F` are the connected components of `G - F`; two
//! components are joined by one quotient edge whenever some edge of `F`
//! crosses between them. The set of crossing edges is the quotient edge's
//! *fiber*. Host weights `w`, `w'`, `λ'` induce four quotient weights:
//!
//! * `w_i(X)`  = sum of `w` over the vertices of component `X`
//! * `λ_i(X)`  = sum of `λ'` over the edges inside `X`
//! * `w_i'(E)` = sum of `w'` over the fiber of `E`
//! * `λ_i'(E)` = sum of `λ'` over the fiber of `E`

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph};

/// Vertex weight `w` and edge weights `w'`, `λ'` on a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    pub w: Vec<u128>,
    pub w_prime: Vec<u128>,
    pub lambda_prime: Vec<u128>,
}

impl WeightAssignment {
    pub fn new(
        g: &Graph,
        w: Vec<u128>,
        w_prime: Vec<u128>,
        lambda_prime: Vec<u128>,
    ) -> Result<Self> {
        check_len(g.vertex_count(), w.len())?;
        check_len(g.edge_count(), w_prime.len())?;
        check_len(g.edge_count(), lambda_prime.len())?;
        Ok(WeightAssignment {
            w,
            w_prime,
            lambda_prime,
        })
    }

    /// All weights equal to one.
    pub fn unit(g: &Graph) -> Self {
        WeightAssignment {
            w: vec![1; g.vertex_count()],
            w_prime: vec![1; g.edge_count()],
            lambda_prime: vec![1; g.edge_count()],
        }
    }

    /// `w = 1`, `λ' = 1`, `w'(xy) = deg(x) + deg(y)`: the weighting under
    /// which the plain weighted indices wSz, wPI_v, wSz_e, wPI are recovered.
    pub fn degree_sum(g: &Graph) -> Self {
        Self::with_edge_factor(g, |a, b| a + b)
    }

    /// As [`WeightAssignment::degree_sum`] but with `w'(xy) = deg(x)·deg(y)`,
    /// giving the starred indices.
    pub fn degree_product(g: &Graph) -> Self {
        Self::with_edge_factor(g, |a, b| a * b)
    }

    pub fn for_suite(g: &Graph, starred: bool) -> Self {
        if starred {
            Self::degree_product(g)
        } else {
            Self::degree_sum(g)
        }
    }

    fn with_edge_factor(g: &Graph, f: impl Fn(u128, u128) -> u128) -> Self {
        let deg = g.degrees();
        WeightAssignment {
            w: vec![1; g.vertex_count()],
            w_prime: g
                .edges()
                .iter()
                .map(|&(x, y)| f(deg[x] as u128, deg[y] as u128))
                .collect(),
            lambda_prime: vec![1; g.edge_count()],
        }
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        check_len(g.vertex_count(), self.w.len())?;
        check_len(g.edge_count(), self.w_prime.len())?;
        check_len(g.edge_count(), self.lambda_prime.len())
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::WeightLength { expected, got })
    }
}

pub(crate) fn checked_sum(values: impl IntoIterator<Item = u128>) -> Result<u128> {
    values
        .into_iter()
        .try_fold(0u128, |acc, v| acc.checked_add(v))
        .ok_or(Error::Overflow)
}

/// A connected component of `G - F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    /// Edges of `G - F` with both ends in this component.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct QuotientGraph {
    graph: Graph,
    class: Vec<usize>,
    component_map: Vec<usize>,
    components: Vec<Component>,
    fibers: Vec<Vec<usize>>,
    stray: Vec<usize>,
    w: Vec<u128>,
    lambda: Vec<u128>,
    w_prime: Vec<u128>,
    lambda_prime: Vec<u128>,
}

impl QuotientGraph {
    /// The quotient itself. Vertex `i` is component `i`, edge `j` has fiber `j`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Edge ids of the class `F` this quotient was built from, sorted.
    pub fn class(&self) -> &[usize] {
        &self.class
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_map(&self) -> &[usize] {
        &self.component_map
    }

    pub fn fiber(&self, quotient_edge: usize) -> &[usize] {
        &self.fibers[quotient_edge]
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    /// Edges of `F` whose ends fall in the same component. Always empty when
    /// `F` is a class of a c-partition.
    pub fn stray_edges(&self) -> &[usize] {
        &self.stray
    }

    pub fn w(&self) -> &[u128] {
        &self.w
    }

    pub fn lambda(&self) -> &[u128] {
        &self.lambda
    }

    pub fn w_prime(&self) -> &[u128] {
        &self.w_prime
    }

    pub fn lambda_prime(&self) -> &[u128] {
        &self.lambda_prime
    }

    /// Quotient edge whose fiber holds host edge `e`, if `e` is in `F`.
    pub fn quotient_edge_of(&self, host: &Graph, e: usize) -> Option<usize> {
        let (u, v) = host.edge(e);
        let (a, b) = (self.component_map[u], self.component_map[v]);
        self.graph
            .neighbors(a)
            .iter()
            .find(|&&(x, _)| x == b)
            .map(|&(_, id)| id)
    }

    /// Annotated edge list: `v <id> <w> <λ>` per component and
    /// `e <a> <b> <λ'> <w'>` per quotient edge.
    pub fn to_annotated_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}",
            self.graph.vertex_count(),
            self.graph.edge_count()
        );
        for (i, (w, l)) in self.w.iter().zip(&self.lambda).enumerate() {
            let _ = writeln!(out, "v {i} {w} {l}");
        }
        for (j, &(a, b)) in self.graph.edges().iter().enumerate() {
            let _ = writeln!(
                out,
                "e {a} {b} {} {}",
                self.lambda_prime[j], self.w_prime[j]
            );
        }
        out
    }
}

/// Builds `G/F` with induced weights. `f` may be any edge subset; the empty
/// set gives the one-vertex quotient and `E(G)` gives a copy of `G`.
pub fn quotient_graph(g: &Graph, wa: &WeightAssignment, f: &[usize]) -> Result<QuotientGraph> {
    wa.check(g)?;
    let n = g.vertex_count();
    let mut in_class = vec![false; g.edge_count()];
    for &e in f {
        g.check_edge(e)?;
        in_class[e] = true;
    }
    let class: Vec<usize> = (0..g.edge_count()).filter(|&e| in_class[e]).collect();

    // Components are discovered from the smallest unvisited vertex, so their
    // indices follow their smallest vertex id.
    let mut component_map = vec![usize::MAX; n];
    let mut components: Vec<Component> = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if component_map[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut vertices = vec![start];
        component_map[start] = id;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in g.neighbors(u) {
                if !in_class[e] && component_map[v] == usize::MAX {
                    component_map[v] = id;
                    vertices.push(v);
                    queue.push_back(v);
                }
            }
        }
        vertices.sort_unstable();
        components.push(Component {
            vertices,
            edges: Vec::new(),
        });
    }
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if !in_class[e] {
            components[component_map[u]].edges.push(e);
        }
    }

    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut quotient_edges = Vec::new();
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    let mut stray = Vec::new();
    for &e in &class {
        let (u, v) = g.edge(e);
        let (a, b) = (component_map[u], component_map[v]);
        if a == b {
            stray.push(e);
            continue;
        }
        let id = *index.entry((a.min(b), a.max(b))).or_insert_with(|| {
            quotient_edges.push((a, b));
            fibers.push(Vec::new());
            fibers.len() - 1
        });
        fibers[id].push(e);
    }
    let graph = Graph::new(components.len(), &quotient_edges)?;

    let w = components
        .iter()
        .map(|c| checked_sum(c.vertices.iter().map(|&x| wa.w[x])))
        .collect::<Result<Vec<_>>>()?;
    let lambda = components
        .iter()
        .map(|c| checked_sum(c.edges.iter().map(|&e| wa.lambda_prime[e])))
        .collect::<Result<Vec<_>>>()?;
    let w_prime = fibers
        .iter()
        .map(|fib| checked_sum(fib.iter().map(|&e| wa.w_prime[e])))
        .collect::<Result<Vec<_>>>()?;
    let lambda_prime = fibers
        .iter()
        .map(|fib| checked_sum(fib.iter().map(|&e| wa.lambda_prime[e])))
        .collect::<Result<Vec<_>>>()?;

    Ok(QuotientGraph {
        graph,
        class,
        component_map,
        components,
        fibers,
        stray,
        w,
        lambda,
        w_prime,
        lambda_prime,
    })
}

/// `ℓ(u)`: the component of `G - F` containing `u`.
pub fn component_of(q: &QuotientGraph, u: usize) -> Result<usize> {
    q.component_map
        .get(u)
        .copied()
        .ok_or(Error::VertexOutOfRange {
            vertex: u,
            n: q.component_map.len(),
        })
}

/// Checks `d_G(u, v) = Σ_i d_{G_i}(ℓ_i(u), ℓ_i(v))` for every vertex pair.
pub fn distance_decomposition_check(g: &Graph, quotients: &[QuotientGraph]) -> Result<bool> {
    let host = all_pairs_distances(g)?;
    let tables = quotients
        .iter()
        .map(|q| all_pairs_distances(&q.graph))
        .collect::<Result<Vec<_>>>()?;
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let total: u64 = quotients
                .iter()
                .zip(&tables)
                .map(|(q, dm)| dm.get(q.component_map[u], q.component_map[v]) as u64)
                .sum();
            if total != host.get(u, v) as u64 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::theta_star_partition;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn c6_opposite_pair() {
        let g = cycle(6);
        let wa = WeightAssignment::degree_sum(&g);
        let q = quotient_graph(&g, &wa, &[0, 3]).unwrap();
        assert_eq!(q.graph().vertex_count(), 2);
        assert_eq!(q.graph().edge_count(), 1);
        assert_eq!(q.w(), &[3, 3]);
        assert_eq!(q.lambda(), &[2, 2]);
        assert_eq!(q.lambda_prime(), &[2]);
        assert_eq!(q.w_prime(), &[8]);
        assert_eq!(q.fiber(0), &[0, 3]);
        // arcs 1-2-3 and 4-5-0
        let map: Vec<usize> = (0..6).map(|u| component_of(&q, u).unwrap()).collect();
        assert_eq!(map, vec![0, 1, 1, 1, 0, 0]);
        assert!(component_of(&q, 6).is_err());
    }

    #[test]
    fn empty_and_full_classes() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let wa = WeightAssignment::new(
            &g,
            vec![1, 2, 3, 4, 5],
            vec![5, 4, 3, 2, 1],
            vec![1, 1, 2, 2, 3],
        )
        .unwrap();
        let empty = quotient_graph(&g, &wa, &[]).unwrap();
        assert_eq!(empty.graph().vertex_count(), 1);
        assert!(empty.component_map().iter().all(|&c| c == 0));
        assert_eq!(empty.w(), &[15]);
        assert_eq!(empty.lambda(), &[9]);

        let full = quotient_graph(&g, &wa, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(full.graph(), &g);
        assert_eq!(full.component_map(), &[0, 1, 2, 3, 4]);
        assert_eq!(full.w(), &wa.w[..]);
        assert!(full.lambda().iter().all(|&l| l == 0));
        assert_eq!(full.lambda_prime(), &wa.lambda_prime[..]);
        assert_eq!(full.w_prime(), &wa.w_prime[..]);
    }

    #[test]
    fn stray_edges_are_recorded() {
        let g = cycle(6);
        let q = quotient_graph(&g, &WeightAssignment::unit(&g), &[2]).unwrap();
        assert_eq!(q.graph().vertex_count(), 1);
        assert_eq!(q.stray_edges(), &[2]);
    }

    #[test]
    fn weight_length_checked() {
        let g = cycle(4);
        assert_eq!(
            WeightAssignment::new(&g, vec![1; 3], vec![1; 4], vec![1; 4]),
            Err(Error::WeightLength {
                expected: 4,
                got: 3
            })
        );
    }

    #[test]
    fn c6_distance_decomposition() {
        let g = cycle(6);
        let wa = WeightAssignment::unit(&g);
        let star = theta_star_partition(&g).unwrap();
        let qs: Vec<_> = star
            .classes()
            .iter()
            .map(|c| quotient_graph(&g, &wa, c).unwrap())
            .collect();
        assert!(distance_decomposition_check(&g, &qs).unwrap());
        let all: Vec<usize> = (0..6).collect();
        let single = vec![quotient_graph(&g, &wa, &all).unwrap()];
        assert!(distance_decomposition_check(&g, &single).unwrap());
        // not a c-partition: the check must notice
        let bad = vec![
            quotient_graph(&g, &wa, &[0, 1, 2]).unwrap(),
            quotient_graph(&g, &wa, &[3, 4, 5]).unwrap(),
        ];
        assert!(!distance_decomposition_check(&g, &bad).unwrap());
    }

    #[test]
    fn annotated_text() {
        let g = cycle(6);
        let q = quotient_graph(&g, &WeightAssignment::degree_sum(&g), &[0, 3]).unwrap();
        assert_eq!(q.to_annotated_text(), "2 1\nv 0 3 2\nv 1 3 2\ne 0 1 2 8\n");
    }
}
