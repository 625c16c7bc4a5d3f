#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use szeged_cut::molgen::HexSpec;
use szeged_cut::oracle::oracle_edge_sides;
use szeged_cut::{
    coarsen, theta_star_partition, EdgePartition, Graph, QuotientGraph, WeightAssignment,
};

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

fn push_edge(
    edges: &mut Vec<(usize, usize)>,
    seen: &mut HashSet<(usize, usize)>,
    u: usize,
    v: usize,
) {
    if u != v && seen.insert((u.min(v), u.max(v))) {
        edges.push((u, v));
    }
}

/// Random spanning tree plus `extra` random chords, vertices shuffled.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    for v in 1..n {
        let p = rng.gen_range(0..v);
        push_edge(&mut edges, &mut seen, label[p], label[v]);
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        push_edge(&mut edges, &mut seen, u, v);
    }
    edges.shuffle(rng);
    Graph::new(n, &edges).unwrap()
}

/// Random connected bipartite graph: every edge joins the two colour classes.
pub fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut colour: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    colour[0] = true;
    colour[1] = false;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    // vertices 0 and 1 have opposite colours, so every later vertex has a partner
    push_edge(&mut edges, &mut seen, 0, 1);
    for v in 2..n {
        let partners: Vec<usize> = (0..v).filter(|&u| colour[u] != colour[v]).collect();
        let p = *partners.choose(rng).unwrap();
        push_edge(&mut edges, &mut seen, p, v);
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if colour[u] != colour[v] {
            push_edge(&mut edges, &mut seen, u, v);
        }
    }
    edges.shuffle(rng);
    Graph::new(n, &edges).unwrap()
}

/// 240 connected graphs with 2..=12 vertices: sparse, dense, bipartite and cycles.
pub fn corpus(rng: &mut ChaCha8Rng) -> Vec<Graph> {
    let mut out = Vec::new();
    for i in 0..240 {
        let n = rng.gen_range(2..=12);
        let g = match i % 4 {
            0 => {
                let extra = rng.gen_range(0..=3);
                random_connected(rng, n, extra)
            }
            1 => {
                let extra = rng.gen_range(0..=2 * n);
                random_connected(rng, n, extra)
            }
            2 => {
                let extra = rng.gen_range(0..=n);
                random_bipartite(rng, n, extra)
            }
            _ => cycle(n.max(3)),
        };
        out.push(g);
    }
    out
}

pub fn random_weights(rng: &mut ChaCha8Rng, g: &Graph) -> WeightAssignment {
    let mut draw = |k: usize| (0..k).map(|_| rng.gen_range(0..=5u128)).collect::<Vec<_>>();
    let w = draw(g.vertex_count());
    let w_prime = draw(g.edge_count());
    let lambda_prime = draw(g.edge_count());
    WeightAssignment::new(g, w, w_prime, lambda_prime).unwrap()
}

/// Θ*-partition, single class, and a random grouping of Θ*-classes.
pub fn c_partitions(rng: &mut ChaCha8Rng, g: &Graph) -> Vec<EdgePartition> {
    let star = theta_star_partition(g).unwrap();
    let groups = rng.gen_range(1..=star.len());
    let grouping: Vec<usize> = (0..star.len()).map(|_| rng.gen_range(0..groups)).collect();
    let random = coarsen(&star, &grouping).unwrap();
    vec![star, EdgePartition::single_class(g.edge_count()), random]
}

pub fn weighted(values: &[u128], set: &[usize]) -> u128 {
    set.iter().map(|&i| values[i]).sum()
}

/// Side sums `(n, m)` of the endpoint `side` of quotient edge `qe`, using
/// vertex weights `vw` and edge weights `ew` on the quotient.
pub fn quotient_side(
    q: &QuotientGraph,
    qe: usize,
    side: usize,
    vw: &[u128],
    ew: &[u128],
) -> (u128, u128) {
    let s = oracle_edge_sides(q.graph(), qe).unwrap();
    if s.u == side {
        (weighted(vw, &s.n_u), weighted(ew, &s.m_u))
    } else {
        assert_eq!(s.v, side);
        (weighted(vw, &s.n_v), weighted(ew, &s.m_v))
    }
}

/// Checks per-edge identities between `g` and its quotients:
/// adjacency of endpoint components, `n_u(e) = n_U(E)` and
/// `m_u(e) = n_U(E | λ_i) + m_U(E | λ_i')`. Returns the first violation.
pub fn per_edge_identities(
    g: &Graph,
    wa: &WeightAssignment,
    quotients: &[QuotientGraph],
) -> Result<(), String> {
    for (i, q) in quotients.iter().enumerate() {
        if !q.stray_edges().is_empty() {
            return Err(format!("class {i} has edges inside one component"));
        }
        for &e in q.class() {
            let (u, v) = g.edge(e);
            let (cu, cv) = (q.component_map()[u], q.component_map()[v]);
            let qe = q
                .quotient_edge_of(g, e)
                .ok_or_else(|| format!("edge {e}: components {cu},{cv} not adjacent"))?;
            let host = oracle_edge_sides(g, e).unwrap();
            for (end, comp, nset, mset) in
                [(u, cu, &host.n_u, &host.m_u), (v, cv, &host.n_v, &host.m_v)]
            {
                let (n_quot, _) = quotient_side(q, qe, comp, q.w(), q.lambda_prime());
                if weighted(&wa.w, nset) != n_quot {
                    return Err(format!("edge {e}, end {end}: vertex side differs"));
                }
                let (n_lambda, m_lambda) = quotient_side(q, qe, comp, q.lambda(), q.lambda_prime());
                if weighted(&wa.lambda_prime, mset) != n_lambda + m_lambda {
                    return Err(format!("edge {e}, end {end}: edge side differs"));
                }
            }
        }
    }
    Ok(())
}

/// Random connected cell set grown one neighbour at a time.
pub fn random_benzenoid(rng: &mut ChaCha8Rng, h: usize) -> HexSpec {
    const NB: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
    let mut cells = vec![(0i64, 0i64)];
    let mut set: HashSet<(i64, i64)> = cells.iter().copied().collect();
    while cells.len() < h {
        let &(q, r) = cells.choose(rng).unwrap();
        let (dq, dr) = *NB.choose(rng).unwrap();
        if set.insert((q + dq, r + dr)) {
            cells.push((q + dq, r + dr));
        }
    }
    HexSpec::new(cells).unwrap()
}

/// Random catacondensed cell set: each new cell touches exactly one old
/// cell and no lattice point ends up in three cells.
pub fn random_catacondensed(rng: &mut ChaCha8Rng, h: usize) -> HexSpec {
    const NB: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
    let mut cells = vec![(0i64, 0i64)];
    let mut attempts = 0;
    while cells.len() < h && attempts < 10_000 {
        attempts += 1;
        let &(q, r) = cells.choose(rng).unwrap();
        let (dq, dr) = *NB.choose(rng).unwrap();
        let cand = (q + dq, r + dr);
        if cells.contains(&cand) {
            continue;
        }
        let touching = NB
            .iter()
            .filter(|(a, b)| cells.contains(&(cand.0 + a, cand.1 + b)))
            .count();
        let mut trial = cells.clone();
        trial.push(cand);
        let spec = HexSpec::new(trial.clone()).unwrap();
        if touching == 1 && spec.is_catacondensed() {
            cells = trial;
        }
    }
    HexSpec::new(cells).unwrap()
}
