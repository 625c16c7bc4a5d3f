//! Weighted Szeged- and PI-type indices, evaluated directly from their
//! definitions or through the cut method over a c-partition.
//!
//! For an edge `e = uv`, `N_u` holds the vertices strictly closer to `u`
//! than to `v` and `M_u` the edges strictly closer to `u` (edge distance is
//! the smaller of the two endpoint distances). Equidistant vertices and
//! edges count for neither side. With a vertex weight `w` and edge weights
//! `λ'`, `w'`, the five evaluated indices are
//!
//! | kind   | per-edge term                                   |
//! |--------|-------------------------------------------------|
//! | `Sz`   | `w'(e) · n_u(w) · n_v(w)`                       |
//! | `PiV`  | `w'(e) · (n_u(w) + n_v(w))`                     |
//! | `SzE`  | `w'(e) · m_u(λ') · m_v(λ')`                     |
//! | `Pi`   | `w'(e) · (m_u(λ') + m_v(λ'))`                   |
//! | `SzT`  | `w'(e) · (n_u(w) + m_u(λ')) · (n_v(w) + m_v(λ'))` |
//!
//! All arithmetic is exact `u128` with overflow reported as
//! [`Error::Overflow`].

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::quotient::{checked_sum, quotient_graph, QuotientGraph, WeightAssignment};
use crate::theta::EdgePartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Sz,
    PiV,
    SzE,
    Pi,
    SzT,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] = [
        IndexKind::Sz,
        IndexKind::PiV,
        IndexKind::SzE,
        IndexKind::Pi,
        IndexKind::SzT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Sz => "SZ",
            IndexKind::PiV => "PI_V",
            IndexKind::SzE => "SZ_E",
            IndexKind::Pi => "PI",
            IndexKind::SzT => "SZ_T",
        }
    }

    /// Total degree of the index as a polynomial in the weights. Scaling all
    /// weights by `s` scales the index by `s^degree`.
    pub fn weight_degree(self) -> u32 {
        match self {
            IndexKind::Sz | IndexKind::SzE | IndexKind::SzT => 3,
            IndexKind::PiV | IndexKind::Pi => 2,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The four side sets of an edge `e = uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSides {
    pub u: usize,
    pub v: usize,
    pub n_u: Vec<usize>,
    pub n_v: Vec<usize>,
    pub m_u: Vec<usize>,
    pub m_v: Vec<usize>,
}

/// Side sets of edge `e` read off a distance matrix.
pub fn edge_sides(g: &Graph, dm: &DistanceMatrix, e: usize) -> Result<EdgeSides> {
    g.check_edge(e)?;
    let (u, v) = g.edge(e);
    let (du, dv) = (dm.row(u), dm.row(v));
    let mut sides = EdgeSides {
        u,
        v,
        n_u: Vec::new(),
        n_v: Vec::new(),
        m_u: Vec::new(),
        m_v: Vec::new(),
    };
    for x in 0..g.vertex_count() {
        match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => sides.n_u.push(x),
            std::cmp::Ordering::Greater => sides.n_v.push(x),
            std::cmp::Ordering::Equal => {}
        }
    }
    for (f, &(x, y)) in g.edges().iter().enumerate() {
        let (a, b) = (du[x].min(du[y]), dv[x].min(dv[y]));
        match a.cmp(&b) {
            std::cmp::Ordering::Less => sides.m_u.push(f),
            std::cmp::Ordering::Greater => sides.m_v.push(f),
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(sides)
}

/// Weighted side sums of one edge: two vertex weightings `a`, `b` and one
/// edge weighting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct SideSums {
    a_u: u128,
    a_v: u128,
    b_u: u128,
    b_v: u128,
    m_u: u128,
    m_v: u128,
}

fn add(x: u128, y: u128) -> Result<u128> {
    x.checked_add(y).ok_or(Error::Overflow)
}

fn mul(x: u128, y: u128) -> Result<u128> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

fn sums_from_rows(
    g: &Graph,
    du: &[u32],
    dv: &[u32],
    a: &[u128],
    b: &[u128],
    edge: &[u128],
) -> Result<SideSums> {
    let mut s = SideSums::default();
    for x in 0..g.vertex_count() {
        if du[x] < dv[x] {
            s.a_u = add(s.a_u, a[x])?;
            s.b_u = add(s.b_u, b[x])?;
        } else if dv[x] < du[x] {
            s.a_v = add(s.a_v, a[x])?;
            s.b_v = add(s.b_v, b[x])?;
        }
    }
    for (f, &(x, y)) in g.edges().iter().enumerate() {
        let (to_u, to_v) = (du[x].min(du[y]), dv[x].min(dv[y]));
        if to_u < to_v {
            s.m_u = add(s.m_u, edge[f])?;
        } else if to_v < to_u {
            s.m_v = add(s.m_v, edge[f])?;
        }
    }
    Ok(s)
}

/// Side sums for every edge. Trees take the linear subtree-sum route,
/// anything else runs two BFS per edge.
fn edge_sums(g: &Graph, a: &[u128], b: &[u128], edge: &[u128]) -> Result<Vec<SideSums>> {
    if g.is_tree() {
        return tree_edge_sums(g, a, b, edge);
    }
    (0..g.edge_count())
        .into_par_iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            sums_from_rows(g, &g.bfs_row(u), &g.bfs_row(v), a, b, edge)
        })
        .collect()
}

// In a tree every vertex and every other edge lies strictly on one side of
// an edge, so the sides are a subtree and its complement.
fn tree_edge_sums(g: &Graph, a: &[u128], b: &[u128], edge: &[u128]) -> Result<Vec<SideSums>> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::from([0]);
    parent[0] = 0;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &(v, e) in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                parent_edge[v] = e;
                queue.push_back(v);
            }
        }
    }
    let mut sub_a = a.to_vec();
    let mut sub_b = b.to_vec();
    let mut sub_e = vec![0u128; n];
    for &c in order.iter().skip(1).rev() {
        let p = parent[c];
        sub_a[p] = add(sub_a[p], sub_a[c])?;
        sub_b[p] = add(sub_b[p], sub_b[c])?;
        sub_e[p] = add(sub_e[p], add(sub_e[c], edge[parent_edge[c]])?)?;
    }
    let (total_a, total_b, total_e) = (sub_a[0], sub_b[0], sub_e[0]);

    let mut out = vec![SideSums::default(); g.edge_count()];
    for &c in order.iter().skip(1) {
        let e = parent_edge[c];
        let child = (sub_a[c], sub_b[c], sub_e[c]);
        let rest = (
            total_a - sub_a[c],
            total_b - sub_b[c],
            total_e - sub_e[c] - edge[e],
        );
        let (near_u, near_v) = if g.edge(e).0 == c {
            (child, rest)
        } else {
            (rest, child)
        };
        out[e] = SideSums {
            a_u: near_u.0,
            a_v: near_v.0,
            b_u: near_u.1,
            b_v: near_v.1,
            m_u: near_u.2,
            m_v: near_v.2,
        };
    }
    Ok(out)
}

fn kind_term(kind: IndexKind, w_prime: u128, s: &SideSums) -> Result<u128> {
    match kind {
        IndexKind::Sz => mul(mul(w_prime, s.a_u)?, s.a_v),
        IndexKind::PiV => mul(w_prime, add(s.a_u, s.a_v)?),
        IndexKind::SzE => mul(mul(w_prime, s.m_u)?, s.m_v),
        IndexKind::Pi => mul(w_prime, add(s.m_u, s.m_v)?),
        IndexKind::SzT => mul(mul(w_prime, add(s.a_u, s.m_u)?)?, add(s.a_v, s.m_v)?),
    }
}

fn evaluate(
    g: &Graph,
    vertex: &[u128],
    lambda_prime: &[u128],
    w_prime: &[u128],
    kind: IndexKind,
) -> Result<u128> {
    let sums = edge_sums(g, vertex, vertex, lambda_prime)?;
    checked_sum(
        sums.iter()
            .zip(w_prime)
            .map(|(s, &wp)| kind_term(kind, wp, s))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// One of the five indices of a weighted graph. `Sz` and `PiV` read `w` and
/// `w'`; `SzE` and `Pi` read `λ'` and `w'`; `SzT` reads all three.
pub fn weighted_index(g: &Graph, wa: &WeightAssignment, kind: IndexKind) -> Result<u128> {
    g.require_connected()?;
    wa.check(g)?;
    evaluate(g, &wa.w, &wa.lambda_prime, &wa.w_prime, kind)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cut,
    Direct,
    Formula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Cut => "cut",
            Method::Direct => "direct",
            Method::Formula => "formula",
        })
    }
}

mod as_decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// The four suite values carried by one class of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassContribution {
    pub class: usize,
    pub edges: usize,
    #[serde(rename = "wSz", with = "as_decimal")]
    pub wsz: u128,
    #[serde(rename = "wPI_v", with = "as_decimal")]
    pub wpi_v: u128,
    #[serde(rename = "wSz_e", with = "as_decimal")]
    pub wsz_e: u128,
    #[serde(rename = "wPI", with = "as_decimal")]
    pub wpi: u128,
}

impl ClassContribution {
    pub fn values(&self) -> [u128; 4] {
        [self.wsz, self.wpi_v, self.wsz_e, self.wpi]
    }
}

/// wSz, wPI_v, wSz_e and wPI of a graph (their starred forms when `starred`
/// is set) with a per-class breakdown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub method: Method,
    pub starred: bool,
    #[serde(rename = "wSz", with = "as_decimal")]
    pub wsz: u128,
    #[serde(rename = "wPI_v", with = "as_decimal")]
    pub wpi_v: u128,
    #[serde(rename = "wSz_e", with = "as_decimal")]
    pub wsz_e: u128,
    #[serde(rename = "wPI", with = "as_decimal")]
    pub wpi: u128,
    pub per_class: Vec<ClassContribution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonstandard_region: Option<bool>,
}

impl IndexReport {
    pub(crate) fn from_classes(
        method: Method,
        starred: bool,
        per_class: Vec<ClassContribution>,
    ) -> Result<Self> {
        let total = |f: fn(&ClassContribution) -> u128| checked_sum(per_class.iter().map(f));
        Ok(IndexReport {
            method,
            starred,
            wsz: total(|c| c.wsz)?,
            wpi_v: total(|c| c.wpi_v)?,
            wsz_e: total(|c| c.wsz_e)?,
            wpi: total(|c| c.wpi)?,
            per_class,
            nonstandard_region: None,
        })
    }

    /// `[wSz, wPI_v, wSz_e, wPI]`.
    pub fn values(&self) -> [u128; 4] {
        [self.wsz, self.wpi_v, self.wsz_e, self.wpi]
    }

    /// True when the per-class table adds up to every total.
    pub fn contributions_consistent(&self) -> bool {
        (0..4).all(|k| {
            checked_sum(self.per_class.iter().map(|c| c.values()[k])).ok() == Some(self.values()[k])
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let star = if self.starred { "*" } else { "" };
        let mut out = String::new();
        let _ = writeln!(out, "method {}", self.method);
        let _ = writeln!(out, "wSz{star} {}", self.wsz);
        let _ = writeln!(out, "wPI_v{star} {}", self.wpi_v);
        let _ = writeln!(out, "wSz_e{star} {}", self.wsz_e);
        let _ = writeln!(out, "wPI{star} {}", self.wpi);
        for c in &self.per_class {
            let _ = writeln!(
                out,
                "class {} edges {}: {} {} {} {}",
                c.class, c.edges, c.wsz, c.wpi_v, c.wsz_e, c.wpi
            );
        }
        out
    }
}

/// The suite from the definitions, two BFS per edge and no quotients. The
/// report has a single class holding every edge.
pub fn weighted_suite_direct(g: &Graph, starred: bool) -> Result<IndexReport> {
    g.require_connected()?;
    let wa = WeightAssignment::for_suite(g, starred);
    let terms = (0..g.edge_count())
        .into_par_iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            let s = sums_from_rows(
                g,
                &g.bfs_row(u),
                &g.bfs_row(v),
                &wa.w,
                &wa.w,
                &wa.lambda_prime,
            )?;
            let wp = wa.w_prime[e];
            Ok([
                kind_term(IndexKind::Sz, wp, &s)?,
                kind_term(IndexKind::PiV, wp, &s)?,
                kind_term(IndexKind::SzE, wp, &s)?,
                kind_term(IndexKind::Pi, wp, &s)?,
            ])
        })
        .collect::<Result<Vec<[u128; 4]>>>()?;
    let column = |k: usize| checked_sum(terms.iter().map(|t| t[k]));
    let per_class = vec![ClassContribution {
        class: 0,
        edges: g.edge_count(),
        wsz: column(0)?,
        wpi_v: column(1)?,
        wsz_e: column(2)?,
        wpi: column(3)?,
    }];
    IndexReport::from_classes(Method::Direct, starred, per_class)
}

fn certified(g: &Graph, p: &EdgePartition) -> Result<()> {
    if p.edge_count() != g.edge_count() {
        return Err(Error::PartitionNotCovering);
    }
    if !p.is_refined() {
        p.clone().certify(g)?;
    }
    Ok(())
}

/// Quotients `G/F_i` for every class, built in parallel.
pub fn class_quotients(
    g: &Graph,
    wa: &WeightAssignment,
    p: &EdgePartition,
) -> Result<Vec<QuotientGraph>> {
    p.classes()
        .par_iter()
        .map(|class| quotient_graph(g, wa, class))
        .collect()
}

/// Contribution of one weighted quotient to the four suite values:
/// `Sz(G_i, w_i, w_i')`, `PI_v(G_i, w_i, w_i')`, `Sz_t(G_i, λ_i, λ_i', w_i')`
/// and `PI_v(G_i, λ_i, w_i') + PI(G_i, λ_i', w_i')`.
pub fn quotient_contribution(q: &QuotientGraph) -> Result<[u128; 4]> {
    let sums = edge_sums(q.graph(), q.w(), q.lambda(), q.lambda_prime())?;
    let mut acc = [0u128; 4];
    for (s, &wp) in sums.iter().zip(q.w_prime()) {
        let by_lambda = SideSums {
            a_u: s.b_u,
            a_v: s.b_v,
            ..*s
        };
        let terms = [
            kind_term(IndexKind::Sz, wp, s)?,
            kind_term(IndexKind::PiV, wp, s)?,
            kind_term(IndexKind::SzT, wp, &by_lambda)?,
            add(
                kind_term(IndexKind::PiV, wp, &by_lambda)?,
                kind_term(IndexKind::Pi, wp, s)?,
            )?,
        ];
        for (a, t) in acc.iter_mut().zip(terms) {
            *a = add(*a, t)?;
        }
    }
    Ok(acc)
}

/// Contributions of already built quotients, in class order.
pub fn suite_from_quotients(quotients: &[QuotientGraph], starred: bool) -> Result<IndexReport> {
    let per_class = quotients
        .par_iter()
        .enumerate()
        .map(|(i, q)| {
            let [wsz, wpi_v, wsz_e, wpi] = quotient_contribution(q)?;
            Ok(ClassContribution {
                class: i,
                edges: q.class().len(),
                wsz,
                wpi_v,
                wsz_e,
                wpi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    IndexReport::from_classes(Method::Cut, starred, per_class)
}

/// The suite by the cut method: quotients over every class of `p` with the
/// degree-sum (or, when `starred`, degree-product) edge weight, summed.
///
/// A partition not already flagged as a c-partition is checked against Θ*
/// first, which costs a full distance matrix.
pub fn weighted_suite_cut(g: &Graph, p: &EdgePartition, starred: bool) -> Result<IndexReport> {
    g.require_connected()?;
    certified(g, p)?;
    let wa = WeightAssignment::for_suite(g, starred);
    let quotients = class_quotients(g, &wa, p)?;
    suite_from_quotients(&quotients, starred)
}

/// Any of `Sz`, `PiV`, `SzE`, `Pi` for arbitrary weights through the cut
/// method. `SzT` has no decomposition and is refused.
pub fn general_cut_index(
    g: &Graph,
    wa: &WeightAssignment,
    p: &EdgePartition,
    kind: IndexKind,
) -> Result<u128> {
    if kind == IndexKind::SzT {
        return Err(Error::UnsupportedKind(kind.name()));
    }
    g.require_connected()?;
    wa.check(g)?;
    certified(g, p)?;
    let quotients = class_quotients(g, wa, p)?;
    let parts = quotients
        .par_iter()
        .map(|q| {
            let (qg, wp) = (q.graph(), q.w_prime());
            match kind {
                IndexKind::Sz | IndexKind::PiV => evaluate(qg, q.w(), q.lambda_prime(), wp, kind),
                IndexKind::SzE => evaluate(qg, q.lambda(), q.lambda_prime(), wp, IndexKind::SzT),
                IndexKind::Pi => add(
                    evaluate(qg, q.lambda(), q.lambda_prime(), wp, IndexKind::PiV)?,
                    evaluate(qg, q.lambda(), q.lambda_prime(), wp, IndexKind::Pi)?,
                ),
                IndexKind::SzT => unreachable!(),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    checked_sum(parts)
}

/// `M_1(G) = Σ_v deg(v)^2`.
pub fn first_zagreb(g: &Graph) -> u128 {
    g.degrees().iter().map(|&d| (d * d) as u128).sum()
}
