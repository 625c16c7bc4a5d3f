//! Brute-force evaluation of every index straight from the set definitions.
//!
//! Nothing here goes through the evaluators in [`crate::indices`]: each edge
//! gets two fresh BFS runs, its side sets are materialized, and the weighted
//! sums are taken over those sets. The cut method is certified against this.

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};
use crate::indices::{ClassContribution, EdgeSides, IndexKind, IndexReport, Method};
use crate::quotient::WeightAssignment;

pub fn oracle_edge_sides(g: &Graph, e: usize) -> Result<EdgeSides> {
    g.check_edge(e)?;
    let (u, v) = g.edge(e);
    let from_u = bfs_distances(g, u)?;
    let from_v = bfs_distances(g, v)?;

    let n_u = (0..g.vertex_count())
        .filter(|&x| from_u[x] < from_v[x])
        .collect();
    let n_v = (0..g.vertex_count())
        .filter(|&x| from_v[x] < from_u[x])
        .collect();

    let dist_to_edge = |row: &[u32], f: usize| {
        let (x, y) = g.edge(f);
        std::cmp::min(row[x], row[y])
    };
    let m_u = (0..g.edge_count())
        .filter(|&f| dist_to_edge(&from_u, f) < dist_to_edge(&from_v, f))
        .collect();
    let m_v = (0..g.edge_count())
        .filter(|&f| dist_to_edge(&from_v, f) < dist_to_edge(&from_u, f))
        .collect();

    Ok(EdgeSides {
        u,
        v,
        n_u,
        n_v,
        m_u,
        m_v,
    })
}

fn total(weights: &[u128], set: &[usize]) -> Result<u128> {
    let mut sum: u128 = 0;
    for &i in set {
        sum = sum.checked_add(weights[i]).ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

fn product(factors: &[u128]) -> Result<u128> {
    factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(f))
        .ok_or(Error::Overflow)
}

/// Any of the five indices, from the definitions.
pub fn oracle_general(g: &Graph, wa: &WeightAssignment, kind: IndexKind) -> Result<u128> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if wa.w.len() != g.vertex_count() {
        return Err(Error::WeightLength {
            expected: g.vertex_count(),
            got: wa.w.len(),
        });
    }
    for table in [&wa.w_prime, &wa.lambda_prime] {
        if table.len() != g.edge_count() {
            return Err(Error::WeightLength {
                expected: g.edge_count(),
                got: table.len(),
            });
        }
    }
    let mut sum: u128 = 0;
    for e in 0..g.edge_count() {
        let sides = oracle_edge_sides(g, e)?;
        let nu = total(&wa.w, &sides.n_u)?;
        let nv = total(&wa.w, &sides.n_v)?;
        let mu = total(&wa.lambda_prime, &sides.m_u)?;
        let mv = total(&wa.lambda_prime, &sides.m_v)?;
        let wp = wa.w_prime[e];
        let term = match kind {
            IndexKind::Sz => product(&[wp, nu, nv])?,
            IndexKind::PiV => product(&[wp, nu.checked_add(nv).ok_or(Error::Overflow)?])?,
            IndexKind::SzE => product(&[wp, mu, mv])?,
            IndexKind::Pi => product(&[wp, mu.checked_add(mv).ok_or(Error::Overflow)?])?,
            IndexKind::SzT => product(&[
                wp,
                nu.checked_add(mu).ok_or(Error::Overflow)?,
                nv.checked_add(mv).ok_or(Error::Overflow)?,
            ])?,
        };
        sum = sum.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

/// wSz, wPI_v, wSz_e, wPI (or the starred forms) by counting set sizes.
pub fn oracle_suite(g: &Graph, starred: bool) -> Result<IndexReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut values = [0u128; 4];
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let (du, dv) = (g.degree(u) as u128, g.degree(v) as u128);
        let factor = if starred { du * dv } else { du + dv };
        let sides = oracle_edge_sides(g, e)?;
        let (nu, nv) = (sides.n_u.len() as u128, sides.n_v.len() as u128);
        let (mu, mv) = (sides.m_u.len() as u128, sides.m_v.len() as u128);
        let terms = [
            product(&[factor, nu, nv])?,
            product(&[factor, nu + nv])?,
            product(&[factor, mu, mv])?,
            product(&[factor, mu + mv])?,
        ];
        for (acc, t) in values.iter_mut().zip(terms) {
            *acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
    }
    let [wsz, wpi_v, wsz_e, wpi] = values;
    Ok(IndexReport {
        method: Method::Direct,
        starred,
        wsz,
        wpi_v,
        wsz_e,
        wpi,
        per_class: vec![ClassContribution {
            class: 0,
            edges: g.edge_count(),
            wsz,
            wpi_v,
            wsz_e,
            wpi,
        }],
        nonstandard_region: None,
    })
}
