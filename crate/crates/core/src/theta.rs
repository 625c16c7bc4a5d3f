//! The Djoković–Winkler relation Θ, its transitive closure Θ*, and edge
//! partitions that are coarser than the Θ*-partition (c-partitions).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use rayon::prelude::*;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

/// A partition of the edge ids `0..m` into nonempty classes.
///
/// Classes are ordered by their smallest edge id and each class lists its
/// edges in increasing order. The `refined` flag records that every Θ*-class
/// is known to sit inside a single class, which is what the cut method needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    refined: bool,
}

impl EdgePartition {
    /// Groups edges with equal labels. `labels[e]` is the label of edge `e`.
    pub fn from_labels<L: Eq + Hash + Copy>(labels: &[L]) -> Self {
        let mut index: HashMap<L, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (e, label) in labels.iter().enumerate() {
            let c = *index.entry(*label).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(e);
            class_of.push(c);
        }
        EdgePartition {
            class_of,
            classes,
            refined: false,
        }
    }

    /// Builds a partition of `0..m` from explicit classes.
    pub fn from_classes(m: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; m];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::PartitionNotCovering);
            }
            for &e in class {
                if e >= m || labels[e] != usize::MAX {
                    return Err(Error::PartitionNotCovering);
                }
                labels[e] = c;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::PartitionNotCovering);
        }
        Ok(Self::from_labels(&labels))
    }

    /// The coarsest partition `{E(G)}`, always a c-partition.
    pub fn single_class(m: usize) -> Self {
        let mut p = Self::from_labels(&vec![0u8; m]);
        p.refined = true;
        p
    }

    pub(crate) fn assume_refined(mut self) -> Self {
        self.refined = true;
        self
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    /// True when the partition is known to be a c-partition.
    pub fn is_refined(&self) -> bool {
        self.refined
    }

    /// Checks the partition against Θ* and returns it flagged as refined.
    pub fn certify(self, g: &Graph) -> Result<Self> {
        if self.refined {
            if self.edge_count() != g.edge_count() {
                return Err(Error::PartitionNotCovering);
            }
            return Ok(self);
        }
        if validate_c_partition(g, &self)? {
            Ok(self.assume_refined())
        } else {
            Err(Error::InvalidCPartition)
        }
    }

    /// Parses `edge_id class_id` lines (`#` comments allowed) into a
    /// partition of `0..m`. Every edge must appear exactly once.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let mut labels: Vec<Option<u64>> = vec![None; m];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::parse(i + 1, "expected `edge_id class_id`"));
            }
            let e: usize = fields[0]
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("bad edge id `{}`", fields[0])))?;
            let c: u64 = fields[1]
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("bad class id `{}`", fields[1])))?;
            if e >= m {
                return Err(Error::EdgeOutOfRange { edge: e, m });
            }
            if labels[e].replace(c).is_some() {
                return Err(Error::parse(i + 1, format!("edge {e} listed twice")));
            }
        }
        let labels: Option<Vec<u64>> = labels.into_iter().collect();
        labels
            .map(|l| Self::from_labels(&l))
            .ok_or(Error::PartitionNotCovering)
    }

    /// `edge_id class_id` lines, the inverse of [`EdgePartition::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.class_of.iter().enumerate() {
            let _ = writeln!(out, "{e} {c}");
        }
        out
    }

    /// One line per class of `u-v` edge tokens.
    pub fn describe(&self, g: &Graph) -> String {
        let mut out = String::new();
        for class in &self.classes {
            let tokens: Vec<String> = class
                .iter()
                .map(|&e| {
                    let (u, v) = g.edge(e);
                    format!("{u}-{v}")
                })
                .collect();
            let _ = writeln!(out, "{}", tokens.join(" "));
        }
        out
    }
}

#[inline]
fn related(g: &Graph, dm: &DistanceMatrix, e1: usize, e2: usize) -> bool {
    let (u1, v1) = g.edge(e1);
    let (u2, v2) = g.edge(e2);
    dm.get(u1, u2) + dm.get(v1, v2) != dm.get(u1, v2) + dm.get(u2, v1)
}

/// Whether `e1 Θ e2`. Swapping the endpoints of either edge negates both
/// sides' difference, so the answer does not depend on orientation.
pub fn theta_related(g: &Graph, dm: &DistanceMatrix, e1: usize, e2: usize) -> Result<bool> {
    g.check_edge(e1)?;
    g.check_edge(e2)?;
    Ok(related(g, dm, e1, e2))
}

fn theta_star_with(g: &Graph, dm: &DistanceMatrix) -> EdgePartition {
    let m = g.edge_count();
    let pairs: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|e1| (e1 + 1..m).filter(|&e2| related(g, dm, e1, e2)).collect())
        .collect();
    let mut ds = DisjointSet::new(m);
    for (e1, partners) in pairs.iter().enumerate() {
        for &e2 in partners {
            ds.union(e1, e2);
        }
    }
    let roots: Vec<usize> = (0..m).map(|e| ds.find(e)).collect();
    EdgePartition::from_labels(&roots).assume_refined()
}

/// The Θ*-classes, by a pairwise Θ scan over all edge pairs.
pub fn theta_star_partition(g: &Graph) -> Result<EdgePartition> {
    let dm = all_pairs_distances(g)?;
    Ok(theta_star_with(g, &dm))
}

/// True iff every Θ*-class lies inside a single class of `p`.
pub fn validate_c_partition(g: &Graph, p: &EdgePartition) -> Result<bool> {
    if p.edge_count() != g.edge_count() {
        return Err(Error::PartitionNotCovering);
    }
    let star = theta_star_partition(g)?;
    Ok(star
        .classes()
        .iter()
        .all(|class| class.iter().all(|&e| p.class_of(e) == p.class_of(class[0]))))
}

/// Merges the classes of `p`: class `i` goes to group `grouping[i]`.
pub fn coarsen(p: &EdgePartition, grouping: &[usize]) -> Result<EdgePartition> {
    if grouping.len() != p.len() {
        return Err(Error::IncompleteGrouping);
    }
    let labels: Vec<usize> = (0..p.edge_count())
        .map(|e| grouping[p.class_of(e)])
        .collect();
    let mut out = EdgePartition::from_labels(&labels);
    out.refined = p.refined;
    Ok(out)
}

/// Bipartite and Θ transitive, i.e. every Θ*-class is pairwise Θ-related.
pub fn is_partial_cube(g: &Graph) -> Result<bool> {
    let dm = all_pairs_distances(g)?;
    if !g.is_bipartite() {
        return Ok(false);
    }
    let star = theta_star_with(g, &dm);
    Ok(star.classes().par_iter().all(|class| {
        class
            .iter()
            .enumerate()
            .all(|(i, &a)| class[i + 1..].iter().all(|&b| related(g, &dm, a, b)))
    }))
}
