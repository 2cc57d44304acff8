//! The repetition quiver `Z Delta`, evaluated lazily as a function of `(p, q)`.
//!
//! For every arrow `a -> b` of the tree there are arrows
//! `(p, a) -> (p, b)` and `(p, b) -> (p + 1, a)`; the translation is
//! `tau(p, q) = (p - 1, q)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinTree;

use super::QuiverError;

/// A vertex `(p, q)` of `Z Delta`: slice `p`, tree vertex index `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZVertex {
    pub p: i64,
    pub q: usize,
}

impl ZVertex {
    pub const fn new(p: i64, q: usize) -> Self {
        ZVertex { p, q }
    }

    pub fn tau(self) -> Self {
        ZVertex::new(self.p - 1, self.q)
    }

    pub fn tau_inv(self) -> Self {
        ZVertex::new(self.p + 1, self.q)
    }

    pub fn shifted(self, dp: i64) -> Self {
        ZVertex::new(self.p + dp, self.q)
    }

    /// `p,label` using the tree's vertex labels.
    pub fn display(self, tree: &DynkinTree) -> String {
        format!("{},{}", self.p, tree.label(self.q))
    }
}

impl fmt::Display for ZVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},#{})", self.p, self.q)
    }
}

/// Parse `"p,q"` where `q` is a tree vertex label.
pub fn parse_vertex(tree: &DynkinTree, s: &str) -> Result<ZVertex, QuiverError> {
    let bad = || QuiverError::InvalidVertex(s.to_string());
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: usize = q.trim().parse().map_err(|_| bad())?;
    let q = tree.index_of_label(q).ok_or_else(bad)?;
    Ok(ZVertex::new(p, q))
}

pub fn check_vertex(tree: &DynkinTree, v: ZVertex) -> Result<(), QuiverError> {
    if v.q < tree.rank() {
        Ok(())
    } else {
        Err(QuiverError::InvalidVertex(format!("{},#{}", v.p, v.q)))
    }
}

/// Direct successors of `v` in `Z Delta`.
pub fn successors(tree: &DynkinTree, v: ZVertex) -> Vec<ZVertex> {
    let mut out = Vec::new();
    for &(a, b) in tree.arrows() {
        if a == v.q {
            out.push(ZVertex::new(v.p, b));
        }
        if b == v.q {
            out.push(ZVertex::new(v.p + 1, a));
        }
    }
    out.sort();
    out
}

/// Direct predecessors of `v` in `Z Delta`.
pub fn predecessors(tree: &DynkinTree, v: ZVertex) -> Vec<ZVertex> {
    let mut out = Vec::new();
    for &(a, b) in tree.arrows() {
        if b == v.q {
            out.push(ZVertex::new(v.p, a));
        }
        if a == v.q {
            out.push(ZVertex::new(v.p - 1, b));
        }
    }
    out.sort();
    out
}

/// `(successors, predecessors)` of a vertex, after validating it.
pub fn neighbors(tree: &DynkinTree, v: ZVertex) -> Result<(Vec<ZVertex>, Vec<ZVertex>), QuiverError> {
    check_vertex(tree, v)?;
    Ok((successors(tree, v), predecessors(tree, v)))
}

pub fn is_arrow(tree: &DynkinTree, from: ZVertex, to: ZVertex) -> bool {
    match to.p - from.p {
        0 => tree.arrows().contains(&(from.q, to.q)),
        1 => tree.arrows().contains(&(to.q, from.q)),
        _ => false,
    }
}

/// Vertices of slices `lo..=hi`, slice by slice, each slice in tree
/// topological order, so every arrow points forward in the list.
pub fn window(tree: &DynkinTree, lo: i64, hi: i64) -> Vec<ZVertex> {
    let order = tree.topological_order();
    let mut out = Vec::new();
    for p in lo..=hi {
        out.extend(order.iter().map(|&q| ZVertex::new(p, q)));
    }
    out
}
