//! Recognizing a finite translation quiver as some `Z Delta / <g>`.
//!
//! Candidates `(Delta, g)` come from the generator list with matching
//! vertex count. A cheap invariant, the solution `l` of
//! `l(tau z) + l(z) - sum_{y -> z} a_yz l(y) = 2`, rejects most of them
//! before an anchored backtracking search for an isomorphism.

use std::sync::Arc;

use num_traits::{One, Signed};

use crate::automorphism::{enumerate_weakly_admissible, NamedGenerator};
use crate::dynkin::{DynkinTree, Family};
use crate::linalg::{solve, Solution};
use crate::{Rational, RationalField};

use super::quotient::{orbit_quotient, OrbitQuiver};
use super::validate::validate_translation_quiver;
use super::QuiverError;

#[derive(Debug, Clone)]
pub struct IdentifiedType {
    pub tree: Arc<DynkinTree>,
    pub generator: NamedGenerator,
    /// `isomorphism[v]` is the orbit of `Z Delta / <g>` matched with input vertex `v`.
    pub isomorphism: Vec<usize>,
}

/// Solve `l(tau z) + l(z) - sum_{y -> z} a_yz l(y) = 2` over the rationals.
pub fn subadditive_function(q: &OrbitQuiver) -> Solution<Rational> {
    let n = q.vertex_count();
    let m = q.valuation_matrix();
    let mut rows = vec![vec![Rational::from_integer(0.into()); n]; n];
    for z in 0..n {
        rows[z][z] += Rational::one();
        rows[z][q.tau()[z]] += Rational::one();
        for y in 0..n {
            rows[z][y] -= Rational::from_integer(m[y][z].into());
        }
    }
    let rhs = vec![Rational::from_integer(2.into()); n];
    solve(&RationalField::new(), &rows, &rhs, n)
}

fn sorted_invariant(q: &OrbitQuiver) -> Option<Vec<Rational>> {
    match subadditive_function(q) {
        Solution::Unique(mut v) => {
            v.sort();
            Some(v)
        }
        _ => None,
    }
}

/// Per-vertex signature: (in-valuation, out-valuation, loop valuation, tau-fixed).
fn degree_signature(q: &OrbitQuiver) -> Vec<(u32, u32, u32, bool)> {
    let m = q.valuation_matrix();
    let n = q.vertex_count();
    let mut sig: Vec<_> = (0..n)
        .map(|v| {
            let inn = (0..n).map(|u| m[u][v]).sum();
            let out = (0..n).map(|u| m[v][u]).sum();
            (inn, out, m[v][v], q.tau()[v] == v)
        })
        .collect();
    sig.sort();
    sig
}

fn candidate_trees(vertex_count: usize) -> Vec<(Arc<DynkinTree>, u32)> {
    let mut out = Vec::new();
    let v = vertex_count;
    let mut add = |f: Family, n: usize, r: usize| {
        if r >= 1 {
            if let Ok(t) = DynkinTree::build(f, n) {
                out.push((Arc::new(t), r as u32));
            }
        }
    };
    for n in 1..=2 * v {
        if n % 2 == 0 && (2 * v).is_multiple_of(n) {
            add(Family::A, n, 2 * v / n);
        } else if n % 2 == 1 && v.is_multiple_of(n) {
            add(Family::A, n, v / n);
        }
    }
    for n in 4..=v {
        if v.is_multiple_of(n) {
            add(Family::D, n, v / n);
        }
    }
    for n in 6..=8 {
        if v.is_multiple_of(n) {
            add(Family::E, n, v / n);
        }
    }
    out
}

/// Find `(Delta, g)` from the generator list with `Z Delta / <g>` isomorphic
/// to `q` as a valued translation quiver.
pub fn identify_type(q: &OrbitQuiver) -> Result<IdentifiedType, QuiverError> {
    let report = validate_translation_quiver(q);
    if let Some(v) = report.first() {
        return Err(QuiverError::NotDynkinType(format!("invalid translation quiver: {v}")));
    }
    if q.vertex_count() == 0 || !q.is_connected() {
        return Err(QuiverError::NotDynkinType("empty or disconnected quiver".into()));
    }
    let target_l = match subadditive_function(q) {
        Solution::Inconsistent => {
            return Err(QuiverError::NotDynkinType(
                "no function with l(tau z) + l(z) = l(middle) + 2".into(),
            ))
        }
        Solution::Unique(mut l) => {
            if l.iter().any(|x| !x.is_integer() || !x.is_positive()) {
                return Err(QuiverError::NotDynkinType(
                    "l is not a positive integer function".into(),
                ));
            }
            l.sort();
            Some(l)
        }
        Solution::Affine(..) => None,
    };
    let target_sig = degree_signature(q);

    for (tree, r) in candidate_trees(q.vertex_count()) {
        for g in enumerate_weakly_admissible(tree.clone(), r)? {
            if g.exponent != r {
                continue;
            }
            let c = orbit_quotient(&g.aut)?;
            if c.vertex_count() != q.vertex_count() || degree_signature(&c) != target_sig {
                continue;
            }
            if let Some(l) = &target_l {
                if sorted_invariant(&c).as_ref() != Some(l) {
                    continue;
                }
            }
            if let Some(iso) = find_isomorphism(q, &c) {
                return Ok(IdentifiedType {
                    tree,
                    generator: g,
                    isomorphism: iso,
                });
            }
        }
    }
    Err(QuiverError::NotDynkinType(
        "no orbit quiver of Dynkin type matches".into(),
    ))
}

/// Anchored backtracking isomorphism search between valued translation quivers.
pub fn find_isomorphism(a: &OrbitQuiver, b: &OrbitQuiver) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return None;
    }
    let ma = a.valuation_matrix();
    let mb = b.valuation_matrix();
    // breadth-first order through arrows and tau, so every vertex after the
    // anchor has an earlier neighbour
    let mut order = vec![0usize];
    let mut placed = vec![false; n];
    placed[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in 0..n {
            let adjacent = ma[v][w] > 0 || ma[w][v] > 0 || a.tau()[v] == w || a.tau()[w] == v;
            if adjacent && !std::mem::replace(&mut placed[w], true) {
                order.push(w);
            }
        }
        i += 1;
    }
    if order.len() != n {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(
        v: usize,
        w: usize,
        map: &[usize],
        ma: &[Vec<u32>],
        mb: &[Vec<u32>],
        ta: &[usize],
        tb: &[usize],
    ) -> bool {
        if ma[v][v] != mb[w][w] || (ta[v] == v) != (tb[w] == w) {
            return false;
        }
        if map[ta[v]] != usize::MAX && map[ta[v]] != tb[w] {
            return false;
        }
        (0..map.len()).all(|u| {
            let fu = map[u];
            fu == usize::MAX || (ma[u][v] == mb[fu][w] && ma[v][u] == mb[w][fu] && (ta[u] != v || tb[fu] == w))
        })
    }
    fn go(
        k: usize,
        order: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ma: &[Vec<u32>],
        mb: &[Vec<u32>],
        ta: &[usize],
        tb: &[usize],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..map.len() {
            if used[w] || !consistent(v, w, map, ma, mb, ta, tb) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(k + 1, order, map, used, ma, mb, ta, tb) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    go(0, &order, &mut map, &mut used, &ma, &mb, a.tau(), b.tau()).then_some(map)
}
