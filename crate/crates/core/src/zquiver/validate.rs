//! Report-style validation of finite valued translation quivers.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::quotient::OrbitQuiver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `tau` is not a bijection of the vertex set.
    TauNotBijective,
    /// Two arrow records share source and target.
    DoubleArrow { src: String, dst: String },
    /// `(tau y)^+ != y^-` as valued sets.
    TranslationLaw { at: String },
    /// `a_xy != a_{tau y, x}`.
    ValuationSymmetry { src: String, dst: String },
    /// A loop at a vertex that `tau` moves.
    LoopNotTauFixed { at: String },
    /// A loop of valuation at least 2.
    MultipleLoop { at: String },
    /// An arrow with valuation 0 or an endpoint out of range.
    MalformedArrow { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TauNotBijective => write!(f, "tau is not a bijection"),
            Violation::DoubleArrow { src, dst } => write!(f, "double arrow {src} -> {dst}"),
            Violation::TranslationLaw { at } => write!(f, "translation law at {at}"),
            Violation::ValuationSymmetry { src, dst } => write!(f, "valuation symmetry at {src} -> {dst}"),
            Violation::LoopNotTauFixed { at } => write!(f, "loop at non-tau-fixed vertex {at}"),
            Violation::MultipleLoop { at } => write!(f, "loop valuation >= 2 at {at}"),
            Violation::MalformedArrow { index } => write!(f, "malformed arrow #{index}"),
        }
    }
}

/// Every violated invariant; empty for a valid stable translation quiver.
pub fn validate_translation_quiver(q: &OrbitQuiver) -> Vec<Violation> {
    let n = q.vertex_count();
    let name = |v: usize| q.labels()[v].clone();
    let mut out = Vec::new();

    for (i, a) in q.arrows().iter().enumerate() {
        if a.src >= n || a.dst >= n || a.val == 0 {
            out.push(Violation::MalformedArrow { index: i });
        }
    }
    let tau = q.tau();
    let bijective = tau.len() == n && tau.iter().all(|&t| t < n) && tau.iter().collect::<HashSet<_>>().len() == n;
    if !bijective {
        out.push(Violation::TauNotBijective);
    }
    if !out.is_empty() {
        return out;
    }

    let mut seen = HashSet::new();
    for a in q.arrows() {
        if !seen.insert((a.src, a.dst)) {
            out.push(Violation::DoubleArrow {
                src: name(a.src),
                dst: name(a.dst),
            });
        }
    }

    let m = q.valuation_matrix();
    for y in 0..n {
        let ty = tau[y];
        // support of (tau y)^+ against y^-
        if (0..n).any(|x| (m[ty][x] > 0) != (m[x][y] > 0)) {
            out.push(Violation::TranslationLaw { at: name(y) });
        }
        for x in 0..n {
            if m[x][y] > 0 && m[ty][x] > 0 && m[x][y] != m[ty][x] {
                out.push(Violation::ValuationSymmetry {
                    src: name(x),
                    dst: name(y),
                });
            }
        }
        if m[y][y] > 0 && ty != y {
            out.push(Violation::LoopNotTauFixed { at: name(y) });
        }
        if m[y][y] >= 2 {
            out.push(Violation::MultipleLoop { at: name(y) });
        }
    }
    out
}
