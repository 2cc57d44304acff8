//! Finite valued translation quivers, in particular orbit quivers `Z Delta / <g>`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::automorphism::{AutError, SlicedAutomorphism};

use super::repetition::{successors, ZVertex};
use super::QuiverError;

/// Arrow `src -> dst` carrying valuation `val` (number of arrows in the cover).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ValuedArrow {
    pub src: usize,
    pub dst: usize,
    pub val: u32,
}

/// A finite valued translation quiver.
///
/// When built by [`orbit_quotient`] the vertices are orbit representatives
/// and `origin` records the generator.
#[derive(Debug, Clone)]
pub struct OrbitQuiver {
    labels: Vec<String>,
    arrows: Vec<ValuedArrow>,
    tau: Vec<usize>,
    origin: Option<Origin>,
}

#[derive(Debug, Clone)]
struct Origin {
    generator: SlicedAutomorphism,
    reps: Vec<ZVertex>,
    index: HashMap<ZVertex, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitQuiverJson {
    pub schema_version: &'static str,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub tau: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArrowJson {
    pub src: String,
    pub dst: String,
    pub val: u32,
}

impl OrbitQuiver {
    /// A raw quiver; nothing is checked here, see
    /// [`super::validate_translation_quiver`].
    pub fn new(labels: Vec<String>, arrows: Vec<ValuedArrow>, tau: Vec<usize>) -> Self {
        OrbitQuiver {
            labels,
            arrows,
            tau,
            origin: None,
        }
    }

    /// Raw quiver with vertices labelled `0..n`.
    pub fn unlabelled(n: usize, arrows: Vec<ValuedArrow>, tau: Vec<usize>) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect(), arrows, tau)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrows(&self) -> &[ValuedArrow] {
        &self.arrows
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// Valuation `a_xy` (0 when there is no arrow).
    pub fn valuation(&self, x: usize, y: usize) -> u32 {
        self.arrows
            .iter()
            .filter(|a| a.src == x && a.dst == y)
            .map(|a| a.val)
            .sum()
    }

    /// Dense valuation matrix.
    pub fn valuation_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.src][a.dst] += a.val;
        }
        m
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.src == a.dst)
    }

    pub fn generator(&self) -> Option<&SlicedAutomorphism> {
        self.origin.as_ref().map(|o| &o.generator)
    }

    pub fn representatives(&self) -> Option<&[ZVertex]> {
        self.origin.as_ref().map(|o| o.reps.as_slice())
    }

    /// Index of the orbit of `v`; only for quivers built by [`orbit_quotient`].
    pub fn orbit_of(&self, v: ZVertex) -> Option<usize> {
        let o = self.origin.as_ref()?;
        o.index.get(&canonical(&o.generator, v)).copied()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.src].push(a.dst);
            adj[a.dst].push(a.src);
        }
        for (v, &t) in self.tau.iter().enumerate() {
            if t < n {
                adj[v].push(t);
                adj[t].push(v);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_json(&self) -> OrbitQuiverJson {
        let l = &self.labels;
        OrbitQuiverJson {
            schema_version: "1",
            vertices: l.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    src: l[a.src].clone(),
                    dst: l[a.dst].clone(),
                    val: a.val,
                })
                .collect(),
            tau: self
                .tau
                .iter()
                .enumerate()
                .map(|(v, &t)| [l[v].clone(), l[t].clone()])
                .collect(),
        }
    }

    /// DOT rendering: solid arrows labelled by valuation, `tau` as dashed arcs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.labels[a.src], self.labels[a.dst], a.val
            );
        }
        for (v, &t) in self.tau.iter().enumerate() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [style=dashed, arrowhead=none, constraint=false];",
                self.labels[v], self.labels[t]
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Lexicographically least point of the `<g>`-orbit of `v`.
///
/// `g^N = tau^{-s}`, so the orbit is `{tau^{s a} g^j v : 0 <= j < N}` and
/// each `g^j v` may be moved into the strip `0 <= p < |s|`.
pub(crate) fn canonical(g: &SlicedAutomorphism, v: ZVertex) -> ZVertex {
    let (n, s) = g.period();
    let s = s.abs();
    debug_assert!(s > 0);
    let mut best: Option<ZVertex> = None;
    let mut w = v;
    for _ in 0..n {
        let c = ZVertex::new(w.p.rem_euclid(s), w.q);
        if best.is_none_or(|b| c < b) {
            best = Some(c);
        }
        w = g.apply(w);
    }
    best.expect("period is positive")
}

/// The orbit quiver `Z Delta / <g>`.
pub fn orbit_quotient(g: &SlicedAutomorphism) -> Result<OrbitQuiver, QuiverError> {
    let tree = g.tree().clone();
    let (_, s) = g.period();
    if g.is_identity() {
        return Err(AutError::IdentityInput.into());
    }
    if s == 0 {
        return Err(QuiverError::InfiniteQuotient(format!("{g:?}")));
    }
    if !g.is_weakly_admissible()? {
        return Err(QuiverError::NotWeaklyAdmissible(format!("{g:?}")));
    }
    let mut reps: Vec<ZVertex> = (0..s.abs())
        .flat_map(|p| (0..tree.rank()).map(move |q| ZVertex::new(p, q)))
        .map(|v| canonical(g, v))
        .collect();
    reps.sort();
    reps.dedup();
    let index: HashMap<ZVertex, usize> = reps.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (i, &x) in reps.iter().enumerate() {
        for y in successors(&tree, x) {
            *counts.entry((i, index[&canonical(g, y)])).or_default() += 1;
        }
    }
    let arrows = counts
        .into_iter()
        .map(|((src, dst), val)| ValuedArrow { src, dst, val })
        .collect();
    let tau = reps.iter().map(|&x| index[&canonical(g, x.tau())]).collect();
    let labels = reps.iter().map(|v| v.display(&tree)).collect();
    Ok(OrbitQuiver {
        labels,
        arrows,
        tau,
        origin: Some(Origin {
            generator: g.clone(),
            reps,
            index,
        }),
    })
}
