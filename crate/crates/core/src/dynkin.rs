//! Simply laced Dynkin trees and the generalized type `L_n`, with a fixed
//! vertex numbering and orientation.
//!
//! Vertices are stored by index `0..rank`. The user-facing label of index
//! `i` is `i + 1` for A/D/E and `i` for L.
//!
//! Orientations:
//!
//! ```text
//! A_n:  1 -> 2 -> ... -> n
//! D_n:  1 -> 2 -> ... -> n-2 <- n-1,  n -> n-2
//! E_n:  1 <- 2 <- 3 -> 5 -> 6 -> ... -> n,  3 -> 4
//! L_n:  0 -> 1 -> ... -> n-1, loop at 0
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Largest rank accepted for the unbounded families.
pub const MAX_RANK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
    L,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::L => "L",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = DynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "L" | "l" => Ok(Family::L),
            other => Err(DynkinError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DynkinError {
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("operation `{op}` is not defined for family {family}")]
    UnsupportedFamily { family: Family, op: &'static str },
    #[error("unknown Dynkin family `{0}`")]
    UnknownFamily(String),
}

impl DynkinError {
    pub fn code(&self) -> &'static str {
        match self {
            DynkinError::RankOutOfRange { .. } => "RankOutOfRange",
            DynkinError::UnsupportedFamily { .. } => "UnsupportedFamily",
            DynkinError::UnknownFamily(_) => "UnknownFamily",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinTree {
    family: Family,
    rank: usize,
    /// Oriented edges `(source, target)` by vertex index.
    arrows: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

impl DynkinTree {
    pub fn build(family: Family, rank: usize) -> Result<Self, DynkinError> {
        let ok = match family {
            Family::A | Family::L => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(DynkinError::RankOutOfRange { family, rank });
        }
        let n = rank;
        // arrows in 1-based labels for A/D/E
        let (arrows, loops) = match family {
            Family::A => ((1..n).map(|i| (i - 1, i)).collect(), vec![]),
            Family::L => ((1..n).map(|i| (i - 1, i)).collect(), vec![0]),
            Family::D => {
                let mut a: Vec<(usize, usize)> = (1..n - 2).map(|i| (i - 1, i)).collect();
                a.push((n - 2, n - 3));
                a.push((n - 1, n - 3));
                (a, vec![])
            }
            Family::E => {
                let mut a = vec![(2, 1), (1, 0), (2, 3), (2, 4)];
                a.extend((5..n).map(|i| (i - 1, i)));
                (a, vec![])
            }
        };
        Ok(DynkinTree {
            family,
            rank,
            arrows,
            loops,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices carrying a loop (only vertex 0 of `L_n`).
    pub fn loop_vertices(&self) -> &[usize] {
        &self.loops
    }

    pub fn is_simply_laced_dynkin(&self) -> bool {
        self.family != Family::L
    }

    pub fn label(&self, index: usize) -> usize {
        match self.family {
            Family::L => index,
            _ => index + 1,
        }
    }

    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        let idx = match self.family {
            Family::L => Some(label),
            _ => label.checked_sub(1),
        }?;
        (idx < self.rank).then_some(idx)
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.0 == v).map(|a| a.1)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.1 == v).map(|a| a.0)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.successors(v).chain(self.predecessors(v)).collect();
        out.sort_unstable();
        out
    }

    /// Vertex indices ordered so that every arrow goes forward.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indeg = vec![0usize; self.rank];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.rank).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.rank);
        while let Some(v) = ready.pop() {
            order.push(v);
            let mut next: Vec<usize> = Vec::new();
            for t in self.successors(v) {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    next.push(t);
                }
            }
            next.sort_unstable_by(|a, b| b.cmp(a));
            ready.extend(next);
        }
        order
    }

    /// Orientation-preserving automorphisms of the tree, as index
    /// permutations, identity first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let id: Vec<usize> = (0..self.rank).collect();
        let n = self.rank;
        match self.family {
            Family::D if n == 4 => {
                // permutations of the leaves 1, 3, 4 (indices 0, 2, 3)
                let leaves = [0usize, 2, 3];
                let mut out = Vec::new();
                for p in permutations3() {
                    let mut perm = id.clone();
                    for (i, &src) in leaves.iter().enumerate() {
                        perm[src] = leaves[p[i]];
                    }
                    out.push(perm);
                }
                out
            }
            Family::D => {
                let mut swap = id.clone();
                swap.swap(n - 2, n - 1);
                vec![id, swap]
            }
            Family::E if n == 6 => {
                // exchanges 2 <-> 5 and 1 <-> 6
                let mut phi = id.clone();
                phi.swap(1, 4);
                phi.swap(0, 5);
                vec![id, phi]
            }
            _ => vec![id],
        }
    }

    /// Coxeter number `h`, characterized by `S o S = tau^{-h}`.
    pub fn coxeter_number(&self) -> Result<usize, DynkinError> {
        let n = self.rank;
        match self.family {
            Family::A => Ok(n + 1),
            Family::D => Ok(2 * n - 2),
            Family::E => Ok([12, 18, 30][n - 6]),
            Family::L => Err(DynkinError::UnsupportedFamily {
                family: self.family,
                op: "coxeter_number",
            }),
        }
    }

    /// Number of positive roots, i.e. of indecomposable `k Delta`-modules.
    pub fn positive_root_count(&self) -> Result<usize, DynkinError> {
        let n = self.rank;
        match self.family {
            Family::A => Ok(n * (n + 1) / 2),
            Family::D => Ok(n * (n - 1)),
            Family::E => Ok([36, 63, 120][n - 6]),
            Family::L => Err(DynkinError::UnsupportedFamily {
                family: self.family,
                op: "positive_root_count",
            }),
        }
    }

    /// Symmetric Cartan matrix `2I - adjacency` of the underlying graph.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; self.rank]; self.rank];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(s, t) in &self.arrows {
            c[s][t] -= 1;
            c[t][s] -= 1;
        }
        c
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            family: self.family,
            rank: self.rank,
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| [self.label(s), self.label(t)])
                .collect(),
            loop_vertices: self.loops.iter().map(|&v| self.label(v)).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n", self.name());
        for v in 0..self.rank {
            out.push_str(&format!("  {};\n", self.label(v)));
        }
        for &(s, t) in &self.arrows {
            out.push_str(&format!("  {} -> {};\n", self.label(s), self.label(t)));
        }
        for &v in &self.loops {
            let l = self.label(v);
            out.push_str(&format!("  {l} -> {l} [label=\"eps\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn permutations3() -> [[usize; 3]; 6] {
    [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

/// JSON form `{family, rank, arrows: [[s, t], ...], loop_vertices: [...]}`
/// using vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub family: Family,
    pub rank: usize,
    pub arrows: Vec<[usize; 2]>,
    pub loop_vertices: Vec<usize>,
}

/// Every simply laced Dynkin tree of rank at most `max_rank`.
pub fn simply_laced_up_to(max_rank: usize) -> Vec<DynkinTree> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(DynkinTree::build(Family::A, n).unwrap());
    }
    for n in 4..=max_rank {
        out.push(DynkinTree::build(Family::D, n).unwrap());
    }
    for n in 6..=max_rank.min(8) {
        out.push(DynkinTree::build(Family::E, n).unwrap());
    }
    out
}
