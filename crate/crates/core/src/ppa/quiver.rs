//! Finite quivers, paths and path-algebra elements over a prime field.
//!
//! Paths compose left to right: `a b` is `a` followed by `b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::dynkin::{DynkinTree, Family};
use crate::field::{Field, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].dst == v)
    }

    /// `a_1 a_2 ...`, or `e_i` for a trivial path.
    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", p.src);
        }
        let mut s = String::new();
        for (i, &a) in p.arrows.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&self.arrows[a].name);
        }
        s
    }
}

/// A path, stored with its endpoints so trivial paths are distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub dst: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            src: v,
            dst: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path {
            src: q.arrows[a].src,
            dst: q.arrows[a].dst,
            arrows: vec![a],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn then(&self, other: &Path) -> Option<Path> {
        (self.dst == other.src).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.extend_from_slice(&other.arrows);
            Path {
                src: self.src,
                dst: other.dst,
                arrows,
            }
        })
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> Option<Path> {
        (self.dst == q.arrows[a].src).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.push(a);
            Path {
                src: self.src,
                dst: q.arrows[a].dst,
                arrows,
            }
        })
    }
}

/// Degree-lexicographic: shorter paths first, then arrow sequence, then endpoints.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| (self.src, self.dst).cmp(&(other.src, other.dst)))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of paths with coefficients in `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    pub terms: BTreeMap<Path, u64>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: &PrimeField, p: Path, c: u64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e = f.add(e, &c);
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, f: &PrimeField, other: &Element) -> Element {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(f, p.clone(), c);
        }
        out
    }

    pub fn scale(&self, f: &PrimeField, c: u64) -> Element {
        let mut out = Element::zero();
        for (p, &d) in &self.terms {
            out.add_term(f, p.clone(), f.mul(&c, &d));
        }
        out
    }

    /// Product in the path algebra; non-composable pairs vanish.
    pub fn mul(&self, f: &PrimeField, other: &Element) -> Element {
        let mut out = Element::zero();
        for (p, &c) in &self.terms {
            for (q, &d) in &other.terms {
                if let Some(pq) = p.then(q) {
                    out.add_term(f, pq, f.mul(&c, &d));
                }
            }
        }
        out
    }

    pub fn pow(&self, f: &PrimeField, k: usize) -> Element {
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(f, self);
        }
        out
    }

    /// Drop every term of length at least `n`.
    pub fn truncated(&self, n: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() < n)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    pub fn min_len(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    /// Terms of the lowest length only.
    pub fn lowest_part(&self) -> Element {
        let Some(m) = self.min_len() else {
            return Element::zero();
        };
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() == m)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Path::len);
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }

    /// `(src, dst)` shared by all terms, if any.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|p| (p.src, p.dst));
        let first = it.next()?;
        it.all(|e| e == first).then_some(first)
    }

    pub fn display(&self, q: &Quiver, f: &PrimeField) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            let c = f.symmetric(c);
            if i > 0 {
                s.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                s.push('-');
            }
            let _ = write!(s, "{}*{}", c.abs(), q.path_name(p).replace(' ', "*"));
        }
        s
    }
}

/// The double quiver `Q_Delta`, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleQuiver {
    pub family: Family,
    pub rank: usize,
    pub quiver: Quiver,
    /// `partner[a]` is `a-bar` (and `eps` is its own partner).
    pub partner: Vec<usize>,
    pub exceptional: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DoubleQuiverJson {
    pub family: String,
    pub rank: usize,
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl DoubleQuiver {
    /// Arrows are listed as `a_0, abar_0, a_1, abar_1, ...`, with `eps` last for `L_n`.
    pub fn build(tree: &DynkinTree) -> Self {
        let n = tree.rank();
        let edges: Vec<(usize, usize)> = match tree.family() {
            Family::A | Family::L => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e = vec![(0, 2), (1, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
            Family::E => {
                let mut e = vec![(0, 3), (1, 2), (2, 3)];
                e.extend((3..n - 1).map(|i| (i, i + 1)));
                e
            }
        };
        let mut arrows = Vec::new();
        let mut partner = Vec::new();
        for (i, &(s, t)) in edges.iter().enumerate() {
            arrows.push(Arrow {
                name: format!("a{i}"),
                src: s,
                dst: t,
            });
            arrows.push(Arrow {
                name: format!("A{i}"),
                src: t,
                dst: s,
            });
            partner.push(2 * i + 1);
            partner.push(2 * i);
        }
        if tree.family() == Family::L {
            partner.push(arrows.len());
            arrows.push(Arrow {
                name: "eps".into(),
                src: 0,
                dst: 0,
            });
        }
        let exceptional = match tree.family() {
            Family::A | Family::L => 0,
            Family::D => 2,
            Family::E => 3,
        };
        DoubleQuiver {
            family: tree.family(),
            rank: n,
            quiver: Quiver {
                vertex_count: n,
                arrows,
            },
            partner,
            exceptional,
        }
    }

    /// Index of `a_i`.
    pub fn a(&self, i: usize) -> usize {
        2 * i
    }

    /// Index of `abar_i`.
    pub fn abar(&self, i: usize) -> usize {
        2 * i + 1
    }

    pub fn eps(&self) -> Option<usize> {
        (self.family == Family::L).then(|| self.quiver.arrows.len() - 1)
    }

    pub fn to_json(&self) -> DoubleQuiverJson {
        DoubleQuiverJson {
            family: self.family.to_string(),
            rank: self.rank,
            vertices: self.quiver.vertex_count,
            arrows: self.quiver.arrows.clone(),
        }
    }
}
