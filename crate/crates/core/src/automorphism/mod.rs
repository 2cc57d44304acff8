//! Automorphisms of `Z Delta` in sliced form `g(p, q) = (p + m_q, pi(q))`.
//!
//! Every automorphism used here commutes with `tau`, so all structural
//! checks only need to look at a single slice.

mod grammar;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::dynkin::{DynkinError, DynkinTree, Family};
use crate::zquiver::repetition::{is_arrow, predecessors, successors, ZVertex};

pub use grammar::parse_generator;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error("automorphisms live on different trees ({0} vs {1})")]
    TreeMismatch(String, String),
    #[error("the identity does not generate a nontrivial group")]
    IdentityInput,
    #[error("shift/permutation data does not define an automorphism of Z{0}")]
    NotAnAutomorphism(String),
    #[error("parse error at offset {offset}: {message}")]
    ParseError { offset: usize, message: String },
    #[error("symbol `{symbol}` is not defined for {tree}")]
    UndefinedSymbolForFamily { symbol: String, tree: String },
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
}

impl AutError {
    pub fn code(&self) -> &'static str {
        match self {
            AutError::TreeMismatch(..) => "TreeMismatch",
            AutError::IdentityInput => "IdentityInput",
            AutError::NotAnAutomorphism(_) => "NotAnAutomorphism",
            AutError::ParseError { .. } => "ParseError",
            AutError::UndefinedSymbolForFamily { .. } => "UndefinedSymbolForFamily",
            AutError::Dynkin(e) => e.code(),
        }
    }
}

/// An automorphism `(p, q) -> (p + shift[q], perm[q])` of `Z Delta`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SlicedAutomorphism {
    tree: Arc<DynkinTree>,
    shift: Vec<i64>,
    perm: Vec<usize>,
}

impl fmt::Debug for SlicedAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Aut[{}](shift={:?}, perm={:?})",
            self.tree.name(),
            self.shift,
            self.perm
        )
    }
}

/// JSON view with tree labels.
#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismJson {
    pub tree: String,
    /// `[label, shift, image label]` per tree vertex.
    pub action: Vec<[i64; 3]>,
}

impl SlicedAutomorphism {
    /// Build from raw data, checking that arrows map to arrows both ways.
    pub fn from_parts(tree: Arc<DynkinTree>, shift: Vec<i64>, perm: Vec<usize>) -> Result<Self, AutError> {
        let n = tree.rank();
        let mut seen = vec![false; n];
        let bijective = shift.len() == n
            && perm.len() == n
            && perm.iter().all(|&q| q < n && !std::mem::replace(&mut seen[q], true));
        if !bijective {
            return Err(AutError::NotAnAutomorphism(tree.name()));
        }
        let g = SlicedAutomorphism { tree, shift, perm };
        if g.preserves_arrows() && g.inverse().preserves_arrows() {
            Ok(g)
        } else {
            Err(AutError::NotAnAutomorphism(g.tree.name()))
        }
    }

    fn preserves_arrows(&self) -> bool {
        (0..self.tree.rank()).all(|q| {
            let x = ZVertex::new(0, q);
            successors(&self.tree, x)
                .into_iter()
                .all(|y| is_arrow(&self.tree, self.apply(x), self.apply(y)))
        })
    }

    pub fn identity(tree: Arc<DynkinTree>) -> Self {
        let n = tree.rank();
        SlicedAutomorphism {
            tree,
            shift: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    /// `tau(p, q) = (p - 1, q)`.
    pub fn translation(tree: Arc<DynkinTree>) -> Self {
        Self::tau_power(tree, 1)
    }

    /// `tau^k`.
    pub fn tau_power(tree: Arc<DynkinTree>, k: i64) -> Self {
        let n = tree.rank();
        SlicedAutomorphism {
            tree,
            shift: vec![-k; n],
            perm: (0..n).collect(),
        }
    }

    /// The automorphism induced by an orientation-preserving tree automorphism.
    pub fn tree_automorphism(tree: Arc<DynkinTree>, perm: Vec<usize>) -> Result<Self, AutError> {
        let n = tree.rank();
        Self::from_parts(tree, vec![0; n], perm)
    }

    /// The suspension `S`.
    pub fn suspension(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        let n = tree.rank();
        match tree.family() {
            Family::A => {
                // S(p, q) = (p + q, n + 1 - q) with 1-based q
                let shift = (0..n).map(|i| i as i64 + 1).collect();
                let perm = (0..n).map(|i| n - 1 - i).collect();
                Ok(SlicedAutomorphism { tree, shift, perm })
            }
            Family::D => {
                let base = Self::tau_power(tree.clone(), -(n as i64 - 1));
                if n.is_multiple_of(2) {
                    Ok(base)
                } else {
                    base.compose(&Self::leaf_swap(tree)?)
                }
            }
            Family::E => match n {
                6 => Self::e6_flip(tree.clone())?.compose(&Self::tau_power(tree, -6)),
                7 => Ok(Self::tau_power(tree, -9)),
                _ => Ok(Self::tau_power(tree, -15)),
            },
            Family::L => Err(DynkinError::UnsupportedFamily {
                family: Family::L,
                op: "suspension",
            }
            .into()),
        }
    }

    /// The Serre functor at quiver level, `nu = S o tau`.
    pub fn serre_nu(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        Self::suspension(tree.clone())?.compose(&Self::translation(tree))
    }

    /// `phi` of the generator list: `tau^{(n+1)/2} S` for `A_n` with `n` odd,
    /// the exchange of `n - 1` and `n` for `D_n`, the diagram flip for `E_6`.
    pub fn phi(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        let n = tree.rank();
        match tree.family() {
            Family::A if n % 2 == 1 => {
                Self::tau_power(tree.clone(), (n as i64 + 1) / 2).compose(&Self::suspension(tree)?)
            }
            Family::D => Self::leaf_swap(tree),
            Family::E if n == 6 => Self::e6_flip(tree),
            _ => Err(AutError::UndefinedSymbolForFamily {
                symbol: "phi".into(),
                tree: tree.name(),
            }),
        }
    }

    /// `rho = tau^{n/2} S` for `A_n` with `n` even; `rho^2 = tau^{-1}`.
    pub fn rho(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        let n = tree.rank();
        if tree.family() == Family::A && n.is_multiple_of(2) {
            Self::tau_power(tree.clone(), n as i64 / 2).compose(&Self::suspension(tree)?)
        } else {
            Err(AutError::UndefinedSymbolForFamily {
                symbol: "rho".into(),
                tree: tree.name(),
            })
        }
    }

    fn leaf_swap(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        let n = tree.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(n - 2, n - 1);
        Self::tree_automorphism(tree, perm)
    }

    fn e6_flip(tree: Arc<DynkinTree>) -> Result<Self, AutError> {
        let mut perm: Vec<usize> = (0..6).collect();
        perm.swap(1, 4);
        perm.swap(0, 5);
        Self::tree_automorphism(tree, perm)
    }

    pub fn tree(&self) -> &Arc<DynkinTree> {
        &self.tree
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: ZVertex) -> ZVertex {
        ZVertex::new(v.p + self.shift[v.q], self.perm[v.q])
    }

    pub fn apply_inverse(&self, v: ZVertex) -> ZVertex {
        self.inverse().apply(v)
    }

    fn check_tree(&self, other: &Self) -> Result<(), AutError> {
        if self.tree == other.tree {
            Ok(())
        } else {
            Err(AutError::TreeMismatch(self.tree.name(), other.tree.name()))
        }
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, AutError> {
        self.check_tree(other)?;
        let n = self.tree.rank();
        let mut shift = vec![0; n];
        let mut perm = vec![0; n];
        for q in 0..n {
            let mid = other.perm[q];
            shift[q] = other.shift[q] + self.shift[mid];
            perm[q] = self.perm[mid];
        }
        Ok(SlicedAutomorphism {
            tree: self.tree.clone(),
            shift,
            perm,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.tree.rank();
        let mut shift = vec![0; n];
        let mut perm = vec![0; n];
        for q in 0..n {
            perm[self.perm[q]] = q;
            shift[self.perm[q]] = -self.shift[q];
        }
        SlicedAutomorphism {
            tree: self.tree.clone(),
            shift,
            perm,
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.tree.clone());
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq).expect("same tree");
            }
            sq = sq.compose(&sq).expect("same tree");
            e >>= 1;
        }
        acc
    }

    /// Structural equality of shift and permutation data.
    pub fn equals(&self, other: &Self) -> Result<bool, AutError> {
        self.check_tree(other)?;
        Ok(self.shift == other.shift && self.perm == other.perm)
    }

    pub fn is_identity(&self) -> bool {
        self.shift.iter().all(|&m| m == 0) && self.perm.iter().enumerate().all(|(i, &q)| i == q)
    }

    /// `Some(k)` when this is `tau^k`.
    pub fn as_tau_power(&self) -> Option<i64> {
        let id_perm = self.perm.iter().enumerate().all(|(i, &q)| i == q);
        let m = self.shift[0];
        (id_perm && self.shift.iter().all(|&s| s == m)).then_some(-m)
    }

    pub fn perm_order(&self) -> usize {
        let mut p = self.perm.clone();
        let mut k = 1;
        while p.iter().enumerate().any(|(i, &q)| i != q) {
            p = p.iter().map(|&q| self.perm[q]).collect();
            k += 1;
        }
        k
    }

    /// `(N, s)` with `N` the order of the permutation part and
    /// `self^N = tau^{-s}`. `s == 0` means finite order.
    pub fn period(&self) -> (usize, i64) {
        let n = self.perm_order();
        let s = self
            .power(n as i64)
            .as_tau_power()
            .expect("a power with trivial permutation is a power of tau");
        (n, -s)
    }

    /// Window of exponents `k` outside of which every vertex moves by more
    /// than `margin` slices under `self^k`.
    fn exponent_window(&self, margin: i64) -> i64 {
        let (n, s) = self.period();
        if s == 0 {
            return n as i64;
        }
        let max_shift = (0..n as i64)
            .map(|b| self.power(b).shift.iter().map(|m| m.abs()).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        n as i64 * ((max_shift + margin) / s.abs() + 1)
    }

    /// Nontrivial elements `self^k` that can move some vertex by at most
    /// `margin` slices.
    fn nearby_powers(&self, margin: i64) -> Vec<SlicedAutomorphism> {
        let (_, s) = self.period();
        let kmax = self.exponent_window(margin);
        let range: Vec<i64> = if s == 0 {
            (1..kmax).collect()
        } else {
            (-kmax..=kmax).filter(|&k| k != 0).collect()
        };
        range
            .into_iter()
            .map(|k| self.power(k))
            .filter(|h| !h.is_identity())
            .collect()
    }

    /// `x^+ and (h x)^+` are disjoint for every `x` and every `h != 1` in
    /// the cyclic group.
    pub fn is_weakly_admissible(&self) -> Result<bool, AutError> {
        if self.is_identity() {
            return Err(AutError::IdentityInput);
        }
        Ok(self.nearby_powers(3).iter().all(|h| self.disjoint_successors(h)))
    }

    fn disjoint_successors(&self, h: &SlicedAutomorphism) -> bool {
        (0..self.tree.rank()).all(|q| {
            let x = ZVertex::new(0, q);
            let a = successors(&self.tree, x);
            let b = successors(&self.tree, h.apply(x));
            a.iter().all(|y| !b.contains(y))
        })
    }

    /// No orbit meets `{x} u x^+` or `{x} u x^-` in more than one point.
    pub fn is_admissible(&self) -> Result<bool, AutError> {
        if !self.is_weakly_admissible()? {
            return Ok(false);
        }
        let powers = self.nearby_powers(3);
        for q in 0..self.tree.rank() {
            let x = ZVertex::new(0, q);
            for nbhd in [successors(&self.tree, x), predecessors(&self.tree, x)] {
                let mut set = nbhd;
                set.push(x);
                for h in &powers {
                    if set.iter().any(|&u| {
                        let hu = h.apply(u);
                        hu != u && set.contains(&hu)
                    }) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Is `self` in the cyclic group generated by `g`?
    pub fn is_in_group_of(&self, g: &SlicedAutomorphism) -> Result<bool, AutError> {
        self.check_tree(g)?;
        let (n, s) = g.period();
        for j in 0..n as i64 {
            let rest = self.compose(&g.power(j).inverse())?;
            if let Some(t) = rest.as_tau_power() {
                // rest = tau^t must equal g^{N a} = tau^{-s a}
                if t == 0 || (s != 0 && t % s == 0) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Conjugacy of the cyclic groups generated by `self` and `other` inside
    /// `Aut(Z Delta)`. `tau` is central, so conjugators range over
    /// `S^b o pi` with `b` in `{0, 1}` and `pi` an orientation-preserving
    /// tree automorphism.
    pub fn conjugacy_equal(&self, other: &Self) -> Result<bool, AutError> {
        self.check_tree(other)?;
        let tree = self.tree.clone();
        let mut conjugators = Vec::new();
        let s = match tree.family() {
            Family::L => None,
            _ => Some(Self::suspension(tree.clone())?),
        };
        for perm in tree.automorphisms() {
            let pi = Self::tree_automorphism(tree.clone(), perm)?;
            if let Some(s) = &s {
                conjugators.push(s.compose(&pi)?);
            }
            conjugators.push(pi);
        }
        let other_inv = other.inverse();
        for c in conjugators {
            let conj = c.compose(self)?.compose(&c.inverse())?;
            if conj == *other || conj == other_inv {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn to_json(&self) -> AutomorphismJson {
        AutomorphismJson {
            tree: self.tree.name(),
            action: (0..self.tree.rank())
                .map(|q| {
                    [
                        self.tree.label(q) as i64,
                        self.shift[q],
                        self.tree.label(self.perm[q]) as i64,
                    ]
                })
                .collect(),
        }
    }
}

/// A named generator from the classification list.
#[derive(Debug, Clone)]
pub struct NamedGenerator {
    /// Grammar form, e.g. `phi*tau^2`.
    pub name: String,
    pub aut: SlicedAutomorphism,
    /// Exponent `r` of the list entry.
    pub exponent: u32,
}

/// The generators of nontrivial weakly admissible groups with exponent
/// `1..=r_max`, in list order, each checked by [`SlicedAutomorphism::is_weakly_admissible`].
pub fn enumerate_weakly_admissible(tree: Arc<DynkinTree>, r_max: u32) -> Result<Vec<NamedGenerator>, AutError> {
    let n = tree.rank();
    let tau = |r: u32| SlicedAutomorphism::tau_power(tree.clone(), r as i64);
    let mut out = Vec::new();
    let mut push = |name: String, aut: SlicedAutomorphism, r: u32| out.push(NamedGenerator { name, aut, exponent: r });
    match tree.family() {
        Family::A if n.is_multiple_of(2) => {
            let rho = SlicedAutomorphism::rho(tree.clone())?;
            for r in 1..=r_max {
                push(power_name("rho", r), rho.power(r as i64), r);
            }
        }
        Family::A | Family::D | Family::E if has_single_phi(&tree) => {
            let phi = SlicedAutomorphism::phi(tree.clone())?;
            for r in 1..=r_max {
                push(power_name("tau", r), tau(r), r);
            }
            for r in 1..=r_max {
                push(format!("phi*{}", power_name("tau", r)), phi.compose(&tau(r))?, r);
            }
        }
        Family::A | Family::E => {
            for r in 1..=r_max {
                push(power_name("tau", r), tau(r), r);
            }
        }
        Family::D => {
            for perm in tree.automorphisms() {
                let phi = SlicedAutomorphism::tree_automorphism(tree.clone(), perm.clone())?;
                let label = d4_cycle_label(&perm);
                for r in 1..=r_max {
                    let name = match &label {
                        None => power_name("tau", r),
                        Some(c) => format!("phi({c})*{}", power_name("tau", r)),
                    };
                    push(name, phi.compose(&tau(r))?, r);
                }
            }
        }
        Family::L => {
            return Err(DynkinError::UnsupportedFamily {
                family: Family::L,
                op: "enumerate_weakly_admissible",
            }
            .into())
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|g| seen.insert(g.aut.clone()) && g.aut.is_weakly_admissible() == Ok(true));
    Ok(out)
}

fn has_single_phi(tree: &DynkinTree) -> bool {
    let n = tree.rank();
    match tree.family() {
        Family::A => n % 2 == 1,
        Family::D => n >= 5,
        Family::E => n == 6,
        Family::L => false,
    }
}

fn power_name(base: &str, r: u32) -> String {
    if r == 1 {
        base.to_string()
    } else {
        format!("{base}^{r}")
    }
}

/// Cycle notation of an `S_3` element acting on the leaves of `D_4`, leaves
/// `1, 3, 4` numbered `1, 2, 3` by position. `None` for the identity.
pub fn d4_cycle_label(perm: &[usize]) -> Option<String> {
    let leaves = [0usize, 2, 3];
    let pos = |v: usize| leaves.iter().position(|&l| l == v).expect("leaf");
    let img: Vec<usize> = leaves.iter().map(|&l| pos(perm[l])).collect();
    let mut seen = [false; 3];
    let mut cycles = Vec::new();
    for start in 0..3 {
        if seen[start] || img[start] == start {
            continue;
        }
        let mut c = String::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            c.push(char::from(b'1' + i as u8));
            i = img[i];
        }
        cycles.push(c);
    }
    (!cycles.is_empty()).then(|| cycles.join(")("))
}

#[cfg(test)]
mod tests;
