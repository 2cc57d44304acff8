use std::collections::BTreeMap;

use serde::Serialize;

use crate::dynkin::DynkinTree;
use crate::field::{Field, PrimeField};
use crate::linalg::rank;

use super::engine::{filtered, graded, Reduction, SparseVec};
use super::poly::{display_terms, NCPolynomial, Word};
use super::quiver::{DoubleQuiver, Element, Path};
use super::relations::{deformed_relations, reduce_deformation};
use super::{default_degree_cap, PpaError, WORD_BUDGET};

/// `kQ_Delta / I` with a basis of normal-form paths.
#[derive(Debug, Clone)]
pub struct PathQuotientAlgebra {
    pub quiver: DoubleQuiver,
    pub field: PrimeField,
    pub relations: Vec<Element>,
    /// `f` after reduction in `R(Delta)`; empty for the undeformed algebra.
    pub deformation: BTreeMap<Word, u64>,
    red: Reduction,
}

/// Build `P^f(Delta)` over `GF(p)`. `degree_cap` defaults to `4 * rank + 8`.
pub fn build_algebra(
    tree: &DynkinTree,
    f: &NCPolynomial,
    p: u64,
    degree_cap: Option<usize>,
) -> Result<PathQuotientAlgebra, PpaError> {
    let field = PrimeField::new(p).map_err(|e| PpaError::InvalidCharacteristic(e.0))?;
    let cap = degree_cap.unwrap_or_else(|| default_degree_cap(tree.rank()));
    let dq = DoubleQuiver::build(tree);
    let deformation = reduce_deformation(tree.family(), tree.rank(), f, &field, cap)?;
    let relations = deformed_relations(&dq, &deformation, &field);
    let red = if relations.iter().all(Element::is_homogeneous) {
        graded(&dq.quiver, &field, &relations, cap)?
    } else {
        // the lowest-degree parts present P(Delta); its Loewy length bounds ours
        let lowest: Vec<Element> = relations.iter().map(Element::lowest_part).collect();
        let n = graded(&dq.quiver, &field, &lowest, cap)?.loewy_length;
        filtered(&dq.quiver, &field, &relations, n, WORD_BUDGET)?
    };
    Ok(PathQuotientAlgebra {
        quiver: dq,
        field,
        relations,
        deformation,
        red,
    })
}

impl PathQuotientAlgebra {
    pub fn dim(&self) -> usize {
        self.red.dim()
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn basis(&self) -> &[Path] {
        &self.red.basis
    }

    /// Smallest `N` with `rad^N = 0`.
    pub fn loewy_length(&self) -> usize {
        self.red.loewy_length
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.quiver.vertex_count
    }

    /// Normal form of a path, as coordinates in [`Self::basis`].
    pub fn reduce_path(&self, p: &Path) -> SparseVec {
        self.red.reduce_path(&self.field, p)
    }

    pub fn reduce(&self, e: &Element) -> SparseVec {
        self.red.reduce(&self.field, e)
    }

    /// `basis[b] · arrow`, zero when not composable.
    pub fn right_arrow(&self, b: usize, a: usize) -> SparseVec {
        self.red.right[b][a].clone().unwrap_or_default()
    }

    /// `arrow · basis[b]`, zero when not composable.
    pub fn left_arrow(&self, a: usize, b: usize) -> SparseVec {
        match Path::arrow(&self.quiver.quiver, a).then(&self.red.basis[b]) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// `basis[i] · basis[j]`.
    pub fn multiply(&self, i: usize, j: usize) -> SparseVec {
        match self.red.basis[i].then(&self.red.basis[j]) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// Entry `(i, j)` counts basis paths from `i` to `j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for p in &self.red.basis {
            c[p.src][p.dst] += 1;
        }
        c
    }

    fn block(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.red.basis[b].src == i && self.red.basis[b].dst == j)
            .collect()
    }

    /// `dim soc(e_i A) e_j`: elements of `e_i A e_j` killed by every arrow on the right.
    pub fn socle_block_dim(&self, i: usize, j: usize) -> usize {
        let cols = self.block(i, j);
        if cols.is_empty() {
            return 0;
        }
        let mut rows = Vec::new();
        for a in self.quiver.quiver.arrows_from(j) {
            let images: Vec<SparseVec> = cols.iter().map(|&b| self.right_arrow(b, a)).collect();
            let mut targets: Vec<usize> = images.iter().flatten().map(|&(k, _)| k).collect();
            targets.sort_unstable();
            targets.dedup();
            for k in targets {
                rows.push(
                    images
                        .iter()
                        .map(|v| v.iter().find(|&&(t, _)| t == k).map_or(0, |&(_, c)| c))
                        .collect(),
                );
            }
        }
        cols.len() - rank(&self.field, rows, cols.len())
    }

    /// Total socle dimension of each `e_i A`.
    pub fn socle_dims(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n)
            .map(|i| (0..n).map(|j| self.socle_block_dim(i, j)).sum())
            .collect()
    }

    /// `nu(i)` is the vertex `j` with `soc(e_i A) = soc(e_i A) e_j`, the
    /// target of the socle paths.
    pub fn nakayama_permutation(&self) -> Result<Vec<usize>, PpaError> {
        let n = self.vertex_count();
        let mut nu = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for i in 0..n {
            let dims: Vec<usize> = (0..n).map(|j| self.socle_block_dim(i, j)).collect();
            let total: usize = dims.iter().sum();
            let j = dims.iter().position(|&d| d == 1);
            match j {
                Some(j) if total == 1 && !std::mem::replace(&mut seen[j], true) => nu.push(j),
                _ => return Err(PpaError::NotSelfinjective { vertex: i }),
            }
        }
        Ok(nu)
    }

    /// Dimension of the center: `z` in `sum_i e_i A e_i` with `z a = a z` for every arrow.
    pub fn center_dim(&self) -> usize {
        let cols: Vec<usize> = (0..self.dim())
            .filter(|&b| self.red.basis[b].src == self.red.basis[b].dst)
            .collect();
        let mut rows = Vec::new();
        for a in 0..self.quiver.quiver.arrows.len() {
            let images: Vec<SparseVec> = cols
                .iter()
                .map(|&b| {
                    let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
                    for (k, c) in self.right_arrow(b, a) {
                        *acc.entry(k).or_insert(0) = c;
                    }
                    for (k, c) in self.left_arrow(a, b) {
                        let e = acc.entry(k).or_insert(0);
                        *e = self.field.sub(e, &c);
                    }
                    acc.into_iter().filter(|&(_, c)| c != 0).collect()
                })
                .collect();
            let mut targets: Vec<usize> = images.iter().flatten().map(|&(k, _)| k).collect();
            targets.sort_unstable();
            targets.dedup();
            for k in targets {
                rows.push(
                    images
                        .iter()
                        .map(|v| v.iter().find(|&&(t, _)| t == k).map_or(0, |&(_, c)| c))
                        .collect(),
                );
            }
        }
        cols.len() - rank(&self.field, rows, cols.len())
    }

    /// Basis as TSV: `source`, `target`, `length`, `word`.
    pub fn basis_tsv(&self) -> String {
        let mut s = String::from("source\ttarget\tlength\tword\n");
        for p in &self.red.basis {
            s.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                p.src,
                p.dst,
                p.len(),
                self.quiver.quiver.path_name(p)
            ));
        }
        s
    }

    pub fn relations_display(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| r.display(&self.quiver.quiver, &self.field))
            .collect()
    }
}

/// Which invariants agree with those of the undeformed algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantDiff {
    pub dim_equal: bool,
    pub cartan_equal: bool,
    pub nakayama_equal: bool,
    pub socle_dims_equal: bool,
    pub center_dim_equal: bool,
    pub loewy_length_equal: bool,
    pub undeformed_dim: usize,
    pub undeformed_center_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema_version: &'static str,
    pub tree: String,
    pub characteristic: u64,
    pub f: String,
    pub reduced_f: String,
    pub relations: Vec<String>,
    pub dim: usize,
    pub loewy_length: usize,
    pub cartan: Vec<Vec<usize>>,
    /// Every `e_i A` has a simple socle and `nu` is a permutation.
    pub selfinjective: bool,
    /// `None` when the algebra is not selfinjective.
    pub nakayama: Option<Vec<usize>>,
    pub socle_dims: Vec<usize>,
    pub center_dim: usize,
    /// `Cartan(i, j) = Cartan(nu(j), nu(i))` for all `i, j`.
    pub cartan_nakayama_symmetric: Option<bool>,
    pub diff: InvariantDiff,
}

struct Invariants {
    dim: usize,
    loewy: usize,
    cartan: Vec<Vec<usize>>,
    nakayama: Option<Vec<usize>>,
    socle: Vec<usize>,
    center: usize,
}

fn invariants(a: &PathQuotientAlgebra) -> Result<Invariants, PpaError> {
    Ok(Invariants {
        dim: a.dim(),
        loewy: a.loewy_length(),
        cartan: a.cartan_matrix(),
        nakayama: match a.nakayama_permutation() {
            Ok(nu) => Some(nu),
            Err(PpaError::NotSelfinjective { .. }) => None,
            Err(e) => return Err(e),
        },
        socle: a.socle_dims(),
        center: a.center_dim(),
    })
}

/// Invariants of `P^f(Delta)` and how they compare with `P(Delta)`.
pub fn invariant_report(
    tree: &DynkinTree,
    f: &NCPolynomial,
    p: u64,
    degree_cap: Option<usize>,
) -> Result<InvariantReport, PpaError> {
    let alg = build_algebra(tree, f, p, degree_cap)?;
    let inv = invariants(&alg)?;
    let base = if alg.deformation.is_empty() {
        None
    } else {
        Some(invariants(&build_algebra(tree, &NCPolynomial::zero(), p, degree_cap)?)?)
    };
    let base = base.as_ref().unwrap_or(&inv);
    let n = inv.cartan.len();
    let symmetric = inv
        .nakayama
        .as_ref()
        .map(|nu| (0..n).all(|i| (0..n).all(|j| inv.cartan[i][j] == inv.cartan[nu[j]][nu[i]])));
    Ok(InvariantReport {
        schema_version: "1",
        tree: tree.name(),
        characteristic: p,
        f: f.to_string(),
        reduced_f: display_terms(&alg.deformation, &alg.field),
        relations: alg.relations_display(),
        dim: inv.dim,
        loewy_length: inv.loewy,
        cartan: inv.cartan.clone(),
        selfinjective: inv.nakayama.is_some(),
        nakayama: inv.nakayama.clone(),
        socle_dims: inv.socle.clone(),
        center_dim: inv.center,
        cartan_nakayama_symmetric: symmetric,
        diff: InvariantDiff {
            dim_equal: inv.dim == base.dim,
            cartan_equal: inv.cartan == base.cartan,
            nakayama_equal: inv.nakayama == base.nakayama,
            socle_dims_equal: inv.socle == base.socle,
            center_dim_equal: inv.center == base.center,
            loewy_length_equal: inv.loewy == base.loewy,
            undeformed_dim: base.dim,
            undeformed_center_dim: base.center,
        },
    })
}
