//! Normal forms in `kQ / I` for admissible ideals `I`.
//!
//! Two engines share one output, a [`Reduction`]: a basis of normal-form
//! paths plus the table of products `basis · arrow`.
//!
//! * [`graded`] handles relations that are homogeneous in path length. It
//!   works level by level: the candidates at length `d` are `b·a` for basis
//!   paths `b` of length `d-1`, and the ideal at length `d` is spanned by the
//!   images of `u·r` with `u` a basis path. Pivots go to the largest
//!   candidates, so the basis consists of the smallest paths.
//! * [`filtered`] handles mixed-degree relations by working in `kQ / J^N`
//!   and closing the span of the relations under multiplication by arrows on
//!   both sides. `N` must bound the Loewy length of the quotient.

use std::collections::{HashMap, VecDeque};

use crate::field::{Field, PrimeField};
use crate::linalg::rref;

use super::quiver::{Element, Path, Quiver};
use super::PpaError;

/// Sparse vector over basis indices, sorted by index.
pub type SparseVec = Vec<(usize, u64)>;

#[derive(Debug, Clone)]
pub struct Reduction {
    pub basis: Vec<Path>,
    pub index: HashMap<Path, usize>,
    /// `right[b][a]` is the normal form of `basis[b] · a`, when composable.
    pub right: Vec<Vec<Option<SparseVec>>>,
    /// Smallest `N` with every path of length `N` in the ideal.
    pub loewy_length: usize,
}

fn axpy(field: &PrimeField, acc: &mut HashMap<usize, u64>, c: u64, v: &SparseVec) {
    for &(i, x) in v {
        let e = acc.entry(i).or_insert(0);
        *e = field.add(e, &field.mul(&c, &x));
    }
}

fn finish(acc: HashMap<usize, u64>) -> SparseVec {
    let mut v: SparseVec = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort_unstable();
    v
}

impl Reduction {
    /// `v · a`.
    pub fn mul_arrow(&self, field: &PrimeField, v: &SparseVec, a: usize) -> SparseVec {
        mul_arrow(&self.right, field, v, a)
    }

    pub fn reduce_path(&self, field: &PrimeField, p: &Path) -> SparseVec {
        let mut v = vec![(self.index[&Path::trivial(p.src)], 1)];
        for &a in &p.arrows {
            v = self.mul_arrow(field, &v, a);
            if v.is_empty() {
                break;
            }
        }
        v
    }

    pub fn reduce(&self, field: &PrimeField, e: &Element) -> SparseVec {
        let mut acc = HashMap::new();
        for (p, &c) in &e.terms {
            axpy(field, &mut acc, c, &self.reduce_path(field, p));
        }
        finish(acc)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Level-by-level elimination for length-homogeneous relations.
pub fn graded(q: &Quiver, field: &PrimeField, relations: &[Element], degree_cap: usize) -> Result<Reduction, PpaError> {
    debug_assert!(relations
        .iter()
        .all(|r| r.is_homogeneous() && r.min_len().unwrap_or(1) > 0));
    let mut basis: Vec<Path> = (0..q.vertex_count).map(Path::trivial).collect();
    let mut right: Vec<Vec<Option<SparseVec>>> = vec![vec![None; q.arrows.len()]; basis.len()];
    let mut levels: Vec<Vec<usize>> = vec![(0..q.vertex_count).collect()];

    for d in 1.. {
        if d > degree_cap {
            return Err(PpaError::DegreeCapExceeded { cap: degree_cap });
        }
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut cand_of: HashMap<(usize, usize), usize> = HashMap::new();
        for &b in &levels[d - 1] {
            for a in q.arrows_from(basis[b].dst) {
                cand_of.insert((b, a), cands.len());
                cands.push((b, a));
            }
        }
        let cand_paths: Vec<Path> = cands
            .iter()
            .map(|&(b, a)| basis[b].then_arrow(q, a).expect("composable"))
            .collect();
        let cand_path = |i: usize| cand_paths[i].clone();

        // images of u·r in the candidate span, one sparse row per generator
        let mut gens: Vec<HashMap<usize, u64>> = Vec::new();
        for r in relations {
            let Some(len) = r.min_len() else { continue };
            if len > d {
                continue;
            }
            let (s, _) = r.endpoints().expect("relation with mixed endpoints");
            for &u in &levels[d - len] {
                if basis[u].dst != s {
                    continue;
                }
                let mut g: HashMap<usize, u64> = HashMap::new();
                for (t, &c) in &r.terms {
                    let (last, init) = t.arrows.split_last().expect("nonempty relation term");
                    let mut v: SparseVec = vec![(u, 1)];
                    for &a in init {
                        v = mul_arrow(&right, field, &v, a);
                    }
                    for (b, x) in v {
                        let i = cand_of[&(b, *last)];
                        let e = g.entry(i).or_insert(0);
                        *e = field.add(e, &field.mul(&c, &x));
                    }
                }
                g.retain(|_, c| *c != 0);
                if !g.is_empty() {
                    gens.push(g);
                }
            }
        }

        // blockwise elimination per (source, target)
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for i in 0..cands.len() {
            let p = cand_path(i);
            blocks.entry((p.src, p.dst)).or_default().push(i);
        }
        let mut is_pivot = vec![false; cands.len()];
        let mut pivot_rows: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
        let mut gens_by_block: HashMap<(usize, usize), Vec<&HashMap<usize, u64>>> = HashMap::new();
        for g in &gens {
            let &i = g.keys().next().expect("nonempty");
            let p = cand_path(i);
            gens_by_block.entry((p.src, p.dst)).or_default().push(g);
        }
        for (key, mut cols) in blocks {
            let Some(rows) = gens_by_block.get(&key) else { continue };
            cols.sort_by_key(|&i| std::cmp::Reverse(cand_path(i)));
            let col_of: HashMap<usize, usize> = cols.iter().enumerate().map(|(j, &i)| (i, j)).collect();
            let m: Vec<Vec<u64>> = rows
                .iter()
                .map(|g| {
                    let mut row = vec![0u64; cols.len()];
                    for (&i, &c) in g.iter() {
                        row[col_of[&i]] = c;
                    }
                    row
                })
                .collect();
            let red = rref(field, m, cols.len());
            for (row, &pc) in red.rows.iter().zip(&red.pivots) {
                is_pivot[cols[pc]] = true;
                let rest = row
                    .iter()
                    .enumerate()
                    .filter(|&(j, &c)| j != pc && c != 0)
                    .map(|(j, &c)| (cols[j], c))
                    .collect();
                pivot_rows.insert(cols[pc], rest);
            }
        }

        let mut fresh: Vec<usize> = (0..cands.len()).filter(|&i| !is_pivot[i]).collect();
        fresh.sort_by_key(|&i| cand_path(i));
        let mut new_index: HashMap<usize, usize> = HashMap::new();
        let mut level = Vec::new();
        for &i in &fresh {
            let g = basis.len();
            new_index.insert(i, g);
            level.push(g);
            basis.push(cand_path(i));
            right.push(vec![None; q.arrows.len()]);
        }
        for (i, &(b, a)) in cands.iter().enumerate() {
            let nf: SparseVec = if let Some(&g) = new_index.get(&i) {
                vec![(g, 1)]
            } else {
                let mut v: SparseVec = pivot_rows[&i]
                    .iter()
                    .map(|&(j, c)| (new_index[&j], field.neg(&c)))
                    .collect();
                v.sort_unstable();
                v
            };
            right[b][a] = Some(nf);
        }
        let done = level.is_empty();
        levels.push(level);
        if done {
            let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            return Ok(Reduction {
                basis,
                index,
                right,
                loewy_length: d,
            });
        }
    }
    unreachable!()
}

fn mul_arrow(right: &[Vec<Option<SparseVec>>], field: &PrimeField, v: &SparseVec, a: usize) -> SparseVec {
    let mut acc = HashMap::new();
    for &(b, c) in v {
        if let Some(nf) = &right[b][a] {
            axpy(field, &mut acc, c, nf);
        }
    }
    finish(acc)
}

/// All paths of length `< n` in degree-lexicographic order, or `None` past `budget`.
fn paths_below(q: &Quiver, n: usize, budget: usize) -> Option<Vec<Path>> {
    let mut out: Vec<Path> = (0..q.vertex_count).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.arrows_from(p.dst) {
                next.push(p.then_arrow(q, a).expect("composable"));
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > budget {
            return None;
        }
        frontier = next;
    }
    out.sort();
    Some(out)
}

type Vector = std::collections::BTreeMap<u32, u64>;

/// Rows keyed by their largest index, each with coefficient one there.
struct Echelon<'f> {
    field: &'f PrimeField,
    rows: HashMap<u32, Vec<(u32, u64)>>,
}

impl Echelon<'_> {
    /// Remove every pivot from `v`, largest first.
    fn reduce(&self, v: &mut Vector) {
        let mut cursor = u32::MAX;
        while let Some((&k, &c)) = v.range(..cursor).next_back() {
            if let Some(row) = self.rows.get(&k) {
                for &(j, x) in row {
                    let e = v.entry(j).or_insert(0);
                    *e = self.field.sub(e, &self.field.mul(&c, &x));
                    if *e == 0 {
                        v.remove(&j);
                    }
                }
            }
            cursor = k;
        }
    }

    fn insert(&mut self, mut v: Vector) -> Option<Vector> {
        self.reduce(&mut v);
        let (&pivot, &c) = v.iter().next_back()?;
        let inv = self.field.inv(&c);
        for x in v.values_mut() {
            *x = self.field.mul(x, &inv);
        }
        self.rows.insert(pivot, v.iter().map(|(&k, &x)| (k, x)).collect());
        Some(v)
    }
}

/// Ideal closure in `kQ / J^n` for relations of mixed length.
pub fn filtered(
    q: &Quiver,
    field: &PrimeField,
    relations: &[Element],
    n: usize,
    word_budget: usize,
) -> Result<Reduction, PpaError> {
    let paths = paths_below(q, n, word_budget).ok_or(PpaError::WordBudgetExceeded { budget: word_budget })?;
    let id: HashMap<&Path, u32> = paths.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let step = |p: &Path, a: usize, left: bool| -> Option<u32> {
        let arrow = Path::arrow(q, a);
        let r = if left { arrow.then(p) } else { p.then(&arrow) }?;
        id.get(&r).copied()
    };
    let arrows = q.arrows.len();
    let rmul: Vec<Vec<Option<u32>>> = paths
        .iter()
        .map(|p| (0..arrows).map(|a| step(p, a, false)).collect())
        .collect();
    let lmul: Vec<Vec<Option<u32>>> = paths
        .iter()
        .map(|p| (0..arrows).map(|a| step(p, a, true)).collect())
        .collect();

    let mut ech = Echelon {
        field,
        rows: HashMap::new(),
    };
    let mut queue: VecDeque<Vector> = relations
        .iter()
        .map(|r| r.truncated(n).terms.iter().map(|(p, &c)| (id[p], c)).collect())
        .collect();
    while let Some(v) = queue.pop_front() {
        let Some(row) = ech.insert(v) else { continue };
        for a in 0..arrows {
            for table in [&lmul, &rmul] {
                let w: Vector = row
                    .iter()
                    .filter_map(|(&k, &c)| table[k as usize][a].map(|j| (j, c)))
                    .collect();
                if !w.is_empty() {
                    queue.push_back(w);
                }
            }
        }
    }

    // full back-substitution, smallest pivots first
    let mut pivots: Vec<u32> = ech.rows.keys().copied().collect();
    pivots.sort_unstable();
    let basis_ids: Vec<u32> = (0..paths.len() as u32).filter(|k| !ech.rows.contains_key(k)).collect();
    let position: HashMap<u32, usize> = basis_ids.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut nf: HashMap<u32, SparseVec> = HashMap::new();
    for &p in &pivots {
        let mut acc: HashMap<usize, u64> = HashMap::new();
        for &(j, x) in &ech.rows[&p] {
            if j == p {
                continue;
            }
            let minus = field.neg(&x);
            match position.get(&j) {
                Some(&b) => axpy(field, &mut acc, minus, &vec![(b, 1)]),
                None => axpy(field, &mut acc, minus, &nf[&j]),
            }
        }
        nf.insert(p, finish(acc));
    }
    let normal_form = |k: Option<u32>| -> SparseVec {
        match k {
            None => Vec::new(),
            Some(k) => match position.get(&k) {
                Some(&b) => vec![(b, 1)],
                None => nf[&k].clone(),
            },
        }
    };

    let basis: Vec<Path> = basis_ids.iter().map(|&k| paths[k as usize].clone()).collect();
    let right = basis_ids
        .iter()
        .map(|&k| {
            let p = &paths[k as usize];
            (0..arrows)
                .map(|a| (p.dst == q.arrows[a].src).then(|| normal_form(rmul[k as usize][a])))
                .collect()
        })
        .collect();
    let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let loewy_length = basis.iter().map(|p| p.len() + 1).max().unwrap_or(0);
    Ok(Reduction {
        basis,
        index,
        right,
        loewy_length,
    })
}
