//! Relations of `P^f(Delta)` and the local ring `R(Delta)`.

use std::collections::BTreeMap;

use crate::dynkin::Family;
use crate::field::{Field, PrimeField};

use super::engine::{graded, Reduction};
use super::poly::{NCPolynomial, Word};
use super::quiver::{Arrow, DoubleQuiver, Element, Path, Quiver};
use super::PpaError;

/// `R(Delta)` as a one-vertex quiver with loops `x` (and `y`), plus its relations.
pub fn local_ring(family: Family, rank: usize, field: &PrimeField) -> Option<(Quiver, Vec<Element>)> {
    let loop_named = |name: &str| Arrow {
        name: name.into(),
        src: 0,
        dst: 0,
    };
    let word = |w: &[usize]| {
        Element::from_path(Path {
            src: 0,
            dst: 0,
            arrows: w.to_vec(),
        })
    };
    match family {
        Family::A => None,
        Family::L => {
            let q = Quiver {
                vertex_count: 1,
                arrows: vec![loop_named("x")],
            };
            Some((q, vec![word(&vec![0; 2 * rank])]))
        }
        Family::D | Family::E => {
            let q = Quiver {
                vertex_count: 1,
                arrows: vec![loop_named("x"), loop_named("y")],
            };
            let (ypow, k) = if family == Family::D {
                (2, rank - 2)
            } else {
                (3, rank - 3)
            };
            let sum = word(&[0]).add(field, &word(&[1]));
            Some((q, vec![word(&[0, 0]), word(&vec![1; ypow]), sum.pow(field, k)]))
        }
    }
}

/// Check arity and `rad^2` membership, then reduce `f` in `R(Delta)`.
pub fn reduce_deformation(
    family: Family,
    rank: usize,
    f: &NCPolynomial,
    field: &PrimeField,
    degree_cap: usize,
) -> Result<BTreeMap<Word, u64>, PpaError> {
    let terms = f.collect(field);
    let arity_ok = match family {
        Family::A => terms.is_empty(),
        Family::L => terms.keys().all(|w| !w.contains(&1)),
        Family::D | Family::E => true,
    };
    if !arity_ok {
        return Err(PpaError::DeformationArityMismatch {
            family: family.to_string(),
            arity: if family == Family::A { 0 } else { 1 },
        });
    }
    if let Some(w) = terms.keys().find(|w| w.len() < 2) {
        return Err(PpaError::NotInRadicalSquare {
            word: super::poly::word_name(w),
        });
    }
    let Some((q, rels)) = local_ring(family, rank, field) else {
        return Ok(terms);
    };
    let red = graded(&q, field, &rels, degree_cap)?;
    let mut acc: BTreeMap<Word, u64> = BTreeMap::new();
    for (w, &c) in &terms {
        let p = Path {
            src: 0,
            dst: 0,
            arrows: w.iter().map(|&g| g as usize).collect(),
        };
        for (b, x) in red.reduce_path(field, &p) {
            let key: Word = red.basis[b].arrows.iter().map(|&a| a as u8).collect();
            let e = acc.entry(key).or_insert(0);
            *e = field.add(e, &field.mul(&c, &x));
        }
    }
    acc.retain(|_, c| *c != 0);
    Ok(acc)
}

/// Basis of `R(Delta)` as words, for reports and tests.
pub fn local_ring_basis(family: Family, rank: usize, field: &PrimeField, cap: usize) -> Result<Vec<Word>, PpaError> {
    let Some((q, rels)) = local_ring(family, rank, field) else {
        return Ok(vec![Word::new()]);
    };
    let red: Reduction = graded(&q, field, &rels, cap)?;
    Ok(red
        .basis
        .iter()
        .map(|p| p.arrows.iter().map(|&a| a as u8).collect())
        .collect())
}

/// Relations of `P^f(Delta)` for an already reduced `f`: the mesh sum at every
/// vertex (deformed at the exceptional one), then the extra nilpotency relation.
pub fn deformed_relations(dq: &DoubleQuiver, f: &BTreeMap<Word, u64>, field: &PrimeField) -> Vec<Element> {
    let q = &dq.quiver;
    let path = |arrows: Vec<usize>| {
        Element::from_path(Path {
            src: q.arrows[arrows[0]].src,
            dst: q.arrows[*arrows.last().expect("nonempty")].dst,
            arrows,
        })
    };
    let mut rels = Vec::new();
    for v in 0..q.vertex_count {
        let mut r = Element::zero();
        for a in q.arrows_from(v) {
            r = r.add(field, &path(vec![a, dq.partner[a]]));
        }
        if v == dq.exceptional {
            r = r.add(field, &substitute(dq, f, field));
        }
        if !r.is_zero() {
            rels.push(r);
        }
    }
    if let Some(extra) = nilpotency_relation(dq, field) {
        rels.push(extra);
    }
    rels
}

/// Images of `x` and `y` at the exceptional vertex.
fn generators(dq: &DoubleQuiver) -> Option<(Vec<usize>, Vec<usize>)> {
    match dq.family {
        Family::A | Family::L => None,
        Family::D => Some((vec![dq.abar(0), dq.a(0)], vec![dq.abar(1), dq.a(1)])),
        Family::E => Some((vec![dq.abar(0), dq.a(0)], vec![dq.abar(2), dq.a(2)])),
    }
}

fn substitute(dq: &DoubleQuiver, f: &BTreeMap<Word, u64>, field: &PrimeField) -> Element {
    let v = dq.exceptional;
    let mut out = Element::zero();
    for (w, &c) in f {
        let arrows: Vec<usize> = match (dq.eps(), generators(dq)) {
            (Some(eps), _) => vec![eps; w.len() + 1],
            (None, Some((x, y))) => w
                .iter()
                .flat_map(|&g| if g == 0 { x.clone() } else { y.clone() })
                .collect(),
            (None, None) => continue,
        };
        out.add_term(field, Path { src: v, dst: v, arrows }, c);
    }
    out
}

fn nilpotency_relation(dq: &DoubleQuiver, field: &PrimeField) -> Option<Element> {
    let v = dq.exceptional;
    let cycle = |arrows: Vec<usize>| Element::from_path(Path { src: v, dst: v, arrows });
    match dq.family {
        Family::A => None,
        Family::L => Some(cycle(vec![dq.eps()?; 2 * dq.rank])),
        Family::D | Family::E => {
            let (x, y) = generators(dq)?;
            let k = if dq.family == Family::D {
                dq.rank - 2
            } else {
                dq.rank - 3
            };
            Some(cycle(x).add(field, &cycle(y)).pow(field, k))
        }
    }
}
