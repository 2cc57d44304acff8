//! Dense exact Gaussian elimination over any [`Field`].
//!
//! Matrices are row-major `Vec<Vec<E>>`. Every routine here is exact; there
//! is no pivoting heuristic beyond "first nonzero entry".

use crate::field::Field;

/// Reduced row echelon form of a matrix.
#[derive(Debug, Clone)]
pub struct Rref<E> {
    /// Nonzero rows only, each with a leading one in its pivot column.
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E: Clone> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

pub fn rref<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>, ncols: usize) -> Rref<F::Elem> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(sel) = (r..m.len()).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(&m[r][c]);
        for x in m[r].iter_mut().skip(c) {
            *x = field.mul(x, &inv);
        }
        for i in 0..m.len() {
            if i == r || field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                if field.is_zero(&m[r][j]) {
                    continue;
                }
                let t = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref { rows: m, pivots, ncols }
}

pub fn rank<F: Field>(field: &F, m: Vec<Vec<F::Elem>>, ncols: usize) -> usize {
    rref(field, m, ncols).rank()
}

/// Basis of `{x : M x = 0}`.
pub fn kernel<F: Field>(field: &F, m: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let red = rref(field, m, ncols);
    let free = red.free_columns();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in red.rows.iter().zip(&red.pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect()
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<E> {
    Inconsistent,
    Unique(Vec<E>),
    /// One particular solution plus the dimension of the solution space.
    Affine(Vec<E>, usize),
}

pub fn solve<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[F::Elem], ncols: usize) -> Solution<F::Elem> {
    let augmented: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let red = rref(field, augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &pc) in red.rows.iter().zip(&red.pivots) {
        x[pc] = row[ncols].clone();
    }
    let nullity = ncols - red.rank();
    if nullity == 0 {
        Solution::Unique(x)
    } else {
        Solution::Affine(x, nullity)
    }
}

/// Quotient of `F^dim` by the span of `generators`.
///
/// Returns the quotient dimension and the projection matrix
/// (`quotient_dim x dim`), taking the non-pivot coordinates as the basis of
/// the quotient.
pub fn quotient_projection<F: Field>(
    field: &F,
    generators: Vec<Vec<F::Elem>>,
    dim: usize,
) -> (usize, Vec<Vec<F::Elem>>) {
    let red = rref(field, generators, dim);
    let free = red.free_columns();
    let mut position = vec![usize::MAX; dim];
    for (i, &c) in free.iter().enumerate() {
        position[c] = i;
    }
    let mut proj = vec![vec![field.zero(); dim]; free.len()];
    for (i, &c) in free.iter().enumerate() {
        proj[i][c] = field.one();
    }
    // a pivot coordinate e_c is congruent to -(row without its pivot)
    for (row, &pc) in red.rows.iter().zip(&red.pivots) {
        for (j, val) in row.iter().enumerate() {
            if j == pc || field.is_zero(val) {
                continue;
            }
            let i = position[j];
            debug_assert!(i != usize::MAX, "rref row has entry in another pivot column");
            proj[i][pc] = field.neg(val);
        }
    }
    (free.len(), proj)
}

pub fn mat_vec<F: Field>(field: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                if field.is_zero(a) || field.is_zero(b) {
                    acc
                } else {
                    field.add(&acc, &field.mul(a, b))
                }
            })
        })
        .collect()
}

/// `a * b` where `a` is `r x k` and `b` is `k x c`.
pub fn mat_mul<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], c: usize) -> Vec<Vec<F::Elem>> {
    a.iter()
        .map(|row| {
            let mut out = vec![field.zero(); c];
            for (k, x) in row.iter().enumerate() {
                if field.is_zero(x) {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !field.is_zero(y) {
                        out[j] = field.add(&out[j], &field.mul(x, y));
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Exact, PrimeField};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let f = Exact::<Rational>::new();
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(&f, m, 3), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = PrimeField::new(5).unwrap();
        let m = vec![vec![1, 2, 3, 4], vec![2, 4, 1, 1]];
        let ker = kernel(&f, m.clone(), 4);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(mat_vec(&f, &m, &v).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn solve_cases() {
        let f = Exact::<Rational>::new();
        let a = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        assert_eq!(solve(&f, &a, &[q(2), q(2)], 2), Solution::Unique(vec![q(2), q(2)]));
        let sing = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert_eq!(solve(&f, &sing, &[q(1), q(2)], 2), Solution::Inconsistent);
        assert!(matches!(solve(&f, &sing, &[q(1), q(1)], 2), Solution::Affine(_, 1)));
    }

    #[test]
    fn projection_kills_generators() {
        let f = PrimeField::new(7).unwrap();
        let gens = vec![vec![1, 1, 0], vec![0, 1, 6]];
        let (d, p) = quotient_projection(&f, gens.clone(), 3);
        assert_eq!(d, 1);
        for g in gens {
            assert!(mat_vec(&f, &p, &g).iter().all(|x| *x == 0));
        }
        // projection is onto
        assert!(p[0].iter().any(|x| *x != 0));
    }
}
