//! Exact scalar fields used by the linear-algebra kernels.
//!
//! A [`Field`] is a context object carrying whatever runtime data the
//! arithmetic needs (the modulus of a prime field, nothing for the
//! rationals). Elements are plain values, so the kernels in
//! [`crate::linalg`] stay generic without forcing the modulus into the type.

use std::fmt::Debug;
use std::marker::PhantomData;

/// Arithmetic in a commutative field with exact equality.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// Zero-sized context for any exact field type implementing the `num-traits`
/// arithmetic traits (`BigRational`, `Ratio<i64>`, ...).
pub struct Exact<T>(PhantomData<T>);

impl<T> Exact<T> {
    pub const fn new() -> Self {
        Exact(PhantomData)
    }
}

impl<T> Default for Exact<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Exact<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Copy for Exact<T> {}

impl<T> Debug for Exact<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Exact<{}>", std::any::type_name::<T>())
    }
}

impl<T> Field for Exact<T>
where
    T: num_traits::Num + num_traits::FromPrimitive + Clone + Debug + std::ops::Neg<Output = T>,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn neg(&self, a: &T) -> T {
        -a.clone()
    }
    fn inv(&self, a: &T) -> T {
        assert!(!a.is_zero(), "inverse of zero");
        T::one() / a.clone()
    }
    fn from_i64(&self, n: i64) -> T {
        T::from_i64(n).expect("integer embeds in field")
    }
}

/// The prime field GF(p), elements stored as canonical residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not a prime below 2^31")]
pub struct NotPrime(pub u64);

impl PrimeField {
    /// Moduli are kept below 2^31 so that products fit in `u64`.
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`, for display.
    pub fn symmetric(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn prime_field_inverses() {
        for p in [2u64, 3, 5, 7, 32003] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(500) {
                assert_eq!(f.mul(&a, &f.inv(&a)), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert_eq!(PrimeField::new(32003).unwrap().characteristic(), 32003);
    }

    #[test]
    fn rational_context() {
        let q = Exact::<BigRational>::new();
        let two = q.from_i64(2);
        let half = q.inv(&two);
        assert!(q.is_one(&q.mul(&two, &half)));
        assert!(q.is_zero(&q.add(&half, &q.neg(&half))));
    }

    #[test]
    fn symmetric_representative() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.symmetric(6), -1);
        assert_eq!(f.symmetric(3), 3);
        assert_eq!(f.reduce_i64(-1), 6);
    }
}
