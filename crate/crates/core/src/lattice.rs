//! The abelianized layer: vectors of Z² and 2×2 integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub p: i64,
    pub q: i64,
}

impl LatticeVector {
    pub const fn new(p: i64, q: i64) -> LatticeVector {
        LatticeVector { p, q }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// `det(self, other)` with the vectors as columns.
    pub fn det(self, other: LatticeVector) -> i64 {
        self.p * other.q - self.q * other.p
    }

    /// `gcd(|p|, |q|) = 1`, with `gcd(n, 0) = n`.
    pub fn is_primitive(self) -> bool {
        gcd(self.p.unsigned_abs(), self.q.unsigned_abs()) == 1
    }

    /// Closed quadrant test; the zero vector lies in none.
    pub fn in_quadrant(self, quadrant: Quadrant) -> bool {
        if self.is_zero() {
            return false;
        }
        let (sp, sq) = quadrant.signs();
        self.p * sp >= 0 && self.q * sq >= 0
    }

    pub fn l1_norm(self) -> u64 {
        self.p.unsigned_abs() + self.q.unsigned_abs()
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;

    fn add(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;

    fn sub(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.p, -self.q)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The four closed quadrants of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    First,
    Second,
    Third,
    Fourth,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::First, Quadrant::Second, Quadrant::Third, Quadrant::Fourth];

    fn signs(self) -> (i64, i64) {
        match self {
            Quadrant::First => (1, 1),
            Quadrant::Second => (-1, 1),
            Quadrant::Third => (-1, -1),
            Quadrant::Fourth => (1, -1),
        }
    }

    /// First quadrant, in the fixed order I..IV, containing every vector.
    pub fn common(vectors: &[LatticeVector]) -> Option<Quadrant> {
        Quadrant::ALL.into_iter().find(|&q| vectors.iter().all(|v| v.in_quadrant(q)))
    }
}

/// Row-major 2×2 integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);
    /// Abelianization of G and G̃.
    pub const A: IntMatrix2 = IntMatrix2::new(1, 1, 0, 1);
    /// Abelianization of D and D̃.
    pub const B: IntMatrix2 = IntMatrix2::new(1, 0, 1, 1);

    pub const fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> IntMatrix2 {
        IntMatrix2 { m11, m12, m21, m22 }
    }

    pub fn from_columns(c1: LatticeVector, c2: LatticeVector) -> IntMatrix2 {
        IntMatrix2::new(c1.p, c2.p, c1.q, c2.q)
    }

    pub fn column(&self, i: usize) -> LatticeVector {
        match i {
            0 => LatticeVector::new(self.m11, self.m21),
            1 => LatticeVector::new(self.m12, self.m22),
            _ => panic!("column index {i} out of range"),
        }
    }

    pub fn det(&self) -> i64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn mul(&self, o: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2::new(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )
    }

    pub fn apply(&self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.m11 * v.p + self.m12 * v.q, self.m21 * v.p + self.m22 * v.q)
    }

    pub fn inverse_unimodular(&self) -> Result<IntMatrix2> {
        let d = self.det();
        if d != 1 && d != -1 {
            return Err(Error::NotUnimodular(d));
        }
        // d = ±1, so dividing by d is multiplying by d.
        Ok(IntMatrix2::new(d * self.m22, -d * self.m12, -d * self.m21, d * self.m11))
    }

    pub fn pow(&self, n: u32) -> IntMatrix2 {
        (0..n).fold(IntMatrix2::IDENTITY, |acc, _| IntMatrix2::mul(&acc, self))
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;

    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        IntMatrix2::mul(&self, &o)
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: IntMatrix2 = IntMatrix2::A;
    const B: IntMatrix2 = IntMatrix2::B;

    #[test]
    fn modular_relations() {
        assert_eq!(A.det(), 1);
        assert_eq!(B.det(), 1);
        let b_inv = B.inverse_unimodular().unwrap();
        assert_eq!(b_inv, IntMatrix2::new(1, 0, -1, 1));
        assert_eq!(A * b_inv * A, b_inv * A * b_inv);
        assert_eq!((A * b_inv * A).pow(4), IntMatrix2::IDENTITY);
        assert_eq!(A * b_inv * A, IntMatrix2::new(0, 1, -1, 0));
    }

    #[test]
    fn inverse_requires_unimodular() {
        assert_eq!(IntMatrix2::new(2, 0, 0, 1).inverse_unimodular(), Err(Error::NotUnimodular(2)));
        let m = IntMatrix2::new(0, 1, 1, 0);
        assert_eq!(m * m.inverse_unimodular().unwrap(), IntMatrix2::IDENTITY);
    }

    #[test]
    fn quadrants_are_closed() {
        let x = LatticeVector::new(1, 0);
        assert!(x.in_quadrant(Quadrant::First));
        assert!(x.in_quadrant(Quadrant::Fourth));
        assert!(!x.in_quadrant(Quadrant::Second));
        assert!(!LatticeVector::new(0, 0).in_quadrant(Quadrant::First));
        assert_eq!(Quadrant::common(&[LatticeVector::new(1, 0), LatticeVector::new(0, -1)]), Some(Quadrant::Fourth));
        assert_eq!(Quadrant::common(&[LatticeVector::new(1, 1), LatticeVector::new(-1, -1)]), None);
    }

    #[test]
    fn primitivity() {
        assert!(LatticeVector::new(1, 0).is_primitive());
        assert!(!LatticeVector::new(2, 0).is_primitive());
        assert!(!LatticeVector::new(0, 0).is_primitive());
        assert!(LatticeVector::new(-5, 2).is_primitive());
        assert!(!LatticeVector::new(4, -6).is_primitive());
    }
}
