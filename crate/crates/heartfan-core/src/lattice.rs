//! Lattices, lattice vectors, dual vectors and lattice homomorphisms.
//!
//! A lattice is a free abelian group of finite rank; we only ever need its
//! rank. Lattice vectors have exact integer coordinates, dual vectors exact
//! rational ones, and the pairing between them is the exact dot product.
//! By convention lattice vectors print as `(m, n)` and dual vectors as
//! `[a, b]`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;

/// A free abelian group of finite rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Lattice {
    rank: usize,
}

impl Lattice {
    pub fn new(rank: usize) -> Self {
        Lattice { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found })
        }
    }
}

/// An element of a lattice: exact integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector { coords: coords.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector { coords: alloc::vec![BigInt::zero(); rank] }
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.coords[i] = BigInt::from(1);
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        linalg::dot(&self.coords, &other.coords)
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// Greatest common divisor of the coordinates (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        g
    }

    /// The primitive vector on the same ray: coordinates divided by their
    /// gcd. Errors on the zero vector.
    pub fn primitive(&self) -> Result<LatticeVector> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.content();
        Ok(LatticeVector { coords: self.coords.iter().map(|c| c / &g).collect() })
    }

    /// Scales away the content if nonzero; identity on zero.
    pub fn primitive_or_zero(&self) -> LatticeVector {
        self.primitive().unwrap_or_else(|_| self.clone())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        LatticeVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.rank(), rhs.rank());
        LatticeVector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

fn fmt_coords<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    open: char,
    close: char,
    coords: &[T],
) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "{close}")
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, '(', ')', &self.coords)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, '(', ')', &self.coords)
    }
}

/// A rational point of the dual space `Hom(L, R)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualVector {
    coords: Vec<BigRational>,
}

impl DualVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        DualVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        DualVector {
            coords: coords.iter().map(|&c| BigRational::from(BigInt::from(c))).collect(),
        }
    }

    pub fn from_lattice(v: &LatticeVector) -> Self {
        DualVector { coords: v.coords().iter().map(|c| BigRational::from(c.clone())).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The exact pairing `<w, x> = sum_i w_i x_i`.
    pub fn pair(&self, x: &LatticeVector) -> Result<BigRational> {
        if self.rank() != x.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: x.rank() });
        }
        let mut acc = BigRational::zero();
        for (w, c) in self.coords.iter().zip(x.coords()) {
            acc += w * BigRational::from(c.clone());
        }
        Ok(acc)
    }

    /// Clears denominators and divides by the content: the primitive integer
    /// vector spanning the same ray of the dual space.
    pub fn primitive_integer(&self) -> Result<LatticeVector> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut lcm = BigInt::from(1);
        for c in &self.coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coords.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        LatticeVector::new(ints).primitive()
    }
}

impl fmt::Debug for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, '[', ']', &self.coords)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, '[', ']', &self.coords)
    }
}

/// The exact pairing between a dual vector and a lattice vector.
pub fn pair(w: &DualVector, x: &LatticeVector) -> Result<BigRational> {
    w.pair(x)
}

/// A homomorphism of lattices, stored as a (target rank) x (source rank)
/// integer matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    rows: Vec<Vec<BigInt>>,
    source: usize,
    target: usize,
}

impl LatticeHom {
    pub fn new(rows: Vec<Vec<BigInt>>, source: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != source {
                return Err(Error::RankMismatch { expected: source, found: r.len() });
            }
        }
        let target = rows.len();
        Ok(LatticeHom { rows, source, target })
    }

    pub fn from_i64(rows: &[&[i64]], source: usize) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        Self::new(rows, source).expect("row lengths match the source rank")
    }

    pub fn identity(rank: usize) -> Self {
        let rows = (0..rank)
            .map(|i| LatticeVector::unit(rank, i).into_coords())
            .collect();
        LatticeHom { rows, source: rank, target: rank }
    }

    pub fn source_rank(&self) -> usize {
        self.source
    }

    pub fn target_rank(&self) -> usize {
        self.target
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn apply(&self, x: &LatticeVector) -> Result<LatticeVector> {
        if x.rank() != self.source {
            return Err(Error::RankMismatch { expected: self.source, found: x.rank() });
        }
        Ok(LatticeVector::new(linalg::apply_matrix(&self.rows, x.coords())))
    }

    /// The dual homomorphism: the transpose, satisfying
    /// `pair(dual_hom(f)(w), x) = pair(w, f(x))`.
    pub fn dual_hom(&self) -> LatticeHom {
        let rows = (0..self.source)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        LatticeHom { rows, source: self.target, target: self.source }
    }

    /// Pulls a dual vector of the target back to one of the source.
    pub fn pullback_dual(&self, w: &DualVector) -> Result<DualVector> {
        if w.rank() != self.target {
            return Err(Error::RankMismatch { expected: self.target, found: w.rank() });
        }
        let coords = (0..self.source)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (i, row) in self.rows.iter().enumerate() {
                    acc += &w.coords()[i] * BigRational::from(row[j].clone());
                }
                acc
            })
            .collect();
        Ok(DualVector::new(coords))
    }
}

pub fn display_list<T: fmt::Display>(items: &[T]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{it}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    fn lv(xs: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(xs)
    }

    fn dv(xs: &[i64]) -> DualVector {
        DualVector::from_i64(xs)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pairing_is_exact() {
        assert_eq!(pair(&dv(&[1, 0]), &lv(&[0, 1])).unwrap(), BigRational::zero());
        assert_eq!(pair(&dv(&[-1, 2]), &lv(&[2, 1])).unwrap(), BigRational::zero());
        let w = DualVector::new(alloc::vec![q(1, 2), q(1, 3)]);
        assert_eq!(w.pair(&lv(&[6, 6])).unwrap(), BigRational::from(BigInt::from(5)));
        assert!(pair(&dv(&[1]), &lv(&[1, 2])).is_err());
    }

    #[test]
    fn pairing_is_bilinear() {
        let w = DualVector::new(alloc::vec![q(3, 7), q(-2, 5)]);
        let x = lv(&[4, -1]);
        let y = lv(&[-2, 9]);
        let lhs = w.pair(&(&x + &y)).unwrap();
        let rhs = w.pair(&x).unwrap() + w.pair(&y).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(lv(&[2, 4]).primitive().unwrap(), lv(&[1, 2]));
        assert_eq!(lv(&[-3, 0]).primitive().unwrap(), lv(&[-1, 0]));
        assert_eq!(lv(&[6, 10, 15]).primitive().unwrap(), lv(&[6, 10, 15]));
        assert_eq!(lv(&[0, 0]).primitive().unwrap_err(), Error::ZeroVector);
        // idempotent, sign of first nonzero coordinate preserved
        let p = lv(&[-4, 6]).primitive().unwrap();
        assert_eq!(p.primitive().unwrap(), p);
        assert!(p.coords()[0].is_negative());
    }

    #[test]
    fn dual_hom_is_transpose_and_adjoint() {
        let id = LatticeHom::identity(2);
        assert_eq!(id.dual_hom(), id);

        let f = LatticeHom::from_i64(&[&[1, 1], &[0, 1]], 2);
        let ft = LatticeHom::from_i64(&[&[1, 0], &[1, 1]], 2);
        assert_eq!(f.dual_hom(), ft);
        assert_eq!(f.dual_hom().dual_hom(), f);

        // projection Z^2 -> Z and its dual inclusion
        let p = LatticeHom::from_i64(&[&[0, 1]], 2);
        let pd = p.dual_hom();
        assert_eq!(pd.rows(), &[alloc::vec![BigInt::zero()], alloc::vec![BigInt::one()]]);
        let w = dv(&[5]);
        let x = lv(&[3, 4]);
        let lhs = pd.pullback_dual(&DualVector::from_i64(&[])).is_err();
        assert!(lhs);
        // adjointness pair(f*(w), x) = pair(w, f(x))
        let fw = p.pullback_dual(&w).unwrap();
        assert_eq!(fw.pair(&x).unwrap(), w.pair(&p.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn primitive_integer_of_dual() {
        let w = DualVector::new(alloc::vec![q(1, 2), q(-1, 3)]);
        assert_eq!(w.primitive_integer().unwrap(), lv(&[3, -2]));
    }
}
