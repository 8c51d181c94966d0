//! Exact linear algebra over GF(2) for 3×3 matrices and length-6 vectors.
//!
//! Everything is bit-packed:
//! - [`Mat3`] uses 9 bits, row-major, entry (1,1) most significant;
//! - [`SymMat3`] uses 6 bits in the order (a,b,c,d,e,f) = (X11,X12,X13,X22,X23,X33), `a` most significant;
//! - [`GfVec6`] uses 6 bits, x1 most significant;
//! - a row vector of F³ is a 3-bit value with x1 most significant.
//!
//! Matrices act on row vectors from the right: `v ↦ v·m`.

// XOR and AND are the field operations here.
#![allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::GqError;

/// An element of the two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2(bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub const fn new(bit: bool) -> Self {
        Gf2(bit)
    }

    pub const fn from_u8(bit: u8) -> Self {
        Gf2(bit & 1 == 1)
    }

    pub const fn is_one(self) -> bool {
        self.0
    }

    pub const fn as_u8(self) -> u8 {
        self.0 as u8
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf2 {
    fn add_assign(&mut self, rhs: Gf2) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl From<bool> for Gf2 {
    fn from(b: bool) -> Self {
        Gf2(b)
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// A row vector of F³, 3 bits with x1 as the most significant.
pub type Row3 = u8;

/// Dot product of two row vectors of F³.
pub fn dot3(u: Row3, v: Row3) -> Gf2 {
    Gf2::new((u & v & 0b111).count_ones() % 2 == 1)
}

/// A 3×3 matrix over GF(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat3(u16);

impl Mat3 {
    pub const ZERO: Mat3 = Mat3(0);
    pub const IDENTITY: Mat3 = Mat3(0b100_010_001);

    /// Builds a matrix from its 9 row-major bits; higher bits are ignored.
    pub const fn from_bits(bits: u16) -> Self {
        Mat3(bits & 0x1ff)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn from_rows(rows: [Row3; 3]) -> Self {
        Mat3((((rows[0] & 7) as u16) << 6) | (((rows[1] & 7) as u16) << 3) | ((rows[2] & 7) as u16))
    }

    /// Row `i` (0-based) as a 3-bit vector.
    pub const fn row(self, i: usize) -> Row3 {
        ((self.0 >> (6 - 3 * i)) & 7) as u8
    }

    pub const fn rows(self) -> [Row3; 3] {
        [self.row(0), self.row(1), self.row(2)]
    }

    /// Entry (i,j), 0-based.
    pub const fn get(self, i: usize, j: usize) -> Gf2 {
        Gf2::from_u8(((self.0 >> (8 - (3 * i + j))) & 1) as u8)
    }

    pub fn transpose(self) -> Mat3 {
        let mut out = 0u16;
        for i in 0..3 {
            for j in 0..3 {
                if self.get(j, i).is_one() {
                    out |= 1 << (8 - (3 * i + j));
                }
            }
        }
        Mat3(out)
    }

    pub fn is_symmetric(self) -> bool {
        self == self.transpose()
    }

    /// The row vector `v·self`.
    pub fn apply_row(self, v: Row3) -> Row3 {
        (0..3)
            .filter(|&i| v & (0b100 >> i) != 0)
            .fold(0, |acc, i| acc ^ self.row(i))
    }

    /// Determinant by cofactor expansion along the first row; signs vanish mod 2.
    pub fn det(self) -> Gf2 {
        let m = |i, j| self.get(i, j);
        m(0, 0) * (m(1, 1) * m(2, 2) + m(1, 2) * m(2, 1))
            + m(0, 1) * (m(1, 0) * m(2, 2) + m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) + m(1, 1) * m(2, 0))
    }

    /// Row rank via Gaussian elimination.
    pub fn rank(self) -> usize {
        rank_of_rows(&self.rows().map(u64::from))
    }

    /// The 2×2 minor obtained by deleting row `i` and column `j`.
    pub fn minor(self, i: usize, j: usize) -> Gf2 {
        let rs: Vec<usize> = (0..3).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..3).filter(|&c| c != j).collect();
        self.get(rs[0], cs[0]) * self.get(rs[1], cs[1]) + self.get(rs[0], cs[1]) * self.get(rs[1], cs[0])
    }

    /// Inverse via the adjugate (over GF(2) the inverse of an invertible matrix is its adjugate).
    pub fn inverse(self) -> Result<Mat3, GqError> {
        if !self.det().is_one() {
            return Err(GqError::SingularMatrix(self.to_string()));
        }
        let mut out = 0u16;
        for i in 0..3 {
            for j in 0..3 {
                // adj(m)_{ij} = cofactor_{ji}
                if self.minor(j, i).is_one() {
                    out |= 1 << (8 - (3 * i + j));
                }
            }
        }
        Ok(Mat3(out))
    }

    /// All row vectors `x` with `x·self = x`, zero included, in increasing order.
    pub fn eigenspace_one(self) -> Vec<Row3> {
        (0u8..8).filter(|&v| self.apply_row(v) == v).collect()
    }

    /// Dimension of [`Mat3::eigenspace_one`].
    pub fn eigenspace_one_dim(self) -> usize {
        self.eigenspace_one().len().trailing_zeros() as usize
    }

    /// Smallest `k ≥ 1` with `self^k = 1`, if the matrix is invertible.
    pub fn multiplicative_order(self) -> Option<usize> {
        if !self.det().is_one() {
            return None;
        }
        let mut p = self;
        for k in 1..=168 {
            if p == Mat3::IDENTITY {
                return Some(k);
            }
            p = p * self;
        }
        None
    }

    pub fn pow(self, mut e: u32) -> Mat3 {
        let mut base = self;
        let mut acc = Mat3::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Iterates over all 512 matrices in bit order.
    pub fn all() -> impl Iterator<Item = Mat3> {
        (0u16..512).map(Mat3)
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(self, rhs: Mat3) -> Mat3 {
        Mat3(self.0 ^ rhs.0)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        Mat3::from_rows(self.rows().map(|r| rhs.apply_row(r)))
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rows();
        write!(f, "{:03b}/{:03b}/{:03b}", r[0], r[1], r[2])
    }
}

/// A symmetric 3×3 matrix `[[a,b,c],[b,d,e],[c,e,f]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMat3(u8);

impl SymMat3 {
    pub const ZERO: SymMat3 = SymMat3(0);
    pub const IDENTITY: SymMat3 = SymMat3(0b100101);

    pub const fn from_bits(bits: u8) -> Self {
        SymMat3(bits & 0x3f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// The entries (a,b,c,d,e,f).
    pub const fn entries(self) -> [Gf2; 6] {
        let b = self.0;
        [
            Gf2::from_u8(b >> 5),
            Gf2::from_u8(b >> 4),
            Gf2::from_u8(b >> 3),
            Gf2::from_u8(b >> 2),
            Gf2::from_u8(b >> 1),
            Gf2::from_u8(b),
        ]
    }

    pub fn from_entries(e: [Gf2; 6]) -> Self {
        SymMat3(e.iter().fold(0u8, |acc, x| (acc << 1) | x.as_u8()))
    }

    pub fn to_mat3(self) -> Mat3 {
        let [a, b, c, d, e, f] = self.entries().map(Gf2::as_u8);
        Mat3::from_rows([(a << 2) | (b << 1) | c, (b << 2) | (d << 1) | e, (c << 2) | (e << 1) | f])
    }

    /// `None` if `m` is not symmetric.
    pub fn from_mat3(m: Mat3) -> Option<SymMat3> {
        if !m.is_symmetric() {
            return None;
        }
        Some(SymMat3::from_entries([m.get(0, 0), m.get(0, 1), m.get(0, 2), m.get(1, 1), m.get(1, 2), m.get(2, 2)]))
    }

    pub fn det(self) -> Gf2 {
        self.to_mat3().det()
    }

    pub fn rank(self) -> usize {
        self.to_mat3().rank()
    }

    pub fn is_invertible(self) -> bool {
        self.det().is_one()
    }

    pub fn inverse(self) -> Result<SymMat3, GqError> {
        let inv = self.to_mat3().inverse()?;
        SymMat3::from_mat3(inv).ok_or_else(|| GqError::Internal(format!("inverse of {self} is not symmetric")))
    }

    /// All 64 symmetric matrices in bit order.
    pub fn all() -> impl Iterator<Item = SymMat3> {
        (0u8..64).map(SymMat3)
    }
}

impl Add for SymMat3 {
    type Output = SymMat3;
    fn add(self, rhs: SymMat3) -> SymMat3 {
        SymMat3(self.0 ^ rhs.0)
    }
}

impl fmt::Display for SymMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:06b}", self.0)
    }
}

fn parse_bits6(s: &str) -> Result<u8, GqError> {
    let t = s.trim();
    if t.len() != 6 || !t.bytes().all(|c| c == b'0' || c == b'1') {
        return Err(GqError::Parse(format!("expected 6 characters from {{0,1}}, got {s:?}")));
    }
    Ok(t.bytes().fold(0u8, |acc, c| (acc << 1) | (c - b'0')))
}

impl FromStr for SymMat3 {
    type Err = GqError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bits6(s).map(SymMat3)
    }
}

/// A vector of F⁶; the nonzero ones are the points of PG(5,2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GfVec6(u8);

impl GfVec6 {
    pub const ZERO: GfVec6 = GfVec6(0);
    pub const ALL_ONES: GfVec6 = GfVec6(0x3f);

    pub const fn from_bits(bits: u8) -> Self {
        GfVec6(bits & 0x3f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// Coordinate `x_k` for `k` in 1..=6.
    pub const fn coord(self, k: usize) -> Gf2 {
        Gf2::from_u8(self.0 >> (6 - k))
    }

    pub fn from_coords(c: [Gf2; 6]) -> Self {
        GfVec6(c.iter().fold(0u8, |acc, x| (acc << 1) | x.as_u8()))
    }

    pub fn coords(self) -> [Gf2; 6] {
        [1, 2, 3, 4, 5, 6].map(|k| self.coord(k))
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Splits `(u|v)` into its two halves of F³.
    pub const fn halves(self) -> (Row3, Row3) {
        (self.0 >> 3, self.0 & 7)
    }

    pub const fn from_halves(u: Row3, v: Row3) -> Self {
        GfVec6(((u & 7) << 3) | (v & 7))
    }

    pub fn all() -> impl Iterator<Item = GfVec6> {
        (0u8..64).map(GfVec6)
    }

    /// The 63 points of PG(5,2) in bit order.
    pub fn all_nonzero() -> impl Iterator<Item = GfVec6> {
        (1u8..64).map(GfVec6)
    }
}

impl Add for GfVec6 {
    type Output = GfVec6;
    fn add(self, rhs: GfVec6) -> GfVec6 {
        GfVec6(self.0 ^ rhs.0)
    }
}

impl fmt::Display for GfVec6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:06b}", self.0)
    }
}

impl FromStr for GfVec6 {
    type Err = GqError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bits6(s).map(GfVec6)
    }
}

/// Reduced row echelon form of a set of bit rows; pivots are taken at the
/// most significant remaining bit. Zero rows are dropped, so the length of the
/// result is the rank.
pub fn echelon_rows(rows: &[u64]) -> Vec<u64> {
    let mut work: Vec<u64> = rows.iter().copied().filter(|&r| r != 0).collect();
    let mut out: Vec<u64> = Vec::new();
    while let Some(pivot_row) = work.iter().copied().max() {
        if pivot_row == 0 {
            break;
        }
        let pivot = 63 - pivot_row.leading_zeros();
        let bit = 1u64 << pivot;
        for r in work.iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot_row;
            }
        }
        for r in out.iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot_row;
            }
        }
        out.push(pivot_row);
        work.retain(|&r| r != 0);
    }
    out
}

/// Rank of a set of bit rows over GF(2).
pub fn rank_of_rows(rows: &[u64]) -> usize {
    echelon_rows(rows).len()
}

impl serde::Serialize for SymMat3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for GfVec6 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D1: SymMat3 = SymMat3::from_bits(0b001100);
    const U1: SymMat3 = SymMat3::from_bits(0b111100);

    #[test]
    fn field_rules() {
        for x in [Gf2::ZERO, Gf2::ONE] {
            assert_eq!(x * x, x);
            assert_eq!(x + x, Gf2::ZERO);
        }
        assert_eq!(Gf2::ONE + Gf2::ZERO, Gf2::ONE);
        assert_eq!(Gf2::ONE * Gf2::ZERO, Gf2::ZERO);
    }

    #[test]
    fn det_examples() {
        assert_eq!(Mat3::IDENTITY.det(), Gf2::ONE);
        assert_eq!(Mat3::ZERO.det(), Gf2::ZERO);
        assert_eq!(D1.to_mat3(), Mat3::from_rows([0b001, 0b010, 0b100]));
        assert_eq!(D1.det(), Gf2::ONE);
    }

    #[test]
    fn rank_examples() {
        let m = D1.to_mat3() + Mat3::IDENTITY;
        assert_eq!(m, Mat3::from_rows([0b101, 0b000, 0b101]));
        assert_eq!(m.rank(), 1);
        assert_eq!(Mat3::ZERO.rank(), 0);
        // (D1 | 1) as a 3×6 matrix
        let rows: Vec<u64> = D1.to_mat3().rows().iter().zip([0b100u8, 0b010, 0b001]).map(|(&a, b)| u64::from((a << 3) | b)).collect();
        assert_eq!(rank_of_rows(&rows), 3);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Mat3::IDENTITY.inverse().unwrap(), Mat3::IDENTITY);
        assert_eq!(D1.inverse().unwrap(), D1);
        // U1 has order 7, so its inverse is U1^6.
        let u = U1.to_mat3();
        assert_eq!(u.multiplicative_order(), Some(7));
        assert_eq!(u.inverse().unwrap(), u.pow(6));
        assert!(matches!(Mat3::ZERO.inverse(), Err(GqError::SingularMatrix(_))));
    }

    #[test]
    fn eigenspace_examples() {
        assert_eq!(D1.to_mat3().eigenspace_one(), vec![0b000, 0b010, 0b101, 0b111]);
        assert_eq!(D1.to_mat3().eigenspace_one_dim(), 2);
        assert_eq!(U1.to_mat3().eigenspace_one_dim(), 0);
        assert_eq!(Mat3::IDENTITY.eigenspace_one_dim(), 3);
    }

    #[test]
    fn rank_three_iff_det_one() {
        for m in Mat3::all() {
            assert_eq!(m.rank() == 3, m.det().is_one(), "{m}");
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!("001100".parse::<SymMat3>().unwrap(), D1);
        assert_eq!(SymMat3::IDENTITY.to_string(), "100101");
        assert_eq!(SymMat3::IDENTITY.to_mat3(), Mat3::IDENTITY);
        assert!("00110".parse::<SymMat3>().is_err());
        assert!("00110x".parse::<SymMat3>().is_err());
        assert_eq!("100000".parse::<GfVec6>().unwrap().coord(1), Gf2::ONE);
    }

    #[test]
    fn echelon_is_reduced() {
        let e = echelon_rows(&[0b110, 0b011, 0b101]);
        assert_eq!(e, vec![0b101, 0b011]);
    }
}
