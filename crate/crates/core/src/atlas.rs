//! The 28 invertible symmetric matrices and their classification into
//! {1} ∪ D ∪ U ∪ V.
//!
//! The canonical indexing (D1..D15, U1..U6, V1..V6) is fixed data; the
//! constructor re-derives the invertible set and each class from scratch and
//! refuses to build if the constants disagree with the computation.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{GqError, Result};
use crate::gf2::{Mat3, Row3, SymMat3};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MatrixClass {
    Identity,
    D,
    U,
    V,
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixClass::Identity => "Identity",
            MatrixClass::D => "D",
            MatrixClass::U => "U",
            MatrixClass::V => "V",
        })
    }
}

/// A class together with a 1-based index inside it; the identity has index 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub class: MatrixClass,
    pub index: usize,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            MatrixClass::Identity => f.write_str("I"),
            c => write!(f, "{}{}", c, self.index),
        }
    }
}

const fn sym(bits: u8) -> SymMat3 {
    SymMat3::from_bits(bits)
}

/// D1..D15 as (a,b,c,d,e,f) bit patterns.
pub const D_TABLE: [SymMat3; 15] = [
    sym(0b001100),
    sym(0b100010),
    sym(0b010001),
    sym(0b001101),
    sym(0b011011),
    sym(0b011110),
    sym(0b010101),
    sym(0b100011),
    sym(0b100110),
    sym(0b101100),
    sym(0b101111),
    sym(0b110001),
    sym(0b110111),
    sym(0b111010),
    sym(0b111101),
];

pub const U_TABLE: [SymMat3; 6] = [
    sym(0b111100),
    sym(0b101011),
    sym(0b011001),
    sym(0b001110),
    sym(0b010111),
    sym(0b110010),
];

pub const V_TABLE: [SymMat3; 6] = [
    sym(0b010011),
    sym(0b011100),
    sym(0b110110),
    sym(0b111001),
    sym(0b101010),
    sym(0b001111),
];

/// All 28 invertible symmetric matrices, found by exhaustive search.
pub fn enumerate_invertible_symmetric() -> Vec<SymMat3> {
    SymMat3::all().filter(|x| x.is_invertible()).collect()
}

/// The classification by eigenvalue and multiplicative closure.
///
/// `D` is decided by `det(x + 1) = 0`; the eigenvalue-free matrices are `U`
/// when they lie in the multiplicative closure of U1, otherwise `V`.
pub fn classify(x: SymMat3) -> Result<MatrixClass> {
    if !x.is_invertible() {
        return Err(GqError::NotInvertible(x.to_string()));
    }
    if x == SymMat3::IDENTITY {
        return Ok(MatrixClass::Identity);
    }
    if !(x + SymMat3::IDENTITY).is_invertible() {
        return Ok(MatrixClass::D);
    }
    let u1 = U_TABLE[0].to_mat3();
    let in_u = (1..=7).any(|k| u1.pow(k) == x.to_mat3());
    Ok(if in_u { MatrixClass::U } else { MatrixClass::V })
}

/// `{x, x², …, x⁷ = 1}` for an eigenvalue-free `x`.
pub fn multiplicative_closure(x: SymMat3) -> Result<BTreeSet<SymMat3>> {
    match classify(x) {
        Ok(MatrixClass::U | MatrixClass::V) => {}
        Ok(c) => return Err(GqError::WrongClass(x.to_string(), format!("U or V, found {c}"))),
        Err(_) => return Err(GqError::WrongClass(x.to_string(), "U or V, found singular".into())),
    }
    let m = x.to_mat3();
    let mut out = BTreeSet::new();
    let mut p = m;
    loop {
        let s = SymMat3::from_mat3(p).ok_or_else(|| GqError::Internal(format!("power {p} of {x} not symmetric")))?;
        out.insert(s);
        if p == Mat3::IDENTITY {
            break;
        }
        p = p * m;
    }
    Ok(out)
}

/// The permutation induced by `v ↦ v·x` on the 7 points of the Fano plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoAction {
    /// `image[p - 1]` is the image of point `p`, points being the nonzero 3-bit row vectors.
    pub image: [Row3; 7],
    pub fixed: Vec<Row3>,
}

impl FanoAction {
    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 7];
        let mut lens = Vec::new();
        for start in 1..=7u8 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p as usize - 1] {
                seen[p as usize - 1] = true;
                p = self.image[p as usize - 1];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// True when the fixed points are exactly the three points of a line.
    pub fn fixes_a_line(&self) -> bool {
        self.fixed.len() == 3 && self.fixed[0] ^ self.fixed[1] == self.fixed[2]
    }
}

pub fn fano_action(x: SymMat3) -> Result<FanoAction> {
    if !x.is_invertible() {
        return Err(GqError::NotInvertible(x.to_string()));
    }
    let m = x.to_mat3();
    let mut image = [0u8; 7];
    for p in 1..=7u8 {
        image[p as usize - 1] = m.apply_row(p);
    }
    let fixed = (1..=7u8).filter(|&p| image[p as usize - 1] == p).collect();
    Ok(FanoAction { image, fixed })
}

/// Entry of the exported atlas.
#[derive(Clone, Debug, Serialize)]
pub struct AtlasRecord {
    pub label: String,
    pub bits: String,
    pub class: MatrixClass,
    pub eigenspace_dim: usize,
    pub involution: bool,
}

/// The 28 invertible symmetric matrices with their canonical labels.
#[derive(Debug)]
pub struct Atlas {
    pub d: [SymMat3; 15],
    pub u: [SymMat3; 6],
    pub v: [SymMat3; 6],
}

static ATLAS: OnceLock<Atlas> = OnceLock::new();

impl Atlas {
    /// Builds the atlas and cross-checks the labelled constants against enumeration and classification.
    pub fn build() -> Result<Atlas> {
        let atlas = Atlas { d: D_TABLE, u: U_TABLE, v: V_TABLE };
        let enumerated: BTreeSet<SymMat3> = enumerate_invertible_symmetric().into_iter().collect();
        let tabled: BTreeSet<SymMat3> = atlas.invertible().into_iter().collect();
        if enumerated.len() != 28 || enumerated != tabled {
            return Err(GqError::Internal(format!(
                "labelled matrices disagree with enumeration ({} enumerated, {} labelled)",
                enumerated.len(),
                tabled.len()
            )));
        }
        for (class, members) in [(MatrixClass::D, &atlas.d[..]), (MatrixClass::U, &atlas.u[..]), (MatrixClass::V, &atlas.v[..])] {
            for &m in members {
                let c = classify(m)?;
                if c != class {
                    return Err(GqError::Internal(format!("{m} labelled {class} but classifies as {c}")));
                }
            }
        }
        Ok(atlas)
    }

    /// Process-wide atlas; panics if the labelled constants are inconsistent.
    pub fn global() -> &'static Atlas {
        ATLAS.get_or_init(|| Atlas::build().expect("atlas constants are inconsistent"))
    }

    /// The 27 points of S in canonical order D1..D15, U1..U6, V1..V6.
    pub fn s(&self) -> Vec<SymMat3> {
        self.d.iter().chain(&self.u).chain(&self.v).copied().collect()
    }

    /// The identity followed by S.
    pub fn invertible(&self) -> Vec<SymMat3> {
        std::iter::once(SymMat3::IDENTITY).chain(self.s()).collect()
    }

    pub fn class_members(&self, class: MatrixClass) -> &[SymMat3] {
        match class {
            MatrixClass::Identity => std::slice::from_ref(&SymMat3::IDENTITY),
            MatrixClass::D => &self.d,
            MatrixClass::U => &self.u,
            MatrixClass::V => &self.v,
        }
    }

    pub fn label_of(&self, x: SymMat3) -> Option<Label> {
        if x == SymMat3::IDENTITY {
            return Some(Label { class: MatrixClass::Identity, index: 0 });
        }
        [(MatrixClass::D, &self.d[..]), (MatrixClass::U, &self.u[..]), (MatrixClass::V, &self.v[..])]
            .into_iter()
            .find_map(|(c, ms)| ms.iter().position(|&m| m == x).map(|i| Label { class: c, index: i + 1 }))
    }

    pub fn by_label(&self, label: &str) -> Option<SymMat3> {
        if label == "I" {
            return Some(SymMat3::IDENTITY);
        }
        let (head, idx) = label.split_at(1);
        let i: usize = idx.parse().ok()?;
        let ms = match head {
            "D" => &self.d[..],
            "U" => &self.u[..],
            "V" => &self.v[..],
            _ => return None,
        };
        ms.get(i.checked_sub(1)?).copied()
    }

    /// Label string, or the bit string for matrices outside the atlas.
    pub fn name(&self, x: SymMat3) -> String {
        self.label_of(x).map_or_else(|| x.to_string(), |l| l.to_string())
    }

    pub fn records(&self) -> Vec<AtlasRecord> {
        self.invertible()
            .into_iter()
            .map(|x| {
                let m = x.to_mat3();
                AtlasRecord {
                    label: self.name(x),
                    bits: x.to_string(),
                    class: classify(x).expect("atlas members are invertible"),
                    eigenspace_dim: m.eigenspace_one_dim(),
                    involution: x != SymMat3::IDENTITY && m * m == Mat3::IDENTITY,
                }
            })
            .collect()
    }
}

/// Inversion and `(A,B) ↦ ABA` keep every invertible symmetric `A` and symmetric `B` inside J.
pub fn jordan_closure_check(id: &str) -> CheckReport {
    let mut witness = None;
    'outer: for a in Atlas::global().invertible() {
        let am = a.to_mat3();
        let inv = am.inverse().expect("invertible");
        if !inv.is_symmetric() {
            witness = Some(format!("inverse of {a} not symmetric"));
            break;
        }
        for b in SymMat3::all() {
            let aba = am * b.to_mat3() * am;
            if !aba.is_symmetric() {
                witness = Some(format!("A={a} B={b}: ABA={aba} not symmetric"));
                break 'outer;
            }
        }
    }
    CheckReport::no_counterexample(id, "J* closed under inversion, J closed under (A,B) -> ABA (28 x 64 pairs)", witness)
}
