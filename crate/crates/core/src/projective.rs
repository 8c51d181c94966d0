//! PG(5,2), the coordinate map α and the quadratic forms q₀, q, q_M.
//!
//! Points are nonzero [`GfVec6`] values. A matrix `X` of J is placed in
//! PG(5,2) through `α(X)`; since α is not linear, "matrix" addition and
//! "vector" addition are different operations and both are provided:
//! [`pi_translate`] adds matrices, [`third_point`] adds vectors.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{GqError, Result};
use crate::gf2::{Gf2, GfVec6, SymMat3};

/// `α(X) = (a, e+df, d, c+af, f, b+ad)`.
pub fn alpha(x: SymMat3) -> GfVec6 {
    let [a, b, c, d, e, f] = x.entries();
    GfVec6::from_coords([a, e + d * f, d, c + a * f, f, b + a * d])
}

/// Back-substitution: a, d, f are read off, then e, c, b.
pub fn alpha_inverse(v: GfVec6) -> SymMat3 {
    let [v1, v2, v3, v4, v5, v6] = v.coords();
    let (a, d, f) = (v1, v3, v5);
    let e = v2 + d * f;
    let c = v4 + a * f;
    let b = v6 + a * d;
    SymMat3::from_entries([a, b, c, d, e, f])
}

/// The hyperbolic form `x1x2 + x3x4 + x5x6`.
pub fn q0_eval(v: GfVec6) -> Gf2 {
    let [x1, x2, x3, x4, x5, x6] = v.coords();
    x1 * x2 + x3 * x4 + x5 * x6
}

/// Polar form of q₀: `x1y2 + x2y1 + x3y4 + x4y3 + x5y6 + x6y5`.
pub fn bilinear(x: GfVec6, y: GfVec6) -> Gf2 {
    let (x, y) = (x.coords(), y.coords());
    (0..3).fold(Gf2::ZERO, |acc, k| acc + x[2 * k] * y[2 * k + 1] + x[2 * k + 1] * y[2 * k])
}

/// Which quadratic form on F⁶.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuadraticForm {
    /// `q₀`, whose quadric is the Klein quadric.
    Q0,
    /// `q(x) = q₀(x) + ⟨x|α(1)⟩₀`.
    Q,
    /// `q_M(x) = q₀(x) + ⟨x|α(M)⟩₀`.
    QM(SymMat3),
}

impl QuadraticForm {
    /// Evaluates on a vector, using the q₀-based definition.
    pub fn eval(self, v: GfVec6) -> Gf2 {
        match self {
            QuadraticForm::Q0 => q0_eval(v),
            QuadraticForm::Q => q0_eval(v) + bilinear(v, alpha(SymMat3::IDENTITY)),
            QuadraticForm::QM(m) => q0_eval(v) + bilinear(v, alpha(m)),
        }
    }

    /// Evaluates on `α(x)` through determinants: `det x`, `det(x+1)+1`, `det(x+M)+1`.
    pub fn eval_matrix(self, x: SymMat3) -> Gf2 {
        match self {
            QuadraticForm::Q0 => x.det(),
            QuadraticForm::Q => (x + SymMat3::IDENTITY).det() + Gf2::ONE,
            QuadraticForm::QM(m) => (x + m).det() + Gf2::ONE,
        }
    }

    /// The polar form `f(x+y) + f(x) + f(y)`.
    pub fn polar(self, x: GfVec6, y: GfVec6) -> Gf2 {
        self.eval(x + y) + self.eval(x) + self.eval(y)
    }

    /// The short name used in exports: `q0`, `q` or `qM:<label>`.
    pub fn tag(self, label: impl Fn(SymMat3) -> String) -> String {
        match self {
            QuadraticForm::Q0 => "q0".into(),
            QuadraticForm::Q => "q".into(),
            QuadraticForm::QM(m) => format!("qM:{}", label(m)),
        }
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag(|m| m.to_string()))
    }
}

/// A line of PG(5,2) as its three points in increasing order.
pub type PgLine = [GfVec6; 3];
/// A plane of PG(5,2) as its seven points in increasing order.
pub type PgPlanePoints = [GfVec6; 7];

/// The line through two distinct points.
pub fn line_through(x: GfVec6, y: GfVec6) -> PgLine {
    let mut l = [x, y, x + y];
    l.sort_unstable();
    l
}

/// The third point on the line joining `x` and `center`.
pub fn third_point(x: GfVec6, center: GfVec6) -> GfVec6 {
    x + center
}

/// All 651 lines of PG(5,2), sorted.
pub fn all_lines() -> &'static [PgLine] {
    static LINES: OnceLock<Vec<PgLine>> = OnceLock::new();
    LINES.get_or_init(|| {
        let set: BTreeSet<PgLine> = GfVec6::all_nonzero()
            .flat_map(|x| GfVec6::all_nonzero().filter(move |&y| y > x).map(move |y| line_through(x, y)))
            .collect();
        set.into_iter().collect()
    })
}

/// All 1395 planes of PG(5,2), sorted.
pub fn all_planes() -> &'static [PgPlanePoints] {
    static PLANES: OnceLock<Vec<PgPlanePoints>> = OnceLock::new();
    PLANES.get_or_init(|| {
        let mut set = BTreeSet::new();
        for l in all_lines() {
            for z in GfVec6::all_nonzero() {
                if l.contains(&z) {
                    continue;
                }
                let mut p = [l[0], l[1], l[2], z, z + l[0], z + l[1], z + l[2]];
                p.sort_unstable();
                set.insert(p);
            }
        }
        set.into_iter().collect()
    })
}

/// A quadric: the points of PG(5,2) where a form vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    pub form: QuadraticForm,
    /// Sorted.
    pub points: Vec<GfVec6>,
}

impl Quadric {
    pub fn contains(&self, p: GfVec6) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Lines of PG(5,2) lying entirely on the quadric.
    pub fn lines(&self) -> Vec<PgLine> {
        lines_within(&self.points)
    }
}

pub fn quadric_points(form: QuadraticForm) -> Quadric {
    let points = GfVec6::all_nonzero().filter(|&p| !form.eval(p).is_one()).collect();
    Quadric { form, points }
}

/// Lines of PG(5,2) all of whose points lie in `points` (which must be sorted).
pub fn lines_within(points: &[GfVec6]) -> Vec<PgLine> {
    let inside = |p: &GfVec6| points.binary_search(p).is_ok();
    all_lines().iter().filter(|l| l.iter().all(inside)).copied().collect()
}

/// Largest dimension (up to 2) of a projective subspace inside the point set,
/// found by searching all points, lines and planes; −1 for an empty set.
pub fn projective_index_of(points: &[GfVec6]) -> i32 {
    let inside = |p: &GfVec6| points.binary_search(p).is_ok();
    if all_planes().iter().any(|pl| pl.iter().all(inside)) {
        2
    } else if all_lines().iter().any(|l| l.iter().all(inside)) {
        1
    } else if points.is_empty() {
        -1
    } else {
        0
    }
}

pub fn projective_index(qd: &Quadric) -> i32 {
    projective_index_of(&qd.points)
}

/// Matrix translation `X ↦ X + M`; undefined at the center `X = M`.
pub fn pi_translate(x: SymMat3, center: SymMat3) -> Result<SymMat3> {
    if x == center {
        return Err(GqError::UndefinedAtCenter(center.to_string()));
    }
    Ok(x + center)
}

/// `π: X ↦ X + 1`.
pub fn pi(x: SymMat3) -> Result<SymMat3> {
    pi_translate(x, SymMat3::IDENTITY)
}

/// `p⊥`: the 31 points orthogonal to `p` under ⟨·|·⟩₀.
pub fn perp_hyperplane(p: GfVec6) -> Result<Vec<GfVec6>> {
    if p.is_zero() {
        return Err(GqError::Parse("the zero vector is not a point".into()));
    }
    Ok(GfVec6::all_nonzero().filter(|&x| !bilinear(x, p).is_one()).collect())
}
