//! Incidence structures, the generalized quadrangle axioms, the models of
//! GQ(2,4) built here, and isomorphisms between them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::atlas::{classify, Atlas, MatrixClass};
use crate::error::{GqError, Result};
use crate::gf2::{GfVec6, SymMat3};
use crate::projective::{alpha, bilinear, perp_hyperplane, quadric_points, Quadric, QuadraticForm};
use crate::report::CheckReport;

/// A finite point set with labelled points and a set of lines, each line a set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub name: String,
    pub points: Vec<String>,
    /// Each line sorted, lines sorted and deduplicated.
    pub lines: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl IncidenceStructure {
    pub fn new(name: impl Into<String>, points: Vec<String>, lines: Vec<Vec<usize>>) -> Self {
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        lines.sort();
        lines.dedup();
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        IncidenceStructure { name: name.into(), points, lines, index }
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Lines through each point, by line index.
    pub fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.points.len()];
        for (li, l) in self.lines.iter().enumerate() {
            for &p in l {
                out[p].push(li);
            }
        }
        out
    }

    /// `joins[p][q]` is the number of lines containing both p and q.
    pub fn join_counts(&self) -> Vec<Vec<u32>> {
        let n = self.points.len();
        let mut out = vec![vec![0u32; n]; n];
        for l in &self.lines {
            for (i, &p) in l.iter().enumerate() {
                for &q in &l[i + 1..] {
                    out[p][q] += 1;
                    out[q][p] += 1;
                }
            }
        }
        out
    }

    /// Distinct points sharing a line.
    pub fn collinearity(&self) -> Vec<Vec<bool>> {
        self.join_counts().into_iter().map(|r| r.into_iter().map(|c| c > 0).collect()).collect()
    }

    /// Number of other points collinear with each point.
    pub fn collinearity_degrees(&self) -> Vec<usize> {
        self.collinearity().iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    pub fn contains_line(&self, pts: &[usize]) -> bool {
        let mut l = pts.to_vec();
        l.sort_unstable();
        self.lines.binary_search(&l).is_ok()
    }

    /// Labels of a line.
    pub fn line_labels(&self, line: &[usize]) -> Vec<&str> {
        line.iter().map(|&p| self.points[p].as_str()).collect()
    }

    /// The substructure on `keep` with every line lying entirely inside it.
    pub fn restrict(&self, name: impl Into<String>, keep: &[usize]) -> IncidenceStructure {
        let mut new_index = HashMap::new();
        for (ni, &old) in keep.iter().enumerate() {
            new_index.insert(old, ni);
        }
        let points = keep.iter().map(|&p| self.points[p].clone()).collect();
        let lines = self
            .lines
            .iter()
            .filter(|l| l.iter().all(|p| new_index.contains_key(p)))
            .map(|l| l.iter().map(|p| new_index[p]).collect())
            .collect();
        IncidenceStructure::new(name, points, lines)
    }
}

/// Order (s,t) of a generalized quadrangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GqOrder {
    pub s: usize,
    pub t: usize,
}

impl fmt::Display for GqOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.t)
    }
}

/// The first axiom found to fail, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("empty point or line set")]
    Empty,
    #[error("line {line:?} has {size} points, expected {expected}")]
    LineSize { line: Vec<String>, size: usize, expected: usize },
    #[error("point {point} lies on {degree} lines, expected {expected}")]
    PointDegree { point: String, degree: usize, expected: usize },
    #[error("points {0} and {1} are joined by more than one line")]
    MultipleJoins(String, String),
    #[error("point {point} off line {line:?} is collinear with {count} points of it")]
    Perpendicular { point: String, line: Vec<String>, count: usize },
}

/// Checks line size, point degree, unique joins and the quadrangle axiom.
pub fn verify_gq_axioms(inc: &IncidenceStructure) -> std::result::Result<GqOrder, AxiomViolation> {
    if inc.points.is_empty() || inc.lines.is_empty() {
        return Err(AxiomViolation::Empty);
    }
    let size = inc.lines[0].len();
    if let Some(l) = inc.lines.iter().find(|l| l.len() != size || l.len() < 2) {
        return Err(AxiomViolation::LineSize { line: labels(inc, l), size: l.len(), expected: size.max(2) });
    }
    let through = inc.lines_through();
    let degree = through[0].len();
    if let Some((p, ls)) = through.iter().enumerate().find(|(_, ls)| ls.len() != degree || ls.is_empty()) {
        return Err(AxiomViolation::PointDegree { point: inc.points[p].clone(), degree: ls.len(), expected: degree.max(1) });
    }
    let joins = inc.join_counts();
    for (p, row) in joins.iter().enumerate() {
        if let Some(q) = row.iter().position(|&c| c > 1) {
            return Err(AxiomViolation::MultipleJoins(inc.points[p].clone(), inc.points[q].clone()));
        }
    }
    for l in &inc.lines {
        for (p, row) in joins.iter().enumerate() {
            if l.contains(&p) {
                continue;
            }
            let count = l.iter().filter(|&&q| row[q] > 0).count();
            if count != 1 {
                return Err(AxiomViolation::Perpendicular { point: inc.points[p].clone(), line: labels(inc, l), count });
            }
        }
    }
    Ok(GqOrder { s: size - 1, t: degree - 1 })
}

fn labels(inc: &IncidenceStructure, l: &[usize]) -> Vec<String> {
    l.iter().map(|&p| inc.points[p].clone()).collect()
}

/// Lines of a quadric, as point sets of PG(5,2).
pub fn lines_in_quadric(qd: &Quadric) -> Vec<[GfVec6; 3]> {
    qd.lines()
}

/// An incidence structure on a sorted point set of PG(5,2) with all lines of PG(5,2) inside it.
pub fn structure_on_points(name: &str, points: &[GfVec6]) -> IncidenceStructure {
    let labels: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    let pos: HashMap<GfVec6, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let lines = crate::projective::lines_within(points).into_iter().map(|l| l.iter().map(|p| pos[p]).collect()).collect();
    IncidenceStructure::new(name, labels, lines)
}

/// GQ(Q): the points of the quadric of `q` and the lines on it.
pub fn build_gq_q() -> IncidenceStructure {
    structure_on_points("GQ(Q)", &quadric_points(QuadraticForm::Q).points)
}

/// GQ(S): the 27 matrices of S, lines the π-preimages of the lines of GQ(Q).
pub fn build_gq_s() -> IncidenceStructure {
    let atlas = Atlas::global();
    let s = atlas.s();
    let qd = quadric_points(QuadraticForm::Q);
    let preimage: HashMap<GfVec6, usize> = s.iter().enumerate().map(|(i, &x)| (alpha(x + SymMat3::IDENTITY), i)).collect();
    let lines = qd.lines().into_iter().map(|l| l.iter().map(|p| preimage[p]).collect()).collect();
    IncidenceStructure::new("GQ(S)", s.iter().map(|&x| atlas.name(x)).collect(), lines)
}

fn require_in_s(x: SymMat3) -> Result<()> {
    match classify(x) {
        Ok(MatrixClass::D | MatrixClass::U | MatrixClass::V) => Ok(()),
        _ => Err(GqError::NotInS(x.to_string(), x.det().as_u8())),
    }
}

/// `X ∼ Y ⟺ ⟨α(X+1)|α(Y+1)⟩₀ = 0`. A point counts as collinear with itself.
pub fn collinear_matrices(x: SymMat3, y: SymMat3) -> Result<bool> {
    require_in_s(x)?;
    require_in_s(y)?;
    let one = SymMat3::IDENTITY;
    Ok(!bilinear(alpha(x + one), alpha(y + one)).is_one())
}

/// The determinant-only prediction: within U∪V or within D collinear iff
/// `det(X+Y) = 0`; across the two iff `det(X+Y) = 1`.
pub fn collinear_by_det_cases(x: SymMat3, y: SymMat3) -> Result<bool> {
    let (cx, cy) = (classify(x)?, classify(y)?);
    require_in_s(x)?;
    require_in_s(y)?;
    let is_d = |c| c == MatrixClass::D;
    let singular = !(x + y).is_invertible();
    Ok(if is_d(cx) == is_d(cy) { singular } else { !singular })
}

/// The doily plus double-six: 2-subsets of {1..6}, then 1..6, then 1'..6'.
pub fn build_doily_model() -> IncidenceStructure {
    let pairs: Vec<(usize, usize)> = (1..=6).flat_map(|i| (i + 1..=6).map(move |j| (i, j))).collect();
    let mut points: Vec<String> = pairs.iter().map(|(i, j)| pair_label(*i, *j)).collect();
    points.extend((1..=6).map(|i| i.to_string()));
    points.extend((1..=6).map(|i| format!("{i}'")));
    let pair_idx = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let mut lines = Vec::new();
    for (a, &pa) in pairs.iter().enumerate() {
        for (b, &pb) in pairs.iter().enumerate().skip(a + 1) {
            for (c, &pc) in pairs.iter().enumerate().skip(b + 1) {
                let mut all: Vec<usize> = vec![pa.0, pa.1, pb.0, pb.1, pc.0, pc.1];
                all.sort_unstable();
                all.dedup();
                if all.len() == 6 {
                    lines.push(vec![a, b, c]);
                }
            }
        }
    }
    for i in 1..=6 {
        for j in 1..=6 {
            if i != j {
                lines.push(vec![15 + i - 1, pair_idx(i, j), 21 + j - 1]);
            }
        }
    }
    IncidenceStructure::new("doily+double-six", points, lines)
}

pub fn pair_label(i: usize, j: usize) -> String {
    format!("{{{},{}}}", i.min(j), i.max(j))
}

/// The 15-point GQ(2,2) inside the doily model.
pub fn doily_substructure() -> IncidenceStructure {
    let m = build_doily_model();
    let keep: Vec<usize> = (0..15).collect();
    m.restrict("doily", &keep)
}

/// The explicit isomorphism GQ(S) → doily model, in atlas order.
pub const ISO_TABLE: [(&str, &str); 27] = [
    ("D1", "{3,5}"),
    ("D2", "{1,4}"),
    ("D3", "{2,6}"),
    ("D4", "{1,2}"),
    ("D5", "{4,5}"),
    ("D6", "{1,6}"),
    ("D7", "{3,4}"),
    ("D8", "{3,6}"),
    ("D9", "{2,5}"),
    ("D10", "{4,6}"),
    ("D11", "{1,3}"),
    ("D12", "{1,5}"),
    ("D13", "{2,4}"),
    ("D14", "{2,3}"),
    ("D15", "{5,6}"),
    ("U1", "1"),
    ("U2", "2"),
    ("U3", "3"),
    ("U4", "4"),
    ("U5", "5"),
    ("U6", "6"),
    ("V1", "1'"),
    ("V2", "2'"),
    ("V3", "3'"),
    ("V4", "4'"),
    ("V5", "5'"),
    ("V6", "6'"),
];

/// A point map between two incidence structures: `map[i]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IsoFailure {
    #[error("point counts differ ({0} vs {1})")]
    PointCount(usize, usize),
    #[error("line counts differ ({0} vs {1})")]
    LineCount(usize, usize),
    #[error("map is not a bijection on points")]
    NotBijective,
    #[error("line {line:?} maps to non-line {image:?}")]
    LineNotMapped { line: Vec<String>, image: Vec<String> },
}

impl Isomorphism {
    pub fn identity(n: usize) -> Self {
        Isomorphism { map: (0..n).collect() }
    }

    /// Builds the map from `(label in a, label in b)` pairs; every point of `a` must appear.
    pub fn from_label_pairs(a: &IncidenceStructure, b: &IncidenceStructure, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map = vec![usize::MAX; a.point_count()];
        for &(x, y) in pairs {
            let i = a.index_of(x).ok_or_else(|| GqError::UnknownLabel(x.to_string()))?;
            let j = b.index_of(y).ok_or_else(|| GqError::UnknownLabel(y.to_string()))?;
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(GqError::UnknownLabel(format!("no image for {}", a.points[i])));
        }
        Ok(Isomorphism { map })
    }

    /// `(label in a, label in b)` pairs in the point order of `a`.
    pub fn label_pairs<'a>(&self, a: &'a IncidenceStructure, b: &'a IncidenceStructure) -> Vec<(&'a str, &'a str)> {
        self.map.iter().enumerate().map(|(i, &j)| (a.points[i].as_str(), b.points[j].as_str())).collect()
    }
}

/// Checks that `f` is a bijection on points sending every line of `a` onto a line of `b`, with equal line counts.
pub fn check_isomorphism(f: &Isomorphism, a: &IncidenceStructure, b: &IncidenceStructure) -> std::result::Result<(), IsoFailure> {
    if a.point_count() != b.point_count() || f.map.len() != a.point_count() {
        return Err(IsoFailure::PointCount(a.point_count(), b.point_count()));
    }
    if a.line_count() != b.line_count() {
        return Err(IsoFailure::LineCount(a.line_count(), b.line_count()));
    }
    let distinct: HashSet<usize> = f.map.iter().copied().filter(|&j| j < b.point_count()).collect();
    if distinct.len() != a.point_count() {
        return Err(IsoFailure::NotBijective);
    }
    for l in &a.lines {
        let image: Vec<usize> = l.iter().map(|&p| f.map[p]).collect();
        if !b.contains_line(&image) {
            let mut sorted = image.clone();
            sorted.sort_unstable();
            return Err(IsoFailure::LineNotMapped {
                line: labels(a, l),
                image: sorted.iter().map(|&p| b.points[p].clone()).collect(),
            });
        }
    }
    Ok(())
}

pub fn verify_isomorphism(id: &str, f: &Isomorphism, a: &IncidenceStructure, b: &IncidenceStructure) -> CheckReport {
    let desc = format!("point map {} -> {} is an isomorphism", a.name, b.name);
    match check_isomorphism(f, a, b) {
        Ok(()) => CheckReport::with_pass(id, &desc, "isomorphism", "isomorphism", true),
        Err(e) => CheckReport::with_pass(id, &desc, "isomorphism", e.to_string(), false),
    }
}

/// Backtracking search for an isomorphism `a → b`.
///
/// Points of `a` are visited so that each new point has as many already
/// placed collinear neighbours as possible; images are tried in
/// (degree, label) order. Pairwise collinearity and full lines are checked
/// as soon as all their points are placed. Returns the first map found.
pub fn find_isomorphism(a: &IncidenceStructure, b: &IncidenceStructure) -> Option<Isomorphism> {
    if a.point_count() != b.point_count() || a.line_count() != b.line_count() {
        return None;
    }
    let (ta, tb) = (a.lines_through(), b.lines_through());
    let deg = |t: &Vec<Vec<usize>>| {
        let mut d: Vec<usize> = t.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    };
    let sizes = |s: &IncidenceStructure| {
        let mut d: Vec<usize> = s.lines.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    };
    if deg(&ta) != deg(&tb) || sizes(a) != sizes(b) {
        return None;
    }
    let n = a.point_count();
    if n == 0 {
        return Some(Isomorphism { map: Vec::new() });
    }
    let (ca, cb) = (a.collinearity(), b.collinearity());

    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| (order.iter().filter(|&&q| ca[p][q]).count(), std::cmp::Reverse(p)))
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by(|&x, &y| tb[x].len().cmp(&tb[y].len()).then_with(|| b.points[x].cmp(&b.points[y])));

    let mut search = Search { a, b, ta: &ta, tb: &tb, ca: &ca, cb: &cb, order: &order, candidates: &candidates, map: vec![usize::MAX; n], used: vec![false; n] };
    if search.extend(0) {
        let iso = Isomorphism { map: search.map };
        check_isomorphism(&iso, a, b).ok().map(|_| iso)
    } else {
        None
    }
}

struct Search<'a> {
    a: &'a IncidenceStructure,
    b: &'a IncidenceStructure,
    ta: &'a [Vec<usize>],
    tb: &'a [Vec<usize>],
    ca: &'a [Vec<bool>],
    cb: &'a [Vec<bool>],
    order: &'a [usize],
    candidates: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for &c in self.candidates {
            if self.used[c] || self.tb[c].len() != self.ta[p].len() || !self.consistent(p, c, depth) {
                continue;
            }
            self.map[p] = c;
            self.used[c] = true;
            if self.lines_ok(p) && self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[p] = usize::MAX;
        }
        false
    }

    fn consistent(&self, p: usize, c: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&q| self.ca[p][q] == self.cb[c][self.map[q]])
    }

    fn lines_ok(&self, p: usize) -> bool {
        self.ta[p].iter().all(|&li| {
            let l = &self.a.lines[li];
            if l.iter().any(|&q| self.map[q] == usize::MAX) {
                return true;
            }
            let image: Vec<usize> = l.iter().map(|&q| self.map[q]).collect();
            self.b.contains_line(&image)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SectionKind {
    Tangent,
    NonDegenerate,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub pole: GfVec6,
    pub kind: SectionKind,
    pub points: usize,
    pub lines: usize,
    /// Order when the section is a generalized quadrangle.
    pub order: Option<GqOrder>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionSurvey {
    pub sections: Vec<Section>,
    pub tangent: usize,
    pub non_degenerate: usize,
}

/// The section `Q ∩ x⊥` for a point `x`.
pub fn hyperplane_section(x: GfVec6) -> IncidenceStructure {
    let qd = quadric_points(QuadraticForm::Q);
    let perp = perp_hyperplane(x).expect("nonzero pole");
    let pts: Vec<GfVec6> = perp.into_iter().filter(|&p| qd.contains(p)).collect();
    structure_on_points(&format!("Q ∩ {x}⊥"), &pts)
}

/// Classifies all 63 hyperplane sections of Q: tangent when the pole lies on Q.
pub fn hyperplane_section_survey() -> SectionSurvey {
    let qd = quadric_points(QuadraticForm::Q);
    let sections: Vec<Section> = GfVec6::all_nonzero()
        .map(|x| {
            let inc = hyperplane_section(x);
            let kind = if qd.contains(x) { SectionKind::Tangent } else { SectionKind::NonDegenerate };
            Section { pole: x, kind, points: inc.point_count(), lines: inc.line_count(), order: verify_gq_axioms(&inc).ok() }
        })
        .collect();
    let tangent = sections.iter().filter(|s| s.kind == SectionKind::Tangent).count();
    SectionSurvey { non_degenerate: sections.len() - tangent, tangent, sections }
}

/// Sorted labels of points collinear with `label` in `inc`.
pub fn collinear_partners(inc: &IncidenceStructure, label: &str) -> Option<Vec<String>> {
    let i = inc.index_of(label)?;
    let coll = inc.collinearity();
    let set: BTreeSet<usize> = (0..inc.point_count()).filter(|&j| coll[i][j]).collect();
    Some(set.into_iter().map(|j| inc.points[j].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> IncidenceStructure {
        let points = (0..9).map(|i| format!("p{i}")).collect();
        let mut lines = Vec::new();
        for r in 0..3 {
            lines.push(vec![3 * r, 3 * r + 1, 3 * r + 2]);
            lines.push(vec![r, r + 3, r + 6]);
        }
        IncidenceStructure::new("grid", points, lines)
    }

    #[test]
    fn grid_is_gq21() {
        assert_eq!(verify_gq_axioms(&grid()), Ok(GqOrder { s: 2, t: 1 }));
    }

    #[test]
    fn axiom_failures_have_witnesses() {
        let g = grid();
        let mut lines = g.lines.clone();
        lines.pop();
        let broken = IncidenceStructure::new("broken", g.points.clone(), lines);
        assert!(matches!(verify_gq_axioms(&broken), Err(AxiomViolation::PointDegree { .. })));
        let empty = IncidenceStructure::new("e", vec![], vec![]);
        assert_eq!(verify_gq_axioms(&empty), Err(AxiomViolation::Empty));
        // A triangle: uniform, but a point off a line sees two of its points.
        let tri = IncidenceStructure::new("tri", vec!["a".into(), "b".into(), "c".into()], vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(matches!(verify_gq_axioms(&tri), Err(AxiomViolation::Perpendicular { count: 2, .. })));
    }

    #[test]
    fn quadric_models() {
        let q = build_gq_q();
        assert_eq!((q.point_count(), q.line_count()), (27, 45));
        assert_eq!(verify_gq_axioms(&q), Ok(GqOrder { s: 2, t: 4 }));
        assert_eq!(lines_in_quadric(&quadric_points(QuadraticForm::Q0)).len(), 105);
    }

    #[test]
    fn gq_s_model() {
        let s = build_gq_s();
        assert_eq!((s.point_count(), s.line_count()), (27, 45));
        assert_eq!(verify_gq_axioms(&s), Ok(GqOrder { s: 2, t: 4 }));
        assert!(s.collinearity_degrees().iter().all(|&d| d == 10));
        // the line through U1 and V2
        let (u1, v2) = (s.index_of("U1").unwrap(), s.index_of("V2").unwrap());
        let line = s.lines.iter().find(|l| l.contains(&u1) && l.contains(&v2)).expect("U1 ~ V2");
        let third = line.iter().copied().find(|&p| p != u1 && p != v2).unwrap();
        let atlas = Atlas::global();
        let x = atlas.by_label(&s.points[third]).unwrap();
        let sum = alpha(atlas.u[0] + SymMat3::IDENTITY) + alpha(atlas.v[1] + SymMat3::IDENTITY);
        assert_eq!(alpha(x + SymMat3::IDENTITY), sum);
    }

    #[test]
    fn collinearity_examples() {
        let a = Atlas::global();
        let (d1, u1, u3, v2) = (a.d[0], a.u[0], a.u[2], a.v[1]);
        assert_eq!(collinear_matrices(u1, v2), Ok(true));
        assert!(!(u1 + v2).is_invertible());
        assert_eq!(collinear_matrices(d1, u3), Ok(true));
        assert!((d1 + u3).is_invertible());
        assert_eq!(collinear_matrices(d1, u1), Ok(false));
        assert!(!(d1 + u1).is_invertible());
        assert!(matches!(collinear_matrices(SymMat3::IDENTITY, d1), Err(GqError::NotInS(..))));
        assert!(matches!(collinear_matrices(d1, SymMat3::ZERO), Err(GqError::NotInS(..))));
    }

    #[test]
    fn doily_examples() {
        let m = build_doily_model();
        assert_eq!((m.point_count(), m.line_count()), (27, 45));
        let idx = |l: &str| m.index_of(l).unwrap();
        assert!(m.contains_line(&[idx("{1,2}"), idx("{3,4}"), idx("{5,6}")]));
        assert!(m.contains_line(&[idx("1"), idx("{1,2}"), idx("2'")]));
        assert!(!m.contains_line(&[idx("1"), idx("{2,3}"), idx("4'")]));
        assert_eq!(verify_gq_axioms(&m), Ok(GqOrder { s: 2, t: 4 }));
        let d = doily_substructure();
        assert_eq!((d.point_count(), d.line_count()), (15, 15));
        assert_eq!(verify_gq_axioms(&d), Ok(GqOrder { s: 2, t: 2 }));
    }

    #[test]
    fn table_isomorphism() {
        let (s, m) = (build_gq_s(), build_doily_model());
        let f = Isomorphism::from_label_pairs(&s, &m, &ISO_TABLE).unwrap();
        assert!(verify_isomorphism("t", &f, &s, &m).pass);
        assert!(verify_isomorphism("t", &Isomorphism::identity(27), &s, &s).pass);
        let mut swapped = ISO_TABLE;
        swapped[0].1 = "{1,4}";
        swapped[1].1 = "{3,5}";
        let g = Isomorphism::from_label_pairs(&s, &m, &swapped).unwrap();
        assert!(matches!(check_isomorphism(&g, &s, &m), Err(IsoFailure::LineNotMapped { .. })));
        let r = verify_isomorphism("t", &g, &s, &m);
        assert!(!r.pass && r.actual.contains("maps to non-line"));
    }

    #[test]
    fn searched_isomorphisms() {
        let (s, q, m) = (build_gq_s(), build_gq_q(), build_doily_model());
        let f = find_isomorphism(&s, &m).expect("GQ(S) ≅ doily model");
        assert!(check_isomorphism(&f, &s, &m).is_ok());
        assert!(find_isomorphism(&s, &q).is_some());
        assert!(find_isomorphism(&doily_substructure(), &m).is_none());
        // determinism
        assert_eq!(find_isomorphism(&s, &m), Some(f));
    }

    #[test]
    fn survey() {
        let sv = hyperplane_section_survey();
        assert_eq!((sv.tangent, sv.non_degenerate), (27, 36));
        for s in &sv.sections {
            match s.kind {
                SectionKind::NonDegenerate => {
                    assert_eq!((s.points, s.lines, s.order), (15, 15, Some(GqOrder { s: 2, t: 2 })));
                }
                SectionKind::Tangent => assert_eq!(s.order, None),
            }
        }
    }
}
