//! The verification registry.
//!
//! Check ids follow `sec<NN>.<short-name>` and are stable; [`REGISTRY`] fixes
//! the order in which reports are emitted.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::atlas::{classify, enumerate_invertible_symmetric, fano_action, jordan_closure_check, multiplicative_closure, Atlas, MatrixClass};
use crate::error::{GqError, Result};
use crate::gf2::{GfVec6, Mat3, SymMat3};
use crate::planes::{
    build_gq_planes, build_pi_plane_model, collineation_action, group_orbits, intersection_dim, intersection_dim_by_rank, intersection_profile,
    pi_plane_model_check, plane_of_sym, plane_one_one, plane_one_zero, plane_zero_one, plucker_check, rho, skew_partner, spread_check,
    symplectic_isotropy_check, Group, Profile,
};
use crate::projective::{
    all_lines, alpha, alpha_inverse, bilinear, lines_within, perp_hyperplane, pi, pi_translate, projective_index, projective_index_of, q0_eval, quadric_points,
    QuadraticForm,
};
use crate::quadrangle::{
    build_doily_model, build_gq_q, build_gq_s, collinear_by_det_cases, collinear_matrices, doily_substructure, find_isomorphism, hyperplane_section,
    hyperplane_section_survey, structure_on_points, verify_gq_axioms, verify_isomorphism, IncidenceStructure, Isomorphism, SectionKind, ISO_TABLE,
};
use crate::report::{CheckReport, SuiteResult};

pub struct CheckDef {
    pub id: &'static str,
    pub run: fn(&str) -> CheckReport,
}

macro_rules! registry {
    ($($id:literal => $f:expr),* $(,)?) => {
        &[$(CheckDef { id: $id, run: $f }),*]
    };
}

pub static REGISTRY: &[CheckDef] = registry![
    "sec2.gq-q-axioms" => gq_q_axioms,
    "sec2.doily-model" => doily_model,
    "sec2.doily-gq22" => doily_gq22,
    "sec2.hyperplane-survey" => hyperplane_survey,
    "sec3.enumeration" => enumeration,
    "sec3.class-sizes" => class_sizes,
    "sec3.involutions" => involutions,
    "sec3.eigenspaces" => eigenspaces,
    "sec3.gf8-subfields" => gf8_subfields,
    "sec3.fano-action" => fano,
    "sec3.singer-cycles" => singer_cycles,
    "sec3.jordan-closure" => jordan_closure_check,
    "sec4.alpha-bijection" => alpha_bijection,
    "sec4.eq2-det-identity" => eq2_det_identity,
    "sec4.eq3-bilinear-identity" => eq3_bilinear_identity,
    "sec4.bilinear-coincide" => bilinear_coincide,
    "sec4.q0-complement" => q0_complement,
    "sec4.quadric-counts" => quadric_counts,
    "sec4.projective-index" => projective_indices,
    "sec4.qm-family" => qm_family,
    "sec4.gq-s-axioms" => gq_s_axioms,
    "sec4.collinear-criterion" => collinear_criterion,
    "sec4.pi-classes" => pi_classes,
    "sec4.quadric-intersections" => quadric_intersections,
    "sec4.perp-one" => perp_one,
    "sec4.tangent-lines" => tangent_lines,
    "sec4.gq-d-subquadrangle" => gq_d_subquadrangle,
    "sec5.rank-intersection" => rank_intersection,
    "sec5.skew-distinguished" => skew_distinguished,
    "sec5.spreads" => spread_check,
    "sec5.meet-one-one" => meet_one_one,
    "sec5.plucker" => plucker_check,
    "sec5.symplectic" => symplectic_isotropy_check,
    "sec5.rho-action" => rho_action,
    "sec5.orbits-G" => orbits_g,
    "sec5.orbits-H" => orbits_h,
    "sec5.collineation-action" => collineation_preserves,
    "sec5.intersection-stats-U" => stats_u,
    "sec5.intersection-stats-V" => stats_v,
    "sec5.skew-partner" => skew_partners,
    "sec5.coll-planes" => coll_planes,
    "sec5.degree-10" => degree_ten,
    "sec5.iso-table" => iso_table,
    "sec5.iso-corrupted" => iso_corrupted,
    "sec5.iso-search" => iso_search,
    "sec5.pi-plane-model" => pi_plane_model_check,
];

/// Runs every registered check whose id starts with `filter` (all when `None`).
/// Checks run concurrently; reports come back in registry order.
pub fn run_suite(filter: Option<&str>) -> Result<SuiteResult> {
    let selected: Vec<&CheckDef> = REGISTRY.iter().filter(|c| filter.is_none_or(|f| c.id.starts_with(f))).collect();
    if selected.is_empty() {
        return Err(GqError::UnknownCheckId(filter.unwrap_or_default().to_string()));
    }
    let reports = selected
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let mut r = (c.run)(c.id);
            r.elapsed = start.elapsed();
            r
        })
        .collect();
    Ok(SuiteResult { reports })
}

/// Fixed-width table, one line per check; failures add their expected and actual values.
pub fn render_text(result: &SuiteResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("{:<30} {:<6} {:>10}  {}\n", "CHECK", "RESULT", "TIME(us)", "DESCRIPTION"));
    for r in &result.reports {
        out.push_str(&format!(
            "{:<30} {:<6} {:>10}  {}\n",
            r.check_id,
            if r.pass { "PASS" } else { "FAIL" },
            r.elapsed.as_micros(),
            r.description
        ));
        if !r.pass {
            out.push_str(&format!("{:<30} expected: {}\n{:<30} actual:   {}\n", "", r.expected, "", r.actual));
        }
    }
    let failed = result.failures().count();
    out.push_str(&format!("{} checks, {} passed, {} failed\n", result.reports.len(), result.reports.len() - failed, failed));
    out
}

pub fn render_json(result: &SuiteResult) -> String {
    let v = json!({ "schema": 1, "pass": result.pass(), "checks": result.reports });
    serde_json::to_string_pretty(&v).expect("reports serialize")
}

fn atlas() -> &'static Atlas {
    Atlas::global()
}

fn shape(inc: &IncidenceStructure) -> String {
    let order = verify_gq_axioms(inc).map_or_else(|e| format!("violation: {e}"), |o| o.to_string());
    format!("{} points, {} lines, order {}", inc.point_count(), inc.line_count(), order)
}

fn first<T>(mut it: impl Iterator<Item = T>, f: impl Fn(T) -> String) -> Option<String> {
    it.next().map(f)
}

fn set_of(xs: impl IntoIterator<Item = SymMat3>) -> BTreeSet<SymMat3> {
    xs.into_iter().collect()
}

fn names(xs: &[SymMat3]) -> String {
    xs.iter().map(|&x| atlas().name(x)).collect::<Vec<_>>().join(",")
}

fn gq_q_axioms(id: &str) -> CheckReport {
    CheckReport::compare(id, "GQ(Q): quadric of q with its lines is a GQ(2,4)", "27 points, 45 lines, order (2,4)", shape(&build_gq_q()))
}

fn doily_model(id: &str) -> CheckReport {
    CheckReport::compare(id, "doily plus double-six is a GQ(2,4)", "27 points, 45 lines, order (2,4)", shape(&build_doily_model()))
}

fn doily_gq22(id: &str) -> CheckReport {
    CheckReport::compare(id, "the 15 two-subsets with perfect matchings form a GQ(2,2)", "15 points, 15 lines, order (2,2)", shape(&doily_substructure()))
}

fn hyperplane_survey(id: &str) -> CheckReport {
    let sv = hyperplane_section_survey();
    let nd_ok = sv.sections.iter().filter(|s| s.kind == SectionKind::NonDegenerate).all(|s| s.points == 15 && s.lines == 15 && s.order.map(|o| (o.s, o.t)) == Some((2, 2)));
    let tangent_ok = sv.sections.iter().filter(|s| s.kind == SectionKind::Tangent).all(|s| s.order.is_none());
    CheckReport::compare(
        id,
        "hyperplane sections of Q: 36 copies of GQ(2,2), 27 tangent cones",
        "36 non-degenerate GQ(2,2), 27 tangent",
        format!(
            "{} non-degenerate{}, {} tangent{}",
            sv.non_degenerate,
            if nd_ok { " GQ(2,2)" } else { " (not all GQ(2,2))" },
            sv.tangent,
            if tangent_ok { "" } else { " (some tangent section is a GQ)" }
        ),
    )
}

fn enumeration(id: &str) -> CheckReport {
    CheckReport::compare(id, "invertible symmetric 3x3 binary matrices", 28, enumerate_invertible_symmetric().len())
}

fn class_sizes(id: &str) -> CheckReport {
    let mut counts = BTreeMap::new();
    for x in enumerate_invertible_symmetric() {
        *counts.entry(classify(x).unwrap()).or_insert(0usize) += 1;
    }
    let c = |k| counts.get(&k).copied().unwrap_or(0);
    let union = set_of(atlas().invertible()) == set_of(enumerate_invertible_symmetric());
    CheckReport::compare(
        id,
        "class sizes 1/15/6/6 and {1} u D u U u V = J*",
        "1/15/6/6 cover J*",
        format!("{}/{}/{}/{} {}", c(MatrixClass::Identity), c(MatrixClass::D), c(MatrixClass::U), c(MatrixClass::V), if union { "cover J*" } else { "miss J*" }),
    )
}

fn involutions(id: &str) -> CheckReport {
    let invs: Vec<SymMat3> = atlas().s().into_iter().filter(|x| x.to_mat3() * x.to_mat3() == Mat3::IDENTITY).collect();
    CheckReport::compare(id, "the involutions in S are exactly D1, D2, D3", "D1,D2,D3", names(&invs))
}

fn eigenspaces(id: &str) -> CheckReport {
    let a = atlas();
    let w = first(
        a.s().into_iter().filter(|&x| {
            let dim = x.to_mat3().eigenspace_one_dim();
            let expected = match a.label_of(x).unwrap() {
                l if l.class == MatrixClass::D && l.index <= 3 => 2,
                l if l.class == MatrixClass::D => 1,
                _ => 0,
            };
            dim != expected || (classify(x) == Ok(MatrixClass::D)) != (dim >= 1)
        }),
        |x| format!("{} has eigenspace dimension {}", a.name(x), x.to_mat3().eigenspace_one_dim()),
    );
    CheckReport::no_counterexample(id, "eigenspace dimensions: 2 for D1-D3, 1 for D4-D15, 0 for U u V", w)
}

fn gf8_subfields(id: &str) -> CheckReport {
    let a = atlas();
    let mut problems = Vec::new();
    for (class, members) in [(MatrixClass::U, &a.u), (MatrixClass::V, &a.v)] {
        let mut expected = set_of(members.iter().copied());
        expected.insert(SymMat3::IDENTITY);
        for &x in members.iter() {
            let closure = multiplicative_closure(x).unwrap();
            if closure != expected || x.to_mat3().multiplicative_order() != Some(7) {
                problems.push(format!("closure of {} is not {{1}} u {class}", a.name(x)));
            }
        }
        let mut field = expected.clone();
        field.insert(SymMat3::ZERO);
        let closed = field.iter().all(|&x| field.iter().all(|&y| field.contains(&(x + y)) && SymMat3::from_mat3(x.to_mat3() * y.to_mat3()).is_some_and(|p| field.contains(&p))));
        if !closed {
            problems.push(format!("{{0,1}} u {class} not closed"));
        }
    }
    let inter: BTreeSet<_> = multiplicative_closure(a.u[0]).unwrap().intersection(&multiplicative_closure(a.v[0]).unwrap()).copied().collect();
    if inter != set_of([SymMat3::IDENTITY]) {
        problems.push("closures meet outside {1}".into());
    }
    CheckReport::no_counterexample(id, "U u {0,1} and V u {0,1} are fields of order 8; U, V each one cyclic class", problems.into_iter().next())
}

fn fano(id: &str) -> CheckReport {
    let a = atlas();
    let w = first(
        a.s().into_iter().filter(|&x| {
            let act = fano_action(x).unwrap();
            let eig: Vec<u8> = x.to_mat3().eigenspace_one().into_iter().filter(|&v| v != 0).collect();
            let l = a.label_of(x).unwrap();
            let shape_ok = match l.class {
                MatrixClass::D if l.index <= 3 => act.fixes_a_line(),
                MatrixClass::D => act.fixed.len() == 1,
                _ => act.fixed.is_empty(),
            };
            act.fixed != eig || !shape_ok
        }),
        |x| format!("{} fixes {:?}", a.name(x), fano_action(x).unwrap().fixed),
    );
    CheckReport::no_counterexample(id, "Fano collineations: D1-D3 axial, D4-D15 one fixed point, U u V fixed-point free", w)
}

fn singer_cycles(id: &str) -> CheckReport {
    let a = atlas();
    let mut problems = Vec::new();
    for x in a.u.iter().chain(&a.v) {
        if fano_action(*x).unwrap().cycle_type() != vec![7] {
            problems.push(format!("{} is not a 7-cycle", a.name(*x)));
        }
    }
    for g in [Group::G, Group::H] {
        let acts: Vec<_> = g.elements().into_iter().map(|x| fano_action(x).unwrap()).collect();
        let regular = (1..=7u8).all(|p| (1..=7u8).all(|q| acts.iter().filter(|act| act.image[p as usize - 1] == q).count() == 1));
        if !regular {
            problems.push(format!("{g:?} is not regular on the Fano plane"));
        }
    }
    CheckReport::no_counterexample(id, "G and H act as Singer cycles on PG(2,2)", problems.into_iter().next())
}

fn alpha_bijection(id: &str) -> CheckReport {
    let image: BTreeSet<GfVec6> = SymMat3::all().map(alpha).collect();
    let inverse_ok = SymMat3::all().all(|x| alpha_inverse(alpha(x)) == x) && GfVec6::all().all(|v| alpha(alpha_inverse(v)) == v);
    CheckReport::compare(id, "alpha: J -> F^6 is a bijection with back-substitution inverse", "64 images, inverse ok", format!("{} images, inverse {}", image.len(), if inverse_ok { "ok" } else { "wrong" }))
}

fn eq2_det_identity(id: &str) -> CheckReport {
    let w = first(SymMat3::all().filter(|&x| x.det() != q0_eval(alpha(x))), |x| format!("X={x}"));
    CheckReport::no_counterexample(id, "det X = q0(alpha(X)) for all 64 symmetric X", w)
}

fn eq3_bilinear_identity(id: &str) -> CheckReport {
    let w = first(
        SymMat3::all().flat_map(|x| SymMat3::all().map(move |y| (x, y))).filter(|&(x, y)| bilinear(alpha(x), alpha(y)) != (x + y).det() + x.det() + y.det()),
        |(x, y)| format!("X={x} Y={y}"),
    );
    CheckReport::no_counterexample(id, "<alpha X|alpha Y>0 = det(X+Y) + det X + det Y on all 64^2 pairs", w)
}

fn bilinear_coincide(id: &str) -> CheckReport {
    let mut forms = vec![QuadraticForm::Q0, QuadraticForm::Q];
    forms.extend(atlas().s().into_iter().map(QuadraticForm::QM));
    let mut w = None;
    'o: for f in &forms {
        for x in GfVec6::all() {
            for y in GfVec6::all() {
                if f.polar(x, y) != bilinear(x, y) {
                    w = Some(format!("{f} at {x},{y}"));
                    break 'o;
                }
            }
        }
    }
    let radical: Vec<GfVec6> = GfVec6::all_nonzero().filter(|&x| GfVec6::all().all(|y| !bilinear(x, y).is_one())).collect();
    if w.is_none() && !radical.is_empty() {
        w = Some(format!("{} is in the radical", radical[0]));
    }
    CheckReport::no_counterexample(id, "q0, q and every q_M share the nondegenerate polar form <.|.>0", w)
}

fn q0_complement(id: &str) -> CheckReport {
    let q0 = quadric_points(QuadraticForm::Q0);
    let inv: BTreeSet<GfVec6> = atlas().invertible().into_iter().map(alpha).collect();
    let complement: BTreeSet<GfVec6> = GfVec6::all_nonzero().filter(|&p| !q0.contains(p)).collect();
    CheckReport::compare(
        id,
        "alpha(S u {1}) is the complement of the Klein quadric",
        "27 + 1 + 35 = 63, complement",
        format!("{} + 1 + {} = {}, {}", inv.len() - 1, q0.len(), inv.len() + q0.len(), if inv == complement { "complement" } else { "not complement" }),
    )
}

fn quadric_counts(id: &str) -> CheckReport {
    let (q0, q) = (quadric_points(QuadraticForm::Q0), quadric_points(QuadraticForm::Q));
    CheckReport::compare(
        id,
        "|Q0| = 35 with 105 lines, |Q| = 27 with 45 lines",
        "35/105 27/45",
        format!("{}/{} {}/{}", q0.len(), q0.lines().len(), q.len(), q.lines().len()),
    )
}

fn projective_indices(id: &str) -> CheckReport {
    CheckReport::compare(
        id,
        "projective index of Q is 1, of Q0 is 2",
        "Q:1 Q0:2",
        format!("Q:{} Q0:{}", projective_index(&quadric_points(QuadraticForm::Q)), projective_index(&quadric_points(QuadraticForm::Q0))),
    )
}

/// Q_M is carried by `X ↦ X + M` onto `J* \ {M}`, the analogue of S with `M`
/// distinguished instead of `1`. Onto S itself this holds only for `M = 1`.
fn qm_family(id: &str) -> CheckReport {
    let a = atlas();
    let mut centers = vec![SymMat3::IDENTITY];
    centers.extend(a.s());
    let w = first(
        centers.into_iter().filter(|&m| {
            let f = QuadraticForm::QM(m);
            let qd = quadric_points(f);
            let det_form = SymMat3::all().all(|x| f.eval(alpha(x)) == f.eval_matrix(x));
            let domain: Vec<SymMat3> = a.invertible().into_iter().filter(|&x| x != m).collect();
            let image: BTreeSet<GfVec6> = domain.iter().filter_map(|&x| pi_translate(x, m).ok()).map(alpha).collect();
            let bijective = image.len() == 27 && image.into_iter().eq(qd.points.iter().copied());
            qd.len() != 27 || projective_index(&qd) != 1 || !det_form || !bijective
        }),
        |m| format!("q_M for M={}", a.name(m)),
    );
    CheckReport::no_counterexample(id, "each q_M = det(X+M)+1 has a 27-point quadric of index 1, carried by X -> X+M onto J* minus M", w)
}

fn gq_s_axioms(id: &str) -> CheckReport {
    CheckReport::compare(id, "GQ(S): pi-preimages of the lines of Q form a GQ(2,4)", "27 points, 45 lines, order (2,4)", shape(&build_gq_s()))
}

fn collinear_criterion(id: &str) -> CheckReport {
    let a = atlas();
    let gq = build_gq_s();
    let coll = gq.collinearity();
    let s = a.s();
    let mut pairs = 0;
    let mut w = None;
    for i in 0..27 {
        for j in i + 1..27 {
            pairs += 1;
            let (x, y) = (s[i], s[j]);
            let by_form = collinear_matrices(x, y).unwrap();
            if by_form != collinear_by_det_cases(x, y).unwrap() || by_form != coll[i][j] {
                w.get_or_insert_with(|| format!("{} vs {}", a.name(x), a.name(y)));
            }
        }
    }
    let actual = w.map_or_else(|| format!("{pairs} pairs agree"), |w| format!("disagreement at {w}"));
    CheckReport::compare(id, "<X+1|Y+1> = 0 agrees with the det case split and with GQ(S) lines", "351 pairs agree", actual)
}

fn pi_classes(id: &str) -> CheckReport {
    let a = atlas();
    let image = |xs: &[SymMat3]| set_of(xs.iter().map(|&x| pi(x).unwrap()));
    let s = set_of(a.s());
    let actual = format!(
        "pi(U)=U {}, pi(V)=V {}, pi(D) n S empty {}",
        image(&a.u) == set_of(a.u),
        image(&a.v) == set_of(a.v),
        image(&a.d).is_disjoint(&s)
    );
    CheckReport::compare(id, "pi(U) = U, pi(V) = V, pi(D) n S = empty", "pi(U)=U true, pi(V)=V true, pi(D) n S empty true", actual)
}

fn quadric_intersections(id: &str) -> CheckReport {
    let a = atlas();
    let (q0, q) = (quadric_points(QuadraticForm::Q0), quadric_points(QuadraticForm::Q));
    let s_in_q: BTreeSet<GfVec6> = a.s().into_iter().map(alpha).filter(|&p| q.contains(p)).collect();
    let uv: BTreeSet<GfVec6> = a.u.iter().chain(&a.v).map(|&x| alpha(x)).collect();
    let q0q: BTreeSet<GfVec6> = q.points.iter().copied().filter(|&p| q0.contains(p)).collect();
    let pd: BTreeSet<GfVec6> = a.d.iter().map(|&x| alpha(pi(x).unwrap())).collect();
    CheckReport::compare(
        id,
        "S n Q = U u V and Q0 n Q = pi(D)",
        "S n Q = U u V true, Q0 n Q = pi(D) true",
        format!("S n Q = U u V {}, Q0 n Q = pi(D) {}", s_in_q == uv, q0q == pd),
    )
}

fn perp_one(id: &str) -> CheckReport {
    let a = atlas();
    let perp: BTreeSet<GfVec6> = perp_hyperplane(alpha(SymMat3::IDENTITY)).unwrap().into_iter().collect();
    let mut expected: BTreeSet<GfVec6> = a.d.iter().map(|&x| alpha(x)).collect();
    expected.extend(a.d.iter().map(|&x| alpha(pi(x).unwrap())));
    expected.insert(alpha(SymMat3::IDENTITY));
    CheckReport::compare(
        id,
        "1-perp = {1} u D u pi(D)",
        "31 points, equal",
        format!("{} points, {}", perp.len(), if perp == expected && expected.len() == 31 { "equal" } else { "differ" }),
    )
}

/// Lines through `1` meeting Q in exactly one point, each written `{1, X, π(X)}` with `X ∈ D`.
fn tangent_lines(id: &str) -> CheckReport {
    let a = atlas();
    let one = alpha(SymMat3::IDENTITY);
    let (q0, q) = (quadric_points(QuadraticForm::Q0), quadric_points(QuadraticForm::Q));
    let d: BTreeSet<GfVec6> = a.d.iter().map(|&x| alpha(x)).collect();
    let pd: BTreeSet<GfVec6> = a.d.iter().map(|&x| alpha(pi(x).unwrap())).collect();
    let through_one: Vec<_> = all_lines().iter().filter(|l| l.contains(&one)).collect();
    let tangent_q: Vec<_> = through_one.iter().filter(|l| l.iter().filter(|&&p| q.contains(p)).count() == 1).collect();
    let tangent_q0: Vec<_> = through_one.iter().filter(|l| l.iter().filter(|&&p| q0.contains(p)).count() == 1).collect();
    let shape_ok = tangent_q.iter().all(|l| {
        let others: Vec<GfVec6> = l.iter().copied().filter(|&p| p != one).collect();
        let (x, y) = (others[0], others[1]);
        (d.contains(&x) && pd.contains(&y)) || (d.contains(&y) && pd.contains(&x))
    });
    let same = tangent_q == tangent_q0;
    CheckReport::compare(
        id,
        "the tangents of Q and Q0 through 1 are the 15 lines {1, X, pi(X)}, X in D",
        "15 tangents, shape {1,X,pi(X)} true, same for Q0 true",
        format!("{} tangents, shape {{1,X,pi(X)}} {}, same for Q0 {}", tangent_q.len(), shape_ok, same),
    )
}

fn gq_d_subquadrangle(id: &str) -> CheckReport {
    let a = atlas();
    let one = alpha(SymMat3::IDENTITY);
    let perp = perp_hyperplane(one).unwrap();
    let (q0, q) = (quadric_points(QuadraticForm::Q0), quadric_points(QuadraticForm::Q));
    let in_q: Vec<GfVec6> = perp.iter().copied().filter(|&p| q.contains(p)).collect();
    let in_q0: Vec<GfVec6> = perp.iter().copied().filter(|&p| q0.contains(p)).collect();
    let mut pd: Vec<GfVec6> = a.d.iter().map(|&x| alpha(pi(x).unwrap())).collect();
    pd.sort_unstable();
    let inc = structure_on_points("GQ(D)", &in_q);
    let section_ok = hyperplane_section(one).lines == inc.lines;
    CheckReport::compare(
        id,
        "Q n 1-perp = Q0 n 1-perp = pi(D): index 1, a GQ(2,2)",
        "equal true, index 1, 15 points, 15 lines, order (2,2)",
        format!(
            "equal {}, index {}, {}",
            in_q == in_q0 && in_q == pd && section_ok && lines_within(&in_q).len() == inc.line_count(),
            projective_index_of(&in_q),
            shape(&inc)
        ),
    )
}

fn rank_intersection(id: &str) -> CheckReport {
    let w = first(
        SymMat3::all()
            .flat_map(|x| SymMat3::all().map(move |y| (x, y)))
            .filter(|&(x, y)| (x + y).rank() + intersection_dim(&plane_of_sym(x), &plane_of_sym(y)) != 3 || intersection_dim_by_rank(x.to_mat3(), y.to_mat3()) != intersection_dim(&plane_of_sym(x), &plane_of_sym(y))),
        |(x, y)| format!("X={x} Y={y}"),
    );
    CheckReport::no_counterexample(id, "rank(X+Y) + dim((X|1) n (Y|1)) = 3 on all 64^2 symmetric pairs", w)
}

fn skew_distinguished(id: &str) -> CheckReport {
    let a = atlas();
    let w = first(
        a.s().into_iter().filter(|&x| {
            let p = plane_of_sym(x);
            intersection_dim(&p, &plane_one_zero()) != 0 || intersection_dim(&p, &plane_zero_one()) != 0
        }),
        |x| a.name(x),
    );
    CheckReport::no_counterexample(id, "every plane of cal-S is skew to (1|0) and (0|1)", w)
}

fn meet_one_one(id: &str) -> CheckReport {
    let a = atlas();
    let oo = plane_one_one();
    let mut problems = Vec::new();
    for x in a.s() {
        let l = a.label_of(x).unwrap();
        let dim = intersection_dim(&plane_of_sym(x), &oo);
        let expected = match l.class {
            MatrixClass::D if l.index <= 3 => 2,
            MatrixClass::D => 1,
            _ => 0,
        };
        // the meet is {(x|x) : x eigenvector}
        let meet: BTreeSet<GfVec6> = plane_of_sym(x).points().into_iter().filter(|&p| oo.contains(p)).collect();
        let eig: BTreeSet<GfVec6> = x.to_mat3().eigenspace_one().into_iter().filter(|&v| v != 0).map(|v| GfVec6::from_halves(v, v)).collect();
        if dim != expected || meet != eig {
            problems.push(format!("{l} meets (1|1) in dimension {dim}"));
        }
    }
    CheckReport::no_counterexample(id, "(Di|1) meets (1|1) in a line iff i <= 3, else a point; U u V skew; meet = eigenvectors", problems.into_iter().next())
}

fn rho_action(id: &str) -> CheckReport {
    let mut w = None;
    for g in [Group::G, Group::H] {
        let elems = g.elements();
        let domain = set_of(g.domain());
        for &u in &elems {
            for &v in &elems {
                let uv = SymMat3::from_mat3(u.to_mat3() * v.to_mat3()).expect("G is commutative");
                for &x in &domain {
                    if rho(uv, x) != rho(u, rho(v, x)) || !domain.contains(&rho(u, x)) {
                        w.get_or_insert_with(|| format!("{g:?}: u={u} v={v} x={x}"));
                    }
                }
            }
        }
    }
    CheckReport::no_counterexample(id, "rho_U(X) = UXU is an action of G on D u V and of H on D u U", w)
}

fn orbit_summary(g: Group) -> String {
    let a = atlas();
    let dec = group_orbits(g);
    let parts: Vec<String> = dec
        .orbits
        .iter()
        .map(|o| {
            let nd = o.iter().filter(|&&x| classify(x) == Ok(MatrixClass::D)).count();
            let inv: Vec<String> = o.iter().filter(|x| a.d[..3].contains(x)).map(|&x| a.name(x)).collect();
            format!("{}={}D+{}{}[{}]", o.len(), nd, o.len() - nd, g.other_class(), inv.join(","))
        })
        .collect();
    format!("{} orbits: {}", dec.orbits.len(), parts.join(" "))
}

fn orbits_g(id: &str) -> CheckReport {
    CheckReport::compare(id, "G has 3 orbits on D u V, 5 from D (one involution) + 2 from V each", "3 orbits: 7=5D+2V[D1] 7=5D+2V[D2] 7=5D+2V[D3]", orbit_summary(Group::G))
}

fn orbits_h(id: &str) -> CheckReport {
    CheckReport::compare(id, "H has 3 orbits on D u U, 5 from D (one involution) + 2 from U each", "3 orbits: 7=5D+2U[D1] 7=5D+2U[D2] 7=5D+2U[D3]", orbit_summary(Group::H))
}

fn collineation_preserves(id: &str) -> CheckReport {
    let a = atlas();
    let mut planes: Vec<_> = a.invertible().into_iter().map(plane_of_sym).collect();
    planes.extend([plane_one_zero(), plane_zero_one()]);
    let mut w = None;
    let group: BTreeSet<SymMat3> = Group::G.elements().into_iter().chain(Group::H.elements()).collect();
    for &u in &group {
        let images: Vec<_> = planes.iter().map(|p| collineation_action(u, p).unwrap()).collect();
        for x in a.invertible() {
            if collineation_action(u, &plane_of_sym(x)).unwrap() != plane_of_sym(rho(u, x)) {
                w.get_or_insert_with(|| format!("u={u}: (X|1) -> (UXU|1) fails for {x}"));
            }
            let line_before = intersection_dim(&plane_of_sym(x), &plane_one_one()) == 2;
            let u2 = SymMat3::from_mat3(u.to_mat3() * u.to_mat3()).unwrap();
            let line_after = intersection_dim(&plane_of_sym(rho(u, x)), &plane_of_sym(u2)) == 2;
            if line_before != line_after {
                w.get_or_insert_with(|| format!("u={u}: line meeting not transferred for {x}"));
            }
        }
        for i in 0..planes.len() {
            for j in 0..planes.len() {
                if intersection_dim(&planes[i], &planes[j]) != intersection_dim(&images[i], &images[j]) {
                    w.get_or_insert_with(|| format!("u={u}: dims change for {} and {}", planes[i], planes[j]));
                }
            }
        }
    }
    CheckReport::no_counterexample(id, "diag(U, U^-1) maps (X|1) to (UXU|1) and preserves intersection dimensions", w)
}

fn expected_profile(x: SymMat3) -> Profile {
    let l = atlas().label_of(x).unwrap();
    match l.class {
        MatrixClass::D if l.index <= 3 => Profile { point: 4, line: 0, skew: 2 },
        MatrixClass::D => Profile { point: 3, line: 1, skew: 2 },
        _ => Profile { point: 4, line: 1, skew: 1 },
    }
}

fn stats(id: &str, family: MatrixClass) -> CheckReport {
    let a = atlas();
    let other = if family == MatrixClass::U { MatrixClass::V } else { MatrixClass::U };
    let domain: Vec<SymMat3> = a.d.iter().chain(a.class_members(other)).copied().collect();
    let w = first(
        domain.into_iter().filter(|&x| intersection_profile(x, family).ok() != Some(expected_profile(x))),
        |x| format!("{} has profile {}", a.name(x), intersection_profile(x, family).map_or_else(|e| e.to_string(), |p| p.to_string())),
    );
    CheckReport::no_counterexample(
        id,
        &format!("planes of cal-{family} met (point,line,skew): (4,0,2) for D1-D3, (3,1,2) for other D, (4,1,1) for {other}"),
        w,
    )
}

fn stats_u(id: &str) -> CheckReport {
    stats(id, MatrixClass::U)
}

fn stats_v(id: &str) -> CheckReport {
    stats(id, MatrixClass::V)
}

fn skew_partners(id: &str) -> CheckReport {
    let a = atlas();
    let pairs: Vec<String> = a.u.iter().map(|&u| format!("{}'={}", a.name(u), skew_partner(u).map_or_else(|e| e.to_string(), |v| a.name(v)))).collect();
    let involutive = a.v.iter().all(|&v| skew_partner(skew_partner(v).unwrap()) == Ok(v));
    CheckReport::compare(
        id,
        "the skew pairing sends U_i to V_i and is an involution",
        "U1'=V1 U2'=V2 U3'=V3 U4'=V4 U5'=V5 U6'=V6 involution",
        format!("{}{}", pairs.join(" "), if involutive { " involution" } else { " not involution" }),
    )
}

fn coll_planes(id: &str) -> CheckReport {
    let a = atlas();
    let gq = build_gq_s();
    let coll = gq.collinearity();
    let s = a.s();
    let planes = build_gq_planes();
    let mut problems = Vec::new();
    if planes.lines != gq.lines || verify_gq_axioms(&planes).is_err() {
        problems.push("GQ(cal-S) differs from GQ(S)".to_string());
    }
    let is_d = |x: SymMat3| classify(x) == Ok(MatrixClass::D);
    for i in 0..27 {
        for j in 0..27 {
            if i == j {
                continue;
            }
            let (x, y) = (s[i], s[j]);
            let meet = intersection_dim(&plane_of_sym(x), &plane_of_sym(y)) > 0;
            let predicted = if is_d(x) == is_d(y) { meet } else { !meet };
            if predicted != coll[i][j] {
                problems.push(format!("{} ~ {} not predicted by planes", a.name(x), a.name(y)));
            }
            if !is_d(x) && !is_d(y) {
                let cx = classify(x).unwrap();
                let expected = cx != classify(y).unwrap() && skew_partner(x).unwrap() != y;
                if expected != coll[i][j] {
                    problems.push(format!("U/V rule fails at {} {}", a.name(x), a.name(y)));
                }
            }
        }
    }
    for (i, &y) in s.iter().enumerate().take(15) {
        let part = |class| -> Vec<SymMat3> { s.iter().enumerate().filter(|&(j, &x)| classify(x) == Ok(class) && coll[i][j]).map(|(_, &x)| x).collect() };
        let (us, vs) = (part(MatrixClass::U), part(MatrixClass::V));
        let primes: BTreeSet<SymMat3> = us.iter().map(|&u| skew_partner(u).unwrap()).collect();
        if us.len() != 2 || vs.len() != 2 || primes != set_of(vs) {
            problems.push(format!("{} has U-partners {} and V-partners", a.name(y), us.len()));
        }
        let in_d = (0..15).filter(|&j| j != i && coll[i][j]).count();
        if in_d != 6 {
            problems.push(format!("{} has {in_d} collinear partners in D", a.name(y)));
        }
    }
    CheckReport::no_counterexample(id, "collinearity of planes: meet within U u V and within D, skew across; 2+2 paired partners, 6 in D", problems.into_iter().next())
}

fn degree_ten(id: &str) -> CheckReport {
    let gq = build_gq_s();
    let degs: BTreeSet<usize> = gq.collinearity_degrees().into_iter().collect();
    let edges: usize = gq.collinearity_degrees().iter().sum::<usize>() / 2;
    CheckReport::compare(id, "every point of GQ(S) is collinear with exactly 10 others", "degrees {10}, 135 edges", format!("degrees {degs:?}, {edges} edges"))
}

fn iso_table(id: &str) -> CheckReport {
    let (s, m) = (build_gq_s(), build_doily_model());
    match Isomorphism::from_label_pairs(&s, &m, &ISO_TABLE) {
        Ok(f) => verify_isomorphism(id, &f, &s, &m),
        Err(e) => CheckReport::with_pass(id, "explicit table is an isomorphism", "isomorphism", e.to_string(), false),
    }
}

/// Swapping the images of D1 and D2 must be rejected with a witness line.
pub fn corrupted_table() -> [(&'static str, &'static str); 27] {
    let mut t = ISO_TABLE;
    let (a, b) = (t[0].1, t[1].1);
    t[0].1 = b;
    t[1].1 = a;
    t
}

fn iso_corrupted(id: &str) -> CheckReport {
    let (s, m) = (build_gq_s(), build_doily_model());
    let f = Isomorphism::from_label_pairs(&s, &m, &corrupted_table()).unwrap();
    let r = verify_isomorphism(id, &f, &s, &m);
    let detected = !r.pass && r.actual.contains("maps to non-line");
    CheckReport::with_pass(id, "the table with D1 and D2 swapped is rejected with a witness line", "rejected with witness", if detected { format!("rejected: {}", r.actual) } else { "accepted".into() }, detected)
}

/// The four models of GQ(2,4) built here.
pub fn four_models() -> Vec<IncidenceStructure> {
    vec![build_gq_q(), build_gq_s(), build_pi_plane_model(), build_doily_model()]
}

fn iso_search(id: &str) -> CheckReport {
    let models = four_models();
    let mut found = 0;
    let mut missing = Vec::new();
    for i in 0..models.len() {
        for j in i + 1..models.len() {
            match find_isomorphism(&models[i], &models[j]) {
                Some(_) => found += 1,
                None => missing.push(format!("{} vs {}", models[i].name, models[j].name)),
            }
        }
    }
    let gq_d = structure_on_points("GQ(D)", &{
        let mut v: Vec<GfVec6> = atlas().d.iter().map(|&x| alpha(pi(x).unwrap())).collect();
        v.sort_unstable();
        v
    });
    let doily_ok = find_isomorphism(&doily_substructure(), &gq_d).is_some();
    CheckReport::compare(
        id,
        "backtracking finds isomorphisms between all four GQ(2,4) models and between the doily and GQ(D)",
        "6/6 pairs, doily ~ GQ(D) true",
        format!("{found}/6 pairs{}, doily ~ GQ(D) {doily_ok}", if missing.is_empty() { String::new() } else { format!(" (missing {})", missing.join("; ")) }),
    )
}
