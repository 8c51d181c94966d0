//! Acceptance criteria. Each criterion combines registered checks with an
//! independent recomputation on plain arrays, and prints one result line.

use std::collections::BTreeSet;
use std::process::ExitCode;

use gqlab::atlas::Atlas;
use gqlab::checks::run_suite;
use gqlab::export::{render, Format, What};
use gqlab::gf2::SymMat3;
use gqlab::quadrangle::{build_doily_model, build_gq_q, build_gq_s, doily_substructure, IncidenceStructure};
use gqlab::planes::build_pi_plane_model;

type M = [[u8; 3]; 3];

fn sym(b: u8) -> M {
    let e = |k: u8| (b >> (5 - k)) & 1;
    let (a, b_, c, d, e_, f) = (e(0), e(1), e(2), e(3), e(4), e(5));
    [[a, b_, c], [b_, d, e_], [c, e_, f]]
}

fn det(m: &M) -> u8 {
    let mut s = 0i32;
    for (p, sign) in [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)] {
        s += sign * (0..3).map(|i| m[i][p[i]] as i32).product::<i32>();
    }
    s.rem_euclid(2) as u8
}

fn add(x: &M, y: &M) -> M {
    let mut r = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            r[i][j] = x[i][j] ^ y[i][j];
        }
    }
    r
}

const ONE: M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// α on entries, as a 6-tuple x1..x6.
fn alpha(m: &M) -> [u8; 6] {
    let (a, b, c, d, e, f) = (m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]);
    [a, e ^ (d & f), d, c ^ (a & f), f, b ^ (a & d)]
}

fn q0(x: &[u8; 6]) -> u8 {
    (x[0] & x[1]) ^ (x[2] & x[3]) ^ (x[4] & x[5])
}

fn polar(x: &[u8; 6], y: &[u8; 6]) -> u8 {
    (0..3).fold(0, |s, k| s ^ (x[2 * k] & y[2 * k + 1]) ^ (x[2 * k + 1] & y[2 * k]))
}

fn vecs() -> Vec<[u8; 6]> {
    (1u8..64).map(|v| std::array::from_fn(|k| (v >> (5 - k)) & 1)).collect()
}

fn xor6(x: &[u8; 6], y: &[u8; 6]) -> [u8; 6] {
    std::array::from_fn(|k| x[k] ^ y[k])
}

/// Lines of PG(5,2) inside a point set, and whether a plane lies inside it.
fn count_lines_and_planes(pts: &BTreeSet<[u8; 6]>) -> (usize, bool) {
    let v: Vec<_> = pts.iter().copied().collect();
    let mut lines = 0;
    let mut plane = false;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let z = xor6(&v[i], &v[j]);
            if z > v[j] && pts.contains(&z) {
                lines += 1;
                for w in &v {
                    let span = [*w, xor6(w, &v[i]), xor6(w, &v[j]), xor6(w, &z)];
                    if ![v[i], v[j], z].contains(w) && span.iter().all(|p| pts.contains(p)) {
                        plane = true;
                    }
                }
            }
        }
    }
    (lines, plane)
}

/// Straight GQ test: line sizes, point degrees, and the unique-perpendicular axiom.
fn naive_gq(inc: &IncidenceStructure) -> Option<(usize, usize)> {
    let s = inc.lines.first()?.len() - 1;
    let n = inc.point_count();
    let deg: Vec<usize> = (0..n).map(|p| inc.lines.iter().filter(|l| l.contains(&p)).count()).collect();
    if inc.lines.iter().any(|l| l.len() != s + 1) || deg.iter().any(|&d| d != deg[0]) {
        return None;
    }
    for l in &inc.lines {
        for p in (0..n).filter(|p| !l.contains(p)) {
            let joins = l.iter().filter(|&&x| inc.lines.iter().any(|m| m.contains(&p) && m.contains(&x))).count();
            if joins != 1 {
                return None;
            }
        }
    }
    Some((s, deg[0] - 1))
}

fn checks(prefixes: &[&str]) -> Result<(), String> {
    for p in prefixes {
        let r = run_suite(Some(p)).map_err(|e| e.to_string())?;
        let first = r.failures().next().map(|f| format!("{}: expected {}, got {}", f.check_id, f.expected, f.actual));
        if let Some(msg) = first {
            return Err(msg);
        }
    }
    Ok(())
}

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn invertible() -> Vec<M> {
    (0u8..64).map(sym).filter(|m| det(m) == 1).collect()
}

fn c1() -> Result<(), String> {
    checks(&["sec3.enumeration", "sec3.class-sizes"])?;
    let inv = invertible();
    ensure(inv.len() == 28, "28 invertible")?;
    let d = inv.iter().filter(|m| **m != ONE && det(&add(m, &ONE)) == 0).count();
    ensure(d == 15 && inv.len() - 1 - d == 12, "15 with eigenvalue 1, 12 without")
}

fn c2() -> Result<(), String> {
    checks(&["sec4.eq2-det-identity", "sec4.eq3-bilinear-identity", "sec4.alpha-bijection"])?;
    let all: Vec<M> = (0u8..64).map(sym).collect();
    ensure(all.iter().all(|m| det(m) == q0(&alpha(m))), "det = q0(alpha)")?;
    ensure(
        all.iter().all(|x| all.iter().all(|y| polar(&alpha(x), &alpha(y)) == det(&add(x, y)) ^ det(x) ^ det(y))),
        "bilinear identity",
    )?;
    ensure(all.iter().map(alpha).collect::<BTreeSet<_>>().len() == 64, "alpha injective")
}

fn c3() -> Result<(), String> {
    checks(&["sec4.quadric-counts", "sec4.projective-index", "sec4.qm-family"])?;
    let quadric = |m: &M| -> BTreeSet<[u8; 6]> {
        let am = alpha(m);
        vecs().into_iter().filter(|x| q0(x) ^ polar(x, &am) == 0).collect()
    };
    let k0: BTreeSet<[u8; 6]> = vecs().into_iter().filter(|x| q0(x) == 0).collect();
    let (l0, plane0) = count_lines_and_planes(&k0);
    ensure(k0.len() == 35 && l0 == 105 && plane0, "Q0: 35 points, 105 lines, planes")?;
    for m in invertible() {
        let qm = quadric(&m);
        let (l, plane) = count_lines_and_planes(&qm);
        ensure(qm.len() == 27 && l == 45 && !plane, "27-point quadric with lines and no planes")?;
    }
    Ok(())
}

fn c4() -> Result<(), String> {
    checks(&[
        "sec2.gq-q-axioms",
        "sec4.gq-s-axioms",
        "sec5.pi-plane-model",
        "sec2.doily-model",
        "sec5.degree-10",
        "sec2.doily-gq22",
        "sec4.gq-d-subquadrangle",
    ])?;
    for inc in [build_gq_q(), build_gq_s(), build_pi_plane_model(), build_doily_model()] {
        ensure(inc.point_count() == 27 && inc.line_count() == 45 && naive_gq(&inc) == Some((2, 4)), &format!("{} is GQ(2,4)", inc.name))?;
        ensure(inc.collinearity_degrees().iter().all(|&d| d == 10), "degree 10")?;
    }
    let sub = doily_substructure();
    ensure(sub.line_count() == 15 && naive_gq(&sub) == Some((2, 2)), "doily GQ(2,2)")
}

fn c5() -> Result<(), String> {
    checks(&["sec4.collinear-criterion"])?;
    let s: Vec<M> = invertible().into_iter().filter(|m| *m != ONE).collect();
    let gq = build_gq_s();
    let coll = gq.collinearity();
    let mut pairs = 0;
    for i in 0..27 {
        for j in i + 1..27 {
            pairs += 1;
            let by_polar = polar(&alpha(&add(&s[i], &ONE)), &alpha(&add(&s[j], &ONE))) == 0;
            let dx = det(&add(&s[i], &ONE));
            let dy = det(&add(&s[j], &ONE));
            let dxy = det(&add(&s[i], &s[j]));
            let by_cases = dxy ^ dx ^ dy == 0;
            let index = |m: &M| gq.index_of(&Atlas::global().name(to_sym(m))).unwrap();
            ensure(by_polar == by_cases && by_cases == coll[index(&s[i])][index(&s[j])], "criterion agrees")?;
        }
    }
    ensure(pairs == 351, "351 pairs")
}

fn to_sym(m: &M) -> SymMat3 {
    let b = [m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]].iter().fold(0u8, |acc, &x| acc << 1 | x);
    SymMat3::from_bits(b)
}

fn c6() -> Result<(), String> {
    checks(&["sec4.perp-one", "sec4.tangent-lines", "sec4.quadric-intersections", "sec4.pi-classes"])?;
    let one = alpha(&ONE);
    let perp: Vec<[u8; 6]> = vecs().into_iter().filter(|x| polar(x, &one) == 0).collect();
    ensure(perp.len() == 31, "31 points in 1-perp")?;
    let q: BTreeSet<[u8; 6]> = vecs().into_iter().filter(|x| q0(x) ^ polar(x, &one) == 0).collect();
    let tangents = vecs()
        .into_iter()
        .filter(|&x| x != one && x < xor6(&x, &one))
        .filter(|x| [one, *x, xor6(x, &one)].iter().filter(|p| q.contains(*p)).count() == 1)
        .count();
    ensure(tangents == 15, "15 tangents through 1")
}

fn c7() -> Result<(), String> {
    checks(&["sec2.hyperplane-survey"])
}

/// Rows of `(X|1)` as 6-tuples.
fn plane_rows(m: &M) -> [[u8; 6]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|k| if k < 3 { m[i][k] } else { ONE[i][k - 3] }))
}

fn plane_points(rows: &[[u8; 6]; 3]) -> BTreeSet<[u8; 6]> {
    (1u8..8)
        .map(|c| (0..3).filter(|i| c >> i & 1 == 1).fold([0; 6], |acc, i| xor6(&acc, &rows[i])))
        .collect()
}

fn c8() -> Result<(), String> {
    checks(&["sec5.rank-intersection", "sec5.spreads", "sec5.symplectic", "sec5.plucker"])?;
    let s: Vec<M> = invertible().into_iter().filter(|m| *m != ONE).collect();
    let mut triples = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                triples.push([a, b, c]);
            }
        }
    }
    let minor_fn = |t: &[usize; 3]| -> Vec<u8> {
        s.iter()
            .map(|m| {
                let r = plane_rows(m);
                det(&std::array::from_fn(|i| std::array::from_fn(|j| r[i][t[j]])))
            })
            .collect()
    };
    let fns: Vec<Vec<u8>> = triples.iter().map(minor_fn).collect();
    let unique: Vec<usize> = (0..20).filter(|&i| fns.iter().filter(|f| **f == fns[i]).count() == 1).collect();
    ensure(unique.len() == 6, "six multiplicity-one minors")?;
    for k in 0..6 {
        let coord: Vec<u8> = s.iter().map(|m| alpha(m)[k]).collect();
        ensure(unique.iter().filter(|&&i| fns[i] == coord).count() == 1, "each alpha coordinate is one unique minor")?;
    }
    let symp = |x: &[u8; 6], y: &[u8; 6]| (0..3).fold(0, |acc, i| acc ^ (x[i] & y[i + 3]) ^ (y[i] & x[i + 3]));
    for m in &s {
        let r = plane_rows(m);
        ensure(r.iter().all(|x| r.iter().all(|y| symp(x, y) == 0)), "totally isotropic")?;
    }
    let dist = [
        [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]],
        [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
    ];
    for class in [gqlab::atlas::MatrixClass::U, gqlab::atlas::MatrixClass::V] {
        let mut covered = BTreeSet::new();
        let mut total = 0;
        let mut members: Vec<[[u8; 6]; 3]> = vec![plane_rows(&ONE), dist[0], dist[1]];
        members.extend(s.iter().filter(|m| gqlab::atlas::classify(to_sym(m)) == Ok(class)).map(plane_rows));
        for r in &members {
            let pts = plane_points(r);
            total += pts.len();
            covered.extend(pts);
        }
        ensure(members.len() == 9 && total == 63 && covered.len() == 63, "spread partitions 63 points into 9 planes")?;
    }
    Ok(())
}

fn mul(x: &M, y: &M) -> M {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).fold(0, |acc, k| acc ^ (x[i][k] & y[k][j]))))
}

fn rank(m: &M) -> usize {
    if det(m) == 1 {
        return 3;
    }
    let any_minor = (0..3).any(|i| (0..3).any(|j| {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        (m[r[0]][c[0]] & m[r[1]][c[1]]) ^ (m[r[0]][c[1]] & m[r[1]][c[0]]) == 1
    }));
    if any_minor {
        2
    } else if m.iter().flatten().any(|&v| v == 1) {
        1
    } else {
        0
    }
}

fn split() -> (Vec<M>, Vec<M>, Vec<M>) {
    use gqlab::atlas::MatrixClass;
    let s: Vec<M> = invertible().into_iter().filter(|m| *m != ONE).collect();
    let of = |c| s.iter().copied().filter(|m| gqlab::atlas::classify(to_sym(m)) == Ok(c)).collect::<Vec<M>>();
    (of(MatrixClass::D), of(MatrixClass::U), of(MatrixClass::V))
}

fn c9() -> Result<(), String> {
    checks(&["sec5.rho-action", "sec5.orbits-G", "sec5.orbits-H"])?;
    let (d, u, v) = split();
    let involutions: Vec<M> = d.iter().copied().filter(|m| mul(m, m) == ONE).collect();
    ensure(involutions.len() == 3, "three involutions in D")?;
    for (group, other) in [(&u, &v), (&v, &u)] {
        let mut g = vec![ONE];
        g.extend(group.iter().copied());
        let domain: Vec<M> = d.iter().chain(other.iter()).copied().collect();
        let mut seen = BTreeSet::new();
        let mut orbits = 0;
        for x in &domain {
            if seen.contains(x) {
                continue;
            }
            let orbit: BTreeSet<M> = g.iter().map(|a| mul(&mul(a, x), a)).collect();
            let nd = orbit.iter().filter(|y| d.contains(y)).count();
            let ni = orbit.iter().filter(|y| involutions.contains(y)).count();
            ensure(orbit.iter().all(|y| domain.contains(y)) && orbit.len() == 7 && nd == 5 && ni == 1, "orbit shape 5 + 2 with one involution")?;
            seen.extend(orbit);
            orbits += 1;
        }
        ensure(orbits == 3, "three orbits")?;
    }
    Ok(())
}

fn c10() -> Result<(), String> {
    checks(&["sec5.intersection-stats-U", "sec5.intersection-stats-V", "sec5.skew-partner"])?;
    let (d, u, v) = split();
    let involutions: Vec<M> = d.iter().copied().filter(|m| mul(m, m) == ONE).collect();
    // dim((X|1) n (Y|1)) = 3 - rank(X+Y)
    let profile = |x: &M, family: &[M]| {
        let mut p = (0, 0, 0);
        for y in family {
            match 3 - rank(&add(x, y)) {
                0 => p.2 += 1,
                1 => p.0 += 1,
                _ => p.1 += 1,
            }
        }
        p
    };
    for (family, other) in [(&u, &v), (&v, &u)] {
        for x in &d {
            let expected = if involutions.contains(x) { (4, 0, 2) } else { (3, 1, 2) };
            ensure(profile(x, family) == expected, "profile of D")?;
        }
        for x in other.iter() {
            ensure(profile(x, family) == (4, 1, 1), "profile of opposite class")?;
        }
    }
    let atlas = Atlas::global();
    for x in &u {
        let skew: Vec<&M> = v.iter().filter(|y| det(&add(x, y)) == 1).collect();
        let (lx, ly) = (atlas.name(to_sym(x)), atlas.name(to_sym(skew[0])));
        ensure(skew.len() == 1 && lx[1..] == ly[1..], "U_i' = V_i")?;
    }
    Ok(())
}

fn c11() -> Result<(), String> {
    checks(&["sec5.iso-table", "sec5.iso-search", "sec5.iso-corrupted"])
}

fn c12() -> Result<(), String> {
    let combos = [
        (What::Atlas, Format::Json),
        (What::Atlas, Format::Csv),
        (What::Incidence, Format::Json),
        (What::Incidence, Format::Dot),
        (What::Quadric, Format::Json),
        (What::Planes, Format::Json),
        (What::Planes, Format::Csv),
        (What::Isomorphism, Format::Json),
    ];
    for (w, f) in combos {
        let a = render(w, f, None).map_err(|e| e.to_string())?;
        let b = render(w, f, None).map_err(|e| e.to_string())?;
        ensure(a == b, &format!("{w} {f} deterministic"))?;
    }
    let suite = run_suite(None).map_err(|e| e.to_string())?;
    ensure(suite.pass(), "full suite passes")
}

type Criterion = fn() -> Result<(), String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 12] = [
        ("enumeration and class sizes", c1),
        ("det and bilinear identities, alpha bijective", c2),
        ("quadric counts and projective indices", c3),
        ("GQ axioms for all models and subquadrangles", c4),
        ("collinearity criterion on 351 pairs", c5),
        ("tangent structure at 1", c6),
        ("hyperplane section survey", c7),
        ("plane model: rank identity, spreads, isotropy, Plucker", c8),
        ("group actions and orbits", c9),
        ("intersection statistics and skew partners", c10),
        ("isomorphisms", c11),
        ("determinism", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS criterion {:>2}: {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {e}", i + 1);
            }
        }
    }
    println!("{} criteria, {} passed, {} failed", criteria.len(), criteria.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
