use std::collections::BTreeSet;

use proptest::prelude::*;

use gqlab::atlas::{classify, Atlas};
use gqlab::gf2::{GfVec6, Mat3, SymMat3};
use gqlab::planes::{intersection_dim, plane_of_sym, rho, Collineation, Group};
use gqlab::projective::{alpha, alpha_inverse, bilinear, q0_eval, QuadraticForm};
use gqlab::quadrangle::{build_gq_s, collinear_matrices};

fn sym() -> impl Strategy<Value = SymMat3> {
    (0u8..64).prop_map(SymMat3::from_bits)
}

fn vec6() -> impl Strategy<Value = GfVec6> {
    (0u8..64).prop_map(GfVec6::from_bits)
}

fn point_of_s() -> impl Strategy<Value = SymMat3> {
    (0usize..27).prop_map(|i| Atlas::global().s()[i])
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn alpha_round_trip(x in sym()) {
        prop_assert_eq!(alpha_inverse(alpha(x)), x);
    }

    #[test]
    fn det_is_q0(x in sym()) {
        prop_assert_eq!(x.det(), q0_eval(alpha(x)));
    }

    #[test]
    fn polar_of_det(x in sym(), y in sym()) {
        prop_assert_eq!(bilinear(alpha(x), alpha(y)), (x + y).det() + x.det() + y.det());
    }

    #[test]
    fn bilinear_is_symmetric_and_alternating(x in vec6(), y in vec6(), z in vec6()) {
        prop_assert_eq!(bilinear(x, y), bilinear(y, x));
        prop_assert!(!bilinear(x, x).is_one());
        prop_assert_eq!(bilinear(x + z, y), bilinear(x, y) + bilinear(z, y));
    }

    #[test]
    fn q_matches_determinant(x in sym(), m in point_of_s()) {
        prop_assert_eq!(QuadraticForm::Q.eval(alpha(x)), QuadraticForm::Q.eval_matrix(x));
        prop_assert_eq!(QuadraticForm::QM(m).eval(alpha(x)), QuadraticForm::QM(m).eval_matrix(x));
    }

    #[test]
    fn rank_plus_meet_is_three(x in sym(), y in sym()) {
        prop_assert_eq!((x + y).rank() + intersection_dim(&plane_of_sym(x), &plane_of_sym(y)), 3);
    }

    #[test]
    fn inverse_is_two_sided(bits in 0u16..512) {
        let m = Mat3::from_bits(bits);
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m * inv, Mat3::IDENTITY);
                prop_assert_eq!(inv * m, Mat3::IDENTITY);
            }
            Err(_) => prop_assert_eq!(m.rank() < 3, true),
        }
    }

    #[test]
    fn collinearity_is_symmetric(x in point_of_s(), y in point_of_s()) {
        prop_assert_eq!(collinear_matrices(x, y).unwrap(), collinear_matrices(y, x).unwrap());
    }

    #[test]
    fn translation_shifts_plane(x in sym()) {
        let t = Collineation::translation();
        prop_assert_eq!(t.apply(&plane_of_sym(x)).unwrap(), plane_of_sym(x + SymMat3::IDENTITY));
    }

    #[test]
    fn rho_permutes_domain(i in 0usize..7) {
        for g in [Group::G, Group::H] {
            let u = g.elements()[i];
            let domain: BTreeSet<SymMat3> = g.domain().into_iter().collect();
            let image: BTreeSet<SymMat3> = domain.iter().map(|&x| rho(u, x)).collect();
            prop_assert_eq!(&image, &domain);
            prop_assert!(image.iter().all(|&y| classify(y).unwrap() != g.class()));
        }
    }
}

#[test]
fn gq_s_lines_are_collinear_triples() {
    let gq = build_gq_s();
    let atlas = Atlas::global();
    for l in &gq.lines {
        for &a in l {
            for &b in l {
                let (x, y) = (atlas.by_label(&gq.points[a]).unwrap(), atlas.by_label(&gq.points[b]).unwrap());
                assert!(collinear_matrices(x, y).unwrap());
            }
        }
    }
}
