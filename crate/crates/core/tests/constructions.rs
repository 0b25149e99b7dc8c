mod common;

use leibrack::group_hopf::{
    adjoint_action, function_dual_check, hopf_ops, ker_eps_inclusion, ker_eps_yd, linearize_augmented,
    permutation_module, rack_q, GroupAlgebraElement,
};
use leibrack::leibniz::{
    abelian, first_order, first_order_yd, heisenberg_voros, hv_rmatrix, nonabelian_2d, sl2, square_extension,
    unital_shelf,
};
use leibrack::lm_env::{
    antipode_t, build_env, check_antipode_t, check_bicomodule, check_bimodule, check_coderivation, f_tilde_checks,
    inv_part, theorem1_bracket, LieObject,
};
use leibrack::rack::{dihedral_quandle, inner_augmentation, trivial_quandle, AugmentedRack, FiniteGroup};
use leibrack::yd::{
    braided_leibniz_from_q, braided_leibniz_unchecked, braiding, check_braided_leibniz, check_q_conditions, check_ybe,
    check_yd, is_involutive, BraidingMatrix,
};
use leibrack::{Error, LeibnizAlgebra, Matrix, Scalar, Vector};

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric(3).unwrap()
}

fn int(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

#[test]
fn group_algebra_ops() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let ops = hopf_ops(&g, 1);
    assert_eq!(ops.antipode, Vector::basis(1));
    assert_eq!(ops.counit, Scalar::one());
    let e = hopf_ops(&g, 0);
    assert_eq!(e.coproduct.coeff(&(0, 0)), Scalar::one());

    let s3 = s3();
    let (a, b) = (s3.index_of("(12)").unwrap(), s3.index_of("(13)").unwrap());
    let c = s3.index_of("(23)").unwrap();
    assert_eq!(
        adjoint_action(&s3, &Vector::basis(a), &Vector::basis(b)),
        Vector::basis(c)
    );
    assert_eq!(
        adjoint_action(&s3, &Vector::basis(a), &Vector::basis(s3.identity())),
        Vector::basis(a)
    );

    let x = GroupAlgebraElement::new(g.clone(), Vector::from_dense(&[int(3), int(-3)])).unwrap();
    assert!(x.counit().is_zero());
    assert!(GroupAlgebraElement::new(g, Vector::basis(5)).is_err());
}

#[test]
fn ker_eps_examples() {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let m = ker_eps_yd(&z2);
    assert_eq!(m.dim(), 1);
    assert_eq!(
        m.coact(&Vector::basis(0)).iter().collect::<Vec<_>>(),
        vec![(&(0, 1), &Scalar::one())]
    );
    assert_eq!(m.act_basis(&Vector::basis(0), 1), Vector::basis(0));
    assert_eq!(braiding(&m).matrix, Matrix::identity(1));

    assert_eq!(ker_eps_yd(&FiniteGroup::trivial()).dim(), 0);
    let m = ker_eps_yd(&s3());
    assert_eq!(m.dim(), 5);
    assert!(check_yd(&m).unwrap().ok());
}

#[test]
fn ker_eps_braided_leibniz_with_inclusion() {
    for g in [FiniteGroup::cyclic(3).unwrap(), s3()] {
        let m = ker_eps_yd(&g);
        let d = braided_leibniz_from_q(&m, &ker_eps_inclusion(&g)).unwrap();
        assert!(check_braided_leibniz(&d).ok);
    }
}

#[test]
fn linearized_racks_are_yd() {
    let g = s3();
    let a = AugmentedRack::conjugation(&g);
    let lin = linearize_augmented(&a).unwrap();
    assert!(lin.morphism_checks());
    assert!(check_yd(&lin.module).unwrap().ok());

    let r3 = inner_augmentation(&dihedral_quandle(3).unwrap()).unwrap();
    let lin = linearize_augmented(&r3).unwrap();
    assert_eq!(lin.module.dim(), 3);
    assert!(check_yd(&lin.module).unwrap().ok());

    let t = AugmentedRack::trivial_action(vec!["a".into(), "b".into()], &g, vec![g.identity(); 2]).unwrap();
    let lin = linearize_augmented(&t).unwrap();
    assert!(lin.module.has_trivial_coaction());
    assert!(check_yd(&lin.module).unwrap().ok());
}

#[test]
fn non_augmented_input_is_rejected() {
    let g = s3();
    let elems = g.elements().to_vec();
    let bad = AugmentedRack::trivial_action(elems, &g, (0..g.order()).collect()).unwrap();
    assert!(matches!(linearize_augmented(&bad), Err(Error::Validation(_))));
}

#[test]
fn rack_bracket_is_x_times_p_minus_one() {
    let g = s3();
    let a = AugmentedRack::conjugation(&g);
    let lin = linearize_augmented(&a).unwrap();
    let q = rack_q(&a);
    let qr = check_q_conditions(&lin.module, &q).unwrap();
    assert!(qr.ok() && qr.adjoint_linear && qr.colinear);
    let d = braided_leibniz_from_q(&lin.module, &q).unwrap();
    for x in 0..g.order() {
        for y in 0..g.order() {
            let expected = &Vector::basis(a.act(x, a.p(y))) - &Vector::basis(x);
            assert_eq!(d.bracket_basis(x, y), expected);
        }
    }
    assert!(check_braided_leibniz(&d).ok);
}

#[test]
fn non_equivariant_p_fails_q_conditions() {
    let g = s3();
    let elems = g.elements().to_vec();
    let bad = AugmentedRack::trivial_action(elems, &g, (0..g.order()).collect()).unwrap();
    let m = permutation_module(&bad);
    let qr = check_q_conditions(&m, &rack_q(&bad)).unwrap();
    assert!(!qr.equivariance);
    assert!(qr.equivariance_witnesses.first().is_some());
    assert!(braided_leibniz_from_q(&m, &rack_q(&bad)).is_err());
}

#[test]
fn flip_braids_even_when_yd_fails() {
    let g = s3();
    let bad = AugmentedRack::trivial_action(g.elements().to_vec(), &g, (0..g.order()).collect()).unwrap();
    let m = permutation_module(&bad);
    assert!(!check_yd(&m).unwrap().ok());
    let t = braiding(&m);
    assert_eq!(t.matrix, BraidingMatrix::flip(g.order()).matrix);
    assert!(check_ybe(&t.matrix).unwrap().ok);
}

#[test]
fn q_outside_ker_eps_is_rejected() {
    let g = s3();
    let lin = linearize_augmented(&AugmentedRack::conjugation(&g)).unwrap();
    let q: Vec<Vector> = (0..g.order()).map(Vector::basis).collect();
    assert!(matches!(check_q_conditions(&lin.module, &q), Err(Error::Validation(_))));
}

#[test]
fn zero_q_gives_zero_bracket() {
    let g = s3();
    let lin = linearize_augmented(&AugmentedRack::conjugation(&g)).unwrap();
    let q = vec![Vector::zero(); g.order()];
    let d = braided_leibniz_from_q(&lin.module, &q).unwrap();
    assert!(d.bracket.is_zero());
}

#[test]
fn dual_check_passes() {
    for g in [FiniteGroup::cyclic(2).unwrap(), s3()] {
        let r = function_dual_check(&AugmentedRack::conjugation(&g));
        assert!(r.p_star_right_colinear && r.p_star_bimodule);
    }
    let g = s3();
    let t = AugmentedRack::trivial_action(vec!["a".into()], &g, vec![g.identity()]).unwrap();
    let r = function_dual_check(&t);
    assert!(r.p_star_right_colinear && r.p_star_bimodule);
}

#[test]
fn scrambled_grading_breaks_yd_and_ybe() {
    // conjugation action on S3 with a grading that is not equivariant
    let g = s3();
    let a = AugmentedRack::conjugation(&g);
    let scrambled: Vec<usize> = (0..g.order()).map(|x| g.mul(x, g.index_of("(12)").unwrap())).collect();
    let bad = a.with_p(scrambled).unwrap();
    let m = permutation_module(&bad);
    let yd = check_yd(&m).unwrap();
    assert!(!yd.ok());
    assert_eq!(yd.ok_eq2, yd.ok_eq3);
    let ybe = check_ybe(&braiding(&m).matrix).unwrap();
    assert!(!ybe.ok);
    assert!(ybe.defect.is_some());
}

#[test]
fn hv_rmatrix_matches_reference() {
    let rows: Vec<&[i64]> = common::HV_RMATRIX.iter().map(|r| r.as_slice()).collect();
    let reference = Matrix::from_i64_rows(&rows).unwrap();
    let t = hv_rmatrix();
    assert_eq!(t.factor_basis, vec!["1", "x", "y", "z"]);
    assert_eq!(t.matrix, reference);
    let row13: Vec<usize> = (0..16)
        .filter(|&j| !t.matrix[(12, j)].is_zero())
        .map(|j| j + 1)
        .collect();
    assert_eq!(row13, vec![4, 6, 7, 10, 11]);
    assert_eq!(t.matrix[(12, 6)], int(-1));
    assert!(!is_involutive(&t.matrix).unwrap());
    assert!(check_ybe(&t.matrix).unwrap().ok);
}

#[test]
fn first_order_examples() {
    let l = heisenberg_voros();
    let fo = first_order(&l).unwrap();
    let m = &fo.module;
    // z is basis 3 of k ⊕ g; δ(z) = z ⊗ 1
    assert_eq!(
        m.coact(&Vector::basis(3)),
        leibrack::linalg::Tensor2::basis((3, m.hopf().unit()))
    );
    // x · x̄ = z
    assert_eq!(m.act(&Vector::basis(1), &fo.q[1]), Vector::basis(3));
    assert!(check_yd(m).unwrap().ok());
    assert_eq!(fo.shelf_table(), unital_shelf(&l).table);
}

#[test]
fn first_order_abelian_braiding_is_flip() {
    let m = first_order_yd(&abelian(2)).unwrap();
    assert_eq!(braiding(&m).matrix, BraidingMatrix::flip(3).matrix);
}

fn fixture_algebras() -> Vec<LeibnizAlgebra> {
    vec![
        heisenberg_voros(),
        abelian(2),
        nonabelian_2d(),
        sl2(),
        square_extension(),
    ]
}

#[test]
fn first_order_bracket_restricts_to_original() {
    for l in fixture_algebras() {
        let fo = first_order(&l).unwrap();
        let table = fo.shelf_table();
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                assert_eq!(table[i + 1][j + 1], l.bracket(i, j).map_keys(|k| k + 1));
            }
        }
    }
}

#[test]
fn first_order_bracket_from_q_is_braided_leibniz() {
    for l in fixture_algebras() {
        let fo = first_order(&l).unwrap();
        let d = braided_leibniz_from_q(&fo.module, &fo.q).unwrap();
        assert!(check_braided_leibniz(&d).ok);
        assert!(check_ybe(&d.tau.matrix).unwrap().ok);
    }
}

#[test]
fn unital_shelf_with_braiding_fails_identity_at_unit() {
    // The identity needs the q-bracket; the unital shelf differs from it on 1 ◁ 1.
    let l = heisenberg_voros();
    let fo = first_order(&l).unwrap();
    let d = leibrack::yd::BraidedLeibnizData::from_table(
        fo.module.labels().to_vec(),
        &unital_shelf(&l).table,
        braiding(&fo.module),
    )
    .unwrap();
    let r = check_braided_leibniz(&d);
    assert!(!r.ok);
    assert_eq!(r.witnesses.first(), Some(&(0, 0, 0)));
}

#[test]
fn env_examples() {
    let obj = LieObject::from_leibniz(&heisenberg_voros()).unwrap();
    let e = build_env(&obj, 2);
    assert_eq!(e.pbw().dim(), 6);
    assert_eq!(e.dim(), 18);
    // φ(1⊗x) = x̄, φ(1⊗z) = 0
    assert_eq!(e.phi(&Vector::basis(e.index(0, 0))), Vector::basis(1));
    assert!(e.phi(&Vector::basis(e.index(0, 2))).is_zero());
    // right coaction of x̄ ⊗ m
    let v = Vector::basis(e.index(1, 1));
    let rho = e.right_coaction(&v);
    let mut expected = leibrack::linalg::Tensor2::basis((e.index(0, 1), 1));
    expected.add_term((e.index(1, 1), 0), Scalar::one());
    assert_eq!(rho, expected);
    // x̄ ⊗ y is not left invariant
    let lam = e.left_coaction(&v);
    assert_ne!(lam, leibrack::linalg::Tensor2::basis((0, e.index(1, 1))));
    assert!(check_bicomodule(&e));
    assert!(check_coderivation(&e).ok);
    assert!(check_bimodule(&e).ok);
    assert!(check_antipode_t(&e).ok);
}

#[test]
fn env_degree_zero() {
    let obj = LieObject::from_leibniz(&heisenberg_voros()).unwrap();
    let e = build_env(&obj, 0);
    assert_eq!(e.dim(), 3);
    let inv = inv_part(&e).unwrap();
    assert_eq!(inv.subspace.dim(), 3);
    for m in 0..3 {
        assert_eq!(antipode_t(&e, m), -&Vector::basis(m));
    }
    assert!(matches!(theorem1_bracket(&e), Err(Error::Validation(_))));
}

#[test]
fn abelian_d1_right_action_truncates() {
    let obj = LieObject::from_leibniz(&abelian(2)).unwrap();
    let e = build_env(&obj, 1);
    let v = Vector::basis(e.index(1, 0));
    // x̄ ⊗ e1 times ē2: the degree-2 term is dropped and e1·ē2 = 0
    assert!(e.right_act_gen(&v, 1).is_zero());
}

#[test]
fn inv_part_is_one_tensor_m() {
    for l in fixture_algebras() {
        let obj = LieObject::from_leibniz(&l).unwrap();
        for d in 1..=3 {
            let e = build_env(&obj, d);
            let inv = inv_part(&e).unwrap();
            assert_eq!(inv.subspace.dim(), l.dim());
            for r in 0..l.dim() {
                assert_eq!(inv.vector(r), Vector::basis(e.index(0, r)));
            }
            assert!(inv.module.has_trivial_coaction());
        }
    }
}

#[test]
fn lemma_checks_and_classical_recovery() {
    for l in fixture_algebras() {
        let obj = LieObject::from_leibniz(&l).unwrap();
        let e = build_env(&obj, 2);
        let r = f_tilde_checks(&e).unwrap();
        assert!(r.ok(), "{:?}", l.labels());
        let d = theorem1_bracket(&e).unwrap();
        assert_eq!(d.tau.matrix, BraidingMatrix::flip(l.dim()).matrix);
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                assert_eq!(&d.bracket_basis(i, j), l.bracket(i, j));
            }
        }
        assert!(check_braided_leibniz(&d).ok);
    }
}

#[test]
fn zero_f_gives_zero_bracket() {
    let obj = LieObject::from_leibniz(&abelian(2)).unwrap();
    let e = build_env(&obj, 2);
    assert!(f_tilde_checks(&e).unwrap().ok());
    assert!(theorem1_bracket(&e).unwrap().bracket.is_zero());
}

#[test]
fn trivial_quandle_bracket_vanishes() {
    let a = inner_augmentation(&trivial_quandle(3)).unwrap();
    let lin = linearize_augmented(&a).unwrap();
    let d = braided_leibniz_unchecked(&lin.module, &rack_q(&a));
    assert!(d.bracket.is_zero());
    assert_eq!(d.tau.matrix, BraidingMatrix::flip(3).matrix);
}
