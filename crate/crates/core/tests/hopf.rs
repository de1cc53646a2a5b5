use hopfpar::group::Group;
use hopfpar::hopf::*;
use hopfpar::linalg::{kron_vec, unit_vec, vec_add, vec_sub, zero_vec, Vector};
use hopfpar::{Error, FieldSpec, Matrix, Scalar};

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn same_structure(a: &HopfData, b: &HopfData) -> bool {
    a.algebra().mult_matrix() == b.algebra().mult_matrix()
        && a.algebra().unit() == b.algebra().unit()
        && a.coalgebra().comult() == b.coalgebra().comult()
        && a.coalgebra().counit() == b.coalgebra().counit()
        && a.antipode() == b.antipode()
}

/// Every vector of `F_p^n`, for brute-force kernels.
fn all_vectors(f: FieldSpec, n: usize) -> Vec<Vector> {
    let p = f.characteristic() as usize;
    (0..p.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    f.from_i64(d as i64)
                })
                .collect()
        })
        .collect()
}

fn is_primitive(h: &HopfData, v: &[Scalar]) -> bool {
    let one = h.one();
    let rhs = vec_add(&kron_vec(v, &one), &kron_vec(&one, v));
    h.coproduct(v) == rhs
}

#[test]
fn constructed_examples_satisfy_the_axioms() {
    let f3 = FieldSpec::prime(3).unwrap();
    let mut all = vec![
        group_algebra(&Group::trivial(), q()),
        group_algebra(&Group::cyclic(2), q()),
        group_algebra(&Group::s3(), q()),
        group_algebra(&Group::quaternion(), f3),
        dual_group_algebra(&Group::s3(), q()),
        dual_group_algebra(&Group::cyclic(2), FieldSpec::prime(2).unwrap()),
        sweedler_h4(q()).unwrap(),
        sweedler_h4(f3).unwrap(),
    ];
    let h4 = sweedler_h4(q()).unwrap();
    all.push(dual_hopf(&h4));
    all.push(opposite(&h4).unwrap());
    all.push(co_opposite(&h4).unwrap());
    all.push(tensor_bialgebra(&h4, &group_algebra(&Group::cyclic(2), q())));
    for h in &all {
        let r = verify_hopf(h);
        assert!(r.all_pass(), "{r}");
    }
}

#[test]
fn sweedler_needs_odd_characteristic() {
    assert!(matches!(sweedler_h4(FieldSpec::prime(2).unwrap()), Err(Error::InvalidField(_))));
}

#[test]
fn zero_antipode_fails_at_g() {
    let k = group_algebra(&Group::cyclic(2), q());
    let broken = HopfData::new(
        k.labels().to_vec(),
        k.algebra().clone(),
        k.coalgebra().clone(),
        Matrix::zeros(q(), 2, 2),
    )
    .unwrap();
    let r = verify_antipode(&broken);
    let left = r.get("antipode-left").unwrap();
    assert!(!r.all_pass());
    // S = 0 gives 0 where ε(h) 1 is expected, so every basis element fails
    assert!(left.witness.split(", ").any(|w| w == "g"), "{}", left.witness);
    assert!(verify_bialgebra(&broken).all_pass());
}

#[test]
fn mismatched_components_are_rejected() {
    let k2 = group_algebra(&Group::cyclic(2), q());
    let k3 = group_algebra(&Group::cyclic(3), q());
    let r = HopfData::new(k2.labels().to_vec(), k2.algebra().clone(), k3.coalgebra().clone(), Matrix::identity(q(), 2));
    assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    assert!(Group::new(vec![vec![0, 1], vec![0, 1]]).is_err());
}

#[test]
fn group_algebra_antipode_is_inversion() {
    let g = Group::s3();
    let h = group_algebra(&g, q());
    assert_eq!(h.dim(), 6);
    for x in 0..6 {
        assert_eq!(h.s(&h.basis(x)), unit_vec(q(), 6, g.inv(x)));
    }
    assert!(h.antipode().pow(2).is_identity());
    assert_eq!(group_algebra(&Group::trivial(), q()).dim(), 1);
    assert_eq!(dual_group_algebra(&Group::trivial(), q()).dim(), 1);
}

#[test]
fn dual_group_algebra_coproduct_in_characteristic_two() {
    let f2 = FieldSpec::prime(2).unwrap();
    let h = dual_group_algebra(&Group::cyclic(2), f2);
    let e = |i| unit_vec(f2, 2, i);
    let expected = vec_add(&kron_vec(&e(0), &e(0)), &kron_vec(&e(1), &e(1)));
    assert_eq!(h.coproduct(&e(0)), expected);
}

#[test]
fn double_dual_is_the_original() {
    let f3 = FieldSpec::prime(3).unwrap();
    for h in [
        group_algebra(&Group::s3(), q()),
        dual_group_algebra(&Group::cyclic(3), q()),
        sweedler_h4(q()).unwrap(),
        sweedler_h4(f3).unwrap(),
    ] {
        let dd = dual_hopf(&dual_hopf(&h));
        assert!(same_structure(&h, &dd));
    }
}

#[test]
fn dual_of_kc2_is_kc2_in_characteristic_zero() {
    let k = group_algebra(&Group::cyclic(2), q());
    let d = dual_hopf(&k);
    // 1 ↦ p_1 + p_g, g ↦ p_1 − p_g
    let phi = Matrix::from_i64(q(), &[&[1, 1], &[1, -1]]);
    let r = verify_morphism(&phi, &k, &d, MorphismKind::Hopf).unwrap();
    assert!(r.all_pass(), "{r}");
    assert!(phi.is_invertible());
    // in characteristic two the dual is connected and no such iso exists
    let f2 = FieldSpec::prime(2).unwrap();
    let (k2, d2) = (group_algebra(&Group::cyclic(2), f2), dual_group_algebra(&Group::cyclic(2), f2));
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for e in 0..2 {
                    let m = Matrix::from_i64(f2, &[&[a, b], &[c, e]]);
                    if m.is_invertible() {
                        assert!(!verify_morphism(&m, &k2, &d2, MorphismKind::Hopf).unwrap().all_pass());
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_of_kc2_with_itself_is_the_klein_group_algebra() {
    let c2 = Group::cyclic(2);
    let k = group_algebra(&c2, q());
    let t = tensor_bialgebra(&k, &k);
    let v4 = group_algebra(&c2.product(&c2), q());
    // both index (a, b) at 2a + b
    let r = verify_morphism(&Matrix::identity(q(), 4), &t, &v4, MorphismKind::Hopf).unwrap();
    assert!(r.all_pass(), "{r}");
}

#[test]
fn sweedler_squared_antipode_has_order_two() {
    let h = sweedler_h4(q()).unwrap();
    let s = h.antipode();
    assert!(!s.pow(2).is_identity());
    assert!(s.pow(4).is_identity());
    // S²(x) = −x by direct evaluation: S(x) = −gx, S(gx) = x
    let x = h.basis(2);
    assert_eq!(h.s(&h.s(&x)), vec_sub(&zero_vec(q(), 4), &x));
}

#[test]
fn sweedler_relations_hold() {
    let h = sweedler_h4(q()).unwrap();
    let (one, g, x, gx) = (h.basis(0), h.basis(1), h.basis(2), h.basis(3));
    assert_eq!(h.mul(&g, &g), one);
    assert!(h.mul(&x, &x).iter().all(|c| c.is_zero()));
    assert_eq!(h.mul(&g, &x), gx);
    assert_eq!(vec_add(&h.mul(&x, &g), &h.mul(&g, &x)), zero_vec(q(), 4));
}

#[test]
fn primitives_match_brute_force() {
    let f2 = FieldSpec::prime(2).unwrap();
    let f3 = FieldSpec::prime(3).unwrap();
    for h in [
        dual_group_algebra(&Group::cyclic(2), f2),
        dual_group_algebra(&Group::cyclic(2).product(&Group::cyclic(2)), f2),
        group_algebra(&Group::cyclic(3), f3),
        sweedler_h4(f3).unwrap(),
    ] {
        let p = h.field().characteristic() as usize;
        let count = all_vectors(h.field(), h.dim()).iter().filter(|v| is_primitive(&h, v)).count();
        let prim = primitives(&h);
        assert_eq!(p.pow(prim.dim() as u32), count);
        assert!(prim.basis_vectors().iter().all(|v| is_primitive(&h, v)));
    }
    // finite-dimensional in characteristic zero: no nonzero primitives
    assert_eq!(primitives(&group_algebra(&Group::s3(), q())).dim(), 0);
    assert_eq!(primitives(&sweedler_h4(q()).unwrap()).dim(), 0);
    // over F_2, p_g is primitive in kC2*
    let h = dual_group_algebra(&Group::cyclic(2), f2);
    assert!(primitives(&h).contains(&unit_vec(f2, 2, 1)));
}

#[test]
fn morphism_checks() {
    let h = sweedler_h4(q()).unwrap();
    let id = Matrix::identity(q(), 4);
    assert!(verify_morphism(&id, &h, &h, MorphismKind::Hopf).unwrap().all_pass());
    // S is an anti-algebra map; on H4 it is not multiplicative
    let r = verify_morphism(h.antipode(), &h, &h, MorphismKind::Algebra).unwrap();
    assert!(!r.all_pass());
    // ε as a map onto the trivial Hopf algebra
    let k = group_algebra(&Group::trivial(), q());
    let eps = Matrix::row_vector(q(), h.coalgebra().counit().clone());
    assert!(verify_morphism(&eps, &h, &k, MorphismKind::Hopf).unwrap().all_pass());
    assert!(matches!(
        verify_morphism(&Matrix::identity(q(), 2), &h, &k, MorphismKind::Algebra),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn nonassociative_table_is_reported() {
    // k[t]/(t² − t − 1) is associative
    let f = q();
    let a = AlgebraData::from_products(f, 2, unit_vec(f, 2, 0), |i, j| {
        if i == 1 && j == 1 {
            vec![f.one(), f.one()]
        } else {
            unit_vec(f, 2, i + j)
        }
    });
    assert!(verify_algebra(&a).all_pass());
    let b = AlgebraData::from_products(f, 3, unit_vec(f, 3, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => unit_vec(f, 3, k),
        (1, 2) => unit_vec(f, 3, 1),
        (2, 1) | (1, 1) => unit_vec(f, 3, 2),
        _ => zero_vec(f, 3),
    });
    // (e_1 e_1) e_2 = 0 but e_1 (e_1 e_2) = e_2
    let r = verify_algebra(&b);
    assert!(!r.all_pass(), "{r}");
}
