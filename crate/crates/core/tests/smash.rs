use hopfpar::catalog::{v4, v4_swap, v4_swap_matrices, v4_swap_twist};
use hopfpar::group::Group;
use hopfpar::hopf::{dual_group_algebra, group_algebra, sweedler_h4, verify_hopf, AlgebraData, HopfData};
use hopfpar::hpar::{truncated_apar, truncated_hpar, GroupoidGamma, ParPresentation};
use hopfpar::linalg::{unit_vec, zero_vec, Vector};
use hopfpar::partial::PartialRep;
use hopfpar::smash::*;
use hopfpar::{Error, FieldSpec, Matrix};

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

fn checked(mut t: TwistMap) -> TwistMap {
    let r = check_twist(&mut t);
    assert!(r.all_pass(), "{r}");
    t
}

/// `R(h ⊗ u) = u ⊗ h` as an explicit permutation, independent of the
/// library's flip helper.
fn flip_oracle(f: FieldSpec, n: usize, m: usize) -> Matrix {
    let cols: Vec<Vector> = (0..n * m).map(|c| unit_vec(f, m * n, (c % m) * n + c / m)).collect();
    Matrix::from_columns(f, m * n, &cols)
}

#[test]
fn flip_smash_is_the_tensor_product() {
    let k = group_algebra(&Group::cyclic(2), q());
    let t = checked(TwistMap::flip(k.clone(), k.clone()));
    assert_eq!(t.map(), &flip_oracle(q(), 2, 2));
    assert!(t.flags().unwrap().all());
    let (s, rep) = build_smash(&t).unwrap();
    assert!(rep.all_pass(), "{rep}");
    // (u ⊗ h)(u' ⊗ h') = uu' ⊗ hh', i.e. the group law of C2 × C2 at index 2u + h.
    let g = v4();
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(s.algebra().basis_product_vec(a, b), unit_vec(q(), 4, g.mul(a, b)));
        }
    }
    let (_, rep) = derive_actions(&t).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn zero_map_is_not_normal() {
    let k = group_algebra(&Group::cyclic(2), q());
    let mut t = TwistMap::from_fn(k.clone(), k, |_, _| zero_vec(q(), 4)).unwrap();
    let rep = check_twist(&mut t);
    let flags = t.flags().unwrap();
    assert!(!flags.left_normal && !flags.right_normal && !flags.invertible);
    let it = rep.get("left-normal").unwrap();
    assert!(!it.witness.is_empty());
    assert!(build_smash(&t).is_err() || !build_smash(&t).unwrap().1.all_pass());
}

/// Brute-force factorization `l m = m' l'` in `G`.
fn factor_oracle(g: &Group, m: &[usize], l: &[usize], x: usize) -> (usize, usize) {
    let mut hits = vec![];
    for (i, &a) in m.iter().enumerate() {
        for (j, &b) in l.iter().enumerate() {
            if g.mul(a, b) == x {
                hits.push((i, j));
            }
        }
    }
    assert_eq!(hits.len(), 1, "not an exact factorization at {x}");
    hits[0]
}

#[test]
fn s3_factorization_twist_matches_brute_force() {
    let g = Group::s3();
    let (m, l) = ([0, 1, 2], [0, 3]);
    let (fact, rep) = exact_factorization_twist(&g, &m, &l, q()).unwrap();
    assert!(rep.all_pass(), "{rep}");
    let t = fact.twist();
    assert!(t.flags().unwrap().all());
    for (i, &li) in l.iter().enumerate() {
        for (j, &mj) in m.iter().enumerate() {
            let (mp, lp) = factor_oracle(&g, &m, &l, g.mul(li, mj));
            assert_eq!(t.apply_basis(i, j), unit_vec(q(), 6, mp * 2 + lp), "R({li} ⊗ {mj})");
        }
    }
    let (iso, rep) = fact.multiplication_iso().unwrap();
    assert!(rep.all_pass(), "{rep}");
    for (j, &mj) in m.iter().enumerate() {
        for (i, &li) in l.iter().enumerate() {
            assert_eq!(iso.map.column(j * 2 + i), unit_vec(q(), 6, g.mul(mj, li)));
        }
    }
    let (_, rep) = derive_actions(t).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

/// Arrows `(A, g)` of `Γ_M(G)` counted directly on subsets of `G/M`.
fn gamma_m_count(g: &Group, m: &[usize]) -> usize {
    let coset_of = |x: usize| {
        let mut c: Vec<usize> = m.iter().map(|&y| g.mul(x, y)).collect();
        c.sort();
        c
    };
    let mut cosets: Vec<Vec<usize>> = (0..g.order()).map(coset_of).collect();
    cosets.sort();
    cosets.dedup();
    let k = cosets.len();
    let pos = |x: usize| cosets.iter().position(|c| *c == coset_of(x)).unwrap();
    let mut count = 0;
    for mask in 0u32..(1 << k) {
        for x in 0..g.order() {
            if mask & (1 << pos(g.identity())) != 0 && mask & (1 << pos(g.inv(x))) != 0 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn theta_is_an_isomorphism_onto_nine_arrows() {
    let g = Group::s3();
    assert_eq!(gamma_m_count(&g, &[0, 1, 2]), 9);
    let (fact, _) = exact_factorization_twist(&g, &[0, 1, 2], &[0, 3], q()).unwrap();
    let (gm, theta, rep) = gamma_m_theta(&fact).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(gm.len(), 9);
    assert_eq!(theta.map.rows(), 9);
    assert!(theta.map.is_invertible());
}

#[test]
fn non_exact_factorization_is_rejected() {
    let g = Group::cyclic(4);
    match exact_factorization_twist(&g, &[0, 2], &[0, 2], q()) {
        Err(Error::Precondition(msg)) | Err(Error::Verification(msg)) => {
            assert!(msg.contains("not an exact factorization"), "{msg}")
        }
        other => panic!("expected rejection, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn module_algebra_twist_inverse_has_closed_form() {
    // C2 acting on kC3* by inversion: g ▷ p_x = p_{-x}.
    let h = group_algebra(&Group::cyclic(2), q());
    let u = dual_group_algebra(&Group::cyclic(3), q());
    let mut action = Matrix::zeros(q(), 3, 6);
    for gi in 0..2 {
        for x in 0..3 {
            let y = if gi == 0 { x } else { (3 - x) % 3 };
            action.set(y, gi * 3 + x, q().one());
        }
    }
    let t = checked(TwistMap::module_algebra(h, u, &action).unwrap());
    let (inv, rep) = invert_twist(&t).unwrap();
    assert!(rep.all_pass(), "{rep}");
    // R'(p_x ⊗ g) = g ⊗ (g⁻¹ ▷ p_x); here g⁻¹ = g.
    for x in 0..3 {
        for gi in 0..2 {
            let y = if gi == 0 { x } else { (3 - x) % 3 };
            assert_eq!(inv.map().column(x * 2 + gi), unit_vec(q(), 6, gi * 3 + y));
        }
    }
    assert_eq!(Some(inv.map()), t.inverse());
}

#[test]
fn drinfeld_double_of_kc2_is_the_flip() {
    let h = group_algebra(&Group::cyclic(2), q());
    let (t, s, rep) = drinfeld_twist(&h).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(s.dim(), 4);
    assert_eq!(t.map(), &flip_oracle(q(), 2, 2));
}

#[test]
fn drinfeld_double_of_s3_matches_conjugation() {
    // R(g ⊗ p_x) = p_{g x g⁻¹} ⊗ g for D(kG).
    let g = Group::s3();
    let h = group_algebra(&g, q());
    let (t, s, rep) = drinfeld_twist(&h).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(s.dim(), 36);
    for a in 0..6 {
        for x in 0..6 {
            let y = g.mul(g.mul(a, x), g.inv(a));
            assert_eq!(t.apply_basis(a, x), unit_vec(q(), 36, y * 6 + a));
        }
    }
}

#[test]
fn drinfeld_double_of_sweedler() {
    let h = sweedler_h4(q()).unwrap();
    let (t, s, rep) = drinfeld_twist(&h).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(s.dim(), 16);
    assert!(t.flags().unwrap().all());
    assert_ne!(t.map(), &flip_oracle(q(), 4, 4));
    assert!(verify_hopf(s.hopf().unwrap()).all_pass());
    let (_, rep) = derive_actions(&t).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

fn swap_instance() -> (TwistMap, SmashAlgebra) {
    let t = checked(v4_swap_twist(f2()).unwrap());
    let (s, rep) = build_smash(&t).unwrap();
    assert!(rep.all_pass(), "{rep}");
    (t, s)
}

#[test]
fn swap_instance_par_is_twelve_dimensional() {
    let (t, s) = swap_instance();
    assert_eq!(s.dim(), 8);
    let ucert = truncated_hpar(t.u_side(), 4).unwrap();
    assert!(certify_no_partiality(t.u_side(), &ucert).unwrap().all_pass());
    let sp = truncated_hpar(s.hopf().unwrap(), 4).unwrap();
    assert!(sp.is_stabilized());
    assert_eq!(sp.dim(), 4 * 3);
    let p = ParPresentation::from_groupoid(t.h_side(), &GroupoidGamma::new(&Group::cyclic(2)).unwrap()).unwrap();
    let (lt, rep) = lift_twist_t(&t, &p).unwrap();
    assert!(rep.all_pass(), "{rep}");
    let (fwd, back, rep) = par_of_smash_iso(&ucert, &s, &sp, &lt).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert!(fwd.map.compose(&back.map).is_identity());
}

#[test]
fn lifted_twist_in_the_group_case_moves_arrows_past_u() {
    // T((A, g) ⊗ u) = (g ▷ u) ⊗ (A, g).
    let (t, _) = swap_instance();
    let gamma = GroupoidGamma::new(&Group::cyclic(2)).unwrap();
    let p = ParPresentation::from_groupoid(t.h_side(), &gamma).unwrap();
    let (lt, _) = lift_twist_t(&t, &p).unwrap();
    let perm = v4_swap();
    let k = gamma.len();
    for (i, &(_, g)) in gamma.arrows().iter().enumerate() {
        for x in 0..4 {
            assert_eq!(lt.map().column(i * 4 + x), unit_vec(f2(), 4 * k, perm[g][x] * k + i));
        }
    }
}

#[test]
fn trivial_action_iso_has_dimension_six() {
    let kf = group_algebra(&Group::cyclic(2), f2());
    let u = dual_group_algebra(&Group::cyclic(2), f2());
    let id = vec![Matrix::identity(f2(), 2); 2];
    let t = checked(group_action_twist(&kf, &u, &id).unwrap());
    let (s, _) = build_smash(&t).unwrap();
    let ucert = truncated_hpar(&u, 4).unwrap();
    let sp = truncated_hpar(s.hopf().unwrap(), 6).unwrap();
    assert_eq!(sp.dim(), 6);
    let p = ParPresentation::from_groupoid(&kf, &GroupoidGamma::new(&Group::cyclic(2)).unwrap()).unwrap();
    let (lt, _) = lift_twist_t(&t, &p).unwrap();
    let (_, _, rep) = par_of_smash_iso(&ucert, &s, &sp, &lt).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn calr_of_the_flip_is_the_flip() {
    let k = group_algebra(&Group::cyclic(2), q());
    let t = checked(TwistMap::flip(k.clone(), k.clone()));
    let p = ParPresentation::from_groupoid(&k, &GroupoidGamma::new(&Group::cyclic(2)).unwrap()).unwrap();
    let (lt, rep) = lift_twist_calr(&t, &p, &p).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(lt.map(), &flip_oracle(q(), 3, 3));
}

#[test]
fn calr_for_the_s3_factorization_is_well_defined() {
    let g = Group::s3();
    let (fact, _) = exact_factorization_twist(&g, &[0, 1, 2], &[0, 3], q()).unwrap();
    let t = fact.twist();
    let pl = ParPresentation::from_groupoid(t.h_side(), &GroupoidGamma::new(&g.subgroup(&[0, 3]).unwrap()).unwrap()).unwrap();
    let pm = ParPresentation::from_groupoid(t.u_side(), &GroupoidGamma::new(&g.subgroup(&[0, 1, 2]).unwrap()).unwrap()).unwrap();
    let (lt, rep) = lift_twist_calr(t, &pl, &pm).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(lt.map().rows(), 3 * 8);
    assert!(lt.map().is_invertible());
}

fn to_vec(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn graded_setup() -> (Group, Group, Vec<Matrix>) {
    let grading = (0..4)
        .map(|x| {
            let mut p = Matrix::zeros(f2(), 4, 4);
            p.set(x, x, f2().one());
            p
        })
        .collect();
    (Group::cyclic(2), v4(), grading)
}

fn eta(columns: [Matrix; 2]) -> PartialRep {
    let kf = group_algebra(&Group::cyclic(2), f2());
    let map = Matrix::from_columns(f2(), 16, &[to_vec(&columns[0]), to_vec(&columns[1])]);
    PartialRep::new(kf, AlgebraData::matrix_algebra(f2(), 4), map).unwrap()
}

#[test]
fn graded_partial_module_from_rank_one_rep() {
    let (fg, gg, grading) = graded_setup();
    let rep = eta([Matrix::identity(f2(), 4), Matrix::zeros(f2(), 4, 4)]);
    let (r, sigma) = graded_partial_compat(&rep, &fg, &gg, &v4_swap(), &grading).unwrap();
    assert!(r.all_pass(), "{r}");
    assert_eq!(r.get_value("dims", "algebra"), Some("12"));
    assert_eq!(sigma.unwrap().cols(), 12);
}

#[test]
fn misaligned_grading_fails_compatibility() {
    let (fg, gg, grading) = graded_setup();
    let swap = v4_swap_matrices(f2()).pop().unwrap();
    let rep = eta([Matrix::identity(f2(), 4), swap.clone()]);
    let (r, _) = graded_partial_compat(&rep, &fg, &gg, &v4_swap(), &grading).unwrap();
    assert!(r.all_pass(), "{r}");
    let trivial = vec![(0..4).collect(), (0..4).collect()];
    let (r, sigma) = graded_partial_compat(&rep, &fg, &gg, &trivial, &grading).unwrap();
    let it = r.get("compatibility").unwrap();
    assert!(!r.all_pass() && sigma.is_none());
    assert!(it.witness.starts_with("(g, "), "{}", it.witness);
}

#[test]
fn weak_model_has_dimension_twelve_and_needs_the_dressed_antipode() {
    let u = dual_group_algebra(&v4(), f2());
    let c2 = Group::cyclic(2);
    let act = v4_swap_matrices(f2());
    let (w, rep) = hopf_category_weak_hopf(&u, &c2, &act).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(w.dim(), 12);
    assert_eq!(rep.get_value("undressed-antipode", "weak-axioms"), Some("false"));
    let (_, rep) = weak_model_iso(&u, &c2, &act, &w).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn weak_model_of_trivial_u_is_the_groupoid_algebra() {
    let u = group_algebra(&Group::trivial(), q());
    let g = v4();
    let act = vec![Matrix::identity(q(), 1); 4];
    let (w, rep) = hopf_category_weak_hopf(&u, &g, &act).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(w.dim(), 20);
}

#[test]
fn base_algebras_of_the_swap_instance_agree() {
    let (t, s) = swap_instance();
    let sp = truncated_hpar(s.hopf().unwrap(), 4).unwrap();
    let p = ParPresentation::from_groupoid(t.h_side(), &GroupoidGamma::new(&Group::cyclic(2)).unwrap()).unwrap();
    let (lt, _) = lift_twist_t(&t, &p).unwrap();
    let ucert = truncated_hpar(t.u_side(), 4).unwrap();
    let (fwd, _, _) = par_of_smash_iso(&ucert, &s, &sp, &lt).unwrap();
    let a_s = truncated_apar(s.hopf().unwrap(), 4).unwrap();
    let a_h = truncated_apar(t.h_side(), 4).unwrap();
    assert_eq!((a_s.dim(), a_h.dim()), (2, 2));
    let ctx = ElementwiseContext { smash: &s, smash_par: &sp, lifted: &lt, forward: &fwd };
    let rep = base_algebra_isos(&t, &a_s, &a_h, Some(ctx)).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn base_algebra_iso_fails_when_u_has_partiality() {
    // kC2 has partial representations that are not global, so the
    // isomorphism A_par(U #_R H) ≅ A_par(H) is not expected.
    let k: HopfData = group_algebra(&Group::cyclic(2), q());
    let t = checked(TwistMap::flip(k.clone(), k.clone()));
    let (s, _) = build_smash(&t).unwrap();
    let a_s = truncated_apar(s.hopf().unwrap(), 6).unwrap();
    let a_h = truncated_apar(&k, 4).unwrap();
    assert_eq!((a_s.dim(), a_h.dim()), (8, 2));
    match base_algebra_isos(&t, &a_s, &a_h, None) {
        Ok(rep) => assert!(!rep.all_pass(), "{rep}"),
        Err(e) => assert!(matches!(e, Error::DimensionMismatch(_) | Error::Precondition(_)), "{e}"),
    }
}
