use hopfpar::catalog::{self, partial_reps};
use hopfpar::coradical::{coordinate_span, coradical_filtration, unit_line};
use hopfpar::group::Group;
use hopfpar::hopf::{group_algebra, sweedler_h4, AlgebraData, HopfData};
use hopfpar::linalg::{axpy, unit_vec, vec_scale, zero_vec};
use hopfpar::partial::*;
use hopfpar::{Error, FieldSpec, Matrix, Subspace};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

/// `kG → k` given by a function `f: G → k`.
fn scalar_map(h: &HopfData, f: &[i64]) -> Matrix {
    Matrix::from_i64(h.field(), &[f])
}

/// PR1 to PR3 for `f: G → k` written out on group elements:
/// `f(x) f(k) f(k⁻¹) = f(xk) f(k⁻¹)` and `f(x) f(x⁻¹) f(k) = f(x) f(x⁻¹k)`.
fn group_pr_oracle(g: &Group, f: &[i64], p: i64) -> bool {
    let m = |a: i64| if p == 0 { a } else { a.rem_euclid(p) };
    let n = g.order();
    if m(f[g.identity()]) != 1 {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|k| {
            let ki = g.inv(k);
            let xi = g.inv(x);
            m(f[x] * f[k] * f[ki]) == m(f[g.mul(x, k)] * f[ki]) && m(f[x] * f[xi] * f[k]) == m(f[x] * f[g.mul(xi, k)])
        })
    })
}

#[test]
fn ex_c2_rank_one_map_is_a_partial_representation() {
    let h = group_algebra(&Group::cyclic(2), q());
    let r = check_pr_axioms(&h, &AlgebraData::ground(q()), &scalar_map(&h, &[1, 0])).unwrap();
    assert!(r.all_pass(), "{r}");
    let rep = PartialRep::new(h.clone(), AlgebraData::ground(q()), scalar_map(&h, &[1, 0])).unwrap();
    assert!(!is_global(&rep));
    assert!(epsilon_pi(&rep, &h.basis(1)).element[0].is_zero());
    assert!(epsilon_pi(&rep, &h.one()).element[0].is_one());
}

#[test]
fn value_two_at_g_breaks_pr2_at_g_g() {
    let h = group_algebra(&Group::cyclic(2), q());
    let r = check_pr_axioms(&h, &AlgebraData::ground(q()), &scalar_map(&h, &[1, 2])).unwrap();
    let pr2 = r.get("PR2").unwrap();
    assert_eq!(pr2.witness, "(g, g)");
    assert!(matches!(
        PartialRep::new(h, AlgebraData::ground(q()), scalar_map(&group_algebra(&Group::cyclic(2), q()), &[1, 2])),
        Err(Error::Verification(_))
    ));
}

#[test]
fn shape_mismatch_is_an_error() {
    let h = group_algebra(&Group::cyclic(2), q());
    assert!(matches!(
        check_pr_axioms(&h, &AlgebraData::ground(q()), &Matrix::identity(q(), 2)),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn scalar_partial_reps_of_small_groups_match_enumeration() {
    for (g, p) in [(Group::cyclic(3), 3i64), (Group::s3(), 3), (Group::cyclic(4), 2)] {
        let f = FieldSpec::prime(p as u64).unwrap();
        let h = group_algebra(&g, f);
        let n = g.order();
        let total = (p as usize).pow(n as u32);
        let mut accepted = 0;
        for mut code in 0..total {
            let vals: Vec<i64> = (0..n)
                .map(|_| {
                    let d = (code % p as usize) as i64;
                    code /= p as usize;
                    d
                })
                .collect();
            let r = check_pr_axioms(&h, &AlgebraData::ground(f), &scalar_map(&h, &vals)).unwrap();
            assert_eq!(r.all_pass(), group_pr_oracle(&g, &vals, p), "{vals:?}");
            accepted += r.all_pass() as usize;
        }
        assert!(accepted >= 2);
    }
}

proptest! {
    #[test]
    fn kc2_scalar_maps_are_partial_iff_t_cubed_is_t(t in -6i64..=6) {
        let h = group_algebra(&Group::cyclic(2), q());
        let r = check_pr_axioms(&h, &AlgebraData::ground(q()), &scalar_map(&h, &[1, t])).unwrap();
        prop_assert_eq!(r.all_pass(), t * t * t == t);
    }

    #[test]
    fn epsilon_is_linear(a in -4i64..4, b in -4i64..4, idx in 0usize..15) {
        let reps = partial_reps().unwrap();
        let rep = &reps[idx % reps.len()].rep;
        let h = rep.source();
        let f = h.field();
        let n = h.dim();
        let (x, y) = (h.basis(0), h.basis(n - 1));
        let mut comb = zero_vec(f, n);
        axpy(&mut comb, &f.from_i64(a), &x);
        axpy(&mut comb, &f.from_i64(b), &y);
        let mut expect = zero_vec(f, rep.target().dim());
        axpy(&mut expect, &f.from_i64(a), &epsilon_pi(rep, &x).element);
        axpy(&mut expect, &f.from_i64(b), &epsilon_pi(rep, &y).element);
        prop_assert_eq!(epsilon_pi(rep, &comb).element, expect);
    }
}

#[test]
fn catalog_reps_satisfy_all_invariants() {
    let reps = partial_reps().unwrap();
    assert!(reps.len() >= 8);
    for c in &reps {
        let rep = &c.rep;
        let h = rep.source();
        let b = rep.target();
        let r = check_pr_axioms(h, b, rep.map()).unwrap();
        assert!(r.all_pass(), "{}: {r}", c.name);
        let filt = coradical_filtration(h.coalgebra()).unwrap();
        let global = is_global(rep);
        assert_eq!(global, c.expected_global, "{}", c.name);
        assert_eq!(coradical_global_test(rep, &filt).unwrap(), global, "{}", c.name);
        assert!(globality_report(rep).all_pass(), "{}", c.name);
        // ε^π_h = ε^π_{h_(1)} ε^π_{h_(2)} on every basis element
        for k in 0..h.dim() {
            let mut rhs = zero_vec(h.field(), b.dim());
            for (i, j, coef) in h.coproduct_terms(k) {
                let prod = b.mul(&epsilon_pi(rep, &h.basis(i)).element, &epsilon_pi(rep, &h.basis(j)).element);
                axpy(&mut rhs, &coef, &prod);
            }
            assert_eq!(epsilon_pi(rep, &h.basis(k)).element, rhs, "{} at {}", c.name, h.label_of(k));
        }
        assert_eq!(&epsilon_pi(rep, &h.one()).element, b.unit());
        if global {
            for k in 0..h.dim() {
                let e = epsilon_pi(rep, &h.basis(k)).element;
                let expected: Vec<_> = b.unit().iter().map(|u| u * &h.counit_of(&h.basis(k))).collect();
                assert_eq!(e, expected);
            }
        }
    }
}

#[test]
fn sweedler_rep_through_the_quotient_is_not_global() {
    let reps = partial_reps().unwrap();
    let c = reps.iter().find(|c| c.name == "sweedler_h4 via kC2 quotient").unwrap();
    assert!(!is_global(&c.rep));
    let h = c.rep.source();
    let g = h.basis(1);
    // ε^π_g = π(g) π(g) = 0 ≠ 1
    assert!(epsilon_pi(&c.rep, &g).element[0].is_zero());
    let filt = coradical_filtration(h.coalgebra()).unwrap();
    assert!(!coradical_global_test(&c.rep, &filt).unwrap());
}

#[test]
fn vw_extension_examples() {
    let h4 = sweedler_h4(q()).unwrap();
    let counit = PartialRep::new(
        h4.clone(),
        AlgebraData::ground(q()),
        Matrix::row_vector(q(), h4.coalgebra().counit().clone()),
    )
    .unwrap();
    let line = unit_line(&h4);
    assert!(line.is_subspace_of(&vw_extension(&counit, &line, &line).unwrap()));
    let full = Subspace::full(q(), 4);
    assert_eq!(vw_extension(&counit, &full, &full).unwrap(), full);
    // triviality on H_0 spreads to all of H
    let h0 = coordinate_span(q(), 4, &[0, 1]);
    assert_eq!(vw_extension(&counit, &h0, &h0).unwrap(), full);

    let kc2 = group_algebra(&Group::cyclic(2), q());
    let ex = PartialRep::new(kc2.clone(), AlgebraData::ground(q()), scalar_map(&kc2, &[1, 0])).unwrap();
    let g = coordinate_span(q(), 2, &[1]);
    assert!(matches!(vw_extension(&ex, &g, &g), Err(Error::Precondition(_))));
    let l = unit_line(&kc2);
    assert_eq!(vw_extension(&ex, &l, &l).unwrap(), l);
}

#[test]
fn cosemisimple_construction_and_its_preconditions() {
    for g in [Group::cyclic(2), Group::cyclic(5), Group::s3(), Group::quaternion()] {
        let h = group_algebra(&g, q());
        let c = coordinate_span(q(), g.order(), &(1..g.order()).collect::<Vec<_>>());
        let rep = cosemisimple_nonglobal_rep(&h, &c).unwrap();
        assert!(!is_global(&rep));
        let mut expected = vec![0i64; g.order()];
        expected[g.identity()] = 1;
        assert_eq!(rep.map(), &scalar_map(&h, &expected));
    }
    let triv = group_algebra(&Group::trivial(), q());
    assert!(cosemisimple_nonglobal_rep(&triv, &Subspace::zero(q(), 1)).is_err());
    let h4 = sweedler_h4(q()).unwrap();
    assert!(cosemisimple_nonglobal_rep(&h4, &coordinate_span(q(), 4, &[1, 2, 3])).is_err());
    let kc2 = group_algebra(&Group::cyclic(2), q());
    assert!(cosemisimple_nonglobal_rep(&kc2, &coordinate_span(q(), 2, &[0])).is_err());
    // span{1 + g} misses the unit but is not a subcoalgebra
    let bad = Subspace::span(q(), 2, vec![vec![q().one(), q().one()]]);
    assert!(cosemisimple_nonglobal_rep(&kc2, &bad).is_err());
}

#[test]
fn restriction_examples() {
    let v4 = Group::cyclic(2).product(&Group::cyclic(2));
    let kv4 = group_algebra(&v4, q());
    let kc2 = group_algebra(&Group::cyclic(2), q());
    let counit = PartialRep::new(kv4.clone(), AlgebraData::ground(q()), scalar_map(&kv4, &[1, 1, 1, 1])).unwrap();
    // g ↦ (g, 1) at index 2
    let incl = Matrix::from_columns(q(), 4, &[unit_vec(q(), 4, 0), unit_vec(q(), 4, 2)]);
    let r = restrict_along(&counit, &incl, &kc2).unwrap();
    assert!(is_global(&r));
    let same = restrict_along(&counit, &Matrix::identity(q(), 4), &kv4).unwrap();
    assert_eq!(same.map(), counit.map());
    // g ↦ 2(g, 1) is not multiplicative
    let not_hopf = Matrix::from_columns(q(), 4, &[unit_vec(q(), 4, 0), vec_scale(&q().from_i64(2), &unit_vec(q(), 4, 2))]);
    assert!(matches!(restrict_along(&counit, &not_hopf, &kc2), Err(Error::Precondition(_))));
}

#[test]
fn partial_action_checks() {
    let h4 = sweedler_h4(q()).unwrap();
    let a = group_algebra(&Group::cyclic(3), q()).algebra().clone();
    let triv = trivial_action(&h4, &a);
    let r = check_partial_action(&h4, &a, &triv).unwrap();
    assert!(r.all_pass(), "{r}");
    assert_eq!(r.get_value("PA4", "symmetric"), Some("true"));
    let doubled = triv.scale(&q().from_i64(2));
    let r = check_partial_action(&h4, &a, &doubled).unwrap();
    assert!(!r.get("PA1").unwrap().witness.is_empty());
    assert!(matches!(
        check_partial_action(&h4, &a, &Matrix::identity(q(), 3)),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn connected_catalog_entries_have_only_global_reps_among_the_catalog() {
    for c in partial_reps().unwrap() {
        let h = c.rep.source();
        if hopfpar::coradical::is_connected(h.coalgebra()).unwrap() {
            assert!(is_global(&c.rep), "{}", c.name);
        }
    }
    assert!(catalog::find("kC2*_char2").is_ok());
}
