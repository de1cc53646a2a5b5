use hopfpar::group::Group;
use hopfpar::hopf::{dual_group_algebra, group_algebra, sweedler_h4, verify_algebra_map, HopfData};
use hopfpar::hpar::*;
use hopfpar::partial::check_pr_axioms;
use hopfpar::FieldSpec;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

/// Degree at which the truncation of `kG` is known to plateau.
fn degree_for(order: usize) -> usize {
    match order {
        0..=2 => 4,
        3..=4 => 6,
        _ => 8,
    }
}

/// Arrows `(A, g)` with `1, g⁻¹ ∈ A`, listed by walking subsets as bool
/// vectors.
fn arrow_oracle(g: &Group) -> u64 {
    let n = g.order();
    let mut count = 0;
    for code in 0u32..(1 << n) {
        let a: Vec<bool> = (0..n).map(|i| code >> i & 1 == 1).collect();
        if !a[g.identity()] {
            continue;
        }
        count += (0..n).filter(|&x| a[g.inv(x)]).count() as u64;
    }
    count
}

#[test]
fn groupoid_count_law_for_all_groups_up_to_order_eight() {
    for (name, g) in Group::all_up_to_order_8() {
        let oracle = arrow_oracle(&g);
        assert_eq!(gamma_count_closed_form(g.order()), oracle, "{name}");
        assert_eq!(gamma_count_brute_force(&g), oracle, "{name}");
        let gamma = GroupoidGamma::new(&g).unwrap();
        assert_eq!(gamma.len() as u64, oracle, "{name}");
        assert!(gamma.verify().all_pass(), "{name}");
    }
}

#[test]
fn groupoid_composition_follows_the_translation_rule() {
    let g = Group::s3();
    let gamma = GroupoidGamma::new(&g).unwrap();
    let arrows = gamma.arrows().to_vec();
    for (i, &(a, x)) in arrows.iter().enumerate() {
        for (j, &(b, y)) in arrows.iter().enumerate() {
            // (A, x)(B, y) = (B, xy) exactly when A = yB
            let expected = (a == g.translate_mask(y, b)).then(|| gamma.index_of(b, g.mul(x, y)).unwrap());
            assert_eq!(gamma.compose(i, j), expected);
        }
        let inv = gamma.inverse(i);
        assert!(gamma.compose(i, inv).is_some() && gamma.compose(inv, i).is_some());
    }
}

#[test]
fn groupoid_algebras_are_weak_hopf() {
    for g in [Group::trivial(), Group::cyclic(2), Group::cyclic(2).product(&Group::cyclic(2))] {
        let gamma = GroupoidGamma::new(&g).unwrap();
        let (w, r) = verified_groupoid_algebra(&gamma, q());
        assert!(r.all_pass(), "{r}");
        assert_eq!(w.dim() as u64, gamma_count_closed_form(g.order()));
    }
}

#[test]
fn kc2_hpar_has_basis_one_g_g_squared() {
    let h = group_algebra(&Group::cyclic(2), q());
    let t = truncated_hpar(&h, 4).unwrap();
    assert!(t.is_stabilized());
    assert_eq!(t.dim(), 3);
    let gens: Vec<Vec<usize>> = (0..3).map(|i| t.word_generators(i)).collect();
    assert_eq!(gens, vec![vec![], vec![1], vec![1, 1]]);
    let gamma = GroupoidGamma::new(&Group::cyclic(2)).unwrap();
    let (_, _, r) = iso_kparg(&gamma, &t).unwrap();
    assert!(r.all_pass(), "{r}");
}

#[test]
fn group_algebra_hpar_matches_the_groupoid_up_to_order_six() {
    for (name, g) in Group::all_up_to_order_8().into_iter().filter(|(_, g)| g.order() <= 6) {
        let h = group_algebra(&g, q());
        let t = truncated_hpar(&h, degree_for(g.order())).unwrap();
        assert!(t.is_stabilized(), "{name}: {:?}", t.dims_by_degree());
        assert_eq!(t.dim() as u64, arrow_oracle(&g), "{name}");
        let gamma = GroupoidGamma::new(&g).unwrap();
        let (_, _, r) = iso_kparg(&gamma, &t).unwrap();
        assert!(r.all_pass(), "{name}: {r}");
        let v = verify_truncation(&t).unwrap();
        assert!(v.all_pass(), "{name}: {v}");
    }
}

#[test]
fn group_algebra_apar_counts_idempotent_arrows() {
    for g in [Group::trivial(), Group::cyclic(2), Group::cyclic(3), Group::cyclic(2).product(&Group::cyclic(2))] {
        let h = group_algebra(&g, q());
        let a = truncated_apar(&h, degree_for(g.order())).unwrap();
        assert!(a.is_stabilized());
        assert_eq!(a.dim(), 1 << (g.order() - 1));
    }
}

#[test]
fn sweedler_apar_keeps_growing() {
    let h = sweedler_h4(q()).unwrap();
    let dims: Vec<usize> = (2..=6).map(|d| truncated_apar(&h, d).unwrap().dim()).collect();
    assert!(dims.windows(2).all(|w| w[0] < w[1]), "{dims:?}");
    let t = truncated_apar(&h, 6).unwrap();
    assert!(!t.is_stabilized());
    assert!(!stabilization_report(&t).get_value("stabilized", "stabilized").unwrap().parse::<bool>().unwrap());
}

#[test]
fn sweedler_epsilon_g_is_idempotent() {
    // with x = ε_g / 2 this is 2x² = x
    let h = sweedler_h4(q()).unwrap();
    let t = truncated_apar(&h, 4).unwrap();
    let eg = t.letters().image(1).clone();
    let sq = eg.mul(&eg);
    assert_eq!(t.coordinates(&sq).unwrap(), t.coordinates(&eg).unwrap());
    let half = q().fraction(1, 2).unwrap();
    let x = eg.scale(&half);
    let two_x_sq = x.mul(&x).scale(&q().from_i64(2));
    assert_eq!(t.coordinates(&two_x_sq).unwrap(), t.coordinates(&x).unwrap());
}

#[test]
fn truncation_dimensions_are_monotone() {
    let cases: Vec<HopfData> = vec![sweedler_h4(q()).unwrap(), group_algebra(&Group::cyclic(3), q())];
    for h in &cases {
        for kind in [ParKind::Hpar, ParKind::Apar] {
            let build = |d| match kind {
                ParKind::Hpar => truncated_hpar(h, d).unwrap(),
                ParKind::Apar => truncated_apar(h, d).unwrap(),
            };
            let ts: Vec<TruncatedQuotient> = (2..=5).map(build).collect();
            for t in &ts {
                assert!(t.dims_by_degree().windows(2).all(|w| w[0] <= w[1]));
            }
            for w in ts.windows(2) {
                for l in 0..=w[0].degree() {
                    assert!(w[1].dims_by_degree()[l] <= w[0].dims_by_degree()[l]);
                }
            }
        }
    }
}

#[test]
fn connected_case_is_global() {
    let f2 = FieldSpec::prime(2).unwrap();
    for g in [Group::cyclic(2), Group::cyclic(2).product(&Group::cyclic(2))] {
        let h = dual_group_algebra(&g, f2);
        let t = truncated_hpar(&h, 4).unwrap();
        assert!(t.is_stabilized());
        assert_eq!(t.dim(), h.dim());
        let br = t.bracket_matrix();
        assert!(br.is_invertible());
        let alg = t.algebra().unwrap();
        assert!(verify_algebra_map(h.algebra(), alg, &br).unwrap().all_pass());
        let p = ParPresentation::global(&h);
        assert!(p.verify().unwrap().all_pass());
    }
}

#[test]
fn trivial_hopf_algebra_is_immediately_stable() {
    let h = group_algebra(&Group::trivial(), q());
    let t = truncated_hpar(&h, 1).unwrap();
    assert_eq!(t.dim(), 1);
    let gamma = GroupoidGamma::new(&Group::trivial()).unwrap();
    assert_eq!(gamma.len(), 1);
    let t = truncated_hpar(&h, 3).unwrap();
    assert!(t.is_stabilized());
    let (fwd, _, r) = iso_kparg(&gamma, &t).unwrap();
    assert!(r.all_pass());
    assert!(fwd.map.is_identity());
}

#[test]
fn brackets_of_stabilized_quotients_are_partial_representations() {
    let f2 = FieldSpec::prime(2).unwrap();
    for h in [group_algebra(&Group::cyclic(3), q()), dual_group_algebra(&Group::cyclic(2), f2)] {
        let t = truncated_hpar(&h, 6).unwrap();
        let alg = t.algebra().unwrap();
        let br = t.bracket_matrix();
        assert!(check_pr_axioms(&h, alg, &br).unwrap().all_pass());
        assert!(t.forgetful_map().compose(&br).is_identity());
    }
}

#[test]
fn presentations_from_both_routes_verify() {
    let g = Group::cyclic(2).product(&Group::cyclic(2));
    let h = group_algebra(&g, q());
    let t = truncated_hpar(&h, 6).unwrap();
    let a = ParPresentation::from_truncation(&t).unwrap();
    let gamma = GroupoidGamma::new(&g).unwrap();
    let b = ParPresentation::from_groupoid(&h, &gamma).unwrap();
    assert_eq!(a.dim(), 20);
    assert_eq!(b.dim(), 20);
    assert!(a.verify().unwrap().all_pass());
    assert!(b.verify().unwrap().all_pass());
    let wrong = group_algebra(&Group::cyclic(4), q());
    assert!(ParPresentation::from_groupoid(&wrong, &gamma).is_err());
}

#[test]
fn partial_action_and_smash_recover_hpar() {
    for (g, d) in [(Group::cyclic(2), 4), (Group::cyclic(2).product(&Group::cyclic(2)), 6)] {
        let h = group_algebra(&g, q());
        let hp = truncated_hpar(&h, d).unwrap();
        let ap = truncated_apar(&h, d).unwrap();
        let (action, r) = partial_action_on_apar(&ap, &hp).unwrap();
        assert!(r.all_pass(), "{r}");
        let (smash, r) = partial_smash(ap.algebra().unwrap(), &h, &action).unwrap();
        assert!(r.all_pass(), "{r}");
        assert_eq!(smash.algebra.dim(), hp.dim());
        let (_, _, r) = smash_hpar_iso(&smash, &ap, &hp).unwrap();
        assert!(r.all_pass(), "{r}");
    }
}

#[test]
fn unstable_truncations_are_rejected_where_a_finite_algebra_is_needed() {
    let h = sweedler_h4(q()).unwrap();
    let hp = truncated_hpar(&h, 3).unwrap();
    let ap = truncated_apar(&h, 3).unwrap();
    assert!(partial_action_on_apar(&ap, &hp).is_err());
    assert!(ParPresentation::from_truncation(&hp).is_err());
    assert!(truncated_hpar(&h, 0).is_err());
}
