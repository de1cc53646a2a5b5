//! The weak Hopf algebra `W` of a Hopf category built from a group `G`
//! acting on a Hopf algebra `U`: basis `x ⊗ (A, g)` over the arrows of
//! `Γ(G)`, compared with `U #_T kΓ(G)`.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{group_algebra, verify_algebra_map, verify_morphism, AlgebraData, CoalgebraData, HopfData, MorphismData, MorphismKind};
use crate::hpar::groupoid::GroupoidGamma;
use crate::hpar::presentation::ParPresentation;
use crate::hpar::weak::{verify_weak_hopf, WeakHopfData};
use crate::linalg::{axpy, kron_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::report::Report;
use crate::smash::examples::group_action_twist;
use crate::smash::lifted::lift_twist_t;
use crate::smash::twist::check_twist;

/// `G` acting on `U` by Hopf automorphisms, `action[g] = g ▷ −`.
fn check_action(u: &HopfData, g: &Group, action: &[Matrix]) -> Result<()> {
    if action.len() != g.order() {
        return Err(Error::DimensionMismatch("one matrix per group element expected".into()));
    }
    for (x, a) in action.iter().enumerate() {
        if !a.is_invertible() || !verify_morphism(a, u, u, MorphismKind::Hopf)?.all_pass() {
            return Err(Error::Precondition(format!(
                "{} does not act by a Hopf automorphism",
                g.labels()[x]
            )));
        }
    }
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if action[g.mul(a, b)] != action[a].compose(&action[b]) {
                return Err(Error::Precondition("action is not a group homomorphism".into()));
            }
        }
    }
    Ok(())
}

/// `W` with product `(x, (A, g))(x', (A', g')) = (x (g ▷ x'), (A', g g'))`
/// when `A = g'A'` and zero otherwise, `Δ(x ⊗ γ) = (x_(1) ⊗ γ) ⊗ (x_(2) ⊗ γ)`,
/// `ε(x ⊗ γ) = ε(x)` and antipode `S(x ⊗ (A, g)) = (g⁻¹ ▷ S x) ⊗ (gA, g⁻¹)`.
/// The report records whether the undressed `S(x) ⊗ γ⁻¹` also satisfies
/// the weak antipode axioms.
pub fn hopf_category_weak_hopf(u: &HopfData, g: &Group, action: &[Matrix]) -> Result<(WeakHopfData, Report)> {
    check_action(u, g, action)?;
    let f = u.field();
    let gamma = GroupoidGamma::new(g)?;
    let (m, k) = (u.dim(), gamma.len());
    let dim = m * k;
    let arrows = gamma.arrows().to_vec();
    let mut unit = zero_vec(f, dim);
    for i in gamma.identities() {
        axpy(&mut unit, &f.one(), &kron_vec(&u.one(), &unit_vec(f, k, i)));
    }
    let algebra = AlgebraData::from_products(f, dim, unit, |p, q| {
        let (x, a) = (p / k, p % k);
        let (y, b) = (q / k, q % k);
        let mut v = zero_vec(f, dim);
        if let Some(c) = gamma.compose(a, b) {
            let moved = action[arrows[a].1].column(y);
            let xy = u.mul(&u.basis(x), &moved);
            for (z, coef) in xy.iter().enumerate() {
                if !coef.is_zero() {
                    v[z * k + c] = coef.clone();
                }
            }
        }
        v
    });
    let counit: Vector = (0..dim).map(|p| u.coalgebra().counit()[p / k].clone()).collect();
    let coalgebra = CoalgebraData::from_coproducts(f, dim, counit, |p| {
        let (x, a) = (p / k, p % k);
        let mut v = zero_vec(f, dim * dim);
        for (i, j, c) in u.coproduct_terms(x) {
            v[(i * k + a) * dim + j * k + a] = c;
        }
        v
    });
    let antipode_with = |dressed: bool| -> Matrix {
        let cols: Vec<Vector> = (0..dim)
            .map(|p| {
                let (x, a) = (p / k, p % k);
                let gi = g.inv(arrows[a].1);
                let sx = u.s(&u.basis(x));
                let img = if dressed { action[gi].apply(&sx) } else { sx };
                kron_vec(&img, &unit_vec(f, k, gamma.inverse(a)))
            })
            .collect();
        Matrix::from_columns(f, dim, &cols)
    };
    let labels: Vec<String> = (0..dim)
        .map(|p| format!("{}⊗{}", u.label_of(p / k), gamma.arrow_label(p % k)))
        .collect();
    let w = WeakHopfData::new(labels.clone(), algebra.clone(), coalgebra.clone(), antipode_with(true))?;
    let mut rep = Report::new("weak-model");
    rep.absorb("weak", verify_weak_hopf(&w));
    let literal = WeakHopfData::new(labels, algebra, coalgebra, antipode_with(false))?;
    rep.value("undressed-antipode", "weak-axioms", verify_weak_hopf(&literal).all_pass());
    rep.value("dims", "w", dim);
    Ok((w, rep))
}

/// The identity on the basis `x ⊗ γ`, checked to be an algebra isomorphism
/// `W → U #_T kΓ(G)` with `T` lifted from `g ⊗ u ↦ (g ▷ u) ⊗ g` on the
/// groupoid presentation of `k_par G`.
pub fn weak_model_iso(u: &HopfData, g: &Group, action: &[Matrix], w: &WeakHopfData) -> Result<(MorphismData, Report)> {
    let f = u.field();
    let kg = group_algebra(g, f);
    let mut twist = group_action_twist(&kg, u, action)?;
    let mut rep = Report::new("weak-model-iso");
    rep.absorb("twist", check_twist(&mut twist));
    let gamma = GroupoidGamma::new(g)?;
    let p = ParPresentation::from_groupoid(&kg, &gamma)?;
    let (t, lrep) = lift_twist_t(&twist, &p)?;
    rep.absorb("lift", lrep);
    let b = t.smash_algebra();
    if b.dim() != w.algebra().dim() {
        return Err(Error::DimensionMismatch("W and U #_T kΓ(G) differ in dimension".into()));
    }
    let id = Matrix::identity(f, b.dim());
    rep.absorb("forward", verify_algebra_map(w.algebra(), &b, &id)?);
    rep.absorb("backward", verify_algebra_map(&b, w.algebra(), &id)?);
    rep.value("dims", "u-t-kgamma", b.dim());
    Ok((MorphismData::new("x⊗γ ↦ x #_T γ", id), rep))
}
