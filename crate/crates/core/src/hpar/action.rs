//! The partial action of `H` on `A_par` by `h · a = [h_(1)] a [S(h_(2))]`
//! and the partial smash product `A_par #̲ H ≅ H_par`.

use crate::error::{Error, Result};
use crate::hopf::{verify_algebra, verify_algebra_map, AlgebraData, HopfData, MorphismData};
use crate::hpar::truncation::{ParKind, TruncatedQuotient};
use crate::linalg::{axpy, kron_vec, zero_vec, Matrix, Subspace, Vector};
use crate::partial::check_partial_action;
use crate::report::Report;

/// `ε_h = [h_(1)][S(h_(2))]` inside a stabilized `H_par`, one column per
/// basis element of `H`.
pub fn epsilon_in_hpar(hpar: &TruncatedQuotient) -> Result<Matrix> {
    let alg = hpar_algebra(hpar)?;
    let h = hpar.base();
    let br = hpar.bracket_matrix();
    let cols: Vec<Vector> = (0..h.dim())
        .map(|k| {
            let mut v = zero_vec(h.field(), alg.dim());
            for (i, j, c) in h.coproduct_terms(k) {
                let s = br.apply(&h.s(&h.basis(j)));
                axpy(&mut v, &c, &alg.mul(&br.column(i), &s));
            }
            v
        })
        .collect();
    Ok(Matrix::from_columns(h.field(), alg.dim(), &cols))
}

fn hpar_algebra(t: &TruncatedQuotient) -> Result<&AlgebraData> {
    if t.kind() != ParKind::Hpar {
        return Err(Error::Precondition("expected an H_par truncation".into()));
    }
    t.algebra()
        .ok_or_else(|| Error::Precondition("H_par truncation is not stabilized".into()))
}

fn apar_algebra(t: &TruncatedQuotient) -> Result<&AlgebraData> {
    if t.kind() != ParKind::Apar {
        return Err(Error::Precondition("expected an A_par truncation".into()));
    }
    t.algebra()
        .ok_or_else(|| Error::Precondition("A_par truncation is not stabilized".into()))
}

/// The algebra map `A_par → H_par`, `ε_h ↦ [h_(1)][S(h_(2))]`, certified
/// multiplicative and injective.
pub fn apar_embedding(apar: &TruncatedQuotient, hpar: &TruncatedQuotient) -> Result<(Matrix, Report)> {
    let a = apar_algebra(apar)?;
    let hp = hpar_algebra(hpar)?;
    if apar.base() != hpar.base() {
        return Err(Error::Precondition("A_par and H_par over different Hopf algebras".into()));
    }
    let eps = epsilon_in_hpar(hpar)?;
    let cols: Vec<Vector> = (0..a.dim())
        .map(|i| {
            let gens: Vec<Vector> = apar.word_generators(i).iter().map(|&b| eps.column(b)).collect();
            hp.mul_all(gens.iter())
        })
        .collect();
    let iota = Matrix::from_columns(hp.field(), hp.dim(), &cols);
    let mut r = Report::new("apar-embedding");
    r.absorb("iota", verify_algebra_map(a, hp, &iota)?);
    r.check_bool("injective", iota.rank() == a.dim(), "ι has a kernel");
    Ok((iota, r))
}

/// The action matrix `H ⊗ A_par → A_par` (column `h·dim A + a`) together
/// with the PA1–PA4 report.
pub fn partial_action_on_apar(apar: &TruncatedQuotient, hpar: &TruncatedQuotient) -> Result<(Matrix, Report)> {
    let (iota, mut r) = apar_embedding(apar, hpar)?;
    if !r.all_pass() {
        return Err(Error::Verification("A_par does not embed into H_par".into()));
    }
    let a = apar_algebra(apar)?;
    let hp = hpar_algebra(hpar)?;
    let h = hpar.base();
    let f = h.field();
    let br = hpar.bracket_matrix();
    let mut cols = Vec::with_capacity(h.dim() * a.dim());
    for x in 0..h.dim() {
        let terms = h.coproduct_terms(x);
        for p in 0..a.dim() {
            let ip = iota.column(p);
            let mut v = zero_vec(f, hp.dim());
            for (i, j, c) in &terms {
                let left = hp.mul(&br.column(*i), &ip);
                axpy(&mut v, c, &hp.mul(&left, &br.apply(&h.s(&h.basis(*j)))));
            }
            let pre = iota
                .solve_vec(&v)
                .ok_or_else(|| Error::Verification(format!("{} · a{p} leaves A_par", h.label_of(x))))?;
            cols.push(pre);
        }
    }
    let action = Matrix::from_columns(f, a.dim(), &cols);
    r.absorb("action", check_partial_action(h, a, &action)?);
    Ok((action, r))
}

/// The unital algebra `(A ⊗ H)(1 ⊗ 1)` with basis a subspace of `A ⊗ H`.
#[derive(Clone, Debug)]
pub struct PartialSmash {
    pub algebra: AlgebraData,
    /// Columns are the basis vectors in `A ⊗ H` coordinates (index `a·dim H + h`).
    pub inclusion: Matrix,
    /// `a ⊗ h ↦ a (h_(1) · 1) ⊗ h_(2)`.
    pub projection: Matrix,
}

fn act(action: &Matrix, h: &[crate::field::Scalar], a: &[crate::field::Scalar]) -> Vector {
    action.apply(&kron_vec(h, a))
}

/// `(a ⊗ h)(b ⊗ k) = a (h_(1) · b) ⊗ h_(2) k` on `A ⊗ H`.
fn smash_mul(a: &AlgebraData, h: &HopfData, action: &Matrix, x: &[crate::field::Scalar], y: &[crate::field::Scalar]) -> Vector {
    let (m, n) = (a.dim(), h.dim());
    let f = h.field();
    let mut out = zero_vec(f, m * n);
    for (xi, cx) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (pa, ph) = (xi / n, xi % n);
        for (yi, cy) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (qa, qh) = (yi / n, yi % n);
            let c = cx * cy;
            for (i, j, d) in h.coproduct_terms(ph) {
                let hb = act(action, &h.basis(i), &a.basis(qa));
                let left = a.mul(&a.basis(pa), &hb);
                let right = h.algebra().basis_product_vec(j, qh);
                axpy(&mut out, &(&c * &d), &kron_vec(&left, &right));
            }
        }
    }
    out
}

/// Builds `A #̲ H` for an action satisfying PA1–PA3.
pub fn partial_smash(a: &AlgebraData, h: &HopfData, action: &Matrix) -> Result<(PartialSmash, Report)> {
    let mut r = Report::new("partial-smash");
    let pa = check_partial_action(h, a, action)?;
    let ok = ["PA1", "PA2", "PA3"]
        .iter()
        .all(|id| pa.get(id).is_some_and(|it| it.status != crate::report::CheckStatus::Fail));
    r.absorb("action", pa);
    if !ok {
        return Err(Error::Precondition("action fails PA1–PA3".into()));
    }
    let (m, n) = (a.dim(), h.dim());
    let f = h.field();
    let one_a = a.unit().clone();
    let proj_cols: Vec<Vector> = (0..m * n)
        .map(|xi| {
            let (pa, ph) = (xi / n, xi % n);
            let mut v = zero_vec(f, m * n);
            for (i, j, c) in h.coproduct_terms(ph) {
                let left = a.mul(&a.basis(pa), &act(action, &h.basis(i), &one_a));
                axpy(&mut v, &c, &kron_vec(&left, &h.basis(j)));
            }
            v
        })
        .collect();
    let projection = Matrix::from_columns(f, m * n, &proj_cols);
    let image = Subspace::span(f, m * n, proj_cols.clone());
    let basis = image.basis_vectors();
    let d = basis.len();
    let unit_vec_ah = kron_vec(&one_a, &h.one());
    let unit = image
        .coordinates(&unit_vec_ah)
        .ok_or_else(|| Error::Verification("1 ⊗ 1 not in the smash subspace".into()))?;
    let closed = std::cell::Cell::new(true);
    let algebra = AlgebraData::from_products(f, d, unit, |i, j| {
        let p = smash_mul(a, h, action, &basis[i], &basis[j]);
        image.coordinates(&p).unwrap_or_else(|| {
            closed.set(false);
            zero_vec(f, d)
        })
    });
    if !closed.get() {
        return Err(Error::Verification("smash multiplication leaves (A ⊗ H)(1 ⊗ 1)".into()));
    }
    r.value("dims", "smash", d);
    r.absorb("algebra", verify_algebra(&algebra));
    let inclusion = Matrix::from_columns(f, m * n, &basis);
    Ok((
        PartialSmash {
            algebra,
            inclusion,
            projection,
        },
        r,
    ))
}

/// The isomorphism `H_par → A_par #̲ H`, `[h] ↦ 1 # h`, with its inverse
/// `a # h ↦ ι(a)[h]`, both certified.
pub fn smash_hpar_iso(
    smash: &PartialSmash,
    apar: &TruncatedQuotient,
    hpar: &TruncatedQuotient,
) -> Result<(MorphismData, MorphismData, Report)> {
    let hp = hpar_algebra(hpar)?;
    let (iota, _) = apar_embedding(apar, hpar)?;
    let h = hpar.base();
    let f = h.field();
    let (m, n) = (iota.cols(), h.dim());
    let image = Subspace::span(f, m * n, (0..smash.inclusion.cols()).map(|i| smash.inclusion.column(i)).collect());
    let sm = &smash.algebra;
    let one_a = apar_algebra(apar)?.unit().clone();
    let gen: Vec<Vector> = (0..n)
        .map(|x| {
            let v = smash.projection.apply(&kron_vec(&one_a, &h.basis(x)));
            image.coordinates(&v).expect("projection lands in the image")
        })
        .collect();
    let fwd_cols: Vec<Vector> = (0..hp.dim())
        .map(|i| {
            let imgs: Vec<&Vector> = hpar.word_generators(i).iter().map(|&b| &gen[b]).collect();
            sm.mul_all(imgs)
        })
        .collect();
    let fwd = Matrix::from_columns(f, sm.dim(), &fwd_cols);
    let br = hpar.bracket_matrix();
    let back_cols: Vec<Vector> = (0..sm.dim())
        .map(|s| {
            let v = smash.inclusion.column(s);
            let mut out = zero_vec(f, hp.dim());
            for (idx, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (pa, ph) = (idx / n, idx % n);
                axpy(&mut out, c, &hp.mul(&iota.column(pa), &br.column(ph)));
            }
            out
        })
        .collect();
    let back = Matrix::from_columns(f, hp.dim(), &back_cols);
    let mut r = Report::new("smash-hpar-iso");
    r.value("dims", "hpar", hp.dim());
    r.value("dims", "smash", sm.dim());
    r.absorb("forward", verify_algebra_map(hp, sm, &fwd)?);
    r.absorb("backward", verify_algebra_map(sm, hp, &back)?);
    r.check_bool("back-forward", back.compose(&fwd).is_identity(), "composite ≠ id on H_par");
    r.check_bool("forward-back", fwd.compose(&back).is_identity(), "composite ≠ id on the smash product");
    Ok((
        MorphismData::new("[h] ↦ 1 # h", fwd),
        MorphismData::new("a # h ↦ a[h]", back),
        r,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::group::Group;
    use crate::hopf::group_algebra;
    use crate::hpar::truncation::{truncated_apar, truncated_hpar};

    #[test]
    fn kc2_action_and_smash() {
        let q = FieldSpec::rationals();
        let h = group_algebra(&Group::cyclic(2), q);
        let apar = truncated_apar(&h, 4).unwrap();
        let hpar = truncated_hpar(&h, 4).unwrap();
        let (action, r) = partial_action_on_apar(&apar, &hpar).unwrap();
        assert!(r.all_pass(), "{}", r.render(None));
        let (smash, r) = partial_smash(apar.algebra().unwrap(), &h, &action).unwrap();
        assert!(r.all_pass());
        assert_eq!(smash.algebra.dim(), 3);
        let (_, _, r) = smash_hpar_iso(&smash, &apar, &hpar).unwrap();
        assert!(r.all_pass(), "{}", r.render(None));
    }
}
