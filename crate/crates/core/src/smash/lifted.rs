//! The lifted twists `𝓡 : H_par ⊗ U_par → U_par ⊗ H_par` and
//! `T : H_par ⊗ U → U ⊗ H_par`, obtained by braiding letters one at a
//! time, and the isomorphisms they induce.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{verify_algebra, verify_algebra_map, AlgebraData, HopfData, MorphismData};
use crate::hpar::presentation::ParPresentation;
use crate::hpar::truncation::{ParKind, TruncatedQuotient};
use crate::hpar::words::Poly;
use crate::linalg::{axpy, is_zero_vec, kron_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::report::Report;
use crate::smash::twist::{algebra_twist_report, derive_actions, index_labels, twisted_tensor_algebra, SmashAlgebra, TwistMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    /// `H_par ⊗ U → U ⊗ H_par`.
    T,
    /// `H_par ⊗ U_par → U_par ⊗ H_par`.
    CalR,
}

#[derive(Clone, Debug)]
pub struct LiftedTwist {
    kind: LiftKind,
    base: TwistMap,
    h_par: ParPresentation,
    u_par: ParPresentation,
    /// Column `x dim U_par + y` for basis `x` of `H_par` and `y` of `U_par`.
    map: Matrix,
}

impl LiftedTwist {
    pub fn kind(&self) -> LiftKind {
        self.kind
    }

    pub fn base(&self) -> &TwistMap {
        &self.base
    }

    pub fn h_par(&self) -> &ParPresentation {
        &self.h_par
    }

    pub fn u_par(&self) -> &ParPresentation {
        &self.u_par
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// `U_par #_𝓡 H_par`, basis `u dim H_par + x`.
    pub fn smash_algebra(&self) -> AlgebraData {
        twisted_tensor_algebra(self.u_par.algebra(), self.h_par.algebra(), &self.map)
    }
}

/// Braids the `U` word through the `H` word, `u_1` first, each `u_i`
/// moving through the current `H` letters from right to left; the result
/// is evaluated in `U_par ⊗ H_par`.
fn braid_words(r: &TwistMap, hpar: &ParPresentation, upar: &ParPresentation, hw: &[usize], uw: &[usize]) -> Vector {
    let f = r.field();
    let m = r.u_side().dim();
    let n = r.h_side().dim();
    let hgens = hpar.generators();
    let ugens = upar.generators();
    let cols: Vec<Vec<(usize, Scalar)>> = (0..n * m).map(|c| r.map().column_entries(c)).collect();
    let mut state: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
    state.insert(hw.to_vec(), upar.algebra().unit().clone());
    for &u in uw {
        let mut next: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
        for (word, uvec) in &state {
            // (current U letter, new H letters right to left) → coefficient
            let mut sub: BTreeMap<(usize, Vec<usize>), Scalar> = BTreeMap::new();
            sub.insert((u, Vec::new()), f.one());
            for &h in word.iter().rev() {
                let mut nsub: BTreeMap<(usize, Vec<usize>), Scalar> = BTreeMap::new();
                for ((uc, letters), c) in &sub {
                    for (idx, coef) in &cols[h * m + uc] {
                        let mut l = letters.clone();
                        l.push(idx % n);
                        let e = nsub.entry((idx / n, l)).or_insert_with(|| f.zero());
                        *e = &*e + &(c * coef);
                    }
                }
                nsub.retain(|_, c| !c.is_zero());
                sub = nsub;
            }
            for ((a, mut letters), c) in sub {
                letters.reverse();
                let prod = upar.algebra().mul(uvec, &ugens[a]);
                let e = next.entry(letters).or_insert_with(|| zero_vec(f, upar.dim()));
                axpy(e, &c, &prod);
            }
        }
        next.retain(|_, v| !is_zero_vec(v));
        state = next;
    }
    let mut out = zero_vec(f, upar.dim() * hpar.dim());
    for (word, uvec) in state {
        let hv = hpar.algebra().mul_all(word.iter().map(|&h| &hgens[h]));
        axpy(&mut out, &f.one(), &kron_vec(&uvec, &hv));
    }
    out
}

fn braid_polys(r: &TwistMap, hpar: &ParPresentation, upar: &ParPresentation, hp: &Poly, up: &Poly) -> Vector {
    let f = r.field();
    let mut out = zero_vec(f, upar.dim() * hpar.dim());
    for (hw, hc) in hp.terms() {
        let hl: Vec<usize> = hw.letters().collect();
        for (uw, uc) in up.terms() {
            let ul: Vec<usize> = uw.letters().collect();
            axpy(&mut out, &(hc * uc), &braid_words(r, hpar, upar, &hl, &ul));
        }
    }
    out
}

fn letter(f: crate::field::FieldSpec, i: usize) -> Poly {
    Poly::monomial(crate::hpar::words::Word::letter(i), f.one())
}

fn lift(r: &TwistMap, hpar: &ParPresentation, upar: &ParPresentation, kind: LiftKind) -> Result<(LiftedTwist, Report)> {
    if hpar.kind() != ParKind::Hpar || upar.kind() != ParKind::Hpar {
        return Err(Error::Precondition("lifting needs H_par presentations".into()));
    }
    if hpar.base() != r.h_side() || upar.base() != r.u_side() {
        return Err(Error::Precondition("presentations do not match the twist sides".into()));
    }
    if !r.flags().map(|fl| fl.structural()).unwrap_or(false) {
        return Err(Error::Precondition("twist is not verified normal and multiplicative".into()));
    }
    let f = r.field();
    let (n, m) = (r.h_side().dim(), r.u_side().dim());
    let mut rep = Report::new(match kind {
        LiftKind::T => "lifted-T",
        LiftKind::CalR => "lifted-calR",
    });
    for (i, rel) in hpar.relations().iter().enumerate() {
        for u in 0..m {
            if !is_zero_vec(&braid_polys(r, hpar, upar, rel, &letter(f, u))) {
                return Err(Error::Verification(format!(
                    "H relation {i} ⊗ {} has a nonzero image",
                    r.u_side().label_of(u)
                )));
            }
        }
    }
    rep.value("h-relations", "count", hpar.relations().len());
    for (j, rel) in upar.relations().iter().enumerate() {
        for h in 0..n {
            if !is_zero_vec(&braid_polys(r, hpar, upar, &letter(f, h), rel)) {
                return Err(Error::Verification(format!(
                    "{} ⊗ U relation {j} has a nonzero image",
                    r.h_side().label_of(h)
                )));
            }
        }
    }
    rep.value("u-relations", "count", upar.relations().len());
    let (p, q) = (hpar.dim(), upar.dim());
    let cols: Vec<Vector> = (0..p * q)
        .map(|c| braid_polys(r, hpar, upar, hpar.basis_expr(c / q), upar.basis_expr(c % q)))
        .collect();
    let map = Matrix::from_columns(f, q * p, &cols);
    let hl = index_labels("x", p);
    let ul = index_labels("y", q);
    rep.absorb("flags", algebra_twist_report(hpar.algebra(), upar.algebra(), &map, &hl, &ul));
    rep.value("dims", "domain", p * q);
    Ok((
        LiftedTwist {
            kind,
            base: r.clone(),
            h_par: hpar.clone(),
            u_par: upar.clone(),
            map,
        },
        rep,
    ))
}

/// `T([h_1]⋯[h_n] ⊗ u) = u^{R_1⋯R_n} ⊗ [h_1^{R_n}]⋯[h_n^{R_1}]`, certified
/// well defined by the vanishing of every relation image.
pub fn lift_twist_t(r: &TwistMap, hpar: &ParPresentation) -> Result<(LiftedTwist, Report)> {
    lift(r, hpar, &ParPresentation::global(r.u_side()), LiftKind::T)
}

/// `𝓡` on bracketed words on both sides.
pub fn lift_twist_calr(r: &TwistMap, hpar: &ParPresentation, upar: &ParPresentation) -> Result<(LiftedTwist, Report)> {
    lift(r, hpar, upar, LiftKind::CalR)
}

/// `U_par = U`: the truncation is stabilized at `dim U` with an invertible
/// bracket.
pub fn certify_no_partiality(u: &HopfData, t: &TruncatedQuotient) -> Result<Report> {
    let mut rep = Report::new("no-partiality");
    if t.base() != u || t.kind() != ParKind::Hpar {
        return Err(Error::Precondition("certificate is not an H_par truncation of U".into()));
    }
    rep.check_bool("stabilized", t.is_stabilized(), "truncation not stabilized");
    rep.check_bool(
        "dimension",
        t.is_stabilized() && t.dim() == u.dim(),
        format!("dim {} ≠ {}", t.dim(), u.dim()),
    );
    rep.check_bool(
        "bracket-invertible",
        t.is_stabilized() && t.bracket_matrix().is_invertible(),
        "bracket not invertible",
    );
    Ok(rep)
}

/// `[u # h] ↦ u #_T [h]` and `u #_T [h_1]⋯[h_n] ↦ [u # h_1][1 # h_2]⋯[1 # h_n]`
/// between `(U #_R H)_par` and `U #_T H_par`, checked to be mutually
/// inverse algebra maps.
pub fn par_of_smash_iso(
    u_certificate: &TruncatedQuotient,
    smash: &SmashAlgebra,
    smash_par: &TruncatedQuotient,
    t: &LiftedTwist,
) -> Result<(MorphismData, MorphismData, Report)> {
    let r = smash.twist();
    let u = r.u_side();
    let cert = certify_no_partiality(u, u_certificate)?;
    if !cert.all_pass() {
        return Err(Error::Precondition("U_par = U is not certified".into()));
    }
    let Some(sh) = smash.hopf() else {
        return Err(Error::Precondition("smash product has no Hopf structure".into()));
    };
    if smash_par.base() != sh || smash_par.kind() != ParKind::Hpar {
        return Err(Error::Precondition("truncation is not of the smash product".into()));
    }
    let Some(sp) = smash_par.algebra() else {
        return Err(Error::Precondition("smash truncation is not stabilized".into()));
    };
    if t.kind() != LiftKind::T || t.base().map() != r.map() {
        return Err(Error::Precondition("lifted twist does not come from this twist".into()));
    }
    let f = r.field();
    let (n, m) = (r.h_side().dim(), u.dim());
    let hpar = t.h_par();
    let p = hpar.dim();
    let b = t.smash_algebra();
    let mut rep = Report::new("par-of-smash");
    rep.absorb("certificate", cert);

    let hgens = hpar.generators();
    let fgens: Vec<Vector> = (0..m * n).map(|x| kron_vec(&unit_vec(f, m, x / n), &hgens[x % n])).collect();
    let fwd_cols: Vec<Vector> = (0..smash_par.dim())
        .map(|i| b.mul_all(smash_par.word_generators(i).iter().map(|&x| &fgens[x])))
        .collect();
    let fwd = Matrix::from_columns(f, b.dim(), &fwd_cols);

    let sbr = smash_par.bracket_matrix();
    let br = |v: &Vector| sbr.apply(v);
    let one_h = r.h_side().one();
    let one_u = u.one();
    let back_cols: Vec<Vector> = (0..m * p)
        .map(|c| {
            let (uu, x) = (c / p, c % p);
            let eu = unit_vec(f, m, uu);
            let mut v = zero_vec(f, sp.dim());
            for (w, coef) in hpar.basis_expr(x).terms() {
                let letters: Vec<usize> = w.letters().collect();
                let img = match letters.split_first() {
                    None => br(&kron_vec(&eu, &one_h)),
                    Some((&h1, rest)) => {
                        let mut acc = br(&kron_vec(&eu, &unit_vec(f, n, h1)));
                        for &h in rest {
                            acc = sp.mul(&acc, &br(&kron_vec(&one_u, &unit_vec(f, n, h))));
                        }
                        acc
                    }
                };
                axpy(&mut v, coef, &img);
            }
            v
        })
        .collect();
    let back = Matrix::from_columns(f, sp.dim(), &back_cols);

    rep.value("dims", "smash-par", sp.dim());
    rep.value("dims", "u-t-hpar", b.dim());
    rep.absorb("u-t-hpar", verify_algebra(&b));
    rep.absorb("forward", verify_algebra_map(sp, &b, &fwd)?);
    rep.absorb("backward", verify_algebra_map(&b, sp, &back)?);
    let square = sp.dim() == b.dim();
    rep.check_bool(
        "backward-forward",
        square && back.compose(&fwd).is_identity(),
        "backward ∘ forward ≠ id",
    );
    rep.check_bool(
        "forward-backward",
        square && fwd.compose(&back).is_identity(),
        "forward ∘ backward ≠ id",
    );
    Ok((
        MorphismData::new("[u#h] ↦ u#[h]", fwd),
        MorphismData::new("u#[h1..hn] ↦ [u#h1][1#h2]..[1#hn]", back),
        rep,
    ))
}

/// `ε_h = Σ [h_(1)][S h_(2)]` (or `ε̃_h = Σ [S h_(1)][h_(2)]` when `tilde`)
/// inside an algebra with bracket `br : H → A`, one column per basis of `H`.
pub fn epsilon_columns(h: &HopfData, alg: &AlgebraData, br: &Matrix, tilde: bool) -> Matrix {
    let f = h.field();
    let cols: Vec<Vector> = (0..h.dim())
        .map(|k| {
            let mut v = zero_vec(f, alg.dim());
            for (i, j, c) in h.coproduct_terms(k) {
                let (x, y) = (br.column(i), br.apply(&h.s(&h.basis(j))));
                let prod = if tilde {
                    alg.mul(&br.apply(&h.s(&h.basis(i))), &br.column(j))
                } else {
                    alg.mul(&x, &y)
                };
                axpy(&mut v, &c, &prod);
            }
            v
        })
        .collect();
    Matrix::from_columns(f, alg.dim(), &cols)
}

/// Data for the elementwise identities inside `U #_T H_par`.
pub struct ElementwiseContext<'a> {
    pub smash: &'a SmashAlgebra,
    pub smash_par: &'a TruncatedQuotient,
    pub lifted: &'a LiftedTwist,
    pub forward: &'a MorphismData,
}

/// `α : ε_{u#h} ↦ ε_{u◮h}` and `α' : ε_h ↦ ε_{1#h}` between the `A_par`
/// truncations, checked as mutually inverse algebra maps; with a context,
/// also `ε_{u#h} ↦ 1 # ε_{u◮h}` and `ε̃_{u#h} ↦ ε(u) 1 # ε̃_h` under the
/// forward isomorphism, and the matching generated subalgebras.
pub fn base_algebra_isos(
    r: &TwistMap,
    apar_smash: &TruncatedQuotient,
    apar_h: &TruncatedQuotient,
    ctx: Option<ElementwiseContext<'_>>,
) -> Result<Report> {
    let (acts, _) = derive_actions(r)?;
    let Some(black_r) = acts.black_r else {
        return Err(Error::Precondition("twist is not invertible".into()));
    };
    let (Some(a_s), Some(a_h)) = (apar_smash.algebra(), apar_h.algebra()) else {
        return Err(Error::Precondition("A_par truncations are not stabilized".into()));
    };
    if apar_smash.kind() != ParKind::Apar || apar_h.kind() != ParKind::Apar || apar_h.base() != r.h_side() {
        return Err(Error::Precondition("expected A_par truncations of U #_R H and H".into()));
    }
    let f = r.field();
    let (n, m) = (r.h_side().dim(), r.u_side().dim());
    let mut rep = Report::new("base-algebras");
    rep.value("dims", "apar-smash", a_s.dim());
    rep.value("dims", "apar-h", a_h.dim());
    let hbr = apar_h.bracket_matrix();
    let sbr = apar_smash.bracket_matrix();
    let alpha_gens: Vec<Vector> = (0..m * n).map(|x| hbr.apply(&black_r.column(x))).collect();
    let alpha_cols: Vec<Vector> = (0..a_s.dim())
        .map(|i| a_h.mul_all(apar_smash.word_generators(i).iter().map(|&x| &alpha_gens[x])))
        .collect();
    let alpha = Matrix::from_columns(f, a_h.dim(), &alpha_cols);
    let one_u = r.u_side().one();
    let alpha_p_gens: Vec<Vector> = (0..n).map(|h| sbr.apply(&kron_vec(&one_u, &unit_vec(f, n, h)))).collect();
    let alpha_p_cols: Vec<Vector> = (0..a_h.dim())
        .map(|i| a_s.mul_all(apar_h.word_generators(i).iter().map(|&x| &alpha_p_gens[x])))
        .collect();
    let alpha_p = Matrix::from_columns(f, a_s.dim(), &alpha_p_cols);
    rep.absorb("alpha", verify_algebra_map(a_s, a_h, &alpha)?);
    rep.absorb("alpha-prime", verify_algebra_map(a_h, a_s, &alpha_p)?);
    let square = a_s.dim() == a_h.dim();
    rep.check_bool(
        "alpha-prime-alpha",
        square && alpha_p.compose(&alpha).is_identity(),
        format!("not inverse (dims {} and {})", a_s.dim(), a_h.dim()),
    );
    rep.check_bool(
        "alpha-alpha-prime",
        square && alpha.compose(&alpha_p).is_identity(),
        format!("not inverse (dims {} and {})", a_s.dim(), a_h.dim()),
    );

    if let Some(ctx) = ctx {
        let sh = ctx
            .smash
            .hopf()
            .ok_or_else(|| Error::Precondition("smash product has no Hopf structure".into()))?;
        let sp = ctx
            .smash_par
            .algebra()
            .ok_or_else(|| Error::Precondition("smash truncation is not stabilized".into()))?;
        let hpar = ctx.lifted.h_par();
        let b = ctx.lifted.smash_algebra();
        let fwd = &ctx.forward.map;
        let spbr = ctx.smash_par.bracket_matrix();
        let eps_s = epsilon_columns(sh, sp, &spbr, false);
        let eps_st = epsilon_columns(sh, sp, &spbr, true);
        let eps_h = epsilon_columns(r.h_side(), hpar.algebra(), hpar.bracket(), false);
        let eps_ht = epsilon_columns(r.h_side(), hpar.algebra(), hpar.bracket(), true);
        let one_hat = |v: &Vector| kron_vec(&one_u, v);
        let bad = (0..m * n).find(|&x| fwd.apply(&eps_s.column(x)) != one_hat(&eps_h.apply(&black_r.column(x))));
        rep.check("epsilon-identity", bad.map(|x| sh.label_of(x).to_string()));
        let bad = (0..m * n).find(|&x| {
            let c = r.u_side().counit_of(&unit_vec(f, m, x / n));
            let rhs: Vector = one_hat(&eps_ht.column(x % n)).iter().map(|y| &c * y).collect();
            fwd.apply(&eps_st.column(x)) != rhs
        });
        rep.check("epsilon-tilde-identity", bad.map(|x| sh.label_of(x).to_string()));
        let gen_s: Vec<Vector> = (0..m * n).map(|x| fwd.apply(&eps_s.column(x))).collect();
        let gen_h: Vec<Vector> = (0..n).map(|h| one_hat(&eps_h.column(h))).collect();
        let (a1, a2) = (b.generated_subalgebra(&gen_s), b.generated_subalgebra(&gen_h));
        rep.check_bool("apar-images-agree", a1 == a2, "generated subalgebras differ");
        rep.value("apar-images-agree", "dim", a1.dim());
        let gen_st: Vec<Vector> = (0..m * n).map(|x| fwd.apply(&eps_st.column(x))).collect();
        let gen_ht: Vec<Vector> = (0..n).map(|h| one_hat(&eps_ht.column(h))).collect();
        let (t1, t2) = (b.generated_subalgebra(&gen_st), b.generated_subalgebra(&gen_ht));
        rep.check_bool("apar-tilde-images-agree", t1 == t2, "generated subalgebras differ");
        rep.value("apar-tilde-images-agree", "dim", t1.dim());
    }
    Ok(rep)
}
