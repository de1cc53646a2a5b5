//! Partial representations `π: H → B`, the elements `ε^π_h`, globality
//! tests, and partial actions of `H` on algebras.

use crate::coradical::Filtration;
use crate::error::{Error, Result};
use crate::hopf::{verify_morphism, AlgebraData, HopfData, MorphismKind};
use crate::linalg::{axpy, kron_vec, vec_scale, zero_vec, Matrix, Subspace, Vector};
use crate::report::Report;

/// A linear map `π: H → B` that passed the partial representation axioms.
#[derive(Clone, Debug)]
pub struct PartialRep {
    source: HopfData,
    target: AlgebraData,
    map: Matrix,
    verified: Report,
}

/// `ε^π_h = π(h_(1)) π(S(h_(2)))` for a given `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonElement {
    pub h: Vector,
    pub element: Vector,
}

impl PartialRep {
    /// Verifies the axioms and fails with the first broken one.
    pub fn new(source: HopfData, target: AlgebraData, map: Matrix) -> Result<Self> {
        let verified = check_pr_axioms(&source, &target, &map)?;
        if let Some(it) = verified.failures().first() {
            return Err(Error::Verification(format!("{} fails at {}", it.id, it.witness)));
        }
        Ok(PartialRep {
            source,
            target,
            map,
            verified,
        })
    }

    pub fn source(&self) -> &HopfData {
        &self.source
    }

    pub fn target(&self) -> &AlgebraData {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn report(&self) -> &Report {
        &self.verified
    }

    pub fn apply(&self, h: &[crate::field::Scalar]) -> Vector {
        self.map.apply(h)
    }
}

struct Images {
    pi: Vec<Vector>,
    /// `Σ π(k_(1)) π(S k_(2))`
    eps: Vec<Vector>,
    /// `Σ π(S k_(1)) π(k_(2))`
    eps_rev: Vec<Vector>,
}

fn images(h: &HopfData, b: &AlgebraData, map: &Matrix) -> Images {
    let n = h.dim();
    let pi: Vec<Vector> = (0..n).map(|i| map.column(i)).collect();
    let pis: Vec<Vector> = (0..n).map(|i| map.apply(&h.s(&h.basis(i)))).collect();
    let mut eps = Vec::with_capacity(n);
    let mut eps_rev = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = zero_vec(h.field(), b.dim());
        let mut er = zero_vec(h.field(), b.dim());
        for (i, j, c) in h.coproduct_terms(k) {
            axpy(&mut e, &c, &b.mul(&pi[i], &pis[j]));
            axpy(&mut er, &c, &b.mul(&pis[i], &pi[j]));
        }
        eps.push(e);
        eps_rev.push(er);
    }
    Images { pi, eps, eps_rev }
}

/// PR1 to PR5 on all basis pairs, plus the agreement of the two equivalent
/// axiom systems (PR2 ∧ PR3 iff PR4 ∧ PR5).
pub fn check_pr_axioms(source: &HopfData, target: &AlgebraData, map: &Matrix) -> Result<Report> {
    let n = source.dim();
    if map.cols() != n || map.rows() != target.dim() || source.field() != target.field() {
        return Err(Error::DimensionMismatch(format!(
            "partial representation map is {}x{}, expected {}x{}",
            map.rows(),
            map.cols(),
            target.dim(),
            n
        )));
    }
    let h = source;
    let b = target;
    let img = images(h, b, map);
    let lab = |i: usize, j: usize| format!("({}, {})", h.label_of(i), h.label_of(j));
    let mut r = Report::new("partial-representation");
    r.check_bool("PR1", map.apply(&h.one()) == *b.unit(), "π(1) ≠ 1");

    let mut w = [None, None, None, None];
    for x in 0..n {
        for k in 0..n {
            let dk = h.coproduct_terms(k);
            let dx = h.coproduct_terms(x);
            // PR2: π(x) π(k1) π(S k2) = π(x k1) π(S k2)
            if w[0].is_none() {
                let lhs = b.mul(&img.pi[x], &img.eps[k]);
                let mut rhs = zero_vec(h.field(), b.dim());
                for (i, j, c) in &dk {
                    let xk1 = map.apply(&h.algebra().basis_product_vec(x, *i));
                    let sk2 = map.apply(&h.s(&h.basis(*j)));
                    axpy(&mut rhs, c, &b.mul(&xk1, &sk2));
                }
                if lhs != rhs {
                    w[0] = Some(lab(x, k));
                }
            }
            // PR3: π(x1) π(S x2) π(k) = π(x1) π(S(x2) k)
            if w[1].is_none() {
                let lhs = b.mul(&img.eps[x], &img.pi[k]);
                let mut rhs = zero_vec(h.field(), b.dim());
                for (i, j, c) in &dx {
                    let s2k = map.apply(&h.mul(&h.s(&h.basis(*j)), &h.basis(k)));
                    axpy(&mut rhs, c, &b.mul(&img.pi[*i], &s2k));
                }
                if lhs != rhs {
                    w[1] = Some(lab(x, k));
                }
            }
            // PR4: π(x) π(S k1) π(k2) = π(x S(k1)) π(k2)
            if w[2].is_none() {
                let lhs = b.mul(&img.pi[x], &img.eps_rev[k]);
                let mut rhs = zero_vec(h.field(), b.dim());
                for (i, j, c) in &dk {
                    let xs1 = map.apply(&h.mul(&h.basis(x), &h.s(&h.basis(*i))));
                    axpy(&mut rhs, c, &b.mul(&xs1, &img.pi[*j]));
                }
                if lhs != rhs {
                    w[2] = Some(lab(x, k));
                }
            }
            // PR5: π(S x1) π(x2) π(k) = π(S x1) π(x2 k)
            if w[3].is_none() {
                let lhs = b.mul(&img.eps_rev[x], &img.pi[k]);
                let mut rhs = zero_vec(h.field(), b.dim());
                for (i, j, c) in &dx {
                    let s1 = map.apply(&h.s(&h.basis(*i)));
                    let x2k = map.apply(&h.algebra().basis_product_vec(*j, k));
                    axpy(&mut rhs, c, &b.mul(&s1, &x2k));
                }
                if lhs != rhs {
                    w[3] = Some(lab(x, k));
                }
            }
        }
    }
    let ok23 = w[0].is_none() && w[1].is_none();
    let ok45 = w[2].is_none() && w[3].is_none();
    let [w2, w3, w4, w5] = w;
    r.check("PR2", w2);
    r.check("PR3", w3);
    r.check("PR4", w4);
    r.check("PR5", w5);
    r.check_bool(
        "PR23-PR45-agreement",
        ok23 == ok45,
        format!("PR2∧PR3 = {ok23}, PR4∧PR5 = {ok45}"),
    );
    Ok(r)
}

/// `ε^π_h = π(h_(1)) π(S(h_(2)))`, linear in `h`.
pub fn epsilon_pi(rep: &PartialRep, h: &[crate::field::Scalar]) -> EpsilonElement {
    let src = &rep.source;
    let b = &rep.target;
    let dh = src.coproduct(h);
    let n = src.dim();
    let mut out = zero_vec(src.field(), b.dim());
    for i in 0..n {
        for j in 0..n {
            let c = &dh[i * n + j];
            if c.is_zero() {
                continue;
            }
            let p = b.mul(&rep.map.column(i), &rep.map.apply(&src.s(&src.basis(j))));
            axpy(&mut out, c, &p);
        }
    }
    EpsilonElement {
        h: h.to_vec(),
        element: out,
    }
}

fn epsilon_trivial(rep: &PartialRep, h: &[crate::field::Scalar]) -> bool {
    let expected = vec_scale(&rep.source.counit_of(h), rep.target.unit());
    epsilon_pi(rep, h).element == expected
}

/// Whether `π` is multiplicative on all basis pairs.
pub fn is_global(rep: &PartialRep) -> bool {
    let h = &rep.source;
    let n = h.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            rep.map.apply(&h.algebra().basis_product_vec(i, j))
                == rep.target.mul(&rep.map.column(i), &rep.map.column(j))
        })
    })
}

/// Multiplicativity and the `ε^π_h = ε(h) 1` criterion, which must agree.
pub fn globality_report(rep: &PartialRep) -> Report {
    let mut r = Report::new("globality");
    let mult = is_global(rep);
    let n = rep.source.dim();
    let eps_bad = (0..n).find(|&i| !epsilon_trivial(rep, &rep.source.basis(i)));
    r.value("multiplicative", "global", mult);
    r.value("epsilon-criterion", "global", eps_bad.is_none());
    r.check_bool(
        "criteria-agree",
        mult == eps_bad.is_none(),
        format!(
            "multiplicative = {mult}, ε-criterion witness {:?}",
            eps_bad.map(|i| rep.source.label_of(i).to_string())
        ),
    );
    r
}

/// Evaluates `ε^π_h = ε(h) 1` only on a basis of the coradical.
pub fn coradical_global_test(rep: &PartialRep, filtration: &Filtration) -> Result<bool> {
    if filtration.ambient_dim != rep.source.dim() || filtration.field != rep.source.field() {
        return Err(Error::DimensionMismatch(
            "filtration does not belong to the source Hopf algebra".into(),
        ));
    }
    Ok(filtration
        .coradical()
        .basis_vectors()
        .iter()
        .all(|h| epsilon_trivial(rep, h)))
}

/// `Δ⁻¹(H ⊗ V + W ⊗ H)`, given that `ε^π` is trivial on `V` and `W`; the
/// conclusion (triviality on the result) is re-checked.
pub fn vw_extension(rep: &PartialRep, v: &Subspace, w: &Subspace) -> Result<Subspace> {
    let h = &rep.source;
    let n = h.dim();
    if v.ambient_dim() != n || w.ambient_dim() != n {
        return Err(Error::DimensionMismatch("V, W must live in H".into()));
    }
    for (name, s) in [("V", v), ("W", w)] {
        if let Some(x) = s.basis_vectors().iter().find(|x| !epsilon_trivial(rep, x)) {
            return Err(Error::Precondition(format!(
                "ε^π is not trivial on {name} (basis vector {x:?})"
            )));
        }
    }
    let full = Subspace::full(h.field(), n);
    let target = full.tensor(v).sum(&w.tensor(&full))?;
    let out = Subspace::preimage(h.coalgebra().comult(), &target)?;
    if !out.basis_vectors().iter().all(|x| epsilon_trivial(rep, x)) {
        return Err(Error::Verification("ε^π not trivial on Δ⁻¹(H⊗V + W⊗H)".into()));
    }
    Ok(out)
}

/// The rank-one map `π(1) = 1`, `π(C) = 0` for a complement `H = k1 ⊕ C`.
pub fn cosemisimple_nonglobal_rep(h: &HopfData, complement: &Subspace) -> Result<PartialRep> {
    let n = h.dim();
    let f = h.field();
    if h.antipode_inverse().is_none() {
        return Err(Error::Precondition("antipode is not invertible".into()));
    }
    if !crate::coradical::is_cosemisimple(h.coalgebra())? {
        return Err(Error::Precondition("Hopf algebra is not cosemisimple".into()));
    }
    if n < 2 {
        return Err(Error::Precondition("trivial Hopf algebra has no nontrivial complement".into()));
    }
    if complement.ambient_dim() != n || complement.dim() != n - 1 || complement.contains(&h.one()) {
        return Err(Error::Precondition("complement does not satisfy H = k1 ⊕ C".into()));
    }
    if !crate::coradical::is_subcoalgebra(h.coalgebra(), complement) {
        return Err(Error::Precondition("complement is not a subcoalgebra".into()));
    }
    if !complement.basis_vectors().iter().all(|c| complement.contains(&h.s(c))) {
        return Err(Error::Precondition("complement is not stable under S".into()));
    }
    if complement.basis_vectors().iter().all(|c| h.counit_of(c).is_zero()) {
        return Err(Error::Precondition("counit vanishes on the complement".into()));
    }
    let mut cols = vec![h.one()];
    cols.extend(complement.basis_vectors());
    let basis = Matrix::from_columns(f, n, &cols);
    let mut target_row = zero_vec(f, n);
    target_row[0] = f.one();
    // π · basis = (1, 0, ..., 0)
    let pi = Matrix::row_vector(f, target_row)
        .compose(&basis.inverse().expect("k1 ⊕ C spans H"));
    let rep = PartialRep::new(h.clone(), crate::hopf::AlgebraData::ground(f), pi)?;
    if is_global(&rep) {
        return Err(Error::Verification("rank-one representation is global".into()));
    }
    Ok(rep)
}

/// `π ∘ φ` for a Hopf map `φ: K → H`.
pub fn restrict_along(rep: &PartialRep, phi: &Matrix, phi_source: &HopfData) -> Result<PartialRep> {
    let check = verify_morphism(phi, phi_source, &rep.source, MorphismKind::Hopf)?;
    if !check.all_pass() {
        return Err(Error::Precondition("restriction map is not a Hopf morphism".into()));
    }
    PartialRep::new(phi_source.clone(), rep.target.clone(), rep.map.compose(phi))
}

/// `h · a` for the action matrix `H ⊗ A → A`.
fn act(action: &Matrix, h: &[crate::field::Scalar], a: &[crate::field::Scalar]) -> Vector {
    action.apply(&kron_vec(h, a))
}

/// PA1 to PA3 on basis tuples, PA4 reported separately.
pub fn check_partial_action(h: &HopfData, a: &AlgebraData, action: &Matrix) -> Result<Report> {
    let (n, m) = (h.dim(), a.dim());
    if action.rows() != m || action.cols() != n * m {
        return Err(Error::DimensionMismatch(format!(
            "action is {}x{}, expected {m}x{}",
            action.rows(),
            action.cols(),
            n * m
        )));
    }
    let mut r = Report::new("partial-action");
    let one_a = a.unit().clone();
    let bad = (0..m).find(|&x| act(action, &h.one(), &a.basis(x)) != a.basis(x));
    r.check("PA1", bad.map(|x| format!("(a{x})")));

    let dot1: Vec<Vector> = (0..n).map(|i| act(action, &h.basis(i), &one_a)).collect();
    let mut pa2 = None;
    'pa2: for x in 0..n {
        let dx = h.coproduct_terms(x);
        for p in 0..m {
            let hp: Vec<(Vector, crate::field::Scalar)> = dx
                .iter()
                .map(|(i, _, c)| (act(action, &h.basis(*i), &a.basis(p)), c.clone()))
                .collect();
            for q in 0..m {
                let lhs = act(action, &h.basis(x), &a.basis_product_vec(p, q));
                let mut rhs = zero_vec(h.field(), m);
                for ((hpa, c), (_, j, _)) in hp.iter().zip(&dx) {
                    axpy(&mut rhs, c, &a.mul(hpa, &act(action, &h.basis(*j), &a.basis(q))));
                }
                if lhs != rhs {
                    pa2 = Some(format!("({}, a{p}, a{q})", h.label_of(x)));
                    break 'pa2;
                }
            }
        }
    }
    r.check("PA2", pa2);

    let mut pa3 = None;
    let mut pa4 = None;
    for x in 0..n {
        let dx = h.coproduct_terms(x);
        for k in 0..n {
            for p in 0..m {
                let lhs = act(action, &h.basis(x), &act(action, &h.basis(k), &a.basis(p)));
                let mut r3 = zero_vec(h.field(), m);
                let mut r4 = zero_vec(h.field(), m);
                for (i, j, c) in &dx {
                    let jk = act(action, &h.algebra().basis_product_vec(*j, k), &a.basis(p));
                    axpy(&mut r3, c, &a.mul(&dot1[*i], &jk));
                    let ik = act(action, &h.algebra().basis_product_vec(*i, k), &a.basis(p));
                    axpy(&mut r4, c, &a.mul(&ik, &dot1[*j]));
                }
                if pa3.is_none() && lhs != r3 {
                    pa3 = Some(format!("({}, {}, a{p})", h.label_of(x), h.label_of(k)));
                }
                if pa4.is_none() && lhs != r4 {
                    pa4 = Some(format!("({}, {}, a{p})", h.label_of(x), h.label_of(k)));
                }
            }
        }
    }
    r.check("PA3", pa3);
    let symmetric = pa4.is_none();
    r.check("PA4", pa4);
    r.value("PA4", "symmetric", symmetric);
    Ok(r)
}

/// The trivial action `h · a = ε(h) a`.
pub fn trivial_action(h: &HopfData, a: &AlgebraData) -> Matrix {
    let eps = Matrix::row_vector(h.field(), h.coalgebra().counit().clone());
    eps.tensor(&Matrix::identity(h.field(), a.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coradical::{coradical_filtration, coordinate_span, unit_line, ChevalleyOutcome};
    use crate::field::FieldSpec;
    use crate::group::Group;
    use crate::hopf::{group_algebra, sweedler_h4};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn scalar_map(h: &HopfData, values: &[i64]) -> Matrix {
        Matrix::row_vector(q(), values.iter().map(|&v| q().from_i64(v)).collect())
            .compose(&Matrix::identity(q(), h.dim()))
    }

    #[test]
    fn c2_examples() {
        let h = group_algebra(&Group::cyclic(2), q());
        let k = AlgebraData::ground(q());
        let rep = PartialRep::new(h.clone(), k.clone(), scalar_map(&h, &[1, 0])).unwrap();
        assert!(!is_global(&rep));
        assert!(globality_report(&rep).all_pass());
        assert!(epsilon_pi(&rep, &h.basis(1)).element[0].is_zero());
        assert_eq!(epsilon_pi(&rep, &h.one()).element, *k.unit());
        let filt = coradical_filtration(h.coalgebra()).unwrap();
        assert!(!coradical_global_test(&rep, &filt).unwrap());

        let bad = check_pr_axioms(&h, &k, &scalar_map(&h, &[1, 2])).unwrap();
        assert_eq!(bad.get("PR2").unwrap().witness, "(g, g)");
        assert!(bad.get("PR23-PR45-agreement").unwrap().status == crate::report::CheckStatus::Pass);

        let eps = PartialRep::new(h.clone(), k.clone(), scalar_map(&h, &[1, 1])).unwrap();
        assert!(is_global(&eps));
        assert!(coradical_global_test(&eps, &filt).unwrap());
    }

    #[test]
    fn rank_one_for_groups() {
        for g in [Group::cyclic(2), Group::cyclic(3), Group::s3()] {
            let h = group_algebra(&g, q());
            let c = coordinate_span(q(), h.dim(), &(1..h.dim()).collect::<Vec<_>>());
            let rep = cosemisimple_nonglobal_rep(&h, &c).unwrap();
            assert!(!is_global(&rep));
        }
        let t = group_algebra(&Group::trivial(), q());
        assert!(cosemisimple_nonglobal_rep(&t, &Subspace::zero(q(), 1)).is_err());
    }

    #[test]
    fn sweedler_restriction_is_nonglobal() {
        let h4 = sweedler_h4(q()).unwrap();
        let ChevalleyOutcome::Quotient { hopf, projection, .. } =
            crate::coradical::chevalley_quotient(&h4).unwrap()
        else {
            panic!("radical is a Hopf ideal")
        };
        let c = coordinate_span(q(), 2, &[1]);
        let base = cosemisimple_nonglobal_rep(&hopf, &c).unwrap();
        let rep = restrict_along(&base, &projection.map, &h4).unwrap();
        assert!(!is_global(&rep));
        let filt = coradical_filtration(h4.coalgebra()).unwrap();
        assert!(!coradical_global_test(&rep, &filt).unwrap());
        assert!(!epsilon_trivial(&rep, &h4.basis(1)));
    }

    #[test]
    fn vw_examples() {
        let h4 = sweedler_h4(q()).unwrap();
        let k = AlgebraData::ground(q());
        let eps = PartialRep::new(
            h4.clone(),
            k.clone(),
            Matrix::row_vector(q(), h4.coalgebra().counit().clone()),
        )
        .unwrap();
        let one = unit_line(&h4);
        assert!(vw_extension(&eps, &one, &one).unwrap().contains(&h4.one()));
        let full = Subspace::full(q(), 4);
        assert_eq!(vw_extension(&eps, &full, &full).unwrap(), full);
        let h0 = coradical_filtration(h4.coalgebra()).unwrap().coradical().clone();
        assert_eq!(vw_extension(&eps, &h0, &h0).unwrap(), full);
    }

    #[test]
    fn action_examples() {
        let h = group_algebra(&Group::cyclic(2), q());
        let a = AlgebraData::matrix_algebra(q(), 2);
        let triv = trivial_action(&h, &a);
        assert!(check_partial_action(&h, &a, &triv).unwrap().all_pass());
        let mut broken = triv.clone();
        broken.set(0, 0, q().from_i64(2));
        let r = check_partial_action(&h, &a, &broken).unwrap();
        assert_eq!(r.get("PA1").unwrap().status, crate::report::CheckStatus::Fail);
    }
}
