//! Coradical, coradical filtration, Jacobson radical and the quotient of a
//! Hopf algebra by its radical.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{verify_hopf, verify_morphism, AlgebraData, CoalgebraData, HopfData, MorphismData, MorphismKind};
use crate::linalg::{unit_vec, Matrix, Subspace, Vector};
use crate::report::Report;

/// Largest number of candidate vectors enumerated by the small-characteristic
/// radical search.
pub const RADICAL_SEARCH_LIMIT: u64 = 1 << 20;

/// The convolution algebra `C*` on the dual basis: multiplication `Δᵀ`, unit `ε`.
pub fn dual_algebra(c: &CoalgebraData) -> AlgebraData {
    AlgebraData::new(c.field(), c.dim(), &c.comult().transpose(), c.counit().clone())
        .expect("dual algebra shape")
}

fn trace(m: &Matrix) -> crate::field::Scalar {
    (0..m.rows()).fold(m.field().zero(), |acc, i| &acc + m.get(i, i))
}

/// `{x : tr(L_{xy}) = 0 for every basis y}`, a two-sided ideal containing
/// the radical.
pub fn trace_radical(a: &AlgebraData) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let traces: Vec<_> = (0..n).map(|k| trace(&a.left_mult(&a.basis(k)))).collect();
    let mut m = Matrix::zeros(f, n, n);
    for x in 0..n {
        for y in 0..n {
            let t = a
                .basis_product(x, y)
                .iter()
                .fold(f.zero(), |acc, (k, c)| &acc + &(c * &traces[*k]));
            m.set(y, x, t);
        }
    }
    m.kernel()
}

/// True when the subspace generates a nilpotent multiplicative semigroup:
/// `X^k = 0` for some `k ≤ dim A`.
pub fn is_nilpotent_subspace(a: &AlgebraData, x: &Subspace) -> bool {
    let mut power = x.clone();
    for _ in 0..=a.dim() {
        if power.dim() == 0 {
            return true;
        }
        power = a.subspace_product(&power, x);
    }
    power.dim() == 0
}

/// The left ideal `A x`.
fn left_ideal(a: &AlgebraData, x: &Vector) -> Subspace {
    let vs = (0..a.dim()).map(|i| a.mul(&a.basis(i), x)).collect();
    Subspace::span(a.field(), a.dim(), vs)
}

/// The Jacobson radical.
///
/// In characteristic 0 or `p > dim A` the trace-form radical is the radical.
/// Otherwise the trace-form radical `T ⊇ J` is searched exhaustively: `x ∈ J`
/// iff the left ideal `A x` is nilpotent. The search is refused when `T`
/// has more than [`RADICAL_SEARCH_LIMIT`] elements.
pub fn jacobson_radical(a: &AlgebraData) -> Result<Subspace> {
    let t = trace_radical(a);
    let f = a.field();
    let p = f.characteristic();
    if p == 0 || p > a.dim() as u64 || t.dim() == 0 {
        return Ok(t);
    }
    let count = (p as u128).checked_pow(t.dim() as u32).unwrap_or(u128::MAX);
    if count > RADICAL_SEARCH_LIMIT as u128 {
        return Err(Error::Unsupported(format!(
            "radical search over F_{p} with a {}-dimensional candidate space",
            t.dim()
        )));
    }
    let basis = t.basis_vectors();
    let mut found = Subspace::zero(f, a.dim());
    let mut coeffs = vec![0u64; basis.len()];
    loop {
        // next coefficient vector in base p
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
        let mut x = vec![f.zero(); a.dim()];
        for (c, b) in coeffs.iter().zip(&basis) {
            crate::linalg::axpy(&mut x, &f.from_i64(*c as i64), b);
        }
        if found.contains(&x) {
            continue;
        }
        if is_nilpotent_subspace(a, &left_ideal(a, &x)) {
            found = found.sum(&Subspace::span(f, a.dim(), vec![x]))?;
        }
    }
    Ok(found)
}

/// Certifies a claimed radical: two-sided ideal, nilpotent, and the
/// quotient has zero radical.
pub fn certify_radical(a: &AlgebraData, j: &Subspace) -> Result<Report> {
    let mut r = Report::new("radical");
    let full = Subspace::full(a.field(), a.dim());
    r.check_bool(
        "left-ideal",
        a.subspace_product(&full, j).is_subspace_of(j),
        "A J ⊄ J",
    );
    r.check_bool(
        "right-ideal",
        a.subspace_product(j, &full).is_subspace_of(j),
        "J A ⊄ J",
    );
    r.check_bool("nilpotent", is_nilpotent_subspace(a, j), "J^dim ≠ 0");
    let (q, _, _) = a.quotient(j);
    let qj = jacobson_radical(&q)?;
    r.check_bool("quotient-semisimple", qj.dim() == 0, format!("radical of A/J has dim {}", qj.dim()));
    Ok(r)
}

/// The coradical: the annihilator of `J(C*)` under evaluation.
pub fn coradical(c: &CoalgebraData) -> Result<Subspace> {
    let j = jacobson_radical(&dual_algebra(c))?;
    Ok(if j.dim() == 0 {
        Subspace::full(c.field(), c.dim())
    } else {
        j.basis().kernel()
    })
}

/// Whether `v` spans a subcoalgebra: `Δ(V) ⊆ V ⊗ V`.
pub fn is_subcoalgebra(c: &CoalgebraData, v: &Subspace) -> bool {
    let vv = v.tensor(v);
    v.basis_vectors().iter().all(|x| vv.contains(&c.coproduct(x)))
}

/// The coradical filtration `H_0 ⊆ H_1 ⊆ ...`, ending at the first stage
/// equal to `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub field: FieldSpec,
    pub ambient_dim: usize,
    pub stages: Vec<Subspace>,
    pub exhaustive_at: usize,
}

impl Filtration {
    pub fn coradical(&self) -> &Subspace {
        &self.stages[0]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(Subspace::dim).collect()
    }
}

/// `H_n = Δ⁻¹(H ⊗ H_{n-1} + H_0 ⊗ H)`.
pub fn coradical_filtration(c: &CoalgebraData) -> Result<Filtration> {
    let f = c.field();
    let n = c.dim();
    let h0 = coradical(c)?;
    let full = Subspace::full(f, n);
    let mut stages = vec![h0.clone()];
    while stages.last().expect("nonempty").dim() < n {
        let prev = stages.last().expect("nonempty");
        let target = full.tensor(prev).sum(&h0.tensor(&full))?;
        let next = Subspace::preimage(c.comult(), &target)?;
        if next.dim() == prev.dim() {
            return Err(Error::Verification(format!(
                "coradical filtration stalled at dimension {}",
                prev.dim()
            )));
        }
        stages.push(next);
    }
    Ok(Filtration {
        field: f,
        ambient_dim: n,
        exhaustive_at: stages.len() - 1,
        stages,
    })
}

/// Checks nesting, subcoalgebra property of the coradical and
/// `Δ(H_n) ⊆ Σ_i H_i ⊗ H_{n-i}`.
pub fn verify_filtration(c: &CoalgebraData, filt: &Filtration) -> Result<Report> {
    let mut r = Report::new("filtration");
    let nested = filt.stages.windows(2).all(|w| w[0].is_subspace_of(&w[1]));
    r.check_bool("nested", nested, "stages not nested");
    r.check_bool(
        "exhaustive",
        filt.stages[filt.exhaustive_at].dim() == c.dim(),
        "last stage is not H",
    );
    r.check_bool(
        "coradical-subcoalgebra",
        is_subcoalgebra(c, filt.coradical()),
        "Δ(H_0) ⊄ H_0⊗H_0",
    );
    let mut bad = None;
    for (n, stage) in filt.stages.iter().enumerate() {
        let mut target = Subspace::zero(c.field(), c.dim() * c.dim());
        for i in 0..=n {
            target = target.sum(&filt.stages[i].tensor(&filt.stages[n - i]))?;
        }
        if !stage.basis_vectors().iter().all(|x| target.contains(&c.coproduct(x))) {
            bad = Some(format!("H_{n}"));
            break;
        }
    }
    r.check("coalgebra-filtration", bad);
    Ok(r)
}

pub fn is_connected(c: &CoalgebraData) -> Result<bool> {
    Ok(coradical(c)?.dim() == 1)
}

pub fn is_cosemisimple(c: &CoalgebraData) -> Result<bool> {
    Ok(coradical(c)?.dim() == c.dim())
}

/// Result of [`chevalley_quotient`].
#[derive(Clone, Debug)]
pub enum ChevalleyOutcome {
    /// `H/J(H)` with the certified quotient map.
    Quotient {
        hopf: HopfData,
        projection: MorphismData,
        radical: Subspace,
    },
    /// `J(H)` is not a Hopf ideal; the report names the failed inclusion.
    NotHopfIdeal(Report),
}

/// `H → H/J(H)` when the radical is a Hopf ideal.
pub fn chevalley_quotient(h: &HopfData) -> Result<ChevalleyOutcome> {
    let f = h.field();
    let n = h.dim();
    let j = jacobson_radical(h.algebra())?;
    let mut r = Report::new("hopf-ideal");
    let full = Subspace::full(f, n);
    let jh = j.tensor(&full).sum(&full.tensor(&j))?;
    let jb = j.basis_vectors();
    r.check_bool(
        "coideal",
        jb.iter().all(|x| jh.contains(&h.coproduct(x))),
        "Δ(J) ⊄ J⊗H + H⊗J",
    );
    r.check_bool(
        "counit",
        jb.iter().all(|x| h.counit_of(x).is_zero()),
        "ε(J) ≠ 0",
    );
    r.check_bool(
        "antipode",
        jb.iter().all(|x| j.contains(&h.s(x))),
        "S(J) ⊄ J",
    );
    if !r.all_pass() {
        return Ok(ChevalleyOutcome::NotHopfIdeal(r));
    }
    let (alg, proj, section) = h.algebra().quotient(&j);
    let q = alg.dim();
    let pp = proj.tensor(&proj);
    let coalg = CoalgebraData::from_coproducts(
        f,
        q,
        (0..q).map(|i| h.counit_of(&section.column(i))).collect(),
        |i| pp.apply(&h.coproduct(&section.column(i))),
    );
    let antipode = proj.compose(h.antipode()).compose(&section);
    let pivots = j.pivots();
    let labels = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| format!("[{}]", h.label_of(c)))
        .collect();
    let quotient = HopfData::new(labels, alg, coalg, antipode)?;
    let v = verify_hopf(&quotient);
    if !v.all_pass() {
        return Err(Error::Verification(format!("quotient Hopf algebra: {:?}", v.failures())));
    }
    let m = verify_morphism(&proj, h, &quotient, MorphismKind::Hopf)?;
    if !m.all_pass() {
        return Err(Error::Verification("quotient map is not a Hopf map".into()));
    }
    Ok(ChevalleyOutcome::Quotient {
        hopf: quotient,
        projection: MorphismData::new("H → H/J(H)", proj),
        radical: j,
    })
}

/// The unit vector of `h` as a one-dimensional subspace.
pub fn unit_line(h: &HopfData) -> Subspace {
    Subspace::span(h.field(), h.dim(), vec![h.one()])
}

/// `span{e_i : i ∈ idx}`.
pub fn coordinate_span(field: FieldSpec, n: usize, idx: &[usize]) -> Subspace {
    Subspace::span(field, n, idx.iter().map(|&i| unit_vec(field, n, i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::hopf::{dual_group_algebra, group_algebra, sweedler_h4};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn radical_examples() {
        let kxk = dual_algebra(group_algebra(&Group::cyclic(2), q()).coalgebra());
        assert_eq!(jacobson_radical(&kxk).unwrap().dim(), 0);
        let c2 = group_algebra(&Group::cyclic(2), f2());
        let j = jacobson_radical(c2.algebra()).unwrap();
        assert_eq!(j, Subspace::span(f2(), 2, vec![vec![f2().one(), f2().one()]]));
        let h4 = sweedler_h4(q()).unwrap();
        let jd = jacobson_radical(&dual_algebra(h4.coalgebra())).unwrap();
        assert_eq!(jd.dim(), 2);
        assert!(certify_radical(&dual_algebra(h4.coalgebra()), &jd).unwrap().all_pass());
        assert!(certify_radical(c2.algebra(), &j).unwrap().all_pass());
    }

    #[test]
    fn coradical_examples() {
        let s3 = group_algebra(&Group::s3(), q());
        assert!(is_cosemisimple(s3.coalgebra()).unwrap());
        let h4 = sweedler_h4(q()).unwrap();
        let c0 = coradical(h4.coalgebra()).unwrap();
        assert_eq!(c0, coordinate_span(q(), 4, &[0, 1]));
        assert!(!is_connected(h4.coalgebra()).unwrap());
        assert!(!is_cosemisimple(h4.coalgebra()).unwrap());
        let u = dual_group_algebra(&Group::cyclic(2), f2());
        assert!(is_connected(u.coalgebra()).unwrap());
        assert_eq!(coradical(u.coalgebra()).unwrap(), unit_line(&u));
    }

    #[test]
    fn filtrations() {
        let s3 = group_algebra(&Group::s3(), q());
        let fs = coradical_filtration(s3.coalgebra()).unwrap();
        assert_eq!(fs.exhaustive_at, 0);
        let h4 = sweedler_h4(q()).unwrap();
        let fh = coradical_filtration(h4.coalgebra()).unwrap();
        assert_eq!(fh.dims(), vec![2, 4]);
        assert!(verify_filtration(h4.coalgebra(), &fh).unwrap().all_pass());
        let u = dual_group_algebra(&Group::cyclic(2), f2());
        let fu = coradical_filtration(u.coalgebra()).unwrap();
        assert_eq!(fu.dims(), vec![1, 2]);
        let v = dual_group_algebra(&Group::cyclic(2).product(&Group::cyclic(2)), f2());
        let fv = coradical_filtration(v.coalgebra()).unwrap();
        assert!(verify_filtration(v.coalgebra(), &fv).unwrap().all_pass());
        assert_eq!(fv.dims()[0], 1);
    }

    #[test]
    fn chevalley() {
        let h4 = sweedler_h4(q()).unwrap();
        match chevalley_quotient(&h4).unwrap() {
            ChevalleyOutcome::Quotient { hopf, radical, .. } => {
                assert_eq!(hopf.dim(), 2);
                assert_eq!(radical, coordinate_span(q(), 4, &[2, 3]));
                let c2 = group_algebra(&Group::cyclic(2), q());
                assert_eq!(hopf.algebra(), c2.algebra());
                assert_eq!(hopf.coalgebra(), c2.coalgebra());
            }
            other => panic!("{other:?}"),
        }
        let s3 = group_algebra(&Group::s3(), q());
        match chevalley_quotient(&s3).unwrap() {
            ChevalleyOutcome::Quotient { hopf, .. } => assert_eq!(hopf.dim(), 6),
            other => panic!("{other:?}"),
        }
        let c2 = group_algebra(&Group::cyclic(2), f2());
        match chevalley_quotient(&c2).unwrap() {
            ChevalleyOutcome::Quotient { hopf, .. } => assert_eq!(hopf.dim(), 1),
            other => panic!("{other:?}"),
        }
    }
}
