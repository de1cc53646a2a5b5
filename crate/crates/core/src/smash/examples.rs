//! Twists from group data and duality: exact factorizations `G = ML` with
//! the groupoid `Γ_M(G)`, graded partial modules, and the Drinfel'd double.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::Group;
use crate::hopf::{dual_hopf, group_algebra, opposite, verify_algebra_map, verify_morphism, AlgebraData, HopfData, MorphismData, MorphismKind};
use crate::hpar::groupoid::{groupoid_algebra, is_group_algebra_of, GroupoidGamma};
use crate::hpar::presentation::ParPresentation;
use crate::hpar::truncation::eval_poly;
use crate::linalg::{axpy, unit_vec, zero_vec, Matrix, Vector};
use crate::partial::PartialRep;
use crate::report::Report;
use crate::smash::lifted::lift_twist_t;
use crate::smash::twist::{build_smash, check_twist, SmashAlgebra, TwistMap};

/// `G = ML` with `M ∩ L = 1`, and the twist `l ⊗ m ↦ m' ⊗ l'` where
/// `lm = m'l'`, on `H = kL`, `U = kM`.
#[derive(Clone, Debug)]
pub struct ExactFactorization {
    group: Group,
    m: Vec<usize>,
    l: Vec<usize>,
    /// `factor[x] = (a, b)` with `x = m_a l_b`.
    factor: Vec<(usize, usize)>,
    twist: TwistMap,
}

impl ExactFactorization {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn l(&self) -> &[usize] {
        &self.l
    }

    pub fn twist(&self) -> &TwistMap {
        &self.twist
    }

    /// `(a, b)` with `x = m_a l_b`.
    pub fn factor(&self, x: usize) -> (usize, usize) {
        self.factor[x]
    }

    /// `kM #_R kL → kG`, `m # l ↦ ml`, checked to be a bijective Hopf map.
    pub fn multiplication_iso(&self) -> Result<(MorphismData, Report)> {
        let (smash, mut rep) = build_smash(&self.twist)?;
        let Some(sh) = smash.hopf() else {
            return Err(Error::Verification("smash product has no Hopf structure".into()));
        };
        let f = self.twist.field();
        let kg = group_algebra(&self.group, f);
        let nl = self.l.len();
        let cols: Vec<Vector> = (0..sh.dim())
            .map(|x| unit_vec(f, kg.dim(), self.group.mul(self.m[x / nl], self.l[x % nl])))
            .collect();
        let map = Matrix::from_columns(f, kg.dim(), &cols);
        rep.absorb("multiplication", verify_morphism(&map, sh, &kg, MorphismKind::Hopf)?);
        rep.check_bool("multiplication-bijective", map.is_invertible(), "not bijective");
        Ok((MorphismData::new("m#l ↦ ml", map), rep))
    }
}

/// Builds the factorization twist after checking exactness exhaustively;
/// fails when two products `ml` collide or the orders do not match.
pub fn exact_factorization_twist(g: &Group, m: &[usize], l: &[usize], field: FieldSpec) -> Result<(ExactFactorization, Report)> {
    let gm = g.subgroup(m)?;
    let gl = g.subgroup(l)?;
    let n = g.order();
    if m.len() * l.len() != n {
        return Err(Error::Precondition(format!(
            "|M||L| = {} ≠ |G| = {n}",
            m.len() * l.len()
        )));
    }
    let mut factor = vec![None; n];
    for (a, &x) in m.iter().enumerate() {
        for (b, &y) in l.iter().enumerate() {
            let p = g.mul(x, y);
            if let Some((a2, b2)) = factor[p] {
                let lab = g.labels();
                return Err(Error::Precondition(format!(
                    "not an exact factorization: {}·{} = {}·{}",
                    lab[x], lab[y], lab[m[a2]], lab[l[b2]]
                )));
            }
            factor[p] = Some((a, b));
        }
    }
    let factor: Vec<(usize, usize)> = factor.into_iter().map(|x| x.expect("exact")).collect();
    let (km, kl) = (group_algebra(&gm, field), group_algebra(&gl, field));
    let (nm, nl) = (m.len(), l.len());
    let mut twist = TwistMap::from_fn(kl, km, |b, a| {
        let (a2, b2) = factor[g.mul(l[b], m[a])];
        unit_vec(field, nm * nl, a2 * nl + b2)
    })?;
    let rep = check_twist(&mut twist);
    if !twist.flags().map(|fl| fl.all()).unwrap_or(false) {
        return Err(Error::Verification("factorization twist fails a flag".into()));
    }
    Ok((
        ExactFactorization {
            group: g.clone(),
            m: m.to_vec(),
            l: l.to_vec(),
            factor,
            twist,
        },
        rep,
    ))
}

/// `Γ_M(G)` and `θ : kM #_T k_par L → kΓ_M(G)`,
/// `m #_T [l] ↦ Σ_{A ∋ e, l⁻¹} (φ(A), ml)` with `φ(l) = lM`, extended
/// multiplicatively from `θ(m # 1)` and `θ(1 # [l])`.
pub fn gamma_m_theta(fact: &ExactFactorization) -> Result<(GroupoidGamma, MorphismData, Report)> {
    let g = &fact.group;
    let f = fact.twist.field();
    let gamma_m = GroupoidGamma::cosets(g, &fact.m)?;
    let gl = g.subgroup(&fact.l)?;
    let gamma_l = GroupoidGamma::new(&gl)?;
    let kl = fact.twist.h_side();
    let p_l = ParPresentation::from_groupoid(kl, &gamma_l)?;
    let (t, lift_rep) = lift_twist_t(&fact.twist, &p_l)?;
    let b = t.smash_algebra();
    let target = groupoid_algebra(&gamma_m, f);
    let target_alg = target.algebra();
    let mut rep = Report::new("theta");
    rep.absorb("lift", lift_rep);

    let phi = |mask: u64| -> u64 {
        let mut out = 0u64;
        for (i, &x) in fact.l.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1 << gamma_m.point_of(x);
            }
        }
        out
    };
    // m #_T [l] for M index a and L index b
    let gen = |a: usize, b: usize| -> Vector {
        let mut v = zero_vec(f, gamma_m.len());
        let ml = g.mul(fact.m[a], fact.l[b]);
        for &(mask, lb) in gamma_l.arrows() {
            if lb == b {
                let i = gamma_m
                    .index_of(phi(mask), ml)
                    .expect("φ maps arrows of Γ(L) to arrows of Γ_M(G)");
                v[i] = &v[i] + &f.one();
            }
        }
        v
    };
    let e_l = gl.identity();
    let (nm, nl) = (fact.m.len(), fact.l.len());
    let m_imgs: Vec<Vector> = (0..nm).map(|a| gen(a, e_l)).collect();
    let e_m = fact.m.iter().position(|&x| x == g.identity()).expect("M contains 1");
    let l_imgs: Vec<Vector> = (0..nl).map(|b| gen(e_m, b)).collect();
    let p = p_l.dim();
    let cols: Vec<Vector> = (0..nm * p)
        .map(|c| {
            let (a, x) = (c / p, c % p);
            let lx = eval_poly(target_alg, &l_imgs, p_l.basis_expr(x));
            target_alg.mul(&m_imgs[a], &lx)
        })
        .collect();
    let theta = Matrix::from_columns(f, gamma_m.len(), &cols);
    rep.value("dims", "source", b.dim());
    rep.value("dims", "target", gamma_m.len());
    rep.absorb("algebra-map", verify_algebra_map(&b, target_alg, &theta)?);
    rep.check_bool("bijective", theta.is_invertible(), "θ is not bijective");
    let bad = (0..nm).flat_map(|a| (0..nl).map(move |b| (a, b))).find(|&(a, b)| {
        let src = crate::linalg::kron_vec(&unit_vec(f, nm, a), &p_l.bracket().column(b));
        theta.apply(&src) != gen(a, b)
    });
    rep.check(
        "generator-formula",
        bad.map(|(a, b)| format!("({}, {})", g.labels()[fact.m[a]], g.labels()[fact.l[b]])),
    );
    Ok((gamma_m, MorphismData::new("θ", theta), rep))
}

fn mat_to_vec(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn vec_to_mat(f: FieldSpec, d: usize, v: &[crate::field::Scalar]) -> Matrix {
    Matrix::from_rows(f, (0..d).map(|i| v[i * d..(i + 1) * d].to_vec()).collect(), d)
}

/// Checks `η(f) α(p_g) = α(p_{f▷g}) η(f)` for a partial representation
/// `η : kF → End(V)` and a `G`-grading of `V`; when it holds, assembles
/// `σ(p_g ⊗ x) = α(p_g) η̂(x)` on `kG* #_T k_par F` and verifies that it is
/// an algebra map to `End(V)`. Returns `σ` on success.
pub fn graded_partial_compat(
    rep: &PartialRep,
    f_group: &Group,
    g_group: &Group,
    action: &[Vec<usize>],
    grading: &[Matrix],
) -> Result<(Report, Option<Matrix>)> {
    let kf = rep.source();
    let field = kf.field();
    if !is_group_algebra_of(kf, f_group) {
        return Err(Error::Precondition("source is not kF".into()));
    }
    let ng = g_group.order();
    if grading.len() != ng {
        return Err(Error::Precondition("one projector per element of G expected".into()));
    }
    let d = grading[0].rows();
    if rep.target() != &AlgebraData::matrix_algebra(field, d) {
        return Err(Error::Precondition("target is not End(V) for the graded V".into()));
    }
    let mut sum = Matrix::zeros(field, d, d);
    for (a, pa) in grading.iter().enumerate() {
        if pa.rows() != d || pa.cols() != d || pa.compose(pa) != *pa {
            return Err(Error::Precondition("grading is not a decomposition: projector not idempotent".into()));
        }
        for (b, pb) in grading.iter().enumerate() {
            if a != b && !pa.compose(pb).is_zero() {
                return Err(Error::Precondition("grading is not a decomposition: projectors not orthogonal".into()));
            }
        }
        sum = sum.add(pa)?;
    }
    if !sum.is_identity() {
        return Err(Error::Precondition("grading is not a decomposition: projectors do not sum to 1".into()));
    }
    let nf = f_group.order();
    if action.len() != nf
        || !action.iter().all(|phi| g_group.is_automorphism(phi))
        || (0..nf).any(|a| (0..nf).any(|b| (0..ng).any(|x| action[f_group.mul(a, b)][x] != action[a][action[b][x]])))
        || (0..ng).any(|x| action[f_group.identity()][x] != x)
    {
        return Err(Error::Precondition("F does not act on G by automorphisms".into()));
    }
    let eta: Vec<Matrix> = (0..nf).map(|x| vec_to_mat(field, d, &rep.map().column(x))).collect();
    let mut out = Report::new("graded-partial");
    let bad = (0..nf).flat_map(|x| (0..ng).map(move |y| (x, y))).find(|&(x, y)| {
        eta[x].compose(&grading[y]) != grading[action[x][y]].compose(&eta[x])
    });
    out.check(
        "compatibility",
        bad.map(|(x, y)| format!("({}, {})", f_group.labels()[x], g_group.labels()[y])),
    );
    if bad.is_some() {
        return Ok((out, None));
    }
    let kgs = crate::hopf::dual_group_algebra(g_group, field);
    let mut twist = TwistMap::from_fn(kf.clone(), kgs, |x, y| unit_vec(field, ng * nf, action[x][y] * nf + x))?;
    out.absorb("twist", check_twist(&mut twist));
    let gamma = GroupoidGamma::new(f_group)?;
    let p_f = ParPresentation::from_groupoid(kf, &gamma)?;
    let (t, lift_rep) = lift_twist_t(&twist, &p_f)?;
    out.absorb("lift", lift_rep);
    let b = t.smash_algebra();
    let end = rep.target();
    let gens: Vec<Vector> = (0..nf).map(|x| rep.map().column(x)).collect();
    let p = p_f.dim();
    let cols: Vec<Vector> = (0..ng * p)
        .map(|c| {
            let eta_hat = eval_poly(end, &gens, p_f.basis_expr(c % p));
            end.mul(&mat_to_vec(&grading[c / p]), &eta_hat)
        })
        .collect();
    let sigma = Matrix::from_columns(field, d * d, &cols);
    out.value("dims", "algebra", b.dim());
    out.absorb("module", verify_algebra_map(&b, end, &sigma)?);
    Ok((out, Some(sigma)))
}

/// `R(h ⊗ ψ) = ψ_(1)(S h_(1)) ψ_(3)(h_(3)) ψ_(2) ⊗ h_(2)` on
/// `H ⊗ (H*)^op` in the dual basis, and `D(H) = (H*)^op #_R H`.
pub fn drinfeld_twist(h: &HopfData) -> Result<(TwistMap, SmashAlgebra, Report)> {
    if h.antipode_inverse().is_none() {
        return Err(Error::Precondition("antipode is not invertible".into()));
    }
    let f = h.field();
    let n = h.dim();
    let u = opposite(&dual_hopf(h))?;
    let s = h.antipode();
    let mut cols = Vec::with_capacity(n * n);
    for x in 0..n {
        let dh = h.coalgebra().double_coproduct(&h.basis(x));
        for p in 0..n {
            let du = u.coalgebra().double_coproduct(&u.basis(p));
            let mut v = zero_vec(f, n * n);
            for (hi, hc) in dh.iter().enumerate() {
                if hc.is_zero() {
                    continue;
                }
                let (i, j, k) = (hi / (n * n), hi / n % n, hi % n);
                for b in 0..n {
                    let ui = (0..n).map(|a| a * n * n + b * n + k);
                    for (a, idx) in ui.enumerate() {
                        let uc = &du[idx];
                        if uc.is_zero() {
                            continue;
                        }
                        let coef = &(hc * uc) * s.get(a, i);
                        let pos = b * n + j;
                        v[pos] = &v[pos] + &coef;
                    }
                }
            }
            cols.push(v);
        }
    }
    let mut twist = TwistMap::new(h.clone(), u, Matrix::from_columns(f, n * n, &cols))?;
    let mut rep = Report::new("drinfeld");
    rep.absorb("twist", check_twist(&mut twist));
    let (smash, srep) = build_smash(&twist)?;
    rep.absorb("double", srep);
    rep.value("dims", "double", smash.dim());
    Ok((twist, smash, rep))
}

/// `kG ⊗ U → U ⊗ kG`, `g ⊗ u ↦ (g ▷ u) ⊗ g` for an action by matrices.
pub fn group_action_twist(kg: &HopfData, u: &HopfData, action: &[Matrix]) -> Result<TwistMap> {
    let m = u.dim();
    let n = kg.dim();
    if action.len() != n || action.iter().any(|a| a.rows() != m || a.cols() != m) {
        return Err(Error::DimensionMismatch("one m×m matrix per group element expected".into()));
    }
    let f = u.field();
    TwistMap::from_fn(kg.clone(), u.clone(), |g, x| {
        let mut v = zero_vec(f, m * n);
        for (y, c) in action[g].column_entries(x) {
            axpy(&mut v, &c, &unit_vec(f, m * n, y * n + g));
        }
        v
    })
}
