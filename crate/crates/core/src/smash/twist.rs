//! Twist maps `R : H ⊗ U → U ⊗ H`, written `R(h ⊗ u) = u^R ⊗ h^R`, and the
//! structures they carry: flags, the smash product `U #_R H`, the actions
//! `▷`, `◁`, `◮`, `◭` and the inverse twist `R'`.
//!
//! Basis conventions: `H ⊗ U` at `h dim_U + u`, `U ⊗ H` at `u dim_H + h`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{tensor_bialgebra, verify_algebra, verify_algebra_map, verify_hopf, AlgebraData, HopfData};
use crate::linalg::{flip_matrix, kron_vec, map_from_fn, unflatten, unit_vec, zero_vec, Matrix, Tensor};
use crate::report::Report;

/// Outcome of [`check_twist`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwistFlags {
    pub left_normal: bool,
    pub right_normal: bool,
    pub left_multiplicative: bool,
    pub right_multiplicative: bool,
    pub coalgebra_map: bool,
    pub invertible: bool,
}

impl TwistFlags {
    /// Normal and multiplicative on both sides.
    pub fn structural(&self) -> bool {
        self.left_normal && self.right_normal && self.left_multiplicative && self.right_multiplicative
    }

    pub fn all(&self) -> bool {
        self.structural() && self.coalgebra_map
    }
}

#[derive(Clone, Debug)]
pub struct TwistMap {
    h_side: HopfData,
    u_side: HopfData,
    map: Matrix,
    flags: Option<TwistFlags>,
    inverse: Option<Matrix>,
}

impl TwistMap {
    pub fn new(h: HopfData, u: HopfData, map: Matrix) -> Result<Self> {
        let (n, m) = (h.dim(), u.dim());
        if h.field() != u.field() || map.field() != h.field() {
            return Err(Error::DimensionMismatch("twist sides live over different fields".into()));
        }
        if map.rows() != m * n || map.cols() != n * m {
            return Err(Error::DimensionMismatch(format!(
                "twist is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                m * n,
                n * m
            )));
        }
        Ok(TwistMap {
            h_side: h,
            u_side: u,
            map,
            flags: None,
            inverse: None,
        })
    }

    /// The tensor flip `h ⊗ u ↦ u ⊗ h`.
    pub fn flip(h: HopfData, u: HopfData) -> Self {
        let map = flip_matrix(h.field(), h.dim(), u.dim());
        Self::new(h, u, map).expect("flip shape")
    }

    /// Column `(h, u)` is `f(h, u) ∈ U ⊗ H`.
    pub fn from_fn(h: HopfData, u: HopfData, f: impl Fn(usize, usize) -> crate::linalg::Vector) -> Result<Self> {
        let (n, m) = (h.dim(), u.dim());
        let cols: Vec<_> = (0..n * m).map(|c| f(c / m, c % m)).collect();
        if cols.iter().any(|c| c.len() != m * n) {
            return Err(Error::DimensionMismatch("twist column length".into()));
        }
        let map = Matrix::from_columns(h.field(), m * n, &cols);
        Self::new(h, u, map)
    }

    /// `R(h ⊗ u) = h_(1) ▷ u ⊗ h_(2)` for a left action `▷ : H ⊗ U → U`.
    pub fn module_algebra(h: HopfData, u: HopfData, action: &Matrix) -> Result<Self> {
        let (n, m) = (h.dim(), u.dim());
        if action.rows() != m || action.cols() != n * m {
            return Err(Error::DimensionMismatch("action shape".into()));
        }
        let dh = h.coalgebra().comult().clone();
        let map = map_from_fn(h.field(), &[n, m], m * n, |t| {
            t.apply(0, 1, &dh, &[n, n]).permute(&[0, 2, 1]).apply(0, 2, action, &[m])
        });
        Self::new(h, u, map)
    }

    pub fn h_side(&self) -> &HopfData {
        &self.h_side
    }

    pub fn u_side(&self) -> &HopfData {
        &self.u_side
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn field(&self) -> FieldSpec {
        self.h_side.field()
    }

    /// Flags from the last [`check_twist`], if any.
    pub fn flags(&self) -> Option<TwistFlags> {
        self.flags
    }

    pub fn inverse(&self) -> Option<&Matrix> {
        self.inverse.as_ref()
    }

    /// `R(h ⊗ u)` on basis indices.
    pub fn apply_basis(&self, h: usize, u: usize) -> crate::linalg::Vector {
        self.map.column(h * self.u_side.dim() + u)
    }

    fn ensure_flags(&self) -> TwistFlags {
        match self.flags {
            Some(f) => f,
            None => {
                let mut c = self.clone();
                check_twist(&mut c);
                c.flags.expect("flags set")
            }
        }
    }
}

pub(crate) fn tuple_label(labels: &[&[String]], idx: &[usize]) -> String {
    let parts: Vec<&str> = labels.iter().zip(idx).map(|(l, &i)| l[i].as_str()).collect();
    format!("({})", parts.join(", "))
}

/// First basis tensor of shape `dims` on which `lhs` and `rhs` differ.
pub(crate) fn first_mismatch(
    field: FieldSpec,
    dims: &[usize],
    lhs: impl Fn(Tensor) -> Tensor,
    rhs: impl Fn(Tensor) -> Tensor,
) -> Option<Vec<usize>> {
    let n: usize = dims.iter().product();
    let mut idx = vec![0; dims.len()];
    for flat in 0..n {
        unflatten(dims, flat, &mut idx);
        let t = Tensor::basis(field, dims, &idx);
        if lhs(t.clone()).data != rhs(t).data {
            return Some(idx);
        }
    }
    None
}

pub(crate) fn index_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn vt(v: &[crate::field::Scalar]) -> Tensor {
    Tensor::from_vector(v.to_vec())
}

/// Normality and multiplicativity of `map : H ⊗ U → U ⊗ H` over algebras.
pub(crate) fn algebra_twist_report(
    h: &AlgebraData,
    u: &AlgebraData,
    map: &Matrix,
    hl: &[String],
    ul: &[String],
) -> Report {
    let f = h.field();
    let (n, m) = (h.dim(), u.dim());
    let (mh, mu) = (h.mult_matrix(), u.mult_matrix());
    let mut r = Report::new("twist");
    let bad = first_mismatch(
        f,
        &[n],
        |t| t.otimes(&vt(u.unit())).apply(0, 2, map, &[m, n]),
        |t| vt(u.unit()).otimes(&t),
    );
    r.check("left-normal", bad.map(|i| tuple_label(&[hl], &i)));
    let bad = first_mismatch(
        f,
        &[m],
        |t| vt(h.unit()).otimes(&t).apply(0, 2, map, &[m, n]),
        |t| t.otimes(&vt(h.unit())),
    );
    r.check("right-normal", bad.map(|i| tuple_label(&[ul], &i)));
    let bad = first_mismatch(
        f,
        &[n, n, m],
        |t| t.apply(0, 2, &mh, &[n]).apply(0, 2, map, &[m, n]),
        |t| {
            t.apply(1, 2, map, &[m, n])
                .apply(0, 2, map, &[m, n])
                .apply(1, 2, &mh, &[n])
        },
    );
    r.check("left-multiplicative", bad.map(|i| tuple_label(&[hl, hl, ul], &i)));
    let bad = first_mismatch(
        f,
        &[n, m, m],
        |t| t.apply(1, 2, &mu, &[m]).apply(0, 2, map, &[m, n]),
        |t| {
            t.apply(0, 2, map, &[m, n])
                .apply(1, 2, map, &[m, n])
                .apply(0, 2, &mu, &[m])
        },
    );
    r.check("right-multiplicative", bad.map(|i| tuple_label(&[hl, ul, ul], &i)));
    r
}

fn counit_row(h: &HopfData) -> Matrix {
    Matrix::row_vector(h.field(), h.coalgebra().counit().clone())
}

/// Evaluates the five twist flags on basis tuples and caches them, with
/// the inverse matrix when `R` is invertible.
pub fn check_twist(r: &mut TwistMap) -> Report {
    let (h, u) = (&r.h_side, &r.u_side);
    let f = h.field();
    let (n, m) = (h.dim(), u.dim());
    let map = &r.map;
    let (hl, ul) = (h.labels(), u.labels());
    let mut rep = algebra_twist_report(h.algebra(), u.algebra(), map, hl, ul);
    let (dh, du) = (h.coalgebra().comult(), u.coalgebra().comult());
    let bad = first_mismatch(
        f,
        &[n, m],
        |t| {
            t.apply(0, 2, map, &[m, n])
                .apply(0, 1, du, &[m, m])
                .apply(2, 1, dh, &[n, n])
                .permute(&[0, 2, 1, 3])
        },
        |t| {
            t.apply(0, 1, dh, &[n, n])
                .apply(2, 1, du, &[m, m])
                .permute(&[0, 2, 1, 3])
                .apply(0, 2, map, &[m, n])
                .apply(2, 2, map, &[m, n])
        },
    );
    rep.check("coalgebra-map/comultiplicative", bad.map(|i| tuple_label(&[hl, ul], &i)));
    let (eh, eu) = (counit_row(h), counit_row(u));
    let (euh, ehu) = (eu.tensor(&eh), eh.tensor(&eu));
    let bad = first_mismatch(
        f,
        &[n, m],
        |t| t.apply(0, 2, map, &[m, n]).apply(0, 2, &euh, &[1]),
        |t| t.apply(0, 2, &ehu, &[1]),
    );
    rep.check("coalgebra-map/counit", bad.map(|i| tuple_label(&[hl, ul], &i)));
    let inverse = map.inverse();
    rep.value("invertible", "value", inverse.is_some());
    let pass = |id: &str| rep.get(id).map(|it| it.status != crate::report::CheckStatus::Fail).unwrap_or(false);
    let flags = TwistFlags {
        left_normal: pass("left-normal"),
        right_normal: pass("right-normal"),
        left_multiplicative: pass("left-multiplicative"),
        right_multiplicative: pass("right-multiplicative"),
        coalgebra_map: pass("coalgebra-map/comultiplicative") && pass("coalgebra-map/counit"),
        invertible: inverse.is_some(),
    };
    r.flags = Some(flags);
    r.inverse = inverse;
    rep
}

/// The algebra `U ⊗ H` with `(u ⊗ h)(u' ⊗ h') = u u'^R ⊗ h^R h'`.
pub fn twisted_tensor_algebra(u: &AlgebraData, h: &AlgebraData, map: &Matrix) -> AlgebraData {
    let f = u.field();
    let (m, n) = (u.dim(), h.dim());
    let cols: Vec<_> = (0..n * m).map(|c| map.column_entries(c)).collect();
    AlgebraData::from_products(f, m * n, kron_vec(u.unit(), h.unit()), |x, y| {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        let mut v = zero_vec(f, m * n);
        for (idx, coef) in &cols[b * m + c] {
            let (a2, b2) = (idx / n, idx % n);
            for (p, cp) in u.basis_product(a, a2) {
                let pc = coef * cp;
                for (q, cq) in h.basis_product(b2, d) {
                    let k = p * n + q;
                    v[k] = &v[k] + &(&pc * cq);
                }
            }
        }
        v
    })
}

/// `U #_R H` with its Hopf structure when `R` is a coalgebra map.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    twist: TwistMap,
    algebra: AlgebraData,
    hopf: Option<HopfData>,
}

impl SmashAlgebra {
    pub fn twist(&self) -> &TwistMap {
        &self.twist
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn hopf(&self) -> Option<&HopfData> {
        self.hopf.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

fn smash_labels(u: &HopfData, h: &HopfData) -> Vec<String> {
    u.labels()
        .iter()
        .flat_map(|a| h.labels().iter().map(move |b| format!("{a}#{b}")))
        .collect()
}

/// Builds `U #_R H`, verifies the algebra, the two inclusions and
/// `u # h = (u # 1)(1 # h)`; with the coalgebra flag also the Hopf axioms
/// for the antipode `S(u # h) = R(S_H h ⊗ S_U u)` and the identity
/// `S_U(u^R)^r ⊗ S_H(h^R)^r = S_U(u) ⊗ S_H(h)`.
pub fn build_smash(r: &TwistMap) -> Result<(SmashAlgebra, Report)> {
    let flags = r.ensure_flags();
    if !flags.structural() {
        return Err(Error::Precondition("twist is not normal and multiplicative".into()));
    }
    let (h, u) = (&r.h_side, &r.u_side);
    let f = h.field();
    let (n, m) = (h.dim(), u.dim());
    let algebra = twisted_tensor_algebra(u.algebra(), h.algebra(), &r.map);
    let mut rep = Report::new("smash");
    rep.absorb("algebra", verify_algebra(&algebra));
    let one_h = Matrix::from_columns(f, n, &[h.one()]);
    let one_u = Matrix::from_columns(f, m, &[u.one()]);
    let iota_u = Matrix::identity(f, m).tensor(&one_h);
    let iota_h = one_u.tensor(&Matrix::identity(f, n));
    rep.absorb("iota-u", verify_algebra_map(u.algebra(), &algebra, &iota_u)?);
    rep.absorb("iota-h", verify_algebra_map(h.algebra(), &algebra, &iota_h)?);
    let labels = smash_labels(u, h);
    let bad = (0..m * n).find(|&x| algebra.mul(&iota_u.column(x / n), &iota_h.column(x % n)) != unit_vec(f, m * n, x));
    rep.check("factorization", bad.map(|x| labels[x].clone()));
    let mut hopf = None;
    if flags.coalgebra_map {
        let coalgebra = tensor_bialgebra(u, h).coalgebra().clone();
        let (su, sh) = (u.antipode(), h.antipode());
        let antipode = r.map.compose(&flip_matrix(f, m, n)).compose(&su.tensor(sh));
        let hd = HopfData::new(labels, algebra.clone(), coalgebra, antipode)?;
        rep.absorb("hopf", verify_hopf(&hd));
        let lhs = r
            .map
            .compose(&flip_matrix(f, m, n))
            .compose(&su.tensor(sh))
            .compose(&r.map);
        let rhs = su.tensor(sh).compose(&flip_matrix(f, n, m));
        rep.check_bool("antipode-identity", lhs == rhs, "R τ (S_U ⊗ S_H) R ≠ (S_U ⊗ S_H) τ");
        hopf = Some(hd);
    }
    Ok((
        SmashAlgebra {
            twist: r.clone(),
            algebra,
            hopf,
        },
        rep,
    ))
}

/// `h ▷ u = ε_H(h^R) u^R`, `h ◁ u = ε_U(u^R) h^R`, and from `R'` the
/// actions `u ◮ h = ε_U(u^{R'}) h^{R'}`, `u ◭ h = ε_H(h^{R'}) u^{R'}`.
#[derive(Clone, Debug)]
pub struct MatchedPairActions {
    /// `H ⊗ U → U`.
    pub tri_r: Matrix,
    /// `H ⊗ U → H`.
    pub tri_l: Matrix,
    /// `U ⊗ H → H`; present when both antipodes are invertible.
    pub black_r: Option<Matrix>,
    /// `U ⊗ H → U`.
    pub black_l: Option<Matrix>,
}

fn triangle_actions(r: &TwistMap) -> (Matrix, Matrix) {
    let f = r.field();
    let (n, m) = (r.h_side.dim(), r.u_side.dim());
    let tri_r = Matrix::identity(f, m).tensor(&counit_row(&r.h_side)).compose(&r.map);
    let tri_l = counit_row(&r.u_side).tensor(&Matrix::identity(f, n)).compose(&r.map);
    (tri_r, tri_l)
}

/// `R'(u ⊗ h) = S_H(S_H⁻¹(h_(1)) ◁ S_U⁻¹(u_(1))) ⊗ S_U(S_H⁻¹(h_(2)) ▷ S_U⁻¹(u_(2)))`.
fn inverse_closed_form(r: &TwistMap) -> Result<Matrix> {
    let (h, u) = (&r.h_side, &r.u_side);
    let (Some(shi), Some(sui)) = (h.antipode_inverse(), u.antipode_inverse()) else {
        return Err(Error::Precondition("inverse twist needs invertible antipodes".into()));
    };
    let (n, m) = (h.dim(), u.dim());
    let (tri_r, tri_l) = triangle_actions(r);
    let (dh, du) = (h.coalgebra().comult(), u.coalgebra().comult());
    Ok(map_from_fn(h.field(), &[m, n], n * m, |t| {
        t.apply(0, 1, du, &[m, m])
            .apply(2, 1, dh, &[n, n])
            .apply1(0, sui)
            .apply1(1, sui)
            .apply1(2, shi)
            .apply1(3, shi)
            .permute(&[2, 0, 3, 1])
            .apply(0, 2, &tri_l, &[n])
            .apply(1, 2, &tri_r, &[m])
            .apply1(0, h.antipode())
            .apply1(1, u.antipode())
    }))
}

/// `R'` from its closed formula, checked to be a two-sided inverse and a
/// twist `U ⊗ H → H ⊗ U` with the roles of `H` and `U` swapped.
pub fn invert_twist(r: &TwistMap) -> Result<(TwistMap, Report)> {
    if !r.ensure_flags().all() {
        return Err(Error::Precondition("inverse twist needs a normal, multiplicative coalgebra-map twist".into()));
    }
    let rp = inverse_closed_form(r)?;
    let mut rep = Report::new("inverse-twist");
    rep.check_bool("r-prime-r", rp.compose(&r.map).is_identity(), "R'R ≠ id");
    rep.check_bool("r-r-prime", r.map.compose(&rp).is_identity(), "RR' ≠ id");
    let mut inv = TwistMap::new(r.u_side.clone(), r.h_side.clone(), rp)?;
    rep.absorb("flags", check_twist(&mut inv));
    Ok((inv, rep))
}

/// The four actions with module axioms, both reconstruction orders, the
/// `S ∘ ▷` and `S ∘ ◁` identities, the two `W` identities, and for `R'`
/// the black actions with their own reconstruction.
pub fn derive_actions(r: &TwistMap) -> Result<(MatchedPairActions, Report)> {
    if !r.ensure_flags().all() {
        return Err(Error::Precondition("actions need a normal, multiplicative coalgebra-map twist".into()));
    }
    let (h, u) = (&r.h_side, &r.u_side);
    let f = h.field();
    let (n, m) = (h.dim(), u.dim());
    let (hl, ul) = (h.labels(), u.labels());
    let map = &r.map;
    let (tri_r, tri_l) = triangle_actions(r);
    let (mh, mu) = (h.algebra().mult_matrix(), u.algebra().mult_matrix());
    let (dh, du) = (h.coalgebra().comult(), u.coalgebra().comult());
    let (sh, su) = (h.antipode(), u.antipode());
    let mut rep = Report::new("matched-pair");

    let bad = first_mismatch(
        f,
        &[n, n, m],
        |t| t.apply(0, 2, &mh, &[n]).apply(0, 2, &tri_r, &[m]),
        |t| t.apply(1, 2, &tri_r, &[m]).apply(0, 2, &tri_r, &[m]),
    );
    let unit = first_mismatch(f, &[m], |t| vt(&h.one()).otimes(&t).apply(0, 2, &tri_r, &[m]), |t| t);
    rep.check(
        "tri-r-module",
        bad.map(|i| tuple_label(&[hl, hl, ul], &i))
            .or(unit.map(|i| tuple_label(&[ul], &i))),
    );
    let bad = first_mismatch(
        f,
        &[n, m, m],
        |t| t.apply(1, 2, &mu, &[m]).apply(0, 2, &tri_l, &[n]),
        |t| t.apply(0, 2, &tri_l, &[n]).apply(0, 2, &tri_l, &[n]),
    );
    let unit = first_mismatch(f, &[n], |t| t.otimes(&vt(&u.one())).apply(0, 2, &tri_l, &[n]), |t| t);
    rep.check(
        "tri-l-module",
        bad.map(|i| tuple_label(&[hl, ul, ul], &i))
            .or(unit.map(|i| tuple_label(&[hl], &i))),
    );

    let split = |t: Tensor| t.apply(0, 1, dh, &[n, n]).apply(2, 1, du, &[m, m]);
    for (id, perm) in [("reconstruction", [0, 2, 1, 3]), ("reconstruction-swapped", [1, 3, 0, 2])] {
        let bad = first_mismatch(
            f,
            &[n, m],
            |t| t.apply(0, 2, map, &[m, n]),
            |t| {
                split(t)
                    .permute(&perm)
                    .apply(0, 2, &tri_r, &[m])
                    .apply(1, 2, &tri_l, &[n])
            },
        );
        rep.check(id, bad.map(|i| tuple_label(&[hl, ul], &i)));
    }

    let bad = first_mismatch(
        f,
        &[n, m],
        |t| t.apply(0, 2, &tri_r, &[m]).apply1(0, su),
        |t| {
            t.apply(1, 1, du, &[m, m])
                .apply(0, 2, &tri_l, &[n])
                .apply1(1, su)
                .apply(0, 2, &tri_r, &[m])
        },
    );
    rep.check("s-tri-r", bad.map(|i| tuple_label(&[hl, ul], &i)));
    let bad = first_mismatch(
        f,
        &[n, m],
        |t| t.apply(0, 2, &tri_l, &[n]).apply1(0, sh),
        |t| {
            t.apply(0, 1, dh, &[n, n])
                .apply(1, 2, &tri_r, &[m])
                .apply1(0, sh)
                .apply(0, 2, &tri_l, &[n])
        },
    );
    rep.check("s-tri-l", bad.map(|i| tuple_label(&[hl, ul], &i)));

    let bad = first_mismatch(
        f,
        &[n, m],
        |t| {
            t.apply(0, 1, dh, &[n, n])
                .apply(1, 2, map, &[m, n])
                .apply1(0, sh)
                .apply(0, 2, map, &[m, n])
        },
        |t| {
            t.apply(1, 1, du, &[m, m])
                .permute(&[1, 0, 2])
                .apply(1, 2, &tri_l, &[n])
                .apply(1, 1, dh, &[n, n])
                .apply1(1, sh)
        },
    );
    rep.check("w1", bad.map(|i| tuple_label(&[hl, ul], &i)));
    let bad = first_mismatch(
        f,
        &[n, m],
        |t| {
            t.apply(1, 1, du, &[m, m])
                .apply(0, 2, map, &[m, n])
                .apply1(2, su)
                .apply(1, 2, map, &[m, n])
        },
        |t| {
            t.apply(0, 1, dh, &[n, n])
                .permute(&[0, 2, 1])
                .apply(0, 2, &tri_r, &[m])
                .apply(0, 1, du, &[m, m])
                .apply1(1, su)
        },
    );
    rep.check("w2", bad.map(|i| tuple_label(&[hl, ul], &i)));

    let (mut black_r, mut black_l) = (None, None);
    if let (Some(shi), Some(sui)) = (h.antipode_inverse(), u.antipode_inverse()) {
        let (rp, inv_rep) = invert_twist(r)?;
        rep.absorb("inverse", inv_rep);
        let rpm = rp.map();
        let br = Matrix::identity(f, n).tensor(&counit_row(u)).compose(rpm);
        let bl = counit_row(h).tensor(&Matrix::identity(f, m)).compose(rpm);
        let bad = first_mismatch(
            f,
            &[m, m, n],
            |t| t.apply(0, 2, &mu, &[m]).apply(0, 2, &br, &[n]),
            |t| t.apply(1, 2, &br, &[n]).apply(0, 2, &br, &[n]),
        );
        let unit = first_mismatch(f, &[n], |t| vt(&u.one()).otimes(&t).apply(0, 2, &br, &[n]), |t| t);
        rep.check(
            "black-r-module",
            bad.map(|i| tuple_label(&[ul, ul, hl], &i))
                .or(unit.map(|i| tuple_label(&[hl], &i))),
        );
        let bad = first_mismatch(
            f,
            &[m, n, n],
            |t| t.apply(1, 2, &mh, &[n]).apply(0, 2, &bl, &[m]),
            |t| t.apply(0, 2, &bl, &[m]).apply(0, 2, &bl, &[m]),
        );
        let unit = first_mismatch(f, &[m], |t| t.otimes(&vt(&h.one())).apply(0, 2, &bl, &[m]), |t| t);
        rep.check(
            "black-l-module",
            bad.map(|i| tuple_label(&[ul, hl, hl], &i))
                .or(unit.map(|i| tuple_label(&[ul], &i))),
        );
        let bad = first_mismatch(
            f,
            &[m, n],
            |t| t.apply(0, 2, rpm, &[n, m]),
            |t| {
                t.apply(0, 1, du, &[m, m])
                    .apply(2, 1, dh, &[n, n])
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, &br, &[n])
                    .apply(1, 2, &bl, &[m])
            },
        );
        rep.check("black-reconstruction", bad.map(|i| tuple_label(&[ul, hl], &i)));
        // u ◮ h = S_H(S_H⁻¹(h) ◁ S_U⁻¹(u)), u ◭ h = S_U(S_H⁻¹(h) ▷ S_U⁻¹(u))
        let pre = |t: Tensor| t.apply1(0, sui).apply1(1, shi).permute(&[1, 0]);
        let bad = first_mismatch(
            f,
            &[m, n],
            |t| t.apply(0, 2, &br, &[n]),
            |t| pre(t).apply(0, 2, &tri_l, &[n]).apply1(0, sh),
        )
        .or(first_mismatch(
            f,
            &[m, n],
            |t| t.apply(0, 2, &bl, &[m]),
            |t| pre(t).apply(0, 2, &tri_r, &[m]).apply1(0, su),
        ));
        rep.check("black-closed-form", bad.map(|i| tuple_label(&[ul, hl], &i)));
        black_r = Some(br);
        black_l = Some(bl);
    } else {
        rep.skip("black-actions", "an antipode is not invertible");
    }
    Ok((
        MatchedPairActions {
            tri_r,
            tri_l,
            black_r,
            black_l,
        },
        rep,
    ))
}
