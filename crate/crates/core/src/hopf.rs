//! Finite-dimensional algebras, coalgebras and Hopf algebras as structure
//! constants on a fixed basis, with axiom verifiers and the standard
//! constructors (group algebras, their duals, Sweedler's algebra, duals,
//! opposites and tensor products).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::Group;
use crate::linalg::{
    axpy, flip_matrix, is_zero_vec, kron_vec, map_from_fn, unit_vec, zero_vec, Matrix, Subspace,
    Tensor, Vector,
};
use crate::report::Report;

/// Sparse structure constants: entry `i * n + j` lists the nonzero
/// coordinates of `e_i e_j`.
type Table = Vec<Vec<(usize, Scalar)>>;

/// A finite-dimensional algebra. `e_i e_j = Σ_k mult[k, i n + j] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    field: FieldSpec,
    dim: usize,
    table: Table,
    unit: Vector,
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl AlgebraData {
    /// From the linearized multiplication `k^{n·n} → k^n` and the unit vector.
    pub fn new(field: FieldSpec, dim: usize, mult: &Matrix, unit: Vector) -> Result<Self> {
        if mult.rows() != dim || mult.cols() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra of dim {dim}: mult is {}x{}, unit has length {}",
                mult.rows(),
                mult.cols(),
                unit.len()
            )));
        }
        if mult.field() != field {
            return Err(Error::DimensionMismatch("multiplication over another field".into()));
        }
        let table = (0..dim * dim).map(|c| mult.column_entries(c)).collect();
        Ok(AlgebraData {
            field,
            dim,
            table,
            unit,
        })
    }

    /// From a closure computing `e_i e_j`.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        unit: Vector,
        f: impl Fn(usize, usize) -> Vector,
    ) -> Self {
        assert_eq!(unit.len(), dim, "unit length");
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product length");
                table.push(sparse(&v));
            }
        }
        AlgebraData {
            field,
            dim,
            table,
            unit,
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        Self::from_products(field, 1, vec![field.one()], |_, _| vec![field.one()])
    }

    /// `End(k^n)` with basis `E_{ij}` at index `i n + j`.
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> Self {
        let mut unit = zero_vec(field, n * n);
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Self::from_products(field, n * n, unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut v = zero_vec(field, n * n);
            if j == k {
                v[i * n + l] = field.one();
            }
            v
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Nonzero coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_product_vec(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.field, self.dim);
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// The linearized multiplication `k^{n·n} → k^n`.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n * n);
        for (c, entries) in self.table.iter().enumerate() {
            for (k, v) in entries {
                m.set(*k, c, v.clone());
            }
        }
        m
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Product of a sequence of elements; the unit for an empty sequence.
    pub fn mul_all<'a>(&self, xs: impl IntoIterator<Item = &'a Vector>) -> Vector {
        xs.into_iter()
            .fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim, i)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let table = (0..n * n)
            .map(|c| self.table[(c % n) * n + c / n].clone())
            .collect();
        AlgebraData {
            field: self.field,
            dim: n,
            table,
            unit: self.unit.clone(),
        }
    }

    /// Tensor product algebra on `k^n ⊗ k^m`, basis `(i, j)` at `i m + j`.
    pub fn tensor(&self, other: &AlgebraData) -> Self {
        let m = other.dim;
        let f = self.field;
        Self::from_products(f, self.dim * m, kron_vec(&self.unit, &other.unit), |x, y| {
            kron_vec(
                &self.basis_product_vec(x / m, y / m),
                &other.basis_product_vec(x % m, y % m),
            )
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Products `a b` for all basis vectors `a` of `x`, `b` of `y`.
    pub fn subspace_product(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in x.basis_vectors() {
            for b in y.basis_vectors() {
                let p = self.mul(&a, &b);
                if !is_zero_vec(&p) {
                    vs.push(p);
                }
            }
        }
        Subspace::span(self.field, self.dim, vs)
    }

    /// The subalgebra generated by `gens` (always containing the unit).
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut span = Subspace::span(self.field, self.dim, vec![self.unit.clone()]);
        loop {
            let mut vs = span.basis_vectors();
            for b in span.basis_vectors() {
                for g in gens {
                    vs.push(self.mul(&b, g));
                }
            }
            let next = Subspace::span(self.field, self.dim, vs);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Quotient algebra by a two-sided ideal, in the coordinates of
    /// [`Subspace::quotient_projection`]. Returns the algebra, the projection
    /// and a section (lifting quotient coordinates to representatives).
    pub fn quotient(&self, ideal: &Subspace) -> (AlgebraData, Matrix, Matrix) {
        let proj = ideal.quotient_projection();
        let q = proj.rows();
        let pivots = ideal.pivots();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let mut section = Matrix::zeros(self.field, self.dim, q);
        for (r, &f) in free.iter().enumerate() {
            section.set(f, r, self.field.one());
        }
        let alg = AlgebraData::from_products(self.field, q, proj.apply(&self.unit), |i, j| {
            proj.apply(&self.mul(&section.column(i), &section.column(j)))
        });
        (alg, proj, section)
    }
}

/// Checks associativity and the two unit laws on basis tuples.
pub fn verify_algebra(a: &AlgebraData) -> Report {
    let mut r = Report::new("algebra");
    let n = a.dim;
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (t, c) in a.basis_product(i, j) {
                    for (u, d) in a.basis_product(*t, k) {
                        sparse_acc(&mut left, *u, c * d);
                    }
                }
                let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (t, c) in a.basis_product(j, k) {
                    for (u, d) in a.basis_product(i, *t) {
                        sparse_acc(&mut right, *u, c * d);
                    }
                }
                if left != right {
                    witness = Some(format!("({i}, {j}, {k})"));
                    break 'outer;
                }
            }
        }
    }
    r.check("associativity", witness);
    let left_unit = (0..n).find(|&i| a.mul(&a.unit, &a.basis(i)) != a.basis(i));
    r.check("left-unit", left_unit.map(|i| format!("({i})")));
    let right_unit = (0..n).find(|&i| a.mul(&a.basis(i), &a.unit) != a.basis(i));
    r.check("right-unit", right_unit.map(|i| format!("({i})")));
    r
}

fn sparse_acc<K: Ord>(acc: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let remove = match acc.get_mut(&key) {
        Some(v) => {
            *v = &*v + &c;
            v.is_zero()
        }
        None => {
            acc.insert(key, c);
            return;
        }
    };
    if remove {
        acc.remove(&key);
    }
}

/// A finite-dimensional coalgebra; `Δ(e_k) = Σ comult[i n + j, k] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    field: FieldSpec,
    dim: usize,
    comult: Matrix,
    counit: Vector,
}

impl CoalgebraData {
    pub fn new(field: FieldSpec, dim: usize, comult: Matrix, counit: Vector) -> Result<Self> {
        if comult.rows() != dim * dim || comult.cols() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "coalgebra of dim {dim}: comult is {}x{}, counit has length {}",
                comult.rows(),
                comult.cols(),
                counit.len()
            )));
        }
        Ok(CoalgebraData {
            field,
            dim,
            comult,
            counit,
        })
    }

    pub fn from_coproducts(
        field: FieldSpec,
        dim: usize,
        counit: Vector,
        f: impl Fn(usize) -> Vector,
    ) -> Self {
        let cols: Vec<Vector> = (0..dim).map(f).collect();
        let comult = Matrix::from_columns(field, dim * dim, &cols);
        Self::new(field, dim, comult, counit).expect("coalgebra shape")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Vector {
        self.comult.apply(v)
    }

    /// `Δ(e_k)` as `(i, j, coefficient)` triples.
    pub fn coproduct_terms(&self, k: usize) -> Vec<(usize, usize, Scalar)> {
        self.comult
            .column_entries(k)
            .into_iter()
            .map(|(ij, c)| (ij / self.dim, ij % self.dim, c))
            .collect()
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        v.iter()
            .zip(&self.counit)
            .fold(self.field.zero(), |acc, (x, e)| &acc + &(x * e))
    }

    /// `Δ^{(2)} = (Δ ⊗ id) Δ : k^n → k^{n³}`.
    pub fn double_coproduct(&self, v: &[Scalar]) -> Vector {
        let n = self.dim;
        Tensor::new(vec![n, n], self.coproduct(v))
            .apply(0, 1, &self.comult, &[n, n])
            .flat()
    }
}

/// Checks coassociativity and the counit laws on basis elements.
pub fn verify_coalgebra(c: &CoalgebraData) -> Report {
    let mut r = Report::new("coalgebra");
    let n = c.dim;
    let f = c.field;
    let terms: Vec<Vec<(usize, usize, Scalar)>> = (0..n).map(|k| c.coproduct_terms(k)).collect();
    let coassoc = (0..n).find(|&k| {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (i, j, x) in &terms[k] {
            for (a, b, y) in &terms[*i] {
                sparse_acc(&mut left, (*a, *b, *j), x * y);
            }
            for (a, b, y) in &terms[*j] {
                sparse_acc(&mut right, (*i, *a, *b), x * y);
            }
        }
        left != right
    });
    r.check("coassociativity", coassoc.map(|k| format!("({k})")));
    let eps = Matrix::row_vector(f, c.counit.clone());
    let left = (0..n).find(|&k| {
        let d = Tensor::new(vec![n, n], c.coproduct(&unit_vec(f, n, k)));
        d.apply(0, 1, &eps, &[1]).data != unit_vec(f, n, k)
    });
    r.check("left-counit", left.map(|k| format!("({k})")));
    let right = (0..n).find(|&k| {
        let d = Tensor::new(vec![n, n], c.coproduct(&unit_vec(f, n, k)));
        d.apply(1, 1, &eps, &[1]).data != unit_vec(f, n, k)
    });
    r.check("right-counit", right.map(|k| format!("({k})")));
    r
}

/// A finite-dimensional Hopf algebra with named basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    labels: Vec<String>,
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    antipode: Matrix,
    antipode_inverse: Option<Matrix>,
}

impl HopfData {
    /// Assembles the data without verifying axioms; the antipode inverse is
    /// computed when it exists.
    pub fn new(
        labels: Vec<String>,
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim;
        if coalgebra.dim != n
            || labels.len() != n
            || antipode.rows() != n
            || antipode.cols() != n
            || algebra.field != coalgebra.field
        {
            return Err(Error::DimensionMismatch(format!(
                "hopf algebra components disagree (algebra dim {n}, coalgebra dim {}, {} labels, antipode {}x{})",
                coalgebra.dim,
                labels.len(),
                antipode.rows(),
                antipode.cols()
            )));
        }
        let antipode_inverse = antipode.inverse();
        Ok(HopfData {
            labels,
            algebra,
            coalgebra,
            antipode,
            antipode_inverse,
        })
    }

    /// Verifies every axiom and fails with the first broken one.
    pub fn checked(self) -> Result<Self> {
        let rep = verify_hopf(&self);
        match rep.failures().first() {
            None => Ok(self),
            Some(it) => Err(Error::Verification(format!("{} at {}", it.id, it.witness))),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "label count");
        self.labels = labels;
        self
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inverse.as_ref()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn one(&self) -> Vector {
        self.algebra.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Vector {
        self.coalgebra.coproduct(v)
    }

    pub fn coproduct_terms(&self, k: usize) -> Vec<(usize, usize, Scalar)> {
        self.coalgebra.coproduct_terms(k)
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        self.coalgebra.counit_of(v)
    }

    pub fn s(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v)
    }

    pub fn label_of(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the basis element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// `Δ` and `ε` are unital algebra maps.
pub fn verify_bialgebra(h: &HopfData) -> Report {
    let mut r = Report::new("bialgebra");
    let n = h.dim();
    let f = h.field();
    // Sparse on both sides: H ⊗ H is never materialized.
    let terms: Vec<Vec<(usize, usize, Scalar)>> = (0..n).map(|k| h.coproduct_terms(k)).collect();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let mut lhs = BTreeMap::new();
            for (t, c) in h.algebra.basis_product(i, j) {
                for (a, b, x) in &terms[*t] {
                    sparse_acc(&mut lhs, (*a, *b), c * x);
                }
            }
            let mut rhs = BTreeMap::new();
            for (a, b, x) in &terms[i] {
                for (c, d, y) in &terms[j] {
                    let xy = x * y;
                    for (p, u) in h.algebra.basis_product(*a, *c) {
                        let xyu = &xy * u;
                        for (q, v) in h.algebra.basis_product(*b, *d) {
                            sparse_acc(&mut rhs, (*p, *q), &xyu * v);
                        }
                    }
                }
            }
            if lhs != rhs {
                witness = Some(format!("({}, {})", h.labels[i], h.labels[j]));
                break 'outer;
            }
        }
    }
    r.check("comult-multiplicative", witness);
    r.check_bool(
        "comult-unital",
        h.coproduct(&h.one()) == kron_vec(&h.one(), &h.one()),
        "Δ(1) ≠ 1⊗1",
    );
    let eps = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            h.counit_of(&h.algebra.basis_product_vec(i, j))
                != &h.coalgebra.counit[i] * &h.coalgebra.counit[j]
        });
    r.check(
        "counit-multiplicative",
        eps.map(|(i, j)| format!("({}, {})", h.labels[i], h.labels[j])),
    );
    r.check_bool("counit-unital", h.counit_of(&h.one()) == f.one(), "ε(1) ≠ 1");
    r
}

/// `m (S ⊗ id) Δ = η ε = m (id ⊗ S) Δ`, and `S⁻¹ S = id` when `S⁻¹` is stored.
pub fn verify_antipode(h: &HopfData) -> Report {
    let mut r = Report::new("antipode");
    let n = h.dim();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for k in 0..n {
        let expected: Vector = h.one().iter().map(|x| x * &h.coalgebra.counit[k]).collect();
        let mut l = zero_vec(h.field(), n);
        let mut rt = zero_vec(h.field(), n);
        for (i, j, c) in h.coproduct_terms(k) {
            axpy(&mut l, &c, &h.mul(&h.s(&h.basis(i)), &h.basis(j)));
            axpy(&mut rt, &c, &h.mul(&h.basis(i), &h.s(&h.basis(j))));
        }
        if l != expected {
            left.push(h.labels[k].clone());
        }
        if rt != expected {
            right.push(h.labels[k].clone());
        }
    }
    // witnesses list every failing basis element
    r.check("antipode-left", (!left.is_empty()).then(|| left.join(", ")));
    r.check("antipode-right", (!right.is_empty()).then(|| right.join(", ")));
    match &h.antipode_inverse {
        Some(inv) => r.check_bool(
            "antipode-inverse",
            inv.compose(&h.antipode).is_identity() && h.antipode.compose(inv).is_identity(),
            "S⁻¹ S ≠ id",
        ),
        None => r.skip("antipode-inverse", "antipode not invertible"),
    }
    r
}

/// All algebra, coalgebra, bialgebra and antipode checks.
pub fn verify_hopf(h: &HopfData) -> Report {
    let mut r = Report::new("hopf");
    r.absorb("algebra", verify_algebra(&h.algebra));
    r.absorb("coalgebra", verify_coalgebra(&h.coalgebra));
    r.absorb("bialgebra", verify_bialgebra(h));
    r.absorb("antipode", verify_antipode(h));
    r
}

/// `kG`: basis the group elements, `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(group: &Group, field: FieldSpec) -> HopfData {
    let n = group.order();
    let algebra = AlgebraData::from_products(field, n, unit_vec(field, n, group.identity()), |a, b| {
        unit_vec(field, n, group.mul(a, b))
    });
    let coalgebra = CoalgebraData::from_coproducts(field, n, vec![field.one(); n], |g| {
        unit_vec(field, n * n, g * n + g)
    });
    let antipode = Matrix::from_columns(
        field,
        n,
        &(0..n).map(|g| unit_vec(field, n, group.inv(g))).collect::<Vec<_>>(),
    );
    HopfData::new(group.labels().to_vec(), algebra, coalgebra, antipode)
        .expect("group algebra shape")
        .checked()
        .expect("group algebra axioms")
}

/// `kG*`: basis `p_g`, `p_g p_h = δ_{g,h} p_g`, `Δ(p_g) = Σ_{ab=g} p_a ⊗ p_b`,
/// `ε(p_g) = δ_{g,1}`, `S(p_g) = p_{g⁻¹}`.
pub fn dual_group_algebra(group: &Group, field: FieldSpec) -> HopfData {
    let n = group.order();
    let algebra = AlgebraData::from_products(field, n, vec![field.one(); n], |a, b| {
        if a == b {
            unit_vec(field, n, a)
        } else {
            zero_vec(field, n)
        }
    });
    let coalgebra = CoalgebraData::from_coproducts(field, n, unit_vec(field, n, group.identity()), |g| {
        let mut v = zero_vec(field, n * n);
        for a in 0..n {
            let b = group.mul(group.inv(a), g);
            v[a * n + b] = field.one();
        }
        v
    });
    let antipode = Matrix::from_columns(
        field,
        n,
        &(0..n).map(|g| unit_vec(field, n, group.inv(g))).collect::<Vec<_>>(),
    );
    let labels = group.labels().iter().map(|l| format!("p_{l}")).collect();
    HopfData::new(labels, algebra, coalgebra, antipode)
        .expect("dual group algebra shape")
        .checked()
        .expect("dual group algebra axioms")
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfData> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidField(
            "Sweedler's algebra needs characteristic different from 2".into(),
        ));
    }
    // g^a x^b sits at index a + 2b; x g = -g x, x^2 = 0
    let algebra = AlgebraData::from_products(field, 4, unit_vec(field, 4, 0), |p, q| {
        let (a, b) = (p % 2, p / 2);
        let (c, d) = (q % 2, q / 2);
        let mut v = zero_vec(field, 4);
        if b + d < 2 {
            let sign = if b * c == 1 { -1 } else { 1 };
            v[(a + c) % 2 + 2 * (b + d)] = field.from_i64(sign);
        }
        v
    });
    let hh = algebra.tensor(&algebra);
    let e = |i| unit_vec(field, 4, i);
    let dg = kron_vec(&e(1), &e(1));
    let dx = crate::linalg::vec_add(&kron_vec(&e(2), &e(0)), &kron_vec(&e(1), &e(2)));
    let d1 = kron_vec(&e(0), &e(0));
    let dgx = hh.mul(&dg, &dx);
    let coproducts = [d1, dg, dx, dgx];
    let coalgebra = CoalgebraData::from_coproducts(
        field,
        4,
        vec![field.one(), field.one(), field.zero(), field.zero()],
        |k| coproducts[k].clone(),
    );
    let m1 = field.from_i64(-1);
    let antipode = Matrix::from_columns(
        field,
        4,
        &[e(0), e(1), crate::linalg::vec_scale(&m1, &e(3)), e(2)],
    );
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    HopfData::new(labels, algebra, coalgebra, antipode)?.checked()
}

/// The dual Hopf algebra on the dual basis: all structure maps transposed.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let f = h.field();
    let n = h.dim();
    let algebra = AlgebraData::new(f, n, &h.coalgebra.comult.transpose(), h.coalgebra.counit.clone())
        .expect("dual algebra shape");
    let coalgebra = CoalgebraData::new(f, n, h.algebra.mult_matrix().transpose(), h.algebra.unit.clone())
        .expect("dual coalgebra shape");
    let labels = h.labels.iter().map(|l| format!("{l}*")).collect();
    HopfData::new(labels, algebra, coalgebra, h.antipode.transpose()).expect("dual shape")
}

/// `H^op`: opposite multiplication, same coalgebra, antipode `S⁻¹`.
pub fn opposite(h: &HopfData) -> Result<HopfData> {
    let inv = h
        .antipode_inverse
        .clone()
        .ok_or_else(|| Error::Precondition("opposite Hopf algebra needs an invertible antipode".into()))?;
    HopfData::new(
        h.labels.clone(),
        h.algebra.opposite(),
        h.coalgebra.clone(),
        inv,
    )
}

/// `H^cop`: same algebra, flipped comultiplication, antipode `S⁻¹`.
pub fn co_opposite(h: &HopfData) -> Result<HopfData> {
    let inv = h
        .antipode_inverse
        .clone()
        .ok_or_else(|| Error::Precondition("co-opposite Hopf algebra needs an invertible antipode".into()))?;
    let n = h.dim();
    let comult = flip_matrix(h.field(), n, n).compose(&h.coalgebra.comult);
    let coalgebra = CoalgebraData::new(h.field(), n, comult, h.coalgebra.counit.clone())?;
    HopfData::new(h.labels.clone(), h.algebra.clone(), coalgebra, inv)
}

/// `A ⊗ B` with componentwise structure; basis `(i, j)` at `i dim_B + j`.
pub fn tensor_bialgebra(a: &HopfData, b: &HopfData) -> HopfData {
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let algebra = a.algebra.tensor(&b.algebra);
    let comult = map_from_fn(f, &[n, m], n * m * n * m, |t| {
        t.apply(0, 1, &a.coalgebra.comult, &[n, n])
            .apply(2, 1, &b.coalgebra.comult, &[m, m])
            .permute(&[0, 2, 1, 3])
    });
    let coalgebra = CoalgebraData::new(
        f,
        n * m,
        comult,
        kron_vec(&a.coalgebra.counit, &b.coalgebra.counit),
    )
    .expect("tensor coalgebra shape");
    let labels = (0..n * m)
        .map(|x| format!("{}⊗{}", a.labels[x / m], b.labels[x % m]))
        .collect();
    HopfData::new(labels, algebra, coalgebra, a.antipode.tensor(&b.antipode)).expect("tensor shape")
}

/// Primitive elements: the kernel of `x ↦ Δx − x⊗1 − 1⊗x`.
pub fn primitives(h: &HopfData) -> Subspace {
    let f = h.field();
    let n = h.dim();
    let one = Matrix::from_columns(f, n, &[h.one()]);
    let id = Matrix::identity(f, n);
    let m = h
        .coalgebra
        .comult
        .sub(&id.tensor(&one))
        .and_then(|m| m.sub(&one.tensor(&id)))
        .expect("primitive map shape");
    m.kernel()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Algebra,
    Coalgebra,
    Hopf,
}

/// A named linear map between two structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismData {
    pub name: String,
    pub map: Matrix,
}

impl MorphismData {
    pub fn new(name: impl Into<String>, map: Matrix) -> Self {
        MorphismData {
            name: name.into(),
            map,
        }
    }
}

/// Unit preservation and multiplicativity on basis pairs.
pub fn verify_algebra_map(src: &AlgebraData, tgt: &AlgebraData, map: &Matrix) -> Result<Report> {
    if map.cols() != src.dim || map.rows() != tgt.dim {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            map.rows(),
            map.cols(),
            tgt.dim,
            src.dim
        )));
    }
    let mut r = Report::new("algebra-map");
    r.check_bool("unital", map.apply(&src.unit) == tgt.unit, "f(1) ≠ 1");
    let images: Vec<Vector> = (0..src.dim).map(|i| map.column(i)).collect();
    let mut witness = None;
    'outer: for i in 0..src.dim {
        for j in 0..src.dim {
            if map.apply(&src.basis_product_vec(i, j)) != tgt.mul(&images[i], &images[j]) {
                witness = Some(format!("({i}, {j})"));
                break 'outer;
            }
        }
    }
    r.check("multiplicative", witness);
    Ok(r)
}

/// Comultiplicativity and counit preservation on basis elements.
pub fn verify_coalgebra_map(src: &CoalgebraData, tgt: &CoalgebraData, map: &Matrix) -> Result<Report> {
    if map.cols() != src.dim || map.rows() != tgt.dim {
        return Err(Error::DimensionMismatch("coalgebra map shape".into()));
    }
    let mut r = Report::new("coalgebra-map");
    let ff = map.tensor(map);
    let bad = (0..src.dim).find(|&k| {
        let e = unit_vec(src.field, src.dim, k);
        ff.apply(&src.coproduct(&e)) != tgt.coproduct(&map.apply(&e))
    });
    r.check("comultiplicative", bad.map(|k| format!("({k})")));
    let bad = (0..src.dim).find(|&k| tgt.counit_of(&map.column(k)) != src.counit[k]);
    r.check("counit", bad.map(|k| format!("({k})")));
    Ok(r)
}

pub fn verify_morphism(
    map: &Matrix,
    src: &HopfData,
    tgt: &HopfData,
    kind: MorphismKind,
) -> Result<Report> {
    let mut r = Report::new("morphism");
    if matches!(kind, MorphismKind::Algebra | MorphismKind::Hopf) {
        r.absorb("algebra", verify_algebra_map(&src.algebra, &tgt.algebra, map)?);
    }
    if matches!(kind, MorphismKind::Coalgebra | MorphismKind::Hopf) {
        r.absorb("coalgebra", verify_coalgebra_map(&src.coalgebra, &tgt.coalgebra, map)?);
    }
    if kind == MorphismKind::Hopf {
        r.check_bool(
            "antipode",
            map.compose(&src.antipode) == tgt.antipode.compose(map),
            "f S ≠ S f",
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn group_algebras_pass() {
        let c2 = group_algebra(&Group::cyclic(2), q());
        assert!(verify_hopf(&c2).all_pass());
        assert_eq!(group_algebra(&Group::trivial(), q()).dim(), 1);
        let s3 = group_algebra(&Group::s3(), q());
        assert_eq!(s3.dim(), 6);
        let g = Group::s3();
        for a in 0..6 {
            assert_eq!(s3.s(&s3.basis(a)), s3.basis(g.inv(a)));
        }
        assert!(s3.antipode().pow(2).is_identity());
    }

    #[test]
    fn zero_antipode_fails_at_g() {
        let c2 = group_algebra(&Group::cyclic(2), q());
        let broken = HopfData::new(
            c2.labels().to_vec(),
            c2.algebra().clone(),
            c2.coalgebra().clone(),
            Matrix::zeros(q(), 2, 2),
        )
        .unwrap();
        let rep = verify_antipode(&broken);
        assert!(!rep.all_pass());
        assert_eq!(rep.get("antipode-left").unwrap().witness, "1, g");
        assert_eq!(rep.get("antipode-right").unwrap().witness, "1, g");
    }

    #[test]
    fn sweedler_facts() {
        let h = sweedler_h4(q()).unwrap();
        assert!(verify_hopf(&h).all_pass());
        let s = h.antipode();
        assert!(!s.pow(2).is_identity());
        assert!(s.pow(4).is_identity());
        assert!(sweedler_h4(f2()).is_err());
        assert!(sweedler_h4(FieldSpec::prime(3).unwrap()).is_ok());
        assert_eq!(primitives(&h).dim(), 0);
    }

    #[test]
    fn dual_group_algebra_char2() {
        let h = dual_group_algebra(&Group::cyclic(2), f2());
        // Δ(p_1) = p_1⊗p_1 + p_g⊗p_g
        let d = h.coproduct(&h.basis(0));
        let expected = crate::linalg::vec_add(
            &kron_vec(&h.basis(0), &h.basis(0)),
            &kron_vec(&h.basis(1), &h.basis(1)),
        );
        assert_eq!(d, expected);
        assert_eq!(dual_group_algebra(&Group::trivial(), q()).dim(), 1);
        assert_eq!(primitives(&h).dim(), 1);
    }

    #[test]
    fn double_dual_is_original() {
        for h in [
            group_algebra(&Group::s3(), q()),
            sweedler_h4(q()).unwrap(),
            dual_group_algebra(&Group::cyclic(3), q()),
        ] {
            let dd = dual_hopf(&dual_hopf(&h));
            assert!(verify_hopf(&dual_hopf(&h)).all_pass());
            assert_eq!(dd.algebra(), h.algebra());
            assert_eq!(dd.coalgebra(), h.coalgebra());
            assert_eq!(dd.antipode(), h.antipode());
        }
    }

    #[test]
    fn dual_of_kc2_is_kc2_in_char0() {
        let h = group_algebra(&Group::cyclic(2), q());
        let d = dual_hopf(&h);
        // 1* + g* ↦ 1, 1* - g* ↦ g
        let half = q().fraction(1, 2).unwrap();
        let phi = Matrix::from_rows(
            q(),
            vec![vec![half.clone(), half.clone()], vec![half.clone(), -&half]],
            2,
        );
        assert!(verify_morphism(&phi, &d, &h, MorphismKind::Hopf).unwrap().all_pass());
    }

    #[test]
    fn tensor_of_c2_is_klein() {
        let c2 = group_algebra(&Group::cyclic(2), q());
        let t = tensor_bialgebra(&c2, &c2);
        assert!(verify_hopf(&t).all_pass());
        let v4 = group_algebra(&Group::cyclic(2).product(&Group::cyclic(2)), q());
        assert_eq!(t.algebra(), v4.algebra());
        assert_eq!(t.coalgebra(), v4.coalgebra());
        let inc1 = Matrix::identity(q(), 2).tensor(&Matrix::from_columns(q(), 2, &[c2.one()]));
        let inc2 = Matrix::from_columns(q(), 2, &[c2.one()]).tensor(&Matrix::identity(q(), 2));
        assert!(verify_morphism(&inc1, &c2, &t, MorphismKind::Hopf).unwrap().all_pass());
        assert!(verify_morphism(&inc2, &c2, &t, MorphismKind::Hopf).unwrap().all_pass());
    }

    #[test]
    fn morphism_examples() {
        let h = sweedler_h4(q()).unwrap();
        let id = Matrix::identity(q(), 4);
        assert!(verify_morphism(&id, &h, &h, MorphismKind::Hopf).unwrap().all_pass());
        let eps = Matrix::row_vector(q(), h.coalgebra().counit().clone());
        assert!(verify_algebra_map(h.algebra(), &AlgebraData::ground(q()), &eps)
            .unwrap()
            .all_pass());
        let rep = verify_morphism(h.antipode(), &h, &h, MorphismKind::Algebra).unwrap();
        assert!(!rep.all_pass());
    }

    #[test]
    fn opposite_and_cop_are_hopf() {
        let h = sweedler_h4(q()).unwrap();
        assert!(verify_hopf(&opposite(&h).unwrap()).all_pass());
        assert!(verify_hopf(&co_opposite(&h).unwrap()).all_pass());
    }

    #[test]
    fn matrix_algebra_is_associative() {
        assert!(verify_algebra(&AlgebraData::matrix_algebra(q(), 2)).all_pass());
        assert!(verify_algebra(&AlgebraData::ground(f2())).all_pass());
    }
}
