//! Degree-truncated quotients of the tensor algebra `T(H)` standing in for
//! `H_par` and `A_par`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{verify_algebra, verify_algebra_map, AlgebraData, HopfData};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::report::Report;

use super::words::{Poly, Rewriter, Word};

/// Which universal algebra a presentation describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParKind {
    /// Generators `[h]`.
    Hpar,
    /// Generators `ε_h`.
    Apar,
}

impl ParKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParKind::Hpar => "H_par",
            ParKind::Apar => "A_par",
        }
    }
}

fn lift(f: FieldSpec, v: &[Scalar]) -> Poly {
    let mut p = Poly::zero();
    for (i, c) in v.iter().enumerate() {
        p.add_term(Word::letter(i), c.clone());
    }
    let _ = f;
    p
}

/// Defining relations of `H_par` as polynomials in the letters `[e_i]`:
/// `[1_H] − 1`, and for basis `h, k` the two families
/// `[h][k_(1)][S k_(2)] − [h k_(1)][S k_(2)]` and
/// `[h_(1)][S h_(2)][k] − [h_(1)][S(h_(2)) k]`.
pub fn hpar_relations(h: &HopfData) -> Vec<Poly> {
    let f = h.field();
    let n = h.dim();
    let mut rels = vec![lift(f, &h.one()).sub(&Poly::constant(f.one()))];
    let b = |v: &Vector| lift(f, v);
    let s: Vec<Poly> = (0..n).map(|i| b(&h.s(&h.basis(i)))).collect();
    let e: Vec<Poly> = (0..n).map(|i| Poly::monomial(Word::letter(i), f.one())).collect();
    for x in 0..n {
        for k in 0..n {
            let mut r2 = Poly::zero();
            for (i, j, c) in h.coproduct_terms(k) {
                let t1 = e[x].mul(&e[i]).mul(&s[j]);
                let t2 = b(&h.algebra().basis_product_vec(x, i)).mul(&s[j]);
                r2 = r2.add(&t1.sub(&t2).scale(&c));
            }
            rels.push(r2);
            let mut r3 = Poly::zero();
            for (i, j, c) in h.coproduct_terms(x) {
                let t1 = e[i].mul(&s[j]).mul(&e[k]);
                let t2 = e[i].mul(&b(&h.mul(&h.s(&h.basis(j)), &h.basis(k))));
                r3 = r3.add(&t1.sub(&t2).scale(&c));
            }
            rels.push(r3);
        }
    }
    rels.retain(|p| !p.is_zero());
    rels
}

/// Defining relations of `A_par` in the letters `ε_{e_i}`: `ε_1 − 1`,
/// `ε_h − ε_{h_(1)} ε_{h_(2)}` and
/// `ε_{h_(1)} ε_{h_(2) k} − ε_{h_(1) k} ε_{h_(2)}`.
pub fn apar_relations(h: &HopfData) -> Vec<Poly> {
    let f = h.field();
    let n = h.dim();
    let e = |v: &Vector| lift(f, v);
    let mut rels = vec![e(&h.one()).sub(&Poly::constant(f.one()))];
    for x in 0..n {
        let mut r = e(&h.basis(x));
        for (i, j, c) in h.coproduct_terms(x) {
            r = r.sub(&e(&h.basis(i)).mul(&e(&h.basis(j))).scale(&c));
        }
        rels.push(r);
    }
    for x in 0..n {
        for k in 0..n {
            let mut r = Poly::zero();
            for (i, j, c) in h.coproduct_terms(x) {
                let t1 = e(&h.basis(i)).mul(&e(&h.algebra().basis_product_vec(j, k)));
                let t2 = e(&h.algebra().basis_product_vec(i, k)).mul(&e(&h.basis(j)));
                r = r.add(&t1.sub(&t2).scale(&c));
            }
            rels.push(r);
        }
    }
    rels.retain(|p| !p.is_zero());
    rels
}

/// Replaces the generator of one basis element `e_{i0}` (with nonzero unit
/// coefficient) by its expression through the unit relation, so the
/// relation `[1_H] = 1` holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterMap {
    pivot: usize,
    /// Basis index of each letter.
    letter_basis: Vec<usize>,
    /// Image of each basis generator as a polynomial in the letters.
    images: Vec<Poly>,
}

impl LetterMap {
    pub fn new(unit: &[Scalar]) -> Self {
        let pivot = unit
            .iter()
            .position(|c| !c.is_zero())
            .expect("unit is nonzero");
        let n = unit.len();
        let letter_basis: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        let f = unit[pivot].field();
        let inv = unit[pivot].inv().expect("nonzero");
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            if i == pivot {
                let mut p = Poly::constant(inv.clone());
                for (x, &b) in letter_basis.iter().enumerate() {
                    p.add_term(Word::letter(x), -&(&inv * &unit[b]));
                }
                images.push(p);
            } else {
                let x = letter_basis.iter().position(|&b| b == i).expect("letter");
                images.push(Poly::monomial(Word::letter(x), f.one()));
            }
        }
        LetterMap {
            pivot,
            letter_basis,
            images,
        }
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn num_letters(&self) -> usize {
        self.letter_basis.len()
    }

    /// Basis index of `H` represented by letter `x`.
    pub fn basis_of_letter(&self, x: usize) -> usize {
        self.letter_basis[x]
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    /// Substitutes generator images into a polynomial in basis generators.
    pub fn substitute(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let mut term = Poly::constant(c.clone());
            for i in w.letters() {
                term = term.mul(&self.images[i]);
            }
            out = out.add(&term);
        }
        out
    }
}

/// A degree-`d` truncation of `H_par` or `A_par`.
#[derive(Clone, Debug)]
pub struct TruncatedQuotient {
    kind: ParKind,
    base: HopfData,
    degree: usize,
    letters: LetterMap,
    rewriter: Rewriter,
    relations: Vec<Poly>,
    basis: Vec<Word>,
    dims_by_degree: Vec<usize>,
    window: Option<usize>,
    certificate: Report,
    algebra: Option<AlgebraData>,
}

/// Sparse vector over basis-word indices.
type Sparse = BTreeMap<usize, Scalar>;

fn sparse_add(acc: &mut Sparse, i: usize, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&i) {
        Some(v) => {
            let s = &*v + &c;
            if s.is_zero() {
                acc.remove(&i);
            } else {
                *v = s;
            }
        }
        None => {
            acc.insert(i, c);
        }
    }
}

/// `H_par` truncated at word length `degree`.
pub fn truncated_hpar(h: &HopfData, degree: usize) -> Result<TruncatedQuotient> {
    TruncatedQuotient::build(ParKind::Hpar, h, degree)
}

/// `A_par` truncated at word length `degree`.
pub fn truncated_apar(h: &HopfData, degree: usize) -> Result<TruncatedQuotient> {
    TruncatedQuotient::build(ParKind::Apar, h, degree)
}

impl TruncatedQuotient {
    fn build(kind: ParKind, h: &HopfData, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("truncation degree must be at least 1".into()));
        }
        if h.dim() > 257 {
            return Err(Error::Unsupported("at most 256 generators".into()));
        }
        let f = h.field();
        let letters = LetterMap::new(&h.one());
        let raw = match kind {
            ParKind::Hpar => hpar_relations(h),
            ParKind::Apar => apar_relations(h),
        };
        let relations: Vec<Poly> = raw
            .iter()
            .map(|r| letters.substitute(r))
            .filter(|r| !r.is_zero())
            .collect();
        let mut rewriter = Rewriter::new(f, letters.num_letters(), degree);
        rewriter.complete(relations.iter().cloned());
        let basis = rewriter.normal_words(degree);
        let dims_by_degree = (0..=degree)
            .map(|l| basis.iter().filter(|w| w.len() <= l).count())
            .collect::<Vec<_>>();
        let mut t = TruncatedQuotient {
            kind,
            base: h.clone(),
            degree,
            letters,
            rewriter,
            relations,
            basis,
            dims_by_degree,
            window: None,
            certificate: Report::new("stabilization"),
            algebra: None,
        };
        t.certify();
        Ok(t)
    }

    /// Finds a plateau `dims[l] = dims[l+1] = dims[l+2]` and, if present,
    /// checks the closure certificate and builds the multiplication.
    fn certify(&mut self) {
        let d = &self.dims_by_degree;
        let window = (0..d.len().saturating_sub(2)).find(|&l| d[l] == d[l + 1] && d[l + 1] == d[l + 2]);
        let mut r = Report::new("stabilization");
        let Some(l) = window else {
            r.skip("window", "no plateau of length 3 within the truncation");
            self.certificate = r;
            return;
        };
        r.value("window", "start", l);
        r.value("window", "dims", format!("({},{},{})", d[l], d[l + 1], d[l + 2]));
        let ops = self.letter_operators();
        let closed = ops.is_some();
        r.check_bool(
            "closure",
            closed,
            "a product of a letter with a basis word leaves the basis span",
        );
        if let Some(ops) = ops {
            let bad = self.relations.iter().position(|rel| {
                (0..self.basis.len()).any(|v| !apply_poly(&ops, rel, v).is_empty())
            });
            r.check(
                "relations-annihilate",
                bad.map(|i| format!("relation {i}")),
            );
            if r.all_pass() {
                let alg = self.build_algebra(&ops);
                self.algebra = Some(alg);
                self.window = Some(l);
            }
        }
        self.certificate = r;
    }

    /// Left multiplication by each letter on the basis words, when every
    /// product reduces into the basis span.
    fn letter_operators(&self) -> Option<Vec<Vec<Sparse>>> {
        let mut ops = Vec::with_capacity(self.rewriter.letters());
        for x in 0..self.rewriter.letters() {
            let mut cols = Vec::with_capacity(self.basis.len());
            for w in &self.basis {
                let p = self.rewriter.reduce_word(&Word::letter(x).concat(w));
                let mut col = Sparse::new();
                for (u, c) in p.terms() {
                    let i = self.basis.binary_search(u).ok()?;
                    col.insert(i, c.clone());
                }
                cols.push(col);
            }
            ops.push(cols);
        }
        Some(ops)
    }

    fn build_algebra(&self, ops: &[Vec<Sparse>]) -> AlgebraData {
        let f = self.base.field();
        let n = self.basis.len();
        let unit_idx = self.basis.binary_search(&Word::empty()).expect("empty word is normal");
        let mut unit = zero_vec(f, n);
        unit[unit_idx] = f.one();
        AlgebraData::from_products(f, n, unit, |i, j| {
            let mut v = Sparse::new();
            v.insert(j, f.one());
            for x in self.basis[i].0.iter().rev() {
                v = apply_op(&ops[*x as usize], &v);
            }
            to_dense(f, n, &v)
        })
    }

    pub fn kind(&self) -> ParKind {
        self.kind
    }

    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &LetterMap {
        &self.letters
    }

    /// Normal words of length at most the degree.
    pub fn basis_words(&self) -> &[Word] {
        &self.basis
    }

    /// Entry `l` counts normal words of length at most `l`.
    pub fn dims_by_degree(&self) -> &[usize] {
        &self.dims_by_degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_stabilized(&self) -> bool {
        self.algebra.is_some()
    }

    /// Start of the plateau window, when stabilized.
    pub fn window(&self) -> Option<usize> {
        self.window
    }

    pub fn certificate(&self) -> &Report {
        &self.certificate
    }

    /// The quotient algebra on the normal-word basis, when stabilized.
    pub fn algebra(&self) -> Option<&AlgebraData> {
        self.algebra.as_ref()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn rewriter(&self) -> &Rewriter {
        &self.rewriter
    }

    /// Coordinates of the normal form of `p` on the basis words, when the
    /// normal form fits in the truncation.
    pub fn coordinates(&self, p: &Poly) -> Option<Vector> {
        let f = self.base.field();
        if p.degree().is_some_and(|d| d > self.degree) {
            return None;
        }
        let nf = self.rewriter.reduce(p);
        let mut v = zero_vec(f, self.basis.len());
        for (w, c) in nf.terms() {
            let i = self.basis.binary_search(w).ok()?;
            v[i] = c.clone();
        }
        Some(v)
    }

    /// Product of two basis words, defined while the product fits in the
    /// truncation.
    pub fn word_product(&self, i: usize, j: usize) -> Option<Vector> {
        let w = self.basis[i].concat(&self.basis[j]);
        if w.len() > self.degree {
            return None;
        }
        self.coordinates(&Poly::monomial(w, self.base.field().one()))
    }

    /// The generator map `H → quotient`: `h ↦ [h]` or `h ↦ ε_h`.
    pub fn bracket_matrix(&self) -> Matrix {
        let n = self.base.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|i| self.coordinates(self.letters.image(i)).expect("degree one"))
            .collect();
        Matrix::from_columns(self.base.field(), self.basis.len(), &cols)
    }

    /// The basis word as a product of generators, one basis index per letter.
    pub fn word_generators(&self, i: usize) -> Vec<usize> {
        self.basis[i]
            .letters()
            .map(|x| self.letters.basis_of_letter(x))
            .collect()
    }

    /// `[h_1]⋯[h_n] ↦ h_1⋯h_n` on the basis words (only meaningful for `H_par`).
    pub fn forgetful_map(&self) -> Matrix {
        let h = &self.base;
        let cols: Vec<Vector> = (0..self.basis.len())
            .map(|i| {
                let gens: Vec<Vector> = self.word_generators(i).iter().map(|&b| h.basis(b)).collect();
                h.algebra().mul_all(gens.iter())
            })
            .collect();
        Matrix::from_columns(h.field(), h.dim(), &cols)
    }

    /// Evaluates a polynomial in basis generators (letters = basis indices
    /// of `H`) inside the stabilized algebra.
    pub fn eval_generators(&self, p: &Poly) -> Option<Vector> {
        let alg = self.algebra.as_ref()?;
        let br = self.bracket_matrix();
        let gens: Vec<Vector> = (0..self.base.dim()).map(|i| br.column(i)).collect();
        Some(eval_poly(alg, &gens, p))
    }
}

/// `Σ c · g_{w_1} ⋯ g_{w_k}` in an algebra with generator images `gens`.
pub fn eval_poly(alg: &AlgebraData, gens: &[Vector], p: &Poly) -> Vector {
    let mut out = zero_vec(alg.field(), alg.dim());
    for (w, c) in p.terms() {
        let mut v = alg.unit().clone();
        for i in w.letters() {
            v = alg.mul(&v, &gens[i]);
        }
        crate::linalg::axpy(&mut out, c, &v);
    }
    out
}

fn apply_op(op: &[Sparse], v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (j, c) in v {
        for (i, d) in &op[*j] {
            sparse_add(&mut out, *i, c * d);
        }
    }
    out
}

fn apply_poly(ops: &[Vec<Sparse>], p: &Poly, v: usize) -> Sparse {
    let mut out = Sparse::new();
    for (w, c) in p.terms() {
        let mut x = Sparse::new();
        x.insert(v, c.clone());
        for l in w.0.iter().rev() {
            x = apply_op(&ops[*l as usize], &x);
            if x.is_empty() {
                break;
            }
        }
        for (i, d) in x {
            sparse_add(&mut out, i, d);
        }
    }
    out
}

fn to_dense(f: FieldSpec, n: usize, v: &Sparse) -> Vector {
    let mut out = zero_vec(f, n);
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Dimension table, stabilization flag and closure certificate.
pub fn stabilization_report(t: &TruncatedQuotient) -> Report {
    let mut r = Report::new(format!("stabilization {}", t.kind.as_str()));
    let dims: Vec<String> = t.dims_by_degree.iter().map(|d| d.to_string()).collect();
    r.value("dims-by-degree", "degree", t.degree);
    r.value("dims-by-degree", "dims", dims.join(","));
    r.value("dims-by-degree", "rules", t.rewriter.num_rules());
    r.value("stabilized", "stabilized", t.is_stabilized());
    if t.is_stabilized() {
        r.value("stabilized", "dim", t.dim());
    }
    let cert = t.certificate.clone();
    r.absorb("certificate", cert);
    r
}

/// Checks that the stabilized quotient is associative and unital, that the
/// bracket is a partial representation (for `H_par`) and that the
/// forgetful map is a well-defined algebra map splitting the bracket.
pub fn verify_truncation(t: &TruncatedQuotient) -> Result<Report> {
    let mut r = Report::new(format!("truncation {}", t.kind.as_str()));
    let Some(alg) = t.algebra() else {
        r.skip("algebra", "not stabilized");
        return Ok(r);
    };
    r.absorb("algebra", verify_algebra(alg));
    if t.kind == ParKind::Hpar {
        let br = t.bracket_matrix();
        r.absorb(
            "bracket",
            crate::partial::check_pr_axioms(&t.base, alg, &br)?,
        );
        let fm = t.forgetful_map();
        r.absorb("forgetful", verify_algebra_map(alg, t.base.algebra(), &fm)?);
        r.check_bool(
            "forgetful-splits-bracket",
            fm.compose(&br).is_identity(),
            "forgetful ∘ bracket ≠ id",
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::hopf::{dual_group_algebra, group_algebra};

    #[test]
    fn kc2_hpar() {
        let h = group_algebra(&Group::cyclic(2), FieldSpec::rationals());
        let t = truncated_hpar(&h, 4).unwrap();
        assert!(t.is_stabilized());
        assert_eq!(t.dim(), 3);
        assert_eq!(t.dims_by_degree(), &[1, 2, 3, 3, 3]);
        assert_eq!(t.window(), Some(2));
        let gens: Vec<Vec<usize>> = (0..3).map(|i| t.word_generators(i)).collect();
        assert_eq!(gens, vec![vec![], vec![1], vec![1, 1]]);
        assert!(verify_truncation(&t).unwrap().all_pass());
    }

    #[test]
    fn connected_hpar_is_h() {
        let f2 = FieldSpec::prime(2).unwrap();
        let h = dual_group_algebra(&Group::cyclic(2), f2);
        let t = truncated_hpar(&h, 4).unwrap();
        assert!(t.is_stabilized());
        assert_eq!(t.dim(), 2);
        assert!(t.bracket_matrix().is_invertible());
    }

    #[test]
    fn apar_of_group() {
        let h = group_algebra(&Group::cyclic(2), FieldSpec::rationals());
        let t = truncated_apar(&h, 4).unwrap();
        assert!(t.is_stabilized());
        assert_eq!(t.dim(), 2);
        assert!(truncated_apar(&h, 0).is_err());
    }
}
