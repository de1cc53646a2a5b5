//! A finite model of `H_par` or `A_par`: an algebra, the generator map
//! `h ↦ [h]` (or `h ↦ ε_h`), and an expression of every basis element as a
//! polynomial in the generators.

use crate::error::{Error, Result};
use crate::hopf::{verify_algebra, verify_algebra_map, AlgebraData, HopfData};
use crate::hpar::groupoid::{arrow_polynomial, groupoid_algebra, groupoid_bracket, is_group_algebra_of, GroupoidGamma};
use crate::hpar::truncation::{apar_relations, eval_poly, hpar_relations, ParKind, TruncatedQuotient};
use crate::hpar::words::{Poly, Word};
use crate::linalg::{unit_vec, Matrix, Vector};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct ParPresentation {
    kind: ParKind,
    base: HopfData,
    algebra: AlgebraData,
    bracket: Matrix,
    /// Letters are basis indices of `base`.
    basis_exprs: Vec<Poly>,
    /// Generators of the kernel of `T(base) → algebra`.
    relations: Vec<Poly>,
}

impl ParPresentation {
    /// From a stabilized truncation; basis words become monomials.
    pub fn from_truncation(t: &TruncatedQuotient) -> Result<Self> {
        let Some(alg) = t.algebra() else {
            return Err(Error::Precondition("truncation is not stabilized".into()));
        };
        let f = t.base().field();
        let basis_exprs = (0..t.dim())
            .map(|i| {
                let w = t.word_generators(i).into_iter().map(|b| b as u8).collect();
                Poly::monomial(Word(w), f.one())
            })
            .collect();
        Ok(ParPresentation {
            kind: t.kind(),
            base: t.base().clone(),
            algebra: alg.clone(),
            bracket: t.bracket_matrix(),
            basis_exprs,
            relations: match t.kind() {
                ParKind::Hpar => hpar_relations(t.base()),
                ParKind::Apar => apar_relations(t.base()),
            },
        })
    }

    /// `k_par G` as the groupoid algebra `kΓ(G)`, with `[g] = Σ_{A ∋ 1, g⁻¹} (A, g)`.
    pub fn from_groupoid(h: &HopfData, gamma: &GroupoidGamma) -> Result<Self> {
        if gamma.num_points() != gamma.group().order() || !is_group_algebra_of(h, gamma.group()) {
            return Err(Error::Precondition("base is not kG for the groupoid's group".into()));
        }
        let f = h.field();
        let kg = groupoid_algebra(gamma, f);
        let basis_exprs = (0..gamma.len()).map(|i| arrow_polynomial(gamma, f, i)).collect();
        Ok(ParPresentation {
            kind: ParKind::Hpar,
            base: h.clone(),
            algebra: kg.algebra().clone(),
            bracket: groupoid_bracket(gamma, f),
            basis_exprs,
            relations: hpar_relations(h),
        })
    }

    /// `H_par = H`, valid when every partial representation of `H` is
    /// global; the caller certifies that separately.
    pub fn global(h: &HopfData) -> Self {
        let f = h.field();
        let letter = |i| Poly::monomial(Word::letter(i), f.one());
        let lift = |v: &Vector| {
            let mut p = Poly::zero();
            for (i, c) in v.iter().enumerate() {
                p.add_term(Word::letter(i), c.clone());
            }
            p
        };
        let mut relations = vec![lift(&h.one()).sub(&Poly::constant(f.one()))];
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                relations.push(letter(i).mul(&letter(j)).sub(&lift(&h.algebra().basis_product_vec(i, j))));
            }
        }
        relations.retain(|p| !p.is_zero());
        ParPresentation {
            kind: ParKind::Hpar,
            base: h.clone(),
            algebra: h.algebra().clone(),
            bracket: Matrix::identity(f, h.dim()),
            basis_exprs: (0..h.dim()).map(letter).collect(),
            relations,
        }
    }

    pub fn kind(&self) -> ParKind {
        self.kind
    }

    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn bracket(&self) -> &Matrix {
        &self.bracket
    }

    pub fn basis_expr(&self, i: usize) -> &Poly {
        &self.basis_exprs[i]
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn generators(&self) -> Vec<Vector> {
        (0..self.base.dim()).map(|i| self.bracket.column(i)).collect()
    }

    /// Evaluates a polynomial in the generators.
    pub fn eval(&self, p: &Poly) -> Vector {
        eval_poly(&self.algebra, &self.generators(), p)
    }

    /// `[h_1]⋯[h_n] ↦ h_1⋯h_n` on the basis expressions.
    pub fn forgetful_map(&self) -> Matrix {
        let h = &self.base;
        let gens: Vec<Vector> = (0..h.dim()).map(|i| h.basis(i)).collect();
        let cols: Vec<Vector> = self
            .basis_exprs
            .iter()
            .map(|p| eval_poly(h.algebra(), &gens, p))
            .collect();
        Matrix::from_columns(h.field(), h.dim(), &cols)
    }

    /// Algebra axioms, basis expressions, and for `H_par` the partial
    /// representation axioms of the bracket and the forgetful algebra map.
    pub fn verify(&self) -> Result<Report> {
        let mut r = Report::new(format!("presentation {}", self.kind.as_str()));
        r.absorb("algebra", verify_algebra(&self.algebra));
        let f = self.base.field();
        let bad = (0..self.dim()).find(|&i| self.eval(&self.basis_exprs[i]) != unit_vec(f, self.dim(), i));
        r.check("basis-expressions", bad.map(|i| format!("basis {i}")));
        let bad = self.relations.iter().position(|p| !crate::linalg::is_zero_vec(&self.eval(p)));
        r.check("relations-vanish", bad.map(|i| format!("relation {i}")));
        if self.kind == ParKind::Hpar {
            r.absorb(
                "bracket",
                crate::partial::check_pr_axioms(&self.base, &self.algebra, &self.bracket)?,
            );
            let fm = self.forgetful_map();
            r.absorb("forgetful", verify_algebra_map(&self.algebra, self.base.algebra(), &fm)?);
            r.check_bool(
                "forgetful-splits-bracket",
                fm.compose(&self.bracket).is_identity(),
                "forgetful ∘ bracket ≠ id",
            );
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::group::Group;
    use crate::hopf::group_algebra;
    use crate::hpar::groupoid::gamma_groupoid;
    use crate::hpar::truncation::truncated_hpar;

    #[test]
    fn groupoid_and_truncation_presentations_verify() {
        let q = FieldSpec::rationals();
        let g = Group::cyclic(3);
        let h = group_algebra(&g, q);
        let p = ParPresentation::from_groupoid(&h, &gamma_groupoid(&g).unwrap()).unwrap();
        assert!(p.verify().unwrap().all_pass());
        let t = truncated_hpar(&h, 6).unwrap();
        let p = ParPresentation::from_truncation(&t).unwrap();
        assert_eq!(p.dim(), 8);
        assert!(p.verify().unwrap().all_pass());
        assert!(ParPresentation::global(&h).verify().unwrap().all_pass());
    }
}
