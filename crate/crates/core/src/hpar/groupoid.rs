//! The groupoid `Γ(G)` of pairs `(A, g)` with `1, g⁻¹ ∈ A`, its coset
//! variant `Γ_M(G)`, the groupoid algebra as a weak Hopf algebra, and the
//! explicit isomorphism `kΓ(G) ≅ k_par G`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::Group;
use crate::hopf::{verify_algebra_map, AlgebraData, CoalgebraData, HopfData, MorphismData};
use crate::hpar::truncation::{eval_poly, ParKind, TruncatedQuotient};
use crate::hpar::weak::{verify_weak_hopf, WeakHopfData};
use crate::hpar::words::{Poly, Word};
use crate::linalg::{unit_vec, zero_vec, Matrix, Vector};
use crate::report::Report;

/// Arrows `(A, g)` over a transitive `G`-set `X` with base point `x0`:
/// `A ⊆ X` contains `x0` and `g⁻¹·x0`. With `X = G` this is `Γ(G)`; with
/// `X = G/M` it is `Γ_M(G)`.
///
/// `(A, g)(B, h)` is defined iff `A = h·B` and then equals `(B, gh)`;
/// the inverse of `(A, g)` is `(g·A, g⁻¹)`.
#[derive(Clone, Debug)]
pub struct GroupoidGamma {
    group: Group,
    /// `action[g][x] = g·x`.
    action: Vec<Vec<usize>>,
    point_labels: Vec<String>,
    base: usize,
    arrows: Vec<(u64, usize)>,
    index: HashMap<(u64, usize), usize>,
}

impl GroupoidGamma {
    fn build(group: Group, action: Vec<Vec<usize>>, point_labels: Vec<String>, base: usize) -> Result<Self> {
        let points = point_labels.len();
        if points > 24 {
            return Err(Error::Unsupported(format!("{points} points; at most 24 supported")));
        }
        let mut arrows = Vec::new();
        for mask in 0u64..(1u64 << points) {
            if mask & (1 << base) == 0 {
                continue;
            }
            for g in 0..group.order() {
                let gi = group.inv(g);
                if mask & (1 << action[gi][base]) != 0 {
                    arrows.push((mask, g));
                }
            }
        }
        let index = arrows.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        Ok(GroupoidGamma {
            group,
            action,
            point_labels,
            base,
            arrows,
            index,
        })
    }

    /// `Γ(G)`: `X = G` under left multiplication, base point `1`.
    pub fn new(group: &Group) -> Result<Self> {
        let n = group.order();
        let action = (0..n).map(|g| (0..n).map(|x| group.mul(g, x)).collect()).collect();
        Self::build(group.clone(), action, group.labels().to_vec(), group.identity())
    }

    /// `Γ_M(G)`: `X = G/M` with cosets ordered by smallest representative,
    /// base point `M`.
    pub fn cosets(group: &Group, m: &[usize]) -> Result<Self> {
        if !group.is_subgroup(m) {
            return Err(Error::Precondition("M is not a subgroup".into()));
        }
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut labels = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = labels.len();
            for &y in m {
                coset_of[group.mul(x, y)] = c;
            }
            labels.push(format!("{}M", group.labels()[x]));
        }
        let reps: Vec<usize> = (0..labels.len())
            .map(|c| (0..n).find(|&x| coset_of[x] == c).expect("nonempty coset"))
            .collect();
        let action = (0..n)
            .map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect())
            .collect();
        let base = coset_of[group.identity()];
        Self::build(group.clone(), action, labels, base)
    }

    /// The point `g·x0`.
    pub fn point_of(&self, g: usize) -> usize {
        self.action[g][self.base]
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn num_points(&self) -> usize {
        self.point_labels.len()
    }

    pub fn base_point(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrows as `(subset bitmask, group element)`, sorted.
    pub fn arrows(&self) -> &[(u64, usize)] {
        &self.arrows
    }

    pub fn index_of(&self, mask: u64, g: usize) -> Option<usize> {
        self.index.get(&(mask, g)).copied()
    }

    /// `g·A` for a subset bitmask.
    pub fn translate(&self, g: usize, mask: u64) -> u64 {
        let mut out = 0u64;
        for x in 0..self.num_points() {
            if mask & (1 << x) != 0 {
                out |= 1 << self.action[g][x];
            }
        }
        out
    }

    /// `(A, g)(B, h) = (B, gh)` when `A = h·B`.
    pub fn compose(&self, i: usize, j: usize) -> Option<usize> {
        let (a, g) = self.arrows[i];
        let (b, h) = self.arrows[j];
        if a != self.translate(h, b) {
            return None;
        }
        self.index_of(b, self.group.mul(g, h))
    }

    /// `(g·A, g⁻¹)`.
    pub fn inverse(&self, i: usize) -> usize {
        let (a, g) = self.arrows[i];
        self.index_of(self.translate(g, a), self.group.inv(g))
            .expect("inverse arrow exists")
    }

    /// Identity arrows `(A, 1)`.
    pub fn identities(&self) -> Vec<usize> {
        let e = self.group.identity();
        (0..self.len()).filter(|&i| self.arrows[i].1 == e).collect()
    }

    pub fn arrow_label(&self, i: usize) -> String {
        let (mask, g) = self.arrows[i];
        let elems: Vec<&str> = (0..self.num_points())
            .filter(|x| mask & (1 << x) != 0)
            .map(|x| self.point_labels[x].as_str())
            .collect();
        format!("({{{}}},{})", elems.join(","), self.group.labels()[g])
    }

    /// Checks closure of composition, associativity, identities and
    /// inverses over all arrows.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("groupoid");
        let n = self.len();
        let mut bad_assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let Some(ij) = self.compose(i, j) else { continue };
                for k in 0..n {
                    let Some(jk) = self.compose(j, k) else { continue };
                    if self.compose(ij, k) != self.compose(i, jk) || self.compose(ij, k).is_none() {
                        bad_assoc = Some(format!(
                            "({}, {}, {})",
                            self.arrow_label(i),
                            self.arrow_label(j),
                            self.arrow_label(k)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        r.check("associative", bad_assoc);
        let bad_inv = (0..n).find(|&i| {
            let j = self.inverse(i);
            let left = self.compose(j, i);
            let right = self.compose(i, j);
            match (left, right) {
                (Some(l), Some(rr)) => {
                    let e = self.group.identity();
                    self.arrows[l].1 != e
                        || self.arrows[rr].1 != e
                        || self.arrows[l].0 != self.arrows[i].0
                        || self.arrows[rr].0 != self.arrows[j].0
                }
                _ => true,
            }
        });
        r.check("inverses", bad_inv.map(|i| self.arrow_label(i)));
        r.value("count", "arrows", n);
        r
    }
}

/// `Γ(G)` with its count checked against the closed form.
pub fn gamma_groupoid(group: &Group) -> Result<GroupoidGamma> {
    let g = GroupoidGamma::new(group)?;
    let expected = gamma_count_closed_form(group.order());
    if g.len() as u64 != expected {
        return Err(Error::Verification(format!(
            "|Γ(G)| = {} but the closed form gives {expected}",
            g.len()
        )));
    }
    Ok(g)
}

/// `Γ_M(G)` over the cosets `G/M`.
pub fn gamma_m_groupoid(group: &Group, m: &[usize]) -> Result<GroupoidGamma> {
    GroupoidGamma::cosets(group, m)
}

/// `2^{n−1} + (n−1)·2^{n−2}` for `n ≥ 1`.
pub fn gamma_count_closed_form(n: usize) -> u64 {
    assert!(n >= 1, "groups are nonempty");
    if n == 1 {
        return 1;
    }
    (1u64 << (n - 1)) + (n as u64 - 1) * (1u64 << (n - 2))
}

/// Counts pairs `(A, g)` with `1, g⁻¹ ∈ A` over all subsets `A ⊆ G`.
pub fn gamma_count_brute_force(group: &Group) -> u64 {
    let n = group.order();
    let e = group.identity();
    let mut count = 0;
    for mask in 0u64..(1u64 << n) {
        for g in 0..n {
            if mask & (1 << e) != 0 && mask & (1 << group.inv(g)) != 0 {
                count += 1;
            }
        }
    }
    count
}

/// `kΓ` with `Δγ = γ ⊗ γ`, `ε(γ) = 1`, `S(γ) = γ⁻¹`.
pub fn groupoid_algebra(gamma: &GroupoidGamma, field: FieldSpec) -> WeakHopfData {
    let n = gamma.len();
    let mut unit = zero_vec(field, n);
    for i in gamma.identities() {
        unit[i] = field.one();
    }
    let algebra = AlgebraData::from_products(field, n, unit, |i, j| match gamma.compose(i, j) {
        Some(k) => unit_vec(field, n, k),
        None => zero_vec(field, n),
    });
    let coalgebra = CoalgebraData::from_coproducts(field, n, vec![field.one(); n], |i| {
        unit_vec(field, n * n, i * n + i)
    });
    let cols: Vec<Vector> = (0..n).map(|i| unit_vec(field, n, gamma.inverse(i))).collect();
    let antipode = Matrix::from_columns(field, n, &cols);
    let labels = (0..n).map(|i| gamma.arrow_label(i)).collect();
    WeakHopfData::new(labels, algebra, coalgebra, antipode).expect("groupoid algebra shape")
}

/// Groupoid algebra together with its weak Hopf verification.
pub fn verified_groupoid_algebra(gamma: &GroupoidGamma, field: FieldSpec) -> (WeakHopfData, Report) {
    let w = groupoid_algebra(gamma, field);
    let mut r = verify_weak_hopf(&w);
    r.absorb("groupoid", gamma.verify());
    (w, r)
}

/// `[g] ∏_{h∈A} [h][h⁻¹] ∏_{h∉A} (1 − [h][h⁻¹])` in letters indexed by
/// group elements.
pub fn arrow_polynomial(gamma: &GroupoidGamma, field: FieldSpec, i: usize) -> Poly {
    let group = gamma.group();
    let (mask, g) = gamma.arrows()[i];
    let one = Poly::constant(field.one());
    let mut p = Poly::monomial(Word::letter(g), field.one());
    for h in 0..group.order() {
        let hh = Poly::monomial(Word(vec![h as u8, group.inv(h) as u8]), field.one());
        let factor = if mask & (1 << h) != 0 { hh } else { one.sub(&hh) };
        p = p.mul(&factor);
    }
    p
}

/// `[g] ↦ Σ_{A ∋ 1, g⁻¹} (A, g)`.
pub fn groupoid_bracket(gamma: &GroupoidGamma, field: FieldSpec) -> Matrix {
    let n = gamma.group().order();
    let mut m = Matrix::zeros(field, gamma.len(), n);
    for (i, &(_, g)) in gamma.arrows().iter().enumerate() {
        m.set(i, g, field.one());
    }
    m
}

/// Checks that `h` is the group algebra of `group` on the group basis.
pub(crate) fn is_group_algebra_of(h: &HopfData, group: &Group) -> bool {
    let n = group.order();
    let f = h.field();
    h.dim() == n
        && h.one() == unit_vec(f, n, group.identity())
        && (0..n).all(|a| (0..n).all(|b| h.algebra().basis_product_vec(a, b) == unit_vec(f, n, group.mul(a, b))))
}

/// The explicit isomorphism `kΓ(G) ⇄ k_par G` between the groupoid algebra
/// and a stabilized truncation of `H_par(kG)`, with a report certifying both
/// maps as algebra maps and mutually inverse.
pub fn iso_kparg(gamma: &GroupoidGamma, trunc: &TruncatedQuotient) -> Result<(MorphismData, MorphismData, Report)> {
    let h = trunc.base();
    if trunc.kind() != ParKind::Hpar {
        return Err(Error::Precondition("expected an H_par truncation".into()));
    }
    let Some(par) = trunc.algebra() else {
        return Err(Error::Precondition("truncation is not stabilized".into()));
    };
    if gamma.num_points() != gamma.group().order() || !is_group_algebra_of(h, gamma.group()) {
        return Err(Error::Precondition("truncation base is not kG for the groupoid's group".into()));
    }
    if par.dim() != gamma.len() {
        return Err(Error::DimensionMismatch(format!(
            "dim H_par = {} but |Γ(G)| = {}",
            par.dim(),
            gamma.len()
        )));
    }
    let f = h.field();
    let kgamma = groupoid_algebra(gamma, f);
    let br = trunc.bracket_matrix();
    let gens: Vec<Vector> = (0..h.dim()).map(|i| br.column(i)).collect();
    let phi_cols: Vec<Vector> = (0..gamma.len())
        .map(|i| eval_poly(par, &gens, &arrow_polynomial(gamma, f, i)))
        .collect();
    let phi = Matrix::from_columns(f, par.dim(), &phi_cols);
    let gbr = groupoid_bracket(gamma, f);
    let ggens: Vec<Vector> = (0..h.dim()).map(|i| gbr.column(i)).collect();
    let psi_cols: Vec<Vector> = (0..par.dim())
        .map(|i| {
            let w = trunc.word_generators(i);
            let imgs: Vec<&Vector> = w.iter().map(|&b| &ggens[b]).collect();
            kgamma.algebra().mul_all(imgs)
        })
        .collect();
    let psi = Matrix::from_columns(f, gamma.len(), &psi_cols);
    let mut r = Report::new("iso-kparG");
    r.value("dims", "groupoid", gamma.len());
    r.value("dims", "hpar", par.dim());
    r.absorb("phi", verify_algebra_map(kgamma.algebra(), par, &phi)?);
    r.absorb("psi", verify_algebra_map(par, kgamma.algebra(), &psi)?);
    r.check_bool("psi-phi", psi.compose(&phi).is_identity(), "ψ ∘ φ ≠ id");
    r.check_bool("phi-psi", phi.compose(&psi).is_identity(), "φ ∘ ψ ≠ id");
    r.check_bool("bracket", psi.compose(&br) == gbr, "ψ[g] ≠ Σ (A, g)");
    Ok((
        MorphismData::new("phi: kΓ(G) → k_par G", phi),
        MorphismData::new("psi: k_par G → kΓ(G)", psi),
        r,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group_algebra;
    use crate::hpar::truncation::truncated_hpar;

    #[test]
    fn counts() {
        assert_eq!(gamma_groupoid(&Group::trivial()).unwrap().len(), 1);
        assert_eq!(gamma_groupoid(&Group::cyclic(2)).unwrap().len(), 3);
        let v4 = Group::cyclic(2).product(&Group::cyclic(2));
        assert_eq!(gamma_groupoid(&v4).unwrap().len(), 20);
        assert_eq!(gamma_count_closed_form(8), 128 + 7 * 64);
    }

    #[test]
    fn groupoid_axioms() {
        let q = FieldSpec::rationals();
        for g in [Group::cyclic(2), Group::cyclic(3), Group::s3()] {
            let gamma = gamma_groupoid(&g).unwrap();
            let (_, r) = verified_groupoid_algebra(&gamma, q);
            assert!(r.all_pass(), "{}", r.render(None));
        }
    }

    #[test]
    fn coset_groupoid_s3() {
        let s3 = Group::s3();
        let gm = gamma_m_groupoid(&s3, &[0, 1, 2]).unwrap();
        assert_eq!(gm.num_points(), 2);
        assert_eq!(gm.len(), 9);
        assert!(gm.verify().all_pass());
    }

    #[test]
    fn iso_c2_and_trivial() {
        let q = FieldSpec::rationals();
        for g in [Group::trivial(), Group::cyclic(2)] {
            let gamma = gamma_groupoid(&g).unwrap();
            let t = truncated_hpar(&group_algebra(&g, q), 4).unwrap();
            let (_, _, r) = iso_kparg(&gamma, &t).unwrap();
            assert!(r.all_pass(), "{}", r.render(None));
        }
    }
}
