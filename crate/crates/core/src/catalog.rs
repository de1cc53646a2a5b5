//! Named example constructions: Hopf algebras, twist maps and partial
//! representations used by the CLI and the test suites.

use crate::coradical::{chevalley_quotient, coordinate_span, ChevalleyOutcome};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::Group;
use crate::hopf::{dual_group_algebra, group_algebra, sweedler_h4, AlgebraData, HopfData};
use crate::hpar::{groupoid_algebra, groupoid_bracket, GroupoidGamma};
use crate::linalg::{unit_vec, Matrix};
use crate::partial::{cosemisimple_nonglobal_rep, restrict_along, PartialRep};
use crate::smash::{drinfeld_twist, exact_factorization_twist, group_action_twist, TwistMap};

pub use crate::report::CATALOG_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Hopf,
    Twist,
}

/// Field handling for an entry: any field, any field but one
/// characteristic, or a single fixed field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldRule {
    Any,
    NotChar(u64),
    Fixed(u64),
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub rule: FieldRule,
    pub description: &'static str,
}

const ENTRIES: &[Entry] = &[
    Entry { name: "trivial", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "the one-dimensional Hopf algebra k" },
    Entry { name: "kC2", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "group algebra of C2" },
    Entry { name: "kC3", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "group algebra of C3" },
    Entry { name: "kC2*", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "dual group algebra of C2" },
    Entry { name: "k(C2×C2)", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "group algebra of the Klein four-group" },
    Entry { name: "kS3", kind: EntryKind::Hopf, rule: FieldRule::Any, description: "group algebra of S3" },
    Entry { name: "sweedler_h4", kind: EntryKind::Hopf, rule: FieldRule::NotChar(2), description: "Sweedler's four-dimensional Hopf algebra" },
    Entry { name: "kC2*_char2", kind: EntryKind::Hopf, rule: FieldRule::Fixed(2), description: "dual group algebra of C2 over F_2 (connected)" },
    Entry { name: "kV4*_char2", kind: EntryKind::Hopf, rule: FieldRule::Fixed(2), description: "dual group algebra of C2×C2 over F_2 (connected)" },
    Entry { name: "flip_kc2", kind: EntryKind::Twist, rule: FieldRule::Any, description: "flip twist on kC2 ⊗ kC2, smash product kC2 ⊗ kC2" },
    Entry { name: "s3_factorization", kind: EntryKind::Twist, rule: FieldRule::Any, description: "S3 = C3·C2 exact factorization twist, smash product kS3" },
    Entry { name: "drinfeld_kc2", kind: EntryKind::Twist, rule: FieldRule::Any, description: "Drinfeld double of kC2 (dim 4)" },
    Entry { name: "drinfeld_h4", kind: EntryKind::Twist, rule: FieldRule::NotChar(2), description: "Drinfeld double of Sweedler's algebra (dim 16)" },
    Entry { name: "graded_v4_swap", kind: EntryKind::Twist, rule: FieldRule::Fixed(2), description: "kC2 acting on k(C2×C2)* over F_2 by the factor swap (dim 8 smash)" },
];

/// All entries in listing order.
pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn find(name: &str) -> Result<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.into()))
}

impl Entry {
    /// The field actually used: the entry default when `requested` is `None`.
    pub fn resolve_field(&self, requested: Option<FieldSpec>) -> Result<FieldSpec> {
        match (self.rule, requested) {
            (FieldRule::Fixed(p), None) => FieldSpec::prime(p),
            (FieldRule::Fixed(p), Some(f)) if f.characteristic() == p => Ok(f),
            (FieldRule::Fixed(p), Some(f)) => Err(Error::InvalidField(format!("{} is only defined over F_{p}, not {f}", self.name))),
            (FieldRule::NotChar(p), Some(f)) if f.characteristic() == p => {
                Err(Error::InvalidField(format!("{} needs characteristic different from {p}", self.name)))
            }
            (_, Some(f)) => Ok(f),
            (_, None) => Ok(FieldSpec::rationals()),
        }
    }

    /// The group when the entry is a group algebra `kG`.
    pub fn group(&self) -> Option<Group> {
        match self.name {
            "trivial" => Some(Group::trivial()),
            "kC2" => Some(Group::cyclic(2)),
            "kC3" => Some(Group::cyclic(3)),
            "k(C2×C2)" => Some(v4()),
            "kS3" => Some(Group::s3()),
            _ => None,
        }
    }

    /// The twist map of a twist entry.
    pub fn twist(&self, field: Option<FieldSpec>) -> Result<Option<TwistMap>> {
        let f = self.resolve_field(field)?;
        Ok(match self.name {
            "flip_kc2" => {
                let k = group_algebra(&Group::cyclic(2), f);
                Some(TwistMap::flip(k.clone(), k))
            }
            "s3_factorization" => {
                let (fact, _) = s3_factorization(f)?;
                Some(fact.twist().clone())
            }
            "drinfeld_kc2" => Some(drinfeld_twist(&group_algebra(&Group::cyclic(2), f))?.0),
            "drinfeld_h4" => Some(drinfeld_twist(&sweedler_h4(f)?)?.0),
            "graded_v4_swap" => Some(v4_swap_twist(f)?),
            _ => None,
        })
    }

    /// The Hopf algebra of the entry; for twist entries the smash product.
    pub fn hopf(&self, field: Option<FieldSpec>) -> Result<HopfData> {
        let f = self.resolve_field(field)?;
        if let Some(g) = self.group() {
            return Ok(group_algebra(&g, f));
        }
        match self.name {
            "kC2*" | "kC2*_char2" => Ok(dual_group_algebra(&Group::cyclic(2), f)),
            "kV4*_char2" => Ok(dual_group_algebra(&v4(), f)),
            "sweedler_h4" => sweedler_h4(f),
            _ => {
                let twist = self.twist(Some(f))?.expect("twist entry");
                let (smash, _) = crate::smash::build_smash(&twist)?;
                smash
                    .hopf()
                    .cloned()
                    .ok_or_else(|| Error::Verification(format!("{}: twist is not a coalgebra map", self.name)))
            }
        }
    }
}

/// `C2 × C2`, element `(a, b)` at index `2a + b`.
pub fn v4() -> Group {
    Group::cyclic(2).product(&Group::cyclic(2))
}

/// The factor swap `(a, b) ↦ (b, a)` on `C2 × C2`, indexed by `C2`.
pub fn v4_swap() -> Vec<Vec<usize>> {
    let sw = |x: usize| (x % 2) * 2 + x / 2;
    vec![(0..4).collect(), (0..4).map(sw).collect()]
}

/// `p_x ↦ p_{f ▷ x}` on `k(C2×C2)*` for each `f ∈ C2`.
pub fn v4_swap_matrices(field: FieldSpec) -> Vec<Matrix> {
    v4_swap()
        .iter()
        .map(|perm| Matrix::from_columns(field, 4, &perm.iter().map(|&y| unit_vec(field, 4, y)).collect::<Vec<_>>()))
        .collect()
}

/// `kC2 ⊗ k(C2×C2)* → k(C2×C2)* ⊗ kC2`, `f ⊗ p ↦ (f ▷ p) ⊗ f`.
pub fn v4_swap_twist(field: FieldSpec) -> Result<TwistMap> {
    let kf = group_algebra(&Group::cyclic(2), field);
    let u = dual_group_algebra(&v4(), field);
    group_action_twist(&kf, &u, &v4_swap_matrices(field))
}

/// `S3 = C3 · C2` with `M = ⟨r⟩`, `L = ⟨s⟩`.
pub fn s3_factorization(field: FieldSpec) -> Result<(crate::smash::ExactFactorization, crate::report::Report)> {
    exact_factorization_twist(&Group::s3(), &[0, 1, 2], &[0, 3], field)
}

/// A named partial representation and whether it is expected to be global.
#[derive(Clone, Debug)]
pub struct CatalogRep {
    pub name: String,
    pub rep: PartialRep,
    pub expected_global: bool,
}

fn non_identity_span(h: &HopfData, g: &Group) -> crate::linalg::Subspace {
    let idx: Vec<usize> = (0..g.order()).filter(|&x| x != g.identity()).collect();
    coordinate_span(h.field(), h.dim(), &idx)
}

fn character(h: &HopfData, values: &[i64]) -> Result<PartialRep> {
    let f = h.field();
    let row = values.iter().map(|&v| f.from_i64(v)).collect();
    PartialRep::new(h.clone(), AlgebraData::ground(f), Matrix::row_vector(f, row))
}

/// Partial representations over `Q` (and `F_2` for connected examples),
/// global and non-global.
pub fn partial_reps() -> Result<Vec<CatalogRep>> {
    let q = FieldSpec::rationals();
    let mut out = Vec::new();
    let mut push = |name: &str, rep: PartialRep, expected_global| {
        out.push(CatalogRep { name: name.into(), rep, expected_global });
    };
    for (name, g) in [("kC2", Group::cyclic(2)), ("kC3", Group::cyclic(3)), ("kS3", Group::s3()), ("k(C2×C2)", v4())] {
        let h = group_algebra(&g, q);
        push(&format!("{name} rank-one"), cosemisimple_nonglobal_rep(&h, &non_identity_span(&h, &g))?, false);
        push(&format!("{name} counit"), character(&h, &vec![1; g.order()])?, true);
    }
    let kc2 = group_algebra(&Group::cyclic(2), q);
    push("kC2 sign", character(&kc2, &[1, -1])?, true);
    let s3 = group_algebra(&Group::s3(), q);
    push("kS3 sign", character(&s3, &[1, 1, 1, -1, -1, -1])?, true);
    push(
        "kS3 regular",
        PartialRep::new(s3.clone(), s3.algebra().clone(), Matrix::identity(q, s3.dim()))?,
        true,
    );
    let gamma = GroupoidGamma::new(&Group::cyclic(2))?;
    push(
        "kC2 universal",
        PartialRep::new(kc2.clone(), groupoid_algebra(&gamma, q).algebra().clone(), groupoid_bracket(&gamma, q))?,
        false,
    );
    let h4 = sweedler_h4(q)?;
    push("sweedler_h4 counit", character(&h4, &[1, 1, 0, 0])?, true);
    if let ChevalleyOutcome::Quotient { hopf, projection, .. } = chevalley_quotient(&h4)? {
        let c2 = cosemisimple_nonglobal_rep(&hopf, &nonunit_complement(&hopf))?;
        push("sweedler_h4 via kC2 quotient", restrict_along(&c2, &projection.map, &h4)?, false);
    } else {
        return Err(Error::Verification("radical of H4 is not a Hopf ideal".into()));
    }
    let f2 = FieldSpec::prime(2)?;
    let c2s = dual_group_algebra(&Group::cyclic(2), f2);
    push(
        "kC2*_char2 identity",
        PartialRep::new(c2s.clone(), c2s.algebra().clone(), Matrix::identity(f2, 2))?,
        true,
    );
    push("kC2*_char2 counit", character(&c2s, &[1, 0])?, true);
    Ok(out)
}

/// For a two-dimensional cosemisimple quotient `k1 ⊕ kc`: the span of the
/// basis element that is not the unit.
fn nonunit_complement(h: &HopfData) -> crate::linalg::Subspace {
    let one = h.one();
    let idx: Vec<usize> = (0..h.dim()).filter(|&i| one[i].is_zero()).collect();
    coordinate_span(h.field(), h.dim(), &idx)
}
