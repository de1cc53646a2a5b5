//! Verification suites over catalog entries and loaded documents: the
//! engine behind `hopfpar verify` and `hopfpar par`.

use crate::catalog::{self, EntryKind};
use crate::coradical::{chevalley_quotient, coradical_filtration, is_connected, is_cosemisimple, verify_filtration, ChevalleyOutcome};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format::Document;
use crate::group::Group;
use crate::hopf::{verify_hopf, HopfData};
use crate::hpar::{
    gamma_groupoid, iso_kparg, stabilization_report, truncated_apar, truncated_hpar, verify_truncation,
    GroupoidGamma, ParPresentation,
};
use crate::partial::{coradical_global_test, is_global};
use crate::report::Report;
use crate::smash::{
    build_smash, check_twist, derive_actions, gamma_m_theta, hopf_category_weak_hopf, invert_twist, lift_twist_t,
    par_of_smash_iso, weak_model_iso, TwistMap,
};

pub const DEFAULT_DEGREE: usize = 6;

/// Truncations whose word count `(dim − 1)^degree` exceeds this are
/// reported as skipped instead of run.
pub const MAX_TRUNCATION_WORDS: u128 = 1 << 21;

pub fn truncation_words(dim: usize, degree: usize) -> u128 {
    (dim.saturating_sub(1) as u128).saturating_pow(degree as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Coradical,
    Par,
    Smash,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "coradical" => Ok(Suite::Coradical),
            "par" => Ok(Suite::Par),
            "smash" => Ok(Suite::Smash),
            "all" => Ok(Suite::All),
            other => Err(Error::Precondition(format!("unknown suite {other:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Coradical => "coradical",
            Suite::Par => "par",
            Suite::Smash => "smash",
            Suite::All => "all",
        }
    }
}

/// What a suite runs on.
#[derive(Clone, Debug)]
pub enum Subject {
    Hopf {
        name: String,
        hopf: HopfData,
        group: Option<Group>,
    },
    Twist {
        name: String,
        twist: TwistMap,
    },
}

impl Subject {
    pub fn from_catalog(name: &str, field: Option<FieldSpec>) -> Result<Subject> {
        let e = catalog::find(name)?;
        Ok(match e.kind {
            EntryKind::Hopf => Subject::Hopf {
                name: name.into(),
                hopf: e.hopf(field)?,
                group: e.group(),
            },
            EntryKind::Twist => Subject::Twist {
                name: name.into(),
                twist: e.twist(field)?.expect("twist entry"),
            },
        })
    }

    pub fn from_document(name: &str, doc: Document) -> Subject {
        match doc {
            Document::Hopf(hopf) => Subject::Hopf { name: name.into(), hopf, group: None },
            Document::Twist(twist) => Subject::Twist { name: name.into(), twist },
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Subject::Hopf { name, .. } | Subject::Twist { name, .. } => name,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ParOptions {
    pub degree: usize,
    pub groupoid_oracle: bool,
}

impl Default for ParOptions {
    fn default() -> Self {
        ParOptions {
            degree: DEFAULT_DEGREE,
            groupoid_oracle: true,
        }
    }
}

pub fn run_suite(subject: &Subject, suite: Suite, opts: ParOptions) -> Result<Report> {
    let mut r = Report::new(format!("{} {}", suite.as_str(), subject.name()));
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Axioms, Suite::Coradical, Suite::Par, Suite::Smash],
        _ => std::slice::from_ref(&suite),
    };
    for s in suites {
        let sub = match s {
            Suite::Axioms => axioms(subject)?,
            Suite::Coradical => coradical(subject)?,
            Suite::Par => par(subject, opts)?,
            Suite::Smash => smash(subject)?,
            Suite::All => unreachable!(),
        };
        r.absorb(s.as_str(), sub);
    }
    Ok(r)
}

fn hopf_of(subject: &Subject) -> Result<HopfData> {
    match subject {
        Subject::Hopf { hopf, .. } => Ok(hopf.clone()),
        Subject::Twist { twist, .. } => {
            let (smash, _) = build_smash(twist)?;
            smash
                .hopf()
                .cloned()
                .ok_or_else(|| Error::Precondition("twist is not a coalgebra map, no Hopf structure".into()))
        }
    }
}

/// Hopf axioms, and for twists both sides plus the smash product.
pub fn axioms(subject: &Subject) -> Result<Report> {
    let mut r = Report::new("axioms");
    match subject {
        Subject::Hopf { hopf, .. } => {
            r.absorb("hopf", verify_hopf(hopf));
            let s2 = hopf.antipode().compose(hopf.antipode());
            r.value("hopf/dims", "dim", hopf.dim());
            r.value("hopf/dims", "antipode-squared-identity", s2.is_identity());
        }
        Subject::Twist { twist, .. } => {
            r.absorb("h", verify_hopf(twist.h_side()));
            r.absorb("u", verify_hopf(twist.u_side()));
            let mut tw = twist.clone();
            r.absorb("twist", check_twist(&mut tw));
            let (smash, rep) = build_smash(&tw)?;
            r.absorb("smash", rep);
            r.value("smash/dims", "dim", smash.dim());
        }
    }
    Ok(r)
}

/// Coradical filtration with certificate, connectedness, the Chevalley
/// quotient, and the coradical criterion on catalog partial reps of the
/// same Hopf algebra.
pub fn coradical(subject: &Subject) -> Result<Report> {
    let h = hopf_of(subject)?;
    let mut r = Report::new("coradical");
    let filt = coradical_filtration(h.coalgebra())?;
    r.absorb("filtration", verify_filtration(h.coalgebra(), &filt)?);
    let dims: Vec<String> = filt.dims().iter().map(|d| d.to_string()).collect();
    r.value("coradical", "dim", filt.coradical().dim());
    r.value("coradical", "filtration-dims", dims.join(","));
    r.value("coradical", "connected", is_connected(h.coalgebra())?);
    r.value("coradical", "cosemisimple", is_cosemisimple(h.coalgebra())?);
    match chevalley_quotient(&h)? {
        ChevalleyOutcome::Quotient { hopf, radical, .. } => {
            r.value("chevalley", "radical-dim", radical.dim());
            r.value("chevalley", "quotient-dim", hopf.dim());
        }
        ChevalleyOutcome::NotHopfIdeal(rep) => {
            // An outcome, not a failure: H/J(H) just has no Hopf structure.
            let why: Vec<String> = rep.failures().iter().map(|it| format!("{}: {}", it.id, it.witness)).collect();
            r.skip("chevalley", format!("radical is not a Hopf ideal ({})", why.join("; ")));
            r.value("chevalley", "hopf-ideal", false);
        }
    }
    for cr in catalog::partial_reps()? {
        if cr.rep.source() != &h {
            continue;
        }
        let g = is_global(&cr.rep);
        let c = coradical_global_test(&cr.rep, &filt)?;
        let id = format!("criterion/{}", cr.name.replace(' ', "-"));
        r.check_bool(&id, g == c, format!("is_global = {g}, coradical test = {c}"));
        r.value(&id, "global", g);
    }
    Ok(r)
}

/// Truncated `H_par` and `A_par` with dimension tables; for group algebras
/// the groupoid cross-check. Non-stabilization is reported, not failed.
pub fn par(subject: &Subject, opts: ParOptions) -> Result<Report> {
    let h = hopf_of(subject)?;
    let mut r = Report::new("par");
    let words = truncation_words(h.dim(), opts.degree);
    if words > MAX_TRUNCATION_WORDS {
        r.skip(
            "hpar",
            format!("(dim − 1)^degree = {words} words exceeds the cap {MAX_TRUNCATION_WORDS}; lower --degree"),
        );
        return Ok(r);
    }
    let t = truncated_hpar(&h, opts.degree)?;
    r.absorb("hpar", stabilization_report(&t));
    if t.is_stabilized() {
        r.absorb("hpar", verify_truncation(&t)?);
        r.value("hpar/result", "dim", t.dim());
        r.value("hpar/result", "bracket-invertible", t.bracket_matrix().is_invertible());
    } else {
        r.skip("hpar/result", format!("not stabilized at degree {}", opts.degree));
    }
    let a = truncated_apar(&h, opts.degree)?;
    r.absorb("apar", stabilization_report(&a));
    if a.is_stabilized() {
        r.absorb("apar", verify_truncation(&a)?);
        r.value("apar/result", "dim", a.dim());
    } else {
        r.skip("apar/result", format!("not stabilized at degree {}", opts.degree));
    }
    let group = match subject {
        Subject::Hopf { group, .. } => group.clone(),
        Subject::Twist { .. } => None,
    };
    match (opts.groupoid_oracle, group) {
        (false, _) => r.skip("oracle", "disabled"),
        (true, None) => r.skip("oracle", "not a catalog group algebra"),
        (true, Some(g)) => {
            let gamma = gamma_groupoid(&g)?;
            r.absorb("oracle/groupoid", gamma.verify());
            r.value("oracle/groupoid", "arrows", gamma.len());
            if t.is_stabilized() {
                r.check_bool(
                    "oracle/dimension",
                    t.dim() == gamma.len(),
                    format!("dim H_par = {} but |Γ(G)| = {}", t.dim(), gamma.len()),
                );
                let (_, _, rep) = iso_kparg(&gamma, &t)?;
                r.absorb("oracle/iso", rep);
            } else {
                r.skip("oracle/dimension", "truncation not stabilized");
            }
        }
    }
    Ok(r)
}

/// Twist flags, smash product, matched-pair identities and the inverse
/// twist; extra constructions for the factorization and swap entries.
pub fn smash(subject: &Subject) -> Result<Report> {
    let mut r = Report::new("smash");
    let Subject::Twist { name, twist } = subject else {
        r.skip("twist", "not a twist entry");
        return Ok(r);
    };
    let mut tw = twist.clone();
    r.absorb("flags", check_twist(&mut tw));
    let (smash, rep) = build_smash(&tw)?;
    r.absorb("smash", rep);
    r.value("smash/dims", "dim", smash.dim());
    if tw.flags().is_some_and(|f| f.all()) {
        let (_, rep) = derive_actions(&tw)?;
        r.absorb("actions", rep);
        let (_, rep) = invert_twist(&tw)?;
        r.absorb("inverse", rep);
    } else {
        r.skip("actions", "twist is not normal, multiplicative, coalgebra map and invertible");
    }
    match name.as_str() {
        "s3_factorization" => {
            let (fact, rep) = catalog::s3_factorization(tw.field())?;
            r.absorb("factorization", rep);
            let (_, rep) = fact.multiplication_iso()?;
            r.absorb("multiplication-iso", rep);
            let (gm, _, rep) = gamma_m_theta(&fact)?;
            r.absorb("theta", rep);
            r.value("theta/dims", "arrows", gm.len());
        }
        "graded_v4_swap" => {
            let u = tw.u_side().clone();
            let kf = tw.h_side().clone();
            let c2 = Group::cyclic(2);
            let ucert = truncated_hpar(&u, 4)?;
            let sh = smash.hopf().ok_or_else(|| Error::Verification("no Hopf structure".into()))?;
            let sp = truncated_hpar(sh, 4)?;
            r.absorb("smash-par", stabilization_report(&sp));
            let p = ParPresentation::from_groupoid(&kf, &GroupoidGamma::new(&c2)?)?;
            let (t, rep) = lift_twist_t(&tw, &p)?;
            r.absorb("lift", rep);
            if sp.is_stabilized() {
                let (_, _, rep) = par_of_smash_iso(&ucert, &smash, &sp, &t)?;
                r.absorb("par-iso", rep);
                r.value("par-iso/dims", "iso-dim", sp.dim());
            } else {
                r.fail("par-iso", "truncation of the smash product did not stabilize at degree 4");
            }
            let action = catalog::v4_swap_matrices(tw.field());
            let (w, rep) = hopf_category_weak_hopf(&u, &c2, &action)?;
            r.absorb("weak-model", rep);
            let (_, rep) = weak_model_iso(&u, &c2, &action, &w)?;
            r.absorb("weak-model-iso", rep);
        }
        _ => {}
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kc2_par_reports_three() {
        let s = Subject::from_catalog("kC2", None).unwrap();
        let r = run_suite(&s, Suite::Par, ParOptions { degree: 4, groupoid_oracle: true }).unwrap();
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.get_value("par/hpar/result", "dim"), Some("3"));
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in [Suite::Axioms, Suite::Coradical, Suite::Par, Suite::Smash, Suite::All] {
            assert_eq!(Suite::parse(s.as_str()).unwrap(), s);
        }
        assert!(Suite::parse("bogus").is_err());
    }
}
