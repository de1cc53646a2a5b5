//! `H_par` and `A_par`: exact groupoid models for group algebras and
//! degree-truncated quotients of the tensor algebra in general.

pub mod action;
pub mod groupoid;
pub mod presentation;
pub mod truncation;
pub mod weak;
pub mod words;

pub use groupoid::{
    arrow_polynomial, gamma_count_brute_force, gamma_count_closed_form, gamma_groupoid,
    gamma_m_groupoid, groupoid_algebra, groupoid_bracket, iso_kparg, verified_groupoid_algebra,
    GroupoidGamma,
};
pub use action::{apar_embedding, epsilon_in_hpar, partial_action_on_apar, partial_smash, smash_hpar_iso, PartialSmash};
pub use presentation::ParPresentation;
pub use truncation::{
    apar_relations, eval_poly, hpar_relations, stabilization_report, truncated_apar,
    truncated_hpar, verify_truncation, LetterMap, ParKind, TruncatedQuotient,
};
pub use weak::{verify_weak_hopf, weak_from_hopf, WeakHopfData};
pub use words::{Poly, Rewriter, Word};
