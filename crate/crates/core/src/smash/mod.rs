//! Twist maps and smash products `U #_R H`, their lifts to `H_par`, and
//! the examples built from group data and duality.

pub mod examples;
pub mod lifted;
pub mod twist;
pub mod weak_model;

pub use examples::{drinfeld_twist, exact_factorization_twist, gamma_m_theta, graded_partial_compat, group_action_twist, ExactFactorization};
pub use lifted::{
    base_algebra_isos, certify_no_partiality, epsilon_columns, lift_twist_calr, lift_twist_t, par_of_smash_iso,
    ElementwiseContext, LiftKind, LiftedTwist,
};
pub use twist::{
    build_smash, check_twist, derive_actions, invert_twist, twisted_tensor_algebra, MatchedPairActions, SmashAlgebra,
    TwistFlags, TwistMap,
};
pub use weak_model::{hopf_category_weak_hopf, weak_model_iso};
