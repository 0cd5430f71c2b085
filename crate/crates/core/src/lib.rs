//! Minimax-regret winner determination for partial preference profiles under
//! score-based voting rules, the polynomial-time manipulative-elicitation
//! decision algorithm with witness synthesis, an exact solver for the
//! pair-limit-constrained variant, and generators plus verifiers for the
//! associated hardness-reduction constructions.
//!
//! Everything computes with exact arithmetic (integers, rationals only for
//! Copeland^alpha), and every enumeration is budgeted: exceeding a budget is
//! an error, never a silent approximation.

pub mod elicitation;
pub mod mecpl;
pub mod order;
pub mod profile;
pub mod reductions;
pub mod regret;
pub mod rules;

pub use order::{
    is_completion, linear_extensions, linear_extensions_capped, transitive_suborders,
    transitive_suborders_capped, AltId, LinearOrder, OrderError, PartialOrder,
};
pub use profile::{comparability_count, Alternatives, PartialProfile, Profile, ProfileError};
pub use rules::{
    best_score, majority_margins, make_vector, score, score_int, winners, worst_score,
    MajorityMatrix, Rule, RuleError, RuleFamily, Score, ScoreVector, VectorFamily,
};
