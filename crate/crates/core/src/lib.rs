//! Belief revision over finite propositional signatures: Grove sphere
//! systems, two-level credibility-limited revision, extensional operator
//! tables, a postulate model checker, and an enumeration harness that
//! verifies the representation theorem for the two-level operators at desk
//! scale.

pub mod harness;
pub mod logic;
pub mod operators;
pub mod postulates;
pub mod spheres;

pub use logic::{
    canonical_formula, expand, models, parse_formula, theory_entails, Formula, ParseError,
    Proposition, Signature, SignatureError, World,
};
pub use operators::{CredibilityPair, ExtensionalOperator, PropositionSet};
pub use spheres::{ReviseCase, SphereSystem, TwoLevelSystem};
