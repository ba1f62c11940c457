//! Named-postulate checker for extensional operator tables.
//!
//! Quantification over sentences is replaced by quantification over
//! propositions, which the tables' extensional representation makes finite
//! and exact; extensionality itself is additionally probed syntactically by
//! sampling equivalent formula variants. Verdicts carry the
//! lexicographically least violating pair of proposition bitmasks.
//!
//! World-level transcriptions. `t` is the table, `k = ||K||`, `P`/`Q` the
//! input propositions of `a`/`b`, `-P` the complement; `x in T` for a
//! theory `T` reads `||T|| ⊆ ||x||`, theory inclusion reverses to model-set
//! inclusion, theory intersection is model-set union, and expansion is
//! model-set intersection.
//!
//! | name | sentence form | world-level form |
//! |---|---|---|
//! | closure | the result is a belief set | vacuous: tables return model sets |
//! | success | `a ∈ K*a` | `t(P) ⊆ P` |
//! | inclusion | `K*a ⊆ K+a` | `k∩P ⊆ t(P)` |
//! | vacuity | `~a ∉ K ⇒ K+a ⊆ K*a` | `k∩P ≠ ∅ ⇒ t(P) ⊆ k∩P` |
//! | consistency | `a consistent ⇒ K*a consistent` | `P ≠ ∅ ⇒ t(P) ≠ ∅` |
//! | extensionality | `|- a<->b ⇒ K*a = K*b` | sampled formula variants |
//! | disjunctive-overlap | `K*a ∩ K*b ⊆ K*(a|b)` | `t(P∪Q) ⊆ t(P) ∪ t(Q)` |
//! | disjunctive-inclusion | `~a ∉ K*(a|b) ⇒ K*(a|b) ⊆ K*a` | `t(P∪Q)∩P ≠ ∅ ⇒ t(P) ⊆ t(P∪Q)` |
//! | contraction-inclusion | `K÷a ⊆ K` | `k ⊆ t(P)` |
//! | contraction-vacuity | `a ∉ K ⇒ K ⊆ K÷a` | `k ⊄ P ⇒ t(P) ⊆ k` |
//! | contraction-success | `⊬ a ⇒ a ∉ K÷a` | `P ≠ M ⇒ t(P) ⊄ P` |
//! | recovery | `K ⊆ (K÷a)+a` | `t(P)∩P ⊆ k` |
//! | conjunctive-overlap | `K÷a ∩ K÷b ⊆ K÷(a&b)` | `t(P∩Q) ⊆ t(P) ∪ t(Q)` |
//! | conjunctive-inclusion | `a ∉ K÷(a&b) ⇒ K÷(a&b) ⊆ K÷a` | `t(P∩Q) ⊄ P ⇒ t(P) ⊆ t(P∩Q)` |
//! | consistency-preservation | `K consistent ⇒ K⊙a consistent` | `k ≠ ∅ ⇒ t(P) ≠ ∅` |
//! | confirmation | `a ∈ K ⇒ K⊙a = K` | `k ⊆ P ⇒ t(P) = k` |
//! | strict-improvement | `a ∈ K⊙a, |- a->b ⇒ b ∈ K⊙b` | `t(P) ⊆ P, P ⊆ Q ⇒ t(Q) ⊆ Q` |
//! | regularity | `b ∈ K⊙a ⇒ b ∈ K⊙b` | `t(P) ⊆ Q ⇒ t(Q) ⊆ Q` |
//! | disjunctive-distribution | `a|b ∈ K⊙(a|b) ⇒ a ∈ K⊙a or b ∈ K⊙b` | `t(P∪Q) ⊆ P∪Q ⇒ t(P) ⊆ P or t(Q) ⊆ Q` |
//! | n-recovery | `K ⊆ K⊙a + ~a` | `t(P) ∩ -P ⊆ k` |
//! | n-relative-success | `~a ∈ K⊙a ⇒ K⊙a = K` | `t(P) ⊆ -P ⇒ t(P) = k` |
//! | n-persistence | `~b ∈ K⊙b ⇒ ~b ∈ K⊙a` | `t(Q) ⊆ -Q ⇒ t(P) ⊆ -Q` |
//! | n-success-propagation | `~a ∈ K⊙a, |- b->a ⇒ ~b ∈ K⊙b` | `t(P) ⊆ -P, Q ⊆ P ⇒ t(Q) ⊆ -Q` |
//! | weak-relative-success | `a ∈ K⊙a or K⊙a ⊆ K` | `t(P) ⊆ P or k ⊆ t(P)` |
//! | weak-vacuity | `~a ∉ K ⇒ K ⊆ K⊙a` | `k∩P ≠ ∅ ⇒ t(P) ⊆ k` |
//! | weak-disjunctive-inclusion | `~a ∉ K⊙(a|b) ⇒ K⊙(a|b)+(a|b) ⊆ K⊙a+a` | `t(P∪Q)∩P ≠ ∅ ⇒ t(P)∩P ⊆ t(P∪Q)∩(P∪Q)` |
//! | containment | `K consistent ⇒ K ∩ (K⊙a+a) ⊆ K⊙a` | `k ≠ ∅ ⇒ t(P) ⊆ k ∪ (t(P)∩P)` |
//! | credibility-of-logical-equivalents | `|- a<->b ⇒ (a ∈ C ⟺ b ∈ C)` | vacuous: sets hold propositions |
//! | single-sentence-closure | `a ∈ C ⇒ Cn(a) ⊆ C` | `P ∈ C_H, P ⊆ Q ⇒ Q ∈ C_H` |
//! | element-consistency | `a ∈ C ⇒ a ⊬ ⊥` | `∅ ∉ C_H and ∅ ∉ C_L` |
//! | credibility-lower-bounding | `K consistent ⇒ K ⊆ C` | `k ≠ ∅, k ⊆ P ⇒ P ∈ C_H` |
//! | condition-c-star | `a ∉ C, b ∈ C ⇒ ~a ∈ K*b` | `P ∉ C, Q ∈ C ⇒ t(Q) ∩ P = ∅`, for `C_H∪C_L` and for `C_H` |

use crate::logic::{canonical_formula, models, Formula, Proposition, Signature};
use crate::operators::{CredibilityPair, ExtensionalOperator, PropositionSet};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Closed catalog of checkable postulates and properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PostulateId {
    Closure,
    Success,
    Inclusion,
    Vacuity,
    Consistency,
    Extensionality,
    DisjunctiveOverlap,
    DisjunctiveInclusion,
    ContractionInclusion,
    ContractionVacuity,
    ContractionSuccess,
    Recovery,
    ConjunctiveOverlap,
    ConjunctiveInclusion,
    ConsistencyPreservation,
    Confirmation,
    StrictImprovement,
    Regularity,
    DisjunctiveDistribution,
    NRecovery,
    NRelativeSuccess,
    NPersistence,
    NSuccessPropagation,
    WeakRelativeSuccess,
    WeakVacuity,
    WeakDisjunctiveInclusion,
    Containment,
    CredibilityOfLogicalEquivalents,
    SingleSentenceClosure,
    ElementConsistency,
    CredibilityLowerBounding,
    ConditionCStar,
}

use PostulateId::*;

/// Every catalogued postulate, in the order reports and `--list` use.
pub const CATALOG: [PostulateId; 32] = [
    Closure,
    Success,
    Inclusion,
    Vacuity,
    Consistency,
    Extensionality,
    DisjunctiveOverlap,
    DisjunctiveInclusion,
    ContractionInclusion,
    ContractionVacuity,
    ContractionSuccess,
    Recovery,
    ConjunctiveOverlap,
    ConjunctiveInclusion,
    ConsistencyPreservation,
    Confirmation,
    StrictImprovement,
    Regularity,
    DisjunctiveDistribution,
    NRecovery,
    NRelativeSuccess,
    NPersistence,
    NSuccessPropagation,
    WeakRelativeSuccess,
    WeakVacuity,
    WeakDisjunctiveInclusion,
    Containment,
    CredibilityOfLogicalEquivalents,
    SingleSentenceClosure,
    ElementConsistency,
    CredibilityLowerBounding,
    ConditionCStar,
];

/// The eleven postulates characterizing sphere-based two-level operators.
pub const THEOREM_SUITE: [PostulateId; 11] = [
    WeakRelativeSuccess,
    Closure,
    Inclusion,
    ConsistencyPreservation,
    Vacuity,
    Extensionality,
    StrictImprovement,
    NPersistence,
    NRecovery,
    DisjunctiveOverlap,
    DisjunctiveInclusion,
];

/// The eight AGM revision postulates.
pub const REVISION_SUITE: [PostulateId; 8] = [
    Closure,
    Success,
    Inclusion,
    Vacuity,
    Consistency,
    Extensionality,
    DisjunctiveOverlap,
    DisjunctiveInclusion,
];

/// The eight AGM contraction postulates.
pub const CONTRACTION_SUITE: [PostulateId; 8] = [
    Closure,
    ContractionInclusion,
    ContractionVacuity,
    ContractionSuccess,
    Recovery,
    Extensionality,
    ConjunctiveOverlap,
    ConjunctiveInclusion,
];

impl PostulateId {
    pub fn name(self) -> &'static str {
        match self {
            Closure => "closure",
            Success => "success",
            Inclusion => "inclusion",
            Vacuity => "vacuity",
            Consistency => "consistency",
            Extensionality => "extensionality",
            DisjunctiveOverlap => "disjunctive-overlap",
            DisjunctiveInclusion => "disjunctive-inclusion",
            ContractionInclusion => "contraction-inclusion",
            ContractionVacuity => "contraction-vacuity",
            ContractionSuccess => "contraction-success",
            Recovery => "recovery",
            ConjunctiveOverlap => "conjunctive-overlap",
            ConjunctiveInclusion => "conjunctive-inclusion",
            ConsistencyPreservation => "consistency-preservation",
            Confirmation => "confirmation",
            StrictImprovement => "strict-improvement",
            Regularity => "regularity",
            DisjunctiveDistribution => "disjunctive-distribution",
            NRecovery => "n-recovery",
            NRelativeSuccess => "n-relative-success",
            NPersistence => "n-persistence",
            NSuccessPropagation => "n-success-propagation",
            WeakRelativeSuccess => "weak-relative-success",
            WeakVacuity => "weak-vacuity",
            WeakDisjunctiveInclusion => "weak-disjunctive-inclusion",
            Containment => "containment",
            CredibilityOfLogicalEquivalents => "credibility-of-logical-equivalents",
            SingleSentenceClosure => "single-sentence-closure",
            ElementConsistency => "element-consistency",
            CredibilityLowerBounding => "credibility-lower-bounding",
            ConditionCStar => "condition-c-star",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CATALOG.iter().copied().find(|p| p.name() == name)
    }

    /// Credibility properties and the relational condition need a
    /// [`CredibilityPair`] alongside the operator.
    pub fn requires_context(self) -> bool {
        matches!(
            self,
            CredibilityOfLogicalEquivalents
                | SingleSentenceClosure
                | ElementConsistency
                | CredibilityLowerBounding
                | ConditionCStar
        )
    }
}

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for PostulateId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown postulate `{0}`")]
    UnknownPostulate(String),
    #[error("postulate `{0}` needs a credibility pair as context")]
    MissingContext(&'static str),
    #[error("postulate `{0}` has no pointwise form to replay")]
    NotPointwise(&'static str),
}

/// Counterexample found by a check: the violating input proposition(s) and
/// the two sides of the violated clause.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub alpha: Proposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Proposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Proposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Proposition>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}", self.alpha.hex_mask())?;
        if let Some(b) = &self.beta {
            write!(f, " beta={}", b.hex_mask())?;
        }
        if let Some(l) = &self.lhs {
            write!(f, " lhs={}", l.hex_mask())?;
        }
        if let Some(r) = &self.rhs {
            write!(f, " rhs={}", r.hex_mask())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            pass: true,
            witness: None,
            note: None,
        }
    }

    fn pass_noted(note: &str) -> Self {
        Verdict {
            pass: true,
            witness: None,
            note: Some(note.to_string()),
        }
    }

    fn fail(witness: Witness) -> Self {
        Verdict {
            pass: false,
            witness: Some(witness),
            note: None,
        }
    }

    fn fail_noted(witness: Witness, note: &str) -> Self {
        Verdict {
            pass: false,
            witness: Some(witness),
            note: Some(note.to_string()),
        }
    }
}

/// Flat u64 view of a table; valid because table universes are capped at
/// 16 worlds.
struct View {
    n_atoms: usize,
    n_props: u64,
    full: u64,
    k: u64,
    t: Vec<u64>,
}

impl View {
    fn new(op: &ExtensionalOperator) -> Self {
        let full = op.signature().universe().bitmask();
        View {
            n_atoms: op.signature().n_atoms(),
            n_props: op.n_entries() as u64,
            full,
            k: op.belief_set().bitmask(),
            t: (0..op.n_entries() as u64)
                .map(|m| op.apply_mask(m).bitmask())
                .collect(),
        }
    }

    fn t(&self, a: u64) -> u64 {
        self.t[a as usize]
    }

    fn comp(&self, a: u64) -> u64 {
        self.full & !a
    }

    fn prop(&self, mask: u64) -> Proposition {
        Proposition::from_bitmask(self.n_atoms, mask)
    }

    fn witness(&self, a: u64, b: Option<u64>, lhs: Option<u64>, rhs: Option<u64>) -> Witness {
        Witness {
            alpha: self.prop(a),
            beta: b.map(|m| self.prop(m)),
            lhs: lhs.map(|m| self.prop(m)),
            rhs: rhs.map(|m| self.prop(m)),
        }
    }
}

fn sub(x: u64, y: u64) -> bool {
    x & !y == 0
}

enum Form {
    Unary,
    Binary,
}

fn form(id: PostulateId) -> Option<Form> {
    match id {
        Success | Inclusion | Vacuity | Consistency | ContractionInclusion
        | ContractionVacuity | ContractionSuccess | Recovery | ConsistencyPreservation
        | Confirmation | NRecovery | NRelativeSuccess | WeakRelativeSuccess | WeakVacuity
        | Containment => Some(Form::Unary),
        DisjunctiveOverlap | DisjunctiveInclusion | ConjunctiveOverlap | ConjunctiveInclusion
        | StrictImprovement | Regularity | DisjunctiveDistribution | NPersistence
        | NSuccessPropagation | WeakDisjunctiveInclusion => Some(Form::Binary),
        _ => None,
    }
}

/// Pointwise predicate of a table postulate at `(a, b)`; `b` is ignored for
/// unary forms.
fn holds(id: PostulateId, v: &View, a: u64, b: u64) -> bool {
    match id {
        Success => sub(v.t(a), a),
        Inclusion => sub(v.k & a, v.t(a)),
        Vacuity => v.k & a == 0 || sub(v.t(a), v.k & a),
        Consistency => a == 0 || v.t(a) != 0,
        ContractionInclusion => sub(v.k, v.t(a)),
        ContractionVacuity => sub(v.k, a) || sub(v.t(a), v.k),
        ContractionSuccess => a == v.full || !sub(v.t(a), a),
        Recovery => sub(v.t(a) & a, v.k),
        ConsistencyPreservation => v.k == 0 || v.t(a) != 0,
        Confirmation => !sub(v.k, a) || v.t(a) == v.k,
        NRecovery => sub(v.t(a) & v.comp(a), v.k),
        NRelativeSuccess => !sub(v.t(a), v.comp(a)) || v.t(a) == v.k,
        WeakRelativeSuccess => sub(v.t(a), a) || sub(v.k, v.t(a)),
        WeakVacuity => v.k & a == 0 || sub(v.t(a), v.k),
        Containment => v.k == 0 || sub(v.t(a), v.k | (v.t(a) & a)),
        DisjunctiveOverlap => sub(v.t(a | b), v.t(a) | v.t(b)),
        DisjunctiveInclusion => v.t(a | b) & a == 0 || sub(v.t(a), v.t(a | b)),
        ConjunctiveOverlap => sub(v.t(a & b), v.t(a) | v.t(b)),
        ConjunctiveInclusion => sub(v.t(a & b), a) || sub(v.t(a), v.t(a & b)),
        StrictImprovement => !(sub(v.t(a), a) && sub(a, b)) || sub(v.t(b), b),
        Regularity => !sub(v.t(a), b) || sub(v.t(b), b),
        DisjunctiveDistribution => {
            !sub(v.t(a | b), a | b) || sub(v.t(a), a) || sub(v.t(b), b)
        }
        NPersistence => !sub(v.t(b), v.comp(b)) || sub(v.t(a), v.comp(b)),
        NSuccessPropagation => {
            !(sub(v.t(a), v.comp(a)) && sub(b, a)) || sub(v.t(b), v.comp(b))
        }
        WeakDisjunctiveInclusion => {
            v.t(a | b) & a == 0 || sub(v.t(a) & a, v.t(a | b) & (a | b))
        }
        _ => unreachable!("no pointwise form"),
    }
}

/// The two sides of the clause violated at `(a, b)`, for the witness.
fn violated_sides(id: PostulateId, v: &View, a: u64, b: u64) -> (Option<u64>, Option<u64>) {
    match id {
        Success => (Some(v.t(a)), Some(a)),
        Inclusion => (Some(v.k & a), Some(v.t(a))),
        Vacuity => (Some(v.t(a)), Some(v.k & a)),
        Consistency | ConsistencyPreservation => (Some(v.t(a)), None),
        ContractionInclusion => (Some(v.k), Some(v.t(a))),
        ContractionVacuity | WeakVacuity => (Some(v.t(a)), Some(v.k)),
        ContractionSuccess => (Some(v.t(a)), Some(a)),
        Recovery => (Some(v.t(a) & a), Some(v.k)),
        Confirmation | NRelativeSuccess => (Some(v.t(a)), Some(v.k)),
        NRecovery => (Some(v.t(a) & v.comp(a)), Some(v.k)),
        WeakRelativeSuccess => (Some(v.t(a)), Some(a)),
        Containment => (Some(v.t(a)), Some(v.k | (v.t(a) & a))),
        DisjunctiveOverlap => (Some(v.t(a | b)), Some(v.t(a) | v.t(b))),
        DisjunctiveInclusion => (Some(v.t(a)), Some(v.t(a | b))),
        ConjunctiveOverlap => (Some(v.t(a & b)), Some(v.t(a) | v.t(b))),
        ConjunctiveInclusion => (Some(v.t(a)), Some(v.t(a & b))),
        StrictImprovement | Regularity => (Some(v.t(b)), Some(b)),
        DisjunctiveDistribution => (Some(v.t(a)), Some(a)),
        NPersistence => (Some(v.t(a)), Some(v.comp(b))),
        NSuccessPropagation => (Some(v.t(b)), Some(v.comp(b))),
        WeakDisjunctiveInclusion => (Some(v.t(a) & a), Some(v.t(a | b) & (a | b))),
        _ => (None, None),
    }
}

const VACUOUS_NOTE: &str = "vacuous by representation";

/// Check one postulate against a table, universally over all propositions
/// (and pairs). Context postulates check the extracted credibility sets:
/// single-sentence-closure and lower bounding against `C_H`, element
/// consistency against both sets, and `condition-c-star` for both
/// `C_H ∪ C_L` and `C_H` against the operator as the revision.
pub fn check(
    id: PostulateId,
    op: &ExtensionalOperator,
    ctx: Option<&CredibilityPair>,
) -> Result<Verdict, CheckError> {
    if id.requires_context() && ctx.is_none() && id != CredibilityOfLogicalEquivalents {
        return Err(CheckError::MissingContext(id.name()));
    }
    let v = View::new(op);
    match id {
        Closure => Ok(Verdict::pass_noted(VACUOUS_NOTE)),
        CredibilityOfLogicalEquivalents => Ok(Verdict::pass_noted(VACUOUS_NOTE)),
        Extensionality => Ok(check_extensionality_with(op.signature(), &|f| {
            op.apply(f).clone()
        })),
        SingleSentenceClosure => {
            let c = &ctx.unwrap().high;
            for a in c.masks() {
                for b in 0..v.n_props {
                    if sub(a, b) && !c.contains_mask(b) {
                        return Ok(Verdict::fail_noted(
                            v.witness(a, Some(b), None, None),
                            "C_H is not closed under weakening",
                        ));
                    }
                }
            }
            Ok(Verdict::pass())
        }
        ElementConsistency => {
            let c = ctx.unwrap();
            if c.high.contains_mask(0) {
                return Ok(Verdict::fail_noted(
                    v.witness(0, None, None, None),
                    "C_H contains the inconsistent proposition",
                ));
            }
            if c.low.contains_mask(0) {
                return Ok(Verdict::fail_noted(
                    v.witness(0, None, None, None),
                    "C_L contains the inconsistent proposition",
                ));
            }
            Ok(Verdict::pass())
        }
        CredibilityLowerBounding => {
            let c = &ctx.unwrap().high;
            if v.k != 0 {
                for a in 0..v.n_props {
                    if sub(v.k, a) && !c.contains_mask(a) {
                        return Ok(Verdict::fail_noted(
                            v.witness(a, None, Some(v.k), Some(a)),
                            "a consequence of K is not highly credible",
                        ));
                    }
                }
            }
            Ok(Verdict::pass())
        }
        ConditionCStar => {
            let c = ctx.unwrap();
            let both = check_condition_c_star(&c.any(), op);
            if !both.pass {
                return Ok(Verdict {
                    note: Some("condition (C_H∪C_L - *) violated".into()),
                    ..both
                });
            }
            let high = check_condition_c_star(&c.high, op);
            if !high.pass {
                return Ok(Verdict {
                    note: Some("condition (C_H - *) violated".into()),
                    ..high
                });
            }
            Ok(Verdict::pass())
        }
        _ => match form(id).expect("table postulate") {
            Form::Unary => {
                for a in 0..v.n_props {
                    if !holds(id, &v, a, 0) {
                        let (lhs, rhs) = violated_sides(id, &v, a, 0);
                        return Ok(Verdict::fail(v.witness(a, None, lhs, rhs)));
                    }
                }
                Ok(Verdict::pass())
            }
            Form::Binary => {
                for a in 0..v.n_props {
                    for b in 0..v.n_props {
                        if !holds(id, &v, a, b) {
                            let (lhs, rhs) = violated_sides(id, &v, a, b);
                            return Ok(Verdict::fail(v.witness(a, Some(b), lhs, rhs)));
                        }
                    }
                }
                Ok(Verdict::pass())
            }
        },
    }
}

/// Replay one table postulate at a concrete point; used to confirm that a
/// reported witness really violates the transcription.
pub fn holds_at(
    id: PostulateId,
    op: &ExtensionalOperator,
    alpha: &Proposition,
    beta: Option<&Proposition>,
) -> Result<bool, CheckError> {
    if form(id).is_none() {
        return Err(CheckError::NotPointwise(id.name()));
    }
    let v = View::new(op);
    Ok(holds(
        id,
        &v,
        alpha.bitmask(),
        beta.map_or(0, |b| b.bitmask()),
    ))
}

/// Condition relating a credibility set to a revision: revising by a
/// member never drops the negation of a non-member.
pub fn check_condition_c_star(c: &PropositionSet, star: &ExtensionalOperator) -> Verdict {
    let v = View::new(star);
    for a in 0..v.n_props {
        if c.contains_mask(a) {
            continue;
        }
        for b in c.masks() {
            if v.t(b) & a != 0 {
                return Verdict::fail(v.witness(a, Some(b), Some(v.t(b)), Some(v.comp(a))));
            }
        }
    }
    Verdict::pass()
}

/// Syntactically distinct formulas with the same model set.
fn formula_variants(f: &Formula) -> Vec<Formula> {
    vec![
        Formula::not(Formula::not(f.clone())),
        Formula::and(f.clone(), Formula::Top),
        Formula::or(f.clone(), Formula::Bottom),
        Formula::and(f.clone(), f.clone()),
        Formula::or(f.clone(), f.clone()),
        Formula::imp(Formula::not(f.clone()), Formula::Bottom),
        Formula::imp(Formula::Top, f.clone()),
        Formula::iff(f.clone(), Formula::Top),
        de_morganed(f),
    ]
}

fn de_morganed(f: &Formula) -> Formula {
    match f {
        Formula::And(a, b) => Formula::not(Formula::or(
            Formula::not(de_morganed(a)),
            Formula::not(de_morganed(b)),
        )),
        Formula::Or(a, b) => Formula::not(Formula::and(
            Formula::not(de_morganed(a)),
            Formula::not(de_morganed(b)),
        )),
        Formula::Not(a) => Formula::not(de_morganed(a)),
        Formula::Imp(a, b) => Formula::imp(de_morganed(a), de_morganed(b)),
        Formula::Iff(a, b) => Formula::iff(de_morganed(a), de_morganed(b)),
        other => other.clone(),
    }
}

/// Extensionality probe over an arbitrary formula-to-proposition map: for
/// every proposition, at least eight equivalent variants of its canonical
/// formula must produce the identical result.
pub fn check_extensionality_with(
    sig: &Signature,
    apply: &dyn Fn(&Formula) -> Proposition,
) -> Verdict {
    let n_props = 1u64 << sig.universe_size();
    for mask in 0..n_props {
        let p = Proposition::from_bitmask(sig.n_atoms(), mask);
        let canonical = canonical_formula(&p, sig);
        let base = apply(&canonical);
        for variant in formula_variants(&canonical) {
            let vm = models(&variant, sig);
            if vm != p {
                return Verdict::fail_noted(
                    Witness {
                        alpha: p.clone(),
                        beta: None,
                        lhs: Some(vm),
                        rhs: Some(p.clone()),
                    },
                    "variant model set deviates from the proposition",
                );
            }
            let out = apply(&variant);
            if out != base {
                return Verdict::fail_noted(
                    Witness {
                        alpha: p,
                        beta: None,
                        lhs: Some(out),
                        rhs: Some(base),
                    },
                    "syntactic variant changed the result",
                );
            }
        }
    }
    Verdict::pass()
}

/// One postulate's verdict inside a suite report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteEntry {
    pub postulate: PostulateId,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| !e.verdict.pass)
    }
}

/// Run every named check in order; overall pass iff all pass.
pub fn check_suite(
    ids: &[PostulateId],
    op: &ExtensionalOperator,
    ctx: Option<&CredibilityPair>,
) -> Result<SuiteReport, CheckError> {
    let entries = ids
        .iter()
        .map(|&id| {
            check(id, op, ctx).map(|verdict| SuiteEntry {
                postulate: id,
                verdict,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pass = entries.iter().all(|e| e.verdict.pass);
    Ok(SuiteReport { entries, pass })
}
