//! Extensional operator tables and the constructions that relate them:
//! inducing a two-level operator from a revision and a credibility pair,
//! the Levi/Harper interchange, extraction of a revision plus credibility
//! sets from a two-level operator, and recovery of a two-level sphere
//! system from an operator table.
//!
//! A table is total: one entry per proposition over the signature, indexed
//! densely by the proposition's world bitmask. Applying the operator to a
//! formula means looking up its model set, which bakes extensionality into
//! the representation.

use crate::logic::{models, Formula, MaskError, Proposition, Signature, SignatureError, World};
use crate::spheres::TwoLevelSystem;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Tables hold `2^(2^n)` entries; past n = 4 they stop being desk-scale.
pub const MAX_TABLE_ATOMS: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("{0} atoms would need 2^{1} table entries; the cap is {MAX_TABLE_ATOMS} atoms")]
    TooManyAtoms(usize, usize),
    #[error("table has {got} entries, a {atoms}-atom table needs {expected}")]
    WrongEntryCount { atoms: usize, expected: usize, got: usize },
    #[error("missing entry for proposition {0}")]
    MissingEntry(String),
    #[error("bad bitmask `{0}`: {1}")]
    BadMask(String, MaskError),
    #[error("bad belief set `{0}`: {1}")]
    BadBeliefSet(String, String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// A total mapping from propositions to propositions over a fixed
/// signature, together with the belief set it operates on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionalOperator {
    sig: Signature,
    k: Proposition,
    entries: Vec<Proposition>,
}

impl ExtensionalOperator {
    /// Tabulate `f` over every proposition, in increasing bitmask order.
    pub fn from_fn(
        sig: Signature,
        k: Proposition,
        f: impl Fn(&Proposition) -> Proposition,
    ) -> Result<Self, TableError> {
        let n = sig.n_atoms();
        if n > MAX_TABLE_ATOMS {
            return Err(TableError::TooManyAtoms(n, sig.universe_size()));
        }
        assert_eq!(k.n_atoms(), n, "belief set universe mismatch");
        let entries = (0..1u64 << sig.universe_size())
            .map(|mask| f(&Proposition::from_bitmask(n, mask)))
            .collect();
        Ok(ExtensionalOperator { sig, k, entries })
    }

    pub fn from_entries(
        sig: Signature,
        k: Proposition,
        entries: Vec<Proposition>,
    ) -> Result<Self, TableError> {
        let n = sig.n_atoms();
        if n > MAX_TABLE_ATOMS {
            return Err(TableError::TooManyAtoms(n, sig.universe_size()));
        }
        let expected = 1usize << sig.universe_size();
        if entries.len() != expected {
            return Err(TableError::WrongEntryCount {
                atoms: n,
                expected,
                got: entries.len(),
            });
        }
        Ok(ExtensionalOperator { sig, k, entries })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// `||K||`.
    pub fn belief_set(&self) -> &Proposition {
        &self.k
    }

    /// Number of table entries, `2^(2^n)`.
    pub fn n_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn apply_mask(&self, mask: u64) -> &Proposition {
        &self.entries[mask as usize]
    }

    pub fn apply_prop(&self, p: &Proposition) -> &Proposition {
        self.apply_mask(p.bitmask())
    }

    pub fn apply(&self, f: &Formula) -> &Proposition {
        self.apply_prop(&models(f, &self.sig))
    }

    /// All input propositions in increasing bitmask order.
    pub fn inputs(&self) -> impl Iterator<Item = Proposition> + '_ {
        (0..self.entries.len() as u64).map(|m| Proposition::from_bitmask(self.sig.n_atoms(), m))
    }

    /// Copy with one entry redirected; used to build mutant tables.
    pub fn with_entry(&self, input_mask: u64, result: Proposition) -> Self {
        let mut copy = self.clone();
        copy.entries[input_mask as usize] = result;
        copy
    }
}

/// A set of propositions over a fixed signature, indexed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionSet {
    n_atoms: usize,
    members: Vec<bool>,
}

impl PropositionSet {
    pub fn empty(sig: &Signature) -> Self {
        PropositionSet {
            n_atoms: sig.n_atoms(),
            members: vec![false; 1 << sig.universe_size()],
        }
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn insert_mask(&mut self, mask: u64) {
        self.members[mask as usize] = true;
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members[mask as usize]
    }

    pub fn contains(&self, p: &Proposition) -> bool {
        self.contains_mask(p.bitmask())
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.contains(&true)
    }

    /// Member bitmasks in increasing order.
    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(m, _)| m as u64)
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n_atoms, other.n_atoms);
        PropositionSet {
            n_atoms: self.n_atoms,
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.members
            .iter()
            .zip(&other.members)
            .any(|(&a, &b)| a && b)
    }
}

/// The two credibility sets, quotiented by logical equivalence: a sentence
/// is a member exactly when its model set is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CredibilityPair {
    pub high: PropositionSet,
    pub low: PropositionSet,
}

impl CredibilityPair {
    /// `C_H ∪ C_L`, the sentences with some degree of credibility.
    pub fn any(&self) -> PropositionSet {
        self.high.union(&self.low)
    }
}

/// Two-level operator induced by a revision table and a credibility pair:
/// revise for highly credible input, meet the revision with `K` (union of
/// model sets) for second-level input, keep `K` otherwise.
pub fn induce_two_level(
    star: &ExtensionalOperator,
    c: &CredibilityPair,
) -> ExtensionalOperator {
    let k = star.belief_set().clone();
    ExtensionalOperator::from_fn(star.signature().clone(), k.clone(), |p| {
        let mask = p.bitmask();
        if c.high.contains_mask(mask) {
            star.apply_mask(mask).clone()
        } else if c.low.contains_mask(mask) {
            star.apply_mask(mask).union(&k)
        } else {
            k.clone()
        }
    })
    .expect("same signature as star")
}

/// Contraction from revision: `K ÷ a = (K * ~a) ∩ K`, which at the world
/// level is `star(-P) ∪ ||K||`.
pub fn harper(star: &ExtensionalOperator) -> ExtensionalOperator {
    ExtensionalOperator::from_fn(star.signature().clone(), star.belief_set().clone(), |p| {
        star.apply_prop(&p.complement()).union(star.belief_set())
    })
    .expect("same signature as star")
}

/// Revision from contraction: `K * a = (K ÷ ~a) + a`, which at the world
/// level is `div(-P) ∩ P`.
pub fn levi(div: &ExtensionalOperator) -> ExtensionalOperator {
    ExtensionalOperator::from_fn(div.signature().clone(), div.belief_set().clone(), |p| {
        div.apply_prop(&p.complement()).intersection(p)
    })
    .expect("same signature as div")
}

/// Extract the underlying revision and credibility pair from a two-level
/// operator: where the result tolerates the input, the revision is the
/// result expanded by the input; where it entails the input's negation,
/// the revision falls back to the input's own theory. `C_H` collects the
/// inputs the operator accepts, `C_L` those it merely tolerates.
pub fn extract_revision_and_credibility(
    odot: &ExtensionalOperator,
) -> (ExtensionalOperator, CredibilityPair) {
    let sig = odot.signature();
    let mut high = PropositionSet::empty(sig);
    let mut low = PropositionSet::empty(sig);
    let star = ExtensionalOperator::from_fn(sig.clone(), odot.belief_set().clone(), |p| {
        let out = odot.apply_prop(p);
        if out.is_subset(&p.complement()) {
            // negation of the input is entailed: K * a = Cn(a)
            p.clone()
        } else {
            out.intersection(p)
        }
    })
    .expect("same signature as odot");
    for p in odot.inputs() {
        let mask = p.bitmask();
        let out = odot.apply_mask(mask);
        if out.is_subset(&p) {
            high.insert_mask(mask);
        } else if out.intersects(&p) {
            low.insert_mask(mask);
        }
    }
    (star, CredibilityPair { high, low })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GuardError {
    #[error("guard violated: the operator result {result} entails the negation of {input}")]
    NegationEntailed { input: String, result: String },
}

/// Union of the operator's outputs over all weakenings of `alpha`:
/// `S(a) = ⋃ {||K ⊙ d|| : ||a|| ⊆ ||d||}`. Requires the result of revising
/// by `alpha` to tolerate `alpha`.
pub fn s_alpha_union_prop(
    odot: &ExtensionalOperator,
    alpha: &Proposition,
) -> Result<Proposition, GuardError> {
    let out = odot.apply_prop(alpha);
    if !out.intersects(alpha) {
        return Err(GuardError::NegationEntailed {
            input: alpha.hex_mask(),
            result: out.hex_mask(),
        });
    }
    let mut acc = Proposition::empty(odot.signature().n_atoms());
    for q in odot.inputs() {
        if alpha.is_subset(&q) {
            acc = acc.union(odot.apply_prop(&q));
        }
    }
    Ok(acc)
}

pub fn s_alpha_union(
    odot: &ExtensionalOperator,
    alpha: &Formula,
) -> Result<Proposition, GuardError> {
    s_alpha_union_prop(odot, &models(alpha, odot.signature()))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("collected spheres {0} and {1} are not nested")]
    NotNested(String, String),
    #[error("smallest collected sphere {0} is not the belief set {1}")]
    MinimumNotCenter(String, String),
    #[error("inner sphere {0} was not collected into the outer family")]
    InnerNotInFamily(String),
    #[error("inner spheres are not an initial segment of the chain at {0}")]
    InnerNotPrefix(String),
}

/// Rebuild a two-level sphere system from an operator table by collecting
/// every candidate subset that behaves like a sphere.
///
/// A nonempty `S` joins the inner family when it sits inside the union of
/// accepted results and swallows the result of every input it meets; it
/// joins the outer family under the weaker tolerated-results bound, with
/// the extra demand that inputs it misses leave exactly the belief set
/// inside it. The collected family must form a strictly nested chain with
/// the belief set as minimum and the inner family as a prefix; any other
/// outcome reports which clause broke, signalling that the input table
/// does not satisfy the required postulates.
pub fn construct_spheres(odot: &ExtensionalOperator) -> Result<TwoLevelSystem, ConstructError> {
    let sig = odot.signature();
    let n = sig.n_atoms();
    let n_worlds = sig.universe_size();
    let k = odot.belief_set();

    let mut accepted_union = Proposition::empty(n);
    let mut tolerated_union = Proposition::empty(n);
    for p in odot.inputs() {
        let out = odot.apply_prop(&p);
        if out.is_subset(&p) {
            accepted_union = accepted_union.union(out);
        }
        if out.intersects(&p) {
            tolerated_union = tolerated_union.union(out);
        }
    }

    let mut inner: Vec<Proposition> = Vec::new();
    let mut outer: Vec<Proposition> = Vec::new();
    for s_mask in 1..1u64 << n_worlds {
        let s = Proposition::from_bitmask(n, s_mask);
        let swallows_met_inputs = odot
            .inputs()
            .all(|p| !s.intersects(&p) || odot.apply_prop(&p).is_subset(&s));
        let in_inner = s == *k || (s.is_subset(&accepted_union) && swallows_met_inputs);
        if in_inner {
            inner.push(s.clone());
        }
        let missed_inputs_leave_center = in_inner
            || odot
                .inputs()
                .all(|p| s.intersects(&p) || odot.apply_prop(&p).intersection(&s) == *k);
        if s == *k
            || (s.is_subset(&tolerated_union) && swallows_met_inputs && missed_inputs_leave_center)
        {
            outer.push(s);
        }
    }

    // order by size; a valid family is then a strictly nested chain
    outer.sort_by_key(|s| (s.len(), s.bitmask()));
    for pair in outer.windows(2) {
        if !pair[0].is_subset(&pair[1]) || pair[0] == pair[1] {
            return Err(ConstructError::NotNested(
                pair[0].hex_mask(),
                pair[1].hex_mask(),
            ));
        }
    }
    let first = outer.first().expect("the belief set is always collected");
    if first != k {
        return Err(ConstructError::MinimumNotCenter(
            first.hex_mask(),
            k.hex_mask(),
        ));
    }
    for s in &inner {
        if !outer.contains(s) {
            return Err(ConstructError::InnerNotInFamily(s.hex_mask()));
        }
    }
    let inner_count = inner.len();
    for (i, s) in outer.iter().enumerate() {
        let is_inner = inner.contains(s);
        if is_inner != (i < inner_count) {
            return Err(ConstructError::InnerNotPrefix(s.hex_mask()));
        }
    }

    let mut ranks: Vec<Option<u32>> = vec![None; n_worlds];
    for w in 0..n_worlds {
        for (level, s) in outer.iter().enumerate() {
            if s.contains(World(w as u16)) {
                ranks[w] = Some(level as u32);
                break;
            }
        }
    }
    let cutoff = (inner_count - 1) as u32;
    Ok(TwoLevelSystem::new_unchecked(sig.clone(), ranks, cutoff))
}

// ---------------------------------------------------------------------------
// JSON table files
// ---------------------------------------------------------------------------

/// On-disk operator table. `K` is a `0x`-prefixed world bitmask or a
/// formula over the atoms; `entries` maps input proposition bitmasks to
/// result bitmasks and must be total.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub atoms: Vec<String>,
    #[serde(rename = "K")]
    pub k: String,
    pub entries: BTreeMap<String, String>,
}

fn parse_proposition(text: &str, sig: &Signature) -> Result<Proposition, String> {
    if text.starts_with("0x") || text.starts_with("0X") {
        Proposition::from_hex(sig.n_atoms(), text).map_err(|e| e.to_string())
    } else {
        crate::logic::parse_formula(text, sig)
            .map(|f| models(&f, sig))
            .map_err(|e| e.to_string())
    }
}

pub fn parse_table(json: &str) -> Result<ExtensionalOperator, TableError> {
    let file: TableFile = serde_json::from_str(json)
        .map_err(|e| TableError::BadBeliefSet("<json>".into(), e.to_string()))?;
    let sig = Signature::new(file.atoms.clone())?;
    let n = sig.n_atoms();
    if n > MAX_TABLE_ATOMS {
        return Err(TableError::TooManyAtoms(n, sig.universe_size()));
    }
    let k = parse_proposition(&file.k, &sig)
        .map_err(|e| TableError::BadBeliefSet(file.k.clone(), e))?;
    let expected = 1usize << sig.universe_size();
    let mut entries: Vec<Option<Proposition>> = vec![None; expected];
    for (key, value) in &file.entries {
        let input = Proposition::from_hex(n, key)
            .map_err(|e| TableError::BadMask(key.clone(), e))?;
        let result = Proposition::from_hex(n, value)
            .map_err(|e| TableError::BadMask(value.clone(), e))?;
        entries[input.bitmask() as usize] = Some(result);
    }
    let entries = entries
        .into_iter()
        .enumerate()
        .map(|(mask, e)| {
            e.ok_or_else(|| {
                TableError::MissingEntry(Proposition::from_bitmask(n, mask as u64).hex_mask())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ExtensionalOperator::from_entries(sig, k, entries)
}

pub fn table_to_json(op: &ExtensionalOperator) -> String {
    let file = TableFile {
        atoms: op.signature().atoms().to_vec(),
        k: op.belief_set().hex_mask(),
        entries: op
            .inputs()
            .map(|p| (p.hex_mask(), op.apply_prop(&p).hex_mask()))
            .collect(),
    };
    serde_json::to_string(&file).expect("table files serialize")
}

/// The two-level revision table induced by a system.
pub fn induced_table(t: &TwoLevelSystem) -> ExtensionalOperator {
    ExtensionalOperator::from_fn(t.signature().clone(), t.center(), |p| t.revise_prop(p))
        .expect("system signatures fit the table cap")
}

/// The Grove revision table of a full system.
pub fn grove_table(g: &crate::spheres::SphereSystem) -> ExtensionalOperator {
    ExtensionalOperator::from_fn(g.signature().clone(), g.center(), |p| g.revise_prop(p))
        .expect("system signatures fit the table cap")
}

/// The Grove contraction table of a full system.
pub fn grove_contraction_table(g: &crate::spheres::SphereSystem) -> ExtensionalOperator {
    ExtensionalOperator::from_fn(g.signature().clone(), g.center(), |p| g.contract_prop(p))
        .expect("system signatures fit the table cap")
}

impl TwoLevelSystem {
    /// Convenience alias for [`induced_table`].
    pub fn induced_table(&self) -> ExtensionalOperator {
        induced_table(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;
    use crate::spheres::SphereSystem;

    fn sig_pq() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn prop(mask: u64) -> Proposition {
        Proposition::from_bitmask(2, mask)
    }

    fn sys_a() -> TwoLevelSystem {
        TwoLevelSystem::new(sig_pq(), vec![None, Some(2), Some(1), Some(0)], 1).unwrap()
    }

    fn sys_b() -> SphereSystem {
        SphereSystem::new(sig_pq(), vec![3, 2, 1, 0]).unwrap()
    }

    /// Hand-derived table of SYS-A (rank {3:0, 2:1, 1:2, 0:-}, cutoff 1).
    const SYS_A_ENTRIES: [u64; 16] = [
        0x8, 0x8, 0xa, 0xa, 0x4, 0x4, 0x4, 0x4, 0x8, 0x8, 0x8, 0x8, 0x8, 0x8, 0x8, 0x8,
    ];

    #[test]
    fn induced_table_of_sys_a_matches_hand_derivation() {
        let table = induced_table(&sys_a());
        for (mask, expected) in SYS_A_ENTRIES.iter().enumerate() {
            assert_eq!(
                table.apply_mask(mask as u64),
                &prop(*expected),
                "entry {mask:#x}"
            );
        }
    }

    #[test]
    fn harper_examples() {
        let star = grove_table(&sys_b());
        let div = harper(&star);
        let sig = sig_pq();
        let p = models(&parse_formula("p", &sig).unwrap(), &sig);
        assert_eq!(div.apply_prop(&p), &prop(0xa));
        assert_eq!(div.apply_prop(&prop(0xf)), &prop(0x8));
        assert_eq!(div.apply_prop(&prop(0x0)), &prop(0x8));
        // Harper from the revision table equals the direct contraction table
        assert_eq!(div, grove_contraction_table(&sys_b()));
    }

    #[test]
    fn levi_examples() {
        let div = grove_contraction_table(&sys_b());
        let star = levi(&div);
        assert_eq!(star.apply_prop(&prop(0x3)), &prop(0x2)); // ||~p||
        assert_eq!(star.apply_prop(&prop(0xf)), &prop(0x8)); // ||true||
    }

    #[test]
    fn levi_harper_identities_on_sys_b() {
        let star = grove_table(&sys_b());
        let div = grove_contraction_table(&sys_b());
        assert_eq!(levi(&harper(&star)), star);
        assert_eq!(harper(&levi(&div)), div);
    }

    #[test]
    fn extraction_examples() {
        let odot = induced_table(&sys_a());
        let (star, c) = extract_revision_and_credibility(&odot);
        assert!(c.high.contains(&prop(0x5))); // ||~q||
        assert!(c.low.contains(&prop(0x3))); // ||~p||
        assert!(!c.high.contains(&prop(0x1)) && !c.low.contains(&prop(0x1)));
        assert_eq!(star.apply_prop(&prop(0x1)), &prop(0x1)); // Cn(a) branch
        assert_eq!(star.apply_prop(&prop(0x5)), &prop(0x4));
        assert_eq!(star.apply_prop(&prop(0x3)), &prop(0x2)); // {1,3} ∩ {0,1}
    }

    #[test]
    fn extraction_sets_are_disjoint_and_consistent() {
        let odot = induced_table(&sys_a());
        let (_, c) = extract_revision_and_credibility(&odot);
        assert!(!c.high.intersects(&c.low));
        assert!(!c.high.contains_mask(0));
        assert!(!c.low.contains_mask(0));
        // credibility lower bounding: every proposition weaker than K is accepted
        for p in odot.inputs() {
            if odot.belief_set().is_subset(&p) {
                assert!(c.high.contains(&p), "{p:?} should be highly credible");
            }
        }
    }

    #[test]
    fn induce_round_trips_extraction_on_sys_a() {
        let odot = induced_table(&sys_a());
        let (star, c) = extract_revision_and_credibility(&odot);
        assert_eq!(induce_two_level(&star, &c), odot);
    }

    #[test]
    fn induce_clause_examples() {
        let odot = induced_table(&sys_a());
        let (star, c) = extract_revision_and_credibility(&odot);
        let induced = induce_two_level(&star, &c);
        // highly credible input behaves as plain revision
        assert_eq!(induced.apply_prop(&prop(0x5)), &prop(0x4));
        // non-credible input keeps K
        assert_eq!(induced.apply_prop(&prop(0x1)), &prop(0x8));
        // second-level input: union with K at the world level
        assert_eq!(
            induced.apply_prop(&prop(0x3)),
            &star.apply_prop(&prop(0x3)).union(&prop(0x8))
        );
        assert_eq!(induced.apply_prop(&prop(0x3)), &prop(0xa));
    }

    #[test]
    fn s_alpha_union_examples() {
        let odot = induced_table(&sys_a());
        let sig = sig_pq();
        let not_q = parse_formula("~q", &sig).unwrap();
        assert_eq!(s_alpha_union(&odot, &not_q).unwrap(), prop(0xc));
        assert_eq!(s_alpha_union(&odot, &Formula::Top).unwrap(), prop(0x8));
        let neither = parse_formula("~p & ~q", &sig).unwrap();
        assert!(matches!(
            s_alpha_union(&odot, &neither),
            Err(GuardError::NegationEntailed { .. })
        ));
    }

    #[test]
    fn construct_spheres_round_trips_sys_a() {
        let odot = induced_table(&sys_a());
        let rebuilt = construct_spheres(&odot).unwrap();
        assert!(rebuilt.validate().is_ok());
        let spheres = rebuilt.spheres();
        let flags: Vec<(u64, bool)> = spheres
            .iter()
            .map(|s| (s.worlds.bitmask(), s.inner))
            .collect();
        assert_eq!(flags, vec![(0x8, true), (0xc, true), (0xe, false)]);
        assert_eq!(induced_table(&rebuilt), odot);
    }

    #[test]
    fn construct_spheres_on_one_level_table_has_no_outer_band() {
        let odot = induced_table(&sys_b().to_two_level());
        let rebuilt = construct_spheres(&odot).unwrap();
        assert!(rebuilt.spheres().iter().all(|s| s.inner));
        assert_eq!(induced_table(&rebuilt), odot);
    }

    #[test]
    fn construct_spheres_on_constant_table_keeps_only_center() {
        let sig = sig_pq();
        let k = prop(0x8);
        let odot = ExtensionalOperator::from_fn(sig, k.clone(), |_| k.clone()).unwrap();
        let rebuilt = construct_spheres(&odot).unwrap();
        let spheres = rebuilt.spheres();
        assert_eq!(spheres.len(), 1);
        assert_eq!(spheres[0].worlds, k);
        assert!(spheres[0].inner);
        assert_eq!(induced_table(&rebuilt), odot);
    }

    #[test]
    fn table_json_round_trip_and_totality() {
        let odot = induced_table(&sys_a());
        let json = table_to_json(&odot);
        assert_eq!(parse_table(&json).unwrap(), odot);

        // drop one entry: rejected
        let mut file: TableFile = serde_json::from_str(&json).unwrap();
        file.entries.remove("0x7");
        let partial = serde_json::to_string(&file).unwrap();
        assert!(matches!(
            parse_table(&partial),
            Err(TableError::MissingEntry(m)) if m == "0x7"
        ));
    }

    #[test]
    fn table_k_accepts_formula_or_mask() {
        let odot = induced_table(&sys_a());
        let mut file: TableFile = serde_json::from_str(&table_to_json(&odot)).unwrap();
        file.k = "p & q".into();
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(parse_table(&json).unwrap(), odot);
    }
}
