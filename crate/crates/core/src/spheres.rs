//! Rank-based systems of spheres and the revision operators they induce.
//!
//! A sphere system is realized as a total rank assignment on worlds: the
//! spheres are the cumulative level sets `S_v = {w : rank(w) <= v}` for each
//! occurring value `v`, which makes them nested by construction, with
//! `||K|| = rank^-1(0)` as the minimum. A two-level system additionally
//! allows worlds with no rank at all (implausible: outside every sphere)
//! and carries a cutoff: spheres at levels up to the cutoff form the inner
//! band, the rest form the outer band.

use crate::logic::{models, Formula, Proposition, Signature, SignatureError, World};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("empty center: no world has rank 0")]
    EmptyCenter,
    #[error("rank vector covers {got} worlds, the signature has {expected}")]
    WrongWorldCount { expected: usize, got: usize },
    #[error("sphere chain is not strictly nested")]
    NotNested,
    #[error("inner spheres do not form an initial segment of the chain")]
    InnerNotPrefix,
}

/// Which clause of the three-way revision case split fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReviseCase {
    /// The minimal intersecting sphere is inner: the input is accepted.
    Accepted,
    /// The minimal intersecting sphere is outer: the input is not accepted
    /// but its negation is withdrawn.
    ContractNegation,
    /// No sphere intersects the input: the belief set is unchanged.
    Unchanged,
}

impl fmt::Display for ReviseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReviseCase::Accepted => "accepted",
            ReviseCase::ContractNegation => "contract-negation",
            ReviseCase::Unchanged => "unchanged",
        })
    }
}

/// One sphere of a two-level system, flagged by band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sphere {
    pub worlds: Proposition,
    pub inner: bool,
}

fn level_sets(
    sig: &Signature,
    rank_of: impl Fn(usize) -> Option<u32>,
) -> Vec<(u32, Proposition)> {
    let mut by_rank: BTreeMap<u32, Vec<World>> = BTreeMap::new();
    for w in 0..sig.universe_size() {
        if let Some(r) = rank_of(w) {
            by_rank.entry(r).or_default().push(World(w as u16));
        }
    }
    let mut out = Vec::with_capacity(by_rank.len());
    let mut acc = Proposition::empty(sig.n_atoms());
    for (r, worlds) in by_rank {
        for w in worlds {
            acc.insert(w);
        }
        out.push((r, acc.clone()));
    }
    out
}

fn min_sphere_of(chain: &[(u32, Proposition)], alpha: &Proposition) -> Option<(u32, Proposition)> {
    chain
        .iter()
        .find(|(_, s)| s.intersects(alpha))
        .map(|(r, s)| (*r, s.clone()))
}

/// A full Grove system: every world has a rank, so the outermost sphere is
/// the whole universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereSystem {
    sig: Signature,
    ranks: Vec<u32>,
}

impl SphereSystem {
    /// `ranks[w]` is the rank of world `w`; rank 0 must occur (the center).
    pub fn new(sig: Signature, ranks: Vec<u32>) -> Result<Self, SystemError> {
        if ranks.len() != sig.universe_size() {
            return Err(SystemError::WrongWorldCount {
                expected: sig.universe_size(),
                got: ranks.len(),
            });
        }
        if !ranks.contains(&0) {
            return Err(SystemError::EmptyCenter);
        }
        Ok(SphereSystem { sig, ranks })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// `||K|| = rank^-1(0)`.
    pub fn center(&self) -> Proposition {
        Proposition::from_worlds(
            self.sig.n_atoms(),
            self.ranks
                .iter()
                .enumerate()
                .filter(|(_, &r)| r == 0)
                .map(|(w, _)| World(w as u16)),
        )
    }

    /// Strictly increasing sphere chain; first is the center, last is the
    /// universe.
    pub fn spheres(&self) -> Vec<Proposition> {
        level_sets(&self.sig, |w| Some(self.ranks[w]))
            .into_iter()
            .map(|(_, s)| s)
            .collect()
    }

    /// Smallest sphere intersecting `alpha`, if any (none only for `∅`).
    pub fn min_sphere_prop(&self, alpha: &Proposition) -> Option<Proposition> {
        min_sphere_of(&level_sets(&self.sig, |w| Some(self.ranks[w])), alpha).map(|(_, s)| s)
    }

    pub fn min_sphere(&self, alpha: &Formula) -> Option<Proposition> {
        self.min_sphere_prop(&models(alpha, &self.sig))
    }

    /// Sphere-based revision: the closest `alpha`-worlds, or the empty
    /// proposition (the inconsistent belief set) for inconsistent input.
    pub fn revise_prop(&self, alpha: &Proposition) -> Proposition {
        match self.min_sphere_prop(alpha) {
            Some(s) => s.intersection(alpha),
            None => Proposition::empty(self.sig.n_atoms()),
        }
    }

    pub fn revise(&self, alpha: &Formula) -> Proposition {
        self.revise_prop(&models(alpha, &self.sig))
    }

    /// Sphere-based contraction: keep the center and add the closest
    /// counter-worlds; contracting a tautology (or `⊥`, whose negation is
    /// entailed) leaves `K` unchanged.
    pub fn contract_prop(&self, alpha: &Proposition) -> Proposition {
        let neg = alpha.complement();
        match self.min_sphere_prop(&neg) {
            Some(s) => s.intersection(&neg).union(&self.center()),
            None => self.center(),
        }
    }

    pub fn contract(&self, alpha: &Formula) -> Proposition {
        self.contract_prop(&models(alpha, &self.sig))
    }

    /// View as a degenerate two-level system (every sphere inner).
    pub fn to_two_level(&self) -> TwoLevelSystem {
        let cutoff = *self.ranks.iter().max().expect("nonempty universe");
        TwoLevelSystem::new(
            self.sig.clone(),
            self.ranks.iter().map(|&r| Some(r)).collect(),
            cutoff,
        )
        .expect("a full system is a valid two-level system")
    }
}

/// A two-level system of spheres: rank per world (`None` = implausible,
/// outside every sphere) plus a cutoff separating the inner band from the
/// outer band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLevelSystem {
    sig: Signature,
    ranks: Vec<Option<u32>>,
    cutoff: u32,
}

impl TwoLevelSystem {
    pub fn new(
        sig: Signature,
        ranks: Vec<Option<u32>>,
        cutoff: u32,
    ) -> Result<Self, SystemError> {
        let t = TwoLevelSystem { sig, ranks, cutoff };
        t.validate()?;
        Ok(t)
    }

    /// Build without validating; pair with [`TwoLevelSystem::validate`].
    pub fn new_unchecked(sig: Signature, ranks: Vec<Option<u32>>, cutoff: u32) -> Self {
        TwoLevelSystem { sig, ranks, cutoff }
    }

    /// Check every structural invariant, reporting the first violated
    /// clause: world coverage, nonempty center, strict nesting of the
    /// chain, and the inner band being a downward-closed initial segment
    /// (which also yields the containment consequence: any sphere included
    /// in an inner sphere is itself inner).
    pub fn validate(&self) -> Result<(), SystemError> {
        if self.ranks.len() != self.sig.universe_size() {
            return Err(SystemError::WrongWorldCount {
                expected: self.sig.universe_size(),
                got: self.ranks.len(),
            });
        }
        if !self.ranks.contains(&Some(0)) {
            return Err(SystemError::EmptyCenter);
        }
        let spheres = self.spheres();
        for pair in spheres.windows(2) {
            if !(pair[0].worlds.is_subset(&pair[1].worlds) && pair[0].worlds != pair[1].worlds) {
                return Err(SystemError::NotNested);
            }
        }
        if spheres[0].worlds != self.center() || !spheres[0].inner {
            return Err(SystemError::InnerNotPrefix);
        }
        let mut seen_outer = false;
        for s in &spheres {
            if seen_outer && s.inner {
                return Err(SystemError::InnerNotPrefix);
            }
            seen_outer |= !s.inner;
        }
        Ok(())
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn ranks(&self) -> &[Option<u32>] {
        &self.ranks
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// `||K|| = rank^-1(0)`.
    pub fn center(&self) -> Proposition {
        Proposition::from_worlds(
            self.sig.n_atoms(),
            self.ranks
                .iter()
                .enumerate()
                .filter(|(_, &r)| r == Some(0))
                .map(|(w, _)| World(w as u16)),
        )
    }

    /// Worlds outside every sphere.
    pub fn implausible(&self) -> Proposition {
        Proposition::from_worlds(
            self.sig.n_atoms(),
            self.ranks
                .iter()
                .enumerate()
                .filter(|(_, r)| r.is_none())
                .map(|(w, _)| World(w as u16)),
        )
    }

    /// Strictly increasing chain of spheres, each flagged inner or outer.
    pub fn spheres(&self) -> Vec<Sphere> {
        level_sets(&self.sig, |w| self.ranks[w])
            .into_iter()
            .map(|(r, worlds)| Sphere {
                worlds,
                inner: r <= self.cutoff,
            })
            .collect()
    }

    /// Smallest sphere intersecting `alpha`, with its band flag.
    pub fn min_sphere_prop(&self, alpha: &Proposition) -> Option<Sphere> {
        min_sphere_of(&level_sets(&self.sig, |w| self.ranks[w]), alpha).map(|(r, worlds)| Sphere {
            worlds,
            inner: r <= self.cutoff,
        })
    }

    pub fn min_sphere(&self, alpha: &Formula) -> Option<Sphere> {
        self.min_sphere_prop(&models(alpha, &self.sig))
    }

    /// Two-level credibility-limited revision with the case that fired:
    /// inner minimal sphere accepts `alpha`; outer keeps the center and
    /// withdraws `~alpha`; no intersecting sphere leaves `K` unchanged
    /// (inconsistent input always lands in the last case).
    pub fn revise_cased_prop(&self, alpha: &Proposition) -> (Proposition, ReviseCase) {
        match self.min_sphere_prop(alpha) {
            Some(Sphere { worlds, inner: true }) => {
                (worlds.intersection(alpha), ReviseCase::Accepted)
            }
            Some(Sphere {
                worlds,
                inner: false,
            }) => (
                self.center().union(&worlds.intersection(alpha)),
                ReviseCase::ContractNegation,
            ),
            None => (self.center(), ReviseCase::Unchanged),
        }
    }

    pub fn revise_prop(&self, alpha: &Proposition) -> Proposition {
        self.revise_cased_prop(alpha).0
    }

    pub fn revise_cased(&self, alpha: &Formula) -> (Proposition, ReviseCase) {
        self.revise_cased_prop(&models(alpha, &self.sig))
    }

    pub fn revise(&self, alpha: &Formula) -> Proposition {
        self.revise_cased(alpha).0
    }

    /// Extend to a full system: implausible worlds get one rank past the
    /// outermost sphere. The band structure is forgotten.
    pub fn completed(&self) -> SphereSystem {
        let max = self.ranks.iter().flatten().max().copied().unwrap_or(0);
        let ranks = self
            .ranks
            .iter()
            .map(|r| r.unwrap_or(max + 1))
            .collect();
        SphereSystem::new(self.sig.clone(), ranks).expect("center preserved")
    }
}

// ---------------------------------------------------------------------------
// JSON system files
// ---------------------------------------------------------------------------

/// On-disk system description. Rank keys are world bitstrings in declared
/// atom order (`'1'` = true); `null` or an omitted key marks the world
/// implausible. `cutoff` omitted means a full one-level Grove system, in
/// which implausible worlds are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub atoms: Vec<String>,
    pub ranks: BTreeMap<String, Option<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
}

#[derive(Debug, Error)]
pub enum SystemFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("bad world key `{0}`: expected a {1}-character bitstring over 0/1")]
    BadWorldKey(String, usize),
    #[error("full system (no cutoff) requires a rank for world `{0}`")]
    MissingRankInFullSystem(String),
    #[error(transparent)]
    System(#[from] SystemError),
}

/// Either kind of system a file can describe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemKind {
    Full(SphereSystem),
    TwoLevel(TwoLevelSystem),
}

impl SystemKind {
    pub fn signature(&self) -> &Signature {
        match self {
            SystemKind::Full(s) => s.signature(),
            SystemKind::TwoLevel(t) => t.signature(),
        }
    }

    pub fn center(&self) -> Proposition {
        match self {
            SystemKind::Full(s) => s.center(),
            SystemKind::TwoLevel(t) => t.center(),
        }
    }

    /// The two-level view: full systems become degenerate (all-inner)
    /// two-level systems.
    pub fn as_two_level(&self) -> TwoLevelSystem {
        match self {
            SystemKind::Full(s) => s.to_two_level(),
            SystemKind::TwoLevel(t) => t.clone(),
        }
    }
}

fn world_of_key(key: &str, n_atoms: usize) -> Option<World> {
    if key.len() != n_atoms {
        return None;
    }
    let mut idx: u16 = 0;
    for (i, c) in key.chars().enumerate() {
        match c {
            '1' => idx |= 1 << (n_atoms - 1 - i),
            '0' => {}
            _ => return None,
        }
    }
    Some(World(idx))
}

pub fn parse_system(json: &str) -> Result<SystemKind, SystemFileError> {
    let file: SystemFile = serde_json::from_str(json)?;
    let sig = Signature::new(file.atoms.clone())?;
    let n = sig.n_atoms();
    let mut ranks: Vec<Option<u32>> = vec![None; sig.universe_size()];
    for (key, rank) in &file.ranks {
        let w = world_of_key(key, n)
            .ok_or_else(|| SystemFileError::BadWorldKey(key.clone(), n))?;
        ranks[w.0 as usize] = *rank;
    }
    match file.cutoff {
        Some(cutoff) => Ok(SystemKind::TwoLevel(TwoLevelSystem::new(
            sig, ranks, cutoff,
        )?)),
        None => {
            let total: Vec<u32> = ranks
                .iter()
                .enumerate()
                .map(|(w, r)| {
                    r.ok_or_else(|| {
                        SystemFileError::MissingRankInFullSystem(World(w as u16).bitstring(n))
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(SystemKind::Full(SphereSystem::new(sig, total)?))
        }
    }
}

/// Canonical JSON encoding; every world appears explicitly (implausible as
/// `null`) so encodings are total and duplicate-detectable.
pub fn system_to_json(t: &TwoLevelSystem) -> String {
    let n = t.signature().n_atoms();
    let file = SystemFile {
        atoms: t.signature().atoms().to_vec(),
        ranks: t
            .ranks()
            .iter()
            .enumerate()
            .map(|(w, r)| (World(w as u16).bitstring(n), *r))
            .collect(),
        cutoff: Some(t.cutoff()),
    };
    serde_json::to_string(&file).expect("system files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    pub(crate) fn sig_pq() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn prop(mask: u64) -> Proposition {
        Proposition::from_bitmask(2, mask)
    }

    /// rank {3:0, 2:1, 1:2, 0:implausible}, cutoff 1
    pub(crate) fn sys_a() -> TwoLevelSystem {
        TwoLevelSystem::new(sig_pq(), vec![None, Some(2), Some(1), Some(0)], 1).unwrap()
    }

    /// rank {3:0, 2:1, 1:2, 0:3}, full Grove system
    pub(crate) fn sys_b() -> SphereSystem {
        SphereSystem::new(sig_pq(), vec![3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn spheres_of_sys_a() {
        let spheres = sys_a().spheres();
        assert_eq!(
            spheres,
            vec![
                Sphere { worlds: prop(0x8), inner: true },
                Sphere { worlds: prop(0xc), inner: true },
                Sphere { worlds: prop(0xe), inner: false },
            ]
        );
    }

    #[test]
    fn spheres_of_sys_b() {
        assert_eq!(
            sys_b().spheres(),
            vec![prop(0x8), prop(0xc), prop(0xe), prop(0xf)]
        );
    }

    #[test]
    fn constant_rank_gives_single_sphere() {
        let s = SphereSystem::new(sig_pq(), vec![0, 0, 0, 0]).unwrap();
        assert_eq!(s.spheres(), vec![prop(0xf)]);
        assert_eq!(s.center(), prop(0xf));
    }

    #[test]
    fn rank_gaps_are_inert() {
        // non-contiguous ranks produce the same level-set chain
        let gappy = TwoLevelSystem::new(sig_pq(), vec![None, Some(9), Some(4), Some(0)], 4).unwrap();
        let canon = sys_a();
        let gs: Vec<_> = gappy.spheres();
        let cs: Vec<_> = canon.spheres();
        assert_eq!(gs, cs);
    }

    #[test]
    fn validate_reports_empty_center() {
        let t = TwoLevelSystem::new_unchecked(sig_pq(), vec![None, Some(2), Some(1), None], 1);
        assert_eq!(t.validate(), Err(SystemError::EmptyCenter));
    }

    #[test]
    fn cutoff_zero_keeps_only_center_inner() {
        let t = TwoLevelSystem::new(sig_pq(), vec![None, Some(2), Some(1), Some(0)], 0).unwrap();
        let spheres = t.spheres();
        assert!(spheres[0].inner);
        assert!(!spheres[1].inner && !spheres[2].inner);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn min_sphere_examples() {
        let t = sys_a();
        let sig = sig_pq();
        let not_q = parse_formula("~q", &sig).unwrap();
        assert_eq!(t.min_sphere(&not_q).unwrap().worlds, prop(0xc));
        let neither = parse_formula("~p & ~q", &sig).unwrap();
        assert!(t.min_sphere(&neither).is_none());
        assert_eq!(t.min_sphere(&Formula::Top).unwrap().worlds, prop(0x8));
        assert!(t.min_sphere(&Formula::Bottom).is_none());
    }

    #[test]
    fn grove_revision_examples() {
        let g = sys_b();
        let sig = sig_pq();
        let not_p = parse_formula("~p", &sig).unwrap();
        assert_eq!(g.revise(&not_p), prop(0x2));
        assert_eq!(g.revise(&Formula::Bottom), prop(0x0));
        assert_eq!(g.revise(&Formula::Top), prop(0x8));
    }

    #[test]
    fn grove_contraction_examples() {
        let g = sys_b();
        let sig = sig_pq();
        let p = parse_formula("p", &sig).unwrap();
        assert_eq!(g.contract(&p), prop(0xa));
        assert_eq!(g.contract(&Formula::Top), prop(0x8));
        // contracting a contradiction changes nothing
        assert_eq!(g.contract(&Formula::Bottom), prop(0x8));
    }

    #[test]
    fn contraction_always_keeps_the_center() {
        let g = sys_b();
        for mask in 0..16u64 {
            assert!(g.center().is_subset(&g.contract_prop(&prop(mask))));
        }
    }

    #[test]
    fn two_level_revision_examples() {
        let t = sys_a();
        let sig = sig_pq();
        let cases = [
            ("~q", 0x4, ReviseCase::Accepted),
            ("~p", 0xa, ReviseCase::ContractNegation),
            ("~p & ~q", 0x8, ReviseCase::Unchanged),
            ("q", 0x8, ReviseCase::Accepted),
        ];
        for (text, mask, case) in cases {
            let f = parse_formula(text, &sig).unwrap();
            assert_eq!(t.revise_cased(&f), (prop(mask), case), "revising by {text}");
        }
    }

    #[test]
    fn case_laws_hold_per_call() {
        let t = sys_a();
        for mask in 0..16u64 {
            let alpha = prop(mask);
            let (result, case) = t.revise_cased_prop(&alpha);
            match case {
                ReviseCase::Accepted => assert!(result.is_subset(&alpha)),
                ReviseCase::ContractNegation => assert!(t.center().is_subset(&result)),
                ReviseCase::Unchanged => assert_eq!(result, t.center()),
            }
        }
    }

    #[test]
    fn grove_vacuity_exhaustive_n2() {
        // revision by anything consistent with K equals expansion
        let g = sys_b();
        let k = g.center();
        for mask in 0..16u64 {
            let alpha = prop(mask);
            if k.intersects(&alpha) {
                assert_eq!(g.revise_prop(&alpha), k.intersection(&alpha));
            }
        }
    }

    #[test]
    fn degenerate_two_level_coincides_with_grove() {
        let g = sys_b();
        let t = g.to_two_level();
        for mask in 0..16u64 {
            let alpha = prop(mask);
            if !alpha.is_empty() {
                assert_eq!(t.revise_prop(&alpha), g.revise_prop(&alpha));
            }
        }
    }

    #[test]
    fn harper_bridge_for_outer_case() {
        // case-2 revision equals contraction by the negation over the
        // completed system
        let t = sys_a();
        let completed = t.completed();
        for mask in 0..16u64 {
            let alpha = prop(mask);
            let (result, case) = t.revise_cased_prop(&alpha);
            if case == ReviseCase::ContractNegation {
                assert_eq!(result, completed.contract_prop(&alpha.complement()));
            }
        }
    }

    #[test]
    fn parse_system_two_level() {
        let json = r#"{"atoms":["p","q"], "ranks":{"11":0,"10":1,"01":2,"00":null}, "cutoff":1}"#;
        match parse_system(json).unwrap() {
            SystemKind::TwoLevel(t) => assert_eq!(t, sys_a()),
            other => panic!("expected a two-level system, got {other:?}"),
        }
    }

    #[test]
    fn parse_system_omitted_key_is_implausible() {
        let json = r#"{"atoms":["p","q"], "ranks":{"11":0,"10":1,"01":2}, "cutoff":1}"#;
        match parse_system(json).unwrap() {
            SystemKind::TwoLevel(t) => assert_eq!(t, sys_a()),
            other => panic!("expected a two-level system, got {other:?}"),
        }
    }

    #[test]
    fn parse_system_full() {
        let json = r#"{"atoms":["p","q"], "ranks":{"11":0,"10":1,"01":2,"00":3}}"#;
        match parse_system(json).unwrap() {
            SystemKind::Full(s) => assert_eq!(s, sys_b()),
            other => panic!("expected a full system, got {other:?}"),
        }
    }

    #[test]
    fn parse_system_rejects_null_in_full_system() {
        let json = r#"{"atoms":["p","q"], "ranks":{"11":0,"10":1,"01":2,"00":null}}"#;
        assert!(matches!(
            parse_system(json),
            Err(SystemFileError::MissingRankInFullSystem(w)) if w == "00"
        ));
    }

    #[test]
    fn parse_system_rejects_bad_keys_and_fields() {
        let bad_key = r#"{"atoms":["p","q"], "ranks":{"2":0}, "cutoff":0}"#;
        assert!(matches!(
            parse_system(bad_key),
            Err(SystemFileError::BadWorldKey(k, 2)) if k == "2"
        ));
        let unknown = r#"{"atoms":["p"], "ranks":{"1":0}, "cutof":0}"#;
        assert!(matches!(parse_system(unknown), Err(SystemFileError::Json(_))));
        let no_center = r#"{"atoms":["p","q"], "ranks":{"11":1,"10":1,"01":2,"00":3}, "cutoff":1}"#;
        assert!(matches!(
            parse_system(no_center),
            Err(SystemFileError::System(SystemError::EmptyCenter))
        ));
    }

    #[test]
    fn system_json_round_trip() {
        let t = sys_a();
        let json = system_to_json(&t);
        match parse_system(&json).unwrap() {
            SystemKind::TwoLevel(back) => assert_eq!(back, t),
            other => panic!("expected a two-level system, got {other:?}"),
        }
    }
}
