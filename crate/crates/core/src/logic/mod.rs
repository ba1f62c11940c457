//! Propositional syntax and finite possible-worlds semantics.
//!
//! A [`Signature`] fixes an ordered list of atoms. A world is a truth
//! assignment to all atoms, encoded as an index in `[0, 2^n)`: bit `n-1-i`
//! of the index holds the value of atom `i`, so the first declared atom is
//! the most significant bit. For `[p, q]`: index 3 = pq, 2 = p~q, 1 = ~pq,
//! 0 = ~p~q. A [`Proposition`] is a bit-set of worlds; logically closed
//! belief sets are represented extensionally by their model sets, so the
//! inconsistent belief set is the empty proposition and entailment is
//! subset inclusion.

mod formula;
mod parser;

pub use formula::Formula;
pub use parser::{parse_formula, ParseError};

use std::fmt;
use thiserror::Error;

/// Hard cap on signature size; the universe has `2^n` worlds.
pub const MAX_ATOMS: usize = 16;

/// Ordered list of distinct atom names; fixes the world universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    atoms: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("signature must declare at least one atom")]
    Empty,
    #[error("signature declares {0} atoms, the cap is {MAX_ATOMS}")]
    TooManyAtoms(usize),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
}

fn is_valid_atom_name(name: &str) -> bool {
    if name == "true" || name == "false" {
        return false;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Signature {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(
        atoms: I,
    ) -> Result<Self, SignatureError> {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(SignatureError::Empty);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(SignatureError::TooManyAtoms(atoms.len()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if !is_valid_atom_name(a) {
                return Err(SignatureError::InvalidAtomName(a.clone()));
            }
            if atoms[..i].contains(a) {
                return Err(SignatureError::DuplicateAtom(a.clone()));
            }
        }
        Ok(Signature { atoms })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Number of worlds, `2^n`.
    pub fn universe_size(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// The full universe `M_L` as a proposition.
    pub fn universe(&self) -> Proposition {
        Proposition::full(self.n_atoms())
    }

    /// Model set of a single atom.
    fn atom_models(&self, atom_index: usize) -> Proposition {
        let n = self.n_atoms();
        let mut p = Proposition::empty(n);
        for w in 0..self.universe_size() {
            if World(w as u16).satisfies(atom_index, n) {
                p.insert(World(w as u16));
            }
        }
        p
    }
}

/// A possible world: an index in `[0, 2^n)` encoding one truth assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct World(pub u16);

impl World {
    /// Truth value of atom `atom_index` at this world.
    pub fn satisfies(self, atom_index: usize, n_atoms: usize) -> bool {
        debug_assert!(atom_index < n_atoms);
        (self.0 >> (n_atoms - 1 - atom_index)) & 1 == 1
    }

    /// Bitstring in declared atom order, e.g. world 2 over `[p, q]` is `"10"`.
    pub fn bitstring(self, n_atoms: usize) -> String {
        (0..n_atoms)
            .map(|i| if self.satisfies(i, n_atoms) { '1' } else { '0' })
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaskError {
    #[error("empty bitmask")]
    Empty,
    #[error("invalid hex digit `{0}` in bitmask")]
    BadDigit(char),
    #[error("bitmask sets worlds outside the {0}-world universe")]
    OutOfRange(usize),
}

/// A set of possible worlds over a fixed universe of `2^n` worlds.
///
/// Doubles as the extensional representation of a belief set: the theory of
/// its worlds. Empty means inconsistent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Proposition {
    n_atoms: u8,
    words: Vec<u64>,
}

fn word_count(n_atoms: usize) -> usize {
    ((1usize << n_atoms) + 63) >> 6
}

impl Proposition {
    pub fn empty(n_atoms: usize) -> Self {
        assert!(n_atoms >= 1 && n_atoms <= MAX_ATOMS);
        Proposition {
            n_atoms: n_atoms as u8,
            words: vec![0; word_count(n_atoms)],
        }
    }

    pub fn full(n_atoms: usize) -> Self {
        let mut p = Proposition::empty(n_atoms);
        let size = p.universe_size();
        for (i, w) in p.words.iter_mut().enumerate() {
            let bits = size - i * 64;
            *w = if bits >= 64 { !0 } else { (1u64 << bits) - 1 };
        }
        p
    }

    pub fn singleton(n_atoms: usize, world: World) -> Self {
        let mut p = Proposition::empty(n_atoms);
        p.insert(world);
        p
    }

    pub fn from_worlds<I: IntoIterator<Item = World>>(n_atoms: usize, worlds: I) -> Self {
        let mut p = Proposition::empty(n_atoms);
        for w in worlds {
            p.insert(w);
        }
        p
    }

    /// Build from a bitmask; only valid for universes of at most 64 worlds.
    pub fn from_bitmask(n_atoms: usize, mask: u64) -> Self {
        assert!(n_atoms <= 6, "bitmask construction needs a <=64-world universe");
        let mut p = Proposition::empty(n_atoms);
        assert!(
            mask & !Proposition::full(n_atoms).words[0] == 0,
            "mask sets worlds outside the universe"
        );
        p.words[0] = mask;
        p
    }

    pub fn from_hex(n_atoms: usize, text: &str) -> Result<Self, MaskError> {
        let digits = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .unwrap_or(text);
        if digits.is_empty() {
            return Err(MaskError::Empty);
        }
        let mut p = Proposition::empty(n_atoms);
        let mut bit = 0usize;
        for c in digits.chars().rev() {
            let v = c.to_digit(16).ok_or(MaskError::BadDigit(c))? as u64;
            for i in 0..4 {
                if v >> i & 1 == 1 {
                    let idx = bit + i;
                    if idx >= p.universe_size() {
                        return Err(MaskError::OutOfRange(p.universe_size()));
                    }
                    p.insert(World(idx as u16));
                }
            }
            bit += 4;
        }
        Ok(p)
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms as usize
    }

    pub fn universe_size(&self) -> usize {
        1 << self.n_atoms
    }

    pub fn contains(&self, w: World) -> bool {
        let i = w.0 as usize;
        debug_assert!(i < self.universe_size());
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn insert(&mut self, w: World) {
        let i = w.0 as usize;
        assert!(i < self.universe_size());
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    pub fn remove(&mut self, w: World) {
        let i = w.0 as usize;
        assert!(i < self.universe_size());
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n_atoms, other.n_atoms, "mixed universes");
        Proposition {
            n_atoms: self.n_atoms,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Proposition::full(self.n_atoms()).difference(self)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Proposition::full(self.n_atoms())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.n_atoms, other.n_atoms, "mixed universes");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        assert_eq!(self.n_atoms, other.n_atoms, "mixed universes");
        self.words.iter().zip(&other.words).any(|(&a, &b)| a & b != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    /// Worlds in increasing index order.
    pub fn worlds(&self) -> impl Iterator<Item = World> + '_ {
        (0..self.universe_size() as u16)
            .map(World)
            .filter(move |&w| self.contains(w))
    }

    /// Bitmask for universes of at most 64 worlds.
    pub fn bitmask(&self) -> u64 {
        assert!(self.n_atoms <= 6, "bitmask needs a <=64-world universe");
        self.words[0]
    }

    /// Hex rendering of the world bitmask, e.g. `0xa` for worlds {1, 3}.
    pub fn hex_mask(&self) -> String {
        let mut top = self.words.len();
        while top > 1 && self.words[top - 1] == 0 {
            top -= 1;
        }
        let mut s = format!("0x{:x}", self.words[top - 1]);
        for w in self.words[..top - 1].iter().rev() {
            s.push_str(&format!("{:016x}", w));
        }
        s
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Proposition({})", self.hex_mask())
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex_mask())
    }
}

impl serde::Serialize for Proposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.hex_mask())
    }
}

/// Model set `||f||`: exactly the worlds satisfying `f`.
///
/// Panics if `f` mentions an atom the signature does not declare; parsing
/// against the same signature guarantees the precondition.
pub fn models(f: &Formula, sig: &Signature) -> Proposition {
    let atom_masks: Vec<Proposition> = (0..sig.n_atoms()).map(|i| sig.atom_models(i)).collect();
    eval(f, sig, &atom_masks)
}

fn eval(f: &Formula, sig: &Signature, atom_masks: &[Proposition]) -> Proposition {
    match f {
        Formula::Atom(name) => {
            let i = sig
                .index_of(name)
                .unwrap_or_else(|| panic!("atom `{name}` is not declared in the signature"));
            atom_masks[i].clone()
        }
        Formula::Top => Proposition::full(sig.n_atoms()),
        Formula::Bottom => Proposition::empty(sig.n_atoms()),
        Formula::Not(x) => eval(x, sig, atom_masks).complement(),
        Formula::And(a, b) => eval(a, sig, atom_masks).intersection(&eval(b, sig, atom_masks)),
        Formula::Or(a, b) => eval(a, sig, atom_masks).union(&eval(b, sig, atom_masks)),
        Formula::Imp(a, b) => eval(a, sig, atom_masks)
            .complement()
            .union(&eval(b, sig, atom_masks)),
        Formula::Iff(a, b) => {
            let pa = eval(a, sig, atom_masks);
            let pb = eval(b, sig, atom_masks);
            pa.intersection(&pb).union(&pa.complement().intersection(&pb.complement()))
        }
    }
}

/// `K |- f`, i.e. `||K|| ⊆ ||f||`. The inconsistent `K = ∅` entails everything.
pub fn theory_entails(k: &Proposition, f: &Formula, sig: &Signature) -> bool {
    k.is_subset(&models(f, sig))
}

/// Expansion `K + f`: intersect the model sets.
pub fn expand(k: &Proposition, f: &Formula, sig: &Signature) -> Proposition {
    k.intersection(&models(f, sig))
}

/// Full-DNF canonical formula of a proposition: the disjunction of complete
/// minterms in increasing world index; `⊥` for the empty set, `⊤` for the
/// full universe. Satisfies `models(canonical_formula(p)) == p`.
pub fn canonical_formula(p: &Proposition, sig: &Signature) -> Formula {
    assert_eq!(p.n_atoms(), sig.n_atoms(), "proposition/signature mismatch");
    if p.is_empty() {
        return Formula::Bottom;
    }
    if p.is_full() {
        return Formula::Top;
    }
    p.worlds()
        .map(|w| minterm(w, sig))
        .reduce(Formula::or)
        .expect("nonempty proposition")
}

fn minterm(w: World, sig: &Signature) -> Formula {
    let n = sig.n_atoms();
    sig.atoms()
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let atom = Formula::Atom(name.clone());
            if w.satisfies(i, n) {
                atom
            } else {
                Formula::not(atom)
            }
        })
        .reduce(Formula::and)
        .expect("nonempty signature")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig_pq() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn prop(mask: u64) -> Proposition {
        Proposition::from_bitmask(2, mask)
    }

    /// Independent oracle: evaluate a formula at a single world by recursion
    /// on the truth assignment, without any bit-set algebra.
    fn eval_at_world(f: &Formula, sig: &Signature, w: World) -> bool {
        match f {
            Formula::Atom(name) => w.satisfies(sig.index_of(name).unwrap(), sig.n_atoms()),
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Not(x) => !eval_at_world(x, sig, w),
            Formula::And(a, b) => eval_at_world(a, sig, w) && eval_at_world(b, sig, w),
            Formula::Or(a, b) => eval_at_world(a, sig, w) || eval_at_world(b, sig, w),
            Formula::Imp(a, b) => !eval_at_world(a, sig, w) || eval_at_world(b, sig, w),
            Formula::Iff(a, b) => eval_at_world(a, sig, w) == eval_at_world(b, sig, w),
        }
    }

    fn truth_table_models(f: &Formula, sig: &Signature) -> Proposition {
        Proposition::from_worlds(
            sig.n_atoms(),
            (0..sig.universe_size() as u16)
                .map(World)
                .filter(|&w| eval_at_world(f, sig, w)),
        )
    }

    #[test]
    fn signature_rejects_bad_input() {
        assert_eq!(Signature::new(Vec::<String>::new()), Err(SignatureError::Empty));
        assert_eq!(
            Signature::new(["p", "p"]),
            Err(SignatureError::DuplicateAtom("p".into()))
        );
        assert_eq!(
            Signature::new(["true"]),
            Err(SignatureError::InvalidAtomName("true".into()))
        );
        assert_eq!(
            Signature::new(["2p"]),
            Err(SignatureError::InvalidAtomName("2p".into()))
        );
        let many: Vec<String> = (0..17).map(|i| format!("a{i}")).collect();
        assert_eq!(Signature::new(many), Err(SignatureError::TooManyAtoms(17)));
    }

    #[test]
    fn world_bit_convention() {
        // sig [p, q]: bit 1 = p, bit 0 = q.
        let n = 2;
        assert!(World(3).satisfies(0, n) && World(3).satisfies(1, n));
        assert!(World(2).satisfies(0, n) && !World(2).satisfies(1, n));
        assert!(!World(1).satisfies(0, n) && World(1).satisfies(1, n));
        assert_eq!(World(2).bitstring(n), "10");
        assert_eq!(World(1).bitstring(n), "01");
    }

    #[test]
    fn models_tautology_is_universe() {
        let sig = sig_pq();
        assert_eq!(models(&Formula::Top, &sig), prop(0xf));
    }

    #[test]
    fn models_single_minterm() {
        let sig = sig_pq();
        let f = parse_formula("p & q", &sig).unwrap();
        assert_eq!(models(&f, &sig), prop(0x8));
    }

    #[test]
    fn models_negation_matches_truth_table() {
        let sig = sig_pq();
        let f = parse_formula("~p", &sig).unwrap();
        let expected = truth_table_models(&f, &sig);
        assert_eq!(expected, prop(0x3)); // worlds 0, 1
        assert_eq!(models(&f, &sig), expected);
    }

    #[test]
    fn entailment_examples() {
        let sig = sig_pq();
        let q = parse_formula("q", &sig).unwrap();
        let p = parse_formula("p", &sig).unwrap();
        assert!(theory_entails(&prop(0x8), &q, &sig));
        assert!(theory_entails(&prop(0x0), &Formula::Bottom, &sig));
        assert!(!theory_entails(&prop(0xa), &p, &sig));
    }

    #[test]
    fn expand_examples() {
        let sig = sig_pq();
        let q = parse_formula("q", &sig).unwrap();
        let not_p = parse_formula("~p", &sig).unwrap();
        let p_or_q = parse_formula("p | q", &sig).unwrap();
        assert_eq!(expand(&prop(0xc), &q, &sig), prop(0x8));
        assert_eq!(expand(&prop(0x8), &not_p, &sig), prop(0x0));
        assert_eq!(expand(&prop(0xf), &p_or_q, &sig), truth_table_models(&p_or_q, &sig));
        assert_eq!(expand(&prop(0xf), &p_or_q, &sig), prop(0xe));
    }

    #[test]
    fn expand_laws() {
        let sig = sig_pq();
        for mask in 0..16u64 {
            let k = prop(mask);
            for fmask in 0..16u64 {
                let f = canonical_formula(&prop(fmask), &sig);
                let e = expand(&k, &f, &sig);
                assert!(e.is_subset(&k));
                assert_eq!(e == k, theory_entails(&k, &f, &sig));
            }
            assert_eq!(expand(&k, &Formula::Top, &sig), k);
        }
    }

    #[test]
    fn canonical_formula_examples() {
        let sig = sig_pq();
        assert_eq!(canonical_formula(&prop(0x8), &sig).to_string(), "p&q");
        assert_eq!(canonical_formula(&prop(0x0), &sig).to_string(), "false");
        assert_eq!(canonical_formula(&prop(0xf), &sig).to_string(), "true");
        let f = canonical_formula(&prop(0xa), &sig);
        assert_eq!(f.to_string(), "(~p&q)|(p&q)");
        // logically equivalent to q
        assert_eq!(models(&f, &sig), models(&parse_formula("q", &sig).unwrap(), &sig));
    }

    #[test]
    fn canonical_round_trip_exhaustive_n2() {
        let sig = sig_pq();
        for mask in 0..16u64 {
            let p = prop(mask);
            assert_eq!(models(&canonical_formula(&p, &sig), &sig), p);
        }
    }

    #[test]
    fn proposition_set_algebra() {
        let a = prop(0b1010);
        let b = prop(0b0110);
        assert_eq!(a.union(&b), prop(0b1110));
        assert_eq!(a.intersection(&b), prop(0b0010));
        assert_eq!(a.difference(&b), prop(0b1000));
        assert_eq!(a.complement(), prop(0b0101));
        assert!(prop(0b0010).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(a.intersects(&b));
        assert!(!a.intersects(&prop(0b0101)));
        assert_eq!(a.len(), 2);
        assert_eq!(
            a.worlds().collect::<Vec<_>>(),
            vec![World(1), World(3)]
        );
    }

    #[test]
    fn hex_mask_round_trip() {
        let a = prop(0xa);
        assert_eq!(a.hex_mask(), "0xa");
        assert_eq!(Proposition::from_hex(2, "0xa").unwrap(), a);
        assert_eq!(Proposition::from_hex(2, "0XA").unwrap(), a);
        assert_eq!(Proposition::from_hex(2, "0x0").unwrap(), prop(0));
        assert!(matches!(
            Proposition::from_hex(2, "0x10"),
            Err(MaskError::OutOfRange(4))
        ));
        assert!(matches!(
            Proposition::from_hex(2, "0xzz"),
            Err(MaskError::BadDigit('z'))
        ));
        // large universe: 128 worlds
        let mut big = Proposition::empty(7);
        big.insert(World(100));
        let hex = big.hex_mask();
        assert_eq!(Proposition::from_hex(7, &hex).unwrap(), big);
    }

    #[test]
    fn models_agrees_with_world_evaluation_on_large_signature() {
        let sig = Signature::new(["a", "b", "c", "d", "e"]).unwrap();
        let f = parse_formula("(a -> b & c) <-> ~(d | ~e)", &sig).unwrap();
        assert_eq!(models(&f, &sig), truth_table_models(&f, &sig));
    }
}
