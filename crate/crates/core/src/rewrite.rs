//! Generic reduction-system engine: rule application, normalization,
//! ambiguity (critical pair) enumeration, and resolvability checking.
//!
//! A rule rewrites a word of length >= 2 into a linear combination of
//! strictly smaller words of the same weight, smallness taken in the
//! admissible order of [`crate::freealg::Word`]. Because that order is
//! compatible with concatenation, every rewrite step strictly decreases a
//! multiset of words and normalization terminates regardless of strategy.
//! When every ambiguity resolves, the Diamond Lemma makes the normal form
//! unique and the irreducible words a basis of the quotient algebra.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::freealg::{Letter, NcPoly, Word};
use crate::scalar::Scalar;

/// Default ceiling on the weight accepted by [`ReductionSystem::enumerate_irreducible`].
pub const DEFAULT_ENUMERATION_BOUND: u32 = 24;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("rule {name}: {reason}")]
    InvalidRule { name: String, reason: String },
    #[error("duplicate left-hand side {lhs}")]
    DuplicateLhs { lhs: String },
    #[error("weight {requested} exceeds the enumeration bound {bound}")]
    WeightBound { requested: u32, bound: u32 },
    #[error("ambiguity references unknown rule {name}")]
    UnknownRule { name: String },
}

/// A single rewrite rule `lhs -> rhs`.
#[derive(Clone, Debug)]
pub struct ReductionRule<K> {
    name: String,
    lhs: Word,
    rhs: NcPoly<K>,
}

impl<K: Scalar> ReductionRule<K> {
    /// Validates the order and homogeneity invariants: `lhs` has length >= 2
    /// and every word of `rhs` is strictly smaller than `lhs` with the same
    /// weight.
    pub fn new(name: &str, lhs: Word, rhs: NcPoly<K>) -> Result<Self, RewriteError> {
        let fail = |reason: &str| RewriteError::InvalidRule {
            name: name.to_string(),
            reason: reason.to_string(),
        };
        if lhs.len() < 2 {
            return Err(fail("left-hand side must have length >= 2"));
        }
        for (w, _) in rhs.iter() {
            if w.weight() != lhs.weight() {
                return Err(fail(&format!(
                    "right-hand word {w} has weight {} but the left-hand side has weight {}",
                    w.weight(),
                    lhs.weight()
                )));
            }
            if *w >= lhs {
                return Err(fail(&format!(
                    "right-hand word {w} is not smaller than the left-hand side"
                )));
            }
        }
        Ok(ReductionRule {
            name: name.to_string(),
            lhs,
            rhs,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &NcPoly<K> {
        &self.rhs
    }
}

/// An ordered collection of rules with distinct left-hand sides.
#[derive(Clone, Debug)]
pub struct ReductionSystem<K> {
    name: String,
    rules: Vec<ReductionRule<K>>,
    alphabet: Vec<Letter>,
}

/// An element all of whose words are irreducible for the named system.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalElement<K> {
    pub system: String,
    pub value: NcPoly<K>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

impl fmt::Display for AmbiguityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbiguityKind::Overlap => write!(f, "overlap"),
            AmbiguityKind::Inclusion => write!(f, "inclusion"),
        }
    }
}

/// A critical pair: the minimal word on which two rule applications conflict,
/// together with its factorization.
///
/// For an overlap, `witness = left · middle · right` with
/// `left · middle` the left rule's lhs and `middle · right` the right rule's.
/// For an inclusion, `middle` is the inner rule's lhs and the outer rule's
/// lhs is the whole witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub rule_left: String,
    pub rule_right: String,
    pub witness: Word,
    pub left: Word,
    pub middle: Word,
    pub right: Word,
}

/// One recorded rewrite step: `rule` applied to `word` at letter `position`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep {
    pub rule: String,
    pub word: Word,
    pub position: usize,
}

/// Outcome of resolving one ambiguity: both one-step reducts normalized
/// fully, with the reduction traces as certificate.
#[derive(Clone, Debug)]
pub struct Resolution<K> {
    pub resolvable: bool,
    pub left_normal: CanonicalElement<K>,
    pub right_normal: CanonicalElement<K>,
    pub left_trace: Vec<TraceStep>,
    pub right_trace: Vec<TraceStep>,
}

impl<K: Scalar> ReductionSystem<K> {
    /// Builds a system, checking that no two rules share a left-hand side.
    /// The working alphabet is the set of letters appearing in the rules.
    pub fn new(name: &str, rules: Vec<ReductionRule<K>>) -> Result<Self, RewriteError> {
        let mut seen = BTreeSet::new();
        let mut alphabet = BTreeSet::new();
        for r in &rules {
            if !seen.insert(r.lhs.clone()) {
                return Err(RewriteError::DuplicateLhs {
                    lhs: r.lhs.to_string(),
                });
            }
            alphabet.extend(r.lhs.letters().iter().copied());
            for (w, _) in r.rhs.iter() {
                alphabet.extend(w.letters().iter().copied());
            }
        }
        // Largest letter first, so enumeration output follows the letter order.
        let alphabet = alphabet.into_iter().rev().collect();
        Ok(ReductionSystem {
            name: name.to_string(),
            rules,
            alphabet,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rules(&self) -> &[ReductionRule<K>] {
        &self.rules
    }

    pub fn rule(&self, name: &str) -> Option<&ReductionRule<K>> {
        self.rules.iter().find(|r| r.name == name)
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    /// True iff no rule's lhs occurs as a contiguous subword of `w`.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| !w.contains(&r.lhs))
    }

    /// The redex chosen by the fixed strategy: the earliest-listed applicable
    /// rule, at its leftmost occurrence.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for (idx, r) in self.rules.iter().enumerate() {
            if let Some(pos) = w.find(&r.lhs, 0) {
                return Some((idx, pos));
            }
        }
        None
    }

    /// Rewrites until no word is reducible. The strategy (largest word first,
    /// earliest-listed rule, leftmost occurrence) is fixed for reproducible
    /// traces; for a confluent system the result is strategy-independent.
    pub fn normalize(&self, x: &NcPoly<K>) -> CanonicalElement<K> {
        self.normalize_inner(x, None).0
    }

    /// As [`normalize`](Self::normalize), also returning the step count.
    pub fn normalize_counted(&self, x: &NcPoly<K>) -> (CanonicalElement<K>, u64) {
        let (c, steps, _) = self.normalize_inner(x, None);
        (c, steps)
    }

    /// As [`normalize`](Self::normalize), recording every step.
    pub fn normalize_traced(&self, x: &NcPoly<K>) -> (CanonicalElement<K>, Vec<TraceStep>) {
        let (c, _, trace) = self.normalize_inner(x, Some(Vec::new()));
        (c, trace.unwrap_or_default())
    }

    fn normalize_inner(
        &self,
        x: &NcPoly<K>,
        mut trace: Option<Vec<TraceStep>>,
    ) -> (CanonicalElement<K>, u64, Option<Vec<TraceStep>>) {
        let mut pending = x.clone();
        let mut result = NcPoly::zero();
        let mut steps: u64 = 0;
        // Largest word first: every replacement is strictly smaller, so the
        // pending multiset decreases and the loop terminates.
        while let Some((w, c)) = pending.leading_term() {
            let w = w.clone();
            let c = c.clone();
            match self.find_redex(&w) {
                None => {
                    pending.add_term(w.clone(), -c.clone());
                    result.add_term(w, c);
                }
                Some((idx, pos)) => {
                    steps += 1;
                    let rule = &self.rules[idx];
                    if let Some(t) = trace.as_mut() {
                        t.push(TraceStep {
                            rule: rule.name.clone(),
                            word: w.clone(),
                            position: pos,
                        });
                    }
                    pending.add_term(w.clone(), -c.clone());
                    let prefix = w.slice(0, pos);
                    let suffix = w.slice(pos + rule.lhs.len(), w.len());
                    for (rw, rc) in rule.rhs.iter() {
                        pending.add_term(
                            prefix.concat(rw).concat(&suffix),
                            c.clone() * rc.clone(),
                        );
                    }
                }
            }
        }
        (
            CanonicalElement {
                system: self.name.clone(),
                value: result,
            },
            steps,
            trace,
        )
    }

    /// Enumerates every overlap and inclusion ambiguity, in deterministic
    /// order (rule list order, then position).
    ///
    /// Overlaps: a proper suffix of one lhs equals a proper prefix of
    /// another, including self-overlaps. Inclusions: one lhs occurs inside a
    /// distinct, longer lhs.
    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let l1 = &r1.lhs;
                let l2 = &r2.lhs;
                for k in 1..l1.len().min(l2.len()) {
                    let suffix = l1.slice(l1.len() - k, l1.len());
                    let prefix = l2.slice(0, k);
                    if suffix == prefix {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            rule_left: r1.name.clone(),
                            rule_right: r2.name.clone(),
                            witness: l1.concat(&l2.slice(k, l2.len())),
                            left: l1.slice(0, l1.len() - k),
                            middle: suffix,
                            right: l2.slice(k, l2.len()),
                        });
                    }
                }
                if r1.name != r2.name && l2.len() < l1.len() {
                    let mut from = 0;
                    while let Some(pos) = l1.find(l2, from) {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            rule_left: r1.name.clone(),
                            rule_right: r2.name.clone(),
                            witness: l1.clone(),
                            left: l1.slice(0, pos),
                            middle: l2.clone(),
                            right: l1.slice(pos + l2.len(), l1.len()),
                        });
                        from = pos + 1;
                    }
                }
            }
        }
        out
    }

    /// Resolves one ambiguity: rewrites the witness once by each of the two
    /// conflicting rules, normalizes both reducts fully, and compares.
    pub fn check_resolvable(&self, amb: &Ambiguity) -> Result<Resolution<K>, RewriteError> {
        let rl = self
            .rule(&amb.rule_left)
            .ok_or_else(|| RewriteError::UnknownRule {
                name: amb.rule_left.clone(),
            })?;
        let rr = self
            .rule(&amb.rule_right)
            .ok_or_else(|| RewriteError::UnknownRule {
                name: amb.rule_right.clone(),
            })?;
        let (first_left, first_right) = match amb.kind {
            AmbiguityKind::Overlap => {
                // witness = (left · middle) · right = left · (middle · right)
                let a = rl.rhs.multiply(&NcPoly::from_word(amb.right.clone()));
                let b = NcPoly::from_word(amb.left.clone()).multiply(&rr.rhs);
                (a, b)
            }
            AmbiguityKind::Inclusion => {
                // Outer rule rewrites the whole witness; inner rewrites the middle.
                let a = rl.rhs.clone();
                let b = NcPoly::from_word(amb.left.clone())
                    .multiply(&rr.rhs)
                    .multiply(&NcPoly::from_word(amb.right.clone()));
                (a, b)
            }
        };
        let (left_normal, left_trace) = self.normalize_traced(&first_left);
        let (right_normal, right_trace) = self.normalize_traced(&first_right);
        Ok(Resolution {
            resolvable: left_normal.value == right_normal.value,
            left_normal,
            right_normal,
            left_trace,
            right_trace,
        })
    }

    /// All irreducible words of exactly the given weight over the system's
    /// alphabet, in print order.
    pub fn enumerate_irreducible(&self, weight: u32) -> Result<Vec<Word>, RewriteError> {
        self.enumerate_irreducible_bounded(weight, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_irreducible_bounded(
        &self,
        weight: u32,
        bound: u32,
    ) -> Result<Vec<Word>, RewriteError> {
        if weight > bound {
            return Err(RewriteError::WeightBound {
                requested: weight,
                bound,
            });
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate_rec(weight, &mut current, &mut out);
        out.sort_by(|a, b| a.print_cmp(b));
        Ok(out)
    }

    fn enumerate_rec(&self, remaining: u32, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            let w = Word::from_letters(current);
            if self.is_irreducible(&w) {
                out.push(w);
            }
            return;
        }
        for &l in &self.alphabet {
            if l.weight() <= remaining {
                current.push(l);
                self.enumerate_rec(remaining - l.weight(), current, out);
                current.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QRat;

    type Poly = NcPoly<QRat>;

    fn word(s: &str) -> Word {
        Word::from_letters(
            &s.chars()
                .map(|c| Letter::from_char(c).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    /// AB -> gamma + q BA, the three-generator reduction system.
    fn tiny_s() -> ReductionSystem<QRat> {
        let mut rhs = Poly::from_letter(Letter::Gamma);
        rhs.add_term(word("BA"), QRat::q_pow(1));
        let lambda = ReductionRule::new("lambda", word("AB"), rhs).unwrap();
        let sigma =
            ReductionRule::new("sigma", word("Ag"), Poly::from_word(word("gA"))).unwrap();
        let tau = ReductionRule::new("tau", word("Bg"), Poly::from_word(word("gB"))).unwrap();
        ReductionSystem::new("S", vec![lambda, sigma, tau]).unwrap()
    }

    #[test]
    fn rule_validation_rejects_bad_rules() {
        // Too short.
        assert!(ReductionRule::<QRat>::new("x", word("A"), Poly::zero()).is_err());
        // Weight mismatch: AB (weight 2) -> A (weight 1).
        assert!(
            ReductionRule::new("x", word("AB"), Poly::from_word(word("A"))).is_err()
        );
        // Not decreasing: BA -> AB.
        assert!(
            ReductionRule::new("x", word("BA"), Poly::from_word(word("AB"))).is_err()
        );
        // Duplicate lhs.
        let r1 = ReductionRule::new("x", word("AB"), Poly::from_word(word("BA"))).unwrap();
        let r2 = ReductionRule::new("y", word("AB"), Poly::zero()).unwrap();
        assert!(matches!(
            ReductionSystem::new("dup", vec![r1, r2]),
            Err(RewriteError::DuplicateLhs { .. })
        ));
    }

    #[test]
    fn normalize_reproduces_basic_reorderings() {
        let s = tiny_s();
        // AB -> g + q BA
        let nf = s.normalize(&Poly::from_word(word("AB")));
        let mut expect = Poly::from_letter(Letter::Gamma);
        expect.add_term(word("BA"), QRat::q_pow(1));
        assert_eq!(nf.value, expect);
        // AAB -> (1+q) gA + q^2 BAA
        let nf = s.normalize(&Poly::from_word(word("AAB")));
        let mut expect = Poly::zero();
        expect.add_term(word("gA"), &QRat::from_int(1) + &QRat::q_pow(1));
        expect.add_term(word("BAA"), QRat::q_pow(2));
        assert_eq!(nf.value, expect);
        assert!(expect.iter().all(|(w, _)| s.is_irreducible(w)));
    }

    #[test]
    fn normalize_is_idempotent_and_terminates() {
        let s = tiny_s();
        let x = Poly::from_word(word("AABgAB"));
        let (nf, steps) = s.normalize_counted(&x);
        assert!(steps > 0);
        let again = s.normalize(&nf.value);
        assert_eq!(nf.value, again.value);
    }

    #[test]
    fn ambiguity_enumeration_tiny_s() {
        let s = tiny_s();
        let ambs = s.find_ambiguities();
        assert_eq!(ambs.len(), 1);
        let a = &ambs[0];
        assert_eq!(a.kind, AmbiguityKind::Overlap);
        assert_eq!(a.rule_left, "lambda");
        assert_eq!(a.rule_right, "tau");
        assert_eq!(a.witness, word("ABg"));
        assert_eq!(
            (a.left.clone(), a.middle.clone(), a.right.clone()),
            (word("A"), word("B"), word("g"))
        );
        let res = s.check_resolvable(a).unwrap();
        assert!(res.resolvable);
        assert!(!res.left_trace.is_empty() && !res.right_trace.is_empty());
    }

    #[test]
    fn self_overlap_and_inclusion_are_enumerated() {
        // AA -> gamma gives a self-overlap on AAA.
        let r = ReductionRule::new("dbl", word("AA"), Poly::from_letter(Letter::Gamma)).unwrap();
        let sys = ReductionSystem::new("self", vec![r]).unwrap();
        let ambs = sys.find_ambiguities();
        assert_eq!(ambs.len(), 1);
        assert_eq!(ambs[0].witness, word("AAA"));
        assert_eq!(ambs[0].rule_left, "dbl");
        assert_eq!(ambs[0].rule_right, "dbl");
        // Resolvable: both sides give gamma * A resp. A * gamma — distinct
        // irreducible words, so this system is genuinely non-confluent.
        let res = sys.check_resolvable(&ambs[0]).unwrap();
        assert!(!res.resolvable);

        // Inclusion: BAB contains AB and BA.
        let big = ReductionRule::new(
            "big",
            word("BAB"),
            Poly::from_word(word("gB")),
        )
        .unwrap();
        let small = ReductionRule::new("small", word("AB"), Poly::from_letter(Letter::Gamma))
            .unwrap();
        let sys = ReductionSystem::new("incl", vec![big, small]).unwrap();
        let incl: Vec<_> = sys
            .find_ambiguities()
            .into_iter()
            .filter(|a| a.kind == AmbiguityKind::Inclusion)
            .collect();
        assert_eq!(incl.len(), 1);
        assert_eq!(incl[0].rule_left, "big");
        assert_eq!(incl[0].rule_right, "small");
        assert_eq!(incl[0].left, word("B"));
        assert_eq!(incl[0].right, Word::empty());
    }

    #[test]
    fn empty_system_has_no_ambiguities() {
        let sys = ReductionSystem::<QRat>::new("empty", vec![]).unwrap();
        assert!(sys.find_ambiguities().is_empty());
        assert!(sys.is_irreducible(&word("AABB")));
    }

    #[test]
    fn irreducibility_checks() {
        let s = tiny_s();
        assert!(s.is_irreducible(&word("gBBAA")));
        assert!(!s.is_irreducible(&word("AABg")));
        assert!(s.is_irreducible(&Word::empty()));
    }

    #[test]
    fn enumerate_irreducible_weights() {
        let s = tiny_s();
        // Weight 0: just the empty word.
        assert_eq!(s.enumerate_irreducible(0).unwrap(), vec![Word::empty()]);
        // Weight 2 over {A, B, g}: AA, BA, BB, g survive; AB is reducible.
        let w2 = s.enumerate_irreducible(2).unwrap();
        assert_eq!(w2, vec![word("g"), word("AA"), word("BA"), word("BB")]);
        // Bound enforcement.
        assert!(matches!(
            s.enumerate_irreducible(25),
            Err(RewriteError::WeightBound { .. })
        ));
        assert!(s.enumerate_irreducible_bounded(25, 30).is_ok());
    }
}
