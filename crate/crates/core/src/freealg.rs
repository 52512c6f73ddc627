//! The free unital associative algebra on the alphabet {A, B, C, γ}, with
//! the commutator Lie structure.
//!
//! Words are compact letter sequences; elements are finite linear
//! combinations of words with [`Scalar`] coefficients. The fixed admissible
//! order on words (weight, then length, then letter-wise with
//! A > B > C > γ) is the one every reduction system here decreases.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::scalar::Scalar;

/// A generator letter. `Gamma` is the central element `AB - qBA`, `C` the
/// commutator `AB - BA`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    A,
    B,
    C,
    Gamma,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::Gamma];

    /// Grading weight: A, B count 1; C, γ count 2. Every defining relation of
    /// both presentations is homogeneous for it.
    pub fn weight(self) -> u32 {
        match self {
            Letter::A | Letter::B => 1,
            Letter::C | Letter::Gamma => 2,
        }
    }

    /// Position in the letter order A > B > C > γ; higher rank is larger.
    fn rank(self) -> u8 {
        match self {
            Letter::A => 3,
            Letter::B => 2,
            Letter::C => 1,
            Letter::Gamma => 0,
        }
    }

    /// ASCII surface symbol; γ prints as `g`.
    pub fn symbol(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::Gamma => 'g',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'C' => Some(Letter::C),
            'g' | 'γ' => Some(Letter::Gamma),
            _ => None,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A word over the alphabet; the empty word is the algebra identity `I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(SmallVec<[Letter; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(SmallVec::from_slice(&[l]))
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    /// Builds `l1^e1 l2^e2 ...` from (letter, exponent) pairs.
    pub fn from_powers(powers: &[(Letter, u32)]) -> Self {
        let mut v = SmallVec::new();
        for &(l, e) in powers {
            for _ in 0..e {
                v.push(l);
            }
        }
        Word(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|l| l.weight()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[start..end]))
    }

    /// Leftmost occurrence of `pattern` as a contiguous subword, at or after
    /// `from`. The empty pattern never matches.
    pub fn find(&self, pattern: &Word, from: usize) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (from..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.find(pattern, 0).is_some()
    }

    /// Order used for human-facing listings: same weight/length keys as the
    /// admissible order, but larger words first within a block, so that e.g.
    /// `AA` precedes `AB` and `C` precedes `γ`.
    pub fn print_cmp(&self, other: &Word) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| lex_cmp(self, other).reverse())
    }

    /// Concatenated letter symbols, e.g. `gAA`; empty for the identity.
    pub fn letter_string(&self) -> String {
        self.0.iter().map(|l| l.symbol()).collect()
    }
}

fn lex_cmp(a: &Word, b: &Word) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// The admissible order: weight first, then length, then letter-wise with
    /// A > B > C > γ. Compatible with concatenation on both sides.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| lex_cmp(self, other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "I");
        }
        let mut first = true;
        for l in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Sign of an adjoint action, `+ad x` or `-ad x`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// An element of the free algebra: a finite map from words to nonzero
/// coefficients. Equality is equality of the maps.
#[derive(Clone, PartialEq, Debug)]
pub struct NcPoly<K> {
    terms: BTreeMap<Word, K>,
}

impl<K: Scalar> NcPoly<K> {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The identity element: the empty word with coefficient 1.
    pub fn one() -> Self {
        NcPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        NcPoly::from_term(w, K::one())
    }

    pub fn from_letter(l: Letter) -> Self {
        NcPoly::from_word(Word::single(l))
    }

    pub fn from_term(w: Word, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn from_scalar(c: K) -> Self {
        NcPoly::from_term(Word::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending admissible order.
    pub fn iter(&self) -> std::collections::btree_map::Iter<'_, Word, K> {
        self.terms.iter()
    }

    /// Terms in the print order (weight, length ascending; larger words first
    /// within a block).
    pub fn iter_print_order(&self) -> Vec<(&Word, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| a.print_cmp(b));
        v
    }

    pub fn coeff(&self, w: &Word) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    /// The largest term in the admissible order.
    pub fn leading_term(&self) -> Option<(&Word, &K)> {
        self.terms.last_key_value()
    }

    /// Adds `c * w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> NcPoly<L> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Bilinear extension of word concatenation.
    pub fn multiply(&self, other: &NcPoly<K>) -> NcPoly<K> {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// `[x, y] = xy - yx`.
    pub fn lie_bracket(&self, other: &NcPoly<K>) -> NcPoly<K> {
        &self.multiply(other) - &other.multiply(self)
    }

    /// Applies `(sign · ad self)` to `y`, `n` times; `n = 0` returns `y`.
    pub fn ad_power(&self, sign: Sign, n: u32, y: &NcPoly<K>) -> NcPoly<K> {
        let mut acc = y.clone();
        for _ in 0..n {
            acc = self.lie_bracket(&acc);
            if sign == Sign::Minus {
                acc = -&acc;
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> NcPoly<K> {
        let mut acc = NcPoly::one();
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Largest word weight in the support; 0 for the zero element.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    /// `Some(w)` when every word in the support has weight `w`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Word::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Splits into weight-homogeneous components, keyed by weight.
    pub fn split_weights(&self) -> BTreeMap<u32, NcPoly<K>> {
        let mut out: BTreeMap<u32, NcPoly<K>> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.weight())
                .or_insert_with(NcPoly::zero)
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// `Some(c)` when the element is the scalar `c` (including zero).
    pub fn as_scalar(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => {
                let (w, c) = self.terms.first_key_value().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Canonical pretty form, e.g. `(1+q)*g*A + q^2*B*A*A`.
    ///
    /// Coefficients print bare when they are plain positive monomials and
    /// parenthesized otherwise; a coefficient of 1 is omitted before a
    /// nonempty word. `unicode` swaps the `g` symbol for `γ`.
    pub fn pretty(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.iter_print_order().into_iter().enumerate() {
            let (neg, mag) = split_sign(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let cs = mag.to_string();
            let plain = plain_coefficient(&cs);
            if w.is_empty() {
                if plain {
                    out.push_str(&cs);
                } else {
                    out.push('(');
                    out.push_str(&cs);
                    out.push(')');
                }
            } else {
                if !mag.is_one() {
                    if plain {
                        out.push_str(&cs);
                    } else {
                        out.push('(');
                        out.push_str(&cs);
                        out.push(')');
                    }
                    out.push('*');
                }
                let ws = w.to_string();
                if unicode {
                    out.push_str(&ws.replace('g', "γ"));
                } else {
                    out.push_str(&ws);
                }
            }
        }
        out
    }
}

/// Splits a coefficient into (is-negated, magnitude) for printing: the sign
/// is pulled out exactly when the negated coefficient prints shorter, so
/// `-q` becomes `- q*...` while `1-q` stays inline.
fn split_sign<K: Scalar>(c: &K) -> (bool, K) {
    let neg = -c.clone();
    if neg.to_string().len() < c.to_string().len() {
        (true, neg)
    } else {
        (false, c.clone())
    }
}

/// True when a coefficient string needs no parentheses inside a product:
/// a single positive monomial like `1`, `q^2`, `3*q`, or `2/3`.
fn plain_coefficient(s: &str) -> bool {
    !s.starts_with('-') && !s[1..].contains(['+', '-']) && !s.contains('(')
}

impl<K: Scalar> Default for NcPoly<K> {
    fn default() -> Self {
        NcPoly::zero()
    }
}

impl<K: Scalar> Add for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn add(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn sub(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<K: Scalar> Neg for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn neg(self) -> NcPoly<K> {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<K: Scalar> Mul for &NcPoly<K> {
    type Output = NcPoly<K>;
    fn mul(self, rhs: &NcPoly<K>) -> NcPoly<K> {
        self.multiply(rhs)
    }
}

impl<K: Scalar> fmt::Display for NcPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QRat;

    fn a() -> NcPoly<QRat> {
        NcPoly::from_letter(Letter::A)
    }

    fn b() -> NcPoly<QRat> {
        NcPoly::from_letter(Letter::B)
    }

    #[test]
    fn word_order_is_admissible() {
        let ab = Word::from_letters(&[Letter::A, Letter::B]);
        let ba = Word::from_letters(&[Letter::B, Letter::A]);
        let g = Word::single(Letter::Gamma);
        let c = Word::single(Letter::C);
        // AB > BA (lex, A greatest), AB > γ (length), C > γ (lex).
        assert!(ab > ba);
        assert!(ab > g);
        assert!(c > g);
        // Weight dominates length: γ (weight 2) > A (weight 1).
        assert!(g > Word::single(Letter::A));
        // Concatenation compatibility on a sample.
        let x = Word::single(Letter::B);
        assert!(x.concat(&ba).concat(&x) < x.concat(&ab).concat(&x));
    }

    #[test]
    fn multiply_concatenates() {
        let ab = a().multiply(&b());
        assert_eq!(
            ab,
            NcPoly::from_word(Word::from_letters(&[Letter::A, Letter::B]))
        );
        // (A + B)(A - B) = AA - AB + BA - BB
        let sum = &a() + &b();
        let diff = &a() - &b();
        let prod = sum.multiply(&diff);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(
            prod.coeff(&Word::from_letters(&[Letter::A, Letter::B])),
            QRat::from_int(-1)
        );
        assert_eq!(
            prod.coeff(&Word::from_letters(&[Letter::B, Letter::A])),
            QRat::from_int(1)
        );
        // Identity law.
        let gba = NcPoly::<QRat>::from_word(Word::from_letters(&[
            Letter::Gamma,
            Letter::B,
            Letter::A,
        ]));
        assert_eq!(NcPoly::one().multiply(&gba), gba);
    }

    #[test]
    fn bracket_and_ad_power() {
        let c = a().lie_bracket(&b());
        assert_eq!(c.num_terms(), 2);
        // [X, X] = 0
        let x = &NcPoly::from_word(Word::from_letters(&[Letter::Gamma, Letter::B, Letter::A]))
            + &a().scale(&QRat::from_int(3));
        assert!(x.lie_bracket(&x).is_zero());
        // [A, AB - BA] = AAB - 2 ABA + BAA
        let inner = a().lie_bracket(&c);
        assert_eq!(
            inner.coeff(&Word::from_letters(&[Letter::A, Letter::A, Letter::B])),
            QRat::from_int(1)
        );
        assert_eq!(
            inner.coeff(&Word::from_letters(&[Letter::A, Letter::B, Letter::A])),
            QRat::from_int(-2)
        );
        assert_eq!(
            inner.coeff(&Word::from_letters(&[Letter::B, Letter::A, Letter::A])),
            QRat::from_int(1)
        );
        // Zero applications return the argument.
        let cl = NcPoly::<QRat>::from_letter(Letter::C);
        assert_eq!(a().ad_power(Sign::Minus, 0, &cl), cl);
        // One negated application.
        assert_eq!(a().ad_power(Sign::Minus, 1, &c), -&inner);
        // Two positive applications of ad B expand over length-4 words.
        let two = b().ad_power(Sign::Plus, 2, &c);
        assert_eq!(two, b().lie_bracket(&b().lie_bracket(&c)));
        assert!(two.iter().all(|(w, _)| w.len() == 4));
    }

    #[test]
    fn pretty_matches_canonical_form() {
        // (1+q)*g*A + q^2*B*A*A
        let mut p: NcPoly<QRat> = NcPoly::zero();
        p.add_term(
            Word::from_letters(&[Letter::Gamma, Letter::A]),
            QRat::from_poly(&crate::exactnum::QPoly::one() + &crate::exactnum::QPoly::q()),
        );
        p.add_term(
            Word::from_letters(&[Letter::B, Letter::A, Letter::A]),
            QRat::q_pow(2),
        );
        assert_eq!(p.pretty(false), "(1+q)*g*A + q^2*B*A*A");
        assert_eq!(p.pretty(true), "(1+q)*γ*A + q^2*B*A*A");
        assert_eq!(NcPoly::<QRat>::zero().pretty(false), "0");
        // Sign extraction on negative monomials.
        let m = &NcPoly::<QRat>::from_letter(Letter::Gamma)
            - &NcPoly::from_word(Word::from_letters(&[Letter::C, Letter::C]))
                .scale(&QRat::q_pow(1));
        assert_eq!(m.pretty(false), "g - q*C*C");
    }
}
