//! Lie polynomials in A and B: the basis of the Lie subalgebra L, an exact
//! membership decision procedure, and an independent bracket-closure oracle.
//!
//! L is the smallest Lie subalgebra of R(q) containing A and B. Its basis
//! consists of A, B, C, the words `γ^h C^n A^m` and `γ^h B^m C^n`
//! (h >= 0, m, n >= 1), and the combinations
//! `β(h, n) = {n+1}_q γ^h C^(n+1) - {n}_q γ^(h+1) C^n`.
//! All of these are weight-homogeneous, so membership splits into finite
//! exact linear problems, one per weight.

pub mod catalog;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::exactnum::{qnum, QRat};
use crate::freealg::{Letter, NcPoly, Word};
use crate::linalg::{self, Matrix};
use crate::rewrite::CanonicalElement;
use crate::rqalg::{presentation, Presentation};

/// Largest weight accepted by [`lie_span_bruteforce`].
pub const SPAN_BOUND: u32 = 10;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("weight {requested} exceeds the bound {bound} for the bracket closure")]
    BoundExceeded { requested: u32, bound: u32 },
}

/// One element of the Lie basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LieBasisVector {
    A,
    B,
    C,
    /// `γ^h C^n A^m`, `n, m >= 1`.
    CaType { h: u32, n: u32, m: u32 },
    /// `γ^h B^m C^n`, `m, n >= 1`.
    BcType { h: u32, m: u32, n: u32 },
    /// `{n+1}_q γ^h C^(n+1) - {n}_q γ^(h+1) C^n`, `n >= 1`.
    Beta { h: u32, n: u32 },
}

impl LieBasisVector {
    pub fn ca_type(h: u32, n: u32, m: u32) -> Self {
        assert!(n >= 1 && m >= 1, "CA-type vectors need n, m >= 1");
        LieBasisVector::CaType { h, n, m }
    }

    pub fn bc_type(h: u32, m: u32, n: u32) -> Self {
        assert!(m >= 1 && n >= 1, "BC-type vectors need m, n >= 1");
        LieBasisVector::BcType { h, m, n }
    }

    pub fn beta(h: u32, n: u32) -> Self {
        assert!(n >= 1, "β vectors need n >= 1");
        LieBasisVector::Beta { h, n }
    }

    pub fn weight(&self) -> u32 {
        match *self {
            LieBasisVector::A | LieBasisVector::B => 1,
            LieBasisVector::C => 2,
            LieBasisVector::CaType { h, n, m } => 2 * h + 2 * n + m,
            LieBasisVector::BcType { h, m, n } => 2 * h + m + 2 * n,
            LieBasisVector::Beta { h, n } => 2 * h + 2 * n + 2,
        }
    }

    /// The R-normal form of the vector: CA-type words are already
    /// irreducible, BC-type words pick up `q^(-mn)` when the C block moves
    /// left past the B block, and β is a two-word combination of
    /// irreducible words.
    pub fn normal_form(&self) -> CanonicalElement<QRat> {
        let value = match *self {
            LieBasisVector::A => NcPoly::from_letter(Letter::A),
            LieBasisVector::B => NcPoly::from_letter(Letter::B),
            LieBasisVector::C => NcPoly::from_letter(Letter::C),
            LieBasisVector::CaType { h, n, m } => NcPoly::from_word(Word::from_powers(&[
                (Letter::Gamma, h),
                (Letter::C, n),
                (Letter::A, m),
            ])),
            LieBasisVector::BcType { h, m, n } => NcPoly::from_term(
                Word::from_powers(&[(Letter::Gamma, h), (Letter::C, n), (Letter::B, m)]),
                QRat::q_pow(-(m as i64 * n as i64)),
            ),
            LieBasisVector::Beta { h, n } => {
                let mut p = NcPoly::from_term(
                    Word::from_powers(&[(Letter::Gamma, h), (Letter::C, n + 1)]),
                    qnum(n as i64 + 1),
                );
                p.add_term(
                    Word::from_powers(&[(Letter::Gamma, h + 1), (Letter::C, n)]),
                    -&qnum(n as i64),
                );
                p
            }
        };
        CanonicalElement {
            system: "R".to_string(),
            value,
        }
    }

    /// All basis vectors of the given weight, in a fixed order.
    pub fn of_weight(weight: u32) -> Vec<LieBasisVector> {
        let mut out = Vec::new();
        match weight {
            0 => return out,
            1 => return vec![LieBasisVector::A, LieBasisVector::B],
            2 => return vec![LieBasisVector::C],
            _ => {}
        }
        for h in 0..=(weight - 3) / 2 {
            for n in 1..=(weight - 2 * h - 1) / 2 {
                let m = weight - 2 * h - 2 * n;
                debug_assert!(m >= 1);
                out.push(LieBasisVector::ca_type(h, n, m));
                out.push(LieBasisVector::bc_type(h, m, n));
            }
        }
        if weight % 2 == 0 && weight >= 4 {
            for h in 0..=(weight - 4) / 2 {
                let n = (weight - 2 * h - 2) / 2;
                out.push(LieBasisVector::beta(h, n));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for LieBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn pows(f: &mut fmt::Formatter<'_>, parts: &[(char, u32)]) -> fmt::Result {
            let mut first = true;
            for &(sym, e) in parts {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{sym}^{e}")?;
                }
            }
            Ok(())
        }
        match *self {
            LieBasisVector::A => write!(f, "A"),
            LieBasisVector::B => write!(f, "B"),
            LieBasisVector::C => write!(f, "C"),
            LieBasisVector::CaType { h, n, m } => {
                pows(f, &[('g', h), ('C', n), ('A', m)])
            }
            LieBasisVector::BcType { h, m, n } => {
                pows(f, &[('g', h), ('B', m), ('C', n)])
            }
            LieBasisVector::Beta { h, n } => write!(f, "beta({h},{n})"),
        }
    }
}

/// Outcome of the membership decision.
#[derive(Clone, Debug)]
pub enum MembershipVerdict {
    /// The element lies in L; the decomposition re-expands exactly to its
    /// R-normal form.
    Member {
        decomposition: BTreeMap<LieBasisVector, QRat>,
    },
    /// The element is not in L; the residual is a nonzero canonical element
    /// outside the span of the basis.
    NotMember { residual: CanonicalElement<QRat> },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member { .. })
    }

    pub fn decomposition(&self) -> Option<&BTreeMap<LieBasisVector, QRat>> {
        match self {
            MembershipVerdict::Member { decomposition } => Some(decomposition),
            MembershipVerdict::NotMember { .. } => None,
        }
    }

    pub fn residual(&self) -> Option<&CanonicalElement<QRat>> {
        match self {
            MembershipVerdict::Member { .. } => None,
            MembershipVerdict::NotMember { residual } => Some(residual),
        }
    }
}

/// Decides membership in the Lie subalgebra generated by A and B.
///
/// The input is R-normalized and split by weight; within each weight the
/// normal form is solved exactly over the normal forms of the basis vectors
/// of that weight.
pub fn is_lie_polynomial(x: &NcPoly<QRat>) -> MembershipVerdict {
    let r = presentation(Presentation::R);
    let nf = r.normalize(x);
    let mut decomposition = BTreeMap::new();
    let mut residual = NcPoly::zero();
    for (weight, slice) in nf.value.split_weights() {
        let basis = LieBasisVector::of_weight(weight);
        let columns: Vec<NcPoly<QRat>> =
            basis.iter().map(|v| v.normal_form().value).collect();
        // Row space: every word seen in the slice or in a basis column.
        let mut words: BTreeSet<Word> = slice.iter().map(|(w, _)| w.clone()).collect();
        for col in &columns {
            words.extend(col.iter().map(|(w, _)| w.clone()));
        }
        let words: Vec<Word> = words.into_iter().collect();
        let mut m = Matrix::zeros(words.len(), columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, w) in words.iter().enumerate() {
                m[(i, j)] = col.coeff(w);
            }
        }
        let b: Vec<QRat> = words.iter().map(|w| slice.coeff(w)).collect();
        let outcome = linalg::solve(&m, &b);
        if outcome.solvable {
            for (v, c) in basis.iter().zip(outcome.solution) {
                if !c.is_zero() {
                    decomposition.insert(*v, c);
                }
            }
        } else {
            for (i, w) in words.iter().enumerate() {
                residual.add_term(w.clone(), outcome.residual[i].clone());
            }
        }
    }
    if residual.is_zero() {
        MembershipVerdict::Member { decomposition }
    } else {
        MembershipVerdict::NotMember {
            residual: CanonicalElement {
                system: "R".to_string(),
                value: residual,
            },
        }
    }
}

/// Brute-force oracle: closes {A, B} under the Lie bracket up to the given
/// weight, keeping a row-reduced exact basis of the span, and returns that
/// basis (weight-homogeneous, monic leading coefficients, ascending order).
pub fn lie_span_bruteforce(
    max_weight: u32,
) -> Result<Vec<CanonicalElement<QRat>>, LieError> {
    if max_weight > SPAN_BOUND {
        return Err(LieError::BoundExceeded {
            requested: max_weight,
            bound: SPAN_BOUND,
        });
    }
    let r = presentation(Presentation::R);
    let mut elems: Vec<NcPoly<QRat>> = Vec::new();
    let mut leaders: BTreeMap<Word, usize> = BTreeMap::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();

    let reduce = |elems: &[NcPoly<QRat>],
                  leaders: &BTreeMap<Word, usize>,
                  mut p: NcPoly<QRat>| {
        loop {
            let hit = p
                .iter()
                .rev()
                .find_map(|(w, c)| leaders.get(w).map(|&i| (i, c.clone())));
            match hit {
                Some((i, c)) => p = &p - &elems[i].scale(&c),
                None => return p,
            }
        }
    };

    let insert = |elems: &mut Vec<NcPoly<QRat>>,
                  leaders: &mut BTreeMap<Word, usize>,
                  queue: &mut VecDeque<(usize, usize)>,
                  p: NcPoly<QRat>| {
        let p = reduce(elems, leaders, p);
        let Some((lead, coeff)) = p.leading_term() else {
            return;
        };
        let (lead, coeff) = (lead.clone(), coeff.clone());
        let p = p.scale(&coeff.inv());
        // Back-substitute so the stored basis stays fully reduced.
        for e in elems.iter_mut() {
            let c = e.coeff(&lead);
            if !c.is_zero() {
                *e = &*e - &p.scale(&c);
            }
        }
        let idx = elems.len();
        for prev in 0..idx {
            queue.push_back((prev, idx));
        }
        leaders.insert(lead, idx);
        elems.push(p);
    };

    insert(
        &mut elems,
        &mut leaders,
        &mut queue,
        NcPoly::from_letter(Letter::A),
    );
    insert(
        &mut elems,
        &mut leaders,
        &mut queue,
        NcPoly::from_letter(Letter::B),
    );
    while let Some((i, j)) = queue.pop_front() {
        let wi = elems[i].homogeneous_weight().unwrap_or(0);
        let wj = elems[j].homogeneous_weight().unwrap_or(0);
        if wi + wj > max_weight || elems[i].is_zero() || elems[j].is_zero() {
            continue;
        }
        let bracket = elems[i].lie_bracket(&elems[j]);
        if bracket.is_zero() {
            continue;
        }
        let nf = r.normalize(&bracket);
        insert(&mut elems, &mut leaders, &mut queue, nf.value);
    }

    let mut out: Vec<NcPoly<QRat>> = elems.into_iter().filter(|e| !e.is_zero()).collect();
    out.sort_by(|a, b| {
        a.leading_term()
            .map(|(w, _)| w.clone())
            .cmp(&b.leading_term().map(|(w, _)| w.clone()))
    });
    Ok(out
        .into_iter()
        .map(|value| CanonicalElement {
            system: "R".to_string(),
            value,
        })
        .collect())
}

/// Ranks of the bracket-closure span per weight, up to `max_weight`.
pub fn lie_span_ranks(max_weight: u32) -> Result<BTreeMap<u32, usize>, LieError> {
    let span = lie_span_bruteforce(max_weight)?;
    let mut ranks = BTreeMap::new();
    for e in &span {
        let w = e.value.homogeneous_weight().expect("closure is graded");
        if w <= max_weight {
            *ranks.entry(w).or_insert(0) += 1;
        }
    }
    Ok(ranks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rqalg::c_as_bracket;

    fn word(s: &str) -> Word {
        Word::from_letters(
            &s.chars()
                .map(|c| Letter::from_char(c).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn basis_normal_forms() {
        // CA-type words are irreducible as written.
        let v = LieBasisVector::ca_type(0, 1, 1);
        assert_eq!(v.normal_form().value, NcPoly::from_word(word("CA")));
        // BC-type(0,1,1): B C -> q^(-1) CB.
        let v = LieBasisVector::bc_type(0, 1, 1);
        assert_eq!(
            v.normal_form().value,
            NcPoly::from_term(word("CB"), QRat::q_pow(-1))
        );
        // β(0,1) = (1+q) C^2 - γC.
        let v = LieBasisVector::beta(0, 1);
        let nf = v.normal_form().value;
        assert_eq!(nf.coeff(&word("CC")), qnum(2));
        assert_eq!(nf.coeff(&word("gC")), -&qnum(1));
        // The normal forms agree with the engine on the raw words.
        let r = presentation(Presentation::R);
        for (v, raw) in [
            (LieBasisVector::bc_type(1, 2, 3), word("gBBCCC")),
            (LieBasisVector::ca_type(2, 1, 2), word("ggCAA")),
        ] {
            assert_eq!(v.normal_form().value, r.normalize(&NcPoly::from_word(raw)).value);
        }
    }

    #[test]
    fn census_small_weights() {
        assert_eq!(LieBasisVector::of_weight(1).len(), 2);
        assert_eq!(LieBasisVector::of_weight(2).len(), 1);
        assert_eq!(LieBasisVector::of_weight(3).len(), 2);
        assert_eq!(LieBasisVector::of_weight(4).len(), 3);
        for w in 0..=12 {
            for v in LieBasisVector::of_weight(w) {
                assert_eq!(v.weight(), w);
            }
        }
    }

    #[test]
    fn membership_examples() {
        // C = AB - BA is a Lie polynomial with decomposition {C: 1}.
        let verdict = is_lie_polynomial(&c_as_bracket());
        let decomp = verdict.decomposition().expect("C is in L");
        assert_eq!(decomp.len(), 1);
        assert_eq!(decomp.get(&LieBasisVector::C), Some(&QRat::from_int(1)));
        // Single letters are members.
        assert!(is_lie_polynomial(&NcPoly::from_letter(Letter::A)).is_member());
        // γ, BA, AA are not.
        for s in ["g", "BA", "AA"] {
            let verdict = is_lie_polynomial(&NcPoly::from_word(word(s)));
            assert!(!verdict.is_member(), "{s} should not be a Lie polynomial");
            assert!(!verdict.residual().unwrap().value.is_zero());
        }
        // The identity is not.
        assert!(!is_lie_polynomial(&NcPoly::one()).is_member());
        // Zero trivially is.
        assert!(is_lie_polynomial(&NcPoly::zero()).is_member());
    }

    #[test]
    fn decompositions_re_expand() {
        let r = presentation(Presentation::R);
        // A haphazard Lie polynomial: [A, [A, B]] + 3 [B, [A, B]] - [A, B].
        let c = c_as_bracket();
        let a = NcPoly::from_letter(Letter::A);
        let b = NcPoly::from_letter(Letter::B);
        let x = &(&a.lie_bracket(&c) + &b.lie_bracket(&c).scale(&QRat::from_int(3))) - &c;
        let verdict = is_lie_polynomial(&x);
        let decomp = verdict.decomposition().expect("bracket combination");
        let mut rebuilt = NcPoly::zero();
        for (v, coeff) in decomp {
            rebuilt = &rebuilt + &v.normal_form().value.scale(coeff);
        }
        assert_eq!(rebuilt, r.normalize(&x).value);
    }

    #[test]
    fn residual_stays_outside_the_span() {
        // γ + C: the C part is in L, γ is not; the residual must be nonzero
        // and itself rejected.
        let x = &NcPoly::<QRat>::from_letter(Letter::Gamma) + &NcPoly::from_letter(Letter::C);
        let verdict = is_lie_polynomial(&x);
        let residual = verdict.residual().expect("gamma spoils membership");
        assert!(!is_lie_polynomial(&residual.value).is_member());
    }

    #[test]
    fn bruteforce_span_small() {
        let span = lie_span_bruteforce(2).unwrap();
        assert_eq!(span.len(), 3); // A, B, C
        let ranks = lie_span_ranks(4).unwrap();
        assert_eq!(ranks.get(&1), Some(&2));
        assert_eq!(ranks.get(&2), Some(&1));
        assert_eq!(ranks.get(&3), Some(&2));
        assert_eq!(ranks.get(&4), Some(&3));
        assert!(lie_span_bruteforce(SPAN_BOUND + 1).is_err());
    }

    #[test]
    fn span_elements_are_members_and_match_census() {
        let span = lie_span_bruteforce(6).unwrap();
        for e in &span {
            assert!(
                is_lie_polynomial(&e.value).is_member(),
                "span element rejected: {}",
                e.value
            );
        }
        let ranks = lie_span_ranks(6).unwrap();
        for (w, rank) in ranks {
            assert_eq!(
                rank,
                LieBasisVector::of_weight(w).len(),
                "rank mismatch at weight {w}"
            );
        }
    }

    #[test]
    fn beta_bridge_identity() {
        // q^n [γ^h C^n A, B] normalizes to the β(h, n) normal form.
        let r = presentation(Presentation::R);
        for h in 0..=5u32 {
            for n in 1..=5u32 {
                let word = Word::from_powers(&[
                    (Letter::Gamma, h),
                    (Letter::C, n),
                    (Letter::A, 1),
                ]);
                let x = NcPoly::from_word(word)
                    .lie_bracket(&NcPoly::from_letter(Letter::B))
                    .scale(&QRat::q_pow(n as i64));
                assert_eq!(
                    r.normalize(&x).value,
                    LieBasisVector::beta(h, n).normal_form().value
                );
            }
        }
    }
}
