//! The algebra R(q) itself: both working presentations, their bases, the
//! closed-form reordering identities, and conversion between the bases.
//!
//! R(q) is generated by A, B subject to `AB - qBA` being central. The
//! three-generator presentation adjoins `γ = AB - qBA` and reduces by the
//! system S; the four-generator presentation also adjoins `C = AB - BA`
//! and reduces by the system R. Both systems are confluent for the
//! admissible order, so irreducible words form bases: `γ^h B^m A^n` for S,
//! and `γ^h C^k B^l`, `γ^h C^k A^t` (t >= 1) for R.

use std::sync::LazyLock;

use thiserror::Error;

use crate::exactnum::{qnum, QRat};
use crate::freealg::{Letter, NcPoly, Word};
use crate::rewrite::{CanonicalElement, ReductionRule, ReductionSystem};

/// Largest exponent accepted by [`expand_anb`] and [`commute_bracket_power`].
pub const EXPAND_BOUND: u32 = 64;
/// Largest exponent accepted by [`product_closed_form`]; q-binomial
/// coefficient sizes grow quadratically past this.
pub const PRODUCT_BOUND: u32 = 16;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RqError {
    #[error("exponent {requested} exceeds the bound {bound} for {what}")]
    BoundExceeded {
        what: &'static str,
        requested: u32,
        bound: u32,
    },
    #[error("operation is defined for the letters A and B only")]
    UnsupportedLetter,
}

/// The two built-in presentations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Presentation {
    /// Three generators A, B, γ; rules λ, σ, τ.
    S,
    /// Four generators A, B, C, γ; rules σ1..σ7.
    R,
}

fn w(letters: &str) -> Word {
    Word::from_letters(
        &letters
            .chars()
            .map(|c| Letter::from_char(c).expect("known letter"))
            .collect::<Vec<_>>(),
    )
}

fn build_s() -> ReductionSystem<QRat> {
    let q = QRat::q();
    let mut ab_rhs = NcPoly::from_letter(Letter::Gamma);
    ab_rhs.add_term(w("BA"), q);
    let rules = vec![
        ReductionRule::new("lambda", w("AB"), ab_rhs).unwrap(),
        ReductionRule::new("sigma", w("Ag"), NcPoly::from_word(w("gA"))).unwrap(),
        ReductionRule::new("tau", w("Bg"), NcPoly::from_word(w("gB"))).unwrap(),
    ];
    ReductionSystem::new("S", rules).unwrap()
}

fn build_r() -> ReductionSystem<QRat> {
    let q = QRat::q();
    let inv_1mq = QRat::one_minus_q().inv();
    // AB -> (γ - qC)/(1-q)
    let mut ab_rhs = NcPoly::from_term(w("g"), inv_1mq.clone());
    ab_rhs.add_term(w("C"), -&(&q * &inv_1mq));
    // BA -> (γ - C)/(1-q)
    let mut ba_rhs = NcPoly::from_term(w("g"), inv_1mq.clone());
    ba_rhs.add_term(w("C"), -&inv_1mq);
    let rules = vec![
        ReductionRule::new("sigma1", w("AB"), ab_rhs).unwrap(),
        ReductionRule::new("sigma2", w("BA"), ba_rhs).unwrap(),
        ReductionRule::new("sigma3", w("AC"), NcPoly::from_term(w("CA"), q.clone())).unwrap(),
        ReductionRule::new("sigma4", w("BC"), NcPoly::from_term(w("CB"), q.inv())).unwrap(),
        ReductionRule::new("sigma5", w("Ag"), NcPoly::from_word(w("gA"))).unwrap(),
        ReductionRule::new("sigma6", w("Bg"), NcPoly::from_word(w("gB"))).unwrap(),
        ReductionRule::new("sigma7", w("Cg"), NcPoly::from_word(w("gC"))).unwrap(),
    ];
    ReductionSystem::new("R", rules).unwrap()
}

static SYSTEM_S: LazyLock<ReductionSystem<QRat>> = LazyLock::new(build_s);
static SYSTEM_R: LazyLock<ReductionSystem<QRat>> = LazyLock::new(build_r);

/// The exact rule set of the chosen presentation.
pub fn presentation(which: Presentation) -> &'static ReductionSystem<QRat> {
    match which {
        Presentation::S => &SYSTEM_S,
        Presentation::R => &SYSTEM_R,
    }
}

/// An S-basis word `γ^h B^m A^n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SBasisVector {
    pub h: u32,
    pub m: u32,
    pub n: u32,
}

impl SBasisVector {
    pub fn weight(&self) -> u32 {
        2 * self.h + self.m + self.n
    }

    pub fn to_word(&self) -> Word {
        Word::from_powers(&[
            (Letter::Gamma, self.h),
            (Letter::B, self.m),
            (Letter::A, self.n),
        ])
    }

    /// All S-basis words of the given weight.
    pub fn of_weight(weight: u32) -> Vec<SBasisVector> {
        let mut out = Vec::new();
        for h in 0..=weight / 2 {
            let rest = weight - 2 * h;
            for m in 0..=rest {
                out.push(SBasisVector {
                    h,
                    m,
                    n: rest - m,
                });
            }
        }
        out
    }
}

/// Which tail letter an R-basis word carries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RBasisKind {
    /// `γ^h C^k B^l`, `l >= 0`.
    BType,
    /// `γ^h C^k A^t`, `t >= 1`.
    AType,
}

/// An R-basis word `γ^h C^k B^l` or `γ^h C^k A^t`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RBasisVector {
    pub kind: RBasisKind,
    pub h: u32,
    pub k: u32,
    pub tail: u32,
}

impl RBasisVector {
    pub fn b_type(h: u32, k: u32, l: u32) -> Self {
        RBasisVector {
            kind: RBasisKind::BType,
            h,
            k,
            tail: l,
        }
    }

    /// Panics if `t` is zero; `γ^h C^k` with no tail is the B-type word at `l = 0`.
    pub fn a_type(h: u32, k: u32, t: u32) -> Self {
        assert!(t >= 1, "A-type basis words need a positive A exponent");
        RBasisVector {
            kind: RBasisKind::AType,
            h,
            k,
            tail: t,
        }
    }

    pub fn weight(&self) -> u32 {
        2 * self.h + 2 * self.k + self.tail
    }

    pub fn to_word(&self) -> Word {
        let tail_letter = match self.kind {
            RBasisKind::BType => Letter::B,
            RBasisKind::AType => Letter::A,
        };
        Word::from_powers(&[
            (Letter::Gamma, self.h),
            (Letter::C, self.k),
            (tail_letter, self.tail),
        ])
    }

    /// All R-basis words of the given weight.
    pub fn of_weight(weight: u32) -> Vec<RBasisVector> {
        let mut out = Vec::new();
        for h in 0..=weight / 2 {
            for k in 0..=(weight - 2 * h) / 2 {
                let tail = weight - 2 * h - 2 * k;
                out.push(RBasisVector::b_type(h, k, tail));
                if tail >= 1 {
                    out.push(RBasisVector::a_type(h, k, tail));
                }
            }
        }
        out
    }
}

/// Which side of the one-letter reordering to expand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `A^n B`
    Left,
    /// `A B^n`
    Right,
}

/// Closed-form S-normal form of `A^n B` (left) or `A B^n` (right):
/// `{n}_q γ A^(n-1) + q^n B A^n`, resp. `{n}_q γ B^(n-1) + q^n B^n A`.
pub fn expand_anb(n: u32, side: Side) -> Result<CanonicalElement<QRat>, RqError> {
    if n > EXPAND_BOUND {
        return Err(RqError::BoundExceeded {
            what: "expand_anb",
            requested: n,
            bound: EXPAND_BOUND,
        });
    }
    let (repeated, single) = match side {
        Side::Left => (Letter::A, Letter::B),
        Side::Right => (Letter::B, Letter::A),
    };
    let mut value = NcPoly::zero();
    if n == 0 {
        value.add_term(Word::single(single), QRat::from_int(1));
    } else {
        value.add_term(
            Word::from_powers(&[(Letter::Gamma, 1), (repeated, n - 1)]),
            qnum(n as i64),
        );
        // The irreducible order puts B powers before A powers.
        let tail = match side {
            Side::Left => Word::from_powers(&[(Letter::B, 1), (Letter::A, n)]),
            Side::Right => Word::from_powers(&[(Letter::B, n), (Letter::A, 1)]),
        };
        value.add_term(tail, QRat::q_pow(n as i64));
    }
    Ok(CanonicalElement {
        system: "S".to_string(),
        value,
    })
}

/// Word order of the product whose closed form is requested.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductOrder {
    /// `A^n B^n`
    AB,
    /// `B^n A^n`
    BA,
}

/// Which closed form: the product over `BA` and `γ` reduced by S, or the
/// q-binomial sum over `γ^(n-i) C^i` reduced by R.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductBasis {
    SStyle,
    CStyle,
}

/// A product identity in both printed and solved form: `scale * word_product`
/// normalizes to `scaled`, and the bare word product normalizes to `resolved`.
#[derive(Clone, Debug)]
pub struct ProductClosedForm {
    pub scale: QRat,
    pub scaled: CanonicalElement<QRat>,
    pub resolved: CanonicalElement<QRat>,
}

fn binom2(k: u32) -> i64 {
    (k as i64) * (k as i64 - 1) / 2
}

/// Closed form of `A^n B^n` or `B^n A^n`.
///
/// S-style expands the product forms
/// `A^n B^n = Π (q^i BA + {i}_q γ)` and `q^C(n,2) B^n A^n = Π (BA - {j}_q γ)`;
/// C-style uses the q-binomial sums carrying the `(1-q)^n` scaling,
/// `(1-q)^n A^n B^n = Σ (-1)^i q^C(i+1,2) [n,i]_q γ^(n-i) C^i` and its
/// `B^n A^n` counterpart with `q^C(n-i,2)`.
pub fn product_closed_form(
    n: u32,
    order: ProductOrder,
    basis: ProductBasis,
) -> Result<ProductClosedForm, RqError> {
    if n > PRODUCT_BOUND {
        return Err(RqError::BoundExceeded {
            what: "product_closed_form",
            requested: n,
            bound: PRODUCT_BOUND,
        });
    }
    match basis {
        ProductBasis::SStyle => {
            let sys = presentation(Presentation::S);
            let mut prod = NcPoly::one();
            match order {
                ProductOrder::AB => {
                    for i in 1..=n {
                        let mut factor = NcPoly::from_term(w("BA"), QRat::q_pow(i as i64));
                        factor.add_term(w("g"), qnum(i as i64));
                        prod = prod.multiply(&factor);
                    }
                }
                ProductOrder::BA => {
                    for j in 0..n {
                        let mut factor = NcPoly::from_word(w("BA"));
                        factor.add_term(w("g"), -&qnum(j as i64));
                        prod = prod.multiply(&factor);
                    }
                }
            }
            let scale = match order {
                ProductOrder::AB => QRat::from_int(1),
                ProductOrder::BA => QRat::q_pow(binom2(n)),
            };
            let scaled = sys.normalize(&prod);
            let resolved = CanonicalElement {
                system: scaled.system.clone(),
                value: scaled.value.scale(&scale.inv()),
            };
            Ok(ProductClosedForm {
                scale,
                scaled,
                resolved,
            })
        }
        ProductBasis::CStyle => {
            let mut value = NcPoly::zero();
            for i in 0..=n {
                let exp = match order {
                    ProductOrder::AB => binom2(i + 1),
                    ProductOrder::BA => binom2(n - i),
                };
                let mut c = &QRat::q_pow(exp) * &crate::exactnum::qbin(n as i64, i as i64);
                if i % 2 == 1 {
                    c = -c;
                }
                value.add_term(
                    Word::from_powers(&[(Letter::Gamma, n - i), (Letter::C, i)]),
                    c,
                );
            }
            let scale = match order {
                ProductOrder::AB => QRat::one_minus_q().pow(n),
                ProductOrder::BA => &QRat::q_pow(binom2(n)) * &QRat::one_minus_q().pow(n),
            };
            let scaled = CanonicalElement {
                system: "R".to_string(),
                value,
            };
            let resolved = CanonicalElement {
                system: "R".to_string(),
                value: scaled.value.scale(&scale.inv()),
            };
            Ok(ProductClosedForm {
                scale,
                scaled,
                resolved,
            })
        }
    }
}

/// R-normal form of the commuted bracket power: for A, `A^k C^n` normalizes
/// to `q^(kn) C^n A^k`; for B, `B^k C^n` normalizes to `q^(-kn) C^n B^k`.
pub fn commute_bracket_power(
    letter: Letter,
    k: u32,
    n: u32,
) -> Result<CanonicalElement<QRat>, RqError> {
    if k.max(n) > EXPAND_BOUND {
        return Err(RqError::BoundExceeded {
            what: "commute_bracket_power",
            requested: k.max(n),
            bound: EXPAND_BOUND,
        });
    }
    let (word, coeff) = match letter {
        Letter::A => (
            Word::from_powers(&[(Letter::C, n), (Letter::A, k)]),
            QRat::q_pow(k as i64 * n as i64),
        ),
        Letter::B => (
            Word::from_powers(&[(Letter::C, n), (Letter::B, k)]),
            QRat::q_pow(-(k as i64 * n as i64)),
        ),
        _ => return Err(RqError::UnsupportedLetter),
    };
    Ok(CanonicalElement {
        system: "R".to_string(),
        value: NcPoly::from_term(word, coeff),
    })
}

/// The commutator `C` spelled in the two-letter alphabet: `AB - BA`.
pub fn c_as_bracket() -> NcPoly<QRat> {
    &NcPoly::from_word(w("AB")) - &NcPoly::from_word(w("BA"))
}

/// Converts a canonical element between the S and R bases.
///
/// Toward S, occurrences of the letter C are substituted by `AB - BA` and the
/// result reduced by S; toward R, the element is reduced by R directly. The
/// two directions are mutually inverse.
pub fn convert_basis(
    x: &CanonicalElement<QRat>,
    target: Presentation,
) -> CanonicalElement<QRat> {
    match target {
        Presentation::S => {
            let c_poly = c_as_bracket();
            let mut expanded = NcPoly::zero();
            for (word, coeff) in x.value.iter() {
                let mut prod = NcPoly::from_scalar(coeff.clone());
                for &l in word.letters() {
                    let factor = if l == Letter::C {
                        c_poly.clone()
                    } else {
                        NcPoly::from_letter(l)
                    };
                    prod = prod.multiply(&factor);
                }
                expanded = &expanded + &prod;
            }
            presentation(Presentation::S).normalize(&expanded)
        }
        Presentation::R => presentation(Presentation::R).normalize(&x.value),
    }
}
