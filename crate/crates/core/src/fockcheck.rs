//! Truncated ladder-operator representation over exact rationals: an
//! independent numeric oracle for symbolic identities.
//!
//! On the basis `e_0 .. e_(N-1)`, B shifts the index up, A shifts it down
//! with a q-number scale, γ acts as the scalar `b`, and C as `AB - BA`:
//!
//! ```text
//! B e_k = e_(k+1)   (k < N-1),   B e_(N-1) = 0
//! A e_k = b {k}_q e_(k-1),       A e_0 = 0
//! ```
//!
//! so `(AB - qBA) e_k = b e_k` holds for all `k <= N-2` — exactly on every
//! column except the truncation boundary. Since each of A and B moves the
//! ladder index by one and C, γ expand to at most two such letters, a word
//! of weight D displaces the index by at most D; columns `0 .. N-1-D` are
//! therefore computed exactly and agreement there is a sound (one-sided)
//! equality check.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::q_number;
use crate::freealg::{Letter, NcPoly, Word};
use crate::linalg::Matrix;
use crate::QRat;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum FockError {
    #[error("dimension must be at least 2")]
    DimensionTooSmall,
    #[error("q must be neither 0 nor 1")]
    DegenerateQ,
    #[error("representation of dimension {dim} is too small for words of weight {weight}")]
    BlockTooSmall { dim: usize, weight: u32 },
    #[error("coefficient {coeff} has a pole at q = {at}")]
    CoefficientPole { coeff: String, at: BigRational },
}

/// A truncated ladder representation at a fixed rational `q` and central
/// value `b`.
#[derive(Clone, Debug)]
pub struct FockRep {
    dim: usize,
    q_val: BigRational,
    b_val: BigRational,
    mat_a: Matrix<BigRational>,
    mat_b: Matrix<BigRational>,
    /// Diagonal of `C = AB - BA`; the product is diagonal by construction.
    diag_c: Vec<BigRational>,
}

impl FockRep {
    pub fn new(dim: usize, q_val: BigRational, b_val: BigRational) -> Result<Self, FockError> {
        if dim < 2 {
            return Err(FockError::DimensionTooSmall);
        }
        if q_val.is_zero() || q_val.is_one() {
            return Err(FockError::DegenerateQ);
        }
        let mut mat_a = Matrix::zeros(dim, dim);
        let mut mat_b = Matrix::zeros(dim, dim);
        for k in 0..dim - 1 {
            mat_b[(k + 1, k)] = BigRational::one();
        }
        for k in 1..dim {
            mat_a[(k - 1, k)] = &b_val * q_number(k as i64).eval(&q_val);
        }
        let ab = mat_a.mul(&mat_b);
        let ba = mat_b.mul(&mat_a);
        let c = ab.sub(&ba);
        let mut diag_c = Vec::with_capacity(dim);
        for k in 0..dim {
            diag_c.push(c[(k, k)].clone());
        }
        debug_assert!({
            let mut diag_only = Matrix::zeros(dim, dim);
            for (k, v) in diag_c.iter().enumerate() {
                diag_only[(k, k)] = v.clone();
            }
            c == diag_only
        });
        Ok(FockRep {
            dim,
            q_val,
            b_val,
            mat_a,
            mat_b,
            diag_c,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q_val(&self) -> &BigRational {
        &self.q_val
    }

    pub fn b_val(&self) -> &BigRational {
        &self.b_val
    }

    pub fn mat_a(&self) -> &Matrix<BigRational> {
        &self.mat_a
    }

    pub fn mat_b(&self) -> &Matrix<BigRational> {
        &self.mat_b
    }

    /// Action of one letter on a scaled basis vector `(row, scale)`;
    /// `None` when the vector is annihilated.
    fn step(&self, letter: Letter, row: usize, scale: &BigRational) -> Option<(usize, BigRational)> {
        match letter {
            Letter::A => {
                if row == 0 {
                    None
                } else {
                    Some((row - 1, scale * &self.mat_a[(row - 1, row)]))
                }
            }
            Letter::B => {
                if row + 1 >= self.dim {
                    None
                } else {
                    Some((row + 1, scale.clone()))
                }
            }
            Letter::C => Some((row, scale * &self.diag_c[row])),
            Letter::Gamma => Some((row, scale * &self.b_val)),
        }
    }

    /// Image of a word on the basis column `e_col`.
    fn apply_word(&self, word: &Word, col: usize) -> Option<(usize, BigRational)> {
        let mut state = (col, BigRational::one());
        for &l in word.letters().iter().rev() {
            state = self.step(l, state.0, &state.1)?;
            if state.1.is_zero() {
                return None;
            }
        }
        Some(state)
    }

    /// Evaluates an element as a matrix: the algebra morphism sending
    /// A, B to the ladder matrices, C to their commutator, γ to `b · I`,
    /// extended linearly with coefficients specialized at `q = q_val`.
    pub fn evaluate(&self, x: &NcPoly<QRat>) -> Result<Matrix<BigRational>, FockError> {
        let mut out: Matrix<BigRational> = Matrix::zeros(self.dim, self.dim);
        for (word, coeff) in x.iter() {
            let c = coeff
                .eval(&self.q_val)
                .ok_or_else(|| FockError::CoefficientPole {
                    coeff: coeff.to_string(),
                    at: self.q_val.clone(),
                })?;
            if c.is_zero() {
                continue;
            }
            for col in 0..self.dim {
                if let Some((row, scale)) = self.apply_word(word, col) {
                    let cur = out[(row, col)].clone();
                    out[(row, col)] = cur + &c * &scale;
                }
            }
        }
        Ok(out)
    }

    /// Compares two elements on the truncation-safe block: columns
    /// `0 ..= N-1-D` where `D` is the larger of the two maximal word weights.
    pub fn agree_on_block(&self, x: &NcPoly<QRat>, y: &NcPoly<QRat>) -> Result<bool, FockError> {
        let weight = x.max_weight().max(y.max_weight());
        if weight as usize >= self.dim {
            return Err(FockError::BlockTooSmall {
                dim: self.dim,
                weight,
            });
        }
        let safe_cols = self.dim - weight as usize;
        let mx = self.evaluate(x)?;
        let my = self.evaluate(y)?;
        for j in 0..safe_cols {
            for i in 0..self.dim {
                if mx[(i, j)] != my[(i, j)] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rqalg::{presentation, Presentation};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rep(dim: usize) -> FockRep {
        FockRep::new(dim, rat(2, 3), rat(5, 7)).unwrap()
    }

    fn word(s: &str) -> Word {
        Word::from_letters(
            &s.chars()
                .map(|c| Letter::from_char(c).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn constructor_validates() {
        assert!(matches!(
            FockRep::new(1, rat(2, 3), rat(1, 1)),
            Err(FockError::DimensionTooSmall)
        ));
        assert!(matches!(
            FockRep::new(4, rat(1, 1), rat(1, 1)),
            Err(FockError::DegenerateQ)
        ));
        assert!(matches!(
            FockRep::new(4, rat(0, 1), rat(1, 1)),
            Err(FockError::DegenerateQ)
        ));
    }

    #[test]
    fn identity_and_central_letter() {
        let r = rep(5);
        let id = r.evaluate(&NcPoly::one()).unwrap();
        assert_eq!(id, Matrix::identity(5));
        // Aγ - γA evaluates to the zero matrix: γ is a scalar.
        let x = &NcPoly::<QRat>::from_word(word("Ag")) - &NcPoly::from_word(word("gA"));
        assert!(r.evaluate(&x).unwrap().is_zero());
    }

    #[test]
    fn defining_relation_holds_below_the_boundary() {
        let r = rep(5);
        // AB - qBA - γ is zero on columns 0..=3; the top column feels the cut.
        let mut x = NcPoly::<QRat>::from_word(word("AB"));
        x.add_term(word("BA"), -QRat::q());
        x.add_term(word("g"), QRat::from_int(-1));
        let m = r.evaluate(&x).unwrap();
        for j in 0..4 {
            for i in 0..5 {
                assert!(m[(i, j)].is_zero(), "nonzero at ({i}, {j})");
            }
        }
        assert!(!m[(4, 4)].is_zero());
        // agree_on_block sees the equality.
        let lhs = NcPoly::<QRat>::from_word(word("AB"));
        let mut rhs = NcPoly::<QRat>::from_term(word("BA"), QRat::q());
        rhs.add_term(word("g"), QRat::from_int(1));
        assert!(r.agree_on_block(&lhs, &rhs).unwrap());
    }

    #[test]
    fn raw_word_agrees_with_its_normal_form() {
        let r = rep(16);
        let s = presentation(Presentation::S);
        let raw = NcPoly::<QRat>::from_word(word("AAB"));
        let nf = s.normalize(&raw);
        assert!(r.agree_on_block(&raw, &nf.value).unwrap());
        let rr = presentation(Presentation::R);
        let nf = rr.normalize(&raw);
        assert!(r.agree_on_block(&raw, &nf.value).unwrap());
    }

    #[test]
    fn distinguishes_unequal_elements() {
        let r = rep(8);
        let ab = NcPoly::<QRat>::from_word(word("AB"));
        let ba = NcPoly::<QRat>::from_word(word("BA"));
        assert!(!r.agree_on_block(&ab, &ba).unwrap());
        let x = NcPoly::<QRat>::from_word(word("gBA"));
        assert!(r.agree_on_block(&x, &x).unwrap());
    }

    #[test]
    fn pole_and_block_errors_are_reported() {
        let r = rep(4);
        // 1/(1-q) is fine at q = 2/3, but 1/(2-3q) hits the pole.
        let pole = QRat::new(
            crate::exactnum::QPoly::one(),
            &crate::exactnum::QPoly::from_int(2)
                - &crate::exactnum::QPoly::monomial(rat(3, 1), 1),
        );
        let x = NcPoly::from_term(Word::empty(), pole);
        assert!(matches!(
            r.evaluate(&x),
            Err(FockError::CoefficientPole { .. })
        ));
        let too_heavy = NcPoly::<QRat>::from_word(word("gggg"));
        assert!(matches!(
            r.agree_on_block(&too_heavy, &too_heavy),
            Err(FockError::BlockTooSmall { .. })
        ));
    }
}
