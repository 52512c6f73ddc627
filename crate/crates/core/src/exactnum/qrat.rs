//! The coefficient field Q(q): rational functions of the indeterminate `q`.
//!
//! Canonical form: numerator and denominator coprime, denominator monic and
//! nonzero, zero stored as 0/1. Equality is therefore plain structural
//! comparison. Working over a transcendental `q` keeps quantities like
//! 1/(1-q) and inverse q-numbers exact, which the reordering formulas need.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qpoly::QPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Builds `num / den` in canonical form. Panics if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(q)");
        if num.is_zero() {
            return QRat {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = QPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.checked_div(&g).expect("gcd divides numerator"),
                den.checked_div(&g).expect("gcd divides denominator"),
            )
        };
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QRat { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QRat::from_poly(QPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        QRat::from_poly(QPoly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QRat::from_poly(QPoly::q())
    }

    /// `q^k`, with negative exponents landing in the denominator.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QRat::from_poly(QPoly::q_pow(k as usize))
        } else {
            QRat {
                num: QPoly::one(),
                den: QPoly::q_pow((-k) as usize),
            }
        }
    }

    /// `1 - q`, the ubiquitous scale factor of the four-generator presentation.
    pub fn one_minus_q() -> Self {
        QRat::from_poly(&QPoly::one() - &QPoly::q())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(q)");
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        QRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// deg(num) + deg(den); a cheap size measure for pivot selection.
    pub fn total_degree(&self) -> u64 {
        (self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)) as u64
    }

    /// Evaluates at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// True when the canonical form is a single monomial `c * q^k` with no
    /// denominator and positive `c` — the shapes printed without parentheses.
    pub fn is_plain_monomial(&self) -> bool {
        if !self.den.is_one() {
            return false;
        }
        let nonzero = self
            .num
            .coeffs()
            .iter()
            .filter(|c| !Zero::is_zero(*c))
            .count();
        nonzero == 1 && self.num.leading() > BigRational::zero()
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::from_poly(QPoly::one())
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRat::new(num, &self.den * &rhs.den)
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        QRat::new(num, &self.den * &rhs.den)
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for QRat {
    type Output = QRat;
    fn div(self, rhs: QRat) -> QRat {
        &self / &rhs
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        QRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for QRat {
    /// Integer-coefficient textual form, e.g. `(1+q-2*q^3)/(1-q)` or `q^2`.
    ///
    /// The stored monic denominator is rescaled jointly with the numerator so
    /// both print with integer coefficients and the denominator's lowest
    /// nonzero coefficient is positive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = self.num.joint_integer_form(&self.den);
        let ns = num.to_string();
        let multi_term = ns[1..].contains(['+', '-']);
        if multi_term || ns.starts_with('-') {
            write!(f, "({ns})/({den})")
        } else {
            write!(f, "{ns}/({den})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    #[test]
    fn canonical_form_is_unique() {
        // (2 + 2q) / (4 - 4q^2) == 1/(2 - 2q) == (1/2) / (1 - q)
        let a = QRat::new(p(&[2, 2]), p(&[4, 0, -4]));
        let b = QRat::new(p(&[1]), p(&[2, -2]));
        assert_eq!(a, b);
        assert!(a.den().is_monic());
        assert_eq!(QRat::new(p(&[]), p(&[5, 7])), QRat::zero());
    }

    #[test]
    fn field_ops() {
        let x = QRat::new(p(&[1]), p(&[1, -1])); // 1/(1-q) = -1/(q-1)
        let y = QRat::one_minus_q();
        assert!((&x * &y).is_one());
        assert_eq!(&x * &x.inv(), QRat::one());
        assert_eq!(&x - &x, QRat::zero());
        assert_eq!(QRat::q_pow(-2) * QRat::q_pow(5), QRat::q_pow(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QRat::from_int(3).to_string(), "3");
        assert_eq!(QRat::q_pow(2).to_string(), "q^2");
        let c = QRat::new(p(&[1]), p(&[1, -1]));
        assert_eq!(c.to_string(), "1/(1-q)");
        let d = QRat::new(p(&[0, -1]), p(&[1, -1])); // -q/(1-q)
        assert_eq!(d.to_string(), "(-q)/(1-q)");
        let e = QRat::new(p(&[1, 1]), p(&[1, 0, -1])); // (1+q)/(1-q^2) reduces
        assert_eq!(e.to_string(), "1/(1-q)");
        let f = QRat::new(p(&[1, 3]), p(&[1, -1]));
        assert_eq!(f.to_string(), "(1+3*q)/(1-q)");
        assert_eq!(QRat::q_pow(-1).to_string(), "1/(q)");
    }
}
