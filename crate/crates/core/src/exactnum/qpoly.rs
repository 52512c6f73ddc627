//! Dense univariate polynomials in the indeterminate `q` with rational
//! coefficients.
//!
//! These are the carrier for q-numbers, q-factorials and Gaussian
//! q-binomials, and the building blocks of the coefficient field Q(q).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` over the rationals, stored densely by ascending
/// exponent with trailing zeros trimmed. The zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(BigRational::from_integer(n.into()))
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        QPoly::monomial(BigRational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + i] = &rem[k + i] - t;
            }
            quot[k] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn checked_div(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Rewrites `self` as `content * primitive` with `content` a positive
    /// rational and `primitive` an integer-coefficient polynomial whose
    /// coefficients have gcd 1 and positive leading coefficient.
    /// Returns `None` for the zero polynomial.
    fn to_primitive(&self) -> Option<(BigRational, Vec<BigInt>)> {
        if self.is_zero() {
            return None;
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let mut sign = BigInt::one();
        if ints.last().unwrap().is_negative() {
            sign = -sign;
        }
        let scale = content.clone() * &sign;
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &scale).collect();
        Some((BigRational::new(scale, den_lcm), prim))
    }

    /// Monic gcd via primitive parts and the subresultant remainder sequence.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let (_, pa) = a.to_primitive().unwrap();
        let (_, pb) = b.to_primitive().unwrap();
        let g = int_gcd_subresultant(pa, pb);
        QPoly::new(g.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    /// Joint integer-coefficient form of a fraction `self / den`, scaled by a
    /// single common factor: returns `(num', den')` with integer coefficients,
    /// jointly primitive, and the lowest-order nonzero coefficient of `den'`
    /// positive. Used for display.
    pub(crate) fn joint_integer_form(&self, den: &QPoly) -> (QPoly, QPoly) {
        let mut den_lcm = BigInt::one();
        for c in self.coeffs.iter().chain(den.coeffs.iter()) {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let lift = |p: &QPoly| -> Vec<BigInt> {
            p.coeffs
                .iter()
                .map(|c| c.numer() * (&den_lcm / c.denom()))
                .collect()
        };
        let ni = lift(self);
        let di = lift(den);
        let mut content = BigInt::zero();
        for c in ni.iter().chain(di.iter()) {
            content = content.gcd(c);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        if let Some(first) = di.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                content = -content;
            }
        }
        let back = |v: Vec<BigInt>| -> QPoly {
            QPoly::new(
                v.into_iter()
                    .map(|c| BigRational::from_integer(c / &content))
                    .collect(),
            )
        };
        (back(ni), back(di))
    }
}

/// Subresultant PRS gcd on primitive integer polynomials.
fn int_gcd_subresultant(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = int_pseudo_rem(&a, &b);
        if r.is_empty() {
            return int_primitive(b);
        }
        if r.len() == 1 {
            // Constant remainder: the inputs are coprime up to content.
            return vec![BigInt::one()];
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        if delta > 0 {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            h = num / den;
        }
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over the integers.
/// Requires `deg a >= deg b`, `b` nonzero; result trimmed.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut rem = a.to_vec();
    let steps = a.len() - b.len() + 1;
    for k in (0..steps).rev() {
        // R <- lb * R - R[k+db] * x^k * B, which zeroes position k+db.
        let top = rem[k + db].clone();
        for c in rem.iter_mut() {
            *c *= lb;
        }
        if !top.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] -= &top * bc;
            }
        }
    }
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    rem
}

fn int_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    v.into_iter().map(|c| c / &content).collect()
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        QPoly::new(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for QPoly {
    /// Compact ascending form: `1+2*q+q^3`, `-1+q`, `q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            if !unit || k == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            if k > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
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
    fn trims_trailing_zeros() {
        let a = QPoly::new(vec![
            BigRational::from_integer(3.into()),
            BigRational::zero(),
        ]);
        assert_eq!(a.degree(), Some(0));
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[-1, 1]); // -1 + q
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn division_exact_and_with_remainder() {
        let num = p(&[-1, 0, 0, 1]); // q^3 - 1
        let den = p(&[-1, 1]); // q - 1
        assert_eq!(num.checked_div(&den), Some(p(&[1, 1, 1])));
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(&(&q * &p(&[1, 1])) + &r, p(&[1, 0, 1]));
        assert!(p(&[1]).checked_div(&p(&[0, 1])).is_none());
    }

    #[test]
    fn gcd_monic_and_correct() {
        // (1+q)^2 (1-q) vs (1+q)(2+q)
        let a = &p(&[1, 2, 1]) * &p(&[1, -1]);
        let b = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(QPoly::gcd(&a, &b), p(&[1, 1]));
        assert_eq!(QPoly::gcd(&p(&[]), &p(&[0, 3])), p(&[0, 1]));
        // Coprime inputs give 1.
        assert_eq!(QPoly::gcd(&p(&[1, 1]), &p(&[-1, 1])), QPoly::one());
    }

    #[test]
    fn gcd_survives_coefficient_growth() {
        // Classic subresultant stress pair (Knuth's example).
        let a = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = p(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(QPoly::gcd(&a, &b), QPoly::one());
        let m = p(&[7, 0, 1]);
        assert_eq!(QPoly::gcd(&(&a * &m), &(&b * &m)), m.monic());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 1]).to_string(), "1+q");
        assert_eq!(p(&[0, 0, 1]).to_string(), "q^2");
        assert_eq!(p(&[-1, 0, 2]).to_string(), "-1+2*q^2");
        assert_eq!(p(&[1, -1]).to_string(), "1-q");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
