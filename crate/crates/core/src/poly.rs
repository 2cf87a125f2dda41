//! Exact rational polynomials: Lagrange interpolation, evaluation, binomials.
//!
//! Hilbert polynomials and Euler characteristics are computed with these; no
//! floating point appears anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial with exact rational coefficients, dense in ascending degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(t));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Evaluates at an integer point where the value is known to be integral.
    pub fn eval_integer(&self, t: i64) -> BigInt {
        let v = self.eval(t);
        assert!(v.is_integer(), "polynomial value at {t} is not an integer");
        v.to_integer()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by the linear factor (x − a).
    pub fn mul_linear(&self, a: i64) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let a = BigRational::from_integer(BigInt::from(a));
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += c;
            coeffs[i] -= c * &a;
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a}*t")?,
                _ if a.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Newton-form interpolation through integer points with integer values.
/// Exact; panics on repeated abscissae.
pub fn interpolate(points: &[(i64, BigInt)]) -> RatPoly {
    let xs: Vec<i64> = points.iter().map(|(x, _)| *x).collect();
    let mut diffs: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    // divided differences in place
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            let dx = BigInt::from(xs[i] - xs[i - level]);
            assert!(!dx.is_zero(), "repeated interpolation point");
            let num = &diffs[i] - &diffs[i - 1];
            diffs[i] = num / BigRational::from_integer(dx);
        }
    }
    let mut poly = RatPoly::zero();
    let mut basis = RatPoly::constant(BigRational::one());
    for (i, d) in diffs.iter().enumerate() {
        poly = poly.add(&basis.scale(d));
        if i + 1 < diffs.len() {
            basis = basis.mul_linear(xs[i]);
        }
    }
    poly
}

/// Binomial coefficient C(m, k) as the falling-factorial polynomial value,
/// so C(m, k) = 0 for 0 ≤ m < k and the sign convention extends to m < 0.
pub fn binomial(m: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// d! as a big integer.
pub fn factorial(d: u64) -> BigInt {
    (1..=d).map(BigInt::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_binomial() {
        // C(t+3, 3) through five points
        let pts: Vec<(i64, BigInt)> = (0..5).map(|t| (t, binomial(t + 3, 3))).collect();
        let p = interpolate(&pts);
        assert_eq!(p.degree(), Some(3));
        for t in -4..10 {
            assert_eq!(p.eval_integer(t), binomial(t + 3, 3));
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
        assert_eq!(binomial(7, 0), BigInt::from(1));
    }

    #[test]
    fn display_is_readable() {
        let p = interpolate(&[
            (0, BigInt::from(1)),
            (1, BigInt::from(4)),
            (2, BigInt::from(9)),
        ]);
        assert_eq!(p.eval_integer(3), BigInt::from(16));
        assert_eq!(p.to_string(), "t^2 + 2*t + 1");
    }
}
