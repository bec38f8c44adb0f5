//! Exact integer-coefficient polynomial arithmetic.
//!
//! [`IntPoly`] is the universal value type for chromatic polynomials, falling
//! factorials, bound polynomials and their differences. Coefficients are
//! arbitrary-precision from the start; there is no floating point anywhere in
//! this module. Storage is dense (chromatic polynomials are dense and degrees
//! stay small).

mod roots;

pub use roots::{certify_nonneg_on_ray, leq_on_ray, NonnegCertificate, RayVerdict, RootInterval};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers.
///
/// `coeffs[i]` is the coefficient of `x^i`. The representation is normalized:
/// the highest stored coefficient is nonzero, and the zero polynomial stores
/// no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the stored degree).
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; fails with [`Error::NotDivisible`] if `self` is not a
    /// multiple of `divisor` over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::NotDivisible);
        }
        let lead = divisor.leading_coefficient().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            if !(&c % lead).is_zero() {
                return Err(Error::NotDivisible);
            }
            let q = &c / lead;
            let k = i - dd;
            quot[k] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = dc * &q;
                rem[k + j] -= t;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_int(&BigInt::from(x))
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Substitutes `x + a` for `x`, returning `p(x + a)`.
    pub fn taylor_shift(&self, a: &BigInt) -> IntPoly {
        let shift = IntPoly::from_coeffs(vec![a.clone(), BigInt::one()]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// `p(x - 1)`, the substitution used by the dominated-vertex identity.
    pub fn shift_down_one(&self) -> IntPoly {
        self.taylor_shift(&BigInt::from(-1))
    }

    /// Serializes coefficients as decimal strings, lowest degree first.
    pub fn to_dec_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_dec_strings(strings: &[String]) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad integer literal `{s}`")))?;
            coeffs.push(c);
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
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
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dec_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        IntPoly::from_dec_strings(&strings).map_err(D::Error::custom)
    }
}

/// The shifted falling factorial `(x - shift)(x - shift - 1) … (x - shift - k + 1)`.
///
/// `falling_factorial(k, 0)` is `(x)_k`; `k = 0` yields the constant 1.
pub fn falling_factorial(k: usize, shift: i64) -> IntPoly {
    let mut acc = IntPoly::one();
    for i in 0..k {
        let root = BigInt::from(shift) + BigInt::from(i as u64);
        acc = &acc * &IntPoly::from_coeffs(vec![-root, BigInt::one()]);
    }
    acc
}

/// The bound polynomial `(x-1)_{k-1} ((x-1)^{n-k+1} + (-1)^{n-k})`.
///
/// For `n = k` this reduces to `(x)_k`. Requires `n ≥ k ≥ 1`.
pub fn f_bound(n: usize, k: usize) -> Result<IntPoly> {
    if k < 1 || n < k {
        return Err(Error::InvalidParams(format!(
            "f_bound requires n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let head = falling_factorial(k - 1, 1);
    let x_minus_1 = IntPoly::from_i64_coeffs(&[-1, 1]);
    let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
    let tail = &x_minus_1.pow(n - k + 1) + &IntPoly::constant(sign);
    Ok(&head * &tail)
}

/// Parses a rational from `"p"` or `"p/q"` decimal notation.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParams(format!("bad rational literal `{s}`"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn add_cancels_inverse() {
        // x^2 + (-x^2) = 0
        assert!((&p(&[0, 0, 1]) + &p(&[0, 0, -1])).is_zero());
    }

    #[test]
    fn add_symmetric_cancellation() {
        // (x+1) + (x-1) = 2x
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
    }

    #[test]
    fn add_falling_factorial_two() {
        // (x)_2 + 2x = x^2 + x
        let lhs = &falling_factorial(2, 0) + &p(&[0, 2]);
        assert_eq!(lhs, p(&[0, 1, 1]));
    }

    #[test]
    fn mul_by_zero() {
        assert!((&p(&[3, -2, 7]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn mul_binomial_square() {
        // (x-1)(x-1) = x^2 - 2x + 1
        assert_eq!(&p(&[-1, 1]) * &p(&[-1, 1]), p(&[1, -2, 1]));
    }

    #[test]
    fn mul_fig2_product_expands() {
        // x(x-1)(x-2)^2(x^2-3x+4) = x^6 - 8x^5 + 27x^4 - 48x^3 + 44x^2 - 16x
        let prod = &(&(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]).pow(2)) * &p(&[4, -3, 1]);
        assert_eq!(prod, p(&[0, -16, 44, -48, 27, -8, 1]));
    }

    #[test]
    fn div_exact_falling_factorial() {
        // (x)_4 / (x(x-1)) = (x-2)(x-3)
        let num = falling_factorial(4, 0);
        let den = &p(&[0, 1]) * &p(&[-1, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), &p(&[-2, 1]) * &p(&[-3, 1]));
    }

    #[test]
    fn div_exact_unit() {
        let q = p(&[5, -4, 0, 2]);
        assert_eq!(q.div_exact(&IntPoly::one()).unwrap(), q);
    }

    #[test]
    fn div_exact_rejects_remainder() {
        // (x^2 - 1) / (x - 2) leaves remainder 3
        assert!(matches!(
            p(&[-1, 0, 1]).div_exact(&p(&[-2, 1])),
            Err(Error::NotDivisible)
        ));
    }

    #[test]
    fn eval_zero_poly() {
        let x = parse_rational("22/7").unwrap();
        assert!(IntPoly::zero().eval(&x).is_zero());
    }

    #[test]
    fn eval_falling_factorial_at_integers() {
        // (x)_4 at 4 is 4! = 24
        assert_eq!(falling_factorial(4, 0).eval_i64(4), BigInt::from(24));
    }

    #[test]
    fn eval_f_bound_examples() {
        // f_{5,4} at 4: 3*2*1*(9-1) = 48
        assert_eq!(f_bound(5, 4).unwrap().eval_i64(4), BigInt::from(48));
        // f_{7,4} at 4: (x-1)_3 ((x-1)^4 - 1) at 4 = 6 * 80 = 480
        assert_eq!(f_bound(7, 4).unwrap().eval_i64(4), BigInt::from(480));
    }

    #[test]
    fn falling_factorial_base_cases() {
        assert_eq!(falling_factorial(0, 0), IntPoly::one());
        // x(x-1)(x-2) = x^3 - 3x^2 + 2x
        assert_eq!(falling_factorial(3, 0), p(&[0, 2, -3, 1]));
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(falling_factorial(2, 1), p(&[2, -3, 1]));
    }

    #[test]
    fn falling_factorial_matches_quotient_of_factorials() {
        for k in 0..=12usize {
            let ff = falling_factorial(k, 0);
            for m in k as i64..=20 {
                let mut expect = BigInt::from(1);
                for i in 0..k as i64 {
                    expect *= BigInt::from(m - i);
                }
                assert_eq!(ff.eval_i64(m), expect, "k={k}, m={m}");
            }
        }
    }

    #[test]
    fn f_bound_at_n_equals_k_is_falling_factorial() {
        for k in 1..=8 {
            assert_eq!(f_bound(k, k).unwrap(), falling_factorial(k, 0), "k={k}");
        }
    }

    #[test]
    fn f_bound_5_4_explicit() {
        // (x-1)(x-2)(x-3) * ((x-1)^2 - 1)
        let head = falling_factorial(3, 1);
        let tail = &p(&[-1, 1]).pow(2) - &IntPoly::one();
        assert_eq!(f_bound(5, 4).unwrap(), &head * &tail);
    }

    #[test]
    fn f_bound_degree_and_leading_coefficient() {
        for k in 1..=9usize {
            for n in k..=k + 6 {
                let f = f_bound(n, k).unwrap();
                assert_eq!(f.degree(), Some(n), "n={n}, k={k}");
                assert_eq!(
                    f.leading_coefficient().unwrap(),
                    &BigInt::from(1),
                    "n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn f_bound_rejects_bad_params() {
        assert!(f_bound(3, 4).is_err());
        assert!(f_bound(4, 0).is_err());
    }

    #[test]
    fn taylor_shift_substitutes() {
        // p(x) = x^2 + 1; p(x - 1) = x^2 - 2x + 2
        let q = p(&[1, 0, 1]).taylor_shift(&BigInt::from(-1));
        assert_eq!(q, p(&[2, -2, 1]));
    }

    #[test]
    fn display_round_trips_signs() {
        assert_eq!(p(&[0, -16, 44, -48, 27, -8, 1]).to_string(), "x^6 - 8x^5 + 27x^4 - 48x^3 + 44x^2 - 16x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-3]).to_string(), "-3");
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let q = p(&[0, -16, 44, -48, 27, -8, 1]);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"["0","-16","44","-48","27","-8","1"]"#);
        let back: IntPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
    }
}
