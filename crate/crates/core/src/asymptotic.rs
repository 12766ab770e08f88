//! The polynomials p_d^G that agree with E(G, m) on each residue class
//! gcd(Exp(G), m) = d.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::group::{GroupSpec, OrderProfile};

/// A polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticPolynomial {
    coefficients: Vec<BigRational>,
    divisor: u64,
}

impl AsymptoticPolynomial {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// The residue-class tag d.
    pub fn divisor(&self) -> u64 {
        self.divisor
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coefficients
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_integer(&self, m: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(m)))
    }
}

impl fmt::Display for AsymptoticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})x")?,
                _ => write!(f, "({a})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn rational(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn mul_linear(
    poly: &[BigRational],
    slope: &BigRational,
    intercept: &BigRational,
) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i] += c * intercept;
        out[i + 1] += c * slope;
    }
    out
}

/// f_t(x) = (x/t + k - 1)(x/t + k - 2)...(x/t + 1) / (k - 1)! with k = n/t,
/// which equals C(x/t + k - 1, x/t) whenever t divides x.
fn f_t(n: u64, t: u64) -> Vec<BigRational> {
    let k = n / t;
    let slope = BigRational::new(BigInt::one(), BigInt::from(t));
    let mut poly = vec![BigRational::one()];
    let mut factorial = BigUint::one();
    for j in 1..k {
        poly = mul_linear(&poly, &slope, &rational(j));
        factorial *= j;
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(factorial));
    poly.into_iter().map(|c| c * &scale).collect()
}

pub fn asymptotic_polynomial_from_profile(
    profile: &OrderProfile,
    d: u64,
) -> Result<AsymptoticPolynomial> {
    let exponent = profile.exponent();
    if d == 0 || !exponent.is_multiple_of(d) {
        return Err(Error::NotADivisor {
            divisor: d,
            exponent,
        });
    }
    let n = profile.order();
    let mut coefficients = vec![BigRational::zero(); n as usize];
    for t in divisors(d) {
        let phi = profile.get(t);
        if phi == 0 {
            continue;
        }
        for (i, c) in f_t(n, t).into_iter().enumerate() {
            coefficients[i] += c * rational(phi);
        }
    }
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
    for c in &mut coefficients {
        *c *= &inv_n;
    }
    Ok(AsymptoticPolynomial {
        coefficients,
        divisor: d,
    })
}

/// p_d^G for a divisor d of Exp(G).
pub fn asymptotic_polynomial(g: &GroupSpec, d: u64) -> Result<AsymptoticPolynomial> {
    asymptotic_polynomial_from_profile(&g.order_profile(), d)
}

/// 1 / n!
pub fn inverse_factorial(n: u64) -> BigRational {
    let f: BigUint = (1..=n).map(BigUint::from).product();
    BigRational::new(BigInt::one(), BigInt::from(f))
}

/// count * |G|! / m^(|G|-1), the normalized growth ratio that tends to 1.
pub fn growth_ratio(count: &BigUint, group_order: u64, m: u64) -> BigRational {
    let f: BigUint = (1..=group_order).map(BigUint::from).product();
    let denom = BigUint::from(m).pow(group_order.saturating_sub(1) as u32);
    BigRational::new(BigInt::from(count * f), BigInt::from(denom))
}
