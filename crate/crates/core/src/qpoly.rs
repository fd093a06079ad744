//! Dense polynomials in `q` with arbitrary-precision nonnegative integer
//! coefficients, plus the q-analogs built from them: q-integers,
//! q-factorials, q-binomials and q-multinomials.
//!
//! Coefficients are `BigUint`: multinomial coefficients outgrow fixed-width
//! integers quickly, and a single wrapped coefficient would silently falsify
//! every identity checked downstream.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `q` with nonnegative integer coefficients.
///
/// `coeffs[i]` holds the coefficient of `q^i`. The representation is
/// canonical: the last stored coefficient is nonzero, and the zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigUint>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigUint::one()],
        }
    }

    /// The monomial `q^power`.
    pub fn monomial(power: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); power + 1];
        coeffs[power] = BigUint::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Convenience constructor from small coefficients.
    pub fn from_u64_coeffs(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> BigUint {
        self.coeffs.get(power).cloned().unwrap_or_else(BigUint::zero)
    }

    /// All coefficients in ascending power order, in canonical form.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &QPoly) -> QPoly {
        let (longer, shorter) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = longer.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&shorter.coeffs) {
            *c += s;
        }
        // No trimming needed: nonnegative terms cannot cancel.
        QPoly { coeffs }
    }

    /// Convolution product.
    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly { coeffs }
    }

    /// Multiplies by the monomial `q^power`.
    pub fn shift(&self, power: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); power];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Exact division within nonnegative-coefficient polynomials.
    ///
    /// Returns the quotient `c` with `divisor * c == self`, verifying along
    /// the way that the remainder is identically zero. Fails with
    /// [`Error::NonExactDivision`] if the division is not exact in this
    /// space (a nonzero remainder, or a quotient that would need a negative
    /// coefficient), and [`Error::DivisionByZero`] if `divisor` is zero.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::NonExactDivision);
        }
        let lead = divisor.coeffs.last().expect("divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let quot_len = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![BigUint::zero(); quot_len];
        for shift in (0..quot_len).rev() {
            let top = rem[shift + divisor.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let t = &top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let sub = &t * d;
                rem[shift + i] = rem[shift + i]
                    .checked_sub(&sub)
                    .ok_or(Error::NonExactDivision)?;
            }
            quot[shift] = t;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// The q-integer `[n] = 1 + q + ... + q^(n-1)`; `[0]` is zero.
    pub fn q_int(n: u64) -> Self {
        QPoly {
            coeffs: vec![BigUint::one(); n as usize],
        }
    }

    /// The q-factorial `[n]! = [1][2]...[n]`; `[0]!` is 1.
    pub fn q_factorial(n: u64) -> Self {
        let mut acc = QPoly::one();
        for i in 1..=n {
            acc = acc.mul(&QPoly::q_int(i));
        }
        acc
    }

    /// The Gaussian binomial coefficient `[a choose b]`, computed as
    /// `[a]! / ([b]! [a-b]!)` by exact division. Out-of-range `b` yields
    /// the zero polynomial, matching the combinatorial convention.
    pub fn q_binomial(a: u64, b: i64) -> Self {
        if b < 0 || b as u64 > a {
            return QPoly::zero();
        }
        let b = b as u64;
        let denom = QPoly::q_factorial(b).mul(&QPoly::q_factorial(a - b));
        QPoly::q_factorial(a)
            .exact_div(&denom)
            .expect("q-factorial quotient is a polynomial")
    }

    /// The q-multinomial coefficient `[total]! / ([p_1]! ... [p_k]!)`.
    ///
    /// Fails with [`Error::PartsMismatch`] if the parts do not sum to
    /// `total`.
    pub fn q_multinomial(total: u64, parts: &[u64]) -> Result<Self> {
        let parts_sum: u64 = parts.iter().sum();
        if parts_sum != total {
            return Err(Error::PartsMismatch { total, parts_sum });
        }
        let mut denom = QPoly::one();
        for &p in parts {
            denom = denom.mul(&QPoly::q_factorial(p));
        }
        Ok(QPoly::q_factorial(total)
            .exact_div(&denom)
            .expect("q-factorial quotient is a polynomial"))
    }

    /// Sum of all coefficients: the counting specialization `q = 1`.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        QPoly::add(self, rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        QPoly::mul(self, rhs)
    }
}

/// Sparse human form: `1 + q^2 + 2*q^3`, ascending powers, zero terms
/// omitted, `0` for the zero polynomial.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (power, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}*q")?,
                (_, true) => write!(f, "q^{power}")?,
                (_, false) => write!(f, "{c}*q^{power}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// JSON form: array of decimal coefficient strings, index = power.
/// Strings, not numbers, so big coefficients survive any JSON parser.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_str_radix(10))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = QPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of decimal coefficient strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<QPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<BigUint>()
                        .map_err(|_| serde::de::Error::custom("invalid decimal coefficient"))?;
                    coeffs.push(c);
                }
                Ok(QPoly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}
