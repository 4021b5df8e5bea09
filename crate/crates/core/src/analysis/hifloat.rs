//! Fixed-precision real and complex floats for the Binet and ratio work.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, RoundingMode};
use num_bigint::{BigInt, Sign};

/// Working precision in bits (about 96 significant decimal digits).
pub const PRECISION: usize = 320;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Clone, Debug)]
pub struct HiFloat(BigFloat);

impl HiFloat {
    pub fn from_i64(x: i64) -> Self {
        HiFloat(BigFloat::from_i64(x, PRECISION))
    }

    pub fn from_f64(x: f64) -> Self {
        HiFloat(BigFloat::from_f64(x, PRECISION))
    }

    pub fn zero() -> Self {
        HiFloat::from_i64(0)
    }

    pub fn one() -> Self {
        HiFloat::from_i64(1)
    }

    /// `num / den`, correctly rounded.
    pub fn ratio(num: i64, den: i64) -> Self {
        &HiFloat::from_i64(num) / &HiFloat::from_i64(den)
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let (sign, digits) = x.to_u64_digits();
        let radix = BigFloat::from_u128(1u128 << 64, PRECISION);
        let magnitude = digits.iter().rev().fold(BigFloat::from_u64(0, PRECISION), |acc, &d| {
            acc.mul(&radix, PRECISION, RM)
                .add(&BigFloat::from_u64(d, PRECISION), PRECISION, RM)
        });
        let value = HiFloat(magnitude);
        if sign == Sign::Minus {
            -value
        } else {
            value
        }
    }

    pub fn sqrt(&self) -> Self {
        HiFloat(self.0.sqrt(PRECISION, RM))
    }

    pub fn cbrt(&self) -> Self {
        HiFloat(self.0.cbrt(PRECISION, RM))
    }

    pub fn abs(&self) -> Self {
        HiFloat(self.0.abs())
    }

    pub fn powi(&self, n: usize) -> Self {
        HiFloat(self.0.powi(n, PRECISION, RM))
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn max(&self, other: &HiFloat) -> HiFloat {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest `f64`, for display and coarse comparisons only.
    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Scientific notation truncated to `digits` significant digits.
    pub fn to_sci(&self, digits: usize) -> String {
        let full = self.to_string();
        let (mantissa, exponent) = full.split_once('e').unwrap_or((&full, "+0"));
        let (sign, mantissa) = match mantissa.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", mantissa),
        };
        let kept: String = mantissa.chars().take(digits + 1).collect();
        format!("{sign}{kept}e{exponent}")
    }
}

impl fmt::Display for HiFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl PartialEq for HiFloat {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for HiFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &HiFloat {
            type Output = HiFloat;

            fn $method(self, rhs: &HiFloat) -> HiFloat {
                HiFloat(self.0.$method(&rhs.0, PRECISION, RM))
            }
        }

        impl $trait for HiFloat {
            type Output = HiFloat;

            fn $method(self, rhs: HiFloat) -> HiFloat {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for HiFloat {
    type Output = HiFloat;

    fn neg(self) -> HiFloat {
        HiFloat(self.0.neg())
    }
}

impl Neg for &HiFloat {
    type Output = HiFloat;

    fn neg(self) -> HiFloat {
        HiFloat(self.0.clone().neg())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HiComplex {
    pub re: HiFloat,
    pub im: HiFloat,
}

impl HiComplex {
    pub fn new(re: HiFloat, im: HiFloat) -> Self {
        HiComplex { re, im }
    }

    pub fn real(re: HiFloat) -> Self {
        HiComplex { re, im: HiFloat::zero() }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        HiComplex::real(HiFloat::from_bigint(x))
    }

    pub fn conj(&self) -> Self {
        HiComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> HiFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> HiFloat {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, k: &HiFloat) -> Self {
        HiComplex::new(&self.re * k, &self.im * k)
    }

    pub fn powi(&self, mut n: u64) -> Self {
        let mut result = HiComplex::real(HiFloat::one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl Add for &HiComplex {
    type Output = HiComplex;

    fn add(self, rhs: &HiComplex) -> HiComplex {
        HiComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &HiComplex {
    type Output = HiComplex;

    fn sub(self, rhs: &HiComplex) -> HiComplex {
        HiComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &HiComplex {
    type Output = HiComplex;

    fn mul(self, rhs: &HiComplex) -> HiComplex {
        HiComplex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div for &HiComplex {
    type Output = HiComplex;

    fn div(self, rhs: &HiComplex) -> HiComplex {
        let den = rhs.norm_sqr();
        let num = self * &rhs.conj();
        HiComplex::new(&num.re / &den, &num.im / &den)
    }
}
