//! Roots of `λ³ − 3rλ² + (3r²−1)λ − (r³−r+1)`.
//!
//! Substituting `λ = r + μ` turns the cubic into `μ³ − μ − 1`, so every root
//! is a root of the plain Padovan cubic shifted by `r`. Those are obtained
//! once, from Cardano's radicals.

use num_bigint::BigInt;

use super::hifloat::{HiComplex, HiFloat};
use crate::error::{Error, Result};
use crate::transform::recurrence_coefficients;

/// The real root of `x³ = x + 1`.
#[derive(Debug, Clone)]
pub struct PlasticConstant {
    pub value: HiFloat,
}

/// Cardano terms `u = ∛(1/2 + √(23/3)/6)` and `v = ∛(1/2 − √(23/3)/6)`.
fn cardano_terms() -> (HiFloat, HiFloat) {
    let half = HiFloat::ratio(1, 2);
    let s = &HiFloat::ratio(23, 3).sqrt() / &HiFloat::from_i64(6);
    ((&half + &s).cbrt(), (&half - &s).cbrt())
}

impl PlasticConstant {
    /// From the closed radical expression.
    pub fn radical() -> Self {
        let (u, v) = cardano_terms();
        PlasticConstant { value: &u + &v }
    }

    /// Newton's method on `x³ − x − 1` from `x = 4/3`, independent of the radicals.
    pub fn newton() -> Self {
        let mut x = HiFloat::ratio(4, 3);
        let one = HiFloat::one();
        let three = HiFloat::from_i64(3);
        for _ in 0..12 {
            let x2 = &x * &x;
            let f = &(&(&x2 * &x) - &x) - &one;
            let df = &(&three * &x2) - &one;
            x = &x - &(&f / &df);
        }
        PlasticConstant { value: x }
    }
}

#[derive(Debug, Clone)]
pub struct CubicRoots {
    pub r: u32,
    /// The real root `r + α`.
    pub lambda1: HiComplex,
    /// The complex pair, `lambda2` with positive imaginary part.
    pub lambda2: HiComplex,
    pub lambda3: HiComplex,
}

impl CubicRoots {
    pub fn all(&self) -> [&HiComplex; 3] {
        [&self.lambda1, &self.lambda2, &self.lambda3]
    }

    /// `|p(λ)|` for the characteristic polynomial `p`.
    pub fn residual(&self, lambda: &HiComplex) -> HiFloat {
        let [a, b, c] = recurrence_coefficients(self.r).map(|x| HiFloat::from_bigint(&x));
        let l2 = lambda * lambda;
        let l3 = &l2 * lambda;
        let value = &(&(&l3 - &l2.scale(&a)) + &lambda.scale(&b)) - &HiComplex::real(c);
        value.abs()
    }

    /// `(|Σλ − 3r|, |Πλ − (r³−r+1)| / (r³−r+1))`.
    pub fn vieta_errors(&self) -> (HiFloat, HiFloat) {
        let [a, _, c] = recurrence_coefficients(self.r).map(|x| HiFloat::from_bigint(&x));
        let sum = &(&self.lambda1 + &self.lambda2) + &self.lambda3;
        let product = &(&self.lambda1 * &self.lambda2) * &self.lambda3;
        let sum_err = (&sum - &HiComplex::real(a)).abs();
        let product_err = &(&product - &HiComplex::real(c.clone())).abs() / &c.abs();
        (sum_err, product_err)
    }

    /// The smallest pairwise distance between roots.
    pub fn min_separation(&self) -> HiFloat {
        let d12 = (&self.lambda1 - &self.lambda2).abs();
        let d13 = (&self.lambda1 - &self.lambda3).abs();
        let d23 = (&self.lambda2 - &self.lambda3).abs();
        let m = if d12 < d13 { d12 } else { d13 };
        if m < d23 {
            m
        } else {
            d23
        }
    }
}

pub fn char_roots(r: u32) -> CubicRoots {
    let (u, v) = cardano_terms();
    let shift = HiFloat::from_bigint(&BigInt::from(r));
    let real = &u + &v;
    let half_real = &real / &HiFloat::from_i64(-2);
    let imag = &(&HiFloat::from_i64(3).sqrt() / &HiFloat::from_i64(2)) * &(&u - &v);
    let re = &shift + &half_real;
    CubicRoots {
        r,
        lambda1: HiComplex::real(&shift + &real),
        lambda2: HiComplex::new(re.clone(), imag.clone()),
        lambda3: HiComplex::new(re, -imag),
    }
}

/// Roots with a distinctness guard.
pub fn distinct_roots(r: u32) -> Result<CubicRoots> {
    let roots = char_roots(r);
    if roots.min_separation() < HiFloat::ratio(1, 10).powi(15) {
        return Err(Error::DegenerateRoots(r));
    }
    Ok(roots)
}
