//! Binary fixed-point arithmetic on `BigInt` with `BITS` fractional bits.
//!
//! Only used to place Gauss-Chebyshev nodes and evaluate integrands there:
//! monomial-basis polynomials of degree ~60 lose every digit to cancellation
//! in `f64`. Multiplication truncates toward zero so `p(-x) = -p(x)` holds
//! bit for bit for odd `p`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

pub(crate) const BITS: usize = 320;
const GUARD: usize = 32;

pub(crate) fn one() -> BigInt {
    BigInt::one() << BITS
}

/// `a * b` rounded toward zero.
pub(crate) fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    let p = a * b;
    if p.is_negative() {
        -((-p) >> BITS)
    } else {
        p >> BITS
    }
}

/// `r` rounded toward zero.
pub(crate) fn from_rational(r: &Rational) -> BigInt {
    (r.numer() << BITS) / r.denom()
}

pub(crate) fn to_f64(v: &BigInt) -> f64 {
    Rational::new(v.clone(), one())
        .to_f64()
        .expect("fixed-point value is finite")
}

/// `sum_k (-1)^k / ((2k+1) x^(2k+1))` at `BITS + GUARD` precision.
fn atan_inv(x: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << (BITS + GUARD)) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_even() {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// pi by Machin's formula.
pub(crate) fn pi() -> &'static BigInt {
    static PI: OnceLock<BigInt> = OnceLock::new();
    PI.get_or_init(|| (atan_inv(5) * 16 - atan_inv(239) * 4) >> GUARD)
}

/// `cos(num * pi / den)` for `0 <= num <= den`.
pub(crate) fn cos_pi_fraction(num: u64, den: u64) -> BigInt {
    assert!(den > 0 && num <= den, "angle outside [0, pi]");
    if 2 * num == den {
        return BigInt::zero();
    }
    if 2 * num > den {
        return -cos_pi_fraction(den - num, den);
    }
    let t = pi() * num / den;
    let t2 = mul(&t, &t);
    let mut term = one();
    let mut sum = one();
    let mut k = 1u64;
    while !term.is_zero() {
        term = -mul(&term, &t2) / ((2 * k - 1) * (2 * k));
        sum += &term;
        k += 1;
    }
    sum
}
