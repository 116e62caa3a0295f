//! Scalar arithmetic shared by every other module: the generic [`Scalar`]
//! bound, binomials, rising factorials, half-integer Gamma ratios and the
//! `p/q` string forms of exact values.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::{Error, Gaussian, Integer, Rational, Result};

/// Commutative ring with unit that can be built from small integers.
///
/// Blanket-implemented for `f32`, `f64`, [`Rational`] and [`Gaussian`].
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar ring embeds the small integers")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `x^e` for a signed exponent; `x` must be nonzero when `e < 0`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `(-1)^e`.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeArgument { name: "n", value: n });
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    Ok(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Rational-valued binomial for use inside coefficient formulas.
pub(crate) fn binom_q(n: i64, k: i64) -> Result<Rational> {
    binomial(n, k).map(Rational::from_integer)
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer<T: Scalar>(a: &T, k: usize) -> T {
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + T::one();
    }
    acc
}

/// `n!!`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Integer {
    let mut acc = Integer::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// Offset `s` in `sqrt(pi) / Gamma(q + s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaOffset {
    Half,
    ThreeHalves,
}

impl GammaOffset {
    pub fn from_rational(s: &Rational) -> Result<Self> {
        if *s == ratio(1, 2) {
            Ok(Self::Half)
        } else if *s == ratio(3, 2) {
            Ok(Self::ThreeHalves)
        } else {
            Err(Error::UnsupportedGammaOffset(s.to_string()))
        }
    }
}

/// `sqrt(pi) / Gamma(q + offset)` as an exact rational.
///
/// `Gamma(q + 1/2) = sqrt(pi) (2q-1)!! / 2^q`, so the ratio is `2^q / (2q-1)!!`
/// for offset 1/2 and `2^(q+1) / (2q+1)!!` for offset 3/2.
pub fn gamma_half_ratio(q: usize, offset: GammaOffset) -> Rational {
    let q = q as i64;
    match offset {
        GammaOffset::Half => pow2(q) / Rational::from_integer(double_factorial(2 * q - 1)),
        GammaOffset::ThreeHalves => {
            pow2(q + 1) / Rational::from_integer(double_factorial(2 * q + 1))
        }
    }
}

/// Parses `p/q` or `p` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>().map_err(|e| Error::Parse {
        input: s.to_string(),
        reason: e.to_string(),
    })
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `re+im*i`, or `re-|im|*i` when the imaginary part is negative.
pub fn format_gaussian(z: &Gaussian) -> String {
    if z.im.is_negative() {
        format!("{}-{}*i", z.re, -z.im.clone())
    } else {
        format!("{}+{}*i", z.re, z.im)
    }
}

/// Inverse of [`format_gaussian`]; also accepts a bare rational or a bare `b*i`.
pub fn parse_gaussian(s: &str) -> Result<Gaussian> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let Some(body) = t.strip_suffix("*i") else {
        return Ok(Gaussian::new(parse_rational(&t)?, Rational::zero()));
    };
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        None => Ok(Gaussian::new(Rational::zero(), parse_rational(body)?)),
        Some(i) => {
            let re = parse_rational(&body[..i])?;
            let im_str = body[i..].trim_start_matches('+');
            if im_str.is_empty() || im_str == "-" {
                return Err(err("missing imaginary coefficient"));
            }
            Ok(Gaussian::new(re, parse_rational(im_str)?))
        }
    }
}

/// The rational value of `z` when its imaginary part vanishes.
pub fn as_rational(z: &Gaussian) -> Option<&Rational> {
    z.im.is_zero().then_some(&z.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binomial(4, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(3, 5).unwrap(), BigInt::from(0));
        assert_eq!(binomial(3, -1).unwrap(), BigInt::from(0));
        assert!(matches!(
            binomial(-1, 0),
            Err(Error::NegativeArgument { value: -1, .. })
        ));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60i64 {
            for k in 1..=n {
                let lhs = binomial(n, k).unwrap();
                let rhs = binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "C({n},{k})");
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&ratio(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-3), 2), int(6));
        assert_eq!(pochhammer(&ratio(1, 2), 3), ratio(15, 8));
        assert_eq!(pochhammer(&2.0f64, 3), 24.0);
    }

    #[test]
    fn pochhammer_step_and_vanishing() {
        let params = [int(-7), ratio(1, 2), ratio(-5, 3), int(4), ratio(-11, 2)];
        for a in &params {
            for k in 0..50usize {
                let next = pochhammer(a, k) * (a + int(k as i64));
                assert_eq!(pochhammer(a, k + 1), next);
            }
        }
        for m in 0..20i64 {
            for k in 0..30usize {
                let vanishes = pochhammer(&int(-m), k).is_zero();
                assert_eq!(vanishes, k as i64 > m, "(-{m})_{k}");
            }
        }
    }

    #[test]
    fn gamma_ratios() {
        assert_eq!(gamma_half_ratio(1, GammaOffset::Half), int(2));
        assert_eq!(gamma_half_ratio(2, GammaOffset::Half), ratio(4, 3));
        assert_eq!(gamma_half_ratio(0, GammaOffset::ThreeHalves), int(2));
        assert_eq!(gamma_half_ratio(0, GammaOffset::Half), int(1));
        assert!(GammaOffset::from_rational(&ratio(5, 2)).is_err());
        assert_eq!(
            GammaOffset::from_rational(&ratio(3, 2)).unwrap(),
            GammaOffset::ThreeHalves
        );
    }

    #[test]
    fn gamma_ratio_matches_float_gamma() {
        // Gamma(q + 1/2) by the duplication-free product (q - 1/2)(q - 3/2)...(1/2) sqrt(pi)
        for q in 0..12usize {
            let mut g = std::f64::consts::PI.sqrt();
            for i in 0..q {
                g *= i as f64 + 0.5;
            }
            let expect = std::f64::consts::PI.sqrt() / g;
            let got: f64 = num_traits::ToPrimitive::to_f64(&gamma_half_ratio(q, GammaOffset::Half))
                .unwrap();
            assert!((got - expect).abs() < 1e-12 * expect);
        }
    }

    #[test]
    fn string_forms() {
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(parse_rational(" -3/6 ").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0x").is_err());

        let z = Gaussian::new(ratio(1, 2), ratio(-3, 4));
        assert_eq!(format_gaussian(&z), "1/2-3/4*i");
        assert_eq!(parse_gaussian("1/2-3/4*i").unwrap(), z);
        assert_eq!(parse_gaussian("-2*i").unwrap(), Gaussian::new(int(0), int(-2)));
        assert_eq!(parse_gaussian("-1/3").unwrap(), Gaussian::new(ratio(-1, 3), int(0)));
        assert_eq!(format_gaussian(&Gaussian::new(int(0), int(1))), "0+1*i");
        assert_eq!(as_rational(&Gaussian::new(int(3), int(0))), Some(&int(3)));
        assert_eq!(as_rational(&Gaussian::new(int(3), int(1))), None);
    }

    #[test]
    fn canonical_form() {
        let r = ratio(10, -4);
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
        let zero = ratio(0, 7);
        assert_eq!(zero.denom(), &BigInt::from(1));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..500).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            let s = &a * &b - &c;
            prop_assert!(s.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
        }

        #[test]
        fn gaussian_string_round_trip(a in arb_rational(), b in arb_rational()) {
            let z = Gaussian::new(a, b);
            prop_assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
        }
    }
}
