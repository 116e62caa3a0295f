//! Terminating Gauss hypergeometric series with rational parameters.
//!
//! ```text
//! 2F1(a, b; c; z) = sum_{k=0}^{K} (a)_k (b)_k z^k / ((c)_k k!)
//! ```
//!
//! where `K` is the smallest `-a`, `-b` among the upper parameters that are
//! nonpositive integers.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{int, powi, ratio};
use crate::sequences::fibonacci_number;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergeom2F1 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub z: Rational,
}

/// `Some(m)` when `r = -m` for an integer `m >= 0`.
fn nonpositive_integer(r: &Rational) -> Option<usize> {
    (r.is_integer() && !r.is_positive()).then(|| (-r.to_integer()).to_usize().expect("parameter fits usize"))
}

impl Hypergeom2F1 {
    pub fn new(a: Rational, b: Rational, c: Rational, z: Rational) -> Self {
        Self { a, b, c, z }
    }

    /// Shorthand for integer upper/lower parameters.
    pub fn integers(a: i64, b: i64, c: i64, z: Rational) -> Self {
        Self::new(int(a), int(b), int(c), z)
    }

    /// Index of the last term that can be nonzero.
    pub fn termination_index(&self) -> Result<usize> {
        [&self.a, &self.b]
            .into_iter()
            .filter_map(nonpositive_integer)
            .min()
            .ok_or_else(|| Error::NonTerminating {
                a: self.a.to_string(),
                b: self.b.to_string(),
                c: self.c.to_string(),
                z: self.z.to_string(),
            })
    }

    /// Exact value of the terminating series.
    pub fn eval(&self) -> Result<Rational> {
        let last = self.termination_index()?;
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for k in 0..last {
            let kq = int(k as i64);
            let lower = &self.c + &kq;
            if lower.is_zero() {
                return Err(Error::ZeroDenominator {
                    c: self.c.to_string(),
                    k: k + 1,
                });
            }
            term = term * (&self.a + &kq) * (&self.b + &kq) * &self.z / (lower * int(k as i64 + 1));
            sum += &term;
        }
        Ok(sum)
    }

    /// Pfaff transformation
    /// `2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))`.
    ///
    /// Returns the prefactor `(1 - z)^(-a)` and the transformed series. `a`
    /// must be a nonpositive integer so the prefactor stays rational.
    pub fn pfaff(&self) -> Result<(Rational, Hypergeom2F1)> {
        let m = nonpositive_integer(&self.a).ok_or_else(|| Error::NonIntegerUpperParameter(self.a.to_string()))?;
        if self.z.is_one() {
            return Err(Error::UnitArgument);
        }
        let one_minus_z = Rational::one() - &self.z;
        let prefactor = powi(&one_minus_z, m as i64);
        let transformed = Hypergeom2F1 {
            a: self.a.clone(),
            b: &self.c - &self.b,
            c: self.c.clone(),
            z: &self.z / (&self.z - Rational::one()),
        };
        Ok((prefactor, transformed))
    }
}

impl fmt::Display for Hypergeom2F1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2F1({}, {}; {}; {})", self.a, self.b, self.c, self.z)
    }
}

pub fn eval_2f1(series: &Hypergeom2F1) -> Result<Rational> {
    series.eval()
}

/// Shorthand for `2F1(a, b; c; z)` with integer parameters.
pub(crate) fn f21(a: i64, b: i64, c: i64, z: &Rational) -> Result<Rational> {
    Hypergeom2F1::integers(a, b, c, z.clone()).eval()
}

/// The `d_{j,m} = 2F1(-m, -j+m-1; -j; -4)` family that appears in the
/// `U`-basis expansion and its recurrence.
pub fn d_series(j: i64, m: i64) -> Result<Rational> {
    f21(-m, -j + m - 1, -j, &int(-4))
}

/// Which hypergeometric representation of `F_n` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibonacciForm {
    /// `F_n = 2F1((1-n)/2, (2-n)/2; 1-n; -4)`
    ArgMinus4,
    /// `F_n = n / 2^(n-1) * 2F1((1-n)/2, (2-n)/2; 3/2; 5)`
    Arg5,
}

impl FibonacciForm {
    /// Series and rational prefactor for `F_n`.
    pub fn series(self, n: usize) -> Result<(Rational, Hypergeom2F1)> {
        if n == 0 {
            return Err(Error::OutOfRange { name: "n", value: n, min: 1 });
        }
        let n = n as i64;
        let a = ratio(1 - n, 2);
        let b = ratio(2 - n, 2);
        Ok(match self {
            Self::ArgMinus4 => (Rational::one(), Hypergeom2F1::new(a, b, int(1 - n), int(-4))),
            Self::Arg5 => (
                int(n) / crate::scalar::pow2(n - 1),
                Hypergeom2F1::new(a, b, ratio(3, 2), int(5)),
            ),
        })
    }
}

/// `F_n` evaluated through one of its hypergeometric representations.
pub fn fib_as_2f1(n: usize, form: FibonacciForm) -> Result<Rational> {
    let (prefactor, series) = form.series(n)?;
    Ok(prefactor * series.eval()?)
}

/// Cross-checks both representations against the integer recurrence.
pub fn fib_as_2f1_matches(n: usize) -> Result<bool> {
    let expect = Rational::from_integer(fibonacci_number(n));
    Ok(fib_as_2f1(n, FibonacciForm::ArgMinus4)? == expect && fib_as_2f1(n, FibonacciForm::Arg5)? == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(a: Rational, b: Rational, c: Rational, z: Rational) -> Hypergeom2F1 {
        Hypergeom2F1::new(a, b, c, z)
    }

    /// Independent oracle: sum every term of the defining series with fresh
    /// Pochhammer products, stopping once a numerator factor vanishes.
    fn brute(s: &Hypergeom2F1) -> Rational {
        let mut sum = Rational::zero();
        for k in 0..200usize {
            let num = crate::scalar::pochhammer(&s.a, k) * crate::scalar::pochhammer(&s.b, k);
            if num.is_zero() {
                break;
            }
            let den = crate::scalar::pochhammer(&s.c, k) * crate::scalar::pochhammer(&int(1), k);
            sum += num * powi(&s.z, k as i64) / den;
        }
        sum
    }

    #[test]
    fn eval_examples() {
        assert_eq!(h(int(0), int(7), ratio(1, 3), int(9)).eval().unwrap(), int(1));
        assert_eq!(h(int(-1), int(2), int(3), int(-4)).eval().unwrap(), ratio(11, 3));
        assert_eq!(h(int(-1), ratio(-1, 2), int(-2), int(-4)).eval().unwrap(), int(2));
    }

    #[test]
    fn eval_errors() {
        let non = h(ratio(1, 2), int(3), int(1), int(1));
        assert!(matches!(non.eval(), Err(Error::NonTerminating { .. })));
        let zero = h(int(-3), int(1), int(-1), int(2));
        assert!(matches!(zero.eval(), Err(Error::ZeroDenominator { k: 2, .. })));
    }

    #[test]
    fn termination_uses_smallest_index() {
        assert_eq!(h(int(-5), int(-2), int(1), int(1)).termination_index().unwrap(), 2);
        assert_eq!(h(int(3), int(-4), int(1), int(1)).termination_index().unwrap(), 4);
    }

    #[test]
    fn fibonacci_forms() {
        assert_eq!(fib_as_2f1(3, FibonacciForm::ArgMinus4).unwrap(), int(2));
        assert_eq!(fib_as_2f1(3, FibonacciForm::Arg5).unwrap(), int(2));
        assert_eq!(fib_as_2f1(1, FibonacciForm::Arg5).unwrap(), int(1));
        assert!(fib_as_2f1(0, FibonacciForm::Arg5).is_err());
        for n in 1..=100 {
            assert!(fib_as_2f1_matches(n).unwrap(), "n = {n}");
            let (_, s) = FibonacciForm::ArgMinus4.series(n).unwrap();
            assert_eq!(s.termination_index().unwrap(), (n - 1) / 2);
        }
    }

    #[test]
    fn pfaff_examples() {
        let (pre, t) = h(int(-1), int(2), int(3), int(-4)).pfaff().unwrap();
        assert_eq!(pre, int(5));
        assert_eq!(t, h(int(-1), int(1), int(3), ratio(4, 5)));
        assert_eq!(pre * t.eval().unwrap(), ratio(11, 3));

        let (pre, t) = h(int(0), ratio(2, 7), int(4), int(3)).pfaff().unwrap();
        assert_eq!(pre, int(1));
        assert_eq!(t.eval().unwrap(), int(1));

        let (pre, t) = h(int(-1), ratio(-1, 2), ratio(3, 2), int(5)).pfaff().unwrap();
        assert_eq!(pre, int(-4));
        assert_eq!(t, h(int(-1), int(2), ratio(3, 2), ratio(5, 4)));
        assert_eq!(pre * t.eval().unwrap(), ratio(8, 3));

        assert!(matches!(
            h(ratio(-1, 2), int(1), int(1), int(2)).pfaff(),
            Err(Error::NonIntegerUpperParameter(_))
        ));
        assert!(matches!(h(int(-2), int(1), int(1), int(1)).pfaff(), Err(Error::UnitArgument)));
    }

    fn arb_series() -> impl Strategy<Value = Hypergeom2F1> {
        (0i64..12, -15i64..15, 1i64..4, -20i64..20, 1i64..7, -9i64..9, 1i64..5).prop_map(
            |(m, bn, bd, cn, cd, zn, zd)| {
                // shift c off the nonpositive integers
                let c = ratio(cn, cd);
                let c = if c.is_integer() && c <= int(0) { c - ratio(1, 2) } else { c };
                h(int(-m), ratio(bn, bd), c, ratio(zn, zd))
            },
        )
    }

    proptest! {
        #[test]
        fn matches_brute_force(s in arb_series()) {
            prop_assert_eq!(s.eval().unwrap(), brute(&s));
        }

        #[test]
        fn symmetric_in_upper_parameters(s in arb_series()) {
            let swapped = h(s.b.clone(), s.a.clone(), s.c.clone(), s.z.clone());
            prop_assert_eq!(s.eval().unwrap(), swapped.eval().unwrap());
        }

        #[test]
        fn pfaff_round_trip(s in arb_series()) {
            prop_assume!(!s.z.is_one());
            let (pre, t) = s.pfaff().unwrap();
            prop_assert_eq!(pre * t.eval().unwrap(), s.eval().unwrap());
        }
    }
}
