//! Dense univariate polynomials over a [`Scalar`] ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{format_rational, parse_rational};
use crate::{Rational, Scalar};

/// `coefficients[i]` is the coefficient of `x^i`. Trailing zeros are always
/// stripped, so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coefficients: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coefficients: Vec<T>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self { coefficients: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coefficients = vec![T::zero(); degree];
        coefficients.push(c);
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<T> {
        self.coefficients
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> T {
        self.coefficients.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial (degree -1 by convention).
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coefficients.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coefficients.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^by`.
    pub fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![T::zero(); by];
        coefficients.extend(self.coefficients.iter().cloned());
        Self { coefficients }
    }

    /// The `q`-th formal derivative `D^q p`.
    pub fn derivative(&self, q: usize) -> Self {
        if q == 0 {
            return self.clone();
        }
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(q)
            .map(|(i, c)| {
                let falling = ((i - q + 1)..=i).fold(T::one(), |acc, f| acc * T::from_int(f as i64));
                c.clone() * falling
            })
            .collect();
        Self::new(coefficients)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a point of an extension ring, e.g. a rational polynomial at
    /// a Gaussian rational.
    pub fn eval_in<S>(&self, x: &S) -> S
    where
        S: Scalar + From<T>,
    {
        self.coefficients
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + S::from(c.clone()))
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> Polynomial<S> {
        Polynomial::new(self.coefficients.iter().map(f).collect())
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        Polynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coefficients: self.coefficients.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Self) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }

        impl<T: Scalar> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

/// Ascending text form `c0 + c1*x + c2*x^2`, zero terms omitted.
impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON form: ascending array of `"p/q"` strings.
impl Serialize for Polynomial<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coefficients.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Polynomial<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coefficients = raw
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coefficients))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::{Gaussian, RationalPoly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 0, 1]) + &p(&[-1]), p(&[0, 0, 1]));
        assert_eq!(&p(&[0, 1]) * &p(&[1, 1]), p(&[0, 1, 1]));
        assert_eq!(
            p(&[1, 0, 1]).scale(&ratio(1, 2)),
            RationalPoly::new(vec![ratio(1, 2), int(0), ratio(1, 2)])
        );
        assert!((&p(&[3, 1]) - &p(&[3, 1])).is_zero());
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[1, 2, 0, 0]).coefficients().len(), 2);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 2, 0, 1]).derivative(1), p(&[2, 0, 3]));
        assert_eq!(p(&[1, 0, 1]).derivative(2), p(&[2]));
        assert!(p(&[1, 0, 1]).derivative(3).is_zero());
        assert_eq!(p(&[1, 0, 1]).derivative(0), p(&[1, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 0, 1]).eval(&int(1)), int(2));
        assert_eq!(p(&[1, 0, 1]).eval(&ratio(5, 4)), ratio(41, 16));
        let half_i = Gaussian::new(int(0), ratio(1, 2));
        assert_eq!(p(&[-1, 0, 4]).eval_in(&half_i), Gaussian::new(int(-2), int(0)));
        assert_eq!(Polynomial::new(vec![1.0, 0.0, 1.0]).eval(&0.5), 1.25);
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "-1 + 2*x^2");
        assert_eq!(RationalPoly::zero().to_string(), "0");
        let q = RationalPoly::new(vec![ratio(1, 2), int(0), ratio(-3, 4)]);
        assert_eq!(q.to_string(), "1/2 + -3/4*x^2");
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["1/2","0","-3/4"]"#);
        let back: RationalPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    fn arb_poly() -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..8)
            .prop_map(|v| RationalPoly::new(v.into_iter().map(|(a, b)| ratio(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn degree_is_additive(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative(1);
            let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), n in -9i64..9, d in 1i64..5) {
            let x = ratio(n, d);
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}
