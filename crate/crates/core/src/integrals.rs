//! Chebyshev-weighted integrals over `(-1, 1)` as exact multiples of pi.
//!
//! Two exact routes compute `int p(x) w(x) dx`:
//!
//! * [`oracle_weighted_integral`] expands `p` in the orthogonal basis of the
//!   weight; only the constant basis element survives.
//! * [`moment_weighted_integral`] sums monomial moments
//!   `int x^(2n)/sqrt(1-x^2) = pi (2n-1)!!/(2n)!!` and
//!   `int x^(2n) sqrt(1-x^2) = pi (2n-1)!!/(2n+2)!!`.
//!
//! [`quadrature_check`] is a third, numerical route (Gauss-Chebyshev).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::connection::{coefficient, oracle_expand, ConnectionDirection};
use crate::fixed;
use crate::hypergeom::{d_series, Hypergeom2F1};
use crate::report::{IdentityId, IdentityReport, Params, Value};
use crate::scalar::{binom_q, double_factorial, format_rational, int, pow2, ratio};
use crate::sequences::{c_normalizer, chebyshev_t, chebyshev_u, fibonacci_poly, SequenceKind};
use crate::{Error, Rational, RationalPoly, Result, Status};

/// `coefficient * pi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiMultiple(pub Rational);

impl PiMultiple {
    pub fn zero() -> Self {
        Self(Rational::zero())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(&self.0 * c)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("finite") * std::f64::consts::PI
    }
}

impl Add for PiMultiple {
    type Output = PiMultiple;

    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Mul<&Rational> for PiMultiple {
    type Output = PiMultiple;

    fn mul(self, rhs: &Rational) -> Self {
        Self(self.0 * rhs)
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * pi", format_rational(&self.0))
    }
}

impl From<PiMultiple> for Value {
    fn from(p: PiMultiple) -> Self {
        Value::Pi(p.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChebyshevWeight {
    /// `1 / sqrt(1 - x^2)`
    FirstKind,
    /// `sqrt(1 - x^2)`
    SecondKind,
}

impl ChebyshevWeight {
    pub fn basis(self) -> SequenceKind {
        match self {
            Self::FirstKind => SequenceKind::ChebyshevT,
            Self::SecondKind => SequenceKind::ChebyshevU,
        }
    }
}

/// Integral through the orthogonal expansion of `p`.
pub fn oracle_weighted_integral(p: &RationalPoly, w: ChebyshevWeight) -> PiMultiple {
    let a0 = oracle_expand(p, w.basis())
        .into_iter()
        .next()
        .map(|(_, c)| c)
        .unwrap_or_else(Rational::zero);
    match w {
        // int T_0 / sqrt(1-x^2) = pi
        ChebyshevWeight::FirstKind => PiMultiple(a0),
        // int U_0 sqrt(1-x^2) = pi/2
        ChebyshevWeight::SecondKind => PiMultiple(a0 / int(2)),
    }
}

/// `int x^(2n) w(x) dx / pi`.
pub fn moment(n: usize, w: ChebyshevWeight) -> Rational {
    let n = n as i64;
    let odd = Rational::from_integer(double_factorial(2 * n - 1));
    match w {
        ChebyshevWeight::FirstKind => odd / Rational::from_integer(double_factorial(2 * n)),
        ChebyshevWeight::SecondKind => odd / Rational::from_integer(double_factorial(2 * n + 2)),
    }
}

/// Integral through monomial moments.
pub fn moment_weighted_integral(p: &RationalPoly, w: ChebyshevWeight) -> PiMultiple {
    let total = p
        .coefficients()
        .iter()
        .enumerate()
        .step_by(2)
        .fold(Rational::zero(), |acc, (i, c)| acc + c * moment(i / 2, w));
    PiMultiple(total)
}

type NodeTable = Mutex<HashMap<(ChebyshevWeight, usize), Arc<Vec<BigInt>>>>;

/// Fixed-point Gauss-Chebyshev nodes; mirrored nodes are exact negations.
fn nodes(w: ChebyshevWeight, count: usize) -> Arc<Vec<BigInt>> {
    static TABLE: OnceLock<NodeTable> = OnceLock::new();
    let table = TABLE.get_or_init(Default::default);
    if let Some(v) = table.lock().expect("node cache poisoned").get(&(w, count)) {
        return v.clone();
    }
    let n = count as u64;
    let v: Vec<BigInt> = (1..=n)
        .map(|i| match w {
            ChebyshevWeight::FirstKind => fixed::cos_pi_fraction(2 * i - 1, 2 * n),
            ChebyshevWeight::SecondKind => fixed::cos_pi_fraction(i, n + 1),
        })
        .collect();
    let v = Arc::new(v);
    table.lock().expect("node cache poisoned").insert((w, count), v.clone());
    v
}

/// Smallest node count for which Gauss-Chebyshev is exact on `p`.
pub fn required_nodes(p: &RationalPoly) -> usize {
    p.degree().map_or(1, |d| (d + 2) / 2)
}

/// Gauss-Chebyshev quadrature of `int p(x) w(x) dx`.
///
/// First kind: nodes `cos((2i-1) pi / 2n)`, weights `pi / n`. Second kind:
/// nodes `cos(i pi / (n+1))`, weights `pi/(n+1) (1 - x_i^2)`. Both are exact
/// for degree `<= 2n - 1`. Integrand values are accumulated in 320-bit fixed
/// point and only the final sum is rounded to `f64`.
pub fn quadrature_check(p: &RationalPoly, w: ChebyshevWeight, node_count: usize) -> Result<f64> {
    let required = required_nodes(p);
    if node_count < required {
        return Err(Error::InsufficientNodes {
            degree: p.degree().unwrap_or(0),
            given: node_count,
            required,
        });
    }
    let coeffs: Vec<BigInt> = p.coefficients().iter().map(fixed::from_rational).collect();
    let mut sum = BigInt::zero();
    for x in nodes(w, node_count).iter() {
        let value = coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| fixed::mul(&acc, x) + c);
        sum += match w {
            ChebyshevWeight::FirstKind => value,
            ChebyshevWeight::SecondKind => fixed::mul(&value, &(fixed::one() - fixed::mul(x, x))),
        };
    }
    let denom = match w {
        ChebyshevWeight::FirstKind => node_count,
        ChebyshevWeight::SecondKind => node_count + 1,
    };
    Ok(fixed::to_f64(&sum) / denom as f64 * std::f64::consts::PI)
}

/// Relative tolerance of the quadrature cross-check.
pub const QUADRATURE_TOLERANCE: f64 = 1e-9;

/// Below this the exact value counts as zero and the tolerance is absolute.
pub const QUADRATURE_ZERO_FLOOR: f64 = 1e-30;

pub fn quadrature_agrees(quadrature: f64, exact: &PiMultiple) -> bool {
    let e = exact.to_f64();
    (quadrature - e).abs() <= QUADRATURE_TOLERANCE * e.abs().max(QUADRATURE_ZERO_FLOOR)
}

/// The four integral families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntegralKind {
    /// `int F_{j+1} T_k / sqrt(1-x^2)`
    FibChebT,
    /// `int sqrt(1-x^2) F_{j+1} U_k`
    FibChebU,
    /// `int F_{j+1} F_{k+1} / sqrt(1-x^2)`
    FibFibFirst,
    /// `int sqrt(1-x^2) F_{j+1} F_{k+1}`
    FibFibSecond,
}

impl IntegralKind {
    pub const ALL: [IntegralKind; 4] = [Self::FibChebT, Self::FibChebU, Self::FibFibFirst, Self::FibFibSecond];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::FibChebT => "ft",
            Self::FibChebU => "fu",
            Self::FibFibFirst => "ff1",
            Self::FibFibSecond => "ff2",
        }
    }

    pub fn weight(self) -> ChebyshevWeight {
        match self {
            Self::FibChebT | Self::FibFibFirst => ChebyshevWeight::FirstKind,
            Self::FibChebU | Self::FibFibSecond => ChebyshevWeight::SecondKind,
        }
    }

    pub fn integrand(self, j: usize, k: usize) -> RationalPoly {
        let other = match self {
            Self::FibChebT => chebyshev_t(k),
            Self::FibChebU => chebyshev_u(k),
            Self::FibFibFirst | Self::FibFibSecond => fibonacci_poly(k + 1),
        };
        &fibonacci_poly(j + 1) * &other
    }

    pub fn identity_id(self) -> IdentityId {
        match self {
            Self::FibChebT => IdentityId::IntFT,
            Self::FibChebU => IdentityId::IntFU,
            Self::FibFibFirst => IdentityId::IntFF1,
            Self::FibFibSecond => IdentityId::IntFF2,
        }
    }

    pub fn quadrature_id(self) -> IdentityId {
        match self {
            Self::FibChebT => IdentityId::QuadFT,
            Self::FibChebU => IdentityId::QuadFU,
            Self::FibFibFirst => IdentityId::QuadFF1,
            Self::FibFibSecond => IdentityId::QuadFF2,
        }
    }

    pub fn evaluate(self, j: usize, k: usize, interpretation: DmInterpretation) -> Result<IntegralOutcome> {
        match self {
            Self::FibChebT => integral_fib_cheb_t(j, k),
            Self::FibChebU => integral_fib_cheb_u(j, k),
            Self::FibFibFirst => integral_fib_fib(j, k, ChebyshevWeight::FirstKind, interpretation),
            Self::FibFibSecond => integral_fib_fib(j, k, ChebyshevWeight::SecondKind, interpretation),
        }
    }
}

impl FromStr for IntegralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "expected one of ft, fu, ff1, ff2".into(),
        })
    }
}

/// Reading of the symbol `d_m` in the first-kind Fibonacci-product formula,
/// which is left undefined where the formula is stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DmInterpretation {
    /// Do not evaluate the printed formula.
    #[default]
    Undefined,
    /// `d_m = c_{j-2m}`, the only choice that reproduces the integral at `j = k`.
    Normalizer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegralOutcome {
    /// Exact value from the orthogonal-expansion oracle.
    pub value: PiMultiple,
    /// The printed closed form, when evaluable.
    pub printed: Option<PiMultiple>,
    pub report: IdentityReport,
}

fn check_order(name: &'static str, j: usize, k: usize) -> Result<()> {
    if j < k {
        Err(Error::IndexOrder { name, j, k })
    } else {
        Ok(())
    }
}

/// Oracle value, with the moment route as a built-in cross-check.
fn oracle(kind: IntegralKind, j: usize, k: usize) -> (PiMultiple, bool) {
    let p = kind.integrand(j, k);
    let by_expansion = oracle_weighted_integral(&p, kind.weight());
    let by_moments = moment_weighted_integral(&p, kind.weight());
    let agree = by_expansion == by_moments;
    (by_expansion, agree)
}

fn finish(
    kind: IntegralKind,
    j: usize,
    k: usize,
    value: PiMultiple,
    routes_agree: bool,
    printed: Option<PiMultiple>,
    correction: Option<(&'static str, PiMultiple)>,
) -> IntegralOutcome {
    let params = Params::new().j(j).k(k);
    let mut report = match (&printed, correction) {
        (None, _) => IdentityReport::unevaluable(kind.identity_id(), params, value.clone().into()),
        (Some(p), None) => IdentityReport::compare(kind.identity_id(), params, value.clone().into(), p.clone().into()),
        (Some(p), Some((note, fixed))) => IdentityReport::compare_with_correction(
            kind.identity_id(),
            params,
            value.clone().into(),
            p.clone().into(),
            note,
            || fixed.into(),
        ),
    };
    if !routes_agree {
        report.status = Status::Fail;
    }
    IntegralOutcome { value, printed, report }
}

/// `int F_{j+1} T_k / sqrt(1-x^2) dx` for `j >= k`.
///
/// Printed form: `pi C((j+k)/2, k) / (2^k c_k) 2F1((k-j)/2, (j+k+2)/2; k+1; -1/4)`
/// when `j + k` is even, else 0.
pub fn integral_fib_cheb_t(j: usize, k: usize) -> Result<IntegralOutcome> {
    check_order("integral_fib_cheb_t", j, k)?;
    let (value, agree) = oracle(IntegralKind::FibChebT, j, k);
    let printed = if (j + k) % 2 == 1 {
        PiMultiple::zero()
    } else {
        let (ji, ki) = (j as i64, k as i64);
        let series = Hypergeom2F1::new(ratio(ki - ji, 2), ratio(ji + ki + 2, 2), int(ki + 1), ratio(-1, 4)).eval()?;
        PiMultiple(binom_q((ji + ki) / 2, ki)? / (pow2(ki) * c_normalizer(k)) * series)
    };
    let corrected = printed.scale(&c_normalizer(k));
    Ok(finish(
        IntegralKind::FibChebT,
        j,
        k,
        value,
        agree,
        Some(printed),
        Some(("drop the 1/c_k factor", corrected)),
    ))
}

/// `int sqrt(1-x^2) F_{j+1} U_k dx` for `j >= k`.
///
/// Printed form: `pi C(j, (j-k)/2) (k+1) / (2^j (j+k+2)) 2F1((k-j)/2, -(j+k+2)/2; -j; -4)`
/// when `j + k` is even, else 0.
pub fn integral_fib_cheb_u(j: usize, k: usize) -> Result<IntegralOutcome> {
    check_order("integral_fib_cheb_u", j, k)?;
    let (value, agree) = oracle(IntegralKind::FibChebU, j, k);
    let printed = if (j + k) % 2 == 1 {
        PiMultiple::zero()
    } else {
        let (ji, ki) = (j as i64, k as i64);
        let series = Hypergeom2F1::new(ratio(ki - ji, 2), ratio(-(ji + ki + 2), 2), int(-ji), int(-4)).eval()?;
        PiMultiple(binom_q(ji, (ji - ki) / 2)? * int(ki + 1) / (pow2(ji) * int(ji + ki + 2)) * series)
    };
    Ok(finish(IntegralKind::FibChebU, j, k, value, agree, Some(printed), None))
}

/// `pi * sum_n a_n(j) a_n(k) ||B_n||^2 / pi` with `a` the basis coefficients of
/// `F_{j+1}` and `F_{k+1}`, pairing terms of equal Chebyshev degree.
fn aligned_product_sum(j: usize, k: usize, w: ChebyshevWeight) -> Result<PiMultiple> {
    if (j + k) % 2 == 1 {
        return Ok(PiMultiple::zero());
    }
    let direction = match w {
        ChebyshevWeight::FirstKind => ConnectionDirection::FInT,
        ChebyshevWeight::SecondKind => ConnectionDirection::FInU,
    };
    let shift = (j - k) / 2;
    let mut total = Rational::zero();
    for m in 0..=k / 2 {
        let n = k - 2 * m;
        let norm = match w {
            ChebyshevWeight::FirstKind => c_normalizer(n) / int(2),
            ChebyshevWeight::SecondKind => ratio(1, 2),
        };
        total += coefficient(direction, j, m + shift)? * coefficient(direction, k, m)? * norm;
    }
    Ok(PiMultiple(total))
}

fn tf_series(j: i64, m: i64) -> Result<Rational> {
    Hypergeom2F1::integers(-m, j - m + 1, j - 2 * m + 1, ratio(-1, 4)).eval()
}

/// `int F_{j+1} F_{k+1} w(x) dx` for `j >= k`.
///
/// The printed second-kind form sums a single index `m` over both factors,
/// which pairs equal Chebyshev degrees only when `j = k`; its correction pairs
/// terms by degree. The printed first-kind form is evaluated only under
/// [`DmInterpretation::Normalizer`].
pub fn integral_fib_fib(j: usize, k: usize, w: ChebyshevWeight, interpretation: DmInterpretation) -> Result<IntegralOutcome> {
    check_order("integral_fib_fib", j, k)?;
    let kind = match w {
        ChebyshevWeight::FirstKind => IntegralKind::FibFibFirst,
        ChebyshevWeight::SecondKind => IntegralKind::FibFibSecond,
    };
    let (value, agree) = oracle(kind, j, k);
    let (ji, ki) = (j as i64, k as i64);
    let printed = match (w, interpretation) {
        (ChebyshevWeight::FirstKind, DmInterpretation::Undefined) => None,
        (ChebyshevWeight::FirstKind, DmInterpretation::Normalizer) => {
            let mut s = Rational::zero();
            for m in 0..=ki / 2 {
                let d_m = c_normalizer((ji - 2 * m) as usize);
                s += pow2(4 * m) * d_m * binom_q(ji - m, ji - 2 * m)? * binom_q(ki - m, ki - 2 * m)?
                    / (c_normalizer((ki - 2 * m) as usize) * c_normalizer((ji - 2 * m) as usize))
                    * tf_series(ki, m)?
                    * tf_series(ji, m)?;
            }
            Some(PiMultiple(s / pow2(ki + ji - 1)))
        }
        (ChebyshevWeight::SecondKind, _) => {
            let mut s = Rational::zero();
            for m in 0..=ki / 2 {
                s += binom_q(ji, m)? * binom_q(ki, m)? * int((ki - 2 * m + 1) * (ji - 2 * m + 1))
                    / int((ki - m + 1) * (ji - m + 1))
                    * d_series(ki, m)?
                    * d_series(ji, m)?;
            }
            Some(PiMultiple(s / pow2(ki + ji + 1)))
        }
    };
    let corrected = match printed {
        Some(_) => Some(("pair terms of equal Chebyshev degree", aligned_product_sum(j, k, w)?)),
        None => None,
    };
    Ok(finish(kind, j, k, value, agree, printed, corrected))
}

/// Quadrature cross-check of one integral as a report (float values).
pub fn quadrature_report(kind: IntegralKind, j: usize, k: usize, exact: &PiMultiple) -> Result<IdentityReport> {
    let p = kind.integrand(j, k);
    let q = quadrature_check(&p, kind.weight(), required_nodes(&p))?;
    let e = exact.to_f64();
    Ok(IdentityReport {
        id: kind.quadrature_id(),
        params: Params::new().j(j).k(k),
        status: if quadrature_agrees(q, exact) { Status::Pass } else { Status::Fail },
        lhs: Value::Float(q),
        rhs: Some(Value::Float(e)),
        residual: Some(Value::Float(q - e)),
        correction: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_weighted_integral(&p(&[1]), ChebyshevWeight::FirstKind), PiMultiple(int(1)));
        assert_eq!(oracle_weighted_integral(&p(&[1, 0, 1]), ChebyshevWeight::FirstKind), PiMultiple(ratio(3, 2)));
        assert_eq!(oracle_weighted_integral(&p(&[1, 0, 1]), ChebyshevWeight::SecondKind), PiMultiple(ratio(5, 8)));
        assert_eq!(oracle_weighted_integral(&p(&[0, 3, 0, -2]), ChebyshevWeight::SecondKind), PiMultiple::zero());
        assert_eq!(oracle_weighted_integral(&RationalPoly::zero(), ChebyshevWeight::FirstKind), PiMultiple::zero());
    }

    #[test]
    fn moments() {
        assert_eq!(moment(0, ChebyshevWeight::FirstKind), int(1));
        assert_eq!(moment(1, ChebyshevWeight::FirstKind), ratio(1, 2));
        assert_eq!(moment(0, ChebyshevWeight::SecondKind), ratio(1, 2));
        assert_eq!(moment(2, ChebyshevWeight::SecondKind), ratio(1, 16));
    }

    #[test]
    fn fib_cheb_t_examples() {
        let o = integral_fib_cheb_t(2, 1).unwrap();
        assert_eq!(o.value, PiMultiple::zero());
        assert_eq!(o.report.status, Status::Pass);

        let o = integral_fib_cheb_t(2, 2).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(1, 4)));
        assert_eq!(o.report.status, Status::Pass);

        let o = integral_fib_cheb_t(2, 0).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(3, 2)));
        assert_eq!(o.printed, Some(PiMultiple(ratio(3, 4))));
        assert_eq!(o.report.status, Status::PaperErratum);

        assert!(matches!(integral_fib_cheb_t(1, 2), Err(Error::IndexOrder { .. })));
    }

    #[test]
    fn fib_cheb_u_examples() {
        let o = integral_fib_cheb_u(2, 0).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(5, 8)));
        assert_eq!(o.report.status, Status::Pass);
        assert_eq!(integral_fib_cheb_u(3, 1).unwrap().report.status, Status::Pass);
        let o = integral_fib_cheb_u(3, 2).unwrap();
        assert_eq!((o.value, o.report.status), (PiMultiple::zero(), Status::Pass));
    }

    #[test]
    fn fib_fib_examples() {
        let o = integral_fib_fib(2, 2, ChebyshevWeight::SecondKind, DmInterpretation::Undefined).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(13, 16)));
        assert_eq!(o.report.status, Status::Pass);

        let o = integral_fib_fib(1, 1, ChebyshevWeight::FirstKind, DmInterpretation::Undefined).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(1, 2)));
        assert_eq!(o.report.status, Status::Unevaluable);

        let o = integral_fib_fib(2, 0, ChebyshevWeight::SecondKind, DmInterpretation::Undefined).unwrap();
        assert_eq!(o.value, PiMultiple(ratio(5, 8)));

        for j in 0..=8 {
            let o = integral_fib_fib(j, j, ChebyshevWeight::FirstKind, DmInterpretation::Normalizer).unwrap();
            assert_eq!(o.report.status, Status::Pass, "{}", o.report);
        }
    }

    #[test]
    fn quadrature_examples() {
        let q = quadrature_check(&p(&[1, 0, 1]), ChebyshevWeight::FirstKind, 4).unwrap();
        assert!((q - 1.5 * std::f64::consts::PI).abs() < 1e-12);
        let q = quadrature_check(&p(&[1]), ChebyshevWeight::FirstKind, 1).unwrap();
        assert!((q - std::f64::consts::PI).abs() < 1e-15);
        let q = quadrature_check(&p(&[0, 0, 0, 0, 1]), ChebyshevWeight::SecondKind, 4).unwrap();
        assert!((q - std::f64::consts::PI / 16.0).abs() < 1e-15);
        assert!(matches!(
            quadrature_check(&p(&[0, 0, 0, 0, 1]), ChebyshevWeight::SecondKind, 2),
            Err(Error::InsufficientNodes { required: 3, .. })
        ));
        let odd = quadrature_check(&p(&[0, 5, 0, -7, 0, 3]), ChebyshevWeight::FirstKind, 5).unwrap();
        assert_eq!(odd, 0.0);
    }

    #[test]
    fn kind_strings() {
        for k in IntegralKind::ALL {
            assert_eq!(k.as_str().parse::<IntegralKind>().unwrap(), k);
        }
    }
}
