//! Connection coefficients between the Fibonacci and Chebyshev families.
//!
//! [`expand`] evaluates the four closed-form expansions term by term, keeping
//! every prefactor where the formula puts it:
//!
//! ```text
//! T_j     = j   sum_m (-1)^m C(j-m, j-2m) 2^(j-2m-1)/(j-m) 2F1(-m, j-m; j-2m+2; -4) F_{j-2m+1}
//! U_j     = 2^j sum_m (-1)^(m+1) C(j, m) (-j+2m-1)/(j-m+1) 2F1(-m, -j+m-1; -j; -1/4) F_{j-2m+1}
//! F_{j+1} =     sum_m 1/c_{j-2m} C(j-m, j-2m) 2^(-j+2m+1) 2F1(-m, j-m+1; j-2m+1; -1/4) T_{j-2m}
//! F_{j+1} = 2^-j sum_m C(j, m) (j-2m+1)/(j-m+1) 2F1(-m, -j+m-1; -j; -4) U_{j-2m}
//! ```
//!
//! [`oracle_expand`] computes the same expansions with no reference to these
//! formulas, by peeling off leading terms against a degree-triangular basis.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::hypergeom::{d_series, f21};
use crate::report::{IdentityId, IdentityReport, Params, Value};
use crate::scalar::{binom_q, binomial, int, pow2, ratio, sign};
use crate::sequences::{c_normalizer, SequenceKind};
use crate::{Error, Rational, RationalPoly, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConnectionDirection {
    /// `T_j` in the Fibonacci basis.
    TInF,
    /// `U_j` in the Fibonacci basis.
    UInF,
    /// `F_{j+1}` in the `T` basis.
    FInT,
    /// `F_{j+1}` in the `U` basis.
    FInU,
}

impl ConnectionDirection {
    pub const ALL: [ConnectionDirection; 4] = [Self::TInF, Self::UInF, Self::FInT, Self::FInU];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::TInF => "t-in-f",
            Self::UInF => "u-in-f",
            Self::FInT => "f-in-t",
            Self::FInU => "f-in-u",
        }
    }

    pub fn source_kind(self) -> SequenceKind {
        match self {
            Self::TInF => SequenceKind::ChebyshevT,
            Self::UInF => SequenceKind::ChebyshevU,
            Self::FInT | Self::FInU => SequenceKind::FibonacciPoly,
        }
    }

    pub fn target_kind(self) -> SequenceKind {
        match self {
            Self::TInF | Self::UInF => SequenceKind::FibonacciPoly,
            Self::FInT => SequenceKind::ChebyshevT,
            Self::FInU => SequenceKind::ChebyshevU,
        }
    }

    /// Smallest `j` the formula is stated for.
    pub fn min_j(self) -> usize {
        match self {
            Self::TInF | Self::UInF => 1,
            Self::FInT | Self::FInU => 0,
        }
    }

    /// Index of the expanded polynomial: `T_j`, `U_j` or `F_{j+1}`.
    pub fn source_index(self, j: usize) -> usize {
        match self.source_kind() {
            SequenceKind::FibonacciPoly => j + 1,
            _ => j,
        }
    }
}

impl fmt::Display for ConnectionDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConnectionDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "expected one of t-in-f, u-in-f, f-in-t, f-in-u".into(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    /// Summation index of the formula.
    pub m: usize,
    /// Index of the target basis element (`F_{j-2m+1}`, `T_{j-2m}` or `U_{j-2m}`).
    pub target: usize,
    pub coefficient: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientExpansion {
    pub j: usize,
    pub direction: ConnectionDirection,
    /// Ordered by increasing `m`, i.e. decreasing target degree.
    pub terms: Vec<ExpansionTerm>,
}

impl CoefficientExpansion {
    pub fn source_polynomial(&self) -> RationalPoly {
        self.direction
            .source_kind()
            .polynomial(self.direction.source_index(self.j))
    }

    /// `sum coefficient * basis(target)`.
    pub fn reconstruct(&self) -> RationalPoly {
        let kind = self.direction.target_kind();
        self.terms.iter().fold(RationalPoly::zero(), |acc, t| {
            &acc + &kind.polynomial(t.target).scale(&t.coefficient)
        })
    }

    pub fn coefficient_of(&self, target: usize) -> Rational {
        self.terms
            .iter()
            .find(|t| t.target == target)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// `T_3`, `F_4`, ... for the given term.
    pub fn target_label(&self, term: &ExpansionTerm) -> String {
        format!("{}_{}", self.direction.target_kind().symbol(), term.target)
    }
}

/// Closed-form coefficient for summation index `m`, formula kept verbatim.
pub fn coefficient(direction: ConnectionDirection, j: usize, m: usize) -> Result<Rational> {
    let (j, m) = (j as i64, m as i64);
    Ok(match direction {
        ConnectionDirection::TInF => {
            int(j)
                * (sign(m) * binom_q(j - m, j - 2 * m)? * pow2(j - 2 * m - 1) / int(j - m)
                    * f21(-m, j - m, j - 2 * m + 2, &int(-4))?)
        }
        ConnectionDirection::UInF => {
            pow2(j)
                * (sign(m + 1) * binom_q(j, m)? * ratio(-j + 2 * m - 1, j - m + 1)
                    * f21(-m, -j + m - 1, -j, &ratio(-1, 4))?)
        }
        ConnectionDirection::FInT => {
            c_normalizer((j - 2 * m) as usize).recip()
                * binom_q(j - m, j - 2 * m)?
                * pow2(-j + 2 * m + 1)
                * f21(-m, j - m + 1, j - 2 * m + 1, &ratio(-1, 4))?
        }
        ConnectionDirection::FInU => {
            pow2(-j) * (binom_q(j, m)? * ratio(j - 2 * m + 1, j - m + 1) * d_series(j, m)?)
        }
    })
}

/// Connection coefficients of `T_j`, `U_j` or `F_{j+1}` in the target basis.
pub fn expand(j: usize, direction: ConnectionDirection) -> Result<CoefficientExpansion> {
    if j < direction.min_j() {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            min: direction.min_j(),
        });
    }
    let terms = (0..=j / 2)
        .map(|m| {
            let target = match direction.target_kind() {
                SequenceKind::FibonacciPoly => j - 2 * m + 1,
                _ => j - 2 * m,
            };
            Ok(ExpansionTerm {
                m,
                target,
                coefficient: coefficient(direction, j, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientExpansion { j, direction, terms })
}

/// Expansion of `p` in a degree-triangular basis by leading-term elimination.
///
/// Returns one `(index, coefficient)` pair for every basis element of degree
/// `0..=deg p`, in increasing degree, zeros included.
pub fn oracle_expand(p: &RationalPoly, basis: SequenceKind) -> Vec<(usize, Rational)> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); deg + 1];
    for d in (0..=deg).rev() {
        let c = rest.coefficient(d);
        if c.is_zero() {
            continue;
        }
        let element = basis.polynomial(basis.index_of_degree(d));
        let lead = element.leading_coefficient().expect("basis element is nonzero").clone();
        let scale = c / lead;
        rest = &rest - &element.scale(&scale);
        out[d] = scale;
    }
    debug_assert!(rest.is_zero());
    out.into_iter()
        .enumerate()
        .map(|(d, c)| (basis.index_of_degree(d), c))
        .collect()
}

/// True when the formula coefficients agree with [`oracle_expand`] everywhere,
/// including the zero coefficients on the opposite parity.
pub fn agrees_with_oracle(expansion: &CoefficientExpansion) -> bool {
    let oracle = oracle_expand(&expansion.source_polynomial(), expansion.direction.target_kind());
    oracle
        .iter()
        .all(|(index, c)| *c == expansion.coefficient_of(*index))
        && expansion
            .terms
            .iter()
            .all(|t| oracle.iter().any(|(i, _)| *i == t.target) || t.coefficient.is_zero())
}

/// Evaluates the linear relation between `d_{j-2,m-1}`, `d_{j-1,m-1}`,
/// `d_{j-1,m}` and `d_{j,m}` and reports whether it vanishes. Terms whose
/// binomial factor is zero are skipped without evaluating their series.
pub fn lemma_d_recurrence_check(j: i64, m: i64) -> Result<bool> {
    Ok(lemma_d_residual(j, m)?.is_zero())
}

/// Value of the linear relation checked by [`lemma_d_recurrence_check`].
pub fn lemma_d_residual(j: i64, m: i64) -> Result<Rational> {
    if j < 2 {
        return Err(Error::NegativeArgument { name: "j - 2", value: j - 2 });
    }
    let term = |n: i64, k: i64, factor: i64, jj: i64, mm: i64| -> Result<Rational> {
        let b = binomial(n, k)?;
        if b.is_zero() || factor == 0 {
            return Ok(Rational::zero());
        }
        Ok(Rational::from_integer(b) * int(factor) * d_series(jj, mm)?)
    };
    Ok(term(j - 2, m - 1, 4 * (j - 2 * m + 1) * (j - m + 1), j - 2, m - 1)?
        + term(j - 1, m - 1, (j - 2 * m + 2) * (j - m), j - 1, m - 1)?
        + term(j - 1, m, (j - 2 * m) * (j - m + 1), j - 1, m)?
        - term(j, m, (j - m) * (j - 2 * m + 1), j, m)?)
}

/// Report comparing the source polynomial with its reconstruction from the
/// formula coefficients.
pub fn connection_report(j: usize, direction: ConnectionDirection) -> Result<IdentityReport> {
    let e = expand(j, direction)?;
    let id = match direction {
        ConnectionDirection::TInF => IdentityId::ThmTInF,
        ConnectionDirection::UInF => IdentityId::ThmUInF,
        ConnectionDirection::FInT => IdentityId::ThmFInT,
        ConnectionDirection::FInU => IdentityId::ThmFInU,
    };
    Ok(IdentityReport::compare(id, Params::new().j(j), Value::Poly(e.source_polynomial()), Value::Poly(e.reconstruct())))
}

pub fn lemma_d_report(j: usize, m: usize) -> Result<IdentityReport> {
    let r = lemma_d_residual(j as i64, m as i64)?;
    Ok(IdentityReport::compare(IdentityId::LemmaD, Params::new().j(j).m(m), Value::Rational(r), Value::Rational(Rational::zero())))
}
