//! Verification records shared by the identity and integral checkers.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::scalar::{format_gaussian, format_rational};
use crate::{Gaussian, Rational, RationalPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    /// The formula as printed holds exactly.
    Pass,
    /// Neither the printed nor the corrected formula holds.
    Fail,
    /// The printed formula fails but the correction derived from its parent
    /// expansion holds exactly.
    PaperErratum,
    /// The printed formula cannot be evaluated (undefined symbols).
    Unevaluable,
}

impl Status {
    pub const ALL: [Status; 4] = [Self::Pass, Self::Fail, Self::PaperErratum, Self::Unevaluable];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "Pass",
            Self::Fail => "Fail",
            Self::PaperErratum => "PaperErratum",
            Self::Unevaluable => "Unevaluable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! identity_ids {
    ($($variant:ident => $s:literal,)*) => {
        /// Stable identifiers used in reports and CLI filters.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(Self::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Self::$variant => $s,)*
                }
            }
        }
    };
}

identity_ids! {
    ThmTInF => "thm1-T-in-F",
    ThmUInF => "thm2-U-in-F",
    ThmFInT => "thm3-F-in-T",
    ThmFInU => "thm4-F-in-U",
    LemmaD => "lemma-d",
    CorSumT => "cor5.1-T",
    CorSumU => "cor5.1-U",
    FibExprT => "cor5.1-fib-T",
    FibExprU => "cor5.1-fib-U",
    FibHypergeomNeg4 => "fib-2f1-neg4",
    FibHypergeomArg5 => "fib-2f1-arg5",
    PfaffT => "pfaff-T-series",
    PfaffU => "pfaff-U-series",
    ChainNeg4T => "chain-neg4-T",
    ChainNeg4U => "chain-neg4-U",
    ChainArg5T => "chain-5-T",
    ChainArg5U => "chain-5-U",
    EqComplex1 => "eq-complex-1",
    EqComplex2 => "eq-complex-2",
    CorComplex1 => "cor5.1-complex-1",
    CorComplex2 => "cor5.1-complex-2",
    Laurent => "cor5.1-laurent",
    Trig => "cor5.1-trig",
    DerivTSum => "cor5.2-T-sum",
    DerivUSum => "cor5.2-U-sum",
    DerivTFib => "cor5.2-T-fib",
    DerivUFib => "cor5.2-U-fib",
    IntFT => "int-FT",
    IntFU => "int-FU",
    IntFF1 => "int-FF1",
    IntFF2 => "int-FF2",
    QuadFT => "quad-FT",
    QuadFU => "quad-FU",
    QuadFF1 => "quad-FF1",
    QuadFF2 => "quad-FF2",
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parameter tuple of one check. Field order is the sort order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn j(mut self, j: usize) -> Self {
        self.j = Some(j);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn q(mut self, q: usize) -> Self {
        self.q = Some(q);
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn point(mut self, point: impl Into<String>) -> Self {
        self.point = Some(point.into());
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("j", self.j), ("k", self.k), ("q", self.q), ("n", self.n), ("m", self.m)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(p) = &self.point {
            parts.push(format!("at={p}"));
        }
        f.write_str(&parts.join(", "))
    }
}

/// An exact or floating value appearing on one side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Rational(Rational),
    Gaussian(Gaussian),
    /// Coefficient of pi.
    Pi(Rational),
    Float(f64),
    Poly(RationalPoly),
}

impl Value {
    /// `self - other` when both sides have the same kind.
    pub fn minus(&self, other: &Value) -> Option<Value> {
        Some(match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a - b),
            (Value::Gaussian(a), Value::Gaussian(b)) => Value::Gaussian(a - b),
            (Value::Pi(a), Value::Pi(b)) => Value::Pi(a - b),
            (Value::Float(a), Value::Float(b)) => Value::Float(a - b),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a - b),
            _ => return None,
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Rational(r) | Value::Pi(r) => r.is_zero(),
            Value::Gaussian(z) => z.is_zero(),
            Value::Float(x) => *x == 0.0,
            Value::Poly(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => f.write_str(&format_rational(r)),
            Value::Gaussian(z) => f.write_str(&format_gaussian(z)),
            Value::Pi(r) => write!(f, "{} * pi", format_rational(r)),
            Value::Float(x) => write!(f, "{x:e}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Correction {
    /// What was changed relative to the printed formula.
    pub note: &'static str,
    pub rhs: Value,
    pub residual: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Params,
    pub status: Status,
    pub lhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub correction: Option<Correction>,
}

impl IdentityReport {
    /// Exact comparison of `lhs` against the printed `rhs`.
    pub fn compare(id: IdentityId, params: Params, lhs: Value, rhs: Value) -> Self {
        let residual = lhs.minus(&rhs).expect("both sides of an identity have the same kind");
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        Self {
            id,
            params,
            status,
            lhs,
            rhs: Some(rhs),
            residual: Some(residual),
            correction: None,
        }
    }

    /// Exact comparison with a fallback correction, consulted only when the
    /// printed form fails.
    pub fn compare_with_correction(
        id: IdentityId,
        params: Params,
        lhs: Value,
        rhs: Value,
        note: &'static str,
        corrected_rhs: impl FnOnce() -> Value,
    ) -> Self {
        let mut report = Self::compare(id, params, lhs, rhs);
        if report.status == Status::Fail {
            let corrected = corrected_rhs();
            let residual = report
                .lhs
                .minus(&corrected)
                .expect("corrected side has the same kind");
            if residual.is_zero() {
                report.status = Status::PaperErratum;
            }
            report.correction = Some(Correction {
                note,
                rhs: corrected,
                residual,
            });
        }
        report
    }

    /// A check whose printed side could not be evaluated.
    pub fn unevaluable(id: IdentityId, params: Params, lhs: Value) -> Self {
        Self {
            id,
            params,
            status: Status::Unevaluable,
            lhs,
            rhs: None,
            residual: None,
            correction: None,
        }
    }

    /// Deterministic report order: identity id, then parameters.
    pub fn sort_key(&self) -> (&'static str, &Params) {
        (self.id.as_str(), &self.params)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}: lhs = {}", self.id, self.params, self.status, self.lhs)?;
        if let Some(rhs) = &self.rhs {
            write!(f, ", rhs = {rhs}")?;
        }
        if let Some(r) = &self.residual {
            write!(f, ", residual = {r}")?;
        }
        if let Some(c) = &self.correction {
            write!(f, "; corrected ({}) rhs = {}, residual = {}", c.note, c.rhs, c.residual)?;
        }
        Ok(())
    }
}
