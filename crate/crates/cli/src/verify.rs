//! Sweep construction: suites resolve to identity ids, ids to job groups,
//! groups to parameter tuples run on the current rayon pool.

use std::collections::BTreeSet;

use fibcheb::connection::{connection_report, lemma_d_report};
use fibcheb::identities::{
    trig_report, trig_samples, verify_2f1_chain, verify_complex_identities, verify_cor_sum_t, verify_cor_sum_u,
    verify_derivative_corollaries, verify_fib_expressions, verify_fib_hypergeom, verify_laurent_identity,
    verify_pfaff_series,
};
use fibcheb::integrals::{quadrature_report, DmInterpretation, IntegralKind, IntegralOutcome};
use fibcheb::scalar::{int, ratio};
use fibcheb::{ConnectionDirection, IdentityId, IdentityReport};
use rayon::prelude::*;

use crate::CliError;

/// Named groups of identity ids accepted by `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorems,
    Sums,
    Hypergeom,
    Complex,
    Derivatives,
    Integrals,
    Quadrature,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Self::Theorems,
        Self::Sums,
        Self::Hypergeom,
        Self::Complex,
        Self::Derivatives,
        Self::Integrals,
        Self::Quadrature,
        Self::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Theorems => "theorems",
            Self::Sums => "sums",
            Self::Hypergeom => "hypergeom",
            Self::Complex => "complex",
            Self::Derivatives => "derivatives",
            Self::Integrals => "integrals",
            Self::Quadrature => "quadrature",
            Self::All => "all",
        }
    }

    pub fn ids(self) -> Vec<IdentityId> {
        use IdentityId::*;
        match self {
            Self::Theorems => vec![ThmTInF, ThmUInF, ThmFInT, ThmFInU, LemmaD],
            Self::Sums => vec![CorSumT, CorSumU, FibExprT, FibExprU],
            Self::Hypergeom => vec![FibHypergeomNeg4, FibHypergeomArg5, PfaffT, PfaffU, ChainNeg4T, ChainNeg4U, ChainArg5T, ChainArg5U],
            Self::Complex => vec![EqComplex1, EqComplex2, CorComplex1, CorComplex2, Laurent, Trig],
            Self::Derivatives => vec![DerivTSum, DerivUSum, DerivTFib, DerivUFib],
            Self::Integrals => vec![IntFT, IntFU, IntFF1, IntFF2],
            Self::Quadrature => vec![QuadFT, QuadFU, QuadFF1, QuadFF2],
            Self::All => IdentityId::ALL.to_vec(),
        }
    }
}

/// Expands suite names and raw identity ids into a set of id strings.
pub fn resolve_suites(tokens: &[String]) -> Result<BTreeSet<&'static str>, CliError> {
    let mut out = BTreeSet::new();
    for token in tokens {
        let token = token.trim();
        if let Some(s) = Suite::ALL.into_iter().find(|s| s.as_str() == token) {
            out.extend(s.ids().into_iter().map(IdentityId::as_str));
        } else if let Some(id) = IdentityId::ALL.iter().find(|id| id.as_str() == token) {
            out.insert(id.as_str());
        } else {
            let suites: Vec<_> = Suite::ALL.iter().map(|s| s.as_str()).collect();
            return Err(CliError::Config(format!(
                "unknown suite or identity id {token:?}; suites are {}",
                suites.join(", ")
            )));
        }
    }
    if out.is_empty() {
        return Err(CliError::Config("empty suite list".into()));
    }
    Ok(out)
}

/// Rational points of the Laurent check.
fn laurent_points() -> [fibcheb::Rational; 4] {
    [int(1), int(-2), ratio(1, 3), ratio(-5, 2)]
}

const TRIG_SAMPLES: usize = 9;

/// One unit of work: a verifier and its parameters.
#[derive(Debug, Clone)]
enum Job {
    Connection(ConnectionDirection, usize),
    Lemma(usize, usize),
    SumT(usize),
    SumU(usize),
    FibExpr(usize),
    FibHypergeom(usize),
    Pfaff(usize),
    Chain(usize),
    Complex(usize),
    Laurent(usize, usize),
    Trig(usize, usize),
    Derivative(usize, usize),
    Integral(IntegralKind, usize, usize, bool, bool),
}

impl Job {
    fn run(&self, dm: DmInterpretation) -> fibcheb::Result<Vec<IdentityReport>> {
        Ok(match *self {
            Job::Connection(d, j) => vec![connection_report(j, d)?],
            Job::Lemma(j, m) => vec![lemma_d_report(j, m)?],
            Job::SumT(j) => vec![verify_cor_sum_t(j)?],
            Job::SumU(j) => vec![verify_cor_sum_u(j)?],
            Job::FibExpr(j) => verify_fib_expressions(j)?,
            Job::FibHypergeom(n) => verify_fib_hypergeom(n)?,
            Job::Pfaff(j) => verify_pfaff_series(j)?,
            Job::Chain(j) => verify_2f1_chain(j)?,
            Job::Complex(n) => verify_complex_identities(n)?,
            Job::Laurent(j, p) => vec![verify_laurent_identity(j, &laurent_points()[p])?],
            Job::Trig(j, s) => vec![trig_report(j, trig_samples(TRIG_SAMPLES)[s])?],
            Job::Derivative(j, q) => verify_derivative_corollaries(j, q)?,
            Job::Integral(kind, j, k, exact, quad) => {
                let o = kind.evaluate(j, k, dm)?;
                let mut out = Vec::with_capacity(2);
                if quad {
                    out.push(quadrature_report(kind, j, k, &o.value)?);
                }
                if exact {
                    out.push(o.report);
                }
                out
            }
        })
    }
}

fn jobs(ids: &BTreeSet<&'static str>, jmax: usize, qmax: usize) -> Vec<Job> {
    let wants = |id: IdentityId| ids.contains(id.as_str());
    let any = |list: &[IdentityId]| list.iter().any(|&id| wants(id));
    let mut out = Vec::new();

    for (dir, id) in [
        (ConnectionDirection::TInF, IdentityId::ThmTInF),
        (ConnectionDirection::UInF, IdentityId::ThmUInF),
        (ConnectionDirection::FInT, IdentityId::ThmFInT),
        (ConnectionDirection::FInU, IdentityId::ThmFInU),
    ] {
        if wants(id) {
            out.extend((dir.min_j()..=jmax).map(|j| Job::Connection(dir, j)));
        }
    }
    if wants(IdentityId::LemmaD) {
        out.extend((2..=jmax).flat_map(|j| (1..=j / 2).map(move |m| Job::Lemma(j, m))));
    }
    if wants(IdentityId::CorSumT) {
        out.extend((1..=jmax).map(Job::SumT));
    }
    if wants(IdentityId::CorSumU) {
        out.extend((1..=jmax).map(Job::SumU));
    }
    if any(&[IdentityId::FibExprT, IdentityId::FibExprU]) {
        out.extend((0..=jmax).map(Job::FibExpr));
    }
    if any(&[IdentityId::FibHypergeomNeg4, IdentityId::FibHypergeomArg5]) {
        out.extend((1..=jmax + 1).map(Job::FibHypergeom));
    }
    if any(&[IdentityId::PfaffT, IdentityId::PfaffU]) {
        out.extend((0..=jmax).map(Job::Pfaff));
    }
    if any(&[IdentityId::ChainNeg4T, IdentityId::ChainNeg4U, IdentityId::ChainArg5T, IdentityId::ChainArg5U]) {
        out.extend((0..=jmax).map(Job::Chain));
    }
    if any(&[IdentityId::EqComplex1, IdentityId::EqComplex2, IdentityId::CorComplex1, IdentityId::CorComplex2]) {
        out.extend((0..=jmax).map(Job::Complex));
    }
    if wants(IdentityId::Laurent) {
        out.extend((0..=jmax).flat_map(|j| (0..laurent_points().len()).map(move |p| Job::Laurent(j, p))));
    }
    if wants(IdentityId::Trig) {
        out.extend((0..=jmax).flat_map(|j| (0..TRIG_SAMPLES).map(move |s| Job::Trig(j, s))));
    }
    if any(&[IdentityId::DerivTSum, IdentityId::DerivUSum, IdentityId::DerivTFib, IdentityId::DerivUFib]) {
        out.extend((0..=jmax).flat_map(|j| (1..=qmax).map(move |q| Job::Derivative(j, q))));
    }
    for kind in IntegralKind::ALL {
        let (exact, quad) = (wants(kind.identity_id()), wants(kind.quadrature_id()));
        if exact || quad {
            out.extend((0..=jmax).flat_map(|j| (0..=j).map(move |k| Job::Integral(kind, j, k, exact, quad))));
        }
    }
    out
}

/// Runs every job selected by `ids` on the current pool and returns the
/// matching reports in canonical order.
pub fn run_sweep(
    ids: &BTreeSet<&'static str>,
    jmax: usize,
    qmax: usize,
    dm: DmInterpretation,
) -> Result<Vec<IdentityReport>, CliError> {
    let batches = jobs(ids, jmax, qmax)
        .into_par_iter()
        .map(|job| job.run(dm))
        .collect::<fibcheb::Result<Vec<_>>>()?;
    let mut reports: Vec<IdentityReport> = batches
        .into_iter()
        .flatten()
        .filter(|r| ids.contains(r.id.as_str()))
        .collect();
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(reports)
}

#[derive(Debug, Clone)]
pub struct IntegralRow {
    pub kind: IntegralKind,
    pub j: usize,
    pub k: usize,
    pub outcome: IntegralOutcome,
    pub quadrature: Option<IdentityReport>,
}

pub fn run_integrals(
    kinds: &[IntegralKind],
    pairs: &[(usize, usize)],
    quadrature: bool,
    dm: DmInterpretation,
) -> Result<Vec<IntegralRow>, CliError> {
    let work: Vec<(IntegralKind, usize, usize)> = kinds
        .iter()
        .flat_map(|&kind| pairs.iter().map(move |&(j, k)| (kind, j, k)))
        .collect();
    let rows = work
        .into_par_iter()
        .map(|(kind, j, k)| {
            let outcome = kind.evaluate(j, k, dm)?;
            let quadrature = if quadrature {
                Some(quadrature_report(kind, j, k, &outcome.value)?)
            } else {
                None
            };
            Ok(IntegralRow {
                kind,
                j,
                k,
                outcome,
                quadrature,
            })
        })
        .collect::<fibcheb::Result<Vec<_>>>()?;
    Ok(rows)
}
