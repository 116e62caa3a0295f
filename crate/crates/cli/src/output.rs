//! Rendering of tables and reports. Rationals are always emitted as `p/q`
//! strings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use fibcheb::report::Value;
use fibcheb::scalar::format_rational;
use fibcheb::{CoefficientExpansion, IdentityReport, Status};
use serde::Serialize;

use crate::verify::IntegralRow;
use crate::{CliError, Format};

fn csv_string(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct TableRow {
    j: usize,
    m: usize,
    target: String,
    degree: usize,
    coefficient: String,
}

pub fn table(expansions: &[CoefficientExpansion], format: Format) -> Result<String, CliError> {
    let rows: Vec<TableRow> = expansions
        .iter()
        .flat_map(|e| {
            e.terms.iter().map(move |t| TableRow {
                j: e.j,
                m: t.m,
                target: e.target_label(t),
                degree: e.direction.target_kind().degree_of_index(t.target).unwrap_or(0),
                coefficient: format_rational(&t.coefficient),
            })
        })
        .collect();
    match format {
        Format::Json => json_string(&rows),
        Format::Csv => {
            let mut out = vec![vec!["j".into(), "m".into(), "target".into(), "coefficient".into()]];
            out.extend(
                rows.into_iter()
                    .map(|r| vec![r.j.to_string(), r.m.to_string(), r.target, r.coefficient]),
            );
            csv_string(out)
        }
        Format::Text => {
            let mut s = String::new();
            for e in expansions {
                let source = e.direction.source_kind();
                let terms: Vec<String> = e
                    .terms
                    .iter()
                    .map(|t| format!("({})*{}", format_rational(&t.coefficient), e.target_label(t)))
                    .collect();
                writeln!(
                    s,
                    "{}_{} = {}",
                    source.symbol(),
                    e.direction.source_index(e.j),
                    terms.join(" + ")
                )
                .expect("write to string");
            }
            Ok(s)
        }
    }
}

/// Configuration echoed in verification reports. Worker count is left out
/// so the report does not depend on it.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyHeader {
    pub suites: Vec<String>,
    pub jmax: usize,
    pub qmax: usize,
    pub interpret_dm: bool,
}

type Counts = BTreeMap<&'static str, usize>;

fn empty_counts() -> Counts {
    Status::ALL.iter().map(|s| (s.as_str(), 0)).collect()
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    config: &'a VerifyHeader,
    totals: Counts,
    summary: BTreeMap<&'static str, Counts>,
    /// Every record whose status is not Pass.
    records: Vec<&'a IdentityReport>,
}

fn value_cell(v: Option<&Value>) -> String {
    v.map(ToString::to_string).unwrap_or_default()
}

pub fn verify(
    header: &VerifyHeader,
    ids: &BTreeSet<&'static str>,
    reports: &[IdentityReport],
    format: Format,
) -> Result<String, CliError> {
    let mut summary: BTreeMap<&'static str, Counts> = ids.iter().map(|&id| (id, empty_counts())).collect();
    let mut totals = empty_counts();
    for r in reports {
        *summary.entry(r.id.as_str()).or_insert_with(empty_counts).get_mut(r.status.as_str()).expect("known status") += 1;
        *totals.get_mut(r.status.as_str()).expect("known status") += 1;
    }
    let notable: Vec<&IdentityReport> = reports.iter().filter(|r| r.status != Status::Pass).collect();

    match format {
        Format::Json => json_string(&VerifyJson {
            config: header,
            totals,
            summary,
            records: notable,
        }),
        Format::Csv => {
            let mut rows = vec![[
                "id",
                "j",
                "k",
                "q",
                "n",
                "m",
                "point",
                "status",
                "lhs",
                "rhs",
                "residual",
                "corrected_rhs",
                "corrected_residual",
            ]
            .map(String::from)
            .to_vec()];
            let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
            for r in reports {
                let p = &r.params;
                rows.push(vec![
                    r.id.as_str().to_string(),
                    opt(p.j),
                    opt(p.k),
                    opt(p.q),
                    opt(p.n),
                    opt(p.m),
                    p.point.clone().unwrap_or_default(),
                    r.status.to_string(),
                    r.lhs.to_string(),
                    value_cell(r.rhs.as_ref()),
                    value_cell(r.residual.as_ref()),
                    value_cell(r.correction.as_ref().map(|c| &c.rhs)),
                    value_cell(r.correction.as_ref().map(|c| &c.residual)),
                ]);
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut s = String::new();
            let w = ids.iter().map(|id| id.len()).max().unwrap_or(0);
            for (id, counts) in &summary {
                let cells: Vec<String> = Status::ALL
                    .iter()
                    .map(|st| format!("{}={}", st.as_str(), counts[st.as_str()]))
                    .collect();
                writeln!(s, "{id:<w$}  {}", cells.join("  ")).expect("write to string");
            }
            let cells: Vec<String> = Status::ALL
                .iter()
                .map(|st| format!("{}={}", st.as_str(), totals[st.as_str()]))
                .collect();
            writeln!(s, "{:<w$}  {}", "total", cells.join("  ")).expect("write to string");
            for r in notable {
                writeln!(s, "{r}").expect("write to string");
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct IntegralJson<'a> {
    kind: &'static str,
    j: usize,
    k: usize,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    printed: Option<String>,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    corrected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature: Option<&'a IdentityReport>,
}

pub fn integrals(rows: &[IntegralRow], format: Format) -> Result<String, CliError> {
    let corrected = |r: &IntegralRow| r.outcome.report.correction.as_ref().map(|c| c.rhs.to_string());
    match format {
        Format::Json => {
            let out: Vec<IntegralJson> = rows
                .iter()
                .map(|r| IntegralJson {
                    kind: r.kind.as_str(),
                    j: r.j,
                    k: r.k,
                    value: r.outcome.value.to_string(),
                    printed: r.outcome.printed.as_ref().map(ToString::to_string),
                    status: r.outcome.report.status,
                    corrected: corrected(r),
                    quadrature: r.quadrature.as_ref(),
                })
                .collect();
            json_string(&out)
        }
        Format::Csv => {
            let mut out = vec![[
                "kind",
                "j",
                "k",
                "value",
                "printed",
                "status",
                "corrected",
                "quadrature",
                "quadrature_status",
            ]
            .map(String::from)
            .to_vec()];
            for r in rows {
                out.push(vec![
                    r.kind.as_str().to_string(),
                    r.j.to_string(),
                    r.k.to_string(),
                    r.outcome.value.to_string(),
                    r.outcome.printed.as_ref().map(ToString::to_string).unwrap_or_default(),
                    r.outcome.report.status.to_string(),
                    corrected(r).unwrap_or_default(),
                    r.quadrature.as_ref().map(|q| q.lhs.to_string()).unwrap_or_default(),
                    r.quadrature.as_ref().map(|q| q.status.to_string()).unwrap_or_default(),
                ]);
            }
            csv_string(out)
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                write!(s, "{} j={} k={}: {} [{}]", r.kind.as_str(), r.j, r.k, r.outcome.value, r.outcome.report.status)
                    .expect("write to string");
                if let Some(p) = &r.outcome.printed {
                    if *p != r.outcome.value {
                        write!(s, " printed {p}").expect("write to string");
                    }
                }
                if let Some(q) = &r.quadrature {
                    write!(s, " quadrature {} [{}]", q.lhs, q.status).expect("write to string");
                }
                s.push('\n');
            }
            Ok(s)
        }
    }
}
