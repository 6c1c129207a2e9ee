//! Executes a query record and gathers the printable report.

use std::time::Instant;

use kostant_core::lattice::{from_fundamental, to_fundamental};
use kostant_core::reference::{kostant_partition_bruteforce, multiplicity_freudenthal, tensor_bruteforce_lr};
use kostant_core::rep::{coefficient_strings, RayFit};
use kostant_core::{
    kostant_partition, multiplicity, multiplicity_polynomial, tensor_polynomial, tensor_product, BigCount, BigInt,
    BigRational, RationalVector,
};
use serde::Serialize;

use crate::error::CliError;
use crate::query::{Basis, Command, QueryRecord};

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub name: &'static str,
    /// `agree`, `disagree` or `outside_domain`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl OracleReport {
    pub fn disagrees(&self) -> bool {
        self.verdict == "disagree"
    }

    fn compare(name: &'static str, ours: &str, oracle: kostant_core::Result<String>) -> Self {
        match oracle {
            Ok(value) => {
                let verdict = if value == ours { "agree" } else { "disagree" };
                Self { name, verdict, value: Some(value), reason: None }
            }
            Err(e @ kostant_core::Error::OutsideOracleDomain(_)) => {
                Self { name, verdict: "outside_domain", value: None, reason: Some(e.to_string()) }
            }
            Err(e) => Self { name, verdict: "disagree", value: None, reason: Some(e.to_string()) },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Command,
    /// Decimal count, converted vector, or rendered polynomial; `null` when a
    /// ray has no consistent polynomial.
    pub value: Option<String>,
    /// Polynomial coefficients in increasing degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Raw `(N, value)` samples when the polynomial fit failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<[String; 2]>>,
    pub time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl Report {
    fn new(command: Command, value: String) -> Self {
        Self { command, value: Some(value), coefficients: None, message: None, samples: None, time_ms: 0.0, oracle: None }
    }

    /// Plain-text rendering: the value first, then optional details.
    pub fn to_text(&self, timing: bool) -> String {
        let mut lines = Vec::new();
        match &self.value {
            Some(v) => lines.push(v.clone()),
            None => lines.push(self.message.clone().unwrap_or_default()),
        }
        if let Some(c) = &self.coefficients {
            lines.push(format!("coefficients: {}", c.join(",")));
        }
        if let Some(samples) = &self.samples {
            for [n, v] in samples {
                lines.push(format!("N={n}: {v}"));
            }
        }
        if let Some(o) = &self.oracle {
            let mut line = format!("oracle ({}): {}", o.name, o.verdict);
            if let Some(v) = &o.value {
                line += &format!(", value {v}");
            }
            if let Some(r) = &o.reason {
                line += &format!(", {r}");
            }
            lines.push(line);
        }
        if timing {
            lines.push(format!("time_ms: {:.3}", self.time_ms));
        }
        lines.join("\n")
    }
}

fn join_all(v: &[BigRational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn join(v: &RationalVector) -> String {
    join_all(v.entries())
}

fn polynomial_report(command: Command, fit: RayFit) -> Report {
    match fit {
        RayFit::Polynomial(p) => {
            let mut report = Report::new(command, p.to_string());
            report.coefficients = Some(coefficient_strings(&p));
            report
        }
        RayFit::Inconsistent { values } => Report {
            value: None,
            message: Some(RayFit::INCONSISTENT_MESSAGE.to_string()),
            samples: Some(values.iter().map(|(n, v)| [n.to_string(), v.to_string()]).collect()),
            ..Report::new(command, String::new())
        },
    }
}

/// Checks a fitted polynomial against the oracle at its sample points, stopping
/// at the first point outside the oracle's domain.
fn polynomial_oracle<F>(name: &'static str, fit: &RayFit, mut oracle: F) -> OracleReport
where
    F: FnMut(&BigInt) -> kostant_core::Result<BigCount>,
{
    let Some(p) = fit.polynomial() else {
        return OracleReport { name, verdict: "outside_domain", value: None, reason: Some("no polynomial to check".into()) };
    };
    let mut checked = 0;
    for n in p.sample_points().iter().chain(p.verified_points()) {
        match oracle(n) {
            Ok(v) if p.eval(n) == BigRational::from_integer(v.to_bigint()) => checked += 1,
            Ok(v) => {
                return OracleReport {
                    name,
                    verdict: "disagree",
                    value: Some(v.to_string()),
                    reason: Some(format!("at N={n}")),
                }
            }
            Err(kostant_core::Error::OutsideOracleDomain(_)) => break,
            Err(e) => return OracleReport { name, verdict: "disagree", value: None, reason: Some(e.to_string()) },
        }
    }
    if checked == 0 {
        OracleReport { name, verdict: "outside_domain", value: None, reason: Some("N=1 is outside the oracle domain".into()) }
    } else {
        OracleReport { name, verdict: "agree", value: None, reason: Some(format!("checked N=1..{checked}")) }
    }
}

pub fn run(record: &QueryRecord) -> Result<Report, CliError> {
    record.check_fields()?;
    let start = Instant::now();
    let report = match record.command {
        Command::Mult => {
            let q = record.multiplicity_query()?;
            let value = multiplicity(&q)?.to_string();
            let mut report = Report::new(record.command, value.clone());
            report.time_ms = elapsed_ms(start);
            if record.oracle {
                let oracle = multiplicity_freudenthal(q.lambda(), q.mu()).map(|v| v.to_string());
                report.oracle = Some(OracleReport::compare("freudenthal", &value, oracle));
            }
            report
        }
        Command::Tensor => {
            let q = record.tensor_query()?;
            let value = tensor_product(&q)?.to_string();
            let mut report = Report::new(record.command, value.clone());
            report.time_ms = elapsed_ms(start);
            if record.oracle {
                let oracle = tensor_bruteforce_lr(q.lambda(), q.mu(), q.nu()).map(|v| v.to_string());
                report.oracle = Some(OracleReport::compare("littlewood_richardson", &value, oracle));
            }
            report
        }
        Command::Kostant => {
            let a = record.vector_in(record.basis)?;
            let value = kostant_partition(&a)?.to_string();
            let mut report = Report::new(record.command, value.clone());
            report.time_ms = elapsed_ms(start);
            if record.oracle {
                let oracle = kostant_partition_bruteforce(&a).map(|v| v.to_string());
                report.oracle = Some(OracleReport::compare("partition_count", &value, oracle));
            }
            report
        }
        Command::Convert => {
            let to = record.to.ok_or(CliError::MissingField("to"))?;
            let (value, round_trip) = match to {
                Basis::Fundamental => {
                    let v = record.vector_in(Basis::Canonical)?;
                    let c = to_fundamental(&v);
                    // Canonical inputs come back centred.
                    let check = (join(&from_fundamental(&c)), join(&v.centered()));
                    (join_all(c.coords()), check)
                }
                Basis::Canonical => {
                    let v = record.vector_in(Basis::Fundamental)?;
                    let c = to_fundamental(&v);
                    (join(&v), (join_all(c.coords()), join_all(record.vector.as_deref().unwrap_or_default())))
                }
            };
            let mut report = Report::new(record.command, value);
            report.time_ms = elapsed_ms(start);
            if record.oracle {
                report.oracle = Some(OracleReport::compare("round_trip", &round_trip.0, Ok(round_trip.1)));
            }
            report
        }
        Command::PolyMult => {
            let q = record.multiplicity_query()?;
            let fit = multiplicity_polynomial(&q)?;
            let time_ms = elapsed_ms(start);
            let oracle = record.oracle.then(|| {
                polynomial_oracle("freudenthal", &fit, |n| {
                    let s = q.scaled(n);
                    multiplicity_freudenthal(s.lambda(), s.mu())
                })
            });
            Report { time_ms, oracle, ..polynomial_report(record.command, fit) }
        }
        Command::PolyTensor => {
            let q = record.tensor_query()?;
            let fit = tensor_polynomial(&q)?;
            let time_ms = elapsed_ms(start);
            let oracle = record.oracle.then(|| {
                polynomial_oracle("littlewood_richardson", &fit, |n| {
                    let s = q.scaled(n);
                    tensor_bruteforce_lr(s.lambda(), s.mu(), s.nu())
                })
            });
            Report { time_ms, oracle, ..polynomial_report(record.command, fit) }
        }
    };
    Ok(report)
}

/// Milliseconds, rounded to the microsecond.
fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}
