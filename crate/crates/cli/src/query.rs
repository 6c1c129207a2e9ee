//! Query records and their parsing from command-line lists or JSON.

use kostant_core::lattice::{from_fundamental, FundamentalCoords};
use kostant_core::{BigRational, DominantWeight, MultiplicityQuery, RationalVector, TensorQuery};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    #[default]
    Canonical,
    Fundamental,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Mult,
    Tensor,
    Kostant,
    Convert,
    PolyMult,
    PolyTensor,
}

#[derive(Clone, Debug)]
pub struct QueryRecord {
    pub command: Command,
    pub rank: usize,
    pub basis: Basis,
    pub lambda: Option<Vec<BigRational>>,
    pub mu: Option<Vec<BigRational>>,
    pub nu: Option<Vec<BigRational>>,
    /// Argument of `kostant` and `convert`.
    pub vector: Option<Vec<BigRational>>,
    /// Target basis of `convert`.
    pub to: Option<Basis>,
    pub oracle: bool,
    pub timing: bool,
}

impl QueryRecord {
    pub fn new(command: Command, rank: usize) -> Self {
        Self {
            command,
            rank,
            basis: Basis::Canonical,
            lambda: None,
            mu: None,
            nu: None,
            vector: None,
            to: None,
            oracle: false,
            timing: false,
        }
    }

    fn require(&self, field: &'static str) -> Result<&[BigRational], CliError> {
        let value = match field {
            "lambda" => &self.lambda,
            "mu" => &self.mu,
            "nu" => &self.nu,
            _ => &self.vector,
        };
        value.as_deref().ok_or(CliError::MissingField(field))
    }

    /// Rejects fields the command would silently ignore.
    pub fn check_fields(&self) -> Result<(), CliError> {
        let allowed: &[&str] = match self.command {
            Command::Mult | Command::PolyMult => &["lambda", "mu"],
            Command::Tensor | Command::PolyTensor => &["lambda", "mu", "nu"],
            Command::Kostant => &["vector"],
            Command::Convert => &["vector", "to"],
        };
        let present = [
            ("lambda", self.lambda.is_some()),
            ("mu", self.mu.is_some()),
            ("nu", self.nu.is_some()),
            ("vector", self.vector.is_some()),
            ("to", self.to.is_some()),
        ];
        match present.iter().find(|(name, set)| *set && !allowed.contains(name)) {
            Some((name, _)) => Err(CliError::UnexpectedField(name)),
            None => Ok(()),
        }
    }

    /// Reads a weight in the record's basis and returns it in canonical coordinates.
    pub fn weight(&self, field: &'static str) -> Result<RationalVector, CliError> {
        to_canonical(self.require(field)?, self.basis, self.rank)
    }

    pub fn dominant(&self, field: &'static str) -> Result<DominantWeight, CliError> {
        Ok(DominantWeight::named(self.weight(field)?, field)?)
    }

    pub fn vector_in(&self, basis: Basis) -> Result<RationalVector, CliError> {
        to_canonical(self.require("vector")?, basis, self.rank)
    }

    pub fn multiplicity_query(&self) -> Result<MultiplicityQuery, CliError> {
        Ok(MultiplicityQuery::new(self.dominant("lambda")?, self.weight("mu")?)?)
    }

    pub fn tensor_query(&self) -> Result<TensorQuery, CliError> {
        Ok(TensorQuery::new(self.dominant("lambda")?, self.dominant("mu")?, self.dominant("nu")?)?)
    }
}

fn to_canonical(values: &[BigRational], basis: Basis, rank: usize) -> Result<RationalVector, CliError> {
    if rank == 0 {
        return Err(kostant_core::Error::ZeroRank.into());
    }
    let expected = match basis {
        Basis::Canonical => rank + 1,
        Basis::Fundamental => rank,
    };
    if values.len() != expected {
        return Err(kostant_core::Error::Length { expected, found: values.len() }.into());
    }
    Ok(match basis {
        Basis::Canonical => RationalVector::new(values.to_vec())?,
        Basis::Fundamental => from_fundamental(&FundamentalCoords::new(values.to_vec())?),
    })
}

pub fn parse_rational(field: &'static str, text: &str) -> Result<BigRational, CliError> {
    let trimmed = text.trim();
    let malformed = || CliError::MalformedRational { field, text: text.to_string() };
    // Ratio's parser accepts a leading '+' on the numerator only; be strict.
    if trimmed.is_empty() || trimmed.contains(|c: char| !(c.is_ascii_digit() || c == '-' || c == '/')) {
        return Err(malformed());
    }
    trimmed.parse::<BigRational>().map_err(|_| malformed())
}

/// Parses `2,1,-3` or `1/2,-1/2`.
pub fn parse_list(field: &'static str, text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',').map(|item| parse_rational(field, item)).collect()
}

fn json_list(field: &'static str, value: &Value) -> Result<Vec<BigRational>, CliError> {
    match value {
        Value::String(s) => parse_list(field, s),
        Value::Array(items) => items
            .iter()
            .map(|item| match item {
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(field, &n.to_string()),
                Value::String(s) => parse_rational(field, s),
                other => Err(CliError::MalformedRational { field, text: other.to_string() }),
            })
            .collect(),
        other => Err(CliError::MalformedRational { field, text: other.to_string() }),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    command: Command,
    rank: usize,
    #[serde(default)]
    basis: Basis,
    lambda: Option<Value>,
    mu: Option<Value>,
    nu: Option<Value>,
    #[serde(alias = "a")]
    vector: Option<Value>,
    to: Option<Basis>,
    #[serde(default)]
    oracle: bool,
    #[serde(default)]
    timing: bool,
}

/// Parses one batch line.
pub fn parse_json_record(line: &str) -> Result<QueryRecord, CliError> {
    let raw: RawRecord = serde_json::from_str(line).map_err(|e| CliError::MalformedRecord(e.to_string()))?;
    let list = |field, v: &Option<Value>| v.as_ref().map(|v| json_list(field, v)).transpose();
    Ok(QueryRecord {
        command: raw.command,
        rank: raw.rank,
        basis: raw.basis,
        lambda: list("lambda", &raw.lambda)?,
        mu: list("mu", &raw.mu)?,
        nu: list("nu", &raw.nu)?,
        vector: list("vector", &raw.vector)?,
        to: raw.to,
        oracle: raw.oracle,
        timing: raw.timing,
    })
}
