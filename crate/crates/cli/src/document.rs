//! Matrix files: `{"n": int, "rows": [[entry, …], …], "name": string?}`.
//!
//! An entry is a JSON integer, a decimal or `"p/q"` string, or a
//! `[re, im]` pair of those for complex bases.

use std::path::Path;

use matradix::scalar::parse_rational;
use matradix::{BigInt, BigRational, GaussMatrix, IntMatrix, Matrix, RatMatrix};
use num_traits::Zero;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug)]
pub struct MatrixDocument {
    pub name: Option<String>,
    pub n: usize,
    /// Entries as `(re, im)`.
    rows: Vec<Vec<(BigRational, BigRational)>>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn scalar(v: &Value) -> Result<BigRational, CliError> {
    let parsed = match v {
        Value::Number(x) => parse_rational(&x.to_string()),
        Value::String(s) => parse_rational(s),
        _ => None,
    };
    parsed.ok_or_else(|| input(format!("invalid matrix entry {v}")))
}

fn entry(v: &Value) -> Result<(BigRational, BigRational), CliError> {
    match v {
        Value::Array(pair) if pair.len() == 2 => Ok((scalar(&pair[0])?, scalar(&pair[1])?)),
        Value::Array(_) => Err(input(format!("complex entry must be a [re, im] pair, got {v}"))),
        _ => Ok((scalar(v)?, BigRational::zero())),
    }
}

impl MatrixDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let root: Value = serde_json::from_str(text).map_err(|e| input(format!("malformed JSON: {e}")))?;
        let obj = root.as_object().ok_or_else(|| input("matrix document must be a JSON object"))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| input("field \"n\" must be a positive integer"))? as usize;
        if n == 0 {
            return Err(input("field \"n\" must be a positive integer"));
        }
        let rows_v = obj
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| input("field \"rows\" must be an array of rows"))?;
        if rows_v.len() != n {
            return Err(input(format!("expected {n} rows, found {}", rows_v.len())));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, r) in rows_v.iter().enumerate() {
            let r = r.as_array().ok_or_else(|| input(format!("row {i} is not an array")))?;
            if r.len() != n {
                return Err(input(format!("row {i} has {} entries, expected {n}", r.len())));
            }
            rows.push(r.iter().map(entry).collect::<Result<Vec<_>, _>>()?);
        }
        let name = match obj.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(input("field \"name\" must be a string")),
        };
        Ok(MatrixDocument { name, n, rows })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn is_real(&self) -> bool {
        self.rows.iter().flatten().all(|(_, im)| im.is_zero())
    }

    pub fn to_rational(&self) -> Result<RatMatrix, CliError> {
        if !self.is_real() {
            return Err(input("expected real entries"));
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(re, _)| re.clone()).collect()).collect();
        Ok(Matrix::from_rows(rows)?)
    }

    pub fn to_integer(&self) -> Result<IntMatrix, CliError> {
        let q = self.to_rational()?;
        if q.entries().iter().any(|x| !x.is_integer()) {
            return Err(input("matrix entries must be integers"));
        }
        Ok(q.map(|x| x.to_integer()))
    }

    pub fn to_gaussian(&self) -> Result<GaussMatrix, CliError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(re, im)| matradix::GaussianRational::new(re.clone(), im.clone())).collect())
            .collect();
        Ok(Matrix::from_rows(rows)?)
    }
}

/// Parses `"1,-2"`, `"[1, -2]"` or `"1 -2"` into an integer vector.
pub fn parse_vector(s: &str) -> Result<Vec<BigInt>, CliError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigInt>().map_err(|_| input(format!("invalid integer {t:?} in vector"))))
        .collect()
}

/// Parses a JSON list of integer vectors, e.g. `[[0,0],[-1,0]]`.
pub fn parse_vector_list(s: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    let v: Value = serde_json::from_str(s).map_err(|e| input(format!("malformed vector list: {e}")))?;
    let outer = v.as_array().ok_or_else(|| input("expected a JSON array of vectors"))?;
    outer.iter().map(json_int_vector).collect()
}

pub fn json_int_vector(v: &Value) -> Result<Vec<BigInt>, CliError> {
    let items = v.as_array().ok_or_else(|| input(format!("expected an integer vector, got {v}")))?;
    items
        .iter()
        .map(|x| {
            let text = match x {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                _ => return Err(input(format!("expected an integer, got {x}"))),
            };
            text.parse::<BigInt>().map_err(|_| input(format!("expected an integer, got {x}")))
        })
        .collect()
}
