//! Text formats: code specs and coefficient tables (JSON), words (line based)
//! and decode results (JSON).
//!
//! Word file:
//!
//! ```text
//! p m k_1 ... k_m
//! value                 # unweighted, one line per grid point
//! value num/den         # weighted
//! ```
//!
//! Points are listed in canonical odometer order. Blank lines and text after
//! `#` are ignored.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::code::CodeSpec;
use crate::downset::Downset;
use crate::error::Error;
use crate::field::{FieldElement, PrimeField};
use crate::grid::Grid;
use crate::poly::{ExponentVector, MultivariatePoly};
use crate::weighted::{format_ratio, parse_ratio, WeightedWord};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),

    #[error("field `{field}`: {source}")]
    Field {
        field: String,
        #[source]
        source: Error,
    },

    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

fn field_err(field: impl Into<String>) -> impl FnOnce(Error) -> FormatError {
    let field = field.into();
    move |source| FormatError::Field { field, source }
}

/// How the downset is given in a spec file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum DownsetSpec {
    /// Downward closure of these vectors.
    Generators(Vec<Vec<u32>>),
    /// Total degree at most `d`, within the grid's box.
    TotalDegree(u32),
    /// The box `∏ [0, e_i]`.
    IndividualDegrees(Vec<u32>),
    /// Every member listed; must already be closed.
    Members(Vec<Vec<u32>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: u64,
    pub grid: Vec<Vec<i64>>,
    pub downset: DownsetSpec,
}

impl SpecFile {
    pub fn build(&self) -> Result<CodeSpec, FormatError> {
        let field = PrimeField::new(self.p).map_err(field_err("p"))?;
        let grid = Grid::from_values(field, &self.grid).map_err(field_err("grid"))?;
        let m = grid.num_vars();
        let to_vectors = |vs: &[Vec<u32>]| -> Vec<ExponentVector> {
            vs.iter().map(|v| ExponentVector::new(v.clone())).collect()
        };
        let downset = match &self.downset {
            DownsetSpec::Generators(g) => Downset::from_generators(m, &to_vectors(g)),
            DownsetSpec::TotalDegree(d) => Downset::total_degree_in_box(*d, &grid.sizes()),
            DownsetSpec::IndividualDegrees(e) => {
                if e.len() != m {
                    Err(Error::DimensionMismatch {
                        expected: m,
                        got: e.len(),
                    })
                } else {
                    Downset::individual_degrees(e)
                }
            }
            DownsetSpec::Members(ms) => Downset::new(m, to_vectors(ms).into_iter().collect()),
        }
        .map_err(field_err("downset"))?;
        CodeSpec::new(grid, downset).map_err(field_err("downset"))
    }

    /// Canonical file for a spec; the downset is stored by its generators.
    pub fn from_spec(spec: &CodeSpec) -> Self {
        SpecFile {
            p: spec.field().modulus(),
            grid: spec
                .grid()
                .sets()
                .iter()
                .map(|s| s.iter().map(|v| v.value() as i64).collect())
                .collect(),
            downset: DownsetSpec::Generators(
                spec.downset()
                    .maximal_elements()
                    .into_iter()
                    .map(ExponentVector::into_vec)
                    .collect(),
            ),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<CodeSpec, FormatError> {
    let file: SpecFile = serde_json::from_str(text)?;
    file.build()
}

pub fn write_spec(spec: &CodeSpec) -> String {
    serde_json::to_string_pretty(&SpecFile::from_spec(spec)).expect("spec serializes") + "\n"
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub exponent: Vec<u32>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientFile {
    pub coefficients: Vec<Term>,
}

/// Canonical term list: nonzero coefficients only, sorted by exponent.
pub fn terms_of(poly: &MultivariatePoly) -> Vec<Term> {
    poly.terms()
        .map(|(e, c)| Term {
            exponent: e.as_slice().to_vec(),
            value: c.value() as i64,
        })
        .collect()
}

pub fn parse_coefficients(text: &str, spec: &CodeSpec) -> Result<MultivariatePoly, FormatError> {
    let file: CoefficientFile = serde_json::from_str(text)?;
    let f = spec.field();
    let m = spec.grid().num_vars();
    let poly = MultivariatePoly::from_terms(
        f,
        m,
        file.coefficients
            .iter()
            .map(|t| (ExponentVector::new(t.exponent.clone()), f.from_i64(t.value))),
    )
    .map_err(field_err("coefficients"))?;
    spec.check_poly(&poly).map_err(field_err("coefficients"))?;
    Ok(poly)
}

pub fn write_coefficients(poly: &MultivariatePoly) -> String {
    let file = CoefficientFile {
        coefficients: terms_of(poly),
    };
    serde_json::to_string_pretty(&file).expect("coefficients serialize") + "\n"
}

fn header(spec: &CodeSpec) -> String {
    let mut h = format!("{} {}", spec.field().modulus(), spec.grid().num_vars());
    for k in spec.grid().sizes() {
        h.push_str(&format!(" {k}"));
    }
    h
}

/// A word file as text; weights are written when given.
pub fn write_word(spec: &CodeSpec, values: &[FieldElement], weights: Option<&[BigRational]>) -> String {
    let mut out = header(spec);
    out.push('\n');
    for (i, v) in values.iter().enumerate() {
        match weights {
            Some(ws) => out.push_str(&format!("{} {}\n", v, format_ratio(&ws[i]))),
            None => out.push_str(&format!("{v}\n")),
        }
    }
    out
}

/// Parses a word file for `spec`. In unweighted mode every weight is zero.
pub fn parse_word(text: &str, spec: &CodeSpec, weighted: bool) -> Result<WeightedWord, FormatError> {
    let f = spec.field();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, h) = lines.next().ok_or(FormatError::Line {
        line: 1,
        message: "missing header `p m k_1 ... k_m`".into(),
    })?;
    if h != header(spec) {
        return Err(FormatError::Line {
            line: hline,
            message: format!("header `{h}` does not match the code: expected `{}`", header(spec)),
        });
    }
    let n = spec.len();
    let mut values = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (line, l) in lines {
        let bad = |message: String| FormatError::Line { line, message };
        if values.len() == n {
            return Err(bad(format!("expected {n} entries, found more")));
        }
        let mut toks = l.split_whitespace();
        let v = toks.next().expect("line is nonempty");
        let v: u64 = v.parse().map_err(|_| bad(format!("bad field value `{v}`")))?;
        let v = f.element(v).map_err(|e| bad(e.to_string()))?;
        let u = match (weighted, toks.next()) {
            (true, Some(u)) => {
                let u = parse_ratio(u).map_err(|e| bad(e.to_string()))?;
                if u < BigRational::from_integer(0.into()) || u > BigRational::from_integer(1.into()) {
                    return Err(bad(format!("weight {} is outside [0, 1]", format_ratio(&u))));
                }
                u
            }
            (true, None) => return Err(bad("missing weight".into())),
            (false, None) => BigRational::from_integer(0.into()),
            (false, Some(_)) => return Err(bad("unexpected weight in an unweighted word".into())),
        };
        if let Some(extra) = toks.next() {
            return Err(bad(format!("unexpected token `{extra}`")));
        }
        values.push(v);
        weights.push(u);
    }
    if values.len() != n {
        return Err(FormatError::Line {
            line: text.lines().count(),
            message: format!("expected {n} entries, found {}", values.len()),
        });
    }
    WeightedWord::new(values, weights).map_err(|e| FormatError::Line {
        line: 0,
        message: e.to_string(),
    })
}

/// `{status: "decoded", coefficients, distance}`.
pub fn decoded_document(poly: &MultivariatePoly, distance: &BigRational) -> serde_json::Value {
    json!({
        "status": "decoded",
        "coefficients": terms_of(poly),
        "distance": format_ratio(distance),
    })
}

/// `{status: "no_codeword_within_radius", radius}`.
pub fn failure_document(radius: &BigRational) -> serde_json::Value {
    json!({
        "status": "no_codeword_within_radius",
        "radius": format_ratio(radius),
    })
}
