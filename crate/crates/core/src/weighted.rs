//! Weighted received words and the exact weighted distance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Exact nonnegative rational; always stored in lowest terms.
pub type ExactDistance = BigRational;

/// A weight `u ∈ [0, 1]`. `0` is a hard symbol, `1` a full erasure.
pub type Weight = BigRational;

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> BigRational {
    ratio(1, 2)
}

/// Formats as `num/den` in lowest terms, including integers (`2/1`).
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den`. Decimals and bare integers are rejected.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidArgument(format!("expected num/den, got {s:?}")))?;
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad numerator in {s:?}")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Per-position pairs `(value, weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedWord {
    values: Vec<FieldElement>,
    weights: Vec<Weight>,
}

impl WeightedWord {
    pub fn new(values: Vec<FieldElement>, weights: Vec<Weight>) -> Result<Self> {
        if values.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: values.len(),
                got: weights.len(),
            });
        }
        if let Some(bad) = weights
            .iter()
            .find(|u| **u < BigRational::zero() || **u > BigRational::one())
        {
            return Err(Error::WeightOutOfRange(format_ratio(bad)));
        }
        Ok(WeightedWord { values, weights })
    }

    /// All weights zero: the unweighted word.
    pub fn hard(values: Vec<FieldElement>) -> Self {
        let weights = vec![BigRational::zero(); values.len()];
        WeightedWord { values, weights }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Positions `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> WeightedWord {
        WeightedWord {
            values: self.values[start..start + len].to_vec(),
            weights: self.weights[start..start + len].to_vec(),
        }
    }

    pub fn with_values(&self, values: Vec<FieldElement>) -> Result<WeightedWord> {
        if values.len() != self.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                got: values.len(),
            });
        }
        Ok(WeightedWord {
            values,
            weights: self.weights.clone(),
        })
    }
}

/// `Δ(w, g) = Σ_{agree} u/2 + Σ_{disagree} (1 − u/2)`, exactly.
pub fn weighted_distance(w: &WeightedWord, g: &[FieldElement]) -> Result<ExactDistance> {
    if w.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            got: g.len(),
        });
    }
    // Σ over agreements of u + Σ over disagreements of (2 − u), halved once.
    let mut twice = BigRational::zero();
    let two = BigRational::from_integer(BigInt::from(2));
    for ((&v, u), &gv) in w.values.iter().zip(&w.weights).zip(g) {
        if v == gv {
            twice += u;
        } else {
            twice += &two - u;
        }
    }
    Ok(twice / two)
}
