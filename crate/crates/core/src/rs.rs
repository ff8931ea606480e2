//! Weighted unique decoding of Reed–Solomon codes on an arbitrary set of
//! evaluation points.
//!
//! The hard-decision core is errors-and-erasures decoding by rational
//! interpolation (solve `N(x_j) = y_j·E(x_j)` and divide). The weighted
//! decoder runs it on every prefix of the positions sorted by decreasing
//! weight (GMD trials) and accepts the first candidate whose exact weighted
//! distance is below half the minimum distance. At most one codeword can
//! pass that gate, so the answer does not depend on which trial found it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::poly::UnivariatePoly;
use crate::weighted::{weighted_distance, ExactDistance, WeightedWord};

/// A nonzero vector in the right kernel of `rows`, if one exists.
fn kernel_vector(field: PrimeField, mut rows: Vec<Vec<FieldElement>>, cols: usize) -> Option<Vec<FieldElement>> {
    let f = &field;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![FieldElement::ZERO; cols];
    v[free] = FieldElement::ONE;
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = f.neg(rows[row][free]);
    }
    Some(v)
}

/// Errors-and-erasures decoding of the degree-`≤ d` Reed–Solomon code.
///
/// With `n'` non-erased positions, returns the polynomial of degree `≤ d`
/// that disagrees with the non-erased values in at most `⌊(n' − d − 1)/2⌋`
/// places, or `None` if there is no such polynomial.
pub fn errors_erasures_decode(
    field: PrimeField,
    points: &[FieldElement],
    values: &[FieldElement],
    erasures: &BTreeSet<usize>,
    d: usize,
) -> Result<Option<UnivariatePoly>> {
    if points.len() != values.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            got: values.len(),
        });
    }
    for (i, x) in points.iter().enumerate() {
        if points[..i].contains(x) {
            return Err(Error::RepeatedPoint(x.value()));
        }
    }
    if let Some(&bad) = erasures.iter().find(|&&i| i >= points.len()) {
        return Err(Error::ErasureOutOfRange(bad));
    }
    let kept: Vec<usize> = (0..points.len()).filter(|i| !erasures.contains(i)).collect();
    let n_kept = kept.len();
    if d >= n_kept {
        return Err(Error::TooManyErasures {
            erasures: erasures.len(),
            degree: d,
            points: points.len(),
        });
    }
    let e = (n_kept - d - 1) / 2;
    let n_cols = e + d + 1;
    let e_cols = e + 1;
    let f = &field;
    let rows = kept
        .iter()
        .map(|&j| {
            let (x, y) = (points[j], values[j]);
            let mut row = Vec::with_capacity(n_cols + e_cols);
            let mut pw = FieldElement::ONE;
            for _ in 0..n_cols {
                row.push(pw);
                pw = f.mul(pw, x);
            }
            let neg_y = f.neg(y);
            let mut pw = FieldElement::ONE;
            for _ in 0..e_cols {
                row.push(f.mul(neg_y, pw));
                pw = f.mul(pw, x);
            }
            row
        })
        .collect();
    let Some(sol) = kernel_vector(field, rows, n_cols + e_cols) else {
        return Ok(None);
    };
    let num = UnivariatePoly::from_coeffs(field, sol[..n_cols].to_vec());
    let den = UnivariatePoly::from_coeffs(field, sol[n_cols..].to_vec());
    if den.is_zero() {
        return Ok(None);
    }
    let (g, rem) = num.div_rem(&den)?;
    if !rem.is_zero() || g.degree().is_some_and(|deg| deg > d) {
        return Ok(None);
    }
    let disagreements = kept.iter().filter(|&&j| g.eval(points[j]) != values[j]).count();
    Ok((disagreements <= e).then_some(g))
}

/// Outcome of [`weighted_rs_decode_verbose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsDecoding {
    pub poly: UnivariatePoly,
    /// Exact `Δ(w, poly)`.
    pub distance: ExactDistance,
    /// Whether `distance < μ/2`, i.e. whether the answer is guaranteed.
    pub within_radius: bool,
}

/// Finds the unique polynomial of degree `≤ d` with weighted distance below
/// `(n − d)/2` from `w`, or returns the zero polynomial when there is none.
pub fn weighted_rs_decode(
    field: PrimeField,
    points: &[FieldElement],
    d: usize,
    w: &WeightedWord,
) -> Result<UnivariatePoly> {
    Ok(weighted_rs_decode_verbose(field, points, d, w)?.poly)
}

/// [`weighted_rs_decode`] plus the exact distance of the returned polynomial.
pub fn weighted_rs_decode_verbose(
    field: PrimeField,
    points: &[FieldElement],
    d: usize,
    w: &WeightedWord,
) -> Result<RsDecoding> {
    let n = points.len();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: w.len(),
        });
    }
    if d >= n {
        return Err(Error::InvalidArgument(format!(
            "degree bound {d} needs more than {n} evaluation points"
        )));
    }
    let mu = (n - d) as i64;
    let radius = BigRational::new(BigInt::from(mu), BigInt::from(2));

    // heaviest weight first; stable, so equal weights keep position order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| w.weights()[b].cmp(&w.weights()[a]));

    let mut erased = BTreeSet::new();
    for s in 0..n - d {
        if s > 0 {
            erased.insert(order[s - 1]);
        }
        if let Some(g) = errors_erasures_decode(field, points, w.values(), &erased, d)? {
            let table: Vec<FieldElement> = points.iter().map(|&x| g.eval(x)).collect();
            let dist = weighted_distance(w, &table)?;
            if dist < radius {
                return Ok(RsDecoding {
                    poly: g,
                    distance: dist,
                    within_radius: true,
                });
            }
        }
    }
    let zero = UnivariatePoly::zero(field);
    let distance = weighted_distance(w, &vec![FieldElement::ZERO; n])?;
    Ok(RsDecoding {
        poly: zero,
        distance,
        within_radius: false,
    })
}
