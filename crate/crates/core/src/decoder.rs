//! Recursive weighted unique decoder for downset codes.
//!
//! A codeword is written as `C(X, Y) = Σ_{i=0}^{d} P_i(X) Y^{d−i}` with `Y` the
//! last variable and `d = deg_m(D)`. The coefficients are recovered from the
//! top degree down. For step `i` every column `{x} × S_m` of the residual word
//! is decoded as a Reed–Solomon word of degree `≤ d − i`; the leading
//! coefficient of each column answer, weighted by how far that answer was
//! from the column, forms a weighted word on `S̃` that is decoded recursively
//! in the slice code `C(S̃, D_{d−i})`. The recovered `P_i(x)·y^{d−i}` is then
//! subtracted from the residual before the next step.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::interp::eval_on_grid;
use crate::poly::MultivariatePoly;
use crate::rs::weighted_rs_decode_verbose;
use crate::weighted::{weighted_distance, ExactDistance, WeightedWord};

/// One invocation of the decoder, as seen by a trace hook.
#[derive(Debug)]
pub struct DecodeCall<'a> {
    /// Exponents of the split-off variables on the way down from the root
    /// call; the root has an empty path. The codeword this call should
    /// recover is the coefficient of `X_m^{path[0]}` of the root codeword,
    /// then of `X_{m−1}^{path[1]}` of that, and so on.
    pub path: &'a [u32],
    pub spec: &'a CodeSpec,
    pub word: &'a WeightedWord,
}

/// Weighted unique decoding in `C(S, D)`: returns the codeword within weighted
/// distance `< μ/2` of `w` when there is one, and some polynomial supported on
/// `D` otherwise.
pub fn weighted_downset_decode(spec: &CodeSpec, w: &WeightedWord) -> Result<MultivariatePoly> {
    check_word(spec, w)?;
    decode_rec(spec, w, &mut Vec::new(), &mut |_| {})
}

/// As [`weighted_downset_decode`], calling `hook` on entry to every recursive
/// call (the root included) in depth-first order.
pub fn weighted_downset_decode_traced(
    spec: &CodeSpec,
    w: &WeightedWord,
    hook: &mut dyn FnMut(&DecodeCall<'_>),
) -> Result<MultivariatePoly> {
    check_word(spec, w)?;
    decode_rec(spec, w, &mut Vec::new(), hook)
}

fn check_word(spec: &CodeSpec, w: &WeightedWord) -> Result<()> {
    if w.len() != spec.len() {
        return Err(Error::IncompleteTable {
            expected: spec.len(),
            got: w.len(),
        });
    }
    let f = spec.field();
    if let Some(bad) = w.values().iter().find(|&&v| !f.contains(v)) {
        return Err(Error::NotInField {
            value: bad.value(),
            modulus: f.modulus(),
        });
    }
    Ok(())
}

fn decode_rec(
    spec: &CodeSpec,
    w: &WeightedWord,
    path: &mut Vec<u32>,
    hook: &mut dyn FnMut(&DecodeCall<'_>),
) -> Result<MultivariatePoly> {
    hook(&DecodeCall { path, spec, word: w });
    let field = spec.field();
    let grid = spec.grid();

    if grid.num_vars() == 1 {
        let d = spec.downset().last_degree() as usize;
        let out = weighted_rs_decode_verbose(field, grid.set(0), d, w)?;
        return Ok(MultivariatePoly::from_univariate(&out.poly));
    }

    let (d, prefix, slices) = spec.sliced()?;
    let ys = grid.last_set();
    let k_m = ys.len();
    let columns = prefix.len();
    let mut residual = w.values().to_vec();
    let mut result = MultivariatePoly::zero(field, grid.num_vars());

    for i in 0..=d {
        let deg = d - i;
        // μ(S_m, {0..deg})/2
        let radius = BigRational::new(BigInt::from(k_m - deg as usize), BigInt::from(2));
        let current = w.with_values(residual.clone())?;

        let column_results: Vec<(FieldElement, ExactDistance)> = (0..columns)
            .into_par_iter()
            .map(|c| {
                let col = current.slice(c * k_m, k_m);
                let out = weighted_rs_decode_verbose(field, ys, deg as usize, &col)?;
                Ok(if out.distance < radius {
                    (out.poly.coeff(deg as usize), out.distance)
                } else {
                    (FieldElement::ZERO, radius.clone())
                })
            })
            .collect::<Result<_>>()?;

        let (sigma, weights): (Vec<FieldElement>, Vec<BigRational>) = column_results
            .into_iter()
            .map(|(s, delta)| (s, delta / &radius))
            .unzip();
        let folded = WeightedWord::new(sigma, weights)?;

        path.push(deg);
        let q = decode_rec(&slices[deg as usize], &folded, path, hook)?;
        path.pop();

        let q_vals = eval_on_grid(&q, &prefix)?;
        let y_pows: Vec<FieldElement> = ys.iter().map(|&y| field.pow(y, deg as u64)).collect();
        for (c, &qv) in q_vals.iter().enumerate() {
            if qv.is_zero() {
                continue;
            }
            for (j, &yp) in y_pows.iter().enumerate() {
                let pos = c * k_m + j;
                residual[pos] = field.sub(residual[pos], field.mul(qv, yp));
            }
        }
        result = result.add(&q.times_new_last(deg))?;
    }
    Ok(result)
}

/// A verified decoding result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoded {
    pub poly: MultivariatePoly,
    /// Exact weighted distance from the received word to the codeword.
    pub distance: ExactDistance,
}

/// Runs the weighted decoder and keeps the answer only if it is a codeword
/// strictly within `μ/2` of `w`.
pub fn decode_verified(spec: &CodeSpec, w: &WeightedWord) -> Result<Option<Decoded>> {
    let poly = weighted_downset_decode(spec, w)?;
    spec.check_poly(&poly)?;
    let table = spec.encode(&poly)?;
    let distance = weighted_distance(w, &table)?;
    Ok((distance < decoding_radius(spec)).then_some(Decoded { poly, distance }))
}

/// Hamming unique decoding: the codeword at distance `< μ/2` from
/// `received`, or `None` if no codeword is that close.
pub fn unique_decode(spec: &CodeSpec, received: &[FieldElement]) -> Result<Option<Decoded>> {
    decode_verified(spec, &WeightedWord::hard(received.to_vec()))
}

/// `μ/2` as an exact rational.
pub fn decoding_radius(spec: &CodeSpec) -> ExactDistance {
    BigRational::new(BigInt::from(spec.min_distance()), BigInt::from(2))
}
