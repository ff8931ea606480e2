//! Brute-force oracles, a reproducible generator and random instances.
//!
//! Nothing here calls into the decoders: the oracles enumerate every codeword
//! and measure distances with scaled integer arithmetic of their own, so they
//! stay independent of the code paths they are used to check.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::code::CodeSpec;
use crate::downset::Downset;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::grid::Grid;
use crate::poly::{ExponentVector, MultivariatePoly};
use crate::weighted::{Weight, WeightedWord};

/// Largest codeword count the oracles will enumerate.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// SplitMix64. Every draw below is defined in terms of `next_u64`, so the
/// stream for a seed is reproducible in any language.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for case `index` of a run seeded with `master`:
    /// seeded with `mix64(master + (index + 1)·γ)`.
    pub fn for_case(master: u64, index: u64) -> Self {
        Self::new(mix64(master.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, n)` by rejection of the top partial block.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Uniform in `[lo, hi]`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }

    /// `k` distinct indices from `[0, n)`: a partial Fisher–Yates shuffle for
    /// `n ≤ 4096`, rejection of repeats above that.
    pub fn sample_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n, "cannot draw {k} of {n}");
        if n > 4096 {
            let mut out: Vec<usize> = Vec::with_capacity(k);
            while out.len() < k {
                let i = self.below(n as u64) as usize;
                if !out.contains(&i) {
                    out.push(i);
                }
            }
            return out;
        }
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below((n - i) as u64) as usize;
            idx.swap(i, j);
        }
        idx.truncate(k);
        idx
    }

    pub fn field_element(&mut self, field: PrimeField) -> FieldElement {
        field.reduce(self.below(field.modulus()))
    }
}

/// `p^|D|`, or `None` past `u64`.
pub fn codeword_count(spec: &CodeSpec) -> Option<u64> {
    let p = spec.field().modulus();
    (0..spec.dimension()).try_fold(1u64, |acc, _| acc.checked_mul(p))
}

pub fn is_enumerable(spec: &CodeSpec) -> bool {
    codeword_count(spec).is_some_and(|c| c <= ENUMERATION_LIMIT)
}

fn guard(spec: &CodeSpec) -> Result<()> {
    match codeword_count(spec) {
        Some(c) if c <= ENUMERATION_LIMIT => Ok(()),
        Some(c) => Err(Error::EnumerationTooLarge(c.to_string())),
        None => Err(Error::EnumerationTooLarge(format!(
            "{}^{}",
            spec.field().modulus(),
            spec.dimension()
        ))),
    }
}

/// Walks every coefficient vector over the downset in mixed-radix order and
/// hands each evaluation table to `visit`. Tables are built incrementally
/// from per-monomial columns computed by direct evaluation.
fn for_each_codeword(spec: &CodeSpec, mut visit: impl FnMut(&[u64], &[u64])) {
    let f = spec.field();
    let p = f.modulus();
    let monomials: Vec<&ExponentVector> = spec.downset().iter().collect();
    let points: Vec<Vec<FieldElement>> = spec.grid().points().collect();
    let columns: Vec<Vec<u64>> = monomials
        .iter()
        .map(|e| {
            points
                .iter()
                .map(|pt| {
                    pt.iter()
                        .enumerate()
                        .fold(FieldElement::ONE, |acc, (i, &x)| f.mul(acc, f.pow(x, e[i] as u64)))
                        .value()
                })
                .collect()
        })
        .collect();

    fn rec(
        t: usize,
        p: u64,
        columns: &[Vec<u64>],
        word: &mut [u64],
        coeffs: &mut [u64],
        visit: &mut dyn FnMut(&[u64], &[u64]),
    ) {
        if t == columns.len() {
            visit(coeffs, word);
            return;
        }
        for c in 0..p {
            coeffs[t] = c;
            rec(t + 1, p, columns, word, coeffs, visit);
            for (w, &v) in word.iter_mut().zip(&columns[t]) {
                *w = (*w + v) % p;
            }
        }
        coeffs[t] = 0;
    }

    let mut word = vec![0u64; points.len()];
    let mut coeffs = vec![0u64; monomials.len()];
    rec(0, p, &columns, &mut word, &mut coeffs, &mut visit);
}

fn coeffs_to_poly(spec: &CodeSpec, coeffs: &[u64]) -> MultivariatePoly {
    let f = spec.field();
    MultivariatePoly::from_terms(
        f,
        spec.grid().num_vars(),
        spec.downset().iter().cloned().zip(coeffs.iter().map(|&c| f.reduce(c))),
    )
    .expect("coefficients come from the downset")
}

/// Minimum Hamming weight over all nonzero codewords.
pub fn brute_force_min_distance(spec: &CodeSpec) -> Result<u64> {
    guard(spec)?;
    let mut best = u64::MAX;
    for_each_codeword(spec, |coeffs, word| {
        if coeffs.iter().any(|&c| c != 0) {
            let wt = word.iter().filter(|&&v| v != 0).count() as u64;
            best = best.min(wt);
        }
    });
    Ok(best)
}

/// Result of [`brute_force_nearest`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nearest {
    /// First minimizer in enumeration order.
    pub poly: MultivariatePoly,
    pub distance: BigRational,
    /// How many codewords lie strictly within `μ/2`.
    pub within_radius: usize,
}

impl Nearest {
    /// At most one codeword strictly within `μ/2`.
    pub fn unique(&self) -> bool {
        self.within_radius <= 1
    }

    /// The codeword strictly within `μ/2`, when there is exactly one.
    pub fn unique_within_radius(&self) -> Option<&MultivariatePoly> {
        (self.within_radius == 1).then_some(&self.poly)
    }
}

/// Exhaustive weighted-nearest search.
///
/// Distances are computed as integers scaled by `2L`, `L` the least common
/// denominator of the weights: an agreement costs `u·L`, a disagreement
/// `2L − u·L`.
pub fn brute_force_nearest(spec: &CodeSpec, w: &WeightedWord) -> Result<Nearest> {
    guard(spec)?;
    let n = spec.len();
    if w.len() != n {
        return Err(Error::IncompleteTable {
            expected: n,
            got: w.len(),
        });
    }
    let lcd = w
        .weights()
        .iter()
        .fold(BigInt::one(), |acc, u| acc.lcm(u.denom()));
    let too_big = || Error::InvalidArgument("weight denominators too large for the oracle".into());
    let l = lcd.to_u64().filter(|&l| l < 1 << 40).ok_or_else(too_big)?;
    let agree: Vec<u64> = w
        .weights()
        .iter()
        .map(|u| (u * BigRational::from_integer(lcd.clone())).to_integer().to_u64().unwrap())
        .collect();
    let disagree: Vec<u64> = agree.iter().map(|a| 2 * l - a).collect();
    let received: Vec<u64> = w.values().iter().map(|v| v.value()).collect();
    // Δ < μ/2  ⟺  2L·Δ < L·μ
    let threshold = l as u128 * spec.min_distance() as u128;

    let mut best: Option<(u128, Vec<u64>)> = None;
    let mut within = 0usize;
    for_each_codeword(spec, |coeffs, word| {
        let cost: u128 = (0..n)
            .map(|j| {
                if word[j] == received[j] {
                    agree[j] as u128
                } else {
                    disagree[j] as u128
                }
            })
            .sum();
        if cost < threshold {
            within += 1;
        }
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, coeffs.to_vec()));
        }
    });
    let (cost, coeffs) = best.expect("a code has at least one codeword");
    Ok(Nearest {
        poly: coeffs_to_poly(spec, &coeffs),
        distance: BigRational::new(BigInt::from(cost), BigInt::from(2 * l)),
        within_radius: within,
    })
}

/// Changes exactly `errors` positions, each to a different uniformly random
/// value. Positions are drawn without replacement.
pub fn corrupt(
    field: PrimeField,
    word: &[FieldElement],
    errors: usize,
    rng: &mut SplitMix64,
) -> Result<Vec<FieldElement>> {
    if errors > word.len() {
        return Err(Error::InvalidArgument(format!(
            "cannot corrupt {errors} of {} positions",
            word.len()
        )));
    }
    if errors > 0 && field.modulus() < 2 {
        return Err(Error::InvalidArgument("field too small to corrupt".into()));
    }
    let mut out = word.to_vec();
    for pos in rng.sample_indices(word.len(), errors) {
        let shift = 1 + rng.below(field.modulus() - 1);
        out[pos] = field.add(out[pos], field.reduce(shift));
    }
    Ok(out)
}

/// Random downset inside the box `∏[0, k_i)` with between `target` and
/// `2·target` members (capped by the box size).
///
/// Repeatedly samples a box point, lowering random coordinates until its
/// closure still fits the size bound, and adds that closure.
pub fn random_downset(sizes: &[usize], target: usize, rng: &mut SplitMix64) -> Result<Downset> {
    if target == 0 {
        return Err(Error::InvalidArgument("target size must be at least 1".into()));
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidArgument("box sizes must be positive".into()));
    }
    let m = sizes.len();
    let box_size: usize = sizes.iter().product();
    let target = target.min(box_size);
    let cap = 2 * target;
    let mut members: BTreeSet<ExponentVector> = BTreeSet::new();
    members.insert(ExponentVector::zero(m));

    let closure_adds = |members: &BTreeSet<ExponentVector>, a: &[u32]| -> Vec<ExponentVector> {
        crate::grid::OdometerIter::new(a.iter().map(|&e| e as usize + 1).collect())
            .map(|idx| ExponentVector::new(idx.iter().map(|&e| e as u32).collect()))
            .filter(|e| !members.contains(e))
            .collect()
    };

    let mut stalls = 0;
    while members.len() < target {
        let mut a: Vec<u32> = sizes.iter().map(|&k| rng.below(k as u64) as u32).collect();
        let mut added = closure_adds(&members, &a);
        while members.len() + added.len() > cap {
            let nonzero: Vec<usize> = (0..m).filter(|&i| a[i] > 0).collect();
            let i = *rng.choose(&nonzero);
            a[i] -= 1;
            added = closure_adds(&members, &a);
        }
        if added.is_empty() {
            stalls += 1;
            if stalls > 64 {
                // add a minimal element of the complement: exactly one new member
                let fresh = crate::grid::OdometerIter::new(sizes.to_vec())
                    .map(|idx| ExponentVector::new(idx.iter().map(|&e| e as u32).collect()))
                    .find(|e| !members.contains(e) && e.lower_neighbors().all(|b| members.contains(&b)))
                    .expect("box not yet full");
                members.insert(fresh);
                stalls = 0;
            }
            continue;
        }
        members.extend(added);
    }
    Downset::new(m, members)
}

/// A random element of `C(S, D)` with uniform coefficients.
pub fn random_codeword(spec: &CodeSpec, rng: &mut SplitMix64) -> MultivariatePoly {
    let f = spec.field();
    let coeffs: Vec<u64> = (0..spec.dimension()).map(|_| rng.below(f.modulus())).collect();
    coeffs_to_poly(spec, &coeffs)
}

/// A random weight `a/b` with `b ∈ [1, max_den]`, `a ∈ [0, b]`.
pub fn random_weight(rng: &mut SplitMix64, max_den: u64) -> Weight {
    let b = rng.range(1, max_den);
    let a = rng.range(0, b);
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Shape limits for [`random_spec`].
#[derive(Clone, Debug)]
pub struct SpecParams {
    pub primes: Vec<u64>,
    pub max_vars: usize,
    pub max_side: usize,
    pub max_dimension: usize,
    /// Reject specs whose codeword count exceeds this.
    pub max_codewords: Option<u64>,
}

impl Default for SpecParams {
    fn default() -> Self {
        SpecParams {
            primes: vec![2, 3, 5, 7, 11, 13],
            max_vars: 3,
            max_side: 5,
            max_dimension: 12,
            max_codewords: Some(1 << 16),
        }
    }
}

/// A random spec: prime, grid of random distinct elements, random downset.
pub fn random_spec(params: &SpecParams, rng: &mut SplitMix64) -> Result<CodeSpec> {
    loop {
        let p = *rng.choose(&params.primes);
        let field = PrimeField::new(p)?;
        let m = rng.range(1, params.max_vars as u64) as usize;
        let side_cap = params.max_side.min(p as usize);
        let sizes: Vec<usize> = (0..m).map(|_| rng.range(1, side_cap as u64) as usize).collect();
        let sets = sizes
            .iter()
            .map(|&k| {
                rng.sample_indices(p as usize, k)
                    .into_iter()
                    .map(|v| field.reduce(v as u64))
                    .collect()
            })
            .collect();
        let grid = Grid::new(field, sets)?;
        let box_size: usize = sizes.iter().product();
        let max_target = (params.max_dimension / 2).clamp(1, box_size.max(1));
        let target = rng.range(1, max_target as u64) as usize;
        let downset = random_downset(&sizes, target, rng)?;
        if downset.len() > params.max_dimension {
            continue;
        }
        let spec = CodeSpec::new(grid, downset)?;
        match (params.max_codewords, codeword_count(&spec)) {
            (Some(limit), Some(c)) if c <= limit => return Ok(spec),
            (None, _) => return Ok(spec),
            _ => continue,
        }
    }
}

/// Zero weights everywhere.
pub fn zero_weights(n: usize) -> Vec<Weight> {
    vec![BigRational::zero(); n]
}
