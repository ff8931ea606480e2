//! Seeded oracle-equivalence fuzzing.
//!
//! Each case draws a random spec and runs four checks:
//!
//! * `distance`: the distance formula against exhaustive enumeration;
//! * `planted`: a codeword with fewer than `μ/2` random errors is recovered;
//! * `weighted`: a corrupted, randomly weighted codeword that is provably
//!   within `μ/2` is recovered, and the brute-force nearest search agrees;
//! * `sound`: on a uniformly random word, any accepted answer is a codeword
//!   within `μ/2`, and matches the brute-force search when that finds one.
//!
//! Case `i` uses its own generator derived from `(seed, i)`, so reports are
//! identical regardless of thread count.

use num_rational::BigRational;
use rayon::prelude::*;

use crate::code::CodeSpec;
use crate::decoder::{decoding_radius, weighted_downset_decode};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::oracle::{
    brute_force_min_distance, brute_force_nearest, codeword_count, corrupt, random_codeword, random_spec,
    random_weight, SpecParams, SplitMix64,
};
use crate::poly::MultivariatePoly;
use crate::weighted::{weighted_distance, WeightedWord};

/// Brute-force checks only run on codes with at most this many codewords.
pub const FUZZ_ENUMERATION_LIMIT: u64 = 1 << 14;

pub type Decoder = dyn Fn(&CodeSpec, &WeightedWord) -> Result<MultivariatePoly> + Sync;

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub cases: u64,
    pub max_p: u64,
    pub max_m: usize,
    pub max_grid: usize,
    pub max_dimension: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            cases: 100,
            max_p: 13,
            max_m: 3,
            max_grid: 5,
            max_dimension: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub line: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub cases: Vec<CaseResult>,
}

impl FuzzReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&c.line);
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} cases, {} passed, {} failed\n",
            self.cases.len(),
            self.passed(),
            self.failed()
        ));
        out
    }
}

fn params(config: &FuzzConfig) -> Result<SpecParams> {
    let primes: Vec<u64> = (2..=config.max_p.min(1 << 16)).filter(|&p| is_prime(p)).collect();
    if primes.is_empty() {
        return Err(Error::InvalidArgument(format!("no prime ≤ {}", config.max_p)));
    }
    if config.max_m == 0 || config.max_grid == 0 {
        return Err(Error::InvalidArgument("--max-m and --max-grid must be positive".into()));
    }
    Ok(SpecParams {
        primes,
        max_vars: config.max_m,
        max_side: config.max_grid,
        max_dimension: config.max_dimension.max(1),
        max_codewords: None,
    })
}

/// Runs the suite against the library decoder.
pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    run_fuzz_with(config, &weighted_downset_decode)
}

/// Runs the suite against any weighted decoder.
pub fn run_fuzz_with(config: &FuzzConfig, decoder: &Decoder) -> Result<FuzzReport> {
    let params = params(config)?;
    let cases = (0..config.cases)
        .into_par_iter()
        .map(|i| run_case(i, config.seed, &params, decoder))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzReport { cases })
}

fn accepted(spec: &CodeSpec, w: &WeightedWord, poly: &MultivariatePoly) -> Result<Option<BigRational>> {
    if spec.check_poly(poly).is_err() {
        return Ok(None);
    }
    let dist = weighted_distance(w, &spec.encode(poly)?)?;
    Ok((dist < decoding_radius(spec)).then_some(dist))
}

fn run_case(index: u64, seed: u64, params: &SpecParams, decoder: &Decoder) -> Result<CaseResult> {
    let mut rng = SplitMix64::for_case(seed, index);
    let spec = random_spec(params, &mut rng)?;
    let f = spec.field();
    let n = spec.len();
    let mu = spec.min_distance();
    let enumerable = codeword_count(&spec).is_some_and(|c| c <= FUZZ_ENUMERATION_LIMIT);
    let mut failures: Vec<&str> = Vec::new();

    if enumerable && brute_force_min_distance(&spec)? != mu {
        failures.push("distance");
    }

    // planted: e uniform in [0, ⌈μ/2⌉ − 1]
    let planted = random_codeword(&spec, &mut rng);
    let clean = spec.encode(&planted)?;
    let max_e = mu.div_ceil(2) - 1;
    let errors = rng.range(0, max_e) as usize;
    let received = corrupt(f, &clean, errors, &mut rng)?;
    let hard = WeightedWord::hard(received);
    let out = decoder(&spec, &hard)?;
    if out != planted || accepted(&spec, &hard, &out)?.is_none() {
        failures.push("planted");
    }

    // weighted: corrupt up to μ − 1 positions, random weights
    let target = random_codeword(&spec, &mut rng);
    let clean = spec.encode(&target)?;
    let e = rng.range(0, (mu - 1).min(n as u64)) as usize;
    let noisy = corrupt(f, &clean, e, &mut rng)?;
    let weights = (0..n).map(|_| random_weight(&mut rng, 6)).collect();
    let w = WeightedWord::new(noisy, weights)?;
    let within = weighted_distance(&w, &clean)? < decoding_radius(&spec);
    if within {
        if decoder(&spec, &w)? != target {
            failures.push("weighted");
        }
        if enumerable && brute_force_nearest(&spec, &w)?.unique_within_radius() != Some(&target) {
            failures.push("weighted-oracle");
        }
    }

    // soundness on a uniformly random word
    let random: Vec<_> = (0..n).map(|_| rng.field_element(f)).collect();
    let rw = WeightedWord::hard(random);
    let out = decoder(&spec, &rw)?;
    let verdict = accepted(&spec, &rw, &out)?;
    if enumerable {
        let oracle = brute_force_nearest(&spec, &rw)?;
        match (oracle.unique_within_radius(), verdict.is_some()) {
            (Some(c), true) if *c == out => {}
            (None, false) => {}
            _ => failures.push("sound"),
        }
    }

    let sizes = spec.grid().sizes();
    let line = format!(
        "case {index:04}: p={} m={} k={:?} dim={} mu={} errors={} weighted={} -> {}",
        f.modulus(),
        sizes.len(),
        sizes,
        spec.dimension(),
        mu,
        errors,
        if within { "within" } else { "outside" },
        if failures.is_empty() {
            "pass".to_string()
        } else {
            format!("FAIL [{}]", failures.join(","))
        }
    );
    Ok(CaseResult {
        line,
        passed: failures.is_empty(),
    })
}
