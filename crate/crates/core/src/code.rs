//! The downset code `C(S, D)`: encoding, membership and minimum distance.

use crate::downset::Downset;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::grid::Grid;
use crate::interp::{eval_on_grid, grid_interpolate};
use crate::poly::{ExponentVector, MultivariatePoly, UnivariatePoly};

/// A validated grid/downset pair. The downset must live inside the box
/// `α_i ≤ k_i − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    grid: Grid,
    downset: Downset,
}

/// `|∇(α)| = ∏ (k_i − α_i)`.
pub fn nabla_size(alpha: &ExponentVector, grid: &Grid) -> Result<u64> {
    let sizes = grid.sizes();
    if alpha.num_vars() != sizes.len() {
        return Err(Error::DimensionMismatch {
            expected: sizes.len(),
            got: alpha.num_vars(),
        });
    }
    if alpha.as_slice().iter().zip(&sizes).any(|(&a, &k)| a as usize >= k) {
        return Err(Error::OutsideBox(alpha.as_slice().to_vec()));
    }
    Ok(alpha
        .as_slice()
        .iter()
        .zip(&sizes)
        .map(|(&a, &k)| (k - a as usize) as u64)
        .product())
}

impl CodeSpec {
    pub fn new(grid: Grid, downset: Downset) -> Result<Self> {
        if downset.num_vars() != grid.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: grid.num_vars(),
                got: downset.num_vars(),
            });
        }
        let sizes = grid.sizes();
        if let Some(bad) = downset
            .maximal_elements()
            .into_iter()
            .find(|a| a.as_slice().iter().zip(&sizes).any(|(&e, &k)| e as usize >= k))
        {
            return Err(Error::OutsideBox(bad.into_vec()));
        }
        Ok(CodeSpec { grid, downset })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn downset(&self) -> &Downset {
        &self.downset
    }

    pub fn field(&self) -> PrimeField {
        self.grid.field()
    }

    /// Block length `|S|`.
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|D|`, the dimension of the code.
    pub fn dimension(&self) -> usize {
        self.downset.len()
    }

    /// `μ(S, D)`.
    pub fn min_distance(&self) -> u64 {
        self.min_distance_witness().0
    }

    /// `μ(S, D)` together with a maximal member attaining it. Only maximal
    /// members are scanned since `|∇(α)|` decreases as `α` grows.
    pub fn min_distance_witness(&self) -> (u64, ExponentVector) {
        self.downset
            .maximal_elements()
            .into_iter()
            .map(|a| (nabla_size(&a, &self.grid).expect("validated spec"), a))
            .min_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)))
            .expect("downset is nonempty")
    }

    /// Restriction to `S̃ × S_m`: the prefix grid and each slice `D_i`, as
    /// code specs, with `d = deg_m(D)`.
    pub fn sliced(&self) -> Result<(u32, Grid, Vec<CodeSpec>)> {
        let (d, slices) = self.downset.slices()?;
        let prefix = self.grid.prefix_grid()?;
        let specs = slices
            .into_iter()
            .map(|s| CodeSpec::new(prefix.clone(), s))
            .collect::<Result<_>>()?;
        Ok((d, prefix, specs))
    }

    pub fn check_poly(&self, p: &MultivariatePoly) -> Result<()> {
        if p.field() != self.field() {
            return Err(Error::FieldMismatch(self.field().modulus(), p.field().modulus()));
        }
        if p.num_vars() != self.grid.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.grid.num_vars(),
                got: p.num_vars(),
            });
        }
        if let Some(bad) = p.support().find(|e| !self.downset.contains(e)) {
            return Err(Error::NotInDownset(bad.as_slice().to_vec()));
        }
        Ok(())
    }

    /// Evaluation table of `Σ c_α X^α` in canonical point order.
    pub fn encode(&self, coefficients: &MultivariatePoly) -> Result<Vec<FieldElement>> {
        self.check_poly(coefficients)?;
        eval_on_grid(coefficients, &self.grid)
    }

    /// `∏_i ∏_{j<α_i} (X_i − S_i[j])`: a codeword of weight exactly `|∇(α)|`.
    pub fn min_weight_witness(&self, alpha: &ExponentVector) -> Result<MultivariatePoly> {
        if !self.downset.contains(alpha) {
            return Err(Error::NotInDownset(alpha.as_slice().to_vec()));
        }
        let f = self.field();
        let m = self.grid.num_vars();
        let mut out = MultivariatePoly::constant(f, m, FieldElement::ONE);
        for i in 0..m {
            let roots = &self.grid.set(i)[..alpha[i] as usize];
            let factor = UnivariatePoly::from_roots(f, roots);
            let lifted = MultivariatePoly::from_terms(
                f,
                m,
                factor.coeffs().iter().enumerate().map(|(t, &c)| {
                    let mut e = vec![0; m];
                    e[i] = t as u32;
                    (ExponentVector::new(e), c)
                }),
            )?;
            out = out.mul(&lifted)?;
        }
        Ok(out)
    }

    pub fn is_codeword(&self, word: &[FieldElement]) -> Result<bool> {
        let p = grid_interpolate(&self.grid, word)?;
        let inside = p.support().all(|e| self.downset.contains(e));
        Ok(inside)
    }
}
