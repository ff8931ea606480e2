//! Moving between functions on a grid and their reduced polynomial form.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::grid::Grid;
use crate::poly::{lagrange_basis, ExponentVector, MultivariatePoly, UnivariatePoly};

fn check_field(grid: &Grid, p: &MultivariatePoly) -> Result<()> {
    if grid.field() != p.field() {
        return Err(Error::FieldMismatch(grid.field().modulus(), p.field().modulus()));
    }
    if grid.num_vars() != p.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: grid.num_vars(),
            got: p.num_vars(),
        });
    }
    Ok(())
}

/// Evaluates `p` at every grid point, in canonical order.
pub fn eval_on_grid(p: &MultivariatePoly, grid: &Grid) -> Result<Vec<FieldElement>> {
    check_field(grid, p)?;
    let f = grid.field();
    let max_deg = p.individual_degrees();
    // powers[i][j][e] = (S_i[j])^e
    let powers: Vec<Vec<Vec<FieldElement>>> = grid
        .sets()
        .iter()
        .zip(&max_deg)
        .map(|(s, &d)| {
            s.iter()
                .map(|&a| {
                    let mut row = Vec::with_capacity(d as usize + 1);
                    let mut acc = FieldElement::ONE;
                    for _ in 0..=d {
                        row.push(acc);
                        acc = f.mul(acc, a);
                    }
                    row
                })
                .collect()
        })
        .collect();
    let terms: Vec<(&ExponentVector, FieldElement)> = p.terms().collect();
    Ok(grid
        .index_tuples()
        .map(|idx| {
            terms.iter().fold(FieldElement::ZERO, |acc, &(e, c)| {
                let t = idx
                    .iter()
                    .enumerate()
                    .fold(c, |t, (i, &j)| f.mul(t, powers[i][j][e[i] as usize]));
                f.add(acc, t)
            })
        })
        .collect())
}

/// The unique polynomial with `deg_{X_i} < k_i` agreeing with `word` on the
/// grid. Interpolates along one coordinate at a time.
pub fn grid_interpolate(grid: &Grid, word: &[FieldElement]) -> Result<MultivariatePoly> {
    let f = grid.field();
    let n = grid.len();
    if word.len() != n {
        return Err(Error::IncompleteTable {
            expected: n,
            got: word.len(),
        });
    }
    if let Some(bad) = word.iter().find(|&&v| !f.contains(v)) {
        return Err(Error::NotInField {
            value: bad.value(),
            modulus: f.modulus(),
        });
    }
    let sizes = grid.sizes();
    let mut data = word.to_vec();
    // stride of coordinate i in the flat layout
    let mut stride = 1;
    for axis in (0..sizes.len()).rev() {
        let k = sizes[axis];
        let basis = lagrange_basis(f, grid.set(axis))?;
        let block = stride * k;
        let mut fiber = vec![FieldElement::ZERO; k];
        for base in (0..n).step_by(block) {
            for off in 0..stride {
                let start = base + off;
                for (j, v) in fiber.iter_mut().enumerate() {
                    *v = data[start + j * stride];
                }
                for t in 0..k {
                    let c = basis
                        .iter()
                        .zip(&fiber)
                        .fold(FieldElement::ZERO, |acc, (row, &y)| {
                            f.add(acc, f.mul(row[t], y))
                        });
                    data[start + t * stride] = c;
                }
            }
        }
        stride = block;
    }
    let terms = grid
        .index_tuples()
        .zip(data)
        .map(|(idx, c)| (ExponentVector::new(idx.iter().map(|&j| j as u32).collect()), c));
    MultivariatePoly::from_terms(f, grid.num_vars(), terms)
}

/// Reduces `X_i^e` modulo `∏_{a∈S_i}(X_i − a)` in every variable. The result
/// has `deg_{X_i} < k_i`, agrees with `p` on the grid, and each of its
/// monomials divides a monomial of `p`.
pub fn reduce_individual_degrees(p: &MultivariatePoly, grid: &Grid) -> Result<MultivariatePoly> {
    check_field(grid, p)?;
    let f = grid.field();
    let max_deg = p.individual_degrees();
    // remainders[i][e] = X^e mod f_i as a dense coefficient vector
    let remainders: Vec<Vec<UnivariatePoly>> = grid
        .sets()
        .iter()
        .zip(&max_deg)
        .map(|(s, &d)| {
            let vanishing = UnivariatePoly::from_roots(f, s);
            let x = UnivariatePoly::x(f);
            let mut out = Vec::with_capacity(d as usize + 1);
            let mut cur = UnivariatePoly::constant(f, FieldElement::ONE);
            for _ in 0..=d {
                let (_, r) = cur.div_rem(&vanishing)?;
                out.push(r.clone());
                cur = r.mul(&x);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let m = grid.num_vars();
    let mut out = MultivariatePoly::zero(f, m);
    for (e, c) in p.terms() {
        // expand c · ∏_i rem_i(X_i) term by term
        let mut partial: Vec<(Vec<u32>, FieldElement)> = vec![(Vec::with_capacity(m), c)];
        for i in 0..m {
            let r = &remainders[i][e[i] as usize];
            let mut next = Vec::with_capacity(partial.len() * r.coeffs().len());
            for (exps, coef) in &partial {
                for (t, &rc) in r.coeffs().iter().enumerate() {
                    if rc.is_zero() {
                        continue;
                    }
                    let mut ex = exps.clone();
                    ex.push(t as u32);
                    next.push((ex, f.mul(*coef, rc)));
                }
            }
            partial = next;
        }
        for (ex, coef) in partial {
            out.add_term(ExponentVector::new(ex), coef);
        }
    }
    Ok(out)
}

/// Number of grid points where the word is nonzero.
pub fn hamming_weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|v| !v.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn zero_table_interpolates_to_zero() {
        let f5 = PrimeField::new(5).unwrap();
        let g = Grid::standard(f5, &[3, 2]).unwrap();
        let p = grid_interpolate(&g, &[FieldElement::ZERO; 6]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn product_on_boolean_square() {
        let f2 = PrimeField::new(2).unwrap();
        let g = Grid::standard(f2, &[2, 2]).unwrap();
        let word: Vec<_> = [0, 0, 0, 1].iter().map(|&v| f2.reduce(v)).collect();
        let p = grid_interpolate(&g, &word).unwrap();
        assert_eq!(p, MultivariatePoly::monomial(f2, ev(&[1, 1]), FieldElement::ONE));
    }

    #[test]
    fn incomplete_table_rejected() {
        let f5 = PrimeField::new(5).unwrap();
        let g = Grid::standard(f5, &[3, 3]).unwrap();
        assert_eq!(
            grid_interpolate(&g, &[FieldElement::ZERO; 8]),
            Err(Error::IncompleteTable { expected: 9, got: 8 })
        );
    }

    #[test]
    fn reduction_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let g = Grid::standard(f2, &[2]).unwrap();
        let sq = MultivariatePoly::monomial(f2, ev(&[2]), FieldElement::ONE);
        assert_eq!(
            reduce_individual_degrees(&sq, &g).unwrap(),
            MultivariatePoly::monomial(f2, ev(&[1]), FieldElement::ONE)
        );

        let f5 = PrimeField::new(5).unwrap();
        let g = Grid::standard(f5, &[3]).unwrap();
        let cube = MultivariatePoly::monomial(f5, ev(&[3]), FieldElement::ONE);
        let r = reduce_individual_degrees(&cube, &g).unwrap();
        assert!(r.individual_degrees()[0] <= 2);
        assert_eq!(eval_on_grid(&r, &g).unwrap(), eval_on_grid(&cube, &g).unwrap());

        let reduced = MultivariatePoly::monomial(f5, ev(&[2]), f5.reduce(3));
        assert_eq!(reduce_individual_degrees(&reduced, &g).unwrap(), reduced);
    }

    fn arb_case() -> impl Strategy<Value = (u64, Vec<usize>, u64)> {
        (prop::sample::select(vec![2u64, 3, 5, 7]), prop::collection::vec(1usize..=4, 1..=3), any::<u64>())
    }

    fn setup(p: u64, sizes: &[usize], seed: u64) -> (Grid, Vec<FieldElement>) {
        let f = PrimeField::new(p).unwrap();
        let sizes: Vec<usize> = sizes.iter().map(|&k| k.min(p as usize)).collect();
        let g = Grid::standard(f, &sizes).unwrap();
        let mut s = seed;
        let word = (0..g.len())
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.reduce(s >> 33)
            })
            .collect();
        (g, word)
    }

    proptest! {
        #[test]
        fn interpolate_then_evaluate_is_identity((p, sizes, seed) in arb_case()) {
            let (g, word) = setup(p, &sizes, seed);
            let poly = grid_interpolate(&g, &word).unwrap();
            for (d, k) in poly.individual_degrees().iter().zip(g.sizes()) {
                prop_assert!((*d as usize) < k);
            }
            prop_assert_eq!(eval_on_grid(&poly, &g).unwrap(), word);
        }

        #[test]
        fn evaluate_then_interpolate_is_identity((p, sizes, seed) in arb_case()) {
            let (g, word) = setup(p, &sizes, seed);
            // a random reduced polynomial: interpolate a random table
            let poly = grid_interpolate(&g, &word).unwrap();
            let again = grid_interpolate(&g, &eval_on_grid(&poly, &g).unwrap()).unwrap();
            prop_assert_eq!(again, poly);
        }

        #[test]
        fn reduction_preserves_function_and_support(
            (p, sizes, seed) in arb_case(),
            raw in prop::collection::vec((prop::collection::vec(0u32..7, 3), 1u64..100), 0..6),
        ) {
            let (g, _) = setup(p, &sizes, seed);
            let f = g.field();
            let m = g.num_vars();
            let poly = MultivariatePoly::from_terms(
                f,
                m,
                raw.into_iter().map(|(e, c)| (ExponentVector::new(e[..m].to_vec()), f.reduce(c))),
            ).unwrap();
            let red = reduce_individual_degrees(&poly, &g).unwrap();
            prop_assert_eq!(eval_on_grid(&red, &g).unwrap(), eval_on_grid(&poly, &g).unwrap());
            for (d, k) in red.individual_degrees().iter().zip(g.sizes()) {
                prop_assert!((*d as usize) < k);
            }
            for e in red.support() {
                prop_assert!(poly.support().any(|big| e.divides(big)));
            }
            // reduced form is the interpolant
            prop_assert_eq!(red.clone(), grid_interpolate(&g, &eval_on_grid(&poly, &g).unwrap()).unwrap());
        }

        #[test]
        fn support_at_least_nabla_of_leading_monomial((p, sizes, seed) in arb_case()) {
            let (g, word) = setup(p, &sizes, seed);
            let poly = grid_interpolate(&g, &word).unwrap();
            prop_assume!(!poly.is_zero());
            let lead = poly.leading_monomial(MonomialOrder::GradedLex).unwrap();
            let nabla: usize = g.sizes().iter().enumerate().map(|(i, &k)| k - lead[i] as usize).product();
            prop_assert!(hamming_weight(&word) >= nabla);
        }
    }
}
