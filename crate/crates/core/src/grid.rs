//! Evaluation grids `S = S₁ × … × S_m`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// A product set of distinct field elements per coordinate.
///
/// Points are ordered like an odometer: the last coordinate moves fastest and
/// each `S_i` is walked in its given list order. Every word over the grid is a
/// flat vector in this order, so the column `{x} × S_m` for a prefix `x` is a
/// contiguous block of length `k_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    field: PrimeField,
    sets: Vec<Vec<FieldElement>>,
}

impl Grid {
    pub fn new(field: PrimeField, sets: Vec<Vec<FieldElement>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidGrid("a grid needs at least one coordinate".into()));
        }
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidGrid(format!("S_{} is empty", i + 1)));
            }
            for (j, a) in s.iter().enumerate() {
                if !field.contains(*a) {
                    return Err(Error::NotInField {
                        value: a.value(),
                        modulus: field.modulus(),
                    });
                }
                if s[..j].contains(a) {
                    return Err(Error::InvalidGrid(format!(
                        "S_{} repeats the element {}",
                        i + 1,
                        a
                    )));
                }
            }
        }
        Ok(Grid { field, sets })
    }

    /// Convenience constructor from raw integers, each reduced mod `p`.
    pub fn from_values(field: PrimeField, sets: &[Vec<i64>]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|s| s.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::new(field, sets)
    }

    /// `S_i = {0, 1, …, k_i − 1}` for each size.
    pub fn standard(field: PrimeField, sizes: &[usize]) -> Result<Self> {
        let sets = sizes
            .iter()
            .map(|&k| {
                if k as u64 > field.modulus() {
                    return Err(Error::InvalidGrid(format!(
                        "cannot pick {k} distinct elements of {field}"
                    )));
                }
                Ok((0..k as u64).map(|v| field.reduce(v)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, sets)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<FieldElement>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[FieldElement] {
        &self.sets[i]
    }

    /// `(k₁, …, k_m)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// `|S|`.
    pub fn len(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last_set(&self) -> &[FieldElement] {
        self.sets.last().expect("grid has at least one coordinate")
    }

    /// `S̃ = S₁ × … × S_{m−1}`; errors when `m = 1`.
    pub fn prefix_grid(&self) -> Result<Grid> {
        if self.sets.len() < 2 {
            return Err(Error::NoSlices);
        }
        Ok(Grid {
            field: self.field,
            sets: self.sets[..self.sets.len() - 1].to_vec(),
        })
    }

    /// Index tuples of all points in canonical order.
    pub fn index_tuples(&self) -> OdometerIter {
        OdometerIter::new(self.sizes())
    }

    /// All points in canonical order.
    pub fn points(&self) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
        self.index_tuples()
            .map(move |idx| idx.iter().enumerate().map(|(i, &j)| self.sets[i][j]).collect())
    }

    /// Flat position of an index tuple.
    pub fn position(&self, idx: &[usize]) -> usize {
        idx.iter()
            .zip(&self.sets)
            .fold(0, |acc, (&j, s)| acc * s.len() + j)
    }
}

/// Mixed-radix counter over `[0, k₁) × … × [0, k_m)`, last digit fastest.
pub struct OdometerIter {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl OdometerIter {
    pub fn new(sizes: Vec<usize>) -> Self {
        let next = if sizes.iter().all(|&k| k > 0) {
            Some(vec![0; sizes.len()])
        } else {
            None
        };
        OdometerIter { sizes, next }
    }
}

impl Iterator for OdometerIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        for i in (0..nxt.len()).rev() {
            nxt[i] += 1;
            if nxt[i] < self.sizes[i] {
                self.next = Some(nxt);
                return Some(cur);
            }
            nxt[i] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_order_last_fastest() {
        let f5 = PrimeField::new(5).unwrap();
        let g = Grid::from_values(f5, &[vec![0, 1], vec![4, 2, 3]]).unwrap();
        let pts: Vec<Vec<u64>> = g
            .points()
            .map(|p| p.iter().map(|x| x.value()).collect())
            .collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 4],
                vec![0, 2],
                vec![0, 3],
                vec![1, 4],
                vec![1, 2],
                vec![1, 3]
            ]
        );
        for (n, idx) in g.index_tuples().enumerate() {
            assert_eq!(g.position(&idx), n);
        }
        assert_eq!(g.len(), 6);
    }

    #[test]
    fn rejects_bad_grids() {
        let f5 = PrimeField::new(5).unwrap();
        assert!(Grid::from_values(f5, &[]).is_err());
        assert!(Grid::from_values(f5, &[vec![]]).is_err());
        // 6 ≡ 1 mod 5
        assert!(Grid::from_values(f5, &[vec![1, 6]]).is_err());
        assert!(Grid::standard(f5, &[6]).is_err());
    }

    #[test]
    fn negative_values_reduce() {
        let f5 = PrimeField::new(5).unwrap();
        let g = Grid::from_values(f5, &[vec![-1, 0]]).unwrap();
        assert_eq!(g.set(0)[0].value(), 4);
    }
}
