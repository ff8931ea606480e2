//! Downward-closed sets of exponent vectors.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grid::OdometerIter;
use crate::poly::ExponentVector;

/// A nonempty set of exponent vectors closed under taking factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Downset {
    num_vars: usize,
    members: BTreeSet<ExponentVector>,
}

/// True iff every member's lower neighbours are members too. The empty set
/// passes.
pub fn is_downset(num_vars: usize, members: &BTreeSet<ExponentVector>) -> bool {
    members.iter().all(|a| {
        a.num_vars() == num_vars && a.lower_neighbors().all(|b| members.contains(&b))
    })
}

impl Downset {
    /// Validates an explicit member list.
    pub fn new(num_vars: usize, members: BTreeSet<ExponentVector>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidArgument("a downset needs at least one variable".into()));
        }
        if members.is_empty() {
            return Err(Error::Empty("downset"));
        }
        if let Some(bad) = members.iter().find(|a| a.num_vars() != num_vars) {
            return Err(Error::DimensionMismatch {
                expected: num_vars,
                got: bad.num_vars(),
            });
        }
        if let Some((a, b)) = members
            .iter()
            .flat_map(|a| a.lower_neighbors().map(move |b| (a, b)))
            .find(|(_, b)| !members.contains(b))
        {
            return Err(Error::NotDownset(format!(
                "{:?} is a member but its factor {:?} is not",
                a.as_slice(),
                b.as_slice()
            )));
        }
        Ok(Downset { num_vars, members })
    }

    /// Downward closure of the generators.
    pub fn from_generators(num_vars: usize, generators: &[ExponentVector]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Empty("downset generators"));
        }
        let mut members = BTreeSet::new();
        for g in generators {
            if g.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    got: g.num_vars(),
                });
            }
            let sizes = g.as_slice().iter().map(|&e| e as usize + 1).collect();
            for idx in OdometerIter::new(sizes) {
                members.insert(ExponentVector::new(idx.iter().map(|&e| e as u32).collect()));
            }
        }
        Self::new(num_vars, members)
    }

    /// `{α : Σα_i ≤ d}`.
    pub fn total_degree(num_vars: usize, d: u32) -> Result<Self> {
        Self::total_degree_in_box(d, &vec![d as usize + 1; num_vars])
    }

    /// `{α : Σα_i ≤ d, α_i < k_i}`.
    pub fn total_degree_in_box(d: u32, sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidArgument("box sizes must be positive".into()));
        }
        let members = OdometerIter::new(sizes.to_vec())
            .filter(|idx| idx.iter().sum::<usize>() <= d as usize)
            .map(|idx| ExponentVector::new(idx.iter().map(|&e| e as u32).collect()))
            .collect();
        Self::new(sizes.len(), members)
    }

    /// The box `∏ {0, …, e_i}`.
    pub fn individual_degrees(bounds: &[u32]) -> Result<Self> {
        Self::from_generators(bounds.len(), &[ExponentVector::new(bounds.to_vec())])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<ExponentVector> {
        &self.members
    }

    /// Members not strictly below any other member.
    pub fn maximal_elements(&self) -> Vec<ExponentVector> {
        self.members
            .iter()
            .filter(|a| {
                (0..self.num_vars).all(|i| {
                    let mut v = a.as_slice().to_vec();
                    v[i] += 1;
                    !self.members.contains(&ExponentVector::new(v))
                })
            })
            .cloned()
            .collect()
    }

    /// Largest exponent of each variable over all members.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.num_vars];
        for a in &self.members {
            for (o, &e) in out.iter_mut().zip(a.as_slice()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// `deg_m`: the largest exponent of the last variable.
    pub fn last_degree(&self) -> u32 {
        self.members.iter().map(|a| a.last()).max().unwrap_or(0)
    }

    /// `(d, [D₀, …, D_d])` with `D_i = {β : (β, i) ∈ D}`. Each slice is a
    /// downset in one fewer variable and `D₀ ⊇ D₁ ⊇ … ⊇ D_d`.
    pub fn slices(&self) -> Result<(u32, Vec<Downset>)> {
        if self.num_vars < 2 {
            return Err(Error::NoSlices);
        }
        let d = self.last_degree();
        let mut parts = vec![BTreeSet::new(); d as usize + 1];
        for a in &self.members {
            parts[a.last() as usize].insert(a.prefix());
        }
        let slices = parts
            .into_iter()
            .map(|members| Downset {
                num_vars: self.num_vars - 1,
                members,
            })
            .collect();
        Ok((d, slices))
    }

    pub fn is_subset(&self, other: &Downset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// True when every member satisfies `α_i < k_i`.
    pub fn fits_box(&self, sizes: &[usize]) -> bool {
        sizes.len() == self.num_vars
            && self
                .members
                .iter()
                .all(|a| a.as_slice().iter().zip(sizes).all(|(&e, &k)| (e as usize) < k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn set(vs: &[&[u32]]) -> BTreeSet<ExponentVector> {
        vs.iter().map(|v| ev(v)).collect()
    }

    #[test]
    fn closure_of_generators() {
        let d = Downset::from_generators(2, &[ev(&[1, 1])]).unwrap();
        assert_eq!(d.members(), &set(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));

        let d = Downset::from_generators(2, &[ev(&[2, 0]), ev(&[0, 1])]).unwrap();
        assert_eq!(d.members(), &set(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]));

        assert_eq!(Downset::from_generators(2, &[]), Err(Error::Empty("downset generators")));
    }

    #[test]
    fn total_degree_constructor() {
        let d = Downset::total_degree(2, 1).unwrap();
        assert_eq!(d.members(), &set(&[&[0, 0], &[1, 0], &[0, 1]]));
        let boxed = Downset::total_degree_in_box(3, &[2, 2]).unwrap();
        assert_eq!(boxed, Downset::individual_degrees(&[1, 1]).unwrap());
    }

    #[test]
    fn is_downset_examples() {
        assert!(is_downset(2, &set(&[&[0, 0]])));
        assert!(!is_downset(2, &set(&[&[0, 0], &[1, 0], &[1, 1]])));
        assert!(is_downset(2, &BTreeSet::new()));
        assert_eq!(Downset::new(2, BTreeSet::new()), Err(Error::Empty("downset")));
        assert!(matches!(
            Downset::new(2, set(&[&[0, 0], &[1, 0], &[1, 1]])),
            Err(Error::NotDownset(_))
        ));
    }

    #[test]
    fn slice_examples() {
        let (d, s) = Downset::total_degree(2, 2).unwrap().slices().unwrap();
        assert_eq!(d, 2);
        assert_eq!(s[0].members(), &set(&[&[0], &[1], &[2]]));
        assert_eq!(s[1].members(), &set(&[&[0], &[1]]));
        assert_eq!(s[2].members(), &set(&[&[0]]));

        let flat = Downset::from_generators(2, &[ev(&[3, 0])]).unwrap();
        let (d, s) = flat.slices().unwrap();
        assert_eq!(d, 0);
        assert_eq!(s[0].members(), &set(&[&[0], &[1], &[2], &[3]]));

        let (d, s) = Downset::from_generators(2, &[ev(&[1, 1])]).unwrap().slices().unwrap();
        assert_eq!(d, 1);
        assert_eq!(s[0].members(), &set(&[&[0], &[1]]));
        assert_eq!(s[1].members(), &set(&[&[0], &[1]]));

        assert_eq!(
            Downset::individual_degrees(&[2]).unwrap().slices(),
            Err(Error::NoSlices)
        );
    }

    #[test]
    fn maximal_elements_generate() {
        let d = Downset::from_generators(3, &[ev(&[2, 0, 1]), ev(&[0, 3, 0]), ev(&[1, 1, 1])]).unwrap();
        let maxes = d.maximal_elements();
        assert_eq!(maxes.len(), 3);
        assert_eq!(Downset::from_generators(3, &maxes).unwrap(), d);
    }
}
