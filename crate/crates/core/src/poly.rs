//! Univariate and sparse multivariate polynomials over a prime field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// Exponents `(α₁, …, α_m)` of the monomial `X₁^α₁ ⋯ X_m^α_m`.
///
/// The derived `Ord` is plain lexicographic and only used for storage order;
/// use [`MonomialOrder`] when a monomial order is meant.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(num_vars: usize) -> Self {
        ExponentVector(vec![0; num_vars])
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Coordinatewise `self ⪯ other`, i.e. `X^self` divides `X^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("exponent vector with no variables")
    }

    /// Drops the last coordinate.
    pub fn prefix(&self) -> ExponentVector {
        ExponentVector(self.0[..self.0.len() - 1].to_vec())
    }

    /// Appends a coordinate.
    pub fn extend(&self, last: u32) -> ExponentVector {
        let mut v = self.0.clone();
        v.push(last);
        ExponentVector(v)
    }

    /// Vectors obtained by decrementing exactly one positive coordinate.
    pub fn lower_neighbors(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).map(move |i| {
            let mut v = self.0.clone();
            v[i] -= 1;
            ExponentVector(v)
        })
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

/// Monomial orders with `X₁ > X₂ > … > X_m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GradedLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GradedLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.0.cmp(&b.0)),
        }
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    field: PrimeField,
    coeffs: Vec<FieldElement>,
}

impl UnivariatePoly {
    pub fn zero(field: PrimeField) -> Self {
        UnivariatePoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The monomial `X`.
    pub fn x(field: PrimeField) -> Self {
        Self::from_coeffs(field, vec![FieldElement::ZERO, FieldElement::ONE])
    }

    pub fn from_coeffs(field: PrimeField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { field, coeffs }
    }

    /// `∏ (X − r)` over the given roots.
    pub fn from_roots(field: PrimeField, roots: &[FieldElement]) -> Self {
        let mut coeffs = vec![FieldElement::ONE];
        for &r in roots {
            let neg_r = field.neg(r);
            let mut next = vec![FieldElement::ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, neg_r));
            }
            coeffs = next;
        }
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = &self.field;
        Self::from_coeffs(self.field, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(self.field, out)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(rem[k], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((
            Self::from_coeffs(self.field, quot),
            Self::from_coeffs(self.field, rem),
        ))
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Lagrange interpolation through points with distinct abscissas. Returns the
/// unique polynomial of degree `< points.len()`.
pub fn interpolate_univariate(
    field: PrimeField,
    points: &[(FieldElement, FieldElement)],
) -> Result<UnivariatePoly> {
    if points.is_empty() {
        return Err(Error::Empty("interpolation points"));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::RepeatedPoint(xi.value()));
        }
    }
    let xs: Vec<FieldElement> = points.iter().map(|&(x, _)| x).collect();
    let basis = lagrange_basis(field, &xs)?;
    let n = points.len();
    let mut coeffs = vec![FieldElement::ZERO; n];
    for (row, &(_, y)) in basis.iter().zip(points) {
        for (c, &b) in coeffs.iter_mut().zip(row) {
            *c = field.add(*c, field.mul(b, y));
        }
    }
    Ok(UnivariatePoly::from_coeffs(field, coeffs))
}

/// Coefficient vectors (length `n`, lowest degree first) of the Lagrange basis
/// polynomials `ℓ_j` for distinct nodes `xs`. Callers check distinctness.
pub(crate) fn lagrange_basis(field: PrimeField, xs: &[FieldElement]) -> Result<Vec<Vec<FieldElement>>> {
    let n = xs.len();
    let full = UnivariatePoly::from_roots(field, xs);
    xs.iter()
        .enumerate()
        .map(|(j, &xj)| {
            let (num, _) = full.div_rem(&UnivariatePoly::from_roots(field, &[xj]))?;
            let denom = xs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .fold(FieldElement::ONE, |acc, (_, &xk)| {
                    field.mul(acc, field.sub(xj, xk))
                });
            let scaled = num.scale(field.inv(denom)?);
            let mut row = scaled.coeffs().to_vec();
            row.resize(n, FieldElement::ZERO);
            Ok(row)
        })
        .collect()
}

/// Sparse multivariate polynomial: exponent vector → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariatePoly {
    field: PrimeField,
    num_vars: usize,
    terms: BTreeMap<ExponentVector, FieldElement>,
}

impl MultivariatePoly {
    pub fn zero(field: PrimeField, num_vars: usize) -> Self {
        MultivariatePoly {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, num_vars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, num_vars);
        p.add_term(ExponentVector::zero(num_vars), c);
        p
    }

    pub fn monomial(field: PrimeField, exponents: ExponentVector, c: FieldElement) -> Self {
        let mut p = Self::zero(field, exponents.num_vars());
        p.add_term(exponents, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(field: PrimeField, num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, FieldElement)>,
    {
        let mut p = Self::zero(field, num_vars);
        for (e, c) in terms {
            if e.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    got: e.num_vars(),
                });
            }
            if !field.contains(c) {
                return Err(Error::NotInField {
                    value: c.value(),
                    modulus: field.modulus(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn from_univariate(u: &UnivariatePoly) -> Self {
        let mut p = Self::zero(u.field(), 1);
        for (i, &c) in u.coeffs().iter().enumerate() {
            p.add_term(ExponentVector(vec![i as u32]), c);
        }
        p
    }

    /// Requires `num_vars == 1`.
    pub fn to_univariate(&self) -> Result<UnivariatePoly> {
        if self.num_vars != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: self.num_vars,
            });
        }
        let len = self.terms.keys().map(|e| e[0] as usize + 1).max().unwrap_or(0);
        let mut coeffs = vec![FieldElement::ZERO; len];
        for (e, &c) in &self.terms {
            coeffs[e[0] as usize] = c;
        }
        Ok(UnivariatePoly::from_coeffs(self.field, coeffs))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, FieldElement)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// `mSupp(P)`: the monomials with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> FieldElement {
        self.terms.get(e).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn add_term(&mut self, e: ExponentVector, c: FieldElement) {
        debug_assert_eq!(e.num_vars(), self.num_vars);
        if c.is_zero() {
            return;
        }
        let f = self.field;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.modulus(), other.field.modulus()));
        }
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.num_vars);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                out.add_term(ExponentVector(e), f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        if let Some(bad) = point.iter().find(|&&x| !self.field.contains(x)) {
            return Err(Error::NotInField {
                value: bad.value(),
                modulus: self.field.modulus(),
            });
        }
        let f = &self.field;
        let mut acc = FieldElement::ZERO;
        for (e, c) in self.terms() {
            let term = e
                .0
                .iter()
                .zip(point)
                .fold(c, |t, (&k, &x)| f.mul(t, f.pow(x, k as u64)));
            acc = f.add(acc, term);
        }
        Ok(acc)
    }

    /// Largest exponent of each variable (zeros for the zero polynomial).
    pub fn individual_degrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.num_vars];
        for e in self.terms.keys() {
            for (o, &k) in out.iter_mut().zip(&e.0) {
                *o = (*o).max(k);
            }
        }
        out
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<ExponentVector> {
        self.terms
            .keys()
            .max_by(|a, b| order.compare(a, b))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Writing `P = Σ_j P_j(X₁..X_{m−1}) X_m^j`, returns `P_j`.
    pub fn coefficient_of_last(&self, j: u32) -> Result<Self> {
        if self.num_vars < 2 {
            return Err(Error::NoSlices);
        }
        let mut out = Self::zero(self.field, self.num_vars - 1);
        for (e, c) in self.terms() {
            if e.last() == j {
                out.add_term(e.prefix(), c);
            }
        }
        Ok(out)
    }

    /// `P(X₁..X_m) · X_{m+1}^j` as a polynomial in `m + 1` variables.
    pub fn times_new_last(&self, j: u32) -> Self {
        MultivariatePoly {
            field: self.field,
            num_vars: self.num_vars + 1,
            terms: self.terms.iter().map(|(e, &c)| (e.extend(j), c)).collect(),
        }
    }
}

impl fmt::Display for MultivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*X{}", i + 1)?,
                    _ => write!(f, "*X{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(field: PrimeField, v: u64) -> FieldElement {
        field.element(v).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn eval_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let p = MultivariatePoly::from_terms(
            f3,
            2,
            [(ev(&[1, 0]), FieldElement::ONE), (ev(&[0, 1]), FieldElement::ONE)],
        )
        .unwrap();
        assert_eq!(p.eval(&[fe(f3, 1), fe(f3, 2)]).unwrap(), FieldElement::ZERO);
        assert_eq!(
            MultivariatePoly::zero(f3, 2).eval(&[fe(f3, 2), fe(f3, 1)]).unwrap(),
            FieldElement::ZERO
        );
        assert!(matches!(
            p.eval(&[fe(f3, 1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));

        let f5 = PrimeField::new(5).unwrap();
        let q = MultivariatePoly::monomial(f5, ev(&[2, 1]), FieldElement::ONE);
        // 2^2 * 3 = 12 = 2 mod 5
        assert_eq!(q.eval(&[fe(f5, 2), fe(f5, 3)]).unwrap(), fe(f5, 2));
    }

    #[test]
    fn univariate_interpolation_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let c = interpolate_univariate(f5, &[(fe(f5, 0), fe(f5, 4))]).unwrap();
        assert_eq!(c, UnivariatePoly::constant(f5, fe(f5, 4)));

        let id = interpolate_univariate(
            f5,
            &[(fe(f5, 0), fe(f5, 0)), (fe(f5, 1), fe(f5, 1)), (fe(f5, 2), fe(f5, 2))],
        )
        .unwrap();
        assert_eq!(id, UnivariatePoly::x(f5));

        let f7 = PrimeField::new(7).unwrap();
        let pts = [(fe(f7, 0), fe(f7, 1)), (fe(f7, 1), fe(f7, 2)), (fe(f7, 3), fe(f7, 3))];
        let q = interpolate_univariate(f7, &pts).unwrap();
        assert!(q.degree().unwrap() <= 2);
        for (x, y) in pts {
            assert_eq!(q.eval(x), y);
        }

        assert_eq!(
            interpolate_univariate(f7, &[(fe(f7, 3), fe(f7, 1)), (fe(f7, 3), fe(f7, 2))]),
            Err(Error::RepeatedPoint(3))
        );
        assert_eq!(interpolate_univariate(f7, &[]), Err(Error::Empty("interpolation points")));
    }

    #[test]
    fn leading_monomial_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let one = FieldElement::ONE;
        let p = MultivariatePoly::from_terms(f5, 2, [(ev(&[1, 0]), one), (ev(&[0, 1]), one)]).unwrap();
        assert_eq!(p.leading_monomial(MonomialOrder::GradedLex).unwrap(), ev(&[1, 0]));

        let c = MultivariatePoly::constant(f5, 3, fe(f5, 4));
        assert_eq!(c.leading_monomial(MonomialOrder::GradedLex).unwrap(), ev(&[0, 0, 0]));

        let q = MultivariatePoly::from_terms(f5, 2, [(ev(&[2, 0]), one), (ev(&[0, 3]), one)]).unwrap();
        assert_eq!(q.leading_monomial(MonomialOrder::GradedLex).unwrap(), ev(&[0, 3]));
        assert_eq!(q.leading_monomial(MonomialOrder::Lex).unwrap(), ev(&[2, 0]));

        assert_eq!(
            MultivariatePoly::zero(f5, 2).leading_monomial(MonomialOrder::GradedLex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f3 = PrimeField::new(3).unwrap();
        let p = MultivariatePoly::from_terms(
            f3,
            1,
            [(ev(&[1]), fe(f3, 1)), (ev(&[1]), fe(f3, 2)), (ev(&[0]), FieldElement::ZERO)],
        )
        .unwrap();
        assert!(p.is_zero());
        assert_eq!(p, MultivariatePoly::zero(f3, 1));
    }

    #[test]
    fn div_rem_reconstructs() {
        let f7 = PrimeField::new(7).unwrap();
        let a = UnivariatePoly::from_coeffs(f7, [3, 0, 5, 1, 6].iter().map(|&v| fe(f7, v)).collect());
        let b = UnivariatePoly::from_coeffs(f7, [1, 2, 3].iter().map(|&v| fe(f7, v)).collect());
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(a.div_rem(&UnivariatePoly::zero(f7)), Err(Error::DivisionByZero));
    }

    #[test]
    fn from_roots_vanishes_on_roots() {
        let f11 = PrimeField::new(11).unwrap();
        let roots: Vec<_> = [0, 3, 7, 10].iter().map(|&v| fe(f11, v)).collect();
        let p = UnivariatePoly::from_roots(f11, &roots);
        assert_eq!(p.degree(), Some(4));
        for r in roots {
            assert!(p.eval(r).is_zero());
        }
        assert!(!p.eval(fe(f11, 1)).is_zero());
    }

    #[test]
    fn last_variable_split_roundtrip() {
        let f5 = PrimeField::new(5).unwrap();
        let p = MultivariatePoly::from_terms(
            f5,
            2,
            [(ev(&[1, 2]), fe(f5, 3)), (ev(&[0, 2]), fe(f5, 1)), (ev(&[2, 0]), fe(f5, 4))],
        )
        .unwrap();
        let mut rebuilt = MultivariatePoly::zero(f5, 2);
        for j in 0..=2 {
            rebuilt = rebuilt.add(&p.coefficient_of_last(j).unwrap().times_new_last(j)).unwrap();
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = MultivariatePoly::zero(PrimeField::new(5).unwrap(), 1);
        let b = MultivariatePoly::zero(PrimeField::new(7).unwrap(), 1);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch(5, 7)));
    }
}
