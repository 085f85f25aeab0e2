//! Polynomials over ℚ(ζₙ) with the contragredient group action.

mod monomial;
mod series;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use monomial::{count_monomials, monomials_of_degree, Monomial, MonomialBasis, MAX_VARS};
pub use series::{
    char_poly_reversed, laplace_det, molien_series, symmetric_power_traces, PowerSeriesTruncation,
    RationalFunction, Ring, UPoly,
};

use crate::error::{Error, Result};
use crate::field::{Cyclotomic, Rational};
use crate::group::{CMatrix, ReflectionGroup};

/// A sparse polynomial with coefficients in ℚ(ζₙ); no zero terms are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Poly {
    pub fn zero(nvars: usize, order: u32) -> Self {
        Poly {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::constant(nvars, Cyclotomic::one(order))
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Cyclotomic::one(order))
    }

    pub fn term(m: Monomial, c: Cyclotomic) -> Self {
        let mut p = Self::zero(m.nvars(), c.order());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        order: u32,
        terms: impl IntoIterator<Item = (Monomial, Cyclotomic)>,
    ) -> Self {
        let mut p = Self::zero(nvars, order);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Σ v[i]·basis[i].
    pub fn from_coordinates(
        basis: &MonomialBasis,
        nvars: usize,
        order: u32,
        v: &[Cyclotomic],
    ) -> Self {
        Self::from_terms(
            nvars,
            order,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (basis.monomial(i), c.clone())),
        )
    }

    /// Coordinates of a homogeneous polynomial on the given basis.
    pub fn coordinates(&self, basis: &MonomialBasis) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(self.order); basis.len()];
        for (m, c) in &self.terms {
            let i = basis.position(m).expect("polynomial degree matches basis");
            v[i] = c.clone();
        }
        v
    }

    /// Sparse coordinates, ascending in column.
    pub fn sparse_coordinates(&self, basis: &MonomialBasis) -> Vec<(usize, Cyclotomic)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                (
                    basis.position(m).expect("polynomial degree matches basis"),
                    c.clone(),
                )
            })
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Cyclotomic {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    /// Largest term in graded-lex order.
    pub fn lead(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    fn add_term(&mut self, m: Monomial, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur = &*cur + c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.order, other.order, "field order mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Cyclotomic::from_int(self.order, -1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.nvars, self.order);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars, self.order), |acc, _| acc.mul(self))
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    /// Formal partial derivative ∂/∂xᵢ.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(
                    m.with_exponent(i, e - 1),
                    &c.scale(&Rational::from(e as i64)),
                );
            }
        }
        out
    }

    /// The scalar c with `self = c·other`, if both are nonzero and
    /// proportional.
    pub fn proportionality(&self, other: &Self) -> Option<Cyclotomic> {
        let (m, a) = self.lead()?;
        let b = other.terms.get(m)?;
        let c = a * &b.inverse()?;
        (self.terms.len() == other.terms.len() && *self == other.scale(&c)).then_some(c)
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[Cyclotomic]) -> Cyclotomic {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .fold(Cyclotomic::zero(self.order), |acc, (m, c)| {
                let v = m
                    .exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |v, (&e, x)| &v * &x.pow(e as u32));
                &acc + &v
            })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let is_const = m.degree() == 0;
            match c.to_rational() {
                Some(q) => {
                    let neg = q.is_negative();
                    match (k, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    let a = q.abs();
                    if is_const {
                        write!(f, "{a}")?;
                    } else if a.is_one() {
                        write!(f, "{m}")?;
                    } else {
                        write!(f, "{a}*{m}")?;
                    }
                }
                None => {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    if is_const {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.nvars, self.order)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
}

/// Substitution xᵢ ↦ Σⱼ A_{ij} xⱼ with cached powers of the linear forms.
pub struct LinearSubstitution {
    forms: Vec<Poly>,
    powers: Vec<Vec<Poly>>,
}

impl LinearSubstitution {
    pub fn new(a: &CMatrix) -> Self {
        let n = a.rows();
        let order = a.ctx();
        let forms: Vec<Poly> = (0..n)
            .map(|i| {
                Poly::from_terms(
                    n,
                    order,
                    (0..n).map(|j| (Monomial::var(n, j), a[(i, j)].clone())),
                )
            })
            .collect();
        let powers = forms
            .iter()
            .map(|f| vec![Poly::one(n, order), f.clone()])
            .collect();
        LinearSubstitution { forms, powers }
    }

    fn power(&mut self, i: usize, e: usize) -> &Poly {
        while self.powers[i].len() <= e {
            let next = self.powers[i].last().expect("seeded").mul(&self.forms[i]);
            self.powers[i].push(next);
        }
        &self.powers[i][e]
    }

    pub fn apply_monomial(&mut self, m: &Monomial) -> Poly {
        let n = self.forms.len();
        let mut out: Option<Poly> = None;
        for i in 0..n {
            let e = m.exponent(i) as usize;
            if e == 0 {
                continue;
            }
            let p = self.power(i, e).clone();
            out = Some(match out {
                None => p,
                Some(acc) => acc.mul(&p),
            });
        }
        out.unwrap_or_else(|| Poly::one(n, self.forms[0].order))
    }

    pub fn apply(&mut self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars, f.order);
        for (m, c) in &f.terms {
            out = out.add(&self.apply_monomial(m).scale(c));
        }
        out
    }
}

/// g(f)(v) = f(g⁻¹v): each xᵢ is replaced by Σⱼ (g⁻¹)_{ij} xⱼ.
pub fn act_by_matrix(g: &CMatrix, f: &Poly) -> Result<Poly> {
    if g.rows() != f.nvars {
        return Err(Error::RankMismatch {
            expected: g.rows(),
            found: f.nvars,
        });
    }
    let inv = g
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("singular matrix".into()))?;
    Ok(LinearSubstitution::new(&inv).apply(f))
}

/// The action of the group element with index `x`.
pub fn act(group: &ReflectionGroup, x: usize, f: &Poly) -> Result<Poly> {
    if group.rank() != f.nvars {
        return Err(Error::RankMismatch {
            expected: group.rank(),
            found: f.nvars,
        });
    }
    Ok(substitution(group, x).apply(f))
}

/// The substitution implementing the action of element `x`.
pub fn substitution(group: &ReflectionGroup, x: usize) -> LinearSubstitution {
    LinearSubstitution::new(group.element(group.inverse(x)))
}

/// Average of g(f) over the group.
pub fn reynolds(group: &ReflectionGroup, f: &Poly) -> Poly {
    let total = (0..group.order()).fold(Poly::zero(f.nvars, f.order), |acc, x| {
        acc.add(&substitution(group, x).apply(f))
    });
    total.scale(&Cyclotomic::from_rational(
        f.order,
        Rational::new(1, group.order() as i64),
    ))
}

/// Reynolds images of every monomial of `basis`, computed with one cached
/// substitution per group element.
pub fn reynolds_of_monomials(group: &ReflectionGroup, basis: &MonomialBasis) -> Vec<Poly> {
    let n = group.rank();
    let order = group.field_order();
    let mut sums = vec![Poly::zero(n, order); basis.len()];
    for x in 0..group.order() {
        let mut sub = substitution(group, x);
        for (k, m) in basis.monomials().iter().enumerate() {
            sums[k] = sums[k].add(&sub.apply_monomial(m));
        }
    }
    let w = Cyclotomic::from_rational(order, Rational::new(1, group.order() as i64));
    sums.iter().map(|p| p.scale(&w)).collect()
}

/// det(∂fᵢ/∂xⱼ).
pub fn jacobian(fs: &[Poly]) -> Result<Poly> {
    let n = fs.first().map_or(0, Poly::nvars);
    if fs.len() != n || n == 0 {
        return Err(Error::RankMismatch {
            expected: n,
            found: fs.len(),
        });
    }
    let rows: Vec<Vec<Poly>> = fs
        .iter()
        .map(|f| (0..n).map(|j| f.partial(j)).collect())
        .collect();
    Ok(laplace_det(&rows))
}

/// det(∂²f/∂xᵢ∂xⱼ).
pub fn hessian(f: &Poly) -> Poly {
    let n = f.nvars;
    let grads: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
    let rows: Vec<Vec<Poly>> = grads
        .iter()
        .map(|g| (0..n).map(|j| g.partial(j)).collect())
        .collect();
    laplace_det(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, lookup};
    use crate::linalg::Matrix;
    use alloc::string::ToString;

    fn w(k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(3, k)
    }
    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(3, k)
    }
    fn x() -> Poly {
        Poly::var(2, 3, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 3, 1)
    }

    fn group(key: &str) -> ReflectionGroup {
        ReflectionGroup::generate(lookup(&builtin(), key).unwrap()).unwrap()
    }

    #[test]
    fn action_examples() {
        let g = Matrix::from_rows(vec![vec![w(1), c(0)], vec![c(0), c(1)]], 3);
        assert_eq!(act_by_matrix(&g, &x()).unwrap(), x().scale(&w(-1)));
        let id = Matrix::identity(2, 3);
        let f = x().pow(2).add(&y().scale(&w(1)));
        assert_eq!(act_by_matrix(&id, &f).unwrap(), f);
        let s = Matrix::from_rows(vec![vec![c(0), c(1)], vec![c(1), c(0)]], 3);
        assert_eq!(
            act_by_matrix(&s, &x().pow(2).mul(&y())).unwrap(),
            y().pow(2).mul(&x())
        );
        let g3 = Matrix::identity(3, 3);
        assert!(matches!(
            act_by_matrix(&g3, &x()),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn reynolds_examples() {
        let c3 = group("C3");
        let t = Poly::var(1, 3, 0);
        assert!(reynolds(&c3, &t).is_zero());
        assert_eq!(reynolds(&c3, &t.pow(3)), t.pow(3));
        let g = group("G(3,1,2)");
        assert!(reynolds(&g, &x().pow(2).mul(&y())).is_zero());
    }

    #[test]
    fn partials() {
        let f = x().pow(3).add(&y().pow(3));
        assert_eq!(f.partial(0), x().pow(2).scale(&c(3)));
        assert!(Poly::one(2, 3).partial(0).is_zero());
        let g = x().pow(3).mul(&y().pow(3));
        assert_eq!(g.partial(1), x().pow(3).mul(&y().pow(2)).scale(&c(3)));
    }

    #[test]
    fn jacobian_and_hessian_examples() {
        let f1 = x().pow(3).add(&y().pow(3));
        let f2 = x().pow(3).mul(&y().pow(3));
        let expected = x()
            .pow(5)
            .mul(&y().pow(2))
            .sub(&x().pow(2).mul(&y().pow(5)))
            .scale(&c(9));
        assert_eq!(jacobian(&[f1.clone(), f2]).unwrap(), expected);
        assert_eq!(jacobian(&[x(), y()]).unwrap(), Poly::one(2, 3));
        assert!(jacobian(&[f1.clone(), f1.clone()]).unwrap().is_zero());
        assert_eq!(hessian(&f1), x().mul(&y()).scale(&c(36)));
        assert_eq!(
            hessian(&x().pow(2).add(&y().pow(2))),
            Poly::constant(2, c(4))
        );
        assert!(hessian(&x().add(&y())).is_zero());
    }

    #[test]
    fn display() {
        let f = x()
            .pow(5)
            .mul(&y().pow(2))
            .scale(&c(9))
            .sub(&x().pow(2).mul(&y().pow(5)).scale(&c(9)));
        assert_eq!(f.to_string(), "9*x^5*y^2 - 9*x^2*y^5");
        let g = x().scale(&w(1)).sub(&Poly::one(2, 3));
        assert_eq!(g.to_string(), "(ζ3)*x - 1");
        assert_eq!(Poly::zero(2, 3).to_string(), "0");
    }

    #[test]
    fn proportionality() {
        let f = x().pow(2).add(&y().scale(&w(1)));
        assert_eq!(f.scale(&w(2)).proportionality(&f), Some(w(2)));
        assert_eq!(f.proportionality(&x()), None);
        assert_eq!(Poly::zero(2, 3).proportionality(&f), None);
    }
}
