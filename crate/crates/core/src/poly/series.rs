use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Cyclotomic, Rational};
use crate::group::{CMatrix, ReflectionGroup};

/// The commutative ring operations needed by [`laplace_det`].
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Determinant by cofactor expansion along the first row. Intended for the
/// small matrices (ℓ ≤ 4) of Jacobians, Hessians and characteristic
/// polynomials.
pub fn laplace_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "square nonempty matrix"
    );
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..n {
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&laplace_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// A dense univariate polynomial in t over ℚ(ζₙ), without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    order: u32,
    coeffs: Vec<Cyclotomic>,
}

impl UPoly {
    pub fn zero(order: u32) -> Self {
        UPoly {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_coeffs(c.order(), vec![c])
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Cyclotomic::one(order))
    }

    /// c·tᵏ.
    pub fn monomial(c: Cyclotomic, k: usize) -> Self {
        let order = c.order();
        let mut coeffs = vec![Cyclotomic::zero(order); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(order, coeffs)
    }

    pub fn t(order: u32) -> Self {
        Self::monomial(Cyclotomic::one(order), 1)
    }

    pub fn from_coeffs(order: u32, mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().is_some_and(Cyclotomic::is_zero) {
            coeffs.pop();
        }
        UPoly { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients from the constant term up.
    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Cyclotomic {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            self.order,
            (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            self.order,
            (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut out =
            vec![Cyclotomic::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::from_coeffs(self.order, out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: &Cyclotomic) -> Cyclotomic {
        self.coeffs
            .iter()
            .rev()
            .fold(Cyclotomic::zero(self.order), |acc, c| &(&acc * t) + c)
    }

    /// Value at t = 1.
    pub fn sum(&self) -> Cyclotomic {
        self.coeffs
            .iter()
            .fold(Cyclotomic::zero(self.order), |acc, c| &acc + c)
    }

    /// Pointwise complex conjugation of the coefficients.
    pub fn conj(&self) -> Self {
        Self::from_coeffs(
            self.order,
            self.coeffs.iter().map(Cyclotomic::conj).collect(),
        )
    }

    /// Power-series coefficients of 1/self through degree `bound`; the
    /// constant term must be nonzero.
    pub fn inverse_series(&self, bound: usize) -> Vec<Cyclotomic> {
        let c0 = self.coeff(0);
        let inv0 = c0.inverse().expect("series with invertible constant term");
        let mut a: Vec<Cyclotomic> = Vec::with_capacity(bound + 1);
        for k in 0..=bound {
            let mut s = if k == 0 {
                Cyclotomic::one(self.order)
            } else {
                Cyclotomic::zero(self.order)
            };
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                s = &s - &(&self.coeffs[j] * &a[k - j]);
            }
            a.push(&s * &inv0);
        }
        a
    }
}

impl Ring for UPoly {
    fn zero_like(&self) -> Self {
        UPoly::zero(self.order)
    }
    fn add(&self, other: &Self) -> Self {
        UPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UPoly::mul(self, other)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let simple = c.is_rational();
            match (k, simple) {
                (0, _) => write!(f, "{c}")?,
                (_, true) if c.is_one() => {}
                (_, true) => write!(f, "{c}*")?,
                (_, false) => write!(f, "({c})*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A quotient of univariate polynomials, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: UPoly,
    pub denominator: UPoly,
}

impl RationalFunction {
    pub fn new(numerator: UPoly, denominator: UPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        RationalFunction {
            numerator,
            denominator,
        }
    }

    /// numerator = p·denominator exactly.
    pub fn equals_polynomial(&self, p: &UPoly) -> bool {
        self.numerator == p.mul(&self.denominator)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }
}

/// Rational power-series coefficients through a recorded degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeriesTruncation {
    coeffs: Vec<Rational>,
}

impl PowerSeriesTruncation {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "truncation keeps at least the constant term"
        );
        PowerSeriesTruncation { coeffs }
    }

    /// Highest degree whose coefficient is known.
    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of tᵐ; panics past the bound.
    pub fn coeff(&self, m: usize) -> &Rational {
        assert!(
            m <= self.bound(),
            "coefficient {m} beyond truncation {}",
            self.bound()
        );
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients of Π 1/(1 − t^{dᵢ}) through `bound`.
    pub fn from_degrees(degrees: &[u32], bound: usize) -> Self {
        let mut c = vec![Rational::ZERO; bound + 1];
        c[0] = Rational::ONE;
        for &d in degrees {
            let d = d as usize;
            for m in d..=bound {
                let v = &c[m] + &c[m - d];
                c[m] = v;
            }
        }
        PowerSeriesTruncation { coeffs: c }
    }
}

/// det(I − t·M).
pub fn char_poly_reversed(m: &CMatrix) -> UPoly {
    let n = m.rows();
    let order = m.ctx();
    let t = UPoly::t(order);
    let rows: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let delta = if i == j {
                        UPoly::one(order)
                    } else {
                        UPoly::zero(order)
                    };
                    delta.sub(&t.scale(&m[(i, j)]))
                })
                .collect()
        })
        .collect();
    laplace_det(&rows)
}

/// (1/|G|) Σ_g 1/det(1 − t·g) through degree `bound`. With `per_class`, one
/// representative per conjugacy class is expanded and weighted by the class
/// size.
pub fn molien_series(
    group: &ReflectionGroup,
    bound: usize,
    per_class: bool,
) -> PowerSeriesTruncation {
    let order = group.field_order();
    let mut total = vec![Cyclotomic::zero(order); bound + 1];
    let weighted: Vec<(usize, usize)> = if per_class {
        group
            .class_reps()
            .iter()
            .copied()
            .zip(group.class_sizes().iter().copied())
            .collect()
    } else {
        (0..group.order()).map(|x| (x, 1)).collect()
    };
    for (x, w) in weighted {
        let series = char_poly_reversed(group.element(x)).inverse_series(bound);
        let w = Cyclotomic::from_int(order, w as i64);
        for (acc, s) in total.iter_mut().zip(&series) {
            *acc = &*acc + &(s * &w);
        }
    }
    let inv = Rational::new(1, group.order() as i64);
    PowerSeriesTruncation::new(
        total
            .iter()
            .map(|c| {
                let q = c.to_rational().expect("Molien coefficients are rational");
                &q * &inv
            })
            .collect(),
    )
}

/// Traces of element `x` on S₀, S₁, …, S_bound under the contragredient
/// action: the coefficients of 1/det(1 − t·x⁻¹).
pub fn symmetric_power_traces(group: &ReflectionGroup, x: usize, bound: usize) -> Vec<Cyclotomic> {
    char_poly_reversed(group.element(group.inverse(x))).inverse_series(bound)
}
