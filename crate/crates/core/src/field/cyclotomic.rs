use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::{Field, Rational};
use crate::linalg::Matrix;

/// Largest cyclotomic order supported by the built-in table of Φₙ.
pub const MAX_ORDER: usize = 64;

struct CycloTable {
    phi: [usize; MAX_ORDER + 1],
    coeffs: [[i64; MAX_ORDER + 1]; MAX_ORDER + 1],
}

// Φₙ = (xⁿ − 1) / Π_{d | n, d < n} Φ_d, evaluated at compile time.
const fn build_table() -> CycloTable {
    let mut phi = [0usize; MAX_ORDER + 1];
    let mut coeffs = [[0i64; MAX_ORDER + 1]; MAX_ORDER + 1];
    let mut n = 1;
    while n <= MAX_ORDER {
        let mut p = [0i64; MAX_ORDER + 1];
        p[0] = -1;
        p[n] = 1;
        let mut deg = n;
        let mut d = 1;
        while d < n {
            if n % d == 0 {
                let dd = phi[d];
                let mut q = [0i64; MAX_ORDER + 1];
                let mut k = deg;
                loop {
                    let c = p[k];
                    if c != 0 {
                        q[k - dd] = c;
                        let mut j = 0;
                        while j <= dd {
                            p[k - dd + j] -= c * coeffs[d][j];
                            j += 1;
                        }
                    }
                    if k == dd {
                        break;
                    }
                    k -= 1;
                }
                p = q;
                deg -= dd;
            }
            d += 1;
        }
        phi[n] = deg;
        coeffs[n] = p;
        n += 1;
    }
    CycloTable { phi, coeffs }
}

static TABLE: CycloTable = build_table();

/// Euler's totient φ(n), i.e. the degree of ℚ(ζₙ) over ℚ.
pub fn totient(n: u32) -> usize {
    assert!(
        n >= 1 && n as usize <= MAX_ORDER,
        "cyclotomic order {n} outside 1..={MAX_ORDER}"
    );
    TABLE.phi[n as usize]
}

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first; the slice has length φ(n) + 1.
pub fn cyclotomic_polynomial(n: u32) -> &'static [i64] {
    let phi = totient(n);
    &TABLE.coeffs[n as usize][..=phi]
}

type Coeffs = SmallVec<[Rational; 4]>;

/// An element of ℚ(ζₙ), in coordinates on the power basis 1, ζ, …, ζ^{φ(n)−1}.
///
/// The coordinates are the unique representative modulo Φₙ, so two elements
/// of the same field are equal exactly when their coordinate vectors are.
/// Arithmetic requires both operands to share the field order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Coeffs,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        Cyclotomic {
            order,
            coeffs: SmallVec::from_elem(Rational::ZERO, totient(order)),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::ONE)
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(order: u32, k: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(k))
    }

    /// The primitive root ζₙ = e^{2πi/n}.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// ζₙᵏ for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::ZERO; e + 1];
        raw[e] = Rational::ONE;
        Self::reduce(order, &raw)
    }

    /// Canonical representative of Σ raw[i]·ζⁱ.
    pub fn reduce(order: u32, raw: &[Rational]) -> Self {
        let n = order as usize;
        let phi = totient(order);
        let mut folded: Vec<Rational> = vec![Rational::ZERO; n.max(phi)];
        for (i, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                let slot = &mut folded[i % n];
                *slot = &*slot + c;
            }
        }
        reduce_in_place(order, &mut folded);
        folded.truncate(phi);
        Cyclotomic {
            order,
            coeffs: folded.into_iter().collect(),
        }
    }

    /// Builds an element from power-basis coordinates, which must already
    /// have length φ(order).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Option<Self> {
        (coeffs.len() == totient(order)).then(|| Cyclotomic {
            order,
            coeffs: coeffs.into_iter().collect(),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ^{n−1}.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.order as usize;
        let mut raw = vec![Rational::ZERO; n];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[(n - k) % n] = c.clone();
        }
        Self::reduce(self.order, &raw)
    }

    /// Embeds ℚ(ζₙ) into ℚ(ζₘ) for n | m.
    pub fn lift(&self, order: u32) -> Option<Self> {
        if !order.is_multiple_of(self.order) {
            return None;
        }
        if order == self.order {
            return Some(self.clone());
        }
        let step = (order / self.order) as usize;
        let mut raw = vec![Rational::ZERO; step * self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Some(Self::reduce(order, &raw))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(Self::from_rational(self.order, q.recip()));
        }
        // Solve (multiplication by self) · x = 1 over ℚ.
        let phi = self.coeffs.len();
        let mut m = Matrix::zeros(phi, phi, ());
        let mut basis = Self::one(self.order);
        let z = Self::zeta(self.order);
        for col in 0..phi {
            let image = self * &basis;
            for (row, c) in image.coeffs.iter().enumerate() {
                m[(row, col)] = c.clone();
            }
            basis = &basis * &z;
        }
        let mut rhs = vec![Rational::ZERO; phi];
        rhs[0] = Rational::ONE;
        let x = m.solve(&rhs)?;
        Some(Cyclotomic {
            order: self.order,
            coeffs: x.into_iter().collect(),
        })
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic arithmetic across fields Q(zeta_{}) and Q(zeta_{})",
            self.order, other.order
        );
    }
}

fn reduce_in_place(order: u32, v: &mut [Rational]) {
    let phi = totient(order);
    let poly = cyclotomic_polynomial(order);
    for k in (phi..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut v[k]);
        for (j, &pj) in poly[..phi].iter().enumerate() {
            if pj != 0 {
                let slot = &mut v[k - phi + j];
                *slot = &*slot - &c.mul_int(pj);
            }
        }
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        let phi = self.coeffs.len();
        let mut raw = vec![Rational::ZERO; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = &raw[i + j] + &(a * b);
                }
            }
        }
        reduce_in_place(self.order, &mut raw);
        raw.truncate(phi);
        Cyclotomic {
            order: self.order,
            coeffs: raw.into_iter().collect(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { $tr::$m(&self, &rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { $tr::$m(&self, rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Field for Cyclotomic {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.order
    }
    fn zero(ctx: u32) -> Self {
        Cyclotomic::zero(ctx)
    }
    fn one(ctx: u32) -> Self {
        Cyclotomic::one(ctx)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.inverse().expect("inverse of zero")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "ζ{}", self.order)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
