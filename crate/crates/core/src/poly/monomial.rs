use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Maximum number of variables.
pub const MAX_VARS: usize = 4;

const NAMES: [char; MAX_VARS] = ['x', 'y', 'z', 'w'];

/// Exponent vector of a monomial in at most [`MAX_VARS`] variables.
///
/// Ordered graded-lexicographically with x₁ > x₂ > ⋯.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars()]
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps).all(|(a, b)| *a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        self.divides(other).then(|| {
            let mut m = *other;
            for (a, b) in m.exps.iter_mut().zip(self.exps) {
                *a -= b;
            }
            m
        })
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Self {
        let mut m = *self;
        m.exps[i] = e;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars
            .cmp(&other.nvars)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", NAMES[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of degree `m` in `nvars` variables, graded-lex descending.
pub fn monomials_of_degree(nvars: usize, m: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = [0u16; MAX_VARS];
    fill(nvars, 0, m, &mut exps, &mut out);
    out
}

fn fill(nvars: usize, i: usize, left: usize, exps: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if left == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == nvars - 1 {
        exps[i] = left as u16;
        out.push(Monomial::from_exponents(&exps[..nvars]));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        fill(nvars, i + 1, left - e, exps, out);
    }
    exps[i] = 0;
}

/// Number of monomials of degree `m` in `nvars` variables.
pub fn count_monomials(nvars: usize, m: usize) -> usize {
    if nvars == 0 {
        return (m == 0) as usize;
    }
    // C(m + nvars − 1, nvars − 1)
    let k = nvars - 1;
    (1..=k).fold(1usize, |acc, i| acc * (m + i) / i)
}

/// Coordinates on the degree-m monomials; column 0 is the largest monomial.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: usize,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let monomials = monomials_of_degree(nvars, degree);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn grlex_order() {
        let x = Monomial::var(2, 0);
        let y = Monomial::var(2, 1);
        assert!(x > y);
        assert!(x.mul(&y) > x);
        assert!(Monomial::from_exponents(&[2, 0]) > Monomial::from_exponents(&[1, 1]));
        assert!(Monomial::from_exponents(&[0, 3]) > Monomial::from_exponents(&[2, 0]));
    }

    #[test]
    fn enumerates_descending() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(count_monomials(3, 2), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms[0].to_string(), "x^2");
        assert_eq!(ms[5].to_string(), "z^2");
        assert_eq!(count_monomials(3, 16), 153);
        assert_eq!(monomials_of_degree(2, 0), [Monomial::one(2)]);
    }
}
