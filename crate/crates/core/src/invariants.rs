//! Basic invariants, the relative invariants Q, J, H, and the identities
//! relating them to Jacobian and Hessian determinants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Cyclotomic;
use crate::group::ReflectionGroup;
use crate::linalg::Echelon;
use crate::poly::{
    act, hessian, jacobian, molien_series, reynolds_of_monomials, MonomialBasis, Poly,
    PowerSeriesTruncation,
};

/// Basis of the degree-m invariants, in reduced echelon form with respect
/// to graded-lex order: each element has lead coefficient 1 and no other
/// element involves its lead monomial.
pub fn invariant_component(group: &ReflectionGroup, m: usize) -> Vec<Poly> {
    let basis = MonomialBasis::new(group.rank(), m);
    let images = reynolds_of_monomials(group, &basis);
    let mut ech = Echelon::new(basis.len(), group.field_order());
    for p in &images {
        ech.insert(&p.sparse_coordinates(&basis));
    }
    echelon_polys(&ech, &basis, group.rank(), group.field_order())
}

pub(crate) fn echelon_polys(
    ech: &Echelon<Cyclotomic>,
    basis: &MonomialBasis,
    nvars: usize,
    order: u32,
) -> Vec<Poly> {
    ech.rows()
        .map(|row| {
            Poly::from_terms(
                nvars,
                order,
                row.iter().map(|(c, x)| (basis.monomial(*c), x.clone())),
            )
        })
        .collect()
}

/// Degrees d₁ ≤ ⋯ read off the Molien series by peeling factors
/// 1/(1 − t^d) from the bottom, through degree `bound`. Returns `None` if
/// a coefficient of the remaining quotient is negative or non-integral.
pub fn molien_degrees(series: &PowerSeriesTruncation) -> Option<Vec<u32>> {
    let bound = series.bound();
    let mut degrees = Vec::new();
    loop {
        let product = PowerSeriesTruncation::from_degrees(&degrees, bound);
        let Some(m) = (1..=bound).find(|&m| series.coeff(m) != product.coeff(m)) else {
            return Some(degrees);
        };
        let diff = series.coeff(m) - product.coeff(m);
        let k = diff.to_i64().filter(|&k| k > 0)?;
        degrees.extend(core::iter::repeat_n(m as u32, k as usize));
    }
}

/// The least positive degree d carrying invariants and the invariant of that
/// degree, which must be unique up to scalar; normalized to lead coefficient 1.
pub fn minimal_invariant(group: &ReflectionGroup) -> Result<(usize, Poly)> {
    let mut bound = group.spec().degrees.first().copied().unwrap_or(2) as usize + 1;
    loop {
        let series = molien_series(group, bound, true);
        if let Some(d) = (1..=bound).find(|&m| !series.coeff(m).is_zero()) {
            let dim = series.coeff(d).to_i64().unwrap_or(0) as usize;
            if dim != 1 {
                return Err(Error::NotUnique {
                    degree: d,
                    dimension: dim,
                });
            }
            let mut comp = invariant_component(group, d);
            if comp.len() != 1 {
                return Err(Error::NotUnique {
                    degree: d,
                    dimension: comp.len(),
                });
            }
            return Ok((d, comp.remove(0)));
        }
        if bound > group.order() {
            return Err(Error::SearchExhausted(
                "no invariant of positive degree".into(),
            ));
        }
        bound *= 2;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasicInvariants {
    pub degrees: Vec<u32>,
    pub polys: Vec<Poly>,
}

impl BasicInvariants {
    /// The minimal degree d = d₁.
    pub fn d(&self) -> usize {
        self.degrees[0] as usize
    }
}

/// Homogeneous basic invariants f₁, …, f_ℓ.
///
/// Degrees come from factoring the Molien series. In each degree the
/// invariant component is reduced modulo products of the invariants already
/// chosen, and the monic remainders supply the new generators in graded-lex
/// order of their lead monomials. The result is certified by Jac ≠ 0 and
/// Π dᵢ = |G|.
pub fn basic_invariants(group: &ReflectionGroup) -> Result<BasicInvariants> {
    let l = group.rank();
    let n = group.field_order();
    let max_hint = group.spec().degrees.iter().copied().max().unwrap_or(1) as usize;
    let bound = 2 * max_hint + 1;
    let series = molien_series(group, bound, true);
    let degrees = molien_degrees(&series)
        .ok_or_else(|| Error::SearchExhausted("Molien series does not factor".into()))?;
    let product: u64 = degrees.iter().map(|&d| d as u64).product();
    if degrees.len() != l || product != group.order() as u64 {
        return Err(Error::SearchExhausted(format!(
            "Molien degrees {degrees:?} through t^{bound} do not account for |G| = {}",
            group.order()
        )));
    }

    let mut polys: Vec<Poly> = Vec::new();
    let mut chosen_degrees: Vec<u32> = Vec::new();
    let mut distinct = degrees.clone();
    distinct.dedup();
    for &d in &distinct {
        let need = degrees.iter().filter(|&&e| e == d).count();
        let basis = MonomialBasis::new(l, d as usize);
        let mut ech = Echelon::new(basis.len(), n);
        for p in products_of_degree(&polys, &chosen_degrees, d as usize, l, n) {
            ech.insert(&p.sparse_coordinates(&basis));
        }
        let mut found = 0;
        for f in invariant_component(group, d as usize) {
            let rem = ech.reduce(&f.sparse_coordinates(&basis));
            if rem.is_empty() {
                continue;
            }
            let candidate = Poly::from_terms(
                l,
                n,
                rem.iter().map(|(c, x)| (basis.monomial(*c), x.clone())),
            )
            .monic();
            ech.insert(&rem);
            polys.push(candidate);
            chosen_degrees.push(d);
            found += 1;
        }
        if found != need {
            return Err(Error::SearchExhausted(format!(
                "degree {d}: found {found} indecomposable invariants, expected {need}"
            )));
        }
    }
    if jacobian(&polys)?.is_zero() {
        return Err(Error::SearchExhausted(
            "chosen invariants are algebraically dependent".into(),
        ));
    }
    Ok(BasicInvariants { degrees, polys })
}

/// All products Π fᵢ^{aᵢ} of total degree `d`.
fn products_of_degree(fs: &[Poly], degs: &[u32], d: usize, nvars: usize, order: u32) -> Vec<Poly> {
    let mut out = Vec::new();
    fn rec(fs: &[Poly], degs: &[u32], i: usize, left: usize, acc: Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        if i == fs.len() {
            return;
        }
        let di = degs[i] as usize;
        let mut cur = acc;
        let mut used = 0;
        loop {
            rec(fs, degs, i + 1, left - used, cur.clone(), out);
            if used + di > left {
                break;
            }
            cur = cur.mul(&fs[i]);
            used += di;
        }
    }
    if d > 0 {
        rec(fs, degs, 0, d, Poly::one(nvars, order), &mut out);
    }
    out
}

/// Q = Π α_H, J = Π α_H^{e_H − 1}, H = Π α_H^{e_H − 2}.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeInvariants {
    pub q: Poly,
    pub j: Poly,
    pub h: Poly,
}

pub fn relative_invariants(group: &ReflectionGroup) -> RelativeInvariants {
    let l = group.rank();
    let n = group.field_order();
    let mut q = Poly::one(l, n);
    let mut j = Poly::one(l, n);
    let mut h = Poly::one(l, n);
    for hyp in group.hyperplanes() {
        let alpha = Poly::from_terms(
            l,
            n,
            hyp.alpha
                .iter()
                .enumerate()
                .map(|(i, c)| (crate::poly::Monomial::var(l, i), c.clone())),
        );
        q = q.mul(&alpha);
        j = j.mul(&alpha.pow(hyp.order - 1));
        h = h.mul(&alpha.pow(hyp.order - 2));
    }
    RelativeInvariants { q, j, h }
}

/// Per-generator check that Q, J, H transform by det⁻¹, det and det².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCharacterCheck {
    pub generator: usize,
    pub q: bool,
    pub j: bool,
    pub h: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalIdentities {
    /// Q·H = J exactly.
    pub qh_equals_j: bool,
    /// c with Jac(f₁, …, f_ℓ) = c·J.
    pub jacobian_ratio: Option<Cyclotomic>,
    /// c′ with Hess(f₁) = c′·H.
    pub hessian_ratio: Option<Cyclotomic>,
    pub relative_characters: Vec<RelativeCharacterCheck>,
    pub jacobian: Poly,
    pub hessian: Poly,
}

impl ClassicalIdentities {
    pub fn all_hold(&self) -> bool {
        self.qh_equals_j
            && self.jacobian_ratio.is_some()
            && self.hessian_ratio.is_some()
            && self.relative_characters.iter().all(|c| c.q && c.j && c.h)
    }

    pub fn summary(&self) -> String {
        format!(
            "QH=J: {}; Jac = c*J: {}; Hess(f1) = c*H: {}; relative characters: {}",
            self.qh_equals_j,
            self.jacobian_ratio
                .as_ref()
                .map_or("no".into(), |c| format!("c = {c}")),
            self.hessian_ratio
                .as_ref()
                .map_or("no".into(), |c| format!("c = {c}")),
            self.relative_characters.iter().all(|c| c.q && c.j && c.h)
        )
    }
}

pub fn check_classical_identities(
    group: &ReflectionGroup,
    basic: &BasicInvariants,
    rel: &RelativeInvariants,
) -> Result<ClassicalIdentities> {
    let jac = jacobian(&basic.polys)?;
    let hess = hessian(&basic.polys[0]);
    let mut relative_characters = Vec::new();
    for (i, x) in group.generator_indices().into_iter().enumerate() {
        let det = group.det(x);
        let det_inv = det.inverse().expect("invertible");
        let transforms =
            |p: &Poly, c: &Cyclotomic| -> Result<bool> { Ok(act(group, x, p)? == p.scale(c)) };
        relative_characters.push(RelativeCharacterCheck {
            generator: i,
            q: transforms(&rel.q, &det_inv)?,
            j: transforms(&rel.j, det)?,
            h: transforms(&rel.h, &(det * det))?,
        });
    }
    Ok(ClassicalIdentities {
        qh_equals_j: rel.q.mul(&rel.h) == rel.j,
        jacobian_ratio: jac.proportionality(&rel.j),
        hessian_ratio: hess.proportionality(&rel.h),
        relative_characters,
        jacobian: jac,
        hessian: hess,
    })
}

/// Σ (dᵢ − 1).
pub fn jacobian_degree(degrees: &[u32]) -> usize {
    degrees.iter().map(|&d| d as usize - 1).sum()
}

/// Molien coefficients through `bound` alongside invariant component
/// dimensions, for cross-checking.
pub fn molien_vs_rank(group: &ReflectionGroup, bound: usize) -> Vec<(usize, usize)> {
    let series = molien_series(group, bound, false);
    (0..=bound)
        .map(|m| {
            let molien = series.coeff(m).to_i64().unwrap_or(-1) as usize;
            (molien, invariant_component(group, m).len())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, lookup};
    use alloc::string::ToString;
    use alloc::vec;

    fn group(key: &str) -> ReflectionGroup {
        ReflectionGroup::generate(lookup(&builtin(), key).unwrap()).unwrap()
    }

    fn x() -> Poly {
        Poly::var(2, 3, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 3, 1)
    }

    #[test]
    fn components_of_g312() {
        let g = group("G(3,1,2)");
        let c3 = invariant_component(&g, 3);
        assert_eq!(c3, vec![x().pow(3).add(&y().pow(3))]);
        assert_eq!(invariant_component(&g, 0), vec![Poly::one(2, 3)]);
        assert!(invariant_component(&g, 1).is_empty());
    }

    #[test]
    fn minimal_invariants() {
        let g = group("G(3,1,2)");
        assert_eq!(
            minimal_invariant(&g).unwrap(),
            (3, x().pow(3).add(&y().pow(3)))
        );
        let b2 = group("B2");
        let (d, f) = minimal_invariant(&b2).unwrap();
        assert_eq!(d, 2);
        assert_eq!(f.to_string(), "x^2 + y^2");
        assert_eq!(minimal_invariant(&group("3[3]3")).unwrap().0, 4);
    }

    #[test]
    fn basic_invariant_examples() {
        let g = group("G(3,1,2)");
        let b = basic_invariants(&g).unwrap();
        assert_eq!(b.degrees, vec![3, 6]);
        assert_eq!(b.polys[0], x().pow(3).add(&y().pow(3)));
        assert_eq!(b.polys[1], x().pow(3).mul(&y().pow(3)));
        assert_eq!(basic_invariants(&group("B2")).unwrap().degrees, vec![2, 4]);
        assert_eq!(
            basic_invariants(&group("3[3]3")).unwrap().degrees,
            vec![4, 6]
        );
    }

    #[test]
    fn relative_invariants_of_g312() {
        let g = group("G(3,1,2)");
        let r = relative_invariants(&g);
        assert_eq!(r.q.homogeneous_degree(), Some(5));
        let xy = x().mul(&y());
        let q_expected = xy.mul(&x().pow(3).sub(&y().pow(3)));
        assert!(r.q.proportionality(&q_expected).is_some());
        assert_eq!(r.j.homogeneous_degree(), Some(7));
        assert_eq!(r.h, xy);
        let b = basic_invariants(&g).unwrap();
        let ids = check_classical_identities(&g, &b, &r).unwrap();
        assert!(ids.all_hold(), "{}", ids.summary());
        assert_eq!(ids.hessian_ratio, Some(Cyclotomic::from_int(3, 36)));
    }

    #[test]
    fn b2_identities() {
        let g = group("B2");
        let r = relative_invariants(&g);
        assert_eq!(r.h, Poly::one(2, 4));
        let b = basic_invariants(&g).unwrap();
        let ids = check_classical_identities(&g, &b, &r).unwrap();
        assert!(ids.all_hold(), "{}", ids.summary());
        assert_eq!(ids.hessian_ratio, Some(Cyclotomic::from_int(4, 4)));
    }

    #[test]
    fn catalog_identities() {
        for spec in builtin().iter().filter(|s| !s.stretch) {
            let g = ReflectionGroup::generate(spec).unwrap();
            let b = basic_invariants(&g).unwrap();
            assert_eq!(b.degrees, spec.degrees, "{}", spec.name);
            let r = relative_invariants(&g);
            let ids = check_classical_identities(&g, &b, &r).unwrap();
            assert!(ids.all_hold(), "{}: {}", spec.name, ids.summary());
        }
    }

    #[test]
    fn degrees_from_series() {
        let s = PowerSeriesTruncation::from_degrees(&[2, 2, 5], 12);
        assert_eq!(molien_degrees(&s), Some(vec![2, 2, 5]));
    }
}
