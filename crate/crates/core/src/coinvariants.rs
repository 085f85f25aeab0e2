//! Graded ideals handled one degree at a time by exact linear algebra, and
//! the checks built on them: Hilbert functions, graded characters, the
//! kernel of multiplication by Q, and Poincaré duality of the quotients.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Cyclotomic;
use crate::group::ReflectionGroup;
use crate::invariants::echelon_polys;
use crate::linalg::{invariant_subspace_trace, sparse_rank, to_dense, Echelon, Matrix};
use crate::poly::{
    char_poly_reversed, count_monomials, laplace_det, substitution, Monomial, MonomialBasis, Poly,
    RationalFunction, UPoly,
};

/// One homogeneous component of an ideal.
#[derive(Clone, Debug)]
pub struct IdealComponent {
    basis: MonomialBasis,
    echelon: Echelon<Cyclotomic>,
}

impl IdealComponent {
    pub fn degree(&self) -> usize {
        self.basis.degree()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    pub fn monomial_basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn echelon(&self) -> &Echelon<Cyclotomic> {
        &self.echelon
    }

    /// Monomials that are not leading monomials of the component; their
    /// images form a basis of the quotient in this degree.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.echelon
            .free_columns()
            .into_iter()
            .map(|c| self.basis.monomial(c))
            .collect()
    }
}

/// A homogeneous ideal with components computed eagerly through a degree
/// bound.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    nvars: usize,
    order: u32,
    generators: Vec<Poly>,
    components: Vec<IdealComponent>,
}

impl GradedIdeal {
    pub fn new(generators: Vec<Poly>, nvars: usize, order: u32, max_degree: usize) -> Self {
        assert!(
            generators.iter().all(|g| g.homogeneous_degree().is_some()),
            "homogeneous nonzero generators"
        );
        let mut ideal = GradedIdeal {
            nvars,
            order,
            generators,
            components: Vec::new(),
        };
        ideal.extend_to(max_degree);
        ideal
    }

    pub fn extend_to(&mut self, max_degree: usize) {
        for m in self.components.len()..=max_degree {
            let basis = MonomialBasis::new(self.nvars, m);
            let mut echelon = Echelon::new(basis.len(), self.order);
            for g in &self.generators {
                let e = g.homogeneous_degree().expect("homogeneous");
                if e > m {
                    continue;
                }
                for mu in MonomialBasis::new(self.nvars, m - e).monomials() {
                    echelon.insert(&g.mul_monomial(mu).sparse_coordinates(&basis));
                }
            }
            self.components.push(IdealComponent { basis, echelon });
        }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    /// Panics if `m` exceeds the computed range.
    pub fn component(&self, m: usize) -> &IdealComponent {
        assert!(
            m <= self.max_degree(),
            "degree {m} beyond computed range {}",
            self.max_degree()
        );
        &self.components[m]
    }

    /// Basis of the degree-m component as polynomials in reduced echelon form.
    pub fn component_basis(&self, m: usize) -> Vec<Poly> {
        let c = self.component(m);
        echelon_polys(&c.echelon, &c.basis, self.nvars, self.order)
    }

    /// dim (S/I)_m for m = 0..=m_max.
    pub fn hilbert_function(&self, m_max: usize) -> Vec<usize> {
        (0..=m_max)
            .map(|m| count_monomials(self.nvars, m) - self.component(m).dim())
            .collect()
    }

    /// Remainder of a homogeneous polynomial modulo the ideal, supported on
    /// standard monomials.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let Some(m) = p.homogeneous_degree() else {
            return p.clone();
        };
        let c = self.component(m);
        let rem = c.echelon.reduce(&p.sparse_coordinates(&c.basis));
        Poly::from_terms(
            self.nvars,
            self.order,
            rem.into_iter().map(|(i, x)| (c.basis.monomial(i), x)),
        )
    }

    pub fn contains(&self, p: &Poly) -> bool {
        p.is_zero() || self.normal_form(p).is_zero()
    }
}

/// I = (f₁, …, f_ℓ).
pub fn invariant_ideal(basic: &[Poly], nvars: usize, order: u32, max_degree: usize) -> GradedIdeal {
    GradedIdeal::new(basic.to_vec(), nvars, order, max_degree)
}

/// K = (∂f₁/∂x₁, …, ∂f₁/∂x_ℓ).
pub fn partials_ideal(f1: &Poly, max_degree: usize) -> GradedIdeal {
    let gens = (0..f1.nvars())
        .map(|i| f1.partial(i))
        .filter(|p| !p.is_zero())
        .collect();
    GradedIdeal::new(gens, f1.nvars(), f1.order(), max_degree)
}

/// Coefficients of ((1 − t^{d−1})/(1 − t))^ℓ.
pub fn expected_partials_hilbert(d: usize, l: usize) -> Vec<usize> {
    let mut c = vec![1usize];
    for _ in 0..l {
        let mut next = vec![0usize; c.len() + d - 2];
        for (i, &a) in c.iter().enumerate() {
            for k in 0..d - 1 {
                next[i + k] += a;
            }
        }
        c = next;
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimCertificate {
    pub hilbert: Vec<usize>,
    pub expected: Vec<usize>,
    pub top_degree: usize,
    pub total: usize,
}

impl FiniteDimCertificate {
    pub fn passed(&self) -> bool {
        self.hilbert == self.expected
    }
}

/// Compares the Hilbert function of S/K through ℓ(d−2)+1 with
/// ((1 − t^{d−1})/(1 − t))^ℓ padded by a trailing zero.
pub fn finite_dim_certificate(k: &GradedIdeal, d: usize, l: usize) -> FiniteDimCertificate {
    let top = l * (d - 2);
    let hilbert = k.hilbert_function(top + 1);
    let mut expected = expected_partials_hilbert(d, l);
    expected.push(0);
    FiniteDimCertificate {
        total: hilbert.iter().sum(),
        hilbert,
        expected,
        top_degree: top,
    }
}

/// Trace of element `x` on S_m, read off the substituted monomials.
pub fn trace_on_monomials(group: &ReflectionGroup, x: usize, m: usize) -> Cyclotomic {
    let basis = MonomialBasis::new(group.rank(), m);
    let mut sub = substitution(group, x);
    basis
        .monomials()
        .iter()
        .fold(Cyclotomic::zero(group.field_order()), |acc, mu| {
            &acc + &sub.apply_monomial(mu).coefficient(mu)
        })
}

/// Trace of `x` on (S/I)_m: the diagonal of x acting on standard monomials
/// followed by reduction to normal form.
pub fn quotient_trace(
    ideal: &GradedIdeal,
    group: &ReflectionGroup,
    x: usize,
    m: usize,
) -> Cyclotomic {
    let c = ideal.component(m);
    let mut sub = substitution(group, x);
    let mut acc = Cyclotomic::zero(group.field_order());
    for col in c.echelon.free_columns() {
        let mu = c.basis.monomial(col);
        let image = sub.apply_monomial(&mu).sparse_coordinates(&c.basis);
        let rem = c.echelon.reduce(&image);
        if let Ok(pos) = rem.binary_search_by_key(&col, |(i, _)| *i) {
            acc = &acc + &rem[pos].1;
        }
    }
    acc
}

/// Trace of `x` on the ideal component I_m, by expressing the image of each
/// basis vector in the basis.
pub fn ideal_trace(
    ideal: &GradedIdeal,
    group: &ReflectionGroup,
    x: usize,
    m: usize,
) -> Result<Cyclotomic> {
    let c = ideal.component(m);
    let n = group.field_order();
    let len = c.basis.len();
    let basis: Vec<Vec<Cyclotomic>> = c.echelon.rows().map(|r| to_dense(r, len, n)).collect();
    let mut sub = substitution(group, x);
    invariant_subspace_trace(&basis, n, |v| {
        let p = Poly::from_coordinates(&c.basis, group.rank(), n, v);
        sub.apply(&p).coordinates(&c.basis)
    })
}

/// tr(x | S_m) − tr(x | I_m).
pub fn quotient_trace_by_subtraction(
    ideal: &GradedIdeal,
    group: &ReflectionGroup,
    x: usize,
    m: usize,
) -> Result<Cyclotomic> {
    Ok(&trace_on_monomials(group, x, m) - &ideal_trace(ideal, group, x, m)?)
}

/// Σ_m tr(x | (S/I)_m) tᵐ through `m_max`, optionally multiplied by det(x)⁻¹.
pub fn graded_character(
    ideal: &GradedIdeal,
    group: &ReflectionGroup,
    x: usize,
    m_max: usize,
    twist: bool,
) -> UPoly {
    let coeffs = (0..=m_max)
        .map(|m| quotient_trace(ideal, group, x, m))
        .collect();
    let p = UPoly::from_coeffs(group.field_order(), coeffs);
    if twist {
        p.scale(&group.det(x).conj())
    } else {
        p
    }
}

/// As [`graded_character`], computing each coefficient as the trace on S_m
/// minus the trace on I_m.
pub fn graded_character_by_subtraction(
    ideal: &GradedIdeal,
    group: &ReflectionGroup,
    x: usize,
    m_max: usize,
    twist: bool,
) -> Result<UPoly> {
    let coeffs = (0..=m_max)
        .map(|m| quotient_trace_by_subtraction(ideal, group, x, m))
        .collect::<Result<Vec<_>>>()?;
    let p = UPoly::from_coeffs(group.field_order(), coeffs);
    Ok(if twist {
        p.scale(&group.det(x).conj())
    } else {
        p
    })
}

/// det(I − x·t^{d−1}) / det(x − t·I).
pub fn formula_character(group: &ReflectionGroup, x: usize, d: usize) -> RationalFunction {
    let g = group.element(x);
    let n = group.field_order();
    let rev = char_poly_reversed(g);
    let mut num = vec![Cyclotomic::zero(n); rev.coeffs().len().saturating_sub(1) * (d - 1) + 1];
    for (k, c) in rev.coeffs().iter().enumerate() {
        let slot = &mut num[k * (d - 1)];
        *slot = &*slot + c;
    }
    let t = UPoly::t(n);
    let l = g.rows();
    let rows: Vec<Vec<UPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let entry = UPoly::constant(g[(i, j)].clone());
                    if i == j {
                        entry.sub(&t)
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    RationalFunction::new(UPoly::from_coeffs(n, num), laplace_det(&rows))
}

#[derive(Clone, Debug)]
pub struct SignGradedCheck {
    pub class_rep: usize,
    /// Twisted graded character of S/K.
    pub character: UPoly,
    /// The same series computed by normal forms.
    pub character_nf: UPoly,
    pub formula: RationalFunction,
    pub holds: bool,
}

/// For each class, det(x)⁻¹·χ_{S/K,t}(x)·det(x − t) = det(1 − x·t^{d−1}).
pub fn verify_sign_graded(
    group: &ReflectionGroup,
    k: &GradedIdeal,
    d: usize,
) -> Result<Vec<SignGradedCheck>> {
    let top = group.rank() * (d - 2);
    group
        .class_reps()
        .iter()
        .map(|&x| {
            let character = graded_character_by_subtraction(k, group, x, top + 1, true)?;
            let character_nf = graded_character(k, group, x, top + 1, true);
            let formula = formula_character(group, x, d);
            let holds = character == character_nf && formula.equals_polynomial(&character);
            Ok(SignGradedCheck {
                class_rep: x,
                character,
                character_nf,
                formula,
                holds,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDegreeCheck {
    pub degree: usize,
    pub k_dim: usize,
    pub kernel_dim: usize,
    /// Q·K_m ⊆ I_{m+N}.
    pub inclusion: bool,
}

impl KernelDegreeCheck {
    pub fn holds(&self) -> bool {
        self.inclusion && self.k_dim == self.kernel_dim
    }
}

/// Degrees through which [`verify_kernel_phi`] checks: ℓ(d−2)+1.
pub fn kernel_check_bound(l: usize, d: usize) -> usize {
    l * (d - 2) + 1
}

/// For m = 0..=ℓ(d−2)+1: Q·K_m ⊆ I_{m+N}, and the kernel of f ↦ Q·f mod I
/// on S_m has the dimension of K_m. The ideals must be computed through
/// degrees ℓ(d−2)+1 and ℓ(d−2)+1+N.
pub fn verify_kernel_phi(
    q: &Poly,
    i: &GradedIdeal,
    k: &GradedIdeal,
    l: usize,
    d: usize,
) -> Vec<KernelDegreeCheck> {
    let n_deg = q.homogeneous_degree().expect("Q is homogeneous");
    (0..=kernel_check_bound(l, d))
        .map(|m| {
            let inclusion = k.component_basis(m).iter().all(|b| i.contains(&q.mul(b)));
            let target = i.component(m + n_deg);
            let images = MonomialBasis::new(l, m)
                .monomials()
                .iter()
                .map(|mu| {
                    target
                        .echelon
                        .reduce(&q.mul_monomial(mu).sparse_coordinates(&target.basis))
                })
                .collect::<Vec<_>>();
            let rank = sparse_rank(images);
            KernelDegreeCheck {
                degree: m,
                k_dim: k.component(m).dim(),
                kernel_dim: count_monomials(l, m) - rank,
                inclusion,
            }
        })
        .collect()
}

/// Whether multiplication (S/I)_j × (S/I)_{top−j} → (S/I)_top is a perfect
/// pairing, with (S/I)_top one-dimensional.
pub fn pairing_nondegenerate(ideal: &GradedIdeal, top: usize, j: usize) -> bool {
    let top_c = ideal.component(top);
    let top_std = top_c.standard_monomials();
    if top_std.len() != 1 {
        return false;
    }
    let top_col = top_c
        .basis
        .position(&top_std[0])
        .expect("standard monomial");
    let a = ideal.component(j).standard_monomials();
    let b = ideal.component(top - j).standard_monomials();
    if a.len() != b.len() {
        return false;
    }
    let n = ideal.order;
    let rows: Vec<Vec<Cyclotomic>> = a
        .iter()
        .map(|u| {
            b.iter()
                .map(|v| {
                    let p = u.mul(v);
                    let rem = top_c.echelon.reduce(&vec![(
                        top_c.basis.position(&p).expect("degree top"),
                        Cyclotomic::one(n),
                    )]);
                    rem.iter()
                        .find(|(c, _)| *c == top_col)
                        .map_or_else(|| Cyclotomic::zero(n), |(_, x)| x.clone())
                })
                .collect()
        })
        .collect();
    a.is_empty() || Matrix::from_rows(rows, n).rank() == a.len()
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    /// t = Σ(dᵢ − 1).
    pub top_i: usize,
    /// ℓ(d − 2).
    pub top_k: usize,
    pub j_spans_top: bool,
    pub h_spans_top: bool,
    pub pairing_k: Vec<bool>,
    pub pairing_i: Vec<bool>,
    /// (class rep, Σ_m tr(x | (S/I)_m), expected regular character value).
    pub chevalley: Vec<(usize, Cyclotomic, bool)>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.j_spans_top
            && self.h_spans_top
            && self.pairing_k.iter().all(|&b| b)
            && self.pairing_i.iter().all(|&b| b)
            && self.chevalley.iter().all(|c| c.2)
    }

    pub fn summary(&self) -> String {
        format!(
            "J spans (S/I)_{}: {}; H spans (S/K)_{}: {}; S/K pairings: {}/{}; S/I pairings: {}/{}; regular character: {}/{} classes",
            self.top_i,
            self.j_spans_top,
            self.top_k,
            self.h_spans_top,
            self.pairing_k.iter().filter(|&&b| b).count(),
            self.pairing_k.len(),
            self.pairing_i.iter().filter(|&&b| b).count(),
            self.pairing_i.len(),
            self.chevalley.iter().filter(|c| c.2).count(),
            self.chevalley.len()
        )
    }
}

/// Top-degree and pairing checks for S/I and S/K, plus the regular
/// character of S/I. `i` must be computed through t and `k` through ℓ(d−2).
pub fn verify_duality_tops(
    group: &ReflectionGroup,
    i: &GradedIdeal,
    k: &GradedIdeal,
    j: &Poly,
    h: &Poly,
    degrees: &[u32],
) -> DualityReport {
    let top_i: usize = degrees.iter().map(|&d| d as usize - 1).sum();
    let top_k = group.rank() * (degrees[0] as usize - 2);
    let spans = |ideal: &GradedIdeal, p: &Poly, top: usize| {
        p.homogeneous_degree() == Some(top)
            && ideal.component(top).quotient_dim() == 1
            && !ideal.contains(p)
    };
    let chevalley = group
        .class_reps()
        .iter()
        .map(|&x| {
            let total = graded_character(i, group, x, top_i, false).sum();
            let expected = if x == 0 { group.order() as i64 } else { 0 };
            let ok = total == Cyclotomic::from_int(group.field_order(), expected);
            (x, total, ok)
        })
        .collect();
    DualityReport {
        top_i,
        top_k,
        j_spans_top: spans(i, j, top_i),
        h_spans_top: spans(k, h, top_k),
        pairing_k: (0..=top_k)
            .map(|m| pairing_nondegenerate(k, top_k, m))
            .collect(),
        pairing_i: (0..=top_i)
            .map(|m| pairing_nondegenerate(i, top_i, m))
            .collect(),
        chevalley,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, lookup};
    use crate::invariants::{basic_invariants, relative_invariants};

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
    fn ideal_components_of_g312() {
        let g = group("G(3,1,2)");
        let b = basic_invariants(&g).unwrap();
        let i = invariant_ideal(&b.polys, 2, 3, 8);
        assert_eq!(i.component_basis(3), vec![x().pow(3).add(&y().pow(3))]);
        assert_eq!(i.component(2).dim(), 0);
        let k = partials_ideal(&b.polys[0], 3);
        assert_eq!(k.component_basis(2), vec![x().pow(2), y().pow(2)]);
        assert_eq!(i.hilbert_function(8), vec![1, 2, 3, 3, 3, 3, 2, 1, 0]);
        assert_eq!(i.hilbert_function(8).iter().sum::<usize>(), 18);
        assert_eq!(k.hilbert_function(3), vec![1, 2, 1, 0]);
    }

    #[test]
    fn certificates() {
        let g = group("G(3,1,2)");
        let b = basic_invariants(&g).unwrap();
        let k = partials_ideal(&b.polys[0], 3);
        let cert = finite_dim_certificate(&k, 3, 2);
        assert!(cert.passed());
        assert_eq!(cert.total, 4);

        let c3 = group("C3");
        let f = Poly::var(1, 3, 0).pow(3);
        let k = partials_ideal(&f, 2);
        let cert = finite_dim_certificate(&k, 3, 1);
        assert_eq!(cert.hilbert, vec![1, 1, 0]);
        assert!(cert.passed());
        assert_eq!(c3.order(), 3);

        let b2 = group("B2");
        let b = basic_invariants(&b2).unwrap();
        let k = partials_ideal(&b.polys[0], 1);
        assert_eq!(k.hilbert_function(1), vec![1, 0]);
        assert!(finite_dim_certificate(&k, 2, 2).passed());
    }

    #[test]
    fn graded_character_examples() {
        let g = group("G(3,1,2)");
        let b = basic_invariants(&g).unwrap();
        let k = partials_ideal(&b.polys[0], 3);
        let ch = graded_character(&k, &g, 0, 3, true);
        assert_eq!(
            ch,
            UPoly::from_coeffs(
                3,
                [1, 2, 1]
                    .iter()
                    .map(|&c| Cyclotomic::from_int(3, c))
                    .collect()
            )
        );
        let i = invariant_ideal(&b.polys, 2, 3, 8);
        assert_eq!(
            graded_character(&i, &g, 0, 8, false).sum(),
            Cyclotomic::from_int(3, 18)
        );

        let c3 = group("C3");
        let zeta_el = c3.generator_indices()[0];
        let k = partials_ideal(&Poly::var(1, 3, 0).pow(3), 2);
        let z_inv = Cyclotomic::zeta_pow(3, -1);
        let expected = UPoly::from_coeffs(3, vec![z_inv.clone(), &z_inv * &z_inv]);
        assert_eq!(graded_character(&k, &c3, zeta_el, 2, true), expected);
        assert_eq!(
            graded_character_by_subtraction(&k, &c3, zeta_el, 2, true).unwrap(),
            expected
        );
    }

    #[test]
    fn formula_examples() {
        let c3 = group("C3");
        let zeta_el = c3.generator_indices()[0];
        let f = formula_character(&c3, zeta_el, 3);
        let z = Cyclotomic::zeta(3);
        let t = UPoly::t(3);
        assert_eq!(f.numerator, UPoly::one(3).sub(&t.pow(2).scale(&z)));
        assert_eq!(f.denominator, UPoly::constant(z).sub(&t));

        let b2 = group("B2");
        let r0 = b2.generator_indices()[0];
        let f = formula_character(&b2, r0, 2);
        assert!(f.equals_polynomial(&UPoly::constant(Cyclotomic::from_int(4, -1))));
    }

    #[test]
    fn sign_graded_on_small_groups() {
        for key in ["C3", "B2", "G(3,1,2)"] {
            let g = group(key);
            let b = basic_invariants(&g).unwrap();
            let d = b.d();
            let k = partials_ideal(&b.polys[0], g.rank() * (d - 2) + 1);
            let checks = verify_sign_graded(&g, &k, d).unwrap();
            assert_eq!(checks.len(), g.num_classes());
            assert!(checks.iter().all(|c| c.holds), "{key}");
        }
    }

    #[test]
    fn kernel_of_phi() {
        for key in ["C3", "B2", "G(3,1,2)"] {
            let g = group(key);
            let b = basic_invariants(&g).unwrap();
            let r = relative_invariants(&g);
            let d = b.d();
            let bound = kernel_check_bound(g.rank(), d);
            let n = r.q.homogeneous_degree().unwrap();
            let i = invariant_ideal(&b.polys, g.rank(), g.field_order(), bound + n);
            let k = partials_ideal(&b.polys[0], bound);
            let checks = verify_kernel_phi(&r.q, &i, &k, g.rank(), d);
            assert!(
                checks.iter().all(KernelDegreeCheck::holds),
                "{key}: {checks:?}"
            );
        }
    }

    #[test]
    fn g312_witness() {
        let g = group("G(3,1,2)");
        let b = basic_invariants(&g).unwrap();
        let r = relative_invariants(&g);
        let (f1, f2) = (&b.polys[0], &b.polys[1]);
        let witness = x()
            .pow(3)
            .mul(&y())
            .mul(f1)
            .sub(&y().mul(f2).scale(&Cyclotomic::from_int(3, 2)));
        let qx2 = r.q.mul(&x().pow(2));
        assert!(qx2.proportionality(&witness).is_some());
        let i = invariant_ideal(&b.polys, 2, 3, 7);
        assert!(i.contains(&qx2));
    }

    #[test]
    fn duality_on_small_groups() {
        for key in ["C3", "B2", "G(3,1,2)"] {
            let g = group(key);
            let b = basic_invariants(&g).unwrap();
            let r = relative_invariants(&g);
            let top_i: usize = b.degrees.iter().map(|&d| d as usize - 1).sum();
            let i = invariant_ideal(&b.polys, g.rank(), g.field_order(), top_i + 1);
            let k = partials_ideal(&b.polys[0], g.rank() * (b.d() - 2) + 1);
            let rep = verify_duality_tops(&g, &i, &k, &r.j, &r.h, &b.degrees);
            assert!(rep.all_hold(), "{key}: {}", rep.summary());
        }
    }

    #[test]
    fn expected_hilbert_vectors() {
        assert_eq!(expected_partials_hilbert(3, 2), vec![1, 2, 1]);
        assert_eq!(expected_partials_hilbert(2, 3), vec![1]);
        assert_eq!(expected_partials_hilbert(4, 2), vec![1, 2, 3, 2, 1]);
    }
}
