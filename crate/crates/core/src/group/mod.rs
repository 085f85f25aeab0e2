//! Reflection groups: symbols, catalog data and enumerated groups.

pub mod catalog;
mod presentation;
mod symbol;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use catalog::{
    builtin, lookup, normalize_key, reflections_from_cartan, CMatrix, Family, GroupSpec,
};
pub use presentation::{verify_presentation, PresentationReport, RelationCheck};
pub use symbol::ShephardSymbol;

use crate::error::{Error, Result};
use crate::field::Cyclotomic;
use crate::linalg::Matrix;

pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// A reflecting hyperplane ker α_H with its pointwise stabilizer data.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperplaneDatum {
    /// Linear form with first nonzero coordinate 1.
    pub alpha: Vec<Cyclotomic>,
    /// Order of the cyclic pointwise stabilizer.
    pub order: u32,
    /// Generator of the pointwise stabilizer.
    pub fixer: usize,
    /// Reflections fixing the hyperplane, ascending.
    pub reflections: Vec<usize>,
}

/// Left cosets xG_J of a standard parabolic subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicCosets {
    /// Bitmask of the generators in J.
    pub mask: u32,
    pub subgroup: Vec<usize>,
    /// Coset index of every element.
    pub coset_of: Vec<u32>,
    /// Minimal element index of each coset; cosets are numbered in order of
    /// their representatives.
    pub representatives: Vec<usize>,
}

impl ParabolicCosets {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::with_capacity(self.subgroup.len()); self.count()];
        for (x, &c) in self.coset_of.iter().enumerate() {
            out[c as usize].push(x);
        }
        out
    }
}

/// A finite reflection group enumerated as an explicit list of matrices.
///
/// Elements are numbered in breadth-first discovery order from the identity
/// (index 0) under left multiplication by the generators. All products are
/// answered from multiplication tables and generator words.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    spec: GroupSpec,
    elements: Vec<CMatrix>,
    index: BTreeMap<CMatrix, usize>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    parent: Vec<(u32, u8)>,
    generator_orders: Vec<u32>,
    inverse: Vec<u32>,
    det: Vec<Cyclotomic>,
    class_of: Vec<u32>,
    class_reps: Vec<usize>,
    class_sizes: Vec<usize>,
    reflections: Vec<usize>,
    hyperplanes: Vec<HyperplaneDatum>,
}

impl ReflectionGroup {
    pub fn generate(spec: &GroupSpec) -> Result<Self> {
        Self::generate_with_cap(spec, DEFAULT_ELEMENT_CAP)
    }

    pub fn generate_with_cap(spec: &GroupSpec, cap: usize) -> Result<Self> {
        spec.validate()?;
        let l = spec.rank();
        let n = spec.field_order;
        let gens = &spec.generators;
        let ngens = gens.len();

        let identity = Matrix::identity(l, n);
        let mut elements = vec![identity.clone()];
        let mut index = BTreeMap::new();
        index.insert(identity, 0usize);
        let mut parent = vec![(0u32, u8::MAX)];
        let mut left: Vec<Vec<u32>> = vec![Vec::new(); ngens];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let y = g.mul(&elements[x]);
                let id = match index.get(&y) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= cap {
                            return Err(Error::ElementCap { cap });
                        }
                        index.insert(y.clone(), id);
                        elements.push(y);
                        parent.push((x as u32, i as u8));
                        queue.push_back(id);
                        id
                    }
                };
                let row = &mut left[i];
                if row.len() <= x {
                    row.resize(x + 1, u32::MAX);
                }
                row[x] = id as u32;
            }
        }
        let size = elements.len();
        let right: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                elements
                    .iter()
                    .map(|x| {
                        let y = x.mul(g);
                        *index
                            .get(&y)
                            .expect("group closed under right multiplication")
                            as u32
                    })
                    .collect()
            })
            .collect();

        let generator_orders: Vec<u32> = gens.iter().map(|g| matrix_order(g, size)).collect();
        let mut inverse = vec![0u32; size];
        for x in 1..size {
            let (p, i) = parent[x];
            let mut y = inverse[p as usize];
            for _ in 0..generator_orders[i as usize] - 1 {
                y = right[i as usize][y as usize];
            }
            inverse[x] = y;
        }
        let det = elements.iter().map(Matrix::det).collect();

        let mut group = ReflectionGroup {
            spec: spec.clone(),
            elements,
            index,
            left,
            right,
            parent,
            generator_orders,
            inverse,
            det,
            class_of: Vec::new(),
            class_reps: Vec::new(),
            class_sizes: Vec::new(),
            reflections: Vec::new(),
            hyperplanes: Vec::new(),
        };
        group.compute_classes();
        group.compute_hyperplanes()?;
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let size = self.order();
        let mut class_of = vec![u32::MAX; size];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..size {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            class_of[x] = c;
            let mut count = 1;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for i in 0..self.rank() {
                    let z = self.conjugate_by_generator(i, y);
                    if class_of[z] == u32::MAX {
                        class_of[z] = c;
                        count += 1;
                        queue.push_back(z);
                    }
                }
            }
            sizes.push(count);
        }
        self.class_of = class_of;
        self.class_reps = reps;
        self.class_sizes = sizes;
    }

    /// gᵢ·x·gᵢ⁻¹.
    fn conjugate_by_generator(&self, i: usize, x: usize) -> usize {
        let mut y = self.left[i][x] as usize;
        for _ in 0..self.generator_orders[i] - 1 {
            y = self.right[i][y] as usize;
        }
        y
    }

    fn compute_hyperplanes(&mut self) -> Result<()> {
        let l = self.rank();
        let n = self.field_order();
        let id = Matrix::identity(l, n);
        let mut by_alpha: BTreeMap<Vec<Cyclotomic>, Vec<usize>> = BTreeMap::new();
        let mut first_seen: Vec<Vec<Cyclotomic>> = Vec::new();
        for x in 1..self.order() {
            let diff = self.elements[x].sub(&id);
            if diff.rank() != 1 {
                continue;
            }
            self.reflections.push(x);
            let alpha = normalized_row_space(&diff);
            let entry = by_alpha.entry(alpha.clone()).or_default();
            if entry.is_empty() {
                first_seen.push(alpha);
            }
            entry.push(x);
        }
        for alpha in first_seen {
            let refl = by_alpha.remove(&alpha).expect("hyperplane recorded");
            let order = refl.len() as u32 + 1;
            let fixer = *refl
                .iter()
                .find(|&&r| matrix_order(&self.elements[r], self.order()) == order)
                .ok_or_else(|| {
                    Error::Hyperplane(format!(
                        "no reflection of order {order} fixes the hyperplane with {} reflections",
                        refl.len()
                    ))
                })?;
            let mut powers = Vec::with_capacity(refl.len());
            let mut y = fixer;
            while y != 0 {
                powers.push(y);
                y = self.mul(y, fixer);
            }
            powers.sort_unstable();
            if powers != refl {
                return Err(Error::Hyperplane(format!(
                    "pointwise stabilizer of a hyperplane is not generated by element {fixer}"
                )));
            }
            self.hyperplanes.push(HyperplaneDatum {
                alpha,
                order,
                fixer,
                reflections: refl,
            });
        }
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn field_order(&self) -> u32 {
        self.spec.field_order
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &CMatrix {
        &self.elements[x]
    }

    pub fn index_of(&self, m: &CMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Element indices of the distinguished generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        (0..self.rank()).map(|i| self.left[i][0] as usize).collect()
    }

    pub fn generator_orders(&self) -> &[u32] {
        &self.generator_orders
    }

    /// Generator indices i₁…iₖ with x = g_{i₁}⋯g_{iₖ}.
    pub fn word(&self, mut x: usize) -> Vec<u8> {
        let mut w = Vec::new();
        while x != 0 {
            let (p, i) = self.parent[x];
            w.push(i);
            x = p as usize;
        }
        w
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.word(y)
            .into_iter()
            .fold(x, |acc, i| self.right[i as usize][acc] as usize)
    }

    /// gᵢ·x.
    pub fn left_mul_generator(&self, i: usize, x: usize) -> usize {
        self.left[i][x] as usize
    }

    /// x·gᵢ.
    pub fn right_mul_generator(&self, x: usize, i: usize) -> usize {
        self.right[i][x] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn det(&self, x: usize) -> &Cyclotomic {
        &self.det[x]
    }

    pub fn element_order(&self, x: usize) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Minimal element index of each conjugacy class, ascending.
    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }

    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn hyperplanes(&self) -> &[HyperplaneDatum] {
        &self.hyperplanes
    }

    /// Closure of J under right multiplication, partitioned into left cosets.
    pub fn parabolic_cosets(&self, mask: u32) -> ParabolicCosets {
        let gens: Vec<usize> = (0..self.rank()).filter(|i| mask >> i & 1 == 1).collect();
        let size = self.order();
        let mut coset_of = vec![u32::MAX; size];
        let mut reps = Vec::new();
        let mut queue = VecDeque::new();
        for x in 0..size {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            coset_of[x] = c;
            queue.push_back(x);
            while let Some(y) = queue.pop_front() {
                for &i in &gens {
                    let z = self.right[i][y] as usize;
                    if coset_of[z] == u32::MAX {
                        coset_of[z] = c;
                        queue.push_back(z);
                    }
                }
            }
        }
        let subgroup = (0..size).filter(|&x| coset_of[x] == 0).collect();
        ParabolicCosets {
            mask,
            subgroup,
            coset_of,
            representatives: reps,
        }
    }

    /// Presentation relations checked on this group's generators.
    pub fn verify_presentation(&self) -> PresentationReport {
        verify_presentation(&self.spec)
    }
}

/// Row space of a rank-one matrix as a covector scaled to have first nonzero
/// coordinate 1.
fn normalized_row_space(m: &CMatrix) -> Vec<Cyclotomic> {
    let row = (0..m.rows())
        .map(|i| m.row(i))
        .find(|r| r.iter().any(|x| !x.is_zero()))
        .expect("rank one");
    let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero row");
    let inv = lead.inverse().expect("nonzero lead");
    row.iter().map(|x| x * &inv).collect()
}

/// Multiplicative order of a matrix, searched up to `bound`.
fn matrix_order(m: &CMatrix, bound: usize) -> u32 {
    let mut p = m.clone();
    let mut k = 1;
    while !p.is_identity() {
        assert!(k <= bound, "matrix of infinite order in a finite group");
        p = p.mul(m);
        k += 1;
    }
    k as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(key: &str) -> ReflectionGroup {
        ReflectionGroup::generate(lookup(&builtin(), key).unwrap()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group("G(3,1,2)").order(), 18);
        assert_eq!(group("3[3]3").order(), 24);
        assert_eq!(group("5").order(), 5);
        assert_eq!(group("B2").order(), 8);
    }

    #[test]
    fn orders_and_reflection_counts_match_degrees() {
        for spec in builtin().iter().filter(|s| !s.stretch) {
            let g = ReflectionGroup::generate(spec).unwrap();
            assert_eq!(g.order() as u64, spec.expected_order(), "{}", spec.name);
            let by_degrees: u32 = spec.degrees.iter().map(|d| d - 1).sum();
            let by_hyperplanes: u32 = g.hyperplanes().iter().map(|h| h.order - 1).sum();
            assert_eq!(g.reflections().len() as u32, by_degrees, "{}", spec.name);
            assert_eq!(by_hyperplanes, by_degrees, "{}", spec.name);
            for x in g.generator_indices() {
                assert!(g.reflections().contains(&x));
            }
        }
    }

    #[test]
    fn classes() {
        assert_eq!(group("C5").num_classes(), 5);
        assert_eq!(group("B2").num_classes(), 5);
        assert_eq!(group("G(3,1,2)").num_classes(), 9);
    }

    #[test]
    fn tables_agree_with_matrices() {
        let g = group("3[3]3");
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inverse(x)), 0);
            for y in [1, 5, 17] {
                let xy = g.element(x).mul(g.element(y));
                assert_eq!(g.index_of(&xy), Some(g.mul(x, y)));
            }
        }
    }

    #[test]
    fn g312_hyperplanes() {
        let g = group("G(3,1,2)");
        let h = g.hyperplanes();
        assert_eq!(h.len(), 5);
        let mut orders: Vec<u32> = h.iter().map(|d| d.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3, 3]);
        assert_eq!(g.reflections().len(), 7);
        let w = |k| Cyclotomic::zeta_pow(3, k);
        let c = |k| Cyclotomic::from_int(3, k);
        let mut alphas: Vec<Vec<Cyclotomic>> = h.iter().map(|d| d.alpha.clone()).collect();
        alphas.sort();
        let mut expected = vec![
            vec![c(1), c(0)],
            vec![c(0), c(1)],
            vec![c(1), c(-1)],
            vec![c(1), -w(1)],
            vec![c(1), -w(2)],
        ];
        expected.sort();
        assert_eq!(alphas, expected);
    }

    #[test]
    fn b2_and_rank_one_hyperplanes() {
        let g = group("B2");
        assert_eq!(g.hyperplanes().len(), 4);
        assert!(g.hyperplanes().iter().all(|h| h.order == 2));
        let g = group("C3");
        assert_eq!(g.hyperplanes().len(), 1);
        assert_eq!(g.hyperplanes()[0].order, 3);
    }

    #[test]
    fn parabolic_coset_counts() {
        let g = group("3[3]3");
        assert_eq!(g.parabolic_cosets(0b11).count(), 1);
        assert_eq!(g.parabolic_cosets(0).count(), 24);
        let c = g.parabolic_cosets(0b01);
        assert_eq!(c.count(), 8);
        assert_eq!(c.subgroup.len(), 3);
    }

    #[test]
    fn element_cap() {
        let specs = builtin();
        let spec = lookup(&specs, "H3").unwrap();
        assert_eq!(
            ReflectionGroup::generate_with_cap(spec, 100).unwrap_err(),
            Error::ElementCap { cap: 100 }
        );
    }
}
