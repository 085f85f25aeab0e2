use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::simplicial::{ReducedBetti, ShellingVerdict, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::group::{ParabolicCosets, ReflectionGroup};
use crate::linalg::{invariant_subspace_trace, Matrix};

/// The complex whose cells are the cosets xG_J of the proper standard
/// parabolic subgroups, with xG_J a face of yG_K when xG_J ⊇ yG_K.
///
/// Vertex ids are color-major: all cosets of the maximal parabolic omitting
/// generator 0 come first, then those omitting generator 1, and so on.
/// Chambers (cosets of the trivial subgroup) are the facets, listed in
/// element order.
#[derive(Clone, Debug)]
pub struct CosetComplex {
    rank: usize,
    cosets: Vec<ParabolicCosets>,
    offsets: Vec<u32>,
    complex: SimplicialComplex,
}

impl CosetComplex {
    pub fn build(group: &ReflectionGroup) -> Self {
        let rank = group.rank();
        let full = (1u32 << rank) - 1;
        let cosets: Vec<ParabolicCosets> = (0..=full).map(|m| group.parabolic_cosets(m)).collect();
        let mut offsets = Vec::with_capacity(rank + 1);
        let mut total = 0u32;
        for color in 0..rank {
            offsets.push(total);
            total += cosets[(full ^ (1 << color)) as usize].count() as u32;
        }
        offsets.push(total);
        let facets = (0..group.order())
            .map(|x| {
                (0..rank)
                    .map(|c| offsets[c] + cosets[(full ^ (1 << c)) as usize].coset_of[x])
                    .collect()
            })
            .collect();
        CosetComplex {
            rank,
            cosets,
            offsets,
            complex: SimplicialComplex::from_facets(facets),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn cosets(&self, mask: u32) -> &ParabolicCosets {
        &self.cosets[mask as usize]
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets[self.rank] as usize
    }

    pub fn color_of(&self, vertex: u32) -> usize {
        self.offsets.partition_point(|&o| o <= vertex) - 1
    }

    /// Vertex ids of the chamber x, ascending (hence in color order).
    pub fn chamber(&self, x: usize) -> &[u32] {
        &self.complex.facets()[x]
    }

    /// Number of cells of each dimension −1, 0, …, rank − 1.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank + 1];
        for (mask, c) in self.cosets.iter().enumerate() {
            let colors = self.rank - (mask as u32).count_ones() as usize;
            counts[colors] += c.count();
        }
        counts
    }

    /// Distinct cells have distinct vertex sets.
    pub fn is_simplicial(&self) -> bool {
        self.cell_counts() == self.complex.f_vector()
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        self.complex.reduced_betti()
    }

    /// Cosets xG_J fixed by g, i.e. with x⁻¹gx ∈ G_J.
    pub fn fixed_cosets(&self, group: &ReflectionGroup, g: usize, mask: u32) -> usize {
        let c = &self.cosets[mask as usize];
        c.representatives
            .iter()
            .filter(|&&x| c.coset_of[group.mul(g, x)] == c.coset_of[x])
            .count()
    }

    /// Σ_J (−1)^|J| · #{cosets of G_J fixed by g}, over all J ⊆ R.
    pub fn virtual_character(&self, group: &ReflectionGroup, g: usize) -> i64 {
        (0..self.cosets.len() as u32)
            .map(|m| {
                let n = self.fixed_cosets(group, g, m) as i64;
                if m.count_ones() % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Σ_i (−1)^i · #{i-cells fixed by g}, starting from the empty cell.
    pub fn lefschetz_number(&self, group: &ReflectionGroup, g: usize) -> i64 {
        (0..self.cosets.len() as u32)
            .map(|m| {
                let dim = self.rank as i64 - m.count_ones() as i64 - 1;
                let n = self.fixed_cosets(group, g, m) as i64;
                if dim.rem_euclid(2) == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Basis of the top-dimensional cycles, as vectors indexed by chamber.
    pub fn top_cycle_basis(&self) -> Vec<Vec<Rational>> {
        let top = self.rank as isize - 1;
        let rows = self.complex.faces(top - 1).len();
        let cols = self.complex.facets().len();
        let mut m = Matrix::zeros(rows, cols, ());
        for (x, f) in self.complex.facets().iter().enumerate() {
            for p in 0..f.len() {
                let mut g = f.clone();
                g.remove(p);
                let row = self
                    .complex
                    .face_index(&g)
                    .expect("closure contains every ridge");
                m[(row, x)] = Rational::from(if p % 2 == 0 { 1 } else { -1 });
            }
        }
        m.nullspace()
    }

    /// Trace of g on the top reduced homology, which must be the only
    /// nonzero reduced homology group.
    pub fn homology_character(&self, group: &ReflectionGroup, g: usize) -> Result<Rational> {
        let top = self.rank as isize - 1;
        if !self.reduced_betti().concentrated_in(top) {
            return Err(Error::NotConcentrated { expected: top });
        }
        let basis = self.top_cycle_basis();
        invariant_subspace_trace(&basis, (), |v| {
            let mut out = vec![Rational::ZERO; v.len()];
            for (x, a) in v.iter().enumerate() {
                out[group.mul(g, x)] = a.clone();
            }
            out
        })
    }

    /// The Lefschetz number equals (−1)^(rank−1) times the homology
    /// character, and the virtual character equals the homology character.
    pub fn hopf_check(&self, group: &ReflectionGroup, g: usize) -> Result<HopfCheck> {
        let homology = self.homology_character(group, g)?;
        let lefschetz = self.lefschetz_number(group, g);
        let virtual_character = self.virtual_character(group, g);
        let sign = if self.rank % 2 == 1 { 1 } else { -1 };
        let holds = Rational::from(lefschetz) == Rational::from(sign) * homology.clone()
            && Rational::from(virtual_character) == homology;
        Ok(HopfCheck {
            element: g,
            homology,
            lefschetz,
            virtual_character,
            holds,
        })
    }

    /// Gallery distance of every chamber from the identity chamber.
    pub fn chamber_distances(&self, group: &ReflectionGroup) -> Vec<u32> {
        let orders = group.generator_orders();
        let mut dist = vec![u32::MAX; group.order()];
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, &p) in orders.iter().enumerate() {
                let mut y = x;
                for _ in 1..p {
                    y = group.right_mul_generator(y, i);
                    if dist[y] == u32::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }

    /// Chambers by increasing gallery distance from the identity, ties
    /// broken by a shuffle seeded with `seed`.
    pub fn solomon_tits_order(&self, group: &ReflectionGroup, seed: u64) -> Vec<usize> {
        let dist = self.chamber_distances(group);
        let max = dist.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); max as usize + 1];
        for (x, &d) in dist.iter().enumerate() {
            layers[d as usize].push(x);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order = Vec::with_capacity(dist.len());
        for mut layer in layers {
            layer.shuffle(&mut rng);
            order.extend(layer);
        }
        order
    }

    pub fn solomon_tits_check(
        &self,
        group: &ReflectionGroup,
        seed: u64,
    ) -> Result<SolomonTitsOutcome> {
        let order = self.solomon_tits_order(group, seed);
        let verdict = self.complex.shelling_check(&order)?;
        Ok(SolomonTitsOutcome {
            seed,
            order,
            verdict,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCheck {
    pub element: usize,
    pub homology: Rational,
    pub lefschetz: i64,
    pub virtual_character: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolomonTitsOutcome {
    pub seed: u64,
    pub order: Vec<usize>,
    pub verdict: ShellingVerdict,
}


#[cfg(test)]
mod large_groups {
    use super::*;
    use crate::group::catalog::{builtin, lookup};

    #[test]
    fn g26_complex() {
        let specs = builtin();
        let g = ReflectionGroup::generate(lookup(&specs, "2[4]3[3]3").unwrap()).unwrap();
        let cc = CosetComplex::build(&g);
        assert!(cc.is_simplicial());
        assert_eq!(cc.num_vertices(), 342);
        assert_eq!(cc.complex().faces(1).len(), 1512);
        assert_eq!(cc.complex().facets().len(), 1296);
        assert_eq!(cc.reduced_betti().nonnegative(), vec![0, 0, 125]);
        assert!(cc.complex().cm_check().passed);
        let failures = (0..8)
            .filter(|&seed| !cc.solomon_tits_check(&g, seed).unwrap().verdict.passed)
            .count();
        assert!(failures > 0);
    }

    #[test]
    fn g25_complex() {
        let specs = builtin();
        let g = ReflectionGroup::generate(lookup(&specs, "3[3]3[3]3").unwrap()).unwrap();
        let cc = CosetComplex::build(&g);
        assert!(cc.is_simplicial());
        assert_eq!(cc.complex().facets().len(), 648);
        assert_eq!(cc.reduced_betti().nonnegative(), vec![0, 0, 125]);
        assert!(cc.complex().cm_check().passed);
    }
}
