use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::linalg::{sparse_rank, SparseVec};

pub type Simplex = Vec<u32>;

/// A finite simplicial complex given by its facets, with every face listed
/// by dimension. Index 0 of the per-dimension tables holds the empty face.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    faces: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Facet vertex lists are sorted; redundant facets (faces of others) are
    /// kept as given, so callers should pass maximal faces only.
    pub fn from_facets(facets: Vec<Simplex>) -> Self {
        let facets: Vec<Simplex> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        let top = facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); top + 1];
        sets[0].insert(Vec::new());
        for f in &facets {
            let n = f.len();
            assert!(n < 32, "facet too large");
            for mask in 1u32..(1 << n) {
                let face: Simplex = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                sets[face.len()].insert(face);
            }
        }
        let faces: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = faces
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            .collect();
        SimplicialComplex {
            facets,
            faces,
            index,
        }
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Dimension of the largest facet; −1 for the complex {∅}.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn is_pure(&self) -> bool {
        let d = self.faces.len() - 1;
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Faces of dimension `dim` (≥ −1), sorted.
    pub fn faces(&self, dim: isize) -> &[Simplex] {
        let k = (dim + 1) as usize;
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn face_index(&self, face: &[u32]) -> Option<usize> {
        self.index.get(face.len())?.get(face).copied()
    }

    /// Face counts f₋₁, f₀, …, f_dim.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.faces(0).len()
    }

    /// Augmented chain complex over ℚ with vertices of each simplex in
    /// ascending order and boundary signs (−1)^position.
    pub fn chain_complex(&self) -> ChainComplex {
        let mut boundaries = Vec::new();
        for k in 1..self.faces.len() {
            let cols = self.faces[k]
                .iter()
                .map(|f| {
                    let mut col: SparseVec<Rational> = (0..f.len())
                        .map(|p| {
                            let mut g = f.clone();
                            g.remove(p);
                            let sign = if p % 2 == 0 { 1 } else { -1 };
                            (self.index[k - 1][&g], Rational::from(sign))
                        })
                        .collect();
                    col.sort_unstable_by_key(|(i, _)| *i);
                    col
                })
                .collect();
            boundaries.push(cols);
        }
        ChainComplex {
            dims: self.faces.iter().map(Vec::len).collect(),
            boundaries,
        }
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        self.chain_complex().reduced_betti()
    }

    /// Subcomplex of faces τ with τ ∩ σ = ∅ and τ ∪ σ a face.
    pub fn link(&self, sigma: &[u32]) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|f| sigma.iter().all(|v| f.binary_search(v).is_ok()))
            .map(|f| {
                f.iter()
                    .copied()
                    .filter(|v| sigma.binary_search(v).is_err())
                    .collect()
            })
            .collect();
        SimplicialComplex::from_facets(facets)
    }

    /// Reduced homology of the complex and of the link of every nonempty
    /// face vanishes below the top dimension.
    pub fn cm_check(&self) -> CmVerdict {
        let mut checked = 0;
        if !self.is_pure() {
            return CmVerdict {
                passed: false,
                faces_checked: 0,
                first_failure: None,
            };
        }
        if !self.reduced_betti().concentrated_in(self.dim()) {
            return CmVerdict {
                passed: false,
                faces_checked: 1,
                first_failure: Some(Vec::new()),
            };
        }
        checked += 1;
        for k in 1..self.faces.len() {
            for sigma in &self.faces[k] {
                let link = self.link(sigma);
                checked += 1;
                let top = self.dim() - sigma.len() as isize;
                if link.dim() != top || !link.reduced_betti().concentrated_in(top) {
                    return CmVerdict {
                        passed: false,
                        faces_checked: checked,
                        first_failure: Some(sigma.clone()),
                    };
                }
            }
        }
        CmVerdict {
            passed: true,
            faces_checked: checked,
            first_failure: None,
        }
    }

    /// Checks that the facets, taken in the given order, form a shelling:
    /// each facet meets the union of its predecessors in a nonempty union of
    /// codimension-one faces.
    pub fn shelling_check(&self, order: &[usize]) -> Result<ShellingVerdict> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut seen = vec![false; self.facets.len()];
        for &i in order {
            if i >= self.facets.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(
                    "order is not a permutation of the facets".into(),
                ));
            }
        }
        if order.len() != self.facets.len() {
            return Err(Error::InvalidArgument(
                "order is not a permutation of the facets".into(),
            ));
        }
        // codimension-one faces of facets placed so far
        let mut ridges: BTreeSet<Simplex> = BTreeSet::new();
        // vertex -> positions of earlier facets containing it
        let mut incident: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (k, &fi) in order.iter().enumerate() {
            let f = &self.facets[fi];
            if k > 0 {
                let restricted: Vec<u32> = f
                    .iter()
                    .copied()
                    .filter(|v| {
                        let r: Simplex = f.iter().copied().filter(|w| w != v).collect();
                        ridges.contains(&r)
                    })
                    .collect();
                if restricted.is_empty() {
                    return Ok(ShellingVerdict::failed(k));
                }
                // earlier facets that share a vertex with f; disjoint ones are
                // covered because `restricted` is nonempty
                let mut neighbours: BTreeSet<usize> = BTreeSet::new();
                for v in f {
                    if let Some(list) = incident.get(v) {
                        neighbours.extend(list.iter().copied());
                    }
                }
                for j in neighbours {
                    let g = &self.facets[order[j]];
                    if !restricted.iter().any(|v| g.binary_search(v).is_err()) {
                        return Ok(ShellingVerdict::failed(k));
                    }
                }
            }
            for v in f {
                incident.entry(*v).or_default().push(k);
            }
            for p in 0..f.len() {
                let mut r = f.clone();
                r.remove(p);
                ridges.insert(r);
            }
        }
        Ok(ShellingVerdict {
            passed: true,
            failed_at: None,
        })
    }
}

/// Augmented simplicial chain complex over ℚ.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// Ranks of the chain groups C₋₁, C₀, ….
    pub dims: Vec<usize>,
    /// `boundaries[k]`: C_k → C_{k−1}, one sparse column per k-face, so
    /// index 0 maps vertices onto the empty face.
    pub boundaries: Vec<Vec<SparseVec<Rational>>>,
}

impl ChainComplex {
    /// ∂∘∂ = 0 on every column.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            let (lower, upper) = (&w[0], &w[1]);
            upper.iter().all(|col| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (i, a) in col {
                    for (j, b) in &lower[*i] {
                        let e = acc.entry(*j).or_default();
                        *e = &*e + &(a * b);
                    }
                }
                acc.values().all(Rational::is_zero)
            })
        })
    }

    pub fn boundary_ranks(&self) -> Vec<usize> {
        self.boundaries
            .iter()
            .map(|cols| sparse_rank(cols.iter().cloned()))
            .collect()
    }

    pub fn reduced_betti(&self) -> ReducedBetti {
        let ranks = self.boundary_ranks();
        let ranks_at = |k: usize| {
            if k == 0 || k > ranks.len() {
                0
            } else {
                ranks[k - 1]
            }
        };
        let values = (0..self.dims.len())
            .map(|k| self.dims[k] - ranks_at(k) - ranks_at(k + 1))
            .collect();
        ReducedBetti { values }
    }
}

/// Reduced Betti numbers β̃₋₁, β̃₀, … over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBetti {
    values: Vec<usize>,
}

impl ReducedBetti {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    /// β̃₀, β̃₁, …, β̃_dim.
    pub fn nonnegative(&self) -> Vec<usize> {
        self.values.iter().skip(1).copied().collect()
    }

    pub fn concentrated_in(&self, dim: isize) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(k, &b)| b == 0 || k as isize - 1 == dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub passed: bool,
    pub faces_checked: usize,
    /// The first face (empty for the whole complex) whose link fails.
    pub first_failure: Option<Simplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingVerdict {
    pub passed: bool,
    /// 1-based position in the order of the first facet violating the
    /// shelling condition.
    pub failed_at: Option<usize>,
}

impl ShellingVerdict {
    fn failed(k: usize) -> Self {
        ShellingVerdict {
            passed: false,
            failed_at: Some(k + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets((0..n).map(|i| vec![i, (i + 1) % n]).collect())
    }

    #[test]
    fn homology_of_small_complexes() {
        let c = cycle(8);
        assert!(c.chain_complex().is_complex());
        assert_eq!(c.reduced_betti().nonnegative(), vec![0, 1]);
        let pts = SimplicialComplex::from_facets((0..5).map(|i| vec![i]).collect());
        assert_eq!(pts.reduced_betti().nonnegative(), vec![4]);
        let tri = SimplicialComplex::from_facets(vec![vec![0, 1, 2]]);
        assert!(tri.reduced_betti().concentrated_in(5));
        let sphere = SimplicialComplex::from_facets(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ]);
        assert_eq!(sphere.reduced_betti().nonnegative(), vec![0, 0, 1]);
        assert!(sphere.chain_complex().is_complex());
    }

    #[test]
    fn cm_examples() {
        assert!(cycle(6).cm_check().passed);
        let two_edges = SimplicialComplex::from_facets(vec![vec![0, 1], vec![2, 3]]);
        assert!(!two_edges.cm_check().passed);
        // two triangles glued at a vertex: connected but the vertex link is disconnected
        let bowtie = SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![0, 3, 4]]);
        let v = bowtie.cm_check();
        assert!(!v.passed);
    }

    #[test]
    fn shelling_examples() {
        let path = SimplicialComplex::from_facets(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert!(path.shelling_check(&[0, 1, 2]).unwrap().passed);
        let two_edges = SimplicialComplex::from_facets(vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            two_edges.shelling_check(&[0, 1]).unwrap().failed_at,
            Some(2)
        );
        let c = cycle(8);
        assert!(c.shelling_check(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap().passed);
        assert!(c.shelling_check(&[0, 7, 1, 6, 2, 5, 3, 4]).unwrap().passed);
        assert_eq!(
            c.shelling_check(&[0, 4, 1, 2, 3, 5, 6, 7])
                .unwrap()
                .failed_at,
            Some(2)
        );
        // a triangle meeting the first only in a vertex
        let bowtie = SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert!(!bowtie.shelling_check(&[0, 1]).unwrap().passed);
        let mixed = SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(mixed.shelling_check(&[0, 1]), Err(Error::NotPure));
    }

    #[test]
    fn links() {
        let sphere = SimplicialComplex::from_facets(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ]);
        let l = sphere.link(&[0]);
        assert_eq!(l.facets().len(), 3);
        assert_eq!(l.reduced_betti().nonnegative(), vec![0, 1]);
        let l = sphere.link(&[0, 1, 2]);
        assert_eq!(l.dim(), -1);
        assert!(l.reduced_betti().concentrated_in(-1));
    }
}
