use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::simplicial::{ShellingVerdict, SimplicialComplex};
use crate::error::{Error, Result};

/// A proper face of the generalized cross-polytope: the simplex spanned by
/// the vertices ζ^labels[i]·e_i for i in `support`. Labels outside the
/// support are zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossFace {
    pub support: u32,
    pub labels: Vec<u8>,
}

impl CrossFace {
    /// Dimension of the face, used as its color in the order complex.
    pub fn color(&self) -> usize {
        self.support.count_ones() as usize - 1
    }

    pub fn contains(&self, other: &CrossFace) -> bool {
        other.support & !self.support == 0
            && (0..self.labels.len())
                .all(|i| other.support >> i & 1 == 0 || other.labels[i] == self.labels[i])
    }
}

/// The order complex of the proper faces of the generalized cross-polytope
/// with r points on each of ℓ axes. Vertices are faces, numbered by color and
/// then lexicographically; chambers are full flags.
#[derive(Clone, Debug)]
pub struct CrossPolytopeModel {
    r: u8,
    l: usize,
    faces: Vec<CrossFace>,
    index: BTreeMap<CrossFace, u32>,
    chambers: Vec<Chamber>,
    complex: SimplicialComplex,
}

/// A full flag: coordinates enter the support in the order `perm`, carrying
/// the labels `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub perm: Vec<u8>,
    pub labels: Vec<u8>,
}

impl CrossPolytopeModel {
    pub fn new(r: u8, l: usize) -> Result<Self> {
        if r < 2 || l == 0 || l > 6 {
            return Err(Error::InvalidArgument(
                "cross-polytope needs r ≥ 2 and 1 ≤ ℓ ≤ 6".into(),
            ));
        }
        let mut faces = Vec::new();
        for size in 1..=l as u32 {
            for support in 1u32..(1 << l) {
                if support.count_ones() != size {
                    continue;
                }
                for labels in label_vectors(r, l) {
                    if (0..l).all(|i| support >> i & 1 == 1 || labels[i] == 0) {
                        faces.push(CrossFace { support, labels });
                    }
                }
            }
        }
        let index: BTreeMap<CrossFace, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i as u32))
            .collect();
        let mut chambers = Vec::new();
        for perm in permutations(l) {
            for labels in label_vectors(r, l) {
                chambers.push(Chamber {
                    perm: perm.clone(),
                    labels,
                });
            }
        }
        let facets = chambers
            .iter()
            .map(|c| flag(c).iter().map(|f| index[f]).collect())
            .collect();
        Ok(CrossPolytopeModel {
            r,
            l,
            faces,
            index,
            chambers,
            complex: SimplicialComplex::from_facets(facets),
        })
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn faces(&self) -> &[CrossFace] {
        &self.faces
    }

    pub fn face_id(&self, face: &CrossFace) -> Option<u32> {
        self.index.get(face).copied()
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Vertex ids of a chamber, ascending.
    pub fn chamber_vertices(&self, c: &Chamber) -> Vec<u32> {
        let mut v: Vec<u32> = flag(c).iter().map(|f| self.index[f]).collect();
        v.sort_unstable();
        v
    }

    /// Chamber indices ordered by the labels read along the flag, then by
    /// the flag's coordinate order.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.chambers.len()).collect();
        order.sort_by(|&a, &b| lex_compare(&self.chambers[a], &self.chambers[b]));
        order
    }
}

fn lex_compare(a: &Chamber, b: &Chamber) -> Ordering {
    let along = |c: &Chamber| {
        c.perm
            .iter()
            .map(|&i| c.labels[i as usize])
            .collect::<Vec<u8>>()
    };
    along(a).cmp(&along(b)).then_with(|| a.perm.cmp(&b.perm))
}

fn flag(c: &Chamber) -> Vec<CrossFace> {
    let l = c.labels.len();
    let mut support = 0u32;
    c.perm
        .iter()
        .map(|&i| {
            support |= 1 << i;
            let labels = (0..l)
                .map(|j| {
                    if support >> j & 1 == 1 {
                        c.labels[j]
                    } else {
                        0
                    }
                })
                .collect();
            CrossFace { support, labels }
        })
        .collect()
}

fn label_vectors(r: u8, l: usize) -> Vec<Vec<u8>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u8>| {
                (0..r).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn permutations(l: usize) -> Vec<Vec<u8>> {
    if l == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(l - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (l - 1) as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// ι: β²_ℓ → β^r_ℓ sends ±e_i to ζ^0·e_i and ζ^1·e_i; ρ: β^r_ℓ → β²_ℓ sends
/// ζ^0·e_i to +e_i and every other ζ^k·e_i to −e_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionReport {
    pub r: u8,
    pub l: usize,
    pub iota_simplicial: bool,
    pub rho_simplicial: bool,
    pub colors_preserved: bool,
    pub rho_after_iota_is_identity: bool,
    /// Only meaningful when r = 2, where ι and ρ should be inverse bijections.
    pub mutually_inverse: Option<bool>,
}

impl RetractionReport {
    pub fn holds(&self) -> bool {
        self.iota_simplicial
            && self.rho_simplicial
            && self.colors_preserved
            && self.rho_after_iota_is_identity
            && self.mutually_inverse != Some(false)
    }
}

pub fn iota(face: &CrossFace) -> CrossFace {
    face.clone()
}

pub fn rho(face: &CrossFace) -> CrossFace {
    CrossFace {
        support: face.support,
        labels: face.labels.iter().map(|&k| k.min(1)).collect(),
    }
}

fn maps_simplicially(
    source: &CrossPolytopeModel,
    target: &CrossPolytopeModel,
    map: impl Fn(&CrossFace) -> CrossFace,
) -> (bool, bool) {
    let mut simplicial = true;
    let mut colors = true;
    for face in source.faces() {
        let image = map(face);
        match target.face_id(&image) {
            Some(_) => colors &= image.color() == face.color(),
            None => return (false, false),
        }
    }
    for c in source.chambers() {
        let mut image: Vec<u32> = flag(c).iter().map(|f| target.index[&map(f)]).collect();
        image.sort_unstable();
        image.dedup();
        simplicial &= target.complex().face_index(&image).is_some();
    }
    (simplicial, colors)
}

pub fn cross_polytope_retraction(r: u8, l: usize) -> Result<RetractionReport> {
    let big = CrossPolytopeModel::new(r, l)?;
    let small = CrossPolytopeModel::new(2, l)?;
    let (iota_simplicial, iota_colors) = maps_simplicially(&small, &big, iota);
    let (rho_simplicial, rho_colors) = maps_simplicially(&big, &small, rho);
    let rho_after_iota_is_identity = small.faces().iter().all(|f| rho(&iota(f)) == *f);
    let mutually_inverse = (r == 2).then(|| big.faces().iter().all(|f| iota(&rho(f)) == *f));
    Ok(RetractionReport {
        r,
        l,
        iota_simplicial,
        rho_simplicial,
        colors_preserved: iota_colors && rho_colors,
        rho_after_iota_is_identity,
        mutually_inverse,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexShellingReport {
    pub r: u8,
    pub l: usize,
    pub chambers: usize,
    pub verdict: ShellingVerdict,
}

/// Runs the shelling check on the lexicographic chamber order.
pub fn lex_shelling_cross_polytope(r: u8, l: usize) -> Result<LexShellingReport> {
    let model = CrossPolytopeModel::new(r, l)?;
    let verdict = model.complex().shelling_check(&model.lex_order())?;
    Ok(LexShellingReport {
        r,
        l,
        chambers: model.chambers().len(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vertex(l: usize, i: usize, k: u8) -> CrossFace {
        let mut labels = alloc::vec![0; l];
        labels[i] = k;
        CrossFace {
            support: 1 << i,
            labels,
        }
    }

    #[test]
    fn sizes() {
        let m = CrossPolytopeModel::new(3, 2).unwrap();
        // 6 vertices and 9 edges of the polytope
        assert_eq!(m.faces().len(), 15);
        assert_eq!(m.chambers().len(), 18);
        let m = CrossPolytopeModel::new(2, 3).unwrap();
        assert_eq!(m.chambers().len(), 48);
        assert_eq!(
            m.complex().reduced_betti().nonnegative(),
            alloc::vec![0, 0, 1]
        );
    }

    #[test]
    fn retraction_examples() {
        assert_eq!(rho(&iota(&vertex(2, 0, 0))), vertex(2, 0, 0));
        assert_eq!(rho(&vertex(2, 0, 2)), vertex(2, 0, 1));
        for (r, l) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
            let rep = cross_polytope_retraction(r, l).unwrap();
            assert!(rep.holds(), "{rep:?}");
            assert_eq!(rep.mutually_inverse.is_some(), r == 2);
        }
    }

    #[test]
    fn lex_order_shells() {
        for (r, l) in [(2, 2), (3, 2), (3, 3), (4, 2), (2, 3)] {
            let rep = lex_shelling_cross_polytope(r, l).unwrap();
            assert!(rep.verdict.passed, "{rep:?}");
        }
    }

    #[test]
    fn reversed_lex_order_is_checked() {
        let m = CrossPolytopeModel::new(3, 2).unwrap();
        let mut order = m.lex_order();
        order.swap(1, 17);
        assert!(!m.complex().shelling_check(&order).unwrap().passed);
    }
}
