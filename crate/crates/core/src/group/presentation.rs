use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::catalog::{CMatrix, GroupSpec};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub relations: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.relations.iter().filter(|r| !r.holds)
    }
}

/// Checks the relations encoded by the symbol on the catalog generators:
/// each rᵢ is a reflection of order exactly pᵢ, rᵢ and rⱼ commute when
/// |i − j| > 1, and rᵢrᵢ₊₁rᵢ⋯ = rᵢ₊₁rᵢrᵢ₊₁⋯ with qᵢ factors on each side.
pub fn verify_presentation(spec: &GroupSpec) -> PresentationReport {
    let gens = &spec.generators;
    let l = gens.len();
    let id = Matrix::identity(l, spec.field_order);
    let mut relations = Vec::new();
    let mut push =
        |relation: String, holds: bool| relations.push(RelationCheck { relation, holds });

    for (i, g) in gens.iter().enumerate() {
        push(format!("r{i} fixes a hyperplane"), g.sub(&id).rank() == 1);
        let p = spec.symbol.p.get(i).copied().unwrap_or(0);
        let exact = p >= 1 && g.pow(p).is_identity() && (1..p).all(|k| !g.pow(k).is_identity());
        push(format!("r{i} has order {p}"), exact);
    }
    for i in 0..l {
        for j in i + 2..l {
            let holds = gens[i].mul(&gens[j]) == gens[j].mul(&gens[i]);
            push(format!("r{i} r{j} = r{j} r{i}"), holds);
        }
    }
    for i in 0..l.saturating_sub(1) {
        let q = spec.symbol.q.get(i).copied().unwrap_or(0) as usize;
        let lhs = alternating(&gens[i], &gens[i + 1], q, &id);
        let rhs = alternating(&gens[i + 1], &gens[i], q, &id);
        push(
            format!("braid of length {q} between r{i} and r{}", i + 1),
            lhs == rhs,
        );
    }
    PresentationReport { relations }
}

/// a·b·a·b⋯ with `len` factors.
fn alternating(a: &CMatrix, b: &CMatrix, len: usize, id: &CMatrix) -> CMatrix {
    (0..len).fold(id.clone(), |acc, k| acc.mul(if k % 2 == 0 { a } else { b }))
}
