//! Coset complexes of reflection groups, generic simplicial complexes and
//! the generalized cross-polytope.

pub mod coset;
pub mod cross;
pub mod simplicial;

pub use coset::{CosetComplex, HopfCheck, SolomonTitsOutcome};
pub use cross::{
    cross_polytope_retraction, lex_shelling_cross_polytope, CrossFace, CrossPolytopeModel,
    LexShellingReport, RetractionReport,
};
pub use simplicial::{ChainComplex, CmVerdict, ReducedBetti, ShellingVerdict, SimplicialComplex};
