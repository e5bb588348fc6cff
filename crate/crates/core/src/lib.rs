//! Flag-vector pairs of polytopes: membership predicates, witness
//! constructions and face-lattice verification.

pub mod characterize;
pub mod constructions;
pub mod cyclic;
pub mod hull;
pub mod incidence;
pub mod io;
pub mod witness;

pub use incidence::{
    build_face_lattice, classify_local, dualize, flag_vector, FVector, FaceLattice, FlagVector,
    LocalStructure, VertexFacetIncidence,
};
