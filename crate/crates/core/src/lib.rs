//! Hypergraphic polytopes: faces, antipodes and closed-form families.

pub mod cli;
pub mod error;
pub mod face;
pub mod families;
pub mod flat;
pub mod geometry;
pub mod hopf;
pub mod hypergraph;
pub mod limits;
pub mod orient;
pub mod partition;
pub mod vset;

pub use error::{Error, Result};
pub use face::{is_subface, normalize_cone, omega, psi, vertex_coordinates, FaceKey};
pub use flat::{contract, flats, ContractedHypergraph, EdgeSet, Flat};
pub use hypergraph::{make_hypergraph, Hypergraph, HypergraphParseError, HypergraphSpec};
pub use limits::Limits;
pub use orient::{is_acyclic, orientation_count, orientation_quotient, orientations, Digraph, Orientable, Orientation, Quotient};
pub use partition::{fubini, set_compositions, set_partitions, SetComposition, SetPartition};
pub use vset::VertexSet;
pub use geometry::{
    antipode_from_faces, covering_faces, enumerate_faces, f_vector, hasse_diagram, is_simple, normalized_volume,
    one_skeleton, polytope_dim, FVector, Skeleton,
};
pub use hopf::{
    coproduct_terms, hopf_product, hyperforest_coefficient, is_hyperforest, orientation_antipode, takeuchi_antipode,
    AntipodeMethod, AntipodeResult,
};
pub use families::{
    hyperperm_hypergraph, is_building_set, opp_f_vector, parking_count, ps_f_vector, ps_hypergraph, ps_mod_p_check,
    ps_volume, Opp, PsSpec,
};
