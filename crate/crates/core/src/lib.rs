//! Exact minimum feedback arc sets (τ), maximum arc-disjoint cycle packings
//! (ν) and arc-disjoint cycles through a fixed vertex, for digraphs and
//! tournaments on at most 64 vertices.

pub mod bits;
pub mod digraph;
pub mod error;
pub mod fas;
pub mod flow;
pub mod harness;
pub mod instances;
pub mod packing;
pub mod textio;
pub mod tournament;

pub use digraph::{Arc, ArcSet, Digraph, Vertex, VertexOrdering};
pub use error::{Error, Result};
pub use fas::{enumerate_min_fas, isaak_hypothesis_holds, mindeg_lower_bound, tau_exact, FasResult, FasSolver};
pub use flow::{max_cycles_through, min_arc_cover_through, theorem21_applies, verify_theorem21, Theorem21Params};
pub use packing::{
    count_triangles_through, florek_conjecture_check, max_triangles_through, nu_bruteforce, nu_exact,
    validate_packing, Budget, CyclePacking, NuSolver, SolveReport,
};
