//! Truncated operator model of the free product of two Jacobi factors:
//! the free product representation, replicas, free branches, independence
//! checks, and rooted-graph products.
//!
//! Matrices are exact when every `ω` of both factors has a rational square
//! root; otherwise build the model over `f64` and compare with [`FLOAT_TOL`].

mod checks;
mod graphs;
mod model;
mod sparse;
mod words;

pub use checks::{boolean_check, freeness_check, monotone_check, orthogonality_check, CheckReport, FLOAT_TOL};
pub use graphs::{
    free_product_ball, graph_branch, graph_comb, graph_orthogonal, graph_star, orthogonal_graph_pair, random_graph,
    GraphPair, RootedGraph,
};
pub use model::{free_product_rep, jacobi_operator, FreeProductModel, ModelOperator};
pub use sparse::{axpy, dot, scale_vec, unit, SparseMatrix, SparseVec};
pub use words::{format_word, other_factor, weight, Letter, Word, WordBasis};
