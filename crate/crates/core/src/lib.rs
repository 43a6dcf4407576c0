//! Exact arithmetic for complete monomial ideals of a d-dimensional regular
//! local ring under monomial local quadratic transformations.
//!
//! The crate provides, entirely over the integers:
//!
//! * monomial ideal arithmetic on antichains of exponent vectors
//!   ([`ideal`]);
//! * Newton polyhedra, integral closure, *-products and Rees valuations
//!   ([`newton`]);
//! * directed transforms, complete inverse transforms and the combinatorics
//!   of direction sequences ([`transform`]);
//! * base point trees, point bases, special *-simple ideals and Lipman
//!   *-factorization ([`factor`]).
//!
//! Exactness is non-negotiable: all geometry runs on integer elimination
//! with checked arithmetic, and computations that would leave the safe
//! range fail with [`Error::TooLarge`] rather than round.

mod error;
mod solve;

pub mod factor;
pub mod ideal;
pub mod newton;
pub mod transform;

pub use error::{Error, Result};
pub use factor::{
    base_point_tree, index_order, index_order_tree, is_special_star_simple, lipman_factor,
    point_basis, special_p, special_p_chain, BasePointTree, FactorizationResult, TreeNode,
    DEFAULT_MAX_DEPTH,
};
pub use ideal::{ExponentVector, IndexOrderPair, MonomialIdeal};
pub use newton::{
    in_newton_polyhedron, integral_closure, is_complete, power_test_membership, rees_valuations,
    rees_valuations_with_limit, star_product, Facet, NewtonPolyhedron, WeightVector,
    DEFAULT_FACET_DIM_LIMIT, DEFAULT_POWER_TEST_BOUND,
};
pub use transform::{
    cit, cit_via_membership, delta, expansion_matrix, is_change_of_direction, is_proximate,
    ord_weights, transform_dir, DirectionSequence, ExpansionMatrix,
};
