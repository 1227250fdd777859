//! Exact computation of divisor-closed submonoid lattices and sets of
//! minimal distances for finitely generated cancellative commutative
//! monoids.
//!
//! A monoid enters either as an affine semigroup (a generator list in N^n)
//! or as a presentation `N^p / ~_M` for a subgroup `M <= Z^p` given by
//! generators or by defining congruences and equations. The crate computes
//! the polyhedral cone spanned by the generators, its face lattice, the
//! lattice of divisor-closed submonoids it induces, factorization sets and
//! Delta sets of single elements, and the set of minimal distances obtained
//! from the gcd of coordinate sums of the relation subgroups.
//!
//! All arithmetic is arbitrary-precision and exact. The operations are pure
//! and reentrant: values are immutable and safe to share across threads.

pub mod cone;
pub mod diophantine;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod monoid;

pub use cone::{cone_from_generators, enumerate_faces, is_simplicial, Cone, Face, FaceLattice};
pub use diophantine::{
    cone_lattice_generators, exists_solution_with_support_outside, hilbert_basis,
    DiophantineSystem, HilbertBasis,
};
pub use error::{Error, Result};
pub use lattice::{
    equations_to_generators, generators_to_equations, is_reduced, kernel_basis,
    lattice_intersect_coords, Congruence, EquationSystem, LatticeBasis,
};
pub use matrix::{hnf, snf, Int, IntMatrix, IntVector};
pub use monoid::{
    build_affine_model, check_dc_projection, dc_lattice_affine, dc_lattice_model,
    dc_lattice_presentation, delta_set_of_element, delta_star_affine, delta_star_presentation,
    enumerate_factorizations, is_divisor_closed_affine, min_delta_submonoid,
    min_delta_submonoid_affine, AffineModel, AffineSemigroup, DCLattice, DCSubmonoid,
    DeltaStarReport, MonoidPresentation,
};
