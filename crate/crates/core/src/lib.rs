//! Exact verification, search and stress-testing tools for covers of the
//! integers by residue classes and their connection with zero-sum problems
//! over finite abelian p-groups.
//!
//! Everything here is exact: subset sums are integer numerators over a common
//! denominator, roots of unity live in cyclotomic rings `Z[ζ_N]`, and no
//! floating point is used on any verification path.

pub mod characterization;
pub mod covers;
pub mod error;
pub mod exactmath;
pub mod graphs;
pub mod pgroups;
pub mod subsets;
pub mod zerosum;

pub use error::{Error, Result};
pub use exactmath::{CycloElement, IntPolynomial, Rational};
pub use covers::{CoverProfile, ResidueClass, ResidueSystem};
pub use graphs::{Multigraph, SubgraphWitness};
pub use pgroups::{GroupElement, GroupShape};
pub use zerosum::ZeroSumInstance;
