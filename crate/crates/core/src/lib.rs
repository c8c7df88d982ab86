//! Exact computations for the multigraded Proj of a polynomial ring
//! `k[T₁,…,Tₙ]` graded by a finitely generated abelian group `D`.
//!
//! The crate decides relevance of homogeneous elements, enumerates the monomial
//! generators of the irrelevant ideal, computes degree-zero localizations as
//! Hilbert bases of linear Diophantine systems, and assembles the resulting chart
//! atlas together with torsor and quotient diagnostics. All arithmetic is exact.

pub mod abelian_group;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod graded_ring;
pub mod group_algebra;
pub mod intmat;
pub mod localization;
pub mod lp;
pub mod oracle;
pub mod proj;
pub mod relevance;

pub use abelian_group::{AbelianGroup, GroupElement, Index, Subgroup};
pub use error::{Error, Result};
pub use graded_ring::{Cone, GradedRing, Monomial, Polynomial};
pub use diophantine::{hilbert_basis, DiophantineSystem, SolverBudget};
pub use localization::{DegreeZeroChart, ReducedFraction};
pub use proj::{Chart, ProjAtlas};
pub use group_algebra::GroupAlgebraElement;
