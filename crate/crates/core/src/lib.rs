//! Exact computations for relative difference Lie algebras: graded brackets,
//! the controlling L∞-algebra, four cohomology theories, infinitesimal
//! deformations, abelian extensions and integration of nilpotent examples.
//!
//! All arithmetic is over ℚ. Maps on a direct sum `g ⊕ h` use coordinates
//! with the basis of `g` first.

pub mod cohomology;
pub mod deform;
pub mod error;
pub mod fixtures;
pub mod integrate;
pub mod io;
pub mod linalg;
pub mod linfty;
pub mod multilinear;
pub mod nr;
pub mod sample;
pub mod structures;

pub use cohomology::{
    cohomology_group, cohomology_table, les_check, les_report, CochainComplex, CohomologyGroup,
    DeltaRoute, LesReport, PairCochain, RelCochain, Theory,
};
pub use deform::{AbelianExtension, DeformationDatum, ExtensionCocycle, Witness};
pub use error::{AxiomFailure, Error, Result};
pub use integrate::{integrate_operator, BchTable, NilpotentGroup, RelDiffGroup, SampleGrid};
pub use io::{Problem, ProblemFile};
pub use linalg::{
    format_rational, parse_rational, rat, ratio, DualScalar, Rational, RationalMatrix, Scalar,
    SubspaceBasis,
};
pub use linfty::{LInftyBrackets, LInftyElement, TwistedLInfty};
pub use multilinear::{AlternatingMap, BigradedMap, MixedCochain, Side, Split, WedgeIndex};
pub use structures::{
    DiffRepresentation, DifferenceLieAlgebra, LieActTriple, LieAlgebra, RelDiffHomomorphism,
    RelDiffStructure,
};
