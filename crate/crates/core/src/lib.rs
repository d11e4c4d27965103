//! Exact Laurent-polynomial arithmetic, Hom-structures, and constructions and
//! verifiers for solutions of the Hom-Yang-Baxter equation.

pub mod catalog;
pub mod constructions;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod verify;

pub use catalog::{
    catalog, catalog_get, catalog_list, catalog_verify_all, compare_table, format_tensor, reports_pass, verify_entry,
    CatalogEntry, CatalogError, CheckOutcome, EntryReport, EntryStatus, Recipe, TableEntry, TableRow,
};
pub use constructions::{
    AlgebraInverseVariant, AlgebraVariant, BuildError, CoalgebraInverseVariant, CoalgebraVariant, Construction,
    RMatrix, SolutionOperator, SystemTriple,
};
pub use report::{VerificationReport, Witness, DEFAULT_WITNESS_CAP};
pub use scalar::{parse_scalar, Assignment, ParamSet, Rational, Scalar, ScalarError};
pub use structures::{
    Axioms, HomAlgebra, HomCoalgebra, HomLieAlgebra, HomStructure, StructureError, StructureKind, Twisted, Validated,
};
pub use tensor::{Matrix, TensorError};
pub use verify::{Verifier, VerifyError};
