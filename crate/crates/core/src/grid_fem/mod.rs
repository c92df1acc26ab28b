//! Structured meshes on the unit square/cube, multilinear vector elements
//! with periodic or tangential-trace constraints, and assembly of the
//! rot-stabilized Galerkin systems.

mod assembly;
mod mesh;
mod norms;
mod shape;
mod space;

pub use assembly::{assemble, assemble_gram, GramKind, RhsKind, SparseSystem};
pub use mesh::Mesh;
pub use norms::{field_norms, nearness_defect, rot_of, FieldNorms};
pub(crate) use norms::eval_local;
pub use shape::{shape_eval, ShapeEval};
pub use space::{build_space, ConstraintKind, FeSpace};
