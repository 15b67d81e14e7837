//! Tensor-product matrices, quivers and affine Dynkin classification.

pub mod affine;
mod quiver;
mod system;
mod tensor;
mod verify;

pub use affine::{affine_type, identify_cartan, types_with_nodes, AffineFamily, AffineType, CoxeterRow};
pub use quiver::{quiver, quiver_emit, Arrow, Quiver, QuiverEdge, QuiverVertex};
pub use system::{cartan_of, classify_affine_type, GroupData, ModuleSystem, PairData};
pub use tensor::{tensor_matrix, tensor_matrix_elementwise, Side, TensorMatrix};
pub use verify::{degree_null_vector, verify_eigen_structure, verify_transpose_symmetry, CheckLine};
