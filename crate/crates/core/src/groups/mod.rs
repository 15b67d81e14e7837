//! Matrix groups over cyclotomic fields and their character theory.

mod character;
mod group;
mod matrix;
mod spec;

pub use character::{
    character_table, column_orthogonal, exterior_power_character, induce, induce_characters, inner_product,
    linear_characters, natural_character, restrict_characters, row_orthogonal, upsilon, CharTable, ClassFunction,
};
pub use group::{all_unimodular, build_group, build_pair, generators, Class, MatrixGroup, Subgroup};
pub use matrix::{quaternion, Mat, MatKey};
pub use spec::{GroupSpec, PairSpec};
