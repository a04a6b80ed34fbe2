//! Exact branching multiplicities for Specht modules of wreath products
//! `S_m ≀ S_n`, with the supporting combinatorics (partitions, tableaux,
//! permutations, Littlewood-Richardson coefficients, double cosets) and
//! brute-force oracles used to check them.

pub mod arith;
pub mod branching;
pub mod cli;
pub mod cosets;
pub mod error;
pub mod lr;
pub mod multipartition;
pub mod notation;
pub mod partition;
pub mod perm;
pub mod schur;
pub mod tableau;
pub mod verify;

pub use branching::{
    branch_first, branch_first_labellings, branch_second, enumerate_good_labellings, filtration_multiplicities,
    mat_lambda, wreath_specht_dimension, young_layer, BranchRule, GoodLabelling, MultiplicityMap, YoungLayer,
};
pub use cosets::{double_coset_reps, rho_cosets, CosetSystem};
pub use error::{Error, Result};
pub use lr::{lr_coefficient, lr_multi};
pub use multipartition::{enumerate_multipartitions, IntegerMatrix, Multipartition, MultipartitionMatrix};
pub use partition::{enumerate_partitions, Composition, Partition};
pub use perm::Permutation;
pub use schur::schur_product_oracle;
pub use tableau::{SkewShape, SkewTableau, Tableau};
