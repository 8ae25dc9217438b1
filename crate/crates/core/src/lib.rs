//! Finite permutation groups, exact character tables, and mechanical checks of
//! local-global statements about characters that do not vanish on elements
//! lying in a unique Sylow subgroup.

pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod evseev;
pub mod families;
pub mod finite_field;
pub mod locality;
pub mod matchcheck;
pub mod numtheory;
pub mod permgroup;
pub mod report;

pub use error::{Error, Result};
