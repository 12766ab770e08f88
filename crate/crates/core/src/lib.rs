//! Exact counts of isomorphism classes of group gradings on matrix algebras
//! M_m and upper block-triangular matrix algebras UT(m1, ..., ms).
//!
//! - [`elementary`] counts elementary gradings by a closed Burnside formula.
//! - [`oracle`] counts the same orbits by brute force.
//! - [`division`] and [`full`] count all gradings by a finite abelian group.
//! - [`reconstruction`] recovers an abelian group from its counts.

pub mod arith;
pub mod asymptotic;
pub mod division;
pub mod elementary;
pub mod error;
pub mod full;
pub mod group;
pub mod oracle;
pub mod reconstruction;
mod shape;

pub use error::{Error, Result};
pub use group::{AbelianGroupType, CayleyGroup, GroupSpec, OrderProfile, SubgroupHandle};
pub use shape::{BlockShape, GradingCount};
