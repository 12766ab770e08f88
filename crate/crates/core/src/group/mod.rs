//! Finite groups: abelian groups by invariants, arbitrary groups by table.

mod abelian;
mod cayley;
mod profile;
mod subgroup;

use std::fmt;

pub use abelian::{AbelianGroupType, ElementCoder, PrimaryComponent};
pub use cayley::{CayleyGroup, DEFAULT_CAYLEY_CAP};
pub use profile::{
    abelian_order_profile, alpha_lambda, cayley_order_profile, cyclic_order_profile, OrderProfile,
};
pub use subgroup::{
    enumerate_subgroups, enumerate_subgroups_with_bound, iso_type_of_subgroup, quotient_profile,
    SubgroupHandle, DEFAULT_SUBGROUP_BOUND,
};

use crate::error::Result;

/// A finite group, either by its abelian invariants or by a verified table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Abelian(AbelianGroupType),
    Table(CayleyGroup),
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Abelian(g) => g.order(),
            GroupSpec::Table(g) => g.order() as u64,
        }
    }

    pub fn order_profile(&self) -> OrderProfile {
        match self {
            GroupSpec::Abelian(g) => abelian_order_profile(g),
            GroupSpec::Table(g) => cayley_order_profile(g),
        }
    }

    /// LCM of the element orders.
    pub fn exponent(&self) -> u64 {
        match self {
            GroupSpec::Abelian(g) => g.exponent(),
            GroupSpec::Table(g) => cayley_order_profile(g).exponent(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Abelian(_) => true,
            GroupSpec::Table(g) => g.is_abelian(),
        }
    }

    pub fn as_abelian(&self) -> Option<&AbelianGroupType> {
        match self {
            GroupSpec::Abelian(g) => Some(g),
            GroupSpec::Table(_) => None,
        }
    }

    /// Materializes the multiplication table, refusing groups above `cap`.
    pub fn to_cayley(&self, cap: usize) -> Result<CayleyGroup> {
        match self {
            GroupSpec::Abelian(g) => CayleyGroup::from_abelian(g, cap),
            GroupSpec::Table(g) => Ok(g.clone()),
        }
    }
}

impl From<AbelianGroupType> for GroupSpec {
    fn from(g: AbelianGroupType) -> Self {
        GroupSpec::Abelian(g)
    }
}

impl From<CayleyGroup> for GroupSpec {
    fn from(g: CayleyGroup) -> Self {
        GroupSpec::Table(g)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(g) => write!(f, "{g}"),
            GroupSpec::Table(g) => write!(f, "table group of order {}", g.order()),
        }
    }
}

/// Order profile of any group.
pub fn order_profile(g: &GroupSpec) -> OrderProfile {
    g.order_profile()
}

/// Exponent of any group.
pub fn exponent(g: &GroupSpec) -> u64 {
    g.exponent()
}
