//! Order profiles: how many elements a group has of each order.

use std::collections::BTreeMap;

use super::abelian::{AbelianGroupType, PrimaryComponent};
use super::cayley::CayleyGroup;
use crate::arith::{divisors, valuation};
use crate::error::{Error, Result};

/// The map t -> number of elements of order t, for a group of a given order.
/// Only nonzero values are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderProfile {
    order: u64,
    counts: BTreeMap<u64, u64>,
}

impl OrderProfile {
    /// Checks phi(1) = 1 and that the counts sum to the order.
    pub fn new(order: u64, counts: BTreeMap<u64, u64>) -> Result<Self> {
        let counts: BTreeMap<u64, u64> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        if counts.contains_key(&0) {
            return Err(Error::InvalidProfile("element order 0".into()));
        }
        if counts.get(&1) != Some(&1) {
            return Err(Error::InvalidProfile(
                "exactly one element must have order 1".into(),
            ));
        }
        let total: u128 = counts.values().map(|&c| c as u128).sum();
        if total != order as u128 {
            return Err(Error::InvalidProfile(format!(
                "counts sum to {total}, expected the order {order}"
            )));
        }
        Ok(Self { order, counts })
    }

    /// Tallies a list of element orders.
    pub fn from_element_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut n = 0u64;
        for t in orders {
            *counts.entry(t).or_insert(0) += 1;
            n += 1;
        }
        Self::new(n, counts)
    }

    pub fn trivial() -> Self {
        Self {
            order: 1,
            counts: BTreeMap::from([(1, 1)]),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// phi(t); zero outside the support.
    pub fn get(&self, t: u64) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// Nonzero entries (t, phi(t)) in increasing t.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&t, &c)| (t, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }

    /// LCM of the element orders.
    pub fn exponent(&self) -> u64 {
        self.support().fold(1, num_integer::lcm)
    }

    /// Number of elements whose order divides t.
    pub fn psi(&self, t: u64) -> u64 {
        self.iter()
            .filter(|&(s, _)| t.is_multiple_of(s))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn as_map(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }
}

/// alpha_lambda(s) for a primary component: the exponent of p in the number
/// of elements killed by p^s. Equal to alpha for s beyond the largest part,
/// otherwise alpha - (u1 + ... + ul) + l*s with l the number of parts >= s.
pub fn alpha_lambda(component: &PrimaryComponent, s: u32) -> u32 {
    let alpha = component.alpha();
    if s > component.largest_part() {
        return alpha;
    }
    let l = component.parts.iter().take_while(|&&u| u >= s).count() as u32;
    let head: u32 = component.parts[..l as usize].iter().sum();
    alpha - head + l * s
}

/// Number of elements of order exactly p^s in a primary component.
fn primary_count(component: &PrimaryComponent, s: u32) -> u64 {
    let p = component.prime;
    if s == 0 {
        return 1;
    }
    p.pow(alpha_lambda(component, s)) - p.pow(alpha_lambda(component, s - 1))
}

/// Order profile of an abelian group from its invariants, as a product over
/// primes of the primary counts.
pub fn abelian_order_profile(g: &AbelianGroupType) -> OrderProfile {
    let mut counts = BTreeMap::new();
    for t in divisors(g.exponent()) {
        let phi: u64 = g
            .components()
            .iter()
            .map(|c| primary_count(c, valuation(t, c.prime)))
            .product();
        if phi > 0 {
            counts.insert(t, phi);
        }
    }
    OrderProfile {
        order: g.order(),
        counts,
    }
}

/// Order profile of a table group by computing every element's order.
pub fn cayley_order_profile(g: &CayleyGroup) -> OrderProfile {
    OrderProfile::from_element_orders((0..g.order()).map(|a| g.element_order(a)))
        .expect("a verified group has a valid profile")
}

/// Order profile of the cyclic group Z_n: Euler's totient on the divisors.
pub fn cyclic_order_profile(n: u64) -> OrderProfile {
    let counts = divisors(n)
        .into_iter()
        .map(|t| (t, crate::arith::totient(t)))
        .collect();
    OrderProfile { order: n, counts }
}
