//! Finite abelian groups in primary decomposition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{factorize, is_prime, partitions};
use crate::error::{Error, Result};

/// The p-primary part Z_{p^u1} x ... x Z_{p^ut} of an abelian group,
/// stored as the prime and the partition (u1 >= ... >= ut > 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimaryComponent {
    pub prime: u64,
    pub parts: Vec<u32>,
}

impl PrimaryComponent {
    /// Sum of the parts; the component has order p^alpha.
    pub fn alpha(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn order(&self) -> u64 {
        self.prime.pow(self.alpha())
    }
}

/// Isomorphism type of a finite abelian group.
///
/// Components are sorted by prime and every partition is non-increasing, so
/// two values compare equal exactly when the groups are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroupType {
    components: Vec<PrimaryComponent>,
}

impl AbelianGroupType {
    pub fn new(components: Vec<(u64, Vec<u32>)>) -> Result<Self> {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for (prime, parts) in components {
            if !is_prime(prime) {
                return Err(Error::NotPrime(prime));
            }
            if parts.contains(&0) {
                return Err(Error::InvalidPartition {
                    prime,
                    parts,
                    reason: "parts must be positive",
                });
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition {
                    prime,
                    parts,
                    reason: "parts must be non-increasing",
                });
            }
            if by_prime.contains_key(&prime) {
                return Err(Error::InvalidPartition {
                    prime,
                    parts,
                    reason: "prime listed twice",
                });
            }
            if !parts.is_empty() {
                by_prime.insert(prime, parts);
            }
        }
        Self::from_map(by_prime)
    }

    fn from_map(by_prime: BTreeMap<u64, Vec<u32>>) -> Result<Self> {
        let components: Vec<PrimaryComponent> = by_prime
            .into_iter()
            .map(|(prime, mut parts)| {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                PrimaryComponent { prime, parts }
            })
            .collect();
        let mut order = 1u64;
        for c in &components {
            let pa = c
                .prime
                .checked_pow(c.alpha())
                .ok_or(Error::Overflow("group order"))?;
            order = order
                .checked_mul(pa)
                .ok_or(Error::Overflow("group order"))?;
        }
        Ok(Self { components })
    }

    pub fn trivial() -> Self {
        Self {
            components: Vec::new(),
        }
    }

    /// The cyclic group Z_n.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::product_of_cyclics(&[n])
    }

    /// Z_{n1} x Z_{n2} x ... split into its primary decomposition.
    pub fn product_of_cyclics(orders: &[u64]) -> Result<Self> {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::ZeroOrder(n));
            }
            for (p, e) in factorize(n) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        Self::from_map(by_prime)
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    pub fn component(&self, prime: u64) -> Option<&PrimaryComponent> {
        self.components.iter().find(|c| c.prime == prime)
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.components
            .iter()
            .map(PrimaryComponent::order)
            .product()
    }

    pub fn exponent(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.prime.pow(c.largest_part()))
            .product()
    }

    /// Prime-power cyclic factors in storage order: primes ascending, and
    /// within a prime the partition order.
    pub fn cyclic_factors(&self) -> Vec<u64> {
        self.components
            .iter()
            .flat_map(|c| c.parts.iter().map(move |&u| c.prime.pow(u)))
            .collect()
    }

    /// Invariant factors d1 | d2 | ... | dk, all greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let rank = self
            .components
            .iter()
            .map(|c| c.parts.len())
            .max()
            .unwrap_or(0);
        // The largest invariant factor takes the largest part of every prime.
        let mut factors: Vec<u64> = (0..rank)
            .map(|i| {
                self.components
                    .iter()
                    .filter_map(|c| c.parts.get(i).map(|&u| c.prime.pow(u)))
                    .product()
            })
            .collect();
        factors.reverse();
        factors
    }

    /// Whether the group is H x H for some H, i.e. every part of every
    /// partition occurs with even multiplicity.
    pub fn is_square_type(&self) -> bool {
        self.components.iter().all(|c| {
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for &u in &c.parts {
                *counts.entry(u).or_default() += 1;
            }
            counts.values().all(|n| n % 2 == 0)
        })
    }

    pub fn element_coder(&self) -> ElementCoder {
        ElementCoder::new(self.cyclic_factors())
    }

    /// Every abelian group of order `n`, one per isomorphism type.
    pub fn all_of_order(n: u64) -> Vec<Self> {
        let mut out = vec![BTreeMap::new()];
        for (p, e) in factorize(n) {
            let mut next = Vec::new();
            for partial in &out {
                for lambda in partitions(e) {
                    let mut m: BTreeMap<u64, Vec<u32>> = partial.clone();
                    m.insert(p, lambda);
                    next.push(m);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|m| Self::from_map(m).expect("order fits in u64"))
            .collect()
    }

    /// Every abelian group of order at most `n`, ordered by order.
    pub fn all_up_to(n: u64) -> Vec<Self> {
        (1..=n).flat_map(Self::all_of_order).collect()
    }
}

impl fmt::Display for AbelianGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return write!(f, "Z1");
        }
        for (i, d) in factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{d}")?;
        }
        Ok(())
    }
}

impl FromStr for AbelianGroupType {
    type Err = Error;

    /// Parses `Z{n}(xZ{n})*`, case-insensitive, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .flat_map(char::to_lowercase)
            .collect();
        let err = |reason: &str| Error::GroupParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if cleaned.is_empty() {
            return Err(err("empty group description"));
        }
        let mut orders = Vec::new();
        for term in cleaned.split('x') {
            let digits = term
                .strip_prefix('z')
                .ok_or_else(|| err("each factor must look like Z<n>"))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("each factor must look like Z<n>"));
            }
            let n: u64 = digits.parse().map_err(|_| err("factor order too large"))?;
            orders.push(n);
        }
        Self::product_of_cyclics(&orders)
    }
}

/// Mixed-radix encoding of the elements of Z_{f1} x ... x Z_{fr} as the
/// integers 0..order, first factor least significant.
#[derive(Clone, Debug)]
pub struct ElementCoder {
    radices: Vec<u64>,
    order: u64,
}

impl ElementCoder {
    pub fn new(radices: Vec<u64>) -> Self {
        let order = radices.iter().product();
        Self { radices, order }
    }

    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn decode(&self, mut index: u64) -> Vec<u64> {
        self.radices
            .iter()
            .map(|&r| {
                let digit = index % r;
                index /= r;
                digit
            })
            .collect()
    }

    pub fn encode(&self, digits: &[u64]) -> u64 {
        self.radices
            .iter()
            .zip(digits)
            .rev()
            .fold(0, |acc, (&r, &d)| acc * r + d % r)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for &r in &self.radices {
            out += ((a % r + b % r) % r) * place;
            a /= r;
            b /= r;
            place *= r;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let digits: Vec<u64> = self
            .decode(a)
            .iter()
            .zip(&self.radices)
            .map(|(&d, &r)| (r - d) % r)
            .collect();
        self.encode(&digits)
    }

    /// `k * a`
    pub fn scale(&self, a: u64, k: u64) -> u64 {
        let digits: Vec<u64> = self
            .decode(a)
            .iter()
            .zip(&self.radices)
            .map(|(&d, &r)| ((d as u128 * k as u128) % r as u128) as u64)
            .collect();
        self.encode(&digits)
    }

    pub fn element_order(&self, a: u64) -> u64 {
        self.decode(a)
            .iter()
            .zip(&self.radices)
            .fold(1, |acc, (&d, &r)| {
                num_integer::lcm(acc, r / num_integer::gcd(d, r))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(g: &AbelianGroupType) -> Vec<(u64, Vec<u32>)> {
        g.components()
            .iter()
            .map(|c| (c.prime, c.parts.clone()))
            .collect()
    }

    #[test]
    fn parse_examples() {
        let z1: AbelianGroupType = "Z1".parse().unwrap();
        assert!(z1.is_trivial());
        assert_eq!(z1.order(), 1);

        let z6: AbelianGroupType = "Z6".parse().unwrap();
        assert_eq!(parts(&z6), vec![(2, vec![1]), (3, vec![1])]);

        let z4z2: AbelianGroupType = "Z4xZ2".parse().unwrap();
        assert_eq!(parts(&z4z2), vec![(2, vec![2, 1])]);
        assert_eq!(z4z2.exponent(), 4);
    }

    #[test]
    fn parse_is_case_and_space_insensitive() {
        let a: AbelianGroupType = " z2 X Z2 ".parse().unwrap();
        let b: AbelianGroupType = "Z2xZ2".parse().unwrap();
        assert_eq!(a, b);
        let c: AbelianGroupType = "Z2xZ4".parse().unwrap();
        assert_eq!(c, "Z4xZ2".parse().unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "Z0".parse::<AbelianGroupType>(),
            Err(Error::ZeroOrder(0))
        ));
        for bad in ["", "Z", "Z2x", "Y3", "Z2*Z3", "Z-1", "xZ2"] {
            assert!(
                matches!(
                    bad.parse::<AbelianGroupType>(),
                    Err(Error::GroupParse { .. })
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(
            AbelianGroupType::new(vec![(4, vec![1])]),
            Err(Error::NotPrime(4))
        ));
        assert!(AbelianGroupType::new(vec![(2, vec![1, 2])]).is_err());
        assert!(AbelianGroupType::new(vec![(2, vec![0])]).is_err());
        assert!(AbelianGroupType::new(vec![(2, vec![1]), (2, vec![1])]).is_err());
        assert!(AbelianGroupType::new(vec![(2, vec![64])]).is_err());
        let g = AbelianGroupType::new(vec![(3, vec![1]), (2, vec![2])]).unwrap();
        assert_eq!(g, AbelianGroupType::cyclic(12).unwrap());
    }

    #[test]
    fn invariant_factor_display() {
        let g: AbelianGroupType = "Z6xZ2".parse().unwrap();
        assert_eq!(g.invariant_factors(), vec![2, 6]);
        assert_eq!(g.to_string(), "Z2xZ6");
        assert_eq!(AbelianGroupType::trivial().to_string(), "Z1");
        assert_eq!("Z4".parse::<AbelianGroupType>().unwrap().to_string(), "Z4");
        let h: AbelianGroupType = "Z3xZ4xZ9xZ2".parse().unwrap();
        assert_eq!(h.to_string(), "Z6xZ36");
    }

    #[test]
    fn groups_of_order() {
        let counts: Vec<usize> = (1..=16)
            .map(|n| AbelianGroupType::all_of_order(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(AbelianGroupType::all_up_to(8).len(), 11);
    }

    #[test]
    fn square_type() {
        let yes = ["Z1", "Z2xZ2", "Z3xZ3", "Z4xZ4xZ2xZ2", "Z6xZ6"];
        let no = ["Z2", "Z4xZ2", "Z2xZ2xZ2", "Z9"];
        for s in yes {
            assert!(
                s.parse::<AbelianGroupType>().unwrap().is_square_type(),
                "{s}"
            );
        }
        for s in no {
            assert!(
                !s.parse::<AbelianGroupType>().unwrap().is_square_type(),
                "{s}"
            );
        }
    }

    #[test]
    fn coder_arithmetic() {
        let g: AbelianGroupType = "Z4xZ2".parse().unwrap();
        let c = g.element_coder();
        assert_eq!(c.order(), 8);
        for a in 0..8 {
            assert_eq!(c.encode(&c.decode(a)), a);
            assert_eq!(c.add(a, c.neg(a)), 0);
            assert_eq!(c.scale(a, c.element_order(a)), 0);
            for b in 0..8 {
                assert_eq!(c.add(a, b), c.add(b, a));
            }
        }
        // (1, 1) has order 4.
        assert_eq!(c.element_order(c.encode(&[1, 1])), 4);
    }
}
