//! All gradings (not only elementary ones) by a finite abelian group.
//!
//! Every G-grading on UT(m) is a tensor product of an elementary grading on
//! UT(m/k) with a division grading on M_k whose support T lies in T(G, k),
//! so
//!
//! ```text
//! N(G, m) = sum_{k | every m_i} sum_{T in T(G, k)} D(T, k) E(G/T, m/k).
//! ```
//!
//! The field is taken algebraically closed of characteristic zero, which
//! removes every characteristic restriction.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::divisors;
use crate::asymptotic::growth_ratio;
use crate::division::division_census;
use crate::elementary::count_from_profile;
use crate::error::Result;
use crate::group::{abelian_order_profile, quotient_profile, AbelianGroupType};
use crate::shape::{BlockShape, GradingCount};

/// One (k, T) term of the outer sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullCountTerm {
    pub k: u64,
    pub support: AbelianGroupType,
    pub division_count: u64,
    pub quotient: AbelianGroupType,
    pub elementary_count: GradingCount,
}

impl FullCountTerm {
    pub fn contribution(&self) -> BigUint {
        self.elementary_count.value() * self.division_count
    }
}

/// Every nonzero term of the sum for N(G, shape), in increasing k.
pub fn full_count_terms(g: &AbelianGroupType, shape: &BlockShape) -> Result<Vec<FullCountTerm>> {
    let mut terms = Vec::new();
    for k in divisors(shape.gcd()) {
        if k.checked_mul(k)
            .is_none_or(|k2| !g.order().is_multiple_of(k2))
        {
            continue;
        }
        let reduced = shape.divide(k).expect("k divides every block");
        for (t, d) in division_census(g, k)? {
            if d == 0 {
                continue;
            }
            let (quotient, profile) = quotient_profile(g, &t)?;
            let e = count_from_profile(&profile, &reduced)?;
            terms.push(FullCountTerm {
                k,
                support: t.iso_type().clone(),
                division_count: d,
                quotient,
                elementary_count: e,
            });
        }
    }
    Ok(terms)
}

/// N(G, shape): isomorphism classes of all G-gradings on UT(shape).
pub fn count_all(g: &AbelianGroupType, shape: &BlockShape) -> Result<GradingCount> {
    let total = full_count_terms(g, shape)?
        .iter()
        .map(FullCountTerm::contribution)
        .sum();
    Ok(GradingCount(total))
}

/// N(G, m) for the full matrix algebra M_m.
pub fn count_all_matrix(g: &AbelianGroupType, m: u64) -> Result<GradingCount> {
    count_all(g, &BlockShape::matrix(m)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub m: u64,
    pub elementary: GradingCount,
    pub all: GradingCount,
    /// Sum of the k > 1 terms.
    pub correction: BigUint,
    /// E <= N.
    pub lower_bound_holds: bool,
    /// N - E equals the k > 1 partial sum.
    pub correction_matches: bool,
    /// N / E exactly.
    pub ratio: BigRational,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.lower_bound_holds && self.correction_matches
    }
}

pub fn sandwich_check(g: &AbelianGroupType, m: u64) -> Result<SandwichReport> {
    let shape = BlockShape::matrix(m)?;
    let terms = full_count_terms(g, &shape)?;
    let all: BigUint = terms.iter().map(FullCountTerm::contribution).sum();
    let correction: BigUint = terms
        .iter()
        .filter(|t| t.k > 1)
        .map(FullCountTerm::contribution)
        .sum();
    let elementary = count_from_profile(&abelian_order_profile(g), &shape)?;
    let e = elementary.value().clone();
    let lower_bound_holds = e <= all;
    let correction_matches = lower_bound_holds && &all - &e == correction;
    let ratio = if e.is_zero() {
        BigRational::zero()
    } else {
        BigRational::new(all.clone().into(), e.clone().into())
    };
    Ok(SandwichReport {
        m,
        elementary,
        all: GradingCount(all),
        correction,
        lower_bound_holds,
        correction_matches,
        ratio,
    })
}

/// (N - E) |G|! / m^(|G|-1), which tends to zero as m grows.
pub fn correction_ratio(g: &AbelianGroupType, m: u64) -> Result<BigRational> {
    let report = sandwich_check(g, m)?;
    Ok(growth_ratio(&report.correction, g.order(), m))
}
