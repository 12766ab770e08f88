//! Counting elementary gradings on upper block-triangular matrix algebras.
//!
//! Elementary gradings on UT(m1, ..., ms) up to isomorphism are the orbits
//! of G acting by right translation on the block-wise multisets of group
//! elements. An element of order t fixes a point only when t divides every
//! block size, and then fixes prod_i C(mi/t + |G|/t - 1, mi/t) of them, so
//! Burnside's lemma gives
//!
//! ```text
//! E(G, m) = 1/|G| * sum_{t | d} phi_G(t) * prod_i C(mi/t + |G|/t - 1, mi/t)
//! ```
//!
//! with d = gcd(m1, ..., ms, Exp(G)) and phi_G the order profile. The count
//! depends on G only through its order profile.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{checked_pow, divisors, is_prime, multichoose, valuation};
use crate::error::{Error, Result};
use crate::group::{GroupSpec, OrderProfile};
use crate::shape::{BlockShape, GradingCount};

/// The Burnside sum before division by |G|.
pub fn burnside_numerator(profile: &OrderProfile, shape: &BlockShape) -> BigUint {
    let n = profile.order();
    let d = num_integer::gcd(shape.gcd(), profile.exponent());
    let mut total = BigUint::zero();
    for t in divisors(d) {
        // Orders with phi(t) = 0 contribute nothing.
        let phi = profile.get(t);
        if phi == 0 {
            continue;
        }
        let fixed: BigUint = shape
            .blocks()
            .iter()
            .map(|&m| multichoose(n / t, m / t))
            .product();
        total += fixed * phi;
    }
    total
}

/// E(G, shape) for any group with the given order profile.
pub fn count_from_profile(profile: &OrderProfile, shape: &BlockShape) -> Result<GradingCount> {
    let numerator = burnside_numerator(profile, shape);
    let (q, r) = numerator.div_rem(&BigUint::from(profile.order()));
    if !r.is_zero() {
        return Err(Error::Integrality {
            numerator: numerator.to_string(),
            order: profile.order(),
        });
    }
    Ok(GradingCount(q))
}

/// Number of isomorphism classes of elementary G-gradings on UT(shape).
pub fn count_elementary(g: &GroupSpec, shape: &BlockShape) -> Result<GradingCount> {
    count_from_profile(&g.order_profile(), shape)
}

/// Number of isomorphism classes of elementary G-gradings on M_m.
pub fn count_elementary_matrix(g: &GroupSpec, m: u64) -> Result<GradingCount> {
    count_elementary(g, &BlockShape::matrix(m)?)
}

/// E(G, m) for a group of prime exponent p and order p^n. Such a group has
/// one identity and p^n - 1 elements of order p.
pub fn count_prime_exponent(order: u64, p: u64, m: u64) -> Result<GradingCount> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = valuation(order.max(1), p);
    if order < p || p.pow(n) != order {
        return Err(Error::InvalidArgument(format!(
            "order {order} is not a positive power of {p}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidShape("matrix size must be positive".into()));
    }
    let mut total = multichoose(order, m);
    if m.is_multiple_of(p) {
        total += multichoose(order / p, m / p) * (order - 1);
    }
    divide_exact(total, order)
}

/// E(Z_{p^n}, m) by the explicit sum over the p-power divisors of m.
///
/// With m = p^k m' and p not dividing m', the element orders that divide
/// gcd(m, p^n) are p^i for i <= min(k, n); there are p^i - p^(i-1) of each.
pub fn count_cyclic_prime_power(p: u64, n: u32, m: u64) -> Result<GradingCount> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "exponent n must be at least 1".into(),
        ));
    }
    if m == 0 {
        return Err(Error::InvalidShape("matrix size must be positive".into()));
    }
    let order = checked_pow(p, n, "p^n")?;
    let k = valuation(m, p);
    let m_prime = m / p.pow(k);
    let mut total = multichoose(order, m);
    for i in 1..=k.min(n) {
        let q = p.pow(k - i) * m_prime;
        total += multichoose(p.pow(n - i), q) * (p.pow(i) - p.pow(i - 1));
    }
    divide_exact(total, order)
}

fn divide_exact(numerator: BigUint, order: u64) -> Result<GradingCount> {
    let (q, r) = numerator.div_rem(&BigUint::from(order));
    if r.is_zero() {
        Ok(GradingCount(q))
    } else {
        Err(Error::Integrality {
            numerator: numerator.to_string(),
            order,
        })
    }
}
