//! Division gradings on matrix algebras over an algebraically closed field of
//! characteristic zero.
//!
//! A division grading on M_k with support T exists exactly when
//! T = Z_{l1}^2 x ... x Z_{lr}^2 with l1...lr = k, and its isomorphism
//! classes correspond to the nondegenerate alternating bicharacters on T.
//! Those bicharacters are counted here by exhaustive enumeration.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, AbelianGroupType, ElementCoder, SubgroupHandle};

/// Largest |T| accepted by the brute-force bicharacter count.
pub const DEFAULT_BICHARACTER_BOUND: u64 = 256;

/// Largest number of candidate exponent matrices enumerated.
pub const DEFAULT_CANDIDATE_CAP: u128 = 1 << 24;

/// A bicharacter on Z_{d1} x ... x Z_{dr}, with values written as powers of
/// a primitive E-th root of unity (E the exponent): beta(g_i, g_j) =
/// zeta_E^{c_ij}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    orders: Vec<u64>,
    exponent: u64,
    matrix: Vec<u64>,
}

impl Bicharacter {
    /// Checks that each entry is well defined, i.e. d_i c_ij and d_j c_ij
    /// vanish mod E.
    pub fn new(orders: Vec<u64>, matrix: Vec<u64>) -> Result<Self> {
        let r = orders.len();
        if matrix.len() != r * r || orders.contains(&0) {
            return Err(Error::InvalidArgument(
                "matrix shape does not match generators".into(),
            ));
        }
        let exponent = orders.iter().copied().fold(1, num_integer::lcm);
        let matrix: Vec<u64> = matrix.into_iter().map(|c| c % exponent).collect();
        for i in 0..r {
            for j in 0..r {
                let c = matrix[i * r + j] as u128;
                let e = exponent as u128;
                if !(orders[i] as u128 * c).is_multiple_of(e)
                    || !(orders[j] as u128 * c).is_multiple_of(e)
                {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({i},{j}) = {c} is not well defined"
                    )));
                }
            }
        }
        Ok(Self {
            orders,
            exponent,
            matrix,
        })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    fn rank(&self) -> usize {
        self.orders.len()
    }

    /// beta(x, y) as an exponent of zeta_E, for coordinate vectors x and y.
    pub fn eval(&self, x: &[u64], y: &[u64]) -> u64 {
        let r = self.rank();
        let e = self.exponent as u128;
        let mut acc = 0u128;
        for (i, &xi) in x.iter().enumerate().take(r) {
            for (j, &yj) in y.iter().enumerate().take(r) {
                acc += xi as u128 * yj as u128 * self.matrix[i * r + j] as u128;
                acc %= e;
            }
        }
        acc as u64
    }

    /// c_ii = 0 and c_ij + c_ji = 0 mod E, so beta(t, t) = 1 for every t.
    pub fn is_alternating(&self) -> bool {
        let r = self.rank();
        let e = self.exponent;
        (0..r).all(|i| {
            self.matrix[i * r + i] == 0
                && (0..r)
                    .all(|j| (self.matrix[i * r + j] + self.matrix[j * r + i]).is_multiple_of(e))
        })
    }

    /// Whether t -> beta(t, .) has trivial kernel, checked on every element.
    pub fn is_nondegenerate(&self) -> bool {
        let coder = ElementCoder::new(self.orders.clone());
        let basis: Vec<Vec<u64>> = (0..self.rank())
            .map(|j| {
                let mut v = vec![0; self.rank()];
                v[j] = 1;
                v
            })
            .collect();
        (1..coder.order()).all(|x| {
            let digits = coder.decode(x);
            basis.iter().any(|b| self.eval(&digits, b) != 0)
        })
    }
}

/// T(G, k): subgroups of order k^2 isomorphic to some H x H.
pub fn square_type_subgroups(g: &AbelianGroupType, k: u64) -> Result<Vec<SubgroupHandle>> {
    let target = k.checked_mul(k).ok_or(Error::Overflow("k^2"))?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if !g.order().is_multiple_of(target) {
        return Ok(Vec::new());
    }
    Ok(enumerate_subgroups(g)?
        .into_iter()
        .filter(|t| t.order() == target && t.iso_type().is_square_type())
        .collect())
}

/// Number of nondegenerate alternating bicharacters on `t`; zero unless `t`
/// is of square type.
pub fn count_nondegenerate_alternating(t: &AbelianGroupType) -> Result<u64> {
    if t.order() > DEFAULT_BICHARACTER_BOUND {
        return Err(Error::BoundExceeded {
            what: "bicharacter enumeration group order",
            size: t.order() as u128,
            bound: DEFAULT_BICHARACTER_BOUND as u128,
        });
    }
    if !t.is_square_type() {
        return Ok(0);
    }
    count_on_cyclic_product(&t.cyclic_factors(), DEFAULT_CANDIDATE_CAP)
}

/// Exhaustive count on Z_{d1} x ... x Z_{dr} for any generator orders.
///
/// An alternating bicharacter is fixed by c_ij for i < j, and c_ij must be a
/// multiple of E / gcd(d_i, d_j), leaving gcd(d_i, d_j) choices per pair.
pub fn count_on_cyclic_product(orders: &[u64], candidate_cap: u128) -> Result<u64> {
    let r = orders.len();
    if orders.contains(&0) {
        return Err(Error::InvalidArgument("generator order 0".into()));
    }
    let exponent = orders.iter().copied().fold(1, num_integer::lcm);
    let pairs: Vec<(usize, usize, u64)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, num_integer::gcd(orders[i], orders[j])))
        .collect();
    let candidates = pairs
        .iter()
        .try_fold(1u128, |acc, &(_, _, g)| acc.checked_mul(g as u128))
        .unwrap_or(u128::MAX);
    if candidates > candidate_cap {
        return Err(Error::BoundExceeded {
            what: "bicharacter candidate count",
            size: candidates,
            bound: candidate_cap,
        });
    }

    let coder = ElementCoder::new(orders.to_vec());
    let elements: Vec<Vec<u64>> = (1..coder.order()).map(|x| coder.decode(x)).collect();
    let mut choice = vec![0u64; pairs.len()];
    let mut matrix = vec![0u64; r * r];
    let mut count = 0u64;
    loop {
        for (&(i, j, g), &v) in pairs.iter().zip(&choice) {
            let c = (exponent / g) * v % exponent;
            matrix[i * r + j] = c;
            matrix[j * r + i] = (exponent - c) % exponent;
        }
        if kernel_is_trivial(&elements, &matrix, r, exponent) {
            count += 1;
        }
        // Odometer over the pair choices.
        let mut idx = 0;
        loop {
            if idx == pairs.len() {
                return Ok(count);
            }
            choice[idx] += 1;
            if choice[idx] < pairs[idx].2 {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
    }
}

fn kernel_is_trivial(elements: &[Vec<u64>], matrix: &[u64], r: usize, e: u64) -> bool {
    elements.iter().all(|x| {
        (0..r).any(|j| {
            let s = (0..r).fold(0u128, |acc, i| {
                (acc + x[i] as u128 * matrix[i * r + j] as u128) % e as u128
            });
            s != 0
        })
    })
}

type DivisionCache = Mutex<HashMap<AbelianGroupType, u64>>;

fn cache() -> &'static DivisionCache {
    static CACHE: OnceLock<DivisionCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// D(T, k) by isomorphism type, memoized.
pub fn division_count(t: &AbelianGroupType) -> Result<u64> {
    if let Some(&hit) = cache().lock().unwrap().get(t) {
        return Ok(hit);
    }
    let value = count_nondegenerate_alternating(t)?;
    cache().lock().unwrap().insert(t.clone(), value);
    Ok(value)
}

/// Each T in T(G, k) paired with the number of division gradings on M_k
/// with support T.
pub fn division_census(g: &AbelianGroupType, k: u64) -> Result<Vec<(SubgroupHandle, u64)>> {
    square_type_subgroups(g, k)?
        .into_iter()
        .map(|t| {
            let d = division_count(t.iso_type())?;
            Ok((t, d))
        })
        .collect()
}
