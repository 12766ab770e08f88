//! Brute-force orbit counting, independent of the closed formulas.
//!
//! A point of gamma(m, G) assigns to each block i and group element g a
//! multiplicity a(i, g) >= 0 with sum_g a(i, g) = m_i. The group acts on
//! the right by (a.h)(i, g) = a(i, g h); elementary gradings up to
//! isomorphism are the orbits of this action.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::multichoose;
use crate::error::{Error, Result};
use crate::group::{CayleyGroup, GroupSpec, DEFAULT_CAYLEY_CAP};
use crate::shape::{BlockShape, GradingCount};

/// Default limit on |gamma(m, G)|.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightMap {
    shape: BlockShape,
    group_order: usize,
    values: Vec<u32>,
}

impl WeightMap {
    pub fn new(shape: BlockShape, group_order: usize, values: Vec<u32>) -> Result<Self> {
        if values.len() != shape.len() * group_order {
            return Err(Error::InvalidArgument(format!(
                "expected {} weights, got {}",
                shape.len() * group_order,
                values.len()
            )));
        }
        for (i, &m) in shape.blocks().iter().enumerate() {
            let row: u64 = values[i * group_order..(i + 1) * group_order]
                .iter()
                .map(|&v| v as u64)
                .sum();
            if row != m {
                return Err(Error::InvalidArgument(format!(
                    "block {i} weights sum to {row}, expected {m}"
                )));
            }
        }
        Ok(Self {
            shape,
            group_order,
            values,
        })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn get(&self, block: usize, element: usize) -> u32 {
        self.values[block * self.group_order + element]
    }

    /// Weights in block-major order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

impl fmt::Display for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .values
            .chunks(self.group_order.max(1))
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                format!("({})", cells.join(","))
            })
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

/// |gamma(shape, G)| = prod_i C(m_i + |G| - 1, m_i).
pub fn gamma_size(group_order: u64, shape: &BlockShape) -> BigUint {
    shape
        .blocks()
        .iter()
        .map(|&m| multichoose(group_order, m))
        .product()
}

/// Streams gamma(shape, G) in increasing lexicographic order of the
/// block-major weight vector.
pub struct GammaIter {
    shape: BlockShape,
    group_order: usize,
    current: Option<Vec<u32>>,
}

impl Iterator for GammaIter {
    type Item = WeightMap;

    fn next(&mut self) -> Option<WeightMap> {
        let values = self.current.take()?;
        let item = WeightMap {
            shape: self.shape.clone(),
            group_order: self.group_order,
            values: values.clone(),
        };
        self.current = successor(values, self.group_order);
        Some(item)
    }
}

/// Lexicographic successor of a weak composition of its sum into
/// `row.len()` parts; false when `row` is the last one (all weight first).
fn next_composition(row: &mut [u32]) -> bool {
    let k = row.len();
    let Some(r) = (1..k).rev().find(|&i| row[i] > 0) else {
        return false;
    };
    let s = row[r];
    row[r] = 0;
    row[r - 1] += 1;
    row[k - 1] += s - 1;
    true
}

fn first_composition(row: &mut [u32], m: u32) {
    row.iter_mut().for_each(|v| *v = 0);
    if let Some(last) = row.last_mut() {
        *last = m;
    }
}

fn advance(values: &mut [u32], k: usize) -> bool {
    let blocks = values.len() / k;
    for b in (0..blocks).rev() {
        let row = &mut values[b * k..(b + 1) * k];
        if next_composition(row) {
            return true;
        }
        let m = row.iter().sum();
        first_composition(row, m);
    }
    false
}

fn successor(mut values: Vec<u32>, k: usize) -> Option<Vec<u32>> {
    advance(&mut values, k).then_some(values)
}

pub fn enumerate_gamma(g: &GroupSpec, shape: &BlockShape, cap: u128) -> Result<GammaIter> {
    let size = gamma_size(g.order(), shape);
    let fits = size.to_u128().is_some_and(|s| s <= cap);
    if !fits {
        return Err(Error::BoundExceeded {
            what: "gamma enumeration",
            size: size.to_u128().unwrap_or(u128::MAX),
            bound: cap,
        });
    }
    let k = g.order() as usize;
    let mut values = vec![0u32; shape.len() * k];
    for (b, &m) in shape.blocks().iter().enumerate() {
        let m = u32::try_from(m).map_err(|_| Error::Overflow("block size"))?;
        first_composition(&mut values[b * k..(b + 1) * k], m);
    }
    Ok(GammaIter {
        shape: shape.clone(),
        group_order: k,
        current: Some(values),
    })
}

fn translate(table: &CayleyGroup, values: &[u32], h: usize) -> Vec<u32> {
    let k = table.order();
    let mut out = vec![0u32; values.len()];
    for (b, row) in values.chunks(k).enumerate() {
        for x in 0..k {
            out[b * k + x] = row[table.mul(x, h)];
        }
    }
    out
}

fn is_fixed(table: &CayleyGroup, values: &[u32], h: usize) -> bool {
    let k = table.order();
    values
        .chunks(k)
        .all(|row| (0..k).all(|x| row[x] == row[table.mul(x, h)]))
}

/// a.h, the translate (a.h)(i, g) = a(i, g h).
pub fn act(table: &CayleyGroup, a: &WeightMap, h: usize) -> WeightMap {
    WeightMap {
        shape: a.shape.clone(),
        group_order: a.group_order,
        values: translate(table, &a.values, h),
    }
}

/// Whether no translate of `values` is lexicographically smaller.
fn is_orbit_minimum(table: &CayleyGroup, values: &[u32]) -> bool {
    let k = table.order();
    (0..k).filter(|&h| h != table.identity()).all(|h| {
        for (b, row) in values.chunks(k).enumerate() {
            for x in 0..k {
                let (moved, here) = (row[table.mul(x, h)], values[b * k + x]);
                if moved != here {
                    return moved > here;
                }
            }
        }
        true
    })
}

/// Calls `f` on every point of gamma(shape, G) in lexicographic order.
fn for_each_point(
    g: &GroupSpec,
    shape: &BlockShape,
    cap: u128,
    mut f: impl FnMut(&[u32]),
) -> Result<()> {
    let mut iter = enumerate_gamma(g, shape, cap)?;
    let k = iter.group_order;
    let Some(mut values) = iter.current.take() else {
        return Ok(());
    };
    loop {
        f(&values);
        if !advance(&mut values, k) {
            return Ok(());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMethod {
    /// Count the points that are least in their orbit.
    Partition,
    /// Average the number of fixed points over the group.
    Burnside,
}

/// |Fix(h)| by direct enumeration.
pub fn fixed_point_count(g: &GroupSpec, shape: &BlockShape, h: usize, cap: u128) -> Result<u64> {
    let table = g.to_cayley(DEFAULT_CAYLEY_CAP)?;
    let mut count = 0;
    for_each_point(g, shape, cap, |values| {
        count += u64::from(is_fixed(&table, values, h))
    })?;
    Ok(count)
}

pub fn count_orbits(
    g: &GroupSpec,
    shape: &BlockShape,
    method: OrbitMethod,
    cap: u128,
) -> Result<GradingCount> {
    let table = g.to_cayley(DEFAULT_CAYLEY_CAP)?;
    match method {
        OrbitMethod::Partition => {
            let mut orbits = 0u64;
            for_each_point(g, shape, cap, |values| {
                orbits += u64::from(is_orbit_minimum(&table, values))
            })?;
            Ok(GradingCount::from(orbits))
        }
        OrbitMethod::Burnside => {
            let n = table.order();
            let mut total = 0u64;
            for_each_point(g, shape, cap, |values| {
                total += (0..n).filter(|&h| is_fixed(&table, values, h)).count() as u64
            })?;
            if !total.is_multiple_of(n as u64) {
                return Err(Error::Integrality {
                    numerator: total.to_string(),
                    order: n as u64,
                });
            }
            Ok(GradingCount::from(total / n as u64))
        }
    }
}

/// The least point of every orbit, sorted.
pub fn orbit_representatives(
    g: &GroupSpec,
    shape: &BlockShape,
    cap: u128,
) -> Result<Vec<WeightMap>> {
    let table = g.to_cayley(DEFAULT_CAYLEY_CAP)?;
    let mut reps = Vec::new();
    for_each_point(g, shape, cap, |values| {
        if is_orbit_minimum(&table, values) {
            reps.push(WeightMap {
                shape: shape.clone(),
                group_order: table.order(),
                values: values.to_vec(),
            });
        }
    })?;
    Ok(reps)
}
