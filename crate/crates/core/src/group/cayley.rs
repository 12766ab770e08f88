//! Finite groups given by a verified multiplication table.

use serde::{Deserialize, Serialize};

use super::abelian::AbelianGroupType;
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Largest table accepted by default; verification is O(n^3).
pub const DEFAULT_CAYLEY_CAP: usize = 512;

/// A finite group as an n x n table over element indices 0..n, where the
/// entry in row i, column j is the product i*j.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyGroup {
    n: usize,
    table: Vec<u32>,
    identity: usize,
}

#[derive(Serialize, Deserialize)]
struct CayleyFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl CayleyGroup {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows_with_cap(rows, DEFAULT_CAYLEY_CAP)
    }

    /// Builds a group from its table, checking the Latin square property,
    /// the identity, and associativity of every triple.
    pub fn from_rows_with_cap(rows: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::CayleyTable("table is empty".into()));
        }
        if n > cap {
            return Err(Error::BoundExceeded {
                what: "Cayley table",
                size: n as u128,
                bound: cap as u128,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::CayleyTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::CayleyTable(format!(
                        "entry {x} in row {i} is out of range"
                    )));
                }
                table.push(x as u32);
            }
        }

        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let x = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::CayleyTable(format!("row {i} repeats {x}")));
                }
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let x = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::CayleyTable(format!("column {j} repeats {x}")));
                }
            }
        }

        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x)
            })
            .ok_or_else(|| Error::CayleyTable("no identity element".into()))?;

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::CayleyTable(format!(
                            "not associative: ({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }

        // A Latin square with an identity and associativity has inverses.
        Ok(Self { n, table, identity })
    }

    /// Parses `{ "order": n, "table": [[...], ...] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CayleyFile = serde_json::from_str(text)?;
        if file.order != file.table.len() {
            return Err(Error::CayleyTable(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        Self::from_rows(file.table)
    }

    pub fn to_json(&self) -> String {
        let file = CayleyFile {
            order: self.n,
            table: self.rows(),
        };
        serde_json::to_string(&file).expect("table serializes")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// The table of an abelian group in its mixed-radix element encoding.
    pub fn from_abelian(g: &AbelianGroupType, cap: usize) -> Result<Self> {
        let order = g.order();
        if order > cap as u64 {
            return Err(Error::BoundExceeded {
                what: "Cayley table",
                size: order as u128,
                bound: cap as u128,
            });
        }
        let coder = g.element_coder();
        let n = order as usize;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..order {
            for b in 0..order {
                table.push(coder.add(a, b) as u32);
            }
        }
        Ok(Self {
            n,
            table,
            identity: 0,
        })
    }

    /// The symmetric group on three letters.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let rows = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("S3 table is a group")
    }

    /// Upper unitriangular 3x3 matrices over Z_p, with (a, b, c) standing
    /// for the matrix with a, b on the superdiagonal and c in the corner.
    pub fn heisenberg(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p = p as usize;
        let n = p * p * p;
        if n > DEFAULT_CAYLEY_CAP {
            return Err(Error::BoundExceeded {
                what: "Cayley table",
                size: n as u128,
                bound: DEFAULT_CAYLEY_CAP as u128,
            });
        }
        let decode = |x: usize| (x % p, (x / p) % p, x / (p * p));
        let encode = |(a, b, c): (usize, usize, usize)| a + p * b + p * p * c;
        let rows = (0..n)
            .map(|x| {
                let (a, b, c) = decode(x);
                (0..n)
                    .map(|y| {
                        let (a2, b2, c2) = decode(y);
                        encode(((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p))
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("verified group has inverses")
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_tables() {
        assert!(CayleyGroup::from_rows(vec![]).is_err());
        assert!(CayleyGroup::from_rows(vec![vec![0, 1], vec![1]]).is_err());
        assert!(CayleyGroup::from_rows(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(CayleyGroup::from_rows(vec![vec![0, 2], vec![1, 0]]).is_err());
        // Latin square without an identity.
        assert!(CayleyGroup::from_rows(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).is_err());
        // Latin square with identity 0 but not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            CayleyGroup::from_rows(loop5),
            Err(Error::CayleyTable(msg)) if msg.contains("associative")
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let g: AbelianGroupType = "Z8".parse().unwrap();
        let rows = CayleyGroup::from_abelian(&g, 8).unwrap().rows();
        assert!(matches!(
            CayleyGroup::from_rows_with_cap(rows, 4),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(CayleyGroup::from_abelian(&g, 4).is_err());
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z2 with element 1 as identity.
        let g = CayleyGroup::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.element_order(0), 2);
        assert_eq!(g.inverse(0), 0);
    }

    #[test]
    fn json_round_trip() {
        let s3 = CayleyGroup::symmetric3();
        let back = CayleyGroup::from_json(&s3.to_json()).unwrap();
        assert_eq!(back, s3);
        assert!(CayleyGroup::from_json(r#"{"order": 3, "table": [[0]]}"#).is_err());
        assert!(CayleyGroup::from_json("not json").is_err());
    }

    #[test]
    fn small_groups() {
        let s3 = CayleyGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let mut orders: Vec<u64> = (0..6).map(|a| s3.element_order(a)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);

        let h3 = CayleyGroup::heisenberg(3).unwrap();
        assert_eq!(h3.order(), 27);
        assert!(!h3.is_abelian());
        assert!((0..27).all(|a| h3.element_order(a) == 1 || h3.element_order(a) == 3));
        for a in 0..27 {
            assert_eq!(h3.mul(a, h3.inverse(a)), h3.identity());
        }
        assert!(CayleyGroup::heisenberg(4).is_err());

        let z = CayleyGroup::from_abelian(&"Z2xZ3".parse().unwrap(), 64).unwrap();
        assert!(z.is_abelian());
    }
}
