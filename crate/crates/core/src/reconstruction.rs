//! Inverse problems: recover the order profile from E(G, 1), E(G, 2), ...,
//! and an abelian group from its order profile.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{divisors, factorize, multichoose};
use crate::elementary::count_from_profile;
use crate::error::{Error, Result};
use crate::group::{abelian_order_profile, AbelianGroupType, CayleyGroup, GroupSpec, OrderProfile};
use crate::shape::BlockShape;

/// Largest order tried when a sequence does not state its group order.
pub const DEFAULT_ORDER_SEARCH_BOUND: u64 = 256;

/// E(G, m) for m = 1, 2, ..., M, optionally with the group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSequence {
    terms: Vec<BigUint>,
    claimed_order: Option<u64>,
}

impl CountSequence {
    /// `terms[i]` is the count at m = i + 1.
    pub fn new(terms: Vec<BigUint>, claimed_order: Option<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InsufficientTerms { have: 0, need: 1 });
        }
        if terms[0] != BigUint::from(1u32) {
            return Err(Error::InconsistentSequence(format!(
                "the count at m = 1 is {}, but it is always 1",
                terms[0]
            )));
        }
        if let Some(m) = terms.iter().position(Zero::is_zero) {
            return Err(Error::InconsistentSequence(format!(
                "the count at m = {} is 0",
                m + 1
            )));
        }
        if claimed_order == Some(0) {
            return Err(Error::InvalidArgument(
                "group order must be positive".into(),
            ));
        }
        Ok(Self {
            terms,
            claimed_order,
        })
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn horizon(&self) -> u64 {
        self.terms.len() as u64
    }

    pub fn claimed_order(&self) -> Option<u64> {
        self.claimed_order
    }

    pub fn with_order(mut self, order: u64) -> Self {
        self.claimed_order = Some(order);
        self
    }

    /// E(G, m) for m = 1..=horizon.
    pub fn forward(g: &GroupSpec, horizon: u64) -> Result<Self> {
        let profile = g.order_profile();
        let terms = (1..=horizon)
            .map(|m| Ok(count_from_profile(&profile, &BlockShape::matrix(m)?)?.into_inner()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(terms, Some(g.order()))
    }

    /// Reads CSV with header `m,count`; rows must run m = 1, 2, ... in order.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = reader.headers()?.clone();
        if headers.len() != 2 || &headers[0] != "m" || &headers[1] != "count" {
            return Err(Error::SequenceFormat(format!(
                "expected header `m,count`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut terms = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record?;
            let m: u64 = record[0]
                .parse()
                .map_err(|_| Error::SequenceFormat(format!("bad m `{}`", &record[0])))?;
            if m != i as u64 + 1 {
                return Err(Error::SequenceFormat(format!(
                    "row {} has m = {m}, expected {}",
                    i + 1,
                    i + 1
                )));
            }
            let count: BigUint = record[1]
                .parse()
                .map_err(|_| Error::SequenceFormat(format!("bad count `{}`", &record[1])))?;
            terms.push(count);
        }
        Self::new(terms, None)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,count\n");
        for (i, c) in self.terms.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, c));
        }
        out
    }
}

/// Cumulative counts psi(p^s) = #{x : x^(p^s) = 1} for each prime p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiProfile {
    tables: BTreeMap<u64, Vec<u64>>,
}

impl PsiProfile {
    /// psi(p^s) for s = 0..=v_p(|G|).
    pub fn from_profile(profile: &OrderProfile) -> Self {
        let tables = factorize(profile.order())
            .into_iter()
            .map(|(p, alpha)| {
                let mut acc = 0;
                let mut pk = 1;
                let row = (0..=alpha)
                    .map(|s| {
                        if s > 0 {
                            pk *= p;
                        }
                        acc += profile.get(pk);
                        acc
                    })
                    .collect();
                (p, row)
            })
            .collect();
        Self { tables }
    }

    pub fn get(&self, p: u64) -> Option<&[u64]> {
        self.tables.get(&p).map(Vec::as_slice)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.tables.keys().copied()
    }
}

/// Why no abelian group has a given order profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonAbelianCertificate {
    /// psi(p^s) is not a power of p.
    NotAPrimePower { prime: u64, s: u32, value: u64 },
    /// The p-elements do not number |G|_p.
    SylowMismatch {
        prime: u64,
        expected: u64,
        found: u64,
    },
    /// log_p psi(p^s) is not sum_i min(u_i, s) for any partition.
    NotAPartition { prime: u64, exponents: Vec<u32> },
    /// Primary parts were recovered, but their product has a different
    /// profile.
    ProfileMismatch {
        order: u64,
        expected: u64,
        found: u64,
    },
}

impl fmt::Display for NonAbelianCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAPrimePower { prime, s, value } => write!(
                f,
                "{value} elements have order dividing {prime}^{s}, which is not a power of {prime}"
            ),
            Self::SylowMismatch {
                prime,
                expected,
                found,
            } => write!(
                f,
                "{found} elements have {prime}-power order, but an abelian group of this order has {expected}"
            ),
            Self::NotAPartition { prime, exponents } => write!(
                f,
                "cumulative {prime}-power counts have exponents {exponents:?}, which no partition produces"
            ),
            Self::ProfileMismatch {
                order,
                expected,
                found,
            } => write!(
                f,
                "an abelian group would have {expected} elements of order {order}, found {found}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identification {
    Abelian(AbelianGroupType),
    NonAbelian(NonAbelianCertificate),
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::Abelian(g) => write!(f, "{g}"),
            Identification::NonAbelian(c) => write!(f, "non-abelian: {c}"),
        }
    }
}

fn exact_log(value: u64, p: u64) -> Option<u32> {
    let mut v = value;
    let mut e = 0;
    while v > 1 {
        if !v.is_multiple_of(p) {
            return None;
        }
        v /= p;
        e += 1;
    }
    (v == 1).then_some(e)
}

/// Recovers the partition of a p-group from the exponents
/// a(s) = log_p psi(p^s), s = 0..=alpha.
///
/// The largest part u1 is the last s where a(s) still grows; the growth
/// a(u1) - a(u1 - 1) is the multiplicity r of u1. Removing those r parts
/// (which contribute r * min(u1, s) to a(s)) leaves the same problem for the
/// remaining parts.
fn partition_from_exponents(mut a: Vec<u32>) -> Option<Vec<u32>> {
    let increments: Vec<i64> = a.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    if increments.iter().any(|&c| c < 0) || increments.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    let mut parts = Vec::new();
    while a.last().copied().unwrap_or(0) > 0 {
        let u1 = (1..a.len()).rev().find(|&s| a[s] > a[s - 1])?;
        let r = a[u1] - a[u1 - 1];
        for (s, value) in a.iter_mut().enumerate() {
            *value = value.checked_sub(r * (s.min(u1) as u32))?;
        }
        parts.extend(std::iter::repeat_n(u1 as u32, r as usize));
    }
    Some(parts)
}

/// The abelian group with this order profile, or a certificate that none
/// exists.
pub fn identify_from_profile(profile: &OrderProfile) -> Result<Identification> {
    let n = profile.order();
    if let Some(t) = profile.support().find(|t| !n.is_multiple_of(*t)) {
        return Err(Error::InvalidProfile(format!(
            "element order {t} does not divide the group order {n}"
        )));
    }
    let psi = PsiProfile::from_profile(profile);
    let mut components = Vec::new();
    for (p, alpha) in factorize(n) {
        let row = psi.get(p).expect("every prime of n has a row");
        let mut exponents = Vec::with_capacity(row.len());
        for (s, &value) in row.iter().enumerate() {
            match exact_log(value, p) {
                Some(e) => exponents.push(e),
                None => {
                    return Ok(Identification::NonAbelian(
                        NonAbelianCertificate::NotAPrimePower {
                            prime: p,
                            s: s as u32,
                            value,
                        },
                    ))
                }
            }
        }
        let expected = p.pow(alpha);
        if row[alpha as usize] != expected {
            return Ok(Identification::NonAbelian(
                NonAbelianCertificate::SylowMismatch {
                    prime: p,
                    expected,
                    found: row[alpha as usize],
                },
            ));
        }
        match partition_from_exponents(exponents.clone()) {
            Some(parts) => components.push((p, parts)),
            None => {
                return Ok(Identification::NonAbelian(
                    NonAbelianCertificate::NotAPartition {
                        prime: p,
                        exponents,
                    },
                ))
            }
        }
    }
    let candidate = AbelianGroupType::new(components)?;
    let implied = abelian_order_profile(&candidate);
    for t in divisors(n) {
        let (expected, found) = (implied.get(t), profile.get(t));
        if expected != found {
            return Ok(Identification::NonAbelian(
                NonAbelianCertificate::ProfileMismatch {
                    order: t,
                    expected,
                    found,
                },
            ));
        }
    }
    Ok(Identification::Abelian(candidate))
}

/// Solves for phi(t') at m = t' in increasing t', assuming |G| = n. Errors
/// carry the reason the sequence is inconsistent with that order.
fn solve_profile(terms: &[BigUint], n: u64) -> std::result::Result<BTreeMap<u64, u64>, String> {
    let mut phi: BTreeMap<u64, u64> = BTreeMap::new();
    let big_n = BigUint::from(n);
    for (i, count) in terms.iter().enumerate() {
        let m = i as u64 + 1;
        let target = &big_n * count;
        let g = num_integer::gcd(m, n);
        let mut known = BigUint::zero();
        for t in divisors(g) {
            if t == m {
                continue;
            }
            if let Some(&c) = phi.get(&t) {
                known += multichoose(n / t, m / t) * c;
            }
        }
        if n.is_multiple_of(m) {
            // The unknown phi(m) enters with coefficient C(n/m, 1) = n/m.
            if target < known {
                return Err(format!("negative count of elements of order {m}"));
            }
            let (value, rem) = (target - known).div_rem(&BigUint::from(n / m));
            if !rem.is_zero() {
                return Err(format!("non-integral count of elements of order {m}"));
            }
            let value = value
                .to_u64()
                .filter(|&v| v <= n)
                .ok_or_else(|| format!("more than {n} elements of order {m}"))?;
            if m == 1 && value != 1 {
                return Err("the identity must be the only element of order 1".into());
            }
            if value > 0 {
                phi.insert(m, value);
            }
        } else if target != known {
            return Err(format!("the count at m = {m} does not match"));
        }
    }
    Ok(phi)
}

/// Recovers phi_G from E(G, 1..=M).
///
/// With a claimed order n the sequence must reach m = n. Without one, every
/// n up to `DEFAULT_ORDER_SEARCH_BOUND` is tried and exactly one must fit.
pub fn profile_from_sequence(seq: &CountSequence) -> Result<OrderProfile> {
    let horizon = seq.horizon();
    if let Some(n) = seq.claimed_order() {
        if horizon < n {
            return Err(Error::InsufficientTerms {
                have: horizon,
                need: n,
            });
        }
        let phi = solve_profile(seq.terms(), n).map_err(Error::InconsistentSequence)?;
        return OrderProfile::new(n, phi).map_err(|e| Error::InconsistentSequence(e.to_string()));
    }

    let mut accepted = Vec::new();
    let mut undetermined = Vec::new();
    for n in 1..=DEFAULT_ORDER_SEARCH_BOUND {
        if n <= horizon {
            if let Ok(phi) = solve_profile(seq.terms(), n) {
                if let Ok(profile) = OrderProfile::new(n, phi) {
                    accepted.push(profile);
                }
            }
        } else if let Ok(phi) = solve_profile(seq.terms(), n) {
            // phi(t) for divisors t > horizon stays unknown.
            if phi.values().sum::<u64>() <= n {
                undetermined.push(n);
            }
        }
    }
    match (accepted.len(), undetermined.is_empty()) {
        (1, true) => Ok(accepted.pop().unwrap()),
        (0, true) => Err(Error::InconsistentSequence(format!(
            "no group of order at most {DEFAULT_ORDER_SEARCH_BOUND} fits"
        ))),
        _ => {
            let mut orders: Vec<u64> = accepted.iter().map(OrderProfile::order).collect();
            orders.extend(&undetermined);
            Err(Error::AmbiguousOrder(format!(
                "orders {orders:?} all fit the first {horizon} terms"
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub group: AbelianGroupType,
    pub recovered: Identification,
}

impl RoundTrip {
    pub fn success(&self) -> bool {
        self.recovered == Identification::Abelian(self.group.clone())
    }
}

/// E-sequence of `g` up to `horizon`, then back to a group.
pub fn round_trip(g: &AbelianGroupType, horizon: u64) -> Result<RoundTrip> {
    if horizon < g.order() {
        return Err(Error::InsufficientTerms {
            have: horizon,
            need: g.order(),
        });
    }
    let seq = CountSequence::forward(&GroupSpec::Abelian(g.clone()), horizon)?;
    let profile = profile_from_sequence(&seq)?;
    Ok(RoundTrip {
        group: g.clone(),
        recovered: identify_from_profile(&profile)?,
    })
}

/// First m <= horizon where the two groups' E-sequences differ.
pub fn first_separating_m(g: &GroupSpec, h: &GroupSpec, horizon: u64) -> Result<Option<u64>> {
    let (pg, ph) = (g.order_profile(), h.order_profile());
    for m in 1..=horizon {
        let shape = BlockShape::matrix(m)?;
        if count_from_profile(&pg, &shape)? != count_from_profile(&ph, &shape)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionReport {
    pub prime: u64,
    pub horizon: u64,
    pub heisenberg_exponent: u64,
    pub heisenberg_is_abelian: bool,
    pub elementary_is_abelian: bool,
    pub profiles_equal: bool,
    /// First m where the counts differ, if any.
    pub first_difference: Option<u64>,
}

impl CollisionReport {
    /// Equal counts on the whole horizon for two non-isomorphic groups.
    pub fn collides(&self) -> bool {
        self.first_difference.is_none()
            && self.profiles_equal
            && self.heisenberg_is_abelian != self.elementary_is_abelian
    }
}

/// The Heisenberg group mod p against Z_p^3: both have exponent p and order
/// p^3, so their E-sequences agree although only one is abelian.
pub fn collision_demo(p: u64, horizon: u64) -> Result<CollisionReport> {
    if p == 2 {
        return Err(Error::InvalidArgument(
            "groups of exponent 2 are abelian, so p must be odd".into(),
        ));
    }
    let heisenberg = CayleyGroup::heisenberg(p)?;
    let elementary = AbelianGroupType::new(vec![(p, vec![1, 1, 1])])?;
    let h_spec = GroupSpec::Table(heisenberg.clone());
    let e_spec = GroupSpec::Abelian(elementary);
    let elementary_table = e_spec.to_cayley(crate::group::DEFAULT_CAYLEY_CAP)?;
    Ok(CollisionReport {
        prime: p,
        horizon,
        heisenberg_exponent: h_spec.exponent(),
        heisenberg_is_abelian: heisenberg.is_abelian(),
        elementary_is_abelian: elementary_table.is_abelian(),
        profiles_equal: h_spec.order_profile() == e_spec.order_profile(),
        first_difference: first_separating_m(&h_spec, &e_spec, horizon)?,
    })
}
