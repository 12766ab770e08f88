//! Subgroups and quotients of finite abelian groups.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use super::abelian::{AbelianGroupType, ElementCoder};
use super::profile::OrderProfile;
use crate::error::{Error, Result};
use crate::reconstruction::{identify_from_profile, Identification};

/// Largest ambient order for which subgroups are enumerated by default.
pub const DEFAULT_SUBGROUP_BOUND: u64 = 256;

/// A subgroup of an abelian group, as the sorted list of its elements in the
/// ambient mixed-radix encoding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupHandle {
    ambient: AbelianGroupType,
    elements: Vec<u64>,
    iso_type: AbelianGroupType,
}

impl SubgroupHandle {
    /// Validates that `elements` is a subgroup of `ambient` and classifies it.
    pub fn from_elements(ambient: &AbelianGroupType, mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let coder = ambient.element_coder();
        if let Some(&x) = elements.iter().find(|&&x| x >= coder.order()) {
            return Err(Error::NotASubgroup(format!("{x} is not an element")));
        }
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let member = |x: u64| elements.binary_search(&x).is_ok();
        for &a in &elements {
            if !member(coder.neg(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if !member(coder.add(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a} + {b} missing")));
                }
            }
        }
        if !coder.order().is_multiple_of(elements.len() as u64) {
            return Err(Error::NotASubgroup(
                "order does not divide the group order".into(),
            ));
        }
        let iso_type = classify(&coder, &elements);
        Ok(Self {
            ambient: ambient.clone(),
            elements,
            iso_type,
        })
    }

    pub fn full(ambient: &AbelianGroupType) -> Self {
        Self {
            ambient: ambient.clone(),
            elements: (0..ambient.order()).collect(),
            iso_type: ambient.clone(),
        }
    }

    pub fn trivial(ambient: &AbelianGroupType) -> Self {
        Self {
            ambient: ambient.clone(),
            elements: vec![0],
            iso_type: AbelianGroupType::trivial(),
        }
    }

    pub fn ambient(&self) -> &AbelianGroupType {
        &self.ambient
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn iso_type(&self) -> &AbelianGroupType {
        &self.iso_type
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

fn classify(coder: &ElementCoder, elements: &[u64]) -> AbelianGroupType {
    let profile =
        OrderProfile::from_element_orders(elements.iter().map(|&x| coder.element_order(x)))
            .expect("subgroup profile is valid");
    match identify_from_profile(&profile) {
        Ok(Identification::Abelian(t)) => t,
        other => unreachable!("subgroup of an abelian group failed to classify: {other:?}"),
    }
}

/// Isomorphism type of a subgroup, recovered from the order profile of its
/// elements.
pub fn iso_type_of_subgroup(h: &SubgroupHandle) -> AbelianGroupType {
    classify(&h.ambient.element_coder(), &h.elements)
}

pub fn enumerate_subgroups(g: &AbelianGroupType) -> Result<Vec<SubgroupHandle>> {
    enumerate_subgroups_with_bound(g, DEFAULT_SUBGROUP_BOUND)
}

type SubgroupCache = Mutex<HashMap<AbelianGroupType, Arc<Vec<SubgroupHandle>>>>;

fn cache() -> &'static SubgroupCache {
    static CACHE: OnceLock<SubgroupCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Every subgroup of `g` exactly once, sorted by order and then by element
/// list.
pub fn enumerate_subgroups_with_bound(
    g: &AbelianGroupType,
    bound: u64,
) -> Result<Vec<SubgroupHandle>> {
    if g.order() > bound {
        return Err(Error::BoundExceeded {
            what: "subgroup enumeration ambient order",
            size: g.order() as u128,
            bound: bound as u128,
        });
    }
    if let Some(hit) = cache().lock().unwrap().get(g) {
        return Ok(hit.as_ref().clone());
    }
    let computed = Arc::new(compute_subgroups(g));
    cache()
        .lock()
        .unwrap()
        .entry(g.clone())
        .or_insert_with(|| computed.clone());
    Ok(computed.as_ref().clone())
}

/// Element indices of a subgroup with its iso type as (prime, parts) pairs.
type PartialProduct = (Vec<u64>, Vec<(u64, Vec<u32>)>);

fn compute_subgroups(g: &AbelianGroupType) -> Vec<SubgroupHandle> {
    // Subgroups of G are products of subgroups of its primary components.
    // With the first cyclic factor least significant, a component's local
    // index sits in the global index scaled by the orders of the earlier
    // components.
    let mut products: Vec<PartialProduct> = vec![(vec![0], Vec::new())];
    let mut scale = 1u64;
    for c in g.components() {
        let local =
            AbelianGroupType::new(vec![(c.prime, c.parts.clone())]).expect("valid component");
        let local_coder = local.element_coder();
        let local_subgroups = primary_subgroups(&local_coder);
        let mut next = Vec::with_capacity(products.len() * local_subgroups.len());
        for (elems, ty) in &products {
            for sub in &local_subgroups {
                let mut combined = Vec::with_capacity(elems.len() * sub.len());
                for &a in elems {
                    for &b in sub {
                        combined.push(a + b * scale);
                    }
                }
                let sub_type = classify(&local_coder, sub);
                let mut ty = ty.clone();
                if let Some(pc) = sub_type.components().first() {
                    ty.push((pc.prime, pc.parts.clone()));
                }
                next.push((combined, ty));
            }
        }
        products = next;
        scale *= local.order();
    }
    let mut out: Vec<SubgroupHandle> = products
        .into_iter()
        .map(|(mut elements, ty)| {
            elements.sort_unstable();
            SubgroupHandle {
                ambient: g.clone(),
                elements,
                iso_type: AbelianGroupType::new(ty).expect("valid subgroup type"),
            }
        })
        .collect();
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    out
}

/// All subgroups of a group given by its coder, by breadth-first closure:
/// every subgroup is reached from a smaller one by adjoining one element.
fn primary_subgroups(coder: &ElementCoder) -> Vec<Vec<u64>> {
    let n = coder.order() as usize;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(vec![0]);
    queue.push_back(vec![0u64]);
    let mut member = vec![false; n];
    let mut covered = vec![false; n];
    while let Some(h) = queue.pop_front() {
        member.iter_mut().for_each(|m| *m = false);
        covered.iter_mut().for_each(|m| *m = false);
        for &x in &h {
            member[x as usize] = true;
        }
        // Adjoining g and g + h give the same subgroup, so one element per
        // coset suffices.
        for g in 0..n as u64 {
            if covered[g as usize] {
                continue;
            }
            for &x in &h {
                covered[coder.add(g, x) as usize] = true;
            }
            if member[g as usize] {
                continue;
            }
            let k = adjoin(coder, &h, &member, g);
            if !seen.contains(&k) {
                seen.insert(k.clone());
                queue.push_back(k);
            }
        }
    }
    let mut out: Vec<Vec<u64>> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// The subgroup generated by `h` and `g`: the union of h + j*g until j*g
/// falls back into h.
fn adjoin(coder: &ElementCoder, h: &[u64], member: &[bool], g: u64) -> Vec<u64> {
    let mut out = h.to_vec();
    let mut shift = g;
    while !member[shift as usize] {
        out.extend(h.iter().map(|&x| coder.add(x, shift)));
        shift = coder.add(shift, g);
    }
    out.sort_unstable();
    out
}

/// The quotient g / t: its isomorphism type and order profile.
pub fn quotient_profile(
    g: &AbelianGroupType,
    t: &SubgroupHandle,
) -> Result<(AbelianGroupType, OrderProfile)> {
    if t.ambient() != g {
        return Err(Error::NotASubgroup(format!(
            "subgroup lives in {}, not {g}",
            t.ambient()
        )));
    }
    let coder = g.element_coder();
    let n = coder.order();
    let mut assigned = vec![false; n as usize];
    let mut coset_orders = Vec::new();
    for x in 0..n {
        if assigned[x as usize] {
            continue;
        }
        for &y in t.elements() {
            assigned[coder.add(x, y) as usize] = true;
        }
        let mut k = 1u64;
        let mut multiple = x;
        while !t.contains(multiple) {
            multiple = coder.add(multiple, x);
            k += 1;
        }
        coset_orders.push(k);
    }
    let profile = OrderProfile::from_element_orders(coset_orders)?;
    match identify_from_profile(&profile)? {
        Identification::Abelian(ty) => Ok((ty, profile)),
        Identification::NonAbelian(cert) => {
            unreachable!("quotient of an abelian group failed to classify: {cert}")
        }
    }
}
