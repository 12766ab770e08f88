//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gradcount::arith::{divisors, totient};
use gradcount::asymptotic::{asymptotic_polynomial, growth_ratio};
use gradcount::division::count_nondegenerate_alternating;
use gradcount::elementary::{
    burnside_numerator, count_cyclic_prime_power, count_elementary, count_elementary_matrix,
    count_prime_exponent,
};
use gradcount::full::count_all_matrix;
use gradcount::group::{abelian_order_profile, cyclic_order_profile};
use gradcount::oracle::{count_orbits, OrbitMethod, DEFAULT_ENUM_CAP};
use gradcount::reconstruction::{collision_demo, first_separating_m, round_trip};
use gradcount::{AbelianGroupType, BlockShape, CayleyGroup, GroupSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn abelian(s: &str) -> AbelianGroupType {
    s.parse().unwrap()
}

fn spec(g: &AbelianGroupType) -> GroupSpec {
    GroupSpec::Abelian(g.clone())
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for g in AbelianGroupType::all_up_to(8) {
        let g = spec(&g);
        for size in 1..=6 {
            for shape in BlockShape::compositions(size) {
                let formula = count_elementary(&g, &shape).map_err(|e| e.to_string())?;
                for method in [OrbitMethod::Partition, OrbitMethod::Burnside] {
                    let orbits = count_orbits(&g, &shape, method, DEFAULT_ENUM_CAP)
                        .map_err(|e| e.to_string())?;
                    ensure(orbits == formula, || {
                        format!("{g} {shape} {method:?}: formula {formula}, orbits {orbits}")
                    })?;
                }
                cells += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{cells} (group, shape) pairs agree in {:.1?}",
        elapsed
    ))
}

fn ut_identity() -> Outcome {
    let mut groups: Vec<GroupSpec> = AbelianGroupType::all_up_to(8).iter().map(spec).collect();
    groups.push(GroupSpec::Table(CayleyGroup::symmetric3()));
    groups.push(GroupSpec::Table(CayleyGroup::heisenberg(3).unwrap()));
    for g in &groups {
        for n in 1..=5 {
            let e = count_elementary(g, &BlockShape::triangular(n).unwrap()).unwrap();
            let expected = BigUint::from(g.order()).pow(n as u32 - 1);
            ensure(*e.value() == expected, || {
                format!("{g} n={n}: {e} != {expected}")
            })?;
        }
    }
    Ok(format!("{} groups, n <= 5", groups.len()))
}

fn closed_forms() -> Outcome {
    let mut checks = 0;
    for p in [2u64, 3, 5] {
        for n in 1..=3u32 {
            let order = p.pow(n);
            let elementary = spec(&AbelianGroupType::new(vec![(p, vec![1; n as usize])]).unwrap());
            let cyclic = spec(&AbelianGroupType::cyclic(order).unwrap());
            for m in 1..=200 {
                let general = count_elementary_matrix(&elementary, m).unwrap();
                let closed = count_prime_exponent(order, p, m).unwrap();
                ensure(general == closed, || {
                    format!("Z{p}^{n} m={m}: {general} != {closed}")
                })?;
                let general = count_elementary_matrix(&cyclic, m).unwrap();
                let closed = count_cyclic_prime_power(p, n, m).unwrap();
                ensure(general == closed, || {
                    format!("Z{order} m={m}: {general} != {closed}")
                })?;
                checks += 2;
            }
        }
    }
    Ok(format!("{checks} closed-form evaluations"))
}

fn cyclic_profile() -> Outcome {
    for n in 1..=200u64 {
        let g = AbelianGroupType::cyclic(n).unwrap();
        let coder = g.element_coder();
        let enumerated =
            gradcount::OrderProfile::from_element_orders((0..n).map(|x| coder.element_order(x)))
                .unwrap();
        let product = abelian_order_profile(&g);
        let closed = cyclic_order_profile(n);
        ensure(enumerated == closed && product == closed, || {
            format!("Z{n} profiles disagree")
        })?;
        for t in 1..=n {
            let expected = if n % t == 0 { totient(t) } else { 0 };
            ensure(closed.get(t) == expected, || format!("Z{n} phi({t})"))?;
        }
    }
    Ok("n <= 200".into())
}

fn integrality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6772_6164);
    let mut groups: Vec<GroupSpec> = AbelianGroupType::all_up_to(24).iter().map(spec).collect();
    groups.push(GroupSpec::Table(CayleyGroup::symmetric3()));
    let profiles: Vec<_> = groups.iter().map(GroupSpec::order_profile).collect();
    for i in 0..1000 {
        let which = rng.gen_range(0..groups.len());
        let total: u64 = rng.gen_range(1..=10_000);
        let parts = rng.gen_range(1..=total.min(6));
        let mut cuts: Vec<u64> = (0..parts - 1).map(|_| rng.gen_range(1..total)).collect();
        cuts.sort_unstable();
        cuts.dedup();
        let mut blocks = Vec::new();
        let mut last = 0;
        for c in cuts.into_iter().chain([total]) {
            blocks.push(c - last);
            last = c;
        }
        let shape = BlockShape::new(blocks).unwrap();
        let numerator = burnside_numerator(&profiles[which], &shape);
        let order = BigUint::from(groups[which].order());
        ensure(numerator.is_multiple_of(&order), || {
            format!("instance {i}: {} {shape}", groups[which])
        })?;
    }
    Ok("1000 random instances divisible".into())
}

fn asymptotics() -> Outcome {
    let tolerance = BigRational::new(1.into(), 10_000.into());
    let groups = AbelianGroupType::all_up_to(6);
    for g in &groups {
        for m in [1_000_000u64, 1_000_001] {
            let e = count_elementary_matrix(&spec(g), m).unwrap();
            let n = count_all_matrix(g, m).unwrap();
            for (label, count) in [("E", e.value()), ("N", n.value())] {
                let ratio = growth_ratio(count, g.order(), m);
                ensure(
                    (ratio.clone() - BigRational::one()).abs() <= tolerance,
                    || format!("{g} {label} m={m}: ratio {ratio}"),
                )?;
            }
        }
        let low = asymptotic_polynomial(&spec(g), 1).unwrap();
        let high = asymptotic_polynomial(&spec(g), g.exponent()).unwrap();
        for m in 1..=10_000 {
            let e = BigRational::from_integer(
                count_elementary_matrix(&spec(g), m)
                    .unwrap()
                    .into_inner()
                    .into(),
            );
            ensure(
                low.eval_integer(m) <= e && e <= high.eval_integer(m),
                || format!("{g} m={m}: sandwich fails"),
            )?;
        }
    }
    Ok(format!(
        "{} groups within 1e-4; sandwich for m <= 10^4",
        groups.len()
    ))
}

fn full_count_spots() -> Outcome {
    let n = |s: &str, m| count_all_matrix(&abelian(s), m).unwrap();
    ensure(n("Z2", 2) == 2, || format!("N(Z2, 2) = {}", n("Z2", 2)))?;
    ensure(n("Z2xZ2", 2) == 5, || {
        format!("N(Z2xZ2, 2) = {}", n("Z2xZ2", 2))
    })?;
    let e = count_elementary_matrix(&spec(&abelian("Z3xZ3")), 3).unwrap();
    let full = n("Z3xZ3", 3);
    ensure(*full.value() == e.value() + 2u32, || {
        format!("N(Z3xZ3, 3) = {full}, E = {e}")
    })?;
    for p in [2u64, 3, 5] {
        let d = count_nondegenerate_alternating(
            &AbelianGroupType::product_of_cyclics(&[p, p]).unwrap(),
        )
        .unwrap();
        ensure(d == p - 1, || format!("D(Z{p}^2) = {d}"))?;
    }
    Ok(format!(
        "N(Z3xZ3, 3) = {full}; D(Zp^2) = p - 1 for p in 2, 3, 5"
    ))
}

fn round_trip_and_separation() -> Outcome {
    let groups = AbelianGroupType::all_up_to(64);
    for g in &groups {
        let r = round_trip(g, g.order()).map_err(|e| format!("{g}: {e}"))?;
        ensure(r.success(), || format!("{g} recovered as {}", r.recovered))?;
    }
    let mut pairs = 0;
    for order in 1..=36 {
        let same = AbelianGroupType::all_of_order(order);
        for (i, g) in same.iter().enumerate() {
            for h in &same[i + 1..] {
                let m = first_separating_m(&spec(g), &spec(h), order).unwrap();
                ensure(m.is_some(), || {
                    format!("{g} and {h} not separated by m <= {order}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{} groups recovered; {pairs} pairs separated",
        groups.len()
    ))
}

fn collision() -> Outcome {
    let r = collision_demo(3, 30).map_err(|e| e.to_string())?;
    ensure(r.collides(), || format!("{r:?}"))?;
    ensure(!r.heisenberg_is_abelian && r.elementary_is_abelian, || {
        format!("{r:?}")
    })?;
    Ok("Heisenberg mod 3 and Z3^3 agree for m <= 30".into())
}

fn polynomial_identity() -> Outcome {
    for name in ["Z6", "Z2xZ2", "Z4"] {
        let g = spec(&abelian(name));
        let polys: Vec<_> = divisors(g.exponent())
            .into_iter()
            .map(|d| (d, asymptotic_polynomial(&g, d).unwrap()))
            .collect();
        for m in 1..=500u64 {
            let d = m.gcd(&g.exponent());
            let poly = &polys.iter().find(|(dd, _)| *dd == d).unwrap().1;
            let e = BigRational::from_integer(
                count_elementary_matrix(&g, m).unwrap().into_inner().into(),
            );
            ensure(poly.eval_integer(m) == e, || format!("{name} m={m}"))?;
        }
    }
    Ok("Z6, Z2xZ2, Z4 for m <= 500".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("UT identity", ut_identity),
        ("closed forms", closed_forms),
        ("cyclic order profile", cyclic_profile),
        ("integrality", integrality),
        ("asymptotics and sandwich", asymptotics),
        ("full-count spot values", full_count_spots),
        ("round trip and separation", round_trip_and_separation),
        ("non-abelian collision", collision),
        ("polynomial identity", polynomial_identity),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
