//! End-to-end checks over every module, runnable from the CLI.
//!
//! Each check re-verifies a pinned structural fact: exact lattice counts,
//! group structure, oracle equivalence of the two path-sum engines,
//! conservation laws, the decomposition identities (one of which is expected
//! to fail with specific witnesses), the particle tables (whose proton is
//! expected to carry exactly one tick anomaly), and the numeric layer.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};

use crate::algebra::Dyadic;
use crate::checkerboard::{
    brute_force_all, count_paths_all, evaluate, left_translators, lightcone_links,
    link_group_closure, phase, propagate_all, AmplitudePoly, Dim, Direction, EvaluationParams,
    GroupUnit, WeightConvention,
};
use crate::error::Error;
use crate::lattice::{
    decomposition_harness, e8_roots, is_extension_closed, minkowski_norm, nearest_neighbors,
    DecompositionReport, LatticePoint, LatticeSpec,
};
use crate::particles::{builtin_table, validate, ParticleKind, ParticlePath};

/// Tolerance for comparisons against exactly representable references.
pub const NUMERIC_TOLERANCE: f64 = 1e-12;
/// Tolerance for the 4-digit phase reference value 1.7682.
pub const PHASE_REFERENCE_TOLERANCE: f64 = 5e-5;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failures: Vec<String>, ok_detail: &str) -> CheckResult {
    if failures.is_empty() {
        CheckResult {
            name,
            passed: true,
            detail: ok_detail.to_string(),
        }
    } else {
        CheckResult {
            name,
            passed: false,
            detail: failures.join("; "),
        }
    }
}

/// The 8 lightcone links as lattice points, future first.
fn link_points() -> Vec<LatticePoint> {
    [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
        [-1, -1, 1, 1],
        [-1, 1, -1, 1],
        [-1, 1, 1, -1],
        [-1, -1, -1, -1],
    ]
    .iter()
    .map(|h| LatticePoint::from_half_units(h))
    .collect()
}

pub fn check_lattice_counts() -> CheckResult {
    let mut failures = Vec::new();

    match nearest_neighbors(&LatticeSpec::HyperDiamond(4)) {
        Ok(found) => {
            let found: BTreeSet<_> = found.into_iter().collect();
            let expected: BTreeSet<_> = link_points().into_iter().collect();
            if found != expected {
                failures.push(format!(
                    "4HD nearest neighbors: found {} points, not the 8 lightcone links",
                    found.len()
                ));
            }
        }
        Err(e) => failures.push(format!("4HD neighbors failed: {e}")),
    }

    match nearest_neighbors(&LatticeSpec::Checkerboard(4)) {
        Ok(found) => {
            let found: BTreeSet<_> = found.into_iter().collect();
            let mut expected = BTreeSet::new();
            for a in 0..4 {
                for b in (a + 1)..4 {
                    for sa in [-2i64, 2] {
                        for sb in [-2i64, 2] {
                            let mut h = [0i64; 4];
                            h[a] = sa;
                            h[b] = sb;
                            expected.insert(LatticePoint::from_half_units(&h));
                        }
                    }
                }
            }
            if found.len() != 24 || found != expected {
                failures.push(format!(
                    "D4 nearest neighbors: found {} points, not the 24-cell",
                    found.len()
                ));
            }
        }
        Err(e) => failures.push(format!("D4 neighbors failed: {e}")),
    }

    let roots = e8_roots();
    if roots.points.len() != 240 {
        failures.push(format!("root count {} != 240", roots.points.len()));
    }
    if roots.strata != [16, 96, 128] {
        failures.push(format!("strata {:?} != [16, 96, 128]", roots.strata));
    }
    let one = Dyadic::one();
    if !roots.points.iter().all(|p| p.norm_sq() == one) {
        failures.push("some root is not unit norm".to_string());
    }
    let set: BTreeSet<_> = roots.points.iter().cloned().collect();
    if !roots.points.iter().all(|p| set.contains(&-p)) {
        failures.push("root set is not closed under negation".to_string());
    }

    outcome(
        "lattice-counts",
        failures,
        "4HD: 8 links; D4: 24-cell; roots: 240 with strata (16, 96, 128)",
    )
}

pub fn check_group_structure() -> CheckResult {
    let mut failures = Vec::new();

    let links = lightcone_links();
    for prev in &links {
        for next in &links {
            let translators = left_translators(prev, next);
            if translators.len() != 1 {
                failures.push(format!(
                    "{} translators carry {prev} to {next}",
                    translators.len()
                ));
            }
        }
    }

    let closure = link_group_closure();
    if closure.len() != 24 {
        failures.push(format!("link closure has {} elements, not 24", closure.len()));
    }
    for u in &closure {
        if !closure.contains(&u.conj()) {
            failures.push(format!("closure misses inverse of {u}"));
        }
        for v in &closure {
            if !closure.contains(&(u * v)) {
                failures.push(format!("closure misses {u}·{v}"));
            }
        }
    }

    outcome(
        "group-structure",
        failures,
        "simple transitivity over 64 link pairs; 24-element multiplicative closure",
    )
}

const ORACLE_BUDGET: u64 = 1 << 20;

pub fn check_oracle_equivalence() -> CheckResult {
    let mut failures = Vec::new();
    let mut compared = 0usize;
    for convention in [WeightConvention::Signed, WeightConvention::Axis] {
        for start in [Direction::R, Direction::L] {
            for steps in 1..=14u32 {
                compare_engines(start, steps, convention, &mut failures, &mut compared);
            }
        }
        for start in [Direction::F1, Direction::F2, Direction::F3, Direction::F4] {
            for steps in 1..=8u32 {
                compare_engines(start, steps, convention, &mut failures, &mut compared);
            }
        }
    }
    let detail = format!("{compared} (start, T, convention) endpoint maps identical");
    outcome("oracle-equivalence", failures, &detail)
}

fn compare_engines(
    start: Direction,
    steps: u32,
    convention: WeightConvention,
    failures: &mut Vec<String>,
    compared: &mut usize,
) {
    let fast = propagate_all(start, steps, convention);
    let slow = brute_force_all(start, steps, convention, ORACLE_BUDGET);
    match (fast, slow) {
        (Ok(fast), Ok(slow)) => {
            if fast != slow {
                failures.push(format!(
                    "engines disagree at start {start}, T {steps}, {convention:?}"
                ));
            }
            *compared += 1;
        }
        (Err(e), _) | (_, Err(e)) => {
            failures.push(format!("engine error at start {start}, T {steps}: {e}"))
        }
    }
}

pub fn check_count_conservation() -> CheckResult {
    let mut failures = Vec::new();
    let cases = [
        (Dim::Two, 12u32),
        (Dim::Four, 6u32),
    ];
    for (dim, max_steps) in cases {
        let starts: Vec<Direction> = crate::checkerboard::future_links(dim).to_vec();
        let links = starts.len() as u128;
        for start in starts {
            for steps in 1..=max_steps {
                match count_paths_all(start, steps) {
                    Ok(all) => {
                        let total: BigUint =
                            all.values().flat_map(|counts| counts.values()).sum();
                        let expected = BigUint::from(links.pow(steps));
                        if total != expected {
                            failures.push(format!(
                                "start {start}, T {steps}: total {total} != {expected}"
                            ));
                        }
                        if all
                            .values()
                            .flat_map(|counts| counts.keys())
                            .any(|&c| c > steps)
                        {
                            failures.push(format!(
                                "start {start}, T {steps}: corner count above T"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("count failed at T {steps}: {e}")),
                }
                match propagate_all(start, steps, WeightConvention::Signed) {
                    Ok(all) => {
                        if all.values().any(|poly| poly.degree().unwrap_or(0) > steps) {
                            failures.push(format!(
                                "start {start}, T {steps}: polynomial degree above T"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("propagate failed at T {steps}: {e}")),
                }
            }
        }
    }
    outcome(
        "count-conservation",
        failures,
        "path totals equal links^T and degrees stay within T (dim 2 T<=12, dim 4 T<=6)",
    )
}

fn minus_i_power(corners: u32) -> GroupUnit {
    match corners % 4 {
        0 => GroupUnit::One,
        1 => GroupUnit::MinusI,
        2 => GroupUnit::MinusOne,
        _ => GroupUnit::I,
    }
}

pub fn check_two_dim_collapse() -> CheckResult {
    let mut failures = Vec::new();
    for start in [Direction::R, Direction::L] {
        for steps in 1..=14u32 {
            let polys = match propagate_all(start, steps, WeightConvention::Signed) {
                Ok(polys) => polys,
                Err(e) => {
                    failures.push(format!("propagate failed at T {steps}: {e}"));
                    continue;
                }
            };
            let counts = match count_paths_all(start, steps) {
                Ok(counts) => counts,
                Err(e) => {
                    failures.push(format!("count failed at T {steps}: {e}"));
                    continue;
                }
            };
            if polys.keys().ne(counts.keys()) {
                failures.push(format!(
                    "start {start}, T {steps}: endpoint sets differ between engines"
                ));
                continue;
            }
            for (endpoint, poly) in &polys {
                let count_map = &counts[endpoint];
                let expected = AmplitudePoly::from_coeffs(count_map.iter().map(|(&c, n)| {
                    let scale = Dyadic::integer(BigInt::from(n.clone()));
                    (c, minus_i_power(c).quaternion().scale(&scale))
                }));
                if poly != &expected {
                    failures.push(format!(
                        "start {start}, T {steps}, endpoint {endpoint:?}: coefficients differ from N(C)·(-i)^C"
                    ));
                }
            }
        }
    }
    outcome(
        "two-dim-collapse",
        failures,
        "all dim-2 coefficients equal N(C)·(-i)^C for T<=14",
    )
}

pub fn check_lightcone_nullity() -> CheckResult {
    let mut failures = Vec::new();
    let c_sq_four = Dyadic::integer(3);
    let c_sq_two = Dyadic::one();
    let zero = Dyadic::zero();

    for point in link_points() {
        match minkowski_norm(&point, &c_sq_four) {
            Ok(norm) if norm == zero => {}
            Ok(norm) => failures.push(format!("link {point} has norm {norm}, not 0")),
            Err(e) => failures.push(format!("norm failed for {point}: {e}")),
        }
    }

    for h in [[2i64, 2], [2, -2], [-2, 2], [-2, -2]] {
        let point = LatticePoint::from_half_units(&h);
        match minkowski_norm(&point, &c_sq_two) {
            Ok(norm) if norm == zero => {}
            Ok(norm) => failures.push(format!("2-D link {point} has norm {norm}, not 0")),
            Err(e) => failures.push(format!("norm failed for {point}: {e}")),
        }
    }

    let timelike = LatticePoint::from_half_units(&[2, 0, 0, 0]);
    match minkowski_norm(&timelike, &c_sq_four) {
        Ok(norm) if norm == Dyadic::integer(3) => {}
        Ok(norm) => failures.push(format!("timelike unit has norm {norm}, not 3")),
        Err(e) => failures.push(format!("norm failed for timelike unit: {e}")),
    }

    outcome(
        "lightcone-nullity",
        failures,
        "all 12 links null at their lightcone speed; timelike unit gives 3",
    )
}

pub fn check_extension_closure() -> CheckResult {
    let mut failures = Vec::new();
    let cases = [(4usize, true), (8, true), (3, false)];
    for (n, expected) in cases {
        match is_extension_closed(&LatticeSpec::HyperDiamond(n)) {
            Ok(found) if found == expected => {}
            Ok(found) => failures.push(format!("{n}HD closure {found}, expected {expected}")),
            Err(e) => failures.push(format!("{n}HD closure failed: {e}")),
        }
    }
    outcome(
        "extension-closure",
        failures,
        "4HD and 8HD extension-closed, 3HD not",
    )
}

pub fn check_decomposition() -> CheckResult {
    let mut failures = Vec::new();
    match decomposition_harness(&Dyadic::integer(2)) {
        Ok(report) => {
            if !report.d8_as_d4_pairs.holds
                || !report.d8_as_d4_pairs.only_in_whole.is_empty()
                || !report.d8_as_d4_pairs.only_in_split.is_empty()
            {
                failures.push("8-D checkerboard identity does not verify cleanly".to_string());
            }
            let e8 = &report.e8_as_hyperdiamond_pairs;
            if e8.holds {
                failures.push("8-D glued identity unexpectedly verifies".to_string());
            }
            if e8.only_in_whole.is_empty() || e8.only_in_split.is_empty() {
                failures.push("8-D glued identity does not fail in both directions".to_string());
            }
            if !e8
                .only_in_whole
                .contains(&DecompositionReport::diagonal_witness())
            {
                failures.push("diagonal witness missing from the whole-only list".to_string());
            }
            if !e8
                .only_in_split
                .contains(&DecompositionReport::half_glue_witness())
            {
                failures.push("half-glue witness missing from the split-only list".to_string());
            }
            if !report.matches_expected_shape() {
                failures.push("report shape differs from the expected outcome".to_string());
            }
        }
        Err(e) => failures.push(format!("harness failed: {e}")),
    }
    outcome(
        "decomposition-identities",
        failures,
        "pair identity verifies; glued identity fails both ways with both witnesses",
    )
}

pub fn check_particle_tables() -> CheckResult {
    let mut failures = Vec::new();
    for kind in ParticleKind::ALL {
        let path = builtin_table(kind);
        let rendered = path.canonical_table();
        match ParticlePath::parse_table(kind, &rendered) {
            Ok(reparsed) => {
                if reparsed.canonical_table() != rendered {
                    failures.push(format!("{kind} table does not round-trip"));
                }
            }
            Err(e) => failures.push(format!("{kind} table failed to reparse: {e}")),
        }
        let json = path.to_json();
        match ParticlePath::from_json(&json) {
            Ok(reparsed) if reparsed == path => {}
            Ok(_) => failures.push(format!("{kind} JSON round-trip differs")),
            Err(e) => failures.push(format!("{kind} JSON failed to reparse: {e}")),
        }
    }

    let pion = validate(&builtin_table(ParticleKind::Pion));
    if !pion.ok {
        failures.push(format!("pion validation not clean: {:?}", pion.anomalies));
    }
    let graviton = validate(&builtin_table(ParticleKind::Graviton));
    if !graviton.ok {
        failures.push(format!(
            "graviton validation not clean: {:?}",
            graviton.anomalies
        ));
    }
    let proton = validate(&builtin_table(ParticleKind::Proton));
    let expected_single = proton.anomalies.len() == 1
        && proton.anomalies[0].constituent == "B-Quark"
        && proton.anomalies[0].tick == 3;
    if !expected_single {
        failures.push(format!(
            "proton anomalies {:?} differ from the single B-Quark tick-3 misprint",
            proton.anomalies
        ));
    }

    outcome(
        "particle-tables",
        failures,
        "tables round-trip; pion and graviton clean; proton carries exactly the B-Quark tick-3 anomaly",
    )
}

pub fn check_numeric_layer() -> CheckResult {
    let mut failures = Vec::new();

    let poly = AmplitudePoly::from_coeffs([
        (1u32, -crate::algebra::Quaternion::unit_i()),
        (2, crate::algebra::Quaternion::from_integers(-2, 0, 0, 0)),
    ]);
    let params = match EvaluationParams::new(1.0, 0.1, Dim::Two, WeightConvention::Signed) {
        Ok(params) => params,
        Err(e) => {
            failures.push(format!("parameter construction failed: {e}"));
            return outcome("numeric-layer", failures, "");
        }
    };
    let amp = evaluate(&poly, &params);
    if (amp.re + 0.02).abs() > NUMERIC_TOLERANCE || (amp.i + 0.1).abs() > NUMERIC_TOLERANCE {
        failures.push(format!("evaluate gave {amp}, expected -0.02 - 0.1i"));
    }
    if amp.j != 0.0 || amp.k != 0.0 {
        failures.push("evaluate leaked into the j or k component".to_string());
    }
    match phase(&amp) {
        Ok(angle) => {
            let reference = (-0.02_f64 / 0.0104_f64.sqrt()).acos();
            if (angle - reference).abs() > NUMERIC_TOLERANCE {
                failures.push(format!("phase {angle} differs from arccos reference"));
            }
            if (angle - 1.7682).abs() > PHASE_REFERENCE_TOLERANCE {
                failures.push(format!("phase {angle} differs from 1.7682"));
            }
        }
        Err(e) => failures.push(format!("phase failed: {e}")),
    }

    let one = evaluate(&AmplitudePoly::one(), &params);
    match phase(&one) {
        Ok(angle) if angle.abs() <= NUMERIC_TOLERANCE => {}
        Ok(angle) => failures.push(format!("phase(1) = {angle}, expected 0")),
        Err(e) => failures.push(format!("phase(1) failed: {e}")),
    }

    match phase(&evaluate(&AmplitudePoly::zero(), &params)) {
        Err(Error::UndefinedPhase) => {}
        Err(e) => failures.push(format!("zero phase raised {e}, not the undefined-phase error")),
        Ok(angle) => failures.push(format!("zero phase returned {angle}")),
    }

    outcome(
        "numeric-layer",
        failures,
        "worked evaluate and phase values reproduced within 1e-12",
    )
}

/// All checks in a fixed order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_lattice_counts(),
        check_group_structure(),
        check_oracle_equivalence(),
        check_count_conservation(),
        check_two_dim_collapse(),
        check_lightcone_nullity(),
        check_extension_closure(),
        check_decomposition(),
        check_particle_tables(),
        check_numeric_layer(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for result in run_all() {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }
}
