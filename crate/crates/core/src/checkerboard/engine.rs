use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::lattice::LatticePoint;

use super::direction::{future_links, turn_factor, Dim, Direction, TurnFactor};
use super::group::{Axis, GroupUnit};
use super::poly::AmplitudePoly;

/// Default cap on the number of sequences the brute-force enumerator will
/// visit before refusing to run.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// How a 4-D corner is weighted.
///
/// `Signed` multiplies by minus the actual turn unit; `Axis` multiplies by
/// minus the positive unit of the turn's axis, discarding the turn's sign.
/// In 2-D every corner weighs `-i` and the convention makes no difference.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightConvention {
    Signed,
    Axis,
}

impl FromStr for WeightConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "signed" => Ok(WeightConvention::Signed),
            "axis" => Ok(WeightConvention::Axis),
            _ => Err(Error::malformed("weight convention", s)),
        }
    }
}

/// A fixed-endpoint path question: paths of `steps` links from the origin to
/// `endpoint`, entering the origin along `start`.
///
/// The first link is unconstrained; choosing a first link different from
/// `start` already counts as a corner at the origin.
#[derive(Clone, Debug)]
pub struct PathQuery {
    start: Direction,
    steps: u32,
    endpoint: LatticePoint,
}

impl PathQuery {
    pub fn new(start: Direction, steps: u32, endpoint: LatticePoint) -> Result<PathQuery, Error> {
        if steps == 0 {
            return Err(Error::NonPositive("steps"));
        }
        let expected = start.dim().as_usize();
        if endpoint.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: endpoint.dim(),
            });
        }
        Ok(PathQuery {
            start,
            steps,
            endpoint,
        })
    }

    pub fn start(&self) -> Direction {
        self.start
    }

    pub fn steps(&self) -> u32 {
        self.steps
    }

    pub fn endpoint(&self) -> &LatticePoint {
        &self.endpoint
    }
}

/// Position in half-units over (t, x, y, z); 2-D points pad with zeros.
pub type PositionKey = [i64; 4];

pub fn position_key(p: &LatticePoint) -> Option<PositionKey> {
    let h = p.half_units_i64()?;
    let mut key = [0i64; 4];
    key[..h.len()].copy_from_slice(&h);
    Some(key)
}

/// The group unit a step multiplies in, or `None` for a straight step.
fn corner_unit(
    dim: Dim,
    convention: WeightConvention,
    prev: Direction,
    next: Direction,
) -> Option<GroupUnit> {
    match turn_factor(prev, next).expect("same-dimension directions") {
        TurnFactor::Straight => None,
        TurnFactor::Turn { axis, negative } => Some(match dim {
            Dim::Two => GroupUnit::MinusI,
            Dim::Four => match convention {
                WeightConvention::Signed => {
                    let unit = match axis {
                        Axis::I => GroupUnit::I,
                        Axis::J => GroupUnit::J,
                        Axis::K => GroupUnit::K,
                    };
                    let signed = if negative { unit.negate() } else { unit };
                    signed.negate()
                }
                WeightConvention::Axis => match axis {
                    Axis::I => GroupUnit::MinusI,
                    Axis::J => GroupUnit::MinusJ,
                    Axis::K => GroupUnit::MinusK,
                },
            },
        }),
    }
}

fn weight_table(dim: Dim, convention: WeightConvention) -> Vec<Vec<Option<GroupUnit>>> {
    let dirs = future_links(dim);
    dirs.iter()
        .map(|&prev| {
            dirs.iter()
                .map(|&next| corner_unit(dim, convention, prev, next))
                .collect()
        })
        .collect()
}

fn advance(pos: &PositionKey, dir: Direction) -> PositionKey {
    let mut out = *pos;
    for (axis, delta) in dir.displacement_half_units().iter().enumerate() {
        out[axis] += delta;
    }
    out
}

/// Corner polynomials for every endpoint reachable in `steps` links, by
/// slice-by-slice transfer over (position, last direction) states.
pub fn propagate_all(
    start: Direction,
    steps: u32,
    convention: WeightConvention,
) -> Result<BTreeMap<PositionKey, AmplitudePoly>, Error> {
    if steps == 0 {
        return Err(Error::NonPositive("steps"));
    }
    let dim = start.dim();
    let dirs = future_links(dim);
    let table = weight_table(dim, convention);

    let mut states: BTreeMap<(PositionKey, usize), AmplitudePoly> = BTreeMap::new();
    states.insert(([0; 4], start.index()), AmplitudePoly::one());

    for _ in 0..steps {
        let mut next_states: BTreeMap<(PositionKey, usize), AmplitudePoly> = BTreeMap::new();
        for ((pos, prev_idx), poly) in &states {
            for (next_idx, &next_dir) in dirs.iter().enumerate() {
                let contribution = match table[*prev_idx][next_idx] {
                    None => poly.clone(),
                    Some(unit) => poly.shifted_right_mul(unit),
                };
                next_states
                    .entry((advance(pos, next_dir), next_idx))
                    .or_insert_with(AmplitudePoly::zero)
                    .add_assign(&contribution);
            }
        }
        next_states.retain(|_, poly| !poly.is_zero());
        states = next_states;
    }

    let mut by_endpoint: BTreeMap<PositionKey, AmplitudePoly> = BTreeMap::new();
    for ((pos, _), poly) in states {
        by_endpoint
            .entry(pos)
            .or_insert_with(AmplitudePoly::zero)
            .add_assign(&poly);
    }
    by_endpoint.retain(|_, poly| !poly.is_zero());
    Ok(by_endpoint)
}

/// Corner polynomial for one endpoint; zero if the endpoint is unreachable.
pub fn propagate(query: &PathQuery, convention: WeightConvention) -> Result<AmplitudePoly, Error> {
    let all = propagate_all(query.start, query.steps, convention)?;
    Ok(position_key(query.endpoint())
        .and_then(|key| all.get(&key).cloned())
        .unwrap_or_else(AmplitudePoly::zero))
}

/// Same result as [`propagate_all`] by explicit enumeration of all
/// `links^steps` direction sequences. Refuses to start if the sequence count
/// exceeds `budget`.
pub fn brute_force_all(
    start: Direction,
    steps: u32,
    convention: WeightConvention,
    budget: u64,
) -> Result<BTreeMap<PositionKey, AmplitudePoly>, Error> {
    if steps == 0 {
        return Err(Error::NonPositive("steps"));
    }
    let dim = start.dim();
    let dirs = future_links(dim);
    let required = (dirs.len() as u128)
        .checked_pow(steps)
        .unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(Error::EnumerationBudget {
            required,
            budget: u128::from(budget),
        });
    }
    let table = weight_table(dim, convention);

    // Fixed enumeration context; `walk` threads only the per-path state.
    struct Enumeration<'a> {
        dirs: &'a [Direction],
        table: &'a [Vec<Option<GroupUnit>>],
        out: BTreeMap<PositionKey, AmplitudePoly>,
    }

    impl Enumeration<'_> {
        fn walk(
            &mut self,
            depth_left: u32,
            pos: PositionKey,
            prev_idx: usize,
            corners: u32,
            unit: GroupUnit,
        ) {
            if depth_left == 0 {
                self.out
                    .entry(pos)
                    .or_insert_with(AmplitudePoly::zero)
                    .add_unit_term(corners, unit);
                return;
            }
            for (next_idx, &next_dir) in self.dirs.iter().enumerate() {
                let (next_corners, next_unit) = match self.table[prev_idx][next_idx] {
                    None => (corners, unit),
                    Some(factor) => (corners + 1, unit * factor),
                };
                self.walk(
                    depth_left - 1,
                    advance(&pos, next_dir),
                    next_idx,
                    next_corners,
                    next_unit,
                );
            }
        }
    }

    let mut enumeration = Enumeration {
        dirs,
        table: &table,
        out: BTreeMap::new(),
    };
    enumeration.walk(steps, [0; 4], start.index(), 0, GroupUnit::One);
    let mut by_endpoint = enumeration.out;
    by_endpoint.retain(|_, poly| !poly.is_zero());
    Ok(by_endpoint)
}

pub fn brute_force_with_budget(
    query: &PathQuery,
    convention: WeightConvention,
    budget: u64,
) -> Result<AmplitudePoly, Error> {
    let all = brute_force_all(query.start, query.steps, convention, budget)?;
    Ok(position_key(query.endpoint())
        .and_then(|key| all.get(&key).cloned())
        .unwrap_or_else(AmplitudePoly::zero))
}

pub fn brute_force(query: &PathQuery, convention: WeightConvention) -> Result<AmplitudePoly, Error> {
    brute_force_with_budget(query, convention, DEFAULT_ENUMERATION_BUDGET)
}

/// Exact path counts by corner count for every reachable endpoint.
pub fn count_paths_all(
    start: Direction,
    steps: u32,
) -> Result<BTreeMap<PositionKey, BTreeMap<u32, BigUint>>, Error> {
    if steps == 0 {
        return Err(Error::NonPositive("steps"));
    }
    let dim = start.dim();
    let dirs = future_links(dim);

    let mut states: BTreeMap<(PositionKey, usize), BTreeMap<u32, BigUint>> = BTreeMap::new();
    states.insert(
        ([0; 4], start.index()),
        BTreeMap::from([(0u32, BigUint::one())]),
    );

    for _ in 0..steps {
        let mut next_states: BTreeMap<(PositionKey, usize), BTreeMap<u32, BigUint>> =
            BTreeMap::new();
        for ((pos, prev_idx), counts) in &states {
            for (next_idx, &next_dir) in dirs.iter().enumerate() {
                let shift = u32::from(next_idx != *prev_idx);
                let cell = next_states
                    .entry((advance(pos, next_dir), next_idx))
                    .or_default();
                for (corners, n) in counts {
                    *cell.entry(corners + shift).or_default() += n;
                }
            }
        }
        states = next_states;
    }

    let mut by_endpoint: BTreeMap<PositionKey, BTreeMap<u32, BigUint>> = BTreeMap::new();
    for ((pos, _), counts) in states {
        let cell = by_endpoint.entry(pos).or_default();
        for (corners, n) in counts {
            *cell.entry(corners).or_default() += n;
        }
    }
    Ok(by_endpoint)
}

/// Exact path counts by corner count for one endpoint; empty if unreachable.
pub fn count_paths(query: &PathQuery) -> Result<BTreeMap<u32, BigUint>, Error> {
    let all = count_paths_all(query.start, query.steps)?;
    Ok(position_key(query.endpoint())
        .and_then(|key| all.get(&key).cloned())
        .unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(half_units: &[i64]) -> LatticePoint {
        LatticePoint::from_half_units(half_units)
    }

    fn units(pairs: &[(u32, GroupUnit)]) -> AmplitudePoly {
        AmplitudePoly::from_coeffs(pairs.iter().map(|&(c, u)| (c, u.quaternion())))
    }

    #[test]
    fn straight_path_has_single_cornerless_term() {
        let query = PathQuery::new(Direction::F2, 7, point(&[7, 7, -7, -7])).unwrap();
        let poly = propagate(&query, WeightConvention::Signed).unwrap();
        assert_eq!(poly, AmplitudePoly::one());
    }

    #[test]
    fn two_step_amplitude_to_the_mixed_endpoint() {
        // Two paths reach F1+F2 from start F1: (F1, F2) with one corner of
        // weight k, and (F2, F1) with corners at both steps multiplying to 1.
        let query = PathQuery::new(Direction::F1, 2, point(&[2, 2, 0, 0])).unwrap();
        let signed = propagate(&query, WeightConvention::Signed).unwrap();
        assert_eq!(
            signed,
            units(&[(1, GroupUnit::K), (2, GroupUnit::One)])
        );
        let axis = propagate(&query, WeightConvention::Axis).unwrap();
        assert_eq!(
            axis,
            units(&[(1, GroupUnit::MinusK), (2, GroupUnit::MinusOne)])
        );
    }

    #[test]
    fn two_dimensional_worked_example() {
        // Start R, three steps, endpoint 2(1+i) + (1-i) = (3, 1).
        let query = PathQuery::new(Direction::R, 3, point(&[6, 2])).unwrap();
        let poly = propagate(&query, WeightConvention::Signed).unwrap();
        let expected = AmplitudePoly::from_coeffs([
            (1, -crate::algebra::Quaternion::unit_i()),
            (2, crate::algebra::Quaternion::from_integers(-2, 0, 0, 0)),
        ]);
        assert_eq!(poly, expected);
        // The convention toggle changes nothing in 2-D.
        assert_eq!(poly, propagate(&query, WeightConvention::Axis).unwrap());

        let counts = count_paths(&query).unwrap();
        assert_eq!(counts[&1], BigUint::from(1u32));
        assert_eq!(counts[&2], BigUint::from(2u32));
        assert_eq!(counts.len(), 2);
    }

    #[test]
    fn one_step_endpoints_in_two_dimensions() {
        let all = propagate_all(Direction::R, 1, WeightConvention::Signed).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[&[2, 2, 0, 0]], AmplitudePoly::one());
        assert_eq!(all[&[2, -2, 0, 0]], units(&[(1, GroupUnit::MinusI)]));
    }

    #[test]
    fn four_dimensional_counts() {
        let query = PathQuery::new(Direction::F1, 2, point(&[2, 2, 0, 0])).unwrap();
        let counts = count_paths(&query).unwrap();
        assert_eq!(counts[&1], BigUint::from(1u32));
        assert_eq!(counts[&2], BigUint::from(1u32));
        assert_eq!(counts.len(), 2);
    }

    #[test]
    fn counts_conserve_total_path_number() {
        for (start, steps, links) in [
            (Direction::R, 6u32, 2u128),
            (Direction::F3, 5, 4),
        ] {
            let all = count_paths_all(start, steps).unwrap();
            let total: BigUint = all
                .values()
                .flat_map(|counts| counts.values())
                .sum();
            assert_eq!(total, BigUint::from(links.pow(steps)));
        }
    }

    #[test]
    fn count_degree_never_exceeds_steps() {
        let all = count_paths_all(Direction::F1, 4).unwrap();
        for counts in all.values() {
            assert!(counts.keys().all(|&c| c <= 4));
        }
    }

    #[test]
    fn transfer_matches_enumeration() {
        for convention in [WeightConvention::Signed, WeightConvention::Axis] {
            for start in [Direction::F1, Direction::F2, Direction::F3, Direction::F4] {
                let fast = propagate_all(start, 4, convention).unwrap();
                let slow = brute_force_all(start, 4, convention, 1 << 20).unwrap();
                assert_eq!(fast, slow, "start {start}, {convention:?}");
            }
            let fast = propagate_all(Direction::R, 8, convention).unwrap();
            let slow = brute_force_all(Direction::R, 8, convention, 1 << 20).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let err = brute_force_all(Direction::F1, 20, WeightConvention::Signed, 1_000).unwrap_err();
        match err {
            Error::EnumerationBudget { required, budget } => {
                assert_eq!(required, 4u128.pow(20));
                assert_eq!(budget, 1_000);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unreachable_endpoints_give_zero() {
        let query = PathQuery::new(Direction::F1, 2, point(&[2, 0, 0, 0])).unwrap();
        assert!(propagate(&query, WeightConvention::Signed)
            .unwrap()
            .is_zero());
        assert!(count_paths(&query).unwrap().is_empty());

        // Off-slice endpoint: after 2 steps t is 1, not 1/2.
        let query = PathQuery::new(Direction::F1, 2, point(&[1, 1, 1, 1])).unwrap();
        assert!(propagate(&query, WeightConvention::Signed)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn query_validation() {
        assert!(matches!(
            PathQuery::new(Direction::R, 0, point(&[0, 0])),
            Err(Error::NonPositive("steps"))
        ));
        assert!(matches!(
            PathQuery::new(Direction::R, 1, point(&[1, 1, 1, 1])),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 4
            })
        ));
    }

    #[test]
    fn convention_parsing() {
        assert_eq!(
            "signed".parse::<WeightConvention>().unwrap(),
            WeightConvention::Signed
        );
        assert_eq!(
            "Axis".parse::<WeightConvention>().unwrap(),
            WeightConvention::Axis
        );
        assert!("fancy".parse::<WeightConvention>().is_err());
    }
}
