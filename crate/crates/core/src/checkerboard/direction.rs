use std::fmt;
use std::str::FromStr;

use crate::algebra::Quaternion;
use crate::error::Error;

use super::group::{Axis, GroupUnit};

/// Checkerboard dimension: 1+1 or 3+1 spacetime.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Dim {
    Two,
    Four,
}

impl Dim {
    pub fn as_usize(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Four => 4,
        }
    }

    pub fn try_from_usize(dim: usize) -> Result<Dim, Error> {
        match dim {
            2 => Ok(Dim::Two),
            4 => Ok(Dim::Four),
            other => Err(Error::UnsupportedDimension(other)),
        }
    }
}

/// A future-pointing link direction.
///
/// `R` and `L` are the two 2-D zigzag moves `1 ± i`; `F1..F4` are the four
/// 4-D lightcone links `(1 ± i ± j ± k)/2` with an even number of minus
/// signs among the last two components.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Direction {
    R,
    L,
    F1,
    F2,
    F3,
    F4,
}

const FUTURE_2: [Direction; 2] = [Direction::R, Direction::L];
const FUTURE_4: [Direction; 4] = [Direction::F1, Direction::F2, Direction::F3, Direction::F4];

/// The future-pointing directions for a dimension, in canonical order.
pub fn future_links(dim: Dim) -> &'static [Direction] {
    match dim {
        Dim::Two => &FUTURE_2,
        Dim::Four => &FUTURE_4,
    }
}

impl Direction {
    pub fn dim(self) -> Dim {
        match self {
            Direction::R | Direction::L => Dim::Two,
            _ => Dim::Four,
        }
    }

    /// Index within `future_links(self.dim())`.
    pub fn index(self) -> usize {
        match self {
            Direction::R | Direction::F1 => 0,
            Direction::L | Direction::F2 => 1,
            Direction::F3 => 2,
            Direction::F4 => 3,
        }
    }

    /// The link as a quaternion (time along the real axis).
    pub fn link(self) -> Quaternion {
        match self {
            Direction::R => Quaternion::from_integers(1, 1, 0, 0),
            Direction::L => Quaternion::from_integers(1, -1, 0, 0),
            Direction::F1 => Quaternion::from_halves(1, 1, 1, 1),
            Direction::F2 => Quaternion::from_halves(1, 1, -1, -1),
            Direction::F3 => Quaternion::from_halves(1, -1, 1, -1),
            Direction::F4 => Quaternion::from_halves(1, -1, -1, 1),
        }
    }

    /// Displacement in half-units over (t, x, y, z); 2-D uses the first two.
    pub fn displacement_half_units(self) -> [i64; 4] {
        match self {
            Direction::R => [2, 2, 0, 0],
            Direction::L => [2, -2, 0, 0],
            Direction::F1 => [1, 1, 1, 1],
            Direction::F2 => [1, 1, -1, -1],
            Direction::F3 => [1, -1, 1, -1],
            Direction::F4 => [1, -1, -1, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::R => "R",
            Direction::L => "L",
            Direction::F1 => "F1",
            Direction::F2 => "F2",
            Direction::F3 => "F3",
            Direction::F4 => "F4",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "R" => Ok(Direction::R),
            "L" => Ok(Direction::L),
            "F1" => Ok(Direction::F1),
            "F2" => Ok(Direction::F2),
            "F3" => Ok(Direction::F3),
            "F4" => Ok(Direction::F4),
            _ => Err(Error::malformed("direction", s)),
        }
    }
}

/// The unit picked up at a lattice site, classified by shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TurnFactor {
    /// No direction change; the factor is 1.
    Straight,
    /// A corner; the factor is `±axis`.
    Turn { axis: Axis, negative: bool },
}

impl TurnFactor {
    pub fn group_unit(self) -> GroupUnit {
        match self {
            TurnFactor::Straight => GroupUnit::One,
            TurnFactor::Turn { axis, negative } => {
                let unit = match axis {
                    Axis::I => GroupUnit::I,
                    Axis::J => GroupUnit::J,
                    Axis::K => GroupUnit::K,
                };
                if negative {
                    unit.negate()
                } else {
                    unit
                }
            }
        }
    }

    pub fn quaternion(self) -> Quaternion {
        self.group_unit().quaternion()
    }
}

/// The unit `u` with `u · prev = next`, i.e. `next · conj(prev) / |prev|²`.
///
/// For any pair of same-dimension future links this is 1 (straight) or a
/// signed imaginary axis (corner); the real part can never survive a genuine
/// direction change because distinct links are never parallel.
pub fn turn_factor(prev: Direction, next: Direction) -> Result<TurnFactor, Error> {
    if prev.dim() != next.dim() {
        return Err(Error::MixedDimensions);
    }
    if prev == next {
        return Ok(TurnFactor::Straight);
    }
    let prev_link = prev.link();
    let mut q = &next.link() * &prev_link.conj();
    // |prev|² is 1 in 4-D and 2 in 2-D.
    if prev.dim() == Dim::Two {
        q = q.times_pow2(-1);
    }
    let unit = GroupUnit::from_quaternion(&q)
        .expect("turn factor of future links is always a group unit");
    match unit.axis() {
        Some(axis) => Ok(TurnFactor::Turn {
            axis,
            negative: unit.is_negative(),
        }),
        None => unreachable!("distinct future links never differ by a real unit"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn links_have_expected_norms() {
        use crate::algebra::Dyadic;
        for d in future_links(Dim::Four) {
            assert_eq!(d.link().norm_sq(), Dyadic::one());
        }
        for d in future_links(Dim::Two) {
            assert_eq!(d.link().norm_sq(), Dyadic::integer(2));
        }
    }

    #[test]
    fn turn_factor_reproduces_left_translation() {
        for dim in [Dim::Two, Dim::Four] {
            for &prev in future_links(dim) {
                for &next in future_links(dim) {
                    let factor = turn_factor(prev, next).unwrap().quaternion();
                    assert_eq!(&factor * &prev.link(), next.link(), "{prev} -> {next}");
                }
            }
        }
    }

    #[test]
    fn frozen_turn_factors() {
        use GroupUnit::*;
        let tf = |p, n| turn_factor(p, n).unwrap().group_unit();
        assert_eq!(tf(Direction::F1, Direction::F2), MinusK);
        assert_eq!(tf(Direction::F2, Direction::F1), K);
        assert_eq!(tf(Direction::F1, Direction::F3), MinusI);
        assert_eq!(tf(Direction::F1, Direction::F4), MinusJ);
        assert_eq!(tf(Direction::F1, Direction::F1), One);
        assert_eq!(tf(Direction::R, Direction::L), MinusI);
        assert_eq!(tf(Direction::L, Direction::R), I);
    }

    #[test]
    fn each_start_sees_every_axis_once() {
        use std::collections::BTreeSet;
        for &prev in future_links(Dim::Four) {
            let mut axes = BTreeSet::new();
            let mut straights = 0;
            for &next in future_links(Dim::Four) {
                match turn_factor(prev, next).unwrap() {
                    TurnFactor::Straight => straights += 1,
                    TurnFactor::Turn { axis, .. } => {
                        axes.insert(axis);
                    }
                }
            }
            assert_eq!(straights, 1);
            assert_eq!(axes.len(), 3, "turns from {prev} must cover all axes");
        }
    }

    #[test]
    fn mixed_dimensions_are_rejected() {
        assert!(matches!(
            turn_factor(Direction::R, Direction::F1),
            Err(Error::MixedDimensions)
        ));
    }

    #[test]
    fn direction_parsing_and_display() {
        assert_eq!("f3".parse::<Direction>().unwrap(), Direction::F3);
        assert_eq!("R".parse::<Direction>().unwrap(), Direction::R);
        assert!("F5".parse::<Direction>().is_err());
        assert_eq!(Direction::F2.to_string(), "F2");
    }

    #[test]
    fn displacements_match_links() {
        for d in [
            Direction::R,
            Direction::L,
            Direction::F1,
            Direction::F2,
            Direction::F3,
            Direction::F4,
        ] {
            let h = d.displacement_half_units();
            let link = d.link();
            let comps = link.components();
            for (axis, c) in comps.iter().enumerate() {
                let expected = c.half_units().expect("links are half-integer");
                assert_eq!(expected, h[axis].into(), "{d} axis {axis}");
            }
        }
    }
}
