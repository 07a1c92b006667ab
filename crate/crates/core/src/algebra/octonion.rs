use std::fmt;
use std::ops::{Add, Neg};

use super::dyadic::Dyadic;

/// Coordinate vector over the octonion basis {1, e1, .., e7}.
///
/// Deliberately not an algebra: the basis is used only to coordinatize
/// 8-dimensional root vectors, so there is no octonion product here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OctonionVector {
    coords: [Dyadic; 8],
}

impl OctonionVector {
    pub fn new(coords: [Dyadic; 8]) -> Self {
        OctonionVector { coords }
    }

    pub fn zero() -> Self {
        OctonionVector::new(std::array::from_fn(|_| Dyadic::zero()))
    }

    /// Basis vector: axis 0 is the real unit, axes 1..=7 are e1..e7.
    pub fn unit(axis: usize, negative: bool) -> Self {
        let mut v = Self::zero();
        v.coords[axis] = if negative {
            Dyadic::integer(-1)
        } else {
            Dyadic::one()
        };
        v
    }

    pub fn coords(&self) -> &[Dyadic; 8] {
        &self.coords
    }

    pub fn norm_sq(&self) -> Dyadic {
        self.coords
            .iter()
            .fold(Dyadic::zero(), |acc, c| &acc + &c.square())
    }

    /// Scalar multiplication by 1/2.
    pub fn halve(&self) -> Self {
        OctonionVector::new(std::array::from_fn(|n| self.coords[n].times_pow2(-1)))
    }
}

impl Add for &OctonionVector {
    type Output = OctonionVector;

    fn add(self, rhs: &OctonionVector) -> OctonionVector {
        OctonionVector::new(std::array::from_fn(|n| &self.coords[n] + &rhs.coords[n]))
    }
}

impl Neg for &OctonionVector {
    type Output = OctonionVector;

    fn neg(self) -> OctonionVector {
        OctonionVector::new(std::array::from_fn(|n| -&self.coords[n]))
    }
}

impl fmt::Display for OctonionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, c) in self.coords.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for OctonionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_norm() {
        let e7 = OctonionVector::unit(7, false);
        assert_eq!(e7.norm_sq(), Dyadic::one());
        assert_eq!((-&e7).coords()[7], Dyadic::integer(-1));
    }

    #[test]
    fn halved_quadruple_has_unit_norm() {
        let v = &(&OctonionVector::unit(0, false) + &OctonionVector::unit(1, false))
            + &(&OctonionVector::unit(2, false) + &OctonionVector::unit(3, true));
        assert_eq!(v.norm_sq(), Dyadic::integer(4));
        assert_eq!(v.halve().norm_sq(), Dyadic::one());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = OctonionVector::unit(0, true);
        let b = OctonionVector::unit(1, true);
        // (-1, 0, ..) < (0, -1, 0, ..)
        assert!(a < b);
    }
}
