use std::fmt;

use num_bigint::BigInt;

use crate::algebra::Dyadic;
use crate::error::Error;

/// A point with dyadic coordinates, all lying in (1/2)·Z.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<Dyadic>,
}

impl LatticePoint {
    pub fn new(coords: Vec<Dyadic>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::malformed("lattice point", "empty coordinate list"));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_half_integer()) {
            return Err(Error::malformed("lattice point coordinate", bad.to_string()));
        }
        Ok(LatticePoint { coords })
    }

    /// Build from coordinates given in half-units (twice the value).
    pub fn from_half_units(half_units: &[i64]) -> Self {
        LatticePoint {
            coords: half_units.iter().map(|&h| Dyadic::half(h)).collect(),
        }
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint {
            coords: vec![Dyadic::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Dyadic] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Dyadic::is_zero)
    }

    /// Coordinates times 2, exact.
    pub fn half_units(&self) -> Vec<BigInt> {
        self.coords
            .iter()
            .map(|c| c.half_units().expect("coordinates lie in (1/2)Z"))
            .collect()
    }

    pub fn half_units_i64(&self) -> Option<Vec<i64>> {
        self.half_units()
            .into_iter()
            .map(|h| i64::try_from(h).ok())
            .collect()
    }

    pub fn norm_sq(&self) -> Dyadic {
        self.coords
            .iter()
            .fold(Dyadic::zero(), |acc, c| &acc + &c.square())
    }

    pub fn add(&self, rhs: &LatticePoint) -> Result<LatticePoint, Error> {
        self.check_dim(rhs)?;
        Ok(LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &LatticePoint) -> Result<LatticePoint, Error> {
        self.check_dim(rhs)?;
        Ok(LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn double(&self) -> LatticePoint {
        LatticePoint {
            coords: self.coords.iter().map(|c| c.times_pow2(1)).collect(),
        }
    }

    /// Decimal coordinate strings, e.g. `["0.5", "-1", "1.5", "0"]`.
    pub fn decimal_coords(&self) -> Vec<String> {
        self.coords
            .iter()
            .map(|c| c.to_decimal_string().expect("coordinates lie in (1/2)Z"))
            .collect()
    }

    fn check_dim(&self, rhs: &LatticePoint) -> Result<(), Error> {
        if self.dim() == rhs.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: rhs.dim(),
            })
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.decimal_coords().join(", "))
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Minkowski interval `c_sq·t² - Σ spatial²` with the first coordinate as
/// time; defined for the 2- and 4-dimensional checkerboards.
pub fn minkowski_norm(p: &LatticePoint, c_sq: &Dyadic) -> Result<Dyadic, Error> {
    if p.dim() != 2 && p.dim() != 4 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let time = &p.coords()[0].square() * c_sq;
    let space = p.coords()[1..]
        .iter()
        .fold(Dyadic::zero(), |acc, c| &acc + &c.square());
    Ok(&time - &space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(half_units: &[i64]) -> LatticePoint {
        LatticePoint::from_half_units(half_units)
    }

    #[test]
    fn rejects_non_half_integer_coordinates() {
        let bad = LatticePoint::new(vec![Dyadic::new(1, 2)]);
        assert!(bad.is_err());
        assert!(LatticePoint::new(vec![]).is_err());
        assert!(LatticePoint::new(vec![Dyadic::half(3)]).is_ok());
    }

    #[test]
    fn arithmetic_and_rendering() {
        let a = pt(&[1, 1, 1, 1]);
        let b = pt(&[1, 1, -1, -1]);
        assert_eq!(a.add(&b).unwrap(), pt(&[2, 2, 0, 0]));
        assert_eq!(a.double(), pt(&[2, 2, 2, 2]));
        assert_eq!(a.decimal_coords(), ["0.5", "0.5", "0.5", "0.5"]);
        assert_eq!(pt(&[2, -3]).to_string(), "(1, -1.5)");
        assert!(a.add(&pt(&[0, 0])).is_err());
    }

    #[test]
    fn minkowski_norm_on_lightcone_links() {
        // 4-d link at c² = 3: 3·(1/2)² - 3·(1/2)² = 0.
        let link = pt(&[1, 1, 1, 1]);
        assert_eq!(
            minkowski_norm(&link, &Dyadic::integer(3)).unwrap(),
            Dyadic::zero()
        );
        // 2-d link at c² = 1.
        let flat = pt(&[2, 2]);
        assert_eq!(
            minkowski_norm(&flat, &Dyadic::one()).unwrap(),
            Dyadic::zero()
        );
        // Straight timelike unit at c² = 3 gives 3.
        let tick = pt(&[2, 0, 0, 0]);
        assert_eq!(
            minkowski_norm(&tick, &Dyadic::integer(3)).unwrap(),
            Dyadic::integer(3)
        );
        assert_eq!(
            minkowski_norm(&pt(&[2, 0, 0]), &Dyadic::one()),
            Err(Error::UnsupportedDimension(3))
        );
    }
}
