use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Dyadic;
use crate::error::Error;

use super::point::LatticePoint;

/// A lattice (or packing) membership rule.
///
/// `Checkerboard(n)` is D_n: integer coordinates with even sum.
/// `HyperDiamond(n)` is nHD = D_n ∪ (glue + D_n) with glue = (0.5, .., 0.5).
/// `GluedCoset` is the general form of that construction: base ∪ (glue + base).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LatticeSpec {
    Hypercubic(usize),
    Checkerboard(usize),
    HyperDiamond(usize),
    GluedCoset {
        base: Box<LatticeSpec>,
        glue: LatticePoint,
    },
}

impl LatticeSpec {
    pub fn dim(&self) -> usize {
        match self {
            LatticeSpec::Hypercubic(n)
            | LatticeSpec::Checkerboard(n)
            | LatticeSpec::HyperDiamond(n) => *n,
            LatticeSpec::GluedCoset { base, .. } => base.dim(),
        }
    }

    /// The all-halves glue vector (0.5, .., 0.5) in dimension n.
    pub fn glue_vector(n: usize) -> LatticePoint {
        LatticePoint::from_half_units(&vec![1; n])
    }

    /// Exact membership test.
    pub fn contains(&self, p: &LatticePoint) -> Result<bool, Error> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        Ok(match self {
            LatticeSpec::Hypercubic(_) => p.coords().iter().all(Dyadic::is_integer),
            LatticeSpec::Checkerboard(_) => checkerboard_member(&p.half_units()),
            LatticeSpec::HyperDiamond(_) => {
                let hu = p.half_units();
                checkerboard_member(&hu)
                    || checkerboard_member(&shift_by_glue(&hu))
            }
            LatticeSpec::GluedCoset { base, glue } => {
                base.contains(p)? || base.contains(&p.sub(glue)?)?
            }
        })
    }
}

// Membership in half-units: integer coordinates are even half-units, and the
// coordinate sum is even exactly when the half-unit sum is divisible by 4.
fn checkerboard_member(half_units: &[BigInt]) -> bool {
    let mut sum = BigInt::zero();
    for h in half_units {
        if h.bit(0) {
            return false;
        }
        sum += h;
    }
    !sum.bit(0) && !sum.bit(1)
}

fn shift_by_glue(half_units: &[BigInt]) -> Vec<BigInt> {
    half_units.iter().map(|h| h - 1).collect()
}
