use crate::algebra::Dyadic;
use crate::error::Error;

use super::point::LatticePoint;

/// One point-set identity compared over the scan box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Points in the named lattice but missing from the composed side.
    pub only_in_whole: Vec<LatticePoint>,
    /// Points on the composed side that the named lattice lacks.
    pub only_in_split: Vec<LatticePoint>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionReport {
    pub box_radius: Dyadic,
    pub candidates: u64,
    /// D_8 compared against (D_4 ⊕ D_4) ∪ (diag + D_4 ⊕ D_4),
    /// diag = (1,0,0,0,1,0,0,0). Expected to hold.
    pub d8_as_d4_pairs: IdentityCheck,
    /// D_8 ∪ (glue + D_8) compared against 4HD ⊕ 4HD. Expected to fail
    /// in both directions.
    pub e8_as_hyperdiamond_pairs: IdentityCheck,
}

impl DecompositionReport {
    /// In the whole lattice, missing from the composed side.
    pub fn diagonal_witness() -> LatticePoint {
        LatticePoint::from_half_units(&[2, 0, 0, 0, 2, 0, 0, 0])
    }

    /// On the composed side, missing from the whole lattice.
    pub fn half_glue_witness() -> LatticePoint {
        LatticePoint::from_half_units(&[1, 1, 1, 1, 0, 0, 0, 0])
    }

    /// The known outcome: the D_8 identity verifies, the E_8 identity fails
    /// in both directions with the two canonical witnesses present.
    pub fn matches_expected_shape(&self) -> bool {
        self.d8_as_d4_pairs.holds
            && !self.e8_as_hyperdiamond_pairs.holds
            && self
                .e8_as_hyperdiamond_pairs
                .only_in_whole
                .contains(&Self::diagonal_witness())
            && self
                .e8_as_hyperdiamond_pairs
                .only_in_split
                .contains(&Self::half_glue_witness())
    }
}

/// Compare both decomposition identities over every half-integer point with
/// all |coordinates| <= box_radius, reporting membership disagreements.
///
/// Every member of either side of either identity has each coordinate
/// 4-block entirely integer or entirely half-odd, so the scan enumerates
/// exactly those block pairs; all other box points belong to neither side
/// and cannot disagree.
pub fn decomposition_harness(box_radius: &Dyadic) -> Result<DecompositionReport, Error> {
    if box_radius.is_negative() {
        return Err(Error::malformed("box radius", box_radius.to_string()));
    }
    if *box_radius > Dyadic::integer(2) {
        return Err(Error::BoxRadiusTooLarge(box_radius.to_string()));
    }
    let r2 = i64::try_from(box_radius.times_pow2(1).floor()).expect("radius is at most 2");

    let blocks = uniform_parity_blocks(r2);
    let mut candidates = 0u64;
    let mut d8_check = IdentityCheck {
        holds: true,
        only_in_whole: Vec::new(),
        only_in_split: Vec::new(),
    };
    let mut e8_check = d8_check.clone();

    let mut p = [0i64; 8];
    for first in &blocks {
        p[..4].copy_from_slice(first);
        for second in &blocks {
            p[4..].copy_from_slice(second);
            candidates += 1;

            record(&mut d8_check, &p, d8(&p), d4_pair_with_diagonal(&p));
            record(&mut e8_check, &p, d8_glued(&p), hd4(first) && hd4(second));
        }
    }

    Ok(DecompositionReport {
        box_radius: box_radius.clone(),
        candidates,
        d8_as_d4_pairs: d8_check,
        e8_as_hyperdiamond_pairs: e8_check,
    })
}

fn record(check: &mut IdentityCheck, p: &[i64; 8], in_whole: bool, in_split: bool) {
    if in_whole == in_split {
        return;
    }
    check.holds = false;
    let point = LatticePoint::from_half_units(p);
    if in_whole {
        check.only_in_whole.push(point);
    } else {
        check.only_in_split.push(point);
    }
}

/// All 4-blocks within the box whose half-unit coordinates share one parity,
/// in ascending lexicographic order.
fn uniform_parity_blocks(r2: i64) -> Vec<[i64; 4]> {
    let mut blocks = Vec::new();
    let mut b = [-r2; 4];
    loop {
        let evens = b.iter().filter(|&&x| x % 2 == 0).count();
        if evens == 4 || evens == 0 {
            blocks.push(b);
        }
        let mut idx = 3;
        loop {
            b[idx] += 1;
            if b[idx] <= r2 {
                break;
            }
            b[idx] = -r2;
            if idx == 0 {
                return blocks;
            }
            idx -= 1;
        }
    }
}

fn d_n(h: &[i64]) -> bool {
    h.iter().all(|&x| x % 2 == 0) && h.iter().sum::<i64>().rem_euclid(4) == 0
}

fn glued(h: &[i64]) -> bool {
    h.iter().all(|&x| x % 2 != 0)
        && (h.iter().sum::<i64>() - h.len() as i64).rem_euclid(4) == 0
}

fn d8(p: &[i64; 8]) -> bool {
    d_n(p)
}

fn d8_glued(p: &[i64; 8]) -> bool {
    d_n(p) || glued(p)
}

fn hd4(b: &[i64; 4]) -> bool {
    d_n(b) || glued(b)
}

fn d4_pair(p: &[i64; 8]) -> bool {
    d_n(&p[..4]) && d_n(&p[4..])
}

fn d4_pair_with_diagonal(p: &[i64; 8]) -> bool {
    if d4_pair(p) {
        return true;
    }
    let mut shifted = *p;
    shifted[0] -= 2;
    shifted[4] -= 2;
    d4_pair(&shifted)
}
