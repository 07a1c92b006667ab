use std::collections::BTreeSet;

use crate::algebra::OctonionVector;

/// The 240 unit roots with their construction stratum sizes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootList {
    pub dim: usize,
    pub points: Vec<OctonionVector>,
    pub strata: [usize; 3],
}

// Quadruple supports over the basis {1, e1, .., e7}; index 0 is the real
// unit. First the six supports whose sign span contributes 96 roots, then
// the eight supports contributing 128.
const QUADS_96: [[usize; 4]; 6] = [
    [0, 1, 2, 3],
    [0, 2, 5, 7],
    [0, 2, 4, 6],
    [4, 5, 6, 7],
    [1, 3, 4, 6],
    [1, 3, 5, 7],
];

const QUADS_128: [[usize; 4]; 8] = [
    [0, 3, 4, 7],
    [0, 1, 5, 6],
    [0, 3, 6, 7],
    [0, 1, 4, 7],
    [1, 2, 6, 7],
    [2, 3, 4, 7],
    [1, 2, 4, 5],
    [2, 3, 5, 6],
];

/// The 240 E8 roots in octonion coordinates: 16 basis units plus all sign
/// choices over fourteen listed quadruple supports, each divided by 2.
/// Points are returned sorted lexicographically.
pub fn e8_roots() -> RootList {
    let mut points: BTreeSet<OctonionVector> = BTreeSet::new();

    let mut unit_count = 0usize;
    for axis in 0..8 {
        for negative in [false, true] {
            if points.insert(OctonionVector::unit(axis, negative)) {
                unit_count += 1;
            }
        }
    }

    let mut mid_count = 0usize;
    for quad in QUADS_96 {
        for signs in 0u8..16 {
            if points.insert(signed_quadruple(quad, signs)) {
                mid_count += 1;
            }
        }
    }

    let mut outer_count = 0usize;
    for quad in QUADS_128 {
        for signs in 0u8..16 {
            if points.insert(signed_quadruple(quad, signs)) {
                outer_count += 1;
            }
        }
    }

    RootList {
        dim: 8,
        points: points.into_iter().collect(),
        strata: [unit_count, mid_count, outer_count],
    }
}

fn signed_quadruple(support: [usize; 4], signs: u8) -> OctonionVector {
    let mut v = OctonionVector::zero();
    for (bit, axis) in support.into_iter().enumerate() {
        v = &v + &OctonionVector::unit(axis, signs & (1 << bit) != 0);
    }
    v.halve()
}
