use std::collections::BTreeSet;

use crate::error::Error;

use super::point::LatticePoint;
use super::spec::LatticeSpec;

/// Minimal-norm nonzero members of the lattice, in lexicographic order.
///
/// Enumerates the half-integer box of radius 1.5, which contains the minimal
/// vectors of every supported family up to dimension 8.
pub fn nearest_neighbors(spec: &LatticeSpec) -> Result<Vec<LatticePoint>, Error> {
    let n = spec.dim();
    if n == 0 || n > 8 {
        return Err(Error::UnsupportedDimension(n));
    }
    let member = half_unit_predicate(spec)?;

    // Quarter-unit squared norms keep the scan in plain integers.
    let mut best: Option<i64> = None;
    let mut found: Vec<Vec<i64>> = Vec::new();
    for_each_box_point(n, 3, |h| {
        if h.iter().all(|&x| x == 0) || !member(h) {
            return;
        }
        let q: i64 = h.iter().map(|&x| x * x).sum();
        match best {
            Some(b) if q > b => {}
            Some(b) if q == b => found.push(h.to_vec()),
            _ => {
                best = Some(q);
                found = vec![h.to_vec()];
            }
        }
    });

    // Visit order is ascending lexicographic, so `found` is already sorted.
    Ok(found
        .into_iter()
        .map(|h| LatticePoint::from_half_units(&h))
        .collect())
}

/// The second shell of 4HD: all two-link sums at minimal nonzero norm.
/// Doubled links (u+u) land on the third shell and are excluded by the
/// norm filter; opposite links cancel to the origin and are excluded too.
pub fn next_nearest_4hd() -> Vec<LatticePoint> {
    let links = nearest_neighbors(&LatticeSpec::HyperDiamond(4)).expect("dimension 4 is supported");
    let mut sums: BTreeSet<LatticePoint> = BTreeSet::new();
    for u in &links {
        for v in &links {
            let s = u.add(v).expect("links share one dimension");
            if !s.is_origin() {
                sums.insert(s);
            }
        }
    }
    let min = sums
        .iter()
        .map(LatticePoint::norm_sq)
        .min()
        .expect("two-link sums are nonempty");
    sums.into_iter().filter(|p| p.norm_sq() == min).collect()
}

/// Whether every nearest-neighbor link of the origin can be continued:
/// u a member and 2u a member. True exactly for even-dimensional
/// HyperDiamond constructions (lattices); odd ones are mere packings.
pub fn is_extension_closed(spec: &LatticeSpec) -> Result<bool, Error> {
    let n = match spec {
        LatticeSpec::HyperDiamond(n) => *n,
        other => return Err(Error::UnsupportedKind(format!("{other:?}"))),
    };
    if n == 0 || n > 8 {
        return Err(Error::UnsupportedDimension(n));
    }
    for link in nearest_neighbors(spec)? {
        if !spec.contains(&link.double())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ascending-lexicographic scan of {-radius, .., radius}^n in half-units.
fn for_each_box_point(n: usize, radius: i64, mut visit: impl FnMut(&[i64])) {
    let mut h = vec![-radius; n];
    loop {
        visit(&h);
        let mut idx = n - 1;
        loop {
            h[idx] += 1;
            if h[idx] <= radius {
                break;
            }
            h[idx] = -radius;
            if idx == 0 {
                return;
            }
            idx -= 1;
        }
    }
}

/// Membership test over i64 half-unit coordinates.
type MembershipTest = Box<dyn Fn(&[i64]) -> bool>;

/// Compile a membership test over i64 half-unit coordinates.
fn half_unit_predicate(spec: &LatticeSpec) -> Result<MembershipTest, Error> {
    Ok(match spec {
        LatticeSpec::Hypercubic(_) => Box::new(|h| h.iter().all(|&x| x % 2 == 0)),
        LatticeSpec::Checkerboard(_) => Box::new(d_member),
        LatticeSpec::HyperDiamond(_) => Box::new(|h| d_member(h) || glue_coset_member(h)),
        LatticeSpec::GluedCoset { base, glue } => {
            let inner = half_unit_predicate(base)?;
            let g = glue
                .half_units_i64()
                .ok_or_else(|| Error::malformed("glue vector", glue.to_string()))?;
            Box::new(move |h| {
                if inner(h) {
                    return true;
                }
                let shifted: Vec<i64> = h.iter().zip(&g).map(|(a, b)| a - b).collect();
                inner(&shifted)
            })
        }
    })
}

// D_n in half-units: all coordinates even and the coordinate sum even,
// i.e. the half-unit sum divisible by 4.
fn d_member(h: &[i64]) -> bool {
    h.iter().all(|&x| x % 2 == 0) && h.iter().sum::<i64>().rem_euclid(4) == 0
}

// glue + D_n: all coordinates odd half-units and (h - 1) summing to 0 mod 4.
fn glue_coset_member(h: &[i64]) -> bool {
    h.iter().all(|&x| x % 2 != 0)
        && (h.iter().sum::<i64>() - h.len() as i64).rem_euclid(4) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(half_units: &[i64]) -> LatticePoint {
        LatticePoint::from_half_units(half_units)
    }

    fn sorted(mut points: Vec<LatticePoint>) -> Vec<LatticePoint> {
        points.sort();
        points
    }

    #[test]
    fn hyperdiamond_4_links() {
        let got = nearest_neighbors(&LatticeSpec::HyperDiamond(4)).unwrap();
        let expected = sorted(
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
            .map(|h| pt(h))
            .collect(),
        );
        assert_eq!(got, expected);
        for link in &got {
            assert_eq!(link.norm_sq(), crate::algebra::Dyadic::one());
        }
    }

    #[test]
    fn d4_links_are_the_24_cell() {
        let got = nearest_neighbors(&LatticeSpec::Checkerboard(4)).unwrap();
        // Independent enumeration: integer vectors of squared norm 2.
        let mut expected = Vec::new();
        for a in -1i64..=1 {
            for b in -1i64..=1 {
                for c in -1i64..=1 {
                    for d in -1i64..=1 {
                        if a * a + b * b + c * c + d * d == 2 {
                            expected.push(pt(&[2 * a, 2 * b, 2 * c, 2 * d]));
                        }
                    }
                }
            }
        }
        assert_eq!(got.len(), 24);
        assert_eq!(got, sorted(expected));
    }

    #[test]
    fn hypercubic_links_are_unit_vectors() {
        let got = nearest_neighbors(&LatticeSpec::Hypercubic(4)).unwrap();
        assert_eq!(got.len(), 8);
        assert!(got.contains(&pt(&[2, 0, 0, 0])));
        assert!(got.contains(&pt(&[0, 0, 0, -2])));
    }

    #[test]
    fn hyperdiamond_3_links_are_the_four_diamond_bonds() {
        let got = nearest_neighbors(&LatticeSpec::HyperDiamond(3)).unwrap();
        let expected = sorted(
            [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
                .iter()
                .map(|h| pt(h))
                .collect(),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn hyperdiamond_8_has_240_minimal_vectors() {
        let got = nearest_neighbors(&LatticeSpec::HyperDiamond(8)).unwrap();
        assert_eq!(got.len(), 240);
        // 112 from D_8, 128 from the glue coset.
        let halves = got
            .iter()
            .filter(|p| p.coords().iter().all(|c| !c.is_integer()))
            .count();
        assert_eq!(halves, 128);
    }

    #[test]
    fn next_nearest_shell_is_the_24_cell() {
        let got = next_nearest_4hd();
        assert_eq!(got.len(), 24);
        assert_eq!(
            got,
            nearest_neighbors(&LatticeSpec::Checkerboard(4)).unwrap()
        );
        assert!(got.contains(&pt(&[2, 2, 0, 0])));
        // Doubled links are further out than the second shell.
        assert!(!got.contains(&pt(&[2, 2, 2, 2])));
    }

    #[test]
    fn extension_closure_by_parity_of_dimension() {
        assert!(is_extension_closed(&LatticeSpec::HyperDiamond(4)).unwrap());
        assert!(is_extension_closed(&LatticeSpec::HyperDiamond(8)).unwrap());
        assert!(!is_extension_closed(&LatticeSpec::HyperDiamond(3)).unwrap());
        assert!(is_extension_closed(&LatticeSpec::HyperDiamond(2)).unwrap());
        assert!(!is_extension_closed(&LatticeSpec::HyperDiamond(5)).unwrap());
        assert!(matches!(
            is_extension_closed(&LatticeSpec::Checkerboard(4)),
            Err(Error::UnsupportedKind(_))
        ));
        assert_eq!(
            is_extension_closed(&LatticeSpec::HyperDiamond(9)),
            Err(Error::UnsupportedDimension(9))
        );
    }

    #[test]
    fn glued_coset_predicate_matches_exact_membership() {
        let spec = LatticeSpec::GluedCoset {
            base: Box::new(LatticeSpec::Checkerboard(4)),
            glue: LatticeSpec::glue_vector(4),
        };
        let links = nearest_neighbors(&spec).unwrap();
        assert_eq!(
            links,
            nearest_neighbors(&LatticeSpec::HyperDiamond(4)).unwrap()
        );
    }
}
