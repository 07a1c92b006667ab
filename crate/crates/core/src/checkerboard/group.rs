use std::collections::BTreeSet;

use crate::algebra::Quaternion;

/// Imaginary axis of a turn.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Axis {
    I,
    J,
    K,
}

/// The eight unit quaternions {±1, ±i, ±j, ±k}.
///
/// Path weights only ever multiply elements of this group, so the engine
/// tracks them symbolically instead of through full quaternion products.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum GroupUnit {
    One,
    MinusOne,
    I,
    MinusI,
    J,
    MinusJ,
    K,
    MinusK,
}

// Basis products over (1, i, j, k): BASIS_MUL[a][b] = (negative, basis index).
const BASIS_MUL: [[(bool, usize); 4]; 4] = [
    [(false, 0), (false, 1), (false, 2), (false, 3)],
    [(false, 1), (true, 0), (false, 3), (true, 2)],
    [(false, 2), (true, 3), (true, 0), (false, 1)],
    [(false, 3), (false, 2), (true, 1), (true, 0)],
];

impl GroupUnit {
    pub const ALL: [GroupUnit; 8] = [
        GroupUnit::One,
        GroupUnit::MinusOne,
        GroupUnit::I,
        GroupUnit::MinusI,
        GroupUnit::J,
        GroupUnit::MinusJ,
        GroupUnit::K,
        GroupUnit::MinusK,
    ];

    fn decompose(self) -> (bool, usize) {
        match self {
            GroupUnit::One => (false, 0),
            GroupUnit::MinusOne => (true, 0),
            GroupUnit::I => (false, 1),
            GroupUnit::MinusI => (true, 1),
            GroupUnit::J => (false, 2),
            GroupUnit::MinusJ => (true, 2),
            GroupUnit::K => (false, 3),
            GroupUnit::MinusK => (true, 3),
        }
    }

    fn compose(negative: bool, basis: usize) -> GroupUnit {
        match (negative, basis) {
            (false, 0) => GroupUnit::One,
            (true, 0) => GroupUnit::MinusOne,
            (false, 1) => GroupUnit::I,
            (true, 1) => GroupUnit::MinusI,
            (false, 2) => GroupUnit::J,
            (true, 2) => GroupUnit::MinusJ,
            (false, 3) => GroupUnit::K,
            (true, 3) => GroupUnit::MinusK,
            _ => unreachable!("basis index is 0..4"),
        }
    }

    pub fn negate(self) -> GroupUnit {
        let (s, b) = self.decompose();
        GroupUnit::compose(!s, b)
    }

    pub fn is_negative(self) -> bool {
        self.decompose().0
    }

    pub fn axis(self) -> Option<Axis> {
        match self.decompose().1 {
            0 => None,
            1 => Some(Axis::I),
            2 => Some(Axis::J),
            _ => Some(Axis::K),
        }
    }

    pub fn quaternion(self) -> Quaternion {
        let (negative, basis) = self.decompose();
        let sign = if negative { -1 } else { 1 };
        match basis {
            0 => Quaternion::from_integers(sign, 0, 0, 0),
            1 => Quaternion::from_integers(0, sign, 0, 0),
            2 => Quaternion::from_integers(0, 0, sign, 0),
            _ => Quaternion::from_integers(0, 0, 0, sign),
        }
    }

    pub fn from_quaternion(q: &Quaternion) -> Option<GroupUnit> {
        GroupUnit::ALL.into_iter().find(|u| u.quaternion() == *q)
    }
}

impl std::ops::Mul for GroupUnit {
    type Output = GroupUnit;

    fn mul(self, rhs: GroupUnit) -> GroupUnit {
        let (sa, ba) = self.decompose();
        let (sb, bb) = rhs.decompose();
        let (sp, bp) = BASIS_MUL[ba][bb];
        GroupUnit::compose(sa ^ sb ^ sp, bp)
    }
}

/// `q · u` for a group unit `u`, as a component shuffle.
pub fn right_mul_unit(q: &Quaternion, u: GroupUnit) -> Quaternion {
    let (a, b, c, d) = (&q.re, &q.i, &q.j, &q.k);
    match u {
        GroupUnit::One => q.clone(),
        GroupUnit::MinusOne => -q,
        GroupUnit::I => Quaternion::new(-b, a.clone(), d.clone(), -c),
        GroupUnit::MinusI => Quaternion::new(b.clone(), -a, -d, c.clone()),
        GroupUnit::J => Quaternion::new(-c, -d, a.clone(), b.clone()),
        GroupUnit::MinusJ => Quaternion::new(c.clone(), d.clone(), -a, -b),
        GroupUnit::K => Quaternion::new(-d, c.clone(), -b, a.clone()),
        GroupUnit::MinusK => Quaternion::new(d.clone(), -c, b.clone(), -a),
    }
}

/// The 8 lightcone links: 4 future, then 4 past, in canonical order.
pub fn lightcone_links() -> [Quaternion; 8] {
    [
        Quaternion::from_halves(1, 1, 1, 1),
        Quaternion::from_halves(1, 1, -1, -1),
        Quaternion::from_halves(1, -1, 1, -1),
        Quaternion::from_halves(1, -1, -1, 1),
        Quaternion::from_halves(-1, -1, 1, 1),
        Quaternion::from_halves(-1, 1, -1, 1),
        Quaternion::from_halves(-1, 1, 1, -1),
        Quaternion::from_halves(-1, -1, -1, -1),
    ]
}

/// All group units `u` with `u · prev = next`.
pub fn left_translators(prev: &Quaternion, next: &Quaternion) -> Vec<GroupUnit> {
    GroupUnit::ALL
        .into_iter()
        .filter(|u| &u.quaternion() * prev == *next)
        .collect()
}

/// The multiplicative closure of the 8 lightcone links: the 24 Hurwitz
/// units, a copy of the binary tetrahedral group.
///
/// Products of exactly two links fill only one 8-element coset of
/// {±1, ±i, ±j, ±k}; words of length 3 complete the group, so the closure
/// is computed to a fixpoint.
pub fn link_group_closure() -> BTreeSet<Quaternion> {
    let mut closure: BTreeSet<Quaternion> = lightcone_links().into_iter().collect();
    loop {
        let mut grown = closure.clone();
        for u in &closure {
            for v in &closure {
                grown.insert(u * v);
            }
        }
        if grown.len() == closure.len() {
            return closure;
        }
        closure = grown;
    }
}

/// The set of products of exactly two lightcone links.
pub fn two_link_products() -> BTreeSet<Quaternion> {
    let links = lightcone_links();
    let mut products = BTreeSet::new();
    for u in &links {
        for v in &links {
            products.insert(u * v);
        }
    }
    products
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_table_agrees_with_quaternion_product() {
        for a in GroupUnit::ALL {
            for b in GroupUnit::ALL {
                assert_eq!(
                    (a * b).quaternion(),
                    &a.quaternion() * &b.quaternion(),
                    "{a:?} * {b:?}"
                );
            }
        }
    }

    #[test]
    fn right_mul_shuffle_agrees_with_quaternion_product() {
        let samples = [
            Quaternion::from_integers(1, -2, 3, 5),
            Quaternion::from_halves(1, 1, -1, -1),
            Quaternion::from_integers(0, 0, 0, 0),
        ];
        for q in &samples {
            for u in GroupUnit::ALL {
                assert_eq!(right_mul_unit(q, u), q * &u.quaternion(), "{q} * {u:?}");
            }
        }
    }

    #[test]
    fn left_multiplication_is_simply_transitive_on_links() {
        let links = lightcone_links();
        for prev in &links {
            for next in &links {
                let translators = left_translators(prev, next);
                assert_eq!(
                    translators.len(),
                    1,
                    "expected exactly one translator for {prev} -> {next}"
                );
            }
        }
    }

    #[test]
    fn link_closure_is_the_24_hurwitz_units() {
        let closure = link_group_closure();
        assert_eq!(closure.len(), 24);

        // Explicitly: the 8 axis units plus the 16 half-integer units.
        let mut expected = BTreeSet::new();
        for u in GroupUnit::ALL {
            expected.insert(u.quaternion());
        }
        for re in [-1, 1] {
            for i in [-1, 1] {
                for j in [-1, 1] {
                    for k in [-1, 1] {
                        expected.insert(Quaternion::from_halves(re, i, j, k));
                    }
                }
            }
        }
        assert_eq!(closure, expected);

        // Closed under product and inverse (conjugate, since norms are 1).
        for u in &closure {
            assert!(closure.contains(&u.conj()), "inverse of {u} missing");
            for v in &closure {
                assert!(closure.contains(&(u * v)), "product {u}·{v} missing");
            }
        }
    }

    #[test]
    fn two_link_products_fill_one_half_unit_coset() {
        // The links are themselves a coset of {±1, ±i, ±j, ±k} inside the
        // closure, so length-2 words land in a single 8-element coset and
        // length-3 words are needed to reach the axis units.
        let products = two_link_products();
        assert_eq!(products.len(), 8);
        let links: BTreeSet<Quaternion> = lightcone_links().into_iter().collect();
        assert!(products.is_disjoint(&links));
        for p in &products {
            assert_eq!(p.re.abs(), crate::algebra::Dyadic::half(1));
        }
        let mut third: BTreeSet<Quaternion> = BTreeSet::new();
        for p in &products {
            for l in &links {
                third.insert(p * l);
            }
        }
        let axis_units: BTreeSet<Quaternion> =
            GroupUnit::ALL.into_iter().map(GroupUnit::quaternion).collect();
        assert_eq!(third, axis_units);
    }

    #[test]
    fn axis_and_negate() {
        assert_eq!(GroupUnit::MinusK.axis(), Some(Axis::K));
        assert_eq!(GroupUnit::One.axis(), None);
        assert_eq!(GroupUnit::MinusJ.negate(), GroupUnit::J);
        assert_eq!(
            GroupUnit::from_quaternion(&-Quaternion::unit_i()),
            Some(GroupUnit::MinusI)
        );
        assert_eq!(
            GroupUnit::from_quaternion(&Quaternion::from_halves(1, 1, 1, 1)),
            None
        );
    }
}
