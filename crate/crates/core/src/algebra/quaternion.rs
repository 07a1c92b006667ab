use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::dyadic::Dyadic;

/// Quaternion over exact dyadic scalars, Hamilton convention:
/// i² = j² = k² = -1, ij = k, jk = i, ki = j.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    pub re: Dyadic,
    pub i: Dyadic,
    pub j: Dyadic,
    pub k: Dyadic,
}

impl Quaternion {
    pub fn new(re: Dyadic, i: Dyadic, j: Dyadic, k: Dyadic) -> Self {
        Quaternion { re, i, j, k }
    }

    pub fn from_integers(re: i64, i: i64, j: i64, k: i64) -> Self {
        Quaternion::new(
            Dyadic::integer(re),
            Dyadic::integer(i),
            Dyadic::integer(j),
            Dyadic::integer(k),
        )
    }

    /// `(re + i·i + j·j + k·k) / 2`, the natural constructor for lattice links.
    pub fn from_halves(re: i64, i: i64, j: i64, k: i64) -> Self {
        Quaternion::new(
            Dyadic::half(re),
            Dyadic::half(i),
            Dyadic::half(j),
            Dyadic::half(k),
        )
    }

    pub fn zero() -> Self {
        Quaternion::from_integers(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_integers(1, 0, 0, 0)
    }

    pub fn unit_i() -> Self {
        Quaternion::from_integers(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Quaternion::from_integers(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Quaternion::from_integers(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.re.clone(), -&self.i, -&self.j, -&self.k)
    }

    pub fn norm_sq(&self) -> Dyadic {
        &(&self.re.square() + &self.i.square()) + &(&self.j.square() + &self.k.square())
    }

    pub fn scale(&self, s: &Dyadic) -> Self {
        Quaternion::new(&self.re * s, &self.i * s, &self.j * s, &self.k * s)
    }

    pub fn times_pow2(&self, shift: i32) -> Self {
        Quaternion::new(
            self.re.times_pow2(shift),
            self.i.times_pow2(shift),
            self.j.times_pow2(shift),
            self.k.times_pow2(shift),
        )
    }

    pub fn components(&self) -> [&Dyadic; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.re + &rhs.re,
            &self.i + &rhs.i,
            &self.j + &rhs.j,
            &self.k + &rhs.k,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: &Quaternion) -> Quaternion {
        self + &(-rhs)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.re, -&self.i, -&self.j, -&self.k)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&rhs.re, &rhs.i, &rhs.j, &rhs.k);
        Quaternion::new(
            &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
            &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
            &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
            &(&(a1 * d2) + &(b1 * c2)) - &(&(c1 * b2) - &(d1 * a2)),
        )
    }
}

macro_rules! forward_owned_qop {
    ($trait:ident, $method:ident) => {
        impl $trait for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

forward_owned_qop!(Add, add);
forward_owned_qop!(Sub, sub);
forward_owned_qop!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Display for Quaternion {
    /// Canonical rendering `a+bi+cj+dk`, all four components always present:
    /// `"1/2+1/2i-1/2j-1/2k"`, `"0+0i+0j-1k"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        for (c, axis) in [(&self.i, "i"), (&self.j, "j"), (&self.k, "k")] {
            if c.is_negative() {
                write!(f, "-{}{}", c.abs(), axis)?;
            } else {
                write!(f, "+{}{}", c, axis)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hamilton_table() {
        let (i, j, k) = (
            Quaternion::unit_i(),
            Quaternion::unit_j(),
            Quaternion::unit_k(),
        );
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, -Quaternion::one());
        assert_eq!(&j * &j, -Quaternion::one());
        assert_eq!(&k * &k, -Quaternion::one());
    }

    #[test]
    fn half_quaternion_products() {
        // (1+i+j+k)/2 times its conjugate is 1.
        let u = Quaternion::from_halves(1, 1, 1, 1);
        let v = Quaternion::from_halves(1, -1, -1, -1);
        assert_eq!(&u * &v, Quaternion::one());

        // (1+i-j-k)/2 · (1-i-j-k)/2 = -k.
        let a = Quaternion::from_halves(1, 1, -1, -1);
        let b = Quaternion::from_halves(1, -1, -1, -1);
        assert_eq!(&a * &b, -Quaternion::unit_k());
    }

    #[test]
    fn conj_and_norm() {
        let q = Quaternion::from_halves(1, 1, -1, 1);
        assert_eq!(q.conj(), Quaternion::from_halves(1, -1, 1, -1));
        assert_eq!(q.norm_sq(), Dyadic::one());
        assert_eq!(Quaternion::unit_i().norm_sq(), Dyadic::one());
        assert_eq!(
            Quaternion::from_integers(1, 1, 0, 0).norm_sq(),
            Dyadic::integer(2)
        );
        // q · conj(q) = norm_sq(q) as a real quaternion.
        let p = Quaternion::from_integers(2, -3, 1, 5);
        assert_eq!(&p * &p.conj(), Quaternion::one().scale(&p.norm_sq()));
    }

    #[test]
    fn rendering() {
        assert_eq!(
            Quaternion::from_halves(1, 1, 1, 1).to_string(),
            "1/2+1/2i+1/2j+1/2k"
        );
        assert_eq!(
            Quaternion::from_halves(-1, 1, -1, 1).to_string(),
            "-1/2+1/2i-1/2j+1/2k"
        );
        assert_eq!((-Quaternion::unit_k()).to_string(), "0+0i+0j-1k");
        assert_eq!(
            Quaternion::from_integers(1, 1, 0, 0).to_string(),
            "1+1i+0j+0k"
        );
    }

    fn arb_quaternion() -> impl Strategy<Value = Quaternion> {
        let comp = (-64i64..64, 0u32..3).prop_map(|(n, e)| Dyadic::new(n, e));
        (comp.clone(), comp.clone(), comp.clone(), comp)
            .prop_map(|(re, i, j, k)| Quaternion::new(re, i, j, k))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in arb_quaternion(), b in arb_quaternion()) {
            prop_assert_eq!((&a * &b).norm_sq(), &a.norm_sq() * &b.norm_sq());
        }

        #[test]
        fn mul_is_associative(a in arb_quaternion(), b in arb_quaternion(), c in arb_quaternion()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn conj_reverses_products(a in arb_quaternion(), b in arb_quaternion()) {
            prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        }
    }
}
