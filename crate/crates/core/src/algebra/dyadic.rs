use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact dyadic rational `numerator / 2^log2_denom`.
///
/// The representation is canonical: `log2_denom == 0` or the numerator is
/// odd, and zero is always `0 / 2^0`. Equality, ordering, and hashing
/// therefore coincide with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    log2_denom: u32,
}

impl Dyadic {
    pub fn new(numerator: impl Into<BigInt>, log2_denom: u32) -> Self {
        Self::canonical(numerator.into(), log2_denom)
    }

    fn canonical(numerator: BigInt, log2_denom: u32) -> Self {
        if numerator.is_zero() {
            return Dyadic {
                numerator,
                log2_denom: 0,
            };
        }
        let tz = numerator.trailing_zeros().unwrap_or(0);
        let shift = (tz.min(u64::from(log2_denom))) as u32;
        Dyadic {
            numerator: numerator >> shift,
            log2_denom: log2_denom - shift,
        }
    }

    pub fn zero() -> Self {
        Dyadic::new(0, 0)
    }

    pub fn one() -> Self {
        Dyadic::new(1, 0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    /// `n / 2`.
    pub fn half(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn log2_denom(&self) -> u32 {
        self.log2_denom
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.log2_denom == 0
    }

    /// True when the value lies in (1/2)·Z.
    pub fn is_half_integer(&self) -> bool {
        self.log2_denom <= 1
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            numerator: self.numerator.abs(),
            log2_denom: self.log2_denom,
        }
    }

    /// Multiply by 2^shift; negative shifts divide.
    pub fn times_pow2(&self, shift: i32) -> Self {
        if shift >= 0 {
            Dyadic::canonical(&self.numerator << shift as usize, self.log2_denom)
        } else {
            Dyadic::canonical(self.numerator.clone(), self.log2_denom + shift.unsigned_abs())
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        // BigInt shr rounds toward negative infinity, which is exactly floor.
        &self.numerator >> self.log2_denom as usize
    }

    /// The value times 2, exact, as a big integer when it is a half-integer.
    pub fn half_units(&self) -> Option<BigInt> {
        match self.log2_denom {
            0 => Some(&self.numerator << 1usize),
            1 => Some(self.numerator.clone()),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        n * (-(self.log2_denom as i32)).exp2()
    }

    /// Plain decimal rendering, defined for half-integers only:
    /// `"2"`, `"0.5"`, `"-1.5"`.
    pub fn to_decimal_string(&self) -> Option<String> {
        match self.log2_denom {
            0 => Some(self.numerator.to_string()),
            1 => {
                let sign = if self.numerator.is_negative() { "-" } else { "" };
                let whole = self.numerator.abs() >> 1usize;
                Some(format!("{sign}{whole}.5"))
            }
            _ => None,
        }
    }
}

trait Exp2 {
    fn exp2(self) -> f64;
}

impl Exp2 for i32 {
    fn exp2(self) -> f64 {
        (self as f64).exp2()
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    /// Fraction rendering `p` or `p/2^q` with the power evaluated: `"3/8"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2_denom == 0 {
            write!(f, "{}", self.numerator)
        } else {
            let denom = BigInt::from(1) << self.log2_denom as usize;
            write!(f, "{}/{}", self.numerator, denom)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        // Compare over the common denominator 2^max(p, q).
        let scale = self.log2_denom.max(other.log2_denom);
        let lhs = &self.numerator << (scale - self.log2_denom) as usize;
        let rhs = &other.numerator << (scale - other.log2_denom) as usize;
        lhs.cmp(&rhs)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let scale = self.log2_denom.max(rhs.log2_denom);
        let lhs = &self.numerator << (scale - self.log2_denom) as usize;
        let other = &rhs.numerator << (scale - rhs.log2_denom) as usize;
        Dyadic::canonical(lhs + other, scale)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::canonical(
            &self.numerator * &rhs.numerator,
            self.log2_denom + rhs.log2_denom,
        )
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            numerator: -&self.numerator,
            log2_denom: self.log2_denom,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: &Dyadic) -> Dyadic {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts integers (`"3"`), powers-of-two fractions (`"3/8"`), and
    /// terminating decimals that are exactly dyadic (`"1.25"`, `"-0.5"`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::malformed("dyadic", s);
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(bad());
            }
            let tz = d.trailing_zeros().unwrap_or(0);
            if (&d >> tz as usize) != BigInt::from(1) {
                return Err(bad());
            }
            Ok(Dyadic::new(n, tz as u32))
        } else if let Some((whole, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = whole.starts_with('-');
            let whole_mag: BigInt = match whole.trim_start_matches(['-', '+']) {
                "" => BigInt::zero(),
                digits => digits.parse().map_err(|_| bad())?,
            };
            let k = frac.len() as u32;
            let frac_mag: BigInt = frac.parse().map_err(|_| bad())?;
            let pow10 = BigInt::from(10).pow(k);
            let mag = whole_mag * &pow10 + frac_mag;
            // value = mag / 10^k; dyadic iff mag is divisible by 5^k.
            let pow5 = BigInt::from(5).pow(k);
            if (&mag % &pow5) != BigInt::zero() {
                return Err(bad());
            }
            let num = mag / pow5;
            Ok(Dyadic::new(if negative { -num } else { num }, k))
        } else {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Dyadic::integer(n))
        }
    }
}
