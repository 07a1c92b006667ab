use std::fmt;
use std::str::FromStr;

use crate::algebra::Quaternion;
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs on the three spatial axes i, j, k: the signature a table entry
/// carries alongside its tick.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SpatialSignature {
    pub i: Sign,
    pub j: Sign,
    pub k: Sign,
}

impl SpatialSignature {
    pub const fn new(i: Sign, j: Sign, k: Sign) -> SpatialSignature {
        SpatialSignature { i, j, k }
    }

    /// All 8 signatures in lexicographic (+ before -) order.
    pub fn all() -> [SpatialSignature; 8] {
        let signs = [Sign::Plus, Sign::Minus];
        let mut out = [SpatialSignature::new(Sign::Plus, Sign::Plus, Sign::Plus); 8];
        let mut index = 0;
        for i in signs {
            for j in signs {
                for k in signs {
                    out[index] = SpatialSignature::new(i, j, k);
                    index += 1;
                }
            }
        }
        out
    }

    pub fn negate(self) -> SpatialSignature {
        SpatialSignature::new(self.i.negate(), self.j.negate(), self.k.negate())
    }

    /// The signature read as a future-pointing pattern +1±i±j±k.
    pub fn as_future_pattern(self) -> SignPattern {
        SignPattern {
            re: Sign::Plus,
            i: self.i,
            j: self.j,
            k: self.k,
        }
    }
}

impl fmt::Display for SpatialSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}i{}j{}k",
            self.i.symbol(),
            self.j.symbol(),
            self.k.symbol()
        )
    }
}

impl FromStr for SpatialSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        if bytes.len() != 6 {
            return Err(Error::malformed("spatial signature", s));
        }
        let sign_at = |index: usize, axis: u8| -> Result<Sign, Error> {
            if bytes[index + 1] != axis {
                return Err(Error::malformed("spatial signature", s));
            }
            match bytes[index] {
                b'+' => Ok(Sign::Plus),
                b'-' => Ok(Sign::Minus),
                _ => Err(Error::malformed("spatial signature", s)),
            }
        };
        Ok(SpatialSignature::new(
            sign_at(0, b'i')?,
            sign_at(2, b'j')?,
            sign_at(4, b'k')?,
        ))
    }
}

/// One of the 16 sign patterns ±1±i±j±k.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SignPattern {
    pub re: Sign,
    pub i: Sign,
    pub j: Sign,
    pub k: Sign,
}

impl SignPattern {
    pub fn negate(self) -> SignPattern {
        SignPattern {
            re: self.re.negate(),
            i: self.i.negate(),
            j: self.j.negate(),
            k: self.k.negate(),
        }
    }

    pub fn spatial(self) -> SpatialSignature {
        SpatialSignature::new(self.i, self.j, self.k)
    }

    pub fn quaternion(self) -> Quaternion {
        Quaternion::from_integers(
            self.re.as_i64(),
            self.i.as_i64(),
            self.j.as_i64(),
            self.k.as_i64(),
        )
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = match self.re {
            Sign::Plus => "1",
            Sign::Minus => "-1",
        };
        write!(f, "{lead}{}", self.spatial())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rest = s
            .strip_prefix("-1")
            .map(|r| (Sign::Minus, r))
            .or_else(|| s.strip_prefix("+1").map(|r| (Sign::Plus, r)))
            .or_else(|| s.strip_prefix('1').map(|r| (Sign::Plus, r)));
        match rest {
            Some((re, tail)) => {
                let spatial: SpatialSignature = tail
                    .parse()
                    .map_err(|_| Error::malformed("sign pattern", s))?;
                Ok(SignPattern {
                    re,
                    i: spatial.i,
                    j: spatial.j,
                    k: spatial.k,
                })
            }
            None => Err(Error::malformed("sign pattern", s)),
        }
    }
}

/// Spacetime naming of the four future links.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum SpacetimeAxis {
    T,
    X,
    Y,
    Z,
}

impl fmt::Display for SpacetimeAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpacetimeAxis::T => "T",
            SpacetimeAxis::X => "X",
            SpacetimeAxis::Y => "Y",
            SpacetimeAxis::Z => "Z",
        })
    }
}

/// Internal-space naming of the same four links: electric charge plus the
/// three color charges.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum InternalAxis {
    E,
    R,
    G,
    B,
}

impl InternalAxis {
    /// One step of the color rotation R -> G -> B -> R; E is fixed.
    pub fn rotated(self) -> InternalAxis {
        match self {
            InternalAxis::E => InternalAxis::E,
            InternalAxis::R => InternalAxis::G,
            InternalAxis::G => InternalAxis::B,
            InternalAxis::B => InternalAxis::R,
        }
    }
}

impl fmt::Display for InternalAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InternalAxis::E => "E",
            InternalAxis::R => "R",
            InternalAxis::G => "G",
            InternalAxis::B => "B",
        })
    }
}

/// Result of labeling a sign pattern against the link alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelOutcome {
    /// A lightcone link: both namings apply, negated for past links.
    Labeled {
        spacetime: SpacetimeAxis,
        internal: InternalAxis,
        negative: bool,
    },
    /// One of the 8 patterns that is not a lightcone link.
    Unlabeled,
}

const FUTURE_LABELS: [(SpatialSignature, SpacetimeAxis, InternalAxis); 4] = [
    (
        SpatialSignature::new(Sign::Plus, Sign::Plus, Sign::Plus),
        SpacetimeAxis::T,
        InternalAxis::E,
    ),
    (
        SpatialSignature::new(Sign::Plus, Sign::Minus, Sign::Minus),
        SpacetimeAxis::X,
        InternalAxis::R,
    ),
    (
        SpatialSignature::new(Sign::Minus, Sign::Plus, Sign::Minus),
        SpacetimeAxis::Y,
        InternalAxis::G,
    ),
    (
        SpatialSignature::new(Sign::Minus, Sign::Minus, Sign::Plus),
        SpacetimeAxis::Z,
        InternalAxis::B,
    ),
];

/// Label a ±1±i±j±k pattern: future links get their plain names, past links
/// the negated names, and the 8 non-link patterns are reported unlabeled.
pub fn signature_label(pattern: SignPattern) -> LabelOutcome {
    let (negative, spatial) = match pattern.re {
        Sign::Plus => (false, pattern.spatial()),
        Sign::Minus => (true, pattern.spatial().negate()),
    };
    for (signature, spacetime, internal) in FUTURE_LABELS {
        if signature == spatial {
            return LabelOutcome::Labeled {
                spacetime,
                internal,
                negative,
            };
        }
    }
    LabelOutcome::Unlabeled
}
