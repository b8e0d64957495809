//! Two-valued primitives used throughout the crate: signs and dual
//! orientations.
//!
//! A [`Sign`] is attached to fat vertices (and, through the side swap, to the
//! labels of the opposite side).  A [`Dir`] is a *dual orientation*: an arrow
//! on a unit arc of a fat-vertex boundary that points either into the vertex
//! (`In`) or out of it (`Out`).

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Mul, Neg};

/// Sign of a fat vertex (equivalently, parity of a label on the other side).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    /// Positive (`"+"` in the JSON encodings).
    #[serde(rename = "+")]
    Plus,
    /// Negative (`"-"` in the JSON encodings).
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// All signs, in canonical order.
    pub const ALL: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// `+1` or `-1`, for arithmetic.
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// The sign of an integer's parity under the convention "even is
    /// positive": returns `Plus` for even `n`, `Minus` for odd `n`.
    pub fn of_parity(n: usize) -> Sign {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A dual orientation on a unit arc of a fat-vertex boundary.
///
/// `In` points into the fat vertex, `Out` points away from it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Dir {
    /// Arrow pointing out of the fat vertex (`"out"` in JSON).
    #[serde(rename = "out")]
    Out,
    /// Arrow pointing into the fat vertex (`"in"` in JSON).
    #[serde(rename = "in")]
    In,
}

impl Dir {
    /// The opposite orientation.
    pub fn flip(self) -> Dir {
        match self {
            Dir::Out => Dir::In,
            Dir::In => Dir::Out,
        }
    }
}

impl Neg for Dir {
    type Output = Dir;
    fn neg(self) -> Dir {
        self.flip()
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::Out => "out",
            Dir::In => "in",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::of_parity(2), Sign::Plus);
        assert_eq!(Sign::of_parity(7), Sign::Minus);
    }

    #[test]
    fn dir_round_trips_through_json() {
        let d: Dir = serde_json::from_str("\"out\"").unwrap();
        assert_eq!(d, Dir::Out);
        assert_eq!(serde_json::to_string(&Dir::In).unwrap(), "\"in\"");
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "\"-\"");
    }
}
