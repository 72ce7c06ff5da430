//! Digit alphabets shared by both stream codings.

use std::fmt;
use std::ops::Neg;

/// A signed binary digit, one of `-1`, `0`, `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum SignedDigit {
    Neg = -1,
    Zero = 0,
    Pos = 1,
}

impl SignedDigit {
    pub const ALL: [SignedDigit; 3] = [SignedDigit::Neg, SignedDigit::Zero, SignedDigit::Pos];

    #[inline]
    pub fn value(self) -> i8 {
        self as i8
    }

    /// Returns `None` for anything outside `{-1, 0, 1}`.
    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            -1 => Some(SignedDigit::Neg),
            0 => Some(SignedDigit::Zero),
            1 => Some(SignedDigit::Pos),
            _ => None,
        }
    }

    /// Wire symbol: `+`, `0` or `-`.
    pub fn symbol(self) -> char {
        match self {
            SignedDigit::Neg => '-',
            SignedDigit::Zero => '0',
            SignedDigit::Pos => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '-' => Some(SignedDigit::Neg),
            '0' => Some(SignedDigit::Zero),
            '+' => Some(SignedDigit::Pos),
            _ => None,
        }
    }

    /// The nonzero digits are exactly the proper ones.
    pub fn proper(self) -> Option<ProperDigit> {
        match self {
            SignedDigit::Neg => Some(ProperDigit::Neg),
            SignedDigit::Zero => None,
            SignedDigit::Pos => Some(ProperDigit::Pos),
        }
    }
}

#[inline]
pub fn digit_negate(d: SignedDigit) -> SignedDigit {
    -d
}

impl Neg for SignedDigit {
    type Output = SignedDigit;

    fn neg(self) -> SignedDigit {
        match self {
            SignedDigit::Neg => SignedDigit::Pos,
            SignedDigit::Zero => SignedDigit::Zero,
            SignedDigit::Pos => SignedDigit::Neg,
        }
    }
}

impl fmt::Display for SignedDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A proper signed digit, `-1` or `+1`. Carried by the `Lr` and `Fin`
/// constructors of Gray code. `Pos` plays the role of the boolean `true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[repr(i8)]
pub enum ProperDigit {
    Neg = -1,
    Pos = 1,
}

impl ProperDigit {
    #[inline]
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            ProperDigit::Pos
        } else {
            ProperDigit::Neg
        }
    }

    pub fn as_bool(self) -> bool {
        self == ProperDigit::Pos
    }
}

impl Neg for ProperDigit {
    type Output = ProperDigit;

    fn neg(self) -> ProperDigit {
        match self {
            ProperDigit::Neg => ProperDigit::Pos,
            ProperDigit::Pos => ProperDigit::Neg,
        }
    }
}

impl From<ProperDigit> for SignedDigit {
    fn from(d: ProperDigit) -> SignedDigit {
        match d {
            ProperDigit::Neg => SignedDigit::Neg,
            ProperDigit::Pos => SignedDigit::Pos,
        }
    }
}
