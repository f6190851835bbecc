use std::fmt;

use crate::error::{Error, Result};

/// A triple `i < j < k` of colors from `[n]`, the atom of the inversion encoding.
///
/// Colors are 1-based. A triple does not carry `n`; validity against a color
/// count is checked wherever a rank is taken.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    i: u8,
    j: u8,
    k: u8,
}

impl Triple {
    pub fn new(i: u8, j: u8, k: u8) -> Result<Self> {
        if i >= 1 && i < j && j < k {
            Ok(Triple { i, j, k })
        } else {
            Err(Error::InvalidTriple(i, j, k))
        }
    }

    /// The dense triple `ext(j) = (j-1, j, j+1)`, defined for `2 <= j`.
    pub fn ext(j: u8) -> Result<Self> {
        if j < 2 {
            return Err(Error::InvalidTriple(j.wrapping_sub(1), j, j + 1));
        }
        Triple::new(j - 1, j, j + 1)
    }

    pub fn i(&self) -> u8 {
        self.i
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn colors(&self) -> [u8; 3] {
        [self.i, self.j, self.k]
    }

    /// `k - i`; always at least 2.
    pub fn amplitude(&self) -> u8 {
        self.k - self.i
    }

    /// A triple is dense iff it is an interval, i.e. amplitude 2.
    pub fn is_dense(&self) -> bool {
        self.amplitude() == 2
    }

    pub(crate) fn check_colors(&self, n: u8) -> Result<()> {
        if self.k > n {
            Err(Error::ColorOutOfRange { color: self.k, n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            write!(f, "{}{}{}", self.i, self.j, self.k)
        } else {
            write!(f, "{}-{}-{}", self.i, self.j, self.k)
        }
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
