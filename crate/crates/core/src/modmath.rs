//! Exact residue arithmetic.
//!
//! Every value in the crate is an `i64`. Intermediate products are taken in
//! `i128`, so any modulus below [`MODULUS_LIMIT`] is safe: the largest product
//! formed anywhere is bounded by the square of the modulus.

use std::fmt;
use std::ops::{Mul, Neg};

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`crate::Triple`] (exclusive): 2^40.
pub const MODULUS_LIMIT: i64 = 1 << 40;

/// Canonical representative of `x` modulo `n`, in `[0, n)`.
///
/// Negative inputs are normalized by floored division.
pub fn rep(x: i64, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::usage(format!("modulus must be >= 2, got {n}")));
    }
    Ok(x.rem_euclid(n))
}

/// `rep` without the `n >= 2` check; `n == 1` maps everything to 0.
#[inline]
pub(crate) fn md(x: i64, n: i64) -> i64 {
    debug_assert!(n >= 1);
    x.rem_euclid(n)
}

#[inline]
pub(crate) fn mul_mod(a: i64, b: i64, n: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(n as i128)) as i64
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Multiplicative inverse of `x` modulo `n`, in `[0, n)`.
pub fn inv(x: i64, n: i64) -> Result<i64> {
    let x = rep(x, n)?;
    let eg = x.extended_gcd(&n);
    if eg.gcd != 1 {
        return Err(Error::NotUnit {
            value: x,
            modulus: n,
            gcd: eg.gcd,
        });
    }
    Ok(md(eg.x, n))
}

/// A sign in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
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

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value() as i8)
    }
}

/// The sign map on `{±1} ⊂ Z/n`.
///
/// For `n > 2` this is the obvious map; `n == 2` sends everything to `-1`
/// and `n == 1` sends everything to `+1`.
pub fn sigma(n: i64, s: i64) -> Result<Sign> {
    match n {
        i64::MIN..=0 => Err(Error::usage(format!("sigma needs n >= 1, got {n}"))),
        1 => Ok(Sign::Plus),
        2 => Ok(Sign::Minus),
        _ => match md(s, n) {
            1 => Ok(Sign::Plus),
            r if r == n - 1 => Ok(Sign::Minus),
            r => Err(Error::usage(format!("{r} is not ±1 modulo {n}"))),
        },
    }
}

/// An element of `Z/N` stored by its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: i64,
    modulus: i64,
}

impl Residue {
    pub fn new(x: i64, modulus: i64) -> Result<Self> {
        Ok(Residue {
            value: rep(x, modulus)?,
            modulus,
        })
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_unit(&self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Residue {
            value: inv(self.value, self.modulus)?,
            modulus: self.modulus,
        })
    }

    pub fn scale(&self, a: i64) -> Self {
        Residue {
            value: mul_mod(self.value, a, self.modulus),
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}
