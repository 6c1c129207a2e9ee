use alloc::string::ToString;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::error::{Error, Result};

/// Result of a counting operation: an arbitrary-precision non-negative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn new(value: BigUint) -> Self {
        Self(value)
    }

    /// Converts a signed sum, failing if it went negative.
    pub fn from_signed(value: BigInt) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeCount(value.to_string()));
        }
        Ok(Self(value.magnitude().clone()))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
