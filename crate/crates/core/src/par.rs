//! Signed-sum reduction, parallel when the `parallel` feature is enabled.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;

#[cfg(feature = "parallel")]
pub(crate) fn try_sum<T, F>(items: &[T], f: F) -> Result<BigInt>
where
    T: Sync,
    F: Fn(&T) -> Result<BigInt> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).try_reduce(BigInt::zero, |a, b| Ok(a + b))
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_sum<T, F>(items: &[T], f: F) -> Result<BigInt>
where
    F: Fn(&T) -> Result<BigInt>,
{
    items.iter().try_fold(BigInt::zero(), |acc, x| Ok(acc + f(x)?))
}
