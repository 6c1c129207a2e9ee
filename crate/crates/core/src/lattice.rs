//! Exact linear algebra for the root system A_r.
//!
//! Vectors live in the canonical basis `e_1, …, e_{r+1}` of `Q^{r+1}`. The
//! positive roots are `e_i − e_j` for `i < j`, so a zero-sum vector lies in the
//! positive-root cone exactly when all of its leading partial sums are
//! non-negative.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coordinates `(a_1, …, a_{r+1})` of a vector in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector {
    entries: Vec<BigRational>,
}

impl RationalVector {
    /// Builds a vector of rank `entries.len() - 1`.
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn from_big_integers(entries: &[BigInt]) -> Result<Self> {
        Self::new(entries.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Self { entries: vec![BigRational::zero(); rank + 1] })
    }

    /// The rank `r`; the vector has `r + 1` coordinates.
    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.entries
    }

    pub fn sum(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self { entries: self.entries.iter().map(|x| x * factor).collect() }
    }

    /// Translates every coordinate by the same amount so that the sum is zero.
    pub fn centered(&self) -> Self {
        let n = BigRational::from_integer(BigInt::from(self.entries.len()));
        let mean = self.sum() / n;
        Self { entries: self.entries.iter().map(|x| x - &mean).collect() }
    }

    /// `(a_{p(1)}, …, a_{p(r+1)})` for a 0-based index sequence `p`.
    pub fn permuted(&self, images: &[usize]) -> Self {
        Self { entries: images.iter().map(|&i| self.entries[i].clone()).collect() }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.entries.len() != other.entries.len() {
            return Err(Error::Length { expected: self.entries.len(), found: other.entries.len() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self - other)
    }
}

impl<'a> Add<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;

    fn add(self, rhs: &'a RationalVector) -> RationalVector {
        debug_assert_eq!(self.entries.len(), rhs.entries.len());
        RationalVector {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a RationalVector> for &'a RationalVector {
    type Output = RationalVector;

    fn sub(self, rhs: &'a RationalVector) -> RationalVector {
        debug_assert_eq!(self.entries.len(), rhs.entries.len());
        RationalVector {
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;

    fn neg(self) -> RationalVector {
        RationalVector { entries: self.entries.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.entries)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[BigRational]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Coordinates in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalCoords {
    coords: Vec<BigRational>,
}

impl FundamentalCoords {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(Self { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// True when every coordinate is a non-negative integer.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for FundamentalCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.coords)
    }
}

/// A dominant integral weight: consecutive canonical differences are
/// non-negative integers. The common coordinate sum is arbitrary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    canonical: RationalVector,
}

impl DominantWeight {
    pub fn new(canonical: RationalVector) -> Result<Self> {
        Self::named(canonical, "weight")
    }

    /// Like [`DominantWeight::new`], naming the weight in diagnostics.
    pub fn named(canonical: RationalVector, name: &'static str) -> Result<Self> {
        if !to_fundamental(&canonical).is_dominant() {
            return Err(Error::NotDominant { name });
        }
        Ok(Self { canonical })
    }

    pub fn from_fundamental(coords: &FundamentalCoords) -> Result<Self> {
        Self::new(from_fundamental(coords))
    }

    pub fn zero(rank: usize) -> Result<Self> {
        Ok(Self { canonical: RationalVector::zero(rank)? })
    }

    pub fn rank(&self) -> usize {
        self.canonical.rank()
    }

    pub fn canonical(&self) -> &RationalVector {
        &self.canonical
    }

    pub fn fundamental(&self) -> FundamentalCoords {
        to_fundamental(&self.canonical)
    }

    /// `N·λ` for a non-negative integer `N`.
    pub fn scaled(&self, factor: &BigInt) -> Self {
        debug_assert!(!factor.is_negative());
        Self { canonical: self.canonical.scale(&BigRational::from_integer(factor.clone())) }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(Self { canonical: self.canonical.checked_add(&other.canonical)? })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// `(v_1 − v_2, …, v_r − v_{r+1})`.
pub fn to_fundamental(v: &RationalVector) -> FundamentalCoords {
    let coords = v.entries.windows(2).map(|w| &w[0] - &w[1]).collect();
    FundamentalCoords { coords }
}

/// The zero-sum vector whose consecutive differences are `c`.
pub fn from_fundamental(c: &FundamentalCoords) -> RationalVector {
    let r = c.coords.len();
    // v_k = v_{r+1} + Σ_{i ≥ k} c_i, then fix v_{r+1} by the zero-sum condition.
    let mut tail = Vec::with_capacity(r + 1);
    let mut acc = BigRational::zero();
    tail.push(acc.clone());
    for ci in c.coords.iter().rev() {
        acc += ci;
        tail.push(acc.clone());
    }
    tail.reverse();
    let total = tail.iter().fold(BigRational::zero(), |s, x| s + x);
    let last = -total / BigRational::from_integer(BigInt::from(r + 1));
    RationalVector { entries: tail.into_iter().map(|x| x + &last).collect() }
}

/// Half the sum of the positive roots: `(r/2, r/2 − 1, …, −r/2)`.
pub fn rho(rank: usize) -> Result<RationalVector> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let two = BigInt::from(2);
    let entries = (0..=rank)
        .map(|i| BigRational::new(BigInt::from(rank as i64 - 2 * i as i64), two.clone()))
        .collect();
    Ok(RationalVector { entries })
}

/// `(r, r − 1, …, 1, −r(r+1)/2)`, with fundamental coordinates
/// `(1, …, 1, 1 + r(r+1)/2)`.
pub fn theta(rank: usize) -> Result<DominantWeight> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let r = rank as i64;
    let mut entries: Vec<i64> = (1..=r).rev().collect();
    entries.push(-r * (r + 1) / 2);
    DominantWeight::new(RationalVector::from_integers(&entries)?)
}

/// Zero sum and every leading partial sum `a_1 + … + a_k` non-negative.
pub fn in_positive_cone(a: &RationalVector) -> bool {
    let mut partial = BigRational::zero();
    for (k, x) in a.entries.iter().enumerate() {
        partial += x;
        if k < a.rank() && partial.is_negative() {
            return false;
        }
    }
    partial.is_zero()
}

/// No non-empty strict subset of the coordinates sums to zero.
///
/// Exhaustive over the `2^{r+1} − 2` subsets.
pub fn is_regular(a: &RationalVector) -> bool {
    let n = a.entries.len();
    assert!(n <= 24, "regularity check limited to rank 23");
    let full = (1u32 << n) - 1;
    // Subset sums by lowest-bit recurrence.
    let mut sums: Vec<BigRational> = Vec::with_capacity(1 << n);
    sums.push(BigRational::zero());
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let s = &sums[(mask & (mask - 1)) as usize] + &a.entries[low];
        if mask != full && s.is_zero() {
            return false;
        }
        sums.push(s);
    }
    true
}

/// `a + (1/(2r))·(1, …, 1, −r)`.
///
/// Only defined for integral `a`; the result is regular and lies in the
/// positive cone exactly when `a` does.
pub fn deform(a: &RationalVector) -> Result<RationalVector> {
    if !a.is_integral() {
        return Err(Error::NotIntegral);
    }
    let r = a.rank();
    let eps = BigRational::new(BigInt::one(), BigInt::from(2 * r));
    let mut entries: Vec<BigRational> = a.entries[..r].iter().map(|x| x + &eps).collect();
    entries.push(&a.entries[r] - eps * BigRational::from_integer(BigInt::from(r)));
    Ok(RationalVector { entries })
}
