//! Weight multiplicities and tensor-product coefficients as signed sums of
//! Kostant partition values over the valid Weyl group elements, and their
//! polynomial behaviour along rays `N ↦ (Nλ, Nμ)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::lattice::{rho, to_fundamental, DominantWeight, RationalVector};
use crate::residue::kostant_partition;
use crate::weyl::{valid_couples, valid_permutations};

fn check_rank(expected: usize, v: &RationalVector) -> Result<()> {
    if v.rank() != expected {
        return Err(Error::Length { expected: expected + 1, found: v.entries().len() });
    }
    Ok(())
}

fn check_sums(left: BigRational, right: BigRational) -> Result<()> {
    if left != right {
        return Err(Error::UnequalSums { left: left.to_string(), right: right.to_string() });
    }
    Ok(())
}

/// A request for the multiplicity of `μ` in `V(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityQuery {
    lambda: DominantWeight,
    mu: RationalVector,
}

impl MultiplicityQuery {
    pub fn new(lambda: DominantWeight, mu: RationalVector) -> Result<Self> {
        check_rank(lambda.rank(), &mu)?;
        check_sums(lambda.canonical().sum(), mu.sum())?;
        if !to_fundamental(&mu).coords().iter().all(|c| c.is_integer()) {
            return Err(Error::NonIntegralDifferences { name: "mu" });
        }
        Ok(Self { lambda, mu })
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn mu(&self) -> &RationalVector {
        &self.mu
    }

    /// The same query at `(Nλ, Nμ)`.
    pub fn scaled(&self, n: &BigInt) -> Self {
        Self { lambda: self.lambda.scaled(n), mu: self.mu.scale(&BigRational::from_integer(n.clone())) }
    }
}

/// A request for the multiplicity of `V(ν)` in `V(λ) ⊗ V(μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorQuery {
    lambda: DominantWeight,
    mu: DominantWeight,
    nu: DominantWeight,
}

impl TensorQuery {
    pub fn new(lambda: DominantWeight, mu: DominantWeight, nu: DominantWeight) -> Result<Self> {
        check_rank(lambda.rank(), mu.canonical())?;
        check_rank(lambda.rank(), nu.canonical())?;
        check_sums(lambda.canonical().sum() + mu.canonical().sum(), nu.canonical().sum())?;
        Ok(Self { lambda, mu, nu })
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn mu(&self) -> &DominantWeight {
        &self.mu
    }

    pub fn nu(&self) -> &DominantWeight {
        &self.nu
    }

    pub fn scaled(&self, n: &BigInt) -> Self {
        Self { lambda: self.lambda.scaled(n), mu: self.mu.scaled(n), nu: self.nu.scaled(n) }
    }
}

/// How the sign of a term in the tensor-product sum is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorSign {
    /// `sign(w)·sign(w')`.
    ProductOfSignatures,
    /// `(−1)^{ℓ(w)ℓ(w')}`: negative only when both lengths are odd.
    ProductOfLengths,
}

impl TensorSign {
    pub const VERIFIED: TensorSign = TensorSign::ProductOfSignatures;

    fn sign(self, w1: &crate::Permutation, w2: &crate::Permutation) -> i8 {
        match self {
            TensorSign::ProductOfSignatures => w1.signature() * w2.signature(),
            TensorSign::ProductOfLengths => {
                if w1.inversions() % 2 == 1 && w2.inversions() % 2 == 1 {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

pub fn multiplicity(q: &MultiplicityQuery) -> Result<BigCount> {
    BigCount::from_signed(multiplicity_signed(q)?)
}

/// `Σ_{w valid} sign(w) · k(w(λ+ρ) − (μ+ρ))`, before the non-negativity check.
pub fn multiplicity_signed(q: &MultiplicityQuery) -> Result<BigInt> {
    let rho = rho(q.rank())?;
    let lambda = q.lambda.canonical().centered();
    let mu = q.mu.centered();
    // Weights outside the root lattice coset of λ never occur.
    if !(&lambda - &mu).is_integral() {
        return Ok(BigInt::zero());
    }
    let top = &lambda + &rho;
    let bottom = &mu + &rho;
    let valid = valid_permutations(&top, &bottom)?;
    crate::par::try_sum(&valid, |w| {
        let k = kostant_partition(&(&top.permuted(w.images()) - &bottom))?.to_bigint();
        Ok(if w.signature() < 0 { -k } else { k })
    })
}

pub fn tensor_product(q: &TensorQuery) -> Result<BigCount> {
    BigCount::from_signed(tensor_product_signed(q, TensorSign::VERIFIED)?)
}

/// `Σ_{(w,w') valid} ± k(w(λ+ρ) + w'(μ+ρ) − (ν+2ρ))` with the chosen sign reading.
pub fn tensor_product_signed(q: &TensorQuery, sign: TensorSign) -> Result<BigInt> {
    let rho = rho(q.rank())?;
    let lambda = q.lambda.canonical().centered();
    let mu = q.mu.canonical().centered();
    let nu = q.nu.canonical().centered();
    if !(&(&lambda + &mu) - &nu).is_integral() {
        return Ok(BigInt::zero());
    }
    let first = &lambda + &rho;
    let second = &mu + &rho;
    let target = &(&nu + &rho) + &rho;
    let couples = valid_couples(&first, &second, &target)?;
    crate::par::try_sum(&couples, |(w1, w2)| {
        let arg = &(&first.permuted(w1.images()) + &second.permuted(w2.images())) - &target;
        let k = kostant_partition(&arg)?.to_bigint();
        Ok(if sign.sign(w1, w2) < 0 { -k } else { k })
    })
}

/// Exact polynomial in `N`, fitted on consecutive integers and checked on
/// further ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayPolynomial {
    /// Coefficients in increasing degree, without trailing zeros.
    coefficients: Vec<BigRational>,
    sample_points: Vec<BigInt>,
    verified_points: Vec<BigInt>,
}

impl RayPolynomial {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn sample_points(&self) -> &[BigInt] {
        &self.sample_points
    }

    pub fn verified_points(&self) -> &[BigInt] {
        &self.verified_points
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, n: &BigInt) -> BigRational {
        let n = BigRational::from_integer(n.clone());
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &n + c)
    }

    /// Interpolates `values[i]` at `N = first + i` exactly (Newton form,
    /// expanded to the monomial basis).
    pub fn interpolate(first: &BigInt, values: &[BigRational]) -> Self {
        let m = values.len();
        // Divided differences at unit spacing.
        let mut table = values.to_vec();
        let mut newton = Vec::with_capacity(m);
        for k in 0..m {
            newton.push(table[0].clone());
            for i in 0..m - k - 1 {
                table[i] = (&table[i + 1] - &table[i]) / BigRational::from_integer(BigInt::from(k + 1));
            }
            table.truncate(m - k - 1);
        }
        // Horner in Newton form: p = c_0 + (N − x_0)(c_1 + (N − x_1)(…)).
        let mut coefficients = alloc::vec![BigRational::zero(); m.max(1)];
        for k in (0..m).rev() {
            let node = BigRational::from_integer(first + BigInt::from(k));
            let mut shifted = alloc::vec![BigRational::zero(); m.max(1)];
            for d in 0..m {
                if d + 1 < m {
                    shifted[d + 1] += &coefficients[d];
                }
                shifted[d] -= &coefficients[d] * &node;
            }
            shifted[0] += &newton[k];
            coefficients = shifted;
        }
        let top = coefficients.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        coefficients.truncate(top + 1);
        let sample_points = (0..m).map(|i| first + BigInt::from(i)).collect();
        Self { coefficients, sample_points, verified_points: Vec::new() }
    }
}

impl fmt::Display for RayPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (d, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let unit = magnitude.is_one();
            match (d, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("N")?,
                (1, false) => write!(f, "{magnitude}*N")?,
                (_, true) => write!(f, "N^{d}")?,
                (_, false) => write!(f, "{magnitude}*N^{d}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Outcome of fitting a polynomial along a ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayFit {
    Polynomial(RayPolynomial),
    /// The fitted polynomial missed a verification point; the exact values
    /// at every sampled `N` are returned instead.
    Inconsistent { values: Vec<(BigInt, BigCount)> },
}

impl RayFit {
    pub fn polynomial(&self) -> Option<&RayPolynomial> {
        match self {
            RayFit::Polynomial(p) => Some(p),
            RayFit::Inconsistent { .. } => None,
        }
    }

    pub const INCONSISTENT_MESSAGE: &'static str = "ray crosses chamber structure inconsistently";
}

/// `r(r−1)/2`, the degree bound along a ray.
pub fn ray_degree_bound(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

fn fit_ray<F>(rank: usize, mut value_at: F) -> Result<RayFit>
where
    F: FnMut(&BigInt) -> Result<BigCount>,
{
    let d = ray_degree_bound(rank);
    let points: Vec<BigInt> = (1..=d + 3).map(BigInt::from).collect();
    let values = points.iter().map(&mut value_at).collect::<Result<Vec<_>>>()?;
    let as_rational = |c: &BigCount| BigRational::from_integer(c.to_bigint());
    let samples: Vec<BigRational> = values[..=d].iter().map(as_rational).collect();
    let mut poly = RayPolynomial::interpolate(&BigInt::one(), &samples);
    let consistent = points[d + 1..]
        .iter()
        .zip(&values[d + 1..])
        .all(|(n, v)| poly.eval(n) == as_rational(v));
    if !consistent {
        return Ok(RayFit::Inconsistent { values: points.into_iter().zip(values).collect() });
    }
    poly.verified_points = points[d + 1..].to_vec();
    Ok(RayFit::Polynomial(poly))
}

/// The polynomial `N ↦ c_{Nλ}^{Nμ}`.
pub fn multiplicity_polynomial(q: &MultiplicityQuery) -> Result<RayFit> {
    fit_ray(q.rank(), |n| multiplicity(&q.scaled(n)))
}

/// The polynomial `N ↦ c_{Nλ,Nμ}^{Nν}`.
pub fn tensor_polynomial(q: &TensorQuery) -> Result<RayFit> {
    fit_ray(q.rank(), |n| tensor_product(&q.scaled(n)))
}

/// Renders coefficients as `p/q` strings in increasing degree.
pub fn coefficient_strings(p: &RayPolynomial) -> Vec<String> {
    p.coefficients.iter().map(|c| c.to_string()).collect()
}
