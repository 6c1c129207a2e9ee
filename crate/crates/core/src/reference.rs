//! Independent reference implementations, deliberately naive and restricted
//! to small inputs: direct enumeration of partition counts, the Freudenthal
//! recursion for weight multiplicities, Littlewood–Richardson tableau
//! counting and the Weyl dimension formula.

use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::lattice::{in_positive_cone, rho, DominantWeight, RationalVector};

/// Largest coordinate magnitude accepted by [`kostant_partition_bruteforce`].
pub const PARTITION_BOX: i64 = 24;

/// Positive roots `(i, j)`, `i < j`, standing for `e_i − e_j` (0-based).
pub fn positive_roots(rank: usize) -> Vec<(usize, usize)> {
    (0..=rank).flat_map(|i| (i + 1..=rank).map(move |j| (i, j))).collect()
}

/// Table of partial counts keyed by the part of the target still to be covered.
pub type DpTable = HashMap<Vec<i64>, BigUint>;

fn small_integral(a: &RationalVector, bound: i64) -> Result<Vec<i64>> {
    let ints = a.to_integers().ok_or(Error::NotIntegral)?;
    ints.iter()
        .map(|x| x.to_i64().filter(|v| v.abs() <= bound))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::OutsideOracleDomain(format!("coordinates must satisfy |a_i| <= {bound}")))
}

pub fn kostant_partition_bruteforce(a: &RationalVector) -> Result<BigCount> {
    kostant_partition_bruteforce_ordered(a, &positive_roots(a.rank()))
}

/// Counts non-negative integer solutions of `Σ x_α α = a` by processing the
/// positive roots one at a time in the given order.
pub fn kostant_partition_bruteforce_ordered(a: &RationalVector, roots: &[(usize, usize)]) -> Result<BigCount> {
    let start = small_integral(a, PARTITION_BOX)?;
    if start.iter().sum::<i64>() != 0 {
        return Err(Error::NotZeroSum);
    }
    let in_cone = |v: &[i64]| {
        let mut s = 0;
        v.iter().all(|x| {
            s += x;
            s >= 0
        })
    };
    if !in_cone(&start) {
        return Ok(BigCount::default());
    }
    let mut table: DpTable = HashMap::new();
    table.insert(start, BigUint::one());
    for &(i, j) in roots {
        let mut next: DpTable = HashMap::new();
        for (v, c) in table {
            let mut w = v;
            // Subtracting e_i − e_j lowers the partial sums i..j−1; once the
            // remainder leaves the cone it cannot come back.
            while in_cone(&w) {
                *next.entry(w.clone()).or_default() += &c;
                w[i] -= 1;
                w[j] += 1;
            }
        }
        table = next;
    }
    let zero = alloc::vec![0; a.entries().len()];
    Ok(BigCount::new(table.remove(&zero).unwrap_or_default()))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |s, t| s + t)
}

fn sorted_desc(mut v: Vec<BigRational>) -> Vec<BigRational> {
    v.sort_by(|a, b| b.cmp(a));
    v
}

struct Freudenthal {
    top: Vec<BigRational>,
    rho: Vec<BigRational>,
    norm_top: BigRational,
    roots: Vec<(usize, usize)>,
    memo: HashMap<Vec<BigRational>, BigInt>,
}

impl Freudenthal {
    fn below_top(&self, mu: &[BigRational]) -> bool {
        let diff: Vec<BigRational> = self.top.iter().zip(mu).map(|(a, b)| a - b).collect();
        diff.iter().all(|x| x.is_integer()) && in_positive_cone(&RationalVector::new(diff).unwrap())
    }

    fn multiplicity(&mut self, mu: Vec<BigRational>) -> BigInt {
        let mu = sorted_desc(mu);
        if !self.below_top(&mu) {
            return BigInt::zero();
        }
        if mu == self.top {
            return BigInt::one();
        }
        if let Some(m) = self.memo.get(&mu) {
            return m.clone();
        }
        let mut acc = BigRational::zero();
        for (i, j) in self.roots.clone() {
            let mut shifted = mu.clone();
            loop {
                shifted[i] += BigRational::one();
                shifted[j] -= BigRational::one();
                if !self.below_top(&sorted_desc(shifted.clone())) {
                    break;
                }
                // (μ + kα, α) for α = e_i − e_j
                let pairing = &shifted[i] - &shifted[j];
                let m = self.multiplicity(shifted.clone());
                acc += pairing * BigRational::from_integer(m);
            }
        }
        let shifted_mu: Vec<BigRational> = mu.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let denom = &self.norm_top - dot(&shifted_mu, &shifted_mu);
        let value = acc * BigRational::from_integer(BigInt::from(2)) / denom;
        debug_assert!(value.is_integer());
        let value = value.to_integer();
        self.memo.insert(mu, value.clone());
        value
    }
}

/// Weight multiplicity by the Freudenthal recursion.
pub fn multiplicity_freudenthal(lambda: &DominantWeight, mu: &RationalVector) -> Result<BigCount> {
    let r = lambda.rank();
    if mu.rank() != r {
        return Err(Error::Length { expected: r + 1, found: mu.entries().len() });
    }
    let height: BigRational = lambda.fundamental().coords().iter().sum();
    if r > 6 || height > BigRational::from_integer(BigInt::from(24)) {
        return Err(Error::OutsideOracleDomain(
            "Freudenthal oracle needs rank <= 6 and fundamental coordinates summing to <= 24".into(),
        ));
    }
    let top = lambda.canonical().centered().into_entries();
    let rho = rho(r)?.into_entries();
    let shifted_top: Vec<BigRational> = top.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut f = Freudenthal {
        norm_top: dot(&shifted_top, &shifted_top),
        top,
        rho,
        roots: positive_roots(r),
        memo: HashMap::new(),
    };
    BigCount::from_signed(f.multiplicity(mu.centered().into_entries()))
}

/// `∏_{i<j} (l_i − l_j)/(j − i)` with `l = λ + ρ`.
pub fn weyl_dimension(lambda: &DominantWeight) -> BigCount {
    let l = lambda.canonical().entries();
    let n = l.len();
    let mut num = BigRational::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= &l[i] - &l[j] + BigRational::from_integer(BigInt::from(j - i));
            den *= BigInt::from(j - i);
        }
    }
    let value = num / BigRational::from_integer(den);
    debug_assert!(value.is_integer());
    BigCount::from_signed(value.to_integer()).expect("dimension of a dominant weight is positive")
}

fn to_partition(w: &DominantWeight) -> Vec<i64> {
    let e = w.canonical().entries();
    let last = e.last().unwrap();
    e.iter().map(|x| (x - last).to_integer().to_i64().unwrap()).collect()
}

/// Tensor-product multiplicity by counting Littlewood–Richardson tableaux of
/// shape `ν/λ` and content `μ`, after turning each weight into a partition
/// with at most `r + 1` rows.
pub fn tensor_bruteforce_lr(lambda: &DominantWeight, mu: &DominantWeight, nu: &DominantWeight) -> Result<BigCount> {
    let r = lambda.rank();
    if mu.rank() != r || nu.rank() != r {
        return Err(Error::Length { expected: r + 1, found: mu.canonical().entries().len() });
    }
    let total: BigRational = [lambda, mu, nu].iter().flat_map(|w| w.fundamental().coords().to_vec()).sum();
    if r > 4 || total > BigRational::from_integer(BigInt::from(40)) {
        return Err(Error::OutsideOracleDomain(
            "Littlewood-Richardson oracle needs rank <= 4 and small fundamental coordinates".into(),
        ));
    }
    // Root-lattice condition: the last coordinates must differ by an integer.
    let tails = [lambda, mu, nu].map(|w| w.canonical().entries()[r].clone());
    let gap = &tails[0] + &tails[1] - &tails[2];
    if !gap.is_integer() {
        return Ok(BigCount::default());
    }
    let lp = to_partition(lambda);
    let mp = to_partition(mu);
    let mut np = to_partition(nu);
    let excess = lp.iter().sum::<i64>() + mp.iter().sum::<i64>() - np.iter().sum::<i64>();
    let rows = (r + 1) as i64;
    if excess < 0 || excess % rows != 0 {
        return Ok(BigCount::default());
    }
    np.iter_mut().for_each(|x| *x += excess / rows);
    Ok(BigCount::from(count_lr_tableaux(&lp, &mp, &np)))
}

/// Number of Littlewood–Richardson tableaux of shape `outer/inner` with content `content`.
pub fn count_lr_tableaux(inner: &[i64], content: &[i64], outer: &[i64]) -> u64 {
    let rows = outer.len();
    if inner.len() != rows || inner.iter().zip(outer).any(|(a, b)| a > b) {
        return 0;
    }
    let boxes: i64 = outer.iter().zip(inner).map(|(o, i)| o - i).sum();
    if boxes != content.iter().sum::<i64>() {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (inner[i] as usize..outer[i] as usize).rev().map(move |c| (i, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&o| alloc::vec![0; o as usize]).collect();
    let mut used = alloc::vec![0i64; content.len() + 1];

    struct Ctx<'a> {
        inner: &'a [i64],
        outer: &'a [i64],
        content: &'a [i64],
        cells: &'a [(usize, usize)],
    }

    fn fill(ctx: &Ctx<'_>, pos: usize, grid: &mut [Vec<usize>], used: &mut [i64]) -> u64 {
        let Some(&(i, c)) = ctx.cells.get(pos) else { return 1 };
        let mut hi = ctx.content.len();
        if c + 1 < ctx.outer[i] as usize {
            hi = hi.min(grid[i][c + 1]);
        }
        let lo = if i > 0 && (c as i64) >= ctx.inner[i - 1] && (c as i64) < ctx.outer[i - 1] {
            grid[i - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if used[v] >= ctx.content[v - 1] || (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            used[v] += 1;
            grid[i][c] = v;
            total += fill(ctx, pos + 1, grid, used);
            used[v] -= 1;
        }
        grid[i][c] = 0;
        total
    }

    let ctx = Ctx { inner, outer, content, cells: &cells };
    fill(&ctx, 0, &mut grid, &mut used)
}
