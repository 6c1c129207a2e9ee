//! Multivariate Laurent polynomials with exact integer coefficients.
//!
//! The residue engine only ever needs one coefficient of a product in the
//! active variable, so [`TruncatedLaurentSeries::product_coefficient`] pairs
//! terms by exponent instead of forming the full product, and expansions of
//! factors are cut to a per-variable window.

use alloc::vec::Vec;
use core::ops::AddAssign;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponent tuple, one entry per variable slot.
pub type Exponents = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    nvars: usize,
    terms: HashMap<Exponents, BigInt>,
    /// Inclusive exponent bounds per variable; `None` means unbounded.
    window: Vec<Option<(i32, i32)>>,
}

impl TruncatedLaurentSeries {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: HashMap::new(), window: alloc::vec![None; nvars] }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(alloc::vec![0; nvars], c)
    }

    pub fn monomial(exponents: Exponents, c: BigInt) -> Self {
        let mut s = Self::zero(exponents.len());
        s.add_term(exponents, c);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn window(&self, var: usize) -> Option<(i32, i32)> {
        self.window[var]
    }

    /// Restricts variable `var` to exponents in `lo..=hi`, discarding the rest.
    pub fn truncate(&mut self, var: usize, lo: i32, hi: i32) {
        let (lo, hi) = match self.window[var] {
            Some((a, b)) => (lo.max(a), hi.min(b)),
            None => (lo, hi),
        };
        self.window[var] = Some((lo, hi));
        self.terms.retain(|e, _| (lo..=hi).contains(&e[var]));
    }

    fn admits(&self, exponents: &[i32]) -> bool {
        self.window
            .iter()
            .zip(exponents)
            .all(|(w, e)| w.is_none_or(|(lo, hi)| (lo..=hi).contains(e)))
    }

    /// Adds `c·z^e`; terms outside the window are dropped.
    pub fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() || !self.admits(&exponents) {
            return;
        }
        match self.terms.entry(exponents) {
            hashbrown::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            hashbrown::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Largest `p` such that some term carries `z_var^{-p}`; zero if none.
    pub fn pole_order(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| (-e[var]).max(0) as u32).max().unwrap_or(0)
    }

    /// Multiplies by `c·z^e`.
    pub fn mul_monomial(&self, exponents: &[i32], c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            let shifted = e.iter().zip(exponents).map(|(a, b)| a + b).collect();
            out.add_term(shifted, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        out.window = self.window.clone();
        for (e, v) in &other.terms {
            for (f, w) in &self.terms {
                let sum = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(sum, v * w);
            }
        }
        out
    }

    /// The coefficient of `z_var^power`, as a series in which `var` has
    /// exponent zero.
    pub fn coefficient_in(&self, var: usize, power: i32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            if e[var] == power {
                let mut e = e.clone();
                e[var] = 0;
                out.add_term(e, v.clone());
            }
        }
        out
    }

    /// The coefficient of `z_var^power` in `self · other`, without forming
    /// the rest of the product.
    pub fn product_coefficient(&self, other: &Self, var: usize, power: i32) -> Self {
        let mut slices: HashMap<i32, Vec<(&Exponents, &BigInt)>> = HashMap::new();
        for (e, v) in &other.terms {
            slices.entry(e[var]).or_default().push((e, v));
        }
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            let Some(slice) = slices.get(&(power - e[var])) else { continue };
            for (f, w) in slice {
                let mut sum: Exponents = e.iter().zip(f.iter()).map(|(a, b)| a + b).collect();
                sum[var] = 0;
                out.add_term(sum, v * *w);
            }
        }
        out
    }

    /// Residue at `z_var = 0` of a Laurent polynomial: its `z_var^{-1}` coefficient.
    pub fn residue(&self, var: usize) -> Self {
        self.coefficient_in(var, -1)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&alloc::vec![0; self.nvars])
    }
}

impl AddAssign<&TruncatedLaurentSeries> for TruncatedLaurentSeries {
    fn add_assign(&mut self, rhs: &TruncatedLaurentSeries) {
        for (e, v) in &rhs.terms {
            self.add_term(e.clone(), v.clone());
        }
    }
}

/// `C(e, 0), …, C(e, n−1)` for an arbitrary integer `e`, via falling factorials.
pub fn binomials(e: &BigInt, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n);
    let mut c = BigInt::one();
    for t in 0..n {
        if t > 0 {
            c = c * (e - BigInt::from(t - 1)) / BigInt::from(t);
        }
        out.push(c.clone());
    }
    out
}

/// Truncated expansion of `(1+z_var)^e` with exponents `0..n`.
pub fn binomial_expansion(nvars: usize, var: usize, e: &BigInt, n: usize) -> TruncatedLaurentSeries {
    let mut s = TruncatedLaurentSeries::zero(nvars);
    s.truncate(var, 0, n as i32 - 1);
    for (t, c) in binomials(e, n).into_iter().enumerate() {
        let mut exps = alloc::vec![0; nvars];
        exps[var] = t as i32;
        s.add_term(exps, c);
    }
    s
}
