//! Pruned enumeration of the Weyl group elements that contribute to the
//! Kostant and Steinberg sums.
//!
//! A permutation `w` of `{1, …, r+1}` is valid for `(u, v)` when
//! `w(u) − v = (u_{w(1)} − v_1, …)` lies in the positive-root cone, i.e. when
//! `u_{w(1)} + ⋯ + u_{w(k)} ≥ v_1 + ⋯ + v_k` for every `k`. Prefixes are
//! grown one position at a time and dropped as soon as an inequality fails.
//! The cumulative sums of `v` are computed once, every prefix carries its
//! running sum, and the frontier is a flat table.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::RationalVector;
use crate::permutation::Permutation;

/// Default cap on the number of live prefixes.
pub const DEFAULT_FRONTIER_LIMIT: usize = 1 << 26;

/// Frontier of partial index sequences, all of the same length, with the
/// running sum of `u` over each.
#[derive(Clone, Debug)]
pub struct PrefixState {
    depth: usize,
    chosen: Vec<usize>,
    partial_sums: Vec<BigRational>,
}

impl PrefixState {
    fn empty(depth: usize) -> Self {
        Self { depth, chosen: Vec::new(), partial_sums: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.partial_sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partial_sums.is_empty()
    }

    pub fn prefix(&self, k: usize) -> &[usize] {
        &self.chosen[k * self.depth..(k + 1) * self.depth]
    }

    pub fn partial_sum(&self, k: usize) -> &BigRational {
        &self.partial_sums[k]
    }

    fn push(&mut self, prefix: &[usize], next: usize, sum: BigRational) {
        self.chosen.extend_from_slice(prefix);
        self.chosen.push(next);
        self.partial_sums.push(sum);
    }
}

fn cumulative(v: &RationalVector) -> Vec<BigRational> {
    v.entries()
        .iter()
        .scan(BigRational::from_integer(0.into()), |acc, x| {
            *acc += x;
            Some(acc.clone())
        })
        .collect()
}

/// Indices sorted by decreasing value, so extension loops can stop at the
/// first failing candidate.
fn descending_order(u: &RationalVector) -> Vec<usize> {
    let mut order: Vec<usize> = (0..u.entries().len()).collect();
    order.sort_by(|&a, &b| u.entries()[b].cmp(&u.entries()[a]));
    order
}

fn check_sums(lhs: BigRational, v: &RationalVector) -> Result<()> {
    let rhs = v.sum();
    if lhs != rhs {
        return Err(Error::UnequalSums { left: lhs.to_string(), right: rhs.to_string() });
    }
    Ok(())
}

fn check_len(u: &RationalVector, v: &RationalVector) -> Result<()> {
    if u.rank() != v.rank() {
        return Err(Error::Length { expected: v.entries().len(), found: u.entries().len() });
    }
    Ok(())
}

pub fn valid_permutations(u: &RationalVector, v: &RationalVector) -> Result<Vec<Permutation>> {
    valid_permutations_limited(u, v, DEFAULT_FRONTIER_LIMIT)
}

/// All `w ∈ Σ_{r+1}` with `w(u) − v` in the positive-root cone.
pub fn valid_permutations_limited(
    u: &RationalVector,
    v: &RationalVector,
    limit: usize,
) -> Result<Vec<Permutation>> {
    check_len(u, v)?;
    check_sums(u.sum(), v)?;
    let bounds = cumulative(v);
    let order = descending_order(u);
    let coords = u.entries();

    let mut frontier = PrefixState::empty(0);
    frontier.partial_sums.push(BigRational::from_integer(0.into()));
    for (depth, bound) in bounds.iter().enumerate() {
        let mut next = PrefixState::empty(depth + 1);
        for k in 0..frontier.len() {
            let prefix = frontier.prefix(k);
            for &i in &order {
                if prefix.contains(&i) {
                    continue;
                }
                let sum = frontier.partial_sum(k) + &coords[i];
                if &sum < bound {
                    break;
                }
                next.push(prefix, i, sum);
            }
            if next.len() > limit {
                return Err(Error::SearchLimit { limit });
            }
        }
        frontier = next;
    }
    Ok((0..frontier.len())
        .map(|k| Permutation::from_images_unchecked(frontier.prefix(k).to_vec()))
        .collect())
}

pub fn valid_couples(
    u1: &RationalVector,
    u2: &RationalVector,
    v: &RationalVector,
) -> Result<Vec<(Permutation, Permutation)>> {
    valid_couples_limited(u1, u2, v, DEFAULT_FRONTIER_LIMIT)
}

/// All `(w₁, w₂)` with `w₁(u₁) + w₂(u₂) − v` in the positive-root cone.
///
/// Both sequences are extended in lockstep since the inequality at position
/// `k` involves the first `k` entries of each.
pub fn valid_couples_limited(
    u1: &RationalVector,
    u2: &RationalVector,
    v: &RationalVector,
    limit: usize,
) -> Result<Vec<(Permutation, Permutation)>> {
    check_len(u1, v)?;
    check_len(u2, v)?;
    check_sums(u1.sum() + u2.sum(), v)?;
    let n = v.entries().len();
    let bounds = cumulative(v);
    let order1 = descending_order(u1);
    let order2 = descending_order(u2);
    let (c1, c2) = (u1.entries(), u2.entries());

    // Interleaved table: the first `depth` indices belong to w₁, the next to w₂.
    let mut chosen: Vec<usize> = Vec::new();
    let mut sums: Vec<BigRational> = alloc::vec![BigRational::from_integer(0.into())];
    for (depth, bound) in bounds.iter().enumerate() {
        let stride = 2 * depth;
        let mut next_chosen = Vec::new();
        let mut next_sums = Vec::new();
        for (k, base) in sums.iter().enumerate() {
            let row = &chosen[k * stride..(k + 1) * stride];
            let (p1, p2) = row.split_at(depth);
            // Largest value still available to the second sequence.
            let Some(best2) = order2.iter().find(|j| !p2.contains(j)) else { continue };
            for &i in &order1 {
                if p1.contains(&i) {
                    continue;
                }
                let with_first = base + &c1[i];
                if &(&with_first + &c2[*best2]) < bound {
                    break;
                }
                for &j in &order2 {
                    if p2.contains(&j) {
                        continue;
                    }
                    let sum = &with_first + &c2[j];
                    if &sum < bound {
                        break;
                    }
                    next_chosen.extend_from_slice(p1);
                    next_chosen.push(i);
                    next_chosen.extend_from_slice(p2);
                    next_chosen.push(j);
                    next_sums.push(sum);
                }
            }
            if next_sums.len() > limit {
                return Err(Error::SearchLimit { limit });
            }
        }
        chosen = next_chosen;
        sums = next_sums;
    }
    Ok(chosen
        .chunks(2 * n)
        .map(|row| {
            let (a, b) = row.split_at(n);
            (Permutation::from_images_unchecked(a.to_vec()), Permutation::from_images_unchecked(b.to_vec()))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::lattice::in_positive_cone;

    fn ints(v: &[i64]) -> RationalVector {
        RationalVector::from_integers(v).unwrap()
    }

    fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
        v.sort();
        v
    }

    fn filter_all(u: &RationalVector, v: &RationalVector) -> Vec<Permutation> {
        Permutation::all(u.entries().len())
            .into_iter()
            .filter(|w| in_positive_cone(&(&u.permuted(w.images()) - v)))
            .collect()
    }

    #[test]
    fn rank_one_examples() {
        let got = valid_permutations(&ints(&[1, -1]), &ints(&[0, 0])).unwrap();
        assert_eq!(got, vec![Permutation::identity(2)]);
    }

    #[test]
    fn rank_two_example_matches_filter() {
        let (u, v) = (ints(&[2, 0, -2]), ints(&[1, 0, -1]));
        let got = sorted(valid_permutations(&u, &v).unwrap());
        assert_eq!(got, filter_all(&u, &v));
        // u_{w(1)} ≥ 1 forces w(1) = 1, then u_{w(1)} + u_{w(2)} ≥ 1 forces w(2) = 2.
        assert_eq!(got, vec![Permutation::identity(3)]);
    }

    #[test]
    fn identity_is_valid_for_decreasing_vectors() {
        let u = crate::lattice::rho(4).unwrap();
        assert!(valid_permutations(&u, &u).unwrap().contains(&Permutation::identity(5)));
    }

    #[test]
    fn unequal_sums_are_rejected() {
        let err = valid_permutations(&ints(&[1, 0]), &ints(&[0, 0])).unwrap_err();
        assert_eq!(err.code(), "unequal_sums");
        let err = valid_couples(&ints(&[1, -1]), &ints(&[1, 0]), &ints(&[0, 0])).unwrap_err();
        assert_eq!(err.code(), "unequal_sums");
    }

    #[test]
    fn couple_examples() {
        let (id, sw) = (Permutation::identity(2), Permutation::from_one_based(&[2, 1]).unwrap());
        let u = ints(&[1, -1]);
        assert_eq!(valid_couples(&u, &u, &ints(&[2, -2])).unwrap(), vec![(id.clone(), id.clone())]);
        let got = sorted(valid_couples(&u, &u, &ints(&[0, 0])).unwrap());
        assert_eq!(got, vec![(id.clone(), id.clone()), (id.clone(), sw.clone()), (sw, id)]);
    }

    #[test]
    fn limit_is_enforced() {
        let u = ints(&[0, 0, 0, 0, 0, 0]);
        let err = valid_permutations_limited(&u, &u, 10).unwrap_err();
        assert!(err.is_resource_exhaustion());
    }
}
