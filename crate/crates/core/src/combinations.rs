//! Lexicographic enumeration of the l-subsets of `{0, .., n-1}` and the
//! base-n rank map that certifies the ordering.
//!
//! The iterator reproduces, state for state, the eight-step index-increment
//! algorithm: keep the tuple ascending, bump the rightmost entry that has
//! room, and reset everything to its right to the smallest legal run.

use crate::Error;
use num::BigUint;

/// A strictly increasing tuple of integers in `[0, n-1]`, identifying the
/// factors removed from a falling factorial of order `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MissingFactorSet {
    n: usize,
    members: Vec<usize>,
}

impl MissingFactorSet {
    /// Validates that `members` is strictly increasing with every member
    /// below `n`.
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self, Error> {
        let ascending = members.windows(2).all(|w| w[0] < w[1]);
        if !ascending || members.last().is_some_and(|&m| m >= n) {
            return Err(Error::InvalidMissingSet { n });
        }
        Ok(MissingFactorSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        MissingFactorSet {
            n,
            members: Vec::new(),
        }
    }

    /// Universe size `n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    /// Splits off the largest member, keeping the universe.
    pub fn dropping_last(&self) -> Option<(MissingFactorSet, usize)> {
        let (&last, rest) = self.members.split_last()?;
        Some((
            MissingFactorSet {
                n: self.n,
                members: rest.to_vec(),
            },
            last,
        ))
    }

    /// The same members reinterpreted in a universe of size `n`.
    pub fn in_universe(&self, n: usize) -> Result<MissingFactorSet, Error> {
        MissingFactorSet::new(n, self.members.clone())
    }
}

/// Resumable iterator over the l-subsets of `{0, .., n-1}` in lexicographic
/// order. The first item is `<0, 1, .., l-1>`; `l = 0` yields exactly one
/// empty set.
pub struct SubsetIter {
    n: usize,
    l: usize,
    upper: Vec<usize>,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = MissingFactorSet;

    fn next(&mut self) -> Option<MissingFactorSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else {
            let mut i = self.l;
            while i >= 1 && self.current[i - 1] >= self.upper[i - 1] {
                i -= 1;
            }
            if i == 0 {
                self.done = true;
                return None;
            }
            self.current[i - 1] += 1;
            for j in i + 1..=self.l {
                self.current[j - 1] = self.current[i - 1] + (j - i);
            }
        }
        Some(MissingFactorSet {
            n: self.n,
            members: self.current.clone(),
        })
    }
}

/// All l-subsets of `{0, .., n-1}` in lexicographic order. Errors when
/// `l > n`.
pub fn enumerate_subsets(n: usize, l: usize) -> Result<SubsetIter, Error> {
    if l > n {
        return Err(Error::SubsetTooLarge { n, l });
    }
    Ok(SubsetIter {
        n,
        l,
        upper: (n - l..n).collect(),
        current: (0..l).collect(),
        started: false,
        done: false,
    })
}

/// Reads the members as base-n digits, most significant first: successive
/// enumeration outputs map to strictly increasing values, which certifies
/// their distinctness.
pub fn rank_value(s: &MissingFactorSet) -> BigUint {
    let n = BigUint::from(s.universe());
    let mut acc = BigUint::from(0u32);
    for &k in s.members() {
        acc = acc * &n + BigUint::from(k);
    }
    acc
}
