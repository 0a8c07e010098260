//! Binomial coefficients, colexicographic ranking of k-subsets and subset iteration.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` in `u128`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial_big(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Table of `C(v, j)` for `v < n`, `j <= k`, used for colex ranks of k-subsets of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    k: usize,
    rows: Vec<usize>,
}

impl RankTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut rows = vec![0usize; n.max(1) * (k + 1)];
        for v in 0..n {
            rows[v * (k + 1)] = 1;
            for j in 1..=k {
                let above = if v == 0 {
                    0
                } else {
                    rows[(v - 1) * (k + 1) + j]
                };
                let diag = if v == 0 {
                    0
                } else {
                    rows[(v - 1) * (k + 1) + j - 1]
                };
                rows[v * (k + 1) + j] = above.saturating_add(diag);
            }
        }
        RankTable { k, rows }
    }

    #[inline]
    pub fn choose(&self, v: usize, j: usize) -> usize {
        self.rows[v * (self.k + 1) + j]
    }

    /// Colex rank of a strictly increasing k-subset.
    #[inline]
    pub fn rank(&self, subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &c)| self.choose(c, i + 1))
            .sum()
    }

    /// Colex rank of a k-subset given unsorted; sorts a small copy.
    pub fn rank_unsorted(&self, subset: &[usize]) -> usize {
        let mut buf: Vec<usize> = subset.to_vec();
        buf.sort_unstable();
        self.rank(&buf)
    }
}

/// Colex rank without a table.
pub fn colex_rank(subset: &[usize]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c as u64, i as u64 + 1).unwrap_or(u128::MAX))
        .sum()
}

/// Inverse of [`colex_rank`] for k-subsets.
pub fn colex_unrank(mut rank: u128, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (0..k).rev() {
        let j = i as u64 + 1;
        // largest c with C(c, j) <= rank
        let mut c = i;
        while binomial(c as u64 + 1, j).unwrap_or(u128::MAX) <= rank {
            c += 1;
        }
        rank -= binomial(c as u64, j).unwrap_or(0);
        out[i] = c;
    }
    out
}

/// Iterator over the k-subsets of `0..n` in colexicographic order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        ColexSubsets {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k {
                self.current[i + 1]
            } else {
                self.n
            };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// Iterator over the k-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct LexSubsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        LexSubsets {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for LexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(16, 4), Some(1820));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial_big(30, 15).to_string(), "155117520");
        assert_eq!(factorial_big(5), BigUint::from(120u32));
    }

    #[test]
    fn colex_iteration_matches_rank() {
        for (n, k) in [(6, 2), (7, 3), (8, 4), (5, 5), (4, 1)] {
            let table = RankTable::new(n, k);
            let all: Vec<_> = ColexSubsets::new(n, k).collect();
            assert_eq!(all.len() as u128, binomial(n as u64, k as u64).unwrap());
            for (i, s) in all.iter().enumerate() {
                assert_eq!(table.rank(s), i);
                assert_eq!(colex_rank(s), i as u128);
                assert_eq!(&colex_unrank(i as u128, k), s);
            }
        }
    }

    #[test]
    fn lex_iteration() {
        let all: Vec<_> = LexSubsets::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(LexSubsets::new(3, 0).count(), 1);
        assert_eq!(LexSubsets::new(2, 3).count(), 0);
    }
}
