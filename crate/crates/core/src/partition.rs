//! Integer partitions, hook lengths and the hook-length dimension formula.
//!
//! Rows and columns are 1-based: cell `(i, j)` is the `j`-th box of the
//! `i`-th row of the Ferrers–Young diagram.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a non-increasing sequence of positive parts.
///
/// The empty sequence is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` and wraps them.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from non-increasing parts that may end in zeros,
    /// dropping the zeros.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based), zero past the last part.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based): the number of parts `>= j`.
    pub fn column(&self, j: usize) -> usize {
        self.parts.partition_point(|&p| p >= j)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    /// The transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        Partition {
            parts: (1..=width).map(|j| self.column(j)).collect(),
        }
    }

    /// Hook length `h(i, j) = (λ_i - j) + (λ'_j - i) + 1`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutsideDiagram { row: i, col: j });
        }
        Ok(self.hook_unchecked(i, j))
    }

    fn hook_unchecked(&self, i: usize, j: usize) -> usize {
        (self.row(i) - j) + (self.column(j) - i) + 1
    }

    /// Hook lengths laid out like the diagram, one `Vec` per row.
    pub fn hook_rows(&self) -> Vec<Vec<usize>> {
        let cols: Vec<usize> = (1..=self.row(1)).map(|j| self.column(j)).collect();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let i = r + 1;
                (1..=len)
                    .map(|j| (len - j) + (cols[j - 1] - i) + 1)
                    .collect()
            })
            .collect()
    }

    /// The multiset of hook lengths over all cells.
    pub fn hook_multiset(&self) -> HookMultiset {
        HookMultiset::from_unsorted(self.hook_rows().into_iter().flatten().collect())
    }

    /// `h_t(λ)`: the number of cells whose hook length is divisible by `t`.
    pub fn count_t_hooks(&self, t: usize) -> Result<usize> {
        if t < 2 {
            return Err(Error::InvalidHookModulus(t));
        }
        Ok(self
            .hook_rows()
            .iter()
            .flatten()
            .filter(|&&h| h % t == 0)
            .count())
    }

    /// True when no hook length is divisible by `t`.
    pub fn is_t_core(&self, t: usize) -> Result<bool> {
        Ok(self.count_t_hooks(t)? == 0)
    }

    /// Dimension of the irreducible representation of `S_n` indexed by this
    /// partition: `n! / ∏ h(i, j)`, in exact integer arithmetic.
    pub fn representation_dimension(&self) -> BigUint {
        let factorial = (1..=self.size()).fold(BigUint::one(), |acc, k| acc * k);
        let hooks = self
            .hook_rows()
            .into_iter()
            .flatten()
            .fold(BigUint::one(), |acc, h| acc * h);
        let (dim, rem) = factorial.div_rem(&hooks);
        assert!(rem.is_zero(), "hook product does not divide n! for {self}");
        dim
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; `∅` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`. The empty string and `"∅"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// The multiset of hook lengths of a partition, kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HookMultiset {
    entries: Vec<usize>,
}

impl HookMultiset {
    pub fn from_unsorted(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self { entries }
    }

    /// Entries in descending order.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.entries.first().copied()
    }

    /// Number of entries divisible by `t`.
    pub fn count_divisible_by(&self, t: usize) -> usize {
        self.entries.iter().filter(|&&h| h % t == 0).count()
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order:
/// `(n), (n-1,1), (n-2,2), (n-2,1,1), …, (1,…,1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition {
            parts: current.clone(),
        };

        // Successor: decrement the last part > 1, then refill greedily.
        let mut parts = current;
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let v = last - 1;
            let mut rem = ones + 1 + v;
            while rem >= v {
                parts.push(v);
                rem -= v;
            }
            if rem > 0 {
                parts.push(rem);
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// All partitions of `n`, reverse-lexicographic.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let lambda: Partition = "5, 3,2,1".parse().unwrap();
        assert_eq!(lambda.parts(), &[5, 3, 2, 1]);
        assert_eq!(lambda.to_string(), "5,3,2,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "∅");
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let five = enumerate_partitions(5);
        assert_eq!(five.len(), 7);
        let expected = [
            vec![5],
            vec![4, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ];
        for (got, want) in five.iter().zip(expected.iter()) {
            assert_eq!(got.parts(), want.as_slice());
        }
    }

    #[test]
    fn enumeration_is_strictly_descending_and_distinct() {
        for n in 0..=20 {
            let all = enumerate_partitions(n);
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
            assert!(all.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn staircase_hooks() {
        let lambda = p(&[3, 2, 1]);
        assert_eq!(lambda.hook_rows(), vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(lambda.hook_length(1, 1).unwrap(), 5);
        assert_eq!(lambda.hook_length(2, 2).unwrap(), 1);
        assert_eq!(lambda.hook_multiset().entries(), &[5, 3, 3, 1, 1, 1]);
        assert_eq!(lambda.count_t_hooks(2).unwrap(), 0);
        assert_eq!(lambda.count_t_hooks(3).unwrap(), 2);
    }

    #[test]
    fn hook_errors() {
        let lambda = p(&[3, 2, 1]);
        assert_eq!(
            lambda.hook_length(2, 3),
            Err(Error::CellOutsideDiagram { row: 2, col: 3 })
        );
        assert!(lambda.hook_length(0, 1).is_err());
        assert!(lambda.hook_length(4, 1).is_err());
        assert_eq!(lambda.count_t_hooks(1), Err(Error::InvalidHookModulus(1)));
        assert_eq!(p(&[1]).hook_length(1, 1).unwrap(), 1);
    }

    #[test]
    fn hooks_of_5321() {
        let lambda = p(&[5, 3, 2, 1]);
        let mut expected = vec![8, 6, 4, 2, 1, 5, 3, 1, 3, 1, 1];
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(lambda.hook_multiset().entries(), expected.as_slice());
        assert_eq!(lambda.count_t_hooks(3).unwrap(), 3);
        assert!(Partition::empty().hook_multiset().is_empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dimensions() {
        assert_eq!(
            p(&[3, 2, 1]).representation_dimension(),
            BigUint::from(16u32)
        );
        assert_eq!(p(&[7]).representation_dimension(), BigUint::one());
        assert_eq!(p(&[1; 7]).representation_dimension(), BigUint::one());
        assert_eq!(
            Partition::empty().representation_dimension(),
            BigUint::one()
        );
    }

    #[test]
    fn hook_multiset_is_conjugation_invariant() {
        for n in 0..=18 {
            for lambda in Partitions::new(n) {
                assert_eq!(lambda.hook_multiset(), lambda.conjugate().hook_multiset());
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn hook_multiset_shape_invariants() {
        for n in 1..=12 {
            for lambda in Partitions::new(n) {
                let hooks = lambda.hook_multiset();
                assert_eq!(hooks.len(), n);
                let max = hooks.max().unwrap();
                assert_eq!(max, lambda.hook_length(1, 1).unwrap());
                assert_eq!(hooks.entries().iter().filter(|&&h| h == max).count(), 1);
                for t in 2..=5 {
                    assert_eq!(
                        hooks.count_divisible_by(t),
                        lambda.count_t_hooks(t).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hook_length_matches_set_cardinality() {
        for lambda in Partitions::new(9) {
            for i in 1..=lambda.len() {
                for j in 1..=lambda.row(i) {
                    let arm = (j..=lambda.row(i)).count();
                    let leg = (i + 1..=lambda.len())
                        .filter(|&a| lambda.row(a) >= j)
                        .count();
                    assert_eq!(lambda.hook_length(i, j).unwrap(), arm + leg);
                }
            }
        }
    }

    #[test]
    fn burnside_sum_of_squares() {
        for n in 0..=10 {
            let total: BigUint = Partitions::new(n)
                .map(|l| {
                    let d = l.representation_dimension();
                    &d * &d
                })
                .sum();
            let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * k);
            assert_eq!(total, fact, "n = {n}");
        }
    }
}
