//! Structure numbers, the `t`-runner abacus, and the core/quotient bijection.
//!
//! A bead at row `r >= 1` on runner `c` (`0 <= c < t`) encodes the structure
//! number `B = t(r - 1) + c`. Sliding a bead up one row subtracts `t` from its
//! structure number, which removes one rim `t`-hook from the decoded
//! partition.
//!
//! Bead-count convention: unless a count is given explicitly, a partition is
//! placed on the abacus with `s` beads, `s` the least multiple of `t` that is
//! at least the number of parts. Changing `s` by one cyclically relabels the
//! runners, so pinning `s ≡ 0 (mod t)` pins the order of quotient components.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Strictly decreasing first-column hook lengths `B_i = λ_i - i + s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureNumbers {
    values: Vec<usize>,
}

impl StructureNumbers {
    /// Structure numbers of `λ` with `s = pad_to` beads (default: one per
    /// part). Padded zero parts contribute `B_i = s - i`.
    pub fn of(lambda: &Partition, pad_to: Option<usize>) -> Result<Self> {
        let parts = lambda.len();
        let s = pad_to.unwrap_or(parts);
        if s < parts {
            return Err(Error::PaddingTooSmall {
                parts,
                requested: s,
            });
        }
        let values = (1..=s).map(|i| lambda.row(i) + s - i).collect();
        Ok(Self { values })
    }

    /// Wraps an arbitrary finite set of non-negative integers.
    pub fn from_set(values: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = values.into_iter().collect();
        Self {
            values: set.into_iter().rev().collect(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn bead_count(&self) -> usize {
        self.values.len()
    }

    /// `λ_i = B_i + i - s`, trailing zeros dropped.
    pub fn to_partition(&self) -> Partition {
        let s = self.values.len();
        Partition::from_padded(
            self.values
                .iter()
                .enumerate()
                .map(|(k, &b)| b + k + 1 - s)
                .collect(),
        )
    }
}

/// A bead position: 1-based row, 0-based runner (column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bead {
    pub row: usize,
    pub col: usize,
}

impl Bead {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// The bead encoding structure number `b` on a `t`-runner abacus.
    pub fn for_structure_number(b: usize, t: usize) -> Self {
        Self {
            row: b / t + 1,
            col: b % t,
        }
    }

    pub fn structure_number(self, t: usize) -> usize {
        t * (self.row - 1) + self.col
    }
}

/// An abacus with `t` runners. Each runner holds the set of occupied rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    runners: Vec<BTreeSet<usize>>,
}

fn check_t(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::InvalidHookModulus(t))
    } else {
        Ok(())
    }
}

/// Least multiple of `t` that is `>= parts`.
pub fn padded_bead_count(parts: usize, t: usize) -> usize {
    parts.div_ceil(t) * t
}

impl Abacus {
    /// An abacus with no beads.
    pub fn empty(t: usize) -> Result<Self> {
        check_t(t)?;
        Ok(Self {
            runners: vec![BTreeSet::new(); t],
        })
    }

    pub fn from_beads(t: usize, beads: impl IntoIterator<Item = Bead>) -> Result<Self> {
        let mut abacus = Self::empty(t)?;
        for bead in beads {
            if bead.row == 0 || bead.col >= t {
                return Err(Error::InvalidBeadPosition {
                    row: bead.row,
                    col: bead.col,
                    runners: t,
                });
            }
            if !abacus.runners[bead.col].insert(bead.row) {
                return Err(Error::DuplicateBead {
                    row: bead.row,
                    col: bead.col,
                });
            }
        }
        Ok(abacus)
    }

    pub fn from_structure_numbers(t: usize, numbers: &StructureNumbers) -> Result<Self> {
        check_t(t)?;
        let mut abacus = Self::empty(t)?;
        for &b in numbers.values() {
            let bead = Bead::for_structure_number(b, t);
            abacus.runners[bead.col].insert(bead.row);
        }
        Ok(abacus)
    }

    /// Abacus of `λ` with the padded bead count (least multiple of `t`).
    pub fn from_partition(lambda: &Partition, t: usize) -> Result<Self> {
        check_t(t)?;
        Self::with_bead_count(lambda, t, padded_bead_count(lambda.len(), t))
    }

    /// Abacus of `λ` with exactly `s` beads.
    pub fn with_bead_count(lambda: &Partition, t: usize, s: usize) -> Result<Self> {
        Self::from_structure_numbers(t, &StructureNumbers::of(lambda, Some(s))?)
    }

    pub fn runner_count(&self) -> usize {
        self.runners.len()
    }

    pub fn bead_count(&self) -> usize {
        self.runners.iter().map(BTreeSet::len).sum()
    }

    pub fn contains(&self, bead: Bead) -> bool {
        self.runners
            .get(bead.col)
            .is_some_and(|rows| rows.contains(&bead.row))
    }

    /// All beads, ordered by runner then row.
    pub fn beads(&self) -> Vec<Bead> {
        self.runners
            .iter()
            .enumerate()
            .flat_map(|(col, rows)| rows.iter().map(move |&row| Bead { row, col }))
            .collect()
    }

    /// Occupied rows of runner `c`, ascending.
    pub fn runner(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.runners[c].iter().copied()
    }

    pub fn column_counts(&self) -> Vec<usize> {
        self.runners.iter().map(BTreeSet::len).collect()
    }

    pub fn structure_numbers(&self) -> StructureNumbers {
        let t = self.runner_count();
        StructureNumbers::from_set(self.beads().into_iter().map(|b| b.structure_number(t)))
    }

    pub fn to_partition(&self) -> Partition {
        self.structure_numbers().to_partition()
    }

    /// True when every runner is filled from row 1 with no gaps.
    pub fn is_gapless(&self) -> bool {
        self.runners
            .iter()
            .all(|rows| rows.last().map_or(true, |&last| last == rows.len()))
    }

    /// Moves `bead` from `(r, c)` to `(r - 1, c)`, removing one rim `t`-hook
    /// from the decoded partition.
    pub fn slide_bead(&self, bead: Bead) -> Result<Abacus> {
        if !self.contains(bead) {
            return Err(Error::BeadAbsent {
                row: bead.row,
                col: bead.col,
            });
        }
        if bead.row == 1 {
            return Err(Error::BeadInTopRow {
                row: bead.row,
                col: bead.col,
            });
        }
        let rows = &self.runners[bead.col];
        if rows.contains(&(bead.row - 1)) {
            return Err(Error::SlideTargetOccupied {
                row: bead.row,
                col: bead.col,
            });
        }
        let mut next = self.clone();
        let rows = &mut next.runners[bead.col];
        rows.remove(&bead.row);
        rows.insert(bead.row - 1);
        Ok(next)
    }

    /// Beads that can currently slide up.
    pub fn slidable_beads(&self) -> Vec<Bead> {
        self.beads()
            .into_iter()
            .filter(|b| b.row > 1 && !self.runners[b.col].contains(&(b.row - 1)))
            .collect()
    }

    /// Slides every bead as far up as it goes. Runners are processed left to
    /// right and each runner bottom to top; each move is a single
    /// [`slide_bead`](Self::slide_bead).
    pub fn slide_all_up(&self) -> Abacus {
        let mut current = self.clone();
        for c in 0..self.runner_count() {
            loop {
                let next = current.runners[c]
                    .iter()
                    .rev()
                    .copied()
                    .find(|&r| r > 1 && !current.runners[c].contains(&(r - 1)));
                match next {
                    Some(row) => {
                        current = current
                            .slide_bead(Bead { row, col: c })
                            .expect("bead was checked to be slidable");
                    }
                    None => break,
                }
            }
        }
        current
    }

    /// Gapless abacus with the given column counts.
    pub fn from_column_counts(counts: &[usize]) -> Result<Self> {
        check_t(counts.len())?;
        Ok(Self {
            runners: counts.iter().map(|&a| (1..=a).collect()).collect(),
        })
    }
}

impl fmt::Display for Abacus {
    /// Row-by-row picture: `o` for a bead, `.` for an empty position.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let depth = self
            .runners
            .iter()
            .filter_map(|rows| rows.last().copied())
            .max()
            .unwrap_or(0);
        for r in 1..=depth {
            write!(f, "{r:>3} |")?;
            for rows in &self.runners {
                f.write_str(if rows.contains(&r) { " o" } else { " ." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The unique representative `(0, a_1, …, a_{t-1})` of a `t`-core abacus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalCoreAbacus {
    column_counts: Vec<usize>,
}

impl CanonicalCoreAbacus {
    /// Normalizes a gapless abacus. The shift
    /// `(a_0, …, a_{t-1}) -> (a_1, …, a_{t-1}, a_0 - 1)` drops the bead
    /// encoding structure number 0 and relabels runners; it is applied until
    /// runner 0 is empty.
    pub fn from_abacus(abacus: &Abacus) -> Result<Self> {
        if let Some(runner) = abacus
            .runners
            .iter()
            .position(|rows| rows.last().is_some_and(|&last| last != rows.len()))
        {
            return Err(Error::GappedAbacus { runner });
        }
        let mut counts = abacus.column_counts();
        while counts[0] > 0 {
            counts[0] -= 1;
            counts.rotate_left(1);
        }
        Ok(Self {
            column_counts: counts,
        })
    }

    /// Accepts a tuple with `a_0 = 0`.
    pub fn new(column_counts: Vec<usize>) -> Result<Self> {
        check_t(column_counts.len())?;
        if column_counts[0] != 0 {
            return Self::from_abacus(&Abacus::from_column_counts(&column_counts)?);
        }
        Ok(Self { column_counts })
    }

    pub fn column_counts(&self) -> &[usize] {
        &self.column_counts
    }

    pub fn runner_count(&self) -> usize {
        self.column_counts.len()
    }

    pub fn to_abacus(&self) -> Abacus {
        Abacus::from_column_counts(&self.column_counts).expect("t >= 2 checked at construction")
    }

    pub fn to_partition(&self) -> Partition {
        self.to_abacus().to_partition()
    }

    /// Size of the decoded core, from the column counts alone:
    /// `Σ B - s(s-1)/2` with `Σ B = Σ_c (t·a_c(a_c-1)/2 + c·a_c)`.
    pub fn core_size(&self) -> usize {
        core_size_from_counts(&self.column_counts)
    }
}

pub(crate) fn core_size_from_counts(counts: &[usize]) -> usize {
    let t = counts.len();
    let s: usize = counts.iter().sum();
    let beta_sum: usize = counts
        .iter()
        .enumerate()
        .map(|(c, &a)| t * a * a.saturating_sub(1) / 2 + c * a)
        .sum();
    beta_sum - s * s.saturating_sub(1) / 2
}

/// A `t`-core together with its `t`-quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    /// `Σ |λ_c|`, which equals the number of `t`-hooks of the composed
    /// partition.
    pub fn quotient_size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    /// `|core| + t · Σ |λ_c|`.
    pub fn total_size(&self) -> usize {
        self.core.size() + self.t * self.quotient_size()
    }
}

/// Slides every bead of the padded abacus up and decodes.
pub fn t_core(lambda: &Partition, t: usize) -> Result<Partition> {
    Ok(Abacus::from_partition(lambda, t)?
        .slide_all_up()
        .to_partition())
}

/// Rows `r_1 < … < r_m` on a runner give structure numbers `r_j - 1` with
/// `m` beads.
fn runner_partition(rows: &BTreeSet<usize>) -> Partition {
    StructureNumbers::from_set(rows.iter().map(|r| r - 1)).to_partition()
}

/// The bijection `λ -> (core, (λ_0, …, λ_{t-1}))`.
pub fn decompose(lambda: &Partition, t: usize) -> Result<CoreQuotient> {
    let abacus = Abacus::from_partition(lambda, t)?;
    let core = abacus.slide_all_up().to_partition();
    let quotient = abacus.runners.iter().map(runner_partition).collect();
    Ok(CoreQuotient { t, core, quotient })
}

/// Inverse of [`decompose`].
pub fn compose(cq: &CoreQuotient) -> Result<Partition> {
    let t = cq.t;
    check_t(t)?;
    if cq.quotient.len() != t {
        return Err(Error::QuotientArity {
            got: cq.quotient.len(),
            expected: t,
        });
    }
    if !cq.core.is_t_core(t)? {
        return Err(Error::NotACore {
            partition: cq.core.to_string(),
            t,
        });
    }
    // Adding t beads adds one bead to every runner; grow until each runner
    // can hold its quotient component.
    let base = Abacus::from_partition(&cq.core, t)?.column_counts();
    let extra = cq
        .quotient
        .iter()
        .zip(&base)
        .map(|(q, &a)| q.len().saturating_sub(a))
        .max()
        .unwrap_or(0);
    let mut runners = Vec::with_capacity(t);
    for (q, &a) in cq.quotient.iter().zip(&base) {
        let m = a + extra;
        let rows: BTreeSet<usize> = StructureNumbers::of(q, Some(m))?
            .values()
            .iter()
            .map(|b| b + 1)
            .collect();
        runners.push(rows);
    }
    Ok(Abacus { runners }.to_partition())
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::partition::Partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn beads(list: &[(usize, usize)]) -> Vec<Bead> {
        list.iter().map(|&(row, col)| Bead { row, col }).collect()
    }

    #[test]
    fn structure_numbers_examples() {
        let lambda = p(&[5, 3, 2, 1]);
        assert_eq!(
            StructureNumbers::of(&lambda, None).unwrap().values(),
            &[8, 5, 3, 1]
        );
        assert_eq!(
            StructureNumbers::of(&lambda, Some(6)).unwrap().values(),
            &[10, 7, 5, 3, 1, 0]
        );
        assert!(StructureNumbers::of(&Partition::empty(), None)
            .unwrap()
            .values()
            .is_empty());
        assert_eq!(
            StructureNumbers::of(&lambda, Some(3)),
            Err(Error::PaddingTooSmall {
                parts: 4,
                requested: 3
            })
        );
    }

    #[test]
    fn unpadded_minimum_is_smallest_part() {
        for lambda in Partitions::new(10) {
            let b = StructureNumbers::of(&lambda, None).unwrap();
            assert_eq!(b.values().last().copied(), lambda.parts().last().copied());
            assert!(b.values().windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn padding_by_one_shifts() {
        for lambda in Partitions::new(9) {
            let s = lambda.len();
            let b0 = StructureNumbers::of(&lambda, Some(s)).unwrap();
            let b1 = StructureNumbers::of(&lambda, Some(s + 1)).unwrap();
            let mut shifted: Vec<usize> = b0.values().iter().map(|b| b + 1).collect();
            shifted.push(0);
            assert_eq!(b1.values(), shifted.as_slice());
        }
    }

    #[test]
    fn abacus_of_5321_unpadded() {
        let a = Abacus::with_bead_count(&p(&[5, 3, 2, 1]), 3, 4).unwrap();
        let mut got = a.beads();
        got.sort();
        let mut want = beads(&[(3, 2), (2, 2), (2, 0), (1, 1)]);
        want.sort();
        assert_eq!(got, want);
        assert_eq!(a.to_partition(), p(&[5, 3, 2, 1]));
    }

    #[test]
    fn abacus_padded_examples() {
        let a = Abacus::from_partition(&p(&[2]), 3).unwrap();
        let mut got = a.beads();
        got.sort();
        let mut want = beads(&[(2, 1), (1, 1), (1, 0)]);
        want.sort();
        assert_eq!(got, want);
        let e = Abacus::from_partition(&Partition::empty(), 2).unwrap();
        assert_eq!(e.bead_count(), 0);
        assert_eq!(e.to_partition(), Partition::empty());
        assert!(Abacus::from_partition(&p(&[1]), 1).is_err());
    }

    #[test]
    fn decode_examples() {
        let a = Abacus::from_beads(3, beads(&[(1, 0), (1, 1), (1, 2), (2, 2)])).unwrap();
        assert_eq!(a.structure_numbers().values(), &[5, 2, 1, 0]);
        assert_eq!(a.to_partition(), p(&[2]));
        assert!(Abacus::from_beads(3, beads(&[(1, 3)])).is_err());
        assert!(Abacus::from_beads(3, beads(&[(0, 1)])).is_err());
        assert!(Abacus::from_beads(3, beads(&[(1, 1), (1, 1)])).is_err());
    }

    #[test]
    fn decode_is_left_inverse_for_every_padding() {
        for n in 0..=10 {
            for lambda in Partitions::new(n) {
                for t in 2..=5 {
                    for s in lambda.len()..=lambda.len() + 2 * t {
                        let a = Abacus::with_bead_count(&lambda, t, s).unwrap();
                        assert_eq!(a.to_partition(), lambda);
                    }
                }
            }
        }
    }

    #[test]
    fn slide_examples() {
        let a = Abacus::from_beads(3, beads(&[(3, 2), (2, 2), (2, 0), (1, 1)])).unwrap();
        assert_eq!(a.to_partition().size(), 11);
        let b = a.slide_bead(Bead::new(2, 0)).unwrap();
        assert_eq!(b.to_partition().size(), 8);
        assert_eq!(
            a.slide_bead(Bead::new(1, 1)),
            Err(Error::BeadInTopRow { row: 1, col: 1 })
        );
        assert_eq!(
            a.slide_bead(Bead::new(3, 2)),
            Err(Error::SlideTargetOccupied { row: 3, col: 2 })
        );
        assert_eq!(
            a.slide_bead(Bead::new(4, 0)),
            Err(Error::BeadAbsent { row: 4, col: 0 })
        );

        let single = Abacus::from_beads(2, beads(&[(2, 0)])).unwrap();
        assert_eq!(single.to_partition(), p(&[2]));
        let slid = single.slide_bead(Bead::new(2, 0)).unwrap();
        assert_eq!(slid.beads(), beads(&[(1, 0)]));
        assert_eq!(slid.to_partition(), Partition::empty());
    }

    #[test]
    fn every_slide_removes_exactly_t() {
        for n in 0..=12 {
            for lambda in Partitions::new(n) {
                for t in 2..=5 {
                    let a = Abacus::from_partition(&lambda, t).unwrap();
                    for bead in a.slidable_beads() {
                        let smaller = a.slide_bead(bead).unwrap().to_partition();
                        assert_eq!(smaller.size() + t, n);
                        // Removing a rim hook keeps the diagram inside the old one.
                        assert!((1..=smaller.len()).all(|i| smaller.row(i) <= lambda.row(i)));
                        assert_eq!(
                            smaller.count_t_hooks(t).unwrap() + 1,
                            lambda.count_t_hooks(t).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(t_core(&p(&[5, 3, 2, 1]), 3).unwrap(), p(&[2]));
        assert_eq!(t_core(&p(&[3, 2, 1]), 2).unwrap(), p(&[3, 2, 1]));
        assert_eq!(t_core(&p(&[2]), 2).unwrap(), Partition::empty());
        assert_eq!(t_core(&Partition::empty(), 4).unwrap(), Partition::empty());
    }

    /// Every maximal slide sequence ends at the same abacus.
    fn terminal_states(start: &Abacus) -> HashSet<Abacus> {
        let mut seen = HashSet::new();
        let mut stack = vec![start.clone()];
        let mut terminals = HashSet::new();
        while let Some(a) = stack.pop() {
            if !seen.insert(a.clone()) {
                continue;
            }
            let moves = a.slidable_beads();
            if moves.is_empty() {
                terminals.insert(a);
                continue;
            }
            for bead in moves {
                stack.push(a.slide_bead(bead).unwrap());
            }
        }
        terminals
    }

    #[test]
    fn slide_order_independence() {
        for n in 0..=14 {
            for lambda in Partitions::new(n) {
                for t in 2..=4 {
                    let a = Abacus::from_partition(&lambda, t).unwrap();
                    let ends = terminal_states(&a);
                    assert_eq!(ends.len(), 1, "{lambda} t={t}");
                    let end = ends.into_iter().next().unwrap();
                    assert_eq!(end, a.slide_all_up());
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let cq = decompose(&p(&[5, 3, 2, 1]), 3).unwrap();
        assert_eq!(cq.core, p(&[2]));
        assert_eq!(cq.quotient_size(), 3);
        assert_eq!(cq.total_size(), 11);

        let cq = decompose(&p(&[2]), 2).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient_size(), 1);

        let cq = decompose(&p(&[3, 2, 1]), 2).unwrap();
        assert_eq!(cq.core, p(&[3, 2, 1]));
        assert!(cq.quotient.iter().all(Partition::is_empty));
        assert_eq!(cq.quotient.len(), 2);
    }

    #[test]
    fn compose_examples() {
        let empty = CoreQuotient {
            t: 3,
            core: Partition::empty(),
            quotient: vec![Partition::empty(); 3],
        };
        assert_eq!(compose(&empty).unwrap(), Partition::empty());

        let cq = CoreQuotient {
            t: 3,
            core: p(&[2]),
            quotient: vec![p(&[2]), Partition::empty(), p(&[1])],
        };
        assert_eq!(compose(&cq).unwrap().size(), 2 + 3 * 3);

        let bad = CoreQuotient {
            t: 2,
            core: p(&[2]),
            quotient: vec![Partition::empty(); 2],
        };
        assert!(matches!(compose(&bad), Err(Error::NotACore { .. })));
        let wrong_arity = CoreQuotient {
            t: 2,
            core: Partition::empty(),
            quotient: vec![Partition::empty(); 3],
        };
        assert_eq!(
            compose(&wrong_arity),
            Err(Error::QuotientArity {
                got: 3,
                expected: 2
            })
        );
    }

    #[test]
    fn padding_invariance() {
        for n in 0..=12 {
            for lambda in Partitions::new(n) {
                for t in 2..=5 {
                    let s = padded_bead_count(lambda.len(), t);
                    let a = Abacus::with_bead_count(&lambda, t, s).unwrap();
                    let b = Abacus::with_bead_count(&lambda, t, s + t).unwrap();
                    assert_eq!(
                        a.slide_all_up().to_partition(),
                        b.slide_all_up().to_partition()
                    );
                    let qa: Vec<_> = a.runners.iter().map(runner_partition).collect();
                    let qb: Vec<_> = b.runners.iter().map(runner_partition).collect();
                    assert_eq!(qa, qb);
                }
            }
        }
    }

    #[test]
    fn canonical_examples() {
        let a = Abacus::from_column_counts(&[1, 0, 0]).unwrap();
        assert_eq!(a.to_partition(), Partition::empty());
        let canon = CanonicalCoreAbacus::from_abacus(&a).unwrap();
        assert_eq!(canon.column_counts(), &[0, 0, 0]);
        assert_eq!(canon.to_partition(), Partition::empty());

        let already = CanonicalCoreAbacus::new(vec![0, 2, 1]).unwrap();
        assert_eq!(already.column_counts(), &[0, 2, 1]);

        let core = Abacus::from_partition(&p(&[5, 3, 2, 1]), 3)
            .unwrap()
            .slide_all_up();
        let canon = CanonicalCoreAbacus::from_abacus(&core).unwrap();
        assert_eq!(canon.column_counts()[0], 0);
        assert_eq!(canon.to_partition(), p(&[2]));

        let gapped = Abacus::from_beads(2, beads(&[(2, 1)])).unwrap();
        assert_eq!(
            CanonicalCoreAbacus::from_abacus(&gapped),
            Err(Error::GappedAbacus { runner: 1 })
        );
    }

    #[test]
    fn shift_lemma_preserves_core() {
        // (a_0, …, a_{t-1}) and (a_{t-1} + 1, a_0, …, a_{t-2}) decode alike.
        for t in 2..=5 {
            for code in 0..(4usize.pow(t as u32)) {
                let counts: Vec<usize> = (0..t).map(|k| (code >> (2 * k)) & 3).collect();
                let mut shifted = vec![counts[t - 1] + 1];
                shifted.extend_from_slice(&counts[..t - 1]);
                let a = Abacus::from_column_counts(&counts).unwrap();
                let b = Abacus::from_column_counts(&shifted).unwrap();
                assert_eq!(a.to_partition(), b.to_partition());
                assert_eq!(
                    CanonicalCoreAbacus::from_abacus(&a).unwrap(),
                    CanonicalCoreAbacus::from_abacus(&b).unwrap()
                );
                let canon = CanonicalCoreAbacus::from_abacus(&a).unwrap();
                assert_eq!(canon.core_size(), a.to_partition().size());
            }
        }
    }

    #[test]
    fn display_shows_beads() {
        let a = Abacus::from_beads(3, beads(&[(3, 2), (2, 2), (2, 0), (1, 1)])).unwrap();
        assert_eq!(a.to_string(), "  1 | . o .\n  2 | o . o\n  3 | . . o\n");
    }
}
