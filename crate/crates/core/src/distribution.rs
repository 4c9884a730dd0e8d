//! Exact counts `p_t(a, b; n)` of partitions of `n` whose number of `t`-hooks
//! is `≡ a (mod b)`.
//!
//! The core/quotient bijection preserves size as `|λ| = |core| + t·h_t(λ)`,
//! so
//!
//! ```text
//! p_t(a, b; n) = Σ_{k ≡ a (mod b), tk <= n} c_t(n - tk) · Q_t(k)
//! ```
//!
//! where `Q_t(k)` counts `t`-tuples of partitions of total size `k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::cores::{
    c2, c3_divisor_sum, ct_count_series, is_prime, legendre_symbol, padic_valuation,
};
use crate::error::{Error, Result};
use crate::partition::Partitions;
use crate::series::{eta_inverse_power_series, partition_numbers, BigSeries};

/// Default cap on `n` for [`brute_force_profile`].
pub const BRUTE_FORCE_GUARD: usize = 40;

/// Precomputed `c_t(0..=N)`, `Q_t(0..=N/t)` and `p(0..=N)` for one `t`.
#[derive(Debug, Clone)]
pub struct HookCountTable {
    t: usize,
    n_max: usize,
    cores: Vec<BigInt>,
    quotients: BigSeries,
    partitions: Vec<BigInt>,
}

impl HookCountTable {
    /// Core counts come from the closed forms for `t = 2, 3` and from the
    /// generating function otherwise.
    pub fn new(t: usize, n_max: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidHookModulus(t));
        }
        let cores = match t {
            2 => (0..=n_max as u64).map(|n| BigInt::from(c2(n))).collect(),
            3 => (0..=n_max as u64)
                .map(|n| BigInt::from(c3_divisor_sum(n)))
                .collect(),
            _ => ct_count_series(t, n_max)?,
        };
        Ok(Self {
            t,
            n_max,
            cores,
            quotients: eta_inverse_power_series(t, n_max / t),
            partitions: partition_numbers(n_max),
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `c_t(n)`.
    pub fn core_count(&self, n: usize) -> Option<&BigInt> {
        self.cores.get(n)
    }

    /// `Q_t(k)`.
    pub fn quotient_count(&self, k: usize) -> Option<&BigInt> {
        self.quotients.get(k)
    }

    /// `p(n)`.
    pub fn partition_count(&self, n: usize) -> Option<&BigInt> {
        self.partitions.get(n)
    }

    fn check(&self, b: u64, n: usize) -> Result<()> {
        if b == 0 {
            return Err(Error::ZeroModulus);
        }
        if n > self.n_max {
            return Err(Error::OutOfRange {
                n,
                limit: self.n_max,
            });
        }
        Ok(())
    }

    /// Terms `(k, c_t(n - tk)·Q_t(k))` with a nonzero core count.
    fn terms(&self, n: usize) -> impl Iterator<Item = (usize, BigInt)> + '_ {
        (0..=n / self.t).filter_map(move |k| {
            let core = &self.cores[n - self.t * k];
            (!core.is_zero()).then(|| (k, core * &self.quotients[k]))
        })
    }

    /// `p_t(a, b; n)`.
    pub fn pt_count(&self, a: u64, b: u64, n: usize) -> Result<BigInt> {
        self.check(b, n)?;
        if a >= b {
            return Err(Error::ResidueOutOfRange {
                residue: a,
                modulus: b,
            });
        }
        Ok(self
            .terms(n)
            .filter(|(k, _)| *k as u64 % b == a)
            .map(|(_, v)| v)
            .sum())
    }

    /// All `b` residue counts at once.
    pub fn profile(&self, b: u64, n: usize) -> Result<ResidueProfile> {
        self.check(b, n)?;
        let mut counts = vec![BigInt::zero(); b as usize];
        for (k, v) in self.terms(n) {
            counts[(k as u64 % b) as usize] += v;
        }
        let total = self.partitions[n].clone();
        assert_eq!(
            counts.iter().sum::<BigInt>(),
            total,
            "residue counts must sum to p({n})"
        );
        Ok(ResidueProfile {
            t: self.t,
            b,
            n,
            counts,
            total,
        })
    }
}

/// `p_t(a, b; n)` for a single query.
pub fn pt_count(t: usize, a: u64, b: u64, n: usize) -> Result<BigInt> {
    HookCountTable::new(t, n)?.pt_count(a, b, n)
}

/// All residues of `h_t(λ) mod b` over `λ ⊢ n`.
pub fn residue_profile(t: usize, b: u64, n: usize) -> Result<ResidueProfile> {
    HookCountTable::new(t, n)?.profile(b, n)
}

/// The same profile by enumerating every partition of `n` and counting its
/// `t`-hooks directly. Refuses `n > BRUTE_FORCE_GUARD` unless `allow_large`.
pub fn brute_force_profile(
    t: usize,
    b: u64,
    n: usize,
    allow_large: bool,
) -> Result<ResidueProfile> {
    if t < 2 {
        return Err(Error::InvalidHookModulus(t));
    }
    if b == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > BRUTE_FORCE_GUARD && !allow_large {
        return Err(Error::GuardExceeded {
            what: "brute-force profile",
            n,
            guard: BRUTE_FORCE_GUARD,
        });
    }
    let mut counts = vec![0u64; b as usize];
    let mut total = 0u64;
    for lambda in Partitions::new(n) {
        let h = lambda.hook_multiset().count_divisible_by(t) as u64;
        counts[(h % b) as usize] += 1;
        total += 1;
    }
    Ok(ResidueProfile {
        t,
        b,
        n,
        counts: counts.into_iter().map(BigInt::from).collect(),
        total: BigInt::from(total),
    })
}

/// `counts[a] = p_t(a, b; n)`, `total = p(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueProfile {
    pub t: usize,
    pub b: u64,
    pub n: usize,
    pub counts: Vec<BigInt>,
    pub total: BigInt,
}

impl ResidueProfile {
    pub fn proportion(&self, a: usize) -> BigRational {
        BigRational::new(self.counts[a].clone(), self.total.clone())
    }

    /// `counts[a] / total` to four decimals, rounding half to even.
    pub fn proportion_4dp(&self, a: usize) -> String {
        format_decimal(&self.counts[a], &self.total, 4)
    }
}

/// `num / den` as a fixed-point decimal with `places` digits, rounded half to
/// even. `den` must be positive.
pub fn format_decimal(num: &BigInt, den: &BigInt, places: u32) -> String {
    assert!(den.is_positive(), "denominator must be positive");
    let scale = BigInt::from(10u32).pow(places);
    let (mut q, r) = (num.abs() * &scale).div_rem(den);
    let twice = &r * 2;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1;
    }
    let (int, frac) = q.div_rem(&scale);
    let sign = if num.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", width = places as usize)
}

/// Outcome of checking one vanishing statement on a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The arithmetic hypothesis fails, so nothing is asserted.
    HypothesisNotMet { reason: String },
    /// `p_t(a_1, m; n) = 0` at every listed `n`.
    Verified { checked: Vec<usize> },
    /// First `n` where the count is nonzero.
    Counterexample { n: usize, count: BigInt },
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample { .. })
    }
}

/// Checks `p_t(a_1 mod m, m; n) = 0` for all `n ≡ a_2 (mod m)`, `n <= n_max`.
fn check_vanishing(
    table: &HookCountTable,
    a1: i64,
    a2: i64,
    modulus: u64,
    n_max: usize,
) -> Result<Verdict> {
    let residue = a1.rem_euclid(modulus as i64) as u64;
    let start = a2.rem_euclid(modulus as i64) as usize;
    let mut checked = Vec::new();
    for n in (start..=n_max).step_by(modulus as usize) {
        let count = table.pt_count(residue, modulus, n)?;
        if !count.is_zero() {
            return Ok(Verdict::Counterexample { n, count });
        }
        checked.push(n);
    }
    Ok(Verdict::Verified { checked })
}

/// `p_2(a_1, ℓ; ℓk + a_2) = 0` whenever `((-16a_1 + 8a_2 + 1) / ℓ) = -1`.
pub fn verify_theorem_part1(ell: i64, a1: i64, a2: i64, n_max: usize) -> Result<Verdict> {
    verify_part1_with(&HookCountTable::new(2, n_max)?, ell, a1, a2, n_max)
}

/// As [`verify_theorem_part1`], reusing a `t = 2` table covering `n_max`.
pub fn verify_part1_with(
    table: &HookCountTable,
    ell: i64,
    a1: i64,
    a2: i64,
    n_max: usize,
) -> Result<Verdict> {
    assert_eq!(table.t(), 2, "part 1 concerns 2-hooks");
    let disc = -16 * a1 + 8 * a2 + 1;
    let symbol = legendre_symbol(disc, ell)?;
    if symbol != -1 {
        return Ok(Verdict::HypothesisNotMet {
            reason: format!("({disc}/{ell}) = {symbol}"),
        });
    }
    check_vanishing(table, a1, a2, ell as u64, n_max)
}

/// `p_3(a_1, ℓ²; ℓ²k + a_2) = 0` whenever `ord_ℓ(-9a_1 + 3a_2 + 1) = 1`, for
/// primes `ℓ ≡ 2 (mod 3)`.
pub fn verify_theorem_part2(ell: i64, a1: i64, a2: i64, n_max: usize) -> Result<Verdict> {
    verify_part2_with(&HookCountTable::new(3, n_max)?, ell, a1, a2, n_max)
}

/// As [`verify_theorem_part2`], reusing a `t = 3` table covering `n_max`.
pub fn verify_part2_with(
    table: &HookCountTable,
    ell: i64,
    a1: i64,
    a2: i64,
    n_max: usize,
) -> Result<Verdict> {
    assert_eq!(table.t(), 3, "part 2 concerns 3-hooks");
    if !is_prime(ell) || ell % 3 != 2 {
        return Err(Error::NotPrime(ell));
    }
    let value = -9 * a1 + 3 * a2 + 1;
    if value == 0 {
        return Ok(Verdict::HypothesisNotMet {
            reason: "-9a1 + 3a2 + 1 = 0".to_string(),
        });
    }
    let ord = padic_valuation(ell, value)?;
    if ord != 1 {
        return Ok(Verdict::HypothesisNotMet {
            reason: format!("ord_{ell}({value}) = {ord}"),
        });
    }
    check_vanishing(table, a1, a2, (ell * ell) as u64, n_max)
}

/// One `(ℓ, a_1, a_2)` cell of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub ell: i64,
    pub a1: i64,
    pub a2: i64,
    pub verdict: Verdict,
}

/// Which vanishing statement a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    /// 2-hooks modulo an odd prime `ℓ`; residues range over `[0, ℓ)`.
    One,
    /// 3-hooks modulo `ℓ²`, `ℓ ≡ 2 (mod 3)`; residues range over `[0, ℓ²)`.
    Two,
}

/// Checks every `(a_1, a_2)` residue pair for each `ℓ`, on the current rayon
/// pool. Cells come back in `(ℓ, a_1, a_2)` order whatever the worker count;
/// cells whose hypothesis fails are included.
pub fn sweep(part: Part, ells: &[i64], n_max: usize) -> Result<Vec<CellReport>> {
    let table = match part {
        Part::One => HookCountTable::new(2, n_max)?,
        Part::Two => HookCountTable::new(3, n_max)?,
    };
    let cells: Vec<(i64, i64, i64)> = ells
        .iter()
        .flat_map(|&ell| {
            let m = match part {
                Part::One => ell,
                Part::Two => ell * ell,
            };
            (0..m).flat_map(move |a1| (0..m).map(move |a2| (ell, a1, a2)))
        })
        .collect();
    cells
        .into_par_iter()
        .map(|(ell, a1, a2)| {
            let verdict = match part {
                Part::One => verify_part1_with(&table, ell, a1, a2, n_max)?,
                Part::Two => verify_part2_with(&table, ell, a1, a2, n_max)?,
            };
            Ok(CellReport {
                ell,
                a1,
                a2,
                verdict,
            })
        })
        .collect()
}
