//! Counting `t`-cores: closed forms for `t = 2, 3`, the quadratic-form
//! parametrization of 3-cores, the general generating function, and
//! enumeration of canonical core abaci.

use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::abacus::CanonicalCoreAbacus;
use crate::error::{Error, Result};
use crate::partition::{Partition, Partitions};
use crate::series::BigSeries;

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u128, mut exp: u128, modulus: u128) -> u128 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a / p)` by Euler's criterion `a^((p-1)/2) mod p`.
pub fn legendre_symbol(a: i64, p: i64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = a.rem_euclid(p) as u128;
    if r == 0 {
        return Ok(0);
    }
    let e = pow_mod(r, (p as u128 - 1) / 2, p as u128);
    Ok(if e == 1 { 1 } else { -1 })
}

/// `ord_ℓ(n)`: the exponent of the prime `ℓ` in `n`.
pub fn padic_valuation(ell: i64, n: i64) -> Result<u32> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut n = n.unsigned_abs();
    let ell = ell as u64;
    let mut e = 0;
    while n % ell == 0 {
        n /= ell;
        e += 1;
    }
    Ok(e)
}

fn is_square(m: u64) -> bool {
    let r = m.sqrt();
    r * r == m
}

/// `c_2(n)`: 1 when `8n + 1` is a square (`n` triangular), else 0.
pub fn c2(n: u64) -> u64 {
    u64::from(is_square(8 * n + 1))
}

/// Positive divisors of `m`, by trial division up to `√m`.
fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `(d / 3)` by residue: `+1` for `d ≡ 1`, `-1` for `d ≡ 2`, `0` for `d ≡ 0`.
/// Agrees with Euler's criterion for the modulus 3.
fn symbol_mod3(d: u64) -> i64 {
    match d % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `c_3(n) = Σ_{d | 3n+1} (d / 3)`.
pub fn c3_divisor_sum(n: u64) -> u64 {
    let total: i64 = divisors(3 * n + 1).into_iter().map(symbol_mod3).sum();
    u64::try_from(total).expect("divisor sum is non-negative")
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// True iff every prime `p ≡ 2 (mod 3)` divides `3n + 1` to an even power.
pub fn c3_nonvanishing(n: u64) -> bool {
    factorize(3 * n + 1)
        .into_iter()
        .all(|(p, e)| p % 3 != 2 || e % 2 == 0)
}

/// A solution of `a² - ab + b² + b = n` in non-negative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QFSolution {
    pub a: u64,
    pub b: u64,
}

impl QFSolution {
    pub fn x(&self) -> i64 {
        -(self.a as i64) + 2 * self.b as i64 + 1
    }

    pub fn y(&self) -> i64 {
        self.a as i64 + self.b as i64 + 1
    }

    /// `a² - ab + b² + b`.
    pub fn value(&self) -> u64 {
        let (a, b) = (self.a, self.b);
        a * a + b * b + b - a * b
    }

    /// `x² - xy + y²`, which equals `3n + 1`.
    pub fn norm(&self) -> i64 {
        let (x, y) = (self.x(), self.y());
        x * x - x * y + y * y
    }

    /// Canonical 3-core abacus `(0, a, b)` this solution describes.
    pub fn abacus(&self) -> CanonicalCoreAbacus {
        CanonicalCoreAbacus::new(vec![0, self.a as usize, self.b as usize]).expect("three runners")
    }
}

fn qf_solutions_in_box(n: u64, bound: u64) -> Vec<QFSolution> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            let s = QFSolution { a, b };
            if s.value() == n {
                out.push(s);
            }
        }
    }
    out
}

/// All `(a, b)` with `a² - ab + b² + b = n`.
///
/// Searches the box `0 <= a, b <= 1 + ⌈2√(n+1)⌉` and keeps doubling it until
/// a doubling adds no solutions.
pub fn c3_qf_solutions(n: u64) -> Vec<QFSolution> {
    let mut bound = 2 + 2 * (n + 1).sqrt();
    let mut found = qf_solutions_in_box(n, bound);
    loop {
        let wider = qf_solutions_in_box(n, 2 * bound);
        if wider.len() == found.len() {
            return found;
        }
        found = wider;
        bound *= 2;
    }
}

pub fn c3_qf_count(n: u64) -> u64 {
    c3_qf_solutions(n).len() as u64
}

/// `c_t(0..=n_max)` from `∏_{m>=1} (1 - q^{tm})^t / (1 - q^m)`.
pub fn ct_count_series(t: usize, n_max: usize) -> Result<Vec<BigInt>> {
    if t < 2 {
        return Err(Error::InvalidHookModulus(t));
    }
    let mut series = BigSeries::one(n_max);
    for m in 1..=n_max {
        series.divide_by_one_minus_q_pow(m);
    }
    for m in (1..).map(|k| k * t).take_while(|&m| m <= n_max) {
        for _ in 0..t {
            series.multiply_by_one_minus_q_pow(m);
        }
    }
    Ok(series.into_coeffs())
}

/// Calls `visit` with every canonical core abacus `(0, a_1, …, a_{t-1})` whose
/// core has size at most `n_max`, along with that size.
///
/// Uses `2·|core| = Σ_{c<d} (a_c - a_d)² + Σ_c a_c (2c - t + 1)` (with
/// `a_0 = 0`) for pruning: pairs not yet fixed contribute at least zero and
/// each free runner at least `min_{a>=0} a² + a(2c - t + 1)`.
pub fn visit_canonical_cores(
    t: usize,
    n_max: usize,
    mut visit: impl FnMut(&[usize], usize),
) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidHookModulus(t));
    }
    let t_i = t as i64;
    let linear = |c: usize| 2 * c as i64 - t_i + 1;
    // floor_min[c]: least value of a² + a·linear(c) over a >= 0.
    let floor_min: Vec<i64> = (0..t)
        .map(|c| {
            let l = linear(c);
            (0..=l.unsigned_abs() as i64)
                .map(|a| a * a + a * l)
                .min()
                .unwrap_or(0)
        })
        .collect();
    // rest[k]: Σ floor_min over runners k..t.
    let mut rest = vec![0i64; t + 1];
    for c in (1..t).rev() {
        rest[c] = rest[c + 1] + floor_min[c];
    }
    let limit = 2 * n_max as i64;
    let mut counts = vec![0usize; t];

    fn go(
        k: usize,
        partial: i64,
        counts: &mut Vec<usize>,
        ctx: &(usize, i64, &Vec<i64>, &dyn Fn(usize) -> i64),
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        let (t, limit, rest, linear) = *ctx;
        if k == t {
            debug_assert!(partial % 2 == 0);
            visit(counts, (partial / 2) as usize);
            return;
        }
        let step = |a: i64, counts: &[usize]| -> i64 {
            counts[..k]
                .iter()
                .map(|&d| (a - d as i64).pow(2))
                .sum::<i64>()
                + a * linear(k)
        };
        let mut a = 0i64;
        loop {
            let here = partial + step(a, counts);
            let next = partial + step(a + 1, counts);
            if here + rest[k + 1] <= limit {
                counts[k] = a as usize;
                go(k + 1, here, counts, ctx, visit);
            } else if next >= here {
                break;
            }
            a += 1;
        }
        counts[k] = 0;
    }

    let ctx: (usize, i64, &Vec<i64>, &dyn Fn(usize) -> i64) = (t, limit, &rest, &linear);
    go(1, 0, &mut counts, &ctx, &mut visit);
    Ok(())
}

/// `c_t(0..=n_max)` by enumerating canonical core abaci.
pub fn count_t_cores_by_abacus(t: usize, n_max: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; n_max + 1];
    visit_canonical_cores(t, n_max, |_, size| counts[size] += 1)?;
    Ok(counts)
}

/// How [`enumerate_t_cores`] finds the cores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreSearch {
    /// Enumerate canonical abaci `(0, a_1, …, a_{t-1})`.
    Abacus,
    /// Filter all partitions of `n` by having no `t`-hooks.
    Oracle,
}

/// All `t`-cores of `n`, sorted reverse-lexicographically.
pub fn enumerate_t_cores(n: usize, t: usize, search: CoreSearch) -> Result<Vec<Partition>> {
    if t < 2 {
        return Err(Error::InvalidHookModulus(t));
    }
    let mut cores = match search {
        CoreSearch::Abacus => {
            let mut out = Vec::new();
            visit_canonical_cores(t, n, |counts, size| {
                if size == n {
                    let canon = CanonicalCoreAbacus::new(counts.to_vec()).expect("t >= 2");
                    out.push(canon.to_partition());
                }
            })?;
            out
        }
        CoreSearch::Oracle => Partitions::new(n)
            .filter(|l| l.count_t_hooks(t) == Ok(0))
            .collect(),
    };
    cores.sort_unstable_by(|a, b| b.cmp(a));
    Ok(cores)
}

/// `c_t(n)` with the cores themselves when requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreCount {
    pub n: usize,
    pub t: usize,
    pub count: u64,
    pub witnesses: Option<Vec<Partition>>,
}

impl CoreCount {
    pub fn compute(n: usize, t: usize, with_witnesses: bool) -> Result<Self> {
        let count = match t {
            2 => c2(n as u64),
            3 => c3_divisor_sum(n as u64),
            _ => u64::try_from(&ct_count_series(t, n)?[n]).expect("core counts are non-negative"),
        };
        let witnesses = if with_witnesses {
            Some(enumerate_t_cores(n, t, CoreSearch::Abacus)?)
        } else {
            None
        };
        Ok(Self {
            n,
            t,
            count,
            witnesses,
        })
    }
}
