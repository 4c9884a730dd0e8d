//! Truncated power series in `q` with exact big-integer coefficients.

use std::ops::{Index, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `q^0 ..= q^N`; everything past `N` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigSeries {
    coeffs: Vec<BigInt>,
}

impl BigSeries {
    /// The series `1`, truncated at `q^n_max`.
    pub fn one(n_max: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n_max + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        Self { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^m`, or `None` past the truncation.
    pub fn get(&self, m: usize) -> Option<&BigInt> {
        self.coeffs.get(m)
    }

    /// In place `f <- f / (1 - q^m)`: a running prefix sum with stride `m`.
    pub fn divide_by_one_minus_q_pow(&mut self, m: usize) {
        assert!(m >= 1);
        for i in m..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - m];
        }
    }

    /// In place `f <- f · (1 - q^m)`.
    pub fn multiply_by_one_minus_q_pow(&mut self, m: usize) {
        assert!(m >= 1);
        for i in (m..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - m];
        }
    }

    /// Truncated to the smaller of the two orders.
    pub fn truncated(&self, n_max: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=n_max.min(self.order())].to_vec(),
        }
    }
}

impl Index<usize> for BigSeries {
    type Output = BigInt;

    fn index(&self, m: usize) -> &BigInt {
        &self.coeffs[m]
    }
}

impl Mul for &BigSeries {
    type Output = BigSeries;

    /// Schoolbook product truncated at the smaller order.
    fn mul(self, rhs: &BigSeries) -> BigSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        BigSeries { coeffs: out }
    }
}

/// `∏_{m>=1} (1 - q^m)^{-t}` up to `q^n_max`. The coefficient of `q^k` counts
/// `t`-tuples of partitions of total size `k`; `t = 1` gives `p(k)`.
pub fn eta_inverse_power_series(t: usize, n_max: usize) -> BigSeries {
    let mut series = BigSeries::one(n_max);
    for _ in 0..t {
        for m in 1..=n_max {
            series.divide_by_one_minus_q_pow(m);
        }
    }
    series
}

/// `∏_{m>=1} (1 - q^m)^e` up to `q^n_max`.
pub fn eta_power_series(e: usize, n_max: usize) -> BigSeries {
    let mut series = BigSeries::one(n_max);
    for _ in 0..e {
        for m in 1..=n_max {
            series.multiply_by_one_minus_q_pow(m);
        }
    }
    series
}

/// `p(0) ..= p(n_max)` by Euler's pentagonal recurrence
/// `p(n) = Σ_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
///
/// Shares no code with [`eta_inverse_power_series`], so the two cross-check
/// each other.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn partition_numbers_small() {
        assert_eq!(
            partition_numbers(12),
            ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77])
        );
        // p(100) = 190569292
        assert_eq!(partition_numbers(100)[100], BigInt::from(190_569_292u64));
    }

    #[test]
    fn eta_inverse_matches_pentagonal() {
        let p = partition_numbers(200);
        let s = eta_inverse_power_series(1, 200);
        assert_eq!(s.coeffs(), p.as_slice());
        assert_eq!(&s.coeffs()[..6], ints(&[1, 1, 2, 3, 5, 7]).as_slice());
    }

    #[test]
    fn eta_inverse_squared() {
        let s = eta_inverse_power_series(2, 10);
        assert_eq!(s[0], BigInt::one());
        assert_eq!(s[2], BigInt::from(5));
        let p = BigSeries::from_coeffs(partition_numbers(10));
        assert_eq!(&p * &p, s);
        for t in 0..5 {
            assert_eq!(eta_inverse_power_series(t, 8)[0], BigInt::one());
        }
    }

    #[test]
    fn euler_pentagonal_theorem() {
        let s = eta_power_series(1, 30);
        let mut want = vec![BigInt::zero(); 31];
        for k in -5i64..=5 {
            let g = (k * (3 * k - 1) / 2) as usize;
            if g <= 30 {
                want[g] = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
            }
        }
        assert_eq!(s.coeffs(), want.as_slice());
    }

    #[test]
    fn divide_then_multiply_is_identity() {
        let mut s = BigSeries::from_coeffs(ints(&[3, -1, 4, 1, -5, 9, 2, 6]));
        let orig = s.clone();
        s.divide_by_one_minus_q_pow(3);
        s.multiply_by_one_minus_q_pow(3);
        assert_eq!(s, orig);
    }

    #[test]
    fn truncation_is_monotone() {
        let small = eta_inverse_power_series(3, 40);
        let large = eta_inverse_power_series(3, 90);
        assert_eq!(large.truncated(40), small);
    }
}
