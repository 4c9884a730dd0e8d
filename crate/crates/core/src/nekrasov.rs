//! The Nekrasov–Okounkov hook-length formula
//!
//! ```text
//! ∏_{n>=1} (1 - q^n)^{z-1} = Σ_λ q^{|λ|} ∏_{h ∈ H(λ)} (1 - z/h²)
//! ```
//!
//! checked coefficient by coefficient in `q` as an exact identity of
//! polynomials in `z` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partitions;

/// Default largest `q`-degree handled without an explicit override.
pub const NO_GUARD: usize = 12;

/// A polynomial in `z` with exact rational coefficients; index `k` holds the
/// coefficient of `z^k`. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPolynomial {
    coeffs: Vec<BigRational>,
}

impl ZPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// `a + b·z`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &ZPolynomial {
    type Output = ZPolynomial;

    fn add(self, rhs: &ZPolynomial) -> ZPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ZPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ZPolynomial {
    type Output = ZPolynomial;

    fn sub(self, rhs: &ZPolynomial) -> ZPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ZPolynomial {
    type Output = ZPolynomial;

    fn neg(self) -> ZPolynomial {
        ZPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ZPolynomial {
    type Output = ZPolynomial;

    fn mul(self, rhs: &ZPolynomial) -> ZPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ZPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPolynomial::new(out)
    }
}

impl fmt::Display for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigRational::zero();
            let mag = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(if unit { "z" } else { "*z" })?,
                _ => write!(f, "{}z^{k}", if unit { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn guard(m: usize, allow_large: bool, what: &'static str) -> Result<()> {
    if m > NO_GUARD && !allow_large {
        return Err(Error::GuardExceeded {
            what,
            n: m,
            guard: NO_GUARD,
        });
    }
    Ok(())
}

/// Hook side: `Σ_{λ ⊢ m} ∏_{h} (1 - z/h²)`.
pub fn no_rhs(m: usize, allow_large: bool) -> Result<ZPolynomial> {
    guard(m, allow_large, "hook-length sum")?;
    let mut total = ZPolynomial::zero();
    for lambda in Partitions::new(m) {
        let term = lambda
            .hook_multiset()
            .entries()
            .iter()
            .fold(ZPolynomial::one(), |acc, &h| {
                let h2 = (h * h) as i64;
                &acc * &ZPolynomial::linear(rat(1), -BigRational::new(1.into(), h2.into()))
            });
        total = &total + &term;
    }
    Ok(total)
}

/// `C(z - 1, k) = (z-1)(z-2)…(z-k) / k!`.
pub fn binomial_z_minus_one(k: usize) -> ZPolynomial {
    let mut poly = ZPolynomial::one();
    let mut fact = BigInt::one();
    for j in 1..=k {
        poly = &poly * &ZPolynomial::linear(rat(-(j as i64)), rat(1));
        fact *= j;
    }
    poly.scale(&BigRational::new(BigInt::one(), fact))
}

/// Product side up to `q^m_max`: entry `m` is the `q^m` coefficient of
/// `∏_{n=1}^{m_max} Σ_k C(z-1, k) (-1)^k q^{nk}`.
pub fn no_lhs_series(m_max: usize, allow_large: bool) -> Result<Vec<ZPolynomial>> {
    guard(m_max, allow_large, "product side")?;
    let binomials: Vec<ZPolynomial> = (0..=m_max)
        .map(|k| {
            let b = binomial_z_minus_one(k);
            if k % 2 == 1 {
                -&b
            } else {
                b
            }
        })
        .collect();
    let mut series = vec![ZPolynomial::zero(); m_max + 1];
    series[0] = ZPolynomial::one();
    for n in 1..=m_max {
        let mut next = vec![ZPolynomial::zero(); m_max + 1];
        for (i, coeff) in series.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (k, b) in binomials.iter().enumerate() {
                let deg = i + n * k;
                if deg > m_max {
                    break;
                }
                next[deg] = &next[deg] + &(coeff * b);
            }
        }
        series = next;
    }
    Ok(series)
}

/// `q^m` coefficient of `∏ (1 - q^n)^{z-1}`.
pub fn no_lhs(m: usize, allow_large: bool) -> Result<ZPolynomial> {
    Ok(no_lhs_series(m, allow_large)?.swap_remove(m))
}

/// Result of comparing both sides for every `q`-degree up to some bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoVerdict {
    Verified {
        m_max: usize,
    },
    /// First mismatch: `q`-degree `m` and the lowest `z`-degree that differs.
    Counterexample {
        m: usize,
        z_degree: usize,
    },
}

pub fn check_no_identity(m_max: usize, allow_large: bool) -> Result<NoVerdict> {
    let lhs = no_lhs_series(m_max, allow_large)?;
    for (m, left) in lhs.iter().enumerate() {
        let right = no_rhs(m, allow_large)?;
        let diff = left - &right;
        if let Some(z_degree) = diff.coeffs().iter().position(|c| !c.is_zero()) {
            return Ok(NoVerdict::Counterexample { m, z_degree });
        }
    }
    Ok(NoVerdict::Verified { m_max })
}

/// The hook side evaluated at `z`, for `q`-degrees `0..=m_max`.
///
/// At `z = 2` this is the coefficient list of `∏ (1 - q^n)`; at `z = 4`, of
/// `∏ (1 - q^n)^3`.
pub fn specialize(m_max: usize, z: &BigRational, allow_large: bool) -> Result<Vec<BigRational>> {
    (0..=m_max)
        .map(|m| Ok(no_rhs(m, allow_large)?.eval(z)))
        .collect()
}
