//! Truncated power series in `q` and the Euler characteristic series
//! `Σ_l χ(Quot^l(E)) q^l = ∏_{m≥1} (1 − q^m)^{−r·χ(S)}`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{precondition, Result};
use crate::rational::{binomial_rational, format_rational, rat, Rational};

/// Coefficients of `q⁰ … q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return precondition("a series needs at least the q⁰ coefficient");
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// `(1 − q^m)^{−a}` up to `q^order`.
    pub fn inverse_binomial_factor(a: &Rational, m: usize, order: usize) -> PowerSeries {
        assert!(m >= 1);
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut n = 0usize;
        while n * m <= order {
            // C(a + n − 1, n)
            coeffs[n * m] = binomial_rational(&(a + rat(n as i64) - Rational::one()), n as u64);
            n += 1;
        }
        PowerSeries { coeffs }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `∏_{m=1}^{N} (1 − q^m)^{−a}` up to `q^N`.
pub fn eta_power_expand(exponent: &Rational, order: usize) -> PowerSeries {
    let mut acc = PowerSeries::one(order);
    if exponent.is_zero() {
        return acc;
    }
    for m in 1..=order {
        acc = acc.mul(&PowerSeries::inverse_binomial_factor(exponent, m, order));
    }
    acc
}

/// Euler characteristics of `Quot^l(E)` for `l ≤ order`, `rank E = r`.
pub fn quot_euler_series(chi: &Rational, r: u32, order: usize) -> Result<PowerSeries> {
    if r == 0 {
        return precondition("rank must be positive");
    }
    Ok(eta_power_expand(&(chi * rat(i64::from(r))), order))
}
