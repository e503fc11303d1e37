//! Dense univariate polynomials with exact degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{denominator_lcm, Rational};
use crate::ring::{Coefficient, Q};
use crate::series::TruncSeries;

/// `c_0 + c_1 X + ... + c_d X^d` with `c_d != 0` (empty for zero).
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C: Coefficient> {
    domain: C::Domain,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Poly<C> {
    pub fn new(domain: C::Domain, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Poly { domain, coeffs }
    }

    pub fn zero(domain: &C::Domain) -> Self {
        Self::new(domain.clone(), vec![])
    }

    pub fn one(domain: &C::Domain) -> Self {
        Self::new(domain.clone(), vec![C::one_in(domain)])
    }

    pub fn from_ints(domain: &C::Domain, cs: &[i64]) -> Self {
        Self::new(domain.clone(), cs.iter().map(|&c| C::from_i64(c, domain)).collect())
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    /// Coefficients from the constant term up; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| C::zero_in(&self.domain))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.domain.clone(),
            (0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.domain.clone(), self.coeffs.iter().map(|c| c.negated()).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.domain.clone(), self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.domain);
        }
        let n = self.coeffs.len() + o.coeffs.len() - 1;
        Self::new(
            self.domain.clone(),
            C::convolve(&self.coeffs, &o.coeffs, n, &self.domain),
        )
    }

    /// `X^m p(1/X)`; needs `deg p <= m`.
    pub fn reciprocal(&self, m: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > m {
                return Err(Error::DegreeExceeded { degree: d, bound: m });
            }
        }
        let mut c = vec![C::zero_in(&self.domain); m + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[m - i] = x.clone();
        }
        Ok(Self::new(self.domain.clone(), c))
    }

    /// The polynomial as a series truncated at `O(x^n)`.
    pub fn to_series(&self, n: usize) -> TruncSeries<C> {
        let mut c: Vec<C> = self.coeffs.iter().take(n).cloned().collect();
        c.resize(n, C::zero_in(&self.domain));
        TruncSeries::new(self.domain.clone(), c)
    }

    /// The first `n` coefficients of a series as a polynomial.
    pub fn from_series(f: &TruncSeries<C>, n: usize) -> Self {
        Self::new(f.domain().clone(), f.coeffs()[..n.min(f.trunc())].to_vec())
    }

    /// `p(X^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut c = vec![C::zero_in(&self.domain); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * k] = x.clone();
        }
        Self::new(self.domain.clone(), c)
    }

    pub fn map_into<D: Coefficient>(&self, domain: &D::Domain, f: impl Fn(&C) -> Result<D>) -> Result<Poly<D>> {
        Ok(Poly::new(
            domain.clone(),
            self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?,
        ))
    }
}

impl Poly<Rational> {
    pub fn rational(cs: Vec<Rational>) -> Self {
        Self::new(Q, cs)
    }

    pub fn ints(cs: &[i64]) -> Self {
        Self::from_ints(&Q, cs)
    }

    /// Builds `X^d + ...` from coefficients listed from the top down.
    pub fn monic_from_top(rest: &[Rational]) -> Self {
        let mut c: Vec<Rational> = rest.iter().rev().cloned().collect();
        c.push(Rational::one());
        Self::rational(c)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        denominator_lcm(self.coeffs.iter())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Renders as `X^2-2115X+870630`, fractional coefficients in parentheses.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_elem() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else if a.is_integer() {
                out.push_str(&format!("{a}{mono}"));
            } else {
                out.push_str(&format!("({a}){mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("X"))
    }
}
