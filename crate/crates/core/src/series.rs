//! Truncated formal power series over an exact coefficient ring.
//!
//! A [`TruncSeries`] stores `c_0, ..., c_{N-1}` and stands for
//! `c_0 + c_1 x + ... + O(x^N)`. Binary operations return the smaller
//! truncation of the operands; nothing is ever silently padded.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{PrimePowerModulus, Rational, Residue};
use crate::ring::{Coefficient, Q};

/// Truncated power series `c_0 + ... + c_{N-1} x^{N-1} + O(x^N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<C: Coefficient> {
    domain: C::Domain,
    coeffs: Vec<C>,
}

/// Outcome of comparing two series on the overlap of their truncations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agreement {
    pub compared: usize,
    pub first_difference: Option<usize>,
}

impl Agreement {
    pub fn holds(&self) -> bool {
        self.first_difference.is_none()
    }
}

impl<C: Coefficient> TruncSeries<C> {
    pub fn new(domain: C::Domain, coeffs: Vec<C>) -> Self {
        TruncSeries { domain, coeffs }
    }

    pub fn zero(domain: &C::Domain, n: usize) -> Self {
        Self::new(domain.clone(), vec![C::zero_in(domain); n])
    }

    pub fn one(domain: &C::Domain, n: usize) -> Self {
        Self::monomial(domain, 0, C::one_in(domain), n)
    }

    /// `c x^k + O(x^n)`.
    pub fn monomial(domain: &C::Domain, k: usize, c: C, n: usize) -> Self {
        let mut s = Self::zero(domain, n);
        if k < n {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series from integer coefficients, padded with zeros to length `n`.
    pub fn from_ints(domain: &C::Domain, cs: &[i64], n: usize) -> Self {
        let mut v: Vec<C> = cs.iter().take(n).map(|&c| C::from_i64(c, domain)).collect();
        v.resize(n, C::zero_in(domain));
        Self::new(domain.clone(), v)
    }

    pub fn from_bigints(domain: &C::Domain, cs: &[BigInt], n: usize) -> Self {
        let mut v: Vec<C> = cs.iter().take(n).map(|c| C::from_int(c, domain)).collect();
        v.resize(n, C::zero_in(domain));
        Self::new(domain.clone(), v)
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    /// The truncation order `N` of the `O(x^N)` tail.
    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^i`; panics beyond the truncation.
    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: C) {
        self.coeffs[i] = c;
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(
            self.domain.clone(),
            self.coeffs[..n.min(self.trunc())].to_vec(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_elem())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_elem())
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(
                self.domain.to_string(),
                other.domain.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let n = self.trunc().min(other.trunc());
        let c = (0..n).map(|i| self.coeffs[i].plus(&other.coeffs[i])).collect();
        Ok(Self::new(self.domain.clone(), c))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let n = self.trunc().min(other.trunc());
        let c = (0..n).map(|i| self.coeffs[i].minus(&other.coeffs[i])).collect();
        Ok(Self::new(self.domain.clone(), c))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let n = self.trunc().min(other.trunc());
        Ok(self.mul_to(other, n))
    }

    fn mul_to(&self, other: &Self, n: usize) -> Self {
        let c = C::convolve(&self.coeffs, &other.coeffs, n, &self.domain);
        Self::new(self.domain.clone(), c)
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.domain.clone(),
            self.coeffs.iter().map(|c| c.negated()).collect(),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(
            self.domain.clone(),
            self.coeffs.iter().map(|x| x.times(c)).collect(),
        )
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&C::from_i64(n, &self.domain))
    }

    /// Multiplication by `x^k`; the truncation grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![C::zero_in(&self.domain); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(self.domain.clone(), c)
    }

    /// Division by `x^k`; `None` unless the first `k` coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if k > self.trunc() || self.coeffs[..k].iter().any(|c| !c.is_zero_elem()) {
            return None;
        }
        Some(Self::new(self.domain.clone(), self.coeffs[k..].to_vec()))
    }

    /// `f(x^k)`, known to `O(x^{kN})`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.trunc() * k;
        let mut c = vec![C::zero_in(&self.domain); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * k] = x.clone();
        }
        Self::new(self.domain.clone(), c)
    }

    /// `f(a x)`.
    pub fn scale_variable(&self, a: &C) -> Self {
        let mut pw = C::one_in(&self.domain);
        let mut c = Vec::with_capacity(self.trunc());
        for x in &self.coeffs {
            c.push(x.times(&pw));
            pw = pw.times(a);
        }
        Self::new(self.domain.clone(), c)
    }

    /// Multiplicative inverse; needs a unit constant term.
    pub fn invert(&self) -> Result<Self> {
        let n = self.trunc();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0inv = self.coeffs[0]
            .inverted()
            .ok_or_else(|| Error::NonUnitConstantTerm(self.coeffs[0].to_string()))?;
        // Newton: g <- g (2 - f g), doubling the precision each round.
        let mut g = Self::new(self.domain.clone(), vec![c0inv]);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let f = self.truncate(prec);
            let g_ext = g.extend_to(prec);
            let fg = f.mul_to(&g_ext, prec);
            let two_minus = Self::one(&self.domain, prec).scale_int(2).try_sub(&fg)?;
            g = g_ext.mul_to(&two_minus, prec);
        }
        Ok(g)
    }

    fn extend_to(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(n, C::zero_in(&self.domain));
        Self::new(self.domain.clone(), c)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.invert()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.domain, self.trunc());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_to(&base, self.trunc());
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_to(&base, self.trunc());
            }
        }
        acc
    }

    /// Integer power, negative exponents through [`invert`](Self::invert).
    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.invert()?.pow((-e) as u32))
        }
    }

    /// `f(g(x))` for `g` without constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_domain(g)?;
        if g.trunc() > 0 && !g.coeffs[0].is_zero_elem() {
            return Err(Error::NonzeroConstantInner);
        }
        let n = self.trunc().min(g.trunc());
        let mut acc = Self::zero(&self.domain, n);
        // Horner from the top coefficient down.
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_to(g, n);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// Compositional inverse of `f = c_1 x + ...` with `c_1` a unit.
    pub fn revert(&self) -> Result<Self> {
        let n = self.trunc();
        if n < 2 || !self.coeffs[0].is_zero_elem() {
            return Err(Error::NotReversible);
        }
        let c1inv = self.coeffs[1].inverted().ok_or(Error::NotReversible)?;
        let df = self.derive();
        // Newton: g <- g - (f(g) - x) / f'(g).
        let mut g = Self::monomial(&self.domain, 1, c1inv, 2);
        let mut prec = 2;
        while prec < n {
            prec = (2 * prec).min(n);
            let g_ext = g.extend_to(prec);
            let fg = self.truncate(prec).compose(&g_ext)?;
            let x = Self::monomial(&self.domain, 1, C::one_in(&self.domain), prec);
            let resid = fg.try_sub(&x)?;
            let dfg = df.extend_to(prec).compose(&g_ext)?;
            let step = resid.try_div(&dfg)?;
            g = g_ext.try_sub(&step)?;
        }
        Ok(g.truncate(n))
    }

    /// Square root with constant term 1; needs 2 to be a unit.
    pub fn sqrt_one(&self) -> Result<Self> {
        let n = self.trunc();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0] != C::one_in(&self.domain) {
            return Err(Error::ConstantTermNotOne);
        }
        let half = C::from_i64(2, &self.domain)
            .inverted()
            .ok_or_else(|| Error::NotInvertible("2".into()))?;
        // Newton: g <- (g + f/g) / 2.
        let mut g = Self::one(&self.domain, 1);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let g_ext = g.extend_to(prec);
            let q = self.truncate(prec).try_div(&g_ext)?;
            g = g_ext.try_add(&q)?.scale(&half);
        }
        Ok(g)
    }

    /// Termwise `d/dx`; the truncation drops by one.
    pub fn derive(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x.times(&C::from_i64(i as i64, &self.domain)))
            .collect();
        Self::new(self.domain.clone(), c)
    }

    /// Euler operator `x d/dx`; the truncation is preserved.
    pub fn theta_euler(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, x)| x.times(&C::from_i64(i as i64, &self.domain)))
            .collect();
        Self::new(self.domain.clone(), c)
    }

    /// Antiderivative with zero constant term; the truncation grows by one.
    pub fn integrate(&self) -> Result<Self> {
        let mut c = vec![C::zero_in(&self.domain)];
        for (i, x) in self.coeffs.iter().enumerate() {
            let k = C::from_i64(i as i64 + 1, &self.domain)
                .inverted()
                .ok_or_else(|| Error::NotInvertible((i + 1).to_string()))?;
            c.push(x.times(&k));
        }
        Ok(Self::new(self.domain.clone(), c))
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log_series(&self) -> Result<Self> {
        let n = self.trunc();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0] != C::one_in(&self.domain) {
            return Err(Error::BadConstantTerm("log"));
        }
        let q = self.derive().try_div(&self.truncate(n - 1))?;
        q.integrate()
    }

    /// Formal exponential of a series without constant term.
    pub fn exp_series(&self) -> Result<Self> {
        let n = self.trunc();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero_elem() {
            return Err(Error::BadConstantTerm("exp"));
        }
        // Newton: g <- g (1 + h - log g).
        let mut g = Self::one(&self.domain, 1);
        let mut prec = 1;
        while prec < n {
            prec = (2 * prec).min(n);
            let g_ext = g.extend_to(prec);
            let lg = g_ext.log_series()?;
            let corr = Self::one(&self.domain, prec)
                .try_add(&self.truncate(prec))?
                .try_sub(&lg)?;
            g = g_ext.mul_to(&corr, prec);
        }
        Ok(g)
    }

    /// Compares on the overlap of the two truncations.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let n = self.trunc().min(other.trunc());
        Agreement {
            compared: n,
            first_difference: (0..n).find(|&i| self.coeffs[i] != other.coeffs[i]),
        }
    }

    /// Equality on the overlap of truncations.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.domain == other.domain && self.agreement(other).holds()
    }

    /// Text form: a `domain trunc` header, then one coefficient per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", C::domain_tag(&self.domain), self.trunc());
        for c in &self.coeffs {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }
}

impl TruncSeries<Rational> {
    pub fn from_rationals(cs: Vec<Rational>) -> Self {
        Self::new(Q, cs)
    }

    pub fn ints(cs: &[i64], n: usize) -> Self {
        Self::from_ints(&Q, cs, n)
    }

    /// `f^e` for rational `e` and constant term 1, as `exp(e log f)`.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        self.log_series()?.scale(e).exp_series()
    }

    /// Image modulo `p^s`; fails on a coefficient that is not `p`-integral.
    pub fn reduce(&self, m: PrimePowerModulus) -> Result<TruncSeries<Residue>> {
        let c = self
            .coeffs
            .iter()
            .map(|x| <Residue as Coefficient>::from_rational(x, &m))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries::new(m, c))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Renders nonzero terms: `1 - 24q - 72q^2`, or with a space between
    /// coefficient and monomial (`q^4 + 1176/5 q^5 + 18816 q^6`) as soon as
    /// any coefficient is fractional.
    pub fn render_terms(&self, var: &str, max_terms: Option<usize>) -> String {
        let mut out = String::new();
        let mut count = 0;
        let spaced = self.coeffs.iter().any(|c| !c.is_integer());
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if max_terms.is_some_and(|m| count >= m) {
                break;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if count == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&render_term(&a, k, var, spaced));
            count += 1;
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the output of [`to_text`](TruncSeries::to_text) for `Q`.
    pub fn from_text(text: &str) -> Result<Self> {
        let (domain, body) = parse_header(text)?;
        if domain != "Q" {
            return Err(Error::Parse(format!("expected domain Q, got {domain}")));
        }
        let c = body
            .iter()
            .map(|l| <Rational as Coefficient>::parse(l, &Q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(Q, c))
    }
}

fn parse_header(text: &str) -> Result<(String, Vec<&str>)> {
    let mut lines = text.lines();
    let head = lines.next().ok_or_else(|| Error::Parse("empty".into()))?;
    let (domain, n) = head
        .split_once(' ')
        .ok_or_else(|| Error::Parse(head.to_string()))?;
    let n: usize = n.trim().parse().map_err(|_| Error::Parse(head.to_string()))?;
    let body: Vec<&str> = lines.filter(|l| !l.trim().is_empty()).collect();
    if body.len() != n {
        return Err(Error::Parse(format!(
            "header says {n} coefficients, found {}",
            body.len()
        )));
    }
    Ok((domain.to_string(), body))
}

impl TruncSeries<Residue> {
    /// Parses the output of [`to_text`](TruncSeries::to_text) for `Z/p^s`.
    pub fn from_text(text: &str) -> Result<Self> {
        let (domain, body) = parse_header(text)?;
        let bad = || Error::Parse(domain.clone());
        let rest = domain.strip_prefix("Z/").ok_or_else(bad)?;
        let (p, s) = match rest.split_once('^') {
            Some((p, s)) => (
                p.parse().map_err(|_| bad())?,
                s.parse().map_err(|_| bad())?,
            ),
            None => (rest.parse().map_err(|_| bad())?, 1),
        };
        let m = PrimePowerModulus::new(p, s)?;
        let c = body
            .iter()
            .map(|l| <Residue as Coefficient>::parse(l, &m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(m, c))
    }

    /// Least nonnegative representatives as a rational series.
    pub fn lift(&self) -> TruncSeries<Rational> {
        TruncSeries::new(
            Q,
            self.coeffs
                .iter()
                .map(|r| Rational::from_integer(BigInt::from(r.value())))
                .collect(),
        )
    }
}

fn render_term(a: &Rational, k: usize, var: &str, spaced: bool) -> String {
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if k == 0 {
        a.to_string()
    } else if a.is_one() {
        mono
    } else if spaced {
        format!("{a} {mono}")
    } else {
        format!("{a}{mono}")
    }
}

impl fmt::Display for TruncSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.render_terms("x", None);
        if body == "0" {
            write!(f, "O(x^{})", self.trunc())
        } else {
            write!(f, "{body} + O(x^{})", self.trunc())
        }
    }
}

impl<C: Coefficient> Add for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    /// Panics on a domain mismatch; see [`TruncSeries::try_add`].
    fn add(self, rhs: Self) -> TruncSeries<C> {
        self.try_add(rhs).expect("series domains differ")
    }
}

impl<C: Coefficient> Sub for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: Self) -> TruncSeries<C> {
        self.try_sub(rhs).expect("series domains differ")
    }
}

impl<C: Coefficient> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: Self) -> TruncSeries<C> {
        self.try_mul(rhs).expect("series domains differ")
    }
}

impl<C: Coefficient> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries::neg(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $m(self, rhs: Self) -> TruncSeries<C> {
                $tr::$m(&self, &rhs)
            }
        }
        impl<C: Coefficient> $tr<&TruncSeries<C>> for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $m(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
                $tr::$m(&self, rhs)
            }
        }
        impl<C: Coefficient> $tr<TruncSeries<C>> for &TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $m(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
                $tr::$m(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rint};

    fn s(cs: &[i64], n: usize) -> TruncSeries<Rational> {
        TruncSeries::ints(cs, n)
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(&s(&[1, 1], 6) * &s(&[1, -1], 6), s(&[1, 0, -1], 6));
        assert_eq!(s(&[1, -1], 5).invert().unwrap(), s(&[1, 1, 1, 1, 1], 5));
        let f = s(&[1, 7, 0, 5], 12);
        assert_eq!(f.invert().unwrap().invert().unwrap(), f);
        assert!(matches!(
            s(&[0, 2], 4).invert(),
            Err(Error::NonUnitConstantTerm(_))
        ));
        assert!((&s(&[3, 1], 4) * &TruncSeries::zero(&Q, 4)).is_zero());
    }

    #[test]
    fn truncation_is_min() {
        let a = s(&[1, 2, 3], 3);
        let b = s(&[1, 1, 1, 1, 1], 5);
        assert_eq!((&a * &b).trunc(), 3);
        assert_eq!(a.derive().trunc(), 2);
        assert_eq!(a.theta_euler().trunc(), 3);
    }

    #[test]
    fn composition_and_reversion() {
        let geo = s(&[1, 1, 1, 1, 1, 1, 1, 1], 8);
        let t2 = s(&[0, 0, 1], 8);
        assert_eq!(geo.compose(&t2).unwrap(), s(&[1, 0, 1, 0, 1, 0, 1, 0], 8));
        let x = s(&[0, 1], 8);
        let g = s(&[0, 3, 1, 4], 8);
        assert_eq!(x.compose(&g).unwrap(), g);
        assert!(matches!(geo.compose(&geo), Err(Error::NonzeroConstantInner)));
        assert_eq!(s(&[0, 1, -1], 5).revert().unwrap(), s(&[0, 1, 1, 2, 5], 5));
        let f = s(&[0, 1, -744], 10);
        assert_eq!(f.revert().unwrap().revert().unwrap(), f);
    }

    #[test]
    fn radicals_and_transcendentals() {
        let inv_sqrt = s(&[1, -1728], 3).sqrt_one().unwrap().invert().unwrap();
        assert_eq!(inv_sqrt, s(&[1, 864, 1119744], 3));
        assert_eq!(s(&[1], 4).sqrt_one().unwrap(), s(&[1], 4));
        assert_eq!(s(&[1, 2, 1], 6).sqrt_one().unwrap(), s(&[1, 1], 6));
        assert!(matches!(s(&[2, 1], 4).sqrt_one(), Err(Error::ConstantTermNotOne)));
        let f = s(&[1, 1], 10);
        assert_eq!(f.log_series().unwrap().exp_series().unwrap(), f);
        assert!(s(&[1], 10).log_series().unwrap().is_zero());
        assert_eq!(
            s(&[1, 1], 4).log_series().unwrap(),
            TruncSeries::from_rationals(vec![rint(0), rint(1), rat(-1, 2), rat(1, 3)])
        );
    }

    #[test]
    fn euler_operator() {
        assert_eq!(s(&[1, 1, 1], 3).theta_euler(), s(&[0, 1, 2], 3));
        assert!(s(&[5], 3).derive().is_zero());
    }

    #[test]
    fn residue_series_refuse_non_units() {
        let m = PrimePowerModulus::new(5, 2).unwrap();
        let f = TruncSeries::<Residue>::from_ints(&m, &[5, 1], 4);
        assert!(f.invert().is_err());
        let g = TruncSeries::<Residue>::from_ints(&m, &[1, 1], 4);
        assert_eq!(g.invert().unwrap().lift(), s(&[1, 24, 1, 24], 4));
    }

    #[test]
    fn domain_mismatch() {
        let a = TruncSeries::<Residue>::from_ints(&PrimePowerModulus::new(5, 2).unwrap(), &[1], 2);
        let b = TruncSeries::<Residue>::from_ints(&PrimePowerModulus::new(7, 2).unwrap(), &[1], 2);
        assert!(matches!(a.try_mul(&b), Err(Error::DomainMismatch(_, _))));
    }

    #[test]
    fn text_round_trip() {
        let f = TruncSeries::from_rationals(vec![rint(1), rat(-3, 7), rint(0)]);
        let t = f.to_text();
        assert_eq!(t, "Q 3\n1\n-3/7\n0\n");
        assert_eq!(TruncSeries::<Rational>::from_text(&t).unwrap(), f);
        let m = PrimePowerModulus::new(2, 8).unwrap();
        let g = TruncSeries::<Residue>::from_ints(&m, &[1, 120, 96], 3);
        assert_eq!(TruncSeries::<Residue>::from_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn rendering() {
        let f = TruncSeries::from_rationals(vec![
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(1),
            rat(1176, 5),
            rint(18816),
        ]);
        assert_eq!(f.render_terms("q", None), "q^4 + 1176/5 q^5 + 18816 q^6");
        assert_eq!(s(&[1, -24, -72], 3).render_terms("q", None), "1 - 24q - 72q^2");
        assert_eq!(s(&[0, -1], 3).render_terms("q", Some(1)), "-q");
    }
}
