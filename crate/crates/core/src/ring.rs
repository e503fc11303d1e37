//! The exact coefficient rings series and polynomials are generic over.
//!
//! Two rings are provided: [`Rational`] (domain tag [`Q`]) and [`Residue`]
//! (domain tag [`PrimePowerModulus`]). A domain value is needed to build
//! constants because residues carry their modulus at runtime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{reduce_mod, PrimePowerModulus, Rational, Residue};

/// Domain tag of the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Q;

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

/// Exact commutative coefficient ring.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Domain: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero_in(domain: &Self::Domain) -> Self;
    fn one_in(domain: &Self::Domain) -> Self;
    fn from_int(n: &BigInt, domain: &Self::Domain) -> Self;
    fn from_rational(x: &Rational, domain: &Self::Domain) -> Result<Self>;
    fn parse(text: &str, domain: &Self::Domain) -> Result<Self>;

    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverted(&self) -> Option<Self>;

    /// Tag used in the text serialization header.
    fn domain_tag(domain: &Self::Domain) -> String {
        domain.to_string()
    }

    fn from_i64(n: i64, domain: &Self::Domain) -> Self {
        Self::from_int(&BigInt::from(n), domain)
    }

    /// First `n` coefficients of the product of two coefficient slices.
    fn convolve(a: &[Self], b: &[Self], n: usize, domain: &Self::Domain) -> Vec<Self> {
        let mut out = vec![Self::zero_in(domain); n];
        for (i, x) in a.iter().enumerate().take(n) {
            if x.is_zero_elem() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                if !y.is_zero_elem() {
                    out[i + j] = out[i + j].plus(&x.times(y));
                }
            }
        }
        out
    }
}

impl Coefficient for Rational {
    type Domain = Q;

    fn zero_in(_: &Q) -> Self {
        Rational::zero()
    }

    fn one_in(_: &Q) -> Self {
        Rational::one()
    }

    fn from_int(n: &BigInt, _: &Q) -> Self {
        Rational::from_integer(n.clone())
    }

    fn from_rational(x: &Rational, _: &Q) -> Result<Self> {
        Ok(x.clone())
    }

    fn parse(text: &str, _: &Q) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(text.to_string());
        match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rational::new(n, d))
            }
            None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
        }
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn inverted(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    // Clears denominators and convolves integer vectors, so only the n
    // output coefficients are normalized.
    fn convolve(a: &[Self], b: &[Self], n: usize, _: &Q) -> Vec<Self> {
        let (ai, ad) = common_denominator(&a[..a.len().min(n)]);
        let (bi, bd) = common_denominator(&b[..b.len().min(n)]);
        let den = ad * bd;
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in ai.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bi.iter().enumerate().take(n - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out.into_iter()
            .map(|c| Rational::new(c, den.clone()))
            .collect()
    }
}

/// Integer numerators over the least common denominator.
pub(crate) fn common_denominator(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = xs
        .iter()
        .map(|x| x.numer() * (&den / x.denom()))
        .collect();
    (nums, den)
}

impl Coefficient for Residue {
    type Domain = PrimePowerModulus;

    fn domain_tag(m: &PrimePowerModulus) -> String {
        format!("Z/{m}")
    }

    fn zero_in(m: &PrimePowerModulus) -> Self {
        Residue::new(*m, 0)
    }

    fn one_in(m: &PrimePowerModulus) -> Self {
        Residue::new(*m, 1)
    }

    fn from_int(n: &BigInt, m: &PrimePowerModulus) -> Self {
        Residue::from_int(*m, n)
    }

    fn from_rational(x: &Rational, m: &PrimePowerModulus) -> Result<Self> {
        reduce_mod(x, *m)
    }

    fn parse(text: &str, m: &PrimePowerModulus) -> Result<Self> {
        let x = <Rational as Coefficient>::parse(text, &Q)?;
        reduce_mod(&x, *m)
    }

    fn is_zero_elem(&self) -> bool {
        self.value() == 0
    }

    fn plus(&self, other: &Self) -> Self {
        Residue::add(*self, *other)
    }

    fn minus(&self, other: &Self) -> Self {
        Residue::sub(*self, *other)
    }

    fn times(&self, other: &Self) -> Self {
        Residue::mul(*self, *other)
    }

    fn negated(&self) -> Self {
        Residue::neg(*self)
    }

    fn inverted(&self) -> Option<Self> {
        Residue::inverse(*self)
    }

    fn convolve(a: &[Self], b: &[Self], n: usize, m: &PrimePowerModulus) -> Vec<Self> {
        let modv = m.value();
        let mut out = vec![0u64; n];
        for (i, x) in a.iter().enumerate().take(n) {
            let x = x.value();
            if x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(n - i) {
                out[i + j] = (out[i + j] + x * y.value()) % modv;
            }
        }
        out.into_iter().map(|v| Residue::new(*m, v)).collect()
    }
}
