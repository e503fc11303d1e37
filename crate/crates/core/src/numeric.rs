//! Exact integer and rational helpers.
//!
//! - [`binomial`], [`binomial_signed`] and [`binomial_rational`]
//! - [`bernoulli`]
//! - [`PrimePowerModulus`], [`Residue`] and [`reduce_mod`]
//! - [`factor_smooth`], [`valuation`], [`is_prime`]

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `a (a-1) ... (a-b+1) / b!` for any integer `a`; zero when `b < 0`.
pub fn binomial_signed(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return binomial(a as u64, b);
    }
    // C(-n, b) = (-1)^b C(n+b-1, b)
    let n = (-a) as u64;
    let v = binomial(n + b as u64 - 1, b);
    if b % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Generalized binomial `x (x-1) ... (x-b+1) / b!` for rational `x`.
pub fn binomial_rational(x: &Rational, b: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..b {
        acc *= x - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Bernoulli number `B_k` for even `k >= 2` (also valid for `k = 0`).
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k % 2 == 1 {
        return Err(Error::BadIndex(k as i64));
    }
    let mut b: Vec<Rational> = Vec::with_capacity(k as usize + 1);
    b.push(Rational::one());
    for m in 1..=k as u64 {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += bj * Rational::from_integer(binomial(m + 1, j as i64));
        }
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    Ok(b.pop().unwrap())
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
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

/// Primes in `lo..=hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// `p`-adic valuation of a nonzero integer; `u32::MAX` for zero.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Factorization of `n >= 1` into primes not exceeding `bound`.
pub fn factor_smooth(n: &BigInt, bound: u64) -> Result<Vec<(u64, u32)>> {
    if n.sign() != Sign::Plus {
        return Err(Error::NotSmooth(n.to_string()));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    for p in 2..=bound {
        if !is_prime(p) {
            continue;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        if rest.is_one() {
            break;
        }
    }
    if rest.is_one() {
        Ok(out)
    } else {
        Err(Error::NotSmooth(rest.to_string()))
    }
}

/// Renders a factorization as `2^6·3^3·5`.
pub fn render_factorization(f: &[(u64, u32)]) -> String {
    if f.is_empty() {
        return "1".to_string();
    }
    f.iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("·")
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// A modulus `p^s` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePowerModulus {
    p: u64,
    s: u32,
    value: u64,
}

impl PrimePowerModulus {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::ZeroExponent);
        }
        let value = p
            .checked_pow(s)
            .filter(|v| *v < (1 << 31))
            .ok_or(Error::UnsupportedModulus(format!("{p}^{s}")))?;
        Ok(PrimePowerModulus { p, s, value })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub(crate) fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.value);
        n.mod_floor(&m).to_u64().unwrap()
    }

    pub(crate) fn inverse_of(&self, v: u64) -> Option<u64> {
        if v % self.p == 0 {
            return None;
        }
        let m = self.value as i64;
        let (mut a, mut b) = (v as i64 % m, m);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(x0.rem_euclid(m) as u64)
    }
}

impl fmt::Display for PrimePowerModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.s)
        }
    }
}

/// An element of `Z/p^sZ`, stored as its least nonnegative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    modulus: PrimePowerModulus,
    value: u64,
}

impl Residue {
    pub fn new(modulus: PrimePowerModulus, value: u64) -> Self {
        Residue {
            modulus,
            value: value % modulus.value,
        }
    }

    pub fn from_int(modulus: PrimePowerModulus, n: &BigInt) -> Self {
        Residue {
            modulus,
            value: modulus.reduce_int(n),
        }
    }

    pub fn modulus(&self) -> PrimePowerModulus {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn add(self, o: Residue) -> Residue {
        Residue::new(self.modulus, self.value + o.value)
    }

    pub fn sub(self, o: Residue) -> Residue {
        Residue::new(self.modulus, self.value + self.modulus.value - o.value)
    }

    pub fn mul(self, o: Residue) -> Residue {
        Residue::new(self.modulus, self.value * o.value)
    }

    pub fn neg(self) -> Residue {
        Residue::new(self.modulus, self.modulus.value - self.value)
    }

    pub fn inverse(self) -> Option<Residue> {
        self.modulus
            .inverse_of(self.value)
            .map(|v| Residue::new(self.modulus, v))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Image of a `p`-integral rational in `Z/p^sZ`.
pub fn reduce_mod(x: &Rational, m: PrimePowerModulus) -> Result<Residue> {
    let d = m.reduce_int(x.denom());
    let inv = m.inverse_of(d).ok_or_else(|| Error::NonInvertibleDenominator {
        value: x.to_string(),
        p: m.p(),
    })?;
    let n = m.reduce_int(x.numer());
    Ok(Residue::new(m, n * inv))
}
