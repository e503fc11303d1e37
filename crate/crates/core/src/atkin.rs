//! Atkin-like polynomials of the depth-1 families and related objects.
//!
//! For weight `w = 12m + a` with `a ∈ {0, 2, 6, 8}` the pair `(A, B)` is the
//! Hermite–Padé approximant of `(U, V)` whose remainder is a fixed multiple
//! `N` of the hypergeometric factor of `G_w^(1)`. The pair is found by
//! solving the square vanishing system exactly; `N` comes from its closed
//! form and must match the first surviving remainder coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::extremal::{extremal_generic_full, q_to_t};
use crate::hypergeom::{f1, f2, f21_1728, u_series, v_series};
use crate::linalg::solve_exact_linear;
use crate::numeric::{binomial, factor_smooth, rat, rint, PrimePowerModulus, Rational};
use crate::qform::{MonomialTable, QMMonomial};
use crate::ring::Q;
use crate::{ModPoly, QSeries, RationalPoly};

/// A depth-1 family index: weight `12m + a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub m: u32,
    pub a: u32,
}

impl Family {
    pub fn new(m: u32, a: u32) -> Result<Self> {
        match a {
            0 if m == 0 => Err(Error::BadIndex(0)),
            0 | 2 | 6 | 8 => Ok(Family { m, a }),
            _ => Err(Error::BadFamily(a)),
        }
    }

    pub fn weight(&self) -> i64 {
        12 * self.m as i64 + self.a as i64
    }

    /// `(deg A, deg B)`, `None` for the zero polynomial.
    pub fn degrees(&self) -> (usize, Option<usize>) {
        let m = self.m as usize;
        match self.a {
            0 => (m - 1, Some(m)),
            2 => (m, m.checked_sub(1)),
            _ => (m, Some(m)),
        }
    }

    /// Order of the first surviving remainder coefficient.
    pub fn remainder_order(&self) -> usize {
        2 * self.m as usize + usize::from(self.a >= 6)
    }

    /// Signs `(s_A, s_B)` and whether `Ã` carries the factor `1 - 1728t`.
    fn shape(&self) -> (i64, i64, bool) {
        match self.a {
            0 | 8 => (-1, 1, true),
            _ => (1, -1, false),
        }
    }
}

/// Where a weight sits among the depth-1 families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightFamily {
    pub family: Family,
    /// `G_w = E4 · G_{w-4}` (weights `≡ 4, 10 mod 12`).
    pub e4_multiple: bool,
}

pub fn family_of_weight(w: i64) -> Result<WeightFamily> {
    if w % 2 != 0 || w < 0 {
        return Err(Error::OddWeight(w));
    }
    if w < 2 {
        return Err(Error::BadIndex(w));
    }
    if w == 4 {
        return Err(Error::WeightFour);
    }
    let (base, e4_multiple) = match w % 12 {
        4 | 10 => (w - 4, true),
        _ => (w, false),
    };
    let family = Family::new((base / 12) as u32, (base % 12) as u32)?;
    Ok(WeightFamily { family, e4_multiple })
}

/// Closed form of `N_{m,a}`.
pub fn normalizing_factor(family: Family) -> BigInt {
    let m = family.m as u64;
    let n0 = |m: u64| BigInt::from(24 * m) * binomial(6 * m, 2 * m as i64) * binomial(12 * m, 6 * m as i64);
    let n6 = BigInt::from(12 * (2 * m + 1))
        * binomial(6 * m + 3, 2 * m as i64 + 1)
        * binomial(12 * m + 6, 6 * m as i64 + 3);
    let ratio = |base: BigInt, num: u64, den: u64| {
        let (q, r) = (base * num).div_rem(&BigInt::from(den));
        debug_assert!(r.is_zero());
        q
    };
    match family.a {
        0 | 2 if m == 0 => BigInt::one(),
        0 => n0(m),
        2 => ratio(n0(m), 12 * m + 1, 12 * m - 1),
        6 => n6,
        _ => ratio(n6, 12 * m + 7, 12 * m + 5),
    }
}

/// Hermite–Padé data `(A, B, N, C)` for one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct AtkinData {
    pub family: Family,
    /// Monic.
    pub a_poly: RationalPoly,
    pub b_poly: RationalPoly,
    pub n: BigInt,
    /// Least common denominator of the coefficients of `A` and `B`.
    pub clearing: BigInt,
}

impl AtkinData {
    pub fn n_factorization(&self) -> Vec<(u64, u32)> {
        factor_smooth(&self.n, self.family.weight().max(2) as u64).expect("N is w-smooth")
    }

    /// `C · s_A · Ã · (1 - 1728t)^ε`, an integer polynomial in `t`.
    pub fn alpha(&self) -> RationalPoly {
        let (sa, _, factor) = self.family.shape();
        let (da, _) = self.family.degrees();
        let mut p = self.a_poly.reciprocal(da).expect("degree fits");
        if factor {
            p = p.mul(&RationalPoly::ints(&[1, -1728]));
        }
        p.scale(&Rational::from_integer(&self.clearing * sa))
    }

    /// `C · s_B · B̃`, an integer polynomial in `t`.
    pub fn beta(&self) -> RationalPoly {
        let (_, sb, _) = self.family.shape();
        match self.family.degrees().1 {
            None => RationalPoly::zero(&Q),
            Some(db) => self
                .b_poly
                .reciprocal(db)
                .expect("degree fits")
                .scale(&Rational::from_integer(&self.clearing * sb)),
        }
    }

    /// `α V + β U = C N t^k (1 + O(t))` to `O(t^len)`.
    pub fn remainder(&self, len: usize) -> QSeries {
        let a = &self.alpha().to_series(len) * &v_series(len);
        let b = &self.beta().to_series(len) * &u_series(len);
        &a + &b
    }

    pub fn alpha_mod(&self, m: PrimePowerModulus) -> Result<ModPoly> {
        self.alpha().map_into(&m, |c| crate::numeric::reduce_mod(c, m))
    }

    pub fn beta_mod(&self, m: PrimePowerModulus) -> Result<ModPoly> {
        self.beta().map_into(&m, |c| crate::numeric::reduce_mod(c, m))
    }
}

/// Solves the Hermite–Padé system for `family`.
pub fn atkin_data(family: Family) -> Result<AtkinData> {
    let (da, db) = family.degrees();
    let (sa, sb, factor) = family.shape();
    let ord = family.remainder_order();
    let len = ord + 1;
    let mut sa_series = v_series(len).scale_int(sa);
    if factor {
        sa_series = &sa_series * &QSeries::ints(&[1, -1728], len);
    }
    let sb_series = u_series(len).scale_int(sb);
    // Unknowns: A_0..A_{da-1}, then B_0..B_db. Coefficient k of a degree-d
    // polynomial contributes t^{d-k} times its series.
    let nb = db.map_or(0, |d| d + 1);
    let unknowns = da + nb;
    let term = |s: &QSeries, shift: usize, i: usize| -> Rational {
        if i >= shift {
            s.coeff(i - shift).clone()
        } else {
            Rational::zero()
        }
    };
    let mut matrix = Vec::with_capacity(ord);
    let mut rhs = Vec::with_capacity(ord);
    for i in 0..ord {
        let mut row = Vec::with_capacity(unknowns);
        for k in 0..da {
            row.push(term(&sa_series, da - k, i));
        }
        if let Some(d) = db {
            for k in 0..=d {
                row.push(term(&sb_series, d - k, i));
            }
        }
        matrix.push(row);
        rhs.push(-term(&sa_series, 0, i));
    }
    let singular = Error::SingularSystem { m: family.m, a: family.a };
    let x = if unknowns == 0 {
        Vec::new()
    } else {
        solve_exact_linear(&matrix, &rhs)
            .and_then(|s| s.unique())
            .map_err(|_| singular.clone())?
    };
    let mut a_coeffs: Vec<Rational> = x[..da].to_vec();
    a_coeffs.push(Rational::one());
    let a_poly = RationalPoly::rational(a_coeffs);
    let b_poly = RationalPoly::rational(x[da..].to_vec());
    let clearing = a_poly.denominator_lcm().lcm(&b_poly.denominator_lcm());
    let data = AtkinData {
        family,
        a_poly,
        b_poly,
        n: normalizing_factor(family),
        clearing,
    };
    let rem = data.remainder(len);
    let expected = Rational::from_integer(&data.n * &data.clearing);
    if (0..ord).any(|i| !rem.coeff(i).is_zero()) || *rem.coeff(ord) != expected {
        return Err(Error::DerivationMismatch(format!(
            "normalizing factor of (m, a) = ({}, {})",
            family.m, family.a
        )));
    }
    Ok(data)
}

/// `(Φ_n, Ψ_n)` from the three-term recursions
/// `Φ_{k+1} = Φ_k - λ_k^- t Φ_{k-1}`, `Ψ_{k+1} = Ψ_k - λ_k^+ t Ψ_{k-1}`.
pub fn phi_psi(n: u32, len: usize) -> (QSeries, QSeries) {
    let f = f1(len);
    let t = QSeries::ints(&[0, 1], len);
    let mut phi = (
        &f * &f,
        (&(&f * &f21_1728(rat(5, 12), rat(13, 12), rint(2), len)) * &t).scale_int(84),
    );
    let mut psi = (
        &f * &f2(len),
        (&(&f * &f21_1728(rat(7, 12), rat(11, 12), rint(2), len)) * &t).scale_int(-60),
    );
    if n == 0 {
        return (phi.0, psi.0);
    }
    for k in 1..n as i64 {
        let (lm, lp) = lambdas(k);
        let next_phi = &phi.1 - &(&t * &phi.0).scale(&lm);
        let next_psi = &psi.1 - &(&t * &psi.0).scale(&lp);
        phi = (phi.1, next_phi);
        psi = (psi.1, next_psi);
    }
    (phi.1, psi.1)
}

/// `(λ_k^-, λ_k^+)`.
fn lambdas(k: i64) -> (Rational, Rational) {
    if k == 1 {
        return (rint(84), rint(-60));
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let lam = |s: i64| rint(12) * (rint(6) + rat(s * sign, k - 1)) * (rint(6) + rat(s * sign, k));
    (lam(-1), lam(1))
}

/// Coefficients in `x = z/432` of the scaled hypergeometric factor of the
/// family, claimed integral.
pub fn scaled_series(family: Family, len: usize) -> QSeries {
    let m = family.m as u64;
    let v = (0..len as u64)
        .map(|n| {
            let base = if family.a < 6 {
                binomial(2 * m + n, n as i64)
                    * binomial(6 * m + 3 * n, (2 * m + n) as i64)
                    * binomial(12 * m + 6 * n, (6 * m + 3 * n) as i64)
            } else {
                binomial(2 * m + n + 1, n as i64)
                    * binomial(6 * m + 3 * n + 3, (2 * m + n + 1) as i64)
                    * binomial(12 * m + 6 * n + 6, (6 * m + 3 * n + 3) as i64)
            };
            let k = 12 * m as i64 + 6 * n as i64;
            let r = Rational::from_integer(base);
            match family.a {
                2 => r * rat(k + 1, k - 1),
                8 => r * rat(k + 7, k + 5),
                _ => r,
            }
        })
        .collect();
    QSeries::from_rationals(v)
}

/// `(j^m, 1)` for `m = 0..len`, the coefficients of `1 + 12 t d/dt log F1`.
pub fn atkin_moments(len: usize) -> Vec<BigInt> {
    let lf = f1(len).log_series().expect("F1 has constant term 1");
    let s = &QSeries::one(&Q, len) + &lf.theta_euler().scale_int(12);
    s.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// Exponents `c(1..=count)` with `(j^m, 1) = 12 Σ_{d | m} d c(d)`.
pub fn c_exponents(count: usize) -> Result<Vec<BigInt>> {
    let mom = atkin_moments(count + 1);
    let mut out = Vec::with_capacity(count);
    for m in 1..=count as u64 {
        let mut acc = BigInt::zero();
        for d in (1..=m).filter(|d| m % d == 0) {
            acc += &mom[d as usize] * mobius(m / d);
        }
        let c = Rational::new(acc, BigInt::from(12 * m));
        if !c.is_integer() {
            return Err(Error::NonIntegralExponent {
                n: m as usize,
                value: c.to_string(),
            });
        }
        out.push(c.to_integer());
    }
    Ok(out)
}

/// Atkin-type polynomial attached to the top `E2`-part of `G_w^(r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedAtkin {
    pub w: i64,
    pub r: u32,
    /// Degree `u` with `w - 2r = 4s + 6t + 12u`.
    pub u: u32,
    pub poly: RationalPoly,
    /// The top part is `E4^s E6^t Δ^u A(j) / n`.
    pub n: Rational,
}

/// `(s, t, u)` with `k = 4s + 6t + 12u`, `s <= 2`, `t <= 1`.
fn modular_shape(k: i64) -> Option<(u32, u32, u32)> {
    let (s, t) = match k.rem_euclid(12) {
        0 => (0, 0),
        2 => (2, 1),
        4 => (1, 0),
        6 => (0, 1),
        8 => (2, 0),
        _ => (1, 1),
    };
    let rest = k - 4 * s - 6 * t;
    (k >= 0 && rest >= 0).then_some((s as u32, t as u32, (rest / 12) as u32))
}

/// Extracts `A^(r)` from the `E2^r` part `f_r` of `G_w^(r)`:
/// `f_r / (E4^{s+3u} E6^t)` is `Ã(t)/N` as a series in `t = 1/j`.
pub fn generalized_atkin(w: i64, r: u32) -> Result<GeneralizedAtkin> {
    let fail = |why: &str| Error::ExtractionFailed(format!("w={w}, r={r}: {why}"));
    let (s, t, u) = modular_shape(w - 2 * r as i64).ok_or_else(|| fail("no modular part"))?;
    let n = u as usize + 8;
    let g = extremal_generic_full(w, r, n)?;
    let mut table = MonomialTable::new(n);
    let mut top = QSeries::zero(&Q, n);
    for (mono, c) in g.basis.iter().zip(&g.coefficients) {
        if mono.l == r && !c.is_zero() {
            let e = table.expansion(&QMMonomial { l: 0, ..*mono }).series;
            top = &top + &e.scale(c);
        }
    }
    if top.is_zero() {
        return Err(fail("top E2 part vanishes"));
    }
    let den = table
        .expansion(&QMMonomial { l: 0, m: s + 3 * u, n: t })
        .series;
    let h = q_to_t(&top.try_div(&den)?)?;
    let ud = u as usize;
    if (ud + 1..n).any(|i| !h.coeff(i).is_zero()) {
        return Err(fail("not a polynomial of the expected degree"));
    }
    let c0 = h.coeff(0).clone();
    if c0.is_zero() {
        return Err(fail("A is not of full degree"));
    }
    let norm = c0.recip();
    // Ã(t) = Σ_k a_k t^{u-k}, so a_k is the coefficient of t^{u-k}.
    let coeffs: Vec<Rational> = (0..=ud).map(|k| h.coeff(ud - k) * &norm).collect();
    Ok(GeneralizedAtkin {
        w,
        r,
        u,
        poly: RationalPoly::rational(coeffs),
        n: norm,
    })
}

/// `u` with `p - 1 = 12m + 4δ + 6ε`, the degree of the supersingular part.
pub fn supersingular_degree(p: u64) -> u32 {
    let k = p as i64 - 1;
    let (s, t, u) = modular_shape(k).expect("p - 1 is even");
    u + u32::from(s > 0) + t
}

/// For each `r in 1..=r_max`: whether `A^(r)_{u,2r}` reduces mod `p` to the
/// same polynomial as `A^(1)_{u,2}`. `None` when a coefficient is not
/// `p`-integral.
pub fn atkin_conjecture_check(p: u64, r_max: u32) -> Result<Vec<(u32, Option<bool>)>> {
    let m = PrimePowerModulus::new(p, 1)?;
    let u = supersingular_degree(p) as i64;
    let reduce = |poly: &RationalPoly| poly.map_into(&m, |c| crate::numeric::reduce_mod(c, m)).ok();
    let base = reduce(&generalized_atkin(12 * u + 2, 1)?.poly);
    let mut out = Vec::new();
    for r in 1..=r_max {
        let a = generalized_atkin(12 * u + 2 * r as i64, r)?;
        let verdict = match (&base, reduce(&a.poly)) {
            (Some(b), Some(x)) => Some(*b == x),
            _ => None,
        };
        out.push((r, verdict));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(m: u32, a: u32) -> Family {
        Family::new(m, a).unwrap()
    }

    #[test]
    fn small_families() {
        let d = atkin_data(fam(1, 0)).unwrap();
        assert_eq!(d.a_poly, RationalPoly::ints(&[1]));
        assert_eq!(d.b_poly, RationalPoly::ints(&[-1008, 1]));
        assert_eq!(d.n, BigInt::from(332640));
        let d = atkin_data(fam(0, 2)).unwrap();
        assert!(d.b_poly.is_zero());
        assert_eq!(d.n, BigInt::one());
        assert_eq!(atkin_data(fam(0, 8)).unwrap().n, BigInt::from(1008));
        let d = atkin_data(fam(2, 2)).unwrap();
        assert_eq!(d.a_poly, RationalPoly::ints(&[269280, -1640, 1]));
        assert_eq!(d.b_poly, RationalPoly::ints(&[-920, 1]));
    }

    #[test]
    fn families_of_weights() {
        assert_eq!(family_of_weight(114).unwrap().family, fam(9, 6));
        assert!(family_of_weight(22).unwrap().e4_multiple);
        assert_eq!(family_of_weight(4), Err(Error::WeightFour));
        assert_eq!(Family::new(1, 4), Err(Error::BadFamily(4)));
    }

    #[test]
    fn moments_and_exponents() {
        let m: Vec<i64> = atkin_moments(4).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(m, vec![1, 720, 911520, 1301011200]);
        let c: Vec<i64> = c_exponents(3).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![60, 37950, 36139180]);
    }

    #[test]
    fn scaled_heads() {
        assert_eq!(*scaled_series(fam(1, 2), 1).coeff(0), rint(16380));
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
    }

    #[test]
    fn supersingular_degrees() {
        assert_eq!(supersingular_degree(11), 2);
        assert_eq!(supersingular_degree(13), 1);
        assert_eq!(supersingular_degree(17), 2);
        assert_eq!(supersingular_degree(19), 2);
    }

    #[test]
    fn weight_26_generalized() {
        let a = generalized_atkin(26, 1).unwrap();
        assert_eq!(a.poly, RationalPoly::ints(&[269280, -1640, 1]));
    }
}
