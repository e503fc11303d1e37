//! Generalized hypergeometric series and the named series built from them.
//!
//! The argument scale (1728 for the `t = 1/j` normalization, 432 for the
//! `z` normalization) is always part of [`HypergeometricSpec`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, rat, rint, Rational};
use crate::qform::{e4, e6};
use crate::ring::Q;
use crate::{QSeries, RationalPoly};

/// Parameters of `pFq(a_1..a_p; b_1..b_q; scale · x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub scale: Rational,
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, scale: Rational) -> Result<Self> {
        for b in &lower {
            if b.is_integer() && !b.is_positive() {
                return Err(Error::BadLowerParameter(b.to_string()));
            }
        }
        Ok(HypergeometricSpec { upper, lower, scale })
    }
}

/// Coefficients `∏(a_i)_k / ∏(b_j)_k · scale^k / k!` by the ratio recurrence.
pub fn pfq(spec: &HypergeometricSpec, n: usize) -> QSeries {
    let mut v = Vec::with_capacity(n);
    let mut c = Rational::one();
    for k in 0..n {
        v.push(c.clone());
        let kr = rint(k as i64);
        let mut num = spec.scale.clone();
        for a in &spec.upper {
            num *= a + &kr;
        }
        let mut den = rint(k as i64 + 1);
        for b in &spec.lower {
            den *= b + &kr;
        }
        c = c * num / den;
    }
    QSeries::from_rationals(v)
}

fn hyp(upper: &[Rational], lower: &[Rational], scale: i64, n: usize) -> QSeries {
    let spec = HypergeometricSpec::new(upper.to_vec(), lower.to_vec(), rint(scale))
        .expect("valid parameters");
    pfq(&spec, n)
}

/// `2F1(a, b; c; 1728 t)`.
pub fn f21_1728(a: Rational, b: Rational, c: Rational, n: usize) -> QSeries {
    hyp(&[a, b], &[c], 1728, n)
}

/// `F1 = 2F1(1/12, 5/12; 1; 1728t)`.
pub fn f1(n: usize) -> QSeries {
    f21_1728(rat(1, 12), rat(5, 12), rint(1), n)
}

/// `F2 = 2F1(-1/12, 7/12; 1; 1728t)`.
pub fn f2(n: usize) -> QSeries {
    f21_1728(rat(-1, 12), rat(7, 12), rint(1), n)
}

/// `u_r = C(2r,r) C(3r,r) C(6r,3r) = (6r)! / ((3r)! r!^3)`.
pub fn u_sequence(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n);
    let mut u = BigInt::one();
    for r in 0..n as u64 {
        out.push(u.clone());
        // u_{r+1} / u_r = 24 (6r+1)(2r+1)(6r+5) / (r+1)^3
        u = u * (24 * (6 * r + 1) * (2 * r + 1) * (6 * r + 5));
        u /= BigInt::from(r + 1).pow(3);
    }
    out
}

/// `U(t) = Σ u_r t^r`.
pub fn u_series(n: usize) -> QSeries {
    QSeries::from_bigints(&Q, &u_sequence(n), n)
}

/// `V(t) = (1 + 6 t d/dt) U(t) = Σ (6r+1) u_r t^r`.
pub fn v_series(n: usize) -> QSeries {
    let u = u_series(n);
    &u + &u.theta_euler().scale_int(6)
}

/// `P_n = F1 · 2F1((6n+1)/12, (6n+5)/12; n+1; 1728t)`.
pub fn p_series(n: u32, len: usize) -> QSeries {
    let n = n as i64;
    let g = f21_1728(rat(6 * n + 1, 12), rat(6 * n + 5, 12), rint(n + 1), len);
    &f1(len) * &g
}

/// `Q_n = F1 · 2F1((6n-1)/12, (6n+7)/12; n+1; 1728t)`.
pub fn q_series(n: u32, len: usize) -> QSeries {
    let n = n as i64;
    let g = f21_1728(rat(6 * n - 1, 12), rat(6 * n + 7, 12), rint(n + 1), len);
    &f1(len) * &g
}

/// `R_n = 3F2((4n+1)/6, (4n+3)/6, (4n+5)/6; n+1, n+1; 1728t)`.
pub fn r_series(n: u32, len: usize) -> QSeries {
    let n = n as i64;
    hyp(
        &[rat(4 * n + 1, 6), rat(4 * n + 3, 6), rat(4 * n + 5, 6)],
        &[rint(n + 1), rint(n + 1)],
        1728,
        len,
    )
}

/// `3F2((4n+3)/6, (4n+5)/6, (4n+7)/6; n+1, n+1; 1728t)`, the factor in the
/// depth-2 forms of weight `4n+2`.
pub fn r_series_shifted(n: u32, len: usize) -> QSeries {
    let n = n as i64;
    hyp(
        &[rat(4 * n + 3, 6), rat(4 * n + 5, 6), rat(4 * n + 7, 6)],
        &[rint(n + 1), rint(n + 1)],
        1728,
        len,
    )
}

/// Coefficient sequence behind a Dwork-type truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F6Variant {
    /// `B(m) = u_m / 1728^m`, coefficients of `3F2(1/6,1/2,5/6;1,1;x)`;
    /// `p`-integral for `p >= 5`.
    BSeries,
    /// `A(m) = C(3m,m) C(6m,3m)`, coefficients of `2F1(1/6,5/6;1;432z)`.
    ASeries,
    /// `u_m` itself, i.e. `U(t) = F(1728t)` for the B-series.
    USeries,
}

/// `A(m) = C(3m, m) C(6m, 3m)`.
pub fn a_sequence(n: usize) -> Vec<BigInt> {
    (0..n as u64)
        .map(|m| binomial(3 * m, m as i64) * binomial(6 * m, 3 * m as i64))
        .collect()
}

/// The series `F` of the chosen variant to `O(x^n)`.
pub fn f6_series(variant: F6Variant, n: usize) -> QSeries {
    match variant {
        F6Variant::ASeries => QSeries::from_bigints(&Q, &a_sequence(n), n),
        F6Variant::USeries => u_series(n),
        F6Variant::BSeries => {
            let u = u_sequence(n);
            let mut pw = BigInt::one();
            let v = u
                .into_iter()
                .map(|x| {
                    let r = Rational::new(x, pw.clone());
                    pw *= 1728;
                    r
                })
                .collect();
            QSeries::from_rationals(v)
        }
    }
}

/// `(F to O(x^n), F_s = Σ_{m < p^s} c_m x^m)`.
pub fn f6_truncation(variant: F6Variant, p: u64, s: u32, n: usize) -> (QSeries, RationalPoly) {
    let ps = p.pow(s) as usize;
    let full = f6_series(variant, n.max(ps));
    let poly = RationalPoly::from_series(&full, ps);
    (full.truncate(n), poly)
}

/// `z/432` as a series in `t = 1/j`: `Σ 432^{m-1} C_{m-1} t^m`.
pub fn z_of_t(n: usize) -> QSeries {
    let mut v = vec![Rational::zero(); n];
    let mut pw = BigInt::one();
    for m in 1..n {
        let k = (m - 1) as u64;
        let catalan = binomial(2 * k, k as i64).div_floor(&BigInt::from(k + 1));
        v[m] = Rational::from_integer(&pw * catalan);
        pw *= 432;
    }
    QSeries::from_rationals(v)
}

/// `z/432` as a q-series: `(1 - E4^{-3/2} E6) / 864`.
pub fn z_of_q(n: usize) -> QSeries {
    let root = e4(n).series.sqrt_one().unwrap();
    let inv = root.pow(3).invert().unwrap();
    let x = &inv * &e6(n).series;
    (&QSeries::one(&Q, n) - &x).scale(&rat(1, 864))
}

/// `t = z (1 - 432 z)` for `z` the 432-scaled parameter; the inverse of
/// [`z_of_t`].
pub fn t_of_z(n: usize) -> QSeries {
    QSeries::ints(&[0, 1, -432], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_and_v() {
        let u: Vec<i64> = u_sequence(4).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(u, vec![1, 120, 83160, 81681600]);
        assert_eq!(v_series(3), QSeries::ints(&[1, 840, 1081080], 3));
        for r in 0..30u64 {
            let alt = binomial(4 * r, r as i64) * binomial(5 * r, r as i64) * binomial(6 * r, r as i64);
            assert_eq!(u_sequence(30)[r as usize], alt);
        }
    }

    #[test]
    fn f1_squared_is_u() {
        assert_eq!(&f1(20) * &f1(20), u_series(20));
        assert_eq!(p_series(0, 20), u_series(20));
    }

    #[test]
    fn zero_scale_is_one() {
        let spec = HypergeometricSpec::new(vec![rat(1, 2)], vec![rint(3)], rint(0)).unwrap();
        assert_eq!(pfq(&spec, 5), QSeries::one(&Q, 5));
        assert!(HypergeometricSpec::new(vec![], vec![rint(-2)], rint(1)).is_err());
    }

    #[test]
    fn named_series_heads() {
        assert_eq!(p_series(2, 3), QSeries::ints(&[1, 944, 1054170], 3));
        assert_eq!(q_series(1, 3), QSeries::ints(&[1, 450, 394680], 3));
        assert_eq!(*r_series(1, 2).coeff(1), rint(630));
        assert_eq!(*r_series(2, 1).coeff(0), rint(1));
        assert_eq!(a_sequence(2)[1], BigInt::from(60));
    }

    #[test]
    fn z_maps() {
        assert_eq!(z_of_t(4), QSeries::ints(&[0, 1, 432, 373248], 4));
        assert_eq!(z_of_q(4), QSeries::ints(&[0, 1, -312, 87084], 4));
        assert_eq!(z_of_t(20).compose(&t_of_z(20)).unwrap(), QSeries::ints(&[0, 1], 20));
    }
}
