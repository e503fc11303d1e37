//! q-expansions of `E2`, `E4`, `E6`, `Δ`, `1/j` and the differential
//! operators acting on quasimodular forms.
//!
//! Operators take the acting weight from the caller: `∂_k` is applied with
//! whatever `k` is passed, never with the weight stored on the form.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{bernoulli, binomial_signed, rat, rint, Rational};
use crate::ring::Q;
use crate::QSeries;

/// A q-series with weight and (upper bound on) depth.
#[derive(Debug, Clone, PartialEq)]
pub struct QExpansion {
    pub series: QSeries,
    pub weight: i64,
    pub depth: u32,
}

impl QExpansion {
    pub fn new(series: QSeries, weight: i64, depth: u32) -> Self {
        QExpansion { series, weight, depth }
    }

    pub fn trunc(&self) -> usize {
        self.series.trunc()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        self.series.coeff(i)
    }

    pub fn mul(&self, o: &QExpansion) -> QExpansion {
        QExpansion::new(
            &self.series * &o.series,
            self.weight + o.weight,
            self.depth + o.depth,
        )
    }

    /// Sum of two forms; the weight of `self` is kept.
    pub fn add(&self, o: &QExpansion) -> QExpansion {
        QExpansion::new(&self.series + &o.series, self.weight, self.depth.max(o.depth))
    }

    pub fn sub(&self, o: &QExpansion) -> QExpansion {
        QExpansion::new(&self.series - &o.series, self.weight, self.depth.max(o.depth))
    }

    pub fn scale(&self, c: &Rational) -> QExpansion {
        QExpansion::new(self.series.scale(c), self.weight, self.depth)
    }

    pub fn truncate(&self, n: usize) -> QExpansion {
        QExpansion::new(self.series.truncate(n), self.weight, self.depth)
    }

    /// Index of the leading nonzero coefficient.
    pub fn vanishing_order(&self) -> Option<usize> {
        self.series.valuation()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Generator {
    E2,
    E4,
    E6,
    Delta,
    JInverse,
}

fn cache() -> &'static Mutex<HashMap<Generator, QSeries>> {
    static CACHE: OnceLock<Mutex<HashMap<Generator, QSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(g: Generator, n: usize, build: impl FnOnce(usize) -> QSeries) -> QSeries {
    if let Some(s) = cache().lock().unwrap().get(&g) {
        if s.trunc() >= n {
            return s.truncate(n);
        }
    }
    let s = build(n);
    cache().lock().unwrap().insert(g, s.clone());
    s
}

/// `σ_k(n)` for `1 <= n < len`.
fn divisor_sums(k: u32, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for d in 1..len {
        let dk = BigInt::from(d).pow(k);
        for m in (d..len).step_by(d) {
            out[m] += &dk;
        }
    }
    out
}

/// `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) q^n` for `k ∈ {2, 4, 6}`.
pub fn eisenstein(k: u32, n: usize) -> Result<QExpansion> {
    let g = match k {
        2 => Generator::E2,
        4 => Generator::E4,
        6 => Generator::E6,
        _ => return Err(Error::BadIndex(k as i64)),
    };
    let series = cached(g, n, |n| {
        let c = -rint(2 * k as i64) / bernoulli(k).unwrap();
        let sig = divisor_sums(k - 1, n);
        let mut v: Vec<Rational> = sig
            .into_iter()
            .map(|s| &c * Rational::from_integer(s))
            .collect();
        if n > 0 {
            v[0] = Rational::one();
        }
        QSeries::from_rationals(v)
    });
    Ok(QExpansion::new(series, k as i64, u32::from(k == 2)))
}

/// Shorthand for the three Eisenstein series to `O(q^n)`.
pub fn e2(n: usize) -> QExpansion {
    eisenstein(2, n).unwrap()
}

pub fn e4(n: usize) -> QExpansion {
    eisenstein(4, n).unwrap()
}

pub fn e6(n: usize) -> QExpansion {
    eisenstein(6, n).unwrap()
}

/// `∏_{n>=1} (1 - q^n)` by the pentagonal number theorem.
fn euler_product(n: usize) -> QSeries {
    let mut v = vec![Rational::zero(); n];
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = (kk * (3 * kk - 1) / 2) as usize;
            if e < n {
                v[e] = if kk % 2 == 0 { rint(1) } else { rint(-1) };
                any = true;
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    QSeries::from_rationals(v)
}

/// `Δ = q ∏ (1 - q^n)^24`, checked against `(E4^3 - E6^2)/1728`.
pub fn delta(n: usize) -> QExpansion {
    let series = cached(Generator::Delta, n, |n| {
        let eta = euler_product(n.saturating_sub(1)).pow(24).shift_up(1);
        let (a, b) = (e4(n).series, e6(n).series);
        let alt = (&a.pow(3) - &b.pow(2)).scale(&rat(1, 1728));
        assert!(eta.agrees_with(&alt), "eta product disagrees with (E4^3 - E6^2)/1728");
        eta
    });
    QExpansion::new(series, 12, 0)
}

/// `1/j = Δ / E4^3 = q - 744q^2 + 356652q^3 + ...`.
pub fn j_inverse(n: usize) -> QSeries {
    cached(Generator::JInverse, n, |n| {
        let d = delta(n).series;
        d.try_div(&e4(n).series.pow(3)).unwrap()
    })
}

/// `D = q d/dq`.
pub fn d_operator(f: &QExpansion) -> QExpansion {
    QExpansion::new(f.series.theta_euler(), f.weight + 2, f.depth + 1)
}

/// `D^k f`.
pub fn d_power(f: &QExpansion, k: u32) -> QExpansion {
    (0..k).fold(f.clone(), |g, _| d_operator(&g))
}

/// Serre derivative `∂_k f = D f - (k/12) E2 f`.
pub fn serre_derivative(f: &QExpansion, k: i64) -> QExpansion {
    let n = f.trunc();
    let e2f = &e2(n).series * &f.series;
    let s = &f.series.theta_euler() - &e2f.scale(&rat(k, 12));
    QExpansion::new(s, f.weight + 2, f.depth + 1)
}

/// Iterated Serre derivative `∂_{k+2(j-1)} ∘ ... ∘ ∂_k`.
pub fn serre_power(f: &QExpansion, k: i64, j: u32) -> QExpansion {
    (0..j).fold(f.clone(), |g, i| serre_derivative(&g, k + 2 * i as i64))
}

/// Rankin-Cohen bracket
/// `[f,g]_n^{(k,l)} = Σ (-1)^i C(n+k-1, n-i) C(n+l-1, i) D^i f D^{n-i} g`.
pub fn rankin_cohen(f: &QExpansion, g: &QExpansion, n: u32, k: i64, l: i64) -> QExpansion {
    let len = f.trunc().min(g.trunc());
    let ni = n as i64;
    let mut df = vec![f.series.truncate(len)];
    let mut dg = vec![g.series.truncate(len)];
    for _ in 0..n {
        df.push(df.last().unwrap().theta_euler());
        dg.push(dg.last().unwrap().theta_euler());
    }
    let mut acc = QSeries::zero(&Q, len);
    for i in 0..=ni {
        let c = binomial_signed(ni + k - 1, ni - i) * binomial_signed(ni + l - 1, i);
        if c.is_zero() {
            continue;
        }
        let c = Rational::from_integer(if i % 2 == 0 { c } else { -c });
        let term = &df[i as usize] * &dg[(ni - i) as usize];
        acc = &acc + &term.scale(&c);
    }
    QExpansion::new(acc, f.weight + g.weight + 2 * ni, f.depth + g.depth + n)
}

/// `θ_k^{(r)} f = D^{r+1} f - ((k+r)/12) [E2, f]_r^{(2,k)}`.
pub fn theta_r(f: &QExpansion, k: i64, r: u32) -> QExpansion {
    let n = f.trunc();
    let top = d_power(f, r + 1);
    let br = rankin_cohen(&e2(n), f, r, 2, k);
    let s = &top.series - &br.series.scale(&rat(k + r as i64, 12));
    QExpansion::new(s, f.weight + 2 * (r as i64 + 1), f.depth + 1)
}

/// `L_w = ∂_{w+1} ∘ ∂_{w-1} - ((w^2 - 1)/144) E4`.
pub fn l_operator(f: &QExpansion, w: i64) -> QExpansion {
    let n = f.trunc();
    let dd = serre_power(f, w - 1, 2);
    let e4f = &e4(n).series * &f.series;
    QExpansion::new(
        &dd.series - &e4f.scale(&rat(w * w - 1, 144)),
        f.weight + 4,
        f.depth + 2,
    )
}

/// `K_w^up = E4 ∂_{w-1} - ((w+1)/12) E6`.
pub fn k_up(f: &QExpansion, w: i64) -> QExpansion {
    k_generic(f, w - 1, rat(w + 1, 12))
}

/// Adjoint `E4 ∂_{w+3} - ((w+9)/12) E6`, so that `L_{w+6} K_w^up = K̂_w L_w`.
pub fn k_up_adjoint(f: &QExpansion, w: i64) -> QExpansion {
    k_generic(f, w + 3, rat(w + 9, 12))
}

fn k_generic(f: &QExpansion, serre_weight: i64, c: Rational) -> QExpansion {
    let n = f.trunc();
    let d = serre_derivative(f, serre_weight);
    let a = &e4(n).series * &d.series;
    let b = &e6(n).series * &f.series;
    QExpansion::new(&a - &b.scale(&c), f.weight + 6, f.depth + 1)
}

/// Exponents `(ℓ, m, n)` of `E2^ℓ E4^m E6^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMMonomial {
    pub l: u32,
    pub m: u32,
    pub n: u32,
}

impl QMMonomial {
    pub fn weight(&self) -> i64 {
        2 * self.l as i64 + 4 * self.m as i64 + 6 * self.n as i64
    }
}

/// Dimension of the space of modular forms of weight `k` on SL2(Z).
pub fn dim_modular(k: i64) -> usize {
    if k < 0 || k % 2 != 0 || k == 2 {
        0
    } else if k % 12 == 2 {
        (k / 12) as usize
    } else {
        (k / 12) as usize + 1
    }
}

/// `dim QM_w^(r) = Σ_{ℓ<=r} dim M_{w-2ℓ}`.
pub fn dim_qm(w: i64, r: u32) -> usize {
    (0..=r as i64).map(|l| dim_modular(w - 2 * l)).sum()
}

/// All monomials of weight `w` with `E2`-exponent at most `r`, ordered by
/// `ℓ` and then by `m` descending.
pub fn qm_monomial_basis(w: i64, r: u32) -> Vec<QMMonomial> {
    let mut out = Vec::new();
    if w < 0 || w % 2 != 0 {
        return out;
    }
    for l in 0..=r {
        let rest = w - 2 * l as i64;
        if rest < 0 {
            break;
        }
        let mut m = rest / 4;
        while m >= 0 {
            let left = rest - 4 * m;
            if left % 6 == 0 {
                out.push(QMMonomial {
                    l,
                    m: m as u32,
                    n: (left / 6) as u32,
                });
            }
            m -= 1;
        }
    }
    out
}

/// Caches powers of `E2`, `E4`, `E6` at a fixed truncation.
pub struct MonomialTable {
    n: usize,
    powers: [Vec<QSeries>; 3],
}

impl MonomialTable {
    pub fn new(n: usize) -> Self {
        let one = QSeries::one(&Q, n);
        MonomialTable {
            n,
            powers: [vec![one.clone()], vec![one.clone()], vec![one]],
        }
    }

    fn power(&mut self, which: usize, e: u32) -> QSeries {
        let base = match which {
            0 => e2(self.n).series,
            1 => e4(self.n).series,
            _ => e6(self.n).series,
        };
        let v = &mut self.powers[which];
        while v.len() <= e as usize {
            let next = v.last().unwrap() * &base;
            v.push(next);
        }
        v[e as usize].clone()
    }

    pub fn expansion(&mut self, mono: &QMMonomial) -> QExpansion {
        let a = self.power(0, mono.l);
        let b = self.power(1, mono.m);
        let c = self.power(2, mono.n);
        QExpansion::new(&(&a * &b) * &c, mono.weight(), mono.l)
    }
}

/// q-expansion of a single monomial.
pub fn monomial_expansion(mono: &QMMonomial, n: usize) -> QExpansion {
    MonomialTable::new(n).expansion(mono)
}
