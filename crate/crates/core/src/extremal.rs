//! Normalized extremal quasimodular forms.
//!
//! Depth 1 has three independent constructions (differential recursion,
//! hypergeometric closed form, generic elimination) which the tests play off
//! against each other. Higher depths go through generic elimination, with
//! the depth-2 hypergeometric forms as a cross-check.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergeom::{p_series, q_series, r_series, r_series_shifted, u_series};
use crate::linalg::{solve_exact_linear, Solution};
use crate::numeric::{rat, Rational};
use crate::qform::{
    delta, dim_qm, e2, e4, e6, j_inverse, k_up, qm_monomial_basis, serre_derivative,
    MonomialTable, QExpansion, QMMonomial,
};
use crate::ring::Q;
use crate::QSeries;

/// A normalized extremal form `G_w^(r) = q^{m-1}(1 + O(q))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub w: i64,
    pub r: u32,
    pub q_expansion: QExpansion,
    /// Expansion in `t = 1/j`, when the construction produced it.
    pub t_expansion: Option<QSeries>,
    pub vanishing_order: usize,
}

impl ExtremalRecord {
    fn from_q(w: i64, r: u32, series: QSeries, t_expansion: Option<QSeries>) -> Self {
        let vanishing_order = series.valuation().unwrap_or(series.trunc());
        ExtremalRecord {
            w,
            r,
            q_expansion: QExpansion::new(series, w, r),
            t_expansion,
            vanishing_order,
        }
    }

    pub fn series(&self) -> &QSeries {
        &self.q_expansion.series
    }

    /// The expansion in `t = 1/j`, computed from the q-side when needed.
    pub fn t_series(&self) -> Result<QSeries> {
        match &self.t_expansion {
            Some(t) => Ok(t.clone()),
            None => q_to_t(self.series()),
        }
    }
}

/// Re-expands a q-series in `t = 1/j` (`q` as a series in `t` is the
/// reversion of `j^{-1}(q)`).
pub fn q_to_t(f: &QSeries) -> Result<QSeries> {
    let q_of_t = j_inverse(f.trunc()).revert()?;
    f.compose(&q_of_t)
}

/// Substitutes `t = j^{-1}(q)`.
pub fn t_to_q(f: &QSeries) -> Result<QSeries> {
    f.compose(&j_inverse(f.trunc()))
}

fn check_depth1_weight(w: i64) -> Result<()> {
    if w % 2 != 0 || w < 0 {
        return Err(Error::OddWeight(w));
    }
    if w < 2 {
        return Err(Error::BadIndex(w));
    }
    if w == 4 {
        return Err(Error::WeightFour);
    }
    Ok(())
}

// Longest tower computed so far. Entries are exact, so a tower built at a
// larger truncation serves any shorter request.
fn tower_cache() -> &'static Mutex<(usize, Vec<QSeries>)> {
    static CACHE: OnceLock<Mutex<(usize, Vec<QSeries>)>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new((0, Vec::new())))
}

/// `G_0^*, G_2^*, ..., G_{w_max}^*` (index `w/2`) to `O(q^n)` by
///
/// * `G_{w+6} = (w+6) / (72(w+1)(w+5)) K_w^up G_w`,
/// * `G_{w+2} = 12/(w+1) ∂_{w-1} G_w`,
/// * `G_{w+4} = E4 G_w`,
///
/// for `w ≡ 0 (mod 6)`. The slot for weight 4 holds `E4`, which is not
/// extremal of depth 1.
pub fn depth1_tower(w_max: i64, n: usize) -> Vec<QSeries> {
    let len = (w_max.max(0) / 2 + 1) as usize;
    {
        let cache = tower_cache().lock().unwrap();
        if cache.0 >= n && cache.1.len() >= len {
            return cache.1[..len].iter().map(|s| s.truncate(n)).collect();
        }
    }
    let mut out: Vec<QSeries> = Vec::with_capacity(len);
    for i in 0..len {
        let w = 2 * i as i64;
        let g = if w == 0 {
            QSeries::one(&Q, n)
        } else {
            match w % 6 {
                0 => {
                    let b = w - 6;
                    let f = QExpansion::new(out[(b / 2) as usize].clone(), b, 1);
                    let c = rat(b + 6, 72 * (b + 1) * (b + 5));
                    k_up(&f, b).series.scale(&c)
                }
                2 => {
                    let b = w - 2;
                    let f = QExpansion::new(out[(b / 2) as usize].clone(), b, 1);
                    serre_derivative(&f, b - 1).series.scale(&rat(12, b + 1))
                }
                _ => &e4(n).series * &out[((w - 4) / 2) as usize],
            }
        };
        out.push(g);
    }
    let mut cache = tower_cache().lock().unwrap();
    if n >= cache.0 && len >= cache.1.len() {
        *cache = (n, out.clone());
    }
    out
}

/// `G_w^(1)` from the differential recursion.
pub fn extremal_depth1_recursive(w: i64, n: usize) -> Result<ExtremalRecord> {
    check_depth1_weight(w)?;
    let g = depth1_tower(w, n).pop().unwrap();
    Ok(ExtremalRecord::from_q(w, 1, g, None))
}

/// `G_w^(1)` as a series in `t = 1/j`:
/// `t^k U^{3k-1} P_k`, `t^k U^{3k} Q_k`, `t^k U^{3k+1} P_k` for
/// `w = 6k, 6k+2, 6k+4`.
pub fn depth1_t_series(w: i64, n: usize) -> Result<QSeries> {
    check_depth1_weight(w)?;
    let k = w / 6;
    let (u_power, main) = match w % 6 {
        0 => (3 * k - 1, p_series(k as u32, n)),
        2 => (3 * k, q_series(k as u32, n)),
        _ => (3 * k + 1, p_series(k as u32, n)),
    };
    let body = &u_series(n).pow_signed(u_power)? * &main;
    Ok(body.shift_up(k as usize).truncate(n))
}

/// `G_w^(1)` from its hypergeometric closed form, converted to `q`.
pub fn extremal_depth1_hypergeometric(w: i64, n: usize) -> Result<ExtremalRecord> {
    let t = depth1_t_series(w, n)?;
    let q = t_to_q(&t)?;
    Ok(ExtremalRecord::from_q(w, 1, q, Some(t)))
}

/// Result of generic elimination: the form and its coordinates in the
/// monomial basis `E2^ℓ E4^m E6^n`.
#[derive(Debug, Clone)]
pub struct GenericExtremal {
    pub record: ExtremalRecord,
    pub basis: Vec<QMMonomial>,
    pub coefficients: Vec<Rational>,
}

/// `G_w^(r)` by exact elimination over the monomial basis of `QM_w^(r)`.
///
/// With `m = dim QM_w^(r)`, the coefficients of `q^0..q^{m-2}` are forced to
/// vanish and that of `q^{m-1}` to be 1. A singular system means the
/// normalized form is not determined; this is reported, not guessed.
pub fn extremal_generic_full(w: i64, r: u32, n: usize) -> Result<GenericExtremal> {
    if w % 2 != 0 || w < 0 {
        return Err(Error::OddWeight(w));
    }
    let basis = qm_monomial_basis(w, r);
    let m = basis.len();
    if m == 0 {
        return Err(Error::EmptySpace { weight: w, depth: r });
    }
    let nw = n.max(m);
    let mut table = MonomialTable::new(nw);
    let exps: Vec<QSeries> = basis.iter().map(|b| table.expansion(b).series).collect();
    let matrix: Vec<Vec<Rational>> = (0..m)
        .map(|i| exps.iter().map(|e| e.coeff(i).clone()).collect())
        .collect();
    let mut rhs = vec![Rational::zero(); m];
    rhs[m - 1] = Rational::one();
    let non_unique = Error::NonUnique { weight: w, depth: r };
    let sol = solve_exact_linear(&matrix, &rhs).map_err(|_| non_unique.clone())?;
    let coefficients = match sol.solution {
        Solution::Unique(x) => x,
        _ => return Err(non_unique),
    };
    let mut acc = QSeries::zero(&Q, nw);
    for (c, e) in coefficients.iter().zip(&exps) {
        if !c.is_zero() {
            acc = &acc + &e.scale(c);
        }
    }
    let record = ExtremalRecord::from_q(w, r, acc.truncate(n), None);
    Ok(GenericExtremal {
        record,
        basis,
        coefficients,
    })
}

/// [`extremal_generic_full`] without the coordinates.
pub fn extremal_generic(w: i64, r: u32, n: usize) -> Result<ExtremalRecord> {
    Ok(extremal_generic_full(w, r, n)?.record)
}

/// `G_w^(2)` in `t = 1/j`:
/// `t^k U^{2k-1} R_k` for `w = 4k` and
/// `t^k U^{2k} (1-1728t)^{1/2} 3F2((4k+3)/6, (4k+5)/6, (4k+7)/6; k+1, k+1; 1728t)`
/// for `w = 4k+2`.
pub fn depth2_t_series(w: i64, n: usize) -> Result<QSeries> {
    if w % 2 != 0 || w < 2 {
        return Err(Error::OddWeight(w));
    }
    let k = w / 4;
    let u = u_series(n);
    let body = if w % 4 == 0 {
        &u.pow_signed(2 * k - 1)? * &r_series(k as u32, n)
    } else {
        let root = QSeries::ints(&[1, -1728], n).sqrt_one()?;
        &(&u.pow(2 * k as u32) * &root) * &r_series_shifted(k as u32, n)
    };
    Ok(body.shift_up(k as usize).truncate(n))
}

/// `G_w^(2)` from its hypergeometric closed form, converted to `q`.
pub fn depth2_hypergeometric(w: i64, n: usize) -> Result<ExtremalRecord> {
    let t = depth2_t_series(w, n)?;
    let q = t_to_q(&t)?;
    Ok(ExtremalRecord::from_q(w, 2, q, Some(t)))
}

/// Outcome for one weight of an integrality scan. Verdicts are evidence
/// about the first `n` coefficients only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanVerdict {
    Integral,
    /// `first_index` is the exponent of the first non-integral coefficient.
    NonIntegral { first_index: usize, primes: Vec<u64> },
    /// `QM_w^(r) = QM_w^(r-1)`: the extremal form has lower depth.
    Skipped,
    /// The normalized form could not be determined.
    Undetermined(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub w: i64,
    pub verdict: ScanVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub depth: u32,
    pub n: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn integral_weights(&self) -> Vec<i64> {
        self.rows
            .iter()
            .filter(|r| r.verdict == ScanVerdict::Integral)
            .map(|r| r.w)
            .collect()
    }

    /// Tag for what the verdicts establish.
    pub fn evidence(&self) -> String {
        format!("first-{}-coefficients", self.n)
    }
}

/// Prime factors of `n > 0` by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while !n.is_one() {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            out.push(u64::try_from(&n).expect("cofactor fits in u64"));
            break;
        }
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    out
}

/// Integrality verdict for the coefficients of `f`.
pub fn integrality_verdict(f: &QSeries) -> ScanVerdict {
    let mut first = None;
    let mut primes: Vec<u64> = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if !c.is_integer() {
            first.get_or_insert(i);
            for p in prime_factors(c.denom()) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    primes.sort_unstable();
    match first {
        None => ScanVerdict::Integral,
        Some(first_index) => ScanVerdict::NonIntegral { first_index, primes },
    }
}

/// Checks the first `n` coefficients of `G_w^(r)` for every even
/// `2 <= w <= w_max`, skipping weights where the depth-`r` space adds
/// nothing to depth `r-1`.
pub fn integrality_scan(w_max: i64, r: u32, n: usize) -> ScanReport {
    let tower = if r == 1 { depth1_tower(w_max, n) } else { Vec::new() };
    let mut rows = Vec::new();
    for w in (2..=w_max).step_by(2) {
        let verdict = if r == 0 || dim_qm(w, r) == dim_qm(w, r - 1) {
            ScanVerdict::Skipped
        } else if r == 1 {
            integrality_verdict(&tower[(w / 2) as usize])
        } else {
            match extremal_generic(w, r, n) {
                Ok(rec) => integrality_verdict(rec.series()),
                Err(e) => ScanVerdict::Undetermined(e.to_string()),
            }
        };
        rows.push(ScanRow { w, verdict });
    }
    ScanReport { depth: r, n, rows }
}

/// One element `E4^e G_{w'}^(1)` of the depth-1 basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub e4_power: u32,
    pub g_weight: i64,
    pub series: QSeries,
}

impl BasisElement {
    pub fn label(&self) -> String {
        let g = if self.g_weight == 0 {
            String::new()
        } else {
            format!("G{}", self.g_weight)
        };
        match (self.e4_power, g.is_empty()) {
            (0, true) => "1".into(),
            (0, false) => g,
            (1, true) => "E4".into(),
            (1, false) => format!("E4*{g}"),
            (e, true) => format!("E4^{e}"),
            (e, false) => format!("E4^{e}*{g}"),
        }
    }
}

/// The depth-1 basis of `QM_k^(1)` by E4-multiples of extremal forms, and the
/// matrix expressing the standard basis in it.
#[derive(Debug, Clone, PartialEq)]
pub struct Depth1Basis {
    pub k: i64,
    /// Ordered by leading exponent `0, 1, ..., m-1`.
    pub elements: Vec<BasisElement>,
    /// Labels of the standard basis: `E4^a E6^b Δ^c` spanning `M_k`, then
    /// `E2` times the same for `M_{k-2}`.
    pub standard_labels: Vec<String>,
    /// Row `i` gives standard element `i` in the extremal basis.
    pub matrix: Vec<Vec<Rational>>,
}

/// `E4^a E6^b Δ^c` spanning `M_k`, ordered by the power of `Δ`.
pub fn modular_basis(k: i64, n: usize) -> Vec<(String, QSeries)> {
    let mut out = Vec::new();
    if k < 0 || k % 2 != 0 || k == 2 {
        return out;
    }
    let (a0, b) = match k % 12 {
        0 => (0, 0),
        2 => (2, 1),
        4 => (1, 0),
        6 => (0, 1),
        8 => (2, 0),
        _ => (1, 1),
    };
    let top = (k - 4 * a0 - 6 * b) / 12;
    if top < 0 {
        return out;
    }
    let (e4s, e6s, ds) = (e4(n).series, e6(n).series, delta(n).series);
    for c in 0..=top {
        let a = a0 + 3 * (top - c);
        let s = &(&e4s.pow(a as u32) * &e6s.pow(b as u32)) * &ds.pow(c as u32);
        out.push((monomial_label(a, b, c), s));
    }
    out
}

fn monomial_label(a: i64, b: i64, c: i64) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("E4", a), ("E6", b), ("Delta", c)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The depth-1 basis `{E4^e G_{k-4e}^(1)}` with one element per leading
/// exponent, preferring `G` of weight not `≡ 4 (mod 6)` (those are
/// themselves `E4` multiples).
pub fn depth1_basis(k: i64) -> Result<Depth1Basis> {
    if k % 2 != 0 || k < 2 {
        return Err(Error::OddWeight(k));
    }
    let m = dim_qm(k, 1);
    let n = m + 8;
    let tower = depth1_tower(k, n);
    let mut slots: Vec<Option<BasisElement>> = vec![None; m];
    let mut e = 0u32;
    while k - 4 * e as i64 >= 0 {
        let wp = k - 4 * e as i64;
        e += 1;
        if wp == 4 {
            continue;
        }
        let g = &tower[(wp / 2) as usize];
        let nu = g.valuation().expect("extremal forms are nonzero");
        if nu >= m {
            return Err(Error::Inconsistent);
        }
        let prefer = wp % 6 != 4;
        let take = match &slots[nu] {
            None => true,
            Some(old) => prefer && old.g_weight % 6 == 4,
        };
        if take {
            let series = &e4(n).series.pow(e - 1) * g;
            slots[nu] = Some(BasisElement {
                e4_power: e - 1,
                g_weight: wp,
                series,
            });
        }
    }
    let elements: Vec<BasisElement> = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Inconsistent)?;
    let mut standard = modular_basis(k, n);
    let e2s = e2(n).series;
    for (label, s) in modular_basis(k - 2, n) {
        standard.push((format!("E2*{label}"), &e2s * &s));
    }
    // Triangular: solve coefficient by coefficient from the lowest exponent.
    let mut matrix = Vec::new();
    for (_, s) in &standard {
        let mut rest = s.clone();
        let mut row = vec![Rational::zero(); m];
        for (i, el) in elements.iter().enumerate() {
            let c = rest.coeff(i).clone();
            if !c.is_zero() {
                rest = &rest - &el.series.scale(&c);
                row[i] = c;
            }
        }
        if !rest.is_zero() {
            return Err(Error::Inconsistent);
        }
        matrix.push(row);
    }
    Ok(Depth1Basis {
        k,
        elements,
        standard_labels: standard.into_iter().map(|(l, _)| l).collect(),
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_depth1_forms() {
        let g2 = extremal_depth1_recursive(2, 8).unwrap();
        assert_eq!(g2.series(), &e2(8).series);
        let g12 = extremal_depth1_recursive(12, 6).unwrap();
        assert_eq!(g12.series(), &QSeries::ints(&[0, 0, 1, 56, 1002, 9296], 6));
        assert_eq!(g12.vanishing_order, 2);
        let g26 = extremal_depth1_recursive(26, 7).unwrap();
        assert_eq!(*g26.series().coeff(5), rat(1176, 5));
        assert_eq!(extremal_depth1_recursive(4, 5), Err(Error::WeightFour));
        assert_eq!(extremal_depth1_recursive(7, 5), Err(Error::OddWeight(7)));
    }

    #[test]
    fn constructions_agree_small() {
        for w in [2, 6, 8, 10, 12, 14, 18, 26] {
            let a = extremal_depth1_recursive(w, 15).unwrap();
            let b = extremal_depth1_hypergeometric(w, 15).unwrap();
            let c = extremal_generic(w, 1, 15).unwrap();
            assert_eq!(a.series(), b.series(), "w={w}");
            assert_eq!(a.series(), c.series(), "w={w}");
        }
    }

    #[test]
    fn depth2_forms() {
        let g4 = depth2_hypergeometric(4, 9).unwrap();
        assert_eq!(g4.series(), &QSeries::ints(&[0, 1, 6, 12, 28, 30, 72, 56, 120], 9));
        assert_eq!(depth2_hypergeometric(2, 10).unwrap().series(), &e2(10).series);
        let g8 = extremal_generic(8, 2, 12).unwrap();
        assert_eq!(depth2_hypergeometric(8, 12).unwrap().series(), g8.series());
    }

    #[test]
    fn scan_small() {
        let r = integrality_scan(8, 2, 30);
        assert_eq!(r.integral_weights(), vec![4, 8]);
        let r = integrality_scan(8, 3, 30);
        assert_eq!(r.integral_weights(), vec![6]);
    }

    #[test]
    fn prime_factor_lists() {
        assert_eq!(prime_factors(&BigInt::from(332640)), vec![2, 3, 5, 7, 11]);
        assert_eq!(prime_factors(&BigInt::from(1)), Vec::<u64>::new());
        assert_eq!(prime_factors(&BigInt::from(97 * 89)), vec![89, 97]);
    }

    #[test]
    fn weight_two_basis() {
        let b = depth1_basis(2).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert_eq!(b.elements[0].label(), "G2");
    }
}
