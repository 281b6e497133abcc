//! Exact big-integer engine for the counterexample built on the constant
//! c = sum 10^{-k!}: its convergents, the approximation-gap bound, transform
//! magnitude bounds at the test points z = 2 pi q_K, and a refutation routine
//! that defeats any proposed lower-bound constants (C, N, M).
//!
//! Every inequality that feeds a verdict is decided in exact rational
//! arithmetic. pi never appears as a float: each occurrence is replaced by a
//! rational over-approximation on whichever side of the inequality is
//! adversarial, so the verdicts are unconditional.

use crate::corona::CoronaParams;
use crate::error::{Error, Result};
use crate::exact::pow10;
use rug::{Integer, Rational};
use serde_json::json;

/// Largest admitted K. q_6 = 10^720 keeps big-integer sizes in kilobytes;
/// going further is pointless because K = 4 already defeats unit constants.
pub const K_CAP: u32 = 6;

/// 333/106 < pi < 355/113, both classical convergents.
pub fn pi_upper() -> Rational {
    Rational::from((355, 113))
}

pub fn pi_lower() -> Rational {
    Rational::from((333, 106))
}

fn factorial(k: u32) -> u64 {
    (1..=k as u64).product::<u64>().max(1)
}

fn check_cap(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("K must be at least 1".into()));
    }
    if k > K_CAP {
        return Err(Error::CapExceeded {
            index: k as u64,
            cap: K_CAP as u64,
            estimate: format!("q_{k} = 10^{} digits of storage", factorial(k)),
        });
    }
    Ok(())
}

/// K-th convergent (p_K, q_K): q_K = 10^{K!} and p_K = q_K * sum_{k<=K} 10^{-k!}.
pub fn convergents(k: u32) -> Result<(Integer, Integer)> {
    check_cap(k)?;
    let kf = factorial(k);
    let q = pow10(kf);
    let mut p = Integer::new();
    for j in 1..=k {
        p += pow10(kf - factorial(j));
    }
    Ok((p, q))
}

/// Partial sum of the defining series with `terms` terms: sum_{k<=terms} 10^{-k!}.
/// Used to cross-check the exact bounds against the floating transform path.
pub fn truncated_constant(terms: u32) -> Result<Rational> {
    if terms == 0 || terms > K_CAP + 3 {
        return Err(Error::InvalidInput(format!(
            "truncation length {terms} out of range"
        )));
    }
    let mut acc = Rational::new();
    for j in 1..=terms {
        acc += Rational::from((Integer::from(1), pow10(factorial(j))));
    }
    Ok(acc)
}

/// Bounds on the gap c - p_K/q_K (which is exactly the series tail past K).
#[derive(Debug, Clone)]
pub struct GapBound {
    /// partial tail plus a rigorous geometric remainder, one exact rational
    pub upper: Rational,
    /// strict positive lower bound: the first omitted term
    pub lower: Rational,
    /// the coarser classical bound q_K^{-K}
    pub coarse: Rational,
}

/// Upper/lower bounds on the tail sum_{k>K} 10^{-k!}.
///
/// The tail is summed exactly for `tail_terms` terms; everything past that is
/// dominated by the geometric series 10^{-E}(1 + 1/10 + ...) = (10/9) 10^{-E}
/// starting at the next factorial exponent E. The result is checked against
/// the classical bound q_K^{-K} = 10^{-K * K!}, which it never exceeds.
pub fn gap_bound(k: u32, tail_terms: u32) -> Result<GapBound> {
    check_cap(k)?;
    if tail_terms == 0 {
        return Err(Error::InvalidInput("tail_terms must be at least 1".into()));
    }
    let one = |e: u64| Rational::from((Integer::from(1), pow10(e)));
    let mut partial = Rational::new();
    for j in (k + 1)..=(k + tail_terms) {
        partial += one(factorial(j));
    }
    let remainder =
        Rational::from((10, 9)) * one(factorial(k + tail_terms + 1));
    let upper = partial + remainder;
    let lower = one(factorial(k + 1));
    let kf = factorial(k);
    let coarse = Rational::from((Integer::from(1), pow10(kf * k as u64)));
    debug_assert!(lower > 0);
    if upper > coarse {
        return Err(Error::InvalidInput(format!(
            "internal: tail bound exceeds q_{k}^-{k}"
        )));
    }
    Ok(GapBound {
        upper,
        lower,
        coarse,
    })
}

/// Exact rational bounds on the transform magnitudes at z = 2 pi q_K.
#[derive(Debug, Clone)]
pub struct TransformBound {
    /// upper bound on pi |c q_K - p_K|
    pub sin_arg_upper: Rational,
    /// upper bound on |1 - e^{-i c 2 pi q_K}| = 2 |sin(pi(c q_K - p_K))|
    pub f1_upper: Rational,
    /// the second generator's transform vanishes identically at the test
    /// point: e^{-i 2 pi q_K} = 1 because q_K is an integer
    pub f2_is_exactly_zero: bool,
}

/// |1 - e^{-i theta}| = 2 |sin(theta/2)| and |sin t| <= |t| give
/// |f1(2 pi q_K)| <= 2 pi q_K (c - p_K/q_K), bounded with pi rounded up.
pub fn transform_magnitude_at(k: u32, tail_terms: u32) -> Result<TransformBound> {
    let gap = gap_bound(k, tail_terms)?;
    let (_, q) = convergents(k)?;
    let sin_arg_upper = pi_upper() * Rational::from(&q) * &gap.upper;
    let f1_upper = Rational::from(2) * &sin_arg_upper;
    Ok(TransformBound {
        sin_arg_upper,
        f1_upper,
        f2_is_exactly_zero: true,
    })
}

/// Everything known about one test point, ready for serialization.
#[derive(Debug, Clone)]
pub struct LiouvilleRow {
    pub k: u32,
    pub p_k: Integer,
    pub q_k: Integer,
    pub gap_upper: Rational,
    pub gap_lower: Rational,
    pub sin_arg_upper: Rational,
    pub transform_upper: Rational,
    /// rational interval enclosing C (1 + 4 pi^2 q_K^2)^{-N} (N rounded up to
    /// an integer on the exponent, which only shrinks the bound)
    pub corona_bound_lo: Rational,
    pub corona_bound_hi: Rational,
    /// transform_upper / corona_bound_lo: the corona inequality is rigorously
    /// violated at z = 2 pi q_K whenever this is < 1
    pub ratio_upper: Rational,
}

fn ceil_to_u32(n: &Rational) -> Result<u32> {
    let ceil = Rational::from(n).ceil();
    let num = ceil.numer();
    num.to_u32()
        .ok_or_else(|| Error::InvalidInput(format!("exponent N = {n} is out of range")))
}

fn corona_bound_interval(
    params: &CoronaParams,
    q: &Integer,
) -> Result<(Rational, Rational)> {
    let n_up = ceil_to_u32(&params.exponent_n)?;
    let q_sq = Rational::from(q * q);
    // lower end: overestimate pi and the exponent
    let base_hi = Rational::from(1) + Rational::from(4) * pi_upper().square() * &q_sq;
    let lo = Rational::from(&params.const_c) / pow_rational(&base_hi, n_up);
    // upper end: underestimate pi, floor the exponent
    let n_dn = {
        let fl = Rational::from(&params.exponent_n).floor();
        fl.numer().to_u32().unwrap_or(0)
    };
    let base_lo = Rational::from(1) + Rational::from(4) * pi_lower().square() * &q_sq;
    let hi = Rational::from(&params.const_c) / pow_rational(&base_lo, n_dn);
    Ok((lo, hi))
}

fn pow_rational(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::from(1);
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b.square_mut();
        e >>= 1;
    }
    acc
}

/// Build the row for one K under the given constants.
pub fn row(k: u32, params: &CoronaParams, tail_terms: u32) -> Result<LiouvilleRow> {
    let (p, q) = convergents(k)?;
    let gap = gap_bound(k, tail_terms)?;
    let tb = transform_magnitude_at(k, tail_terms)?;
    let (lo, hi) = corona_bound_interval(params, &q)?;
    // the ratio column follows the classical chain through gap <= q_K^{-K},
    // i.e. 2 pi q_K^{1-K} (1+4 pi^2 q_K^2)^{ceil N} / C, so it agrees with
    // the refutation decision (the tighter tail bound in transform_upper
    // would make even smaller K look sufficient)
    let coarse_transform = Rational::from(2) * pi_upper() * Rational::from(&q) * &gap.coarse;
    let ratio_upper = coarse_transform / &lo;
    Ok(LiouvilleRow {
        k,
        p_k: p,
        q_k: q,
        gap_upper: gap.upper,
        gap_lower: gap.lower,
        sin_arg_upper: tb.sin_arg_upper,
        transform_upper: tb.f1_upper,
        corona_bound_lo: lo,
        corona_bound_hi: hi,
        ratio_upper,
    })
}

/// Rows for K = 1..=k_max.
pub fn report(k_max: u32, params: &CoronaParams, tail_terms: u32) -> Result<Vec<LiouvilleRow>> {
    check_cap(k_max)?;
    (1..=k_max).map(|k| row(k, params, tail_terms)).collect()
}

/// Decimal rendering of a rational with a few significant digits, for humans;
/// the exact value travels separately.
fn approx_decimal(q: &Rational) -> String {
    let f = rug::Float::with_val(64, q);
    format!("{:.6e}", f.to_f64())
}

impl LiouvilleRow {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "K": self.k,
            "pK": self.p_k.to_string(),
            "qK": self.q_k.to_string(),
            "gapUpper": self.gap_upper.to_string(),
            "gapLower": self.gap_lower.to_string(),
            "sinArgUpper": self.sin_arg_upper.to_string(),
            "transformUpper": self.transform_upper.to_string(),
            "coronaBound": [self.corona_bound_lo.to_string(), self.corona_bound_hi.to_string()],
            "ratioUpper": self.ratio_upper.to_string(),
            "ratioUpperApprox": approx_decimal(&self.ratio_upper),
            "f2AtTestPoint": "0",
        })
    }

    pub fn csv_header() -> &'static [&'static str] {
        &[
            "K",
            "pK",
            "qK",
            "gapUpper",
            "gapLower",
            "sinArgUpper",
            "transformUpper",
            "coronaBoundLo",
            "coronaBoundHi",
            "ratioUpper",
            "ratioUpperApprox",
        ]
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.p_k.to_string(),
            self.q_k.to_string(),
            self.gap_upper.to_string(),
            self.gap_lower.to_string(),
            self.sin_arg_upper.to_string(),
            self.transform_upper.to_string(),
            self.corona_bound_lo.to_string(),
            self.corona_bound_hi.to_string(),
            self.ratio_upper.to_string(),
            approx_decimal(&self.ratio_upper),
        ]
    }
}

/// Outcome of a refutation: the witness index and the exact ratio bound.
#[derive(Debug, Clone)]
pub struct Refutation {
    pub k: u32,
    pub ratio_upper: Rational,
    /// the exact test point is 2 pi q_K; stored as q_K
    pub q_k: Integer,
}

/// Find the smallest K <= cap whose test point z = 2 pi q_K rigorously
/// violates the lower bound with the given constants, for the pair
/// (delta - delta_c, indicator of [0,1]) on the half line or the full line.
///
/// The test points are real, so e^{-M H(Im z)} = 1 for every cone and M drops
/// out. The decision is
///     2 pi q_K^{1-K} (1 + 4 pi^2 q_K^2)^{ceil N}  <  C / 2
/// computed entirely in rationals with pi rounded up on the left (the factor
/// 1/2 is a safety margin; any value < 1 already violates the bound).
pub fn refute_params(params: &CoronaParams) -> Result<Refutation> {
    let n_up = ceil_to_u32(&params.exponent_n)?;
    for k in 2..=K_CAP {
        let (_, q) = convergents(k)?;
        let q_rat = Rational::from(&q);
        let base = Rational::from(1) + Rational::from(4) * pi_upper().square() * Rational::from(&q * &q);
        // q_K^{1-K} with K >= 2, so the exponent is negative
        let q_pow = pow_rational(&q_rat, k - 1);
        let lhs = Rational::from(2) * pi_upper() * pow_rational(&base, n_up) / q_pow;
        let ratio = lhs / Rational::from(&params.const_c);
        if ratio < Rational::from((1, 2)) {
            return Ok(Refutation {
                k,
                ratio_upper: ratio,
                q_k: q,
            });
        }
    }
    Err(Error::CapExceeded {
        index: K_CAP as u64,
        cap: K_CAP as u64,
        estimate: format!(
            "roughly K = {} needed (K! grows so fast that K - 1 must exceed \
             the polynomial degree ceil(N) + 2 plus the deficit from C)",
            estimate_required_k(params)
        ),
    })
}

/// f64 log-space estimate of the K the refutation would need; only used in
/// diagnostics after the exact search fails within the cap.
fn estimate_required_k(params: &CoronaParams) -> u32 {
    let n_up = {
        let c = Rational::from(&params.exponent_n).ceil();
        c.numer().to_f64()
    };
    let log_c = params.const_c.to_f64().log10();
    let mut fact = 1.0f64;
    for k in 2..=170u32 {
        fact *= k as f64;
        // log10 of 2 pi q^{1-K} (1+4 pi^2 q^2)^{ceil N} with q = 10^{K!}
        let lhs = 0.7982 + fact * (1.0 - k as f64) + n_up * (1.5963 + 2.0 * fact);
        if lhs < log_c - 0.301 {
            return k;
        }
    }
    170
}
