//! Midpoint-radius arithmetic over MPFR floats.
//!
//! Every value carries an upper bound on the distance between its midpoint
//! and the exact quantity it represents. Midpoints are computed in
//! round-to-nearest at the working precision; radii are accumulated with
//! upward rounding at a fixed small precision, so every derived inequality
//! that separates two balls is rigorous.

use rug::float::{Constant, Round};
use rug::ops::AddAssignRound;
use rug::{Complex, Float, Rational};

/// Precision used for radius bookkeeping.
const RAD_PREC: u32 = 64;

/// Upper bound on the rounding error of a correctly rounded operation that
/// produced `mid` at its own precision. A couple of ulps, plus a sub-noise
/// floor so exact zeros of inexact operations are still covered.
fn ulp_bound(mid: &Float) -> Float {
    let prec = mid.prec();
    let mut u = Float::with_val_round(RAD_PREC, &*mid.as_abs(), Round::Up).0;
    u >>= prec;
    u <<= 2;
    u += tiny();
    u
}

fn ulp_bound_complex(mid: &Complex) -> Float {
    let mut u = ulp_bound(mid.real());
    u.add_assign_round(ulp_bound(mid.imag()), Round::Up);
    u
}

/// Noise floor far below anything a desk-scale computation can resolve.
fn tiny() -> Float {
    Float::with_val(RAD_PREC, 1) >> 20000
}

fn rad_add(a: &Float, b: &Float) -> Float {
    let mut out = a.clone();
    out.add_assign_round(b, Round::Up);
    out
}

fn rad_mul(a: &Float, b: &Float) -> Float {
    Float::with_val_round(RAD_PREC, a * b, Round::Up).0
}

/// Real number known to lie within `rad` of `mid`.
#[derive(Clone, Debug)]
pub struct RealBall {
    mid: Float,
    rad: Float,
}

impl RealBall {
    pub fn exact(mid: Float) -> Self {
        let rad = Float::new(RAD_PREC);
        RealBall { mid, rad }
    }

    pub fn with_radius(mid: Float, rad: Float) -> Self {
        RealBall { mid, rad }
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        RealBall::exact(Float::with_val(prec, x))
    }

    pub fn from_i64(x: i64, prec: u32) -> Self {
        RealBall::exact(Float::with_val(prec, x))
    }

    /// Rounded image of an exact rational; the rounding error is carried.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let mid = Float::with_val(prec, q);
        let rad = ulp_bound(&mid);
        RealBall { mid, rad }
    }

    pub fn zero(prec: u32) -> Self {
        RealBall::exact(Float::new(prec))
    }

    pub fn pi(prec: u32) -> Self {
        let mid = Float::with_val(prec, Constant::Pi);
        let rad = ulp_bound(&mid);
        RealBall { mid, rad }
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> &Float {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec()
    }

    pub fn is_finite(&self) -> bool {
        self.mid.is_finite() && self.rad.is_finite()
    }

    /// Upper bound of the enclosed interval.
    pub fn upper(&self) -> Float {
        let mut out = Float::with_val(self.prec(), &self.mid);
        out.add_assign_round(&self.rad, Round::Up);
        out
    }

    /// Lower bound of the enclosed interval.
    pub fn lower(&self) -> Float {
        let mut out = Float::with_val(self.prec(), &self.mid);
        out.add_assign_round(-self.rad.clone(), Round::Down);
        out
    }

    /// True only when every point of `self` is <= every point of `other`.
    pub fn definitely_le(&self, other: &RealBall) -> bool {
        self.upper() <= other.lower()
    }

    /// True only when every point of `self` is < every point of `other`.
    pub fn definitely_lt(&self, other: &RealBall) -> bool {
        self.upper() < other.lower()
    }

    pub fn add(&self, other: &RealBall) -> RealBall {
        let mid = Float::with_val(self.prec(), &self.mid + &other.mid);
        let rad = rad_add(&rad_add(&self.rad, &other.rad), &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn sub(&self, other: &RealBall) -> RealBall {
        let mid = Float::with_val(self.prec(), &self.mid - &other.mid);
        let rad = rad_add(&rad_add(&self.rad, &other.rad), &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn neg(&self) -> RealBall {
        RealBall {
            mid: -self.mid.clone(),
            rad: self.rad.clone(),
        }
    }

    pub fn abs(&self) -> RealBall {
        RealBall {
            mid: self.mid.clone().abs(),
            rad: self.rad.clone(),
        }
    }

    fn mid_abs_up(&self) -> Float {
        Float::with_val_round(RAD_PREC, &*self.mid.as_abs(), Round::Up).0
    }

    pub fn mul(&self, other: &RealBall) -> RealBall {
        let mid = Float::with_val(self.prec(), &self.mid * &other.mid);
        let mut rad = rad_mul(&self.mid_abs_up(), &other.rad);
        rad = rad_add(&rad, &rad_mul(&other.mid_abs_up(), &self.rad));
        rad = rad_add(&rad, &rad_mul(&self.rad, &other.rad));
        rad = rad_add(&rad, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn div(&self, other: &RealBall) -> RealBall {
        let denom_lo = Float::with_val_round(
            RAD_PREC,
            &*other.mid.as_abs(),
            Round::Down,
        )
        .0 - &other.rad;
        let mid = Float::with_val(self.prec(), &self.mid / &other.mid);
        if !(denom_lo > 0) {
            return RealBall {
                mid,
                rad: Float::with_val(RAD_PREC, rug::float::Special::Infinity),
            };
        }
        let mid_abs = Float::with_val_round(RAD_PREC, &*mid.as_abs(), Round::Up).0;
        let mut num = rad_add(&self.rad, &rad_mul(&mid_abs, &other.rad));
        num = Float::with_val_round(RAD_PREC, &num / &denom_lo, Round::Up).0;
        let rad = rad_add(&num, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn sqrt(&self) -> RealBall {
        let prec = self.prec();
        let lo = self.lower();
        let mid = Float::with_val(prec, self.mid.sqrt_ref());
        let rad = if lo > self.rad {
            // derivative bound 1/(2 sqrt(lo))
            let s = Float::with_val_round(RAD_PREC, lo.sqrt_ref(), Round::Down).0;
            let two_s = Float::with_val(RAD_PREC, &s * &Float::with_val(RAD_PREC, 2));
            Float::with_val_round(RAD_PREC, &self.rad / &two_s, Round::Up).0
        } else {
            // Hoelder: |sqrt x - sqrt y| <= sqrt |x - y| near zero
            let spread = rad_add(&self.rad, &self.rad);
            Float::with_val_round(RAD_PREC, spread.sqrt_ref(), Round::Up).0
        };
        let rad = rad_add(&rad, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn exp(&self) -> RealBall {
        let mid = Float::with_val(self.prec(), self.mid.exp_ref());
        // |e^x - e^m| <= e^m (e^r - 1) <= e^m r e^r
        let em = Float::with_val_round(RAD_PREC, self.mid.exp_ref(), Round::Up).0;
        let er = Float::with_val_round(RAD_PREC, self.rad.exp_ref(), Round::Up).0;
        let prop = rad_mul(&rad_mul(&em, &self.rad), &er);
        let rad = rad_add(&prop, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn ln(&self) -> RealBall {
        let lo = Float::with_val_round(RAD_PREC, &*self.lower().as_abs(), Round::Down).0;
        let mid = Float::with_val(self.prec(), self.mid.ln_ref());
        if !(self.lower() > 0) {
            return RealBall {
                mid,
                rad: Float::with_val(RAD_PREC, rug::float::Special::Infinity),
            };
        }
        let prop = Float::with_val_round(RAD_PREC, &self.rad / &lo, Round::Up).0;
        let rad = rad_add(&prop, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn sin(&self) -> RealBall {
        let mid = Float::with_val(self.prec(), self.mid.sin_ref());
        let rad = rad_add(&self.rad, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn cos(&self) -> RealBall {
        let mid = Float::with_val(self.prec(), self.mid.cos_ref());
        let rad = rad_add(&self.rad, &ulp_bound(&mid));
        RealBall { mid, rad }
    }

    pub fn powi(&self, e: u32) -> RealBall {
        let mut out = RealBall::exact(Float::with_val(self.prec(), 1));
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// max(self, 0) as a ball.
    pub fn max_zero(&self) -> RealBall {
        if self.lower() >= 0 {
            self.clone()
        } else if self.upper() <= 0 {
            RealBall::zero(self.prec())
        } else {
            // straddles zero: enclose [0, upper]
            let half_up = Float::with_val(self.prec(), self.upper() / 2u32);
            let rad = Float::with_val_round(RAD_PREC, &half_up, Round::Up).0 + tiny();
            RealBall { mid: half_up, rad }
        }
    }

    /// max of two balls (tight when they are separated).
    pub fn max(&self, other: &RealBall) -> RealBall {
        if self.lower() >= other.upper() {
            self.clone()
        } else if other.lower() >= self.upper() {
            other.clone()
        } else {
            let hi = if self.upper() > other.upper() {
                self.upper()
            } else {
                other.upper()
            };
            let lo = if self.lower() > other.lower() {
                self.lower()
            } else {
                other.lower()
            };
            let mid = Float::with_val(self.prec(), &hi + &lo) / 2u32;
            let spread = Float::with_val_round(RAD_PREC, &hi - &lo, Round::Up).0;
            let rad = rad_add(&(spread >> 1), &ulp_bound(&mid));
            RealBall { mid, rad }
        }
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid.to_f64()
    }
}

/// Complex number known to lie within `rad` (in modulus) of `mid`.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    mid: Complex,
    rad: Float,
}

impl ComplexBall {
    pub fn exact(mid: Complex) -> Self {
        ComplexBall {
            mid,
            rad: Float::new(RAD_PREC),
        }
    }

    pub fn with_radius(mid: Complex, rad: Float) -> Self {
        ComplexBall { mid, rad }
    }

    pub fn zero(prec: u32) -> Self {
        ComplexBall::exact(Complex::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        ComplexBall::exact(Complex::with_val(prec, (1, 0)))
    }

    /// Rounded image of an exact rational pair.
    pub fn from_rationals(re: &Rational, im: &Rational, prec: u32) -> Self {
        let mid = Complex::with_val(prec, (Float::with_val(prec, re), Float::with_val(prec, im)));
        let rad = ulp_bound_complex(&mid);
        ComplexBall { mid, rad }
    }

    pub fn from_real(x: &RealBall) -> Self {
        let prec = x.prec();
        let mid = Complex::with_val(prec, (x.mid().clone(), Float::new(prec)));
        ComplexBall {
            mid,
            rad: x.rad().clone(),
        }
    }

    pub fn mid(&self) -> &Complex {
        &self.mid
    }

    pub fn rad(&self) -> &Float {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec().0
    }

    pub fn is_finite(&self) -> bool {
        self.mid.real().is_finite() && self.mid.imag().is_finite() && self.rad.is_finite()
    }

    pub fn re(&self) -> RealBall {
        RealBall::with_radius(self.mid.real().clone(), self.rad.clone())
    }

    pub fn im(&self) -> RealBall {
        RealBall::with_radius(self.mid.imag().clone(), self.rad.clone())
    }

    fn mid_abs_up(&self) -> Float {
        let h = Float::with_val_round(
            RAD_PREC,
            self.mid.real().hypot_ref(self.mid.imag()),
            Round::Up,
        )
        .0;
        rad_add(&h, &ulp_bound(&h))
    }

    /// Modulus as a real ball.
    pub fn abs(&self) -> RealBall {
        let prec = self.prec();
        let mid = Float::with_val(prec, self.mid.real().hypot_ref(self.mid.imag()));
        let rad = rad_add(&self.rad, &ulp_bound(&mid));
        RealBall::with_radius(mid, rad)
    }

    pub fn add(&self, other: &ComplexBall) -> ComplexBall {
        let mid = Complex::with_val(self.prec(), &self.mid + &other.mid);
        let rad = rad_add(&rad_add(&self.rad, &other.rad), &ulp_bound_complex(&mid));
        ComplexBall { mid, rad }
    }

    pub fn sub(&self, other: &ComplexBall) -> ComplexBall {
        let mid = Complex::with_val(self.prec(), &self.mid - &other.mid);
        let rad = rad_add(&rad_add(&self.rad, &other.rad), &ulp_bound_complex(&mid));
        ComplexBall { mid, rad }
    }

    pub fn neg(&self) -> ComplexBall {
        ComplexBall {
            mid: -self.mid.clone(),
            rad: self.rad.clone(),
        }
    }

    pub fn mul(&self, other: &ComplexBall) -> ComplexBall {
        let mid = Complex::with_val(self.prec(), &self.mid * &other.mid);
        let mut rad = rad_mul(&self.mid_abs_up(), &other.rad);
        rad = rad_add(&rad, &rad_mul(&other.mid_abs_up(), &self.rad));
        rad = rad_add(&rad, &rad_mul(&self.rad, &other.rad));
        rad = rad_add(&rad, &ulp_bound_complex(&mid));
        ComplexBall { mid, rad }
    }

    pub fn div(&self, other: &ComplexBall) -> ComplexBall {
        let denom_lo = {
            let h = Float::with_val_round(
                RAD_PREC,
                other.mid.real().hypot_ref(other.mid.imag()),
                Round::Down,
            )
            .0;
            h - &other.rad - ulp_bound(other.mid.real())
        };
        let mid = Complex::with_val(self.prec(), &self.mid / &other.mid);
        if !(denom_lo > 0) {
            return ComplexBall {
                mid,
                rad: Float::with_val(RAD_PREC, rug::float::Special::Infinity),
            };
        }
        let mid_abs = Float::with_val_round(
            RAD_PREC,
            mid.real().hypot_ref(mid.imag()),
            Round::Up,
        )
        .0;
        let mut num = rad_add(&self.rad, &rad_mul(&mid_abs, &other.rad));
        num = Float::with_val_round(RAD_PREC, &num / &denom_lo, Round::Up).0;
        let rad = rad_add(&num, &ulp_bound_complex(&mid));
        ComplexBall { mid, rad }
    }

    /// Complex conjugate, exact.
    pub fn conj(&self) -> ComplexBall {
        let mid = Complex::with_val(
            self.prec(),
            (self.mid.real().clone(), -self.mid.imag().clone()),
        );
        ComplexBall {
            mid,
            rad: self.rad.clone(),
        }
    }

    /// Multiplication by the imaginary unit, exact.
    pub fn mul_i(&self) -> ComplexBall {
        let re = -self.mid.imag().clone();
        let im = self.mid.real().clone();
        let mid = Complex::with_val(self.prec(), (re, im));
        ComplexBall {
            mid,
            rad: self.rad.clone(),
        }
    }

    pub fn scale_real(&self, s: &RealBall) -> ComplexBall {
        self.mul(&ComplexBall::from_real(s))
    }

    pub fn exp(&self) -> ComplexBall {
        let mid = Complex::with_val(self.prec(), self.mid.exp_ref());
        // |e^z - e^m| <= |e^m| (e^r - 1) <= e^{Re m} r e^r
        let em = Float::with_val_round(RAD_PREC, self.mid.real().exp_ref(), Round::Up).0;
        let er = Float::with_val_round(RAD_PREC, self.rad.exp_ref(), Round::Up).0;
        let prop = rad_mul(&rad_mul(&em, &self.rad), &er);
        let rad = rad_add(&prop, &ulp_bound_complex(&mid));
        ComplexBall { mid, rad }
    }

    pub fn powi(&self, e: u32) -> ComplexBall {
        let mut out = ComplexBall::one(self.prec());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }
}

/// Point of C^d held at an explicit working precision. Coordinates are
/// treated as exact inputs; everything derived from them carries an error
/// radius.
#[derive(Clone, Debug)]
pub struct ComplexPoint {
    coords: Vec<Complex>,
    prec: u32,
}

impl ComplexPoint {
    pub const MIN_PRECISION: u32 = 53;

    pub fn new(coords: Vec<Complex>, prec: u32) -> crate::error::Result<Self> {
        if prec < Self::MIN_PRECISION {
            return Err(crate::error::Error::InvalidInput(format!(
                "precision {prec} below the minimum of {}",
                Self::MIN_PRECISION
            )));
        }
        if coords.is_empty() {
            return Err(crate::error::Error::InvalidInput(
                "a point needs at least one coordinate".into(),
            ));
        }
        let coords = coords
            .into_iter()
            .map(|c| Complex::with_val(prec, c))
            .collect();
        Ok(ComplexPoint { coords, prec })
    }

    pub fn from_f64_pairs(pairs: &[(f64, f64)], prec: u32) -> crate::error::Result<Self> {
        let coords = pairs
            .iter()
            .map(|&(re, im)| Complex::with_val(prec, (re, im)))
            .collect();
        Self::new(coords, prec)
    }

    pub fn from_rational_pairs(
        pairs: &[(Rational, Rational)],
        prec: u32,
    ) -> crate::error::Result<Self> {
        let coords = pairs
            .iter()
            .map(|(re, im)| {
                Complex::with_val(prec, (Float::with_val(prec, re), Float::with_val(prec, im)))
            })
            .collect();
        Self::new(coords, prec)
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn coords(&self) -> &[Complex] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> ComplexBall {
        ComplexBall::exact(self.coords[i].clone())
    }

    /// Same point carried at a higher working precision.
    pub fn with_precision(&self, prec: u32) -> crate::error::Result<Self> {
        Self::new(self.coords.clone(), prec)
    }

    /// Euclidean distance in C^d (real and imaginary parts stacked).
    pub fn distance_to(&self, other: &ComplexPoint) -> crate::error::Result<RealBall> {
        if self.dimension() != other.dimension() {
            return Err(crate::error::Error::DimensionMismatch {
                expected: self.dimension(),
                got: other.dimension(),
            });
        }
        let prec = self.prec.max(other.prec);
        let mut sum = RealBall::zero(prec);
        for i in 0..self.dimension() {
            let diff = self.coord(i).sub(&other.coord(i));
            sum = sum.add(&diff.abs().powi(2));
        }
        Ok(sum.sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_error_is_carried() {
        let a = RealBall::from_rational(&Rational::from((1, 3)), 64);
        assert!(a.rad().to_f64() > 0.0);
        assert!(a.rad().to_f64() < 1e-18);
        let b = a.mul(&a);
        let third_sq = 1.0 / 9.0;
        assert!((b.mid_f64() - third_sq).abs() <= b.rad_f64() + 1e-17);
    }

    #[test]
    fn exp_ball_contains_truth() {
        let x = RealBall::from_f64(1.0, 128);
        let e = x.exp();
        assert!((e.mid_f64() - std::f64::consts::E).abs() < 1e-15);
        assert!(e.rad_f64() < 1e-30);
    }

    #[test]
    fn complex_exp_unit_modulus() {
        // e^{i t} has modulus 1 for real t
        let t = Complex::with_val(128, (0, 2.5));
        let z = ComplexBall::exact(t).exp();
        let m = z.abs();
        assert!((m.mid_f64() - 1.0).abs() <= m.rad_f64() + 1e-30);
    }

    #[test]
    fn division_by_straddling_zero_is_flagged() {
        let a = RealBall::from_f64(1.0, 64);
        let b = RealBall::with_radius(Float::with_val(64, 1e-40), Float::with_val(64, 1.0));
        let q = a.div(&b);
        assert!(!q.is_finite());
    }

    #[test]
    fn definite_comparisons_need_separation() {
        let a = RealBall::with_radius(Float::with_val(64, 1.0), Float::with_val(64, 0.5));
        let b = RealBall::with_radius(Float::with_val(64, 1.2), Float::with_val(64, 0.5));
        assert!(!a.definitely_lt(&b));
        let c = RealBall::with_radius(Float::with_val(64, 3.0), Float::with_val(64, 0.5));
        assert!(a.definitely_lt(&c));
    }

    #[test]
    fn sqrt_near_zero_uses_hoelder_bound() {
        let a = RealBall::with_radius(Float::with_val(64, 1e-30), Float::with_val(64, 1e-30));
        let s = a.sqrt();
        assert!(s.is_finite());
        assert!(s.rad_f64() >= 1e-15 * 0.9);
    }
}
