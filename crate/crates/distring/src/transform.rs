//! Fourier-Laplace transform of symbolic distributions at complex points,
//! with a rigorous error radius on every value, and growth certificates of
//! polynomial-times-exponential type derived from the symbolic data.

use crate::ball::{ComplexBall, ComplexPoint, RealBall};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::exact::{BoundingBox, ExactComplex};
use crate::poly::Poly;
use rug::float::Round;
use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

/// Evaluate the transform f(z) = <f, e^{-i z .}> as a ball.
///
/// Point terms contribute coeff * (iz)^alpha * e^{-i<z, a>} in closed form.
/// Density pieces are integrated exactly by parts away from the removable
/// singularity at z = 0, and by a truncated power series with a rigorous
/// remainder bound when |z| times the piece length is small.
pub fn fl_transform(f: &Distribution, z: &ComplexPoint) -> Result<ComplexBall> {
    if f.dimension() != z.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            got: z.dimension(),
        });
    }
    let prec = z.precision();
    let mut acc = ComplexBall::zero(prec);

    for term in f.terms() {
        let coeff = ComplexBall::from_rationals(&term.coeff.re, &term.coeff.im, prec);
        let mut factor = coeff;
        // (i z)^alpha
        for (j, &k) in term.deriv.entries().iter().enumerate() {
            if k > 0 {
                factor = factor.mul(&z.coord(j).mul_i().powi(k));
            }
        }
        // e^{-i <z, a>}
        let mut phase = ComplexBall::zero(prec);
        for (j, a_j) in term.location.iter().enumerate() {
            let a = ComplexBall::from_real(&RealBall::from_rational(a_j, prec));
            phase = phase.add(&z.coord(j).mul(&a));
        }
        let exp_term = phase.mul_i().neg().exp();
        acc = acc.add(&factor.mul(&exp_term));
    }

    if let Some(density) = f.density() {
        let zz = z.coord(0);
        for i in 0..density.pieces().len() {
            let piece = &density.pieces()[i];
            if piece.is_zero() {
                continue;
            }
            let x0 = &density.breakpoints()[i];
            let x1 = &density.breakpoints()[i + 1];
            let contribution = density_piece_transform(piece, x0, x1, &zz, prec)?;
            acc = acc.add(&contribution);
        }
    }

    if !acc.is_finite() {
        return Err(Error::NonFiniteValue);
    }
    Ok(acc)
}

/// Branch selector for one density piece; exposed within the crate so the
/// agreement of the two routes can be tested on a ring of points straddling
/// the threshold.
pub(crate) fn density_piece_transform(
    piece: &Poly,
    x0: &Rational,
    x1: &Rational,
    z: &ComplexBall,
    prec: u32,
) -> Result<ComplexBall> {
    let len = Rational::from(x1 - x0);
    let z_abs_up = z.abs().upper();
    let len_f = Float::with_val(64, Rational::from(&len));
    let prod = Float::with_val_round(64, &z_abs_up * &len_f, Round::Up).0;
    if prod < 0.5 {
        density_piece_series(piece, x0, x1, z, prec)
    } else {
        density_piece_by_parts(piece, x0, x1, z, prec)
    }
}

/// Series branch around the piece midpoint:
/// integral = e^{-iz c} sum_m (-iz)^m / m! * int p(x) (x-c)^m dx.
pub(crate) fn density_piece_series(
    piece: &Poly,
    x0: &Rational,
    x1: &Rational,
    z: &ComplexBall,
    prec: u32,
) -> Result<ComplexBall> {
    let center = Rational::from(x0 + x1) / Rational::from(2);
    let half = Rational::from(x1 - x0) / Rational::from(2);
    // q(u) = p(center + u)
    let q = piece.compose_shift(&center);
    let u0 = Rational::from(-&half);
    let u1 = half.clone();

    // crude upper bound for int |p| over the piece
    let mut variation = Float::new(64);
    let max_abs_u = Float::with_val_round(64, &half, Round::Up).0;
    let len_f = Float::with_val_round(64, Float::with_val(64, Rational::from(x1 - x0)), Round::Up).0;
    let mut u_pow = Float::with_val(64, 1);
    for c in &q.0 {
        let mag = Float::with_val_round(
            64,
            Float::with_val(64, &c.re).abs() + Float::with_val(64, &c.im).abs(),
            Round::Up,
        )
        .0;
        variation += Float::with_val_round(64, &mag * &u_pow, Round::Up).0;
        u_pow = Float::with_val_round(64, &u_pow * &max_abs_u, Round::Up).0;
    }
    variation = Float::with_val_round(64, &variation * &len_f, Round::Up).0;

    let minus_iz = z.mul_i().neg();
    let ratio_up = Float::with_val_round(64, z.abs().upper() * &max_abs_u, Round::Up).0;

    let target = Float::with_val(64, 1) >> (prec + 4);
    let mut sum = ComplexBall::zero(prec);
    let mut power = ComplexBall::one(prec); // (-iz)^m / m!
    let mut ratio_pow = Float::with_val(64, 1); // ratio_up^m / m!
    let mut moment_base = q.clone(); // q(u) * u^m
    let mut remainder = Float::with_val(64, rug::float::Special::Infinity);
    for m in 0..400u32 {
        let c_m = moment_base.integral(&u0, &u1);
        let c_ball = ComplexBall::from_rationals(&c_m.re, &c_m.im, prec);
        sum = sum.add(&power.mul(&c_ball));

        // remainder after including term m: V * sum_{k>m} ratio^k/k!
        ratio_pow = Float::with_val_round(64, &ratio_pow * &ratio_up, Round::Up).0;
        ratio_pow = Float::with_val_round(
            64,
            &ratio_pow / &Float::with_val(64, m + 1),
            Round::Up,
        )
        .0;
        // geometric tail factor 4/3 is valid because ratio_up < 1/4
        remainder = Float::with_val_round(64, &variation * &ratio_pow, Round::Up).0;
        remainder = Float::with_val_round(
            64,
            &remainder * &Float::with_val(64, Rational::from((4, 3))),
            Round::Up,
        )
        .0;
        if remainder <= target {
            break;
        }
        power = power.mul(&minus_iz.scale_real(&RealBall::exact(
            Float::with_val(prec, Rational::from((1u32, m + 1))),
        )));
        moment_base = moment_base.mul(&Poly(vec![ExactComplex::zero(), ExactComplex::one()]));
    }
    if !remainder.is_finite() || remainder > 1.0 {
        return Err(Error::PrecisionExhausted {
            achieved: remainder.to_f64(),
            requested: target.to_f64(),
            precision: prec,
        });
    }
    let sum = ComplexBall::with_radius(
        sum.mid().clone(),
        Float::with_val_round(64, sum.rad() + &remainder, Round::Up).0,
    );
    // phase factor e^{-iz center}
    let c_ball = ComplexBall::from_real(&RealBall::from_rational(&center, prec));
    let phase = z.mul(&c_ball).mul_i().neg().exp();
    Ok(sum.mul(&phase))
}

/// Closed-form branch by repeated integration by parts:
/// the antiderivative of p(x) e^{s x} is e^{s x} sum_j (-1)^j p^(j)(x)/s^{j+1}
/// with s = -iz.
pub(crate) fn density_piece_by_parts(
    piece: &Poly,
    x0: &Rational,
    x1: &Rational,
    z: &ComplexBall,
    prec: u32,
) -> Result<ComplexBall> {
    let s = z.mul_i().neg();
    let s_inv = ComplexBall::one(prec).div(&s);
    // derivatives of the piece
    let mut derivs = vec![piece.clone()];
    while !derivs.last().unwrap().is_zero() {
        derivs.push(derivs.last().unwrap().derivative());
    }
    derivs.pop();

    let eval_at = |x: &Rational| -> ComplexBall {
        let x_ball = ComplexBall::from_real(&RealBall::from_rational(x, prec));
        let mut inner = ComplexBall::zero(prec);
        let mut s_inv_pow = s_inv.clone();
        for (j, d) in derivs.iter().enumerate() {
            let v = d.eval(x);
            let mut term =
                ComplexBall::from_rationals(&v.re, &v.im, prec).mul(&s_inv_pow);
            if j % 2 == 1 {
                term = term.neg();
            }
            inner = inner.add(&term);
            s_inv_pow = s_inv_pow.mul(&s_inv);
        }
        s.mul(&x_ball).exp().mul(&inner)
    };

    let out = eval_at(x1).sub(&eval_at(x0));
    if !out.is_finite() {
        return Err(Error::NonFiniteValue);
    }
    Ok(out)
}

/// Growth certificate: |f(z)| <= const_c (1+||z||^2)^exponent_n e^{H_K(Im z)}
/// with K the support box.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PwsBound {
    pub const_c: f64,
    pub exponent_n: f64,
    #[serde(skip)]
    pub support_box: Option<BoundingBox>,
}

/// Constructive constants: the triangle inequality over point terms gives
/// C = sum |coeff| and N = max |alpha| / 2; a density adds its total
/// variation bound to C and nothing to N.
pub fn pws_bound_for(f: &Distribution) -> Result<PwsBound> {
    if f.is_zero() {
        return Err(Error::ZeroDistribution);
    }
    let mut c = Float::new(64);
    let mut n: f64 = 0.0;
    for t in f.terms() {
        let abs_sq = t.coeff.abs_sq();
        let abs = Float::with_val_round(64, Float::with_val(64, &abs_sq), Round::Up)
            .0
            .sqrt();
        c += Float::with_val_round(64, &abs * Float::with_val(64, 1.0000000001f64), Round::Up).0;
        n = n.max(t.deriv.order() as f64 / 2.0);
    }
    if let Some(density) = f.density() {
        for i in 0..density.pieces().len() {
            let x0 = &density.breakpoints()[i];
            let x1 = &density.breakpoints()[i + 1];
            let max_abs = Float::with_val(64, x0)
                .abs()
                .max(&Float::with_val(64, x1).abs());
            let len = Float::with_val_round(64, Float::with_val(64, Rational::from(x1 - x0)), Round::Up).0;
            let mut pow = Float::with_val(64, 1);
            for coeff in &density.pieces()[i].0 {
                let mag = Float::with_val_round(
                    64,
                    Float::with_val(64, &coeff.re).abs() + Float::with_val(64, &coeff.im).abs(),
                    Round::Up,
                )
                .0;
                let scaled = Float::with_val_round(64, &mag * &pow, Round::Up).0;
                c += Float::with_val_round(64, &scaled * &len, Round::Up).0;
                pow = Float::with_val_round(64, &pow * &max_abs, Round::Up).0;
            }
        }
    }
    // round up into f64
    let const_c = c.to_f64_round(Round::Up);
    Ok(PwsBound {
        const_c,
        exponent_n: n,
        support_box: f.support_hull(),
    })
}

/// Supporting function of an axis-aligned box, as a ball.
pub fn box_support_function(bbox: &BoundingBox, xi: &[RealBall], prec: u32) -> RealBall {
    let mut acc = RealBall::zero(prec);
    for i in 0..bbox.dimension() {
        let lo = RealBall::from_rational(&bbox.lo[i], prec).mul(&xi[i]);
        let hi = RealBall::from_rational(&bbox.hi[i], prec).mul(&xi[i]);
        acc = acc.add(&lo.max(&hi));
    }
    acc
}

/// Right-hand side of the growth certificate at z, as a ball.
pub fn pws_rhs(bound: &PwsBound, z: &ComplexPoint) -> Result<RealBall> {
    let prec = z.precision();
    let bbox = bound
        .support_box
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("certificate has no support box".into()))?;
    if bbox.dimension() != z.dimension() {
        return Err(Error::DimensionMismatch {
            expected: bbox.dimension(),
            got: z.dimension(),
        });
    }
    let mut z_sq = RealBall::from_i64(1, prec);
    for i in 0..z.dimension() {
        z_sq = z_sq.add(&z.coord(i).abs().powi(2));
    }
    // (1+||z||^2)^N = e^{N ln(1+||z||^2)}
    let n = RealBall::from_f64(bound.exponent_n, prec);
    let poly_factor = n.mul(&z_sq.ln()).exp();
    let im: Vec<RealBall> = (0..z.dimension()).map(|i| z.coord(i).im()).collect();
    let h = box_support_function(bbox, &im, prec);
    Ok(RealBall::from_f64(bound.const_c, prec)
        .mul(&poly_factor)
        .mul(&h.exp()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PwsSampleReport {
    pub point: Vec<(f64, f64)>,
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PwsReport {
    pub worst_margin: f64,
    pub all_pass: bool,
    pub samples: Vec<PwsSampleReport>,
}

/// Check the certificate at every sample. A sample fails only when the
/// inequality is rigorously violated after folding in both error radii;
/// the margin is how much room the certificate has left.
pub fn verify_pws_on_samples(
    f: &Distribution,
    bound: &PwsBound,
    samples: &[ComplexPoint],
) -> Result<PwsReport> {
    if samples.is_empty() {
        return Err(Error::InvalidInput("sample set is empty".into()));
    }
    let mut out = Vec::with_capacity(samples.len());
    let mut worst = f64::INFINITY;
    let mut all_pass = true;
    for z in samples {
        let value = fl_transform(f, z)?.abs();
        let rhs = pws_rhs(bound, z)?;
        let margin = (rhs.upper() - value.lower()).to_f64();
        let pass = margin >= 0.0;
        all_pass &= pass;
        worst = worst.min(margin);
        out.push(PwsSampleReport {
            point: z
                .coords()
                .iter()
                .map(|c| (c.real().to_f64(), c.imag().to_f64()))
                .collect(),
            value: value.mid_f64(),
            bound: rhs.mid_f64(),
            margin,
            pass,
        });
    }
    Ok(PwsReport {
        worst_margin: worst,
        all_pass,
        samples: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::MultiIndex;
    use crate::exact::rat;

    fn point(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::from_f64_pairs(&[(re, im)], 128).unwrap()
    }

    #[test]
    fn delta_transforms_to_one() {
        let delta = Distribution::delta(1);
        for (re, im) in [(0.0, 0.0), (2.5, -1.0), (100.0, 3.0)] {
            let v = fl_transform(&delta, &point(re, im)).unwrap();
            let diff = v.sub(&ComplexBall::one(128)).abs();
            assert!(diff.upper() < 1e-30);
        }
    }

    #[test]
    fn two_point_difference_matches_closed_form() {
        // (delta - delta_c)^ = 1 - e^{-i c z}
        let c = rat(11, 100);
        let f = Distribution::delta(1)
            .sub(&Distribution::delta_at(vec![c.clone()]))
            .unwrap();
        for (re, im) in [(1.0, 0.0), (628.0, 0.0), (3.0, -2.0)] {
            let z = point(re, im);
            let v = fl_transform(&f, &z).unwrap();
            let cz = z.coord(0).mul(&ComplexBall::from_real(&RealBall::from_rational(&c, 128)));
            let expected = ComplexBall::one(128).sub(&cz.mul_i().neg().exp());
            let diff = v.sub(&expected).abs();
            assert!(diff.upper() < 1e-30);
        }
    }

    #[test]
    fn indicator_at_zero_is_one() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let v = fl_transform(&ind, &point(0.0, 0.0)).unwrap();
        let diff = v.sub(&ComplexBall::one(128)).abs();
        assert!(diff.upper() < 1e-30);
    }

    #[test]
    fn indicator_matches_closed_form_away_from_zero() {
        // (e^{-iz} - 1)/(-iz)
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        for (re, im) in [(1.0, 0.0), (10.0, 2.0), (0.6, 0.0), (-4.0, 1.0)] {
            let z = point(re, im);
            let v = fl_transform(&ind, &z).unwrap();
            let minus_iz = z.coord(0).mul_i().neg();
            let expected = minus_iz.exp().sub(&ComplexBall::one(128)).div(&minus_iz);
            let diff = v.sub(&expected).abs();
            assert!(diff.upper() < 1e-25, "mismatch at ({re},{im})");
        }
    }

    #[test]
    fn derivative_term_gives_polynomial() {
        // ((1/i) delta')^ = z
        let f = Distribution::point_mass(
            ExactComplex::new(Rational::new(), rat(-1, 1)), // 1/i = -i
            vec![rat(0, 1)],
            MultiIndex::new(vec![1]),
        );
        for (re, im) in [(2.0, 0.0), (0.5, -3.0)] {
            let z = point(re, im);
            let v = fl_transform(&f, &z).unwrap();
            let diff = v.sub(&z.coord(0)).abs();
            assert!(diff.upper() < 1e-30);
        }
    }

    #[test]
    fn series_and_by_parts_branches_agree() {
        let piece = Poly::from_rationals(vec![rat(1, 3), rat(1, 2), rat(-2, 1)]);
        let (x0, x1) = (rat(-1, 4), rat(3, 4));
        // ring of points with |z| around the branch threshold 1/2
        for k in 0..16 {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / 16.0;
            for radius in [0.4, 0.5, 0.6] {
                let z = ComplexBall::exact(rug::Complex::with_val(
                    128,
                    (radius * theta.cos(), radius * theta.sin()),
                ));
                let a = density_piece_series(&piece, &x0, &x1, &z, 128).unwrap();
                let b = density_piece_by_parts(&piece, &x0, &x1, &z, 128).unwrap();
                let diff = a.sub(&b).abs();
                let tol = Float::with_val(64, a.rad() + b.rad()) + Float::with_val(64, 1e-30);
                assert!(diff.upper() <= tol, "branch mismatch at r={radius} k={k}");
            }
        }
    }

    #[test]
    fn transform_is_multiplicative_on_samples() {
        let f = Distribution::delta(1)
            .sub(&Distribution::delta_at(vec![rat(1, 2)]))
            .unwrap();
        let g = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let fg = f.convolve(&g).unwrap();
        for (re, im) in [(0.3, 0.1), (5.0, -1.0), (12.0, 0.0)] {
            let z = point(re, im);
            let lhs = fl_transform(&fg, &z).unwrap();
            let rhs = fl_transform(&f, &z)
                .unwrap()
                .mul(&fl_transform(&g, &z).unwrap());
            let diff = lhs.sub(&rhs).abs();
            let tol = Float::with_val(64, lhs.rad() + rhs.rad()) + Float::with_val(64, 1e-25);
            assert!(diff.upper() <= tol);
        }
    }

    #[test]
    fn pws_constants_examples() {
        let delta = Distribution::delta(1);
        let b = pws_bound_for(&delta).unwrap();
        assert!((b.const_c - 1.0).abs() < 1e-6);
        assert_eq!(b.exponent_n, 0.0);

        let f = Distribution::delta(1)
            .sub(&Distribution::delta_at(vec![rat(11, 100)]))
            .unwrap();
        let b = pws_bound_for(&f).unwrap();
        assert!((b.const_c - 2.0).abs() < 1e-6);
        assert_eq!(b.exponent_n, 0.0);
        let bbox = b.support_box.unwrap();
        assert_eq!(bbox.lo, vec![rat(0, 1)]);
        assert_eq!(bbox.hi, vec![rat(11, 100)]);

        let dp = Distribution::point_mass(
            ExactComplex::new(Rational::new(), rat(-1, 1)),
            vec![rat(0, 1)],
            MultiIndex::new(vec![1]),
        );
        let b = pws_bound_for(&dp).unwrap();
        assert!((b.const_c - 1.0).abs() < 1e-6);
        assert_eq!(b.exponent_n, 0.5);
    }

    #[test]
    fn pws_verification_passes_for_own_bound() {
        let f = Distribution::delta(1)
            .sub(&Distribution::delta_at(vec![rat(11, 100)]))
            .unwrap();
        let bound = pws_bound_for(&f).unwrap();
        let samples: Vec<ComplexPoint> = [(0.0, 0.0), (628318.0, 0.0), (2.0, -5.0), (1.0, 10.0)]
            .iter()
            .map(|&(re, im)| point(re, im))
            .collect();
        let report = verify_pws_on_samples(&f, &bound, &samples).unwrap();
        assert!(report.all_pass);
        assert!(report.worst_margin >= 0.0);
    }

    #[test]
    fn derivative_bound_is_asymptotically_tight_on_imaginary_axis() {
        // |((1/i) delta')^(iy)| = y vs bound (1+y^2)^{1/2}
        let dp = Distribution::point_mass(
            ExactComplex::new(Rational::new(), rat(-1, 1)),
            vec![rat(0, 1)],
            MultiIndex::new(vec![1]),
        );
        let bound = pws_bound_for(&dp).unwrap();
        for y in [1.0f64, 10.0, 100.0] {
            let z = point(0.0, y);
            let v = fl_transform(&dp, &z).unwrap().abs();
            assert!((v.mid_f64() - y).abs() < 1e-12 * y);
            let rhs = pws_rhs(&bound, &z).unwrap();
            let expected = (1.0 + y * y).sqrt();
            assert!((rhs.mid_f64() - expected).abs() < 1e-9 * expected);
            assert!(v.mid_f64() <= rhs.mid_f64());
        }
    }
}
