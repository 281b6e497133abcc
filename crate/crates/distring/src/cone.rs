//! Closed convex cones with apex at the origin: metric projections,
//! supporting functions of the unit-ball section, the weight
//! p(z) = log(1 + |z|^2) + H(Im z), and the admissibility checks the weight
//! has to satisfy.

use crate::ball::{ComplexPoint, RealBall};
use crate::error::{Error, Result};
use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

/// A closed convex cone in R^d with apex at 0.
#[derive(Clone, Debug, PartialEq)]
pub enum Cone {
    FullSpace { dim: usize },
    Orthant { dim: usize },
    /// {(x, t) in R^spatial x R : ||x|| <= speed * t, t >= 0}
    LightCone { spatial_dim: usize, speed: Rational },
    /// Conic hull of finitely many generators.
    Polyhedral {
        dim: usize,
        generators: Vec<Vec<Rational>>,
    },
}

impl Cone {
    pub fn full(dim: usize) -> Self {
        Cone::FullSpace { dim }
    }

    pub fn orthant(dim: usize) -> Self {
        Cone::Orthant { dim }
    }

    pub fn light_cone(spatial_dim: usize, speed: Rational) -> Result<Self> {
        if speed.cmp0() != std::cmp::Ordering::Greater {
            return Err(Error::InvalidInput("light cone speed must be > 0".into()));
        }
        if spatial_dim == 0 {
            return Err(Error::InvalidInput(
                "light cone needs at least one spatial dimension".into(),
            ));
        }
        Ok(Cone::LightCone { spatial_dim, speed })
    }

    pub fn polyhedral(dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput(
                "polyhedral cone needs at least one generator".into(),
            ));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
            if g.iter().all(|x| x.cmp0() == std::cmp::Ordering::Equal) {
                return Err(Error::InvalidInput(
                    "polyhedral generators must be nonzero".into(),
                ));
            }
        }
        Ok(Cone::Polyhedral { dim, generators })
    }

    pub fn dimension(&self) -> usize {
        match self {
            Cone::FullSpace { dim } | Cone::Orthant { dim } => *dim,
            Cone::LightCone { spatial_dim, .. } => spatial_dim + 1,
            Cone::Polyhedral { dim, .. } => *dim,
        }
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if self.dimension() != got {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got,
            });
        }
        Ok(())
    }

    /// Exact membership test for a rational point.
    pub fn contains_exact(&self, x: &[Rational]) -> Result<bool> {
        self.check_dim(x.len())?;
        match self {
            Cone::FullSpace { .. } => Ok(true),
            Cone::Orthant { .. } => Ok(x.iter().all(|v| v.cmp0() != std::cmp::Ordering::Less)),
            Cone::LightCone { spatial_dim, speed } => {
                let t = &x[*spatial_dim];
                if t.cmp0() == std::cmp::Ordering::Less {
                    return Ok(false);
                }
                let mut norm_sq = Rational::new();
                for v in &x[..*spatial_dim] {
                    norm_sq += Rational::from(v * v);
                }
                let ct = Rational::from(speed * t);
                Ok(norm_sq <= Rational::from(&ct * &ct))
            }
            Cone::Polyhedral { generators, .. } => Ok(conic_hull_membership(generators, x)),
        }
    }

    /// Euclidean metric projection onto the cone.
    pub fn project(&self, xi: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(xi.len())?;
        match self {
            Cone::FullSpace { .. } => Ok(xi.to_vec()),
            Cone::Orthant { .. } => Ok(xi.iter().map(|v| v.max(0.0)).collect()),
            Cone::LightCone { spatial_dim, speed } => {
                let c = speed.to_f64();
                let (spatial, tau) = (&xi[..*spatial_dim], xi[*spatial_dim]);
                let r = norm(spatial);
                if r <= c * tau {
                    return Ok(xi.to_vec());
                }
                if c * r <= -tau {
                    return Ok(vec![0.0; xi.len()]);
                }
                let t_star = (c * r + tau) / (c * c + 1.0);
                let mut out: Vec<f64> = if r > 0.0 {
                    spatial.iter().map(|v| v * c * t_star / r).collect()
                } else {
                    vec![0.0; *spatial_dim]
                };
                out.push(t_star);
                Ok(out)
            }
            Cone::Polyhedral { generators, .. } => {
                let gens: Vec<Vec<f64>> = generators
                    .iter()
                    .map(|g| g.iter().map(|v| v.to_f64()).collect())
                    .collect();
                let lambda = nnls(&gens, xi)?;
                let mut out = vec![0.0; xi.len()];
                for (g, l) in gens.iter().zip(&lambda) {
                    for (o, v) in out.iter_mut().zip(g) {
                        *o += l * v;
                    }
                }
                Ok(out)
            }
        }
    }

    /// Supporting function H of B = cone intersected with the unit ball:
    /// H(xi) = sup over x in B of <x, xi>. Closed forms where available,
    /// otherwise the norm of the metric projection (Moreau).
    pub fn support_function(&self, xi: &[f64]) -> Result<f64> {
        self.check_dim(xi.len())?;
        match self {
            Cone::FullSpace { .. } => Ok(norm(xi)),
            Cone::Orthant { .. } => Ok(norm(
                &xi.iter().map(|v| v.max(0.0)).collect::<Vec<_>>(),
            )),
            Cone::LightCone { spatial_dim, speed } => {
                let c = speed.to_f64();
                let (spatial, tau) = (&xi[..*spatial_dim], xi[*spatial_dim]);
                let r = norm(spatial);
                if c.recip() * r <= tau {
                    Ok((r * r + tau * tau).sqrt())
                } else if -c * r <= tau {
                    Ok((tau + c * r) / (c * c + 1.0).sqrt())
                } else {
                    Ok(0.0)
                }
            }
            Cone::Polyhedral { .. } => Ok(norm(&self.project(xi)?)),
        }
    }

    /// Supporting function with a rigorous error radius.
    pub fn support_function_ball(&self, xi: &[RealBall], prec: u32) -> Result<RealBall> {
        self.check_dim(xi.len())?;
        match self {
            Cone::FullSpace { .. } => Ok(norm_ball(xi, prec)),
            Cone::Orthant { .. } => {
                let pos: Vec<RealBall> = xi.iter().map(|v| v.max_zero()).collect();
                Ok(norm_ball(&pos, prec))
            }
            Cone::LightCone { spatial_dim, speed } => {
                let c = RealBall::from_rational(speed, prec);
                let r = norm_ball(&xi[..*spatial_dim], prec);
                let tau = xi[*spatial_dim].clone();
                let c_tau = c.mul(&tau);
                let minus_c_r = c.mul(&r).neg();
                // top branch: sqrt(r^2 + tau^2); middle: (tau + c r)/sqrt(c^2+1); bottom: 0
                let mut candidates = Vec::new();
                if !c_tau.definitely_lt(&r) {
                    candidates.push(r.mul(&r).add(&tau.mul(&tau)).sqrt());
                }
                if !tau.definitely_lt(&minus_c_r) && !r.definitely_lt(&c_tau) {
                    let denom = c.mul(&c).add(&RealBall::from_i64(1, prec)).sqrt();
                    candidates.push(tau.add(&c.mul(&r)).div(&denom).max_zero());
                }
                if !minus_c_r.definitely_lt(&tau) {
                    candidates.push(RealBall::zero(prec));
                }
                Ok(hull_balls(&candidates, prec))
            }
            Cone::Polyhedral { .. } => {
                // f64 projection path with an inflated radius covering the
                // iterative solve
                let xi_f: Vec<f64> = xi.iter().map(|v| v.mid_f64()).collect();
                let h = self.support_function(&xi_f)?;
                let input_rad: f64 = xi.iter().map(|v| v.rad_f64()).sum();
                let rad = 1e-10 * (1.0 + h.abs()) + input_rad;
                Ok(RealBall::with_radius(
                    Float::with_val(prec, h),
                    Float::with_val(32, rad),
                ))
            }
        }
    }

    /// The weight p(z) = log(1 + ||z||^2) + H(Im z).
    pub fn weight(&self, z: &ComplexPoint) -> Result<RealBall> {
        self.check_dim(z.dimension())?;
        let prec = z.precision();
        let mut sum = RealBall::from_i64(1, prec);
        for i in 0..z.dimension() {
            let c = z.coord(i);
            sum = sum.add(&c.abs().powi(2));
        }
        let log_term = sum.ln();
        let im: Vec<RealBall> = (0..z.dimension()).map(|i| z.coord(i).im()).collect();
        let h = self.support_function_ball(&im, prec)?;
        Ok(log_term.add(&h))
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn norm_ball(v: &[RealBall], prec: u32) -> RealBall {
    let mut sum = RealBall::zero(prec);
    for x in v {
        sum = sum.add(&x.mul(x));
    }
    sum.sqrt()
}

/// Enclosure of the union of candidate balls.
fn hull_balls(balls: &[RealBall], prec: u32) -> RealBall {
    assert!(!balls.is_empty());
    if balls.len() == 1 {
        return balls[0].clone();
    }
    let mut lo = balls[0].lower();
    let mut hi = balls[0].upper();
    for b in &balls[1..] {
        let l = b.lower();
        let h = b.upper();
        if l < lo {
            lo = l;
        }
        if h > hi {
            hi = h;
        }
    }
    let mid = Float::with_val(prec, &hi + &lo) / 2u32;
    let half = Float::with_val_round(32, &hi - &lo, rug::float::Round::Up).0 >> 1;
    let rad = half + (Float::with_val(32, 1) >> 1000);
    RealBall::with_radius(mid, rad)
}

/// Hessian quadratic form of z -> log(1 + ||z||^2):
/// w* F(z) w = (||w||^2 + ||w||^2 ||z||^2 - |w* z|^2) / (1 + ||z||^2)^2.
pub fn hessian_quad_form(z: &ComplexPoint, w: &ComplexPoint) -> Result<RealBall> {
    if z.dimension() != w.dimension() {
        return Err(Error::DimensionMismatch {
            expected: z.dimension(),
            got: w.dimension(),
        });
    }
    let prec = z.precision().max(w.precision());
    let mut w_sq = RealBall::zero(prec);
    let mut z_sq = RealBall::zero(prec);
    let mut wz = crate::ball::ComplexBall::zero(prec);
    for i in 0..z.dimension() {
        let zi = z.coord(i);
        let wi = w.coord(i);
        w_sq = w_sq.add(&wi.abs().powi(2));
        z_sq = z_sq.add(&zi.abs().powi(2));
        wz = wz.add(&wi.conj().mul(&zi));
    }
    let numer = w_sq.add(&w_sq.mul(&z_sq)).sub(&wz.abs().powi(2));
    let denom = RealBall::from_i64(1, prec).add(&z_sq).powi(2);
    Ok(numer.div(&denom))
}

/// Report from the weight-locality suite: for pairs with
/// ||z - zeta|| <= e^{-K1 p(z) - K2}, p(zeta) <= p(z) + log 8 + 1 must hold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalityReport {
    pub checked: usize,
    pub skipped_precondition: usize,
    pub worst_slack: f64,
    pub violations: Vec<LocalityViolation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalityViolation {
    pub weight_at_z: f64,
    pub weight_at_zeta: f64,
}

pub fn check_weight_locality(
    cone: &Cone,
    pairs: &[(ComplexPoint, ComplexPoint)],
    k1: f64,
    k2: f64,
) -> Result<LocalityReport> {
    let bound_shift = 8f64.ln() + 1.0;
    let mut worst_slack = f64::INFINITY;
    let mut violations = Vec::new();
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for (z, zeta) in pairs {
        let p_z = cone.weight(z)?;
        let p_zeta = cone.weight(zeta)?;
        // precondition: ||z - zeta|| <= e^{-K1 p(z) - K2}
        let dist = z.distance_to(zeta)?;
        let allowed = (-k1 * p_z.mid_f64() - k2).exp();
        if dist.mid_f64() - dist.rad_f64() > allowed {
            skipped += 1;
            continue;
        }
        checked += 1;
        let rhs = p_z.add(&RealBall::from_f64(bound_shift, p_z.prec()));
        let slack = rhs.sub(&p_zeta);
        let slack_mid = slack.mid_f64();
        if slack_mid < worst_slack {
            worst_slack = slack_mid;
        }
        if slack.upper() < 0 {
            violations.push(LocalityViolation {
                weight_at_z: p_z.mid_f64(),
                weight_at_zeta: p_zeta.mid_f64(),
            });
        }
    }
    Ok(LocalityReport {
        checked,
        skipped_precondition: skipped,
        worst_slack,
        violations,
    })
}

/// Report from the supporting-function axiom suite (subadditivity and
/// positive homogeneity on samples).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomsReport {
    pub checked: usize,
    pub worst_subadditivity_violation: f64,
    pub worst_homogeneity_violation: f64,
}

pub fn check_support_fn_axioms(
    cone: &Cone,
    samples: &[(Vec<f64>, Vec<f64>, f64)],
) -> Result<AxiomsReport> {
    let mut worst_sub = 0.0f64;
    let mut worst_hom = 0.0f64;
    for (xi, eta, t) in samples {
        assert!(*t >= 0.0, "homogeneity is only claimed for t >= 0");
        let h_xi = cone.support_function(xi)?;
        let h_eta = cone.support_function(eta)?;
        let sum: Vec<f64> = xi.iter().zip(eta).map(|(a, b)| a + b).collect();
        let h_sum = cone.support_function(&sum)?;
        worst_sub = worst_sub.max(h_sum - (h_xi + h_eta));
        let scaled: Vec<f64> = xi.iter().map(|a| a * t).collect();
        let h_scaled = cone.support_function(&scaled)?;
        worst_hom = worst_hom.max((h_scaled - t * h_xi).abs());
    }
    Ok(AxiomsReport {
        checked: samples.len(),
        worst_subadditivity_violation: worst_sub,
        worst_homogeneity_violation: worst_hom,
    })
}

/// Exact feasibility of x in cone(generators) via phase-one simplex over
/// the rationals (Bland's rule, so it terminates).
fn conic_hull_membership(generators: &[Vec<Rational>], x: &[Rational]) -> bool {
    let d = x.len();
    let m = generators.len();
    // columns: m generator weights + d artificials; rows scaled so rhs >= 0
    let ncols = m + d;
    let mut a = vec![vec![Rational::new(); ncols]; d];
    let mut b = vec![Rational::new(); d];
    for i in 0..d {
        let flip = x[i].cmp0() == std::cmp::Ordering::Less;
        for j in 0..m {
            a[i][j] = if flip {
                Rational::from(-&generators[j][i])
            } else {
                generators[j][i].clone()
            };
        }
        a[i][m + i] = Rational::from(1);
        b[i] = if flip {
            Rational::from(-&x[i])
        } else {
            x[i].clone()
        };
    }
    let mut basis: Vec<usize> = (m..m + d).collect();
    loop {
        // reduced costs for the phase-one objective (sum of artificials):
        // c_j - y^T a_j where y_i = 1 if basis[i] is artificial else 0
        let mut entering = None;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let cost = if j >= m { Rational::from(1) } else { Rational::new() };
            let mut reduced = cost;
            for i in 0..d {
                if basis[i] >= m {
                    reduced -= &a[i][j];
                }
            }
            if reduced.cmp0() == std::cmp::Ordering::Less {
                entering = Some(j);
                break; // Bland: smallest index
            }
        }
        let Some(enter) = entering else {
            // optimal; feasible iff all artificial basis values are zero
            return (0..d).all(|i| basis[i] < m || b[i].cmp0() == std::cmp::Ordering::Equal);
        };
        // ratio test (Bland: smallest basis index among ties)
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..d {
            if a[i][enter].cmp0() == std::cmp::Ordering::Greater {
                let ratio = Rational::from(&b[i] / &a[i][enter]);
                let better = match &best {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // unbounded phase-one cannot happen; treat as infeasible
            return false;
        };
        // pivot
        let piv = a[leave][enter].clone();
        for j in 0..ncols {
            a[leave][j] /= &piv;
        }
        b[leave] /= &piv;
        for i in 0..d {
            if i == leave {
                continue;
            }
            let factor = a[i][enter].clone();
            if factor.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for j in 0..ncols {
                let delta = Rational::from(&factor * &a[leave][j]);
                a[i][j] -= delta;
            }
            let delta = Rational::from(&factor * &b[leave]);
            b[i] -= delta;
        }
        basis[leave] = enter;
    }
}

/// Nonnegative least squares min ||G lambda - xi|| by Lawson-Hanson
/// active-set iteration over generator subsets.
fn nnls(gens: &[Vec<f64>], xi: &[f64]) -> Result<Vec<f64>> {
    let m = gens.len();
    let d = xi.len();
    let mut lambda = vec![0.0; m];
    let mut passive = vec![false; m];
    let max_iter = 6 * m + 30;
    let mut trace = Vec::new();

    let residual = |lambda: &[f64]| -> Vec<f64> {
        let mut r = xi.to_vec();
        for (g, l) in gens.iter().zip(lambda) {
            for (ri, gi) in r.iter_mut().zip(g) {
                *ri -= l * gi;
            }
        }
        r
    };

    for _ in 0..max_iter {
        let r = residual(&lambda);
        trace.push(norm(&r));
        // gradient of 1/2 ||r||^2 in -lambda direction: w_j = g_j . r
        let mut best_j = None;
        let mut best_w = 1e-12 * (1.0 + norm(xi));
        for j in 0..m {
            if passive[j] {
                continue;
            }
            let w: f64 = gens[j].iter().zip(&r).map(|(a, b)| a * b).sum();
            if w > best_w {
                best_w = w;
                best_j = Some(j);
            }
        }
        let Some(j) = best_j else {
            return Ok(lambda);
        };
        passive[j] = true;

        // inner loop: solve unconstrained LS on the passive set, clip
        loop {
            let idx: Vec<usize> = (0..m).filter(|&k| passive[k]).collect();
            let sol = solve_ls_subset(gens, xi, &idx);
            let Some(sol) = sol else {
                // singular subset; drop the most recent column
                passive[j] = false;
                break;
            };
            if sol.iter().all(|&v| v > 0.0) {
                for (k, &col) in idx.iter().enumerate() {
                    lambda[col] = sol[k];
                }
                for k in 0..m {
                    if !passive[k] {
                        lambda[k] = 0.0;
                    }
                }
                break;
            }
            // step toward sol until the first coordinate hits zero
            let mut alpha = 1.0f64;
            for (k, &col) in idx.iter().enumerate() {
                if sol[k] <= 0.0 {
                    let a = lambda[col] / (lambda[col] - sol[k]);
                    if a < alpha {
                        alpha = a;
                    }
                }
            }
            for (k, &col) in idx.iter().enumerate() {
                lambda[col] += alpha * (sol[k] - lambda[col]);
                if lambda[col] <= 1e-14 {
                    lambda[col] = 0.0;
                    passive[col] = false;
                }
            }
        }
        let _ = d;
    }
    Err(Error::ProjectionDidNotConverge {
        iterations: max_iter,
        trace,
    })
}

/// Least squares min ||sum_k s_k g_{idx_k} - xi|| via normal equations.
fn solve_ls_subset(gens: &[Vec<f64>], xi: &[f64], idx: &[usize]) -> Option<Vec<f64>> {
    let n = idx.len();
    let mut a = vec![vec![0.0; n + 1]; n];
    for (r, &ir) in idx.iter().enumerate() {
        for (c, &ic) in idx.iter().enumerate() {
            a[r][c] = gens[ir].iter().zip(&gens[ic]).map(|(x, y)| x * y).sum();
        }
        a[r][n] = gens[ir].iter().zip(xi).map(|(x, y)| x * y).sum();
    }
    // Gaussian elimination with partial pivoting
    for col in 0..n {
        let (piv_row, piv_val) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if piv_val < 1e-12 {
            return None;
        }
        a.swap(col, piv_row);
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col] / a[col][col];
            for c in col..=n {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    Some((0..n).map(|r| a[r][n] / a[r][r]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn orthant_projection_clamps() {
        let cone = Cone::orthant(2);
        assert_eq!(cone.project(&[1.0, -1.0]).unwrap(), vec![1.0, 0.0]);
    }

    #[test]
    fn light_cone_projects_polar_to_origin() {
        let cone = Cone::light_cone(1, Rational::from(1)).unwrap();
        assert_eq!(cone.project(&[0.0, -1.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn light_cone_boundary_projection() {
        let cone = Cone::light_cone(1, Rational::from(1)).unwrap();
        let p = cone.project(&[1.0, 0.0]).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-15);
        assert!((p[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn support_function_closed_forms() {
        let full = Cone::full(2);
        assert!((full.support_function(&[3.0, 4.0]).unwrap() - 5.0).abs() < 1e-15);

        let orthant = Cone::orthant(2);
        assert!((orthant.support_function(&[1.0, -1.0]).unwrap() - 1.0).abs() < 1e-15);

        let lc = Cone::light_cone(1, Rational::from(1)).unwrap();
        let mid = lc.support_function(&[1.0, 0.0]).unwrap();
        assert!((mid - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(lc.support_function(&[0.0, -1.0]).unwrap(), 0.0);
    }

    #[test]
    fn light_cone_branches_agree_at_ties() {
        let lc = Cone::light_cone(2, rat(3, 2)).unwrap();
        let c: f64 = 1.5;
        for r in [0.5f64, 1.0, 2.0] {
            // tie between top and middle branch: tau = r / c
            let tau = r / c;
            let top = (r * r + tau * tau).sqrt();
            let mid = (tau + c * r) / (c * c + 1.0).sqrt();
            assert!((top - mid).abs() < 1e-12);
            let h = lc.support_function(&[r, 0.0, tau]).unwrap();
            assert!((h - top).abs() < 1e-12);
            // tie between middle and zero branch: tau = -c r
            let h0 = lc.support_function(&[r, 0.0, -c * r]).unwrap();
            assert!(h0.abs() < 1e-12);
        }
    }

    #[test]
    fn weight_examples() {
        // Orthant d=1 at z = i: log 2 + 1
        let cone = Cone::orthant(1);
        let z = ComplexPoint::from_f64_pairs(&[(0.0, 1.0)], 128).unwrap();
        let p = cone.weight(&z).unwrap();
        assert!((p.mid_f64() - (2f64.ln() + 1.0)).abs() < 1e-14);

        // Full space d=1 at z = 3i: log 10 + 3
        let full = Cone::full(1);
        let z = ComplexPoint::from_f64_pairs(&[(0.0, 3.0)], 128).unwrap();
        let p = full.weight(&z).unwrap();
        assert!((p.mid_f64() - (10f64.ln() + 3.0)).abs() < 1e-13);

        // real z: H(0) = 0
        let z = ComplexPoint::from_f64_pairs(&[(7.0, 0.0)], 128).unwrap();
        let p = full.weight(&z).unwrap();
        assert!((p.mid_f64() - 50f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn weight_is_nonnegative() {
        let cone = Cone::orthant(2);
        for (re, im) in [(0.0, 0.0), (0.1, -0.5), (-3.0, 2.0)] {
            let z = ComplexPoint::from_f64_pairs(&[(re, im), (im, re)], 128).unwrap();
            let p = cone.weight(&z).unwrap();
            assert!(p.upper() >= 0.0);
        }
    }

    #[test]
    fn hessian_examples() {
        // z = 0: quadratic form is ||w||^2
        let z = ComplexPoint::from_f64_pairs(&[(0.0, 0.0), (0.0, 0.0)], 128).unwrap();
        let w = ComplexPoint::from_f64_pairs(&[(1.0, 2.0), (0.5, 0.0)], 128).unwrap();
        let q = hessian_quad_form(&z, &w).unwrap();
        assert!((q.mid_f64() - (1.0 + 4.0 + 0.25)).abs() < 1e-14);

        // d=1, z = w = 1: 1/2 - 1/4 = 1/4
        let z = ComplexPoint::from_f64_pairs(&[(1.0, 0.0)], 128).unwrap();
        let q = hessian_quad_form(&z, &z).unwrap();
        assert!((q.mid_f64() - 0.25).abs() < 1e-14);

        // w = z != 0: ||z||^2/(1+||z||^2)^2
        let z = ComplexPoint::from_f64_pairs(&[(1.0, 2.0), (0.0, -1.0)], 128).unwrap();
        let q = hessian_quad_form(&z, &z).unwrap();
        let zs = 6.0f64;
        assert!((q.mid_f64() - zs / (1.0 + zs).powi(2)).abs() < 1e-13);
    }

    #[test]
    fn locality_bound_near_origin() {
        let cone = Cone::full(2);
        let z = ComplexPoint::from_f64_pairs(&[(0.0, 0.0), (0.0, 0.0)], 128).unwrap();
        let zeta = ComplexPoint::from_f64_pairs(&[(0.5, 0.5), (0.0, 0.5)], 128).unwrap();
        let report = check_weight_locality(&cone, &[(z, zeta)], 0.0, 0.0).unwrap();
        assert_eq!(report.checked, 1);
        assert!(report.violations.is_empty());
        assert!(report.worst_slack > 0.0);
    }

    #[test]
    fn exact_membership() {
        let orthant = Cone::orthant(1);
        assert!(orthant.contains_exact(&[rat(1, 1)]).unwrap());
        assert!(!orthant.contains_exact(&[rat(-1, 1)]).unwrap());

        let lc = Cone::light_cone(2, Rational::from(1)).unwrap();
        assert!(lc.contains_exact(&[rat(1, 1), rat(0, 1), rat(2, 1)]).unwrap());
        assert!(!lc.contains_exact(&[rat(3, 1), rat(0, 1), rat(2, 1)]).unwrap());
    }

    #[test]
    fn polyhedral_membership_and_projection() {
        // first quadrant as a polyhedral cone
        let quad = Cone::polyhedral(
            2,
            vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]],
        )
        .unwrap();
        assert!(quad.contains_exact(&[rat(2, 1), rat(3, 1)]).unwrap());
        assert!(!quad.contains_exact(&[rat(-1, 1), rat(3, 1)]).unwrap());

        let p = quad.project(&[1.0, -2.0]).unwrap();
        assert!((p[0] - 1.0).abs() < 1e-12 && p[1].abs() < 1e-12);

        // matches the orthant closed form
        let orthant = Cone::orthant(2);
        for xi in [[1.5, -0.3], [-1.0, -2.0], [0.7, 0.9]] {
            let a = quad.support_function(&xi).unwrap();
            let b = orthant.support_function(&xi).unwrap();
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn moreau_consistency_orthant_and_light_cone() {
        let orthant = Cone::orthant(3);
        let lc = Cone::light_cone(2, rat(1, 1)).unwrap();
        let samples: [[f64; 3]; 4] = [
            [0.3, -0.8, 0.5],
            [-1.0, -1.0, -1.0],
            [2.0, 0.1, -0.4],
            [0.0, 0.0, 1.0],
        ];
        for xi in samples {
            for cone in [&orthant, &lc] {
                let closed = cone.support_function(&xi).unwrap();
                let proj = cone.project(&xi).unwrap();
                let via_proj = norm(&proj);
                assert!(
                    (closed - via_proj).abs() <= 1e-12 * (1.0 + closed.abs()),
                    "{closed} vs {via_proj}"
                );
            }
        }
    }

    #[test]
    fn axioms_hold_on_simple_samples() {
        let cone = Cone::orthant(2);
        let samples = vec![
            (vec![0.0, 0.0], vec![0.0, 0.0], 0.0),
            (vec![1.0, -1.0], vec![-1.0, 1.0], 2.0),
            (vec![0.5, 0.25], vec![1.0, -3.0], 0.5),
        ];
        let rep = check_support_fn_axioms(&cone, &samples).unwrap();
        assert!(rep.worst_subadditivity_violation <= 1e-12);
        assert!(rep.worst_homogeneity_violation <= 1e-12);
    }
}
