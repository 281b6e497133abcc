//! Exact symbolic algebra for compactly supported distributions.
//!
//! The representable class is finite sums of derivatives of shifted point
//! masses (any dimension) plus an optional piecewise-polynomial density in
//! dimension one. The class is closed under addition, scaling and
//! convolution, and every coefficient, location and breakpoint is an exact
//! rational, so equality of distributions is decidable.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exact::{BoundingBox, ExactComplex};
use crate::poly::{BiPoly, Poly};
use rug::Rational;

/// Multi-index of derivative orders, one entry per coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zeros(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order |k| = k_1 + ... + k_d.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// One term coeff * d^deriv delta_location.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointMassTerm {
    pub coeff: ExactComplex,
    pub location: Vec<Rational>,
    pub deriv: MultiIndex,
}

/// Piecewise-polynomial density on the line; pieces are stated in the
/// global coordinate, piece `i` living on `[breakpoints[i], breakpoints[i+1]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PiecewisePolyDensity {
    breakpoints: Vec<Rational>,
    pieces: Vec<Poly>,
}

impl PiecewisePolyDensity {
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<Poly>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidInput(
                "density needs at least two breakpoints".into(),
            ));
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidInput(format!(
                "{} pieces do not fit {} breakpoints",
                pieces.len(),
                breakpoints.len()
            )));
        }
        for w in breakpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(
                    "breakpoints must be strictly increasing".into(),
                ));
            }
        }
        Ok(PiecewisePolyDensity {
            breakpoints,
            pieces,
        })
    }

    pub fn from_rational_pieces(
        breakpoints: Vec<Rational>,
        pieces: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        Self::new(
            breakpoints,
            pieces.into_iter().map(Poly::from_rationals).collect(),
        )
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn support(&self) -> (Rational, Rational) {
        (
            self.breakpoints[0].clone(),
            self.breakpoints[self.breakpoints.len() - 1].clone(),
        )
    }

    /// Drop zero pieces at the ends and merge adjacent equal polynomials.
    fn canonicalize(mut self) -> Option<Self> {
        while !self.pieces.is_empty() && self.pieces[0].is_zero() {
            self.pieces.remove(0);
            self.breakpoints.remove(0);
        }
        while self.pieces.last().map_or(false, |p| p.is_zero()) {
            self.pieces.pop();
            self.breakpoints.pop();
        }
        if self.pieces.is_empty() {
            return None;
        }
        let mut bps = vec![self.breakpoints[0].clone()];
        let mut pieces: Vec<Poly> = Vec::new();
        for (i, piece) in self.pieces.into_iter().enumerate() {
            if pieces.last().map_or(false, |p| *p == piece) {
                *bps.last_mut().unwrap() = self.breakpoints[i + 1].clone();
                continue;
            }
            pieces.push(piece);
            bps.push(self.breakpoints[i + 1].clone());
        }
        Some(PiecewisePolyDensity {
            breakpoints: bps,
            pieces,
        })
    }

    fn piece_at(&self, x: &Rational) -> Poly {
        if *x < self.breakpoints[0] || *x >= self.breakpoints[self.breakpoints.len() - 1] {
            return Poly::zero();
        }
        for i in 0..self.pieces.len() {
            if *x >= self.breakpoints[i] && *x < self.breakpoints[i + 1] {
                return self.pieces[i].clone();
            }
        }
        Poly::zero()
    }

    fn add_opt(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => {
                let mut grid: Vec<Rational> = a
                    .breakpoints
                    .iter()
                    .chain(b.breakpoints.iter())
                    .cloned()
                    .collect();
                grid.sort();
                grid.dedup();
                let mut pieces = Vec::with_capacity(grid.len() - 1);
                for w in grid.windows(2) {
                    let mid = Rational::from(&w[0] + &w[1]) / Rational::from(2);
                    pieces.push(a.piece_at(&mid).add(&b.piece_at(&mid)));
                }
                PiecewisePolyDensity {
                    breakpoints: grid,
                    pieces,
                }
                .canonicalize()
            }
        }
    }

    fn shift(&self, s: &Rational) -> Self {
        let minus_s = Rational::from(-s);
        PiecewisePolyDensity {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|b| Rational::from(b + s))
                .collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| p.compose_shift(&minus_s))
                .collect(),
        }
    }

    fn scale(&self, c: &ExactComplex) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        Some(PiecewisePolyDensity {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
        })
    }

    /// Distributional derivative: piecewise derivative plus a jump delta at
    /// every breakpoint where the density is discontinuous.
    pub fn distributional_derivative(&self) -> Distribution {
        let deriv_pieces: Vec<Poly> = self.pieces.iter().map(|p| p.derivative()).collect();
        let density = PiecewisePolyDensity {
            breakpoints: self.breakpoints.clone(),
            pieces: deriv_pieces,
        }
        .canonicalize();
        let mut terms = Vec::new();
        for (i, b) in self.breakpoints.iter().enumerate() {
            let left = if i == 0 {
                ExactComplex::zero()
            } else {
                self.pieces[i - 1].eval(b)
            };
            let right = if i == self.pieces.len() {
                ExactComplex::zero()
            } else {
                self.pieces[i].eval(b)
            };
            let jump = right.add(&left.neg());
            if !jump.is_zero() {
                terms.push(PointMassTerm {
                    coeff: jump,
                    location: vec![b.clone()],
                    deriv: MultiIndex::zeros(1),
                });
            }
        }
        Distribution::assemble(1, terms, density)
    }

    /// Exact convolution of two piecewise-polynomial densities.
    fn convolve(&self, other: &Self) -> Option<Self> {
        struct PairData {
            lo: Rational,       // a0 + b0
            hi: Rational,       // a1 + b1
            a0: Rational,
            a1: Rational,
            b0: Rational,
            b1: Rational,
            anti: BiPoly, // antiderivative in x of p(x) q(t-x)
        }
        let mut pairs = Vec::new();
        let mut grid: Vec<Rational> = Vec::new();
        for i in 0..self.pieces.len() {
            for j in 0..other.pieces.len() {
                if self.pieces[i].is_zero() || other.pieces[j].is_zero() {
                    continue;
                }
                let a0 = self.breakpoints[i].clone();
                let a1 = self.breakpoints[i + 1].clone();
                let b0 = other.breakpoints[j].clone();
                let b1 = other.breakpoints[j + 1].clone();
                let integrand = BiPoly::from_poly_x(&self.pieces[i])
                    .mul(&BiPoly::from_poly_in_t_minus_x(&other.pieces[j]));
                let anti = integrand.antiderivative_x();
                let corners = [
                    Rational::from(&a0 + &b0),
                    Rational::from(&a0 + &b1),
                    Rational::from(&a1 + &b0),
                    Rational::from(&a1 + &b1),
                ];
                grid.extend(corners.iter().cloned());
                pairs.push(PairData {
                    lo: corners[0].clone(),
                    hi: corners[3].clone(),
                    a0,
                    a1,
                    b0,
                    b1,
                    anti,
                });
            }
        }
        if pairs.is_empty() {
            return None;
        }
        grid.sort();
        grid.dedup();
        let one = ExactComplex::one();
        let mut pieces = Vec::with_capacity(grid.len() - 1);
        for w in grid.windows(2) {
            let tm = Rational::from(&w[0] + &w[1]) / Rational::from(2);
            let mut acc = Poly::zero();
            for pd in &pairs {
                if tm <= pd.lo || tm >= pd.hi {
                    continue;
                }
                // integration bounds in x: [max(a0, t - b1), min(a1, t - b0)],
                // each a fixed affine form of t on this grid interval
                let lower_is_const = Rational::from(&tm - &pd.b1) <= pd.a0;
                let upper_is_const = Rational::from(&tm - &pd.b0) >= pd.a1;
                let upper = if upper_is_const {
                    pd.anti.eval_x_linear(
                        &ExactComplex::new(pd.a1.clone(), Rational::new()),
                        &ExactComplex::zero(),
                    )
                } else {
                    pd.anti.eval_x_linear(
                        &ExactComplex::new(Rational::from(-&pd.b0), Rational::new()),
                        &one,
                    )
                };
                let lower = if lower_is_const {
                    pd.anti.eval_x_linear(
                        &ExactComplex::new(pd.a0.clone(), Rational::new()),
                        &ExactComplex::zero(),
                    )
                } else {
                    pd.anti.eval_x_linear(
                        &ExactComplex::new(Rational::from(-&pd.b1), Rational::new()),
                        &one,
                    )
                };
                acc = acc.add(&upper.add(&lower.neg()));
            }
            pieces.push(acc);
        }
        PiecewisePolyDensity {
            breakpoints: grid,
            pieces,
        }
        .canonicalize()
    }

    /// Pointwise value (one-sided from the right, except at the top endpoint).
    pub fn eval(&self, x: &Rational) -> ExactComplex {
        let top = &self.breakpoints[self.breakpoints.len() - 1];
        if x == top {
            return self.pieces.last().unwrap().eval(x);
        }
        self.piece_at(x).eval(x)
    }
}

/// A compactly supported distribution in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Distribution {
    dimension: usize,
    terms: Vec<PointMassTerm>,
    density: Option<PiecewisePolyDensity>,
}

impl Distribution {
    pub fn zero(dimension: usize) -> Self {
        assert!(dimension >= 1);
        Distribution {
            dimension,
            terms: Vec::new(),
            density: None,
        }
    }

    /// The identity of the convolution ring.
    pub fn delta(dimension: usize) -> Self {
        Self::delta_at(vec![Rational::new(); dimension])
    }

    pub fn delta_at(location: Vec<Rational>) -> Self {
        let d = location.len();
        Self::point_mass(ExactComplex::one(), location, MultiIndex::zeros(d))
    }

    pub fn point_mass(coeff: ExactComplex, location: Vec<Rational>, deriv: MultiIndex) -> Self {
        assert!(!location.is_empty());
        assert_eq!(location.len(), deriv.len());
        let dimension = location.len();
        Self::assemble(
            dimension,
            vec![PointMassTerm {
                coeff,
                location,
                deriv,
            }],
            None,
        )
    }

    /// Indicator density of [a, b] in dimension one.
    pub fn indicator(a: Rational, b: Rational) -> Result<Self> {
        let density =
            PiecewisePolyDensity::new(vec![a, b], vec![Poly::constant(ExactComplex::one())])?;
        Ok(Self::assemble(1, Vec::new(), Some(density)))
    }

    pub fn from_density(density: PiecewisePolyDensity) -> Self {
        Self::assemble(1, Vec::new(), density.canonicalize())
    }

    /// Build the canonical form: terms sorted and merged on
    /// (location, derivative order), zero coefficients dropped.
    pub fn assemble(
        dimension: usize,
        terms: Vec<PointMassTerm>,
        density: Option<PiecewisePolyDensity>,
    ) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| {
            a.location
                .cmp(&b.location)
                .then_with(|| a.deriv.cmp(&b.deriv))
        });
        let mut merged: Vec<PointMassTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = merged.last_mut() {
                if last.location == t.location && last.deriv == t.deriv {
                    last.coeff = last.coeff.add(&t.coeff);
                    continue;
                }
            }
            merged.push(t);
        }
        merged.retain(|t| !t.coeff.is_zero());
        let density = density.and_then(|d| d.canonicalize());
        if density.is_some() {
            assert_eq!(dimension, 1, "densities only exist in dimension one");
        }
        Distribution {
            dimension,
            terms: merged,
            density,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> &[PointMassTerm] {
        &self.terms
    }

    pub fn density(&self) -> Option<&PiecewisePolyDensity> {
        self.density.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.density.is_none()
    }

    fn check_dim(&self, other: &Distribution) -> Result<()> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: other.dimension,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Distribution) -> Result<Distribution> {
        self.check_dim(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        let density =
            PiecewisePolyDensity::add_opt(self.density.clone(), other.density.clone());
        Ok(Self::assemble(self.dimension, terms, density))
    }

    pub fn sub(&self, other: &Distribution) -> Result<Distribution> {
        self.add(&other.scale(&ExactComplex::from_int(-1)))
    }

    pub fn scale(&self, lambda: &ExactComplex) -> Distribution {
        if lambda.is_zero() {
            return Distribution::zero(self.dimension);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| PointMassTerm {
                coeff: t.coeff.mul(lambda),
                location: t.location.clone(),
                deriv: t.deriv.clone(),
            })
            .collect();
        let density = self.density.as_ref().and_then(|d| d.scale(lambda));
        Self::assemble(self.dimension, terms, density)
    }

    /// Derivative in the single coordinate (dimension one only).
    pub fn derivative_1d(&self) -> Result<Distribution> {
        if self.dimension != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: self.dimension,
            });
        }
        let mut out = Distribution::zero(1);
        for t in &self.terms {
            let bumped = Distribution::point_mass(
                t.coeff.clone(),
                t.location.clone(),
                MultiIndex::new(vec![t.deriv.entries()[0] + 1]),
            );
            out = out.add(&bumped)?;
        }
        if let Some(d) = &self.density {
            out = out.add(&d.distributional_derivative())?;
        }
        Ok(out)
    }

    pub fn convolve(&self, other: &Distribution) -> Result<Distribution> {
        self.check_dim(other)?;
        let d = self.dimension;
        let mut out = Distribution::zero(d);

        // point x point
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                terms.push(PointMassTerm {
                    coeff: a.coeff.mul(&b.coeff),
                    location: a
                        .location
                        .iter()
                        .zip(&b.location)
                        .map(|(x, y)| Rational::from(x + y))
                        .collect(),
                    deriv: a.deriv.add(&b.deriv),
                });
            }
        }
        out = out.add(&Self::assemble(d, terms, None))?;

        // point x density (both orientations)
        for (terms, density) in [
            (&self.terms, other.density.as_ref()),
            (&other.terms, self.density.as_ref()),
        ] {
            let Some(density) = density else { continue };
            for t in terms {
                if d != 1 {
                    return Err(Error::UnsupportedDensityConvolution);
                }
                let shifted = density.shift(&t.location[0]);
                let mut part = Distribution::assemble(1, Vec::new(), shifted.scale(&t.coeff));
                for _ in 0..t.deriv.order() {
                    part = part.derivative_1d()?;
                }
                out = out.add(&part)?;
            }
        }

        // density x density
        if let (Some(a), Some(b)) = (self.density.as_ref(), other.density.as_ref()) {
            if d != 1 {
                return Err(Error::UnsupportedDensityConvolution);
            }
            out = out.add(&Distribution::assemble(1, Vec::new(), a.convolve(b)))?;
        }

        Ok(out)
    }

    /// Smallest axis-aligned box containing the support; `None` for zero.
    pub fn support_hull(&self) -> Option<BoundingBox> {
        let mut hull: Option<BoundingBox> = None;
        for t in &self.terms {
            match &mut hull {
                None => hull = Some(BoundingBox::point(&t.location)),
                Some(h) => h.expand_to(&t.location),
            }
        }
        if let Some(den) = &self.density {
            let (lo, hi) = den.support();
            match &mut hull {
                None => {
                    let mut h = BoundingBox::point(&[lo]);
                    h.expand_to(&[hi]);
                    hull = Some(h);
                }
                Some(h) => {
                    h.expand_to(&[lo]);
                    h.expand_to(&[hi]);
                }
            }
        }
        hull
    }

    /// Exact test that the support lies in the cone. For the density part,
    /// checking the support interval endpoints suffices by convexity.
    pub fn in_cone(&self, cone: &Cone) -> Result<bool> {
        if cone.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: cone.dimension(),
            });
        }
        for t in &self.terms {
            if !cone.contains_exact(&t.location)? {
                return Ok(false);
            }
        }
        if let Some(den) = &self.density {
            let (lo, hi) = den.support();
            if !cone.contains_exact(&[lo])? || !cone.contains_exact(&[hi])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn delta_at_1d(x: (i64, i64)) -> Distribution {
        Distribution::delta_at(vec![rat(x.0, x.1)])
    }

    fn eval_density_f64(d: &PiecewisePolyDensity, x: f64) -> f64 {
        let bps: Vec<f64> = d.breakpoints().iter().map(|b| b.to_f64()).collect();
        for i in 0..d.pieces().len() {
            if x >= bps[i] && x <= bps[i + 1] {
                let mut acc = 0.0;
                for c in d.pieces()[i].0.iter().rev() {
                    acc = acc * x + c.re.to_f64();
                }
                return acc;
            }
        }
        0.0
    }

    #[test]
    fn add_cancels_to_zero() {
        let delta = Distribution::delta(1);
        let sum = delta.add(&delta.scale(&ExactComplex::from_int(-1))).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn add_cancels_shifted_term() {
        let c = rat(11, 100);
        let f = Distribution::delta(1)
            .sub(&delta_at_1d((11, 100)))
            .unwrap();
        let sum = f.add(&Distribution::delta_at(vec![c])).unwrap();
        assert_eq!(sum, Distribution::delta(1));
    }

    #[test]
    fn add_merges_densities() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let two = ind.add(&ind).unwrap();
        let den = two.density().unwrap();
        assert_eq!(den.pieces().len(), 1);
        assert_eq!(den.pieces()[0].eval(&rat(1, 2)), ExactComplex::from_int(2));
    }

    #[test]
    fn scale_identity_and_negation() {
        let delta = Distribution::delta(1);
        assert_eq!(delta.scale(&ExactComplex::one()), delta);
        let f = delta.sub(&delta_at_1d((1, 1))).unwrap();
        let g = f.scale(&ExactComplex::from_int(-1));
        let expected = delta_at_1d((1, 1)).sub(&Distribution::delta(1)).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn scale_density_by_two() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let two = ind.scale(&ExactComplex::from_int(2));
        assert_eq!(
            two.density().unwrap().pieces()[0].eval(&rat(1, 2)),
            ExactComplex::from_int(2)
        );
    }

    #[test]
    fn convolve_shifts_compose() {
        let a = delta_at_1d((1, 2));
        let b = delta_at_1d((1, 3));
        let ab = a.convolve(&b).unwrap();
        assert_eq!(ab, delta_at_1d((5, 6)));
    }

    #[test]
    fn delta_is_identity() {
        let delta = Distribution::delta(1);
        let f = delta.sub(&delta_at_1d((2, 1))).unwrap();
        assert_eq!(delta.convolve(&f).unwrap(), f);
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(delta.convolve(&ind).unwrap(), ind);
    }

    #[test]
    fn indicator_self_convolution_is_hat() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let hat = ind.convolve(&ind).unwrap();
        let den = hat.density().unwrap();
        // exact: x on [0,1], 2 - x on [1,2]
        assert_eq!(den.breakpoints().to_vec(), vec![rat(0, 1), rat(1, 1), rat(2, 1)]);
        assert_eq!(den.pieces()[0].eval(&rat(1, 2)), ExactComplex::new(rat(1, 2), Rational::new()));
        assert_eq!(den.pieces()[1].eval(&rat(3, 2)), ExactComplex::new(rat(1, 2), Rational::new()));

        // quadrature oracle on a fine grid
        for k in 0..=200 {
            let t = 2.0 * (k as f64) / 200.0;
            let n = 2000;
            let mut quad = 0.0;
            for j in 0..n {
                let x = (j as f64 + 0.5) / (n as f64);
                let y = t - x;
                if (0.0..=1.0).contains(&y) {
                    quad += 1.0 / (n as f64);
                }
            }
            let exact = eval_density_f64(den, t);
            assert!(
                (quad - exact).abs() < 2e-3,
                "hat mismatch at t={t}: {quad} vs {exact}"
            );
        }
        // and the exact values on the grid agree with the closed form to 1e-12
        for k in 0..=200 {
            let t = 2.0 * (k as f64) / 200.0;
            let closed = if t <= 1.0 { t } else { 2.0 - t };
            assert!((eval_density_f64(den, t) - closed).abs() <= 1e-12);
        }
    }

    #[test]
    fn indicator_derivative_is_boundary_deltas() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let d = ind.density().unwrap().distributional_derivative();
        let expected = Distribution::delta(1).sub(&delta_at_1d((1, 1))).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn hat_derivative_has_no_deltas() {
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let hat = ind.convolve(&ind).unwrap();
        let d = hat.density().unwrap().distributional_derivative();
        assert!(d.terms().is_empty());
        let den = d.density().unwrap();
        assert_eq!(den.eval(&rat(1, 2)), ExactComplex::one());
        assert_eq!(den.eval(&rat(3, 2)), ExactComplex::from_int(-1));
    }

    #[test]
    fn x_squared_piece_derivative() {
        // x^2 on [0,1]: derivative density 2x, jump -delta_1, nothing at 0
        let den = PiecewisePolyDensity::new(
            vec![rat(0, 1), rat(1, 1)],
            vec![Poly::from_rationals(vec![rat(0, 1), rat(0, 1), rat(1, 1)])],
        )
        .unwrap();
        let d = den.distributional_derivative();
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.terms()[0].location, vec![rat(1, 1)]);
        assert_eq!(d.terms()[0].coeff, ExactComplex::from_int(-1));
        assert_eq!(
            d.density().unwrap().eval(&rat(1, 2)),
            ExactComplex::one()
        );
    }

    #[test]
    fn support_hull_examples() {
        let delta = Distribution::delta(3);
        let h = delta.support_hull().unwrap();
        assert_eq!(h.lo, vec![rat(0, 1); 3]);
        assert_eq!(h.hi, vec![rat(0, 1); 3]);

        let f = Distribution::delta(1).sub(&delta_at_1d((11, 100))).unwrap();
        let h = f.support_hull().unwrap();
        assert_eq!(h.lo, vec![rat(0, 1)]);
        assert_eq!(h.hi, vec![rat(11, 100)]);

        let g = Distribution::indicator(rat(0, 1), rat(1, 1))
            .unwrap()
            .add(&delta_at_1d((3, 1)))
            .unwrap();
        let h = g.support_hull().unwrap();
        assert_eq!(h.lo, vec![rat(0, 1)]);
        assert_eq!(h.hi, vec![rat(3, 1)]);

        assert!(Distribution::zero(2).support_hull().is_none());
    }

    #[test]
    fn support_additivity_under_convolution() {
        let f = Distribution::delta(1).sub(&delta_at_1d((1, 2))).unwrap();
        let g = delta_at_1d((2, 1));
        let fg = f.convolve(&g).unwrap();
        let hf = f.support_hull().unwrap();
        let hg = g.support_hull().unwrap();
        let sum = hf.minkowski_sum(&hg);
        let hull = fg.support_hull().unwrap();
        assert!(sum.contains(&hull.lo) && sum.contains(&hull.hi));
    }

    #[test]
    fn derivative_order_convolution() {
        // delta' * delta' = second-derivative delta
        let dp = Distribution::point_mass(
            ExactComplex::one(),
            vec![rat(0, 1)],
            MultiIndex::new(vec![1]),
        );
        let out = dp.convolve(&dp).unwrap();
        assert_eq!(out.terms().len(), 1);
        assert_eq!(out.terms()[0].deriv.order(), 2);
    }

    #[test]
    fn derivative_point_mass_against_density() {
        // delta' * 1_{[0,1]} = delta_0 - delta_1 (derivative of the indicator)
        let dp = Distribution::point_mass(
            ExactComplex::one(),
            vec![rat(0, 1)],
            MultiIndex::new(vec![1]),
        );
        let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
        let out = dp.convolve(&ind).unwrap();
        let expected = Distribution::delta(1).sub(&delta_at_1d((1, 1))).unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = Distribution::delta(1);
        let b = Distribution::delta(2);
        assert!(a.add(&b).is_err());
        assert!(a.convolve(&b).is_err());
    }
}
