//! Exact polynomial arithmetic over complex rationals.
//!
//! Univariate polynomials back the piecewise densities; the small bivariate
//! layer exists so density-density convolution can be carried out in closed
//! form (integrate p(x) q(t-x) over the overlap, exactly).

use crate::exact::ExactComplex;
use rug::Rational;

/// Univariate polynomial, ascending coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(pub Vec<ExactComplex>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: ExactComplex) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Poly(coeffs
            .into_iter()
            .map(|r| ExactComplex::new(r, Rational::new()))
            .collect())
        .trimmed()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn trimmed(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(ExactComplex::zero);
            let b = other.0.get(i).cloned().unwrap_or_else(ExactComplex::zero);
            out.push(a.add(&b));
        }
        Poly(out).trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| c.neg()).collect())
    }

    pub fn scale(&self, s: &ExactComplex) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ExactComplex::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly(out).trimmed()
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() - 1);
        for (i, c) in self.0.iter().enumerate().skip(1) {
            let k = ExactComplex::new(Rational::from(i as i64), Rational::new());
            out.push(c.mul(&k));
        }
        Poly(out).trimmed()
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(ExactComplex::zero());
        for (i, c) in self.0.iter().enumerate() {
            let inv = ExactComplex::new(Rational::from((1, (i + 1) as i64)), Rational::new());
            out.push(c.mul(&inv));
        }
        Poly(out).trimmed()
    }

    pub fn eval(&self, x: &Rational) -> ExactComplex {
        let mut acc = ExactComplex::zero();
        for c in self.0.iter().rev() {
            let xr = ExactComplex::new(x.clone(), Rational::new());
            acc = acc.mul(&xr).add(c);
        }
        acc
    }

    /// p(x + s): shift of the argument.
    pub fn compose_shift(&self, s: &Rational) -> Poly {
        self.compose_linear(&ExactComplex::new(s.clone(), Rational::new()), &ExactComplex::one())
    }

    /// p(a + b u) as a polynomial in u.
    pub fn compose_linear(&self, a: &ExactComplex, b: &ExactComplex) -> Poly {
        // Horner: p(a + bu) = c_n; repeatedly multiply by (a + bu) and add next
        let mut acc = Poly::zero();
        let lin = Poly(vec![a.clone(), b.clone()]).trimmed();
        for c in self.0.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Exact integral over [a, b].
    pub fn integral(&self, a: &Rational, b: &Rational) -> ExactComplex {
        let anti = self.antiderivative();
        anti.eval(b).add(&anti.eval(a).neg())
    }
}

/// Bivariate polynomial in (x, t); coefficient of x^i t^j at `[i][j]`.
#[derive(Clone, Debug)]
pub struct BiPoly(pub Vec<Vec<ExactComplex>>);

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly(Vec::new())
    }

    /// Embed a univariate polynomial in x.
    pub fn from_poly_x(p: &Poly) -> Self {
        BiPoly(p.0.iter().map(|c| vec![c.clone()]).collect())
    }

    /// q(t - x) as a bivariate polynomial.
    pub fn from_poly_in_t_minus_x(q: &Poly) -> Self {
        // (t - x)^j expanded via Pascal's triangle
        let deg = q.0.len();
        if deg == 0 {
            return BiPoly::zero();
        }
        let mut out = vec![vec![ExactComplex::zero(); deg]; deg];
        // binom[j][l] = C(j, l)
        let mut binom: Vec<Vec<Rational>> = vec![vec![Rational::from(1)]];
        for j in 1..deg {
            let prev = &binom[j - 1];
            let mut row = vec![Rational::from(1)];
            for l in 1..j {
                row.push(Rational::from(&prev[l - 1] + &prev[l]));
            }
            row.push(Rational::from(1));
            binom.push(row);
        }
        for (j, qj) in q.0.iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            for l in 0..=j {
                // coefficient of t^{j-l} (-x)^l
                let mut c = ExactComplex::new(binom[j][l].clone(), Rational::new());
                if l % 2 == 1 {
                    c = c.neg();
                }
                out[l][j - l] = out[l][j - l].add(&qj.mul(&c));
            }
        }
        BiPoly(out)
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return BiPoly::zero();
        }
        let ni = self.0.len() + other.0.len() - 1;
        let nj = self.0.iter().map(|r| r.len()).max().unwrap_or(0)
            + other.0.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = vec![vec![ExactComplex::zero(); nj]; ni];
        for (i1, row1) in self.0.iter().enumerate() {
            for (j1, c1) in row1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, row2) in other.0.iter().enumerate() {
                    for (j2, c2) in row2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        out[i1 + i2][j1 + j2] = out[i1 + i2][j1 + j2].add(&c1.mul(c2));
                    }
                }
            }
        }
        BiPoly(out)
    }

    /// Antiderivative in x with zero constant.
    pub fn antiderivative_x(&self) -> BiPoly {
        if self.0.is_empty() {
            return BiPoly::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(vec![ExactComplex::zero()]);
        for (i, row) in self.0.iter().enumerate() {
            let inv = ExactComplex::new(Rational::from((1, (i + 1) as i64)), Rational::new());
            out.push(row.iter().map(|c| c.mul(&inv)).collect());
        }
        BiPoly(out)
    }

    /// Substitute x = a + b t; the result is univariate in t.
    pub fn eval_x_linear(&self, a: &ExactComplex, b: &ExactComplex) -> Poly {
        // Horner in x with Poly-in-t coefficients
        let lin = Poly(vec![a.clone(), b.clone()]).trimmed();
        let mut acc = Poly::zero();
        for row in self.0.iter().rev() {
            let coeff_t = Poly(row.clone()).trimmed();
            acc = acc.mul(&lin).add(&coeff_t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn c(n: i64, d: i64) -> ExactComplex {
        ExactComplex::new(rat(n, d), Rational::new())
    }

    #[test]
    fn compose_linear_matches_eval() {
        // p(x) = 1 + 2x + 3x^2 at x = 5 via compose with constant
        let p = Poly(vec![c(1, 1), c(2, 1), c(3, 1)]);
        let q = p.compose_linear(&c(5, 1), &ExactComplex::zero());
        assert_eq!(q.0.len(), 1);
        assert_eq!(q.0[0], c(1 + 10 + 75, 1));
    }

    #[test]
    fn integral_of_x_squared() {
        let p = Poly(vec![ExactComplex::zero(), ExactComplex::zero(), c(1, 1)]);
        let v = p.integral(&rat(0, 1), &rat(1, 1));
        assert_eq!(v, c(1, 3));
    }

    #[test]
    fn bivariate_substitution_round_trip() {
        // m(x,t) = x * (t - x); integral in x from 0 to t is t^3/6
        let x = Poly(vec![ExactComplex::zero(), c(1, 1)]);
        let m = BiPoly::from_poly_x(&x).mul(&BiPoly::from_poly_in_t_minus_x(&x));
        let anti = m.antiderivative_x();
        let upper = anti.eval_x_linear(&ExactComplex::zero(), &c(1, 1));
        let lower = anti.eval_x_linear(&ExactComplex::zero(), &ExactComplex::zero());
        let h = upper.add(&lower.neg());
        assert_eq!(h.0.len(), 4);
        assert_eq!(h.0[3], c(1, 6));
    }
}
