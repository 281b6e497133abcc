//! Exact rational scalars shared by the symbolic algebra.

use rug::ops::Pow;
use rug::{Integer, Rational};
use std::fmt;

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: Rational,
    pub im: Rational,
}

impl ExactComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        ExactComplex { re, im }
    }

    pub fn zero() -> Self {
        ExactComplex {
            re: Rational::new(),
            im: Rational::new(),
        }
    }

    pub fn one() -> Self {
        ExactComplex {
            re: Rational::from(1),
            im: Rational::new(),
        }
    }

    pub fn i() -> Self {
        ExactComplex {
            re: Rational::new(),
            im: Rational::from(1),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ExactComplex {
            re: Rational::from(n),
            im: Rational::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.cmp0() == std::cmp::Ordering::Equal && self.im.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn add(&self, other: &Self) -> Self {
        ExactComplex {
            re: Rational::from(&self.re + &other.re),
            im: Rational::from(&self.im + &other.im),
        }
    }

    pub fn neg(&self) -> Self {
        ExactComplex {
            re: Rational::from(-&self.re),
            im: Rational::from(-&self.im),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = Rational::from(&self.re * &other.re) - Rational::from(&self.im * &other.im);
        let im = Rational::from(&self.re * &other.im) + Rational::from(&self.im * &other.re);
        ExactComplex { re, im }
    }

    /// |self|^2 as an exact rational.
    pub fn abs_sq(&self) -> Rational {
        Rational::from(&self.re * &self.re) + Rational::from(&self.im * &self.im)
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

/// Construct a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

/// Axis-aligned bounding box with exact rational corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
}

impl BoundingBox {
    pub fn point(p: &[Rational]) -> Self {
        BoundingBox {
            lo: p.to_vec(),
            hi: p.to_vec(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn expand_to(&mut self, p: &[Rational]) {
        for (i, x) in p.iter().enumerate() {
            if *x < self.lo[i] {
                self.lo[i] = x.clone();
            }
            if *x > self.hi[i] {
                self.hi[i] = x.clone();
            }
        }
    }

    pub fn union(&self, other: &BoundingBox) -> BoundingBox {
        let mut out = self.clone();
        out.expand_to(&other.lo);
        out.expand_to(&other.hi);
        out
    }

    /// Minkowski sum of two boxes.
    pub fn minkowski_sum(&self, other: &BoundingBox) -> BoundingBox {
        BoundingBox {
            lo: self
                .lo
                .iter()
                .zip(&other.lo)
                .map(|(a, b)| Rational::from(a + b))
                .collect(),
            hi: self
                .hi
                .iter()
                .zip(&other.hi)
                .map(|(a, b)| Rational::from(a + b))
                .collect(),
        }
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        p.iter()
            .enumerate()
            .all(|(i, x)| *x >= self.lo[i] && *x <= self.hi[i])
    }

    /// Largest Euclidean norm over the box corners.
    pub fn max_corner_norm_sq(&self) -> Rational {
        let mut acc = Rational::new();
        for i in 0..self.lo.len() {
            let a = Rational::from(&self.lo[i] * &self.lo[i]);
            let b = Rational::from(&self.hi[i] * &self.hi[i]);
            acc += if a > b { a } else { b };
        }
        acc
    }
}

/// Exact power of a rational by a nonnegative machine exponent.
pub fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::from(1);
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            out *= &b;
        }
        b = Rational::from(&b * &b);
        e >>= 1;
    }
    out
}

/// 10^e as an exact integer.
pub fn pow10(e: u64) -> Integer {
    Integer::from(10).pow(u32::try_from(e).expect("exponent fits in u32"))
}
