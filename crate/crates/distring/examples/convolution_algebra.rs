//! The exact convolution ring: point masses, derivatives of deltas, and
//! piecewise-polynomial densities, all with rational coefficients.

use distring::distribution::{Distribution, MultiIndex};
use distring::exact::{rat, ExactComplex};
use distring::json;

fn main() {
    // f = delta - delta_{1/3}, g = delta' + 2 delta_{1/2}
    let f = Distribution::delta(1)
        .sub(&Distribution::delta_at(vec![rat(1, 3)]))
        .unwrap();
    let g = Distribution::point_mass(ExactComplex::one(), vec![rat(0, 1)], MultiIndex::new(vec![1]))
        .add(&Distribution::delta_at(vec![rat(1, 2)]).scale(&ExactComplex::from_int(2)))
        .unwrap();

    let fg = f.convolve(&g).unwrap();
    println!("f * g = {}", json::distribution_to_string(&fg));
    println!("f * g == g * f: {}", fg == g.convolve(&f).unwrap());

    // densities convolve through the same interface; the indicator of [0,1]
    // squared under convolution is the triangle on [0,2]
    let ind = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();
    let tri = ind.convolve(&ind).unwrap();
    println!("\n1_[0,1] * 1_[0,1] = {}", json::distribution_to_string(&tri));
    if let Some(hull) = tri.support_hull() {
        println!("support hull: [{}, {}]", hull.lo[0], hull.hi[0]);
    }

    // the distributional derivative turns the triangle back into a
    // difference of indicators
    let d_tri = tri.derivative_1d().unwrap();
    let expected = ind
        .convolve(
            &Distribution::delta(1)
                .sub(&Distribution::delta_at(vec![rat(1, 1)]))
                .unwrap(),
        )
        .unwrap();
    println!("(f*f)' == f * (delta - delta_1): {}", d_tri == expected);

    // serialization is exact: rationals survive a round trip bit for bit
    let text = json::distribution_to_string(&fg);
    let back = json::distribution_from_str(&text).unwrap();
    println!("\nJSON round trip exact: {}", back == fg);
}
