//! Evaluating transforms with certified error radii, and the homomorphism
//! property: the transform of a convolution is the product of transforms.

use distring::ball::ComplexPoint;
use distring::distribution::Distribution;
use distring::exact::rat;
use distring::fl_transform;

fn show(label: &str, f: &Distribution, z: &ComplexPoint) {
    let v = fl_transform(f, z).unwrap();
    println!(
        "{label}: {:.15} + {:.15}i  (radius {:.2e})",
        v.re().mid_f64(),
        v.im().mid_f64(),
        v.rad().to_f64()
    );
}

fn main() {
    let f = Distribution::delta(1)
        .sub(&Distribution::delta_at(vec![rat(1, 3)]))
        .unwrap();
    let g = Distribution::indicator(rat(0, 1), rat(1, 1)).unwrap();

    // low precision is still rigorous: the radius tells you what you have
    for prec in [64u32, 128, 256] {
        let z = ComplexPoint::from_f64_pairs(&[(5.0, -1.0)], prec).unwrap();
        show(&format!("f^ at prec {prec:3}"), &f, &z);
    }

    // densities switch between a centered power series (small |z|) and
    // integration by parts (large |z|); both carry rigorous remainders
    println!();
    for re in [0.1, 0.5, 50.0] {
        let z = ComplexPoint::from_f64_pairs(&[(re, 0.0)], 128).unwrap();
        show(&format!("g^ at z = {re:4}"), &g, &z);
    }

    // homomorphism: (f*g)^ = f^ g^, checked by overlap of the two enclosures
    let z = ComplexPoint::from_f64_pairs(&[(3.0, 0.5)], 128).unwrap();
    let lhs = fl_transform(&f.convolve(&g).unwrap(), &z).unwrap();
    let rhs = fl_transform(&f, &z).unwrap().mul(&fl_transform(&g, &z).unwrap());
    println!(
        "\n(f*g)^ and f^ g^ agree within radii: {}",
        lhs.sub(&rhs).abs().lower() <= 0.0
    );
}
