//! The weight p(z) = log(1 + ||z||^2) + H(Im z) and the two checks that make
//! it admissible: locality of nearby values and positivity of the Hessian
//! quadratic form of log(1 + ||z||^2).

use distring::ball::ComplexPoint;
use distring::cone::{check_weight_locality, hessian_quad_form, Cone};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

fn main() {
    let cone = Cone::light_cone(1, Rational::from(1)).unwrap();

    let z = ComplexPoint::from_f64_pairs(&[(3.0, 1.0), (0.5, 2.0)], 128).unwrap();
    println!("p(z) = {:.12}", cone.weight(&z).unwrap().mid_f64());

    // locality: perturbing z by at most e^{-p(z)} moves the weight by at
    // most log 8 + 1
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let pairs: Vec<(ComplexPoint, ComplexPoint)> = (0..2000)
        .map(|_| {
            let base: Vec<(f64, f64)> = (0..2)
                .map(|_| (rng.gen_range(-50.0..=50.0), rng.gen_range(-50.0..=50.0)))
                .collect();
            let z = ComplexPoint::from_f64_pairs(&base, 128).unwrap();
            let eps = (-cone.weight(&z).unwrap().mid_f64()).exp() / 2.0;
            let shifted: Vec<(f64, f64)> = base
                .iter()
                .map(|&(re, im)| (re + eps * rng.gen_range(-0.5..=0.5), im + eps * rng.gen_range(-0.5..=0.5)))
                .collect();
            (z, ComplexPoint::from_f64_pairs(&shifted, 128).unwrap())
        })
        .collect();
    let report = check_weight_locality(&cone, &pairs, 1.0, 0.0).unwrap();
    println!(
        "locality: {} pairs checked, {} skipped, worst slack {:.4}, violations {}",
        report.checked,
        report.skipped_precondition,
        report.worst_slack,
        report.violations.len()
    );

    // the Hessian quadratic form of log(1 + ||z||^2) is nonnegative
    let mut worst = f64::INFINITY;
    for _ in 0..2000 {
        let mk = |rng: &mut ChaCha8Rng| {
            let v: Vec<(f64, f64)> = (0..3)
                .map(|_| (rng.gen_range(-5.0..=5.0), rng.gen_range(-5.0..=5.0)))
                .collect();
            ComplexPoint::from_f64_pairs(&v, 128).unwrap()
        };
        let (z, w) = (mk(&mut rng), mk(&mut rng));
        worst = worst.min(hessian_quad_form(&z, &w).unwrap().mid_f64());
    }
    println!("Hessian quadratic form, minimum over 2000 samples: {worst:.6e} (>= 0)");
}
