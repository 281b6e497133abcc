//! Paley-Wiener style growth certificates: for compactly supported f the
//! transform obeys |f^(z)| <= C (1 + ||z||^2)^N e^{H_K(Im z)} where H_K is
//! the supporting function of the support of f.

use distring::ball::ComplexPoint;
use distring::distribution::{Distribution, MultiIndex};
use distring::exact::{rat, ExactComplex};
use distring::{pws_bound_for, verify_pws_on_samples};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // second derivative of a delta plus a density piece: both contribute to
    // the constants
    let f = Distribution::point_mass(
        ExactComplex::new(rat(3, 2), rat(-1, 1)),
        vec![rat(1, 4)],
        MultiIndex::new(vec![2]),
    )
    .add(&Distribution::indicator(rat(0, 1), rat(1, 2)).unwrap())
    .unwrap();

    let bound = pws_bound_for(&f).unwrap();
    println!("derived certificate: C = {:.6}, N = {}", bound.const_c, bound.exponent_n);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples: Vec<ComplexPoint> = (0..2000)
        .map(|_| {
            ComplexPoint::from_f64_pairs(
                &[(rng.gen_range(-200.0..=200.0), rng.gen_range(-20.0..=20.0))],
                128,
            )
            .unwrap()
        })
        .collect();
    let report = verify_pws_on_samples(&f, &bound, &samples).unwrap();
    println!(
        "checked {} points: all pass = {}, worst margin = {:.6e}",
        report.samples.len(),
        report.all_pass,
        report.worst_margin
    );

    // the margin is the certified headroom at the tightest sample; a
    // negative margin would mean the inequality is rigorously violated there
    let tightest = report
        .samples
        .iter()
        .min_by(|a, b| a.margin.partial_cmp(&b.margin).unwrap())
        .unwrap();
    println!(
        "tightest sample: |f^| = {:.6e} against bound {:.6e}",
        tightest.value, tightest.bound
    );
}
