//! The corona condition sum_i |f_i^(z)| >= C (1 + ||z||^2)^{-N} e^{-M H(Im z)}:
//! checking it on samples, and searching for a rigorous violation when the
//! family has a common zero.

use distring::ball::ComplexPoint;
use distring::corona::{search_violation, SearchBox};
use distring::distribution::Distribution;
use distring::exact::rat;
use distring::{corona, Cone, CoronaParams, CoronaVerdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let cone = Cone::orthant(1);
    let params = CoronaParams::from_f64s(1e-6, 1.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    // a family without common zeros: f1 = delta - delta_1, f2 = delta_1;
    // |f1^| + |f2^| >= |f1^ + f2^| = 1 everywhere
    let f1 = Distribution::delta(1)
        .sub(&Distribution::delta_at(vec![rat(1, 1)]))
        .unwrap();
    let f2 = Distribution::delta_at(vec![rat(1, 1)]);
    let samples: Vec<ComplexPoint> = (0..500)
        .map(|_| {
            ComplexPoint::from_f64_pairs(
                &[(rng.gen_range(-100.0..=100.0), rng.gen_range(-5.0..=5.0))],
                128,
            )
            .unwrap()
        })
        .collect();
    let verdict = corona::check_corona(&[f1.clone(), f2], &params, &cone, &samples).unwrap();
    match &verdict {
        CoronaVerdict::NoViolationFoundOnSamples { min_ratio, .. } => {
            println!("two-element family: no violation, min lhs/rhs ratio {min_ratio:.3e}")
        }
        other => println!("unexpected: {other:?}"),
    }

    // f1 alone has zeros at 2 pi k, so the corona lower bound must fail;
    // the seeded search homes in on one and certifies it in ball arithmetic
    let bx = SearchBox::real_interval_1d(1.0, 20.0);
    let verdict = search_violation(&[f1], &params, &cone, &bx, 4000, 7, 128).unwrap();
    match verdict {
        CoronaVerdict::ViolationAt { point, lhs, rhs } => {
            let z = point[0].0;
            println!("single f1: rigorous violation at z = {z:.9} (lhs {lhs:.3e} < rhs {rhs:.3e})");
            println!(
                "            z / 2pi = {:.9} (the zeros sit at integer multiples)",
                z / std::f64::consts::TAU
            );
        }
        other => println!("unexpected: {other:?}"),
    }
}
