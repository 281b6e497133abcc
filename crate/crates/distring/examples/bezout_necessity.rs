//! From a Bezout identity sum f_i * g_i = delta to corona constants: if
//! cofactors exist, the family cannot dip below the lower bound built from
//! the cofactors' growth data.

use distring::ball::ComplexPoint;
use distring::corona::{necessity_bound, verify_bezout};
use distring::distribution::Distribution;
use distring::exact::rat;
use distring::{corona, Cone};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    // (delta - delta_a) * delta + delta_a * delta = delta
    let a = rat(7, 3);
    let f1 = Distribution::delta(1)
        .sub(&Distribution::delta_at(vec![a.clone()]))
        .unwrap();
    let f2 = Distribution::delta_at(vec![a]);
    let fs = vec![f1, f2];
    let gs = vec![Distribution::delta(1), Distribution::delta(1)];

    let report = verify_bezout(&fs, &gs, 123, 128).unwrap();
    println!(
        "Bezout identity exact: {:?} (sampled residual {:.3e})",
        report.exact, report.max_residual
    );

    // the necessity direction: constants C, N, M that the family must obey
    let cone = Cone::orthant(1);
    let params = necessity_bound(&gs, &cone).unwrap();
    println!(
        "derived constants: C = {}, N = {}, M = {}",
        params.const_c, params.exponent_n, params.cone_scale_m
    );

    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let samples: Vec<ComplexPoint> = (0..2000)
        .map(|_| {
            ComplexPoint::from_f64_pairs(
                &[(rng.gen_range(-300.0..=300.0), rng.gen_range(-8.0..=8.0))],
                128,
            )
            .unwrap()
        })
        .collect();
    let verdict = corona::check_corona(&fs, &params, &cone, &samples).unwrap();
    println!(
        "corona check on {} samples: violation = {}",
        samples.len(),
        verdict.is_violation()
    );
}
