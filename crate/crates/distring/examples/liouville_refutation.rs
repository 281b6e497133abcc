//! The pair f1 = delta - delta_c (c = sum 10^{-k!}) and f2 = 1_[0,1] obeys
//! the corona condition pointwise-positively, yet no polynomial-type lower
//! bound holds: at z = 2 pi q_K the transforms collapse faster than any
//! (1 + ||z||^2)^{-N}. Everything below is exact rational arithmetic.

use distring::corona::CoronaParams;
use distring::liouville;

fn main() {
    let params = CoronaParams::from_f64s(1.0, 1.0, 1.0).unwrap();

    println!("{:>2} {:>22} {:>14} {:>14}", "K", "q_K", "gap <= q_K^-K", "ratio upper");
    for row in liouville::report(5, &params, 2).unwrap() {
        println!(
            "{:>2} {:>22} {:>14} {:>14}",
            row.k,
            row.q_k,
            format!("{:.3e}", row.gap_upper.to_f64()),
            format!("{:.3e}", row.ratio_upper.to_f64()),
        );
    }

    match liouville::refute_params(&params) {
        Ok(r) => {
            println!(
                "\nrefuted at K = {}: the bound fails at z = 2 pi * {} by a factor {:.3e}",
                r.k,
                r.q_k,
                r.ratio_upper.to_f64()
            );
        }
        Err(e) => println!("\nno refutation within the convergent cap: {e}"),
    }

    // steeper exponents push the witness index up; past K = 6 the exact
    // integers become astronomically large and the attempt reports the
    // index it would need instead
    let steep = CoronaParams::from_f64s(1.0, 40.0, 1.0).unwrap();
    match liouville::refute_params(&steep) {
        Ok(r) => println!("N = 40 refuted at K = {}", r.k),
        Err(e) => println!("N = 40: {e}"),
    }
}
