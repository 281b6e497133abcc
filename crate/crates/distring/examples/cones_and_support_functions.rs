//! The four cone families and their supporting functions H(xi) =
//! sup { <x, xi> : x in C, ||x|| <= 1 }, plus exact membership tests.

use distring::cone::Cone;
use distring::exact::rat;
use rug::Rational;

fn main() {
    let cones: Vec<(&str, Cone)> = vec![
        ("full space R^2", Cone::full(2)),
        ("positive orthant", Cone::orthant(2)),
        ("light cone, speed 1", Cone::light_cone(1, Rational::from(1)).unwrap()),
        (
            "polyhedral <(1,0),(1,2)>",
            Cone::polyhedral(2, vec![vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(2, 1)]])
                .unwrap(),
        ),
    ];

    let xis: Vec<[f64; 2]> = vec![[1.0, 0.0], [-1.0, -1.0], [0.5, 2.0], [-3.0, 1.0]];
    println!("{:<24} {:>12} {:>12} {:>12} {:>12}", "cone", "(1,0)", "(-1,-1)", "(.5,2)", "(-3,1)");
    for (name, cone) in &cones {
        let row: Vec<String> = xis
            .iter()
            .map(|xi| format!("{:>12.6}", cone.support_function(xi).unwrap()))
            .collect();
        println!("{:<24} {}", name, row.join(" "));
    }

    // metric projection onto the cone; for the orthant and the light cone
    // H(xi) equals the norm of the projection
    let cone = Cone::light_cone(1, Rational::from(1)).unwrap();
    let xi = [2.0, -0.5];
    let p = cone.project(&xi).unwrap();
    let pn = (p[0] * p[0] + p[1] * p[1]).sqrt();
    println!("\nlight cone: project({xi:?}) = {p:?}");
    println!("||projection|| = {pn:.12}  vs  H = {:.12}", cone.support_function(&xi).unwrap());

    // membership is decided exactly over the rationals, even for polyhedral
    // cones (a small exact-arithmetic simplex under the hood)
    let poly = Cone::polyhedral(2, vec![vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(2, 1)]])
        .unwrap();
    for pt in [vec![rat(3, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]] {
        println!(
            "({}, {}) in cone: {}",
            pt[0],
            pt[1],
            poly.contains_exact(&pt).unwrap()
        );
    }
}
