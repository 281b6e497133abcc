//! The same operations are exposed through the `distring` binary; this
//! example just prints a cheat sheet of equivalent invocations.

fn main() {
    let lines = [
        ("evaluate a transform", "distring transform --f f.json --samples '[[3.0, 0.5]]'"),
        ("supporting function", "distring support-fn --cone lightcone2 --speed 1 --xi '[1, 0]'"),
        ("weight locality + Hessian", "distring weight-check --cone orthant2 --budget 10000 --seed 1"),
        ("growth certificate", "distring pws --f f.json --budget 500 --seed 1"),
        ("corona on samples", "distring corona-check --f f1.json --f f2.json --cone orthant1 --C 1e-6 --N 1 --M 1"),
        ("violation search", "distring corona-search --f f1.json --cone orthant1 --C 1e-6 --N 1 --M 1 --budget 4000 --seed 7"),
        ("Bezout identity", "distring bezout-verify --f f1.json --f f2.json --g g1.json --g g2.json"),
        ("exact gap table", "distring liouville-report --K 5 --C 1 --N 1 --M 1 --format csv"),
        ("refute constants", "distring liouville-refute --C 1 --N 1 --M 1 --cone orthant1"),
    ];
    println!("exit codes: 0 = pass, 1 = rigorous violation, 2 = bad input, 3 = inconclusive\n");
    for (what, cmd) in lines {
        println!("{what:26} {cmd}");
    }
}
