// Evaluates catalog bounds and compares them against measured values.

use artin_lab::bounds::{cross_check_bound, evaluate_bound, BoundParams, FormulaId};
use num_rational::Rational64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut p = BoundParams::default();
    for (name, v) in [
        ("a", 1),
        ("b", 1),
        ("c", 0),
        ("iI", 1),
        ("iP", 1),
        ("iJn", 1),
        ("n", 2),
        ("t", 1),
        ("k", 2),
        ("nu", 1),
        ("ord_g", 3),
        ("max_ord", 2),
    ] {
        p.set(name, Rational64::from_integer(v))?;
    }
    for f in FormulaId::ALL {
        let vals: Vec<i64> = (0..6).map(|i| evaluate_bound(f, &p, i)).collect::<Result<_, _>>()?;
        println!("{:<12} {:<40} {vals:?}", f.name(), f.expression());
    }

    // measured i^2 - 1 against the linear candidate i + iI
    let measured: Vec<(i64, i64)> = (1..=6).map(|i| (i, i * i - 1)).collect();
    let rep = cross_check_bound(FormulaId::Lin31, &p, &measured)?;
    println!("i^2 - 1 vs lin31: {} (exceeded at {:?})", rep.verdict, rep.exceeded);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
