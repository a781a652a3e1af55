// Uniform Artin-Rees over the family (x) + I as x varies.

use artin_lab::artin::stable_ar_scan;
use artin_lab::parse::parse_list;
use artin_lab::{Field, IdealSpec, RingSpec};
use num_rational::Rational64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 8)?;
    let i = IdealSpec::new(&ring, parse_list("T1^2 + T2^3", &ring)?)?;
    let xs = parse_list("T1, T2, T1^2, T1*T2, T2^2", &ring)?;
    let grid = [
        Rational64::from_integer(1),
        Rational64::new(3, 2),
        Rational64::from_integer(2),
    ];
    let rep = stable_ar_scan(&i, &xs, &grid, 4)?;
    for e in &rep.entries {
        println!(
            "x = {:<8} nu = {:<4} shift = {:?}",
            e.x.to_string(),
            e.nu.to_string(),
            e.shift
        );
    }
    for g in &rep.grid {
        println!("a = {}: b = {:?}", g.a, g.b);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
