// Scans for the complementary linear inequality nu(gh) <= a(nu(g)+nu(h)) + b.

use artin_lab::order::{icl_envelope, icl_scan, valuation_check, Sampling};
use artin_lab::parse::parse_list;
use artin_lab::{Field, IdealSpec, RingSpec};
use num_rational::Rational64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 8)?;
    let sampling = Sampling::Random { count: 16, seed: 7 };
    let cusp = IdealSpec::new(&ring, parse_list("T1^2 + T2^3", &ring)?)?;
    let rep = icl_scan(&cusp, 3, Rational64::from_integer(1), sampling, 1 << 20)?;
    println!(
        "(T1^2+T2^3): b_min = {:?}, first attaining pair {:?}",
        rep.b_min,
        rep.attaining_pairs.first()
    );
    for p in icl_envelope(&cusp, 3, sampling, 1 << 20)? {
        println!("  a = {}: b_min = {:?}", p.a, p.b_min);
    }

    let cross = IdealSpec::new(&ring, parse_list("T1*T2", &ring)?)?;
    let rep = icl_scan(&cross, 2, Rational64::from_integer(1), sampling, 1 << 20)?;
    println!(
        "(T1*T2): b_min = {:?}, {} violation(s)",
        rep.b_min,
        rep.violations.len()
    );
    println!(
        "(T1*T2) valuation: {}",
        valuation_check(&cross, 2, sampling, 1 << 20)?.is_valuation
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
