// Corrects an approximate solution of f X + h Y = 0 for the cusp f = T1^2 + T2^3.

use artin_lab::artin::solve_fx_hy;
use artin_lab::parse::parse_poly;
use artin_lab::{Field, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 9)?;
    let p = |s: &str| parse_poly(s, &ring);
    let f = p("T1^2 + T2^3")?;
    let h = p("T1")?;
    let x = p("T1 + T1^4")?;
    let y = f.neg();
    let cert = solve_fx_hy(2, &f, &h, &x, &y, 3)?;
    println!("(x, y)       = ({x}, {y})");
    println!("(xbar, ybar) = ({}, {})", cert.output[0], cert.output[1]);
    println!(
        "proximity {:?}, required {:?}, holds: {}",
        cert.proximity,
        cert.required,
        cert.holds()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
