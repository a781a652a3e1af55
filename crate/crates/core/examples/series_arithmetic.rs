// Arithmetic in `Q[[T1,T2,T3]]/m^7`: parsing, products, orders and initial forms.

use artin_lab::parse::parse_poly;
use artin_lab::{Field, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(3, Field::Rationals, 6)?;
    let x3 = parse_poly("T1*T2 - T3^2", &ring)?;
    let u = parse_poly("1 + T1", &ring)?;
    let prod = &x3 * &u;
    println!("x3          = {x3}");
    println!("x3*(1+T1)   = {prod}");
    println!("ord         = {}", prod.ord());
    println!("in(x3*(1+T1)) = {}", prod.initial_form()?);

    // terms of degree > 6 vanish
    let big = parse_poly("T1^4", &ring)?.pow(2);
    println!("T1^8 mod m^7 = {big}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
