// Finite-dimensional linear algebra on ideals: membership, sums,
// intersections and the distance to a subspace.

use artin_lab::parse::{parse_list, parse_poly};
use artin_lab::subspace::{span_ideal, span_m_power};
use artin_lab::{Field, IdealSpec, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 6)?;
    let i = IdealSpec::new(&ring, parse_list("T1^2 + T2^3", &ring)?)?;
    let span = span_ideal(&i);
    println!("dim (f) mod m^7 = {} of {}", span.dim(), span.ambient_dim());

    let x = parse_poly("T1^3 + T1*T2^3", &ring)?;
    println!("{x} in (f): {}", span.member(std::slice::from_ref(&x))?);
    let y = parse_poly("T1^2", &ring)?;
    println!(
        "{y}: distance order to (f) = {}",
        span.distance_order(std::slice::from_ref(&y))?
    );

    let cap = span.intersect(&span_m_power(&ring, 4, 1)?)?;
    println!("dim (f) ∩ m^4 = {}", cap.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
