// Artin-Rees indices of ideals and submodules of free modules.

use artin_lab::artin::artin_rees_index;
use artin_lab::parse::{parse_list, parse_vectors};
use artin_lab::{Field, IdealSpec, ModuleSpec, RingSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = RingSpec::standard(2, Field::Rationals, 8)?;
    for g in ["T1", "T1^2", "T1^2 + T2^3", "T1*T2, T2^3"] {
        let m = IdealSpec::new(&ring, parse_list(g, &ring)?)?.as_module();
        let r = artin_rees_index(&m, None)?;
        println!(
            "({g}): i0 = {} (checked i <= {}), k_i = {:?}",
            r.i0, r.certified_up_to, r.levels
        );
    }
    let m = ModuleSpec::new(&ring, 2, parse_vectors("(T1, 0); (0, T2)", &ring)?)?;
    let r = artin_rees_index(&m, None)?;
    println!("<(T1,0),(0,T2)>: i0 = {}", r.i0);
    if let Some(w) = r.tight_witness {
        println!("  tight at i = {}: {:?}", w.i, w.element);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
