#[allow(dead_code)]
mod series_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/series_arithmetic.rs"));
}

#[allow(dead_code)]
mod ideal_membership {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ideal_membership.rs"));
}

#[allow(dead_code)]
mod order_function {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/order_function.rs"));
}

#[allow(dead_code)]
mod icl_constants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/icl_constants.rs"));
}

#[allow(dead_code)]
mod artin_rees {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/artin_rees.rs"));
}

#[allow(dead_code)]
mod stable_artin_rees {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stable_artin_rees.rs"));
}

#[allow(dead_code)]
mod linear_solver {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/linear_solver.rs"));
}

#[allow(dead_code)]
mod fxhy_solver {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fxhy_solver.rs"));
}

#[allow(dead_code)]
mod beta_bruteforce {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/beta_bruteforce.rs"));
}

#[allow(dead_code)]
mod witness_family {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/witness_family.rs"));
}

#[allow(dead_code)]
mod bound_catalog {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bound_catalog.rs"));
}

#[allow(dead_code)]
mod cli_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_report.rs"));
}

#[test]
fn series_arithmetic_runs() {
    series_arithmetic::run_example().expect("series_arithmetic example should run");
}

#[test]
fn ideal_membership_runs() {
    ideal_membership::run_example().expect("ideal_membership example should run");
}

#[test]
fn order_function_runs() {
    order_function::run_example().expect("order_function example should run");
}

#[test]
fn icl_constants_runs() {
    icl_constants::run_example().expect("icl_constants example should run");
}

#[test]
fn artin_rees_runs() {
    artin_rees::run_example().expect("artin_rees example should run");
}

#[test]
fn stable_artin_rees_runs() {
    stable_artin_rees::run_example().expect("stable_artin_rees example should run");
}

#[test]
fn linear_solver_runs() {
    linear_solver::run_example().expect("linear_solver example should run");
}

#[test]
fn fxhy_solver_runs() {
    fxhy_solver::run_example().expect("fxhy_solver example should run");
}

#[test]
fn beta_bruteforce_runs() {
    beta_bruteforce::run_example().expect("beta_bruteforce example should run");
}

#[test]
fn witness_family_runs() {
    witness_family::run_example().expect("witness_family example should run");
}

#[test]
fn bound_catalog_runs() {
    bound_catalog::run_example().expect("bound_catalog example should run");
}

#[test]
fn cli_report_runs() {
    cli_report::run_example().expect("cli_report example should run");
}
