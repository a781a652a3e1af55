// Runs command-line invocations in-process and prints their JSON reports.

use artin_lab::cli::run_command;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let invocations: [&[&str]; 3] = [
        &[
            "artin-lab",
            "ar-index",
            "--vars",
            "T1,T2",
            "--trunc",
            "8",
            "--ideal",
            "T1",
        ],
        &["artin-lab", "witness", "--i", "2", "--trunc", "6"],
        &[
            "artin-lab",
            "bound",
            "--formula",
            "lem66",
            "--n",
            "2",
            "--iI",
            "1",
            "--c",
            "0",
            "--i",
            "4",
        ],
    ];
    for argv in invocations {
        let (report, format) = run_command(argv.iter().copied())?;
        println!("$ {}", argv.join(" "));
        print!("{}", report.render(format));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
