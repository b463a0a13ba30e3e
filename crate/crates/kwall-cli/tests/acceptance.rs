//! Prints the acceptance checklist, one line per criterion, and fails if
//! any criterion fails.

use std::process::ExitCode;

fn main() -> ExitCode {
    let results = kwall_cli::verify::run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
