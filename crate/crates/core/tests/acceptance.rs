//! Runs every acceptance criterion at full size and prints one line each.

use std::process::ExitCode;

use trigonal::selftest::{run_suite, SuiteConfig};

fn main() -> ExitCode {
    let reports = run_suite(&SuiteConfig::full(), |r| println!("{r}"));
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
