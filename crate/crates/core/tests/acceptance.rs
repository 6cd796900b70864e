//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use two_rig_lab::verify::{VerifyConfig, CHECKS};

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let mut failed = 0;
    println!("acceptance: {} criteria, seed {}", CHECKS.len(), config.seed);
    for (name, check) in CHECKS {
        let start = Instant::now();
        let outcome = check(&config);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(r) if r.passed => println!("PASS {name} ({secs:.2}s)"),
            Ok(r) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {}", r.details["failures"]);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): error {}: {e}", e.kind());
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CHECKS.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
