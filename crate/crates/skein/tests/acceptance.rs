//! Runs every acceptance criterion and prints one line each.

use std::process::ExitCode;

use skein::checks::{run_criterion, Inputs, CRITERIA};

/// Seconds allowed per criterion, where one is set.
fn budget(id: usize) -> Option<f64> {
    match id {
        1 => Some(1.0),
        2 => Some(300.0),
        6 => Some(1800.0),
        _ => None,
    }
}

fn main() -> ExitCode {
    let inp = Inputs::bundled();
    let mut failures = 0;
    for id in 1..=CRITERIA.len() {
        let mut o = run_criterion(id, &inp);
        if let Some(limit) = budget(id) {
            if o.passed && o.seconds > limit {
                o.passed = false;
                o.detail = format!("took {:.1}s, limit {limit}s", o.seconds);
            }
        }
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {id} [{verdict}] {} ({:.2}s): {}",
            o.name, o.seconds, o.detail
        );
        failures += usize::from(!o.passed);
    }
    println!(
        "{} of {} criteria pass",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
