//! Acceptance matrix: one PASS/FAIL line per check, nonzero exit if any
//! check fails. Time budgets live in `verify::CHECKS`; every comparison is
//! exact.

use cornerideal::verify::{run_check, CHECKS, DEFAULT_SEED};
use cornerideal::Caps;

fn main() {
    let caps = Caps::default();
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = Vec::new();
    for (id, title, _) in CHECKS {
        if !filter.is_empty() && !filter.iter().any(|f| title.contains(f.as_str()) || f == &id.to_string()) {
            continue;
        }
        let out = run_check(id, &caps, DEFAULT_SEED).expect("known check");
        println!("{out}");
        if !out.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all checks pass");
    } else {
        println!("acceptance: failing checks {failed:?}");
        std::process::exit(1);
    }
}
