//! Runs every verification suite at a small size.

use alt_hecke::verify::{run_suite, VerifyOptions};

fn main() -> alt_hecke::Result<()> {
    let opts = VerifyOptions {
        n: 4,
        cases: 50,
        seed: 1,
    };
    for r in run_suite("all", &opts)? {
        println!(
            "{:<10} {:>5} checks  {}",
            r.name,
            r.checks,
            if r.passed() { "ok" } else { "FAILED" }
        );
        for note in &r.notes {
            println!("           {note}");
        }
    }
    Ok(())
}
