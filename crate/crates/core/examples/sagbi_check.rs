//! Leading exponents of all subset minors versus the Hilbert basis of the
//! Lecture Hall cone.
//!
//! cargo run --release --example sagbi_check -- 8

use lecture_hall::verify::verify_sagbi;
use lecture_hall::{LhSequence, Result};

fn main() -> Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let mut seq = LhSequence::new();
    for n in 1..=max_n {
        let report = verify_sagbi(&mut seq, n)?;
        println!(
            "n = {n:2}: {:4} minors, {}, unit leading coefficients: {}, {} ms",
            report.entries.len(),
            if report.passed() { "pass" } else { "FAIL" },
            report.unit_leading_coeffs,
            report.elapsed_ms,
        );
        for f in &report.failures {
            println!("    {}: {}", f.subset, f.reason);
        }
    }
    Ok(())
}
