//! The map `S -> phi(S)` for `n = 5`, with the Hilbert basis element that
//! `phi(S)` corresponds to.
//!
//! cargo run --example phi_table

use lecture_hall::verify::{phi_as_permutation, verify_sagbi};
use lecture_hall::{LhSequence, Result};

fn main() -> Result<()> {
    let n = 5;
    let mut seq = LhSequence::new();
    let report = verify_sagbi(&mut seq, n)?;
    let perm = phi_as_permutation(&report.entries, n)?;
    println!("{:<12} {:<18} T", "S", "phi(S)");
    for (e, (_, t)) in report.entries.iter().zip(&perm) {
        let v = e.padded(n).expect("length at most n");
        println!(
            "{:<12} {:<18} {}",
            e.subset.to_string(),
            format!("{v:?}"),
            t
        );
    }
    Ok(())
}
