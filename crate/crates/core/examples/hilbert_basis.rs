//! Hilbert basis of the Lecture Hall cone and decomposition of partitions
//! into basis elements.
//!
//! cargo run --example hilbert_basis

use lecture_hall::cone::{enumerate_lh, hb_to_subset, hilbert_basis, Decomposer};
use lecture_hall::Result;

fn main() -> Result<()> {
    let n = 4;
    for v in hilbert_basis(n) {
        println!("{v:?}  <-  T = {}", hb_to_subset(&v)?);
    }
    let mut d = Decomposer::new(n);
    let lambdas = enumerate_lh(n, 10);
    let generated = lambdas.iter().filter(|l| d.decomposes(l)).count();
    println!(
        "{generated} of {} partitions of 10 are sums of basis elements",
        lambdas.len()
    );
    Ok(())
}
