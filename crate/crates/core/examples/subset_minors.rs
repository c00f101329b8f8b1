//! Subset minors `l_S` of the Toeplitz matrix and the shared minor cache.
//!
//! cargo run --example subset_minors

use lecture_hall::minors::{cal_e, ell_s, SubsetS};
use lecture_hall::{LhSequence, Result};

fn main() -> Result<()> {
    let seq = LhSequence::with_len(6)?;
    for text in ["", "1", "2", "1,3", "2,3", "1,2,4"] {
        let s: SubsetS = text.parse()?;
        println!("l_{s} = {}", ell_s(&seq, &s)?);
    }
    // the corner minors are monomials by construction
    for i in 2..=6 {
        println!("E_{i} = {}", cal_e(&seq, i)?);
    }
    let st = seq.memo().stats();
    println!(
        "cache: {} entries, {} hits, {} misses",
        st.entries, st.hits, st.misses
    );
    Ok(())
}
