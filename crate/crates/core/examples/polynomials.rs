//! Laurent polynomial arithmetic and the first few Lecture Hall polynomials.
//!
//! cargo run --example polynomials

use lecture_hall::polyring::{parse_poly, TermOrder};
use lecture_hall::{LhSequence, Result};

fn main() -> Result<()> {
    let p = parse_poly("y1^2*y2 - 3*y1^-1*y3 + 2")?;
    let q = parse_poly("y1 + y3")?;
    println!("p       = {p}");
    println!("q       = {q}");
    println!("p * q   = {}", &p * &q);
    println!("q^3     = {}", q.pow(3));
    let (c, m) = p.leading_term(TermOrder::DegLex)?;
    println!("lt(p)   = {c} * {m}");
    println!("bideg q = {:?}", q.bidegree().map(|d| (d.d_odd, d.d_even)));

    let mut seq = LhSequence::new();
    for i in 1..=6 {
        let ell = seq.extend(i)?;
        let d = ell.bidegree().expect("bihomogeneous");
        println!(
            "l_{i}: {} terms, bidegree ({}, {})",
            ell.len(),
            d.d_odd,
            d.d_even
        );
    }
    println!("l_4 = {}", seq.ell(4)?);
    Ok(())
}
