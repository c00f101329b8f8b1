//! Counting Lecture Hall partitions against partitions into small odd parts,
//! then comparing the two sides of the bivariate identity.
//!
//! cargo run --release --example lecture_hall_theorem

use lecture_hall::cone::{enumerate_lh, lh_series, odd_parts_count, product_series};

fn main() {
    let n = 4;
    println!("n = {n}");
    println!("{:>3} {:>8} {:>8}", "N", "lattice", "odd");
    for total in 0..=16 {
        let lattice = enumerate_lh(n, total).len();
        let odd = odd_parts_count(n, total);
        println!("{total:>3} {lattice:>8} {odd:>8}");
        assert_eq!(lattice as u64, odd);
    }

    let max_total = 12;
    let lattice = lh_series(n, max_total);
    let product = product_series(n, max_total);
    println!(
        "bivariate series agree up to total {max_total}: {}",
        lattice == product
    );
    println!("first coefficients (a, b, count):");
    for (a, b, c) in lattice.entries().into_iter().take(10) {
        println!("  {a} {b} {c}");
    }
}
