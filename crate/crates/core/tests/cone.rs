use lecture_hall::cone::{
    enumerate_lh, is_lecture_hall, lh_series, odd_parts_count, product_series, Decomposer,
};

#[test]
fn lecture_hall_theorem_counts() {
    for n in 1..=6 {
        for total in 0..=30 {
            assert_eq!(
                enumerate_lh(n, total).len() as u64,
                odd_parts_count(n, total),
                "n = {n}, N = {total}"
            );
        }
    }
}

#[test]
fn odd_parts_counts_known_values() {
    // partitions into parts from {1, 3, 5}
    let expected = [1u64, 1, 1, 2, 2, 3, 4, 4, 5, 6, 7];
    for (total, &e) in expected.iter().enumerate() {
        assert_eq!(odd_parts_count(3, total as u64), e, "N = {total}");
    }
}

#[test]
fn bivariate_series_agree() {
    for n in 1..=6 {
        let lattice = lh_series(n, 20);
        let product = product_series(n, 20);
        assert_eq!(lattice, product, "n = {n}");
        assert_eq!(lattice.to_csv(), product.to_csv());
        for total in 0..=20 {
            assert_eq!(
                lattice.diagonal_sum(total),
                odd_parts_count(n, total),
                "n = {n}, N = {total}"
            );
        }
    }
}

#[test]
fn hilbert_basis_generates_small_partitions() {
    for n in 1..=5 {
        let mut d = Decomposer::new(n);
        for total in 0..=15 {
            for lambda in enumerate_lh(n, total) {
                assert!(is_lecture_hall(&lambda));
                assert!(d.decomposes(&lambda), "{lambda:?}");
            }
        }
    }
}
