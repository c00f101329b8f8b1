mod common;

use lecture_hall::minors::{ell_s, minor_det, MinorKey, SubsetS};
use lecture_hall::LhSequence;

use common::{leibniz, permutations};

fn column_sets(max_col: usize, size: usize) -> Vec<Vec<usize>> {
    SubsetS::all_subsets_of(max_col)
        .into_iter()
        .filter(|s| s.len() == size)
        .map(|s| s.elements().to_vec())
        .collect()
}

#[test]
fn permutation_signs() {
    let perms = permutations(3);
    assert_eq!(perms.len(), 6);
    assert_eq!(perms.iter().filter(|p| p.1).count(), 3);
    assert!(perms.contains(&(vec![1, 0, 2], false)));
    assert!(perms.contains(&(vec![1, 2, 0], true)));
}

#[test]
fn expansion_matches_leibniz_formula() {
    // every minor with at most four rows and columns up to six: covers all
    // subset minors for n <= 5
    let seq = LhSequence::with_len(6).unwrap();
    let mut checked = 0;
    for rows in 1..=4 {
        for cols in column_sets(6, rows) {
            let key = MinorKey::new(rows, &cols).unwrap();
            assert_eq!(
                minor_det(&seq, &key).unwrap(),
                leibniz(&seq, &key),
                "rows {rows} cols {cols:?}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 6 + 15 + 20 + 15);
}

#[test]
fn memo_does_not_change_results() {
    let n = 7;
    let cached = LhSequence::with_len(n).unwrap();
    let plain = LhSequence::with_len(n).unwrap();
    plain.memo().set_enabled(false);
    for s in SubsetS::all_subsets_of(n - 1) {
        assert_eq!(
            ell_s(&cached, &s).unwrap(),
            ell_s(&plain, &s).unwrap(),
            "S = {s}"
        );
    }
    assert!(cached.memo().stats().hits > 0);
    assert_eq!(plain.memo().stats().entries, 0);
}

#[test]
fn solving_without_memo_gives_the_same_sequence() {
    let cached = LhSequence::with_len(9).unwrap();
    let mut plain = LhSequence::new();
    plain.memo().set_enabled(false);
    plain.ensure(9).unwrap();
    for i in 1..=9 {
        assert_eq!(cached.ell(i).unwrap(), plain.ell(i).unwrap(), "l_{i}");
    }
}
