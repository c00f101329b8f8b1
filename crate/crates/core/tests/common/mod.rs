#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use lecture_hall::minors::{matrix_entry, MinorKey};
use lecture_hall::{LaurentPoly, LhSequence};

/// `l_1..=l_12`, shared by every test in a binary.
pub fn seq12() -> &'static LhSequence {
    static SEQ: OnceLock<LhSequence> = OnceLock::new();
    SEQ.get_or_init(|| LhSequence::with_len(12).expect("sequence up to 12"))
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// All permutations of `0..k` with their signs.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(
        prefix: &mut Vec<usize>,
        left: &mut Vec<usize>,
        even: bool,
        out: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if left.is_empty() {
            out.push((prefix.clone(), even));
            return;
        }
        for idx in 0..left.len() {
            let x = left.remove(idx);
            prefix.push(x);
            // moving the idx-th remaining element to the front takes idx swaps
            go(prefix, left, even ^ (idx % 2 == 1), out);
            prefix.pop();
            left.insert(idx, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..k).collect(), true, &mut out);
    out
}

/// Determinant by the permutation expansion, entry by entry.
pub fn leibniz(seq: &LhSequence, key: &MinorKey) -> LaurentPoly {
    let mut det = LaurentPoly::zero();
    for (perm, even) in permutations(key.rows()) {
        let mut prod = LaurentPoly::one();
        for (r, &k) in perm.iter().enumerate() {
            prod = &prod * &matrix_entry(seq, r + 1, key.cols()[k]).unwrap();
        }
        det = if even { &det + &prod } else { &det - &prod };
    }
    det
}
