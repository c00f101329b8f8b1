//! Lattice points of the Lecture Hall cone.
//!
//! A vector `(l_1, ..., l_n)` is a Lecture Hall partition when
//! `l_1/n >= l_2/(n-1) >= ... >= l_n/1 >= 0`. All comparisons here use the
//! cross-multiplied integer form `l_j*(n-j) >= l_{j+1}*(n-j+1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::minors::SubsetS;

/// True iff `v` is a Lecture Hall partition of length `v.len()`.
pub fn is_lecture_hall(v: &[i64]) -> bool {
    let n = v.len() as i64;
    let Some(&last) = v.last() else {
        return true;
    };
    last >= 0
        && v.windows(2).enumerate().all(|(k, w)| {
            let j = k as i64 + 1;
            w[0] * (n - j) >= w[1] * (n - j + 1)
        })
}

/// Smallest admissible value at 1-based position `j` given the next entry
/// `next` (the value at `j+1`), for length `n`: `ceil(next*(n-j+1)/(n-j))`.
fn lower_bound(next: i64, n: usize, j: usize) -> i64 {
    let num = next * (n - j + 1) as i64;
    let den = (n - j) as i64;
    (num + den - 1) / den
}

/// All Lecture Hall partitions of length `n` summing to `total`, sorted
/// lexicographically.
pub fn enumerate_lh(n: usize, total: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0i64; n];
    fill_from(n, n, total as i64, &mut current, &mut out);
    out.sort();
    out
}

/// Least possible sum of positions `1..=j` given the value at `j+1`.
fn min_completion(next: i64, n: usize, j: usize) -> i64 {
    let mut sum = 0;
    let mut v = next;
    for pos in (1..=j).rev() {
        v = lower_bound(v, n, pos);
        sum += v;
    }
    sum
}

/// Chooses the value at 1-based position `j`, working from the last coordinate up.
fn fill_from(n: usize, j: usize, remaining: i64, current: &mut [i64], out: &mut Vec<Vec<i64>>) {
    let lo = if j == n {
        0
    } else {
        lower_bound(current[j], n, j)
    };
    if j == 1 {
        if remaining >= lo {
            current[0] = remaining;
            out.push(current.to_vec());
        }
        return;
    }
    let mut v = lo;
    while v <= remaining {
        if v + min_completion(v, n, j - 1) > remaining {
            break;
        }
        current[j - 1] = v;
        fill_from(n, j - 1, remaining - v, current, out);
        v += 1;
    }
}

/// Number of partitions of `total` into odd parts `1, 3, ..., 2n-1`.
pub fn odd_parts_count(n: usize, total: u64) -> u64 {
    let total = total as usize;
    let mut ways = vec![0u64; total + 1];
    ways[0] = 1;
    for part in (1..2 * n).step_by(2) {
        for s in part..=total {
            ways[s] += ways[s - part];
        }
    }
    ways[total]
}

/// `(sum of odd-position entries, sum of even-position entries)`, 1-based.
pub fn odd_even_sums(v: &[i64]) -> (i64, i64) {
    v.iter().enumerate().fold(
        (0, 0),
        |(o, e), (k, &x)| {
            if k % 2 == 0 {
                (o + x, e)
            } else {
                (o, e + x)
            }
        },
    )
}

/// Bivariate power series in `q1, q2` truncated at total degree `max_total`.
/// Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBiSeries {
    coeffs: BTreeMap<(u64, u64), u64>,
    max_total: u64,
}

impl TruncatedBiSeries {
    pub fn new(max_total: u64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            max_total,
        }
    }

    pub fn max_total(&self) -> u64 {
        self.max_total
    }

    pub fn coeff(&self, a: u64, b: u64) -> u64 {
        self.coeffs.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Adds `count` at `(a, b)`; ignored beyond the truncation bound.
    pub fn add(&mut self, a: u64, b: u64, count: u64) {
        if a + b <= self.max_total && count != 0 {
            *self.coeffs.entry((a, b)).or_default() += count;
        }
    }

    /// Nonzero coefficients sorted by `(a+b, a)`.
    pub fn entries(&self) -> Vec<(u64, u64, u64)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        v.sort_by_key(|&(a, b, _)| (a + b, a));
        v
    }

    /// Sum of the coefficients with `a + b = total`.
    pub fn diagonal_sum(&self, total: u64) -> u64 {
        self.coeffs
            .iter()
            .filter(|(&(a, b), _)| a + b == total)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Rows `a,b,count` sorted by `(a+b, a)`, one per nonzero coefficient.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (a, b, c) in self.entries() {
            writeln!(s, "{a},{b},{c}").expect("write to String");
        }
        s
    }
}

/// Lattice-point side: counts Lecture Hall partitions of length `n` by
/// `(odd sum, even sum)`.
pub fn lh_series(n: usize, max_total: u64) -> TruncatedBiSeries {
    let mut s = TruncatedBiSeries::new(max_total);
    for total in 0..=max_total {
        for v in enumerate_lh(n, total) {
            let (o, e) = odd_even_sums(&v);
            s.add(o as u64, e as u64, 1);
        }
    }
    s
}

/// Product side: truncated expansion of `prod_{i=1}^n 1/(1 - q1^i q2^(i-1))`.
pub fn product_series(n: usize, max_total: u64) -> TruncatedBiSeries {
    let mut acc = TruncatedBiSeries::new(max_total);
    acc.add(0, 0, 1);
    for i in 1..=n as u64 {
        let (da, db) = (i, i - 1);
        let mut next = TruncatedBiSeries::new(max_total);
        for (&(a, b), &c) in &acc.coeffs {
            let mut k = 0;
            while a + b + k * (da + db) <= max_total {
                next.add(a + k * da, b + k * db, c);
                k += 1;
            }
        }
        acc = next;
    }
    acc
}

/// The Hilbert basis of the cone of length-`n` Lecture Hall partitions: for
/// each `T = {t1 > ... > tr}` in `[n-1]` the vector
/// `(t1+1, t1, ..., tr, 0, ..., 0)`, and `(1, 0, ..., 0)` for `T` empty.
/// Sorted lexicographically.
pub fn hilbert_basis(n: usize) -> Vec<Vec<i64>> {
    assert!(n >= 1, "hilbert_basis needs n >= 1");
    let mut out: Vec<Vec<i64>> = SubsetS::all_subsets_of(n - 1)
        .iter()
        .map(|t| subset_to_hb(t, n))
        .collect();
    out.sort();
    out
}

/// Inverse of [`hb_to_subset`], padded to length `n`.
pub fn subset_to_hb(t: &SubsetS, n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n.max(t.len() + 1)];
    match t.largest() {
        None => v[0] = 1,
        Some(top) => {
            v[0] = top as i64 + 1;
            for (k, &x) in t.elements().iter().rev().enumerate() {
                v[k + 1] = x as i64;
            }
        }
    }
    v
}

/// Drops the first coordinate of a Hilbert basis vector and returns the set
/// of the remaining nonzero entries.
pub fn hb_to_subset(v: &[i64]) -> Result<SubsetS> {
    let malformed = || Error::MalformedHilbertBasis(v.to_vec());
    let (&first, rest) = v.split_first().ok_or_else(malformed)?;
    let nonzero = rest.iter().take_while(|&&x| x != 0).count();
    let (tail, zeros) = rest.split_at(nonzero);
    let ok = zeros.iter().all(|&x| x == 0)
        && tail.iter().all(|&x| x > 0 && (x as usize) < v.len())
        && tail.windows(2).all(|w| w[0] > w[1])
        && first == tail.first().map_or(1, |&t| t + 1);
    if !ok {
        return Err(malformed());
    }
    SubsetS::from_unsorted(tail.iter().map(|&x| x as usize).collect())
}

/// Decides whether Lecture Hall partitions are sums of Hilbert basis elements
/// by exhaustive search, memoized across calls.
#[derive(Debug)]
pub struct Decomposer {
    n: usize,
    basis: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, bool>,
}

impl Decomposer {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            basis: hilbert_basis(n),
            memo: HashMap::new(),
        }
    }

    /// `lambda` must be a Lecture Hall partition of length `n`.
    pub fn decomposes(&mut self, lambda: &[i64]) -> bool {
        debug_assert_eq!(lambda.len(), self.n);
        if lambda.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(&known) = self.memo.get(lambda) {
            return known;
        }
        let mut found = false;
        for k in 0..self.basis.len() {
            let rest: Vec<i64> = lambda
                .iter()
                .zip(&self.basis[k])
                .map(|(a, b)| a - b)
                .collect();
            if rest.iter().all(|&x| x >= 0) && is_lecture_hall(&rest) && self.decomposes(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(lambda.to_vec(), found);
        found
    }
}

/// One-shot form of [`Decomposer::decomposes`].
pub fn decomposes(lambda: &[i64], n: usize) -> bool {
    Decomposer::new(n).decomposes(lambda)
}
