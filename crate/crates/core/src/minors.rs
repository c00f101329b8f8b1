//! Minors of the upper-triangular Toeplitz matrix built from the Lecture Hall
//! sequence.
//!
//! Entry `(r, c)` of the matrix is `-l_{c-r+1}` for `c >= r` and zero below
//! the diagonal. Every minor used here takes the top `r` rows, so a minor is
//! identified by its row count and column set ([`MinorKey`]). Determinants are
//! expanded along the bottom row and memoized on the key; the sub-minors of
//! different subsets overlap heavily, which keeps the whole power set of
//! `[n-1]` tractable.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::lhseq::LhSequence;
use crate::polyring::LaurentPoly;

/// Rows `1..=rows` and the given sorted columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorKey {
    rows: usize,
    cols: SmallVec<[usize; 12]>,
}

impl MinorKey {
    pub fn new(rows: usize, cols: &[usize]) -> Result<Self> {
        let ok = cols.len() == rows
            && cols.first().is_none_or(|&c| c >= 1)
            && cols.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidSubset(cols.to_vec()));
        }
        Ok(Self {
            rows,
            cols: cols.iter().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Largest column; the minor only involves `l_1 ..= l_{max_col}`.
    pub fn max_col(&self) -> usize {
        self.cols.last().copied().unwrap_or(0)
    }

    /// Key of the minor that defines `E_i`: rows `1..=ceil(i/2)`, columns
    /// `floor(i/2)+1 ..= i`.
    pub fn corner(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidIndex(0));
        }
        let cols: Vec<usize> = (i / 2 + 1..=i).collect();
        Self::new(i.div_ceil(2), &cols)
    }

    fn without_col(&self, k: usize) -> Self {
        let mut cols = self.cols.clone();
        cols.remove(k);
        Self {
            rows: self.rows - 1,
            cols,
        }
    }
}

/// A finite set of positive integers, stored strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetS(Vec<usize>);

impl SubsetS {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Rejects zero entries and anything that is not strictly increasing.
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        let ok =
            elements.first().is_none_or(|&s| s >= 1) && elements.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(Self(elements))
        } else {
            Err(Error::InvalidSubset(elements))
        }
    }

    /// Sorts and deduplicates; still rejects zero.
    pub fn from_unsorted(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    /// `{lo, ..., hi}`, empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Result<Self> {
        Self::new((lo..=hi).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// All subsets of `{1, ..., m}`, ordered by size and then lexicographically.
    pub fn all_subsets_of(m: usize) -> Vec<SubsetS> {
        let mut out: Vec<SubsetS> = (0u64..1 << m)
            .map(|mask| SubsetS((1..=m).filter(|&s| mask >> (s - 1) & 1 == 1).collect()))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Comma-joined ascending elements, empty string for the empty set.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for SubsetS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv())
    }
}

impl FromStr for SubsetS {
    type Err = Error;

    /// Parses a comma list such as `1,3`; the empty string is the empty set.
    /// Duplicates and unsorted input are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut elements = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            match part.trim().parse::<usize>() {
                Ok(v) => elements.push(v),
                Err(_) => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("invalid set element {part:?}"),
                    })
                }
            }
            pos += part.len() + 1;
        }
        Self::new(elements)
    }
}

/// Hit and miss counters for the minor memo.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
}

/// Concurrent memo of minors, keyed by [`MinorKey`]. No eviction.
#[derive(Debug)]
pub struct MinorMemo {
    map: DashMap<MinorKey, Arc<LaurentPoly>>,
    enabled: AtomicBool,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Default for MinorMemo {
    fn default() -> Self {
        Self {
            map: DashMap::new(),
            enabled: AtomicBool::new(true),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }
}

impl MinorMemo {
    pub fn set_enabled(&self, enabled: bool) {
        self.enabled.store(enabled, Ordering::Relaxed);
        if !enabled {
            self.map.clear();
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.enabled.load(Ordering::Relaxed)
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
        }
    }

    fn get(&self, key: &MinorKey) -> Option<Arc<LaurentPoly>> {
        if !self.is_enabled() {
            return None;
        }
        let hit = self.map.get(key).map(|v| v.value().clone());
        let counter = if hit.is_some() {
            &self.hits
        } else {
            &self.misses
        };
        counter.fetch_add(1, Ordering::Relaxed);
        hit
    }

    fn insert(&self, key: MinorKey, value: &Arc<LaurentPoly>) {
        if self.is_enabled() {
            self.map.insert(key, Arc::clone(value));
        }
    }
}

/// A value substituted for `l_index` while that entry is being solved for.
#[derive(Clone, Copy)]
pub(crate) struct Trial<'a> {
    pub index: usize,
    pub value: &'a LaurentPoly,
}

fn ell_at<'a>(seq: &'a LhSequence, k: usize, trial: Option<Trial<'a>>) -> Result<&'a LaurentPoly> {
    match trial {
        Some(t) if t.index == k => Ok(t.value),
        _ => seq.ell(k),
    }
}

/// Entry `(r, c)` of the matrix: `-l_{c-r+1}` on and above the diagonal, zero below.
pub fn matrix_entry(seq: &LhSequence, r: usize, c: usize) -> Result<LaurentPoly> {
    if r == 0 || c == 0 {
        return Err(Error::InvalidIndex(0));
    }
    if c < r {
        return Ok(LaurentPoly::zero());
    }
    Ok(-seq.ell(c - r + 1)?.clone())
}

/// Determinant of the top-aligned minor `key`.
pub fn minor_det(seq: &LhSequence, key: &MinorKey) -> Result<LaurentPoly> {
    det_rec(seq, key, None, &mut HashMap::new()).map(Arc::unwrap_or_clone)
}

pub(crate) fn minor_det_trial(
    seq: &LhSequence,
    key: &MinorKey,
    trial: Trial<'_>,
) -> Result<LaurentPoly> {
    det_rec(seq, key, Some(trial), &mut HashMap::new()).map(Arc::unwrap_or_clone)
}

/// `scratch` holds minors that depend on the trial value; they are only
/// valid for one evaluation and never enter the shared memo.
fn det_rec(
    seq: &LhSequence,
    key: &MinorKey,
    trial: Option<Trial<'_>>,
    scratch: &mut HashMap<MinorKey, Arc<LaurentPoly>>,
) -> Result<Arc<LaurentPoly>> {
    if key.rows == 0 {
        return Ok(Arc::new(LaurentPoly::one()));
    }
    let memoizable = trial.is_none_or(|t| key.max_col() < t.index);
    let cached = if memoizable {
        seq.memo().get(key)
    } else {
        scratch.get(key).cloned()
    };
    if let Some(v) = cached {
        return Ok(v);
    }

    let r = key.rows;
    let mut det = LaurentPoly::zero();
    for (k, &c) in key.cols.iter().enumerate() {
        if c < r {
            continue;
        }
        let ell = ell_at(seq, c - r + 1, trial)?;
        if ell.is_zero() {
            continue;
        }
        let sub = det_rec(seq, &key.without_col(k), trial, scratch)?;
        if sub.is_zero() {
            continue;
        }
        // entry is -l and the cofactor sign is (-1)^(r+k+1) for 0-based k
        let prod = ell * sub.as_ref();
        if (r + k).is_multiple_of(2) {
            det += &prod;
        } else {
            det = &det - &prod;
        }
    }

    let det = Arc::new(det);
    if memoizable {
        seq.memo().insert(key.clone(), &det);
    } else if seq.memo().is_enabled() {
        scratch.insert(key.clone(), Arc::clone(&det));
    }
    Ok(det)
}

/// `E_i`: the negated corner minor whose top right entry is `-l_i`.
pub fn cal_e(seq: &LhSequence, i: usize) -> Result<LaurentPoly> {
    Ok(-minor_det(seq, &MinorKey::corner(i)?)?)
}

/// Key of the minor defining `l_S` (rows `1..=#S`, columns `S+1`), or `None`
/// for the empty set.
pub fn subset_key(s: &SubsetS) -> Option<MinorKey> {
    if s.is_empty() {
        return None;
    }
    let cols: Vec<usize> = s.elements().iter().map(|&x| x + 1).collect();
    Some(MinorKey::new(s.len(), &cols).expect("shifted subset is a valid column set"))
}

/// `l_S`; `l_{}` is `l_1`.
pub fn ell_s(seq: &LhSequence, s: &SubsetS) -> Result<LaurentPoly> {
    match subset_key(s) {
        None => seq.ell(1).cloned(),
        Some(key) => Ok(-minor_det(seq, &key)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn seq(n: usize) -> LhSequence {
        let mut s = LhSequence::new();
        s.ensure(n).unwrap();
        s
    }

    #[test]
    fn entries() {
        let s = seq(4);
        assert_eq!(matrix_entry(&s, 1, 1).unwrap().to_string(), "-y1");
        assert!(matrix_entry(&s, 2, 1).unwrap().is_zero());
        assert_eq!(matrix_entry(&s, 1, 4).unwrap(), -s.ell(4).unwrap());
        assert_eq!(matrix_entry(&s, 2, 4).unwrap(), -s.ell(3).unwrap());
    }

    #[test]
    fn small_minors() {
        let s = seq(4);
        let k = MinorKey::new(2, &[2, 3]).unwrap();
        assert_eq!(minor_det(&s, &k).unwrap().to_string(), "-y1^3*y2^2*y3");
        let k = MinorKey::new(1, &[1]).unwrap();
        assert_eq!(minor_det(&s, &k).unwrap().to_string(), "-y1");
        let k = MinorKey::new(3, &[2, 3, 4]).unwrap();
        assert_eq!(
            minor_det(&s, &k).unwrap(),
            -parse_poly("y1^4*y2^3*y3^2 + y1^4*y2^2*y3^2*y4").unwrap()
        );
    }

    #[test]
    fn corner_minors() {
        let s = seq(4);
        assert_eq!(cal_e(&s, 1).unwrap().to_string(), "y1");
        assert_eq!(cal_e(&s, 3).unwrap().to_string(), "y1^3*y2^2*y3");
        assert_eq!(cal_e(&s, 4).unwrap().to_string(), "y1^4*y2^3*y3^2*y4");
        assert_eq!(MinorKey::corner(5).unwrap().cols(), &[3, 4, 5]);
        assert_eq!(MinorKey::corner(5).unwrap().rows(), 3);
    }

    #[test]
    fn subset_minors() {
        let s = seq(4);
        let l13 = ell_s(&s, &"1,3".parse().unwrap()).unwrap();
        assert_eq!(
            l13.to_string(),
            "y1^4*y2^3*y3 + y1^3*y2^3*y3^2 + y1^3*y2^2*y3^2*y4"
        );
        let l123 = ell_s(&s, &"1,2,3".parse().unwrap()).unwrap();
        assert_eq!(l123.to_string(), "y1^4*y2^3*y3^2 + y1^4*y2^2*y3^2*y4");
        assert_eq!(ell_s(&s, &SubsetS::empty()).unwrap().to_string(), "y1");
        for i in 2..=4 {
            let single = SubsetS::new(vec![i - 1]).unwrap();
            assert_eq!(&ell_s(&s, &single).unwrap(), s.ell(i).unwrap());
        }
    }

    #[test]
    fn missing_entries_are_reported() {
        let s = seq(2);
        let k = MinorKey::new(1, &[4]).unwrap();
        assert_eq!(minor_det(&s, &k), Err(Error::NotComputed(4)));
    }

    #[test]
    fn keys_and_subsets_validate() {
        assert!(MinorKey::new(2, &[3]).is_err());
        assert!(MinorKey::new(2, &[3, 3]).is_err());
        assert!(MinorKey::new(1, &[0]).is_err());
        assert!("1,1".parse::<SubsetS>().is_err());
        assert!("3,1".parse::<SubsetS>().is_err());
        assert!("0".parse::<SubsetS>().is_err());
        assert!("a".parse::<SubsetS>().is_err());
        assert_eq!("".parse::<SubsetS>().unwrap(), SubsetS::empty());
        assert_eq!(
            SubsetS::from_unsorted(vec![3, 1, 3]).unwrap().elements(),
            &[1, 3]
        );
    }

    #[test]
    fn subset_enumeration_order() {
        let all = SubsetS::all_subsets_of(3);
        let text: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            text,
            ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn memo_counts_hits() {
        let s = seq(6);
        let k = MinorKey::new(3, &[2, 4, 6]).unwrap();
        let before = s.memo().stats();
        let a = minor_det(&s, &k).unwrap();
        let b = minor_det(&s, &k).unwrap();
        assert_eq!(a, b);
        assert!(s.memo().stats().hits > before.hits);
    }
}
