//! The Lecture Hall sequence `l_1, l_2, ...`.
//!
//! `l_i` is defined by requiring that the corner minor `E_i` of the Toeplitz
//! matrix equals `y1^i * y2^(i-1) * ... * y_i`. `E_i` depends on `l_1..=l_i`
//! and is linear in `l_i`, so each entry is solved from the previous ones:
//! with `E_i = A*l_i + B`, the determinant is evaluated at `l_i = 0` (giving
//! `B`). `A` is the cofactor of the top right entry, which by the Toeplitz
//! shift is the corner minor of index `i - 2`. When `A` is a signed monomial
//! the solve is an exact term division.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minors::{self, MinorKey, MinorMemo, Trial};
use crate::polyring::{BiDegree, LaurentPoly, Monomial};

/// `y1^i * y2^(i-1) * ... * y_i`.
pub fn target_monomial(i: usize) -> Result<Monomial> {
    if i == 0 {
        return Err(Error::InvalidIndex(0));
    }
    let exps: Vec<i32> = (1..=i).rev().map(|e| e as i32).collect();
    Ok(Monomial::new(&exps))
}

/// Append-only cache of `l_1..=l_k` together with the minor memo.
#[derive(Debug, Default)]
pub struct LhSequence {
    polys: Vec<LaurentPoly>,
    /// `A` from the solve step of each entry.
    pivots: Vec<LaurentPoly>,
    memo: MinorMemo,
}

impl LhSequence {
    pub fn new() -> Self {
        Self::default()
    }

    /// A sequence with `l_1..=l_n` already computed.
    pub fn with_len(n: usize) -> Result<Self> {
        let mut s = Self::new();
        s.ensure(n)?;
        Ok(s)
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `l_i` if it has been computed.
    pub fn ell(&self, i: usize) -> Result<&LaurentPoly> {
        if i == 0 {
            return Err(Error::InvalidIndex(0));
        }
        self.polys.get(i - 1).ok_or(Error::NotComputed(i))
    }

    /// Coefficient of the unknown in the defining equation of `l_i`.
    pub fn pivot(&self, i: usize) -> Result<&LaurentPoly> {
        if i == 0 {
            return Err(Error::InvalidIndex(0));
        }
        self.pivots.get(i - 1).ok_or(Error::NotComputed(i))
    }

    pub fn memo(&self) -> &MinorMemo {
        &self.memo
    }

    /// Computes every missing entry up to `l_i`.
    pub fn ensure(&mut self, i: usize) -> Result<()> {
        while self.polys.len() < i {
            self.solve_next()?;
        }
        Ok(())
    }

    /// Returns `l_i`, solving for it (and anything before it) if needed.
    pub fn extend(&mut self, i: usize) -> Result<&LaurentPoly> {
        if i == 0 {
            return Err(Error::InvalidIndex(0));
        }
        self.ensure(i)?;
        self.ell(i)
    }

    fn solve_next(&mut self) -> Result<()> {
        let i = self.polys.len() + 1;
        let key = MinorKey::corner(i)?;
        let zero = LaurentPoly::zero();
        let constant = -minors::minor_det_trial(
            self,
            &key,
            Trial {
                index: i,
                value: &zero,
            },
        )?;
        // cofactor of the top right entry, a shifted copy of the corner two steps back
        let pivot = if i <= 2 {
            LaurentPoly::one()
        } else {
            let d = minors::minor_det(self, &MinorKey::corner(i - 2)?)?;
            if key.rows() % 2 == 0 {
                -d
            } else {
                d
            }
        };

        let Some((c, m)) = pivot.as_term() else {
            return Err(Error::NonMonomialCoefficient {
                index: i,
                terms: pivot.len(),
                poly: pivot.to_string(),
            });
        };
        let rhs = &LaurentPoly::monomial(target_monomial(i)?) - &constant;
        let ell = rhs.div_term(c, m)?.with_nvars(i);

        self.polys.push(ell);
        self.pivots.push(pivot);
        Ok(())
    }
}

/// Per-index checks on `l_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub index: usize,
    pub terms: usize,
    /// No negative exponents.
    pub is_polynomial: bool,
    /// `None` when not bihomogeneous.
    pub bidegree: Option<(i64, i64)>,
    /// Bidegree equals `(i, i-1)`.
    pub bidegree_ok: bool,
    /// Only `y1..=y_i` occur and `y_i` does.
    pub support_ok: bool,
    /// `E_i(l_1, ..., l_i)` reproduces the target monomial.
    pub residual_zero: bool,
}

impl IndexReport {
    pub fn all_ok(&self) -> bool {
        self.is_polynomial && self.bidegree_ok && self.support_ok && self.residual_zero
    }

    /// Names of the checks that failed.
    pub fn failed_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.is_polynomial {
            out.push("negative exponent");
        }
        if !self.bidegree_ok {
            out.push("wrong bidegree");
        }
        if !self.support_ok {
            out.push("wrong variable support");
        }
        if !self.residual_zero {
            out.push("defining equation residual is nonzero");
        }
        out
    }
}

/// Computes `l_i` if needed and runs all per-index checks.
pub fn check_index(seq: &mut LhSequence, i: usize) -> Result<IndexReport> {
    let ell = seq.extend(i)?.clone();
    let bidegree = ell.bidegree();
    let vars = ell.variables();
    let residual = &minors::cal_e(seq, i)? - &LaurentPoly::monomial(target_monomial(i)?);
    Ok(IndexReport {
        index: i,
        terms: ell.len(),
        is_polynomial: ell.is_polynomial(),
        bidegree: bidegree.map(|d| (d.d_odd, d.d_even)),
        bidegree_ok: bidegree == Some(BiDegree::new(i as i64, i as i64 - 1)),
        support_ok: vars.last() == Some(&i),
        residual_zero: residual.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    #[test]
    fn targets() {
        assert_eq!(target_monomial(1).unwrap().to_string(), "y1");
        assert_eq!(target_monomial(3).unwrap().to_string(), "y1^3*y2^2*y3");
        assert_eq!(target_monomial(4).unwrap().to_string(), "y1^4*y2^3*y3^2*y4");
        assert_eq!(target_monomial(0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn first_entries() {
        let mut s = LhSequence::new();
        assert_eq!(s.extend(2).unwrap().to_string(), "y1^2*y2");
        assert_eq!(s.ell(1).unwrap().to_string(), "y1");
        let l4 = parse_poly("y1^2*y2^3").unwrap() * parse_poly("y1 + y3").unwrap().pow(2)
            + parse_poly("y1^2*y2^2*y3^2*y4").unwrap();
        assert_eq!(s.extend(4).unwrap(), &l4);
        assert_eq!(s.len(), 4);
        assert_eq!(s.ell(4).unwrap().nvars(), 4);
        assert_eq!(s.extend(0), Err(Error::InvalidIndex(0)));
        assert_eq!(s.ell(9), Err(Error::NotComputed(9)));
    }

    #[test]
    fn index_reports() {
        let mut s = LhSequence::new();
        let r1 = check_index(&mut s, 1).unwrap();
        assert!(r1.all_ok());
        assert_eq!(r1.bidegree, Some((1, 0)));
        let r3 = check_index(&mut s, 3).unwrap();
        assert!(r3.all_ok(), "{:?}", r3.failed_checks());
        assert_eq!(r3.bidegree, Some((3, 2)));
        assert_eq!(r3.terms, 2);
    }

    #[test]
    fn pivots_are_signed_previous_corners() {
        let s = LhSequence::with_len(8).unwrap();
        assert_eq!(s.pivot(1).unwrap(), &LaurentPoly::one());
        assert_eq!(s.pivot(2).unwrap(), &LaurentPoly::one());
        for i in 3..=8 {
            let (c, m) = s.pivot(i).unwrap().as_term().unwrap();
            assert_eq!(c.magnitude(), &1u32.into());
            assert_eq!(m, &target_monomial(i - 2).unwrap());
        }
    }
}
