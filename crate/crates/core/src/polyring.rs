//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Variables are `y1, y2, ...`. A [`Monomial`] stores its exponent vector with
//! trailing zeros trimmed, so monomials over different ambient widths compare
//! equal when they agree as elements of the union ring. Monomials are ordered
//! degree-lexicographically with `y1 > y2 > ...`, and a [`LaurentPoly`] keeps
//! its terms in that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exponents = SmallVec<[i32; 12]>;

/// A Laurent monomial `y1^e1 * y2^e2 * ...`; exponents may be negative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a monomial from its exponent vector, index `j` holding the
    /// exponent of `y_{j+1}`.
    pub fn new(exps: &[i32]) -> Self {
        let mut exps: Exponents = exps.iter().copied().collect();
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self { exps }
    }

    /// The single variable `y_index` (1-based).
    pub fn var(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidIndex(0));
        }
        let mut exps = vec![0; index];
        exps[index - 1] = 1;
        Ok(Self::new(&exps))
    }

    /// Exponents with trailing zeros trimmed.
    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    /// Exponent of `y_{j+1}`.
    pub fn exponent(&self, j: usize) -> i32 {
        self.exps.get(j).copied().unwrap_or(0)
    }

    /// Number of the highest variable that occurs, 0 for the constant monomial.
    pub fn support_width(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| i64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&e| e < 0)
    }

    pub fn bidegree(&self) -> BiDegree {
        let mut d = BiDegree::default();
        for (j, &e) in self.exps.iter().enumerate() {
            // y_{j+1} is odd-indexed exactly when j is even
            if j % 2 == 0 {
                d.d_odd += i64::from(e);
            } else {
                d.d_even += i64::from(e);
            }
        }
        d
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let width = self.exps.len().max(other.exps.len());
        let exps: Exponents = (0..width)
            .map(|j| self.exponent(j) + sign * other.exponent(j))
            .collect();
        let mut m = Self { exps };
        while m.exps.last() == Some(&0) {
            m.exps.pop();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    /// Exact in the Laurent ring.
    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic with `y1 > y2 > ...`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let width = self.exps.len().max(other.exps.len());
            (0..width)
                .map(|j| self.exponent(j).cmp(&other.exponent(j)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    /// Writes the factor list, e.g. `y1^2*y2`; writes nothing for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", j + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Z^2-degree: odd-indexed variables have degree (1,0), even-indexed (0,1).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiDegree {
    pub d_odd: i64,
    pub d_even: i64,
}

impl BiDegree {
    pub fn new(d_odd: i64, d_even: i64) -> Self {
        Self { d_odd, d_even }
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: Self) -> Self {
        BiDegree::new(self.d_odd + rhs.d_odd, self.d_even + rhs.d_even)
    }
}

/// The monomial order used for leading terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    /// Total degree first, then exponents lexicographically from `y1`.
    #[default]
    DegLex,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::DegLex => a.cmp(b),
        }
    }
}

/// A Laurent polynomial with integer coefficients in canonical form: no zero
/// coefficients are stored and terms are kept in ascending degree-lex order.
#[derive(Clone, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
    nvars: usize,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let nvars = m.support_width();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms, nvars }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    /// The variable `y_index` (1-based).
    pub fn var(index: usize) -> Result<Self> {
        Ok(Self::monomial(Monomial::var(index)?))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Ambient variable count; grows when polynomials over wider rings are combined.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    /// Highest variable index that actually occurs.
    pub fn support_width(&self) -> usize {
        self.terms
            .keys()
            .map(Monomial::support_width)
            .max()
            .unwrap_or(0)
    }

    /// Terms in ascending degree-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.support_width());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The single monomial and coefficient if the polynomial has exactly one term.
    pub fn as_term(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Largest term under `ord`.
    pub fn leading_term(&self, ord: TermOrder) -> Result<(&BigInt, &Monomial)> {
        match ord {
            TermOrder::DegLex => self
                .terms
                .iter()
                .next_back()
                .map(|(m, c)| (c, m))
                .ok_or(Error::ZeroPolynomial),
        }
    }

    /// Divides by the term `c * m`. Division by the monomial is always exact;
    /// every coefficient must be divisible by `c`.
    pub fn div_term(&self, c: &BigInt, m: &Monomial) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let (q, r) = coeff.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonDivisibleCoefficient {
                    coeff: coeff.clone(),
                    divisor: c.clone(),
                });
            }
            terms.insert(mono.div(m), q);
        }
        Ok(Self {
            terms,
            nvars: self.nvars.max(m.support_width()),
        })
    }

    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero().with_nvars(self.nvars);
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(mono, coeff)| (mono.mul(m), coeff * c))
                .collect(),
            nvars: self.nvars.max(m.support_width()),
        }
    }

    /// `Some(d)` if every term has bidegree `d`, `None` if the polynomial is
    /// not homogeneous. The zero polynomial has bidegree (0, 0).
    pub fn bidegree(&self) -> Option<BiDegree> {
        let mut degrees = self.terms.keys().map(Monomial::bidegree);
        let first = degrees.next().unwrap_or_default();
        degrees.all(|d| d == first).then_some(first)
    }

    /// True iff no monomial has a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        !self.terms.keys().any(Monomial::has_negative_exponent)
    }

    /// 1-based indices of the variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let width = self.support_width();
        (0..width)
            .filter(|&j| self.terms.keys().any(|m| m.exponent(j) != 0))
            .map(|j| j + 1)
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in descending degree-lex order joined by
    /// ` + ` / ` - `, unit coefficients omitted on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Renders `p` in the canonical text format.
pub fn format_poly(p: &LaurentPoly) -> String {
    p.to_string()
}

/// Parses the canonical text format (whitespace around operators is optional).
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    Parser::new(text).parse()
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut poly = LaurentPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let (c, m) = self.term()?;
            poly.add_term(m, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
            self.skip_ws();
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() && first => {
                    coeff = self.digits()?.parse().expect("digits parse as integer");
                }
                Some(b'y') => mono = mono.mul(&self.factor()?),
                _ => return self.err("expected coefficient or variable"),
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, mono));
            }
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.pos += 1; // 'y'
        let index: usize = match self.digits()?.parse() {
            Ok(i) if i >= 1 => i,
            _ => return self.err("variable index must be a positive integer"),
        };
        let mut exp = 1i32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = self.peek() == Some(b'-');
            if neg {
                self.pos += 1;
            }
            exp = match self.digits()?.parse::<i32>() {
                Ok(e) => {
                    if neg {
                        -e
                    } else {
                        e
                    }
                }
                Err(_) => return self.err("exponent out of range"),
            };
        }
        let mut exps = vec![0; index];
        exps[index - 1] = exp;
        Ok(Monomial::new(&exps))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            nvars: self.nvars,
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self.nvars = self.nvars.max(rhs.nvars);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out.nvars = out.nvars.max(rhs.nvars);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let nvars = self.nvars.max(rhs.nvars);
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero().with_nvars(nvars);
        }
        if let Some((c, m)) = rhs.as_term() {
            return self.mul_term(c, m).with_nvars(nvars);
        }
        if let Some((c, m)) = self.as_term() {
            return rhs.mul_term(c, m).with_nvars(nvars);
        }
        if let Some(p) = packed_mul(self, rhs) {
            return p.with_nvars(nvars);
        }
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(self.terms.len() * rhs.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            nvars,
        }
    }
}

/// Exponents packed one byte per variable, `y1` in the most significant
/// byte, so that integer comparison of two keys is lexicographic comparison
/// of the exponent vectors.
const PACK_VARS: usize = 16;

fn pack(m: &Monomial) -> u128 {
    m.exps.iter().enumerate().fold(0u128, |k, (j, &e)| {
        k | (e as u128) << (8 * (PACK_VARS - 1 - j))
    })
}

fn unpack(key: u128) -> Monomial {
    let exps: Vec<i32> = (0..PACK_VARS)
        .map(|j| (key >> (8 * (PACK_VARS - 1 - j)) & 0xff) as i32)
        .collect();
    Monomial::new(&exps)
}

/// Largest exponent, or `None` if the polynomial cannot be packed.
fn packable_max_exponent(p: &LaurentPoly) -> Option<i32> {
    let mut max = 0;
    for m in p.terms.keys() {
        if m.exps.len() > PACK_VARS {
            return None;
        }
        for &e in &m.exps {
            if e < 0 {
                return None;
            }
            max = max.max(e);
        }
    }
    Some(max)
}

/// Product on packed monomials with `i128` accumulation. Returns `None`
/// when exponents are negative or too wide, or when the coefficients could
/// overflow; the caller then falls back to the general path.
fn packed_mul(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let ea = packable_max_exponent(a)?;
    let eb = packable_max_exponent(b)?;
    if ea + eb > 0xff {
        return None;
    }
    let small = |p: &LaurentPoly| -> Option<Vec<(u128, i64)>> {
        p.terms
            .iter()
            .map(|(m, c)| c.to_i64().map(|c| (pack(m), c)))
            .collect()
    };
    let (sa, sb) = (small(a)?, small(b)?);
    let bits = |v: &[(u128, i64)]| {
        64 - v
            .iter()
            .map(|&(_, c)| c.unsigned_abs())
            .max()
            .unwrap_or(0)
            .leading_zeros()
    };
    let count_bits = 64 - (sa.len().min(sb.len()) as u64).leading_zeros();
    if bits(&sa) + bits(&sb) + count_bits > 126 {
        return None;
    }

    let mut acc: FxHashMap<u128, i128> = FxHashMap::default();
    acc.reserve(sa.len() * sb.len() / 2 + 1);
    for &(ka, ca) in &sa {
        for &(kb, cb) in &sb {
            *acc.entry(ka + kb).or_insert(0) += i128::from(ca) * i128::from(cb);
        }
    }
    let mut terms: Vec<(i64, u128, i128)> = acc
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(k, c)| (k.to_be_bytes().iter().map(|&b| i64::from(b)).sum(), k, c))
        .collect();
    terms.sort_unstable_by_key(|&(d, k, _)| (d, k));
    Some(LaurentPoly {
        terms: terms
            .into_iter()
            .map(|(_, k, c)| (unpack(k), BigInt::from(c)))
            .collect(),
        nvars: 0,
    })
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Term-wise sum.
pub fn poly_add(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p + q
}

/// Exact product.
pub fn poly_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    p * q
}

/// `p / (c * m)`.
pub fn poly_div_term(p: &LaurentPoly, c: &BigInt, m: &Monomial) -> Result<LaurentPoly> {
    p.div_term(c, m)
}
