//! Weights, partitions and positive roots for `GL_n`.
//!
//! The weight lattice is `Z^n` with basis `e_1, ..., e_n`. We use the
//! integral surrogate `rho = (n-1, n-2, ..., 0)` for the half sum of positive
//! roots; every formula below only sees coordinate differences, so the
//! pairing `<lambda + rho, alpha^vee>` comes out exactly as for the true
//! half sum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `c` is the characteristic `p` of the ground field.
    Classical,
    /// `c` is the order `l` of the root of unity.
    Quantum,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Classical => f.write_str("classical"),
            Mode::Quantum => f.write_str("quantum"),
        }
    }
}

/// The pair `(n, c)` plus the mode flag. Every computation is relative to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Context {
    n: usize,
    c: i64,
    mode: Mode,
}

impl Context {
    pub fn new(n: usize, c: i64, mode: Mode) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidContext(format!(
                "rank n = {n} must be at least 2"
            )));
        }
        if c < 2 {
            return Err(Error::InvalidContext(format!(
                "modulus c = {c} must be at least 2"
            )));
        }
        Ok(Context { n, c, mode })
    }

    pub fn classical(n: usize, p: i64) -> Result<Self> {
        Self::new(n, p, Mode::Classical)
    }

    pub fn quantum(n: usize, l: i64) -> Result<Self> {
        Self::new(n, l, Mode::Quantum)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Same `(n, c)` with the other mode.
    pub fn with_mode(&self, mode: Mode) -> Self {
        Context { mode, ..*self }
    }

    /// Coxeter number of type `A_{n-1}`.
    pub fn coxeter_number(&self) -> usize {
        self.n
    }

    /// Regular weights (and the zero weight inside `C`) need `c >= h = n`.
    pub fn require_regular_range(&self) -> Result<()> {
        if self.c < self.n as i64 {
            Err(Error::ModulusTooSmall {
                c: self.c,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.n {
            Err(Error::LengthMismatch {
                expected: self.n,
                got: w.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn rho(&self) -> Weight {
        Weight((0..self.n).rev().map(|k| k as i64).collect())
    }

    /// All `e_i - e_j` with `i < j`, lexicographically.
    pub fn positive_roots(&self) -> impl Iterator<Item = PosRoot> + '_ {
        let n = self.n;
        (1..n).flat_map(move |i| (i + 1..=n).map(move |j| PosRoot { i, j }))
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = PosRoot> + '_ {
        (1..self.n).map(|i| PosRoot { i, j: i + 1 })
    }

    pub fn highest_root(&self) -> PosRoot {
        PosRoot { i: 1, j: self.n }
    }
}

/// A weight: an integer `n`-tuple over the basis `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based coordinate access, matching root indices.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sum(&self) -> Result<i64> {
        self.0
            .iter()
            .try_fold(0i64, |acc, &x| acc.checked_add(x).ok_or(Error::Overflow))
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        same_len(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        same_len(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// `self - k * (e_i - e_j)`.
    pub fn sub_root_multiple(&self, root: PosRoot, k: i64) -> Result<Weight> {
        root.check(self.len())?;
        let mut out = self.0.clone();
        out[root.i - 1] = out[root.i - 1].checked_sub(k).ok_or(Error::Overflow)?;
        out[root.j - 1] = out[root.j - 1].checked_add(k).ok_or(Error::Overflow)?;
        Ok(Weight(out))
    }

    /// Adds `k` to every coordinate (tensoring with a power of the determinant).
    pub fn shift(&self, k: i64) -> Result<Weight> {
        self.0
            .iter()
            .map(|a| a.checked_add(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

fn same_len(a: &Weight, b: &Weight) -> Result<()> {
    if a.len() != b.len() {
        Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        })
    } else {
        Ok(())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
}

impl FromStr for Weight {
    type Err = Error;

    /// `"7,0"`, `"(7,0)"` and `"-1, 5"` are all accepted.
    fn from_str(s: &str) -> Result<Self> {
        let body = strip_parens(s);
        if body.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight '{s}'")));
        }
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad coordinate '{}': {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A dominant weight with nonnegative coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Weight", into = "Weight")]
pub struct Partition(Weight);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        Partition::try_from(Weight(parts))
    }

    pub fn degree(&self) -> i64 {
        self.0 .0.iter().sum()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0 .0
    }

    pub fn as_weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0 .0.iter().filter(|&&x| x > 0).count()
    }

    /// Pads with zeros (or drops trailing zeros) to exactly `n` entries.
    pub fn resized(&self, n: usize) -> Result<Partition> {
        if self.length() > n {
            return Err(Error::TooManyParts(self.to_string(), n));
        }
        let mut v: Vec<i64> = self.0 .0.iter().copied().filter(|&x| x > 0).collect();
        v.resize(n, 0);
        Ok(Partition(Weight(v)))
    }
}

impl TryFrom<Weight> for Partition {
    type Error = Error;

    fn try_from(w: Weight) -> Result<Self> {
        if !w.is_dominant() || w.0.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(format!("{w} (as a partition)")));
        }
        Ok(Partition(w))
    }
}

impl From<Partition> for Weight {
    fn from(p: Partition) -> Weight {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts plain lists plus exponent notation: `"5,1^2,0^2"` is `(5,1,1,0,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = strip_parens(s);
        if body.trim().is_empty() {
            return Err(Error::Parse(format!("empty partition '{s}'")));
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let base: i64 = base
                .parse()
                .map_err(|e| Error::Parse(format!("bad part '{tok}': {e}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|e| Error::Parse(format!("bad exponent '{tok}': {e}")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// The positive root `e_i - e_j`, `1 <= i < j <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosRoot {
    pub i: usize,
    pub j: usize,
}

impl PosRoot {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        let r = PosRoot { i, j };
        r.check(n)?;
        Ok(r)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.i >= 1 && self.i < self.j && self.j <= n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                i: self.i,
                j: self.j,
                n,
            })
        }
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    /// `<rho, alpha^vee>`.
    pub fn height(&self) -> i64 {
        (self.j - self.i) as i64
    }
}

impl fmt::Display for PosRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// `<lambda + rho, alpha^vee> = lambda_i - lambda_j + j - i`.
pub fn pairing_rho(lambda: &Weight, alpha: PosRoot) -> Result<i64> {
    alpha.check(lambda.len())?;
    lambda
        .at(alpha.i)
        .checked_sub(lambda.at(alpha.j))
        .and_then(|d| d.checked_add(alpha.height()))
        .ok_or(Error::Overflow)
}

pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.is_dominant()
}

/// `mu <= lambda` iff `lambda - mu` is a nonnegative integer combination of
/// simple roots; in type A that is: every prefix sum of `lambda - mu` is
/// nonnegative and the total is zero.
pub fn dominance_leq(mu: &Weight, lambda: &Weight) -> Result<bool> {
    let diff = lambda.checked_sub(mu)?;
    let mut prefix = 0i64;
    for &x in diff.coords() {
        prefix = prefix.checked_add(x).ok_or(Error::Overflow)?;
        if prefix < 0 {
            return Ok(false);
        }
    }
    Ok(prefix == 0)
}

/// Streams the partitions of `r` into at most `n` parts (padded to length
/// `n`) in reverse-lexicographic order, starting at `(r, 0, ..., 0)`.
pub fn partitions(n: usize, r: u64) -> Partitions {
    assert!(n >= 1, "partitions need at least one part");
    let mut first = vec![0i64; n];
    first[0] = r as i64;
    Partitions {
        current: Some(first),
    }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<i64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let n = cur.len();
        // Next: decrement the rightmost part that can absorb the tail.
        let mut next = None;
        let mut tail: i64 = cur.iter().skip(n.saturating_sub(1)).sum();
        for k in (0..n.saturating_sub(1)).rev() {
            let v = cur[k] - 1;
            let spill = tail + 1;
            if v >= 0 && (n - 1 - k) as i64 * v >= spill {
                let mut a = cur.clone();
                a[k] = v;
                let mut rem = spill;
                for slot in a.iter_mut().skip(k + 1) {
                    let put = rem.min(v);
                    *slot = put;
                    rem -= put;
                }
                next = Some(a);
                break;
            }
            tail += cur[k];
        }
        self.current = next;
        Some(Partition(Weight(cur)))
    }
}
