//! Affine reflections, the dot action, alcoves and linkage.
//!
//! The affine Weyl group `W_c` is generated by the reflections `s_{alpha, mc}`
//! in the hyperplanes `<x + rho, alpha^vee> = mc`. For `GL_n` it is
//! `S_n` acting on `lambda + rho` by permutation, extended by translations
//! through `c` times the root lattice (integer vectors with zero sum).
//! Hence `lambda` and `mu` are linked exactly when `lambda + rho` and
//! `mu + rho` have the same coordinate sum and the same multiset of residues
//! mod `c`: a permutation matches residues, and the remaining difference is
//! divisible by `c` with total zero, i.e. lies in `c` times the root lattice.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{pairing_rho, Context, PosRoot, Weight};
use crate::registry::Registry;

/// The reflection in the hyperplane `<x + rho, alpha^vee> = level * c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineReflection {
    pub root: PosRoot,
    pub level: i64,
}

impl AffineReflection {
    pub fn new(root: PosRoot, level: i64) -> Self {
        AffineReflection { root, level }
    }
}

impl fmt::Display for AffineReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{};{}]", self.root.i, self.root.j, self.level)
    }
}

impl FromStr for AffineReflection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected s[i,j;m], got '{s}'"));
        let body = s
            .trim()
            .strip_prefix("s[")
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (ij, m) = body.split_once(';').ok_or_else(bad)?;
        let (i, j) = ij.split_once(',').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        let level: i64 = m.trim().parse().map_err(|_| bad())?;
        if i == 0 || i >= j {
            return Err(bad());
        }
        Ok(AffineReflection {
            root: PosRoot { i, j },
            level,
        })
    }
}

/// One of the Coxeter generators: `s_{alpha,0}` for simple `alpha`, or
/// `s_{theta,c}` for the highest root `theta = e_1 - e_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaGenerator(AffineReflection);

impl SigmaGenerator {
    pub fn new(s: AffineReflection, ctx: &Context) -> Result<Self> {
        s.root.check(ctx.n())?;
        let simple = s.root.is_simple() && s.level == 0;
        let affine = s.root == ctx.highest_root() && s.level == 1;
        if simple || affine {
            Ok(SigmaGenerator(s))
        } else {
            Err(Error::Precondition(format!(
                "{s} is not a generator in Sigma"
            )))
        }
    }

    pub fn reflection(&self) -> AffineReflection {
        self.0
    }
}

pub fn sigma_generators(ctx: &Context) -> Vec<SigmaGenerator> {
    ctx.simple_roots()
        .map(|a| SigmaGenerator(AffineReflection::new(a, 0)))
        .chain(std::iter::once(SigmaGenerator(AffineReflection::new(
            ctx.highest_root(),
            1,
        ))))
        .collect()
}

/// `s . lambda = lambda - (<lambda + rho, alpha^vee> - m c) alpha`.
pub fn dot_reflect(lambda: &Weight, s: AffineReflection, ctx: &Context) -> Result<Weight> {
    ctx.check_len(lambda)?;
    let v = pairing_rho(lambda, s.root)?;
    let shift = s
        .level
        .checked_mul(ctx.c())
        .and_then(|mc| v.checked_sub(mc))
        .ok_or(Error::Overflow)?;
    lambda.sub_root_multiple(s.root, shift)
}

/// `0 < <lambda + rho, alpha^vee> < c` for every positive root.
pub fn in_fundamental_alcove(lambda: &Weight, ctx: &Context) -> Result<bool> {
    ctx.check_len(lambda)?;
    for a in ctx.positive_roots() {
        let v = pairing_rho(lambda, a)?;
        if v <= 0 || v >= ctx.c() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Regular means lying on no hyperplane. Both criteria are evaluated and
/// must agree.
pub fn is_regular(lambda: &Weight, ctx: &Context) -> Result<bool> {
    let by_residue = is_regular_by_residues(lambda, ctx)?;
    let by_pairing = is_regular_by_pairings(lambda, ctx)?;
    assert_eq!(
        by_residue, by_pairing,
        "regularity criteria disagree on {lambda}"
    );
    Ok(by_residue)
}

/// No `i < j` with `lambda_i - lambda_j = i - j (mod c)`.
pub fn is_regular_by_residues(lambda: &Weight, ctx: &Context) -> Result<bool> {
    ctx.check_len(lambda)?;
    let c = ctx.c();
    let n = ctx.n();
    for i in 1..n {
        for j in i + 1..=n {
            let lhs = (lambda.at(i) as i128 - lambda.at(j) as i128).rem_euclid(c as i128);
            let rhs = (i as i128 - j as i128).rem_euclid(c as i128);
            if lhs == rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No positive root with `<lambda + rho, alpha^vee>` divisible by `c`.
pub fn is_regular_by_pairings(lambda: &Weight, ctx: &Context) -> Result<bool> {
    ctx.check_len(lambda)?;
    for a in ctx.positive_roots() {
        if pairing_rho(lambda, a)?.rem_euclid(ctx.c()) == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d(lambda) = sum_{i<j} floor((lambda_i - lambda_j - i + j - 1) / c)` for dominant `lambda`.
pub fn d_closed_form(lambda: &Weight, ctx: &Context) -> Result<u64> {
    ctx.check_len(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut total: u64 = 0;
    for a in ctx.positive_roots() {
        let v = pairing_rho(lambda, a)?;
        // v >= 1 for dominant weights, so the quotient is nonnegative
        total += ((v - 1) / ctx.c()) as u64;
    }
    Ok(total)
}

/// The levels `m` whose hyperplane for one root lies strictly between the
/// pairing values `base` and `value`.
pub fn separating_levels(value: i64, base: i64, c: i64) -> impl Iterator<Item = i64> {
    let (lo, hi) = if value <= base {
        (value, base)
    } else {
        (base, value)
    };
    let first = lo.div_euclid(c);
    let last = hi.div_euclid(c) + 1;
    (first..=last).filter(move |m| {
        let mc = m * c;
        lo < mc && mc < hi
    })
}

/// Counts hyperplanes strictly separating `lambda` from the zero weight,
/// which lies in the fundamental alcove when `c >= n`. Hyperplanes through
/// `lambda` are not counted. Works for any weight, dominant or not.
pub fn d_separating_count(lambda: &Weight, ctx: &Context) -> Result<u64> {
    ctx.require_regular_range()?;
    ctx.check_len(lambda)?;
    let mut total = 0u64;
    for a in ctx.positive_roots() {
        let v = pairing_rho(lambda, a)?;
        total += separating_levels(v, a.height(), ctx.c()).count() as u64;
    }
    Ok(total)
}

/// Same `W_c` dot-orbit: equal sums of `lambda + rho` and equal residue multisets mod `c`.
pub fn linked(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<bool> {
    ctx.check_len(lambda)?;
    ctx.check_len(mu)?;
    let rho = ctx.rho();
    let a = lambda.checked_add(&rho)?;
    let b = mu.checked_add(&rho)?;
    if a.sum()? != b.sum()? {
        return Ok(false);
    }
    let residues = |w: &Weight| {
        let mut r: Vec<i64> = w.coords().iter().map(|x| x.rem_euclid(ctx.c())).collect();
        r.sort_unstable();
        r
    };
    Ok(residues(&a) == residues(&b))
}

pub fn coxeter_number(ctx: &Context) -> usize {
    ctx.coxeter_number()
}

/// Per-root alcove coordinates `floor(<lambda + rho, alpha^vee> / c)`, in
/// `positive_roots` order. Two regular weights share an alcove iff these agree.
pub fn alcove_signature(lambda: &Weight, ctx: &Context) -> Result<Vec<i64>> {
    ctx.check_len(lambda)?;
    ctx.positive_roots()
        .map(|a| pairing_rho(lambda, a).map(|v| v.div_euclid(ctx.c())))
        .collect()
}

/// A way of computing the hyperplane distance `d(lambda)`.
pub trait DistanceMethod: Send + Sync {
    fn describe(&self) -> &'static str;
    fn distance(&self, lambda: &Weight, ctx: &Context) -> Result<u64>;
}

pub struct ClosedForm;

impl DistanceMethod for ClosedForm {
    fn describe(&self) -> &'static str {
        "floor-sum formula (dominant weights)"
    }

    fn distance(&self, lambda: &Weight, ctx: &Context) -> Result<u64> {
        d_closed_form(lambda, ctx)
    }
}

pub struct SeparatingCount;

impl DistanceMethod for SeparatingCount {
    fn describe(&self) -> &'static str {
        "explicit count of separating hyperplanes"
    }

    fn distance(&self, lambda: &Weight, ctx: &Context) -> Result<u64> {
        d_separating_count(lambda, ctx)
    }
}

pub fn distance_methods() -> Registry<dyn DistanceMethod> {
    Registry::<dyn DistanceMethod>::new("distance method")
        .with("closed-form", Box::new(ClosedForm))
        .with("separating", Box::new(SeparatingCount))
}
