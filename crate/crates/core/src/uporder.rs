//! The up-arrow order on weights.
//!
//! `s_{alpha,mc} . lambda` sits below `lambda` whenever
//! `<lambda + rho, alpha^vee> >= mc`; the order is the transitive closure.
//! Covers are pruned to those that strictly lower the hyperplane distance
//! `d`, which keeps every search finite even though the level `m` is
//! unbounded below.
//!
//! `Pi(lambda)` is computed as the set of dominant weights reachable from
//! `lambda` through chains in all of `X`, not only through dominant weights.
//! For regular members both readings give the same set; for singular ones
//! the `X`-chain closure is the more inclusive choice.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alcoves::{d_separating_count, dot_reflect, is_regular, linked, AffineReflection};
use crate::error::{Error, Result};
use crate::lattice::{pairing_rho, Context, Weight};

/// Where the members of a chain may live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    /// Any weight; the bottom of a maximal chain must lie in the closure of `C`.
    #[serde(rename = "X")]
    All,
    /// Dominant weights only.
    #[serde(rename = "Xplus")]
    Dominant,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::All => f.write_str("X"),
            Domain::Dominant => f.write_str("Xplus"),
        }
    }
}

/// An ascending chain `mu_0 ↑ mu_1 ↑ ... ↑ mu_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub weights: Vec<Weight>,
    pub domain: Domain,
}

impl Chain {
    /// Number of steps, one less than the number of weights.
    pub fn length(&self) -> usize {
        self.weights.len().saturating_sub(1)
    }

    pub fn top(&self) -> Option<&Weight> {
        self.weights.last()
    }

    /// Checks every chain invariant: each step is a single affine reflection
    /// going up, members are distinct, `d` strictly increases, and all
    /// members are dominant when the domain asks for it.
    pub fn validate(&self, ctx: &Context) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(format!("invalid chain {self}: {msg}")));
        if self.domain == Domain::Dominant {
            if let Some(w) = self.weights.iter().find(|w| !w.is_dominant()) {
                return fail(format!("{w} is not dominant"));
            }
        }
        for pair in self.weights.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if lo == hi {
                return fail(format!("repeated member {lo}"));
            }
            if d_separating_count(lo, ctx)? >= d_separating_count(hi, ctx)? {
                return fail(format!("d does not increase from {lo} to {hi}"));
            }
            if find_reflection(hi, lo, ctx)?.is_none() {
                return fail(format!("{lo} is not a single reflection below {hi}"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                f.write_str(" ↑ ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// `Pi(lambda)`: the dominant weights up-below `lambda`, ascending by `d`
/// and reverse-lexicographic within equal `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturatedSet {
    pub top: Weight,
    pub members: Vec<Weight>,
}

/// The reflection `s` with `s . upper = lower` and `<upper + rho, alpha^vee> >= mc`, if any.
pub fn find_reflection(
    upper: &Weight,
    lower: &Weight,
    ctx: &Context,
) -> Result<Option<AffineReflection>> {
    let diff = upper.checked_sub(lower)?;
    let nonzero: Vec<usize> = (0..diff.len()).filter(|&k| diff.coords()[k] != 0).collect();
    if nonzero.len() != 2 {
        return Ok(None);
    }
    let (i, j) = (nonzero[0] + 1, nonzero[1] + 1);
    let t = diff.at(i);
    if t <= 0 || diff.at(j) != -t {
        return Ok(None);
    }
    let root = crate::lattice::PosRoot::new(i, j, ctx.n())?;
    let v = pairing_rho(upper, root)?;
    // lower = upper - (v - mc) alpha, so mc = v - t
    let mc = v - t;
    if mc.rem_euclid(ctx.c()) != 0 {
        return Ok(None);
    }
    Ok(Some(AffineReflection::new(root, mc / ctx.c())))
}

/// The weights one reflection below `lambda` with strictly smaller `d`.
pub fn up_covers_down(lambda: &Weight, ctx: &Context, domain: Domain) -> Result<Vec<Weight>> {
    ctx.require_regular_range()?;
    ctx.check_len(lambda)?;
    let d_top = d_separating_count(lambda, ctx)?;
    let lowest = -(d_top as i64 + 2);
    let mut out = Vec::new();
    for alpha in ctx.positive_roots() {
        let v = pairing_rho(lambda, alpha)?;
        let highest = v.div_euclid(ctx.c());
        for m in lowest..=highest {
            let mu = dot_reflect(lambda, AffineReflection::new(alpha, m), ctx)?;
            if mu == *lambda || d_separating_count(&mu, ctx)? >= d_top {
                continue;
            }
            if domain == Domain::Dominant && !mu.is_dominant() {
                continue;
            }
            if !out.contains(&mu) {
                out.push(mu);
            }
        }
        if lowest - 1 <= highest {
            let beyond = dot_reflect(lambda, AffineReflection::new(alpha, lowest - 1), ctx)?;
            debug_assert!(
                d_separating_count(&beyond, ctx)? >= d_top,
                "level scan bound too tight at {lambda}"
            );
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Memoized longest-path search on the DAG of covers.
struct ChainSearch<'a> {
    ctx: &'a Context,
    domain: Domain,
    // longest chain length below a weight, and the next member on it
    memo: HashMap<Weight, Option<(u64, Option<Weight>)>>,
}

impl<'a> ChainSearch<'a> {
    fn new(ctx: &'a Context, domain: Domain) -> Self {
        ChainSearch {
            ctx,
            domain,
            memo: HashMap::new(),
        }
    }

    fn longest(&mut self, w: &Weight) -> Result<Option<u64>> {
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.as_ref().map(|(len, _)| *len));
        }
        let mut best: Option<(u64, Option<Weight>)> = match self.domain {
            Domain::Dominant => Some((0, None)),
            Domain::All if d_separating_count(w, self.ctx)? == 0 => Some((0, None)),
            Domain::All => None,
        };
        for mu in up_covers_down(w, self.ctx, self.domain)? {
            if let Some(len) = self.longest(&mu)? {
                if best.as_ref().is_none_or(|(b, _)| len + 1 > *b) {
                    best = Some((len + 1, Some(mu)));
                }
            }
        }
        let out = best.as_ref().map(|(len, _)| *len);
        self.memo.insert(w.clone(), best);
        Ok(out)
    }

    fn chain(&mut self, top: &Weight) -> Result<Option<Chain>> {
        if self.longest(top)?.is_none() {
            return Ok(None);
        }
        let mut down = vec![top.clone()];
        let mut cur = top.clone();
        while let Some(Some((_, Some(next)))) = self.memo.get(&cur) {
            down.push(next.clone());
            cur = next.clone();
        }
        down.reverse();
        Ok(Some(Chain {
            weights: down,
            domain: self.domain,
        }))
    }
}

fn chain_preconditions(lambda: &Weight, ctx: &Context, domain: Domain) -> Result<()> {
    ctx.require_regular_range()?;
    ctx.check_len(lambda)?;
    if domain == Domain::Dominant && !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Length of a longest chain below `lambda`: `l(lambda)` for [`Domain::All`]
/// (bottom in the closure of `C`) and `l-bar(lambda)` for [`Domain::Dominant`].
pub fn chain_length(lambda: &Weight, ctx: &Context, domain: Domain) -> Result<u64> {
    chain_preconditions(lambda, ctx, domain)?;
    ChainSearch::new(ctx, domain)
        .longest(lambda)?
        .ok_or_else(|| {
            Error::Precondition(format!("no chain from {lambda} reaches the closure of C"))
        })
}

/// A chain realizing [`chain_length`], listed bottom first.
pub fn maximal_chain(lambda: &Weight, ctx: &Context, domain: Domain) -> Result<Chain> {
    chain_preconditions(lambda, ctx, domain)?;
    ChainSearch::new(ctx, domain).chain(lambda)?.ok_or_else(|| {
        Error::Precondition(format!("no chain from {lambda} reaches the closure of C"))
    })
}

/// `mu ↑ lambda`, searched through covers in all of `X`.
pub fn up_leq(mu: &Weight, lambda: &Weight, ctx: &Context) -> Result<bool> {
    ctx.require_regular_range()?;
    ctx.check_len(mu)?;
    ctx.check_len(lambda)?;
    if mu == lambda {
        return Ok(true);
    }
    if !linked(mu, lambda, ctx)? {
        return Ok(false);
    }
    let d_target = d_separating_count(mu, ctx)?;
    let mut seen = HashSet::new();
    let mut stack = vec![lambda.clone()];
    while let Some(w) = stack.pop() {
        for next in up_covers_down(&w, ctx, Domain::All)? {
            if next == *mu {
                return Ok(true);
            }
            // d strictly drops along covers, so nothing at or below d(mu) can lead to mu
            if d_separating_count(&next, ctx)? > d_target && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(false)
}

/// Every weight reachable below `lambda` through covers in `X`, including `lambda`.
fn down_closure(lambda: &Weight, ctx: &Context) -> Result<HashSet<Weight>> {
    let mut seen = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(w) = stack.pop() {
        for next in up_covers_down(&w, ctx, Domain::All)? {
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(seen)
}

pub fn saturated_set(lambda: &Weight, ctx: &Context) -> Result<SaturatedSet> {
    ctx.require_regular_range()?;
    ctx.check_len(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut members: Vec<(u64, Weight)> = down_closure(lambda, ctx)?
        .into_iter()
        .filter(|w| w.is_dominant())
        .map(|w| d_separating_count(&w, ctx).map(|d| (d, w)))
        .collect::<Result<_>>()?;
    members.sort_unstable_by(|(da, a), (db, b)| da.cmp(db).then_with(|| b.cmp(a)));
    Ok(SaturatedSet {
        top: lambda.clone(),
        members: members.into_iter().map(|(_, w)| w).collect(),
    })
}

/// The up-order restricted to a regular orbit, where it agrees with the
/// Bruhat order on the affine Weyl group.
pub fn bruhat_leq(mu: &Weight, lambda: &Weight, ctx: &Context) -> Result<bool> {
    ctx.require_regular_range()?;
    for w in [mu, lambda] {
        ctx.check_len(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        if !is_regular(w, ctx)? {
            return Err(Error::SingularWeight(w.to_string()));
        }
    }
    if !linked(mu, lambda, ctx)? {
        return Err(Error::Unlinked(mu.to_string(), lambda.to_string()));
    }
    up_leq(mu, lambda, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcoves::{d_closed_form, in_fundamental_alcove};
    use crate::lattice::partitions;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn ctx(n: usize, c: i64) -> Context {
        Context::classical(n, c).unwrap()
    }

    #[test]
    fn cover_examples() {
        let c3 = ctx(2, 3);
        assert_eq!(
            up_covers_down(&w(&[7, 0]), &c3, Domain::Dominant).unwrap(),
            vec![w(&[5, 2])]
        );
        assert_eq!(
            up_covers_down(&w(&[5, 2]), &c3, Domain::Dominant).unwrap(),
            vec![w(&[4, 3])]
        );
        assert!(up_covers_down(&w(&[4, 3]), &c3, Domain::Dominant)
            .unwrap()
            .is_empty());
        assert!(up_covers_down(&w(&[4, 3]), &c3, Domain::All)
            .unwrap()
            .is_empty());
        // in X the reflection to (2,5) also lowers d; (-1,8) does not
        let all = up_covers_down(&w(&[7, 0]), &c3, Domain::All).unwrap();
        assert!(all.contains(&w(&[2, 5])));
        assert!(!all.contains(&w(&[-1, 8])));
        assert!(up_covers_down(&w(&[1, 0, 0]), &ctx(3, 2), Domain::All).is_err());
    }

    #[test]
    fn up_leq_examples() {
        let c3 = ctx(2, 3);
        assert!(up_leq(&w(&[4, 3]), &w(&[7, 0]), &c3).unwrap());
        assert!(!up_leq(&w(&[3, 1]), &w(&[7, 0]), &c3).unwrap());
        assert!(up_leq(&w(&[7, 0]), &w(&[7, 0]), &c3).unwrap());
        assert!(!up_leq(&w(&[7, 0]), &w(&[5, 2]), &c3).unwrap());
    }

    #[test]
    fn chain_length_examples() {
        let c3 = ctx(2, 3);
        assert_eq!(chain_length(&w(&[7, 0]), &c3, Domain::All).unwrap(), 2);
        assert_eq!(chain_length(&w(&[7, 0]), &c3, Domain::Dominant).unwrap(), 2);
        assert_eq!(chain_length(&w(&[4, 3]), &c3, Domain::Dominant).unwrap(), 0);
        assert_eq!(
            chain_length(&w(&[5, 0, 0]), &ctx(3, 5), Domain::Dominant).unwrap(),
            2
        );
        assert!(matches!(
            chain_length(&w(&[2, 5]), &c3, Domain::Dominant),
            Err(Error::NotDominant(_))
        ));
        let chain = maximal_chain(&w(&[7, 0]), &c3, Domain::Dominant).unwrap();
        assert_eq!(chain.to_string(), "(4,3) ↑ (5,2) ↑ (7,0)");
        chain.validate(&c3).unwrap();
    }

    #[test]
    fn singular_weight_chains() {
        // (6,1) at c = 3 lies on a wall; below it only the non-dominant (3,4).
        let c3 = ctx(2, 3);
        assert_eq!(chain_length(&w(&[6, 1]), &c3, Domain::Dominant).unwrap(), 0);
        assert_eq!(chain_length(&w(&[6, 1]), &c3, Domain::All).unwrap(), 1);
    }

    #[test]
    fn saturated_set_examples() {
        let c3 = ctx(2, 3);
        let pi = saturated_set(&w(&[7, 0]), &c3).unwrap();
        assert_eq!(pi.members, vec![w(&[4, 3]), w(&[5, 2]), w(&[7, 0])]);
        assert_eq!(
            saturated_set(&w(&[2, 2]), &c3).unwrap().members,
            vec![w(&[2, 2])]
        );
        assert_eq!(
            saturated_set(&w(&[1, 0, 0]), &ctx(3, 3)).unwrap().members,
            vec![w(&[1, 0, 0])]
        );
    }

    #[test]
    fn bruhat_examples() {
        let c3 = ctx(2, 3);
        assert!(bruhat_leq(&w(&[5, 2]), &w(&[7, 0]), &c3).unwrap());
        assert!(!bruhat_leq(&w(&[7, 0]), &w(&[5, 2]), &c3).unwrap());
        assert!(bruhat_leq(&w(&[7, 0]), &w(&[7, 0]), &c3).unwrap());
        assert!(matches!(
            bruhat_leq(&w(&[6, 1]), &w(&[7, 0]), &c3),
            Err(Error::SingularWeight(_))
        ));
        assert!(matches!(
            bruhat_leq(&w(&[4, 1]), &w(&[7, 0]), &c3),
            Err(Error::Unlinked(..))
        ));
    }

    #[test]
    fn bruhat_is_partial_order_on_regular_slices() {
        let c3 = ctx(2, 3);
        for r in 0..=20u64 {
            let regs: Vec<Weight> = partitions(2, r)
                .map(Weight::from)
                .filter(|p| is_regular(p, &c3).unwrap())
                .collect();
            for a in &regs {
                assert!(bruhat_leq(a, a, &c3).unwrap());
                for b in regs.iter().filter(|b| linked(a, b, &c3).unwrap()) {
                    let ab = bruhat_leq(a, b, &c3).unwrap();
                    if ab && bruhat_leq(b, a, &c3).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in regs.iter().filter(|c| linked(b, c, &c3).unwrap()) {
                        if ab && bruhat_leq(b, c, &c3).unwrap() {
                            assert!(bruhat_leq(a, c, &c3).unwrap(), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regular_chain_lengths_equal_d() {
        for (n, c) in [(2usize, 3i64), (2, 5), (3, 3), (3, 5)] {
            let cx = ctx(n, c);
            for r in 0..=(3 * c as u64) {
                for p in partitions(n, r) {
                    let lam = p.as_weight();
                    if !is_regular(lam, &cx).unwrap() {
                        continue;
                    }
                    let d = d_closed_form(lam, &cx).unwrap();
                    assert_eq!(
                        chain_length(lam, &cx, Domain::All).unwrap(),
                        d,
                        "{lam} c={c}"
                    );
                    assert_eq!(
                        chain_length(lam, &cx, Domain::Dominant).unwrap(),
                        d,
                        "{lam} c={c}"
                    );
                }
            }
        }
    }

    #[test]
    fn up_leq_implies_linked_and_smaller_d() {
        let cx = ctx(3, 3);
        let ps: Vec<Weight> = (0..=9u64)
            .flat_map(|r| partitions(3, r))
            .map(Weight::from)
            .collect();
        for a in &ps {
            let pi = saturated_set(a, &cx).unwrap();
            let da = d_separating_count(a, &cx).unwrap();
            for b in &ps {
                if up_leq(b, a, &cx).unwrap() {
                    assert!(linked(a, b, &cx).unwrap());
                    let db = d_separating_count(b, &cx).unwrap();
                    assert!(db < da || a == b);
                    assert!(pi.members.contains(b) || b.len() != a.len());
                }
            }
            // downward closed: dominant covers of members are members
            for m in &pi.members {
                for below in up_covers_down(m, &cx, Domain::Dominant).unwrap() {
                    assert!(
                        pi.members.contains(&below),
                        "{below} below {m} missing from Pi({a})"
                    );
                }
            }
            assert_eq!(pi.members.last(), Some(a));
        }
    }

    #[test]
    fn chains_reach_closure_of_c() {
        let cx = ctx(3, 5);
        let chain = maximal_chain(&w(&[9, 3, 0]), &cx, Domain::All).unwrap();
        chain.validate(&cx).unwrap();
        let bottom = &chain.weights[0];
        assert_eq!(d_separating_count(bottom, &cx).unwrap(), 0);
        assert!(
            chain.weights.len() == 1 || !in_fundamental_alcove(&chain.weights[1], &cx).unwrap()
        );
    }
}
