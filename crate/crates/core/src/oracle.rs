//! Brute-force checks that re-derive lengths and orbits without the closed forms.
//!
//! The alcove walk starts at the zero weight, which lies in `C` once
//! `c >= n`. For a regular weight with pairing `v` against `alpha`, the
//! alcove sits between the levels `floor(v/c) c` and `(floor(v/c) + 1) c`, so
//! every wall of the alcove is one of these `2 |R+|` hyperplanes. Reflecting
//! in a wall crosses exactly that hyperplane, while reflecting in a
//! non-wall crosses at least one more; so a candidate move is a wall
//! crossing iff the alcove signatures differ in one coordinate by one.
//! Walking only wall crossings is a walk on the alcove graph, whose
//! distance from `C` is the number of separating hyperplanes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::alcoves::{
    alcove_signature, d_closed_form, d_separating_count, dot_reflect, is_regular, linked,
    AffineReflection,
};
use crate::error::{Error, Result};
use crate::lattice::{pairing_rho, Context, Weight};
use crate::uporder::{chain_length, maximal_chain, Chain, Domain};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub expected: i64,
    pub observed: i64,
    pub witness: Option<Chain>,
    pub ok: bool,
}

impl VerificationReport {
    pub fn new(subject: String, expected: i64, observed: i64, witness: Option<Chain>) -> Self {
        VerificationReport {
            subject,
            expected,
            observed,
            witness,
            ok: expected == observed,
        }
    }
}

/// Wall crossings available from the alcove of a regular `lambda`.
fn wall_neighbours(lambda: &Weight, ctx: &Context) -> Result<Vec<Weight>> {
    let sig = alcove_signature(lambda, ctx)?;
    let mut out = Vec::new();
    for a in ctx.positive_roots() {
        let floor = pairing_rho(lambda, a)?.div_euclid(ctx.c());
        for m in [floor, floor + 1] {
            let next = dot_reflect(lambda, AffineReflection::new(a, m), ctx)?;
            let moved: i64 = alcove_signature(&next, ctx)?
                .iter()
                .zip(&sig)
                .map(|(x, y)| (x - y).abs())
                .sum();
            if moved == 1 {
                out.push(next);
            }
        }
    }
    Ok(out)
}

/// Breadth-first word lengths of the alcoves within `max_len` crossings of `C`,
/// keyed by the representative weight in the dot-orbit of zero.
pub fn alcove_bfs_lengths(ctx: &Context, max_len: u64) -> Result<BTreeMap<Weight, u64>> {
    ctx.require_regular_range()?;
    let start = Weight::zero(ctx.n());
    let mut depth = BTreeMap::from([(start.clone(), 0u64)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let dw = depth[&w];
        if dw == max_len {
            continue;
        }
        for next in wall_neighbours(&w, ctx)? {
            match depth.get(&next) {
                None => {
                    depth.insert(next.clone(), dw + 1);
                    queue.push_back(next);
                }
                Some(&dn) if dn.abs_diff(dw) != 1 => {
                    return Err(Error::Precondition(format!(
                        "alcove graph is not bipartite in depth: {w} at {dw}, {next} at {dn}"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    Ok(depth)
}

/// Compares the BFS depth with `d` for every visited weight: the closed form
/// on dominant weights, the separating count everywhere.
pub fn verify_bfs_lengths(ctx: &Context, max_len: u64) -> Result<VerificationReport> {
    let depth = alcove_bfs_lengths(ctx, max_len)?;
    let mut mismatches = 0i64;
    for (w, &k) in &depth {
        let mut ok = d_separating_count(w, ctx)? == k;
        if w.is_dominant() {
            ok &= d_closed_form(w, ctx)? == k;
        }
        mismatches += i64::from(!ok);
    }
    Ok(VerificationReport::new(
        format!(
            "alcove depth vs d over {} alcoves, n={}, c={}, depth<={max_len}",
            depth.len(),
            ctx.n(),
            ctx.c()
        ),
        0,
        mismatches,
        None,
    ))
}

/// `d`, the longest chain in `X` and the longest chain in `X+` must coincide
/// for a dominant regular weight. The witness is a longest dominant chain.
pub fn verify_length_equalities(lambda: &Weight, ctx: &Context) -> Result<VerificationReport> {
    ctx.require_regular_range()?;
    if !is_regular(lambda, ctx)? {
        return Err(Error::SingularWeight(lambda.to_string()));
    }
    let d = d_closed_form(lambda, ctx)?;
    let l = chain_length(lambda, ctx, Domain::All)?;
    let lbar = chain_length(lambda, ctx, Domain::Dominant)?;
    let witness = maximal_chain(lambda, ctx, Domain::Dominant)?;
    // report the first quantity that disagrees with d, if any
    let observed = [l, lbar, witness.length() as u64]
        .into_iter()
        .find(|&x| x != d)
        .unwrap_or(d);
    Ok(VerificationReport::new(
        format!(
            "lengths of {lambda} (n={}, c={}): d={d}, l={l}, lbar={lbar}",
            ctx.n(),
            ctx.c()
        ),
        d as i64,
        observed as i64,
        Some(witness),
    ))
}

/// Dominant weights with last coordinate zero and `d <= dmax`. Every dominant
/// weight is one of these shifted by a multiple of `(1, ..., 1)`, which moves
/// no hyperplane.
pub fn dominant_up_to_distance(ctx: &Context, dmax: u64) -> Result<Vec<Weight>> {
    let n = ctx.n();
    // the highest root alone contributes floor((lambda_1 + n - 2) / c)
    let top = ctx.c() * (dmax as i64 + 1);
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(k: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if k + 1 == cur.len() {
            cur[k] = 0;
            out.push(Weight::new(cur.clone()));
            return;
        }
        for v in 0..=bound {
            cur[k] = v;
            rec(k + 1, v, cur, out);
        }
    }
    let mut all = Vec::new();
    rec(0, top, &mut cur, &mut all);
    for w in all {
        if d_closed_form(&w, ctx)? <= dmax {
            out.push(w);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// [`verify_length_equalities`] for every regular weight from [`dominant_up_to_distance`].
pub fn verify_lengths_grid(ctx: &Context, dmax: u64) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for w in dominant_up_to_distance(ctx, dmax)? {
        if is_regular(&w, ctx)? {
            out.push(verify_length_equalities(&w, ctx)?);
        }
    }
    Ok(out)
}

fn in_box(w: &Weight, radius: i64) -> bool {
    w.coords().iter().all(|x| x.abs() <= radius)
}

/// Closure of `lambda` under every affine reflection whose image stays in the box.
fn reflection_closure(lambda: &Weight, ctx: &Context, radius: i64) -> Result<BTreeSet<Weight>> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    let c = ctx.c();
    while let Some(w) = stack.pop() {
        for a in ctx.positive_roots() {
            let v = pairing_rho(&w, a)?;
            // the image moves coordinate i by -k and j by +k, with k = v - mc
            let (x, y) = (w.at(a.i), w.at(a.j));
            let lo = (x - radius).max(-radius - y);
            let hi = (x + radius).min(radius - y);
            let first = lo + (v - lo).rem_euclid(c);
            let mut k = first;
            while k <= hi {
                if k != 0 {
                    let next = w.sub_root_multiple(a, k)?;
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
                k += c;
            }
        }
    }
    Ok(seen)
}

fn box_points(n: usize, radius: i64) -> impl Iterator<Item = Weight> {
    let side = (2 * radius + 1) as u64;
    let total = side.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0i64; n];
        for x in v.iter_mut().rev() {
            *x = (idx % side) as i64 - radius;
            idx /= side;
        }
        Weight::new(v)
    })
}

/// Reflection orbits against the residue criterion inside `|coord| <= radius`.
/// Weights the box closure misses are retried in a larger box, since a path
/// between two box points may need to leave it. The report counts weights on
/// which the two descriptions disagree.
pub fn verify_orbit_linkage(
    lambda: &Weight,
    ctx: &Context,
    radius: u64,
) -> Result<VerificationReport> {
    ctx.check_len(lambda)?;
    let radius = radius as i64;
    if !in_box(lambda, radius) {
        return Err(Error::Precondition(format!(
            "{lambda} lies outside the box of radius {radius}"
        )));
    }
    let near = reflection_closure(lambda, ctx, radius)?;
    let mut mismatches = 0i64;
    for w in &near {
        if !linked(lambda, w, ctx)? {
            mismatches += 1;
        }
    }
    let mut far: Option<BTreeSet<Weight>> = None;
    for w in box_points(ctx.n(), radius) {
        if near.contains(&w) || !linked(lambda, &w, ctx)? {
            continue;
        }
        if far.is_none() {
            far = Some(reflection_closure(
                lambda,
                ctx,
                radius + ctx.c() + ctx.n() as i64,
            )?);
        }
        if !far.as_ref().is_some_and(|f| f.contains(&w)) {
            mismatches += 1;
        }
    }
    Ok(VerificationReport::new(
        format!(
            "orbit of {lambda} (c={}) in box radius {radius}: {} reached in box, {} mismatches",
            ctx.c(),
            near.len(),
            mismatches
        ),
        0,
        mismatches,
        None,
    ))
}

/// The reflection closure itself, sorted.
pub fn orbit_in_box(lambda: &Weight, ctx: &Context, radius: u64) -> Result<Vec<Weight>> {
    ctx.check_len(lambda)?;
    Ok(reflection_closure(lambda, ctx, radius as i64)?
        .into_iter()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, c: i64) -> Context {
        Context::classical(n, c).unwrap()
    }

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn bfs_examples() {
        let c = ctx(2, 3);
        let depth = alcove_bfs_lengths(&c, 2).unwrap();
        assert_eq!(depth[&w([0, 0])], 0);
        // (2,2) lies in the orbit of (4,0), not of 0
        assert!(!depth.contains_key(&w([2, 2])));
        assert!(depth.keys().all(|k| linked(k, &w([0, 0]), &c).unwrap()));
        // n = 2 alcoves form a line: two neighbours per step
        assert_eq!(depth.len(), 5);
        assert_eq!(depth[&w([-1, 1])], 1);
        assert_eq!(depth[&w([2, -2])], 1);
        assert_eq!(depth[&w([3, -3])], 2);
        assert!(alcove_bfs_lengths(&ctx(3, 2), 1).is_err());
    }

    #[test]
    fn bfs_depth_equals_d() {
        for (n, c, len) in [(2, 3, 8), (2, 5, 6), (3, 3, 6), (3, 5, 5), (4, 4, 3)] {
            let rep = verify_bfs_lengths(&ctx(n, c), len).unwrap();
            assert!(rep.ok, "{rep:?}");
        }
    }

    #[test]
    fn bfs_counts_alcoves_of_each_depth() {
        // for n = 3 the alcoves at distance k from C number 3k (k >= 1)
        let depth = alcove_bfs_lengths(&ctx(3, 3), 5).unwrap();
        for k in 1..=5u64 {
            assert_eq!(depth.values().filter(|&&x| x == k).count() as u64, 3 * k);
        }
    }

    #[test]
    fn length_examples() {
        let rep = verify_length_equalities(&w([7, 0]), &ctx(2, 3)).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.expected, 2);
        assert_eq!(rep.witness.unwrap().to_string(), "(4,3) ↑ (5,2) ↑ (7,0)");
        let rep = verify_length_equalities(&w([1, 0]), &ctx(2, 3)).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.expected, 0);
        let rep = verify_length_equalities(&w([5, 0, 0]), &ctx(3, 5)).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.expected, 2);
        assert!(matches!(
            verify_length_equalities(&w([6, 1]), &ctx(2, 3)),
            Err(Error::SingularWeight(_))
        ));
    }

    #[test]
    fn length_grid_small() {
        for (n, c) in [(2, 3), (3, 3)] {
            let reps = verify_lengths_grid(&ctx(n, c), 3).unwrap();
            assert!(!reps.is_empty());
            for rep in reps {
                assert!(rep.ok, "{rep:?}");
                assert_eq!(rep.witness.as_ref().unwrap().length() as i64, rep.expected);
            }
        }
    }

    #[test]
    fn dominant_enumeration_is_complete() {
        let c = ctx(3, 3);
        let got = dominant_up_to_distance(&c, 2).unwrap();
        for a in 0..=20i64 {
            for b in 0..=a {
                let lam = w([a, b, 0]);
                assert_eq!(
                    got.contains(&lam),
                    d_closed_form(&lam, &c).unwrap() <= 2,
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn linkage_examples() {
        let c = ctx(2, 3);
        let orbit = orbit_in_box(&w([4, 0]), &c, 8).unwrap();
        assert!(orbit.contains(&w([2, 2])));
        assert!(orbit.contains(&w([-1, 5])));
        assert!(!orbit.contains(&w([3, 1])));
        assert!(verify_orbit_linkage(&w([4, 0]), &c, 8).unwrap().ok);
        // no reflection keeps (0,0) inside a radius-0 box
        assert_eq!(orbit_in_box(&w([0, 0]), &c, 0).unwrap(), vec![w([0, 0])]);
        assert!(verify_orbit_linkage(&w([0, 0]), &c, 0).unwrap().ok);
        assert!(verify_orbit_linkage(&w([9, 0]), &c, 8).is_err());
    }

    #[test]
    fn linkage_matches_residues_on_boxes() {
        for (n, c, radius) in [
            (2, 2, 6),
            (2, 3, 7),
            (2, 5, 6),
            (3, 2, 3),
            (3, 3, 3),
            (3, 5, 3),
        ] {
            let cx = ctx(n, c);
            for lam in box_points(n, 1) {
                let rep = verify_orbit_linkage(&lam, &cx, radius).unwrap();
                assert!(rep.ok, "{rep:?}");
            }
        }
    }

    #[test]
    fn closures_partition_the_box() {
        let cx = ctx(2, 3);
        let a = orbit_in_box(&w([4, 0]), &cx, 6).unwrap();
        let b = orbit_in_box(&w([3, 1]), &cx, 6).unwrap();
        assert!(a.iter().all(|x| !b.contains(x)));
    }

    #[test]
    fn report_json_round_trip() {
        let rep = verify_length_equalities(&w([7, 0]), &ctx(2, 3)).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            serde_json::from_str::<VerificationReport>(&text).unwrap(),
            rep
        );
    }
}
