//! Weyl filtration and global dimensions of the Schur algebras `S(n, r)`
//! and `S_q(n, r)`.
//!
//! Two parameter ranges are settled exactly:
//! * `c > n`: `wfd = (n-1) * floor(r / c)`, attained by an explicit regular
//!   partition of `r`;
//! * `n = c` and `c | r`: `wfd = (c-1) * r / c`, attained by `(r, 0, ..., 0)`.
//!
//! In both cases the global dimension is `2 * wfd`. Everywhere else
//! `(n-1) * floor(r / c)` is only an upper bound and is labelled as such.

use serde::{Deserialize, Serialize};

use crate::alcoves::{d_closed_form, is_regular};
use crate::error::{Error, Result};
use crate::homdim::Status;
use crate::lattice::{partitions, Context, Mode, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurDimResult {
    pub n: usize,
    pub r: u64,
    pub c: i64,
    pub mode: Mode,
    pub wfd: u64,
    pub glob: u64,
    pub status: Status,
    pub witness: Option<Partition>,
}

/// Whether `wfd S(n, r)` is known exactly rather than only bounded above.
fn exact_range(ctx: &Context, r: u64) -> bool {
    let (n, c) = (ctx.n() as i64, ctx.c());
    c > n || (c == n && r.is_multiple_of(c as u64))
}

pub fn wfd_schur(ctx: &Context, r: u64) -> Result<SchurDimResult> {
    let bound = symmetric_power_wfd_bound(ctx, r);
    let (status, witness) = if exact_range(ctx, r) {
        (Status::Exact, Some(witness_weight(ctx, r)?))
    } else {
        (Status::UpperBound, None)
    };
    Ok(SchurDimResult {
        n: ctx.n(),
        r,
        c: ctx.c(),
        mode: ctx.mode(),
        wfd: bound,
        glob: 2 * bound,
        status,
        witness,
    })
}

/// One result per degree `0..=r_max`.
pub fn schur_sweep(ctx: &Context, r_max: u64) -> Result<Vec<SchurDimResult>> {
    (0..=r_max).map(|r| wfd_schur(ctx, r)).collect()
}

/// A regular partition of `r` with `d` equal to `wfd S(n, r)`.
///
/// For `c > n` write `r = r1 c + r0` and `r0 = b n + a` with `0 <= a < n`;
/// the witness is `(r1 c + 1, 1^{a-1}, 0^{n-a}) + b (1^n)`, or
/// `(r1 c, 0^{n-1}) + b (1^n)` when `a = 0`. For `n = c | r` it is `(r, 0^{n-1})`.
pub fn witness_weight(ctx: &Context, r: u64) -> Result<Partition> {
    let n = ctx.n();
    let c = ctx.c() as u64;
    if !exact_range(ctx, r) {
        return Err(Error::Precondition(format!(
            "no witness weight for n = {n}, r = {r}, c = {c}: need c > n, or n = c dividing r"
        )));
    }
    let mut parts = vec![0i64; n];
    if c == n as u64 {
        parts[0] = r as i64;
        return Partition::new(parts);
    }
    let (r1, r0) = (r / c, r % c);
    let (b, a) = (r0 / n as u64, (r0 % n as u64) as usize);
    parts[0] = (r1 * c) as i64;
    if a >= 1 {
        parts[0] += 1;
        for p in parts.iter_mut().take(a).skip(1) {
            *p = 1;
        }
    }
    for p in parts.iter_mut() {
        *p += b as i64;
    }
    Partition::new(parts)
}

/// `floor(lambda / c) = sum_i floor(lambda_i / c)`.
pub fn floor_lambda_over_c(lambda: &Partition, ctx: &Context) -> u64 {
    lambda.parts().iter().map(|&x| (x / ctx.c()) as u64).sum()
}

/// `wfd S^r E <= (n-1) floor(r / c)`.
pub fn symmetric_power_wfd_bound(ctx: &Context, r: u64) -> u64 {
    (ctx.n() as u64 - 1) * (r / ctx.c() as u64)
}

/// `wfd (S^{λ_1} E ⊗ ... ⊗ S^{λ_n} E) <= sum_i (n-1) floor(λ_i / c)`, by
/// subadditivity over tensor factors. Bound only.
pub fn tensor_symmetric_power_wfd_bound(lambda: &Partition, ctx: &Context) -> u64 {
    lambda
        .parts()
        .iter()
        .map(|&x| symmetric_power_wfd_bound(ctx, x as u64))
        .sum()
}

/// The largest `d` over regular partitions of `r`, with every partition attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularMax {
    /// `None` when `Lambda(n, r)` has no regular member.
    pub value: Option<u64>,
    pub argmax: Vec<Partition>,
}

pub fn max_d_over_regular(ctx: &Context, r: u64) -> Result<RegularMax> {
    ctx.require_regular_range()?;
    let mut best = RegularMax {
        value: None,
        argmax: Vec::new(),
    };
    for p in partitions(ctx.n(), r) {
        if !is_regular(p.as_weight(), ctx)? {
            continue;
        }
        let d = d_closed_form(p.as_weight(), ctx)?;
        match best.value {
            Some(v) if d < v => {}
            Some(v) if d == v => best.argmax.push(p),
            _ => {
                best.value = Some(d);
                best.argmax = vec![p];
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, c: i64) -> Context {
        Context::classical(n, c).unwrap()
    }

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn wfd_examples() {
        let res = wfd_schur(&ctx(2, 3), 7).unwrap();
        assert_eq!((res.wfd, res.glob, res.status), (2, 4, Status::Exact));
        assert_eq!(res.witness, Some(part(&[7, 0])));

        let res = wfd_schur(&ctx(3, 3), 6).unwrap();
        assert_eq!((res.wfd, res.glob, res.status), (4, 8, Status::Exact));
        assert_eq!(res.witness, Some(part(&[6, 0, 0])));

        let res = wfd_schur(&ctx(3, 5), 2).unwrap();
        assert_eq!((res.wfd, res.glob, res.status), (0, 0, Status::Exact));

        let res = wfd_schur(&ctx(3, 3), 4).unwrap();
        assert_eq!(res.status, Status::UpperBound);
        assert_eq!(res.witness, None);
        assert_eq!(res.wfd, 2);
        assert_eq!(wfd_schur(&ctx(4, 3), 9).unwrap().status, Status::UpperBound);
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_weight(&ctx(2, 3), 7).unwrap(), part(&[7, 0]));
        assert_eq!(witness_weight(&ctx(3, 5), 5).unwrap(), part(&[5, 0, 0]));
        assert_eq!(witness_weight(&ctx(3, 3), 6).unwrap(), part(&[6, 0, 0]));
        // r = 9, c = 5, n = 2: r1 = 1, r0 = 4 = 2*2 + 0
        assert_eq!(witness_weight(&ctx(2, 5), 9).unwrap(), part(&[7, 2]));
        // r = 13, c = 7, n = 4: r1 = 1, r0 = 6 = 1*4 + 2
        assert_eq!(witness_weight(&ctx(4, 7), 13).unwrap(), part(&[9, 2, 1, 1]));
        assert_eq!(witness_weight(&ctx(3, 5), 0).unwrap(), part(&[0, 0, 0]));
        assert!(witness_weight(&ctx(3, 3), 4).is_err());
        assert!(witness_weight(&ctx(4, 3), 6).is_err());
    }

    #[test]
    fn witnesses_are_regular_with_the_right_distance() {
        for (n, c) in [
            (2usize, 3i64),
            (2, 5),
            (3, 5),
            (4, 5),
            (3, 7),
            (4, 7),
            (6, 7),
        ] {
            let cx = ctx(n, c);
            for r in 0..=(4 * c as u64) {
                let wt = witness_weight(&cx, r).unwrap();
                assert_eq!(wt.degree(), r as i64);
                assert!(is_regular(wt.as_weight(), &cx).unwrap(), "{wt}");
                assert_eq!(
                    d_closed_form(wt.as_weight(), &cx).unwrap(),
                    (n as u64 - 1) * (r / c as u64)
                );
            }
        }
        for c in [2i64, 3, 5] {
            let cx = ctx(c as usize, c);
            for m in 0..=5u64 {
                let wt = witness_weight(&cx, m * c as u64).unwrap();
                assert!(is_regular(wt.as_weight(), &cx).unwrap());
                assert_eq!(
                    d_closed_form(wt.as_weight(), &cx).unwrap(),
                    (c as u64 - 1) * m
                );
            }
        }
    }

    #[test]
    fn floors_and_bounds() {
        assert_eq!(floor_lambda_over_c(&part(&[7, 0]), &ctx(2, 3)), 2);
        assert_eq!(floor_lambda_over_c(&part(&[3, 3, 3]), &ctx(3, 3)), 3);
        assert_eq!(floor_lambda_over_c(&part(&[2, 1]), &ctx(2, 3)), 0);
        assert_eq!(symmetric_power_wfd_bound(&ctx(2, 3), 7), 2);
        assert_eq!(
            tensor_symmetric_power_wfd_bound(&part(&[3, 3]), &ctx(2, 3)),
            2
        );
        assert_eq!(symmetric_power_wfd_bound(&ctx(4, 3), 2), 0);
    }

    #[test]
    fn regular_maximum_examples() {
        let m = max_d_over_regular(&ctx(2, 3), 7).unwrap();
        assert_eq!(m.value, Some(2));
        assert_eq!(m.argmax, vec![part(&[7, 0])]);
        let m = max_d_over_regular(&ctx(2, 3), 2).unwrap();
        assert_eq!(m.value, Some(0));
        assert_eq!(m.argmax, vec![part(&[1, 1])]);
        let m = max_d_over_regular(&ctx(3, 5), 5).unwrap();
        assert_eq!(m.value, Some(2));
        assert_eq!(m.argmax[0], part(&[5, 0, 0]));
        // n = c = 3 with 3 not dividing r: no regular partitions at all
        let m = max_d_over_regular(&ctx(3, 3), 4).unwrap();
        assert_eq!(m.value, None);
        assert!(m.argmax.is_empty());
        assert!(max_d_over_regular(&ctx(3, 2), 4).is_err());
    }

    #[test]
    fn exhaustive_maximum_matches_formula() {
        for c in [5i64, 7] {
            for n in 2..=4usize {
                let cx = ctx(n, c);
                for r in 0..=(4 * c as u64) {
                    let m = max_d_over_regular(&cx, r).unwrap();
                    let res = wfd_schur(&cx, r).unwrap();
                    assert_eq!(m.value, Some(res.wfd), "n={n} c={c} r={r}");
                    assert!(m.argmax.contains(res.witness.as_ref().unwrap()));
                    assert_eq!(res.glob, 2 * res.wfd);
                }
            }
        }
    }

    #[test]
    fn exact_values_respect_symmetric_power_bound() {
        for (n, c) in [(2usize, 3i64), (3, 5), (4, 5), (3, 3)] {
            let cx = ctx(n, c);
            for r in 0..=20u64 {
                let res = wfd_schur(&cx, r).unwrap();
                if res.status != Status::Exact {
                    continue;
                }
                assert!(res.wfd <= symmetric_power_wfd_bound(&cx, r));
                let wt = res.witness.unwrap();
                assert!(res.wfd <= tensor_symmetric_power_wfd_bound(&wt, &cx));
                if wt.length() <= 1 {
                    assert_eq!(res.wfd, tensor_symmetric_power_wfd_bound(&wt, &cx));
                }
            }
        }
    }

    #[test]
    fn quantum_mode_changes_no_numbers() {
        for (n, c) in [(2usize, 3i64), (3, 5), (4, 7), (3, 3), (4, 2)] {
            let classical = ctx(n, c);
            let quantum = classical.with_mode(Mode::Quantum);
            for r in 0..=30u64 {
                let a = wfd_schur(&classical, r).unwrap();
                let b = wfd_schur(&quantum, r).unwrap();
                assert_eq!(
                    (a.wfd, a.glob, a.status, &a.witness),
                    (b.wfd, b.glob, b.status, &b.witness)
                );
                assert_eq!(b.mode, Mode::Quantum);
            }
        }
    }

    #[test]
    fn sweep_rows_are_ordered() {
        let rows = schur_sweep(&ctx(2, 3), 20).unwrap();
        assert_eq!(rows.len(), 21);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.r, r as u64);
            assert_eq!(row.wfd, r as u64 / 3);
        }
        let text = serde_json::to_string(&rows).unwrap();
        assert_eq!(
            serde_json::from_str::<Vec<SchurDimResult>>(&text).unwrap(),
            rows
        );
    }
}
