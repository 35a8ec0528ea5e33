//! Symmetric polynomials in `n` variables, stored in the monomial basis.
//!
//! Characters of the induced modules `∇(λ)` for `GL_n` are Schur
//! polynomials, and the symmetric and exterior powers of the natural module
//! have characters `h_r` and `e_r`. That is enough to check the character
//! identities behind the hook short exact sequences; the sequences
//! themselves (as module maps) are not modelled.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{partitions, Context, Partition};

/// `sum_λ coeff_λ m_λ` where `m_λ` is the monomial symmetric polynomial.
/// Keys are weakly decreasing, nonnegative and padded to length `n`; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    n: usize,
    coeffs: BTreeMap<Vec<i64>, i64>,
}

impl SymFunc {
    pub fn zero(n: usize) -> Self {
        SymFunc {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(&vec![0; n], n, 1)
    }

    /// `coeff * m_key`; `key` is sorted and padded here.
    pub fn monomial(key: &[i64], n: usize, coeff: i64) -> Self {
        let mut f = Self::zero(n);
        f.add_term(normalize(key, n), coeff);
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, key: &[i64]) -> i64 {
        self.coeffs
            .get(&normalize(key, self.n))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> + '_ {
        self.coeffs.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    fn add_term(&mut self, key: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymFunc, scale: i64) -> Result<()> {
        same_vars(self, other)?;
        for (k, &v) in &other.coeffs {
            self.add_term(k.clone(), v * scale);
        }
        Ok(())
    }

    /// The monomial-basis term that is largest in lexicographic order.
    pub fn leading_term(&self) -> Option<(&[i64], i64)> {
        self.coeffs
            .iter()
            .next_back()
            .map(|(k, &v)| (k.as_slice(), v))
    }

    /// Value at `x_1 = ... = x_n = 1`; for a character this is the dimension.
    pub fn evaluate_at_ones(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(k, &v)| v * distinct_permutations(k).len() as i64)
            .sum()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (key, v)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let parts: Vec<String> = key.iter().map(|x| x.to_string()).collect();
            write!(f, "{v}*m({})", parts.join(","))?;
        }
        Ok(())
    }
}

fn same_vars(a: &SymFunc, b: &SymFunc) -> Result<()> {
    if a.n != b.n {
        Err(Error::LengthMismatch {
            expected: a.n,
            got: b.n,
        })
    } else {
        Ok(())
    }
}

fn normalize(key: &[i64], n: usize) -> Vec<i64> {
    let mut k: Vec<i64> = key.to_vec();
    k.sort_unstable_by(|a, b| b.cmp(a));
    k.resize(n, 0);
    k
}

/// Every distinct rearrangement of `key`.
fn distinct_permutations(key: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = key.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation, which skips duplicates by construction
    while let Some(i) = (0..sorted.len().saturating_sub(1))
        .rev()
        .find(|&i| sorted[i] < sorted[i + 1])
    {
        let j = (i + 1..sorted.len())
            .rev()
            .find(|&j| sorted[j] > sorted[i])
            .unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// `m_a * m_b` in the monomial basis.
fn multiply_monomials(a: &[i64], b: &[i64], n: usize) -> SymFunc {
    let perms_a = distinct_permutations(a);
    let mut out = SymFunc::zero(n);
    let mut seen = std::collections::BTreeSet::new();
    for alpha in &perms_a {
        let target = normalize(
            &alpha.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>(),
            n,
        );
        if !seen.insert(target.clone()) {
            continue;
        }
        // coefficient of x^target: rearrangements alpha of a with target - alpha a rearrangement of b
        let count = perms_a
            .iter()
            .filter(|al| {
                let rest: Vec<i64> = target.iter().zip(al.iter()).map(|(t, x)| t - x).collect();
                rest.iter().all(|&x| x >= 0) && normalize(&rest, n) == b
            })
            .count() as i64;
        out.add_term(target, count);
    }
    out
}

pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    same_vars(f, g)?;
    let mut out = SymFunc::zero(f.n);
    for (a, &ca) in &f.coeffs {
        for (b, &cb) in &g.coeffs {
            out.add_scaled(&multiply_monomials(a, b, f.n), ca * cb)?;
        }
    }
    Ok(out)
}

/// Inner shapes `nu` with `shape / nu` a horizontal strip of `size` cells:
/// `shape_{i+1} <= nu_i <= shape_i`.
fn strip_removals(shape: &[i64], size: i64) -> Vec<Vec<i64>> {
    fn rec(i: usize, left: i64, shape: &[i64], nu: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == shape.len() {
            if left == 0 {
                out.push(nu.clone());
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for v in lo..=shape[i] {
            let take = shape[i] - v;
            if take > left {
                continue;
            }
            nu[i] = v;
            rec(i + 1, left - take, shape, nu, out);
        }
    }
    let mut out = Vec::new();
    rec(0, size, shape, &mut vec![0; shape.len()], &mut out);
    out
}

/// Number of semistandard tableaux of shape `shape` and content `content`,
/// built letter by letter: the cells holding the largest letter form a
/// horizontal strip.
pub fn kostka(shape: &[i64], content: &[i64]) -> u64 {
    fn go(
        shape: Vec<i64>,
        k: usize,
        content: &[i64],
        memo: &mut HashMap<(Vec<i64>, usize), u64>,
    ) -> u64 {
        if k == 0 {
            return u64::from(shape.iter().all(|&x| x == 0));
        }
        if let Some(&hit) = memo.get(&(shape.clone(), k)) {
            return hit;
        }
        let total = strip_removals(&shape, content[k - 1])
            .into_iter()
            .map(|nu| go(nu, k - 1, content, memo))
            .sum();
        memo.insert((shape, k), total);
        total
    }
    if shape.iter().sum::<i64>() != content.iter().sum::<i64>() {
        return 0;
    }
    go(shape.to_vec(), content.len(), content, &mut HashMap::new())
}

/// The Schur polynomial `s_λ` in `n` variables, by counting tableaux.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Result<SymFunc> {
    let shape = lambda.resized(n)?;
    let mut out = SymFunc::zero(n);
    for nu in partitions(n, shape.degree() as u64) {
        let k = kostka(shape.parts(), nu.parts());
        out.add_term(nu.parts().to_vec(), k as i64);
    }
    Ok(out)
}

/// `h_r`: the sum of all monomials of degree `r`.
pub fn complete_h(r: u64, n: usize) -> SymFunc {
    let mut out = SymFunc::zero(n);
    for nu in partitions(n, r) {
        out.add_term(nu.parts().to_vec(), 1);
    }
    out
}

/// `e_r = m_{1^r}`.
pub fn elementary_e(r: u64, n: usize) -> Result<SymFunc> {
    if r as usize > n {
        return Err(Error::Precondition(format!(
            "e_{r} vanishes in {n} variables"
        )));
    }
    let mut key = vec![0i64; n];
    key.iter_mut().take(r as usize).for_each(|x| *x = 1);
    Ok(SymFunc::monomial(&key, n, 1))
}

/// Expands `f` in Schur polynomials by repeatedly cancelling the lexicographically
/// leading monomial, which is always the leading term of exactly one `s_λ`.
/// Each step removes the current leading key and adds only smaller ones, so
/// the loop ends.
pub fn to_schur_basis(f: &SymFunc) -> Result<BTreeMap<Partition, i64>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, coeff)) = rest.leading_term() {
        let lead = Partition::new(lead.to_vec()).map_err(|_| {
            Error::BasisConversion(format!("leading key {lead:?} is not a partition"))
        })?;
        let s = schur_polynomial(&lead, f.n)?;
        if s.leading_term().map(|(k, v)| (k.to_vec(), v)) != Some((lead.parts().to_vec(), 1)) {
            return Err(Error::BasisConversion(format!(
                "s{lead} does not lead with m{lead}"
            )));
        }
        rest.add_scaled(&s, -coeff)?;
        *out.entry(lead).or_insert(0) += coeff;
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub partition: Partition,
    pub multiplicity: i64,
}

/// Outcome of checking `h_{mc-j} e_j = s_{(mc-j, 1^j)} + s_{(mc-j+1, 1^{j-1})}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriReport {
    pub lhs: String,
    pub constituents: Vec<Constituent>,
    /// The two hook weights: the submodule's, then the quotient's.
    pub expected: Vec<Partition>,
    pub ok: bool,
    pub note: String,
}

pub fn verify_pieri_ses(m: u64, j: u64, ctx: &Context) -> Result<PieriReport> {
    let n = ctx.n() as u64;
    let mc = m as i64 * ctx.c();
    if !(1..n).contains(&j) || m < 1 || mc - (j as i64) < 1 {
        return Err(Error::Precondition(format!(
            "need 1 <= j <= n-1, m >= 1 and mc - j >= 1 (m = {m}, j = {j}, n = {n}, c = {})",
            ctx.c()
        )));
    }
    let a = mc - j as i64;
    let n = ctx.n();
    let product = multiply(&complete_h(a as u64, n), &elementary_e(j, n)?)?;
    let expansion = to_schur_basis(&product)?;
    let hook = |first: i64, ones: u64| {
        let mut v = vec![0i64; n];
        v[0] = first;
        v.iter_mut()
            .skip(1)
            .take(ones as usize)
            .for_each(|x| *x = 1);
        Partition::new(v)
    };
    let sub = hook(a, j)?;
    let quot = hook(a + 1, j - 1)?;
    let mut wanted = BTreeMap::new();
    wanted.insert(sub.clone(), 1);
    wanted.insert(quot.clone(), 1);
    let ok = expansion == wanted;
    Ok(PieriReport {
        lhs: format!("h_{a}*e_{j}"),
        constituents: expansion
            .into_iter()
            .rev()
            .map(|(partition, multiplicity)| Constituent {
                partition,
                multiplicity,
            })
            .collect(),
        expected: vec![sub, quot],
        ok,
        note: "character identity verified".to_string(),
    })
}
