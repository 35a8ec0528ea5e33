//! Homological invariants read off from alcove data.
//!
//! For a regular dominant weight `lambda` every quantity here is a simple
//! function of the hyperplane distance `d(lambda)`:
//!
//! | invariant                            | value             |
//! |--------------------------------------|-------------------|
//! | `wfd ∇(λ) = gfd Δ(λ)`                | `d(λ)`            |
//! | `wfd L(λ) = gfd L(λ)`                | `d(λ)`            |
//! | top `Ext(∇(λ), Δ(μ))`, `Ext(L, L)`   | `d(λ) + d(μ)`     |
//! | top `Ext(∇(λ), ∇(μ))`, `Ext(L(λ), ∇(μ))` for `μ ↑ λ` | `d(λ) − d(μ)` |
//!
//! Singular weights are refused outright: only upper bounds are known for
//! them, and those go through [`wfd_nabla_upper_bound`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alcoves::{d_closed_form, is_regular, linked};
use crate::error::{Error, Result};
use crate::lattice::{Context, Mode, Weight};
use crate::registry::Registry;
use crate::uporder::{chain_length, saturated_set, up_leq, Domain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Nabla,
    Delta,
    Simple,
    Tilting,
    SymmetricPower,
    ExteriorPower,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Nabla => "nabla",
            Family::Delta => "delta",
            Family::Simple => "simple",
            Family::Tilting => "tilting",
            Family::SymmetricPower => "symmetric_power",
            Family::ExteriorPower => "exterior_power",
        };
        f.write_str(s)
    }
}

/// A module named by its family and highest weight. The power families
/// carry their degree as a one-element weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub family: Family,
    pub weight: Weight,
}

impl ModuleLabel {
    pub fn new(family: Family, weight: Weight) -> Self {
        ModuleLabel { family, weight }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    UpperBound,
    /// Exact in the classical case; expected but unproven in the quantum case.
    CaveatQuantum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact => f.write_str("exact"),
            Status::UpperBound => f.write_str("upper_bound"),
            Status::CaveatQuantum => f.write_str("caveat_quantum"),
        }
    }
}

/// One labelled homological invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub label: ModuleLabel,
    pub invariant: String,
    pub value: u64,
    pub status: Status,
}

/// The top nonvanishing Ext degree and its dimension there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtDegree {
    pub degree: u64,
    pub multiplicity: u64,
    /// Ext vanishes in every degree above this.
    pub vanishing_above: u64,
    #[serde(default)]
    pub caveat_quantum: bool,
}

/// Injective and projective dimensions in the block of a regular weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDims {
    #[serde(rename = "inj_L")]
    pub inj_simple: u64,
    #[serde(rename = "proj_L")]
    pub proj_simple: u64,
    pub proj_nabla: u64,
    pub inj_delta: u64,
    pub inj_nabla: u64,
    pub proj_delta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDimRow {
    pub mu: Weight,
    pub d: u64,
    /// `None` for singular members, which no theorem covers.
    pub dims: Option<BlockDims>,
    pub status: Status,
}

/// Checks the preconditions shared by every exact formula and returns `d(lambda)`.
fn regular_distance(lambda: &Weight, ctx: &Context) -> Result<u64> {
    ctx.require_regular_range()?;
    ctx.check_len(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    if !is_regular(lambda, ctx)? {
        return Err(Error::SingularWeight(lambda.to_string()));
    }
    d_closed_form(lambda, ctx)
}

fn linked_pair(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<(u64, u64)> {
    let dl = regular_distance(lambda, ctx)?;
    let dm = regular_distance(mu, ctx)?;
    if !linked(lambda, mu, ctx)? {
        return Err(Error::Unlinked(lambda.to_string(), mu.to_string()));
    }
    Ok((dl, dm))
}

fn below_pair(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<(u64, u64)> {
    let (dl, dm) = linked_pair(lambda, mu, ctx)?;
    if !up_leq(mu, lambda, ctx)? {
        return Err(Error::NotBelow(mu.to_string(), lambda.to_string()));
    }
    Ok((dl, dm))
}

fn quantum_caveat(ctx: &Context) -> bool {
    ctx.mode() == Mode::Quantum
}

/// `wfd ∇(λ) = d(λ)`; by contravariant duality also `gfd Δ(λ)`.
pub fn wfd_nabla(lambda: &Weight, ctx: &Context) -> Result<u64> {
    regular_distance(lambda, ctx)
}

pub fn gfd_delta(lambda: &Weight, ctx: &Context) -> Result<u64> {
    wfd_nabla(lambda, ctx)
}

pub fn wfd_simple(lambda: &Weight, ctx: &Context) -> Result<u64> {
    regular_distance(lambda, ctx)
}

pub fn gfd_simple(lambda: &Weight, ctx: &Context) -> Result<u64> {
    wfd_simple(lambda, ctx)
}

/// `Ext^{d(λ)+d(μ)}(∇(λ), Δ(μ)) ≅ k`, nothing above.
pub fn top_ext_nabla_delta(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<ExtDegree> {
    let (dl, dm) = linked_pair(lambda, mu, ctx)?;
    let top = dl + dm;
    Ok(ExtDegree {
        degree: top,
        multiplicity: 1,
        vanishing_above: ext_vanishing_threshold(dl, dm),
        caveat_quantum: false,
    })
}

/// `Ext^{d(λ)+d(μ)}(L(λ), L(μ)) ≅ k`, nothing above.
pub fn top_ext_simple_simple(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<ExtDegree> {
    top_ext_nabla_delta(lambda, mu, ctx)
}

/// `Ext^{d(λ)-d(μ)}(∇(λ), ∇(μ)) ≅ k` for `μ ↑ λ`. Vanishing is only
/// guaranteed above `wfd ∇(λ) + gfd ∇(μ) = d(λ)`.
pub fn ext_nabla_nabla(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<ExtDegree> {
    let (dl, dm) = below_pair(lambda, mu, ctx)?;
    Ok(ExtDegree {
        degree: dl - dm,
        multiplicity: 1,
        vanishing_above: ext_vanishing_threshold(dl, 0),
        caveat_quantum: quantum_caveat(ctx),
    })
}

/// `Ext^{d(λ)-d(μ)}(L(λ), ∇(μ)) ≅ k` for `μ ↑ λ`, zero above.
pub fn ext_simple_nabla(lambda: &Weight, mu: &Weight, ctx: &Context) -> Result<ExtDegree> {
    let (dl, dm) = below_pair(lambda, mu, ctx)?;
    Ok(ExtDegree {
        degree: dl - dm,
        multiplicity: 1,
        vanishing_above: dl - dm,
        caveat_quantum: quantum_caveat(ctx),
    })
}

/// `Ext^i(N, M) = 0` for `i > wfd(N) + gfd(M)`.
pub fn ext_vanishing_threshold(wfd_n: u64, gfd_m: u64) -> u64 {
    wfd_n + gfd_m
}

pub fn block_dimension_table(lambda: &Weight, ctx: &Context) -> Result<Vec<BlockDimRow>> {
    let top = regular_distance(lambda, ctx)?;
    let status = if quantum_caveat(ctx) {
        Status::CaveatQuantum
    } else {
        Status::Exact
    };
    let pi = saturated_set(lambda, ctx)?;
    pi.members
        .into_iter()
        .map(|mu| {
            let d = d_closed_form(&mu, ctx)?;
            let dims = if is_regular(&mu, ctx)? {
                let sum = d + top;
                let diff = top - d;
                Some(BlockDims {
                    inj_simple: sum,
                    proj_simple: sum,
                    proj_nabla: sum,
                    inj_delta: sum,
                    inj_nabla: diff,
                    proj_delta: diff,
                })
            } else {
                None
            };
            let status = if dims.is_some() {
                status
            } else {
                Status::UpperBound
            };
            Ok(BlockDimRow {
                mu,
                d,
                dims,
                status,
            })
        })
        .collect()
}

/// `wfd ∇(λ) <= l-bar(λ)`, valid for singular `λ` as well.
pub fn wfd_nabla_upper_bound(lambda: &Weight, ctx: &Context) -> Result<u64> {
    chain_length(lambda, ctx, Domain::Dominant)
}

/// Dimensions in the principal block of category O, from the number of
/// positive roots `N = l(w_0)` and the length `l(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryODims {
    pub num_pos_roots: u64,
    pub length_w: u64,
    pub gfd_verma: u64,
    pub proj_verma: u64,
    pub proj_simple_upper: u64,
    pub glob_o: u64,
}

pub fn category_o_dims(num_pos_roots: u64, length_w: u64) -> Result<CategoryODims> {
    if length_w > num_pos_roots {
        return Err(Error::Precondition(format!(
            "l(w) = {length_w} exceeds l(w_0) = {num_pos_roots}"
        )));
    }
    Ok(CategoryODims {
        num_pos_roots,
        length_w,
        gfd_verma: num_pos_roots - length_w,
        proj_verma: length_w,
        proj_simple_upper: 2 * num_pos_roots - length_w,
        glob_o: 2 * num_pos_roots,
    })
}

/// Number of positive roots of type `A_rank`.
pub fn type_a_positive_roots(rank: u64) -> u64 {
    rank * (rank + 1) / 2
}

/// A family of modules whose filtration dimensions we can report.
pub trait ModuleFamily: Send + Sync {
    fn family(&self) -> Family;
    fn reports(&self, lambda: &Weight, ctx: &Context) -> Result<Vec<DimReport>>;
}

fn report(family: Family, lambda: &Weight, invariant: &str, value: u64) -> DimReport {
    DimReport {
        label: ModuleLabel::new(family, lambda.clone()),
        invariant: invariant.to_string(),
        value,
        status: Status::Exact,
    }
}

pub struct NablaFamily;

impl ModuleFamily for NablaFamily {
    fn family(&self) -> Family {
        Family::Nabla
    }

    fn reports(&self, lambda: &Weight, ctx: &Context) -> Result<Vec<DimReport>> {
        let d = wfd_nabla(lambda, ctx)?;
        Ok(vec![
            report(Family::Nabla, lambda, "wfd", d),
            report(Family::Nabla, lambda, "gfd", 0),
        ])
    }
}

pub struct DeltaFamily;

impl ModuleFamily for DeltaFamily {
    fn family(&self) -> Family {
        Family::Delta
    }

    fn reports(&self, lambda: &Weight, ctx: &Context) -> Result<Vec<DimReport>> {
        let d = gfd_delta(lambda, ctx)?;
        Ok(vec![
            report(Family::Delta, lambda, "wfd", 0),
            report(Family::Delta, lambda, "gfd", d),
        ])
    }
}

pub struct SimpleFamily;

impl ModuleFamily for SimpleFamily {
    fn family(&self) -> Family {
        Family::Simple
    }

    fn reports(&self, lambda: &Weight, ctx: &Context) -> Result<Vec<DimReport>> {
        let w = wfd_simple(lambda, ctx)?;
        let g = gfd_simple(lambda, ctx)?;
        Ok(vec![
            report(Family::Simple, lambda, "wfd", w),
            report(Family::Simple, lambda, "gfd", g),
        ])
    }
}

pub fn module_families() -> Registry<dyn ModuleFamily> {
    Registry::<dyn ModuleFamily>::new("module family")
        .with("nabla", Box::new(NablaFamily))
        .with("delta", Box::new(DeltaFamily))
        .with("simple", Box::new(SimpleFamily))
}

/// Flattens a block table into labelled reports.
pub fn block_reports(rows: &[BlockDimRow]) -> Vec<DimReport> {
    let mut out = Vec::new();
    for row in rows {
        let Some(dims) = row.dims else { continue };
        let entries = [
            (Family::Simple, "inj", dims.inj_simple),
            (Family::Simple, "proj", dims.proj_simple),
            (Family::Nabla, "proj", dims.proj_nabla),
            (Family::Delta, "inj", dims.inj_delta),
            (Family::Nabla, "inj", dims.inj_nabla),
            (Family::Delta, "proj", dims.proj_delta),
        ];
        for (family, invariant, value) in entries {
            out.push(DimReport {
                label: ModuleLabel::new(family, row.mu.clone()),
                invariant: invariant.to_string(),
                value,
                status: row.status,
            });
        }
    }
    out
}
