//! The chart atlas of `Proj^D(S)`.
//!
//! Charts are the spectra `Spec S_(f)` for the monomic relevant generators `f`.
//! Charts with equal coordinate rings are reported as duplicate groups and kept
//! apart: the doubled origin is exactly such a pair.

use std::collections::BTreeMap;

use crate::abelian_group::{GroupSchemeDecomposition, Index, Subgroup};
use crate::diophantine::SolverBudget;
use crate::error::{Error, Result};
use crate::graded_ring::{GradedRing, Monomial};
use crate::localization::{self, ReducedFraction};
use crate::relevance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub f: Monomial,
    pub generators: Vec<ReducedFraction>,
    pub support_group: Subgroup,
    pub index: Index,
    pub strongly_relevant: bool,
    /// `S_f → Spec S_(f)` is a pseudo `G`-torsor. `S` is an integral polynomial
    /// ring, so this is `D^f = D`.
    pub pseudo_g_torsor: bool,
    /// `π_f` is a `G^f`-torsor, `G^f = Spec k[D^f]`.
    pub gf_torsor: bool,
    pub geometric_quotient: bool,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjAtlas {
    pub ring: GradedRing,
    pub charts: Vec<Chart>,
    /// Classes of chart indices with equal generator sets; only classes of size ≥ 2.
    pub duplicate_groups: Vec<Vec<usize>>,
    pub is_trivial: bool,
    pub group_report: GroupSchemeDecomposition,
}

fn name_limit(ring: &GradedRing, f: &Monomial, err: Error) -> Error {
    match err {
        Error::ResourceLimit { what, budget } => Error::ResourceLimit {
            what: format!("{what} for chart S_({})", ring.render_monomial(f)),
            budget,
        },
        other => other,
    }
}

fn build_chart(ring: &GradedRing, f: &Monomial, budget: &SolverBudget) -> Result<Chart> {
    let report = relevance::relevance_report(ring, f)?;
    if !report.relevant {
        return Err(Error::Domain(format!(
            "{} is not relevant: [D : D^f] is {}, the weight cone has dimension {} of {}",
            ring.render_monomial(f),
            report.index,
            report.cone.dimension(),
            ring.rank()
        )));
    }
    let chart = localization::degree_zero_chart(ring, f, budget)
        .map_err(|e| name_limit(ring, f, e))?;
    let dimension = localization::lattice_rank(f, &chart.solutions);
    let expected = ring.nvars() - ring.rank();
    if dimension != expected {
        return Err(Error::Internal(format!(
            "chart {} has dimension {dimension}, expected n - r = {expected}",
            ring.render_monomial(f)
        )));
    }
    Ok(Chart {
        f: f.clone(),
        generators: chart.fractions,
        support_group: report.support_group,
        index: report.index,
        strongly_relevant: report.strongly_relevant,
        pseudo_g_torsor: report.strongly_relevant,
        gf_torsor: true,
        geometric_quotient: true,
        dimension,
    })
}

pub fn build_atlas(ring: &GradedRing, budget: &SolverBudget) -> Result<ProjAtlas> {
    ring.require_effective()?;
    let charts = relevance::monomic_generators(ring)?
        .iter()
        .map(|f| build_chart(ring, f, budget))
        .collect::<Result<Vec<_>>>()?;

    let mut classes: BTreeMap<&[ReducedFraction], Vec<usize>> = BTreeMap::new();
    for (i, c) in charts.iter().enumerate() {
        classes.entry(&c.generators).or_default().push(i);
    }
    let mut duplicate_groups: Vec<Vec<usize>> =
        classes.into_values().filter(|g| g.len() > 1).collect();
    duplicate_groups.sort();

    let is_trivial = charts.len() == 1 && charts[0].dimension == 0;
    Ok(ProjAtlas {
        ring: ring.clone(),
        duplicate_groups,
        is_trivial,
        group_report: ring.group().group_scheme_decomposition(),
        charts,
    })
}

/// Single-chart computation; irrelevant `f` is a domain error.
pub fn torsor_diagnostics(ring: &GradedRing, f: &Monomial, budget: &SolverBudget) -> Result<Chart> {
    ring.require_effective()?;
    build_chart(ring, f, budget)
}

/// The monomic charts covering `D⁺(h)`: those divisible by the radical of `h`.
pub fn dplus_charts(ring: &GradedRing, h: &Monomial) -> Result<Vec<Monomial>> {
    ring.check_monomial(h)?;
    let rad = h.radical();
    Ok(relevance::monomic_generators(ring)?
        .into_iter()
        .filter(|g| rad.divides(g))
        .collect())
}
