//! Text and JSON renderings of results.

use serde::Serialize;

use crate::abelian_group::Index;
use crate::error::Result;
use crate::graded_ring::{GradedRing, Monomial};
use crate::proj::{Chart, ProjAtlas};
use crate::relevance::RelevanceReport;

use super::spec::RingSpec;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn monomial_list(ring: &GradedRing, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| ring.render_monomial(m)).collect()
}

fn chart_generators(ring: &GradedRing, chart: &Chart) -> Vec<String> {
    chart.generators.iter().map(|g| g.render(ring)).collect()
}

#[derive(Serialize)]
pub struct ChartJson {
    pub f: String,
    pub generators: Vec<String>,
    pub index: Index,
    pub strongly_relevant: bool,
    pub pseudo_g_torsor: bool,
    pub gf_torsor: bool,
    pub dimension: usize,
}

impl ChartJson {
    pub fn new(ring: &GradedRing, c: &Chart) -> Self {
        ChartJson {
            f: ring.render_monomial(&c.f),
            generators: chart_generators(ring, c),
            index: c.index.clone(),
            strongly_relevant: c.strongly_relevant,
            pseudo_g_torsor: c.pseudo_g_torsor,
            gf_torsor: c.gf_torsor,
            dimension: c.dimension,
        }
    }
}

#[derive(Serialize)]
pub struct GroupJson {
    pub gm: usize,
    pub mu: Vec<u64>,
    pub connected: bool,
}

impl GroupJson {
    pub fn new(ring: &GradedRing) -> Self {
        let d = ring.group().group_scheme_decomposition();
        GroupJson {
            gm: d.gm_count,
            mu: d
                .mu_orders
                .iter()
                .map(|n| u64::try_from(n).expect("torsion orders fit the report"))
                .collect(),
            connected: d.connected,
        }
    }
}

#[derive(Serialize)]
pub struct AtlasJson {
    pub ring: RingSpec,
    pub gens: Vec<String>,
    pub charts: Vec<ChartJson>,
    pub duplicates: Vec<Vec<String>>,
    pub group: GroupJson,
    pub trivial: bool,
}

pub fn atlas_json(atlas: &ProjAtlas) -> Result<AtlasJson> {
    let ring = &atlas.ring;
    let names: Vec<String> = atlas.charts.iter().map(|c| ring.render_monomial(&c.f)).collect();
    Ok(AtlasJson {
        ring: RingSpec::from_ring(ring)?,
        gens: names.clone(),
        charts: atlas.charts.iter().map(|c| ChartJson::new(ring, c)).collect(),
        duplicates: atlas
            .duplicate_groups
            .iter()
            .map(|g| g.iter().map(|&i| names[i].clone()).collect())
            .collect(),
        group: GroupJson::new(ring),
        trivial: atlas.is_trivial,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

pub fn gens_text(ring: &GradedRing, gens: &[Monomial]) -> String {
    format!("S+ generators: {}", monomial_list(ring, gens).join(", "))
}

pub fn chart_text(ring: &GradedRing, c: &Chart) -> String {
    let gens = chart_generators(ring, c);
    let gens = if gens.is_empty() { "none".to_string() } else { gens.join(", ") };
    format!(
        "generators of S_({}): {gens}; D^f index: {}; pseudo G-torsor: {}; dim: {}",
        ring.render_monomial(&c.f),
        c.index,
        yes_no(c.pseudo_g_torsor),
        c.dimension
    )
}

pub fn torsor_text(ring: &GradedRing, c: &Chart) -> String {
    format!(
        "S_({}): [D : D^f] = {}; strongly relevant: {}; pseudo G-torsor: {}; \
         G^f-torsor: {}; geometric quotient: {}",
        ring.render_monomial(&c.f),
        c.index,
        yes_no(c.strongly_relevant),
        yes_no(c.pseudo_g_torsor),
        yes_no(c.gf_torsor),
        yes_no(c.geometric_quotient)
    )
}

pub fn atlas_text(atlas: &ProjAtlas) -> String {
    let ring = &atlas.ring;
    if atlas.is_trivial {
        return "single chart, dimension 0 (Proj is a point)".to_string();
    }
    let dim = atlas.charts.first().map_or(0, |c| c.dimension);
    let mut lines = vec![format!("{} charts, dimension {dim}", atlas.charts.len())];
    for c in &atlas.charts {
        lines.push(format!("  {}", chart_text(ring, c)));
    }
    for g in &atlas.duplicate_groups {
        let names: Vec<String> = g.iter().map(|&i| ring.render_monomial(&atlas.charts[i].f)).collect();
        lines.push(format!("duplicate charts (equal coordinate rings): {}", names.join(", ")));
    }
    lines.push(format!(
        "G = {} ({})",
        atlas.group_report,
        if atlas.group_report.connected { "connected" } else { "not connected" }
    ));
    lines.join("\n")
}

#[derive(Serialize)]
pub struct RelevanceJson {
    pub f: String,
    pub degree: String,
    pub index: Index,
    pub cone_dimension: usize,
    pub cone_full_dimensional: bool,
    pub degree_in_interior: bool,
    pub relevant: bool,
    pub strongly_relevant: bool,
}

impl RelevanceJson {
    pub fn new(ring: &GradedRing, r: &RelevanceReport) -> Self {
        RelevanceJson {
            f: ring.render_monomial(&r.monomial),
            degree: r.degree.to_string(),
            index: r.index.clone(),
            cone_dimension: r.cone.dimension(),
            cone_full_dimensional: r.cone_full_dim,
            degree_in_interior: r.deg_in_interior,
            relevant: r.relevant,
            strongly_relevant: r.strongly_relevant,
        }
    }
}

pub fn relevance_text(ring: &GradedRing, r: &RelevanceReport) -> String {
    let verdict = match (r.relevant, r.strongly_relevant) {
        (true, true) => "strongly relevant",
        (true, false) => "relevant",
        _ => "not relevant",
    };
    format!(
        "{}: {verdict}; degree {}; [D : D^f] = {}; weight cone dimension {} of {}; \
         degree in interior: {}",
        ring.render_monomial(&r.monomial),
        r.degree,
        r.index,
        r.cone.dimension(),
        ring.rank(),
        yes_no(r.deg_in_interior)
    )
}
