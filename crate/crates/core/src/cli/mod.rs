//! The `dproj` command-line front end.
//!
//! Exit status 0 on success, 2 for usage and input errors, 3 when a solver budget
//! runs out, 1 for internal inconsistencies (including oracle disagreements).

pub mod expr;
pub mod report;
pub mod spec;

use std::cell::RefCell;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian_group::{GroupElement, Subgroup};
use crate::diophantine::SolverBudget;
use crate::error::{Error, Result};
use crate::graded_ring::{GradedRing, Monomial};
use crate::localization::{self, degree_zero_system};
use crate::oracle::{self, SearchBudget};
use crate::proj::{self, Chart};
use crate::relevance;

pub use expr::{parse_expression, parse_group_algebra, parse_monomial};
pub use spec::{parse_ring_spec, RingSpec};

#[derive(Debug, Parser)]
#[command(name = "dproj", version, about = "Charts and relevance for multigraded Proj")]
struct Cli {
    /// Ring specification (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    ring: Option<std::path::PathBuf>,
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check the result against brute-force enumeration.
    #[arg(long, global = true)]
    oracle: bool,
    /// Step budget for chart enumeration and Hilbert basis completion.
    #[arg(long, global = true, value_name = "N", default_value_t = SolverBudget::DEFAULT_STEPS)]
    budget: u64,
    /// Re-coordinatize a non-effective grading instead of failing.
    #[arg(long, global = true)]
    effectivize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monomial generators of the irrelevant ideal.
    Gens,
    /// Relevance of a homogeneous element.
    Relevant { expr: String },
    /// Generators of the degree-zero localization at a monomial.
    Chart { f: String },
    /// All charts of Proj.
    Atlas,
    /// Torsor and quotient diagnostics at a monomial.
    Torsor { f: String },
    /// Dimension of the chart at a monomial.
    Dim { f: String },
    /// Decomposition of the group scheme Spec k[D].
    Group,
    /// Generators of the Veronese subring for the subgroup spanned by the given degrees.
    Veronese {
        /// Degrees such as `2` or `1,0` or `1;0`.
        #[arg(required = true)]
        degrees: Vec<String>,
    },
    /// Whether an element of Q[D] such as `chi(1,0) + chi(0,1)` is group-like.
    Grouplike { element: String },
}

struct Context {
    ring: GradedRing,
    json: bool,
    oracle: bool,
    budget: SolverBudget,
    notes: RefCell<Vec<String>>,
}

impl Context {
    fn note(&self, text: impl Into<String>) {
        self.notes.borrow_mut().push(text.into());
    }

    fn effective_ring(&self) -> Result<&GradedRing> {
        if self.ring.effective() {
            Ok(&self.ring)
        } else {
            Err(Error::Precondition(format!(
                "the grading by {} is not effective; pass --effectivize to re-coordinatize",
                self.ring.group()
            )))
        }
    }
}

/// Runs one invocation and returns the exit status.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli) {
        Ok((body, notes)) => {
            for n in notes {
                let _ = writeln!(err, "{n}");
            }
            let _ = writeln!(out, "{body}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_ring(path: &std::path::Path) -> Result<GradedRing> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read ring file {}: {e}", path.display()))
    })?;
    parse_ring_spec(&text).map_err(|e| match e {
        Error::Syntax { message, line, column } => Error::Syntax {
            message: format!("{}: {message}", path.display()),
            line,
            column,
        },
        Error::InvalidInput(m) => Error::InvalidInput(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn execute(cli: Cli) -> Result<(String, Vec<String>)> {
    let path = cli
        .ring
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("--ring FILE is required".into()))?;
    let mut ring = load_ring(path)?;
    let mut notes = Vec::new();
    if cli.effectivize && !ring.effective() {
        ring = ring.effectivize();
        let degrees: Vec<String> = ring
            .var_names()
            .iter()
            .zip(ring.degrees())
            .map(|(n, d)| format!("{n}={d}"))
            .collect();
        notes.push(format!(
            "effectivized grading: D = {}; degrees {}",
            ring.group(),
            degrees.join(", ")
        ));
    }
    let ctx = Context {
        ring,
        json: cli.json,
        oracle: cli.oracle,
        budget: SolverBudget::new(cli.budget),
        notes: RefCell::new(notes),
    };
    let body = match &cli.command {
        Command::Gens => gens(&ctx)?,
        Command::Relevant { expr } => relevant(&ctx, expr)?,
        Command::Chart { f } => chart(&ctx, f, false)?,
        Command::Torsor { f } => chart(&ctx, f, true)?,
        Command::Atlas => atlas(&ctx)?,
        Command::Dim { f } => dim(&ctx, f)?,
        Command::Group => group(&ctx),
        Command::Veronese { degrees } => veronese(&ctx, degrees)?,
        Command::Grouplike { element } => grouplike(&ctx, element)?,
    };
    // Notes go to stdout ahead of a text report and to stderr next to JSON.
    let notes = ctx.notes.into_inner();
    if ctx.json {
        Ok((body, notes))
    } else {
        let mut lines = notes;
        lines.push(body);
        Ok((lines.join("\n"), Vec::new()))
    }
}

fn render<T: Serialize>(ctx: &Context, value: &T, text: impl FnOnce() -> String) -> String {
    if ctx.json {
        report::to_json(value)
    } else {
        text()
    }
}

fn disagreement(what: String) -> Error {
    Error::Internal(format!("oracle disagreement: {what}"))
}

fn oracle_index(ring: &GradedRing, f: &Monomial, index: &crate::Index) -> Result<()> {
    let gens: Vec<GroupElement> = f.support().iter().map(|&i| ring.degrees()[i].clone()).collect();
    if let Some(n) = oracle::brute_subgroup_index(ring.group(), &gens, &SearchBudget::default())? {
        if index.finite() != Some(&n) {
            return Err(disagreement(format!(
                "[D : D^f] for {} is {index}, coset enumeration gives {n}",
                ring.render_monomial(f)
            )));
        }
    }
    Ok(())
}

fn oracle_relevance(ring: &GradedRing, f: &Monomial) -> Result<()> {
    let report = relevance::relevance_report(ring, f)?;
    let brute = oracle::brute_is_relevant(ring, f, &SearchBudget::default())?;
    if brute != report.relevant {
        return Err(disagreement(format!(
            "relevance of {}: criteria say {}, unit search says {brute}",
            ring.render_monomial(f),
            report.relevant
        )));
    }
    oracle_index(ring, f, &report.index)
}

/// Hilbert basis of the degree-zero system against box enumeration.
fn oracle_chart(ring: &GradedRing, f: &Monomial, budget: &SolverBudget) -> Result<()> {
    let chart = localization::degree_zero_chart(ring, f, budget)?;
    let completed = localization::degree_zero_chart_by_completion(ring, f, budget)?;
    if chart.fractions != completed.fractions {
        return Err(disagreement(format!(
            "generators of S_({}) differ between the parallelepiped and the completed Hilbert basis",
            ring.render_monomial(f)
        )));
    }
    let sys = degree_zero_system(ring, f)?;
    let search = SearchBudget::default();
    let bound = search.exponent_bound;
    let solver: Vec<Vec<u64>> = completed
        .solutions
        .iter()
        .map(|s| {
            let mut v = s.exponents.clone();
            v.push(s.power);
            v
        })
        .filter(|v| v.iter().all(|&x| x <= bound))
        .collect();
    let brute = oracle::brute_minimal_solutions(&sys, &search);
    if solver != brute {
        return Err(disagreement(format!(
            "degree-zero Hilbert basis for {} differs from enumeration inside the box {bound}",
            ring.render_monomial(f)
        )));
    }
    oracle_relevance(ring, f)
}

fn gens(ctx: &Context) -> Result<String> {
    let ring = ctx.effective_ring()?;
    let gens = relevance::monomic_generators(ring)?;
    if ctx.oracle {
        let r = ring.rank();
        for vars in relevance::subsets(ring.nvars(), r) {
            let m = Monomial::squarefree(ring.nvars(), &vars);
            let brute = oracle::brute_is_relevant(ring, &m, &SearchBudget::default())?;
            if brute != gens.contains(&m) {
                return Err(disagreement(format!(
                    "{} is {}a generator but unit search says relevant = {brute}",
                    ring.render_monomial(&m),
                    if gens.contains(&m) { "" } else { "not " }
                )));
            }
        }
        ctx.note(format!("oracle: unit search agrees on all {r}-subsets"));
    }
    let names = report::monomial_list(ring, &gens);
    Ok(render(ctx, &serde_json::json!({ "gens": names }), || {
        report::gens_text(ring, &gens)
    }))
}

fn relevant(ctx: &Context, text: &str) -> Result<String> {
    let ring = ctx.effective_ring()?;
    let p = parse_expression(ring, text)?;
    if let Some(m) = p.as_monomial() {
        let rep = relevance::relevance_report(ring, m)?;
        if ctx.oracle {
            oracle_relevance(ring, m)?;
            ctx.note("oracle: unit search and coset enumeration agree");
        }
        let json = report::RelevanceJson::new(ring, &rep);
        return Ok(render(ctx, &json, || report::relevance_text(ring, &rep)));
    }
    let verdict = relevance::is_relevant_polynomial(ring, &p)?;
    if ctx.oracle {
        for m in p.monomials() {
            let brute = oracle::brute_is_relevant(ring, m, &SearchBudget::default())?;
            let rank_ok = relevance::degree_rank(ring, &m.support()) == ring.rank();
            if brute != rank_ok {
                return Err(disagreement(format!(
                    "term {} of {text}",
                    ring.render_monomial(m)
                )));
            }
        }
        ctx.note("oracle: unit search agrees on every term");
    }
    let rendered = ring.render_polynomial(&p);
    Ok(render(
        ctx,
        &serde_json::json!({ "f": rendered, "relevant": verdict }),
        || format!("{rendered}: {}", if verdict { "relevant" } else { "not relevant" }),
    ))
}

fn chart_for(ctx: &Context, text: &str) -> Result<Chart> {
    let ring = ctx.effective_ring()?;
    let f = parse_monomial(ring, text)?;
    let c = proj::torsor_diagnostics(ring, &f, &ctx.budget)?;
    if ctx.oracle {
        oracle_chart(ring, &f, &ctx.budget)?;
        ctx.note(format!(
            "oracle: Hilbert basis and index of S_({}) agree with enumeration",
            ring.render_monomial(&f)
        ));
    }
    Ok(c)
}

fn chart(ctx: &Context, text: &str, torsor: bool) -> Result<String> {
    let c = chart_for(ctx, text)?;
    let ring = &ctx.ring;
    let json = report::ChartJson::new(ring, &c);
    Ok(render(ctx, &json, || {
        if torsor {
            report::torsor_text(ring, &c)
        } else {
            report::chart_text(ring, &c)
        }
    }))
}

fn dim(ctx: &Context, text: &str) -> Result<String> {
    let ring = ctx.effective_ring()?;
    let f = parse_monomial(ring, text)?;
    let d = localization::chart_dimension(ring, &f, &ctx.budget)?;
    if ctx.oracle {
        oracle_chart(ring, &f, &ctx.budget)?;
        ctx.note("oracle: degree-zero Hilbert basis agrees with enumeration");
    }
    let (n, r) = (ring.nvars(), ring.rank());
    let name = ring.render_monomial(&f);
    Ok(render(
        ctx,
        &serde_json::json!({ "f": name, "dimension": d }),
        || format!("dim S_({name}) = {d} (n - r = {n} - {r})"),
    ))
}

fn atlas(ctx: &Context) -> Result<String> {
    let ring = ctx.effective_ring()?;
    let a = proj::build_atlas(ring, &ctx.budget)?;
    if ctx.oracle {
        for c in &a.charts {
            oracle_chart(ring, &c.f, &ctx.budget)?;
        }
        ctx.note(format!("oracle: {} of {} charts agree with enumeration", a.charts.len(), a.charts.len()));
    }
    let json = report::atlas_json(&a)?;
    Ok(render(ctx, &json, || report::atlas_text(&a)))
}

fn group(ctx: &Context) -> String {
    let g = ctx.ring.group();
    let d = g.group_scheme_decomposition();
    let json = serde_json::json!({
        "group": g.to_string(),
        "gm": d.gm_count,
        "mu": d.mu_orders.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "connected": d.connected,
    });
    render(ctx, &json, || {
        format!("D = {g}; G = {d}; connected: {}", if d.connected { "yes" } else { "no" })
    })
}

fn parse_degree(ring: &GradedRing, text: &str) -> Result<GroupElement> {
    let coords = text
        .split([',', ';'])
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("`{text}` is not a degree vector")))
        })
        .collect::<Result<Vec<_>>>()?;
    ring.group().element_from_coords(&coords)
}

fn veronese(ctx: &Context, degrees: &[String]) -> Result<String> {
    let ring = &ctx.ring;
    let gens = degrees
        .iter()
        .map(|t| parse_degree(ring, t))
        .collect::<Result<Vec<_>>>()?;
    let h = Subgroup::from_generators(ring.group(), &gens)?;
    let mons = localization::veronese_generators(ring, &h, &ctx.budget)?;
    if ctx.oracle {
        let search = SearchBudget::default();
        let bound = search.exponent_bound;
        let mut in_h: Vec<Vec<u64>> = Vec::new();
        for m in enumerate_box(ring.nvars(), bound) {
            let d = ring.degree_of_exponents(&m.iter().map(|&e| e as u32).collect::<Vec<_>>());
            if m.iter().any(|&e| e > 0)
                && oracle::brute_contains(ring.group(), &gens, &d, &search)? == Some(true)
            {
                in_h.push(m);
            }
        }
        let mut brute: Vec<Vec<u64>> = in_h
            .iter()
            .filter(|v| !in_h.iter().any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b)))
            .cloned()
            .collect();
        let mut solver: Vec<Vec<u64>> = mons
            .iter()
            .map(|m| m.exponents().iter().map(|&e| u64::from(e)).collect::<Vec<u64>>())
            .filter(|v| v.iter().all(|&x| x <= bound))
            .collect();
        brute.sort();
        solver.sort();
        if brute != solver {
            return Err(disagreement(format!(
                "Veronese generators differ from enumeration inside the box {bound}"
            )));
        }
        ctx.note("oracle: Veronese generators agree with enumeration");
    }
    let names = report::monomial_list(ring, &mons);
    Ok(render(
        ctx,
        &serde_json::json!({ "index": h.index(), "generators": names }),
        || format!("S_H generators: {}", names.join(", ")),
    ))
}

fn enumerate_box(len: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn grouplike(ctx: &Context, text: &str) -> Result<String> {
    let a = parse_group_algebra(ctx.ring.group(), text)?;
    let verdict = a.is_group_like();
    if ctx.oracle {
        let expanded = !a.is_zero() && a.comultiply() == a.tensor_square();
        if expanded != verdict {
            return Err(disagreement(format!("group-like test for {a}")));
        }
        ctx.note("oracle: expansion of Δ(a) - a⊗a agrees");
    }
    let shown = a.to_string();
    Ok(render(
        ctx,
        &serde_json::json!({ "element": shown, "group_like": verdict }),
        || format!("{shown}: {}", if verdict { "group-like" } else { "not group-like" }),
    ))
}
