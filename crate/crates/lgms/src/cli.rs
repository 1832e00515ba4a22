//! Command-line front end.
//!
//! Every subcommand takes a model — a TOML file or an inline exponent
//! matrix — and prints either plain text or one JSON document. Check-style
//! subcommands exit 1 when an identity fails; malformed input exits 2 and
//! blown enumeration caps exit 3.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::diamond::render_combined;
use crate::error::{Error, Result};
use crate::geometry::{component_report, k3_report, oracle_check, sigma_quotient_table};
use crate::mirror::{check_tables, semi_cy_report, IdentityCheck};
use crate::model::ModelContext;
use crate::polyspec::{
    classify_atoms, directive_from_name, parse_model_file, ExponentMatrix, ModelSpec,
};
use crate::product::product_report;
use crate::rational::{rat_str, ratio};
use crate::statespace::sector_contributions;
use crate::symmetry::{
    dual_group, duality_diagram_check, standard_dual, DiagramReport, DEFAULT_CAP,
};
use crate::table::{BigradedTable, TableEntry};

#[derive(Parser)]
#[command(
    name = "lgms",
    version,
    about = "Bigraded state spaces, orbifold Hodge diamonds and mirror checks for invertible potentials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on enumerated group orders.
    #[arg(long, global = true, env = "LGMS_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads (0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Print timing to stderr.
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ModelArgs {
    /// Model description file (TOML).
    model: Option<PathBuf>,
    /// Inline exponent matrix as a JSON array of rows, e.g. "[[4,0],[0,4]]".
    #[arg(long, conflicts_with = "model")]
    matrix: Option<String>,
    /// Group for an inline matrix: J2, SL or ALL.
    #[arg(long, default_value = "J2")]
    group: String,
}

#[derive(Subcommand)]
enum Command {
    /// Weight system, charges and suspension weights of a potential.
    Weights(ModelArgs),
    /// Decomposition of a potential into Fermat, chain and loop atoms.
    Atoms(ModelArgs),
    /// The acting group: order, generators, admissibility notes.
    Group(ModelArgs),
    /// Dual groups and the suspension duality diagram.
    Dual(ModelArgs),
    /// Per-sector state space of the model in the raw bigrading.
    Statespace(ModelArgs),
    /// Cover and branch Hodge tables, rendered as one diamond.
    Diamond(ModelArgs),
    /// Branch-locus components and their classes.
    Sigma(ModelArgs),
    /// All mirror-symmetry identities for the model and its dual.
    MirrorCheck(ModelArgs),
    /// Geometric recomputation of the Hodge tables, checked piecewise.
    OracleCheck(ModelArgs),
    /// Hodge table of a product of two models, with its checks.
    Product {
        #[command(flatten)]
        model: ModelArgs,
        /// Rebuild the product table from the block-sum potential.
        #[arg(long)]
        direct_product_check: bool,
    },
    /// Lattice invariants of a K3 cover with involution.
    K3(ModelArgs),
    /// Run every model in a directory against its expected sidecar.
    Corpus { dir: PathBuf },
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Ignore failure: the global pool may already exist (tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    let start = Instant::now();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if cli.verbose {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    code
}

enum Loaded {
    Single(Box<ModelContext>),
    Product {
        name: String,
        factors: Vec<ModelContext>,
    },
}

fn load(args: &ModelArgs, cap: usize) -> Result<Loaded> {
    if let Some(text) = &args.matrix {
        let rows: Vec<Vec<i64>> = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("bad inline matrix: {e}")))?;
        let matrix = ExponentMatrix::new(rows)?;
        let directive = directive_from_name(&args.group)?;
        let spec = ModelSpec::Single {
            name: "inline".into(),
            matrix,
            group: directive,
        };
        return Ok(Loaded::Single(Box::new(ModelContext::from_spec(
            &spec, cap,
        )?)));
    }
    let path = args
        .model
        .as_deref()
        .ok_or_else(|| Error::Parse("pass a model file or --matrix".into()))?;
    load_path(path, cap)
}

fn load_path(path: &Path, cap: usize) -> Result<Loaded> {
    let spec = parse_model_file(path)?;
    match spec {
        ModelSpec::Single { .. } => Ok(Loaded::Single(Box::new(ModelContext::from_spec(
            &spec, cap,
        )?))),
        ModelSpec::Product { name, factors } => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            let mut ctxs = Vec::new();
            for f in &factors {
                let fpath = base.join(f);
                match load_path(&fpath, cap)? {
                    Loaded::Single(c) => ctxs.push(*c),
                    Loaded::Product { .. } => {
                        return Err(Error::Precondition(format!(
                            "product factor {f} is itself a product"
                        )))
                    }
                }
            }
            Ok(Loaded::Product {
                name,
                factors: ctxs,
            })
        }
    }
}

fn single(args: &ModelArgs, cap: usize) -> Result<ModelContext> {
    match load(args, cap)? {
        Loaded::Single(c) => Ok(*c),
        Loaded::Product { .. } => Err(Error::Precondition(
            "this subcommand takes a single-potential model, not a product".into(),
        )),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> Result<()> {
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(value)
                .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
            println!("{s}");
        }
        Format::Text => print!("{text}"),
    }
    Ok(())
}

fn table_lines(label: &str, t: &BigradedTable) -> String {
    let mut out = format!("{label}:\n");
    if t.is_empty() {
        out.push_str("  (empty)\n");
        return out;
    }
    for (p, q, dim) in t.iter() {
        out.push_str(&format!("  h^({}, {}) = {}\n", rat_str(p), rat_str(q), dim));
    }
    out
}

fn check_lines(checks: &[IdentityCheck]) -> String {
    let mut out = String::new();
    for c in checks {
        if c.pass {
            out.push_str(&format!("  ok   {}\n", c.label));
        } else {
            out.push_str(&format!("  FAIL {}: {}\n", c.label, c.detail));
        }
    }
    out
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let cap = cli.cap;
    let format = cli.format;
    match &cli.command {
        Command::Weights(args) => {
            let ctx = single(args, cap)?;
            cmd_weights(&ctx, format)?;
            Ok(0)
        }
        Command::Atoms(args) => {
            let ctx = single(args, cap)?;
            cmd_atoms(&ctx, format)?;
            Ok(0)
        }
        Command::Group(args) => {
            let ctx = single(args, cap)?;
            cmd_group(&ctx, format)?;
            Ok(0)
        }
        Command::Dual(args) => {
            let ctx = single(args, cap)?;
            cmd_dual(&ctx, format, cap)?;
            Ok(0)
        }
        Command::Statespace(args) => {
            let ctx = single(args, cap)?;
            cmd_statespace(&ctx, format)?;
            Ok(0)
        }
        Command::Diamond(args) => {
            let ctx = single(args, cap)?;
            cmd_diamond(&ctx, format)?;
            Ok(0)
        }
        Command::Sigma(args) => {
            let ctx = single(args, cap)?;
            cmd_sigma(&ctx, format)?;
            Ok(0)
        }
        Command::MirrorCheck(args) => {
            let ctx = single(args, cap)?;
            let report = semi_cy_report(&ctx)?;
            let mut text = format!(
                "model: {}\ndual: {}\nadmissible: {}\n",
                report.model, report.dual_model, report.admissible
            );
            for n in &report.notes {
                text.push_str(&format!("note: {n}\n"));
            }
            text.push_str(&check_lines(&report.checks));
            text.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
            emit(format, &report, text)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::OracleCheck(args) => {
            let ctx = single(args, cap)?;
            cmd_oracle(&ctx, format)
        }
        Command::Product {
            model,
            direct_product_check,
        } => {
            let (name, factors) = match load(model, cap)? {
                Loaded::Product { name, factors } => (name, factors),
                Loaded::Single(_) => {
                    return Err(Error::Precondition(
                        "the product subcommand takes a product model file".into(),
                    ))
                }
            };
            let report = product_report(&name, &factors, *direct_product_check)?;
            let table = BigradedTable::from_entries(&report.table)?;
            let mut text = format!(
                "model: {}\nfactors: {}\ndimension: {}\n",
                report.model,
                report.factors.join(", "),
                report.dim
            );
            text.push_str(&crate::diamond::render_diamond(&table));
            text.push_str(&table_lines("classes", &table));
            text.push_str(&check_lines(&report.checks));
            text.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
            emit(format, &report, text)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::K3(args) => {
            let ctx = single(args, cap)?;
            let report = k3_report(&ctx)?;
            let mut text = format!(
                "model: {}\nbranch components: {} (h^(0,0) counts {})\ntotal genus: {}\ninvariants: (r, a) = ({}, {})\nmirror:     (r, a) = ({}, {})\n",
                report.model,
                report.components,
                report.n,
                report.n_prime,
                report.r,
                report.a,
                report.mirror_r,
                report.mirror_a
            );
            if !report.note.is_empty() {
                text.push_str(&format!("note: {}\n", report.note));
            }
            emit(format, &report, text)?;
            Ok(0)
        }
        Command::Corpus { dir } => cmd_corpus(dir, cap),
    }
}

#[derive(Serialize)]
struct WeightsReport {
    schema: u32,
    model: String,
    potential: String,
    weights: Vec<i64>,
    degree: i64,
    charges: Vec<String>,
    half_cy: bool,
    cy: bool,
    suspension_weights: Option<Vec<i64>>,
    suspension_degree: Option<i64>,
}

fn cmd_weights(ctx: &ModelContext, format: Format) -> Result<()> {
    let w = &ctx.weights;
    let sus = if w.is_half_cy() {
        Some(w.suspend()?)
    } else {
        None
    };
    let report = WeightsReport {
        schema: 1,
        model: ctx.name.clone(),
        potential: ctx.matrix.display(),
        weights: w.weights.clone(),
        degree: w.degree,
        charges: w.charges().iter().map(|c| rat_str(*c)).collect(),
        half_cy: w.is_half_cy(),
        cy: w.is_cy(),
        suspension_weights: sus.as_ref().map(|s| s.weights.clone()),
        suspension_degree: sus.as_ref().map(|s| s.degree),
    };
    let mut text = format!(
        "model: {}\npotential: {}\nweights: {}\ncharges: {}\nhalf Calabi-Yau: {}\nCalabi-Yau: {}\n",
        report.model,
        report.potential,
        w,
        report.charges.join(", "),
        report.half_cy,
        report.cy
    );
    if let Some(s) = &sus {
        text.push_str(&format!("suspension weights: {s}\n"));
    }
    emit(format, &report, text)
}

#[derive(Serialize)]
struct AtomReport {
    schema: u32,
    model: String,
    atoms: Vec<AtomEntry>,
}

#[derive(Serialize)]
struct AtomEntry {
    label: String,
    vars: Vec<String>,
}

fn cmd_atoms(ctx: &ModelContext, format: Format) -> Result<()> {
    let atoms = classify_atoms(&ctx.matrix)?;
    let entries: Vec<AtomEntry> = atoms
        .iter()
        .map(|a| AtomEntry {
            label: a.label(),
            vars: a.vars().iter().map(|v| format!("x{}", v + 1)).collect(),
        })
        .collect();
    let mut text = format!("model: {}\n", ctx.name);
    for e in &entries {
        text.push_str(&format!("{} on {}\n", e.label, e.vars.join(", ")));
    }
    let report = AtomReport {
        schema: 1,
        model: ctx.name.clone(),
        atoms: entries,
    };
    emit(format, &report, text)
}

#[derive(Serialize)]
struct GroupReport {
    schema: u32,
    model: String,
    order: usize,
    exponent: i64,
    generators: Vec<Vec<String>>,
    elements: Option<Vec<Vec<String>>>,
    grading_element: Vec<String>,
    j_in_group: bool,
    in_sl: bool,
    admissible: bool,
    notes: Vec<String>,
}

fn cmd_group(ctx: &ModelContext, format: Format) -> Result<()> {
    let g = &ctx.group;
    let j = ctx.grading_element();
    let report = GroupReport {
        schema: 1,
        model: ctx.name.clone(),
        order: g.order(),
        exponent: g.denom(),
        generators: g
            .small_generators()
            .iter()
            .map(|x| x.to_strings())
            .collect(),
        elements: if g.order() <= 64 {
            Some(g.to_string_lists())
        } else {
            None
        },
        grading_element: j.to_strings(),
        j_in_group: g.contains(&j),
        in_sl: ctx.group_in_sl(),
        admissible: ctx.is_admissible(),
        notes: ctx.admissibility_notes(),
    };
    let mut text = format!(
        "model: {}\norder: {}\nexponent: {}\n",
        report.model, report.order, report.exponent
    );
    for gen in &report.generators {
        text.push_str(&format!("generator: ({})\n", gen.join(", ")));
    }
    if let Some(els) = &report.elements {
        for el in els {
            text.push_str(&format!("element: ({})\n", el.join(", ")));
        }
    }
    text.push_str(&format!(
        "grading element: ({})\nJ in group: {}\ninside SL: {}\nadmissible: {}\n",
        report.grading_element.join(", "),
        report.j_in_group,
        report.in_sl,
        report.admissible
    ));
    for n in &report.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    emit(format, &report, text)
}

#[derive(Serialize)]
struct DualReport {
    schema: u32,
    model: String,
    group_order: usize,
    dual_order: usize,
    dual_generators: Vec<Vec<String>>,
    standard_dual_order: usize,
    standard_dual_generators: Vec<Vec<String>>,
    double_dual_ok: bool,
    diagram: DiagramReport,
}

fn cmd_dual(ctx: &ModelContext, format: Format, cap: usize) -> Result<()> {
    let m = ctx.matrix.rows();
    let mt = ctx.matrix.transpose();
    let dual = dual_group(m, &ctx.group, cap)?;
    let plain = standard_dual(m, &ctx.group, cap)?;
    let back = standard_dual(mt.rows(), &plain, cap)?;
    let report = DualReport {
        schema: 1,
        model: ctx.name.clone(),
        group_order: ctx.group.order(),
        dual_order: dual.order(),
        dual_generators: dual
            .small_generators()
            .iter()
            .map(|x| x.to_strings())
            .collect(),
        standard_dual_order: plain.order(),
        standard_dual_generators: plain
            .small_generators()
            .iter()
            .map(|x| x.to_strings())
            .collect(),
        double_dual_ok: back.same_elements(&ctx.group),
        diagram: duality_diagram_check(m, &ctx.group, cap)?,
    };
    let mut text = format!(
        "model: {}\ngroup order: {}\ndual order: {}\nstandard dual order: {}\ndouble dual is the group: {}\n",
        report.model,
        report.group_order,
        report.dual_order,
        report.standard_dual_order,
        report.double_dual_ok
    );
    for n in &report.diagram.nodes {
        text.push_str(&format!(
            "  {} {} <-> {} ({} <-> {})\n",
            if n.forward_ok && n.backward_ok {
                "ok  "
            } else {
                "FAIL"
            },
            n.left,
            n.right,
            n.left_order,
            n.right_order
        ));
    }
    for e in &report.diagram.edges {
        text.push_str(&format!(
            "  {} {}: {} -> {} reverses under duality\n",
            if e.includes_ok && e.dual_reverses_ok {
                "ok  "
            } else {
                "FAIL"
            },
            e.name,
            e.from,
            e.to
        ));
    }
    text.push_str(if report.diagram.pass {
        "diagram: PASS\n"
    } else {
        "diagram: FAIL\n"
    });
    emit(format, &report, text)
}

#[derive(Serialize)]
struct SectorReport {
    element: Vec<String>,
    age: String,
    fixed: Vec<String>,
    narrow: bool,
    classes: Vec<TableEntry>,
}

#[derive(Serialize)]
struct StateReport {
    schema: u32,
    model: String,
    group_order: usize,
    sectors: Vec<SectorReport>,
    total: Vec<TableEntry>,
    shifted: Vec<TableEntry>,
}

fn cmd_statespace(ctx: &ModelContext, format: Format) -> Result<()> {
    let contributions = sector_contributions(
        &ctx.matrix,
        &ctx.weights,
        &ctx.group,
        &ctx.group,
        &ctx.engine,
    )?;
    let total = contributions
        .iter()
        .fold(BigradedTable::new(), |acc, c| acc.union(&c.table));
    let s = ratio(ctx.weights.weight_sum(), ctx.weights.degree);
    let shifted = total.shift(-s, -s);
    let sectors: Vec<SectorReport> = contributions
        .iter()
        .map(|c| SectorReport {
            element: c.element.to_strings(),
            age: rat_str(c.age),
            fixed: c.fixed.iter().map(|j| format!("x{}", j + 1)).collect(),
            narrow: c.is_narrow(),
            classes: c.table.to_entries(),
        })
        .collect();
    let mut text = format!("model: {}\ngroup order: {}\n", ctx.name, ctx.group.order());
    for sct in &sectors {
        text.push_str(&format!(
            "sector ({}): age {}, fixed [{}]{}\n",
            sct.element.join(", "),
            sct.age,
            sct.fixed.join(", "),
            if sct.narrow { ", narrow" } else { "" }
        ));
        for e in &sct.classes {
            text.push_str(&format!("  h^({}, {}) = {}\n", e.p, e.q, e.dim));
        }
    }
    text.push_str(&table_lines("total (raw)", &total));
    text.push_str(&table_lines("total (charge-shifted)", &shifted));
    let report = StateReport {
        schema: 1,
        model: ctx.name.clone(),
        group_order: ctx.group.order(),
        sectors,
        total: total.to_entries(),
        shifted: shifted.to_entries(),
    };
    emit(format, &report, text)
}

#[derive(Serialize)]
struct DiamondReport {
    schema: u32,
    model: String,
    dim: usize,
    cr: Vec<TableEntry>,
    cr_plus: Vec<TableEntry>,
    cr_minus: Vec<TableEntry>,
    h_sigma: Vec<TableEntry>,
    h_sigma_plus: Vec<TableEntry>,
    h_sigma_minus: Vec<TableEntry>,
    diamond: String,
}

fn cmd_diamond(ctx: &ModelContext, format: Format) -> Result<()> {
    let pieces = ctx.four_pieces()?;
    let cr = pieces.cr();
    let hs = pieces.h_sigma();
    let rendered = render_combined(&cr, &hs);
    let mut text = format!("model: {}\ncover dimension: {}\n", ctx.name, ctx.dim() - 1);
    text.push_str(&rendered);
    text.push_str(&table_lines("cover", &cr));
    text.push_str(&table_lines("cover invariant", &pieces.cr_plus));
    text.push_str(&table_lines("cover anti-invariant", &pieces.cr_minus));
    text.push_str(&table_lines("branch", &hs));
    text.push_str(&table_lines("branch invariant", &pieces.h_sigma_plus));
    text.push_str(&table_lines("branch anti-invariant", &pieces.h_sigma_minus));
    let report = DiamondReport {
        schema: 1,
        model: ctx.name.clone(),
        dim: ctx.dim() - 1,
        cr: cr.to_entries(),
        cr_plus: pieces.cr_plus.to_entries(),
        cr_minus: pieces.cr_minus.to_entries(),
        h_sigma: hs.to_entries(),
        h_sigma_plus: pieces.h_sigma_plus.to_entries(),
        h_sigma_minus: pieces.h_sigma_minus.to_entries(),
        diamond: rendered,
    };
    emit(format, &report, text)
}

#[derive(Serialize)]
struct SigmaReport {
    schema: u32,
    model: String,
    components: crate::geometry::ComponentReport,
    h_sigma: Vec<TableEntry>,
    h_sigma_plus: Vec<TableEntry>,
    h_sigma_minus: Vec<TableEntry>,
}

fn cmd_sigma(ctx: &ModelContext, format: Format) -> Result<()> {
    let pieces = ctx.four_pieces()?;
    let comps = component_report(ctx)?;
    let mut text = format!(
        "model: {}\nbranch components: {}\n",
        ctx.name,
        comps.components.len()
    );
    for c in &comps.components {
        text.push_str(&format!(
            "component ({}): {}, tangent age {}\n",
            c.element.join(", "),
            c.kind,
            c.tangent_age
        ));
        for e in &c.classes {
            text.push_str(&format!("  h^({}, {}) = {}\n", e.p, e.q, e.dim));
        }
    }
    text.push_str(&table_lines("branch", &pieces.h_sigma()));
    text.push_str(&table_lines("branch invariant", &pieces.h_sigma_plus));
    text.push_str(&table_lines("branch anti-invariant", &pieces.h_sigma_minus));
    let report = SigmaReport {
        schema: 1,
        model: ctx.name.clone(),
        components: comps,
        h_sigma: pieces.h_sigma().to_entries(),
        h_sigma_plus: pieces.h_sigma_plus.to_entries(),
        h_sigma_minus: pieces.h_sigma_minus.to_entries(),
    };
    emit(format, &report, text)
}

#[derive(Serialize)]
struct OracleReport {
    schema: u32,
    model: String,
    checks: Vec<IdentityCheck>,
    pass: bool,
}

fn cmd_oracle(ctx: &ModelContext, format: Format) -> Result<i32> {
    let mut checks = oracle_check(ctx)?;
    let pieces = ctx.four_pieces()?;
    let half = ratio(1, 2);
    let quotient = sigma_quotient_table(ctx)?;
    let embedded = pieces.cr_plus.union(&pieces.h_sigma_plus.shift(half, half));
    checks.push(check_tables("quotient embedding", &quotient, &embedded));
    let pass = checks.iter().all(|c| c.pass);
    let mut text = format!("model: {}\n", ctx.name);
    text.push_str(&check_lines(&checks));
    text.push_str(if pass { "PASS\n" } else { "FAIL\n" });
    let report = OracleReport {
        schema: 1,
        model: ctx.name.clone(),
        checks,
        pass,
    };
    emit(format, &report, text)?;
    Ok(if pass { 0 } else { 1 })
}

#[derive(Deserialize)]
struct ExpectedK3 {
    n: u64,
    n_prime: u64,
    r: i64,
    a: i64,
}

#[derive(Deserialize)]
struct Expected {
    #[allow(dead_code)]
    schema: u32,
    kind: String,
    #[serde(default)]
    cr: Option<Vec<TableEntry>>,
    #[serde(default)]
    h_sigma: Option<Vec<TableEntry>>,
    #[serde(default)]
    cr_plus: Option<Vec<TableEntry>>,
    #[serde(default)]
    cr_minus: Option<Vec<TableEntry>>,
    #[serde(default)]
    h_sigma_plus: Option<Vec<TableEntry>>,
    #[serde(default)]
    h_sigma_minus: Option<Vec<TableEntry>>,
    #[serde(default)]
    k3: Option<ExpectedK3>,
    #[serde(default)]
    mirror_pass: Option<bool>,
    #[serde(default)]
    oracle_pass: Option<bool>,
    #[serde(default)]
    table: Option<Vec<TableEntry>>,
}

fn compare_table(
    label: &str,
    expected: &Option<Vec<TableEntry>>,
    actual: &BigradedTable,
    failures: &mut Vec<String>,
) {
    if let Some(entries) = expected {
        match BigradedTable::from_entries(entries) {
            Ok(want) => {
                if &want != actual {
                    failures.push(format!(
                        "{label}: expected {} classes, got {}",
                        want.total(),
                        actual.total()
                    ));
                }
            }
            Err(e) => failures.push(format!("{label}: bad expected entries: {e}")),
        }
    }
}

fn run_one_corpus_model(path: &Path, expected: &Expected, cap: usize) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    match load_path(path, cap)? {
        Loaded::Single(ctx) => {
            if expected.kind != "single" {
                failures.push(format!(
                    "kind mismatch: model is single, sidecar says {}",
                    expected.kind
                ));
                return Ok(failures);
            }
            let pieces = ctx.four_pieces()?;
            compare_table("cr", &expected.cr, &pieces.cr(), &mut failures);
            compare_table(
                "h_sigma",
                &expected.h_sigma,
                &pieces.h_sigma(),
                &mut failures,
            );
            compare_table("cr_plus", &expected.cr_plus, &pieces.cr_plus, &mut failures);
            compare_table(
                "cr_minus",
                &expected.cr_minus,
                &pieces.cr_minus,
                &mut failures,
            );
            compare_table(
                "h_sigma_plus",
                &expected.h_sigma_plus,
                &pieces.h_sigma_plus,
                &mut failures,
            );
            compare_table(
                "h_sigma_minus",
                &expected.h_sigma_minus,
                &pieces.h_sigma_minus,
                &mut failures,
            );
            if let Some(k3) = &expected.k3 {
                let report = k3_report(&ctx)?;
                if (report.n, report.n_prime, report.r, report.a) != (k3.n, k3.n_prime, k3.r, k3.a)
                {
                    failures.push(format!(
                        "k3: expected (n, n', r, a) = ({}, {}, {}, {}), got ({}, {}, {}, {})",
                        k3.n, k3.n_prime, k3.r, k3.a, report.n, report.n_prime, report.r, report.a
                    ));
                }
            }
            if let Some(want) = expected.mirror_pass {
                let got = semi_cy_report(&ctx)?.pass;
                if got != want {
                    failures.push(format!("mirror_pass: expected {want}, got {got}"));
                }
            }
            if let Some(want) = expected.oracle_pass {
                let got = oracle_check(&ctx)?.iter().all(|c| c.pass);
                if got != want {
                    failures.push(format!("oracle_pass: expected {want}, got {got}"));
                }
            }
        }
        Loaded::Product { name, factors } => {
            if expected.kind != "product" {
                failures.push(format!(
                    "kind mismatch: model is a product, sidecar says {}",
                    expected.kind
                ));
                return Ok(failures);
            }
            let direct = factors.iter().map(|c| c.dim()).sum::<usize>() <= 6;
            let report = product_report(&name, &factors, direct)?;
            let table = BigradedTable::from_entries(&report.table)?;
            compare_table("table", &expected.table, &table, &mut failures);
            if let Some(want) = expected.mirror_pass {
                if report.pass != want {
                    failures.push(format!("mirror_pass: expected {want}, got {}", report.pass));
                }
            }
        }
    }
    Ok(failures)
}

fn cmd_corpus(dir: &Path, cap: usize) -> Result<i32> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io {
            path: dir.display().to_string(),
            source: e,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    entries.sort();
    let mut checked = 0usize;
    let mut failed = 0usize;
    for path in &entries {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let sidecar = path.with_extension("expected.json");
        if !sidecar.exists() {
            eprintln!("warning: no expected sidecar for {name}, skipping");
            continue;
        }
        let text = std::fs::read_to_string(&sidecar).map_err(|e| Error::Io {
            path: sidecar.display().to_string(),
            source: e,
        })?;
        let expected: Expected = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", sidecar.display())))?;
        checked += 1;
        match run_one_corpus_model(path, &expected, cap) {
            Ok(failures) if failures.is_empty() => println!("ok   {name}"),
            Ok(failures) => {
                failed += 1;
                println!("FAIL {name}");
                for f in failures {
                    println!("     {f}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {name}");
                println!("     error: {e}");
            }
        }
    }
    println!("corpus: {checked} checked, {failed} failed");
    Ok(if failed == 0 { 0 } else { 1 })
}
