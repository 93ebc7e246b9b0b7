//! Command-line front end: parse algebra/crossing/weight specs, dispatch
//! to the library, emit text/JSON/DOT/LaTeX.
//!
//! Exit codes: 0 success, 1 internal assertion, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::One;
use serde_json::json;

use standop_core::classify::{EdgeStyle, DEFAULT_WEYL_CAP};
use standop_core::formula::DEFAULT_ORDER_CAP;
use standop_core::lie::parse_q;
use standop_core::parabolic::geometric_weight;
use standop_core::{
    bgg_edges, bgg_vertices, casimir_scalar, classify_pair, delta, expand_dk_capped,
    f_star_components, formula, gamma_coefficient, grading, invariant_form, is_p_dominant,
    parse_dynkin, positive_roots, psi_eigenvalue, psi_spectrum, Classification, Error as CoreError,
    GradingReport, HasseGraph, InvariantForm, ParabolicDatum, RenderFormat, Root, Weight, Q,
};

#[derive(Parser)]
#[command(
    name = "standop",
    about = "Standard invariant operators on parabolic geometries: root data, gradings, classification, Hasse graphs and universal formulae",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots of an algebra
    Roots(Common),
    /// Show the grading induced by a crossed node set
    Grading(Common),
    /// Classify operator directions for a p-dominant weight
    Classify(ClassifyArgs),
    /// Emit the labelled BGG Hasse graph for a dominant seed weight
    Hasse(Common),
    /// Expand the order-k universal formula
    Expand(ExpandArgs),
    /// Casimir scalar and eigenvalue queries for a weight
    Casimir(CasimirArgs),
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Dynkin spec: <letter><rank>, e.g. G2 or A4
    #[arg(long)]
    algebra: Option<String>,
    /// Crossed nodes, comma-separated 1-based indices, e.g. 1,4
    #[arg(long)]
    cross: Option<String>,
    /// Weight in fundamental coordinates, comma-separated integers
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Form scale, a nonzero rational like -2 or 7/3 (default 1)
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
    /// Output format: text, json, dot (hasse), latex (expand)
    #[arg(long)]
    format: Option<String>,
    /// Weyl orbit size cap
    #[arg(long = "weyl-cap")]
    weyl_cap: Option<usize>,
    /// Formula expansion order cap
    #[arg(long = "order-cap")]
    order_cap: Option<u32>,
    /// key=value file supplying defaults for the flags above
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    common: Common,
    /// Restrict to one direction: 1-based index into the positive roots
    #[arg(long)]
    direction: Option<usize>,
}

#[derive(Args)]
struct ExpandArgs {
    #[command(flatten)]
    common: Common,
    /// Expansion order k
    #[arg(long)]
    order: u32,
}

#[derive(Args)]
struct CasimirArgs {
    #[command(flatten)]
    common: Common,
    /// Second weight for a Ψ eigenvalue query
    #[arg(long, allow_hyphen_values = true)]
    target: Option<String>,
    /// Direction root (1-based positive-root index) for Γ-coefficients
    #[arg(long)]
    direction: Option<usize>,
    /// Number of Γ-coefficient steps to print (default: the order k)
    #[arg(long)]
    steps: Option<i64>,
    /// f* component (1-based) for a Ψ spectrum
    #[arg(long)]
    component: Option<usize>,
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::InternalAssertion(_) | CoreError::MultiplicityOverflow(_, _) => 1,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
    Latex,
}

/// Flag values after merging the optional config file underneath the
/// command line (flags win).
struct Resolved {
    algebra: Option<String>,
    cross: Option<String>,
    weight: Option<String>,
    scale: Q,
    format: Format,
    weyl_cap: usize,
    order_cap: u32,
}

fn read_config(path: &PathBuf) -> CliResult<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!(
                "config {}:{}: expected key=value",
                path.display(),
                lineno + 1
            ))
        })?;
        out.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}

impl Common {
    fn resolve(&self) -> CliResult<Resolved> {
        let mut algebra = self.algebra.clone();
        let mut cross = self.cross.clone();
        let mut weight = self.weight.clone();
        let mut scale = self.scale.clone();
        let mut format = self.format.clone();
        let mut weyl_cap = self.weyl_cap;
        let mut order_cap = self.order_cap;

        if let Some(path) = &self.config {
            for (key, value) in read_config(path)? {
                match key.as_str() {
                    "algebra" => {
                        algebra.get_or_insert(value);
                    }
                    "cross" => {
                        cross.get_or_insert(value);
                    }
                    "weight" => {
                        weight.get_or_insert(value);
                    }
                    "scale" => {
                        scale.get_or_insert(value);
                    }
                    "format" => {
                        format.get_or_insert(value);
                    }
                    "weyl-cap" => {
                        let parsed = value
                            .parse()
                            .map_err(|_| CliError::usage("config: weyl-cap must be an integer"))?;
                        weyl_cap.get_or_insert(parsed);
                    }
                    "order-cap" => {
                        let parsed = value
                            .parse()
                            .map_err(|_| CliError::usage("config: order-cap must be an integer"))?;
                        order_cap.get_or_insert(parsed);
                    }
                    other => return Err(CliError::usage(format!("config: unknown key `{other}`"))),
                }
            }
        }

        let scale = match scale {
            None => Q::one(),
            Some(s) => {
                parse_q(&s).ok_or_else(|| CliError::usage(format!("bad --scale value `{s}`")))?
            }
        };
        let format = match format.as_deref() {
            None | Some("text") => Format::Text,
            Some("json") => Format::Json,
            Some("dot") => Format::Dot,
            Some("latex") => Format::Latex,
            Some(other) => return Err(CliError::usage(format!("unknown format `{other}`"))),
        };
        Ok(Resolved {
            algebra,
            cross,
            weight,
            scale,
            format,
            weyl_cap: weyl_cap.unwrap_or(DEFAULT_WEYL_CAP),
            order_cap: order_cap.unwrap_or(DEFAULT_ORDER_CAP),
        })
    }
}

impl Resolved {
    fn algebra(&self) -> CliResult<standop_core::CartanDatum> {
        let spec = self
            .algebra
            .as_deref()
            .ok_or_else(|| CliError::usage("--algebra is required"))?;
        Ok(parse_dynkin(spec)?)
    }

    fn form(&self, datum: &standop_core::CartanDatum) -> CliResult<InvariantForm> {
        Ok(invariant_form(datum, self.scale.clone())?)
    }

    fn crossing(&self) -> CliResult<Vec<usize>> {
        let raw = self
            .cross
            .as_deref()
            .ok_or_else(|| CliError::usage("--cross is required"))?;
        let mut nodes = Vec::new();
        for part in raw.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(CliError::usage("empty --cross entry"));
            }
            nodes.push(
                part.parse::<usize>()
                    .map_err(|_| CliError::usage(format!("bad --cross entry `{part}`")))?,
            );
        }
        Ok(nodes)
    }

    fn report(&self) -> CliResult<(GradingReport, InvariantForm)> {
        let datum = self.algebra()?;
        let form = self.form(&datum)?;
        let pd = ParabolicDatum::new(datum, &self.crossing()?)?;
        Ok((grading(&pd, &form), form))
    }

    fn weight(&self, rank: usize) -> CliResult<Weight> {
        let raw = self
            .weight
            .as_deref()
            .ok_or_else(|| CliError::usage("--weight is required"))?;
        parse_weight_list(raw, rank)
    }
}

fn parse_weight_list(raw: &str, rank: usize) -> CliResult<Weight> {
    let mut coords = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        coords.push(
            part.parse::<i64>()
                .map_err(|_| CliError::usage(format!("bad --weight entry `{part}`")))?,
        );
    }
    if coords.len() != rank {
        return Err(CliError::usage(format!(
            "weight has {} coordinates but the algebra has rank {rank}",
            coords.len()
        )));
    }
    Ok(Weight::from_ints(&coords))
}

fn root_json(r: &Root) -> serde_json::Value {
    json!({
        "label": r.to_string(),
        "coords": r.coords(),
        "length": if r.is_long() { "long" } else { "short" },
    })
}

fn weight_str(w: &Weight) -> String {
    w.to_string()
}

fn cmd_roots(common: &Common) -> CliResult<String> {
    let r = common.resolve()?;
    let datum = r.algebra()?;
    let roots = positive_roots(&datum);
    match r.format {
        Format::Json => {
            let v = json!({
                "schema": "standop.roots/1",
                "algebra": format!("{}{}", datum.series(), datum.rank()),
                "count": roots.len(),
                "roots": roots.iter().enumerate().map(|(i, root)| {
                    let mut j = root_json(root);
                    j["index"] = json!(i + 1);
                    j["height"] = json!(root.coord_sum());
                    j
                }).collect::<Vec<_>>(),
            });
            Ok(v.to_string())
        }
        Format::Text => {
            let mut out = format!(
                "positive roots of {}{} ({} total)\n",
                datum.series(),
                datum.rank(),
                roots.len()
            );
            out.push_str("  #  root            height  length\n");
            for (i, root) in roots.iter().enumerate() {
                out.push_str(&format!(
                    "{:>3}  {:<14}  {:>6}  {}\n",
                    i + 1,
                    root.to_string(),
                    root.coord_sum(),
                    if root.is_long() { "long" } else { "short" },
                ));
            }
            Ok(out)
        }
        _ => Err(CliError::usage("roots supports text or json output")),
    }
}

fn cmd_grading(common: &Common) -> CliResult<String> {
    let r = common.resolve()?;
    let (report, form) = r.report()?;
    let datum = report.datum().clone();
    let comps = f_star_components(&report);
    match r.format {
        Format::Json => {
            let v = json!({
                "schema": "standop.grading/1",
                "algebra": format!("{}{}", datum.series(), datum.rank()),
                "crossed": report.parabolic().crossed().map(|i| i + 1).collect::<Vec<_>>(),
                "depth": report.depth(),
                "layers": report.layers().iter().enumerate().map(|(j, layer)| json!({
                    "height": j + 1,
                    "dim": layer.len(),
                    "roots": layer.iter().map(root_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "levi_roots": report.levi_roots().iter().map(root_json).collect::<Vec<_>>(),
                "delta0": weight_str(report.delta0()),
                "f_star_components": comps.iter().map(|c| json!({
                    "node": c.crossed_node + 1,
                    "dim": c.dim(),
                    "highest_weight": weight_str(&c.highest_weight),
                })).collect::<Vec<_>>(),
                "scale": form.scale().to_string(),
            });
            Ok(v.to_string())
        }
        Format::Text => {
            let mut out = format!(
                "algebra {}{}, crossed {{{}}}\n",
                datum.series(),
                datum.rank(),
                report
                    .parabolic()
                    .crossed()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out.push_str(&format!("depth {}\n", report.depth()));
            for (j, layer) in report.layers().iter().enumerate() {
                let names: Vec<String> = layer.iter().map(|r| r.to_string()).collect();
                out.push_str(&format!(
                    "g{} (dim {}): {}\n",
                    j + 1,
                    layer.len(),
                    names.join(", ")
                ));
            }
            let levi: Vec<String> = report.levi_roots().iter().map(|r| r.to_string()).collect();
            out.push_str(&format!(
                "levi positive roots (dim {}): {}\n",
                report.levi_roots().len(),
                if levi.is_empty() {
                    "-".to_string()
                } else {
                    levi.join(", ")
                }
            ));
            out.push_str(&format!("delta0 = {}\n", report.delta0()));
            for c in &comps {
                out.push_str(&format!(
                    "f* component at node {}: dim {}, highest weight {}\n",
                    c.crossed_node + 1,
                    c.dim(),
                    c.highest_weight
                ));
            }
            Ok(out)
        }
        _ => Err(CliError::usage("grading supports text or json output")),
    }
}

fn classification_json(root_index: usize, alpha: &Root, c: &Classification) -> serde_json::Value {
    match c {
        Classification::Operator(d) => json!({
            "direction_index": root_index + 1,
            "direction": root_json(alpha),
            "exists": true,
            "order": d.order,
            "source": weight_str(&d.source),
            "target": weight_str(&d.target),
            "constructed": d.constructed,
            "eigen_ladder": d.eigen_ladder.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        }),
        Classification::Rejected(reason) => json!({
            "direction_index": root_index + 1,
            "direction": root_json(alpha),
            "exists": false,
            "reason": reason.to_string(),
        }),
    }
}

fn cmd_classify(args: &ClassifyArgs) -> CliResult<String> {
    let r = args.common.resolve()?;
    let (report, form) = r.report()?;
    let datum = report.datum().clone();
    let lam = r.weight(datum.rank())?;
    if !is_p_dominant(&lam, &report)? {
        return Err(CliError::usage(format!(
            "weight {lam} is not dominant for the parabolic"
        )));
    }
    let roots = positive_roots(&datum);
    let selected: Vec<(usize, &Root)> = match args.direction {
        Some(i) => {
            if i == 0 || i > roots.len() {
                return Err(CliError::usage(format!(
                    "--direction must be in 1..={}",
                    roots.len()
                )));
            }
            vec![(i - 1, &roots[i - 1])]
        }
        None => roots.iter().enumerate().collect(),
    };
    let mut results = Vec::new();
    for (i, alpha) in &selected {
        results.push((
            *i,
            (*alpha).clone(),
            classify_pair(&lam, alpha, &report, &form)?,
        ));
    }
    match r.format {
        Format::Json => {
            let v = json!({
                "schema": "standop.classify/1",
                "algebra": format!("{}{}", datum.series(), datum.rank()),
                "crossed": report.parabolic().crossed().map(|i| i + 1).collect::<Vec<_>>(),
                "lambda": weight_str(&lam),
                "scale": form.scale().to_string(),
                "directions": results.iter().map(|(i, a, c)| classification_json(*i, a, c)).collect::<Vec<_>>(),
            });
            Ok(v.to_string())
        }
        Format::Text => {
            let mut out = format!("classification for lambda = {lam}\n");
            for (_, alpha, c) in &results {
                match c {
                    Classification::Operator(d) => {
                        let ladder: Vec<String> =
                            d.eigen_ladder.iter().map(|q| q.to_string()).collect();
                        out.push_str(&format!(
                            "  {alpha}: order-{} operator to {}; ladder [{}]\n",
                            d.order,
                            d.target,
                            ladder.join(", ")
                        ));
                    }
                    Classification::Rejected(reason) => {
                        out.push_str(&format!("  {alpha}: no operator ({reason})\n"));
                    }
                }
            }
            Ok(out)
        }
        _ => Err(CliError::usage("classify supports text or json output")),
    }
}

fn hasse_dot(graph: &HasseGraph) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=LR;\n  node [shape=box];\n");
    for (i, (w, l)) in graph.vertices.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{w} len {l}\"];\n"));
    }
    for e in &graph.edges {
        let style = match e.style {
            EdgeStyle::Full => "solid",
            EdgeStyle::Dotted => "dashed",
        };
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{} k={}\", style={style}];\n",
            e.from, e.to, e.label, e.order
        ));
    }
    out.push_str("}\n");
    out
}

fn cmd_hasse(common: &Common) -> CliResult<String> {
    let r = common.resolve()?;
    let (report, form) = r.report()?;
    let datum = report.datum().clone();
    let seed = r.weight(datum.rank())?;
    let verts = bgg_vertices(&seed, &report, &form, r.weyl_cap)?;
    let graph = bgg_edges(&verts, &report, &form);
    match r.format {
        Format::Dot => Ok(hasse_dot(&graph)),
        Format::Json => {
            let v = json!({
                "schema": "standop.hasse/1",
                "algebra": format!("{}{}", datum.series(), datum.rank()),
                "crossed": report.parabolic().crossed().map(|i| i + 1).collect::<Vec<_>>(),
                "seed": weight_str(&seed),
                "vertices": graph.vertices.iter().map(|(w, l)| json!({
                    "weight": weight_str(w),
                    "length": l,
                })).collect::<Vec<_>>(),
                "edges": graph.edges.iter().map(|e| json!({
                    "from": e.from,
                    "to": e.to,
                    "label": e.label.to_string(),
                    "order": e.order,
                    "constructed": e.constructed,
                    "style": if e.style == EdgeStyle::Full { "full" } else { "dotted" },
                    "note": e.note.map(|_| "first-order-by-general-theory"),
                })).collect::<Vec<_>>(),
            });
            Ok(v.to_string())
        }
        Format::Text => {
            let mut out = format!(
                "BGG graph for seed {seed}: {} vertices, {} edges, levels {:?}\n",
                graph.vertices.len(),
                graph.edges.len(),
                graph.level_sizes()
            );
            for (i, (w, l)) in graph.vertices.iter().enumerate() {
                out.push_str(&format!("  v{i} (len {l}): {w}\n"));
            }
            for e in &graph.edges {
                out.push_str(&format!(
                    "  v{} -> v{}  {}  k={}  {}\n",
                    e.from,
                    e.to,
                    e.label,
                    e.order,
                    if e.constructed { "full" } else { "dotted" }
                ));
            }
            Ok(out)
        }
        Format::Latex => Err(CliError::usage("hasse supports text, json or dot output")),
    }
}

fn cmd_expand(args: &ExpandArgs) -> CliResult<String> {
    let r = args.common.resolve()?;
    let f = expand_dk_capped(args.order, r.order_cap)?;
    let fmt = match r.format {
        Format::Text => RenderFormat::Text,
        Format::Json => RenderFormat::Json,
        Format::Latex => RenderFormat::Latex,
        Format::Dot => {
            return Err(CliError::usage(
                "expand supports text, json or latex output",
            ))
        }
    };
    Ok(formula::render(&f, fmt))
}

fn cmd_casimir(args: &CasimirArgs) -> CliResult<String> {
    let r = args.common.resolve()?;
    let (report, form) = r.report()?;
    let datum = report.datum().clone();
    let lam = r.weight(datum.rank())?;
    let roots = positive_roots(&datum);

    let scalar = casimir_scalar(&lam, &report, &form);
    let geo = geometric_weight(&lam, &report);

    let mut target_entry: Option<(Weight, Q)> = None;
    if let Some(raw) = &args.target {
        let mu = parse_weight_list(raw, datum.rank())?;
        let c = psi_eigenvalue(&lam, &mu, &form);
        target_entry = Some((mu, c));
    }

    let mut gamma_entries: Vec<(i64, Q)> = Vec::new();
    let mut direction_root: Option<Root> = None;
    if let Some(i) = args.direction {
        if i == 0 || i > roots.len() {
            return Err(CliError::usage(format!(
                "--direction must be in 1..={}",
                roots.len()
            )));
        }
        let alpha = &roots[i - 1];
        direction_root = Some(alpha.clone());
        let d = delta(&datum);
        let k = -standop_core::coroot_pairing(&lam.add(&d), alpha, &form);
        let steps = args.steps.unwrap_or_else(|| {
            if k.denom().is_one() && k.numer() > &0.into() {
                i64::try_from(k.numer().clone()).unwrap_or(4)
            } else {
                4
            }
        });
        for j in 1..=steps.max(1) {
            gamma_entries.push((j, gamma_coefficient(&lam, alpha, j, &form)?));
        }
    }

    let mut spectrum = None;
    if let Some(i) = args.component {
        if i == 0 {
            return Err(CliError::usage("--component is 1-based"));
        }
        spectrum = Some(psi_spectrum(&lam, i - 1, &report, &form)?);
    }

    match r.format {
        Format::Json => {
            let v = json!({
                "schema": "standop.casimir/1",
                "algebra": format!("{}{}", datum.series(), datum.rank()),
                "crossed": report.parabolic().crossed().map(|i| i + 1).collect::<Vec<_>>(),
                "lambda": weight_str(&lam),
                "scale": form.scale().to_string(),
                "casimir_scalar": scalar.to_string(),
                "geometric_weight": geo.to_string(),
                "psi": target_entry.as_ref().map(|(mu, c)| json!({
                    "mu": weight_str(mu),
                    "eigenvalue": c.to_string(),
                })),
                "gamma": direction_root.as_ref().map(|alpha| json!({
                    "direction": alpha.to_string(),
                    "coefficients": gamma_entries.iter().map(|(j, c)| json!({
                        "j": j,
                        "value": c.to_string(),
                    })).collect::<Vec<_>>(),
                })),
                "spectrum": spectrum.as_ref().map(|s| s.entries.iter().map(|(part, c)| json!({
                    "highest_weight": weight_str(&part.highest_weight),
                    "multiplicity": part.multiplicity,
                    "eigenvalue": c.to_string(),
                })).collect::<Vec<_>>()),
            });
            Ok(v.to_string())
        }
        Format::Text => {
            let mut out = format!("lambda = {lam}\n");
            out.push_str(&format!(
                "casimir scalar (lambda, lambda+2*delta0) = {scalar}\n"
            ));
            out.push_str(&format!("geometric weight = {geo}\n"));
            if let Some((mu, c)) = &target_entry {
                out.push_str(&format!("psi eigenvalue to {mu}: {c}\n"));
            }
            if let Some(alpha) = &direction_root {
                out.push_str(&format!("gamma coefficients along {alpha}:\n"));
                for (j, c) in &gamma_entries {
                    out.push_str(&format!("  j={j}: {c}\n"));
                }
            }
            if let Some(s) = &spectrum {
                out.push_str("psi spectrum:\n");
                for (part, c) in &s.entries {
                    out.push_str(&format!(
                        "  component {} (mult {}): eigenvalue {c}\n",
                        part.highest_weight, part.multiplicity
                    ));
                }
            }
            Ok(out)
        }
        _ => Err(CliError::usage("casimir supports text or json output")),
    }
}

fn run() -> CliResult<String> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Roots(c) => cmd_roots(c),
        Command::Grading(c) => cmd_grading(c),
        Command::Classify(a) => cmd_classify(a),
        Command::Hasse(c) => cmd_hasse(c),
        Command::Expand(a) => cmd_expand(a),
        Command::Casimir(a) => cmd_casimir(a),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(output) => {
            use std::io::Write;
            // a closed pipe downstream is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{}", output.trim_end()).is_err()
                || stdout.flush().is_err()
            {
                return ExitCode::SUCCESS;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
