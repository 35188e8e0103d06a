//! Command-line frontend: property checks, shelling verification,
//! family construction, crosspolytope censuses, line shellings and a
//! one-shot `reproduce` run over the bundled datasets.
//!
//! Exit codes: 0 on success, 2 on validation or input errors, 3 when a
//! requested assertion or claim fails.

mod claims;
mod io;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polytopal::constructions::{family, FamilySpec};
use polytopal::crosspolytope::{bounds_check, census, CensusOptions};
use polytopal::datasets;
use polytopal::digraph::classify;
use polytopal::geometry::{centroid, sample_line_shellings, two_facet_start_shelling};
use polytopal::json::{GeometryDoc, OrientationDoc, PolytopeDoc};
use polytopal::shelling;

use crate::io::{load_digraph, load_geometry, CliError};

#[derive(Parser)]
#[command(
    name = "polytopal",
    about = "Polytopal digraph toolkit: acyclicity, unique sink orientations, \
             Holt-Klee and shelling checks, truncation/pyramid families, and \
             crosspolytope censuses",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a polytopal digraph (acyclic, USO, Holt-Klee, shelling).
    Check(CheckArgs),
    /// Verify one facet order against the shelling conditions.
    ShellingCheck(ShellingCheckArgs),
    /// Decide the shelling property of a polytopal digraph.
    ShellingProperty(ShellingPropertyArgs),
    /// Grow a digraph by truncations and pyramids and classify the result.
    Family(FamilyArgs),
    /// Census of crosspolytope pair sequences.
    Xcensus(XcensusArgs),
    /// Exact integer bounds on good-sequence counts.
    Bounds(BoundsArgs),
    /// Sample line shellings or build a two-facet-start shelling.
    LineShelling(LineShellingArgs),
    /// Verify the bundled V/H-representation of omega-star.
    VerifyOmega(VerifyOmegaArgs),
    /// Run every bundled claim and print a pass/fail ledger.
    Reproduce(ReproduceArgs),
    /// List the embedded datasets.
    Datasets,
}

#[derive(Args)]
struct InputArgs {
    /// Polytope JSON file.
    polytope: Option<PathBuf>,
    /// Orientation JSON file.
    orientation: Option<PathBuf>,
    /// Use an embedded dataset instead of files.
    #[arg(long, conflicts_with = "polytope")]
    dataset: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
    /// Write the digraph in GraphViz DOT format to this file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Comma-separated assertions; prefix with '!' to negate
    /// (acyclic, uso, holt-klee, shelling, x-type). Exit 3 when violated.
    #[arg(long, value_delimiter = ',')]
    assert: Vec<String>,
}

#[derive(Args)]
struct ShellingCheckArgs {
    /// Polytope JSON file, or an embedded dataset name via --dataset.
    polytope: Option<PathBuf>,
    #[arg(long, conflicts_with = "polytope")]
    dataset: Option<String>,
    /// Facet order as comma-separated facet names.
    #[arg(long, value_delimiter = ',', required = true)]
    order: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ShellingPropertyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Check every topological sort instead of relying on one.
    #[arg(long)]
    audit: bool,
    /// Largest number of sorts the audit may enumerate.
    #[arg(long, default_value_t = 100_000)]
    audit_cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Base dataset (must carry an orientation), e.g. `omega`.
    #[arg(long, default_value = "omega")]
    base: String,
    /// Target dimension (>= 4).
    #[arg(long)]
    dim: i32,
    /// Target vertex count.
    #[arg(long)]
    vertices: usize,
    /// Output prefix; writes PREFIX.polytope.json and
    /// PREFIX.orientation.json.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct XcensusArgs {
    /// Largest dimension to census.
    #[arg(long, default_value_t = 6)]
    dmax: u32,
    /// Re-verify USO and Holt-Klee with the digraph deciders (d <= 4).
    #[arg(long)]
    full_hk: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 8)]
    dmax: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LineShellingArgs {
    /// Geometry JSON file with coordinates and inequalities.
    #[arg(long, conflicts_with = "dataset")]
    geometry: Option<PathBuf>,
    /// Embedded dataset with geometry (omega-star, cube-3, cube-4).
    #[arg(long)]
    dataset: Option<String>,
    /// Number of generic lines to sample.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Build a shelling starting with these two adjacent facets
    /// (comma-separated names, e.g. F_1,F_2) instead of sampling.
    #[arg(long, value_delimiter = ',')]
    start_facets: Vec<String>,
    /// With --start-facets: return the reversed order instead.
    #[arg(long)]
    reversed: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyOmegaArgs {
    /// Override the embedded geometry with a JSON file.
    #[arg(long)]
    geometry: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Override the embedded omega-star geometry with a JSON file.
    #[arg(long)]
    geometry: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::ShellingCheck(args) => cmd_shelling_check(args),
        Command::ShellingProperty(args) => cmd_shelling_property(args),
        Command::Family(args) => cmd_family(args),
        Command::Xcensus(args) => cmd_xcensus(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::LineShelling(args) => cmd_line_shelling(args),
        Command::VerifyOmega(args) => cmd_verify_omega(args),
        Command::Reproduce(args) => cmd_reproduce(args),
        Command::Datasets => {
            for name in datasets::DATASET_NAMES {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_digraph(
        &args.input.dataset,
        &args.input.polytope,
        &args.input.orientation,
    )?;
    let report = classify(&g);
    if let Some(path) = args.dot {
        std::fs::write(&path, g.to_dot(&name))?;
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&render::report_json(&name, &g, &report))?
        );
    } else {
        render::print_report(&name, &g, &report);
    }
    let mut violated = Vec::new();
    for a in &args.assert {
        let (expect, key) = match a.strip_prefix('!') {
            Some(rest) => (false, rest),
            None => (true, a.as_str()),
        };
        let actual = match key {
            "acyclic" => report.acyclic,
            "uso" => report.uso,
            "holt-klee" => report.holt_klee,
            "shelling" => report.shelling,
            "x-type" => report.x_type,
            other => return Err(CliError::Validation(format!("unknown assertion {other:?}"))),
        };
        if actual != expect {
            violated.push(a.clone());
        }
    }
    if violated.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("failed assertions: {}", violated.join(", "));
        Ok(ExitCode::from(3))
    }
}

fn cmd_shelling_check(args: ShellingCheckArgs) -> Result<ExitCode, CliError> {
    let inc = io::load_polytope(&args.dataset, &args.polytope)?;
    let lattice = polytopal::lattice::build_face_lattice(&inc)?;
    if args.order.len() != lattice.facet_count() {
        return Err(CliError::Validation(format!(
            "order lists {} facets, the polytope has {}",
            args.order.len(),
            lattice.facet_count()
        )));
    }
    let mut order = Vec::new();
    for name in &args.order {
        let Some(j) = lattice.facet_index(name) else {
            return Err(CliError::Validation(format!("unknown facet {name:?}")));
        };
        if order.contains(&j) {
            return Err(CliError::Validation(format!("facet {name:?} repeated")));
        }
        order.push(j);
    }
    let verdict = shelling::is_shelling(&lattice, &order);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&render::verdict_json(&lattice, &order, &verdict))?
        );
    } else {
        render::print_verdict(&lattice, &order, &verdict);
    }
    Ok(if verdict.is_shelling {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_shelling_property(args: ShellingPropertyArgs) -> Result<ExitCode, CliError> {
    let (name, g) = load_digraph(
        &args.input.dataset,
        &args.input.polytope,
        &args.input.orientation,
    )?;
    let exists = shelling::shelling_property_exists(&g);
    let audit = if args.audit {
        Some(shelling::shelling_property_all_audit(&g, args.audit_cap)?)
    } else {
        None
    };
    if args.json {
        let mut doc = serde_json::json!({
            "polytope": name,
            "shelling_property": exists,
        });
        if let Some(a) = &audit {
            doc["audit"] = serde_json::json!({
                "holds_for_all_sorts": a.holds_for_all,
                "sorts_checked": a.sorts_checked,
            });
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!(
            "shelling property: {}",
            if exists { "holds" } else { "does not hold" }
        );
        if let Some(a) = &audit {
            println!(
                "audit: {} over all {} topological sorts",
                if a.holds_for_all { "holds" } else { "fails" },
                a.sorts_checked
            );
        }
    }
    Ok(if exists {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode, CliError> {
    let (_, g0) = load_digraph(&Some(args.base.clone()), &None, &None)?;
    let spec = FamilySpec {
        dimension: args.dim,
        vertices: args.vertices,
    };
    let g = family(&g0, &spec)?;
    let inc = g.lattice().to_incidence()?;
    let name = format!("{}-d{}-n{}", args.base, args.dim, args.vertices);

    let polytope_path = args.out.with_extension("polytope.json");
    let orientation_path = args.out.with_extension("orientation.json");
    let doc = PolytopeDoc::from_incidence(&name, &inc);
    std::fs::write(&polytope_path, serde_json::to_string_pretty(&doc)?)?;
    let odoc = OrientationDoc {
        polytope: name.clone(),
        edges: g.edges().to_vec(),
    };
    std::fs::write(&orientation_path, serde_json::to_string_pretty(&odoc)?)?;

    let report = classify(&g);
    if args.json {
        let mut doc = render::report_json(&name, &g, &report);
        doc["files"] = serde_json::json!({
            "polytope": polytope_path.display().to_string(),
            "orientation": orientation_path.display().to_string(),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!(
            "wrote {} and {}",
            polytope_path.display(),
            orientation_path.display()
        );
        render::print_report(&name, &g, &report);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_xcensus(args: XcensusArgs) -> Result<ExitCode, CliError> {
    let mut rows = Vec::new();
    for d in 2..=args.dmax {
        let opts = CensusOptions {
            limit: args.dmax,
            verify_digraphs: args.full_hk && d <= 4,
        };
        rows.push(census(d, &opts)?);
    }
    let bounds: std::collections::HashMap<u32, bool> = if args.dmax >= 4 {
        bounds_check(args.dmax)
            .into_iter()
            .map(|r| (r.d, r.all_ok()))
            .collect()
    } else {
        Default::default()
    };
    if args.json {
        let doc: Vec<serde_json::Value> = rows
            .iter()
            .map(|c| {
                let mut v = render::census_json(c);
                if let Some(ok) = bounds.get(&c.d) {
                    v["bounds_pass"] = serde_json::json!(ok);
                }
                v
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("d\ttotal\ta_d\tb_d\tx_type\tconsistent\tbounds");
        for c in &rows {
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.d,
                c.total,
                c.good,
                c.uso,
                c.x_type,
                c.consistent(),
                bounds
                    .get(&c.d)
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "-".into())
            );
        }
    }
    if rows.iter().all(|c| c.consistent()) && bounds.values().all(|&b| b) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode, CliError> {
    if args.dmax < 4 {
        return Err(CliError::Validation("--dmax must be at least 4".into()));
    }
    let rows = bounds_check(args.dmax);
    let all_ok = rows.iter().all(|r| r.all_ok());
    if args.json {
        let doc: Vec<serde_json::Value> = rows.iter().map(render::bounds_json).collect();
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("d\tlower\ta_d\tupper\tb_d-a_d\tgap\tratio_ok\tpass");
        for r in &rows {
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.d,
                r.lower,
                r.a,
                r.upper,
                &r.b - &r.a,
                r.gap,
                r.ratio_ok,
                r.all_ok()
            );
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_line_shelling(args: LineShellingArgs) -> Result<ExitCode, CliError> {
    let (points, halfspaces) = load_geometry(&args.dataset, &args.geometry)?;
    let incidence = polytopal::geometry::verify_vh(&points, &halfspaces)?;
    let lattice = polytopal::lattice::build_face_lattice(&incidence)?;

    let orders: Vec<Vec<usize>> = if args.start_facets.is_empty() {
        let base = centroid(&points);
        sample_line_shellings(&halfspaces, &base, args.samples, 100 * args.samples.max(4))?
            .into_iter()
            .map(|(_, order)| order)
            .collect()
    } else {
        let [a, b] = args.start_facets.as_slice() else {
            return Err(CliError::Validation(
                "--start-facets takes exactly two facet names".into(),
            ));
        };
        let find = |name: &String| {
            incidence
                .facet_index(name)
                .ok_or_else(|| CliError::Validation(format!("unknown facet {name:?}")))
        };
        vec![two_facet_start_shelling(
            &points,
            &halfspaces,
            find(a)?,
            find(b)?,
            args.reversed,
        )?]
    };

    let mut all_ok = true;
    let mut docs = Vec::new();
    for order in &orders {
        let verdict = shelling::is_shelling(&lattice, order);
        all_ok &= verdict.is_shelling;
        let names: Vec<&str> = order.iter().map(|&j| incidence.facet_name(j)).collect();
        if args.json {
            docs.push(serde_json::json!({
                "order": names,
                "is_shelling": verdict.is_shelling,
            }));
        } else {
            println!(
                "{} [{}]",
                names.join(","),
                if verdict.is_shelling {
                    "shelling"
                } else {
                    "NOT a shelling"
                }
            );
        }
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&docs)?);
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn load_omega_geometry(
    path: &Option<PathBuf>,
) -> Result<
    (
        Vec<polytopal::geometry::RationalPoint>,
        Vec<polytopal::geometry::Halfspace>,
    ),
    CliError,
> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            let doc: GeometryDoc = serde_json::from_str(&text)?;
            Ok(doc.to_geometry()?)
        }
        None => Ok(datasets::omega_star_geometry()),
    }
}

fn cmd_verify_omega(args: VerifyOmegaArgs) -> Result<ExitCode, CliError> {
    let geometry = load_omega_geometry(&args.geometry)?;
    let outcome = claims::verify_omega_claim(&geometry);
    let outcomes = vec![outcome];
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&claims::to_json(&outcomes))?
        );
    } else {
        claims::print(&outcomes);
    }
    Ok(if outcomes[0].pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<ExitCode, CliError> {
    let geometry = load_omega_geometry(&args.geometry)?;
    let outcomes = claims::run_all(&geometry);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&claims::to_json(&outcomes))?
        );
    } else {
        claims::print(&outcomes);
    }
    Ok(if outcomes.iter().all(|o| o.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}
