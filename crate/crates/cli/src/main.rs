//! `parahoric`: batch verifier for root-system level graphs and finite
//! parahoric group instances.

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parahoric::chevalley_signs::build_sign_table;
use parahoric::concave::length_plus_two;
use parahoric::exec::Execution;
use parahoric::level_graphs::{all_graphs, build_graph, cycle_matrix, enumerate_cycles, triangulate_cycle, LevelGraph};
use parahoric::parahoric_group::{
    build_product, verify_clbi, verify_dcprod, verify_overgroup_classification,
    verify_parahoric_axioms, verify_pseudo_borel_conjugacy, verify_rank1_classes, verify_reduction,
    Budget, Factor, FiniteParahoricGroup, GroupError, GroupType, Isogeny,
};
use parahoric::report::{Check, Report};
use parahoric::root_system::{length_count_findings, DynkinType, RootSystem};
use parahoric::steinberg::{generic_bound_check, verify_main_theorem, SteinbergError};

#[derive(Parser)]
#[command(name = "parahoric", version, about, disable_help_flag = true)]
struct Cli {
    #[arg(long, action = ArgAction::Help, global = true)]
    help: Option<bool>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Negative roots by length, Coxeter number and pseudo-leaves.
    Roots(SystemArgs),
    /// Level graphs with cycles, triangulations and determinant constants.
    Graphs(GraphArgs),
    /// Runs every applicable check on a group over Z/p^h.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Only this length.
    #[arg(long)]
    l: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// A1, A2, C2, or a product such as A1xA1.
    #[arg(long = "type")]
    kind: String,
    #[arg(long, default_value = "sc")]
    isogeny: String,
    /// Residual characteristic; one per factor, comma separated, for products.
    #[arg(short = 'p', value_delimiter = ',', required = true)]
    p: Vec<u32>,
    /// Depth.
    #[arg(short = 'h')]
    h: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = Budget::default().elements)]
    budget_elements: u64,
    #[arg(long, default_value_t = Budget::default().cosets)]
    budget_cosets: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

fn system(args: &SystemArgs) -> Result<RootSystem, String> {
    let kind = DynkinType::from_letter(&args.kind).map_err(|e| e.to_string())?;
    RootSystem::new(kind, args.rank).map_err(|e| e.to_string())
}

fn cmd_roots(args: &SystemArgs) -> Result<(String, bool), String> {
    if args.format == Format::Dot {
        return Err("roots has no dot output".into());
    }
    let rs = system(args)?;
    let lengths: Vec<Value> = (1..=rs.max_length())
        .map(|l| {
            let roots: Vec<String> = rs.negative_roots_of_length(l).iter().map(|r| r.to_string()).collect();
            let leaves: Vec<String> = rs.pseudo_leaves(l).iter().map(|r| r.to_string()).collect();
            json!({"l": l, "count": roots.len(), "roots": roots, "pseudo_leaves": leaves})
        })
        .collect();
    let findings = length_count_findings(&rs);
    let coxeter = rs.coxeter_number().map_err(|e| e.to_string())?;
    let out = match args.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "system": rs.label(),
            "negative_roots": rs.num_positive(),
            "coxeter_number": coxeter,
            "lengths": lengths,
            "closed_form_findings": findings,
        }))
        .expect("serializable"),
        _ => {
            let mut s = format!(
                "{}: {} negative roots, Coxeter number {coxeter}\n",
                rs.label(),
                rs.num_positive()
            );
            for v in &lengths {
                s.push_str(&format!(
                    "  l={:<3} count={:<3} pseudo-leaves: {}\n",
                    v["l"],
                    v["count"],
                    v["pseudo_leaves"]
                        .as_array()
                        .map(|a| a.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(" "))
                        .unwrap_or_default()
                ));
            }
            for f in &findings {
                s.push_str(&format!(
                    "  finding: l={} enumerated {} but closed form gives {}\n",
                    f.length, f.enumerated, f.closed_form
                ));
            }
            s
        }
    };
    Ok((out, true))
}

fn graph_json(rs: &RootSystem, g: &LevelGraph) -> Result<Value, String> {
    let signs = build_sign_table(rs).map_err(|e| e.to_string())?;
    let cycles = enumerate_cycles(rs, g).map_err(|e| e.to_string())?;
    let cycles: Vec<Value> = cycles
        .iter()
        .map(|c| {
            let det = if c.reduced {
                cycle_matrix(c, &signs).ok().map(|m| m.det_constant)
            } else {
                None
            };
            let tri = triangulate_cycle(rs, g, c).map(|t| {
                t.iter()
                    .map(|x| x.iter().map(|r| r.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            });
            json!({
                "length": c.len(),
                "reduced": c.reduced,
                "level": c.level,
                "vertices": c.vertices.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "betas": c.betas.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "det_constant": det,
                "triangulation": tri,
            })
        })
        .collect();
    Ok(json!({
        "l": g.l,
        "vertices": g.vertices.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({
            "a": g.vertices[e.a].to_string(),
            "b": g.vertices[e.b].to_string(),
            "label": e.label.to_string(),
        })).collect::<Vec<_>>(),
        "isolated_betas": g.isolated_betas.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "connected": g.is_connected(),
        "acyclic": g.is_acyclic(),
        "cycles": cycles,
    }))
}

fn cmd_graphs(args: &GraphArgs) -> Result<(String, bool), String> {
    let rs = system(&args.system)?;
    let graphs = match args.l {
        Some(l) => vec![build_graph(&rs, l).map_err(|e| e.to_string())?],
        None => all_graphs(&rs, Execution::default()).map_err(|e| e.to_string())?,
    };
    let out = match args.system.format {
        Format::Dot => graphs.iter().map(LevelGraph::to_dot).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let items = graphs.iter().map(|g| graph_json(&rs, g)).collect::<Result<Vec<_>, _>>()?;
            serde_json::to_string_pretty(&json!({"system": rs.label(), "graphs": items})).expect("serializable")
        }
        Format::Text => {
            let mut s = String::new();
            for g in &graphs {
                let v = graph_json(&rs, g)?;
                s.push_str(&format!(
                    "l={} vertices={} edges={} connected={} acyclic={}\n",
                    g.l,
                    g.vertices.len(),
                    g.edges.len(),
                    g.is_connected(),
                    g.is_acyclic()
                ));
                s.push_str(&g.to_edge_list());
                for c in v["cycles"].as_array().into_iter().flatten() {
                    s.push_str(&format!(
                        "  cycle length={} reduced={} level={} det={} triangulated={}\n",
                        c["length"],
                        c["reduced"],
                        c["level"],
                        c["det_constant"],
                        !c["triangulation"].is_null()
                    ));
                }
            }
            s
        }
    };
    Ok((out, true))
}

fn parse_factors(args: &VerifyArgs) -> Result<(Vec<Factor>, Isogeny), String> {
    let kinds: Vec<GroupType> = args
        .kind
        .split(['x', 'X', '*'])
        .map(|k| GroupType::parse(k).ok_or(format!("unknown group type {k}")))
        .collect::<Result<_, _>>()?;
    let ps = match (kinds.len(), args.p.len()) {
        (n, 1) => vec![args.p[0]; n],
        (n, m) if n == m => args.p.clone(),
        (n, m) => return Err(format!("{n} factors but {m} primes")),
    };
    let isogeny = Isogeny::parse(&args.isogeny).ok_or(format!("unknown isogeny {}", args.isogeny))?;
    Ok((
        kinds.into_iter().zip(ps).map(|(kind, p)| Factor { kind, p }).collect(),
        isogeny,
    ))
}

fn prefixed(report: Report, prefix: &str) -> Vec<Check> {
    report
        .checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}.{}", c.name);
            c
        })
        .collect()
}

/// Notes a skipped suite on stderr; errors other than inapplicability abort.
fn applicable<T>(suite: &str, r: Result<T, SteinbergError>) -> Result<Option<T>, String> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(
            e @ (SteinbergError::DepthOne(_)
            | SteinbergError::NotGeneric(_)
            | SteinbergError::BeyondDepth { .. }
            | SteinbergError::Group(
                GroupError::Budget { .. }
                | GroupError::Concave(_)
                | GroupError::Unsupported(_)
                | GroupError::ConnectionIndex { .. }
                | GroupError::DepthTooSmall(_),
            )),
        ) => {
            eprintln!("skipping {suite}: {e}");
            Ok(None)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_suites(g: &FiniteParahoricGroup) -> Result<Report, String> {
    let mut report = Report::new(g.instance());
    let single = g.factors().len() == 1;
    eprintln!("checking axioms");
    report.checks.extend(prefixed(verify_parahoric_axioms(g), "axioms"));
    if single {
        eprintln!("checking rank one classes");
        if let Some(r) = applicable("rank1", verify_rank1_classes(g).map_err(Into::into))? {
            report.checks.extend(prefixed(r, "rank1"));
        }
        eprintln!("checking reduction");
        if let Some(r) = applicable("reduction", verify_reduction(g).map_err(Into::into))? {
            report.checks.extend(prefixed(r, "reduction"));
        }
        eprintln!("checking pseudo-Borel conjugacy");
        if let Some(r) = applicable("conjugacy", verify_pseudo_borel_conjugacy(g).map_err(Into::into))? {
            report.checks.extend(prefixed(r, "conjugacy"));
        }
        eprintln!("checking the subgroup interval");
        if let Some(r) = applicable("interval", verify_overgroup_classification(g).map_err(Into::into))? {
            report.checks.extend(prefixed(r, "interval"));
        }
    } else {
        eprintln!("checking product decomposition");
        if let Some(r) = applicable("dcprod", verify_dcprod(g).map_err(Into::into))? {
            report.checks.extend(prefixed(r, "dcprod"));
        }
    }
    eprintln!("checking exterior double classes");
    if let Some(r) = applicable("clbi", verify_clbi(g).map_err(Into::into))? {
        report.checks.extend(prefixed(r, "clbi"));
    }
    if single {
        eprintln!("checking the Steinberg decomposition");
        if let Some(r) = applicable("steinberg", verify_main_theorem(g))? {
            report.checks.extend(prefixed(r.report, "steinberg"));
        }
        let generic = length_plus_two(g.root_system(), g.depth())
            .map_err(|e| SteinbergError::Group(GroupError::Concave(e)))
            .and_then(|f| generic_bound_check(g, &f));
        if let Some(r) = applicable("generic", generic)? {
            report.checks.extend(prefixed(r.report, "generic"));
        }
    }
    report.sort();
    Ok(report)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), String> {
    if args.format == Format::Dot {
        return Err("verify has no dot output".into());
    }
    let (factors, isogeny) = parse_factors(args)?;
    if factors.len() > 1 && isogeny == Isogeny::Adjoint {
        return Err("products are built simply connected".into());
    }
    let budget = Budget {
        elements: args.budget_elements,
        cosets: args.budget_cosets,
    };
    let g = if factors.len() == 1 {
        FiniteParahoricGroup::new(&factors, isogeny, args.h, budget)
    } else {
        build_product(&factors, args.h, budget)
    }
    .map_err(|e| e.to_string())?;
    eprintln!("built {} with {} cosets of B", g.instance(), g.expected_coset_count());
    let report = run_suites(&g)?;
    let out = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        _ => report.to_text(),
    };
    Ok((out, report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::Graphs(a) => cmd_graphs(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok((out, passed)) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.trim_end());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
