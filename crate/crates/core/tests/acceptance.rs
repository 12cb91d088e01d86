//! The eleven acceptance criteria, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use common::dn::d_n_shape_mismatches;
use common::figures::{figure_mismatches, known_divergences};
use parahoric::chevalley_signs::{build_sign_table_with_gauge, Gauge};
use parahoric::concave::{is_generic, length_plus_two, pseudo_borel_function, search_generic};
use parahoric::exec::Execution;
use parahoric::level_graphs::{
    build_graph, cycle_matrix, enumerate_cycles, level2_reduced_3cycle_constant, triangulate_cycle,
    verify_no_reduced_level3_3cycle, GraphError,
};
use parahoric::parahoric_group::{
    build_group, build_group_with_budget, verify_clbi, verify_overgroup_classification,
    verify_parahoric_axioms, Budget, FiniteParahoricGroup, GroupType, Isogeny,
};
use parahoric::report::Report;
use parahoric::root_system::{length_count_findings, DynkinType, Root, RootSystem};
use parahoric::steinberg::{generic_bound, generic_bound_check, verify_main_theorem};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, summary: impl Into<String>) -> Outcome {
    let summary = summary.into();
    if problems.is_empty() {
        Outcome {
            pass: true,
            detail: summary,
        }
    } else {
        let shown: Vec<&str> = problems.iter().take(4).map(String::as_str).collect();
        Outcome {
            pass: false,
            detail: format!("{} problem(s): {}", problems.len(), shown.join("; ")),
        }
    }
}

fn systems() -> Vec<RootSystem> {
    DynkinType::all_up_to(8)
        .into_iter()
        .map(|(k, n)| RootSystem::new(k, n).unwrap())
        .collect()
}

fn group(kind: GroupType, iso: Isogeny, p: u32, h: u32) -> FiniteParahoricGroup {
    build_group(kind, iso, p, h).unwrap()
}

fn failures_of(r: &Report) -> Vec<String> {
    r.failures()
        .iter()
        .map(|c| format!("{} {}: expected {}, computed {}", r.instance, c.name, c.expected, c.computed))
        .collect()
}

fn gamma_cardinalities() -> Outcome {
    let mut bad = Vec::new();
    let mut flagged = 0;
    for rs in systems() {
        let counts: Vec<usize> = (1..=rs.max_length())
            .map(|l| rs.negative_roots_of_length(l).len())
            .collect();
        for l in 2..=counts.len() {
            let (prev, cur) = (counts[l - 2], counts[l - 1]);
            if cur > prev || (l == 2 && cur >= prev) {
                bad.push(format!("{} l={l}: {cur} after {prev}", rs.label()));
            }
        }
        let findings = length_count_findings(&rs);
        match rs.components()[0].0 {
            DynkinType::A => {
                if findings.is_empty() && rs.rank() >= 2 {
                    bad.push(format!("{}: closed form not flagged", rs.label()));
                }
                flagged += usize::from(!findings.is_empty());
            }
            DynkinType::B | DynkinType::C | DynkinType::D if !findings.is_empty() => {
                bad.push(format!("{}: closed form mismatch {findings:?}", rs.label()));
            }
            _ => {}
        }
    }
    outcome(bad, format!("monotone; B/C/D closed forms exact; {flagged} type A systems flagged"))
}

fn dynkin_edges(rs: &RootSystem) -> usize {
    let c = rs.cartan();
    (0..rs.rank())
        .flat_map(|i| (i + 1..rs.rank()).map(move |j| (i, j)))
        .filter(|&(i, j)| c[i][j] != 0)
        .count()
}

fn graph_suite() -> Outcome {
    let mut bad = Vec::new();
    let mut graphs = 0;
    for rs in systems() {
        let kind = rs.components()[0].0;
        for l in 2..=rs.max_length() {
            let g = match build_graph(&rs, l) {
                Ok(g) => g,
                Err(e @ GraphError::DuplicateLabel { .. }) => {
                    bad.push(format!("{} l={l}: {e}", rs.label()));
                    continue;
                }
                Err(e) => panic!("{e}"),
            };
            graphs += 1;
            if !g.is_connected() {
                bad.push(format!("{} l={l}: disconnected", rs.label()));
            }
            if l == 2 {
                if !g.is_acyclic() {
                    bad.push(format!("{} l=2: has a cycle", rs.label()));
                }
                if g.vertices.len() != dynkin_edges(&rs) {
                    bad.push(format!("{} l=2: {} vertices", rs.label(), g.vertices.len()));
                }
            }
            let classical = matches!(kind, DynkinType::A | DynkinType::B | DynkinType::C);
            if classical && !g.is_acyclic() {
                bad.push(format!("{} l={l}: has a cycle", rs.label()));
            }
        }
    }
    outcome(bad, format!("{graphs} graphs connected with unique labels"))
}

fn golden_graphs() -> Outcome {
    let mut bad = figure_mismatches();
    bad.extend(d_n_shape_mismatches());
    let e8 = RootSystem::new(DynkinType::E, 8).unwrap();
    let cycles = |l| enumerate_cycles(&e8, &build_graph(&e8, l).unwrap()).unwrap();
    if !cycles(10).iter().any(|c| c.len() == 5 && c.reduced) {
        bad.push("E8 l=10: no reduced 5-cycle".into());
    }
    if cycles(13).iter().any(|c| c.len() == 5) {
        bad.push("E8 l=13: has a 5-cycle".into());
    }
    outcome(
        bad,
        format!(
            "figures reproduced; {} printed misprints reported as findings",
            known_divergences().len()
        ),
    )
}

fn constants_under_gauges(rs: &RootSystem, l: usize, len: usize) -> Result<Vec<u64>, String> {
    let g = build_graph(rs, l).map_err(|e| e.to_string())?;
    let c = enumerate_cycles(rs, &g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|c| c.len() == len && c.reduced)
        .ok_or(format!("{} l={l}: no reduced {len}-cycle", rs.label()))?;
    Gauge::family(rs)
        .iter()
        .map(|gauge| {
            let t = build_sign_table_with_gauge(rs, gauge).map_err(|e| e.to_string())?;
            cycle_matrix(&c, &t)
                .map(|m| m.det_constant)
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn determinant_constants() -> Outcome {
    let mut bad = Vec::new();
    let mut level2 = 0;
    // Doubly laced level-2 triangles carry a multiplicity 2 entry; F4 is checked below.
    for rs in systems().into_iter().filter(RootSystem::is_simply_laced) {
        for gauge in Gauge::family(&rs) {
            let t = build_sign_table_with_gauge(&rs, &gauge).unwrap();
            match level2_reduced_3cycle_constant(&t) {
                Ok(2) => level2 += 1,
                Ok(v) => bad.push(format!("{}: level-2 triangle constant {v}", rs.label())),
                Err(GraphError::NoLevelTwoTriangle(_)) => {}
                Err(e) => bad.push(format!("{}: {e}", rs.label())),
            }
        }
    }
    let f4 = RootSystem::new(DynkinType::F, 4).unwrap();
    let e8 = RootSystem::new(DynkinType::E, 8).unwrap();
    for (rs, l, len, want) in [(&f4, 4, 3, 3), (&e8, 10, 5, 3), (&e8, 6, 7, 5)] {
        match constants_under_gauges(rs, l, len) {
            Ok(vs) if vs.len() >= 3 && vs.iter().all(|&v| v == want) => {}
            Ok(vs) => bad.push(format!("{} l={l} {len}-cycle: {vs:?}", rs.label())),
            Err(e) => bad.push(e),
        }
    }
    outcome(
        bad,
        format!("simply laced level-2 triangles give 2 in {level2} (system, gauge) pairs; F4 3, 5-cycle 3, 7-cycle 5"),
    )
}

fn triangulation() -> Outcome {
    let mut bad = Vec::new();
    let mut cycles_seen = 0;
    for rs in systems() {
        for l in 2..=rs.max_length() {
            let g = build_graph(&rs, l).unwrap();
            for c in enumerate_cycles(&rs, &g).unwrap() {
                cycles_seen += 1;
                match triangulate_cycle(&rs, &g, &c) {
                    Some(t) if t.len() == c.len() - 2 => {}
                    Some(t) => bad.push(format!("{} l={l}: {} triangles for {}", rs.label(), t.len(), c.len())),
                    None => bad.push(format!("{} l={l}: {}-cycle does not triangulate", rs.label(), c.len())),
                }
            }
        }
        let r = verify_no_reduced_level3_3cycle(&rs).unwrap();
        if !r.passed() {
            bad.push(format!("{}: reduced 3-cycle of level >= 3", rs.label()));
        }
    }
    outcome(bad, format!("{cycles_seen} cycles triangulated"))
}

fn genericity() -> Outcome {
    let mut bad = Vec::new();
    let a2 = RootSystem::new(DynkinType::A, 2).unwrap();
    let g2 = RootSystem::new(DynkinType::G, 2).unwrap();
    if let Some(f) = search_generic(&a2, 3, Execution::default()) {
        bad.push(format!("A2 h=3: found {}", f.to_text(&a2)));
    }
    for (rs, h) in [(&a2, 4), (&g2, 7)] {
        if search_generic(rs, h, Execution::default()).is_none() {
            bad.push(format!("{} h={h}: none found", rs.label()));
        }
        match length_plus_two(rs, h) {
            Ok(f) if is_generic(rs, &f) => {}
            _ => bad.push(format!("{} h={h}: length + 2 is not generic", rs.label())),
        }
    }
    outcome(bad, "none for A2 h=3; A2 h=4 and G2 h=7 exist; length + 2 validates")
}

fn parahoric_axioms() -> Outcome {
    let mut bad = Vec::new();
    for (kind, p, h) in [
        (GroupType::A1, 3, 3),
        (GroupType::A1, 5, 2),
        (GroupType::A2, 5, 2),
        (GroupType::C2, 3, 2),
    ] {
        bad.extend(failures_of(&verify_parahoric_axioms(&group(kind, Isogeny::SimplyConnected, p, h))));
    }
    outcome(bad, "4 instances")
}

fn subgroup_interval() -> Outcome {
    let mut bad = Vec::new();
    for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
        let r = verify_overgroup_classification(&group(GroupType::A1, iso, 3, 2)).unwrap();
        bad.extend(failures_of(&r));
    }
    outcome(bad, "intervals match; every P_f self-normalizing")
}

fn steinberg_arithmetic() -> Outcome {
    let mut bad = Vec::new();
    let mut values = Vec::new();
    for (kind, iso, p, st) in [
        (GroupType::A1, Isogeny::SimplyConnected, 3, 2),
        (GroupType::A1, Isogeny::Adjoint, 3, 1),
        (GroupType::A2, Isogeny::Adjoint, 5, 1),
        (GroupType::A1, Isogeny::SimplyConnected, 5, 2),
    ] {
        let g = group(kind, iso, p, 2);
        let r = verify_main_theorem(&g).unwrap();
        bad.extend(failures_of(&r.report));
        if r.st_st != st {
            bad.push(format!("{}: (st_B, st_B) = {}, want {st}", g.instance(), r.st_st));
        }
        if (kind, iso, p) == (GroupType::A1, Isogeny::SimplyConnected, 3) {
            let get = |n: &str| r.report.get(n).map(|c| c.computed.clone()).unwrap_or_default();
            for (name, want) in [("index_g_b", "12"), ("st_b_dim", "8"), ("interval_dimension_sum", "12")] {
                if get(name) != want {
                    bad.push(format!("{}: {name} = {}, want {want}", g.instance(), get(name)));
                }
            }
        }
        values.push(format!("{} {}", g.instance(), r.st_st));
    }
    outcome(bad, format!("(st_B, st_B): {}", values.join(", ")))
}

fn clbi_instances() -> Outcome {
    let mut bad = Vec::new();
    for (kind, p) in [(GroupType::A1, 3), (GroupType::A2, 5), (GroupType::C2, 3)] {
        let r = verify_clbi(&group(kind, Isogeny::SimplyConnected, p, 2)).unwrap();
        bad.extend(failures_of(&r));
    }
    outcome(bad, "3 instances")
}

fn generic_bound_a2() -> Outcome {
    let budget = Budget {
        elements: 1_000_000,
        cosets: 2_000_000,
    };
    let g = build_group_with_budget(GroupType::A2, Isogeny::SimplyConnected, 3, 4, budget).unwrap();
    let rs = g.root_system();
    let f = length_plus_two(rs, 4).unwrap();
    let mut bad = Vec::new();
    let want: Vec<i32> = rs
        .roots()
        .iter()
        .map(|r: &Root| if r.is_negative() { r.length() as i32 + 2 } else { 0 })
        .collect();
    if f.values() != want.as_slice() || f == pseudo_borel_function(rs, 4) {
        bad.push("unexpected witness".into());
    }
    let r = generic_bound_check(&g, &f).unwrap();
    bad.extend(failures_of(&r.report));
    if generic_bound(&g) != 2 {
        bad.push(format!("bound {}", generic_bound(&g)));
    }
    outcome(
        bad,
        format!(
            "(st_P, st_P) = {}, orbits {}, bound {}",
            r.st_st,
            r.orbit_count.unwrap_or(0),
            generic_bound(&g)
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("1 gamma cardinalities", gamma_cardinalities, 10),
        ("2 graph suite", graph_suite, 30),
        ("3 golden graphs", golden_graphs, 60),
        ("4 determinant constants", determinant_constants, 10),
        ("5 triangulation", triangulation, 60),
        ("6 genericity", genericity, 10),
        ("7 parahoric axioms", parahoric_axioms, 300),
        ("8 subgroup interval", subgroup_interval, 60),
        ("9 steinberg arithmetic", steinberg_arithmetic, 600),
        ("10 exterior double classes", clbi_instances, 900),
        ("11 generic bound", generic_bound_a2, 1800),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut o = run();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(limit) {
            o.pass = false;
            o.detail = format!("over the {limit} s limit; {}", o.detail);
        }
        failed += usize::from(!o.pass);
        println!(
            "{} criterion {name} ({:.1} s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            o.detail
        );
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
