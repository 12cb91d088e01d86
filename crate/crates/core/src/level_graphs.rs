//! Level graphs on the negative roots of a fixed length.
//!
//! The vertices of the graph at length `l` are the negative roots of length
//! `l`. Two vertices are joined when they share a root `b` of length `l - 1`
//! below them by a negative simple root; `b` labels the edge. Cycles are
//! classified as reduced (pairwise distinct labels) or not, and assigned a
//! level by repeatedly dropping repeated labels and descending to the cycle
//! of labels one length down.

use std::collections::{BTreeSet, HashMap};

use petgraph::algo::connected_components;
use petgraph::dot::{Config, Dot};
use petgraph::graph::UnGraph;
use serde::Serialize;
use thiserror::Error;

use crate::chevalley_signs::SignTable;
use crate::exec::Execution;
use crate::root_system::{Root, RootSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("length must be at least 2, got {0}")]
    LengthTooSmall(usize),
    #[error("edge ({a}, {b}) has several labels: {labels:?}")]
    DuplicateLabel { a: Root, b: Root, labels: Vec<Root> },
    #[error("cycle is not reduced")]
    NotReduced,
    #[error("cycle has {rows} label rows but {cols} difference columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant is not a single multiple of the vertex product: {0}")]
    NotMonomial(String),
    #[error("no reduced 3-cycle of level 2 in {0}")]
    NoLevelTwoTriangle(String),
    #[error("reduced 3-cycles of level 2 give different constants: {0:?}")]
    InconsistentConstants(Vec<u64>),
    #[error("cycle data is inconsistent: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: Root,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelGraph {
    pub l: usize,
    pub vertices: Vec<Root>,
    pub edges: Vec<Edge>,
    pub isolated_betas: Vec<Root>,
}

/// The unique root of length `len(a) - 1` below both `a` and `b` by negative
/// simple roots, when it exists.
fn shared_labels(rs: &RootSystem, a: &Root, b: &Root) -> Vec<Root> {
    rs.simple_decrements(a)
        .into_iter()
        .map(|d| *a - d)
        .filter(|g| rs.is_negative_simple(&(*b - *g)) && !g.is_zero())
        .collect()
}

pub fn edge_label(rs: &RootSystem, a: &Root, b: &Root) -> Option<Root> {
    let v = shared_labels(rs, a, b);
    (v.len() == 1).then(|| v[0])
}

pub fn build_graph(rs: &RootSystem, l: usize) -> Result<LevelGraph, GraphError> {
    if l < 2 {
        return Err(GraphError::LengthTooSmall(l));
    }
    let vertices = rs.negative_roots_of_length(l);
    let lower = rs.negative_roots_of_length(l - 1);
    let mut edges = Vec::new();
    let mut used = BTreeSet::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let labels = shared_labels(rs, &vertices[i], &vertices[j]);
            match labels.len() {
                0 => {}
                1 => {
                    used.insert(labels[0]);
                    edges.push(Edge {
                        a: i,
                        b: j,
                        label: labels[0],
                    });
                }
                _ => {
                    return Err(GraphError::DuplicateLabel {
                        a: vertices[i],
                        b: vertices[j],
                        labels,
                    })
                }
            }
        }
    }
    let isolated_betas = lower.into_iter().filter(|b| !used.contains(b)).collect();
    Ok(LevelGraph {
        l,
        vertices,
        edges,
        isolated_betas,
    })
}

/// Graphs for every length from 2 to the largest negative root length.
pub fn all_graphs(rs: &RootSystem, exec: Execution) -> Result<Vec<LevelGraph>, GraphError> {
    let top = rs.max_length();
    exec.map_range(top.saturating_sub(1), |k| build_graph(rs, k + 2))
        .into_iter()
        .collect()
}

impl LevelGraph {
    pub fn vertex_index(&self, r: &Root) -> Option<usize> {
        self.vertices.iter().position(|v| v == r)
    }

    pub fn label(&self, a: usize, b: usize) -> Option<Root> {
        self.edges
            .iter()
            .find(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
            .map(|e| e.label)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for v in &mut adj {
            v.sort_unstable();
        }
        adj
    }

    fn petgraph(&self) -> UnGraph<String, String> {
        let mut g = UnGraph::new_undirected();
        let nodes: Vec<_> = self.vertices.iter().map(|v| g.add_node(v.to_string())).collect();
        for e in &self.edges {
            g.add_edge(nodes[e.a], nodes[e.b], e.label.to_string());
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || connected_components(&self.petgraph()) == 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.vertices.is_empty()
            || (self.is_connected() && self.edges.len() + 1 == self.vertices.len())
    }

    pub fn to_dot(&self) -> String {
        let body = format!("{}", Dot::with_config(&self.petgraph(), &[Config::GraphContentOnly]));
        let mut out = format!("graph level_{} {{\n{body}", self.l);
        for b in &self.isolated_betas {
            out.push_str(&format!("    \"({b})\" [shape=plaintext]\n"));
        }
        out.push_str("}\n");
        out
    }

    /// One edge per line as `a b label`, then isolated labels in parentheses.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!(
                "{} {} {}\n",
                self.vertices[e.a], self.vertices[e.b], e.label
            ));
        }
        for b in &self.isolated_betas {
            out.push_str(&format!("({b})\n"));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<Root>,
    /// `betas[i]` labels the edge between `vertices[i - 1]` and `vertices[i]`.
    pub betas: Vec<Root>,
    pub reduced: bool,
    pub level: Option<usize>,
    pub deltas: Vec<Root>,
    pub delta_primes: Vec<Root>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn all_distinct(xs: &[Root]) -> bool {
    let s: BTreeSet<_> = xs.iter().collect();
    s.len() == xs.len()
}

fn labels_around(rs: &RootSystem, vs: &[Root]) -> Result<Vec<Root>, GraphError> {
    let r = vs.len();
    (0..r)
        .map(|i| {
            let prev = vs[(i + r - 1) % r];
            edge_label(rs, &prev, &vs[i]).ok_or_else(|| {
                GraphError::Inconsistent(format!("no edge between {prev} and {}", vs[i]))
            })
        })
        .collect()
}

/// Builds the witness for a cyclic sequence of vertices of one graph.
pub fn witness(rs: &RootSystem, vertices: Vec<Root>) -> Result<CycleWitness, GraphError> {
    let betas = labels_around(rs, &vertices)?;
    let r = vertices.len();
    let deltas = (0..r).map(|i| vertices[i] - betas[i]).collect();
    let delta_primes = (0..r).map(|i| vertices[i] - betas[(i + 1) % r]).collect();
    let reduced = all_distinct(&betas);
    let level = cycle_level(rs, &vertices)?;
    Ok(CycleWitness {
        vertices,
        betas,
        reduced,
        level,
        deltas,
        delta_primes,
    })
}

/// Level by iterated reduction; `None` if the labels never become equal
/// before length 1.
pub fn cycle_level(rs: &RootSystem, vertices: &[Root]) -> Result<Option<usize>, GraphError> {
    let top = vertices[0].length();
    let mut vs = vertices.to_vec();
    for _ in 0..=top * (vertices.len() + 1) {
        let len = vs[0].length();
        let bs = labels_around(rs, &vs)?;
        if bs.iter().all(|b| *b == bs[0]) {
            return Ok(Some(top - (len - 1)));
        }
        let r = vs.len();
        if let Some(i) = (0..r).find(|&i| bs[i] == bs[(i + 1) % r]) {
            let prev = vs[(i + r - 1) % r];
            let next = vs[(i + 1) % r];
            if edge_label(rs, &prev, &next) != Some(bs[i]) {
                return Err(GraphError::Inconsistent(format!(
                    "dropping {} leaves no edge {prev} {next}",
                    vs[i]
                )));
            }
            vs.remove(i);
            if vs.len() < 3 {
                return Err(GraphError::Inconsistent("reduction below a triangle".into()));
            }
            continue;
        }
        if len <= 2 {
            return Ok(None);
        }
        for i in 0..r {
            let gamma = vs[i] - (vs[i] - bs[i]) - (vs[i] - bs[(i + 1) % r]);
            if !rs.contains(&gamma) || edge_label(rs, &bs[i], &bs[(i + 1) % r]) != Some(gamma) {
                return Err(GraphError::Inconsistent(format!(
                    "descent label {gamma} is not the edge label between {} and {}",
                    bs[i],
                    bs[(i + 1) % r]
                )));
            }
        }
        vs = bs;
    }
    Err(GraphError::Inconsistent("iteration cap reached".into()))
}

/// Simple cycles of length at least 3, one per rotation/reflection class,
/// starting at their smallest vertex.
pub fn cycle_vertex_lists(g: &LevelGraph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let n = g.vertices.len();
    let mut out = Vec::new();
    fn dfs(
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        seen: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > start && !seen[w] {
                seen[w] = true;
                path.push(w);
                dfs(adj, start, path, seen, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut seen = vec![false; n];
        seen[s] = true;
        dfs(&adj, s, &mut vec![s], &mut seen, &mut out);
    }
    out
}

pub fn enumerate_cycles(rs: &RootSystem, g: &LevelGraph) -> Result<Vec<CycleWitness>, GraphError> {
    cycle_vertex_lists(g)
        .into_iter()
        .map(|c| witness(rs, c.into_iter().map(|i| g.vertices[i]).collect()))
        .collect()
}

fn triangle_reduced(rs: &RootSystem, t: [Root; 3]) -> bool {
    let bs = [
        edge_label(rs, &t[0], &t[1]),
        edge_label(rs, &t[1], &t[2]),
        edge_label(rs, &t[2], &t[0]),
    ];
    bs[0] != bs[1] && bs[1] != bs[2] && bs[0] != bs[2]
}

fn triangulations(
    adjacent: &dyn Fn(usize, usize) -> bool,
    poly: &[usize],
    memo: &mut HashMap<Vec<usize>, Vec<Vec<[usize; 3]>>>,
) -> Vec<Vec<[usize; 3]>> {
    if poly.len() < 3 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(poly) {
        return v.clone();
    }
    let (a, b) = (poly[0], poly[poly.len() - 1]);
    let mut out = Vec::new();
    for m in 1..poly.len() - 1 {
        let c = poly[m];
        let side_ok = |x: usize, y: usize, gap: usize| gap == 1 || adjacent(x, y);
        if !side_ok(a, c, m) || !side_ok(c, b, poly.len() - 1 - m) {
            continue;
        }
        let left = triangulations(adjacent, &poly[..=m], memo);
        let right = triangulations(adjacent, &poly[m..], memo);
        for l in &left {
            for r in &right {
                let mut t = l.clone();
                t.extend_from_slice(r);
                t.push([a, c, b]);
                out.push(t);
            }
        }
    }
    memo.insert(poly.to_vec(), out.clone());
    out
}

fn alternates(rs: &RootSystem, tris: &[[Root; 3]]) -> bool {
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            let shared = tris[i].iter().filter(|v| tris[j].contains(v)).count();
            if shared == 2 && triangle_reduced(rs, tris[i]) == triangle_reduced(rs, tris[j]) {
                return false;
            }
        }
    }
    true
}

/// Splits a cycle into `r - 2` triangles using graph chords, preferring one in
/// which triangles sharing a chord alternate between reduced and not.
/// Returns `None` when no chord triangulation alternates.
pub fn triangulate_cycle(
    rs: &RootSystem,
    g: &LevelGraph,
    c: &CycleWitness,
) -> Option<Vec<[Root; 3]>> {
    if c.len() == 3 {
        return Some(vec![[c.vertices[0], c.vertices[1], c.vertices[2]]]);
    }
    let idx: Vec<usize> = c
        .vertices
        .iter()
        .map(|v| g.vertex_index(v).expect("cycle vertex in graph"))
        .collect();
    let adjacent = |x: usize, y: usize| g.label(x, y).is_some();
    let mut memo = HashMap::new();
    triangulations(&adjacent, &idx, &mut memo)
        .into_iter()
        .map(|t| {
            t.into_iter()
                .map(|[x, y, z]| [g.vertices[x], g.vertices[y], g.vertices[z]])
                .collect::<Vec<_>>()
        })
        .find(|t| alternates(rs, t))
}

/// Pairs of triangles of `g` sharing an edge that are both reduced or both
/// nonreduced.
pub fn alternation_failures(rs: &RootSystem, g: &LevelGraph) -> Vec<([Root; 3], [Root; 3])> {
    let tris: Vec<[Root; 3]> = cycle_vertex_lists(g)
        .into_iter()
        .filter(|c| c.len() == 3)
        .map(|c| [g.vertices[c[0]], g.vertices[c[1]], g.vertices[c[2]]])
        .collect();
    let mut out = Vec::new();
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            let shared = tris[i].iter().filter(|v| tris[j].contains(v)).count();
            if shared == 2 && triangle_reduced(rs, tris[i]) == triangle_reduced(rs, tris[j]) {
                out.push((tris[i], tris[j]));
            }
        }
    }
    out
}

/// A formal entry: sum of `coefficient * x_vertex`.
pub type Entry = Vec<(i64, usize)>;

#[derive(Clone, Debug, Serialize)]
pub struct SignMatrix {
    pub dimension: usize,
    pub rows: Vec<Root>,
    pub columns: Vec<Root>,
    pub entries: Vec<Vec<Entry>>,
    pub det_constant: u64,
}

/// Matrix with one row per label and one column per simple difference; the
/// entry at `(b, d)` sums `N_{a,-b} x_a` over cycle vertices `a` with
/// `a - b = d`.
pub fn cycle_matrix(c: &CycleWitness, signs: &SignTable<'_>) -> Result<SignMatrix, GraphError> {
    if !c.reduced {
        return Err(GraphError::NotReduced);
    }
    let rs = signs.root_system();
    let rows = c.betas.clone();
    let mut columns: Vec<Root> = Vec::new();
    for (i, a) in c.vertices.iter().enumerate() {
        for b in &rows {
            let d = *a - *b;
            if rs.is_negative_simple(&d) && !columns.contains(&d) {
                columns.push(d);
            }
            let _ = i;
        }
    }
    columns.sort();
    if columns.len() != rows.len() {
        return Err(GraphError::NotSquare {
            rows: rows.len(),
            cols: columns.len(),
        });
    }
    let r = rows.len();
    let mut entries = vec![vec![Entry::new(); r]; r];
    for (bi, b) in rows.iter().enumerate() {
        for (ai, a) in c.vertices.iter().enumerate() {
            let d = *a - *b;
            if let Some(ci) = columns.iter().position(|x| *x == d) {
                let n = signs
                    .structure_constant(a, &-*b)
                    .ok_or_else(|| GraphError::Inconsistent(format!("{a} + (-{b}) not a root")))?;
                entries[bi][ci].push((n as i64, ai));
            }
        }
    }
    let det_constant = monomial_determinant(&entries)?;
    Ok(SignMatrix {
        dimension: r,
        rows,
        columns,
        entries,
        det_constant,
    })
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == p.len() {
            out.push((p.clone(), sign));
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, if i == k { sign } else { -sign }, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, 1, &mut out);
    out
}

/// Expands the determinant as a polynomial in the vertex variables and returns
/// `|c|` when it equals `c` times the product of all variables.
fn monomial_determinant(entries: &[Vec<Entry>]) -> Result<u64, GraphError> {
    let r = entries.len();
    let mut poly: HashMap<Vec<u8>, i64> = HashMap::new();
    for (perm, sign) in permutations(r) {
        let mut terms: Vec<(i64, Vec<u8>)> = vec![(sign, vec![0; r])];
        for (row, &col) in perm.iter().enumerate() {
            let e = &entries[row][col];
            if e.is_empty() {
                terms.clear();
                break;
            }
            let mut next = Vec::with_capacity(terms.len() * e.len());
            for (c, m) in &terms {
                for &(k, v) in e {
                    let mut m2 = m.clone();
                    m2[v] += 1;
                    next.push((c * k, m2));
                }
            }
            terms = next;
        }
        for (c, m) in terms {
            *poly.entry(m).or_default() += c;
        }
    }
    poly.retain(|_, c| *c != 0);
    let full = vec![1u8; r];
    let leftovers: Vec<_> = poly.keys().filter(|m| **m != full).cloned().collect();
    if !leftovers.is_empty() {
        return Err(GraphError::NotMonomial(format!("{} extra monomials", leftovers.len())));
    }
    Ok(poly.get(&full).copied().unwrap_or(0).unsigned_abs())
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleConstant {
    pub l: usize,
    pub cycle: CycleWitness,
    pub det_constant: u64,
}

/// Determinant constants of every reduced 3-cycle of level 2.
pub fn reduced_triangle_constants(
    signs: &SignTable<'_>,
) -> Result<Vec<TriangleConstant>, GraphError> {
    let rs = signs.root_system();
    let mut out = Vec::new();
    for l in 2..=rs.max_length() {
        let g = build_graph(rs, l)?;
        for c in enumerate_cycles(rs, &g)? {
            if c.len() == 3 && c.reduced && c.level == Some(2) {
                let m = cycle_matrix(&c, signs)?;
                out.push(TriangleConstant {
                    l,
                    cycle: c,
                    det_constant: m.det_constant,
                });
            }
        }
    }
    Ok(out)
}

pub fn level2_reduced_3cycle_constant(signs: &SignTable<'_>) -> Result<u64, GraphError> {
    let all = reduced_triangle_constants(signs)?;
    let mut values: Vec<u64> = all.iter().map(|t| t.det_constant).collect();
    values.sort_unstable();
    values.dedup();
    match values.as_slice() {
        [] => Err(GraphError::NoLevelTwoTriangle(signs.root_system().label())),
        [v] => Ok(*v),
        _ => Err(GraphError::InconsistentConstants(values)),
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TriangleReport {
    pub graphs: usize,
    pub triangles: usize,
    pub offending: Vec<CycleWitness>,
}

impl TriangleReport {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Searches every graph for a reduced 3-cycle of level at least 3.
pub fn verify_no_reduced_level3_3cycle(rs: &RootSystem) -> Result<TriangleReport, GraphError> {
    let mut rep = TriangleReport::default();
    for l in 2..=rs.max_length() {
        let g = build_graph(rs, l)?;
        rep.graphs += 1;
        for c in enumerate_cycles(rs, &g)? {
            if c.len() != 3 {
                continue;
            }
            rep.triangles += 1;
            if c.reduced && c.level.is_none_or(|v| v >= 3) {
                rep.offending.push(c);
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveVertexFinding {
    pub first: Vec<Root>,
    pub second: Vec<Root>,
    pub first_reduced: bool,
    pub second_reduced: bool,
}

/// Pairs of triangles meeting in exactly one vertex whose five vertices carry
/// no 5-cycle.
pub fn five_vertex_failures(rs: &RootSystem, g: &LevelGraph) -> Vec<FiveVertexFinding> {
    let cycles = cycle_vertex_lists(g);
    let tris: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 3).collect();
    let fives: Vec<BTreeSet<usize>> = cycles
        .iter()
        .filter(|c| c.len() == 5)
        .map(|c| c.iter().copied().collect())
        .collect();
    let roots = |t: &Vec<usize>| [g.vertices[t[0]], g.vertices[t[1]], g.vertices[t[2]]];
    let mut out = Vec::new();
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            let shared = tris[i].iter().filter(|v| tris[j].contains(v)).count();
            if shared != 1 {
                continue;
            }
            let union: BTreeSet<usize> = tris[i].iter().chain(tris[j].iter()).copied().collect();
            if !fives.contains(&union) {
                let (x, y) = (roots(tris[i]), roots(tris[j]));
                out.push(FiveVertexFinding {
                    first: x.to_vec(),
                    second: y.to_vec(),
                    first_reduced: triangle_reduced(rs, x),
                    second_reduced: triangle_reduced(rs, y),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley_signs::build_sign_table;
    use crate::root_system::DynkinType;

    fn neg(s: &str) -> Root {
        Root::from_compact(s, true).unwrap()
    }

    #[test]
    fn f4_length_three_triangle() {
        let rs = RootSystem::new(DynkinType::F, 4).unwrap();
        let g = build_graph(&rs, 3).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edges.len(), 3);
        assert!(g.edges.iter().all(|e| e.label == neg("0110")));
        let mut iso = g.isolated_betas.clone();
        iso.sort();
        let mut want = vec![neg("1100"), neg("0011")];
        want.sort();
        assert_eq!(iso, want);
        let cycles = enumerate_cycles(&rs, &g).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(!cycles[0].reduced);
        assert_eq!(cycles[0].level, Some(1));
        let t = build_sign_table(&rs).unwrap();
        assert_eq!(cycle_matrix(&cycles[0], &t).unwrap_err(), GraphError::NotReduced);
    }

    #[test]
    fn f4_length_four_constant() {
        let rs = RootSystem::new(DynkinType::F, 4).unwrap();
        let g = build_graph(&rs, 4).unwrap();
        let c = &enumerate_cycles(&rs, &g).unwrap()[0];
        assert!(c.reduced);
        assert_eq!(c.level, Some(2));
        let t = build_sign_table(&rs).unwrap();
        assert_eq!(cycle_matrix(c, &t).unwrap().det_constant, 3);
    }

    #[test]
    fn type_a_graphs_are_paths() {
        let rs = RootSystem::new(DynkinType::A, 5).unwrap();
        for g in all_graphs(&rs, Execution::Sequential).unwrap() {
            let adj = g.adjacency();
            assert!(g.is_acyclic());
            assert!(adj.iter().all(|v| v.len() <= 2));
        }
    }

    #[test]
    fn length_one_rejected() {
        let rs = RootSystem::new(DynkinType::A, 2).unwrap();
        assert_eq!(build_graph(&rs, 1).unwrap_err(), GraphError::LengthTooSmall(1));
    }

    #[test]
    fn cycle_dedup_counts_square_once() {
        let g = LevelGraph {
            l: 2,
            vertices: vec![neg("1"), neg("1"), neg("1"), neg("1")],
            edges: vec![
                Edge { a: 0, b: 1, label: neg("1") },
                Edge { a: 1, b: 2, label: neg("1") },
                Edge { a: 2, b: 3, label: neg("1") },
                Edge { a: 0, b: 3, label: neg("1") },
                Edge { a: 0, b: 2, label: neg("1") },
            ],
            isolated_betas: vec![],
        };
        let cycles = cycle_vertex_lists(&g);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 1);
    }

    #[test]
    fn determinant_expansion() {
        let e = vec![
            vec![vec![(1, 0)], vec![(1, 1)]],
            vec![vec![(-1, 0)], vec![(1, 1)]],
        ];
        assert_eq!(monomial_determinant(&e).unwrap(), 2);
        let bad = vec![vec![vec![(1, 0)], vec![(1, 0)]], vec![vec![(1, 1)], vec![(1, 0)]]];
        assert!(monomial_determinant(&bad).is_err());
    }

    #[test]
    fn dot_export_mentions_labels() {
        let rs = RootSystem::new(DynkinType::F, 4).unwrap();
        let g = build_graph(&rs, 3).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph level_3 {"));
        assert!(dot.contains("-0110"));
        assert_eq!(g.to_edge_list().lines().count(), 5);
    }
}
