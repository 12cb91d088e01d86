//! The generic shape of the graphs of type D.

use parahoric::level_graphs::{build_graph, enumerate_cycles};
use parahoric::root_system::{DynkinType, RootSystem};

fn eps(dim: usize, terms: &[(i32, usize)]) -> Vec<i32> {
    let mut v = vec![0; dim];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    v
}

fn sorted(mut v: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    v.sort();
    v
}

/// Vertex sets, the unique square and the unique reduced triangle of
/// `D_n`, `4 <= n <= 8`, for `3 <= l <= n - 2`; one reduced cycle at
/// `l = n - 1` and none above.
pub fn d_n_shape_mismatches() -> Vec<String> {
    let mut out = Vec::new();
    for n in 4..=8 {
        let rs = RootSystem::new(DynkinType::D, n).unwrap();
        let to_eps = |vs: &[parahoric::root_system::Root]| {
            sorted(vs.iter().map(|r| rs.to_epsilon(r).unwrap()).collect())
        };
        for l in 3..=n - 2 {
            let g = build_graph(&rs, l).unwrap();
            let mut want: Vec<Vec<i32>> = (1..=n - l).map(|i| eps(n, &[(1, l + i), (-1, i)])).collect();
            for i in 0..=(l - 1) / 2 {
                want.push(eps(n, &[(-1, n - l + i), (-1, n - i)]));
            }
            if to_eps(&g.vertices) != sorted(want) {
                out.push(format!("D{n} l={l}: vertices"));
            }
            let cycles = enumerate_cycles(&rs, &g).unwrap();
            let squares: Vec<_> = cycles.iter().filter(|c| c.len() == 4).collect();
            let square = sorted(vec![
                eps(n, &[(1, n - 1), (-1, n - l - 1)]),
                eps(n, &[(1, n), (-1, n - l)]),
                eps(n, &[(-1, n - l + 1), (-1, n - 1)]),
                eps(n, &[(-1, n - l), (-1, n)]),
            ]);
            if squares.len() != 1 || to_eps(&squares[0].vertices) != square {
                out.push(format!("D{n} l={l}: square"));
            }
            if cycles.iter().any(|c| c.len() > 4) {
                out.push(format!("D{n} l={l}: long cycle"));
            }
            let reduced: Vec<_> = cycles.iter().filter(|c| c.len() == 3 && c.reduced).collect();
            let tri = sorted(vec![
                eps(n, &[(1, n), (-1, n - l)]),
                eps(n, &[(-1, n - l + 1), (-1, n - 1)]),
                eps(n, &[(-1, n - l), (-1, n)]),
            ]);
            if reduced.len() != 1 || to_eps(&reduced[0].vertices) != tri {
                out.push(format!("D{n} l={l}: reduced triangle"));
            }
        }
        let top = enumerate_cycles(&rs, &build_graph(&rs, n - 1).unwrap()).unwrap();
        if top.len() != 1 || !top[0].reduced {
            out.push(format!("D{n} l={}: top cycle", n - 1));
        }
        for l in n..=rs.max_length() {
            if !enumerate_cycles(&rs, &build_graph(&rs, l).unwrap()).unwrap().is_empty() {
                out.push(format!("D{n} l={l}: unexpected cycle"));
            }
        }
    }
    out
}
