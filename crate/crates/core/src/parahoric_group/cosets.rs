//! The coset space `G/B`, its quotients `G/K` for `K >= B`, and double
//! cosets `L \ G / L'` as union-find components.

use rustc_hash::FxHashMap;

use super::matrix::{coset_key, Element};
use super::{FiniteParahoricGroup, GroupError, Subgroup};
use crate::exec::Execution;

/// Points of `G/B`, each with a representative element.
#[derive(Debug)]
pub struct CosetSpace {
    reps: Vec<Element>,
    index: FxHashMap<u128, u32>,
}

impl CosetSpace {
    /// Breadth-first search from the base point, level by level.
    pub fn build(g: &FiniteParahoricGroup, exec: Execution) -> Self {
        let gens = g.generators();
        let id = g.identity();
        let mut reps = vec![id];
        let mut index = FxHashMap::default();
        index.insert(coset_key(g.blocks(), &id), 0u32);
        let mut start = 0;
        while start < reps.len() {
            let end = reps.len();
            let frontier = &reps[start..end];
            let found: Vec<Vec<(u128, Element)>> = exec.map(frontier, |x| {
                gens.iter()
                    .map(|s| {
                        let y = g.mul(s, x);
                        (coset_key(g.blocks(), &y), y)
                    })
                    .collect()
            });
            for (k, y) in found.into_iter().flatten() {
                if let std::collections::hash_map::Entry::Vacant(v) = index.entry(k) {
                    v.insert(reps.len() as u32);
                    reps.push(y);
                }
            }
            start = end;
        }
        CosetSpace { reps, index }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &Element {
        &self.reps[i]
    }

    /// The point `x B`.
    pub fn locate(&self, g: &FiniteParahoricGroup, x: &Element) -> usize {
        self.index[&coset_key(g.blocks(), x)] as usize
    }

    /// Orbit of the base point under the group generated by `gens`, each
    /// point with a representative inside that group.
    pub fn orbit(&self, g: &FiniteParahoricGroup, gens: &[Element]) -> Vec<(usize, Element)> {
        let id = g.identity();
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut out = vec![(0usize, id)];
        let mut k = 0;
        while k < out.len() {
            let x = out[k].1;
            k += 1;
            for s in gens {
                let y = g.mul(s, &x);
                let q = self.locate(g, &y);
                if !seen[q] {
                    seen[q] = true;
                    out.push((q, y));
                }
            }
        }
        out
    }
}

/// Classes of `G/B` under right multiplication by a subgroup `K >= B`,
/// that is, the points of `G/K`.
#[derive(Debug, Clone)]
pub struct Quotient {
    class_of: Vec<u32>,
    members: Vec<usize>,
}

impl Quotient {
    pub fn trivial(cs: &CosetSpace) -> Self {
        Quotient {
            class_of: (0..cs.len() as u32).collect(),
            members: (0..cs.len()).collect(),
        }
    }

    pub fn by_subgroup(
        g: &FiniteParahoricGroup,
        k: &Subgroup,
        exec: Execution,
    ) -> Result<Self, GroupError> {
        if !k.contains_borel {
            return Err(GroupError::NoBorel(k.label.clone()));
        }
        let cs = g.cosets();
        let base = Quotient::trivial(cs);
        let t = base.partition(g, &[], k, exec);
        Ok(base.refine(&t))
    }

    fn refine(&self, t: &DoubleCosetTable) -> Quotient {
        let class_of = self.class_of.iter().map(|&c| t.class_of[c as usize]).collect();
        let members = t.members.iter().map(|&c| self.members[c]).collect();
        Quotient { class_of, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn class_of_point(&self, point: usize) -> usize {
        self.class_of[point] as usize
    }

    pub fn class_of(&self, g: &FiniteParahoricGroup, x: &Element) -> usize {
        self.class_of[g.cosets().locate(g, x)] as usize
    }

    /// Representative element of a class.
    pub fn rep<'a>(&self, g: &'a FiniteParahoricGroup, c: usize) -> &'a Element {
        g.cosets().rep(self.members[c])
    }

    /// Representatives of `L / K` inside `L`, for `K <= L` the subgroup
    /// defining this quotient.
    pub fn fiber(&self, g: &FiniteParahoricGroup, l: &Subgroup) -> Vec<Element> {
        let id = g.identity();
        let mut seen = vec![false; self.len()];
        seen[self.class_of(g, &id)] = true;
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            k += 1;
            for s in &l.generators {
                let y = g.mul(s, &x);
                let c = self.class_of(g, &y);
                if !seen[c] {
                    seen[c] = true;
                    out.push(y);
                }
            }
        }
        out
    }

    /// `L \ G / R` on the classes of this quotient. `R` must contain the
    /// subgroup defining the quotient; `left` generates `L`.
    pub fn partition(
        &self,
        g: &FiniteParahoricGroup,
        left: &[Element],
        right: &Subgroup,
        exec: Execution,
    ) -> DoubleCosetTable {
        let fiber = self.fiber(g, right);
        let n = self.len();
        let edges: Vec<Vec<u32>> = exec.map_range(n, |c| {
            let x = self.rep(g, c);
            let mut out = Vec::with_capacity(left.len() + fiber.len());
            for s in left {
                out.push(self.class_of(g, &g.mul(s, x)) as u32);
            }
            for r in &fiber[1..] {
                out.push(self.class_of(g, &g.mul(x, r)) as u32);
            }
            out
        });
        let mut uf = UnionFind::new(n);
        for (c, targets) in edges.iter().enumerate() {
            for &d in targets {
                uf.union(c, d as usize);
            }
        }
        DoubleCosetTable::from_union_find(&mut uf, |c| *self.rep(g, c))
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[self.parent[x] as usize];
            self.parent[x] = up;
            x = up as usize;
        }
        x
    }

    /// Keeps the smaller index as root so that results are deterministic.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

/// Double cosets as a partition of the points of a quotient.
#[derive(Debug, Clone)]
pub struct DoubleCosetTable {
    /// Class index of each point.
    pub class_of: Vec<u32>,
    /// Smallest point of each class.
    pub members: Vec<usize>,
    /// Number of points in each class.
    pub sizes: Vec<usize>,
    pub representatives: Vec<Element>,
}

impl DoubleCosetTable {
    fn from_union_find(uf: &mut UnionFind, rep: impl Fn(usize) -> Element) -> Self {
        let n = uf.parent.len();
        let mut root_class = vec![u32::MAX; n];
        let mut class_of = vec![0u32; n];
        let mut members = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..n {
            let r = uf.find(x);
            if root_class[r] == u32::MAX {
                root_class[r] = members.len() as u32;
                members.push(x);
                sizes.push(0);
            }
            let c = root_class[r];
            class_of[x] = c;
            sizes[c as usize] += 1;
        }
        let representatives = members.iter().map(|&m| rep(m)).collect();
        DoubleCosetTable {
            class_of,
            members,
            sizes,
            representatives,
        }
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }
}

/// `L \ G / L'` for `L'` containing `B`, computed on `G/B`.
pub fn double_cosets(
    g: &FiniteParahoricGroup,
    l: &Subgroup,
    l2: &Subgroup,
) -> Result<DoubleCosetTable, GroupError> {
    double_cosets_with(g, l, l2, Execution::default())
}

pub fn double_cosets_with(
    g: &FiniteParahoricGroup,
    l: &Subgroup,
    l2: &Subgroup,
    exec: Execution,
) -> Result<DoubleCosetTable, GroupError> {
    if !l2.contains_borel {
        return Err(GroupError::NoBorel(l2.label.clone()));
    }
    let q = Quotient::trivial(g.cosets());
    Ok(q.partition(g, &l.generators, l2, exec))
}
