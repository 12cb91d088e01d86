//! Inner products of permutation characters and of small Steinberg
//! characters, all obtained by counting double cosets.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::concave::{enumerate_overgroups, is_generic, pseudo_borel_function, ConcaveFunction};
use crate::exec::Execution;
use crate::parahoric_group::{
    cosets::double_cosets_with, overgroup_family, require_clbi_hypotheses, Element,
    FiniteParahoricGroup, GroupError, Parabolic, Quotient, Subgroup,
};
use crate::report::{Check, Report};
use crate::root_system::Root;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteinbergError {
    #[error("regular characters need depth at least 2, got {0}")]
    DepthOne(u32),
    #[error("function is not generic: {0}")]
    NotGeneric(String),
    #[error("neither subgroup contains the pseudo-Borel subgroup")]
    NoBorel,
    #[error("function value {value} exceeds the depth {depth}")]
    BeyondDepth { value: i32, depth: u32 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Integer combination of permutation characters `1_L`.
#[derive(Clone, Debug)]
pub struct VirtualCharacter {
    pub terms: Vec<(i64, Subgroup)>,
}

impl VirtualCharacter {
    pub fn permutation(l: Subgroup) -> Self {
        VirtualCharacter {
            terms: vec![(1, l)],
        }
    }

    /// `st_L = sum over I of (-1)^{|I|} 1_{L_I}`.
    pub fn steinberg(family: &[Parabolic]) -> Self {
        VirtualCharacter {
            terms: family
                .iter()
                .map(|e| (sign(e.roots.len()), e.subgroup.clone()))
                .collect(),
        }
    }

    pub fn dim(&self, g: &FiniteParahoricGroup) -> Result<i64, SteinbergError> {
        let mut d = 0;
        for (c, l) in &self.terms {
            d += c * g.index_of_subgroup(l)? as i64;
        }
        Ok(d)
    }

    /// `(self, other)`, every term counted on `layer = G/K` where `K` lies in
    /// every subgroup of `other`.
    pub fn inner_on(
        &self,
        g: &FiniteParahoricGroup,
        other: &VirtualCharacter,
        layer: &Quotient,
        exec: Execution,
    ) -> i64 {
        let pairs: Vec<(usize, usize)> = (0..self.terms.len())
            .flat_map(|i| (0..other.terms.len()).map(move |j| (i, j)))
            .collect();
        let counts = exec.map(&pairs, |&(i, j)| {
            let (l, r) = (&self.terms[i].1, &other.terms[j].1);
            layer
                .partition(g, &l.generators, r, Execution::Sequential)
                .count() as i64
        });
        pairs
            .iter()
            .zip(counts)
            .map(|(&(i, j), n)| self.terms[i].0 * other.terms[j].0 * n)
            .sum()
    }

    /// `(self, other)` on `G/B`; `other` must consist of subgroups containing `B`.
    pub fn inner(
        &self,
        g: &FiniteParahoricGroup,
        other: &VirtualCharacter,
        exec: Execution,
    ) -> Result<i64, SteinbergError> {
        if other.terms.iter().any(|(_, l)| !l.contains_borel) {
            return Err(SteinbergError::NoBorel);
        }
        Ok(self.inner_on(g, other, &Quotient::trivial(g.cosets()), exec))
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(1_L, 1_L') = #(L' \ G / L)`.
pub fn perm_inner(
    g: &FiniteParahoricGroup,
    l: &Subgroup,
    l2: &Subgroup,
) -> Result<u64, SteinbergError> {
    let exec = Execution::default();
    let t = if l2.contains_borel {
        double_cosets_with(g, l, l2, exec)?
    } else if l.contains_borel {
        double_cosets_with(g, l2, l, exec)?
    } else {
        return Err(SteinbergError::NoBorel);
    };
    Ok(t.count() as u64)
}

/// `dim st_{P_f}` by inclusion-exclusion over the directions of `f`.
pub fn st_dim(g: &FiniteParahoricGroup, f: &ConcaveFunction) -> Result<i64, SteinbergError> {
    VirtualCharacter::steinberg(&overgroup_family(g, f)?).dim(g)
}

/// `(st_{P_f}, st_{P_f'})` as the double alternating sum of double coset counts.
pub fn st_inner(
    g: &FiniteParahoricGroup,
    f: &ConcaveFunction,
    f2: &ConcaveFunction,
    exec: Execution,
) -> Result<i64, SteinbergError> {
    let left = VirtualCharacter::steinberg(&overgroup_family(g, f)?);
    let fam2 = overgroup_family(g, f2)?;
    let base = &fam2[0].subgroup;
    if !base.contains_borel {
        return Err(SteinbergError::NoBorel);
    }
    let layer = if f2 == &pseudo_borel_function(g.root_system(), g.depth()) {
        Quotient::trivial(g.cosets())
    } else {
        Quotient::by_subgroup(g, base, exec)?
    };
    Ok(left.inner_on(g, &VirtualCharacter::steinberg(&fam2), &layer, exec))
}

/// `sum of dim st_{P_f'}` over the concave `f' <= f` zero on positive roots.
pub fn interval_dimension_sum(
    g: &FiniteParahoricGroup,
    f: &ConcaveFunction,
) -> Result<i64, SteinbergError> {
    let all = enumerate_overgroups(g.root_system(), g.depth(), Execution::default())
        .map_err(GroupError::from)?;
    let mut total = 0;
    for f2 in all.iter().filter(|f2| ConcaveFunction::le(f2, f)) {
        total += st_dim(g, f2)?;
    }
    Ok(total)
}

/// Torus points of `T(F_p)` with their action on `(F_p^x)^D` for a list of
/// negative roots `D`.
#[derive(Clone, Debug)]
struct TorusAction {
    p: u32,
    elements: Vec<Element>,
    /// `a(t) mod p` for each element and each root of `D`.
    weights: Vec<Vec<u32>>,
}

impl TorusAction {
    fn new(g: &FiniteParahoricGroup, roots: &[usize]) -> Result<Self, SteinbergError> {
        let elements = g.enumerate(&g.teichmuller_generators())?;
        let p = g.p();
        let weights = elements
            .iter()
            .map(|t| roots.iter().map(|&i| g.root_character(i, t) % p).collect())
            .collect();
        Ok(TorusAction {
            p,
            elements,
            weights,
        })
    }

    fn orbits(&self, free: usize, regular: usize) -> Vec<Vec<Vec<u32>>> {
        let p = self.p;
        let mut tuples: Vec<Vec<u32>> = vec![vec![]];
        for k in 0..regular + free {
            let lo = if k < regular { 1 } else { 0 };
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (lo..p).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out = Vec::new();
        for t in tuples {
            if seen.contains(&t) {
                continue;
            }
            let orbit: BTreeSet<Vec<u32>> = self
                .weights
                .iter()
                .map(|w| t.iter().zip(w).map(|(x, a)| x * a % p).collect())
                .collect();
            seen.extend(orbit.iter().cloned());
            out.push(orbit.into_iter().collect());
        }
        out
    }
}

/// Orbits of `T(F_p)` on the regular tuples `(F_p^x)^Delta`.
#[derive(Clone, Debug, Serialize)]
pub struct RegularCharacterOrbitSet {
    pub delta: Vec<String>,
    pub tuples: usize,
    pub orbits: usize,
    pub torus_size: usize,
    pub kernel_size: usize,
    pub central_torus_size: usize,
}

fn delta_indices(g: &FiniteParahoricGroup) -> Vec<usize> {
    let rs = g.root_system();
    rs.negative_simple_roots()
        .iter()
        .map(|r| rs.index_of(r).expect("simple root"))
        .collect()
}

pub fn regular_orbits(g: &FiniteParahoricGroup) -> Result<RegularCharacterOrbitSet, SteinbergError> {
    if g.depth() < 2 {
        return Err(SteinbergError::DepthOne(g.depth()));
    }
    let delta = delta_indices(g);
    let action = TorusAction::new(g, &delta)?;
    let orbits = action.orbits(0, delta.len());
    let kernel = action
        .weights
        .iter()
        .filter(|w| w.iter().all(|&a| a == 1))
        .count();
    let gens = g.generators();
    let central = action
        .elements
        .iter()
        .filter(|t| gens.iter().all(|s| g.mul(t, s) == g.mul(s, t)))
        .count();
    let rs = g.root_system();
    Ok(RegularCharacterOrbitSet {
        delta: delta.iter().map(|&i| rs.root(i).to_string()).collect(),
        tuples: orbits.iter().map(Vec::len).sum(),
        orbits: orbits.len(),
        torus_size: action.elements.len(),
        kernel_size: kernel,
        central_torus_size: central,
    })
}

pub fn regular_orbit_count(g: &FiniteParahoricGroup) -> Result<u64, SteinbergError> {
    Ok(regular_orbits(g)?.orbits as u64)
}

/// The abstract group `T(F_p) x| F_p^D`, with `t` scaling coordinate `a` by `a(t)`.
struct SemidirectQuotient {
    p: u32,
    rank: usize,
    torus: usize,
    /// `torus_mul[s][t]` is the index of `st`.
    torus_mul: Vec<Vec<usize>>,
    weights: Vec<Vec<u32>>,
}

impl SemidirectQuotient {
    fn new(g: &FiniteParahoricGroup, action: &TorusAction) -> Self {
        let index: HashMap<Element, usize> = action
            .elements
            .iter()
            .enumerate()
            .map(|(i, t)| (*t, i))
            .collect();
        let torus_mul = action
            .elements
            .iter()
            .map(|s| {
                action
                    .elements
                    .iter()
                    .map(|t| index[&g.mul(s, t)])
                    .collect()
            })
            .collect();
        SemidirectQuotient {
            p: action.p,
            rank: action.weights.first().map_or(0, Vec::len),
            torus: action.elements.len(),
            torus_mul,
            weights: action.weights.clone(),
        }
    }

    fn vectors(&self) -> usize {
        (self.p as usize).pow(self.rank as u32)
    }

    fn order(&self) -> usize {
        self.torus * self.vectors()
    }

    fn split(&self, q: usize) -> (usize, Vec<u32>) {
        let (t, mut v) = (q / self.vectors(), q % self.vectors());
        let mut coords = Vec::with_capacity(self.rank);
        for _ in 0..self.rank {
            coords.push((v % self.p as usize) as u32);
            v /= self.p as usize;
        }
        (t, coords)
    }

    fn join(&self, t: usize, v: &[u32]) -> usize {
        let mut x = 0;
        for &c in v.iter().rev() {
            x = x * self.p as usize + c as usize;
        }
        t * self.vectors() + x
    }

    /// `(s, v)(t, w) = (st, v + s.w)`.
    fn mul(&self, a: usize, b: usize) -> usize {
        let (s, v) = self.split(a);
        let (t, w) = self.split(b);
        let sum: Vec<u32> = (0..self.rank)
            .map(|k| (v[k] + self.weights[s][k] * w[k]) % self.p)
            .collect();
        self.join(self.torus_mul[s][t], &sum)
    }

    /// Generators of `T x| F_p^I`.
    fn generators(&self, mask: usize) -> Vec<usize> {
        let zero = vec![0; self.rank];
        let mut gens: Vec<usize> = (0..self.torus).map(|t| self.join(t, &zero)).collect();
        for k in 0..self.rank {
            if mask & (1 << k) != 0 {
                let mut e = zero.clone();
                e[k] = 1;
                gens.push(self.join(0, &e));
            }
        }
        gens
    }

    /// `#(T x| F_p^I \ Q / T x| F_p^J)` by brute force.
    fn double_cosets(&self, left: usize, right: usize) -> usize {
        let n = self.order();
        let (lg, rg) = (self.generators(left), self.generators(right));
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for q in 0..n {
            for &s in &lg {
                let (a, b) = (find(&mut parent, q), find(&mut parent, self.mul(s, q)));
                parent[a.max(b)] = a.min(b);
            }
            for &s in &rg {
                let (a, b) = (find(&mut parent, q), find(&mut parent, self.mul(q, s)));
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..n).filter(|&q| find(&mut parent, q) == q).count()
    }

    fn full(&self) -> usize {
        (1 << self.rank) - 1
    }

    /// `(1_T, st)` with `st = sum over I of (-1)^{|I|} 1_{T x| F_p^I}`.
    fn one_st(&self) -> i64 {
        (0..=self.full())
            .map(|i| sign(i.count_ones() as usize) * self.double_cosets(0, i) as i64)
            .sum()
    }

    fn st_st(&self) -> i64 {
        let mut total = 0;
        for i in 0..=self.full() {
            for j in 0..=self.full() {
                total += sign((i.count_ones() + j.count_ones()) as usize)
                    * self.double_cosets(i, j) as i64;
            }
        }
        total
    }

    fn st_dim(&self) -> i64 {
        (0..=self.full())
            .map(|i| sign(i.count_ones() as usize) * (self.order() / (self.torus * (self.p as usize).pow(i.count_ones()))) as i64)
            .sum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SteinbergReport {
    pub report: Report,
    pub one_st: Option<i64>,
    pub st_st: i64,
    pub orbit_count: Option<u64>,
    /// `dim st_L` for each `L` of the family, labelled by its function.
    pub dims: Vec<(String, i64)>,
}

impl SteinbergReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// `B_I` for `I` a subset of `Delta`, given by explicit generators instead
/// of a concave function.
fn explicit_borel_family(g: &FiniteParahoricGroup, delta: &[usize]) -> Vec<(usize, Subgroup)> {
    let q = g.p().pow(g.depth() - 1) as i64;
    (0..1usize << delta.len())
        .map(|mask| {
            let mut gens = g.borel().generators;
            for (k, &i) in delta.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    gens.push(g.root_element(i, q));
                }
            }
            let l = Subgroup {
                label: format!("B[{mask:b}]"),
                function: None,
                generators: gens,
                contains_borel: true,
            };
            (mask.count_ones() as usize, l)
        })
        .collect()
}

/// Multiplicity one for `st_B`, its inner products by two independent
/// counts, dimensions, faithfulness, and the adjoint double class counts.
pub fn verify_main_theorem(g: &FiniteParahoricGroup) -> Result<SteinbergReport, SteinbergError> {
    require_clbi_hypotheses(g)?;
    if g.depth() < 2 {
        return Err(SteinbergError::DepthOne(g.depth()));
    }
    let exec = Execution::default();
    let rs = g.root_system();
    let mut rep = Report::new(g.instance());
    let fb = pseudo_borel_function(rs, g.depth());
    let family = overgroup_family(g, &fb)?;
    let delta = delta_indices(g);
    let n_delta = delta.len();
    let full = &family.last().expect("nonempty").subgroup;

    let index_b = g.cosets().len() as i64;
    rep.push(Check::equal("index_g_b", g.expected_coset_count(), index_b));
    let st = VirtualCharacter::steinberg(&family);
    let dim = st.dim(g)?;
    let index_bd = g.index_of_subgroup(full)? as i64;
    let dim_quotient = index_bd * (g.p() as i64 - 1).pow(n_delta as u32);
    rep.push(Check::equal("st_b_dim", dim_quotient, dim));
    let mut dims = Vec::new();
    for e in &family {
        dims.push((e.function.to_text(rs), st_dim(g, &e.function)?));
    }
    if let Ok(total) = interval_dimension_sum(g, &fb) {
        rep.push(Check::equal("interval_dimension_sum", index_b, total));
    }

    let st_st = st.inner(g, &st, exec)?;
    let action = TorusAction::new(g, &delta)?;
    let quotient = SemidirectQuotient::new(g, &action);
    rep.push(Check::equal("st_b_dim_quotient", dim_quotient, index_bd * quotient.st_dim()));
    rep.push(Check::equal("st_b_inner_quotient", quotient.st_st(), st_st));
    let orbits = regular_orbits(g)?;
    rep.push(Check::equal("st_b_inner_orbit_count", orbits.orbits, st_st));
    rep.push(Check::equal("faithfulness_kernel_is_center", orbits.central_torus_size, orbits.kernel_size));
    if g.is_adjoint() {
        rep.push(Check::equal("adjoint_single_orbit", 1, orbits.orbits));
    }

    let one_b = VirtualCharacter::permutation(g.borel());
    let one_st = one_b.inner(g, &st, exec)?;
    rep.push(Check::equal("one_b_st_b_quotient", quotient.one_st(), one_st));

    let explicit: Vec<(i64, Subgroup)> = explicit_borel_family(g, &delta)
        .into_iter()
        .map(|(k, l)| (sign(k), l))
        .collect();
    let st_explicit = VirtualCharacter { terms: explicit };
    rep.push(Check::equal("st_b_inner_explicit_generators", st_st, st_explicit.inner(g, &st_explicit, exec)?));

    let bd_points: HashSet<usize> = g
        .cosets()
        .orbit(g, &full.generators)
        .into_iter()
        .map(|(x, _)| x)
        .collect();
    let q = Quotient::trivial(g.cosets());
    let b = g.borel();
    let mut dcadj = Vec::new();
    let mut alt = 0i64;
    for e in &family {
        let t = q.partition(g, &b.generators, &e.subgroup, exec);
        let inside = (0..t.count()).filter(|&c| bd_points.contains(&t.members[c])).count();
        let abstract_count = quotient.double_cosets(0, e.mask);
        let expected = 1usize << (n_delta - e.roots.len());
        let ok = inside == abstract_count && (!g.is_adjoint() || inside == expected);
        if !ok {
            dcadj.push(format!("I = {:b}: {inside} vs {abstract_count}", e.mask));
        }
        alt += sign(e.roots.len()) * inside as i64;
    }
    rep.push(Check::new(
        "dcadj_counts",
        "0 violations",
        format!("{} violations", dcadj.len()),
        dcadj.is_empty(),
    ));
    if g.is_adjoint() {
        rep.push(Check::equal("dcadj_alternating_sum", 1, alt));
    }
    rep.sort();
    Ok(SteinbergReport {
        report: rep,
        one_st: Some(one_st),
        st_st,
        orbit_count: Some(orbits.orbits as u64),
        dims,
    })
}

/// `(p - 1)^{|negative roots| - rank}`.
pub fn generic_bound(g: &FiniteParahoricGroup) -> u64 {
    let rs = g.root_system();
    (g.p() as u64 - 1).pow((rs.num_positive() - rs.rank()) as u32)
}

/// Lower bound on the number of components of `st_{P_f}` for generic `f`:
/// the count `(st_P, st_P)`, the torus orbits on regular characters of
/// `U_Delta`, and the commutativity of `U_Delta` modulo `P`.
pub fn generic_bound_check(
    g: &FiniteParahoricGroup,
    f: &ConcaveFunction,
) -> Result<SteinbergReport, SteinbergError> {
    let rs = g.root_system();
    if !is_generic(rs, f) {
        return Err(SteinbergError::NotGeneric(f.to_text(rs)));
    }
    if let Some(&value) = f.values().iter().filter(|&&v| v > g.depth() as i32).max() {
        return Err(SteinbergError::BeyondDepth { value, depth: g.depth() });
    }
    let exec = Execution::default();
    let mut rep = Report::new(g.instance());
    let family = overgroup_family(g, f)?;
    let p_sub = &family[0].subgroup;
    let full = &family.last().expect("nonempty").function;
    let layer = Quotient::by_subgroup(g, p_sub, exec)?;
    let in_p = |x: &Element| layer.class_of(g, x) == layer.class_of(g, &g.identity());

    // U_Delta: negative root coordinates between the two functions.
    let steps: Vec<(usize, u32)> = (rs.num_positive()..rs.num_roots())
        .filter(|&i| full.value(i) < f.value(i))
        .map(|i| (i, full.value(i) as u32))
        .collect();
    let mut commuting = true;
    for &(a, va) in &steps {
        for &(b, vb) in &steps {
            let x = g.root_element(a, g.root_prime(a).pow(va) as i64);
            let y = g.root_element(b, g.root_prime(b).pow(vb) as i64);
            commuting &= in_p(&g.commutator(&x, &y));
        }
    }
    rep.push(Check::new("u_delta_abelian", true, commuting, commuting));
    let elementary = steps.iter().all(|&(i, v)| f.value(i) - v as i32 == 1);
    rep.push(Check::new("u_delta_elementary", true, elementary, elementary));

    let directions: Vec<Root> = family
        .iter()
        .filter(|e| e.roots.len() == 1)
        .map(|e| e.roots[0])
        .collect();
    let (regular, free): (Vec<usize>, Vec<usize>) = steps
        .iter()
        .map(|&(i, _)| i)
        .partition(|&i| directions.contains(&rs.root(i)));
    let order: Vec<usize> = regular.iter().chain(&free).copied().collect();
    let action = TorusAction::new(g, &order)?;
    let orbit_count = action.orbits(free.len(), regular.len()).len() as u64;

    let st = VirtualCharacter::steinberg(&family);
    let st_st = st.inner_on(g, &st, &layer, exec);
    let bound = generic_bound(g);
    rep.push(Check::new(
        "generic_component_count",
        format!(">= {bound}"),
        st_st,
        st_st >= bound as i64,
    ));
    rep.push(Check::new(
        "generic_orbit_count",
        format!(">= {bound}"),
        orbit_count,
        orbit_count >= bound,
    ));
    rep.sort();
    Ok(SteinbergReport {
        report: rep,
        one_st: None,
        st_st,
        orbit_count: Some(orbit_count),
        dims: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concave::length_plus_two;
    use crate::parahoric_group::{build_group, GroupType, Isogeny};

    fn group(kind: GroupType, iso: Isogeny, p: u32, h: u32) -> FiniteParahoricGroup {
        build_group(kind, iso, p, h).unwrap()
    }

    #[test]
    fn permutation_inner_products() {
        let g = group(GroupType::A1, Isogeny::Adjoint, 3, 2);
        let whole = Subgroup::whole(&g);
        assert_eq!(perm_inner(&g, &whole, &whole).unwrap(), 1);
        let fb = pseudo_borel_function(g.root_system(), 2);
        let fam = overgroup_family(&g, &fb).unwrap();
        let bd = &fam.last().unwrap().subgroup;
        let b = g.borel();
        assert_eq!(perm_inner(&g, &b, bd).unwrap(), perm_inner(&g, bd, &b).unwrap());
        assert!(perm_inner(&g, &g.unipotent(), &g.unipotent()).is_err());
    }

    #[test]
    fn sl2_mod_9_numbers() {
        let g = group(GroupType::A1, Isogeny::SimplyConnected, 3, 2);
        let rs = g.root_system();
        let fb = pseudo_borel_function(rs, 2);
        assert_eq!(st_dim(&g, &fb).unwrap(), 8);
        let zero = ConcaveFunction::special(rs, vec![0, 0], 2).unwrap();
        assert_eq!(st_dim(&g, &zero).unwrap(), 1);
        assert_eq!(interval_dimension_sum(&g, &fb).unwrap(), 12);
        assert_eq!(st_inner(&g, &fb, &fb, Execution::Sequential).unwrap(), 2);
        assert_eq!(st_inner(&g, &zero, &zero, Execution::Parallel).unwrap(), 1);
        assert_eq!(regular_orbit_count(&g).unwrap(), 2);
    }

    #[test]
    fn st_inner_is_symmetric() {
        let g = group(GroupType::A1, Isogeny::SimplyConnected, 3, 3);
        let fs = enumerate_overgroups(g.root_system(), 3, Execution::Sequential).unwrap();
        for a in &fs {
            for b in &fs {
                let x = st_inner(&g, a, b, Execution::Parallel).unwrap();
                let y = st_inner(&g, b, a, Execution::Parallel).unwrap();
                assert_eq!(x, y);
            }
            if st_dim(&g, a).unwrap() > 0 {
                assert!(st_inner(&g, a, a, Execution::Sequential).unwrap() >= 1);
            }
        }
    }

    #[test]
    fn main_theorem_small() {
        for (kind, iso, p, h, st) in [
            (GroupType::A1, Isogeny::SimplyConnected, 3, 2, 2),
            (GroupType::A1, Isogeny::Adjoint, 3, 2, 1),
            (GroupType::A1, Isogeny::SimplyConnected, 5, 2, 2),
            (GroupType::A1, Isogeny::Adjoint, 5, 3, 1),
        ] {
            let r = verify_main_theorem(&group(kind, iso, p, h)).unwrap();
            assert!(r.passed(), "{}", r.report.to_text());
            assert_eq!(r.st_st, st);
        }
    }

    #[test]
    fn depth_one_and_bad_primes_are_rejected() {
        let g = group(GroupType::A1, Isogeny::SimplyConnected, 3, 1);
        assert_eq!(regular_orbit_count(&g).unwrap_err(), SteinbergError::DepthOne(1));
        let g = group(GroupType::A2, Isogeny::SimplyConnected, 3, 2);
        assert!(matches!(
            verify_main_theorem(&g),
            Err(SteinbergError::Group(GroupError::ConnectionIndex { .. }))
        ));
    }

    #[test]
    fn generic_bound_rank_one() {
        let g = group(GroupType::A1, Isogeny::SimplyConnected, 3, 3);
        let f = length_plus_two(g.root_system(), 3).unwrap();
        let r = generic_bound_check(&g, &f).unwrap();
        assert!(r.passed(), "{}", r.report.to_text());
        assert_eq!(generic_bound(&g), 1);
        assert_eq!(f, pseudo_borel_function(g.root_system(), 3));
        let low = ConcaveFunction::special(g.root_system(), vec![0, 1], 3).unwrap();
        assert!(matches!(generic_bound_check(&g, &low), Err(SteinbergError::NotGeneric(_))));
        let shallow = group(GroupType::A1, Isogeny::SimplyConnected, 3, 2);
        let f = length_plus_two(shallow.root_system(), 2).unwrap();
        assert!(matches!(
            generic_bound_check(&shallow, &f),
            Err(SteinbergError::BeyondDepth { value: 3, depth: 2 })
        ));
    }
}
