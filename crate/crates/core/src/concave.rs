//! Concave functions on a root system and the subgroups they describe.
//!
//! A function is stored as one integer per root index together with its depth
//! `h` and the base function it dominates. The special base is identically
//! zero. Smaller values mean larger subgroups, so pointwise `f <= g` means the
//! subgroup of `g` sits inside the subgroup of `f`.

use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::root_system::{DynkinType, Root, RootSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConcaveError {
    #[error("expected {want} values, got {got}")]
    Length { want: usize, got: usize },
    #[error("values are not concave at {0}")]
    NotConcave(String),
    #[error("base function is invalid: {0}")]
    InvalidBase(String),
    #[error("value at {root} is below the base")]
    BelowBase { root: Root },
    #[error("f({root}) equals the base value, no overgroup in that direction")]
    AtBase { root: Root },
    #[error("{0} is not a root of the system")]
    UnknownRoot(Root),
    #[error("function is not equal to the base on the standard positive roots")]
    NoStandardBorel,
    #[error("{0} is not in the set of minimal overgroup directions")]
    NotInDelta(Root),
    #[error("enumeration bound exceeded: {0}")]
    Bounds(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConcaveFunction {
    values: Vec<i32>,
    depth: u32,
    base: Vec<i32>,
}

/// Checks `f(a) + f(-a) >= 0` and `f(a + b) <= f(a) + f(b)`.
pub fn is_concave(values: &[i32], rs: &RootSystem) -> bool {
    concavity_violation(values, rs).is_none()
}

fn concavity_violation(values: &[i32], rs: &RootSystem) -> Option<String> {
    let n = rs.num_roots();
    if values.len() != n {
        return Some("length".into());
    }
    for i in 0..n {
        if values[i] + values[rs.neg_index(i)] < 0 {
            return Some(format!("{} and its negative", rs.root(i)));
        }
        for j in 0..n {
            if let Some(k) = rs.sum_index(i, j) {
                if values[k] > values[i] + values[j] {
                    return Some(format!("{} + {}", rs.root(i), rs.root(j)));
                }
            }
        }
    }
    None
}

/// Largest subadditive function below `values`, by two-term relaxation.
pub fn concave_closure(rs: &RootSystem, values: &[i32]) -> Vec<i32> {
    let n = rs.num_roots();
    let mut v = values.to_vec();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = rs.sum_index(i, j) {
                    let s = v[i] + v[j];
                    if s < v[k] {
                        v[k] = s;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return v;
        }
    }
}

impl ConcaveFunction {
    /// Function over the zero base.
    pub fn special(rs: &RootSystem, values: Vec<i32>, depth: u32) -> Result<Self, ConcaveError> {
        Self::with_base(rs, values, depth, vec![0; rs.num_roots()])
    }

    pub fn with_base(
        rs: &RootSystem,
        values: Vec<i32>,
        depth: u32,
        base: Vec<i32>,
    ) -> Result<Self, ConcaveError> {
        let n = rs.num_roots();
        for v in [&values, &base] {
            if v.len() != n {
                return Err(ConcaveError::Length {
                    want: n,
                    got: v.len(),
                });
            }
        }
        if let Some(w) = concavity_violation(&base, rs) {
            return Err(ConcaveError::InvalidBase(w));
        }
        for i in 0..n {
            let s = base[i] + base[rs.neg_index(i)];
            if s != 0 && s != 1 {
                return Err(ConcaveError::InvalidBase(format!(
                    "{} has opposite sum {s}",
                    rs.root(i)
                )));
            }
            if values[i] < base[i] {
                return Err(ConcaveError::BelowBase { root: rs.root(i) });
            }
        }
        if let Some(w) = concavity_violation(&values, rs) {
            return Err(ConcaveError::NotConcave(w));
        }
        Ok(ConcaveFunction {
            values,
            depth,
            base,
        })
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn value(&self, i: usize) -> i32 {
        self.values[i]
    }

    pub fn at(&self, rs: &RootSystem, r: &Root) -> Option<i32> {
        rs.index_of(r).map(|i| self.values[i])
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn base(&self) -> &[i32] {
        &self.base
    }

    pub fn is_special(&self) -> bool {
        self.base.iter().all(|&b| b == 0)
    }

    /// Roots whose base values cancel against the opposite root.
    pub fn psi(&self, rs: &RootSystem) -> Vec<Root> {
        (0..rs.num_roots())
            .filter(|&i| self.base[i] + self.base[rs.neg_index(i)] == 0)
            .map(|i| rs.root(i))
            .collect()
    }

    /// Pointwise comparison; `self <= other` means `other`'s subgroup is inside
    /// `self`'s.
    pub fn le(&self, other: &ConcaveFunction) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    pub fn to_pairs(&self, rs: &RootSystem) -> Vec<(String, i32)> {
        rs.roots()
            .iter()
            .zip(&self.values)
            .map(|(r, &v)| (r.to_string(), v))
            .collect()
    }

    pub fn to_text(&self, rs: &RootSystem) -> String {
        self.to_pairs(rs)
            .into_iter()
            .map(|(r, v)| format!("{r} {v}\n"))
            .collect()
    }

    fn same_base(&self, values: Vec<i32>) -> ConcaveFunction {
        ConcaveFunction {
            values,
            depth: self.depth,
            base: self.base.clone(),
        }
    }

    fn standard_borel(&self, rs: &RootSystem) -> bool {
        (0..rs.num_positive()).all(|i| self.values[i] == self.base[i])
    }
}

/// Zero on positive roots and `h` on negative roots.
pub fn pseudo_borel_function(rs: &RootSystem, h: u32) -> ConcaveFunction {
    let npos = rs.num_positive();
    let values = (0..rs.num_roots())
        .map(|i| if i < npos { 0 } else { h as i32 })
        .collect();
    ConcaveFunction::special(rs, values, h).expect("pseudo-Borel function is concave")
}

/// The largest concave `g <= f` with `g(a) < f(a)`.
pub fn minimal_overgroup(
    rs: &RootSystem,
    f: &ConcaveFunction,
    a: &Root,
) -> Result<ConcaveFunction, ConcaveError> {
    let i = rs.index_of(a).ok_or(ConcaveError::UnknownRoot(*a))?;
    if f.values[i] <= f.base[i] {
        return Err(ConcaveError::AtBase { root: *a });
    }
    let mut v = f.values.clone();
    v[i] -= 1;
    Ok(f.same_base(concave_closure(rs, &v)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaEntry {
    pub root: Root,
    pub overgroup: ConcaveFunction,
    /// Every candidate direction giving the same overgroup.
    pub class: Vec<Root>,
    /// More than one maximal root in the class.
    pub tie: bool,
}

/// Directions of the minimal overgroups of `f`, one per distinct overgroup.
pub fn delta_f(rs: &RootSystem, f: &ConcaveFunction) -> Result<Vec<DeltaEntry>, ConcaveError> {
    if !f.standard_borel(rs) {
        return Err(ConcaveError::NoStandardBorel);
    }
    let mut groups: Vec<(ConcaveFunction, Vec<Root>)> = Vec::new();
    for i in rs.num_positive()..rs.num_roots() {
        if f.values[i] <= f.base[i] {
            continue;
        }
        let r = rs.root(i);
        let g = minimal_overgroup(rs, f, &r)?;
        match groups.iter_mut().find(|(h, _)| *h == g) {
            Some((_, roots)) => roots.push(r),
            None => groups.push((g, vec![r])),
        }
    }
    let mut out = Vec::new();
    for (k, (g, class)) in groups.iter().enumerate() {
        let dominated = groups
            .iter()
            .enumerate()
            .any(|(m, (h, _))| m != k && g.le(h) && g != h);
        if dominated {
            continue;
        }
        let maxima: Vec<Root> = class
            .iter()
            .filter(|b| !class.iter().any(|c| c != *b && rs.precedes(b, c)))
            .copied()
            .collect();
        out.push(DeltaEntry {
            root: maxima[0],
            overgroup: g.clone(),
            class: class.clone(),
            tie: maxima.len() > 1,
        });
    }
    out.sort_by_key(|a| a.root);
    Ok(out)
}

pub fn delta_roots(rs: &RootSystem, f: &ConcaveFunction) -> Result<Vec<Root>, ConcaveError> {
    Ok(delta_f(rs, f)?.into_iter().map(|e| e.root).collect())
}

/// True when `a - b` lies in the rational span of the roots where `f` and the
/// opposite value cancel.
pub fn levi_equivalent(rs: &RootSystem, f: &ConcaveFunction, a: &Root, b: &Root) -> bool {
    let levi: Vec<Vec<i64>> = (0..rs.num_roots())
        .filter(|&i| f.values[i] + f.values[rs.neg_index(i)] == 0)
        .map(|i| rs.root(i).coeffs().iter().map(|&c| c as i64).collect())
        .collect();
    let target: Vec<i64> = (*a - *b).coeffs().iter().map(|&c| c as i64).collect();
    rank_of(&levi) == rank_of(&[levi.clone(), vec![target]].concat())
}

fn rank_of(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (x, y) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * x - m[rank][k] * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Concave closure of the pointwise minimum of the overgroups indexed by `dirs`.
pub fn generated_function(
    rs: &RootSystem,
    f: &ConcaveFunction,
    dirs: &[Root],
) -> Result<ConcaveFunction, ConcaveError> {
    if dirs.is_empty() {
        return Ok(f.clone());
    }
    let delta = delta_f(rs, f)?;
    let mut v = f.values.clone();
    for d in dirs {
        let e = delta
            .iter()
            .find(|e| e.root == *d)
            .ok_or(ConcaveError::NotInDelta(*d))?;
        for (x, y) in v.iter_mut().zip(e.overgroup.values()) {
            *x = (*x).min(*y);
        }
    }
    Ok(f.same_base(concave_closure(rs, &v)))
}

/// Checks the genericity conditions on the negative roots: values at least 2,
/// strictly larger on deeper roots, and `f(a + b) < f(a) + f(b) - 1`.
pub fn is_generic(rs: &RootSystem, f: &ConcaveFunction) -> bool {
    let neg: Vec<usize> = (rs.num_positive()..rs.num_roots()).collect();
    for &i in &neg {
        if f.values[i] < 2 {
            return false;
        }
        for &j in &neg {
            let (a, b) = (rs.root(i), rs.root(j));
            if i != j && rs.precedes(&b, &a) && f.values[j] <= f.values[i] {
                return false;
            }
            if let Some(k) = rs.sum_index(i, j) {
                if f.values[k] >= f.values[i] + f.values[j] - 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// The function `f(a) = length(a) + 2` on negative roots and zero elsewhere.
pub fn length_plus_two(rs: &RootSystem, h: u32) -> Result<ConcaveFunction, ConcaveError> {
    let values = rs
        .roots()
        .iter()
        .map(|r| if r.is_negative() { r.length() as i32 + 2 } else { 0 })
        .collect();
    ConcaveFunction::special(rs, values, h)
}

/// Returns a generic witness when `h` exceeds the Coxeter number, `None`
/// otherwise.
pub fn generic_exists(rs: &RootSystem, h: u32) -> Result<Option<ConcaveFunction>, ConcaveError> {
    if !rs.is_irreducible() {
        return Err(ConcaveError::Unsupported(format!(
            "{} is reducible",
            rs.label()
        )));
    }
    if rs.components() == [(DynkinType::A, 1)] {
        return Err(ConcaveError::Unsupported(
            "in rank one every proper overgroup of a pseudo-Borel other than the whole group is generic"
                .into(),
        ));
    }
    let h0 = rs.coxeter_number().map_err(|e| ConcaveError::Unsupported(e.to_string()))? as u32;
    if h < h0 + 1 {
        return Ok(None);
    }
    let w = length_plus_two(rs, h)?;
    debug_assert!(is_generic(rs, &w));
    Ok(Some(w))
}

/// Depth-first search over special functions with values in `lo..=h` on the
/// negative roots and zero on the positive ones.
struct Search<'a> {
    rs: &'a RootSystem,
    lo: i32,
    hi: i32,
    generic: bool,
    /// Triples `(a, b, a + b)` by the position at which all three are known.
    triples: Vec<Vec<(usize, usize, usize)>>,
    neg: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(rs: &'a RootSystem, lo: i32, hi: i32, generic: bool) -> Self {
        let npos = rs.num_positive();
        let neg: Vec<usize> = (npos..rs.num_roots()).collect();
        let pos_of = |i: usize| if i < npos { 0 } else { i - npos + 1 };
        let mut triples = vec![Vec::new(); neg.len() + 1];
        for i in 0..rs.num_roots() {
            for j in 0..rs.num_roots() {
                if let Some(k) = rs.sum_index(i, j) {
                    let at = pos_of(i).max(pos_of(j)).max(pos_of(k));
                    triples[at].push((i, j, k));
                }
            }
        }
        Search {
            rs,
            lo,
            hi,
            generic,
            triples,
            neg,
        }
    }

    fn consistent(&self, v: &[i32], pos: usize) -> bool {
        let rs = self.rs;
        for &(i, j, k) in &self.triples[pos] {
            if v[k] > v[i] + v[j] {
                return false;
            }
            if self.generic
                && !rs.is_positive_index(i)
                && !rs.is_positive_index(j)
                && v[k] >= v[i] + v[j] - 1
            {
                return false;
            }
        }
        if self.generic {
            let cur = self.neg[pos - 1];
            let a = rs.root(cur);
            for &j in &self.neg[..pos - 1] {
                let b = rs.root(j);
                if rs.precedes(&a, &b) && v[cur] <= v[j] {
                    return false;
                }
                if rs.precedes(&b, &a) && v[j] <= v[cur] {
                    return false;
                }
            }
        }
        true
    }

    fn run(&self, v: &mut Vec<i32>, pos: usize, out: &mut Vec<Vec<i32>>, first_only: bool) {
        if first_only && !out.is_empty() {
            return;
        }
        if pos == self.neg.len() {
            out.push(v.clone());
            return;
        }
        let idx = self.neg[pos];
        for x in self.lo..=self.hi {
            v[idx] = x;
            if self.consistent(v, pos + 1) {
                self.run(v, pos + 1, out, first_only);
            }
        }
        v[idx] = self.hi;
    }

    fn split(&self, exec: Execution, first_only: bool) -> Vec<Vec<i32>> {
        let n = self.rs.num_roots();
        if self.neg.is_empty() {
            return vec![vec![0; n]];
        }
        let width = (self.hi - self.lo + 1).max(0) as usize;
        let parts = exec.map_range(width, |k| {
            let mut v = vec![0; n];
            for &i in &self.neg {
                v[i] = self.hi;
            }
            v[self.neg[0]] = self.lo + k as i32;
            let mut out = Vec::new();
            if self.consistent(&v, 1) {
                self.run(&mut v, 1, &mut out, first_only);
            }
            out
        });
        parts.into_iter().flatten().collect()
    }
}

/// Exhaustive search for a generic function of depth `h`.
pub fn search_generic(rs: &RootSystem, h: u32, exec: Execution) -> Option<ConcaveFunction> {
    let s = Search::new(rs, 2, h as i32, true);
    let found = s.split(exec, true);
    found.into_iter().next().map(|v| {
        let f = ConcaveFunction::special(rs, v, h).expect("search yields concave functions");
        debug_assert!(is_generic(rs, &f));
        f
    })
}

/// `a -> h - f(-a)` on the positive roots.
pub fn pseudo_unipotent_radical(rs: &RootSystem, f: &ConcaveFunction) -> Vec<(Root, i32)> {
    (0..rs.num_positive())
        .map(|i| (rs.root(i), f.depth as i32 - f.values[rs.neg_index(i)]))
        .collect()
}

pub const MAX_ENUMERATION_RANK: usize = 3;
pub const MAX_ENUMERATION_DEPTH: u32 = 4;

/// Every special concave function that is zero on positive roots and takes
/// values in `0..=h` on negative roots, sorted.
pub fn enumerate_overgroups(
    rs: &RootSystem,
    h: u32,
    exec: Execution,
) -> Result<Vec<ConcaveFunction>, ConcaveError> {
    if rs.rank() > MAX_ENUMERATION_RANK || h > MAX_ENUMERATION_DEPTH {
        return Err(ConcaveError::Bounds(format!(
            "rank {} depth {h} exceeds rank {MAX_ENUMERATION_RANK} depth {MAX_ENUMERATION_DEPTH}",
            rs.rank()
        )));
    }
    let s = Search::new(rs, 0, h as i32, false);
    let mut out: Vec<ConcaveFunction> = s
        .split(exec, false)
        .into_iter()
        .map(|v| ConcaveFunction::special(rs, v, h).expect("enumeration yields concave functions"))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupDescriptor {
    pub solvable: bool,
    pub pseudo_parabolic: bool,
    pub generic: bool,
    pub contains_pseudo_borel: bool,
}

/// Positive system inside the roots where `f` equals its base, if any.
pub fn borel_roots(rs: &RootSystem, f: &ConcaveFunction) -> Option<Vec<usize>> {
    let n = rs.num_roots();
    let s: Vec<bool> = (0..n).map(|i| f.values[i] == f.base[i]).collect();
    if (0..n).any(|i| !s[i] && !s[rs.neg_index(i)]) {
        return None;
    }
    for i in 0..n {
        for j in 0..n {
            if let Some(k) = rs.sum_index(i, j) {
                if s[i] && s[j] && !s[k] {
                    return None;
                }
            }
        }
    }
    Some((0..n).filter(|&i| s[i]).collect())
}

pub fn describe(rs: &RootSystem, f: &ConcaveFunction) -> SubgroupDescriptor {
    let n = rs.num_roots();
    let contains_pseudo_borel = borel_roots(rs, f).is_some();
    let solvable = (0..n).all(|i| f.values[i] + f.values[rs.neg_index(i)] > 0);
    let h = f.depth as i32;
    let pseudo_parabolic = contains_pseudo_borel
        && (0..n).all(|i| f.values[i] == f.base[i] || f.values[i] >= h - f.base[rs.neg_index(i)]);
    let generic = contains_pseudo_borel && f.standard_borel(rs) && is_generic(rs, f);
    SubgroupDescriptor {
        solvable,
        pseudo_parabolic,
        generic,
        contains_pseudo_borel,
    }
}
