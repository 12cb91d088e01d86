//! Finite groups `G(Z/p^h)` for split groups of type A1, A2 and C2, realized
//! as SL2/PGL2, SL3/PGL3 and Sp4, with their root subgroups, congruence
//! filtration and the subgroups attached to concave functions.
//!
//! The pseudo-Borel subgroup is always the upper triangular one, so cosets
//! of subgroups containing it are handled through [`cosets::CosetSpace`].

pub mod cosets;
pub mod matrix;
mod verify;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::concave::{delta_roots, generated_function, ConcaveError, ConcaveFunction};
use crate::exec::Execution;
use crate::report::Instance;
use crate::root_system::{DynkinType, Root, RootSystem, RootSystemError};

pub use cosets::{CosetSpace, DoubleCosetTable, Quotient};
pub use matrix::Element;
pub use verify::{
    pseudo_borel_conjugators, require_clbi_hypotheses, verify_clbi, verify_dcprod,
    verify_overgroup_classification, verify_parahoric_axioms, verify_pseudo_borel_conjugacy,
    verify_rank1_classes, verify_reduction, MAX_INTERVAL_ORBITS,
};

use matrix::{Block, p_valuation, pow_signed, primitive_root};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("p = {0} is excluded: the prime must be odd (p != 2)")]
    EvenPrime(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("modulus {0} does not fit in one byte")]
    ModulusTooLarge(u64),
    #[error("p = {p} divides the connection index {index} of {kind}")]
    ConnectionIndex { kind: String, p: u32, index: u32 },
    #[error("{0} is not supported")]
    Unsupported(String),
    #[error("{what} needs {needed}, budget is {limit}")]
    Budget {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
    #[error("element is not in the root subgroup of {0}")]
    NotInRootGroup(Root),
    #[error("{0} is not a root of the group")]
    UnknownRoot(Root),
    #[error("function does not match the group: {0}")]
    FunctionMismatch(String),
    #[error("subgroup {0} does not contain the pseudo-Borel subgroup")]
    NoBorel(String),
    #[error("depth {0} is too small for this operation")]
    DepthTooSmall(u32),
    #[error(transparent)]
    Concave(#[from] ConcaveError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupType {
    A1,
    A2,
    C2,
}

impl GroupType {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Some(GroupType::A1),
            "A2" => Some(GroupType::A2),
            "C2" => Some(GroupType::C2),
            _ => None,
        }
    }

    fn dynkin(self) -> (DynkinType, usize) {
        match self {
            GroupType::A1 => (DynkinType::A, 1),
            GroupType::A2 => (DynkinType::A, 2),
            GroupType::C2 => (DynkinType::C, 2),
        }
    }

    /// Index of the root lattice in the weight lattice.
    pub fn connection_index(self) -> u32 {
        match self {
            GroupType::A1 | GroupType::C2 => 2,
            GroupType::A2 => 3,
        }
    }

    fn dim(self) -> usize {
        match self {
            GroupType::A1 => 2,
            GroupType::A2 => 3,
            GroupType::C2 => 4,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupType::A1 => "A1",
            GroupType::A2 => "A2",
            GroupType::C2 => "C2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Isogeny {
    #[serde(rename = "sc")]
    SimplyConnected,
    Adjoint,
}

impl Isogeny {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sc" | "simply-connected" | "simply_connected" => Some(Isogeny::SimplyConnected),
            "ad" | "adjoint" => Some(Isogeny::Adjoint),
            _ => None,
        }
    }
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "adjoint",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest subgroup enumerated element by element.
    pub elements: u64,
    /// Largest coset space `G/B` built.
    pub cosets: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: 1_000_000,
            cosets: 100_000,
        }
    }
}

/// Image of a root: the block it lives in and the nonzero entries of its
/// nilpotent matrix `X`, so that `u(x) = 1 + x X`.
#[derive(Clone, Debug)]
struct RootImage {
    block: usize,
    entries: Vec<(usize, usize, i32)>,
}

/// Cocharacter `t -> diag(t^e_0, ..., t^e_{d-1})` in one block.
#[derive(Clone, Debug)]
struct Cocharacter {
    block: usize,
    exponents: Vec<i64>,
}

/// One irreducible factor of a (possibly product) group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: GroupType,
    pub p: u32,
}

#[derive(Debug)]
pub struct FiniteParahoricGroup {
    factors: Vec<Factor>,
    isogeny: Isogeny,
    h: u32,
    rs: RootSystem,
    blocks: Vec<Block>,
    roots: Vec<RootImage>,
    cochars: Vec<Cocharacter>,
    budget: Budget,
    cosets: OnceLock<CosetSpace>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u32, h: u32) -> Result<(), GroupError> {
    if h == 0 {
        return Err(GroupError::ZeroDepth);
    }
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::EvenPrime(p));
    }
    let m = (p as u64).pow(h);
    if m > 255 {
        return Err(GroupError::ModulusTooLarge(m));
    }
    Ok(())
}

/// `|G(F_p)|` for one factor.
fn residual_order(kind: GroupType, p: u64) -> u64 {
    match kind {
        GroupType::A1 => p * (p * p - 1),
        GroupType::A2 => p.pow(3) * (p * p - 1) * (p.pow(3) - 1),
        GroupType::C2 => p.pow(4) * (p * p - 1) * (p.pow(4) - 1),
    }
}

fn group_dimension(kind: GroupType) -> u32 {
    match kind {
        GroupType::A1 => 3,
        GroupType::A2 => 8,
        GroupType::C2 => 10,
    }
}

/// Positive roots of each realization with their matrices; negatives use
/// the transpose.
fn positive_images(kind: GroupType) -> Vec<(Vec<i32>, Vec<(usize, usize, i32)>)> {
    match kind {
        GroupType::A1 => vec![(vec![1], vec![(0, 1, 1)])],
        GroupType::A2 => vec![
            (vec![1, 0], vec![(0, 1, 1)]),
            (vec![0, 1], vec![(1, 2, 1)]),
            (vec![1, 1], vec![(0, 2, 1)]),
        ],
        GroupType::C2 => vec![
            (vec![1, 0], vec![(0, 1, 1), (2, 3, -1)]),
            (vec![0, 1], vec![(1, 2, 1)]),
            (vec![1, 1], vec![(0, 2, 1), (1, 3, 1)]),
            (vec![2, 1], vec![(0, 3, 1)]),
        ],
    }
}

fn cocharacters(kind: GroupType, isogeny: Isogeny) -> Vec<Vec<i64>> {
    match (kind, isogeny) {
        (GroupType::A1, Isogeny::SimplyConnected) => vec![vec![1, -1]],
        (GroupType::A1, Isogeny::Adjoint) => vec![vec![1, 0]],
        (GroupType::A2, Isogeny::SimplyConnected) => vec![vec![1, -1, 0], vec![0, 1, -1]],
        (GroupType::A2, Isogeny::Adjoint) => vec![vec![1, 0, 0], vec![1, 1, 0]],
        (GroupType::C2, _) => vec![vec![1, -1, 1, -1], vec![0, 1, -1, 0]],
    }
}

/// Builds `G(Z/p^h)` with the default budget.
pub fn build_group(
    kind: GroupType,
    isogeny: Isogeny,
    p: u32,
    h: u32,
) -> Result<FiniteParahoricGroup, GroupError> {
    FiniteParahoricGroup::new(&[Factor { kind, p }], isogeny, h, Budget::default())
}

pub fn build_group_with_budget(
    kind: GroupType,
    isogeny: Isogeny,
    p: u32,
    h: u32,
    budget: Budget,
) -> Result<FiniteParahoricGroup, GroupError> {
    FiniteParahoricGroup::new(&[Factor { kind, p }], isogeny, h, budget)
}

/// Direct product of simply connected factors sharing the depth `h`.
pub fn build_product(
    factors: &[Factor],
    h: u32,
    budget: Budget,
) -> Result<FiniteParahoricGroup, GroupError> {
    FiniteParahoricGroup::new(factors, Isogeny::SimplyConnected, h, budget)
}

impl FiniteParahoricGroup {
    pub fn new(
        factors: &[Factor],
        isogeny: Isogeny,
        h: u32,
        budget: Budget,
    ) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::Unsupported("empty product".into()));
        }
        let width: usize = factors.iter().map(|f| f.kind.dim().pow(2)).sum();
        if width > 16 {
            return Err(GroupError::Unsupported(
                "products wider than sixteen entries".into(),
            ));
        }
        for f in factors {
            check_prime(f.p, h)?;
            if f.kind == GroupType::C2 && isogeny == Isogeny::Adjoint {
                return Err(GroupError::Unsupported("adjoint C2".into()));
            }
        }
        let components: Vec<(DynkinType, usize)> = factors.iter().map(|f| f.kind.dynkin()).collect();
        let rs = RootSystem::from_components(&components)?;
        let mut blocks = Vec::new();
        let mut offset = 0;
        for f in factors {
            let d = f.kind.dim();
            blocks.push(Block::new(
                d,
                offset,
                f.p,
                h,
                isogeny == Isogeny::Adjoint,
            ));
            offset += d * d;
        }
        let mut roots: Vec<Option<RootImage>> = vec![None; rs.num_roots()];
        let mut cochars = Vec::new();
        let mut rank_offset = 0;
        for (b, f) in factors.iter().enumerate() {
            let (_, n) = f.kind.dynkin();
            for (coeffs, entries) in positive_images(f.kind) {
                let mut full = vec![0; rs.rank()];
                full[rank_offset..rank_offset + n].copy_from_slice(&coeffs);
                let r = Root::new(&full);
                let i = rs.index_of(&r).expect("realization root");
                roots[i] = Some(RootImage {
                    block: b,
                    entries: entries.clone(),
                });
                roots[rs.neg_index(i)] = Some(RootImage {
                    block: b,
                    entries: entries.iter().map(|&(r, c, s)| (c, r, s)).collect(),
                });
            }
            for exponents in cocharacters(f.kind, isogeny) {
                cochars.push(Cocharacter {
                    block: b,
                    exponents,
                });
            }
            rank_offset += n;
        }
        let g = FiniteParahoricGroup {
            factors: factors.to_vec(),
            isogeny,
            h,
            rs,
            blocks,
            roots: roots.into_iter().map(|r| r.expect("every root realized")).collect(),
            cochars,
            budget,
            cosets: OnceLock::new(),
        };
        let needed = g.expected_coset_count();
        if needed > budget.cosets as u128 {
            return Err(GroupError::Budget {
                what: "coset space G/B",
                needed: needed.min(u64::MAX as u128) as u64,
                limit: budget.cosets,
            });
        }
        Ok(g)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }

    pub fn depth(&self) -> u32 {
        self.h
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// The residual characteristic; for products, that of the first factor.
    pub fn p(&self) -> u32 {
        self.factors[0].p
    }

    pub fn single_prime(&self) -> Option<u32> {
        let p = self.p();
        self.factors.iter().all(|f| f.p == p).then_some(p)
    }

    pub fn is_adjoint(&self) -> bool {
        self.isogeny == Isogeny::Adjoint
    }

    pub fn label(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.kind.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn instance(&self) -> Instance {
        Instance {
            kind: self.label(),
            isogeny: self.isogeny.to_string(),
            p: self.factors.iter().map(|f| f.p).collect(),
            h: self.h,
        }
    }

    pub(crate) fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    fn block_of_root(&self, i: usize) -> &Block {
        &self.blocks[self.roots[i].block]
    }

    pub fn root_prime(&self, i: usize) -> u32 {
        self.block_of_root(i).p
    }

    /// `|G| = |G(F_p)| p^{(h-1) dim G}`, factor by factor.
    pub fn order_formula(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| {
                residual_order(f.kind, f.p as u64) as u128
                    * (f.p as u128).pow((self.h - 1) * group_dimension(f.kind))
            })
            .product()
    }

    /// `|H|`, the torus points `((p-1) p^{h-1})^rank`.
    pub fn torus_order(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| {
                let (_, n) = f.kind.dynkin();
                (((f.p - 1) as u128) * (f.p as u128).pow(self.h - 1)).pow(n as u32)
            })
            .product()
    }

    /// `|B| = |H| p^{h |positive roots|}`.
    pub fn borel_order(&self) -> u128 {
        let mut o = self.torus_order();
        for i in 0..self.rs.num_positive() {
            o *= (self.root_prime(i) as u128).pow(self.h);
        }
        o
    }

    pub fn expected_coset_count(&self) -> u128 {
        self.order_formula() / self.borel_order()
    }

    pub fn identity(&self) -> Element {
        matrix::identity(&self.blocks)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        matrix::mul(&self.blocks, x, y)
    }

    pub fn inverse(&self, x: &Element) -> Element {
        matrix::inverse(&self.blocks, x)
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        matrix::commutator(&self.blocks, x, y)
    }

    pub fn conjugate(&self, g: &Element, x: &Element) -> Element {
        self.mul(&self.mul(g, x), &self.inverse(g))
    }

    /// `u_a(x) = 1 + x X_a`.
    pub fn root_element(&self, i: usize, x: i64) -> Element {
        let img = &self.roots[i];
        let b = &self.blocks[img.block];
        let m = b.modulus as i64;
        let mut e = self.identity();
        for &(r, c, s) in &img.entries {
            e[b.offset + r * b.dim + c] = (s as i64 * x).rem_euclid(m) as u8;
        }
        e
    }

    /// Coefficient of `X_a` read at its first entry.
    fn root_coordinate(&self, i: usize, e: &Element) -> i64 {
        let img = &self.roots[i];
        let b = &self.blocks[img.block];
        let (r, c, s) = img.entries[0];
        let v = b.at(e, r, c) as i64;
        (v * s as i64).rem_euclid(b.modulus as i64)
    }

    pub fn modulus_of_root(&self, i: usize) -> u32 {
        self.block_of_root(i).modulus
    }

    /// `u_a(p^k)`, the generator of `U_{a,k}`; `None` once trivial.
    pub fn filtration_generator(&self, i: usize, k: u32) -> Option<Element> {
        (k < self.h).then(|| self.root_element(i, self.root_prime(i).pow(k) as i64))
    }

    /// Torus element `prod_i cochar_i(t_i)` for units `t_i`.
    pub fn torus_element(&self, ts: &[u32]) -> Element {
        let mut e = self.identity();
        for (c, &t) in self.cochars.iter().zip(ts) {
            let b = &self.blocks[c.block];
            let mut d = self.identity();
            for (k, &ex) in c.exponents.iter().enumerate() {
                d[b.offset + k * b.dim + k] = pow_signed(t, ex, b.modulus) as u8;
            }
            matrix::normalize(&self.blocks, &mut d);
            e = self.mul(&e, &d);
        }
        e
    }

    fn cochar_prime(&self, k: usize) -> u32 {
        self.blocks[self.cochars[k].block].p
    }

    /// One torus generator per cocharacter, at a primitive root.
    pub fn torus_generators(&self) -> Vec<Element> {
        let r = self.rs.rank();
        (0..r)
            .map(|k| {
                let p = self.cochar_prime(k);
                let mut ts = vec![1; r];
                ts[k] = primitive_root(p, self.h);
                self.torus_element(&ts)
            })
            .collect()
    }

    /// Teichmueller lift `a -> a^{p^{h-1}}` of a residue.
    pub fn teichmuller(&self, a: u32, p: u32) -> u32 {
        matrix::pow_mod(a, (p as u64).pow(self.h - 1), p.pow(self.h))
    }

    /// Generators of the Teichmueller torus `T(F_p)` inside `H`.
    pub fn teichmuller_generators(&self) -> Vec<Element> {
        let r = self.rs.rank();
        (0..r)
            .map(|k| {
                let p = self.cochar_prime(k);
                let mut ts = vec![1; r];
                ts[k] = self.teichmuller(primitive_root(p, 1), p);
                self.torus_element(&ts)
            })
            .collect()
    }

    /// `a(t)`, read off from `t u_a(1) t^{-1} = u_a(a(t))`.
    pub fn root_character(&self, i: usize, t: &Element) -> u32 {
        let c = self.conjugate(t, &self.root_element(i, 1));
        self.root_coordinate(i, &c) as u32
    }

    /// Generators of the whole group.
    pub fn generators(&self) -> Vec<Element> {
        let mut gens = self.torus_generators();
        for i in 0..self.rs.num_roots() {
            if self.rs.root(i).length() == 1 {
                gens.push(self.root_element(i, 1));
            }
        }
        gens
    }

    /// `u_a(x)` for a root given as a vector.
    pub fn root_element_of(&self, a: &Root, x: i64) -> Result<Element, GroupError> {
        let i = self.rs.index_of(a).ok_or(GroupError::UnknownRoot(*a))?;
        Ok(self.root_element(i, x))
    }

    /// The root subgroup coordinate of `u`, if `u` lies in `U_a`.
    pub fn root_parameter(&self, i: usize, u: &Element) -> Option<i64> {
        let x = self.root_coordinate(i, u);
        (self.root_element(i, x) == *u).then_some(x)
    }

    /// Lazily built coset space `G/B`.
    pub fn cosets(&self) -> &CosetSpace {
        self.cosets
            .get_or_init(|| CosetSpace::build(self, Execution::default()))
    }

    /// The pseudo-Borel subgroup `H U^+`.
    pub fn borel(&self) -> Subgroup {
        let mut gens = self.torus_generators();
        for i in 0..self.rs.num_positive() {
            gens.push(self.root_element(i, 1));
        }
        Subgroup {
            label: "B".into(),
            function: None,
            generators: gens,
            contains_borel: true,
        }
    }

    /// `U`, generated by the positive root subgroups.
    pub fn unipotent(&self) -> Subgroup {
        Subgroup {
            label: "U".into(),
            function: None,
            generators: (0..self.rs.num_positive())
                .map(|i| self.root_element(i, 1))
                .collect(),
            contains_borel: false,
        }
    }

    /// `R_u(B)`: `U` together with the torus points congruent to 1 mod p.
    pub fn borel_radical(&self) -> Subgroup {
        let r = self.rs.rank();
        let mut gens = self.unipotent().generators;
        if self.h >= 2 {
            for k in 0..r {
                let p = self.cochar_prime(k);
                let mut ts = vec![1; r];
                ts[k] = 1 + p;
                gens.push(self.torus_element(&ts));
            }
        }
        Subgroup {
            label: "R_u(B)".into(),
            function: None,
            generators: gens,
            contains_borel: false,
        }
    }

    /// Every element of the subgroup generated by `gens`, within the element budget.
    pub fn enumerate(&self, gens: &[Element]) -> Result<Vec<Element>, GroupError> {
        let id = self.identity();
        let mut seen: HashSet<Element> = HashSet::from([id]);
        let mut out = vec![id];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            k += 1;
            for s in gens {
                let y = self.mul(s, &x);
                if seen.insert(y) {
                    out.push(y);
                    if out.len() as u64 > self.budget.elements {
                        return Err(GroupError::Budget {
                            what: "subgroup enumeration",
                            needed: out.len() as u64,
                            limit: self.budget.elements,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[L : B]` for a subgroup containing `B`.
    pub fn index_over_borel(&self, l: &Subgroup) -> Result<u64, GroupError> {
        l.require_borel()?;
        Ok(self.cosets().orbit(self, &l.generators).len() as u64)
    }

    /// `|L|`, by coset counting when `L` contains `B` and by enumeration otherwise.
    pub fn subgroup_order(&self, l: &Subgroup) -> Result<u128, GroupError> {
        if l.contains_borel {
            Ok(self.index_over_borel(l)? as u128 * self.borel_order())
        } else {
            Ok(self.enumerate(&l.generators)?.len() as u128)
        }
    }

    /// `[G : L]` for `L` containing `B`.
    pub fn index_of_subgroup(&self, l: &Subgroup) -> Result<u64, GroupError> {
        Ok(self.cosets().len() as u64 / self.index_over_borel(l)?)
    }

    /// Membership in a subgroup containing `B`, via its coset orbit.
    pub fn contains(&self, l: &Subgroup, x: &Element) -> Result<bool, GroupError> {
        l.require_borel()?;
        let cs = self.cosets();
        let orbit = cs.orbit(self, &l.generators);
        let pt = cs.locate(self, x);
        Ok(orbit.iter().any(|(q, _)| *q == pt))
    }
}

/// A subgroup given by generators, optionally with its concave function.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub label: String,
    pub function: Option<ConcaveFunction>,
    pub generators: Vec<Element>,
    /// Known by construction to contain the pseudo-Borel subgroup.
    pub contains_borel: bool,
}

impl Subgroup {
    fn require_borel(&self) -> Result<(), GroupError> {
        if self.contains_borel {
            Ok(())
        } else {
            Err(GroupError::NoBorel(self.label.clone()))
        }
    }

    pub fn whole(g: &FiniteParahoricGroup) -> Subgroup {
        Subgroup {
            label: "G".into(),
            function: None,
            generators: g.generators(),
            contains_borel: true,
        }
    }
}

/// `v(u)` for `u` in `U_a`; `None` is the infinite valuation of the identity.
pub fn valuation(g: &FiniteParahoricGroup, a: &Root, u: &Element) -> Result<Option<u32>, GroupError> {
    let i = g.rs.index_of(a).ok_or(GroupError::UnknownRoot(*a))?;
    let x = g.root_parameter(i, u).ok_or(GroupError::NotInRootGroup(*a))?;
    Ok(p_valuation(x as u32, g.root_prime(i), g.h))
}

/// `P_f`, generated by `H` and the `U_{a, f(a)}`.
pub fn subgroup_from_concave(
    g: &FiniteParahoricGroup,
    f: &ConcaveFunction,
) -> Result<Subgroup, GroupError> {
    let rs = &g.rs;
    if f.values().len() != rs.num_roots() {
        return Err(GroupError::FunctionMismatch(format!(
            "{} values for {} roots",
            f.values().len(),
            rs.num_roots()
        )));
    }
    if f.depth() != g.h {
        return Err(GroupError::FunctionMismatch(format!(
            "depth {} for a group of depth {}",
            f.depth(),
            g.h
        )));
    }
    if !f.is_special() {
        return Err(GroupError::FunctionMismatch("nonzero base".into()));
    }
    let mut gens = g.torus_generators();
    for i in 0..rs.num_roots() {
        let v = f.value(i).max(0) as u32;
        if let Some(u) = g.filtration_generator(i, v) {
            gens.push(u);
        }
    }
    let contains_borel = (0..rs.num_positive()).all(|i| f.value(i) == 0);
    Ok(Subgroup {
        label: format!("P[{}]", f.to_text(rs)),
        function: Some(f.clone()),
        generators: gens,
        contains_borel,
    })
}

/// `P_I` for one subset `I` of the minimal overgroup directions of `f`.
#[derive(Clone, Debug)]
pub struct Parabolic {
    /// Bit `k` set when the `k`-th direction is in `I`.
    pub mask: usize,
    pub roots: Vec<Root>,
    pub function: ConcaveFunction,
    pub subgroup: Subgroup,
}

/// Every `P_I` for `I` a subset of the directions of `f`, ordered by mask;
/// the first entry is `P_f` and the last uses all directions.
pub fn overgroup_family(
    g: &FiniteParahoricGroup,
    f: &ConcaveFunction,
) -> Result<Vec<Parabolic>, GroupError> {
    let dirs = delta_roots(&g.rs, f)?;
    let mut out = Vec::with_capacity(1 << dirs.len());
    for mask in 0..(1usize << dirs.len()) {
        let roots: Vec<Root> = (0..dirs.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| dirs[k])
            .collect();
        let function = generated_function(&g.rs, f, &roots)?;
        let subgroup = subgroup_from_concave(g, &function)?;
        out.push(Parabolic {
            mask,
            roots,
            function,
            subgroup,
        });
    }
    Ok(out)
}

/// `|H| prod_a p^{max(0, h - f(a))}`, the order of `P_f` when `f` is solvable.
pub fn product_formula_order(g: &FiniteParahoricGroup, f: &ConcaveFunction) -> u128 {
    let mut o = g.torus_order();
    for i in 0..g.rs.num_roots() {
        let e = (g.h as i32 - f.value(i)).max(0) as u32;
        o *= (g.root_prime(i) as u128).pow(e);
    }
    o
}
