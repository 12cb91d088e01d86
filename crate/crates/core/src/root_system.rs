//! Reduced crystallographic root systems of types A through G.
//!
//! Roots are integer coefficient vectors over the simple basis, numbered as in
//! Bourbaki. Irreducible systems are built from their Cartan matrix by
//! extending root strings; reducible systems are block sums of irreducible
//! components.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

/// Largest rank handled by the fixed-width root representation.
pub const MAX_RANK: usize = 8;

const NO_ROOT: u16 = u16::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid Cartan type {kind}{rank}: {reason}")]
    InvalidType {
        kind: DynkinType,
        rank: usize,
        reason: &'static str,
    },
    #[error("total rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("operation needs an irreducible root system, got {0}")]
    Reducible(String),
    #[error("malformed root system text at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unknown Dynkin label {0:?}")]
    UnknownLabel(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub const ALL: [DynkinType; 7] = [
        DynkinType::A,
        DynkinType::B,
        DynkinType::C,
        DynkinType::D,
        DynkinType::E,
        DynkinType::F,
        DynkinType::G,
    ];

    pub fn from_letter(s: &str) -> Result<Self, RootSystemError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(DynkinType::A),
            "B" => Ok(DynkinType::B),
            "C" => Ok(DynkinType::C),
            "D" => Ok(DynkinType::D),
            "E" => Ok(DynkinType::E),
            "F" => Ok(DynkinType::F),
            "G" => Ok(DynkinType::G),
            other => Err(RootSystemError::UnknownLabel(other.to_string())),
        }
    }

    /// Checks that `(self, rank)` names an irreducible system with no duplicates
    /// (B2 = C2 is accepted under both names, D needs rank at least 4).
    pub fn validate(self, rank: usize) -> Result<(), RootSystemError> {
        let bad = |reason| {
            Err(RootSystemError::InvalidType {
                kind: self,
                rank,
                reason,
            })
        };
        match self {
            DynkinType::A if rank >= 1 => Ok(()),
            DynkinType::A => bad("A_n needs n >= 1"),
            DynkinType::B | DynkinType::C if rank >= 2 => Ok(()),
            DynkinType::B | DynkinType::C => bad("B_n and C_n need n >= 2"),
            DynkinType::D if rank >= 4 => Ok(()),
            DynkinType::D => bad("D_n needs n >= 4"),
            DynkinType::E if (6..=8).contains(&rank) => Ok(()),
            DynkinType::E => bad("E_n exists only for n = 6, 7, 8"),
            DynkinType::F if rank == 4 => Ok(()),
            DynkinType::F => bad("F exists only in rank 4"),
            DynkinType::G if rank == 2 => Ok(()),
            DynkinType::G => bad("G exists only in rank 2"),
        }
    }

    /// All valid irreducible `(type, rank)` pairs with rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<(DynkinType, usize)> {
        let mut out = Vec::new();
        for kind in Self::ALL {
            for rank in 1..=max_rank {
                if kind.validate(rank).is_ok() {
                    out.push((kind, rank));
                }
            }
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            DynkinType::A => 'A',
            DynkinType::B => 'B',
            DynkinType::C => 'C',
            DynkinType::D => 'D',
            DynkinType::E => 'E',
            DynkinType::F => 'F',
            DynkinType::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A root written in the simple basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: [i8; MAX_RANK],
    rank: u8,
}

impl Root {
    pub fn new(coeffs: &[i32]) -> Self {
        assert!(coeffs.len() <= MAX_RANK, "root rank exceeds {MAX_RANK}");
        let mut c = [0i8; MAX_RANK];
        for (dst, &src) in c.iter_mut().zip(coeffs) {
            *dst = i8::try_from(src).expect("root coefficient out of range");
        }
        Root {
            coeffs: c,
            rank: coeffs.len() as u8,
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root::new(&c)
    }

    pub fn zero(rank: usize) -> Self {
        Root::new(&vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs[..self.rank as usize]
    }

    pub fn coeff(&self, i: usize) -> i32 {
        self.coeffs[i] as i32
    }

    pub fn height(&self) -> i32 {
        self.coeffs().iter().map(|&c| c as i32).sum()
    }

    /// Number of negative simple roots summing to this root (for negative roots).
    pub fn length(&self) -> usize {
        self.height().unsigned_abs() as usize
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs().iter().all(|&c| c >= 0) && self.coeffs().iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        (-*self).is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }

    /// True when every coefficient is nonnegative (the zero vector included).
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs().iter().all(|&c| c >= 0)
    }

    /// Concatenated absolute coefficients, e.g. `112210` for an E6 root.
    pub fn compact(&self) -> String {
        self.coeffs()
            .iter()
            .map(|c| char::from_digit(c.unsigned_abs() as u32, 10).unwrap_or('?'))
            .collect()
    }

    /// Parses the compact digit notation; `negative` selects the sign.
    pub fn from_compact(s: &str, negative: bool) -> Option<Self> {
        let sign = if negative { -1 } else { 1 };
        let digits: Option<Vec<i32>> = s
            .chars()
            .map(|ch| ch.to_digit(10).map(|d| sign * d as i32))
            .collect();
        let digits = digits?;
        if digits.is_empty() || digits.len() > MAX_RANK {
            return None;
        }
        Some(Root::new(&digits))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{}", self.compact())
        } else if self.coeffs().iter().all(|&c| c >= 0) {
            write!(f, "{}", self.compact())
        } else {
            let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", parts.join(" "))
        }
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs().iter().map(|&c| c as i32))
    }
}

impl Add for Root {
    type Output = Root;
    fn add(self, o: Root) -> Root {
        debug_assert_eq!(self.rank, o.rank);
        let mut c = self.coeffs;
        for i in 0..MAX_RANK {
            c[i] += o.coeffs[i];
        }
        Root {
            coeffs: c,
            rank: self.rank,
        }
    }
}

impl Sub for Root {
    type Output = Root;
    fn sub(self, o: Root) -> Root {
        self + (-o)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        let mut c = self.coeffs;
        for x in c.iter_mut() {
            *x = -*x;
        }
        Root {
            coeffs: c,
            rank: self.rank,
        }
    }
}

/// Root system with a fixed simple basis.
///
/// Roots are stored with the positive ones first, sorted by height and then
/// lexicographically; the negative root at index `n + i` is the negation of
/// the positive root at index `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<(DynkinType, usize)>,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    half_norms: Vec<i32>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    sums: Vec<u16>,
}

fn cartan_matrix(kind: DynkinType, n: usize) -> (Vec<Vec<i32>>, Vec<i32>) {
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i32; n];
    match kind {
        DynkinType::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        DynkinType::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
            for x in d.iter_mut().take(n - 1) {
                *x = 2;
            }
        }
        DynkinType::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
            d[n - 1] = 2;
        }
        DynkinType::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        DynkinType::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        DynkinType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            d = vec![2, 2, 1, 1];
        }
        DynkinType::G => {
            link(0, 1, -1, -3);
            d = vec![1, 3];
        }
    }
    (a, d)
}

impl RootSystem {
    /// Builds the irreducible root system of the given type and rank.
    pub fn new(kind: DynkinType, rank: usize) -> Result<Self, RootSystemError> {
        Self::from_components(&[(kind, rank)])
    }

    /// Builds the orthogonal sum of the listed irreducible components.
    pub fn from_components(components: &[(DynkinType, usize)]) -> Result<Self, RootSystemError> {
        for &(kind, rank) in components {
            kind.validate(rank)?;
        }
        let rank: usize = components.iter().map(|c| c.1).sum();
        if rank > MAX_RANK {
            return Err(RootSystemError::RankTooLarge(rank));
        }
        let mut cartan = vec![vec![0i32; rank]; rank];
        let mut half_norms = Vec::with_capacity(rank);
        let mut offset = 0;
        for &(kind, n) in components {
            let (a, d) = cartan_matrix(kind, n);
            for i in 0..n {
                for j in 0..n {
                    cartan[offset + i][offset + j] = a[i][j];
                }
            }
            half_norms.extend(d);
            offset += n;
        }
        let positives = positive_roots_from_cartan(&cartan);
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| -*r));
        let index: HashMap<Root, usize> = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let total = roots.len();
        let mut sums = vec![NO_ROOT; total * total];
        for i in 0..total {
            for j in 0..total {
                if let Some(&k) = index.get(&(roots[i] + roots[j])) {
                    sums[i * total + j] = k as u16;
                }
            }
        }
        Ok(RootSystem {
            components: components.to_vec(),
            rank,
            cartan,
            half_norms,
            roots,
            index,
            sums,
        })
    }

    pub fn components(&self) -> &[(DynkinType, usize)] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Label such as `E8` or `A1xA1`.
    pub fn label(&self) -> String {
        self.components
            .iter()
            .map(|(k, n)| format!("{k}{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn negative_roots(&self) -> &[Root] {
        &self.roots[self.num_positive()..]
    }

    pub fn root(&self, i: usize) -> Root {
        self.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of the negated root.
    pub fn neg_index(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.roots.len() + j];
        (k != NO_ROOT).then_some(k as usize)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    /// The negative simple roots, in Bourbaki order.
    pub fn negative_simple_roots(&self) -> Vec<Root> {
        (0..self.rank).map(|i| -self.simple_root(i)).collect()
    }

    pub fn is_negative_simple(&self, r: &Root) -> bool {
        r.is_negative() && r.length() == 1
    }

    /// W-invariant form normalized so that short roots have squared length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            let ai = a.coeff(i);
            if ai == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += ai * b.coeff(j) * self.cartan[i][j] * self.half_norms[j];
            }
        }
        s
    }

    pub fn norm2(&self, a: &Root) -> i32 {
        self.inner(a, a)
    }

    /// The pairing `<a, b^vee> = 2 (a, b) / (b, b)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i32 {
        2 * self.inner(a, b) / self.norm2(b)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.half_norms.iter().all(|&d| d == 1)
    }

    /// Reflection of `a` in the hyperplane orthogonal to `b`.
    pub fn reflect(&self, a: &Root, b: &Root) -> Root {
        let k = self.pairing(a, b);
        let mut c = vec![0; self.rank];
        for (i, x) in c.iter_mut().enumerate() {
            *x = a.coeff(i) - k * b.coeff(i);
        }
        Root::new(&c)
    }

    pub fn highest_root(&self) -> Result<Root, RootSystemError> {
        self.require_irreducible()?;
        Ok(*self.positive_roots().last().expect("nonempty root system"))
    }

    /// One plus the height of the highest root.
    pub fn coxeter_number(&self) -> Result<usize, RootSystemError> {
        Ok(self.highest_root()?.height() as usize + 1)
    }

    fn require_irreducible(&self) -> Result<(), RootSystemError> {
        if self.is_irreducible() {
            Ok(())
        } else {
            Err(RootSystemError::Reducible(self.label()))
        }
    }

    /// Largest length of a negative root.
    pub fn max_length(&self) -> usize {
        self.positive_roots().iter().map(|r| r.length()).max().unwrap_or(0)
    }

    /// Negative roots of length `l`, sorted.
    pub fn negative_roots_of_length(&self, l: usize) -> Vec<Root> {
        self.negative_roots()
            .iter()
            .filter(|r| r.length() == l)
            .copied()
            .collect()
    }

    /// Negative simple roots `d` such that `a - d` is a root.
    pub fn simple_decrements(&self, a: &Root) -> Vec<Root> {
        self.negative_simple_roots()
            .into_iter()
            .filter(|d| self.contains(&(*a - *d)))
            .collect()
    }

    pub fn simple_decrement_count(&self, a: &Root) -> usize {
        self.simple_decrements(a).len()
    }

    /// Elements of length `l` with exactly one simple decrement.
    pub fn pseudo_leaves(&self, l: usize) -> Vec<Root> {
        self.negative_roots_of_length(l)
            .into_iter()
            .filter(|a| self.simple_decrement_count(a) == 1)
            .collect()
    }

    /// True when `b - a` is a nonnegative combination of simple roots.
    pub fn precedes(&self, a: &Root, b: &Root) -> bool {
        (*b - *a).is_nonnegative()
    }

    /// Coordinates in the standard orthonormal basis for classical types.
    ///
    /// Conventions: A_n lives in n+1 coordinates with `a_i = e_i - e_{i+1}`;
    /// B_n has `a_n = e_n`, C_n has `a_n = 2 e_n`, D_n has `a_n = e_{n-1} + e_n`.
    pub fn to_epsilon(&self, r: &Root) -> Option<Vec<i32>> {
        let &[(kind, n)] = self.components.as_slice() else {
            return None;
        };
        let dim = if kind == DynkinType::A { n + 1 } else { n };
        let mut e = vec![0i32; dim];
        for i in 0..n {
            let c = r.coeff(i);
            let last = i == n - 1;
            match kind {
                DynkinType::A => {
                    e[i] += c;
                    e[i + 1] -= c;
                }
                DynkinType::B | DynkinType::C | DynkinType::D if !last => {
                    e[i] += c;
                    e[i + 1] -= c;
                }
                DynkinType::B => e[i] += c,
                DynkinType::C => e[i] += 2 * c,
                DynkinType::D => {
                    e[n - 2] += c;
                    e[n - 1] += c;
                }
                _ => return None,
            }
        }
        Some(e)
    }

    /// Text form: a header line with the label, then one root per line as
    /// space-separated simple-basis coefficients, negative roots carrying
    /// negative coefficients.
    pub fn to_text(&self) -> String {
        let mut out = format!("# root system {}\n", self.label());
        out.push_str(&format!("# rank {} roots {}\n", self.rank, self.num_roots()));
        for r in &self.roots {
            let parts: Vec<String> = r.coeffs().iter().map(|c| c.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`RootSystem::to_text`] back into a list of roots.
    pub fn parse_roots(text: &str) -> Result<Vec<Root>, RootSystemError> {
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let coeffs: Result<Vec<i32>, _> = line.split_whitespace().map(str::parse).collect();
            let coeffs = coeffs.map_err(|e| RootSystemError::Parse {
                line: n + 1,
                reason: format!("{e}"),
            })?;
            if coeffs.is_empty() || coeffs.len() > MAX_RANK {
                return Err(RootSystemError::Parse {
                    line: n + 1,
                    reason: "wrong number of coefficients".into(),
                });
            }
            out.push(Root::new(&coeffs));
        }
        Ok(out)
    }
}

/// Positive roots by string extension, sorted by height then lexicographically.
fn positive_roots_from_cartan(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: std::collections::HashSet<Root> = std::collections::HashSet::new();
    let mut layer: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort_unstable();
        layer.dedup();
        for r in &layer {
            known.insert(*r);
        }
        all.extend(layer.iter().copied());
        let mut next = Vec::new();
        for b in &layer {
            for i in 0..n {
                let a = Root::simple(n, i);
                let mut p = 0;
                let mut down = *b - a;
                while known.contains(&down) {
                    p += 1;
                    down = down - a;
                }
                let pairing: i32 = (0..n).map(|j| b.coeff(j) * cartan[j][i]).sum();
                if p - pairing > 0 {
                    next.push(*b + a);
                }
            }
        }
        layer = next;
    }
    all.sort_by_key(|r| (r.height(), *r));
    all
}

/// Closed-form count of negative roots of length `l` as printed for the
/// classical families, `None` for exceptional types.
///
/// For type A this returns the printed value `n - l - 1`, which disagrees with
/// enumeration; see [`length_count_findings`].
pub fn closed_form_length_count(kind: DynkinType, n: usize, l: usize) -> Option<i64> {
    let (n, l) = (n as i64, l as i64);
    match kind {
        DynkinType::A => Some(n - l - 1),
        DynkinType::B | DynkinType::C => Some((2 * n - l + 1).div_euclid(2).max(0)),
        DynkinType::D if l < n => Some((2 * n - l + 1).div_euclid(2)),
        DynkinType::D => Some((2 * n - l - 1).div_euclid(2).max(0)),
        _ => None,
    }
}

/// Mismatch between enumeration and a closed-form count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCountFinding {
    pub system: String,
    pub length: usize,
    pub enumerated: usize,
    pub closed_form: i64,
}

/// Compares `|Γ_l|` with the closed form for every length up to the highest root.
pub fn length_count_findings(rs: &RootSystem) -> Vec<LengthCountFinding> {
    let mut out = Vec::new();
    let &[(kind, n)] = rs.components() else {
        return out;
    };
    for l in 1..=rs.max_length() {
        let enumerated = rs.negative_roots_of_length(l).len();
        if let Some(closed) = closed_form_length_count(kind, n, l) {
            if closed != enumerated as i64 {
                out.push(LengthCountFinding {
                    system: rs.label(),
                    length: l,
                    enumerated,
                    closed_form: closed,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: DynkinType, n: usize) -> RootSystem {
        RootSystem::new(kind, n).unwrap()
    }

    #[test]
    fn classical_counts() {
        let expected = [
            (DynkinType::A, 2, 6),
            (DynkinType::A, 7, 56),
            (DynkinType::B, 3, 18),
            (DynkinType::C, 4, 32),
            (DynkinType::D, 4, 24),
            (DynkinType::D, 8, 112),
            (DynkinType::E, 6, 72),
            (DynkinType::E, 7, 126),
            (DynkinType::E, 8, 240),
            (DynkinType::F, 4, 48),
            (DynkinType::G, 2, 12),
        ];
        for (k, n, total) in expected {
            assert_eq!(rs(k, n).num_roots(), total, "{k}{n}");
        }
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(RootSystem::new(DynkinType::D, 3).is_err());
        assert!(RootSystem::new(DynkinType::E, 5).is_err());
        assert!(RootSystem::new(DynkinType::G, 3).is_err());
        assert!(RootSystem::new(DynkinType::A, 0).is_err());
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(rs(DynkinType::A, 1).coxeter_number().unwrap(), 2);
        assert_eq!(rs(DynkinType::A, 2).coxeter_number().unwrap(), 3);
        assert_eq!(rs(DynkinType::E, 8).coxeter_number().unwrap(), 30);
        assert_eq!(rs(DynkinType::G, 2).coxeter_number().unwrap(), 6);
        assert_eq!(rs(DynkinType::F, 4).coxeter_number().unwrap(), 12);
        let prod = RootSystem::from_components(&[(DynkinType::A, 1), (DynkinType::A, 1)]).unwrap();
        assert!(prod.coxeter_number().is_err());
    }

    #[test]
    fn highest_roots_match_tables() {
        assert_eq!(rs(DynkinType::E, 8).highest_root().unwrap().compact(), "23465432");
        assert_eq!(rs(DynkinType::F, 4).highest_root().unwrap().compact(), "2342");
        assert_eq!(rs(DynkinType::G, 2).highest_root().unwrap().compact(), "32");
        assert_eq!(rs(DynkinType::E, 6).highest_root().unwrap().compact(), "122321");
    }

    #[test]
    fn b3_length_two() {
        let b3 = rs(DynkinType::B, 3);
        let g2 = b3.negative_roots_of_length(2);
        let eps: Vec<Vec<i32>> = g2.iter().map(|r| b3.to_epsilon(r).unwrap()).collect();
        assert_eq!(g2.len(), 2);
        assert!(eps.contains(&vec![-1, 0, 1]));
        assert!(eps.contains(&vec![0, -1, 0]));
    }

    #[test]
    fn f4_length_three() {
        let f4 = rs(DynkinType::F, 4);
        let mut got: Vec<String> = f4.negative_roots_of_length(3).iter().map(|r| r.compact()).collect();
        got.sort();
        assert_eq!(got, vec!["0111", "0120", "1110"]);
    }

    #[test]
    fn decrements_and_leaves() {
        let a3 = rs(DynkinType::A, 3);
        assert_eq!(a3.simple_decrement_count(&Root::new(&[-1, -1, -1])), 2);
        let a2 = rs(DynkinType::A, 2);
        assert!(a2.pseudo_leaves(2).is_empty());
        let e6 = rs(DynkinType::E, 6);
        let mut leaves: Vec<String> = e6.pseudo_leaves(7).iter().map(|r| r.compact()).collect();
        leaves.sort();
        assert_eq!(leaves, vec!["011221", "112210"]);
    }

    #[test]
    fn simply_laced_form() {
        let e7 = rs(DynkinType::E, 7);
        for a in e7.roots() {
            for b in e7.roots() {
                if *a == *b || *a == -*b {
                    continue;
                }
                let ip = e7.inner(a, b);
                assert!((-1..=1).contains(&ip));
                assert_eq!(ip == -1, e7.contains(&(*a + *b)));
            }
        }
    }

    #[test]
    fn sum_table_consistent() {
        let g2 = rs(DynkinType::G, 2);
        for i in 0..g2.num_roots() {
            for j in 0..g2.num_roots() {
                let s = g2.root(i) + g2.root(j);
                assert_eq!(g2.sum_index(i, j).map(|k| g2.root(k)), g2.index_of(&s).map(|k| g2.root(k)));
            }
            assert_eq!(g2.root(g2.neg_index(i)), -g2.root(i));
        }
    }

    #[test]
    fn text_round_trip() {
        let c3 = rs(DynkinType::C, 3);
        let parsed = RootSystem::parse_roots(&c3.to_text()).unwrap();
        assert_eq!(parsed, c3.roots());
    }

    #[test]
    fn compact_notation() {
        let r = Root::from_compact("112210", true).unwrap();
        assert_eq!(r.coeffs(), &[-1, -1, -2, -2, -1, 0]);
        assert_eq!(r.compact(), "112210");
        assert_eq!(r.length(), 7);
    }
}
