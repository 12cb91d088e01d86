//! Exhaustive instance checks on a built group.

use std::collections::{BTreeSet, HashSet};

use super::matrix::{ldu_diagonal, p_valuation, Element};
use super::{
    build_group_with_budget, overgroup_family, subgroup_from_concave, FiniteParahoricGroup,
    GroupError, GroupType, Quotient, Subgroup,
};
use crate::concave::{enumerate_overgroups, pseudo_borel_function, ConcaveFunction};
use crate::exec::Execution;
use crate::report::{Check, Report};

fn violations(name: &str, n: usize, examples: &[String]) -> Check {
    let computed = match examples.first() {
        Some(e) if n > 0 => format!("{n} violations, e.g. {e}"),
        _ => format!("{n} violations"),
    };
    Check::new(name, "0 violations", computed, n == 0)
}

/// `w_a(t) w_a(1)^{-1}` with `w_a(t) = u_a(t) u_{-a}(-1/t) u_a(t)`.
fn coroot_element(g: &FiniteParahoricGroup, i: usize, t: u32) -> Element {
    let m = g.modulus_of_root(i);
    let neg = g.rs.neg_index(i);
    let w = |t: u32| {
        let ti = super::matrix::inv_mod(t, m).expect("unit") as i64;
        let a = g.root_element(i, t as i64);
        g.mul(&g.mul(&a, &g.root_element(neg, -ti)), &a)
    };
    g.mul(&w(t), &g.inverse(&w(1)))
}

fn congruent_to_identity(g: &FiniteParahoricGroup, x: &Element) -> bool {
    let id = g.identity();
    g.blocks()
        .iter()
        .all(|b| (0..b.dim * b.dim).all(|k| (x[b.offset + k] as u32 - id[b.offset + k] as u32 + b.modulus).is_multiple_of(b.p)))
}

fn units(m: u32, p: u32) -> impl Iterator<Item = u32> {
    (1..m).filter(move |x| x % p != 0)
}

/// Roots `k a + l b` (k, l > 0) in the order of increasing `k + l`.
fn positive_combinations(g: &FiniteParahoricGroup, a: usize, b: usize) -> Vec<(usize, u32, u32)> {
    let rs = &g.rs;
    let (ra, rb) = (rs.root(a), rs.root(b));
    let mut out = Vec::new();
    for s in 2..=6u32 {
        for k in 1..s {
            let l = s - k;
            let mut c = vec![0; rs.rank()];
            for (t, x) in c.iter_mut().enumerate() {
                *x = k as i32 * ra.coeff(t) + l as i32 * rb.coeff(t);
            }
            if let Some(idx) = rs.index_of(&crate::root_system::Root::new(&c)) {
                out.push((idx, k, l));
            }
        }
    }
    out
}

/// Writes `c` as an ordered product of `u_gamma(x_gamma)` over `gammas`,
/// returning the coordinates, or `None` if something is left over.
fn peel(g: &FiniteParahoricGroup, c: &Element, gammas: &[(usize, u32, u32)]) -> Option<Vec<i64>> {
    let mut rest = *c;
    let mut coords = Vec::new();
    for &(idx, _, _) in gammas {
        let x = g.root_coordinate(idx, &rest);
        coords.push(x);
        rest = g.mul(&g.root_element(idx, -x), &rest);
    }
    (rest == g.identity()).then_some(coords)
}

fn generated_set(g: &FiniteParahoricGroup, gens: &[Element]) -> HashSet<Element> {
    let id = g.identity();
    let mut seen: HashSet<Element> = HashSet::from([id]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = g.mul(s, &x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Order formula, torus, filtration, commutator relations and the torus
/// parts of opposite root pairs, all checked exhaustively.
pub fn verify_parahoric_axioms(g: &FiniteParahoricGroup) -> Report {
    let mut rep = Report::new(g.instance());
    let rs = &g.rs;
    let h = g.h;
    let n = rs.num_roots();

    let order = g.cosets().len() as u128 * g.borel_order();
    rep.push(Check::equal("order_formula", g.order_formula(), order));

    let tg = g.torus_generators();
    let abelian = tg
        .iter()
        .all(|x| tg.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
    rep.push(Check::new("torus_abelian", true, abelian, abelian));
    let torus = generated_set(g, &tg);
    rep.push(Check::equal("torus_order", g.torus_order(), torus.len()));

    let mut bad = Vec::new();
    for i in 0..n {
        let (p, m) = (g.root_prime(i), g.modulus_of_root(i));
        for x in 0..m as i64 {
            for y in 0..m as i64 {
                if g.mul(&g.root_element(i, x), &g.root_element(i, y)) != g.root_element(i, x + y) {
                    bad.push(format!("{} at ({x}, {y})", rs.root(i)));
                }
            }
        }
        for k in 0..=h {
            let step = p.pow(k.min(h)) as i64;
            let set: HashSet<Element> = (0..m as i64)
                .step_by(step as usize)
                .map(|x| g.root_element(i, x))
                .collect();
            let want = p.pow(h - k) as usize;
            if set.len() != want {
                bad.push(format!("|U_{{{},{k}}}| = {} not {want}", rs.root(i), set.len()));
            }
        }
    }
    rep.push(violations("root_filtration", bad.len(), &bad));

    let mut contain = Vec::new();
    let mut onto = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || b == rs.neg_index(a) {
                continue;
            }
            let gammas = positive_combinations(g, a, b);
            let (pa, pb) = (g.root_prime(a), g.root_prime(b));
            let (ma, mb) = (g.modulus_of_root(a), g.modulus_of_root(b));
            for k in 0..h {
                for l in 0..h {
                    let mut proj: BTreeSet<i64> = BTreeSet::new();
                    for x in (0..ma as i64).step_by(pa.pow(k) as usize) {
                        for y in (0..mb as i64).step_by(pb.pow(l) as usize) {
                            let c = g.commutator(&g.root_element(a, x), &g.root_element(b, y));
                            match peel(g, &c, &gammas) {
                                None => contain.push(format!(
                                    "[{}, {}] at ({x}, {y})",
                                    rs.root(a),
                                    rs.root(b)
                                )),
                                Some(coords) => {
                                    for (&(idx, s, t), &v) in gammas.iter().zip(&coords) {
                                        let need = s * k + t * l;
                                        let got = p_valuation(v as u32, g.root_prime(idx), h);
                                        if got.is_some_and(|v| v < need) {
                                            contain.push(format!(
                                                "[{}, {}] component {} at ({x}, {y})",
                                                rs.root(a),
                                                rs.root(b),
                                                rs.root(idx)
                                            ));
                                        }
                                        if s == 1 && t == 1 {
                                            proj.insert(v);
                                        }
                                    }
                                }
                            }
                        }
                    }
                    if let Some(&(idx, _, _)) = gammas.iter().find(|&&(_, s, t)| s == 1 && t == 1) {
                        let p = g.root_prime(idx);
                        let want = if k + l >= h { 1 } else { p.pow(h - k - l) as usize };
                        if proj.len() != want {
                            onto.push(format!(
                                "[U_{{{},{k}}}, U_{{{},{l}}}] projects to {} values, not {want}",
                                rs.root(a),
                                rs.root(b),
                                proj.len()
                            ));
                        }
                    }
                }
            }
        }
    }
    rep.push(violations("commutator_containment", contain.len(), &contain));
    rep.push(violations("commutator_projection_onto", onto.len(), &onto));

    let mut dims = Vec::new();
    let mut acts = Vec::new();
    let mut lie = Vec::new();
    for a in 0..n {
        let (p, m) = (g.root_prime(a), g.modulus_of_root(a));
        let neg = rs.neg_index(a);
        let image: HashSet<Element> = units(m, p).map(|t| coroot_element(g, a, t)).collect();
        for i in 0..=h {
            let step = p.pow(i.min(h)) as usize;
            let mut parts = Vec::new();
            for x in 0..m as i64 {
                for y in (0..m as i64).step_by(step) {
                    let c = g.commutator(&g.root_element(a, x), &g.root_element(neg, y));
                    if let Some(d) = ldu_diagonal(g.blocks(), &c) {
                        parts.push(d);
                    }
                }
            }
            let hai = generated_set(g, &parts);
            if i == 0 {
                // Over F_3 the residues 1 + s + s^2 of these parts are all 1.
                let congruent = hai.iter().filter(|x| congruent_to_identity(g, x)).count();
                let want = p.pow(h - 1) as usize;
                if !hai.is_subset(&image) || congruent != want || (p > 3 && hai != image) {
                    dims.push(format!(
                        "H_{{{},0}} has {} points, {congruent} congruent to 1, image has {}",
                        rs.root(a),
                        hai.len(),
                        image.len()
                    ));
                }
                continue;
            }
            let want = if i >= h { 1 } else { p.pow(h - i) as usize };
            if hai.len() != want {
                dims.push(format!("|H_{{{},{i}}}| = {} not {want}", rs.root(a), hai.len()));
            }
            for j in 0..=h {
                let mut vals = BTreeSet::new();
                for t in &hai {
                    for x in (0..m as i64).step_by(p.pow(j.min(h)) as usize) {
                        let c = g.commutator(t, &g.root_element(a, x));
                        match g.root_parameter(a, &c) {
                            Some(v) => {
                                vals.insert(v);
                            }
                            None => acts.push(format!("[H_{{{},{i}}}, U] leaves U", rs.root(a))),
                        }
                    }
                }
                let want = if i + j >= h { 1 } else { p.pow(h - i - j) as usize };
                let min_ok = vals
                    .iter()
                    .all(|&v| p_valuation(v as u32, p, h).is_none_or(|w| w >= i + j));
                if vals.len() != want || !min_ok {
                    acts.push(format!(
                        "[H_{{{},{i}}}, U_{{{},{j}}}] has {} values, want U_{{{},{}}}",
                        rs.root(a),
                        rs.root(a),
                        vals.len(),
                        rs.root(a),
                        i + j
                    ));
                }
            }
        }
        let weight = if h >= 2 {
            let c = g.root_character(a, &coroot_element(g, a, 1 + p)) as i64;
            ((c - 1) / p as i64).rem_euclid(p as i64)
        } else {
            (rs.pairing(&rs.root(a), &rs.root(a)) as i64).rem_euclid(p as i64)
        };
        if weight == 0 {
            lie.push(format!("weight of {} on its coroot vanishes mod p", rs.root(a)));
        }
    }
    rep.push(violations("torus_pair_dimension", dims.len(), &dims));
    rep.push(violations("torus_pair_action", acts.len(), &acts));
    rep.push(violations("torus_pair_lie_action", lie.len(), &lie));
    rep
}

/// Reduction `G(Z/p^h) -> G(Z/p^{h-1})`: homomorphism on generators,
/// kernel of order `p^{dim G}`, and index equal to the smaller group.
pub fn verify_reduction(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    if g.h < 2 || g.factors.len() != 1 {
        return Err(GroupError::DepthTooSmall(g.h));
    }
    let f = g.factors[0];
    let small = build_group_with_budget(f.kind, g.isogeny, f.p, g.h - 1, g.budget)?;
    let mut rep = Report::new(g.instance());
    let red = |x: &Element| super::matrix::reduce(g.blocks(), small.blocks(), x);
    let gens = g.generators();
    let hom = gens.iter().all(|x| {
        gens.iter()
            .all(|y| red(&g.mul(x, y)) == small.mul(&red(x), &red(y)))
    });
    rep.push(Check::new("reduction_homomorphism", true, hom, hom));
    let big = g.cosets().len() as u128 * g.borel_order();
    let little = small.cosets().len() as u128 * small.borel_order();
    let dim = super::group_dimension(f.kind);
    let kernel_order = (f.p as u128).pow(dim);
    rep.push(Check::equal("reduction_index", kernel_order, big / little));
    let q = f.p.pow(g.h - 1);
    let mut kgens: Vec<Element> = (0..g.rs.num_roots())
        .map(|i| g.root_element(i, q as i64))
        .collect();
    for k in 0..g.rs.rank() {
        let mut ts = vec![1; g.rs.rank()];
        ts[k] = 1 + q;
        kgens.push(g.torus_element(&ts));
    }
    if kernel_order <= g.budget.elements as u128 {
        let kernel = g.enumerate(&kgens)?;
        let id = small.identity();
        let inside = kernel.iter().all(|x| red(x) == id);
        rep.push(Check::new("reduction_kernel_trivial_image", true, inside, inside));
        rep.push(Check::equal("reduction_kernel_order", kernel_order, kernel.len()));
    }
    Ok(rep)
}

fn require_a1(g: &FiniteParahoricGroup) -> Result<(), GroupError> {
    if g.factors.len() != 1 || g.factors[0].kind != GroupType::A1 {
        return Err(GroupError::Unsupported(format!(
            "rank one check on {}",
            g.label()
        )));
    }
    Ok(())
}

fn borel_zero(g: &FiniteParahoricGroup) -> Result<Subgroup, GroupError> {
    let rs = &g.rs;
    let values = (0..rs.num_roots())
        .map(|i| if rs.is_positive_index(i) { 0 } else { 1.min(g.h as i32) })
        .collect();
    let f = ConcaveFunction::special(rs, values, g.h)?;
    subgroup_from_concave(g, &f)
}

/// The rank one double-class statements for `B`, and for `U` on the left
/// with `B` on the right.
pub fn verify_rank1_classes(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    require_a1(g)?;
    let mut rep = Report::new(g.instance());
    let exec = Execution::default();
    let (p, h) = (g.p(), g.h);
    let m = p.pow(h);
    let cs = g.cosets();
    let q = Quotient::trivial(cs);
    let b = g.borel();
    let u = g.unipotent();
    let b0: HashSet<usize> = cs
        .orbit(g, &borel_zero(g)?.generators)
        .into_iter()
        .map(|(pt, _)| pt)
        .collect();
    let bb = q.partition(g, &b.generators, &b, exec);
    let ub = q.partition(g, &u.generators, &b, exec);
    for (name, t) in [("rank1_big_cell_one_b_class", &bb), ("rank1_big_cell_one_u_class", &ub)] {
        let outside: BTreeSet<u32> = (0..cs.len())
            .filter(|pt| !b0.contains(pt))
            .map(|pt| t.class_of[pt])
            .collect();
        rep.push(Check::equal(name, 1, outside.len()));
    }

    let neg = 1;
    let xs: Vec<u32> = (0..m).step_by(p as usize).collect();
    let point = |x: u32| cs.locate(g, &g.root_element(neg, x as i64));
    let torus = generated_set(g, &g.torus_generators());
    let mut uviol = Vec::new();
    let mut tviol = Vec::new();
    let mut vviol = Vec::new();
    let mut conv = Vec::new();
    for &x in &xs {
        let ux = g.root_element(neg, x as i64);
        let conj: HashSet<i64> = torus
            .iter()
            .map(|t| {
                let c = g.mul(&g.mul(&g.inverse(t), &ux), t);
                g.root_parameter(neg, &c).expect("torus normalizes root groups")
            })
            .collect();
        for &y in &xs {
            let (vx, vy) = (p_valuation(x, p, h), p_valuation(y, p, h));
            let same_u = ub.class_of[point(x)] == ub.class_of[point(y)];
            let predicted = match (vx, vy) {
                (None, None) => true,
                (Some(i), Some(j)) if i == j => {
                    let d = (y + m - x) % m;
                    p_valuation(d, p, h).is_none_or(|v| v >= 2 * i)
                }
                _ => false,
            };
            if same_u != predicted {
                uviol.push(format!("x={x}, x'={y}"));
            }
            let same_b = bb.class_of[point(x)] == bb.class_of[point(y)];
            if same_b != conj.contains(&(y as i64)) {
                tviol.push(format!("x={x}, x'={y}"));
            }
            if same_b && vx != vy {
                vviol.push(format!("x={x}, x'={y}"));
            }
            if !same_b && vx == vy {
                conv.push(format!("x={x}, x'={y}"));
            }
        }
    }
    rep.push(violations("rank1_u_classes_by_valuation", uviol.len(), &uviol));
    rep.push(violations("rank1_b_classes_torus_conjugate", tviol.len(), &tviol));
    rep.push(violations("rank1_b_classes_same_valuation", vviol.len(), &vviol));
    if g.is_adjoint() {
        rep.push(violations("rank1_b_classes_valuation_converse", conv.len(), &conv));
    }
    Ok(rep)
}

/// Checks the prime hypotheses attached to the exterior double classes.
pub fn require_clbi_hypotheses(g: &FiniteParahoricGroup) -> Result<(), GroupError> {
    for f in &g.factors {
        if f.p == 2 {
            return Err(GroupError::EvenPrime(2));
        }
        if f.kind != GroupType::C2 && f.kind.connection_index() % f.p == 0 {
            return Err(GroupError::ConnectionIndex {
                kind: f.kind.to_string(),
                p: f.p,
                index: f.kind.connection_index(),
            });
        }
    }
    Ok(())
}

/// Every double class outside `B_Delta` is right-stable under some `B_a`,
/// with `a` constant on classes modulo `B_Delta`; both for `B` and for
/// `R_u(B)` on the left.
pub fn verify_clbi(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    require_clbi_hypotheses(g)?;
    let mut rep = Report::new(g.instance());
    let exec = Execution::default();
    let cs = g.cosets();
    let q = Quotient::trivial(cs);
    let fb = pseudo_borel_function(&g.rs, g.h);
    let family = overgroup_family(g, &fb)?;
    let full = family.last().expect("nonempty family");
    let singles: Vec<_> = family.iter().filter(|e| e.roots.len() == 1).collect();
    let bd = &full.subgroup;
    let inside: HashSet<usize> = cs.orbit(g, &bd.generators).into_iter().map(|(x, _)| x).collect();
    let modd = q.partition(g, &bd.generators, bd, exec);
    let b = g.borel();
    for (tag, left) in [("b", g.borel()), ("radical", g.borel_radical())] {
        let t0 = q.partition(g, &left.generators, &b, exec);
        let ta: Vec<_> = singles
            .iter()
            .map(|e| q.partition(g, &left.generators, &e.subgroup, exec))
            .collect();
        let mut missing = Vec::new();
        let mut by_outer: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        let mut exterior = 0;
        for c in 0..t0.count() {
            let pt = t0.members[c];
            if inside.contains(&pt) {
                continue;
            }
            exterior += 1;
            let valid: Vec<usize> = (0..singles.len())
                .filter(|&k| ta[k].sizes[ta[k].class_of[pt] as usize] == t0.sizes[c])
                .collect();
            if valid.is_empty() {
                missing.push(format!("class of point {pt}"));
            }
            let mask = valid.iter().fold(0usize, |m, &k| m | (1 << k));
            by_outer.entry(modd.class_of[pt]).or_default().push(mask);
        }
        let varying: Vec<String> = by_outer
            .iter()
            .filter(|(_, masks)| masks.iter().fold(usize::MAX, |a, &m| a & m) == 0)
            .map(|(d, _)| format!("outer class {d}"))
            .collect();
        rep.push(Check::new(
            format!("clbi_{tag}_exterior_classes"),
            "at least 1",
            exterior,
            exterior > 0 || cs.len() == inside.len(),
        ));
        rep.push(violations(&format!("clbi_{tag}_alpha_exists"), missing.len(), &missing));
        rep.push(violations(
            &format!("clbi_{tag}_alpha_constant_mod_b_delta"),
            varying.len(),
            &varying,
        ));
    }
    Ok(rep)
}

/// Factor-wise representatives multiply to a system of representatives of
/// `U \ P_f / B` in a product of two rank one groups, for every `f` that is
/// zero on the positive roots.
pub fn verify_dcprod(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    if g.factors.len() != 2 || g.factors.iter().any(|f| f.kind != GroupType::A1) {
        return Err(GroupError::Unsupported(format!("product check on {}", g.label())));
    }
    let mut rep = Report::new(g.instance());
    let exec = Execution::default();
    let h = g.h as i32;
    let cs = g.cosets();
    let q = Quotient::trivial(cs);
    let u = g.unipotent();
    let b = g.borel();
    let ub = q.partition(g, &u.generators, &b, exec);
    let class = |x: &Element| ub.class_of[cs.locate(g, x)];
    let weyl = |i: usize| {
        let a = g.root_element(i, 1);
        g.mul(&g.mul(&a, &g.root_element(g.rs.neg_index(i), -1)), &a)
    };
    let mut incomplete = Vec::new();
    let mut redundant = Vec::new();
    let mut uncovered = Vec::new();
    for a1 in 0..=h {
        for a2 in 0..=h {
            let vals = [a1, a2];
            let f = ConcaveFunction::special(&g.rs, vec![0, 0, a1, a2], g.h)?;
            let pf = subgroup_from_concave(g, &f)?;
            let pf_classes: BTreeSet<u32> = cs
                .orbit(g, &pf.generators)
                .into_iter()
                .map(|(pt, _)| ub.class_of[pt])
                .collect();
            let mut reps: Vec<Vec<Element>> = Vec::new();
            for i in 0..2 {
                let mut gv = [0, 0, h, h];
                gv[2 + i] = vals[i];
                let gi = ConcaveFunction::special(&g.rs, gv.to_vec(), g.h)?;
                let pi = subgroup_from_concave(g, &gi)?;
                let targets: BTreeSet<u32> = cs
                    .orbit(g, &pi.generators)
                    .into_iter()
                    .map(|(pt, _)| ub.class_of[pt])
                    .collect();
                let neg = g.rs.neg_index(i);
                let mut ns = vec![g.identity()];
                if vals[i] == 0 {
                    ns.push(weyl(i));
                }
                let step = g.root_prime(neg).pow(vals[i].min(h) as u32) as i64;
                let m = g.modulus_of_root(neg) as i64;
                let mut chosen: Vec<Element> = Vec::new();
                let mut hit = BTreeSet::new();
                for n in &ns {
                    let mut x = 0;
                    while x < m {
                        let cand = g.mul(n, &g.root_element(neg, x));
                        if hit.insert(class(&cand)) {
                            chosen.push(cand);
                        }
                        x += step;
                    }
                }
                if hit != targets {
                    incomplete.push(format!("f = ({a1}, {a2}), factor {}", i + 1));
                }
                reps.push(chosen);
            }
            let mut seen = BTreeSet::new();
            for r1 in &reps[0] {
                for r2 in &reps[1] {
                    if !seen.insert(class(&g.mul(r1, r2))) {
                        redundant.push(format!("f = ({a1}, {a2})"));
                    }
                }
            }
            if seen != pf_classes {
                uncovered.push(format!("f = ({a1}, {a2})"));
            }
        }
    }
    rep.push(violations("dcprod_factor_representatives", incomplete.len(), &incomplete));
    rep.push(violations("dcprod_irredundant", redundant.len(), &redundant));
    rep.push(violations("dcprod_complete", uncovered.len(), &uncovered));
    Ok(rep)
}

pub const MAX_INTERVAL_ORBITS: usize = 20;

/// All subgroups between `B` and `G` found as unions of `B`-orbits on
/// `G/B`, compared with the concave enumeration; each `P_f` is its own
/// normalizer.
pub fn verify_overgroup_classification(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    let mut rep = Report::new(g.instance());
    let exec = Execution::default();
    let cs = g.cosets();
    let q = Quotient::trivial(cs);
    let b = g.borel();
    let orbits = q.partition(g, &b.generators, &b, exec);
    let k = orbits.count();
    if k > MAX_INTERVAL_ORBITS {
        return Err(GroupError::Budget {
            what: "B-orbits for the interval search",
            needed: k as u64,
            limit: MAX_INTERVAL_ORBITS as u64,
        });
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for pt in 0..cs.len() {
        members[orbits.class_of[pt] as usize].push(pt);
    }
    let base = orbits.class_of[0] as usize;
    let mut interval: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0..(1usize << k) {
        if mask & (1 << base) == 0 {
            continue;
        }
        let pts: Vec<usize> = (0..k)
            .filter(|c| mask & (1 << c) != 0)
            .flat_map(|c| members[c].iter().copied())
            .collect();
        let set: HashSet<usize> = pts.iter().copied().collect();
        let closed = pts.iter().all(|&x| {
            let gx = cs.rep(x);
            pts.iter().all(|&y| set.contains(&cs.locate(g, &g.mul(gx, cs.rep(y)))))
        });
        if closed {
            let mut sorted = pts;
            sorted.sort_unstable();
            interval.insert(sorted);
        }
    }
    let funcs = enumerate_overgroups(&g.rs, g.h, exec)?;
    let mut from_functions: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut not_normal = Vec::new();
    for f in &funcs {
        let pf = subgroup_from_concave(g, f)?;
        let mut pts: Vec<usize> = cs.orbit(g, &pf.generators).into_iter().map(|(x, _)| x).collect();
        pts.sort_unstable();
        let set: HashSet<usize> = pts.iter().copied().collect();
        for x in 0..cs.len() {
            if set.contains(&x) {
                continue;
            }
            let gx = cs.rep(x);
            let normalizes = pf
                .generators
                .iter()
                .all(|s| set.contains(&cs.locate(g, &g.conjugate(gx, s))));
            if normalizes {
                not_normal.push(format!("{} normalized by point {x}", f.to_text(&g.rs)));
                break;
            }
        }
        from_functions.insert(pts);
    }
    rep.push(Check::equal("interval_size", funcs.len(), interval.len()));
    rep.push(Check::new(
        "interval_distinct_functions",
        funcs.len(),
        from_functions.len(),
        from_functions.len() == funcs.len(),
    ));
    let same = interval == from_functions;
    rep.push(Check::new("interval_matches_concave", true, same, same));
    rep.push(violations("self_normalizing", not_normal.len(), &not_normal));
    Ok(rep)
}

/// For every positive system `w(Phi+)`, an element conjugating `B` onto the
/// pseudo-Borel subgroup of that system, searched among coset representatives.
pub fn pseudo_borel_conjugators(
    g: &FiniteParahoricGroup,
) -> Result<Vec<(Vec<usize>, Option<Element>)>, GroupError> {
    if g.factors.iter().any(|f| f.kind == GroupType::C2) {
        return Err(GroupError::Unsupported("conjugator search for C2".into()));
    }
    let rs = &g.rs;
    let start: BTreeSet<usize> = (0..rs.num_positive()).collect();
    let mut systems = vec![start.clone()];
    let mut seen = BTreeSet::from([start]);
    let mut k = 0;
    while k < systems.len() {
        let s = systems[k].clone();
        k += 1;
        for i in 0..rs.rank() {
            let a = rs.simple_root(i);
            let next: BTreeSet<usize> = s
                .iter()
                .map(|&j| rs.index_of(&rs.reflect(&rs.root(j), &a)).expect("reflection"))
                .collect();
            if seen.insert(next.clone()) {
                systems.push(next);
            }
        }
    }
    let cs = g.cosets();
    let b = g.borel();
    let mut out = Vec::new();
    for sys in systems {
        let forbidden: Vec<(usize, usize, usize)> = (0..rs.num_roots())
            .filter(|j| !sys.contains(j))
            .flat_map(|j| {
                let img = &g.roots[j];
                img.entries.iter().map(move |&(r, c, _)| (img.block, r, c))
            })
            .collect();
        let in_target = |y: &Element| {
            forbidden.iter().all(|&(bl, r, c)| g.blocks[bl].at(y, r, c) == 0)
        };
        let found = (0..cs.len()).map(|x| *cs.rep(x)).find(|gx| {
            b.generators.iter().all(|s| in_target(&g.conjugate(gx, s)))
        });
        out.push((sys.into_iter().collect(), found));
    }
    Ok(out)
}

pub fn verify_pseudo_borel_conjugacy(g: &FiniteParahoricGroup) -> Result<Report, GroupError> {
    let found = pseudo_borel_conjugators(g)?;
    let mut rep = Report::new(g.instance());
    let missing = found.iter().filter(|(_, x)| x.is_none()).count();
    rep.push(Check::new(
        "pseudo_borel_conjugacy",
        format!("{} of {} positive systems", found.len(), found.len()),
        format!("{} of {} positive systems", found.len() - missing, found.len()),
        missing == 0,
    ));
    Ok(rep)
}
