use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::subject::Subject;
use super::{Tally, Theorem};
use crate::bitset::MemberSet;
use crate::classify::{
    all_nonzero_component_submodules_faithful, classify_ideal, find_classical_triple_zero, is_graded_multiplication,
    is_left_duo, is_u_module, is_u_module_exact, graded_radical, Predicate, RingScope, DEFAULT_COVER_BOUND,
};
use crate::construct::submodule_as_module;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::hom::GradedHom;
use crate::module::GradedModule;
use crate::substructure::{closure, is_maximal_in, Ambient, Kind, Scalars, Substructure};
use crate::Elem;

const CWP: Predicate = Predicate::GradedClassicalWeaklyPrime;
const GCWP: Predicate = Predicate::GClassicalWeaklyPrime;

/// Largest `|M|²` for which `M × M` joins the product theorems.
const PRODUCT_LIMIT: usize = 8192;

pub(crate) fn run(t: Theorem, s: &Subject, tally: &mut Tally) -> Result<()> {
    match t {
        Theorem::FaithfulEquivalence => faithful_equivalence(s, tally),
        Theorem::CorXil => cor_xil(s, tally),
        Theorem::ColonLKg | Theorem::ColonLK => colon_l(s, tally),
        Theorem::AnnColon => ann_colon(s, tally),
        Theorem::HomPreimage => hom_preimage(s, tally),
        Theorem::HomImage => hom_image(s, tally),
        Theorem::QuotientDown => quotient(s, tally, false),
        Theorem::QuotientUp => quotient(s, tally, true),
        Theorem::TwoAbsColon => two_abs_colon(s, tally),
        Theorem::TripleZeroExists => triple_zero_exists(s, tally),
        Theorem::NonTripleZero => non_triple_zero(s, tally),
        Theorem::IjlComponents => ijl_components(s, tally),
        Theorem::TripleZeroConsequences => triple_zero_consequences(s, tally),
        Theorem::CubeAnn => cube_ann(s, tally),
        Theorem::ProductProjection => product(s, tally, false),
        Theorem::ProductTripleAnn => product(s, tally, true),
        Theorem::MaximalPrime => maximal_prime(s, tally),
        Theorem::TwoMaximal => two_maximal(s, tally, false),
        Theorem::ComparableOrZero => two_maximal(s, tally, true),
        Theorem::DuoCompletely => duo_completely(s, tally),
        Theorem::DuoChain => duo_chain(s, tally),
        Theorem::RadicalEquality => radical_equality(s, tally),
    }
}

fn sub(s: &Subject, x: &Substructure) -> Value {
    s.coords(x.additive_gens())
}

fn degree(s: &Subject, g: GroupElem) -> Value {
    json!(s.module().ring().group().element_to_vec(g))
}

fn all_in(set: &MemberSet, elems: impl IntoIterator<Item = Elem>) -> bool {
    elems.into_iter().all(|x| set.contains(x))
}

fn group_order(s: &Subject) -> usize {
    s.module().ring().group().order()
}

/// `A_e`-submodules of `M_g` with `(K :_{A_e} L)` and `(0 :_{A_e} L)` for each.
struct Component {
    lat: Arc<Vec<Substructure>>,
    colons: Vec<MemberSet>,
    anns: Vec<MemberSet>,
}

impl Component {
    fn new(s: &Subject, k: &Substructure, g: GroupElem) -> Result<Self> {
        let ctx = s.ctx();
        let lat = ctx.component_lattice(g)?;
        let zero = Substructure::zero(s.module().size(), Kind::Submodule);
        let colons = lat.iter().map(|l| ctx.identity_colon(k, l.additive_gens())).collect();
        let anns = lat.iter().map(|l| ctx.identity_colon(&zero, l.additive_gens())).collect();
        Ok(Self { lat, colons, anns })
    }

    /// `K_g = M_g`.
    fn full(&self, k: &Substructure) -> bool {
        self.lat.last().is_some_and(|mg| mg.is_subset(k))
    }
}

fn products(r: &crate::ring::FiniteRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| r.mul(x, y))).collect()
}

/// `0 ≠ IJL ⊆ K ⇒ IL ⊆ K or JL ⊆ K` over ideals of `A_e` and `L ⊆ M_g`.
fn ijl_condition(s: &Subject, comp: &Component) -> Result<bool> {
    let rc = s.ctx().ring_context();
    let r = rc.ring().ring();
    let ideals = rc.identity_ideals()?;
    for i in ideals.iter() {
        for j in ideals.iter() {
            let prods = products(r, i.additive_gens(), j.additive_gens());
            for (colon, ann) in comp.colons.iter().zip(&comp.anns) {
                let contained = all_in(colon, prods.iter().copied());
                let nonzero = !all_in(ann, prods.iter().copied());
                if contained && nonzero && !i.members().is_subset(colon) && !j.members().is_subset(colon) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn faithful_equivalence(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    for g in 0..group_order(s) {
        let faithful = all_nonzero_component_submodules_faithful(s.ctx(), g)?;
        for (ki, k) in lat.iter().enumerate() {
            let comp = Component::new(s, k, g)?;
            if !faithful || comp.full(k) {
                tally.vacuous();
                continue;
            }
            let lhs = s.holds_at(ki, g, GCWP)?;
            let rhs = ijl_condition(s, &comp)?;
            tally.check(
                lhs == rhs,
                || json!({"K": sub(s, k), "g": degree(s, g)}),
                || format!("g-classical-weakly-prime is {lhs} but the ideal condition is {rhs}"),
            );
        }
    }
    Ok(())
}

fn cor_xil(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let rc = s.ctx().ring_context().clone();
    let r = rc.ring().ring();
    let ideals = rc.identity_ideals()?;
    for g in 0..group_order(s) {
        let faithful = all_nonzero_component_submodules_faithful(s.ctx(), g)?;
        for (ki, k) in lat.iter().enumerate() {
            let comp = Component::new(s, k, g)?;
            if !faithful || comp.full(k) || !s.holds_at(ki, g, GCWP)? {
                tally.vacuous();
                continue;
            }
            let mut failure = None;
            'scan: for &x in rc.identity_elements() {
                for i in ideals.iter() {
                    let xi: Vec<Elem> = i.additive_gens().iter().map(|&a| r.mul(x, a)).collect();
                    let ix: Vec<Elem> = i.additive_gens().iter().map(|&a| r.mul(a, x)).collect();
                    for (li, (colon, ann)) in comp.colons.iter().zip(&comp.anns).enumerate() {
                        let concluded = colon.contains(x) || i.members().is_subset(colon);
                        for (side, prods) in [("xIL", &xi), ("IxL", &ix)] {
                            let premise = all_in(colon, prods.iter().copied()) && !all_in(ann, prods.iter().copied());
                            if premise && !concluded {
                                failure = Some((x, i.clone(), li, side));
                                break 'scan;
                            }
                        }
                    }
                }
            }
            tally.check(
                failure.is_none(),
                || {
                    let (x, i, li, _) = failure.as_ref().expect("failure recorded");
                    json!({
                        "K": sub(s, k), "g": degree(s, g), "x": s.ring_coords(&[*x]),
                        "I": s.ring_coords(i.additive_gens()), "L": sub(s, &comp.lat[*li]),
                    })
                },
                || format!("{} is nonzero and inside K, but neither xL nor IL is", failure.as_ref().unwrap().3),
            );
        }
    }
    Ok(())
}

/// Weakly-prime-left-ideal verdicts of `A_e`, memoised by member set.
struct AeVerdicts<'a> {
    s: &'a Subject,
    seen: HashMap<MemberSet, bool>,
}

impl<'a> AeVerdicts<'a> {
    fn new(s: &'a Subject) -> Self {
        Self { s, seen: HashMap::new() }
    }

    fn weakly_prime(&mut self, members: &MemberSet) -> Result<bool> {
        if let Some(&v) = self.seen.get(members) {
            return Ok(v);
        }
        let rc = self.s.ctx().ring_context();
        let add = rc.ring().ring().additive();
        let p = Substructure::from_members(add, Kind::IdentityLeftIdeal, members.clone());
        let v = classify_ideal(rc, &p, Predicate::WeaklyPrimeLeftIdealOfAe)?.holds;
        self.seen.insert(members.clone(), v);
        Ok(v)
    }
}

fn colon_l(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let mut verdicts = AeVerdicts::new(s);
    for g in 0..group_order(s) {
        for (ki, k) in lat.iter().enumerate() {
            let comp = Component::new(s, k, g)?;
            let cwp = s.holds_at(ki, g, GCWP)?;
            for li in 0..comp.lat.len() {
                let l = &comp.lat[li];
                let faithful = comp.anns[li].len() == 1;
                if !cwp || !faithful || l.is_subset(k) {
                    tally.vacuous();
                    continue;
                }
                let ok = verdicts.weakly_prime(&comp.colons[li])?;
                tally.check(
                    ok,
                    || json!({"K": sub(s, k), "g": degree(s, g), "L": sub(s, l)}),
                    || "(K :_{A_e} L) is not a weakly prime left ideal of A_e".into(),
                );
            }
        }
    }
    Ok(())
}

fn ann_colon(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let mut verdicts = AeVerdicts::new(s);
    for g in 0..group_order(s) {
        for (ki, k) in lat.iter().enumerate() {
            let comp = Component::new(s, k, g)?;
            let last = comp.lat.len() - 1;
            let ann = &comp.anns[last];
            let ann_proper = ann.len() < s.ctx().ring_context().identity_elements().len();
            if !s.holds_at(ki, g, GCWP)? || !ann_proper || !verdicts.weakly_prime(ann)? {
                tally.vacuous();
                continue;
            }
            let ok = verdicts.weakly_prime(&comp.colons[last])?;
            tally.check(
                ok,
                || json!({"K": sub(s, k), "g": degree(s, g)}),
                || "(K_g :_{A_e} M_g) is not a weakly prime left ideal of A_e".into(),
            );
        }
    }
    Ok(())
}

/// Inclusions `N ↪ M` for every nonzero graded `N`, with `N` as a subject.
fn inclusions(s: &Subject) -> Result<Vec<(usize, Subject, GradedHom)>> {
    let lat = s.lattice()?;
    let mut out = Vec::new();
    for (ni, n) in lat.iter().enumerate() {
        if n.is_zero() {
            continue;
        }
        let (module, inclusion) = submodule_as_module(s.module(), n)?;
        let name = format!("{}/N{ni}", s.name());
        out.push((ni, Subject::with_ring(&name, s.ctx().ring_context().clone(), module), inclusion));
    }
    Ok(out)
}

fn hom_preimage(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    for (ni, n, f) in inclusions(s)? {
        for ki in s.proper()? {
            let p = f.preimage(&lat[ki])?;
            if !s.holds(ki, CWP)? || p.is_whole() {
                tally.vacuous();
                continue;
            }
            let pi = n.ctx().index_of(&p)?;
            let ok = n.holds(pi, CWP)?;
            tally.check(
                ok,
                || json!({"N": sub(s, &lat[ni]), "K": sub(s, &lat[ki])}),
                || "f⁻¹(K) is not graded classical weakly prime in N".into(),
            );
        }
    }
    Ok(())
}

fn hom_image(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let quotients = s.quotients()?;
    for (ti, entry) in quotients.iter().enumerate() {
        let Some((q, p)) = entry else { continue };
        for ki in s.proper()? {
            let k = &lat[ki];
            if !lat[ti].is_subset(k) || !s.holds(ki, CWP)? {
                tally.vacuous();
                continue;
            }
            let image = p.image(k)?;
            let ok = q.holds(q.ctx().index_of(&image)?, CWP)?;
            tally.check(
                ok,
                || json!({"T": sub(s, &lat[ti]), "K": sub(s, k)}),
                || "f(K) is not graded classical weakly prime in M/T".into(),
            );
        }
    }
    Ok(())
}

fn quotient(s: &Subject, tally: &mut Tally, up: bool) -> Result<()> {
    let lat = s.lattice()?;
    let quotients = s.quotients()?;
    for (ti, entry) in quotients.iter().enumerate() {
        let Some((q, p)) = entry else { continue };
        let t = &lat[ti];
        for ki in s.proper()? {
            let k = &lat[ki];
            if !(t.is_subset(k) && t.len() < k.len()) {
                continue;
            }
            let kq = q.ctx().index_of(&p.image(k)?)?;
            let (hyp, concl, what) = if up {
                let hyp = s.holds(ti, CWP)? && q.holds(kq, CWP)?;
                (hyp, hyp && s.holds(ki, CWP)?, "K")
            } else {
                let hyp = s.holds(ki, CWP)?;
                (hyp, hyp && q.holds(kq, CWP)?, "K/T")
            };
            if !hyp {
                tally.vacuous();
                continue;
            }
            tally.check(
                concl,
                || json!({"T": sub(s, t), "K": sub(s, k)}),
                || format!("{what} is not graded classical weakly prime"),
            );
        }
    }
    Ok(())
}

fn colon_ideal(s: &Subject, ki: usize) -> Result<Substructure> {
    let add = s.module().ring().ring().additive();
    Ok(Substructure::from_members(add, Kind::TwoSidedIdeal, s.ctx().colon_whole(ki)?))
}

fn two_abs_colon(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let rc = s.ctx().ring_context();
    tally.note("(K :_A M) weakly prime in the elementwise form 0 ≠ xAy ⊆ P ⇒ x ∈ P or y ∈ P");
    for ki in s.proper()? {
        let hyp = s.holds(ki, Predicate::GradedWeakly2Absorbing)?
            && classify_ideal(rc, &colon_ideal(s, ki)?, Predicate::GradedWeaklyPrimeElementwise)?.holds;
        if !hyp {
            tally.vacuous();
            continue;
        }
        tally.check(
            s.holds(ki, CWP)?,
            || json!({"K": sub(s, &lat[ki])}),
            || "K is not graded classical weakly prime".into(),
        );
    }
    Ok(())
}

fn triple_zero_exists(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    for ki in s.proper()? {
        if !s.holds(ki, CWP)? || s.holds(ki, Predicate::GradedClassicalPrime)? {
            tally.vacuous();
            continue;
        }
        let found = find_classical_triple_zero(s.ctx(), &lat[ki])?.is_some();
        tally.check(found, || json!({"K": sub(s, &lat[ki])}), || "no graded classical triple zero".into());
    }
    Ok(())
}

fn non_triple_zero(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let rc = s.ctx().ring_context().clone();
    let h = rc.homogeneous();
    for ki in s.proper()? {
        if !s.holds(ki, CWP)? {
            tally.vacuous();
            continue;
        }
        let colons = s.ctx().colons(ki)?;
        let mut failure = None;
        'scan: for xi in 0..h.len() {
            for yi in 0..h.len() {
                let gens = rc.xay(xi, yi);
                for li in 0..lat.len() {
                    let colon = &colons[li];
                    if !all_in(colon, gens.iter().copied()) || colon.contains(h[xi]) || colon.contains(h[yi]) {
                        continue;
                    }
                    let zero = all_in(s.ctx().ann(li)?, gens.iter().copied());
                    if !zero {
                        failure = Some((h[xi], h[yi], li));
                        break 'scan;
                    }
                }
            }
        }
        tally.check(
            failure.is_none(),
            || {
                let (x, y, li) = failure.expect("failure recorded");
                json!({"K": sub(s, &lat[ki]), "x": s.ring_coords(&[x]), "y": s.ring_coords(&[y]), "L": sub(s, &lat[li])})
            },
            || "xAyL ⊆ K, not a triple zero, yet xL ⊄ K and yL ⊄ K".into(),
        );
    }
    Ok(())
}

/// Members of `set` lying in `A_g`.
fn component_part(s: &Subject, set: &MemberSet, g: GroupElem) -> Vec<Elem> {
    s.module().ring().component(g).into_iter().filter(|&x| set.contains(x)).collect()
}

fn ijl_components(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let rc = s.ctx().ring_context().clone();
    let ring = rc.ring().clone();
    let r = ring.ring();
    let ideals = rc.graded_ideals()?;
    let n = group_order(s);
    for ki in s.proper()? {
        if !s.holds(ki, CWP)? {
            tally.vacuous();
            continue;
        }
        let colons = s.ctx().colons(ki)?;
        let zeros = s.triple_zeros(ki)?;
        for i in ideals.iter() {
            for j in ideals.iter() {
                let prods = products(r, i.additive_gens(), j.additive_gens());
                for li in 0..lat.len() {
                    let colon = &colons[li];
                    let inside = all_in(colon, prods.iter().copied());
                    let blocked = zeros
                        .iter()
                        .any(|z| z.l_index == li && i.contains(z.x) && j.contains(z.y));
                    if !inside || blocked {
                        tally.vacuous();
                        continue;
                    }
                    let bad = (0..n).find(|&g| {
                        let ig = component_part(s, i.members(), g);
                        let jg = component_part(s, j.members(), g);
                        !all_in(colon, ig) && !all_in(colon, jg)
                    });
                    tally.check(
                        bad.is_none(),
                        || {
                            json!({
                                "K": sub(s, &lat[ki]), "I": s.ring_coords(i.additive_gens()),
                                "J": s.ring_coords(j.additive_gens()), "L": sub(s, &lat[li]),
                                "g": degree(s, bad.expect("failure recorded")),
                            })
                        },
                        || "neither I_g L nor J_g L lies in K".into(),
                    );
                }
            }
        }
    }
    Ok(())
}

/// Additive generators of `(K :_{A_g} M)` for every `g`.
fn graded_colon_gens(s: &Subject, ki: usize) -> Result<Vec<Vec<Elem>>> {
    let whole = s.ctx().colon_whole(ki)?;
    let ring = s.module().ring();
    let add = ring.ring().additive();
    Ok((0..group_order(s))
        .map(|g| {
            let members = MemberSet::from_elems(ring.size(), component_part(s, &whole, g));
            Substructure::from_members(add, Kind::Subgroup, members).additive_gens().to_vec()
        })
        .collect())
}

fn triple_zero_consequences(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let ring = s.module().ring().clone();
    let r = ring.ring();
    let basis = s.ctx().ring_context().basis().to_vec();
    for ki in s.proper()? {
        if !s.holds(ki, CWP)? {
            tally.vacuous();
            continue;
        }
        let cg = graded_colon_gens(s, ki)?;
        let ann_k = s.ctx().ann(ki)?.clone();
        for z in s.triple_zeros(ki)?.iter() {
            let ann_l = s.ctx().ann(z.l_index)?;
            let gx = ring.degree_of(z.x).expect("triple-zero entries are homogeneous");
            let gy = ring.degree_of(z.y).expect("triple-zero entries are homogeneous");
            let mut failed = Vec::new();
            if !basis.iter().all(|&b| ann_k.contains(r.mul(r.mul(z.x, b), z.y))) {
                failed.push(1);
            }
            let left: Vec<Elem> = cg[gy].iter().map(|&c| r.mul(z.x, c)).collect();
            let right: Vec<Elem> = cg[gx].iter().map(|&c| r.mul(c, z.y)).collect();
            if !all_in(ann_l, left.iter().copied()) {
                failed.push(2);
            }
            if !all_in(ann_l, right.iter().copied()) {
                failed.push(3);
            }
            if !all_in(&ann_k, left.iter().copied()) {
                failed.push(5);
            }
            if !all_in(&ann_k, right.iter().copied()) {
                failed.push(6);
            }
            if gx == gy {
                let squares = products(r, &cg[gx], &cg[gx]);
                if !all_in(ann_l, squares.iter().copied()) {
                    failed.push(4);
                }
                if !all_in(&ann_k, squares.iter().copied()) {
                    failed.push(7);
                }
            }
            failed.sort_unstable();
            tally.check(
                failed.is_empty(),
                || {
                    json!({
                        "K": sub(s, &lat[ki]), "x": s.ring_coords(&[z.x]), "y": s.ring_coords(&[z.y]),
                        "L": s.coords(&z.l),
                    })
                },
                || format!("items {failed:?} fail"),
            );
        }
    }
    Ok(())
}

fn cube_ann(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let ring = s.module().ring().clone();
    let r = ring.ring();
    let e = ring.identity();
    let whole = s.ctx().whole_index()?;
    let ann_m = s.ctx().ann(whole)?.clone();
    let m_faithful = ann_m.len() == 1;
    for ki in s.proper()? {
        if !s.holds(ki, CWP)? {
            tally.vacuous();
            continue;
        }
        let zeros = s.triple_zeros(ki)?;
        let k_faithful = s.ctx().ann(ki)?.len() == 1;
        let in_e = zeros
            .iter()
            .any(|z| ring.degree_of(z.x) == Some(e) && ring.degree_of(z.y) == Some(e));
        let mut squared = Vec::new();
        for z in zeros.iter() {
            let g = ring.degree_of(z.x);
            if g.is_none() || g != ring.degree_of(z.y) || squared.contains(&g.unwrap()) {
                continue;
            }
            if k_faithful || s.ctx().ann(z.l_index)?.len() == 1 {
                squared.push(g.unwrap());
            }
        }
        if !in_e && squared.is_empty() {
            tally.vacuous();
            continue;
        }
        let cg = graded_colon_gens(s, ki)?;
        let mut failed = Vec::new();
        if in_e {
            let cube = products(r, &products(r, &cg[e], &cg[e]), &cg[e]);
            if !all_in(&ann_m, cube.iter().copied()) {
                failed.push("(K :_{A_e} M)³ ⊄ Ann_{A_e}(M)".to_string());
            }
            if m_faithful && cube.iter().any(|&c| c != 0) {
                failed.push("M faithful but (K :_{A_e} M)³ ≠ 0".to_string());
            }
        }
        squared.sort_unstable();
        for &g in &squared {
            if products(r, &cg[g], &cg[g]).iter().any(|&c| c != 0) {
                failed.push(format!("(K :_{{A_g}} M)² ≠ 0 at g = {:?}", ring.group().element_to_vec(g)));
            }
        }
        tally.check(failed.is_empty(), || json!({"K": sub(s, &lat[ki])}), || failed.join("; "));
    }
    Ok(())
}

/// `K × S` inside `M × S`.
fn product_sub(p: &GradedModule, k: &Substructure, s_size: usize) -> Substructure {
    let members = MemberSet::from_elems(
        p.size(),
        k.elements().flat_map(|x| (0..s_size as Elem).map(move |y| x * s_size as Elem + y)),
    );
    Substructure::from_members(p.additive(), Kind::Submodule, members)
}

fn product(s: &Subject, tally: &mut Tally, triple: bool) -> Result<()> {
    let lat = s.lattice()?;
    let m = s.module();
    let ring = m.ring().clone();
    let r = ring.ring();
    let mut partners: Vec<(&str, Arc<GradedModule>)> = vec![("0", Arc::new(GradedModule::zero(ring.clone())))];
    if m.size() * m.size() <= PRODUCT_LIMIT {
        partners.push(("M", m.clone()));
    }
    let basis = s.ctx().ring_context().basis().to_vec();
    for (label, other) in partners {
        let p = Arc::new(m.direct_product(&other)?);
        let ps = Subject::with_ring(&format!("{}×{label}", s.name()), s.ctx().ring_context().clone(), p.clone());
        let gens = other.basis_elems();
        let ann_s = MemberSet::from_elems(
            ring.size(),
            (0..ring.size() as Elem).filter(|&a| gens.iter().all(|&v| other.act(a, v) == 0)),
        );
        for ki in s.proper()? {
            let ks = product_sub(&p, &lat[ki], other.size());
            let hyp = ps.holds(ps.ctx().index_of(&ks)?, CWP)?;
            if !triple {
                if !hyp {
                    tally.vacuous();
                    continue;
                }
                tally.check(
                    s.holds(ki, CWP)?,
                    || json!({"K": sub(s, &lat[ki]), "S": label}),
                    || "K × S is graded classical weakly prime but K is not".into(),
                );
                continue;
            }
            if !hyp {
                tally.vacuous();
                continue;
            }
            for z in s.triple_zeros(ki)?.iter() {
                let ok = basis.iter().all(|&b| ann_s.contains(r.mul(r.mul(z.x, b), z.y)));
                tally.check(
                    ok,
                    || {
                        json!({
                            "K": sub(s, &lat[ki]), "S": label, "x": s.ring_coords(&[z.x]),
                            "y": s.ring_coords(&[z.y]), "L": s.coords(&z.l),
                        })
                    },
                    || "xAy ⊄ Ann_A(S)".into(),
                );
            }
        }
    }
    Ok(())
}

fn maximal_prime(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    for ki in s.proper()? {
        if !is_maximal_in(&lat[ki], &lat) {
            tally.vacuous();
            continue;
        }
        tally.check(
            s.holds(ki, Predicate::GradedPrime)?,
            || json!({"K": sub(s, &lat[ki])}),
            || "graded maximal submodule is not graded prime".into(),
        );
    }
    Ok(())
}

fn two_maximal(s: &Subject, tally: &mut Tally, pairs: bool) -> Result<()> {
    let lat = s.lattice()?;
    let proper = s.proper()?;
    let mut hyp = is_graded_multiplication(s.ctx())?.holds;
    for &ki in &proper {
        if !hyp {
            break;
        }
        hyp = s.holds(ki, Predicate::GradedWeaklyPrime)?;
    }
    if !pairs {
        if !hyp {
            tally.vacuous();
            return Ok(());
        }
        let maximal: Vec<usize> = proper.iter().copied().filter(|&i| is_maximal_in(&lat[i], &lat)).collect();
        tally.check(
            maximal.len() <= 2,
            || json!({"maximal": maximal.iter().map(|&i| sub(s, &lat[i])).collect::<Vec<_>>()}),
            || format!("{} graded maximal submodules", maximal.len()),
        );
        return Ok(());
    }
    for xi in 0..lat.len() {
        for yi in 0..lat.len() {
            if xi == yi {
                continue;
            }
            if !hyp {
                tally.vacuous();
                continue;
            }
            let (x, y) = (&lat[xi], &lat[yi]);
            let comparable = x.is_subset(y) || y.is_subset(x);
            let iy = s.ctx().colon_whole(xi)?.is_subset(s.ctx().ann(yi)?);
            let jx = s.ctx().colon_whole(yi)?.is_subset(s.ctx().ann(xi)?);
            tally.check(
                comparable || (iy && jx),
                || json!({"X": sub(s, x), "Y": sub(s, y)}),
                || "X, Y incomparable and IY or JX nonzero".into(),
            );
        }
    }
    Ok(())
}

fn duo_completely(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let m = s.module();
    let ring = m.ring().clone();
    let r = ring.ring();
    let duo = is_left_duo(&ring, RingScope::Whole).holds;
    let h = s.ctx().ring_context().homogeneous().to_vec();
    let basis = s.ctx().ring_context().basis().to_vec();
    let hm = s.ctx().homogeneous().to_vec();
    let cyclic: Vec<Vec<Elem>> = if duo {
        hm.iter()
            .map(|&v| Ok(closure(Ambient::Module(m), &[v], Scalars::Ring, None)?.additive_gens().to_vec()))
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    for ki in s.proper()? {
        if !duo || !s.holds(ki, CWP)? {
            tally.vacuous();
            continue;
        }
        let k = &lat[ki];
        let completely = s.holds(ki, Predicate::GradedCompletelyClassicalWeaklyPrime)?;
        let mut failure = None;
        'scan: for &x in &h {
            for &y in &h {
                let xy = r.mul(x, y);
                for (zi, &v) in hm.iter().enumerate() {
                    let xyv = m.act(xy, v);
                    if !k.contains(xyv) || k.contains(m.act(x, v)) || k.contains(m.act(y, v)) {
                        continue;
                    }
                    let am = &cyclic[zi];
                    let zero = basis.iter().all(|&b| {
                        let xby = r.mul(r.mul(x, b), y);
                        basis.iter().all(|&c| am.iter().all(|&w| m.act(r.mul(xby, c), w) == 0))
                    });
                    let x_out = am.iter().any(|&w| !k.contains(m.act(x, w)));
                    let y_out = am.iter().any(|&w| !k.contains(m.act(y, w)));
                    if !(zero && x_out && y_out) {
                        failure = Some((x, y, v));
                        break 'scan;
                    }
                }
            }
        }
        tally.check(
            completely && failure.is_none(),
            || json!({"K": sub(s, k)}),
            || match failure {
                Some((x, y, v)) => format!(
                    "x = {:?}, y = {:?}, m = {:?}: xym ∈ K, (x, y, Am) not a triple zero, xm, ym ∉ K",
                    r.decode(x),
                    r.decode(y),
                    m.decode(v)
                ),
                None => "K is not graded completely classical weakly prime".into(),
            },
        );
    }
    Ok(())
}

/// The seven statements of the Duo chain for `K` at `g`.
fn chain_statements(s: &Subject, ki: usize, g: GroupElem, comp: &Component) -> Result<[bool; 7]> {
    let lat = s.lattice()?;
    let k = &lat[ki];
    let m = s.module();
    let ctx = s.ctx();
    let rc = ctx.ring_context();
    let r = rc.ring().ring();
    let e = rc.identity_elements();
    let mg = m.component(g);
    let ideals = rc.identity_ideals()?;
    let zero = Substructure::zero(m.size(), Kind::Submodule);

    let s1 = s.holds_at(ki, g, GCWP)?;

    let s2 = e.iter().all(|&x| {
        e.iter().all(|&y| {
            let xy = r.mul(x, y);
            mg.iter().all(|&v| {
                let w = m.act(xy, v);
                w == 0 || !k.contains(w) || k.contains(m.act(x, v)) || k.contains(m.act(y, v))
            })
        })
    });

    let into_k: Vec<MemberSet> = e
        .iter()
        .map(|&a| MemberSet::from_elems(m.size(), mg.iter().copied().filter(|&v| k.contains(m.act(a, v)))))
        .collect();
    let into_zero: Vec<MemberSet> = e
        .iter()
        .map(|&a| MemberSet::from_elems(m.size(), mg.iter().copied().filter(|&v| m.act(a, v) == 0)))
        .collect();
    let pos = |a: Elem| rc.e_index(a).expect("A_e is closed under multiplication");
    let s3 = (0..e.len()).all(|xi| {
        (0..e.len()).all(|yi| {
            let p = pos(r.mul(e[xi], e[yi]));
            into_k[p] == into_zero[p] || into_k[p] == into_k[xi] || into_k[p] == into_k[yi]
        })
    });

    let colons = &comp.colons;
    let anns = &comp.anns;
    let s4 = e.iter().all(|&x| {
        e.iter().all(|&y| {
            let xy = r.mul(x, y);
            (0..comp.lat.len()).all(|li| {
                !(colons[li].contains(xy) && !anns[li].contains(xy))
                    || colons[li].contains(x)
                    || colons[li].contains(y)
            })
        })
    });

    let mut s5 = true;
    'five: for &x in e {
        for (li, l) in comp.lat.iter().enumerate() {
            if colons[li].contains(x) {
                continue;
            }
            let xl: Vec<Elem> = l.additive_gens().iter().map(|&v| m.act(x, v)).collect();
            let c = ctx.identity_colon(k, &xl);
            if c != ctx.identity_colon(&zero, &xl) && c != colons[li] {
                s5 = false;
                break 'five;
            }
        }
    }

    let s6 = e.iter().all(|&x| {
        ideals.iter().all(|i| {
            let ix: Vec<Elem> = i.additive_gens().iter().map(|&a| r.mul(a, x)).collect();
            (0..comp.lat.len()).all(|li| {
                let premise = all_in(&colons[li], ix.iter().copied()) && !all_in(&anns[li], ix.iter().copied());
                !premise || i.members().is_subset(&colons[li]) || colons[li].contains(x)
            })
        })
    });

    let mut s7 = true;
    'seven: for i in ideals.iter() {
        for (li, l) in comp.lat.iter().enumerate() {
            if i.members().is_subset(&colons[li]) {
                continue;
            }
            let il: Vec<Elem> = i
                .additive_gens()
                .iter()
                .flat_map(|&a| l.additive_gens().iter().map(move |&v| m.act(a, v)))
                .collect();
            let c = ctx.identity_colon(k, &il);
            if c != ctx.identity_colon(&zero, &il) && c != colons[li] {
                s7 = false;
                break 'seven;
            }
        }
    }
    Ok([s1, s2, s3, s4, s5, s6, s7])
}

fn duo_chain(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let ring = s.module().ring().clone();
    let duo = is_left_duo(&ring, RingScope::Identity).holds;
    tally.note(format!("u-module hypothesis checked with cover bound {DEFAULT_COVER_BOUND}"));
    for g in 0..group_order(s) {
        // `Some(true)`: bounded and exact checks agree; `None`: only the bounded check passes.
        let u = match is_u_module(s.ctx(), g, DEFAULT_COVER_BOUND) {
            Ok(v) if !v.holds => Some(false),
            Ok(_) => is_u_module_exact(s.ctx(), g)?.then_some(true),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        for (ki, k) in lat.iter().enumerate() {
            let comp = Component::new(s, k, g)?;
            if !duo || u == Some(false) || comp.full(k) {
                tally.vacuous();
                continue;
            }
            if u.is_none() {
                tally.undetermined();
                continue;
            }
            let st = chain_statements(s, ki, g, &comp)?;
            let broken: Vec<String> = (0..6)
                .filter(|&i| st[i] && !st[i + 1])
                .map(|i| format!("({})⇒({})", i + 1, i + 2))
                .collect();
            tally.check(
                broken.is_empty(),
                || json!({"K": sub(s, k), "g": degree(s, g), "statements": st}),
                || format!("implications {} fail", broken.join(", ")),
            );
        }
    }
    Ok(())
}

fn radical_equality(s: &Subject, tally: &mut Tally) -> Result<()> {
    let lat = s.lattice()?;
    let ring = s.module().ring().clone();
    let e = ring.identity();
    let duo = is_left_duo(&ring, RingScope::Identity).holds;
    let add = ring.ring().additive();
    let in_e = |set: &MemberSet| {
        let members = MemberSet::from_elems(ring.size(), component_part(s, set, e));
        Substructure::from_members(add, Kind::IdentityIdeal, members)
    };
    let whole = s.ctx().whole_index()?;
    let ann = in_e(s.ctx().ann(whole)?);
    for ki in s.proper()? {
        let hyp = duo
            && s.holds(ki, CWP)?
            && s
                .triple_zeros(ki)?
                .iter()
                .any(|z| ring.degree_of(z.x) == Some(e) && ring.degree_of(z.y) == Some(e));
        if !hyp {
            tally.vacuous();
            continue;
        }
        let colon = in_e(&s.ctx().colon_whole(ki)?);
        let lhs = graded_radical(&ring, &ann, RingScope::Identity)?;
        let rhs = graded_radical(&ring, &colon, RingScope::Identity)?;
        tally.check(
            lhs == rhs,
            || json!({"K": sub(s, &lat[ki])}),
            || "Grad(Ann_{A_e}(M)) ≠ Grad((K :_{A_e} M))".into(),
        );
    }
    Ok(())
}
