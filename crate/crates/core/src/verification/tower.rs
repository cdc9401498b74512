use std::collections::BTreeMap;

use rand::Rng;
use serde_json::json;

use super::SuiteReport;
use crate::character::{b_invariants, extension_set, orbit_bfs, scalar_locus, AbelianSection, BInvariants, InducedCharacter, LinearCharacter};
use crate::fqfield::FqElem;
use crate::unipotent::{Descriptor, GroupContext, OneParamCurve, UniElem};

pub(super) const ORBIT_BUDGET: usize = 1_000_000;

/// A functional on the section with the given coefficients, zero elsewhere.
pub(super) fn functional(ctx: &GroupContext, section: &AbelianSection, coeffs: &[(usize, FqElem)]) -> Vec<u32> {
    let b: Vec<FqElem> = section
        .roots()
        .iter()
        .map(|r| coeffs.iter().find(|(i, _)| i == r).map_or(FqElem::ZERO, |&(_, b)| b))
        .collect();
    section.functional(ctx, &b)
}

pub(super) fn coeff_map(ctx: &GroupContext, section: &AbelianSection, ell: &[u32]) -> BTreeMap<usize, FqElem> {
    let mut m: BTreeMap<usize, FqElem> = ctx.roots().iter().map(|&r| (r, FqElem::ZERO)).collect();
    m.extend(section.roots().iter().copied().zip(section.coeffs(ctx, ell)));
    m
}

pub(super) fn character_on(ctx: &GroupContext, roots: &[usize], coeffs: &[(usize, FqElem)]) -> LinearCharacter {
    let mut m: BTreeMap<usize, FqElem> = roots.iter().map(|&r| (r, ctx.field().zero())).collect();
    m.extend(coeffs.iter().copied());
    LinearCharacter::new(Descriptor::coords(roots), m)
}

pub(super) struct Level<'a> {
    pub anchor: &'a str,
    pub section: &'a [usize],
    pub start: &'a [(usize, FqElem)],
    pub acting: &'a [UniElem],
    pub acting_order: u128,
    pub claimed: Option<&'a Descriptor>,
    pub expected_stabilizer: u128,
}

/// BFS orbit of the start functional; the stabilizer order must match, and
/// every generator of the claimed subgroup must fix the start.
pub(super) fn level_check(ctx: &GroupContext, r: &mut SuiteReport, lvl: &Level) -> Option<u128> {
    let section = r.guard(&format!("{}.section", lvl.anchor), AbelianSection::new(ctx, lvl.section))?;
    let start = functional(ctx, &section, lvl.start);
    let mats = lvl.acting.iter().map(|g| section.conj_matrix(ctx, g)).collect::<Result<Vec<_>, _>>();
    let mats = r.guard(&format!("{}.normalizes", lvl.anchor), mats)?;
    let rep = r.guard(&format!("{}.orbit", lvl.anchor), orbit_bfs(&section, &start, &mats, lvl.acting_order, ORBIT_BUDGET))?;
    r.eq(&format!("{}.orbit_times_stabilizer", lvl.anchor), rep.orbit_size * rep.stabilizer_order, lvl.acting_order);
    r.eq(&format!("{}.stabilizer_order", lvl.anchor), rep.stabilizer_order, lvl.expected_stabilizer);
    if let Some(claimed) = lvl.claimed {
        let mut witness = None;
        for g in claimed.generators(ctx) {
            let fixed = section.conj_matrix(ctx, &g).map(|m| section.act(&m, &start) == start);
            if fixed != Ok(true) {
                witness = Some(ctx.format(&g));
                break;
            }
        }
        r.truth(&format!("{}.claimed_fixes", lvl.anchor), witness.is_none(), witness);
        r.eq(&format!("{}.claimed_order", lvl.anchor), claimed.size(ctx), rep.stabilizer_order);
    }
    Some(rep.stabilizer_order)
}

/// The scalar locus at `level` equals the curve, and ℓ(curve(t)) = Tr(B t).
#[allow(clippy::too_many_arguments)]
pub(super) fn locus_check(
    ctx: &GroupContext,
    r: &mut SuiteReport,
    anchor: &str,
    section_roots: &[usize],
    coeffs: &[(usize, FqElem)],
    level: &[usize],
    gens: &[UniElem],
    curve: &OneParamCurve,
    b: FqElem,
) {
    let f = ctx.field();
    let Some(section) = r.guard(&format!("{anchor}.section"), AbelianSection::new(ctx, section_roots)) else {
        return;
    };
    let ell = functional(ctx, &section, coeffs);
    let Some(locus) = r.guard(&format!("{anchor}.locus"), scalar_locus(ctx, &section, &ell, level, gens)) else {
        return;
    };
    r.eq(&format!("{anchor}.locus_size"), locus.len(), f.q());
    let points: Vec<UniElem> = f.elements().map(|t| curve.eval(ctx, t)).collect();
    r.truth(&format!("{anchor}.locus_is_curve"), points.iter().all(|x| locus.contains(x)), None);
    let mut witness = None;
    for t in f.elements() {
        let v = section.vector(ctx, &curve.eval(ctx, t));
        if v.map(|v| section.pair(&ell, &v)) != Some(f.trace(f.mul(b, t))) {
            witness = Some(f.format(t));
            break;
        }
    }
    r.truth(&format!("{anchor}.value_is_phi_b"), witness.is_none(), witness);
}

/// λ^G on the curve equals deg·φ(B t) for every t, by brute-force induction.
#[allow(clippy::too_many_arguments)]
pub(super) fn induced_on_curve(
    ctx: &GroupContext,
    r: &mut SuiteReport,
    anchor: &str,
    lambda: &LinearCharacter,
    transversal: &Descriptor,
    ambient_order: u128,
    curve: &OneParamCurve,
    b: FqElem,
    budget: u128,
) {
    let f = ctx.field();
    let Some(chi) = r.guard(anchor, InducedCharacter::new(ctx, lambda.clone(), transversal, ambient_order, false, budget)) else {
        return;
    };
    let deg = chi.degree() as i64;
    let mut measured = Vec::new();
    let mut ok = true;
    for t in f.elements() {
        let v = chi.value_sum(ctx, &curve.eval(ctx, t));
        let e = f.trace(f.mul(b, t)) as usize;
        let mut want = vec![0i64; f.p() as usize];
        want[e] = deg;
        ok &= v.counts() == want.as_slice();
        measured.push(v.counts().to_vec());
    }
    r.check(anchor, ok, json!({"degree": deg, "counts_by_exponent": measured}), json!({"degree_times_phi_b": true}), None);
}

/// The selected invariant is unchanged by each generator on random samples.
#[allow(clippy::too_many_arguments)]
pub(super) fn invariance_check<R: Rng>(
    ctx: &GroupContext,
    r: &mut SuiteReport,
    anchor: &str,
    section_roots: &[usize],
    fixed: &[(usize, FqElem)],
    random_roots: &[usize],
    gens: &[UniElem],
    pick: fn(&BInvariants) -> FqElem,
    samples: usize,
    rng: &mut R,
) {
    let f = ctx.field();
    let Some(section) = r.guard(&format!("{anchor}.section"), AbelianSection::new(ctx, section_roots)) else {
        return;
    };
    let mats = r.guard(
        &format!("{anchor}.normalizes"),
        gens.iter().map(|g| section.conj_matrix(ctx, g)).collect::<Result<Vec<_>, _>>(),
    );
    let Some(mats) = mats else { return };
    let mut witness = None;
    let mut checked = 0usize;
    'outer: for _ in 0..samples {
        let mut coeffs = fixed.to_vec();
        for &rt in random_roots {
            coeffs.push((rt, f.element(rng.gen_range(0..f.q()))));
        }
        let ell = functional(ctx, &section, &coeffs);
        let inv = |v: &[u32]| b_invariants(ctx.kind(), f, &coeff_map(ctx, &section, v)).map(|b| pick(&b));
        let base = inv(&ell);
        for (m, g) in mats.iter().zip(gens) {
            checked += 1;
            if inv(&section.act(m, &ell)) != base || base.is_err() {
                witness = Some(ctx.format(g));
                break 'outer;
            }
        }
    }
    r.check(&format!("{anchor}.constant_on_orbits"), witness.is_none(), checked, "all", witness);
}

/// Number of elements of the curve (all q points) fixing the character.
pub(super) fn curve_stabilizer(ctx: &GroupContext, eta: &LinearCharacter, curve: &OneParamCurve) -> Result<usize, String> {
    let mut n = 0;
    for t in ctx.field().elements() {
        if eta.is_fixed_by(ctx, &curve.eval(ctx, t)).map_err(|e| e.to_string())? {
            n += 1;
        }
    }
    Ok(n)
}

/// Extension counts for the given targets, `None` where obstructed.
pub(super) fn extension_count(ctx: &GroupContext, lambda: &LinearCharacter, extra: &[Descriptor]) -> Result<Option<usize>, String> {
    match extension_set(ctx, lambda, extra).map_err(|e| e.to_string())? {
        Ok(v) => Ok(Some(v.len())),
        Err(_) => Ok(None),
    }
}
