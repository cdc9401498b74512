use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::tower::{coeff_map, extension_count, functional, induced_on_curve, level_check, Level, ORBIT_BUDGET};
use super::{SuiteConfig, SuiteReport};
use crate::character::d4::{
    half_degree_params, induced, lambda, representative_b, t0_phi, theorem_d4_value, D4Params, D4Reading, H_ROOTS,
};
use crate::character::{b_invariants, complement_pcgs, inner_product, orbit_bfs, run_census, AbelianSection, BInvariants};
use crate::constructions::{d4_curves, tower};
use crate::fqfield::FqElem;
use crate::root_data::Kind;
use crate::unipotent::{Descriptor, GroupContext, ParamSet};

fn central(ctx: &GroupContext) -> [FqElem; 3] {
    let f = ctx.field();
    if f.q() == 2 {
        [f.one(); 3]
    } else {
        [f.one(), f.element(2), f.element(3)]
    }
}

/// Full D4 suite at q = 2^f.
pub fn suite_d4(q: usize, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("d4", json!({"q": q, "seed": cfg.seed, "samples": cfg.samples}));
    let Some(ctx) = r.guard("d4.context", GroupContext::standard(Kind::D4, q)) else {
        return r.finish();
    };
    let f = ctx.field().clone();
    let a = central(&ctx);
    let qq = q as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    r.truth("d4.table.validate", ctx.table().validate().passed(), None);
    let center = ctx.center_verify();
    r.truth("d4.center", center.passed(), None);

    let t_gens = complement_pcgs(&ctx, &[1, 2, 4]);
    let Some(section) = r.guard("d4.section", AbelianSection::new(&ctx, &H_ROOTS)) else {
        return r.finish();
    };
    let Some(mats) = r.guard(
        "d4.section.normalizes",
        t_gens.iter().map(|g| section.conj_matrix(&ctx, g)).collect::<Result<Vec<_>, _>>(),
    ) else {
        return r.finish();
    };
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut sizes = BTreeMap::new();
    let mut t0_per_orbit = Vec::new();
    let mut t0_constant = true;
    for b5 in f.elements() {
        for b6 in f.elements() {
            for b7 in f.elements() {
                let coeffs = [(5, b5), (6, b6), (7, b7), (8, a[0]), (9, a[1]), (10, a[2])];
                let ell = functional(&ctx, &section, &coeffs);
                if seen.contains(&ell) {
                    continue;
                }
                let Some(rep) = r.guard("d4.orbits.bfs", orbit_bfs(&section, &ell, &mats, qq.pow(3), ORBIT_BUDGET)) else {
                    return r.finish();
                };
                let t0s: BTreeSet<FqElem> = rep
                    .orbit
                    .iter()
                    .filter_map(|v| match b_invariants(Kind::D4, &f, &coeff_map(&ctx, &section, v)) {
                        Ok(BInvariants::D4 { t0, .. }) => Some(t0),
                        _ => None,
                    })
                    .collect();
                t0_constant &= t0s.len() == 1;
                t0_per_orbit.extend(t0s);
                *sizes.entry(rep.orbit_size).or_insert(0usize) += 1;
                seen.extend(rep.orbit);
            }
        }
    }
    r.eq("d4.orbits.sizes", sizes, BTreeMap::from([(qq * qq, q)]));
    r.truth("d4.orbits.t0_constant", t0_constant, None);
    r.eq("d4.orbits.t0_separates", t0_per_orbit.iter().collect::<BTreeSet<_>>().len(), q);

    let curves = d4_curves(a);
    let s124 = Descriptor::curve(curves.x124.clone());
    for t0 in f.elements() {
        let b = representative_b(&ctx, a, t0);
        let start = [(5, b[0]), (6, b[1]), (7, b[2]), (8, a[0]), (9, a[1]), (10, a[2])];
        level_check(
            &ctx,
            &mut r,
            &Level {
                anchor: &format!("d4.stabilizer.S124.t0_{}", f.format_short(t0)),
                section: &H_ROOTS,
                start: &start,
                acting: &t_gens,
                acting_order: qq.pow(3),
                claimed: Some(&s124),
                expected_stabilizer: qq,
            },
        );
        let lam = lambda(a, b);
        let x3 = Descriptor::coords(&[3]);
        let anchor = format!("d4.extension.t0_{}", f.format_short(t0));
        if t0.is_zero() {
            let n = extension_count(&ctx, &lam, &[s124.clone(), x3.clone()]);
            if let Some(n) = r.guard(&format!("{anchor}.S124_X3"), n) {
                r.eq(&format!("{anchor}.S124_X3.obstructed"), n, None);
            }
        } else {
            let f124 = Descriptor::Curve(curves.x124.clone(), ParamSet::PrimeMultiples(t0));
            let vacuous = f124.size(&ctx) == s124.size(&ctx);
            let n = extension_count(&ctx, &lam, &[f124, x3.clone()]);
            if let Some(n) = r.guard(&format!("{anchor}.F124_X3"), n) {
                r.eq(&format!("{anchor}.F124_X3.count"), n, Some(2 * q));
            }
            let n = extension_count(&ctx, &lam, &[s124.clone(), x3.clone()]);
            if let Some(n) = r.guard(&format!("{anchor}.S124_X3"), n) {
                if vacuous {
                    r.info(&format!("{anchor}.S124_X3.F124_equals_S124"), n, json!(null));
                } else {
                    r.eq(&format!("{anchor}.S124_X3.obstructed"), n, None);
                }
            }
        }
        let big_a = f.mul(f.mul(a[0], a[1]), a[2]);
        induced_on_curve(
            &ctx,
            &mut r,
            &format!("d4.scalar_locus.x567.t0_{}", f.format_short(t0)),
            &lam,
            &Descriptor::coords(&[1, 2, 3, 4]),
            ctx.order(),
            &curves.x567,
            f.mul(big_a, t0),
            cfg.budget,
        );
    }

    let census = r.guard("d4.census", run_census(&ctx, &tower(Kind::D4), &a));
    if let Some(c) = census {
        r.eq("d4.census.by_degree", c.by_degree.clone(), BTreeMap::from([(qq.pow(3) / 2, 4 * (qq - 1)), (qq.pow(3), 1)]));
        r.eq("d4.census.sum_of_squares", c.sum_of_squares, c.expected_sum_of_squares);
    }

    let zero = f.zero();
    let mut params = vec![D4Params { a, t0: zero, b124: zero, b3: zero }];
    for t0 in f.nonzero_elements() {
        params.extend(half_degree_params(&ctx, a, t0));
    }
    let all = Descriptor::coords(ctx.roots());
    let chars: Vec<_> = params.iter().filter_map(|p| r.guard("d4.induce", induced(&ctx, p))).collect();
    if q == 2 {
        for (i, (p, chi)) in params.iter().zip(&chars).enumerate() {
            let mut witness = None;
            for k in 0..ctx.order() {
                let u = ctx.element_at(k);
                if chi.value_sum(&ctx, &u).to_cyc() != theorem_d4_value(&ctx, p, &u, D4Reading::F124).to_cyc() {
                    witness = Some(ctx.format(&u));
                    break;
                }
            }
            r.truth(&format!("d4.closed_form.char{i}.all_elements"), witness.is_none(), witness);
            for (j, psi) in chars.iter().enumerate().skip(i) {
                let ip = inner_product(&ctx, &all, |g| chi.value_sum(&ctx, g), |g| psi.value_sum(&ctx, g));
                if let Some(ip) = r.guard(&format!("d4.inner_product.{i}.{j}"), ip) {
                    r.eq(&format!("d4.inner_product.{i}.{j}"), ip.to_string(), if i == j { "1" } else { "0" }.to_string());
                }
            }
        }
        if let Some(chi) = chars.first() {
            let v = chi.value(&ctx, &ctx.letter(8, f.one()));
            r.eq("d4.special_value.x8_1", v.as_integer().map(|n| n.to_string()), Some("-8".to_string()));
        }
    } else {
        for k in [0, 1] {
            if let Some(chi) = chars.get(k) {
                let ip = inner_product(&ctx, &all, |g| chi.value_sum(&ctx, g), |g| chi.value_sum(&ctx, g));
                if let Some(ip) = r.guard(&format!("d4.norm.char{k}"), ip) {
                    r.eq(&format!("d4.norm.char{k}"), ip.to_string(), "1".to_string());
                }
            }
        }
        let mut f124_misses = 0usize;
        let mut literal_misses = 0usize;
        let mut witness = None;
        let per_char = (cfg.samples / chars.len().max(1)).max(1);
        for (p, chi) in params.iter().zip(&chars) {
            let tphi = (!p.t0.is_zero()).then(|| t0_phi(&ctx, a, p.t0));
            for k in 0..per_char {
                let mut u = ctx.random_element(&mut rng);
                if let (true, Some(tphi)) = (k % 2 == 1, tphi) {
                    let s = f.element(rng.gen_range(0..q));
                    let mut c: Vec<(usize, FqElem)> = ctx.roots().iter().map(|&r| (r, ctx.coord(&u, r))).collect();
                    for (root, coef) in [(1, a[2]), (2, a[1]), (4, a[0])] {
                        c.iter_mut().find(|x| x.0 == root).expect("root").1 = f.mul(coef, s);
                    }
                    c.iter_mut().find(|x| x.0 == 3).expect("root").1 = tphi;
                    u = ctx.from_coords(&c);
                }
                let v = chi.value(&ctx, &u);
                if v != theorem_d4_value(&ctx, p, &u, D4Reading::F124).to_cyc() {
                    f124_misses += 1;
                    witness.get_or_insert_with(|| ctx.format(&u));
                }
                literal_misses += (v != theorem_d4_value(&ctx, p, &u, D4Reading::Literal).to_cyc()) as usize;
            }
        }
        r.check(
            "d4.closed_form.sampled",
            f124_misses == 0,
            json!({"points": per_char * chars.len(), "mismatches": f124_misses}),
            json!({"mismatches": 0}),
            witness,
        );
        r.info("d4.closed_form.literal_reading_mismatches", literal_misses, json!(null));
    }
    r.skip("d4.good_prime_contrast", "D4 is only paired with p = 2; the good-prime contrast run is not part of this suite");
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_passes() {
        let r = suite_d4(2, &SuiteConfig::default());
        assert!(r.passed(), "{}", r.to_text());
    }
}
