use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::census::count_family;
use super::tower::{
    character_on, curve_stabilizer, extension_count, induced_on_curve, invariance_check, level_check, locus_check, Level,
};
use super::{SuiteConfig, SuiteReport};
use crate::character::{b_invariants, complement_pcgs, BInvariants};
use crate::constructions::{complement, e6_f2_f4, e6_r2, e6_r3, e6_s1, e6_s1_core, e6_s2, tower};
use crate::fqfield::FqElem;
use crate::root_data::Kind;
use crate::unipotent::{Descriptor, GroupContext};

const H4: [usize; 5] = [17, 18, 19, 20, 21];
const H4H3: [usize; 10] = [17, 18, 19, 20, 21, 12, 13, 14, 15, 16];
const H: [usize; 13] = [17, 18, 19, 20, 21, 12, 13, 14, 15, 16, 8, 9, 10];
const H3: [usize; 5] = [12, 13, 14, 15, 16];
const H2: [usize; 3] = [8, 9, 10];

fn with_central(one: FqElem, extra: &[(usize, FqElem)]) -> Vec<(usize, FqElem)> {
    let mut v: Vec<(usize, FqElem)> = H4.iter().map(|&r| (r, one)).collect();
    v.extend_from_slice(extra);
    v
}

/// Full E6 suite at q = 3^f.
pub fn suite_e6(q: usize, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("e6", json!({"q": q, "seed": cfg.seed, "samples": cfg.samples}));
    let Some(ctx) = r.guard("e6.context", GroupContext::standard(Kind::E6, q)) else {
        return r.finish();
    };
    let f = ctx.field().clone();
    let (zero, one) = (f.zero(), f.one());
    let qq = q as u128;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    r.truth("e6.table.validate", ctx.table().validate().passed(), None);
    r.truth("e6.center", ctx.center_verify().passed(), None);
    for c in [e6_s1_core(&ctx), e6_s2(&ctx), e6_r3(&ctx), e6_r2(&ctx)] {
        let rep = c.closure_check(&ctx, 1000, &mut rng);
        r.check(&format!("e6.closure.{}", c.name), rep.passed(), rep.pairs_checked, "closed", rep.violation.map(|v| format!("{v:?}")));
    }

    let t_gens = complement_pcgs(&ctx, &tower(Kind::E6).complement);
    let s1 = e6_s1(&ctx);
    let s1_gens = s1.generators(&ctx);
    let s2 = Descriptor::curve(e6_s2(&ctx));
    let t_order = qq.pow(7);

    for (tag, b16) in [("b3_0", zero), ("b3_1", one)] {
        let start = with_central(one, &[(16, b16)]);
        level_check(
            &ctx,
            &mut r,
            &Level {
                anchor: &format!("e6.stabilizer.S1.{tag}"),
                section: &H4H3,
                start: &start,
                acting: &t_gens,
                acting_order: t_order,
                claimed: Some(&s1),
                expected_stabilizer: qq.pow(3),
            },
        );
    }
    level_check(
        &ctx,
        &mut r,
        &Level {
            anchor: "e6.stabilizer.b3_nonzero_trivial",
            section: &H,
            start: &with_central(one, &[(16, one)]),
            acting: &t_gens,
            acting_order: t_order,
            claimed: None,
            expected_stabilizer: 1,
        },
    );
    for b2 in f.elements() {
        level_check(
            &ctx,
            &mut r,
            &Level {
                anchor: &format!("e6.stabilizer.S2.b2_{}", f.format_short(b2)),
                section: &H,
                start: &with_central(one, &[(10, b2)]),
                acting: &s1_gens,
                acting_order: qq.pow(3),
                claimed: Some(&s2),
                expected_stabilizer: qq,
            },
        );
    }

    locus_check(&ctx, &mut r, "e6.scalar_locus.R3", &H4H3, &with_central(one, &[(16, one)]), &H3, &t_gens, &e6_r3(&ctx), one);
    locus_check(&ctx, &mut r, "e6.scalar_locus.R2", &H, &with_central(one, &[(10, one)]), &H2, &s1_gens, &e6_r2(&ctx), one);

    let h_order = qq.pow(13);
    let lam3 = character_on(&ctx, &H, &with_central(one, &[(16, one)]));
    let u_transversal = Descriptor::product(vec![Descriptor::coords(&[4]), complement(&ctx, Kind::E6)]);
    induced_on_curve(&ctx, &mut r, "e6.induced.U_on_R3", &lam3, &u_transversal, ctx.order(), &e6_r3(&ctx), one, cfg.budget);
    let lam2 = character_on(&ctx, &H, &with_central(one, &[(10, one)]));
    let s1_transversal = Descriptor::product(vec![Descriptor::coords(&[4]), s1.clone()]);
    induced_on_curve(
        &ctx,
        &mut r,
        "e6.induced.HX4S1_on_R2",
        &lam2,
        &s1_transversal,
        h_order * qq.pow(4),
        &e6_r2(&ctx),
        one,
        cfg.budget,
    );

    let samples = (cfg.samples / 500).max(4);
    invariance_check(&ctx, &mut r, "e6.invariant.B3", &H, &with_central(one, &[]), &[12, 13, 14, 15, 16, 8, 9, 10], &t_gens, |b| match b {
        BInvariants::E6 { b3, .. } => *b3,
        _ => FqElem::ZERO,
    }, samples, &mut rng);
    invariance_check(&ctx, &mut r, "e6.invariant.B2", &H, &with_central(one, &[]), &H2, &s1_gens, |b| match b {
        BInvariants::E6 { b2, .. } => *b2,
        _ => FqElem::ZERO,
    }, samples, &mut rng);

    let x4 = Descriptor::coords(&[4]);
    for b2 in f.elements() {
        let tag = format!("e6.extension.b2_{}", f.format_short(b2));
        let lam = character_on(&ctx, &H, &with_central(one, &[(10, b2)]));
        let etas = crate::character::extension_set(&ctx, &lam, &[x4.clone()]);
        let Some(Ok(etas)) = r.guard(&format!("{tag}.HX4"), etas) else {
            r.check(&format!("{tag}.HX4"), false, "obstructed", "extends", None);
            continue;
        };
        r.eq(&format!("{tag}.HX4.count"), etas.len(), q);
        let root = f.kth_root(b2, 2).filter(|c| !c.is_zero());
        let expected = if root.is_some() { f.p() as usize } else { 1 };
        let mut stabs = BTreeMap::new();
        for eta in &etas {
            if let Some(n) = r.guard(&format!("{tag}.stab_S2"), curve_stabilizer(&ctx, eta, &e6_s2(&ctx))) {
                *stabs.entry(n).or_insert(0usize) += 1;
            }
        }
        r.eq(&format!("{tag}.stab_S2.orders"), stabs, BTreeMap::from([(expected, q)]));
        match root {
            Some(c) => {
                let (f2, f4) = e6_f2_f4(&ctx, c);
                let p = f.p() as usize;
                if let Some(n) = r.guard(&format!("{tag}.HX4F2"), extension_count(&ctx, &lam, &[f2.clone(), x4.clone()])) {
                    r.eq(&format!("{tag}.HX4F2.count"), n, Some(p * q));
                }
                if let Some(n) = r.guard(&format!("{tag}.HF4S2"), extension_count(&ctx, &lam, &[s2.clone(), f4])) {
                    r.eq(&format!("{tag}.HF4S2.count"), n, Some(q * p));
                }
                if let Some(n) = r.guard(&format!("{tag}.HX4S2"), extension_count(&ctx, &lam, &[s2.clone(), x4.clone()])) {
                    if f2.size(&ctx) == s2.size(&ctx) {
                        r.info(&format!("{tag}.HX4S2.F2_equals_S2"), n, json!(null));
                    } else {
                        r.eq(&format!("{tag}.HX4S2.obstructed"), n, None);
                    }
                }
            }
            None => {
                if let Some(n) = r.guard(&format!("{tag}.HX4S2"), extension_count(&ctx, &lam, &[s2.clone(), x4.clone()])) {
                    r.eq(&format!("{tag}.HX4S2.obstructed"), n, None);
                }
            }
        }
    }

    let fam = count_family(Kind::E6, q);
    match fam {
        Ok(fam) => {
            r.eq(
                "e6.census.by_degree",
                fam.per_central.clone(),
                BTreeMap::from([(qq.pow(7) / 3, 9 * (qq - 1) / 2), (qq.pow(7), (qq - 1) * qq + (qq + 1) / 2)]),
            );
            r.eq("e6.census.sum_of_squares", fam.sum_of_squares, fam.expected_sum_of_squares);
            r.eq("e6.census.torus_orbit", fam.torus_orbit, (qq - 1).pow(5));
            r.eq("e6.census.totals", fam.totals.clone(), fam.formula.iter().map(|(&d, f)| (d, f.numerator / f.denominator)).collect());
            r.eq("e6.census.formula_integral", fam.formula_integral(), true);
            let mut strata: BTreeMap<String, u128> = BTreeMap::new();
            for leaf in &fam.leaves {
                let key = match b_invariants(Kind::E6, &f, &leaf.0) {
                    Ok(BInvariants::E6 { b3, .. }) if !b3.is_zero() => "b3_nonzero".to_string(),
                    Ok(BInvariants::E6 { b2, .. }) if f.is_kth_power(b2, 2) && !b2.is_zero() => format!("b3_zero.b2_square.deg{}", leaf.1),
                    Ok(_) => format!("b3_zero.b2_nonsquare.deg{}", leaf.1),
                    Err(_) => "error".to_string(),
                };
                *strata.entry(key).or_insert(0) += leaf.2;
            }
            r.info("e6.census.strata", strata, json!(null));
        }
        Err(e) => r.check("e6.census", false, "error", "ok", Some(e)),
    }
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q3_passes() {
        let r = suite_e6(3, &SuiteConfig::default());
        assert!(r.passed(), "{}", r.to_text());
    }
}
