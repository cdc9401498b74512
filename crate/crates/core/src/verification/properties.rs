use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::tower::{character_on, functional, ORBIT_BUDGET};
use super::{SuiteConfig, SuiteReport};
use crate::character::{orbit_bfs, AbelianSection};
use crate::constructions::{complement, e8_s, h, tower};
use crate::fqfield::FqElem;
use crate::root_data::Kind;
use crate::unipotent::{Descriptor, GroupContext};

/// Group-law and action properties on seeded samples.
pub fn property_suite(kind: Kind, q: usize, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("properties", json!({"kind": kind, "q": q, "seed": cfg.seed, "samples": cfg.samples}));
    let Some(ctx) = r.guard("properties.context", GroupContext::standard(kind, q)) else {
        return r.finish();
    };
    let f = ctx.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut witness = None;
    for _ in 0..cfg.samples {
        let (a, b, c) = (ctx.random_element(&mut rng), ctx.random_element(&mut rng), ctx.random_element(&mut rng));
        if ctx.multiply(&ctx.multiply(&a, &b), &c) != ctx.multiply(&a, &ctx.multiply(&b, &c)) {
            witness = Some(format!("({}, {}, {})", ctx.format(&a), ctx.format(&b), ctx.format(&c)));
            break;
        }
    }
    r.check("properties.associativity.sampled", witness.is_none(), cfg.samples, "associative", witness);

    if kind == Kind::D4 && q == 2 {
        let gens: Vec<_> = ctx.roots().iter().map(|&rt| ctx.letter(rt, f.one())).collect();
        let mut witness = None;
        let mut n = 0;
        for a in &gens {
            for b in &gens {
                for x in 0..ctx.order() {
                    let c = ctx.element_at(x);
                    n += 1;
                    if ctx.multiply(&ctx.multiply(a, b), &c) != ctx.multiply(a, &ctx.multiply(b, &c)) {
                        witness.get_or_insert_with(|| format!("({}, {}, {})", ctx.format(a), ctx.format(b), ctx.format(&c)));
                    }
                }
            }
        }
        r.check("properties.associativity.generators_exhaustive", witness.is_none(), n, "associative", witness);
    }

    let mut witness = None;
    for _ in 0..cfg.samples {
        let u = ctx.random_element(&mut rng);
        let v = ctx.inverse(&u);
        if !ctx.multiply(&u, &v).is_identity() || !ctx.multiply(&v, &u).is_identity() || ctx.inverse(&v) != u {
            witness = Some(ctx.format(&u));
            break;
        }
    }
    r.check("properties.inverse_round_trip", witness.is_none(), cfg.samples, "identity", witness);

    let Descriptor::Coords(h_roots) = h(kind) else { unreachable!("H is a coordinate subgroup") };
    let n = (cfg.samples / 100).max(10);
    let mut witness = None;
    let mut hom_witness = None;
    for k in 0..n {
        let coeffs: Vec<(usize, FqElem)> = h_roots.iter().map(|&rt| (rt, f.element(rng.gen_range(0..f.q())))).collect();
        let lam = character_on(&ctx, &h_roots, &coeffs);
        if k < 4 {
            let rep = lam.homomorphism_check(&ctx, 1 << 24, cfg.samples / 10, &mut rng);
            if !rep.passed() {
                hom_witness.get_or_insert_with(|| format!("{:?}", rep.witness));
            }
        }
        let (x, y) = (ctx.random_element(&mut rng), ctx.random_element(&mut rng));
        let lhs = lam.conjugate(&ctx, &x).and_then(|m| m.conjugate(&ctx, &y));
        let rhs = lam.conjugate(&ctx, &ctx.multiply(&x, &y));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a.root_coeffs == b.root_coeffs => {}
            _ => {
                witness = Some(format!("x={} y={}", ctx.format(&x), ctx.format(&y)));
                break;
            }
        }
    }
    r.check("properties.conjugation_composes", witness.is_none(), n, "composes", witness);
    r.check("properties.homomorphism", hom_witness.is_none(), 4, "homomorphisms", hom_witness);

    let (section_roots, group): (Vec<usize>, Descriptor) = match kind {
        Kind::D4 => (vec![5, 6, 7, 8, 9, 10], complement(&ctx, kind)),
        Kind::E6 => ((12..=21).collect(), complement(&ctx, kind)),
        Kind::E8 => (tower(kind).levels[..5].concat(), e8_s(&ctx, 3)),
    };
    let central = tower(kind).levels[0].clone();
    let mut start: Vec<(usize, FqElem)> = central.iter().map(|&rt| (rt, f.one())).collect();
    if kind == Kind::D4 {
        start.push((7, f.one()));
    }
    if let Some(section) = r.guard("properties.orbit_stabilizer.section", AbelianSection::new(&ctx, &section_roots)) {
        let ell = functional(&ctx, &section, &start);
        let elems = group.enumerate(&ctx, cfg.budget);
        let gens = group.generators(&ctx);
        let mats = gens.iter().map(|g| section.conj_matrix(&ctx, g)).collect::<Result<Vec<_>, _>>();
        if let (Some(elems), Some(mats)) = (r.guard("properties.orbit_stabilizer.enumerate", elems), r.guard("properties.orbit_stabilizer.normalizes", mats)) {
            let fixers = elems
                .iter()
                .filter(|g| section.conj_matrix(&ctx, g).map(|m| section.act(&m, &ell) == ell).unwrap_or(false))
                .count() as u128;
            let order = elems.len() as u128;
            if let Some(rep) = r.guard("properties.orbit_stabilizer.bfs", orbit_bfs(&section, &ell, &mats, order, ORBIT_BUDGET)) {
                r.check(
                    "properties.orbit_stabilizer",
                    rep.orbit_size * fixers == order,
                    json!({"orbit": rep.orbit_size, "stabilizer": fixers}),
                    json!({"group_order": order}),
                    None,
                );
            }
        }
    }
    r.finish()
}
