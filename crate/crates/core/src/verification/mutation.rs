use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{SuiteConfig, SuiteReport};
use crate::fqfield::FieldSpec;
use crate::root_data::{Kind, RootSystemTable};
use crate::unipotent::GroupContext;

/// First, middle and last table entries that survive in the quotient.
pub fn designated_mutations(table: &RootSystemTable) -> Vec<(usize, usize)> {
    let quotient = table.quotient_order();
    let live: Vec<(usize, usize)> = table
        .entries()
        .filter(|&((i, j), (k, _))| [i, j, k].iter().all(|r| quotient.contains(r)))
        .map(|(ij, _)| ij)
        .collect();
    if live.is_empty() {
        return Vec::new();
    }
    let mut picks = vec![live[0], live[live.len() / 2], live[live.len() - 1]];
    picks.dedup();
    picks
}

/// Number of non-associative triples found among all letter triples x_a(1)
/// and `samples` random triples.
fn associativity_failures(ctx: &GroupContext, samples: usize, seed: u64) -> (usize, Option<String>) {
    let one = ctx.field().one();
    let letters: Vec<_> = ctx.roots().iter().map(|&r| ctx.letter(r, one)).collect();
    let mut bad = 0;
    let mut witness = None;
    let mut test = |a: &_, b: &_, c: &_| {
        let l = ctx.multiply(&ctx.multiply(a, b), c);
        let r = ctx.multiply(a, &ctx.multiply(b, c));
        if l != r {
            bad += 1;
            witness.get_or_insert_with(|| format!("({}, {}, {})", ctx.format(a), ctx.format(b), ctx.format(c)));
        }
    };
    for a in &letters {
        for b in &letters {
            for c in &letters {
                test(a, b, c);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b, c) = (ctx.random_element(&mut rng), ctx.random_element(&mut rng), ctx.random_element(&mut rng));
        test(&a, &b, &c);
    }
    (bad, witness)
}

/// Flips each designated sign and records whether the battery notices.
pub fn mutation_suite(kind: Kind, q: usize, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("mutation", json!({"kind": kind, "q": q, "seed": cfg.seed}));
    let Some(table) = r.guard("mutation.table", RootSystemTable::load(kind)) else {
        return r.finish();
    };
    let samples = cfg.samples / 10;
    let Some(field) = r.guard("mutation.field", FieldSpec::of_order(q)) else {
        return r.finish();
    };
    let ctx = GroupContext::with_table(table.clone(), field.clone());
    let (bad, witness) = associativity_failures(&ctx, samples, cfg.seed);
    r.check("mutation.control.associative", bad == 0, bad, 0, witness);
    for (i, j) in designated_mutations(&table) {
        let mutated = table.with_flipped_sign(i, j).expect("designated entry exists");
        let anchor = format!("mutation.flip_{i}_{j}");
        let mut detections = Vec::new();
        let ctx = GroupContext::with_table(mutated, field.clone());
        if !ctx.table().validate().passed() {
            detections.push("table validation".to_string());
        }
        let (bad, witness) = associativity_failures(&ctx, samples, cfg.seed);
        if bad > 0 {
            detections.push(format!("{bad} non-associative triples, e.g. {}", witness.unwrap_or_default()));
        }
        let note = (field.p() == 2).then(|| "a sign flip is the identity in characteristic 2".to_string());
        r.check(&format!("{anchor}.detected"), !detections.is_empty(), &detections, "at least one detection", note);
    }
    r.finish()
}
