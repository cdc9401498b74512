use serde_json::json;

use super::SuiteReport;
use crate::character::clifford::{d4_instance, verify_reduction, D4Instance};
use crate::root_data::Kind;
use crate::unipotent::GroupContext;

/// Brute-force certification of the reduction lemma on a D4 q = 2 instance.
pub fn verify_reduction_lemma(which: D4Instance) -> SuiteReport {
    let mut r = SuiteReport::new("reduction", json!({"kind": "D4", "q": 2, "instance": which}));
    let Some(ctx) = r.guard("reduction.context", GroupContext::standard(Kind::D4, 2)) else {
        return r.finish();
    };
    let one = ctx.field().one();
    let inst = d4_instance(&ctx, [one; 3], which);
    let Some(rep) = r.guard("reduction.run", verify_reduction(&ctx, &inst)) else {
        return r.finish();
    };
    r.info("reduction.normal_order", rep.normal_order, json!(null));
    match which {
        D4Instance::Mutant => {
            r.eq("reduction.hypothesis_conjugates_distinct", rep.conjugates_distinct, false);
            r.truth("reduction.non_injectivity_detected", !rep.injective(), None);
        }
        _ => {
            let expected = if which == D4Instance::Inert { 1 } else { 4 };
            r.eq("reduction.hypothesis_conjugates_distinct", rep.conjugates_distinct, true);
            r.eq("reduction.irr_count", rep.irr_count, expected);
            r.eq("reduction.induced_norms", rep.norms.clone(), vec![1; expected]);
            r.eq("reduction.pairwise_inner_product", rep.max_cross_product, 0);
            r.eq("reduction.surjective_degree_sum", rep.constituent_degree_sum, rep.index);
            r.truth("reduction.bijective", rep.bijective(), None);
        }
    }
    r.info("reduction.degrees", &rep.degrees, json!(null));
    r.finish()
}
