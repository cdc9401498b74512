use std::collections::BTreeSet;

use serde_json::json;

use super::SuiteReport;
use crate::fqfield::{FieldSpec, FqElem};

/// Exhaustive check of the four Artin–Schreier facts over F_q = F_{p^f}.
pub fn verify_prop_fq(p: u32, f: usize) -> SuiteReport {
    let mut r = SuiteReport::new("prop_fq", json!({"p": p, "f": f}));
    let Some(k) = r.guard("field.construct", FieldSpec::conway(p, f)) else {
        return r.finish();
    };
    let q = k.q();
    let prime: Vec<FqElem> = (0..p as i64).map(|c| k.scale(k.one(), c)).collect();

    let mut witness = None;
    'a: for a in k.nonzero_elements() {
        for t in k.elements() {
            let lhs = k.artin_schreier(a, t);
            let rhs = prime.iter().fold(k.one(), |acc, &c| k.mul(acc, k.sub(t, k.mul(c, a))));
            if lhs != rhs {
                witness = Some(format!("a={} t={}", k.format(a), k.format(t)));
                break 'a;
            }
        }
    }
    r.truth("field.artin_schreier_factorization", witness.is_none(), witness);

    let mut sizes = BTreeSet::new();
    let mut witness = None;
    for a in k.nonzero_elements() {
        let set = k.t_a_set(a);
        sizes.insert(set.len());
        let mut member = vec![false; q];
        for &x in &set {
            member[k.index(x)] = true;
        }
        let closed = member[0] && set.iter().all(|&x| set.iter().all(|&y| member[k.index(k.add(x, y))]));
        if !closed && witness.is_none() {
            witness = Some(format!("T_a not closed for a={}", k.format(a)));
        }
    }
    r.truth("field.t_a_is_subgroup", witness.is_none(), witness);
    r.eq("field.t_a_index_p", sizes.into_iter().collect::<Vec<_>>(), vec![q / p as usize]);

    let mut witness = None;
    for a in k.nonzero_elements() {
        let set = k.t_a_set(a);
        let hits_kernel = |b: FqElem| set.iter().all(|&t| k.trace(k.mul(b, t)) == 0);
        let b = match k.find_a_phi(a) {
            Ok(b) => b,
            Err(e) => {
                witness = Some(format!("a={}: {e}", k.format(a)));
                break;
            }
        };
        if b.is_zero() || !hits_kernel(b) {
            witness = Some(format!("a_phi fails for a={}", k.format(a)));
            break;
        }
        let scalars: Vec<FqElem> = k.nonzero_elements().filter(|&c| hits_kernel(k.mul(c, b))).collect();
        if scalars != prime[1..] {
            witness = Some(format!("scalars for a={} are {:?}", k.format(a), scalars.iter().map(|&c| k.format(c)).collect::<Vec<_>>()));
            break;
        }
    }
    r.truth("field.a_phi_unique_up_to_prime_scalars", witness.is_none(), witness);

    let t_sets: BTreeSet<Vec<FqElem>> = k.nonzero_elements().map(|a| k.t_a_set(a)).collect();
    let kernels: BTreeSet<Vec<FqElem>> = k
        .nonzero_elements()
        .map(|a| {
            let mut v: Vec<FqElem> = k.elements().filter(|&x| k.trace(k.mul(a, x)) == 0).collect();
            v.sort();
            v
        })
        .collect();
    r.truth("field.t_a_family_equals_kernels", t_sets == kernels, None);
    r.eq("field.index_p_subgroup_count", t_sets.len(), (q - 1) / (p as usize - 1));
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        for (p, f) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 2)] {
            let r = verify_prop_fq(p, f);
            assert!(r.passed(), "{}", r.to_text());
        }
        let r = verify_prop_fq(2, 2);
        let count = r.checks.iter().find(|c| c.anchor == "field.index_p_subgroup_count").unwrap();
        assert_eq!(count.measured, json!(3));
    }
}
