use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::induce::inner_product;
use super::section::AbelianSection;
use super::CharError;
use crate::constructions::d4_curves;
use crate::cyclotomic::ZetaSum;
use crate::fqfield::FqElem;
use crate::unipotent::{Descriptor, GroupContext, ParamSet, UniElem};

/// G ⊵ N = S⋉A with A abelian on root groups and S elementary abelian,
/// λ a linear character of ZY ≤ A given as a functional on A, and a pool of
/// candidates for a transversal of N in G.
#[derive(Clone, Debug)]
pub struct CliffordInstance {
    pub name: String,
    pub abelian: Vec<usize>,
    pub complement: Descriptor,
    pub zy: Descriptor,
    pub y: Descriptor,
    pub lambda: Vec<u32>,
    pub transversal_pool: Descriptor,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub instance: String,
    pub normal_order: u128,
    pub irr_count: usize,
    pub degrees: Vec<u128>,
    pub norms: Vec<i64>,
    pub max_cross_product: i64,
    pub conjugates_distinct: bool,
    pub constituent_degree_sum: u128,
    pub index: u128,
}

impl ReductionReport {
    pub fn injective(&self) -> bool {
        self.norms.iter().all(|&n| n == 1) && self.max_cross_product == 0
    }

    pub fn surjective(&self) -> bool {
        self.constituent_degree_sum == self.index
    }

    pub fn bijective(&self) -> bool {
        self.injective() && self.surjective()
    }
}

type Table = HashMap<UniElem, ZetaSum>;

const BUDGET: u128 = 1 << 22;

/// Greedy F_p-basis of an elementary abelian group and the coordinates of
/// every element in it.
fn coordinates(ctx: &GroupContext, elems: &[UniElem]) -> (usize, HashMap<UniElem, Vec<u32>>) {
    let p = ctx.field().p();
    let mut coords: HashMap<UniElem, Vec<u32>> = HashMap::from([(ctx.identity(), Vec::new())]);
    let mut rank = 0;
    for g in elems {
        if coords.contains_key(g) {
            continue;
        }
        let old: Vec<(UniElem, Vec<u32>)> = coords.drain().collect();
        for (h, v) in old {
            let mut x = h;
            for k in 0..p {
                let mut w = v.clone();
                w.push(k);
                coords.insert(x.clone(), w);
                x = ctx.multiply(&x, g);
            }
        }
        rank += 1;
    }
    (rank, coords)
}

fn digits(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (idx % p as u64) as u32;
            idx /= p as u64;
            d
        })
        .collect()
}

/// Irr(N | λ) with Y in the kernel, as value tables on N.
fn irr_over(ctx: &GroupContext, inst: &CliffordInstance, section: &AbelianSection, n_elems: &[UniElem]) -> Result<Vec<Table>, CharError> {
    let p = section.p();
    let s_elems = inst.complement.enumerate(ctx, BUDGET)?;
    let mats = s_elems.iter().map(|s| section.conj_matrix(ctx, s)).collect::<Result<Vec<_>, _>>()?;
    let vectors = |d: &Descriptor| -> Result<Vec<Vec<u32>>, CharError> {
        d.generators(ctx)
            .iter()
            .map(|g| section.vector(ctx, g).ok_or_else(|| CharError::NotInDomain(ctx.format(g))))
            .collect()
    };
    let zy_gens = vectors(&inst.zy)?;
    let y_gens = vectors(&inst.y)?;
    let dim = section.dim();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for idx in 0..(p as u64).pow(dim as u32) {
        let ell = digits(idx, p, dim);
        if seen.contains(&ell) {
            continue;
        }
        let orbit: Vec<Vec<u32>> = mats.iter().map(|m| section.act(m, &ell)).collect();
        seen.extend(orbit.iter().cloned());
        if !orbit.iter().all(|o| y_gens.iter().all(|v| section.pair(o, v) == 0)) {
            continue;
        }
        let over = |o: &Vec<u32>| zy_gens.iter().all(|v| section.pair(o, v) == section.pair(&inst.lambda, v));
        if !orbit.iter().any(over) {
            continue;
        }
        let stab: Vec<UniElem> = s_elems.iter().zip(&orbit).filter(|(_, o)| **o == ell).map(|(s, _)| s.clone()).collect();
        let stab_set: HashSet<UniElem> = stab.iter().cloned().collect();
        let (rank, coords) = coordinates(ctx, &stab);
        let mut reps: Vec<UniElem> = Vec::new();
        for s in &s_elems {
            if reps.iter().all(|r| !stab_set.contains(&ctx.multiply(&ctx.inverse(r), s))) {
                reps.push(s.clone());
            }
        }
        for psi in 0..(p as u64).pow(rank as u32) {
            let e = digits(psi, p, rank);
            let mut table = Table::new();
            for n in n_elems {
                let mut acc = ZetaSum::new(p);
                for r in &reps {
                    let m = ctx.multiply(&ctx.multiply(r, n), &ctx.inverse(r));
                    for s in &stab {
                        let a = ctx.multiply(&ctx.inverse(s), &m);
                        if let Some(v) = section.vector(ctx, &a) {
                            let k = &coords[s];
                            let x = section.pair(&ell, &v) + k.iter().zip(&e).map(|(a, b)| a * b).sum::<u32>();
                            acc.add(x % p, 1);
                            break;
                        }
                    }
                }
                table.insert(n.clone(), acc);
            }
            out.push(table);
        }
    }
    Ok(out)
}

/// Brute-force check that induction Irr(N/Y, λ) → Irr(G, λ) is a bijection.
pub fn verify_reduction(ctx: &GroupContext, inst: &CliffordInstance) -> Result<ReductionReport, CharError> {
    let section = AbelianSection::new(ctx, &inst.abelian)?;
    let p = section.p();
    let n_desc = Descriptor::product(vec![inst.complement.clone(), Descriptor::Coords(inst.abelian.clone())]);
    let n_elems = n_desc.enumerate(ctx, BUDGET)?;
    let n_set: HashSet<UniElem> = n_elems.iter().cloned().collect();
    let mut transversal: Vec<UniElem> = Vec::new();
    for x in inst.transversal_pool.enumerate(ctx, BUDGET)? {
        if transversal.iter().all(|y| !n_set.contains(&ctx.multiply(&ctx.inverse(y), &x))) {
            transversal.push(x);
        }
    }
    if transversal.len() as u128 * n_set.len() as u128 != ctx.order() {
        return Err(CharError::Unsupported("transversal pool does not cover G/N"));
    }
    let zy_elems = inst.zy.enumerate(ctx, BUDGET)?;
    let lambda_exp = |h: &UniElem| -> Result<u32, CharError> {
        let v = section.vector(ctx, h).ok_or_else(|| CharError::NotInDomain(ctx.format(h)))?;
        Ok(section.pair(&inst.lambda, &v))
    };
    let mut signatures = HashSet::new();
    for x in &transversal {
        let xi = ctx.inverse(x);
        let sig = zy_elems
            .iter()
            .map(|h| {
                let c = ctx.multiply(&ctx.multiply(x, h), &xi);
                if !inst.zy.contains(ctx, &c) {
                    return Err(CharError::NotNormalizing(ctx.format(x), ctx.format(h)));
                }
                lambda_exp(&c)
            })
            .collect::<Result<Vec<u32>, _>>()?;
        signatures.insert(sig);
    }
    let conjugates_distinct = signatures.len() == transversal.len();

    let irr = irr_over(ctx, inst, &section, &n_elems)?;
    let g_elems: Vec<UniElem> = (0..ctx.order()).map(|i| ctx.element_at(i)).collect();
    let induced: Vec<Table> = irr
        .iter()
        .map(|chi| {
            g_elems
                .iter()
                .map(|g| {
                    let mut acc = ZetaSum::new(p);
                    for x in &transversal {
                        let c = ctx.multiply(&ctx.multiply(x, g), &ctx.inverse(x));
                        if let Some(v) = chi.get(&c) {
                            acc.merge(v);
                        }
                    }
                    (g.clone(), acc)
                })
                .collect()
        })
        .collect();
    let all = Descriptor::Coords(ctx.roots().to_vec());
    let lookup = |t: &Table, g: &UniElem| t[g].clone();
    let mut norms = Vec::new();
    let mut max_cross = 0i64;
    let mut constituent_degree_sum = 0u128;
    let mut degrees = Vec::new();
    for (i, a) in induced.iter().enumerate() {
        let n = inner_product(ctx, &all, |g| lookup(a, g), |g| lookup(a, g))?;
        norms.push(i64::try_from(n).expect("small"));
        for b in &induced[i + 1..] {
            let c = inner_product(ctx, &all, |g| lookup(a, g), |g| lookup(b, g))?;
            max_cross = max_cross.max(i64::try_from(c).expect("small").abs());
        }
        let deg = a[&ctx.identity()].counts().iter().sum::<i64>() as u128;
        degrees.push(deg);
        let mult = inner_product(
            ctx,
            &inst.zy,
            |h| {
                let mut z = ZetaSum::new(p);
                z.add(lambda_exp(h).expect("ZY lies in A"), 1);
                z
            },
            |h| lookup(a, h),
        )?;
        constituent_degree_sum += u128::try_from(mult).expect("nonnegative") * deg;
    }
    Ok(ReductionReport {
        instance: inst.name.clone(),
        normal_order: n_set.len() as u128,
        irr_count: induced.len(),
        degrees,
        norms,
        max_cross_product: max_cross,
        conjugates_distinct,
        constituent_degree_sum,
        index: ctx.order() / inst.zy.size(ctx),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum D4Instance {
    /// t0 = 0: N = HX3S124.
    Inert,
    /// t0 ≠ 0: N = HX3F124.
    Split,
    /// N = HX3 with X = T, where the conjugates of λ coincide.
    Mutant,
}

/// The shipped D4 instances: Z = X8X9X10, Y = ker(λ|_H), so ZY = H, with
/// central coefficients a and t0 = 1 in the split case.
pub fn d4_instance(ctx: &GroupContext, a: [FqElem; 3], which: D4Instance) -> CliffordInstance {
    let f = ctx.field();
    let curves = d4_curves(a);
    let abelian = vec![3, 5, 6, 7, 8, 9, 10];
    let section = AbelianSection::new(ctx, &abelian).expect("HX3 is abelian");
    let z = f.zero();
    let (b, complement) = match which {
        D4Instance::Inert => ([z; 3], Descriptor::curve(curves.x124)),
        D4Instance::Split => {
            let t0 = f.one();
            (
                super::d4::representative_b(ctx, a, t0),
                Descriptor::Curve(curves.x124, ParamSet::PrimeMultiples(t0)),
            )
        }
        D4Instance::Mutant => ([z; 3], Descriptor::trivial()),
    };
    let lambda = section.functional(ctx, &[z, b[0], b[1], b[2], a[0], a[1], a[2]]);
    let h = Descriptor::coords(&super::d4::H_ROOTS);
    let kernel = h
        .enumerate(ctx, BUDGET)
        .expect("H is small")
        .into_iter()
        .filter(|u| section.pair(&lambda, &section.vector(ctx, u).expect("H lies in A")) == 0)
        .collect();
    CliffordInstance {
        name: format!("{which:?}"),
        abelian,
        complement,
        zy: h,
        y: Descriptor::Finite(kernel),
        lambda,
        transversal_pool: Descriptor::coords(&[1, 2, 4]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Kind;

    fn run(which: D4Instance) -> ReductionReport {
        let ctx = GroupContext::standard(Kind::D4, 2).unwrap();
        let one = ctx.field().one();
        verify_reduction(&ctx, &d4_instance(&ctx, [one; 3], which)).unwrap()
    }

    #[test]
    fn inert_instance_is_bijective() {
        let r = run(D4Instance::Inert);
        assert!(r.conjugates_distinct);
        assert!(r.bijective(), "{r:?}");
        assert_eq!(r.degrees, vec![8]);
    }

    #[test]
    fn split_instance_is_bijective() {
        let r = run(D4Instance::Split);
        assert!(r.conjugates_distinct);
        assert!(r.bijective(), "{r:?}");
        assert_eq!(r.degrees, vec![4; 4]);
    }

    #[test]
    fn mutant_breaks_injectivity() {
        let r = run(D4Instance::Mutant);
        assert!(!r.conjugates_distinct);
        assert!(!r.injective(), "{r:?}");
    }
}
