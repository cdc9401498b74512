use num_bigint::BigInt;
use rayon::prelude::*;

use super::linear::LinearCharacter;
use super::CharError;
use crate::cyclotomic::{CycInt, ZetaSum};
use crate::unipotent::{Descriptor, GroupContext, UniElem};

/// λ^G for G = domain·transversal, χ(g) = Σ_x λ̇(x g x⁻¹).
#[derive(Clone, Debug)]
pub struct InducedCharacter {
    pub base: LinearCharacter,
    pub transversal: Vec<UniElem>,
    normal: bool,
}

impl InducedCharacter {
    /// `ambient_order` is |G|; `normal` enables the early exit for g outside the domain.
    pub fn new(
        ctx: &GroupContext,
        base: LinearCharacter,
        transversal: &Descriptor,
        ambient_order: u128,
        normal: bool,
        budget: u128,
    ) -> Result<Self, CharError> {
        let size = transversal.size(ctx);
        if size * base.domain.size(ctx) != ambient_order {
            return Err(CharError::Unsupported("transversal size times domain size differs from the ambient order"));
        }
        let transversal = transversal.enumerate(ctx, budget)?;
        Ok(InducedCharacter { base, transversal, normal })
    }

    pub fn degree(&self) -> u128 {
        self.transversal.len() as u128
    }

    pub fn value_sum(&self, ctx: &GroupContext, g: &UniElem) -> ZetaSum {
        let p = ctx.field().p();
        let mut acc = ZetaSum::new(p);
        if self.normal && !self.base.domain.contains(ctx, g) {
            return acc;
        }
        for x in &self.transversal {
            let c = ctx.multiply(&ctx.multiply(x, g), &ctx.inverse(x));
            if let Some(params) = self.base.domain.factorize(ctx, &c) {
                acc.add(self.base.exponent_of_params(ctx, &params), 1);
            }
        }
        acc
    }

    pub fn value(&self, ctx: &GroupContext, g: &UniElem) -> CycInt {
        self.value_sum(ctx, g).to_cyc()
    }
}

/// Σ_e c_e ζ^e as an integer, when the sum is rational.
fn rational(counts: &[i128]) -> Option<i128> {
    let rest = &counts[1..];
    rest.iter().all(|&c| c == rest[0]).then(|| counts[0] - rest.first().copied().unwrap_or(0))
}

/// (1/|G|) Σ_g χ1(g)·conj(χ2(g)) over all elements of `group`, exactly.
pub fn inner_product<F1, F2>(
    ctx: &GroupContext,
    group: &Descriptor,
    chi1: F1,
    chi2: F2,
) -> Result<BigInt, CharError>
where
    F1: Fn(&UniElem) -> ZetaSum + Sync,
    F2: Fn(&UniElem) -> ZetaSum + Sync,
{
    let p = ctx.field().p() as usize;
    let order = group.size(ctx);
    let total = (0..order as usize)
        .into_par_iter()
        .with_min_len(1024)
        .map(|i| {
            let g = group.element_at(ctx, i as u128);
            let (a, b) = (chi1(&g), chi2(&g));
            let mut out = vec![0i128; p];
            for (i, &x) in a.counts().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.counts().iter().enumerate() {
                    out[(i + p - j) % p] += x as i128 * y as i128;
                }
            }
            out
        })
        .reduce(|| vec![0i128; p], |mut a, b| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        });
    let v = rational(&total).ok_or_else(|| CharError::NonIntegral(format!("{total:?}")))?;
    if v % order as i128 != 0 {
        return Err(CharError::NonIntegral(format!("{v}/{order}")));
    }
    Ok(BigInt::from(v / order as i128))
}
