use std::collections::BTreeMap;

use serde::Serialize;

use super::induce::InducedCharacter;
use super::linear::{unit_pairing, LinearCharacter};
use super::CharError;
use crate::constructions::d4_curves;
use crate::cyclotomic::ZetaSum;
use crate::fqfield::FqElem;
use crate::unipotent::{Descriptor, GroupContext, ParamSet, UniElem};

/// How the off-Z branch of the degree q³/2 formula restricts (t1, t2, t4):
/// `Literal` takes the Kronecker deltas as printed (the whole curve S124),
/// `F124` additionally requires the point to lie in F124.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum D4Reading {
    Literal,
    F124,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D4Params {
    pub a: [FqElem; 3],
    pub t0: FqElem,
    pub b124: FqElem,
    pub b3: FqElem,
}

pub const H_ROOTS: [usize; 6] = [5, 6, 7, 8, 9, 10];
const HX3_ROOTS: [usize; 7] = [3, 5, 6, 7, 8, 9, 10];

fn big_a(ctx: &GroupContext, a: [FqElem; 3]) -> FqElem {
    let f = ctx.field();
    f.mul(f.mul(a[0], a[1]), a[2])
}

/// t0^φ = (t0)_φ / A.
pub fn t0_phi(ctx: &GroupContext, a: [FqElem; 3], t0: FqElem) -> FqElem {
    let f = ctx.field();
    f.div(f.find_a_phi(t0).expect("t0 is nonzero"), big_a(ctx, a)).expect("A is nonzero")
}

/// λ on H with λ(x_i(t)) = φ(b_i t) on X5X6X7 and φ(a_i t) on the center.
pub fn lambda(a: [FqElem; 3], b: [FqElem; 3]) -> LinearCharacter {
    let coeffs: BTreeMap<usize, FqElem> = H_ROOTS.iter().copied().zip(b.iter().chain(a.iter()).copied()).collect();
    LinearCharacter::new(Descriptor::coords(&H_ROOTS), coeffs)
}

/// The orbit representative b = (0, 0, A·t0/a8).
pub fn representative_b(ctx: &GroupContext, a: [FqElem; 3], t0: FqElem) -> [FqElem; 3] {
    let f = ctx.field();
    let b7 = f.div(f.mul(big_a(ctx, a), t0), a[0]).expect("a8 is nonzero");
    [f.zero(), f.zero(), b7]
}

/// The extension of λ to HX3 (t0 = 0) or to K1 = F124·X3·H (t0 ≠ 0) with the
/// given values on F124 and X3.
pub fn extension(ctx: &GroupContext, p: &D4Params) -> LinearCharacter {
    let b = representative_b(ctx, p.a, p.t0);
    let mut coeffs = lambda(p.a, b).root_coeffs;
    coeffs.insert(3, p.b3);
    if p.t0.is_zero() {
        return LinearCharacter::new(Descriptor::coords(&HX3_ROOTS), coeffs);
    }
    let curves = d4_curves(p.a);
    let domain = Descriptor::product(vec![
        Descriptor::Curve(curves.x124, ParamSet::PrimeMultiples(p.t0)),
        Descriptor::coords(&HX3_ROOTS),
    ]);
    LinearCharacter::new(domain, coeffs).with_curve("x124", p.b124)
}

/// A complement of F124 in T = X1X2X4.
pub fn complement_of_f124(ctx: &GroupContext, a: [FqElem; 3], t0: FqElem) -> Vec<UniElem> {
    let f = ctx.field();
    let v0 = d4_curves(a).x124.eval(ctx, t0);
    let roots = [1usize, 2, 4];
    let (root, j) = roots
        .iter()
        .flat_map(|&r| (0..f.f()).map(move |j| (r, j)))
        .find(|&(r, j)| ctx.coord(&v0, r).coeffs()[j] != 0)
        .expect("x124(t0) is nontrivial");
    Descriptor::coords(&roots)
        .enumerate(ctx, u128::MAX)
        .expect("T is small")
        .into_iter()
        .filter(|u| ctx.coord(u, root).coeffs()[j] == 0)
        .collect()
}

/// The brute-force induced character for the given parameters.
pub fn induced(ctx: &GroupContext, p: &D4Params) -> Result<InducedCharacter, CharError> {
    let ext = extension(ctx, p);
    let transversal = if p.t0.is_zero() {
        Descriptor::coords(&[1, 2, 4])
    } else {
        Descriptor::Finite(complement_of_f124(ctx, p.a, p.t0))
    };
    InducedCharacter::new(ctx, ext, &transversal, ctx.order(), true, 1 << 20)
}

/// The closed-form values of the degree q³ and q³/2 characters.
pub fn theorem_d4_value(ctx: &GroupContext, p: &D4Params, u: &UniElem, reading: D4Reading) -> ZetaSum {
    let f = ctx.field();
    let t = |i: usize| ctx.coord(u, i);
    let [a8, a9, a10] = p.a;
    let q = f.q() as i64;
    let mut out = ZetaSum::new(f.p());
    let central = f.add(f.add(f.mul(a8, t(8)), f.mul(a9, t(9))), f.mul(a10, t(10)));
    let div = |x: FqElem, y: FqElem| f.div(x, y).expect("nonzero divisor");
    let on_s567 = f.mul(a8, t(5)) == f.mul(a10, t(7)) && f.mul(a8, t(6)) == f.mul(a9, t(7));
    if p.t0.is_zero() {
        if [1, 2, 4, 3].iter().all(|&i| t(i).is_zero()) && on_s567 {
            out.add(f.trace(central), q * q * q);
        }
        return out;
    }
    let big = big_a(ctx, p.a);
    let s124 = f.mul(a8, t(1)) == f.mul(a10, t(4)) && f.mul(a8, t(2)) == f.mul(a9, t(4));
    let k = div(t(4), a8);
    let in_f124 = s124 && (0..f.p() as i64).any(|m| f.scale(p.t0, m) == k);
    let base = f.add(
        f.add(f.mul(p.b124, div(t(1), a10)), div(f.mul(f.mul(big, p.t0), t(7)), a8)),
        central,
    );
    if in_f124 && t(3).is_zero() && on_s567 {
        out.add(f.trace(base), q * q * q / 2);
        return out;
    }
    let tphi = t0_phi(ctx, p.a, p.t0);
    let support = match reading {
        D4Reading::Literal => s124,
        D4Reading::F124 => in_f124,
    };
    if !(support && t(3) == tphi) {
        return out;
    }
    let t0_sub_phi = f.find_a_phi(p.t0).expect("t0 is nonzero");
    let l = f.add(div(t(5), a10), div(t(7), a8));
    let r = f.add(div(t(6), a9), div(t(7), a8));
    let star = f.mul(div(f.mul(big, big), t0_sub_phi), f.mul(l, r));
    let arg = f.add(f.add(base, f.mul(p.b3, t(3))), star);
    out.add(f.trace(arg), q * q / 2);
    out
}

/// Parameters (b124, b3) ranging over {0, a124} × {0, a3}.
pub fn half_degree_params(ctx: &GroupContext, a: [FqElem; 3], t0: FqElem) -> Vec<D4Params> {
    let f = ctx.field();
    let a124 = unit_pairing(ctx, t0);
    let a3 = unit_pairing(ctx, t0_phi(ctx, a, t0));
    let mut out = Vec::new();
    for b124 in [f.zero(), a124] {
        for b3 in [f.zero(), a3] {
            out.push(D4Params { a, t0, b124, b3 });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Kind;

    #[test]
    fn formula_matches_induction_at_q2() {
        let ctx = GroupContext::standard(Kind::D4, 2).unwrap();
        let one = ctx.field().one();
        let a = [one; 3];
        let mut params = vec![D4Params { a, t0: ctx.field().zero(), b124: one, b3: ctx.field().zero() }];
        params[0].b124 = ctx.field().zero();
        params.extend(half_degree_params(&ctx, a, one));
        for p in &params {
            let chi = induced(&ctx, p).unwrap();
            for i in 0..ctx.order() {
                let u = ctx.element_at(i);
                assert_eq!(
                    chi.value(&ctx, &u),
                    theorem_d4_value(&ctx, p, &u, D4Reading::Literal).to_cyc(),
                    "{p:?} at {}",
                    ctx.format(&u)
                );
            }
        }
    }

    #[test]
    fn f124_reading_matches_induction_at_q4() {
        let ctx = GroupContext::standard(Kind::D4, 4).unwrap();
        let f = ctx.field().clone();
        let a = [f.one(), f.element(2), f.element(3)];
        for t0 in f.nonzero_elements() {
            for p in half_degree_params(&ctx, a, t0) {
                let chi = induced(&ctx, &p).unwrap();
                let tphi = t0_phi(&ctx, a, t0);
                let mut literal_misses = 0;
                for s in f.elements() {
                    for i in 0..64u128 {
                        let u = ctx.element_at(i * 4099 % ctx.order());
                        let mut c: Vec<(usize, FqElem)> = (1..=10).map(|r| (r, ctx.coord(&u, r))).collect();
                        c[0].1 = f.mul(a[2], s);
                        c[1].1 = f.mul(a[1], s);
                        c[3].1 = f.mul(a[0], s);
                        c[2].1 = tphi;
                        let u = ctx.from_coords(&c);
                        let v = chi.value(&ctx, &u);
                        assert_eq!(v, theorem_d4_value(&ctx, &p, &u, D4Reading::F124).to_cyc());
                        literal_misses += (v != theorem_d4_value(&ctx, &p, &u, D4Reading::Literal).to_cyc()) as usize;
                    }
                }
                assert_eq!(literal_misses, 128);
            }
        }
    }
}
