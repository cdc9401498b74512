//! The named subgroups, curves and level towers of the three constructions.

use crate::character::TowerSpec;
use crate::fqfield::FqElem;
use crate::root_data::Kind;
use crate::unipotent::{Descriptor, GroupContext, OneParamCurve, ParamSet};

fn curve(ctx: &GroupContext, name: &str, terms: &[(usize, i64, u32)]) -> OneParamCurve {
    let f = ctx.field();
    OneParamCurve::new(name, terms.iter().map(|&(i, c, e)| (i, f.from_int(c), e)).collect())
}

/// Levels of A top down (central first) and the complement T.
pub fn tower(kind: Kind) -> TowerSpec {
    match kind {
        Kind::D4 => TowerSpec { levels: vec![vec![8, 9, 10], vec![5, 6, 7], vec![3]], complement: vec![1, 2, 4] },
        Kind::E6 => TowerSpec {
            levels: vec![(17..=21).collect(), (12..=16).collect(), vec![8, 9, 10], vec![4]],
            complement: vec![2, 1, 3, 7, 5, 6, 11],
        },
        Kind::E8 => TowerSpec {
            levels: vec![
                (37..=43).collect(),
                (30..=36).collect(),
                (24..=29).collect(),
                (18..=21).collect(),
                vec![12, 13],
                vec![5],
            ],
            complement: vec![1, 3, 4, 2, 6, 7, 8, 9, 10, 11, 14, 15, 16, 17, 22, 23],
        },
    }
}

/// H = [U,U] for D4, and the H of the tower for E6 and E8.
pub fn h(kind: Kind) -> Descriptor {
    let t = tower(kind);
    let mut roots: Vec<usize> = t.levels[..t.levels.len() - 1].iter().flatten().copied().collect();
    roots.sort();
    Descriptor::Coords(roots)
}

pub fn complement(ctx: &GroupContext, kind: Kind) -> Descriptor {
    let mut roots = tower(kind).complement;
    roots.sort_by_key(|&r| ctx.position(r));
    Descriptor::Coords(roots)
}

/// The D4 curves built from the central coefficients a = (a8, a9, a10).
pub struct D4Curves {
    pub x567: OneParamCurve,
    pub x124: OneParamCurve,
}

pub fn d4_curves(a: [FqElem; 3]) -> D4Curves {
    let [a8, a9, a10] = a;
    D4Curves {
        x567: OneParamCurve::new("x567", vec![(5, a10, 1), (6, a9, 1), (7, a8, 1)]),
        x124: OneParamCurve::new("x124", vec![(1, a10, 1), (2, a9, 1), (4, a8, 1)]),
    }
}

/// s1(t, r, s) without its X7X11 part.
pub fn e6_s1_core(ctx: &GroupContext) -> OneParamCurve {
    curve(ctx, "s1", &[(2, 1, 1), (1, 1, 1), (3, -1, 1), (5, 1, 1), (6, -1, 1)]).with_tail(Descriptor::coords(&[7, 11]))
}

pub fn e6_s1(ctx: &GroupContext) -> Descriptor {
    Descriptor::product(vec![Descriptor::curve(e6_s1_core(ctx)), Descriptor::coords(&[7, 11])])
}

pub fn e6_s2(ctx: &GroupContext) -> OneParamCurve {
    let f = ctx.field();
    let two = f.from_int(2);
    e6_s1_core(ctx).extend("s2", &[(7, two, 2), (11, two, 2)])
}

pub fn e6_r3(ctx: &GroupContext) -> OneParamCurve {
    curve(ctx, "r3", &[(12, 1, 1), (13, -1, 1), (14, -1, 1), (15, 1, 1), (16, 1, 1)])
}

pub fn e6_r2(ctx: &GroupContext) -> OneParamCurve {
    curve(ctx, "r2", &[(8, -1, 1), (9, 1, 1), (10, 1, 1)])
}

pub fn x_curve(ctx: &GroupContext, root: usize) -> OneParamCurve {
    curve(ctx, &format!("x{root}"), &[(root, 1, 1)])
}

/// F2 = {s2(uc)} and F4 = {x4(u c_φ)} for B2 = c².
pub fn e6_f2_f4(ctx: &GroupContext, c: FqElem) -> (Descriptor, Descriptor) {
    let c_phi = ctx.field().find_a_phi(c).expect("c is nonzero");
    (
        Descriptor::Curve(e6_s2(ctx), ParamSet::PrimeMultiples(c)),
        Descriptor::Curve(x_curve(ctx, 4), ParamSet::PrimeMultiples(c_phi)),
    )
}

const E8_T2: [usize; 5] = [9, 10, 11, 14, 15];
const E8_T3: [usize; 3] = [16, 17, 22];
const E8_T4: [usize; 1] = [23];

pub fn e8_l(ctx: &GroupContext, k: usize) -> OneParamCurve {
    let l1 = curve(ctx, "l1", &[(2, 2, 1), (1, 1, 1), (3, -2, 1), (4, 1, 1), (6, 1, 1), (7, 2, 1), (8, -2, 1)]);
    let f = ctx.field();
    let ext = |c: &OneParamCurve, name: &str, terms: &[(usize, i64, u32)]| {
        let t: Vec<(usize, FqElem, u32)> = terms.iter().map(|&(i, v, e)| (i, f.from_int(v), e)).collect();
        c.extend(name, &t)
    };
    let l2 = ext(&l1, "l2", &[(9, 1, 2), (10, -1, 2), (11, 1, 2), (14, -1, 2), (15, 2, 2)]);
    let l3 = ext(&l2, "l3", &[(16, 4, 3), (17, 2, 3), (22, 3, 3)]);
    let l4 = ext(&l3, "l4", &[(23, 3, 4)]);
    let tail = |roots: &[usize]| Descriptor::coords(roots);
    match k {
        1 => l1.with_tail(tail(&[E8_T2.as_slice(), &E8_T3, &E8_T4].concat())),
        2 => l2.with_tail(tail(&[E8_T3.as_slice(), &E8_T4].concat())),
        3 => l3.with_tail(tail(&E8_T4)),
        4 => l4,
        _ => panic!("no curve l{k}"),
    }
}

/// S1..S4 of the E8 tower.
pub fn e8_s(ctx: &GroupContext, k: usize) -> Descriptor {
    let rest: Vec<usize> = match k {
        1 => [E8_T2.as_slice(), &E8_T3, &E8_T4].concat(),
        2 => [E8_T3.as_slice(), &E8_T4].concat(),
        3 => E8_T4.to_vec(),
        4 => return Descriptor::curve(e8_l(ctx, 4)),
        _ => panic!("no S{k}"),
    };
    Descriptor::product(vec![Descriptor::curve(e8_l(ctx, k)), Descriptor::Coords(rest)])
}

pub fn e8_r(ctx: &GroupContext, k: usize) -> OneParamCurve {
    match k {
        5 => curve(ctx, "r5", &[(30, 1, 1), (31, 1, 1), (32, -1, 1), (33, -1, 1), (34, -2, 1), (35, 2, 1), (36, 2, 1)]),
        4 => curve(ctx, "r4", &[(24, 2, 1), (25, -2, 1), (26, 1, 1), (27, -1, 1), (28, -1, 1), (29, 1, 1)]),
        3 => curve(ctx, "r3", &[(18, 1, 1), (19, -1, 1), (20, -1, 1), (21, 1, 1)]),
        2 => curve(ctx, "r2", &[(12, 1, 1), (13, -1, 1)]),
        _ => panic!("no R{k}"),
    }
}

/// F4 = {l4(uc)} and F5 = {x5(v c_φ)} for B2 = c⁴.
pub fn e8_f4_f5(ctx: &GroupContext, c: FqElem) -> (Descriptor, Descriptor) {
    let c_phi = ctx.field().find_a_phi(c).expect("c is nonzero");
    (
        Descriptor::Curve(e8_l(ctx, 4), ParamSet::PrimeMultiples(c)),
        Descriptor::Curve(x_curve(ctx, 5), ParamSet::PrimeMultiples(c_phi)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn curves_close() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e6 = GroupContext::standard(Kind::E6, 3).unwrap();
        for c in [e6_s1_core(&e6), e6_s2(&e6), e6_r3(&e6), e6_r2(&e6)] {
            assert!(c.closure_check(&e6, 100, &mut rng).passed(), "{}", c.name);
        }
        let e8 = GroupContext::standard(Kind::E8, 5).unwrap();
        for k in 1..=4 {
            assert!(e8_l(&e8, k).closure_check(&e8, 100, &mut rng).passed(), "l{k}");
        }
        for k in 2..=5 {
            assert!(e8_r(&e8, k).closure_check(&e8, 100, &mut rng).passed(), "r{k}");
        }
    }

    #[test]
    fn sizes() {
        let e8 = GroupContext::standard(Kind::E8, 5).unwrap();
        let q = 5u128;
        assert_eq!(e8_s(&e8, 1).size(&e8), q.pow(10));
        assert_eq!(h(Kind::E8).size(&e8), q.pow(26));
        let e6 = GroupContext::standard(Kind::E6, 3).unwrap();
        assert_eq!(e6_s1(&e6).size(&e6), 27);
        assert_eq!(h(Kind::E6).size(&e6), 3u128.pow(13));
    }
}
