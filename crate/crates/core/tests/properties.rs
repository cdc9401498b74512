use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use unichar::character::d4::{half_degree_params, induced, lambda, D4Params};
use unichar::character::{b_invariants, complement_pcgs, orbit_bfs, AbelianSection, BInvariants, LinearCharacter};
use unichar::constructions::{h, tower};
use unichar::cyclotomic::CycInt;
use unichar::fqfield::{FieldSpec, FqElem};
use unichar::root_data::{Kind, RootSystemTable};
use unichar::unipotent::{Descriptor, GroupContext, UniElem};

fn field_params() -> impl Strategy<Value = (u32, usize)> {
    prop_oneof![Just((2, 1)), Just((2, 2)), Just((2, 3)), Just((3, 1)), Just((3, 2)), Just((5, 1)), Just((5, 2))]
}

fn kind_and_q() -> impl Strategy<Value = (Kind, usize)> {
    prop_oneof![Just((Kind::D4, 2)), Just((Kind::D4, 4)), Just((Kind::E6, 3)), Just((Kind::E8, 5))]
}

fn random_elems(ctx: &GroupContext, seed: u64, n: usize) -> Vec<UniElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| ctx.random_element(&mut rng)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn t_a_is_an_index_p_subgroup((p, f) in field_params(), idx in 1usize..625) {
        let k = FieldSpec::conway(p, f).unwrap();
        let a = k.element(1 + idx % (k.q() - 1));
        let set = k.t_a_set(a);
        prop_assert_eq!(set.len(), k.q() / p as usize);
        let members: BTreeSet<FqElem> = set.iter().copied().collect();
        for &x in &set {
            prop_assert!(members.contains(&k.neg(x)));
            for &y in &set {
                prop_assert!(members.contains(&k.add(x, y)));
            }
        }
    }

    #[test]
    fn artin_schreier_factorization((p, f) in field_params(), ia in 0usize..625, it in 0usize..625) {
        let k = FieldSpec::conway(p, f).unwrap();
        let (a, t) = (k.element(ia % k.q()), k.element(it % k.q()));
        let rhs = (0..p as i64).fold(k.one(), |acc, c| k.mul(acc, k.sub(t, k.mul(k.from_int(c), a))));
        prop_assert_eq!(k.artin_schreier(a, t), rhs);
    }

    #[test]
    fn a_phi_is_unique_up_to_prime_scalars((p, f) in field_params(), idx in 1usize..625) {
        let k = FieldSpec::conway(p, f).unwrap();
        let a = k.element(1 + idx % (k.q() - 1));
        let b = k.find_a_phi(a).unwrap();
        let set = k.t_a_set(a);
        let scalars: Vec<FqElem> = k
            .nonzero_elements()
            .filter(|&c| set.iter().all(|&t| k.trace(k.mul(k.mul(c, b), t)) == 0))
            .collect();
        let prime: Vec<FqElem> = (1..p as i64).map(|c| k.from_int(c)).collect();
        prop_assert_eq!(scalars, prime);
    }

    #[test]
    fn zeta_exponents_multiply(p in prop_oneof![Just(2u32), Just(3), Just(5)], e1 in 0u32..5, e2 in 0u32..5) {
        let (e1, e2) = (e1 % p, e2 % p);
        let prod = CycInt::from_exponent(p, e1).mul(&CycInt::from_exponent(p, e2)).unwrap();
        prop_assert_eq!(prod, CycInt::from_exponent(p, (e1 + e2) % p));
    }

    #[test]
    fn associativity_and_inverses((kind, q) in kind_and_q(), seed in any::<u64>()) {
        let ctx = GroupContext::standard(kind, q).unwrap();
        let v = random_elems(&ctx, seed, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(ctx.multiply(&ctx.multiply(a, b), c), ctx.multiply(a, &ctx.multiply(b, c)));
        prop_assert!(ctx.multiply(a, &ctx.inverse(a)).is_identity());
        prop_assert_eq!(&ctx.inverse(&ctx.inverse(a)), a);
    }

    #[test]
    fn center_multiplies_by_coordinate_addition((kind, q) in kind_and_q(), seed in any::<u64>()) {
        let ctx = GroupContext::standard(kind, q).unwrap();
        let f = ctx.field();
        let central = tower(kind).levels[0].clone();
        let v = random_elems(&ctx, seed, 2);
        let keep = |u: &UniElem| ctx.from_coords(&central.iter().map(|&r| (r, ctx.coord(u, r))).collect::<Vec<_>>());
        let (x, y) = (keep(&v[0]), keep(&v[1]));
        let z = ctx.multiply(&x, &y);
        for &r in &central {
            prop_assert_eq!(ctx.coord(&z, r), f.add(ctx.coord(&x, r), ctx.coord(&y, r)));
        }
    }

    #[test]
    fn height_filtration((kind, q) in kind_and_q(), seed in any::<u64>(), cut in 1usize..6) {
        let ctx = GroupContext::standard(kind, q).unwrap();
        let v = random_elems(&ctx, seed, 4);
        let low = |u: &UniElem, w: &UniElem| {
            let c: Vec<(usize, FqElem)> = ctx
                .roots()
                .iter()
                .map(|&r| (r, if ctx.height(r) <= cut { ctx.coord(u, r) } else { ctx.coord(w, r) }))
                .collect();
            ctx.from_coords(&c)
        };
        let (a1, b1) = (&v[0], &v[1]);
        let (a2, b2) = (low(a1, &v[2]), low(b1, &v[3]));
        let (p1, p2) = (ctx.multiply(a1, b1), ctx.multiply(&a2, &b2));
        for &r in ctx.roots().iter().filter(|&&r| ctx.height(r) <= cut) {
            prop_assert_eq!(ctx.coord(&p1, r), ctx.coord(&p2, r));
        }
    }

    #[test]
    fn conjugation_is_an_action((kind, q) in kind_and_q(), seed in any::<u64>()) {
        let ctx = GroupContext::standard(kind, q).unwrap();
        let Descriptor::Coords(roots) = h(kind) else { unreachable!() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs: BTreeMap<usize, FqElem> =
            roots.iter().map(|&r| (r, ctx.field().element(rand::Rng::gen_range(&mut rng, 0..q)))).collect();
        let lam = LinearCharacter::new(Descriptor::Coords(roots), coeffs);
        let v = random_elems(&ctx, seed ^ 1, 2);
        let lhs = lam.conjugate(&ctx, &v[0]).unwrap().conjugate(&ctx, &v[1]).unwrap();
        let rhs = lam.conjugate(&ctx, &ctx.multiply(&v[0], &v[1])).unwrap();
        prop_assert_eq!(lhs.root_coeffs, rhs.root_coeffs);
    }

    #[test]
    fn d4_t0_is_orbit_invariant(seed in any::<u64>()) {
        let ctx = GroupContext::standard(Kind::D4, 4).unwrap();
        let f = ctx.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || f.element(rand::Rng::gen_range(&mut rng, 1..4));
        let a = [pick(), pick(), pick()];
        let b = [pick(), pick(), pick()];
        let lam = lambda(a, b);
        let inv = |l: &LinearCharacter| b_invariants(Kind::D4, f, &l.root_coeffs).unwrap();
        for g in complement_pcgs(&ctx, &[1, 2, 4]) {
            prop_assert_eq!(inv(&lam.conjugate(&ctx, &g).unwrap()), inv(&lam));
        }
        let is_d4 = matches!(inv(&lam), BInvariants::D4 { .. });
        prop_assert!(is_d4);
    }

    #[test]
    fn orbit_times_stabilizer_is_group_order(seed in any::<u64>()) {
        let ctx = GroupContext::standard(Kind::E6, 3).unwrap();
        let spec = tower(Kind::E6);
        let roots: Vec<usize> = spec.levels[..2].concat();
        let section = AbelianSection::new(&ctx, &roots).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b: Vec<FqElem> = roots.iter().map(|_| ctx.field().element(rand::Rng::gen_range(&mut rng, 0..3))).collect();
        let ell = section.functional(&ctx, &b);
        let gens = complement_pcgs(&ctx, &spec.complement);
        let mats: Vec<_> = gens.iter().map(|g| section.conj_matrix(&ctx, g).unwrap()).collect();
        let rep = orbit_bfs(&section, &ell, &mats, 3u128.pow(7), 1_000_000).unwrap();
        prop_assert_eq!(rep.orbit_size * rep.stabilizer_order, 3u128.pow(7));
    }
}

#[test]
fn trivial_character_sum_vanishes() {
    for (p, f) in [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2)] {
        let k = FieldSpec::conway(p, f).unwrap();
        let sum = k.elements().fold(CycInt::zero(p), |acc, x| acc.add(&CycInt::from_exponent(p, k.trace(x))).unwrap());
        assert!(sum.is_zero(), "F_{}", k.q());
    }
    let z = CycInt::from_exponent(2, 1);
    assert_eq!(z.as_integer(), Some((-1).into()));
}

#[test]
fn table_heights_add_and_center_commutes() {
    for kind in Kind::ALL {
        let t = RootSystemTable::load(kind).unwrap();
        for ((i, j), (k, c)) in t.entries() {
            assert_eq!(t.height(k), t.height(i) + t.height(j), "{kind} ({i},{j})");
            assert!(c == 1 || c == -1);
        }
        let ctx = GroupContext::standard(kind, kind.paired_prime() as usize).unwrap();
        let one = ctx.field().one();
        for &z in &tower(kind).levels[0] {
            for &r in ctx.roots() {
                assert!(ctx.commutator(&ctx.letter(z, one), &ctx.letter(r, one)).is_identity(), "{kind} {z} {r}");
            }
        }
    }
}

#[test]
fn h_is_closed_at_d4_q2() {
    let ctx = GroupContext::standard(Kind::D4, 2).unwrap();
    let hd = h(Kind::D4);
    let elems = hd.enumerate(&ctx, 1 << 10).unwrap();
    for a in &elems {
        for b in &elems {
            assert!(hd.contains(&ctx, &ctx.multiply(a, b)));
        }
    }
}

#[test]
fn induced_degree_and_central_restriction() {
    let ctx = GroupContext::standard(Kind::D4, 2).unwrap();
    let f = ctx.field();
    let a = [f.one(); 3];
    let mut params = vec![D4Params { a, t0: f.zero(), b124: f.zero(), b3: f.zero() }];
    params.extend(half_degree_params(&ctx, a, f.one()));
    for p in &params {
        let chi = induced(&ctx, p).unwrap();
        assert_eq!(chi.degree(), chi.transversal.len() as u128);
        let deg = chi.degree() as i64;
        for &r in &[8, 9, 10] {
            let v = chi.value(&ctx, &ctx.letter(r, f.one()));
            assert_eq!(v.as_integer(), Some((-deg).into()), "root {r}");
        }
    }
}
