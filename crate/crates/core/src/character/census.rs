use std::collections::BTreeMap;

use serde::Serialize;

use super::section::AbelianSection;
use super::CharError;
use crate::fqfield::FqElem;
use crate::unipotent::{GroupContext, UniElem};

/// U = A⋊T with A abelian normal; levels of A are listed top down, the first
/// one carrying the fixed central character.
#[derive(Clone, Debug)]
pub struct TowerSpec {
    pub levels: Vec<Vec<usize>>,
    pub complement: Vec<usize>,
}

impl TowerSpec {
    pub fn section_roots(&self) -> Vec<usize> {
        self.levels.iter().flatten().copied().collect()
    }
}

/// One orbit of full characters of A, with its stabilizer in T.
#[derive(Clone, Debug)]
pub struct CensusLeaf {
    pub coeffs: BTreeMap<usize, FqElem>,
    pub stabilizer: Vec<UniElem>,
    pub stabilizer_order: u128,
    pub degree: u128,
    pub count: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub by_degree: BTreeMap<u128, u128>,
    pub leaves: usize,
    pub sum_of_squares: u128,
    pub expected_sum_of_squares: u128,
    #[serde(skip)]
    pub detail: Vec<CensusLeaf>,
}

/// The T-pcgs x_i(e_j), ascending height, normal-form order within a height.
pub fn complement_pcgs(ctx: &GroupContext, roots: &[usize]) -> Vec<UniElem> {
    let mut sorted = roots.to_vec();
    sorted.sort_by_key(|&r| (ctx.height(r), ctx.position(r)));
    let f = ctx.field();
    sorted.iter().flat_map(|&r| (0..f.f()).map(move |j| ctx.letter(r, f.basis(j)))).collect()
}

/// Kernel of a homomorphism δ from the group with pcgs `pcgs` into F_p^n,
/// returned as an induced pcgs, together with echelon rows spanning the image.
pub fn pc_kernel(
    ctx: &GroupContext,
    pcgs: &[UniElem],
    delta: impl Fn(&UniElem) -> Result<Vec<u32>, CharError>,
) -> Result<(Vec<UniElem>, Vec<Vec<u32>>), CharError> {
    let p = ctx.field().p();
    let mut image: Vec<(usize, Vec<u32>, UniElem)> = Vec::new();
    let mut kernel = Vec::new();
    for g in pcgs.iter().rev() {
        let mut v = delta(g)?;
        let mut w = ctx.identity();
        for (piv, row, elem) in &image {
            let k = v[*piv];
            if k == 0 {
                continue;
            }
            let m = k * inv_mod(row[*piv], p) % p;
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + p * p - m * y) % p;
            }
            w = ctx.multiply(&w, &ctx.power(elem, m as u64));
        }
        let gw = ctx.multiply(g, &ctx.inverse(&w));
        match v.iter().position(|&x| x != 0) {
            None => kernel.push(gw),
            Some(piv) => {
                let at = image.partition_point(|(c, _, _)| *c < piv);
                image.insert(at, (piv, v, gw));
            }
        }
    }
    kernel.reverse();
    Ok((kernel, image.into_iter().map(|(_, v, _)| v).collect()))
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("unit")
}

/// Enumerates Irr(U | ℓ_central) through the affine level actions of T on the
/// characters of A.
pub fn run_census(ctx: &GroupContext, spec: &TowerSpec, central: &[FqElem]) -> Result<Census, CharError> {
    let roots = spec.section_roots();
    let section = AbelianSection::new(ctx, &roots)?;
    let pcgs = complement_pcgs(ctx, &spec.complement);
    let mut ell = vec![0u32; section.dim()];
    for (&r, &b) in spec.levels[0].iter().zip(central) {
        let blk = section.block(r).expect("central root");
        ell[blk].copy_from_slice(&ctx.field().functional(b));
    }
    let mut leaves = Vec::new();
    descend(ctx, spec, &section, 1, ell, pcgs, &mut leaves)?;
    let p = ctx.field().p() as u128;
    let t_order = p.pow(pcgs_len(ctx, spec) as u32);
    let mut by_degree = BTreeMap::new();
    let mut sum = 0u128;
    for leaf in &leaves {
        *by_degree.entry(leaf.degree).or_insert(0) += leaf.count;
        sum += leaf.count * leaf.degree * leaf.degree;
    }
    let q = ctx.field().q() as u128;
    let expected = t_order * q.pow((roots.len() - spec.levels[0].len()) as u32);
    Ok(Census { by_degree, leaves: leaves.len(), sum_of_squares: sum, expected_sum_of_squares: expected, detail: leaves })
}

fn pcgs_len(ctx: &GroupContext, spec: &TowerSpec) -> usize {
    spec.complement.len() * ctx.field().f()
}

fn descend(
    ctx: &GroupContext,
    spec: &TowerSpec,
    section: &AbelianSection,
    k: usize,
    ell: Vec<u32>,
    stab: Vec<UniElem>,
    out: &mut Vec<CensusLeaf>,
) -> Result<(), CharError> {
    let p = ctx.field().p();
    if k == spec.levels.len() {
        for (i, a) in stab.iter().enumerate() {
            for b in &stab[i + 1..] {
                if !ctx.commutator(a, b).is_identity() {
                    return Err(CharError::Unsupported("non-abelian stabilizer at a census leaf"));
                }
            }
        }
        let s_order = (p as u128).pow(stab.len() as u32);
        let t_order = (p as u128).pow(pcgs_len(ctx, spec) as u32);
        let coeffs = section.coeffs(ctx, &ell);
        out.push(CensusLeaf {
            coeffs: section.roots().iter().copied().zip(coeffs).collect(),
            stabilizer: stab,
            stabilizer_order: s_order,
            degree: t_order / s_order,
            count: s_order,
        });
        return Ok(());
    }
    let level = &spec.levels[k];
    let lower: Vec<usize> = spec.levels[k..].iter().flatten().copied().collect();
    let cols: Vec<usize> = level.iter().flat_map(|&r| section.block(r).expect("level root")).collect();
    let delta = |g: &UniElem| -> Result<Vec<u32>, CharError> {
        let gi = ctx.inverse(g);
        let mut d = Vec::with_capacity(cols.len());
        for &c in &cols {
            let x = section.basis_element(ctx, c);
            let y = ctx.multiply(&ctx.multiply(g, &x), &gi);
            let v = section.vector(ctx, &y).ok_or_else(|| CharError::NotNormalizing(ctx.format(g), ctx.format(&x)))?;
            let xv = section.vector(ctx, &x).expect("basis element");
            for &r in &lower {
                for i in section.block(r).expect("lower root") {
                    if v[i] != xv[i] {
                        return Err(CharError::LevelLeak(r));
                    }
                }
            }
            d.push((section.pair(&ell, &v) + p - section.pair(&ell, &xv)) % p);
        }
        Ok(d)
    };
    let (kernel, image) = pc_kernel(ctx, &stab, delta)?;
    let pivots: Vec<usize> = image.iter().map(|v| v.iter().position(|&x| x != 0).expect("nonzero")).collect();
    let free: Vec<usize> = (0..cols.len()).filter(|c| !pivots.contains(c)).collect();
    let reps = (p as u64).pow(free.len() as u32);
    for idx in 0..reps {
        let mut next = ell.clone();
        let mut rest = idx;
        for &c in &free {
            next[cols[c]] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        descend(ctx, spec, section, k + 1, next, kernel.clone(), out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Kind;

    fn run(kind: Kind, q: usize, spec: TowerSpec) -> Census {
        let ctx = GroupContext::standard(kind, q).unwrap();
        let ones = vec![ctx.field().one(); spec.levels[0].len()];
        let c = run_census(&ctx, &spec, &ones).unwrap();
        assert_eq!(c.sum_of_squares, c.expected_sum_of_squares);
        c
    }

    #[test]
    fn d4_census() {
        let spec = TowerSpec { levels: vec![vec![8, 9, 10], vec![5, 6, 7], vec![3]], complement: vec![1, 2, 4] };
        let c = run(Kind::D4, 2, spec.clone());
        assert_eq!(c.by_degree, BTreeMap::from([(4, 4), (8, 1)]));
        let c = run(Kind::D4, 4, spec);
        assert_eq!(c.by_degree, BTreeMap::from([(32, 12), (64, 1)]));
    }

    #[test]
    fn e6_census() {
        let spec = TowerSpec {
            levels: vec![(17..=21).collect(), (12..=16).collect(), vec![8, 9, 10], vec![4]],
            complement: vec![2, 1, 3, 7, 5, 6, 11],
        };
        let c = run(Kind::E6, 3, spec);
        assert_eq!(c.by_degree, BTreeMap::from([(729, 9), (2187, 8)]));
    }

    #[test]
    fn e8_census() {
        let spec = TowerSpec {
            levels: vec![
                (37..=43).collect(),
                (30..=36).collect(),
                (24..=29).collect(),
                (18..=21).collect(),
                vec![12, 13],
                vec![5],
            ],
            complement: vec![1, 3, 4, 2, 6, 7, 8, 9, 10, 11, 14, 15, 16, 17, 22, 23],
        };
        let c = run(Kind::E8, 5, spec);
        let q16 = 5u128.pow(16);
        println!("{:?}", c.by_degree);
        assert_eq!(c.by_degree, BTreeMap::from([(q16 / 5, 25), (q16, 624)]));
    }
}
