use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::CharError;
use crate::fqfield::FqElem;
use crate::linalg;
use crate::unipotent::{GroupContext, UniElem};

/// An abelian normal subgroup spanned by root groups, with its linear
/// characters written as F_p-functionals ℓ_{k,j} = Tr(b_k e_j).
#[derive(Clone, Debug)]
pub struct AbelianSection {
    roots: Vec<usize>,
    f: usize,
    p: u32,
}

impl AbelianSection {
    pub fn new(ctx: &GroupContext, roots: &[usize]) -> Result<Self, CharError> {
        for &i in roots {
            for &j in roots {
                if ctx.table().commutator(i, j).is_some_and(|(k, _)| ctx.position(k).is_some()) {
                    return Err(CharError::NotAbelian(i, j));
                }
            }
        }
        Ok(AbelianSection { roots: roots.to_vec(), f: ctx.field().f(), p: ctx.field().p() })
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.roots.len() * self.f
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Coordinate block of root `r` inside a functional.
    pub fn block(&self, r: usize) -> Option<std::ops::Range<usize>> {
        let k = self.roots.iter().position(|&x| x == r)?;
        Some(k * self.f..(k + 1) * self.f)
    }

    pub fn functional(&self, ctx: &GroupContext, b: &[FqElem]) -> Vec<u32> {
        b.iter().flat_map(|&x| ctx.field().functional(x)).collect()
    }

    pub fn coeffs(&self, ctx: &GroupContext, v: &[u32]) -> Vec<FqElem> {
        v.chunks(self.f).map(|c| ctx.field().from_functional(c)).collect()
    }

    /// F_p coordinates of an element supported on the section.
    pub fn vector(&self, ctx: &GroupContext, u: &UniElem) -> Option<Vec<u32>> {
        let mut v = Vec::with_capacity(self.dim());
        let mut seen = 0;
        for &r in &self.roots {
            let t = ctx.coord(u, r);
            if !t.is_zero() {
                seen += 1;
            }
            v.extend(t.coeffs()[..self.f].iter().map(|&c| c as u32));
        }
        let support = u.coords().iter().filter(|c| !c.is_zero()).count();
        (seen == support).then_some(v)
    }

    pub fn basis_element(&self, ctx: &GroupContext, idx: usize) -> UniElem {
        ctx.letter(self.roots[idx / self.f], ctx.field().basis(idx % self.f))
    }

    /// Row c is the vector of g·x_c·g⁻¹ for the basis element x_c.
    pub fn conj_matrix(&self, ctx: &GroupContext, g: &UniElem) -> Result<Vec<Vec<u32>>, CharError> {
        let gi = ctx.inverse(g);
        (0..self.dim())
            .map(|c| {
                let x = self.basis_element(ctx, c);
                let y = ctx.multiply(&ctx.multiply(g, &x), &gi);
                self.vector(ctx, &y).ok_or_else(|| CharError::NotNormalizing(ctx.format(g), ctx.format(&x)))
            })
            .collect()
    }

    /// (^gℓ)(x) = ℓ(g x g⁻¹) for the matrix of g.
    pub fn act(&self, m: &[Vec<u32>], ell: &[u32]) -> Vec<u32> {
        let p = self.p;
        m.iter().map(|row| row.iter().zip(ell).map(|(a, b)| a * b).sum::<u32>() % p).collect()
    }

    pub fn pair(&self, ell: &[u32], v: &[u32]) -> u32 {
        ell.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % self.p
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub orbit_size: u128,
    pub group_order: u128,
    pub stabilizer_order: u128,
    #[serde(skip)]
    pub orbit: Vec<Vec<u32>>,
}

/// Closure of `start` under the given generator matrices.
pub fn orbit_bfs(
    section: &AbelianSection,
    start: &[u32],
    mats: &[Vec<Vec<u32>>],
    group_order: u128,
    budget: usize,
) -> Result<OrbitReport, CharError> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut orbit = Vec::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(v) = queue.pop_front() {
        for m in mats {
            let w = section.act(m, &v);
            if !seen.contains(&w) {
                if seen.len() >= budget {
                    return Err(CharError::Budget(budget as u128));
                }
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
        orbit.push(v);
    }
    let size = orbit.len() as u128;
    if group_order % size != 0 {
        return Err(CharError::OrbitIndex { orbit: size, group: group_order });
    }
    Ok(OrbitReport { orbit_size: size, group_order, stabilizer_order: group_order / size, orbit })
}

/// Elements of the level roots on which every generator y has ℓ(y⁻¹ x y) = ℓ(x).
pub fn scalar_locus(
    ctx: &GroupContext,
    section: &AbelianSection,
    ell: &[u32],
    level: &[usize],
    gens: &[UniElem],
) -> Result<Vec<UniElem>, CharError> {
    let p = section.p();
    let f = ctx.field().f();
    let cols: Vec<usize> = level.iter().flat_map(|&r| section.block(r).expect("level root in section")).collect();
    let mut rows = Vec::new();
    for y in gens {
        let m = section.conj_matrix(ctx, &ctx.inverse(y))?;
        let moved = section.act(&m, ell);
        rows.push(cols.iter().map(|&c| (moved[c] + p - ell[c]) % p).collect::<Vec<u32>>());
    }
    let basis = linalg::nullspace(&rows, cols.len(), p);
    let mut out = Vec::new();
    let n = basis.len() as u32;
    for idx in 0..(p as u64).pow(n) {
        let mut coeff = vec![0u32; cols.len()];
        let mut rest = idx;
        for b in &basis {
            let k = (rest % p as u64) as u32;
            rest /= p as u64;
            for (c, x) in coeff.iter_mut().zip(b) {
                *c = (*c + k * x) % p;
            }
        }
        let coords: Vec<(usize, FqElem)> = level
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, ctx.field().from_coeffs(&coeff[i * f..(i + 1) * f])))
            .collect();
        out.push(ctx.from_coords(&coords));
    }
    Ok(out)
}
