use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use super::CharError;
use crate::cyclotomic::CycInt;
use crate::fqfield::FqElem;
use crate::unipotent::{Descriptor, GroupContext, Param, ParamSet, UniElem};

/// λ(x_i(t)) = φ(b_i t) on coordinate factors and λ(s(t)) = φ(b t) on curve factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    pub domain: Descriptor,
    pub root_coeffs: BTreeMap<usize, FqElem>,
    pub curve_coeffs: BTreeMap<String, FqElem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub witness: Option<(String, String)>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl LinearCharacter {
    pub fn new(domain: Descriptor, root_coeffs: BTreeMap<usize, FqElem>) -> Self {
        LinearCharacter { domain, root_coeffs, curve_coeffs: BTreeMap::new() }
    }

    pub fn with_curve(mut self, name: &str, b: FqElem) -> Self {
        self.curve_coeffs.insert(name.to_string(), b);
        self
    }

    pub fn coeff(&self, root: usize) -> FqElem {
        self.root_coeffs.get(&root).copied().unwrap_or(FqElem::ZERO)
    }

    /// e with λ(u) = ζ_p^e.
    pub fn exponent(&self, ctx: &GroupContext, u: &UniElem) -> Result<u32, CharError> {
        let params = self
            .domain
            .factorize(ctx, u)
            .ok_or_else(|| CharError::NotInDomain(ctx.format(u)))?;
        Ok(self.exponent_of_params(ctx, &params))
    }

    pub fn exponent_of_params(&self, ctx: &GroupContext, params: &[Param]) -> u32 {
        let f = ctx.field();
        let mut e = 0;
        for prm in params {
            e += match prm {
                Param::Root(i, t) => self.root_coeffs.get(i).map_or(0, |&b| f.trace(f.mul(b, *t))),
                Param::Curve(name, t) => self.curve_coeffs.get(name).map_or(0, |&b| f.trace(f.mul(b, *t))),
                Param::Member(_) => 0,
            };
        }
        e % f.p()
    }

    pub fn eval(&self, ctx: &GroupContext, u: &UniElem) -> Result<CycInt, CharError> {
        Ok(CycInt::from_exponent(ctx.field().p(), self.exponent(ctx, u)?))
    }

    /// λ(uv) = λ(u)λ(v) on all pairs when |domain|² ≤ `exhaustive_limit`,
    /// otherwise on `samples` seeded random pairs.
    pub fn homomorphism_check<R: Rng>(
        &self,
        ctx: &GroupContext,
        exhaustive_limit: u128,
        samples: usize,
        rng: &mut R,
    ) -> HomReport {
        let size = self.domain.size(ctx);
        let exhaustive = size.saturating_mul(size) <= exhaustive_limit;
        let pairs: Vec<(u128, u128)> = if exhaustive {
            (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).collect()
        } else {
            (0..samples).map(|_| (rng.gen_range(0..size), rng.gen_range(0..size))).collect()
        };
        let p = ctx.field().p();
        let elems: Option<Vec<UniElem>> =
            exhaustive.then(|| (0..size).map(|i| self.domain.element_at(ctx, i)).collect());
        let get = |i: u128| match &elems {
            Some(v) => v[i as usize].clone(),
            None => self.domain.element_at(ctx, i),
        };
        for &(a, b) in &pairs {
            let (u, v) = (get(a), get(b));
            let uv = ctx.multiply(&u, &v);
            let ok = match (self.exponent(ctx, &u), self.exponent(ctx, &v), self.exponent(ctx, &uv)) {
                (Ok(x), Ok(y), Ok(z)) => (x + y) % p == z,
                _ => false,
            };
            if !ok {
                return HomReport {
                    pairs_checked: pairs.len(),
                    exhaustive,
                    witness: Some((ctx.format(&u), ctx.format(&v))),
                };
            }
        }
        HomReport { pairs_checked: pairs.len(), exhaustive, witness: None }
    }

    /// ^xλ : h ↦ λ(x h x⁻¹), recovered factor by factor through the trace-dual basis.
    pub fn conjugate(&self, ctx: &GroupContext, x: &UniElem) -> Result<LinearCharacter, CharError> {
        let f = ctx.field();
        let xi = ctx.inverse(x);
        let value = |h: &UniElem| -> Result<u32, CharError> {
            let c = ctx.multiply(&ctx.multiply(x, h), &xi);
            self.exponent(ctx, &c).map_err(|_| CharError::NotNormalizing(ctx.format(x), ctx.format(h)))
        };
        let mut out = LinearCharacter {
            domain: self.domain.clone(),
            root_coeffs: BTreeMap::new(),
            curve_coeffs: BTreeMap::new(),
        };
        for leaf in leaves(&self.domain) {
            match leaf {
                Descriptor::Coords(roots) => {
                    for &r in roots {
                        let vals: Vec<u32> =
                            (0..f.f()).map(|j| value(&ctx.letter(r, f.basis(j)))).collect::<Result<_, _>>()?;
                        out.root_coeffs.insert(r, f.from_functional(&vals));
                    }
                }
                Descriptor::Curve(c, ParamSet::All) => {
                    let vals: Vec<u32> =
                        (0..f.f()).map(|j| value(&c.eval(ctx, f.basis(j)))).collect::<Result<_, _>>()?;
                    out.curve_coeffs.insert(c.name.clone(), f.from_functional(&vals));
                }
                Descriptor::Curve(c, ParamSet::PrimeMultiples(base)) => {
                    let b = if base.is_zero() {
                        FqElem::ZERO
                    } else {
                        let e = value(&c.eval(ctx, *base))?;
                        f.scale(unit_pairing(ctx, *base), e as i64)
                    };
                    out.curve_coeffs.insert(c.name.clone(), b);
                }
                Descriptor::Finite(_) => return Err(CharError::Unsupported("finite factor in a character domain")),
                Descriptor::Product(_) => unreachable!(),
            }
        }
        for g in self.domain.generators(ctx) {
            if out.exponent(ctx, &g)? != value(&g)? {
                return Err(CharError::NotRepresentable(ctx.format(x)));
            }
        }
        Ok(out)
    }

    /// Whether λ(x h x⁻¹) = λ(h) for every domain generator h.
    pub fn is_fixed_by(&self, ctx: &GroupContext, x: &UniElem) -> Result<bool, CharError> {
        let xi = ctx.inverse(x);
        for h in self.domain.generators(ctx) {
            let c = ctx.multiply(&ctx.multiply(x, &h), &xi);
            let e = self.exponent(ctx, &c).map_err(|_| CharError::NotNormalizing(ctx.format(x), ctx.format(&h)))?;
            if e != self.exponent(ctx, &h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self, ctx: &GroupContext) -> serde_json::Value {
        let f = ctx.field();
        let roots: serde_json::Map<String, serde_json::Value> =
            self.root_coeffs.iter().map(|(i, b)| (i.to_string(), f.format(*b).into())).collect();
        let curves: serde_json::Map<String, serde_json::Value> =
            self.curve_coeffs.iter().map(|(n, b)| (n.clone(), f.format(*b).into())).collect();
        serde_json::json!({"domain": self.domain.to_string(), "root_coeffs": roots, "curve_coeffs": curves})
    }
}

pub(crate) fn leaves(d: &Descriptor) -> Vec<&Descriptor> {
    match d {
        Descriptor::Product(parts) => parts.iter().flat_map(leaves).collect(),
        other => vec![other],
    }
}

/// The least a with Tr(a·c) = 1; characters of {s(uc)} are φ(k a ·) for k ∈ F_p.
pub fn unit_pairing(ctx: &GroupContext, c: FqElem) -> FqElem {
    let f = ctx.field();
    f.nonzero_elements().find(|&a| f.trace(f.mul(a, c)) == 1).expect("c is nonzero")
}

/// A commutator pair of target generators not killed by λ.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Obstruction {
    pub left: String,
    pub right: String,
    pub commutator: String,
}

/// All extensions of λ to `extra · domain(λ)`, or the generator pair that obstructs.
pub fn extension_set(
    ctx: &GroupContext,
    lambda: &LinearCharacter,
    extra: &[Descriptor],
) -> Result<Result<Vec<LinearCharacter>, Obstruction>, CharError> {
    let mut parts: Vec<Descriptor> = extra.to_vec();
    parts.push(lambda.domain.clone());
    let target = Descriptor::Product(parts);
    let gens = target.generators(ctx);
    for g in &gens {
        if !lambda.is_fixed_by(ctx, g)? {
            return Ok(Err(Obstruction {
                left: ctx.format(g),
                right: "λ".to_string(),
                commutator: "moves λ".to_string(),
            }));
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = ctx.commutator(a, b);
            let killed = lambda.exponent(ctx, &c).map(|e| e == 0).unwrap_or(false);
            if !killed {
                return Ok(Err(Obstruction { left: ctx.format(a), right: ctx.format(b), commutator: ctx.format(&c) }));
            }
        }
    }
    let f = ctx.field();
    let mut choices: Vec<Vec<(Option<usize>, Option<String>, FqElem)>> = Vec::new();
    for d in extra {
        for leaf in leaves(d) {
            match leaf {
                Descriptor::Coords(roots) => {
                    for &r in roots {
                        choices.push(f.elements().map(|b| (Some(r), None, b)).collect());
                    }
                }
                Descriptor::Curve(c, ParamSet::All) => {
                    choices.push(f.elements().map(|b| (None, Some(c.name.clone()), b)).collect());
                }
                Descriptor::Curve(c, ParamSet::PrimeMultiples(base)) => {
                    let a = if base.is_zero() { FqElem::ZERO } else { unit_pairing(ctx, *base) };
                    let n = if base.is_zero() { 1 } else { f.p() as i64 };
                    choices.push((0..n).map(|k| (None, Some(c.name.clone()), f.scale(a, k))).collect());
                }
                _ => return Err(CharError::Unsupported("finite factor in an extension target")),
            }
        }
    }
    let mut out = vec![LinearCharacter { domain: target.clone(), ..lambda.clone() }];
    for opts in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for base in &out {
            for (root, curve, b) in &opts {
                let mut e = base.clone();
                if let Some(r) = root {
                    e.root_coeffs.insert(*r, *b);
                }
                if let Some(n) = curve {
                    e.curve_coeffs.insert(n.clone(), *b);
                }
                next.push(e);
            }
        }
        out = next;
    }
    Ok(Ok(out))
}
