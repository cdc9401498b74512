//! Normal-form elements of the unipotent quotients, multiplication by
//! collection, one-parameter curves and subgroup descriptors.

use std::fmt;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::fqfield::{FieldError, FieldSpec, FqElem};
use crate::root_data::{Kind, RootSystemTable, TableError};

const MAX_ROOTS: usize = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("root {0} is not in the quotient")]
    UnknownRoot(usize),
    #[error("enumeration of {required} elements exceeds the budget of {budget}")]
    Budget { required: u128, budget: u128 },
    #[error("cannot parse word {0:?}: {1}")]
    Word(String, String),
    #[error("curve {0} has no linear term to read its parameter from")]
    NoDesignatedTerm(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// A quotient group U together with its field of definition.
#[derive(Clone, Debug)]
pub struct GroupContext {
    table: RootSystemTable,
    field: FieldSpec,
    roots: Vec<usize>,
    pos: Vec<Option<usize>>,
    heights: Vec<usize>,
    comm: Vec<Option<(usize, bool)>>,
}

/// ∏ x_i(t_i) over the quotient roots in normal-form order, stored densely.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UniElem {
    coords: Vec<FqElem>,
}

impl UniElem {
    pub fn coords(&self) -> &[FqElem] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(FqElem::is_zero)
    }
}

impl GroupContext {
    pub fn new(kind: Kind, field: FieldSpec) -> Result<Self, GroupError> {
        Ok(Self::with_table(RootSystemTable::load(kind)?, field))
    }

    /// The kind's table over the Conway field of order q.
    pub fn standard(kind: Kind, q: usize) -> Result<Self, GroupError> {
        Self::new(kind, FieldSpec::of_order(q)?)
    }

    pub fn with_table(table: RootSystemTable, field: FieldSpec) -> Self {
        let roots = table.quotient_order();
        let max = table.roots().map(|r| r.index).max().unwrap_or(0);
        let mut pos = vec![None; max + 1];
        for (k, &r) in roots.iter().enumerate() {
            pos[r] = Some(k);
        }
        let n = roots.len();
        let heights = roots.iter().map(|&r| table.height(r)).collect();
        let mut comm = vec![None; n * n];
        for s in 0..n {
            for r in 0..n {
                if let Some((k, c)) = table.commutator(roots[s], roots[r]) {
                    if let Some(kp) = pos.get(k).copied().flatten() {
                        comm[s * n + r] = Some((kp, c > 0));
                    }
                }
            }
        }
        GroupContext { table, field, roots, pos, heights, comm }
    }

    pub fn table(&self) -> &RootSystemTable {
        &self.table
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn kind(&self) -> Kind {
        self.table.kind
    }

    /// Number of quotient roots.
    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    /// Quotient roots in normal-form order.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn position(&self, root: usize) -> Option<usize> {
        self.pos.get(root).copied().flatten()
    }

    fn pos_of(&self, root: usize) -> usize {
        self.position(root).unwrap_or_else(|| panic!("root {root} is not in the quotient"))
    }

    pub fn height(&self, root: usize) -> usize {
        self.heights[self.pos_of(root)]
    }

    pub fn identity(&self) -> UniElem {
        UniElem { coords: vec![FqElem::ZERO; self.rank()] }
    }

    /// Coordinate of `root` in the normal form of u.
    pub fn coord(&self, u: &UniElem, root: usize) -> FqElem {
        u.coords[self.pos_of(root)]
    }

    /// x_i(t).
    pub fn letter(&self, root: usize, t: FqElem) -> UniElem {
        let mut u = self.identity();
        u.coords[self.pos_of(root)] = t;
        u
    }

    /// The product of the given letters, in the given order.
    pub fn from_letters(&self, letters: &[(usize, FqElem)]) -> UniElem {
        let mut u = self.identity();
        for &(r, t) in letters {
            self.mul_letter(&mut u.coords, self.pos_of(r), t);
        }
        u
    }

    /// Builds an element directly from normal-form coordinates.
    pub fn from_coords(&self, coords: &[(usize, FqElem)]) -> UniElem {
        let mut u = self.identity();
        for &(r, t) in coords {
            u.coords[self.pos_of(r)] = t;
        }
        u
    }

    fn mul_letter(&self, u: &mut [FqElem], r: usize, t: FqElem) {
        if t.is_zero() {
            return;
        }
        let n = self.rank();
        let f = &self.field;
        let mut tail = [(0usize, FqElem::ZERO); MAX_ROOTS];
        let mut m = 0;
        for (s, c) in u.iter_mut().enumerate().skip(r + 1) {
            if !c.is_zero() {
                tail[m] = (s, *c);
                m += 1;
                *c = FqElem::ZERO;
            }
        }
        u[r] = f.add(u[r], t);
        for &(s, us) in &tail[..m] {
            self.mul_letter(u, s, us);
            if let Some((k, plus)) = self.comm[s * n + r] {
                let v = f.mul(us, t);
                self.mul_letter(u, k, if plus { v } else { f.neg(v) });
            }
        }
    }

    pub fn multiply(&self, a: &UniElem, b: &UniElem) -> UniElem {
        let mut u = a.clone();
        for (r, &t) in b.coords.iter().enumerate() {
            self.mul_letter(&mut u.coords, r, t);
        }
        u
    }

    pub fn inverse(&self, a: &UniElem) -> UniElem {
        let mut u = self.identity();
        for (r, &t) in a.coords.iter().enumerate().rev() {
            self.mul_letter(&mut u.coords, r, self.field.neg(t));
        }
        u
    }

    /// a⁻¹ b⁻¹ a b.
    pub fn commutator(&self, a: &UniElem, b: &UniElem) -> UniElem {
        let ab = self.multiply(a, b);
        let ba = self.multiply(b, a);
        self.multiply(&self.inverse(&ba), &ab)
    }

    /// x h x⁻¹.
    pub fn conjugate(&self, x: &UniElem, h: &UniElem) -> UniElem {
        self.multiply(&self.multiply(x, h), &self.inverse(x))
    }

    pub fn power(&self, a: &UniElem, k: u64) -> UniElem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> UniElem {
        let q = self.field.q();
        UniElem { coords: (0..self.rank()).map(|_| self.field.element(rng.gen_range(0..q))).collect() }
    }

    pub fn order(&self) -> u128 {
        (self.field.q() as u128).pow(self.rank() as u32)
    }

    /// Element number `idx` of U in lexicographic coordinate order.
    pub fn element_at(&self, mut idx: u128) -> UniElem {
        let q = self.field.q() as u128;
        let mut coords = vec![FqElem::ZERO; self.rank()];
        for c in coords.iter_mut().rev() {
            *c = self.field.element((idx % q) as usize);
            idx /= q;
        }
        UniElem { coords }
    }

    /// "x1(1)*x3(1)*x5(1)"; the identity prints as "1".
    pub fn format(&self, u: &UniElem) -> String {
        let parts: Vec<String> = u
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| format!("x{}({})", self.roots[k], self.field.format_short(c)))
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses `xI(c)` factors joined by `*`, each optionally followed by `^-1`.
    pub fn parse_word(&self, word: &str) -> Result<UniElem, GroupError> {
        let err = |msg: &str| GroupError::Word(word.to_string(), msg.to_string());
        let mut u = self.identity();
        let trimmed = word.trim();
        if trimmed == "1" || trimmed.is_empty() {
            return Ok(u);
        }
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (body, inverse) = match factor.strip_suffix("^-1") {
                Some(b) => (b.trim(), true),
                None => (factor, false),
            };
            let rest = body.strip_prefix('x').ok_or_else(|| err("factor must start with x"))?;
            let open = rest.find('(').ok_or_else(|| err("missing '('"))?;
            let inner = rest[open + 1..].strip_suffix(')').ok_or_else(|| err("missing ')'"))?;
            let root: usize = rest[..open].parse().map_err(|_| err("bad root index"))?;
            if self.position(root).is_none() {
                return Err(GroupError::UnknownRoot(root));
            }
            let t = self.field.parse(inner)?;
            let mut g = self.letter(root, t);
            if inverse {
                g = self.inverse(&g);
            }
            u = self.multiply(&u, &g);
        }
        Ok(u)
    }

    pub fn to_json(&self, u: &UniElem) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = u
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (self.roots[k].to_string(), serde_json::Value::from(self.field.format(c))))
            .collect();
        serde_json::json!({ "coords": map })
    }

    /// Scans the table for the center of the quotient.
    pub fn center_verify(&self) -> CenterReport {
        let n = self.rank();
        let claimed = self.table.central_roots();
        let mut failures = Vec::new();
        for &i in &claimed {
            let pi = self.pos_of(i);
            for j in 0..n {
                if self.comm[pi * n + j].is_some() {
                    failures.push(format!("claimed central root {i} fails to commute with {}", self.roots[j]));
                }
            }
        }
        let mut witnesses = Vec::new();
        for (pi, &i) in self.roots.iter().enumerate() {
            if claimed.contains(&i) {
                continue;
            }
            match (0..n).find(|&j| self.comm[pi * n + j].is_some()) {
                Some(j) => witnesses.push((i, self.roots[j])),
                None => failures.push(format!("root {i} commutes with everything but is not claimed central")),
            }
        }
        CenterReport { center: claimed, witnesses, failures }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub center: Vec<usize>,
    pub witnesses: Vec<(usize, usize)>,
    pub failures: Vec<String>,
}

impl CenterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// t ↦ ∏ x_i(c_i t^{e_i}), letters multiplied in the listed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParamCurve {
    pub name: String,
    pub terms: Vec<(usize, FqElem, u32)>,
    pub tail: Option<Box<Descriptor>>,
}

impl OneParamCurve {
    pub fn new(name: &str, terms: Vec<(usize, FqElem, u32)>) -> Self {
        OneParamCurve { name: name.to_string(), terms, tail: None }
    }

    pub fn with_tail(mut self, tail: Descriptor) -> Self {
        self.tail = Some(Box::new(tail));
        self
    }

    /// The same curve with extra terms appended.
    pub fn extend(&self, name: &str, terms: &[(usize, FqElem, u32)]) -> Self {
        let mut all = self.terms.clone();
        all.extend_from_slice(terms);
        OneParamCurve { name: name.to_string(), terms: all, tail: None }
    }

    pub fn eval(&self, ctx: &GroupContext, t: FqElem) -> UniElem {
        let f = ctx.field();
        let letters: Vec<(usize, FqElem)> =
            self.terms.iter().map(|&(i, c, e)| (i, f.mul(c, f.pow(t, e as u64)))).collect();
        ctx.from_letters(&letters)
    }

    /// The linear term whose coordinate carries the parameter: first among the
    /// lowest-height linear terms in normal-form order.
    pub fn designated(&self, ctx: &GroupContext) -> Result<(usize, FqElem), GroupError> {
        self.terms
            .iter()
            .filter(|&&(_, c, e)| e == 1 && !c.is_zero())
            .min_by_key(|&&(i, _, _)| (ctx.height(i), ctx.position(i)))
            .map(|&(i, c, _)| (i, c))
            .ok_or_else(|| GroupError::NoDesignatedTerm(self.name.clone()))
    }

    /// Checks eval(t)·eval(u)·eval(t+u)⁻¹ ∈ tail on all pairs when q² ≤ 10^4,
    /// otherwise on `samples` seeded random pairs.
    pub fn closure_check<R: Rng>(&self, ctx: &GroupContext, samples: usize, rng: &mut R) -> ClosureReport {
        let f = ctx.field();
        let q = f.q();
        let pairs: Vec<(FqElem, FqElem)> = if q * q <= 10_000 {
            f.elements().flat_map(|t| f.elements().map(move |u| (t, u))).collect()
        } else {
            (0..samples).map(|_| (f.element(rng.gen_range(0..q)), f.element(rng.gen_range(0..q)))).collect()
        };
        let mut violation = None;
        let zero_ok = self.eval(ctx, FqElem::ZERO).is_identity();
        for &(t, u) in &pairs {
            let lhs = ctx.multiply(&self.eval(ctx, t), &self.eval(ctx, u));
            let d = ctx.multiply(&lhs, &ctx.inverse(&self.eval(ctx, f.add(t, u))));
            let ok = match &self.tail {
                None => d.is_identity(),
                Some(tail) => tail.contains(ctx, &d),
            };
            if !ok {
                violation = Some((f.format(t), f.format(u), ctx.format(&d)));
                break;
            }
        }
        ClosureReport { curve: self.name.clone(), pairs_checked: pairs.len(), zero_is_identity: zero_ok, violation }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub curve: String,
    pub pairs_checked: usize,
    pub zero_is_identity: bool,
    pub violation: Option<(String, String, String)>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.zero_is_identity && self.violation.is_none()
    }
}

/// Parameter range of a curve factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamSet {
    All,
    /// {u·c : u ∈ F_p}.
    PrimeMultiples(FqElem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Coords(Vec<usize>),
    Curve(OneParamCurve, ParamSet),
    Finite(Vec<UniElem>),
    Product(Vec<Descriptor>),
}

/// One factor's parameter in a factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Root(usize, FqElem),
    Curve(String, FqElem),
    Member(usize),
}

impl Descriptor {
    pub fn coords(roots: &[usize]) -> Self {
        Descriptor::Coords(roots.to_vec())
    }

    pub fn curve(c: OneParamCurve) -> Self {
        Descriptor::Curve(c, ParamSet::All)
    }

    pub fn product(parts: Vec<Descriptor>) -> Self {
        Descriptor::Product(parts)
    }

    pub fn trivial() -> Self {
        Descriptor::Coords(Vec::new())
    }

    pub fn size(&self, ctx: &GroupContext) -> u128 {
        let q = ctx.field().q() as u128;
        match self {
            Descriptor::Coords(r) => q.pow(r.len() as u32),
            Descriptor::Curve(_, ParamSet::All) => q,
            Descriptor::Curve(_, ParamSet::PrimeMultiples(c)) => {
                if c.is_zero() {
                    1
                } else {
                    ctx.field().p() as u128
                }
            }
            Descriptor::Finite(v) => v.len() as u128,
            Descriptor::Product(parts) => parts.iter().map(|d| d.size(ctx)).product(),
        }
    }

    fn leaves(&self) -> Vec<&Descriptor> {
        match self {
            Descriptor::Product(parts) => parts.iter().flat_map(|d| d.leaves()).collect(),
            d => vec![d],
        }
    }

    /// Element number `idx`, first factor varying slowest.
    pub fn element_at(&self, ctx: &GroupContext, idx: u128) -> UniElem {
        let leaves = self.leaves();
        let sizes: Vec<u128> = leaves.iter().map(|d| d.size(ctx)).collect();
        let mut digits = vec![0u128; leaves.len()];
        let mut rest = idx;
        for k in (0..leaves.len()).rev() {
            digits[k] = rest % sizes[k];
            rest /= sizes[k];
        }
        let mut u = ctx.identity();
        for (leaf, &d) in leaves.iter().zip(&digits) {
            let g = leaf.leaf_element(ctx, d);
            u = ctx.multiply(&u, &g);
        }
        u
    }

    fn leaf_element(&self, ctx: &GroupContext, idx: u128) -> UniElem {
        let f = ctx.field();
        match self {
            Descriptor::Coords(roots) => {
                let q = f.q() as u128;
                let mut rest = idx;
                let mut params = vec![FqElem::ZERO; roots.len()];
                for k in (0..roots.len()).rev() {
                    params[k] = f.element((rest % q) as usize);
                    rest /= q;
                }
                let letters: Vec<(usize, FqElem)> = roots.iter().copied().zip(params).collect();
                ctx.from_letters(&letters)
            }
            Descriptor::Curve(c, ParamSet::All) => c.eval(ctx, f.element(idx as usize)),
            Descriptor::Curve(c, ParamSet::PrimeMultiples(base)) => c.eval(ctx, f.scale(*base, idx as i64)),
            Descriptor::Finite(v) => v[idx as usize].clone(),
            Descriptor::Product(_) => self.element_at(ctx, idx),
        }
    }

    pub fn enumerate(&self, ctx: &GroupContext, budget: u128) -> Result<Vec<UniElem>, GroupError> {
        let size = self.size(ctx);
        if size > budget {
            return Err(GroupError::Budget { required: size, budget });
        }
        Ok((0..size).map(|i| self.element_at(ctx, i)).collect())
    }

    /// Generators: letters x_i(e_j) for coordinate factors, curve points at the
    /// basis elements, and all members of finite factors.
    pub fn generators(&self, ctx: &GroupContext) -> Vec<UniElem> {
        let f = ctx.field();
        let mut out = Vec::new();
        for leaf in self.leaves() {
            match leaf {
                Descriptor::Coords(roots) => {
                    for &r in roots {
                        for j in 0..f.f() {
                            out.push(ctx.letter(r, f.basis(j)));
                        }
                    }
                }
                Descriptor::Curve(c, ParamSet::All) => {
                    for j in 0..f.f() {
                        out.push(c.eval(ctx, f.basis(j)));
                    }
                }
                Descriptor::Curve(c, ParamSet::PrimeMultiples(base)) => {
                    if !base.is_zero() {
                        out.push(c.eval(ctx, *base));
                    }
                }
                Descriptor::Finite(v) => out.extend(v.iter().filter(|u| !u.is_identity()).cloned()),
                Descriptor::Product(_) => unreachable!(),
            }
        }
        out
    }

    /// Peels factors left to right; `None` when u is not in the subset.
    pub fn factorize(&self, ctx: &GroupContext, u: &UniElem) -> Option<Vec<Param>> {
        let leaves = self.leaves();
        let mut out = Vec::new();
        if peel(ctx, &leaves, u.clone(), &mut out) {
            Some(out)
        } else {
            None
        }
    }

    pub fn contains(&self, ctx: &GroupContext, u: &UniElem) -> bool {
        self.factorize(ctx, u).is_some()
    }

    /// Rebuilds the element from a factorization.
    pub fn assemble(&self, ctx: &GroupContext, params: &[Param]) -> UniElem {
        let mut u = ctx.identity();
        let mut it = params.iter();
        for leaf in self.leaves() {
            let g = match leaf {
                Descriptor::Coords(roots) => {
                    let letters: Vec<(usize, FqElem)> = roots
                        .iter()
                        .map(|_| match it.next() {
                            Some(Param::Root(r, t)) => (*r, *t),
                            _ => panic!("factorization does not match descriptor"),
                        })
                        .collect();
                    ctx.from_letters(&letters)
                }
                Descriptor::Curve(c, _) => match it.next() {
                    Some(Param::Curve(_, t)) => c.eval(ctx, *t),
                    _ => panic!("factorization does not match descriptor"),
                },
                Descriptor::Finite(v) => match it.next() {
                    Some(Param::Member(k)) => v[*k].clone(),
                    _ => panic!("factorization does not match descriptor"),
                },
                Descriptor::Product(_) => unreachable!(),
            };
            u = ctx.multiply(&u, &g);
        }
        u
    }
}

fn peel(ctx: &GroupContext, leaves: &[&Descriptor], mut r: UniElem, out: &mut Vec<Param>) -> bool {
    let Some((leaf, rest)) = leaves.split_first() else {
        return r.is_identity();
    };
    let f = ctx.field();
    match leaf {
        Descriptor::Coords(roots) => {
            for &i in roots {
                let t = ctx.coord(&r, i);
                out.push(Param::Root(i, t));
                if !t.is_zero() {
                    r = ctx.multiply(&ctx.letter(i, f.neg(t)), &r);
                }
            }
            peel(ctx, rest, r, out)
        }
        Descriptor::Curve(c, set) => {
            let Ok((des, coeff)) = c.designated(ctx) else { return false };
            let t = f.div(ctx.coord(&r, des), coeff).expect("designated coefficient is nonzero");
            if let ParamSet::PrimeMultiples(base) = set {
                let ok = (0..f.p() as i64).any(|k| f.scale(*base, k) == t);
                if !ok {
                    return false;
                }
            }
            out.push(Param::Curve(c.name.clone(), t));
            let r = ctx.multiply(&ctx.inverse(&c.eval(ctx, t)), &r);
            peel(ctx, rest, r, out)
        }
        Descriptor::Finite(v) => {
            let mark = out.len();
            for (k, m) in v.iter().enumerate() {
                out.push(Param::Member(k));
                let r2 = ctx.multiply(&ctx.inverse(m), &r);
                if peel(ctx, rest, r2, out) {
                    return true;
                }
                out.truncate(mark);
            }
            false
        }
        Descriptor::Product(_) => unreachable!(),
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Coords(r) if r.is_empty() => write!(f, "1"),
            Descriptor::Coords(r) => {
                let parts: Vec<String> = r.iter().map(|i| format!("X{i}")).collect();
                write!(f, "{}", parts.join(""))
            }
            Descriptor::Curve(c, ParamSet::All) => write!(f, "{}", c.name),
            Descriptor::Curve(c, ParamSet::PrimeMultiples(_)) => write!(f, "F[{}]", c.name),
            Descriptor::Finite(v) => write!(f, "{{{} elements}}", v.len()),
            Descriptor::Product(parts) => {
                for p in parts {
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4(q: usize) -> GroupContext {
        GroupContext::standard(Kind::D4, q).unwrap()
    }

    #[test]
    fn d4_collection_example() {
        let ctx = d4(2);
        let one = ctx.field().one();
        let u = ctx.multiply(&ctx.letter(3, one), &ctx.letter(1, one));
        assert_eq!(ctx.format(&u), "x1(1)*x3(1)*x5(1)");
        assert_eq!(ctx.rank(), 10);
    }

    #[test]
    fn inverse_of_letter() {
        let ctx = GroupContext::standard(Kind::E6, 3).unwrap();
        let t = ctx.field().from_int(2);
        assert_eq!(ctx.inverse(&ctx.letter(7, t)), ctx.letter(7, ctx.field().from_int(1)));
        assert!(ctx.inverse(&ctx.identity()).is_identity());
    }

    #[test]
    fn word_round_trip() {
        let ctx = d4(4);
        let u = ctx.parse_word("x3(0,1)*x1(1)^-1*x8(1,1)").unwrap();
        assert_eq!(ctx.parse_word(&ctx.format(&u)).unwrap(), u);
        assert!(ctx.parse_word("x11(1)").is_err());
        assert!(ctx.parse_word("y1(1)").is_err());
    }

    #[test]
    fn factorize_rejects_outside() {
        let ctx = d4(2);
        let h = Descriptor::coords(&[5, 6, 7, 8, 9, 10]);
        assert!(h.factorize(&ctx, &ctx.letter(1, ctx.field().one())).is_none());
        let id = h.factorize(&ctx, &ctx.identity()).unwrap();
        assert!(id.iter().all(|p| matches!(p, Param::Root(_, t) if t.is_zero())));
        assert_eq!(h.size(&ctx), 64);
    }

    #[test]
    fn centers() {
        assert_eq!(d4(2).center_verify().center, vec![8, 9, 10]);
        let e6 = GroupContext::standard(Kind::E6, 3).unwrap().center_verify();
        assert!(e6.passed());
        assert_eq!(e6.center, (17..=21).collect::<Vec<_>>());
        let e8 = GroupContext::standard(Kind::E8, 5).unwrap().center_verify();
        assert_eq!(e8.center, (37..=43).collect::<Vec<_>>());
    }
}
