use std::collections::BTreeMap;

use serde::Serialize;

use crate::character::{run_census, torus_orbit};
use crate::constructions::tower;
use crate::fqfield::FqElem;
use crate::root_data::Kind;
use crate::unipotent::GroupContext;

/// An exact rational numerator/denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub numerator: u128,
    pub denominator: u128,
}

impl Ratio {
    pub fn is_integral(&self) -> bool {
        self.numerator % self.denominator == 0
    }
}

/// Irreducible characters of U with nontrivial central character, counted by degree.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCount {
    pub kind: Kind,
    pub q: usize,
    /// Counts over the central character with all coefficients 1.
    pub per_central: BTreeMap<u128, u128>,
    pub sum_of_squares: u128,
    pub expected_sum_of_squares: u128,
    pub torus_orbit: u128,
    pub totals: BTreeMap<u128, u128>,
    /// The closed-form totals, by degree.
    pub formula: BTreeMap<u128, Ratio>,
    #[serde(skip)]
    pub leaves: Vec<(BTreeMap<usize, FqElem>, u128, u128)>,
}

impl FamilyCount {
    pub fn formula_integral(&self) -> bool {
        self.formula.values().all(Ratio::is_integral)
    }

    pub fn formula_agrees(&self) -> bool {
        self.formula.len() == self.totals.len()
            && self.formula.iter().all(|(d, f)| self.totals.get(d).is_some_and(|&t| t * f.denominator == f.numerator))
    }
}

fn closed_form(kind: Kind, q: u128) -> BTreeMap<u128, Ratio> {
    let r = |n, d| Ratio { numerator: n, denominator: d };
    match kind {
        Kind::D4 => BTreeMap::from([(q.pow(3), r((q - 1).pow(3), 1)), (q.pow(3) / 2, r(4 * (q - 1).pow(4), 1))]),
        Kind::E6 => BTreeMap::from([
            (q.pow(7), r((q - 1).pow(5) * (2 * q * q - q + 1), 2)),
            (q.pow(7) / 3, r(9 * (q - 1).pow(6), 2)),
        ]),
        Kind::E8 => BTreeMap::from([
            (q.pow(16), r((q - 1).pow(7) * (4 * q.pow(4) - q - 3), 4)),
            (q.pow(16) / 5, r(25 * (q - 1).pow(8), 4)),
        ]),
    }
}

/// Runs the census for the all-ones central character and scales by its torus orbit.
pub fn count_family(kind: Kind, q: usize) -> Result<FamilyCount, String> {
    let ctx = GroupContext::standard(kind, q).map_err(|e| e.to_string())?;
    let spec = tower(kind);
    let one = ctx.field().one();
    let central = vec![one; spec.levels[0].len()];
    let census = run_census(&ctx, &spec, &central).map_err(|e| e.to_string())?;
    let pairs: Vec<(usize, FqElem)> = spec.levels[0].iter().map(|&r| (r, one)).collect();
    let orbit = torus_orbit(ctx.table(), ctx.field(), &pairs).map_err(|e| e.to_string())? as u128;
    let totals = census.by_degree.iter().map(|(&d, &n)| (d, n * orbit)).collect();
    Ok(FamilyCount {
        kind,
        q,
        per_central: census.by_degree.clone(),
        sum_of_squares: census.sum_of_squares,
        expected_sum_of_squares: census.expected_sum_of_squares,
        torus_orbit: orbit,
        totals,
        formula: closed_form(kind, q as u128),
        leaves: census.detail.into_iter().map(|l| (l.coeffs, l.degree, l.count)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_and_e6_agree_with_closed_form() {
        for (kind, q) in [(Kind::D4, 2), (Kind::D4, 4), (Kind::E6, 3)] {
            let c = count_family(kind, q).unwrap();
            assert!(c.formula_agrees(), "{kind:?} {q}: {:?} vs {:?}", c.totals, c.formula);
        }
    }
}
