use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use super::CharError;
use crate::fqfield::{FieldSpec, FqElem};
use crate::root_data::{Kind, RootSystemTable};

/// The orbit invariants steering each kind's branching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BInvariants {
    D4 { a: FqElem, t0: FqElem },
    E6 { b3: FqElem, b2: FqElem },
    E8 { b5: FqElem, b4: FqElem, b3: FqElem, b2: FqElem },
}

const E6_B3: &[(usize, i64)] = &[(12, 1), (13, -1), (14, -1), (15, 1), (16, 1)];
const E6_B2: &[(usize, i64)] = &[(8, -1), (9, 1), (10, 1)];
const E8_B5: &[(usize, i64)] = &[(30, 1), (31, 1), (32, -1), (33, -1), (34, -2), (35, 2), (36, 2)];
const E8_B4: &[(usize, i64)] = &[(24, 2), (25, -2), (26, 1), (27, -1), (28, -1), (29, 1)];
const E8_B3: &[(usize, i64)] = &[(18, 1), (19, -1), (20, -1), (21, 1)];
const E8_B2: &[(usize, i64)] = &[(12, 1), (13, -1)];

fn combo(f: &FieldSpec, b: &BTreeMap<usize, FqElem>, terms: &[(usize, i64)]) -> Result<FqElem, CharError> {
    let mut acc = f.zero();
    for &(i, c) in terms {
        let x = b.get(&i).ok_or(CharError::MissingCoeff(i))?;
        acc = f.add(acc, f.scale(*x, c));
    }
    Ok(acc)
}

pub fn b_invariants(kind: Kind, f: &FieldSpec, b: &BTreeMap<usize, FqElem>) -> Result<BInvariants, CharError> {
    match kind {
        Kind::D4 => {
            let get = |i: usize| b.get(&i).copied().ok_or(CharError::MissingCoeff(i));
            let (a8, a9, a10) = (get(8)?, get(9)?, get(10)?);
            let a = f.mul(f.mul(a8, a9), a10);
            let s = f.add(f.add(f.mul(get(5)?, a10), f.mul(get(6)?, a9)), f.mul(get(7)?, a8));
            let t0 = f.div(s, a).map_err(|_| CharError::Unsupported("central coefficients must be nonzero"))?;
            Ok(BInvariants::D4 { a, t0 })
        }
        Kind::E6 => Ok(BInvariants::E6 { b3: combo(f, b, E6_B3)?, b2: combo(f, b, E6_B2)? }),
        Kind::E8 => Ok(BInvariants::E8 {
            b5: combo(f, b, E8_B5)?,
            b4: combo(f, b, E8_B4)?,
            b3: combo(f, b, E8_B3)?,
            b2: combo(f, b, E8_B2)?,
        }),
    }
}

/// Central coefficients after conjugating by the torus element t: a_i ↦ a_i·α_i(t).
pub fn torus_conjugate_char(
    table: &RootSystemTable,
    f: &FieldSpec,
    t: &[FqElem],
    central: &[(usize, FqElem)],
) -> Result<Vec<(usize, FqElem)>, CharError> {
    central
        .iter()
        .map(|&(i, a)| {
            let w = table.torus_weight(f, i, t).map_err(|_| CharError::Unsupported("torus components must be nonzero"))?;
            Ok((i, f.mul(a, w)))
        })
        .collect()
}

/// Orbit of a central tuple under the split torus, generated by the
/// elements with one coordinate a primitive root and the others 1.
pub fn torus_orbit(table: &RootSystemTable, f: &FieldSpec, central: &[(usize, FqElem)]) -> Result<usize, CharError> {
    let g = f
        .nonzero_elements()
        .find(|&x| (1..f.q() as u64 - 1).all(|k| f.pow(x, k) != f.one()))
        .expect("F_q^× is cyclic");
    let rank = table.rank;
    let gens: Vec<Vec<FqElem>> = (0..rank)
        .map(|j| (0..rank).map(|i| if i == j { g } else { f.one() }).collect())
        .collect();
    let mut seen: HashSet<Vec<(usize, FqElem)>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(central.to_vec());
    queue.push_back(central.to_vec());
    while let Some(v) = queue.pop_front() {
        for t in &gens {
            let w = torus_conjugate_char(table, f, t, &v)?;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_invariants() {
        let f = FieldSpec::of_order(2).unwrap();
        let one = f.one();
        let b = BTreeMap::from([(5, one), (6, f.zero()), (7, f.zero()), (8, one), (9, one), (10, one)]);
        assert_eq!(b_invariants(Kind::D4, &f, &b).unwrap(), BInvariants::D4 { a: one, t0: one });
    }

    #[test]
    fn e6_b3() {
        let f = FieldSpec::of_order(3).unwrap();
        let b: BTreeMap<usize, FqElem> = (8..=16).map(|i| (i, if i >= 12 { f.one() } else { f.zero() })).collect();
        match b_invariants(Kind::E6, &f, &b).unwrap() {
            BInvariants::E6 { b3, b2 } => {
                assert_eq!(b3, f.one());
                assert_eq!(b2, f.zero());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(b_invariants(Kind::E6, &f, &BTreeMap::new()), Err(CharError::MissingCoeff(12)));
    }
}
