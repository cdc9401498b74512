//! Linear characters, the conjugation action on them, orbit and stabilizer
//! computations, extensions, induction and inner products.

mod census;
pub mod clifford;
pub mod d4;
mod induce;
mod invariants;
mod linear;
mod section;

pub use census::{complement_pcgs, pc_kernel, run_census, Census, CensusLeaf, TowerSpec};
pub use induce::{inner_product, InducedCharacter};
pub use invariants::{b_invariants, torus_conjugate_char, torus_orbit, BInvariants};
pub use linear::{extension_set, unit_pairing, HomReport, LinearCharacter, Obstruction};
pub use section::{orbit_bfs, scalar_locus, AbelianSection, OrbitReport};

use thiserror::Error;

use crate::unipotent::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("{0} is not in the character's domain")]
    NotInDomain(String),
    #[error("{0} does not normalize the domain: conjugate of {1} leaves it")]
    NotNormalizing(String, String),
    #[error("conjugate by {0} is not expressible by coefficient data")]
    NotRepresentable(String),
    #[error("roots {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("conjugation leaks into unfixed root {0}")]
    LevelLeak(usize),
    #[error("orbit of size {orbit} does not divide group order {group}")]
    OrbitIndex { orbit: u128, group: u128 },
    #[error("state space exceeds the budget of {0}")]
    Budget(u128),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("non-integral inner product {0}")]
    NonIntegral(String),
    #[error("missing coefficient for root {0}")]
    MissingCoeff(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}
