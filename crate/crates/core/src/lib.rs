//! Exact character constructions for unipotent quotients of Chevalley groups
//! of types D4, E6 and E8 at their bad primes.

pub mod character;
pub mod cli;
pub mod constructions;
pub mod cyclotomic;
pub mod fqfield;
pub mod linalg;
pub mod root_data;
pub mod unipotent;
pub mod verification;
