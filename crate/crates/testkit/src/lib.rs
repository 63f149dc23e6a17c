//! Test support for colorlie: brute-force oracles, seeded random instances and
//! single-constant mutations.

pub mod mutate;
pub mod oracle;
pub mod random;
pub mod suite;
