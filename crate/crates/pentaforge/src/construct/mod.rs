//! Constructive procedures: direct families, composition operators, and
//! the finite-field kernel they draw transversal designs from.

pub mod field;
pub mod langford;
pub mod msets;
pub mod overlay;
pub mod pent3;

pub use field::{gf, is_prime, is_prime_power, macneish, rgdd_from_mols, td, td_any, Gf};
pub use langford::{element_set, langford_pairs, skew_triples, LangfordPair, SkewTriple};
pub use msets::{m10_set, m40_set, reachable_sums, sum_decompose, td_patch_gdd};
pub use overlay::{degenerate_pent, inflate, rgdd_to_gdd, wfc_overlay};
pub use pent3::{pent3_direct, Pent3};
