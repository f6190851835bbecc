//! Combinatorial engine for rhombus tilings of the zonogon `Z(n;2)`,
//! represented purely by their inversion sets (subsets of the triple set of
//! `[n]`), and for majority-rule aggregation of tilings.
//!
//! The crate covers: canonical triple indexing and sticks (`lambda`),
//! tiling validation, flips, enumeration, medians and intervals (`tiling`),
//! compatible linear orders and Condorcet-domain checks (`snakes`), voter
//! profiles and majority systems (`aggregation`), super-domains with the
//! Condorcet property and maximality tests (`csd`), and the two maximal
//! constructions: stick-orientation domains (`cubillage`) and Boolean
//! domains from partitions of the triple set (`symmetric`).

pub mod aggregation;
pub mod csd;
pub mod cubillage;
mod error;
mod invset;
pub mod io;
pub mod lambda;
pub mod snakes;
pub mod symmetric;
pub mod tiling;
mod triple;

pub use error::{Error, Result};
pub use invset::InversionSet;
pub use lambda::{lambda_size, max_n, restriction_map, sticks, triple_rank, triple_unrank, Lambda, Stick, HARD_MAX_N};
pub use tiling::{enumerate_all, is_tiling, median3, Tiling};
pub use triple::Triple;
