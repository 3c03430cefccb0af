//! Counting and testing tools for the permutation-class view of the genetic code.
//!
//! - [`combinatorics`]: exact `k^r` and `C(k+r-1, r)` counts and class enumeration
//! - [`codon_model`]: nucleotides, codons, amino acids, translation-table I/O
//! - [`symmetry_analysis`]: class coherence and third-base significance of a code
//! - [`grover_sim`]: closed-form Grover query relation and a state-vector simulator
//! - [`physics_estimates`]: uncertainty-principle energy estimates in CGS units

pub mod codon_model;
pub mod combinatorics;
pub mod error;
pub mod grover_sim;
pub mod physics_estimates;
pub mod symmetry_analysis;

pub use codon_model::{builtin_standard_code, parse_table, serialize_table, AminoAcid, Codon, GeneticCode, Nucleotide};
pub use combinatorics::{Alphabet, CountParams, MultisetClass};
pub use error::{Error, Result, TableError, TableErrorKind};
