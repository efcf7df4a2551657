//! Square-free monomial ideals and their two simplicial complexes.
//!
//! For an ideal `I` of `k[x_1, ..., x_n]` the crate builds the facet complex
//! `δ_F(I)` and the Stanley-Reisner complex `δ_N(I)`, compares their
//! f-vectors to obtain the quasi f-ideal type, and provides the degree-2
//! theory around it: characterizations through height and upper perfect
//! sets, admissible types, minimal primes, explicit constructions, an
//! exhaustive census, and Hilbert functions and series.
//!
//! ```
//! use quasif_core::{quasi_type, Ideal};
//!
//! let j = Ideal::parse_list("x1x2x4,x1x2x5,x1x4x5,x2x3x5,x3x4x5", 5).unwrap();
//! let outcome = quasi_type(&j).unwrap();
//! assert_eq!(outcome.quasi_type().unwrap().to_string(), "(0, 1, 0)");
//! ```

pub mod complex;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod perfect;
pub mod quasi;
pub mod transversal;

pub use complex::{
    dimension, f_vector, facet_complex, facet_ideal, height, nonface_ideal, stanley_reisner_complex,
    FVector, SimplicialComplex,
};
pub use construct::{
    construct_of_type, construct_with, partition_ideal, partition_set, ConstructionResult, PartitionSpec,
};
pub use enumerate::{enumerate_quasi, Census, EnumerateOptions};
pub use error::{Error, Result};
pub use hilbert::{
    count_standard_monomials, hilbert_function_from_fvector, hilbert_polynomial_deg2, hilbert_series_deg2,
    hilbert_series_from_fvector, HilbertPolynomial, RationalSeries,
};
pub use ideal::{is_equigenerated, minimalize, sm_universe, support, Ideal, IdealFile};
pub use monomial::{parse_monomial, Face, Monomial};
pub use perfect::{
    is_lower_perfect, is_perfect, is_upper_perfect, lower_shadow, perfect_number_bruteforce,
    perfect_number_formula, upper_shadow, ShadowSet,
};
pub use quasi::{
    associated_prime_criterion, characterize_by_height, characterize_by_upper_perfect, is_admissible_type,
    is_f_ideal, minimal_primes, quasi_type, type_bounds, CharacterizationReport, PrimeIdeal, QuasiOutcome,
    QuasiType,
};
