//! Squarefree principal Borel ideals: powers, localizations at monomial
//! primes, associated primes of powers and their stability indices.
//!
//! Monomials carry an explicit ordered [`GroundSet`] of variable labels, so
//! localized ideals keep the labels of the ring they came from. Exponents are
//! generic over [`Exponent`]; the aliases below fix the common widths.

pub mod borel;
pub mod cli;
pub mod config;
pub mod depth;
pub mod error;
pub mod exponent;
pub mod localization;
pub mod monomial;
pub mod oracle;
pub mod report;
pub mod stability;

pub use borel::{
    closure_bk, count_b1, expand_b1, extract_borel_generator, is_k_strongly_stable, member_bk,
    power_generators, BorelPrincipalIdeal,
};
pub use depth::{depth_power, max_ideal_in_ass_formula, q_invariant, quotient_profile, QuotientProfile};
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use localization::{localize_closed_form, localize_in_order, Localization, LocalGenerator, VariableSubset};
pub use monomial::{GroundSet, Monomial, MonomialIdeal, SquarefreeMonomial};
pub use oracle::Oracle;
pub use stability::{
    ever_associated, lambda_max_ideal, lambda_of_prime, stable_set_enumerate, Lambda, StableSetEntry,
};

/// Default exponent width.
pub type Exp = u32;
pub type StdMonomial = Monomial<Exp>;
pub type StdIdeal = MonomialIdeal<Exp>;
pub type SmallMonomial = Monomial<u8>;
pub type SmallIdeal = MonomialIdeal<u8>;
pub type WideMonomial = Monomial<u64>;
pub type WideIdeal = MonomialIdeal<u64>;
