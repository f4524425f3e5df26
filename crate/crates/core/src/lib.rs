//! Finite semigroups, pseudovariety membership inside DA, and the syntactic
//! monoids of regular languages.
//!
//! Membership in the levels `R_m`, `L_m` of the hierarchy exhausting DA is
//! decided two ways: by iterated quotients under the congruences `~K` and
//! `~D` ([`malcev`]), and by checking ω-pseudo-identities ([`omega`]) built
//! from the band identities `G_m = I_m` ([`band`]). [`hierarchy`] ties the
//! two together and [`lang`] lifts the classification to DFAs.

pub mod band;
pub mod corpus;
pub mod error;
pub mod hierarchy;
pub mod lang;
pub mod malcev;
pub mod omega;
pub mod semigroup;

pub use error::{Budget, Error, Result};
pub use semigroup::{Congruence, Element, FiniteSemigroup, GreensData, Transformation};
