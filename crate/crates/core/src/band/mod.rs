//! Free bands and the band identities `G_m = I_m`.
//!
//! Words are over `x1, x2, …`. [`band_canon`] solves the word problem of the
//! free band, [`free_band`] builds `FB(k)` for `k ≤ 3`, and [`phi`] turns the
//! band words into the ω-terms defining the levels `R_m` inside DA.

mod canon;
mod free;
mod lattice;
mod phi;
mod word;

pub use canon::{band_canon, band_equal, BandTree};
pub use free::{free_band, FreeBand, MAX_FREE_BAND_ALPHABET};
pub use lattice::{band_lattice_position, BandLatticeOptions, BandLatticeReport, BandLevel, LevelRoute, PrimedLevel};
pub use phi::{band_satisfies_word_identity, band_word_identity_witness, phi, phi_identity, word_term, Phi};
pub use word::{g_word, i_word, mirror, Word};
