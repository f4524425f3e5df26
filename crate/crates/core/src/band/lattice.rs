use super::{band_satisfies_word_identity, g_word, i_word};
use crate::error::{Budget, Error, Result};
use crate::hierarchy::{in_lm, in_rm};
use crate::omega::IdentitySet;
use crate::semigroup::FiniteSemigroup;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct BandLatticeOptions {
    pub max_m: usize,
    /// Check `G_m = I_m` by enumeration even for `m ≥ 4`.
    pub exhaustive_words: bool,
    pub budget: Budget,
}

impl Default for BandLatticeOptions {
    fn default() -> Self {
        BandLatticeOptions { max_m: 4, exhaustive_words: false, budget: Budget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelRoute {
    Words,
    Quotients,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BandLevel {
    pub m: usize,
    pub br: bool,
    pub bl: bool,
    pub route: LevelRoute,
}

/// `BR'_m`, `BL'_m` membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimedLevel {
    pub m: usize,
    pub br_prime: bool,
    pub bl_prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BandLatticeReport {
    pub order: usize,
    pub sl: bool,
    pub lz: bool,
    pub rz: bool,
    pub levels: Vec<BandLevel>,
    pub primed: Vec<PrimedLevel>,
}

impl BandLatticeReport {
    pub fn level(&self, m: usize) -> Option<&BandLevel> {
        self.levels.iter().find(|l| l.m == m)
    }

    pub fn primed(&self, m: usize) -> Option<&PrimedLevel> {
        self.primed.iter().find(|l| l.m == m)
    }
}

/// `(BR_m, BL_m)` membership of a band.
fn br_bl(b: &FiniteSemigroup, m: usize, opts: &BandLatticeOptions) -> Result<(bool, bool, LevelRoute)> {
    if m <= 3 || opts.exhaustive_words {
        let (g, i) = (g_word(m)?, i_word(m)?);
        let br = band_satisfies_word_identity(b, &g, &i, &opts.budget)?;
        let bl = band_satisfies_word_identity(b, &g.mirror(), &i.mirror(), &opts.budget)?;
        Ok((br, bl, LevelRoute::Words))
    } else {
        // a band lies in R_m exactly when it lies in BR_m
        Ok((in_rm(b, m)?, in_lm(b, m)?, LevelRoute::Quotients))
    }
}

/// Position of a band in the lattice of band pseudovarieties.
pub fn band_lattice_position(b: &FiniteSemigroup, opts: &BandLatticeOptions) -> Result<BandLatticeReport> {
    if !b.is_band() {
        return Err(Error::NotABand);
    }
    if opts.max_m < 2 {
        return Err(Error::InvalidArgument("max_m must be at least 2".into()));
    }
    let holds = |name: &str| -> Result<bool> { IdentitySet::builtin(name)?.satisfied_by(b, &opts.budget) };
    let mut levels = Vec::new();
    for m in 2..=opts.max_m {
        let (br, bl, route) = br_bl(b, m, opts)?;
        levels.push(BandLevel { m, br, bl, route });
    }
    let mut primed = vec![PrimedLevel { m: 2, br_prime: holds("BR'2")?, bl_prime: holds("BL'2")? }];
    // BR'_{m+1} = L BR_m ∩ B: every eBe, as a monoid, lies in BR_m
    let locals: Vec<FiniteSemigroup> = b
        .idempotents()
        .into_iter()
        .map(|e| b.local_submonoid(e).map(|l| l.semigroup))
        .collect::<Result<_>>()?;
    for m in 2..=opts.max_m {
        let (mut br_prime, mut bl_prime) = (true, true);
        for local in &locals {
            let (br, bl, _) = br_bl(local, m, opts)?;
            br_prime &= br;
            bl_prime &= bl;
        }
        primed.push(PrimedLevel { m: m + 1, br_prime, bl_prime });
    }
    Ok(BandLatticeReport { order: b.order(), sl: holds("SL")?, lz: holds("LZ")?, rz: holds("RZ")?, levels, primed })
}
