//! Test corpora: every labelled semigroup of small order, plus seeded
//! samples of transformation semigroups.

use crate::error::{Budget, Result};
use crate::semigroup::{enumerate_semigroups, FiniteSemigroup, Transformation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub semigroup: FiniteSemigroup,
    /// Size of a known generating set.
    pub generator_count: Option<usize>,
}

impl CorpusItem {
    pub fn new(id: impl Into<String>, semigroup: FiniteSemigroup) -> Self {
        let generator_count = semigroup.generators().map(<[_]>::len);
        CorpusItem { id: id.into(), semigroup, generator_count }
    }
}

/// Default number of sampled transformation semigroups.
pub const DEFAULT_SAMPLE: usize = 600;
pub const DEFAULT_SEED: u64 = 20_240_601;

/// All labelled semigroups of order `1..=max_order` (at most 4).
pub fn exhaustive(max_order: usize) -> Vec<CorpusItem> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (i, s) in enumerate_semigroups(n, false).into_iter().enumerate() {
            out.push(CorpusItem::new(format!("table{n}-{i}"), s));
        }
    }
    out
}

/// Isomorphism-class representatives of order `1..=max_order`.
pub fn exhaustive_up_to_iso(max_order: usize) -> Vec<CorpusItem> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for (i, s) in enumerate_semigroups(n, true).into_iter().enumerate() {
            out.push(CorpusItem::new(format!("iso{n}-{i}"), s));
        }
    }
    out
}

fn random_map(rng: &mut ChaCha8Rng, d: usize) -> Vec<u32> {
    (0..d).map(|_| rng.gen_range(0..d as u32)).collect()
}

// f(x) ≥ x everywhere: these generate R-trivial semigroups
fn extensive_map(rng: &mut ChaCha8Rng, d: usize) -> Vec<u32> {
    (0..d).map(|x| rng.gen_range(x as u32..d as u32)).collect()
}

// extensive and order-preserving
fn monotone_extensive_map(rng: &mut ChaCha8Rng, d: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(d);
    let mut floor = 0u32;
    for x in 0..d as u32 {
        let y = rng.gen_range(floor.max(x)..d as u32);
        v.push(y);
        floor = y;
    }
    v
}

// a retraction onto a random non-empty image set
fn idempotent_map(rng: &mut ChaCha8Rng, d: usize) -> Vec<u32> {
    let image: Vec<u32> = loop {
        let pick: Vec<u32> = (0..d as u32).filter(|_| rng.gen_bool(0.5)).collect();
        if !pick.is_empty() {
            break pick;
        }
    };
    (0..d as u32)
        .map(|x| if image.contains(&x) { x } else { image[rng.gen_range(0..image.len())] })
        .collect()
}

/// `count` transformation semigroups on at most `max_degree` points.
///
/// Kinds rotate between uniformly random generators, extensive generators,
/// order-preserving extensive generators, the opposite semigroups of
/// extensive ones, and idempotent generators, so that DA members on both
/// sides and at several levels are represented.
pub fn transformation_sample(count: usize, max_degree: usize, seed: u64, budget: &Budget) -> Result<Vec<CorpusItem>> {
    if max_degree == 0 {
        return Err(crate::Error::InvalidArgument("degree must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // degrees 3 and 4 give far more variety than 1 and 2
    let low = max_degree.min(3);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let d = rng.gen_range(low..=max_degree);
        let k = rng.gen_range(1..=3);
        let kind = i % 5;
        let gens: Vec<Transformation> = (0..k)
            .map(|_| {
                let map = match kind {
                    0 => random_map(&mut rng, d),
                    2 => monotone_extensive_map(&mut rng, d),
                    4 => idempotent_map(&mut rng, d),
                    _ => extensive_map(&mut rng, d),
                };
                Transformation::new(map)
            })
            .collect::<Result<_>>()?;
        let mut s = FiniteSemigroup::from_transformations(&gens, budget)?;
        if kind == 3 {
            s = s.opposite();
        }
        let tag = ["rand", "ext", "mono", "op", "idem"][kind];
        out.push(CorpusItem::new(format!("trans-{tag}-{i}"), s));
    }
    Ok(out)
}

/// Everything of order ≤ 4 plus the default transformation sample.
pub fn standard(seed: u64, budget: &Budget) -> Result<Vec<CorpusItem>> {
    let mut c = exhaustive(4);
    c.extend(transformation_sample(DEFAULT_SAMPLE, 4, seed, budget)?);
    Ok(c)
}
