use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knots::{BraidWord, SingularBraidWord};

/// Seeded generator of singular braids whose closures are knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub samples: usize,
    /// Number of double points per sample.
    pub marks: usize,
    pub max_len: usize,
    pub max_strands: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig { seed: 0, samples: 30, marks: 1, max_len: 8, max_strands: 3 }
    }
}

const MAX_ATTEMPTS: usize = 100_000;

/// Draws `samples` singular braids: strand count uniform in
/// `2..=max_strands`, length uniform in `marks..=max_len`, letters uniform
/// among `+-1, ..., +-(strands-1)`, marks a uniform `marks`-subset of
/// positions. Words whose closure is a link are rejected.
pub fn sample_singular(config: &SamplerConfig) -> Result<Vec<SingularBraidWord>> {
    if config.max_strands < 2 || config.marks > config.max_len {
        return Err(Error::InvalidParameter(format!(
            "cannot place {} marks with max_len {} and max_strands {}",
            config.marks, config.max_len, config.max_strands
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.samples);
    let mut attempts = 0;
    while out.len() < config.samples {
        attempts += 1;
        if attempts > MAX_ATTEMPTS {
            return Err(Error::InvalidParameter("sampler found too few knot closures".into()));
        }
        let strands = rng.gen_range(2..=config.max_strands);
        let len = rng.gen_range(config.marks.max(1)..=config.max_len);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let braid = BraidWord::new(strands, letters)?;
        if !braid.is_knot() {
            continue;
        }
        let marks = sample(&mut rng, len, config.marks).into_vec();
        out.push(SingularBraidWord::new(braid, marks)?);
    }
    Ok(out)
}
