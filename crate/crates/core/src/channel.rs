//! A seeded, dimension-preserving operator channel.
//!
//! [`corrupt`] draws from `ChaCha8Rng::seed_from_u64(seed)` in this order,
//! once per attempt:
//!
//! 1. `t` row indices by a partial Fisher–Yates shuffle of `0..k`
//!    (`gen_range(i..k)` for `i = 0, …, t−1`);
//! 2. for each chosen row, in that order, `n` entries `gen_range(0..q)`.
//!
//! An attempt is kept when the result has dimension `k` and lies at subspace
//! distance exactly `2t`; otherwise the next attempt continues the same
//! stream. At most [`RETRY_BUDGET`] attempts are made.

use crate::error::{Error, Result};
use crate::gabidulin::{lift, GabidulinCode};
use crate::listdec::{DecodeOptions, ListDecoder, Strategy};
use crate::matgf::MatGF;
use crate::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub seed: u64,
    /// Number of basis rows replaced.
    pub t: usize,
}

/// Replaces `t` basis rows of `c` at random until `d_S(R, c) = 2t`.
pub fn corrupt(c: &Subspace, cfg: ChannelConfig) -> Result<Subspace> {
    let (k, n) = (c.dim(), c.ambient());
    let t = cfg.t;
    if t > k {
        return Err(Error::ImpossibleDistance { t, k, target: 2 * t });
    }
    if t == 0 {
        return Ok(c.clone());
    }
    let field = c.field();
    let q = field.q();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base = c.basis().row_vecs();
    for _ in 0..RETRY_BUDGET {
        let mut idx: Vec<usize> = (0..k).collect();
        for i in 0..t {
            let j = rng.gen_range(i..k);
            idx.swap(i, j);
        }
        let mut rows = base.clone();
        for &r in &idx[..t] {
            rows[r] = (0..n).map(|_| rng.gen_range(0..q)).collect();
        }
        let r = Subspace::row_space(&MatGF::from_rows(field, &rows)?);
        if r.dim() == k && r.distance(c)? == 2 * t {
            return Ok(r);
        }
    }
    Err(Error::RetryBudgetExhausted(RETRY_BUDGET))
}

/// One corrupt-then-decode experiment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub message_index: u64,
    pub distance: usize,
    pub list_size: usize,
    /// The transmitted codeword is in the list.
    pub success: bool,
    /// The list is exactly the transmitted codeword.
    pub unique: bool,
}

/// Trial `i` seeds `ChaCha8Rng` with `seed + i` (wrapping), draws the
/// message index `gen_range(0..|C|)`, then the channel seed as one `u64`,
/// and decodes with radius `t`.
pub fn run_trial(decoder: &ListDecoder, t: usize, trial_seed: u64) -> Result<TrialRecord> {
    let code = decoder.code();
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let size = u64::try_from(code.size()).map_err(|_| Error::CapExceeded {
        size: code.size(),
        cap: u64::MAX,
    })?;
    let message_index = rng.gen_range(0..size);
    let channel_seed: u64 = rng.gen();
    let sent = lift(&code.encode_index(message_index));
    let received = corrupt(&sent, ChannelConfig { seed: channel_seed, t })?;
    let list = decoder.decode(&received, t)?.list;
    let success = list.contains(&sent);
    Ok(TrialRecord {
        seed: trial_seed,
        message_index,
        distance: received.distance(&sent)?,
        list_size: list.len(),
        success,
        unique: success && list.len() == 1,
    })
}

pub fn simulate(code: &GabidulinCode, t: usize, trials: usize, seed: u64, strategy: Strategy) -> Result<Vec<TrialRecord>> {
    let decoder = ListDecoder::with_options(
        code.clone(),
        DecodeOptions {
            strategy,
            ..DecodeOptions::default()
        },
    );
    (0..trials as u64)
        .map(|i| run_trial(&decoder, t, seed.wrapping_add(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gabidulin::{example_code, CodeParams};
    use crate::gf::FieldCtx;

    #[test]
    fn zero_errors_is_identity() {
        let c = lift(&example_code().encode_index(2));
        assert_eq!(corrupt(&c, ChannelConfig { seed: 9, t: 0 }).unwrap(), c);
    }

    #[test]
    fn exact_distance_and_determinism() {
        let code = CodeParams::new(3, 6, 3, 2).build().unwrap();
        let c = lift(&code.encode_index(17));
        for t in 0..=3 {
            for seed in 0..20 {
                let cfg = ChannelConfig { seed, t };
                let r = corrupt(&c, cfg).unwrap();
                assert_eq!(r.dim(), 3);
                assert_eq!(r.distance(&c).unwrap(), 2 * t);
                assert_eq!(corrupt(&c, cfg).unwrap(), r);
            }
        }
    }

    #[test]
    fn rejects_impossible_targets() {
        let c = lift(&example_code().encode_index(1));
        assert!(matches!(
            corrupt(&c, ChannelConfig { seed: 0, t: 3 }),
            Err(Error::ImpossibleDistance { .. })
        ));
        // a 3-space in F_2^4 cannot be at distance 6 from anything
        let f = FieldCtx::new(2).unwrap();
        let u = Subspace::row_space(&MatGF::identity(f, 4).select_rows(&[0, 1, 2]));
        assert_eq!(
            corrupt(&u, ChannelConfig { seed: 0, t: 3 }),
            Err(Error::RetryBudgetExhausted(RETRY_BUDGET))
        );
    }

    #[test]
    fn example_closed_loop() {
        let code = example_code();
        let c = lift(&code.encode_index(code.message_index_from_coords(&[1, 1])));
        let dec = ListDecoder::new(code);
        for seed in 0..10 {
            let r = corrupt(&c, ChannelConfig { seed, t: 1 }).unwrap();
            assert_eq!(r.distance(&c).unwrap(), 2);
            assert!(dec.decode_with(&r, 1, Strategy::Oracle).unwrap().list.contains(&c));
        }
    }
}
