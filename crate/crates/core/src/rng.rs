//! Counter-based RNG derivation. Every stochastic component derives its own
//! generator from (master seed, stream tag, counters...), so trials, batch
//! samples, and loss draws get streams that do not depend on scheduling or
//! iteration order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Derive an independent generator from a master seed and a stream path.
/// Identical (seed, path) pairs always yield the identical stream.
pub fn derive_rng(master: u64, path: &[u64]) -> ChaCha8Rng {
    let mut state = master ^ 0x6a09e667f3bcc908;
    splitmix64(&mut state);
    for &word in path {
        state ^= word.wrapping_mul(0xd1342543de82ef95).rotate_left(17);
        splitmix64(&mut state);
    }
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn deterministic_and_stream_separated() {
        let a: u64 = derive_rng(7, &[1, 2]).random();
        let b: u64 = derive_rng(7, &[1, 2]).random();
        let c: u64 = derive_rng(7, &[2, 1]).random();
        let d: u64 = derive_rng(8, &[1, 2]).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }
}
