//! Shared sampling helpers on the five-punctured sphere: seeded disjoint
//! pairs driven by twist words, with weight caps so exact arithmetic stays
//! bounded.

use mcglab_core::curves05::{
    apply_twist_word, base_curve, intersection_number, seed, NormalCurve, BASE_COUNT,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Weight cap for word-generated curves.  Twists that would push either
/// curve past the cap are skipped and counted, never silently dropped.
pub const WORD_WEIGHT_CAP: u64 = 192;

/// A disjoint pair obtained by applying a random twist word (in the twelve
/// base-curve twists) to the seed pants pair, one letter at a time.  Returns
/// the pair and the number of truncated letters.
pub fn random_disjoint_pair(
    rng: &mut ChaCha8Rng,
    word_len: u32,
    weight_cap: u64,
) -> ([NormalCurve; 2], u32) {
    let mut pair = [seed(0), seed(1)];
    let (p, truncated) = extend_pair(pair.clone(), rng, word_len, weight_cap);
    pair = p;
    (pair, truncated)
}

/// Continues the twist word on an existing pair; used to compare word
/// lengths L and 2L on the same stream.
pub fn extend_pair(
    mut pair: [NormalCurve; 2],
    rng: &mut ChaCha8Rng,
    letters: u32,
    weight_cap: u64,
) -> ([NormalCurve; 2], u32) {
    let mut truncated = 0;
    for _ in 0..letters {
        let axis = rng.gen_range(0..BASE_COUNT);
        let power: i64 = if rng.gen::<bool>() { 1 } else { -1 };
        let a = apply_twist_word(&[(axis, power)], &pair[0]);
        let b = apply_twist_word(&[(axis, power)], &pair[1]);
        if a.total_weight() > weight_cap || b.total_weight() > weight_cap {
            truncated += 1;
            continue;
        }
        pair = [a, b];
    }
    (pair, truncated)
}

/// All ordered pairs of base-curve indices whose curves overlap.
pub fn overlapping_base_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for y in 0..BASE_COUNT {
        for z in 0..BASE_COUNT {
            if y != z && intersection_number(&base_curve(y), &base_curve(z)) > 0 {
                out.push((y, z));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::sample_rng;

    #[test]
    fn pairs_stay_disjoint_and_capped() {
        let mut rng = sample_rng(11, 0);
        let (pair, _) = random_disjoint_pair(&mut rng, 10, 64);
        assert_eq!(intersection_number(&pair[0], &pair[1]), 0);
        assert!(pair[0].total_weight() <= 64 && pair[1].total_weight() <= 64);
    }

    #[test]
    fn overlap_table_is_symmetric() {
        let t = overlapping_base_pairs();
        assert!(!t.is_empty());
        for &(y, z) in &t {
            assert!(t.contains(&(z, y)));
        }
    }
}
