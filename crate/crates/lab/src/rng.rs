//! Counter-based randomness: every sample draws from a ChaCha8 stream keyed
//! by (seed, sample index), so worker scheduling cannot perturb anything.

use mcglab_core::farey::Slope;
use mcglab_core::markings::{Marking1, Surface1};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Stream index reserved for per-scan setup (centers, fixed data), clear of
/// the 0.. sample streams.
pub const SETUP_STREAM: u64 = u64::MAX;

/// A random slope from a continued-fraction walk of the given depth with
/// entries in ±1..=3.  Depth 0 gives 1/0.
pub fn random_slope(rng: &mut ChaCha8Rng, depth: u32) -> Slope {
    let (mut p, mut q): (i64, i64) = (1, 0);
    let (mut p1, mut q1): (i64, i64) = (0, 1);
    for _ in 0..depth {
        let mut a: i64 = rng.gen_range(1..=3);
        if rng.gen::<bool>() {
            a = -a;
        }
        let (np, nq) = (a * p + p1, a * q + q1);
        (p1, q1) = (p, q);
        (p, q) = (np, nq);
    }
    Slope::new(p, q).expect("unimodular walk never reaches 0/0")
}

/// Some slope crossing `base` exactly once, offset by `twist` multiples of
/// the base.
pub fn transversal_of(base: &Slope, twist: i64) -> Slope {
    let p = base.numer();
    let q = base.denom();
    let e = p.extended_gcd(q);
    let (x, y) = if e.gcd.is_negative() {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    };
    // x·p + y·q = 1, so (y, -x) pairs with (p, q) to determinant 1.
    let t = BigInt::from(twist);
    Slope::new(y + &t * p, -x + &t * q).expect("transversal is a valid slope")
}

pub fn random_marking(surface: Surface1, rng: &mut ChaCha8Rng, depth: u32) -> Marking1 {
    let base = random_slope(rng, depth);
    let t = transversal_of(&base, rng.gen_range(-3..=3));
    Marking1::new(surface, base, t).expect("constructed transversal meets base once")
}
