#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symloc::fixloc::{FixedComponent, FixedPointData};

/// Random component of real dimension `dim`: connected, Poincaré-symmetric
/// Betti numbers, signature within the middle Betti number and of the right
/// parity.
pub fn random_component(rng: &mut impl Rng, dim: u32, lambda: u32) -> FixedComponent {
    let d = dim as usize;
    let mut betti = vec![0u64; d + 1];
    for k in 0..=d / 2 {
        let b = if k == 0 { 1 } else { rng.random_range(0..=6) };
        betti[k] = b;
        betti[d - k] = b;
    }
    let signature = match dim {
        0 => 1,
        d if d % 4 == 2 => 0,
        _ => {
            let mid = betti[d / 2] as i64;
            // σ ≡ b_mid (mod 2), |σ| ≤ b_mid
            let plus = rng.random_range(0..=mid);
            2 * plus - mid
        }
    };
    FixedComponent::new(dim, betti, signature, lambda)
}

/// Random structurally valid fixed-point data: `n ≤ 6`, component dimensions
/// at most 8, any admissible λ.
pub fn random_fpd(seed: u64) -> FixedPointData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: u32 = rng.random_range(0..=6);
    let count = rng.random_range(1..=6);
    let components = (0..count)
        .map(|_| {
            let half = rng.random_range(0..=n.min(4));
            let lambda = rng.random_range(0..=n - half);
            random_component(&mut rng, 2 * half, lambda)
        })
        .collect();
    FixedPointData::new(n, components).expect("generator respects the shape constraints")
}

/// Isolated fixed points whose localized even Betti numbers are the given
/// unimodal, palindromic sequence.
pub fn random_unimodal_points(seed: u64) -> FixedPointData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = rng.random_range(1..=8);
    let mut counts = vec![0u32; n + 1];
    let mut level = 1u32;
    for k in 0..=n / 2 {
        if k > 0 {
            level += rng.random_range(0..=2);
        }
        counts[k] = level;
        counts[n - k] = level;
    }
    symloc::fixloc::fixtures::isolated_points(&counts)
}
