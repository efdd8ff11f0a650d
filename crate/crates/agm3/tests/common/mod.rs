//! Helpers shared by the integration test suites.

#![allow(dead_code)]

use agm3::Triple;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Distance between two finite floats in units in the last place.
pub fn ulps_between(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    let to_ordered = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    to_ordered(a).abs_diff(to_ordered(b))
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random valid triple with a in [0.5, 2], b/a in [0.05, 0.95] and any
/// admissible c (including c = 0 occasionally).
pub fn random_triple(rng: &mut StdRng) -> Triple {
    loop {
        let a: f64 = rng.gen_range(0.5..2.0);
        let b = a * rng.gen_range(0.05..0.95);
        let c_max = b.min(a - b);
        let c = if rng.gen_bool(0.1) {
            0.0
        } else {
            rng.gen_range(0.0..c_max * 0.999)
        };
        if let Ok(t) = Triple::new(a, b, c) {
            return t;
        }
    }
}

/// A random valid triple kept inside every direct-series domain:
/// b/a >= 0.3 forces kappa <= 0.91 < 0.95, and (b + c)/a stays below 0.95.
pub fn random_series_safe_triple(rng: &mut StdRng) -> Triple {
    loop {
        let a: f64 = rng.gen_range(0.5..2.0);
        let b = a * rng.gen_range(0.3..0.9);
        let c_max = b.min(0.95 * a - b);
        if c_max <= 0.0 {
            continue;
        }
        let c = rng.gen_range(0.0..c_max * 0.999);
        if let Ok(t) = Triple::new(a, b, c) {
            return t;
        }
    }
}
