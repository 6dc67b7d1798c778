//! Fixed inputs shared by the benchmarks.

use hurwitzkit::{gen_random, gen_stable, Polynomial};

/// Degrees exercised by every benchmark group.
pub const DEGREES: [usize; 4] = [4, 8, 12, 16];

pub fn stable(degree: usize) -> Polynomial {
    gen_stable(degree, 0x5EED + degree as u64, 4.0)
}

pub fn random(degree: usize) -> Polynomial {
    gen_random(degree, 0xD1CE + degree as u64, 20)
}
