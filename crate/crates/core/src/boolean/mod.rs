//! Exact classical machinery over Boolean functions `f: F_2^n -> F_2`.

mod construct;
mod gowers;
mod truth_table;
mod walsh;

pub use construct::{inner_product, mm_bent};
pub use gowers::{
    fourth_root, gowers_u2_bruteforce, gowers_u2_from_spectrum, is_bent, GowersValue,
    BRUTEFORCE_MAX_VARS,
};
pub use truth_table::{TruthTable, MAX_VARS};
pub use walsh::{walsh_hadamard, WalshSpectrum};

/// `u · x` over F_2: parity of the bitwise AND.
#[inline]
pub fn dot(u: usize, x: usize) -> u32 {
    (u & x).count_ones() & 1
}
