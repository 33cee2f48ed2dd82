//! Guaranteed-bent fixtures.

use super::{dot, TruthTable};
use crate::{Error, Result};

/// `x1x2 ⊕ x3x4 ⊕ … ⊕ x_{n-1}x_n` for even `n`.
pub fn inner_product(n: u32) -> Result<TruthTable> {
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    TruthTable::from_fn(n, |x| {
        let pairs = x & (x >> 1) & 0x5555_5555;
        pairs.count_ones() % 2 == 1
    })
}

/// Maiorana–McFarland function `f(x, y) = x · perm(y) ⊕ g(y)`.
///
/// `x` is the low `n/2` bits of the input index and `y` the high `n/2` bits.
/// `perm` lists the image of every `y` in `0..2^{n/2}`; `g` defaults to zero.
pub fn mm_bent(n: u32, perm: &[usize], g: Option<&TruthTable>) -> Result<TruthTable> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::OddVariableCount(n));
    }
    let half = n / 2;
    let size = 1usize << half;
    if perm.len() != size {
        return Err(Error::NotPermutation(format!(
            "expected {size} images, got {}",
            perm.len()
        )));
    }
    let mut seen = vec![false; size];
    for &p in perm {
        if p >= size || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotPermutation(format!(
                "image {p} repeated or out of range"
            )));
        }
    }
    if let Some(g) = g {
        if g.n() != half {
            return Err(Error::VariableMismatch(g.n(), half));
        }
    }
    TruthTable::from_fn(n, |z| {
        let x = z & (size - 1);
        let y = z >> half;
        (dot(x, perm[y]) == 1) ^ g.is_some_and(|g| g.get(y))
    })
}
