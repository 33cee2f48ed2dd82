use serde::{Deserialize, Serialize};

use super::{walsh_hadamard, TruthTable, WalshSpectrum, MAX_VARS};
use crate::{Error, Result};

/// Largest `n` accepted by the `2^{3n}` direct summation.
pub const BRUTEFORCE_MAX_VARS: u32 = 8;

/// Exact Gowers U2 norm of a Boolean function.
///
/// Every exact route produces the same integer
/// `phase_sum = Σ_{x,a,b} (-1)^{Δ_{a,b} f(x)} = 2^{-n} Σ_u W(u)^4`,
/// and the real values are derived from it by a power-of-two scaling, so two
/// routes agree bit-for-bit whenever their integers agree.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GowersValue {
    pub n: u32,
    pub phase_sum: u128,
    /// `||f||_{U2}^4`, in `[2^{-n}, 1]`.
    pub u4: f64,
    /// `||f||_{U2}`, the fourth root of `u4`, in `[2^{-n/4}, 1]`.
    pub norm: f64,
}

impl GowersValue {
    /// Scales an exact phase sum by `2^{-3n}`.
    pub fn from_phase_sum(n: u32, phase_sum: u128) -> Self {
        let u4 = scale_pow2(phase_sum, 3 * n);
        Self {
            n,
            phase_sum,
            u4,
            norm: fourth_root(u4),
        }
    }

    /// The value attained exactly by bent functions: `u4 = 2^{-n}`.
    pub fn bent_floor(n: u32) -> Self {
        Self::from_phase_sum(n, 1u128 << (2 * n))
    }
}

/// `x^{1/4}`; every exact route goes through this so norms compare exactly.
#[inline]
pub fn fourth_root(x: f64) -> f64 {
    x.sqrt().sqrt()
}

#[inline]
pub(crate) fn scale_pow2(value: u128, shift: u32) -> f64 {
    value as f64 * (-(shift as f64)).exp2()
}

/// `u4 = 2^{-4n} Σ_u W(u)^4`, accumulated in 128-bit integers.
pub fn gowers_u2_from_spectrum(w: &WalshSpectrum) -> Result<GowersValue> {
    let n = w.n();
    if n > MAX_VARS {
        return Err(Error::Range {
            what: "spectrum Gowers norm",
            n,
            min: 1,
            max: MAX_VARS,
        });
    }
    let s4 = w.sum_fourth_powers();
    debug_assert_eq!(s4 % (1u128 << n), 0);
    Ok(GowersValue::from_phase_sum(n, s4 >> n))
}

/// Literal `2^{-3n} Σ_{x,a,b} (-1)^{f(x)⊕f(x⊕a)⊕f(x⊕b)⊕f(x⊕a⊕b)}`.
pub fn gowers_u2_bruteforce(f: &TruthTable) -> Result<GowersValue> {
    let n = f.n();
    if n > BRUTEFORCE_MAX_VARS {
        return Err(Error::Range {
            what: "brute-force Gowers norm",
            n,
            min: 1,
            max: BRUTEFORCE_MAX_VARS,
        });
    }
    let bits = f.to_bits();
    let len = bits.len();
    let mut odd: u64 = 0;
    for a in 0..len {
        for b in 0..len {
            for x in 0..len {
                odd += (bits[x] ^ bits[x ^ a] ^ bits[x ^ b] ^ bits[x ^ a ^ b]) as u64;
            }
        }
    }
    let total = (len as u64).pow(3);
    let sum = total as i128 - 2 * odd as i128;
    debug_assert!(sum >= 0);
    Ok(GowersValue::from_phase_sum(n, sum as u128))
}

/// Flat-spectrum test `|W(u)| = 2^{n/2}` for all `u`, in integers.
pub fn is_bent(f: &TruthTable) -> Result<bool> {
    let n = f.n();
    if n % 2 == 1 {
        return Err(Error::OddVariableCount(n));
    }
    let target = 1u32 << (n / 2);
    Ok(walsh_hadamard(f)
        .coeffs()
        .iter()
        .all(|c| c.unsigned_abs() == target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{inner_product, mm_bent};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spectral(f: &TruthTable) -> GowersValue {
        gowers_u2_from_spectrum(&walsh_hadamard(f)).unwrap()
    }

    fn affine(n: u32, u: usize, c: bool) -> TruthTable {
        TruthTable::from_fn(n, |x| ((u & x).count_ones() % 2 == 1) ^ c).unwrap()
    }

    #[test]
    fn and2_is_bent_at_the_floor() {
        let and2 = TruthTable::from_bits(2, &[0, 0, 0, 1]).unwrap();
        let g = spectral(&and2);
        assert_eq!(g.u4, 0.25);
        assert!((g.norm - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(gowers_u2_bruteforce(&and2).unwrap().u4, 0.25);
        assert!(is_bent(&and2).unwrap());
        assert_eq!(g, GowersValue::bent_floor(2));
    }

    #[test]
    fn constant_zero_has_unit_norm() {
        for n in 1..=8 {
            let z = TruthTable::zero(n).unwrap();
            assert_eq!(spectral(&z).u4, 1.0);
            assert_eq!(spectral(&z).norm, 1.0);
        }
        let z1 = TruthTable::zero(1).unwrap();
        assert_eq!(gowers_u2_bruteforce(&z1).unwrap().u4, 1.0);
        assert!(!is_bent(&TruthTable::zero(2).unwrap()).unwrap());
    }

    #[test]
    fn inner_product_six_vars() {
        let f = inner_product(6).unwrap();
        let g = spectral(&f);
        assert!((g.norm - 0.353_553_390_593_273_8).abs() < 1e-12);
        assert_eq!(g.u4, 1.0 / 64.0);
        assert_eq!(gowers_u2_bruteforce(&f).unwrap(), g);
    }

    #[test]
    fn odd_n_is_rejected() {
        let f = TruthTable::zero(3).unwrap();
        assert!(matches!(is_bent(&f), Err(Error::OddVariableCount(3))));
    }

    #[test]
    fn bruteforce_range_guard() {
        let f = TruthTable::zero(9).unwrap();
        assert!(matches!(gowers_u2_bruteforce(&f), Err(Error::Range { .. })));
    }

    #[test]
    fn exhaustive_n3_oracle_equivalence() {
        for t in 0..256usize {
            let f = TruthTable::from_fn(3, |x| (t >> x) & 1 == 1).unwrap();
            let a = spectral(&f);
            let b = gowers_u2_bruteforce(&f).unwrap();
            assert_eq!(a.phase_sum, b.phase_sum, "table {t:02x}");
            assert_eq!(a, b);
        }
    }

    #[test]
    fn random_n6_oracle_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let f = TruthTable::random(6, &mut rng).unwrap();
            assert_eq!(spectral(&f), gowers_u2_bruteforce(&f).unwrap());
        }
    }

    #[test]
    fn floor_iff_bent_exhaustive_n2() {
        let floor = GowersValue::bent_floor(2);
        let mut bent = 0;
        for t in 0..16usize {
            let f = TruthTable::from_fn(2, |x| (t >> x) & 1 == 1).unwrap();
            let g = spectral(&f);
            assert!(g.u4 >= 0.25 && g.u4 <= 1.0);
            assert_eq!(g.u4 == floor.u4, is_bent(&f).unwrap());
            bent += is_bent(&f).unwrap() as u32;
        }
        assert_eq!(bent, 8);
    }

    #[test]
    fn affine_functions_maximize() {
        for n in 1..=4 {
            for u in 0..1usize << n {
                for c in [false, true] {
                    assert_eq!(spectral(&affine(n, u, c)).u4, 1.0);
                }
            }
        }
    }

    #[test]
    fn affine_shift_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=8 {
            for _ in 0..20 {
                let f = TruthTable::random(n, &mut rng).unwrap();
                let u = rand::Rng::random_range(&mut rng, 0..1usize << n);
                let c = rand::Rng::random(&mut rng);
                let g = f.xor(&affine(n, u, c)).unwrap();
                assert_eq!(spectral(&f).phase_sum, spectral(&g).phase_sum);
            }
        }
    }

    #[test]
    fn range_on_random_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in 1..=12 {
            let floor = (-(n as f64)).exp2();
            for _ in 0..50 {
                let g = spectral(&TruthTable::random(n, &mut rng).unwrap());
                assert!(g.u4 >= floor - 1e-12 && g.u4 <= 1.0 + 1e-12);
                assert!((g.norm.powi(4) - g.u4).abs() <= 1e-12 * g.u4);
            }
        }
    }

    #[test]
    fn mm_bent_hits_the_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rot: Vec<usize> = (0..16).map(|y| ((y << 1) | (y >> 3)) & 15).collect();
        let g = TruthTable::random(4, &mut rng).unwrap();
        let f = mm_bent(8, &rot, Some(&g)).unwrap();
        assert!(is_bent(&f).unwrap());
        assert_eq!(spectral(&f).norm, 0.25);
    }
}
