use super::TruthTable;

/// Walsh–Hadamard spectrum `W_f(u) = Σ_x (-1)^{f(x) ⊕ u·x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    coeffs: Vec<i32>,
}

impl WalshSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn max_abs(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn min_abs(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|c| c.unsigned_abs())
            .min()
            .unwrap_or(0)
    }

    /// `Σ_u W(u)^2`; equals `2^{2n}` by Parseval.
    pub fn sum_squares(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|&c| (c as i64 * c as i64) as u64)
            .sum()
    }

    /// `Σ_u W(u)^4`, exact.
    pub fn sum_fourth_powers(&self) -> u128 {
        self.coeffs
            .iter()
            .map(|&c| {
                let sq = (c as i64 * c as i64) as u128;
                sq * sq
            })
            .sum()
    }
}

/// Fast in-place butterfly, `n·2^n` additions.
pub fn walsh_hadamard(f: &TruthTable) -> WalshSpectrum {
    let mut coeffs: Vec<i32> = (0..f.len()).map(|x| 1 - 2 * f.bit(x) as i32).collect();
    let mut h = 1;
    while h < coeffs.len() {
        for block in coeffs.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        h *= 2;
    }
    WalshSpectrum { n: f.n(), coeffs }
}
