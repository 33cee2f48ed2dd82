use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::{Error, Result};

/// Largest variable count a [`TruthTable`] may carry.
pub const MAX_VARS: u32 = 16;

/// Bit-packed truth table of `f: F_2^n -> F_2`.
///
/// Entry `x` (little-endian: bit `i` of `x` is variable `x_{i+1}`) lives in
/// bit `x % 64` of word `x / 64`. Bits beyond `2^n` in the last word are
/// always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    fn check_n(n: u32) -> Result<()> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::Range {
                what: "truth table",
                n,
                min: 1,
                max: MAX_VARS,
            });
        }
        Ok(())
    }

    fn word_count(n: u32) -> usize {
        (1usize << n).div_ceil(64)
    }

    /// The constant-zero function.
    pub fn zero(n: u32) -> Result<Self> {
        Self::check_n(n)?;
        Ok(Self {
            n,
            words: vec![0; Self::word_count(n)],
        })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for x in 0..tt.len() {
            if f(x) {
                tt.set(x, true);
            }
        }
        Ok(tt)
    }

    /// Builds a table from one `0`/`1` entry per input, lowest index first.
    pub fn from_bits(n: u32, bits: &[u8]) -> Result<Self> {
        Self::check_n(n)?;
        if bits.len() != 1usize << n {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for n = {n}, got {}",
                1usize << n,
                bits.len()
            )));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidParameter(format!("entry {b} is not 0 or 1")));
        }
        Self::from_fn(n, |x| bits[x] == 1)
    }

    /// Uniformly random function: `2^n` independent fair coin flips.
    pub fn random<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for w in tt.words.iter_mut() {
            *w = rng.random();
        }
        tt.mask_tail();
        Ok(tt)
    }

    fn mask_tail(&mut self) {
        let len = self.len();
        if len < 64 {
            self.words[0] &= (1u64 << len) - 1;
        }
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of entries, `2^n`.
    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        1usize << self.n
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    /// `f(x)` as `0` or `1`.
    #[inline]
    pub fn bit(&self, x: usize) -> u8 {
        self.get(x) as u8
    }

    #[inline]
    pub fn set(&mut self, x: usize, value: bool) {
        let mask = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= mask;
        } else {
            self.words[x >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, x: usize) {
        self.words[x >> 6] ^= 1u64 << (x & 63);
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        self.same_arity(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum())
    }

    /// Pointwise XOR `f ⊕ g`.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        Ok(Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub(crate) fn same_arity(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Exchanges entries `[cut, 2^n)` between two tables of equal arity.
    pub fn swap_suffix(&mut self, other: &mut Self, cut: usize) -> Result<()> {
        self.same_arity(other)?;
        if cut > self.len() {
            return Err(Error::InvalidParameter(format!(
                "cut {cut} beyond table length {}",
                self.len()
            )));
        }
        let first = cut >> 6;
        let offset = cut & 63;
        if first < self.words.len() {
            let keep = if offset == 0 { 0 } else { (1u64 << offset) - 1 };
            let (a, b) = (self.words[first], other.words[first]);
            self.words[first] = (a & keep) | (b & !keep);
            other.words[first] = (b & keep) | (a & !keep);
            for i in first + 1..self.words.len() {
                std::mem::swap(&mut self.words[i], &mut other.words[i]);
            }
        }
        Ok(())
    }

    /// Entries as `0`/`1` bytes, lowest index first.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len()).map(|x| self.bit(x)).collect()
    }

    /// Hex body of the text format: byte `i` packs entries `8i..8i+8`,
    /// lowest index in the lowest-order bit, two hex digits per byte.
    pub fn to_hex(&self) -> String {
        let nbytes = self.len().div_ceil(8);
        let mut out = String::with_capacity(2 * nbytes);
        for i in 0..nbytes {
            let byte = (self.words[i / 8] >> (8 * (i % 8))) as u8;
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    pub fn from_hex(n: u32, hex: &str) -> Result<Self> {
        Self::check_n(n).map_err(|e| Error::Parse(e.to_string()))?;
        let len = 1usize << n;
        let nbytes = len.div_ceil(8);
        let hex = hex.trim();
        if hex.len() != 2 * nbytes {
            return Err(Error::Parse(format!(
                "expected {} hex digits for n = {n}, got {}",
                2 * nbytes,
                hex.len()
            )));
        }
        let mut tt = Self::zero(n)?;
        for i in 0..nbytes {
            let byte = u8::from_str_radix(&hex[2 * i..2 * i + 2], 16)
                .map_err(|_| Error::Parse(format!("bad hex byte {:?}", &hex[2 * i..2 * i + 2])))?;
            tt.words[i / 8] |= (byte as u64) << (8 * (i % 8));
        }
        if len < 8 && tt.words[0] >> len != 0 {
            return Err(Error::Parse(format!(
                "bits set beyond the {len} table entries"
            )));
        }
        Ok(tt)
    }
}

/// Text format: `n=<k> tt=<hex>`.
impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} tt={}", self.n, self.to_hex())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({self})")
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut hex = None;
        for field in s.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) if n.is_none() => {
                    n = Some(
                        v.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad variable count {v:?}")))?,
                    )
                }
                Some(("tt", v)) if hex.is_none() => hex = Some(v),
                _ => return Err(Error::Parse(format!("unexpected field {field:?}"))),
            }
        }
        match (n, hex) {
            (Some(n), Some(hex)) => Self::from_hex(n, hex),
            _ => Err(Error::Parse("expected `n=<k> tt=<hex>`".into())),
        }
    }
}

/// Serialized as the `n=<k> tt=<hex>` text line.
impl serde::Serialize for TruthTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for TruthTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
