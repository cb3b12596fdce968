use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{internal, invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// One count per coefficient tuple.
    Tuple,
    /// One count per distinct codeword.
    Codeword,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Tuple => write!(f, "tuple"),
            Level::Codeword => write!(f, "codeword"),
        }
    }
}

/// Map from Hamming weight to frequency for a code of length `length` over `GF(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    level: Level,
    length: u64,
    q: u64,
    entries: BTreeMap<u64, BigUint>,
}

impl WeightDistribution {
    pub fn new(level: Level, length: u64, q: u64) -> Self {
        WeightDistribution {
            level,
            length,
            q,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_counts(level: Level, length: u64, q: u64, counts: &[u64]) -> Result<Self> {
        let mut d = WeightDistribution::new(level, length, q);
        for (w, &c) in counts.iter().enumerate() {
            d.add(w as u64, BigUint::from(c))?;
        }
        Ok(d)
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Adds `freq` codewords or tuples of weight `weight`; zero frequencies are dropped.
    pub fn add(&mut self, weight: u64, freq: BigUint) -> Result<()> {
        if weight > self.length {
            return Err(internal(format!(
                "weight {weight} exceeds the length {}",
                self.length
            )));
        }
        if freq.is_zero() {
            return Ok(());
        }
        *self.entries.entry(weight).or_default() += freq;
        Ok(())
    }

    pub fn frequency(&self, weight: u64) -> BigUint {
        self.entries.get(&weight).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<u64, BigUint> {
        &self.entries
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Smallest weight > 0 that occurs.
    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.entries.keys().copied().find(|&w| w > 0)
    }

    /// Divides every tuple frequency by the kernel size (the weight-0 count),
    /// turning tuple counts into codeword counts. Returns the kernel size too.
    ///
    /// The tuple -> codeword map is linear, so every fibre has the kernel's
    /// size; anything else is reported as an internal error.
    pub fn collapse_to_codewords(&self) -> Result<(WeightDistribution, BigUint)> {
        if self.level != Level::Tuple {
            return Err(invalid("collapse expects a tuple-level distribution"));
        }
        let kernel = self.frequency(0);
        if kernel.is_zero() {
            return Err(internal("tuple distribution has no zero-weight tuple"));
        }
        let mut out = WeightDistribution::new(Level::Codeword, self.length, self.q);
        for (&w, f) in &self.entries {
            if !(f % &kernel).is_zero() {
                return Err(internal(format!(
                    "frequency {f} at weight {w} is not a multiple of the kernel size {kernel}"
                )));
            }
            out.add(w, f / &kernel)?;
        }
        if out.dimension().is_none() {
            return Err(internal(format!(
                "codeword count {} is not a power of {}",
                out.total(),
                self.q
            )));
        }
        Ok((out, kernel))
    }

    /// `k` with `total = q^k`, for codeword-level distributions.
    pub fn dimension(&self) -> Option<u32> {
        if self.level != Level::Codeword {
            return None;
        }
        let total = self.total();
        let q = BigUint::from(self.q);
        let mut acc = BigUint::one();
        let mut k = 0;
        while acc < total {
            acc *= &q;
            k += 1;
        }
        (acc == total).then_some(k)
    }

    /// Lists weights whose frequencies differ, as `(weight, left, right)`.
    pub fn diff(&self, other: &WeightDistribution) -> Vec<(u64, BigUint, BigUint)> {
        let mut weights: Vec<u64> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        weights.sort_unstable();
        weights.dedup();
        weights
            .into_iter()
            .filter_map(|w| {
                let (a, b) = (self.frequency(w), other.frequency(w));
                (a != b).then_some((w, a, b))
            })
            .collect()
    }
}
