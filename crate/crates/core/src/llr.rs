//! Per-bit log-likelihood-ratio objectives.

use num::BigRational;
use serde::{Deserialize, Serialize};

/// A vector of per-bit channel log-likelihood ratios, one entry per code bit.
///
/// The sign convention is fixed throughout the crate: `values[i] > 0` means
/// bit `i` more likely **1**, `values[i] < 0` means bit `i` more likely **0**,
/// and a decoder maximizes the correlation `Σ values[i] · x[i]` over its
/// feasible set.  Under this convention the all-zeros codeword is optimal
/// exactly when no subset of bits has positive total LLR gain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LlrVector {
    values: Vec<f64>,
}

impl LlrVector {
    /// Wraps raw per-bit LLRs.  Every entry must be finite.
    ///
    /// # Panics
    /// Panics if any entry is NaN or infinite; decoders rely on finite
    /// objectives (and on exact embedding into rationals in exact mode).
    pub fn new(values: Vec<f64>) -> Self {
        assert!(
            values.iter().all(|v| v.is_finite()),
            "LLR entries must be finite"
        );
        LlrVector { values }
    }

    /// Number of bits.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True for a zero-length vector.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The LLR of bit `i`.
    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// All LLRs as a slice.
    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    /// The exact rational embedding of each (finite, binary64) entry.
    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|&v| BigRational::from_float(v).expect("finite LLR embeds exactly"))
            .collect()
    }
}

impl From<Vec<f64>> for LlrVector {
    fn from(values: Vec<f64>) -> Self {
        LlrVector::new(values)
    }
}
