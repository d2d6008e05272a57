//! Sparse binary parity-check codes and their constructions.
//!
//! A code is stored as a bipartite adjacency structure between `n` bit nodes
//! and `m` check nodes (both directions kept sorted).  Codewords are the
//! binary words satisfying even parity on every check neighborhood.
//!
//! Alongside the core type this module provides:
//! * alist text I/O ([`load_alist`] / [`save_alist`]),
//! * GF(2) linear algebra ([`gf2_rank`], [`gf2_nullspace_basis`],
//!   [`enumerate_codewords`]),
//! * random regular codes via the configuration model
//!   ([`random_regular_code`]) and the quasi-cyclic `[155, 64]` code built
//!   from 31×31 circulants ([`tanner_code`]),
//! * exhaustive vertex-expansion certification ([`check_expansion`]).

mod alist;
mod expansion;
mod gf2;

pub use alist::{load_alist, save_alist};
pub use expansion::{
    check_expansion, check_expansion_with_budget, has_unique_neighbor_check,
    ExpansionCertificate, ExpansionOutcome, DEFAULT_SUBSET_BUDGET,
};
pub use gf2::{enumerate_codewords, gf2_nullspace_basis, gf2_rank, DEFAULT_DIMENSION_BUDGET};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Errors arising from code construction, parsing, and queries.
#[derive(Debug, Error)]
pub enum CodeError {
    /// A malformed alist document; `line` is 1-based.
    #[error("alist line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Structurally invalid code (duplicate edges, empty checks where
    /// forbidden, out-of-range node indices, ...).
    #[error("invalid code: {0}")]
    Invalid(String),
    /// Degree parameters that admit no code (`n·dv` not divisible by `dc`).
    #[error("no regular code with n={n}, dv={dv}, dc={dc}: n·dv must be divisible by dc")]
    Divisibility { n: usize, dv: usize, dc: usize },
    /// The configuration model kept producing multi-edges.
    #[error("random regular construction failed after {attempts} attempts (multi-edges every time)")]
    ConstructionFailed { attempts: usize },
    /// An enumeration was refused because it would exceed its budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A word length does not match the code length.
    #[error("word length {got} does not match code length {want}")]
    LengthMismatch { got: usize, want: usize },
    /// An operation requiring regular degrees was applied to an
    /// irregular code.
    #[error("operation requires {0}")]
    IrregularCode(&'static str),
    /// A parameter outside its documented range.
    #[error("parameter out of range: {0}")]
    Parameter(String),
}

/// A binary word of fixed length, each bit stored as `0u8` or `1u8`.
///
/// Ordering is lexicographic on the bit vector, which is the tie-breaking
/// order used by the brute-force ML decoder.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    /// Wraps a bit vector.
    ///
    /// # Panics
    /// Panics if any entry is not 0 or 1.
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(
            bits.iter().all(|&b| b <= 1),
            "binary word entries must be 0 or 1"
        );
        BinaryWord { bits }
    }

    /// The all-zeros word of length `n`.
    pub fn zeros(n: usize) -> Self {
        BinaryWord { bits: vec![0; n] }
    }

    /// Word length in bits.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// The value of bit `i`.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    /// All bits as a slice.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// In-place XOR with another word of the same length.
    pub fn xor_assign(&mut self, other: &BinaryWord) {
        assert_eq!(self.bits.len(), other.bits.len(), "length mismatch");
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

/// A binary linear code given by a sparse parity-check matrix, stored as the
/// bipartite adjacency between bit nodes `0..n` and check nodes `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheckCode {
    n: usize,
    check_neighbors: Vec<Vec<usize>>,
    bit_neighbors: Vec<Vec<usize>>,
}

impl ParityCheckCode {
    /// Builds a code from per-check bit neighborhoods over `n` bits.
    ///
    /// Neighborhoods are sorted internally; duplicate entries within a check
    /// and out-of-range bit indices are rejected.  Checks with empty
    /// neighborhoods are permitted here (they constrain nothing) but are
    /// rejected by alist serialization and polytope construction.
    pub fn from_check_neighborhoods(
        n: usize,
        checks: Vec<Vec<usize>>,
    ) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::Invalid("code length must be positive".into()));
        }
        let mut check_neighbors = checks;
        let mut bit_neighbors = vec![Vec::new(); n];
        for (a, nb) in check_neighbors.iter_mut().enumerate() {
            nb.sort_unstable();
            if let Some(&bad) = nb.iter().find(|&&i| i >= n) {
                return Err(CodeError::Invalid(format!(
                    "check {a} references bit {bad}, but n = {n}"
                )));
            }
            if nb.windows(2).any(|w| w[0] == w[1]) {
                return Err(CodeError::Invalid(format!(
                    "check {a} has a repeated bit (multi-edge)"
                )));
            }
            for &i in nb.iter() {
                bit_neighbors[i].push(a);
            }
        }
        // Bit neighborhoods are already sorted: checks were visited in order.
        Ok(ParityCheckCode {
            n,
            check_neighbors,
            bit_neighbors,
        })
    }

    /// Code length (number of bit nodes).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parity checks (rows of H, including any redundant ones).
    pub fn m(&self) -> usize {
        self.check_neighbors.len()
    }

    /// The sorted bit neighborhood of check `a`.
    pub fn check_neighbors(&self, a: usize) -> &[usize] {
        &self.check_neighbors[a]
    }

    /// The sorted check neighborhood of bit `i`.
    pub fn bit_neighbors(&self, i: usize) -> &[usize] {
        &self.bit_neighbors[i]
    }

    /// Degree of check `a`.
    pub fn check_degree(&self, a: usize) -> usize {
        self.check_neighbors[a].len()
    }

    /// Degree of bit `i`.
    pub fn bit_degree(&self, i: usize) -> usize {
        self.bit_neighbors[i].len()
    }

    /// Total number of edges in the bipartite graph.
    pub fn edge_count(&self) -> usize {
        self.check_neighbors.iter().map(Vec::len).sum()
    }

    /// Largest check degree, or 0 for a code with no checks.
    pub fn max_check_degree(&self) -> usize {
        self.check_neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest bit degree.
    pub fn max_bit_degree(&self) -> usize {
        self.bit_neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(dv)` when every bit has the same degree `dv ≥ 1`.
    pub fn uniform_bit_degree(&self) -> Option<usize> {
        let dv = self.bit_neighbors.first()?.len();
        if dv >= 1 && self.bit_neighbors.iter().all(|nb| nb.len() == dv) {
            Some(dv)
        } else {
            None
        }
    }

    /// `Some(dc)` when every check has the same degree `dc ≥ 1`.
    pub fn uniform_check_degree(&self) -> Option<usize> {
        let dc = self.check_neighbors.first()?.len();
        if dc >= 1 && self.check_neighbors.iter().all(|nb| nb.len() == dc) {
            Some(dc)
        } else {
            None
        }
    }

    /// `Some((dv, dc))` for a (dv, dc)-regular code.
    pub fn regular_degrees(&self) -> Option<(usize, usize)> {
        Some((self.uniform_bit_degree()?, self.uniform_check_degree()?))
    }

    /// Design rate `1 − m/n`.  This counts redundant checks, so it can be
    /// lower than the true rate `1 − rank(H)/n`.
    pub fn design_rate(&self) -> f64 {
        1.0 - self.m() as f64 / self.n() as f64
    }

    /// True rate `k/n` with `k = n − rank(H)`.
    pub fn rate(&self) -> f64 {
        (self.n() - gf2_rank(self)) as f64 / self.n() as f64
    }

    /// Whether `word` satisfies every parity check.
    pub fn is_codeword(&self, word: &BinaryWord) -> Result<bool, CodeError> {
        if word.len() != self.n {
            return Err(CodeError::LengthMismatch {
                got: word.len(),
                want: self.n,
            });
        }
        Ok(self.check_neighbors.iter().all(|nb| {
            nb.iter().map(|&i| word.bit(i) as usize).sum::<usize>() % 2 == 0
        }))
    }
}

/// Samples a (dv, dc)-regular code on `n` bits with the configuration model.
///
/// All `n·dv` bit sockets are shuffled and matched to check sockets in
/// order; if any check ends up connected to the same bit twice the whole
/// pairing is discarded and resampled (up to 1000 attempts, after which
/// construction fails).  Identical `(n, dv, dc, seed)` always yield the
/// identical code.
pub fn random_regular_code(
    n: usize,
    dv: usize,
    dc: usize,
    seed: u64,
) -> Result<ParityCheckCode, CodeError> {
    if n == 0 || dv == 0 || dc == 0 {
        return Err(CodeError::Parameter(
            "n, dv, dc must all be positive".into(),
        ));
    }
    if (n * dv) % dc != 0 {
        return Err(CodeError::Divisibility { n, dv, dc });
    }
    if dc > n {
        return Err(CodeError::Parameter(format!(
            "check degree dc = {dc} exceeds code length n = {n}"
        )));
    }
    let m = n * dv / dc;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut sockets: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat(i).take(dv)).collect();

    const MAX_ATTEMPTS: usize = 1000;
    'attempt: for _ in 0..MAX_ATTEMPTS {
        sockets.shuffle(&mut rng);
        let mut checks: Vec<Vec<usize>> = vec![Vec::with_capacity(dc); m];
        for (t, &bit) in sockets.iter().enumerate() {
            checks[t / dc].push(bit);
        }
        for nb in &mut checks {
            nb.sort_unstable();
            if nb.windows(2).any(|w| w[0] == w[1]) {
                continue 'attempt;
            }
        }
        return ParityCheckCode::from_check_neighborhoods(n, checks);
    }
    Err(CodeError::ConstructionFailed {
        attempts: MAX_ATTEMPTS,
    })
}

/// Builds the quasi-cyclic (3,5)-regular `[155, 64]` code whose parity-check
/// matrix is a 3×5 grid of 31×31 circulant blocks, the block in grid
/// position `(i, j)` being the identity cyclically shifted by
/// `5^i · 2^j mod 31`.
///
/// The resulting matrix has 93 rows of GF(2) rank 91, so the code has
/// dimension 64.
pub fn tanner_code() -> ParityCheckCode {
    const P: usize = 31;
    let mut shift = [[0usize; 5]; 3];
    for (i, row) in shift.iter_mut().enumerate() {
        for (j, s) in row.iter_mut().enumerate() {
            let mut v = 1usize;
            for _ in 0..i {
                v = v * 5 % P;
            }
            for _ in 0..j {
                v = v * 2 % P;
            }
            *s = v;
        }
    }
    let mut checks = Vec::with_capacity(3 * P);
    for i in 0..3 {
        for r in 0..P {
            let mut nb = Vec::with_capacity(5);
            for j in 0..5 {
                nb.push(P * j + (r + shift[i][j]) % P);
            }
            checks.push(nb);
        }
    }
    ParityCheckCode::from_check_neighborhoods(5 * P, checks)
        .expect("circulant construction is structurally valid")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The [7,4] Hamming code used as a hand-checkable fixture throughout.
    pub(crate) fn hamming_7_4() -> ParityCheckCode {
        // H = [1 0 1 0 1 0 1; 0 1 1 0 0 1 1; 0 0 0 1 1 1 1]
        ParityCheckCode::from_check_neighborhoods(
            7,
            vec![vec![0, 2, 4, 6], vec![1, 2, 5, 6], vec![3, 4, 5, 6]],
        )
        .unwrap()
    }

    #[test]
    fn binary_word_basics() {
        let w = BinaryWord::new(vec![1, 0, 1, 1]);
        assert_eq!(w.len(), 4);
        assert_eq!(w.weight(), 3);
        assert_eq!(w.bit(1), 0);
        assert_eq!(format!("{w}"), "1011");
        let mut x = BinaryWord::zeros(4);
        x.xor_assign(&w);
        assert_eq!(x, w);
        // Lexicographic order drives ML tie-breaking.
        assert!(BinaryWord::new(vec![0, 1, 1]) < BinaryWord::new(vec![1, 0, 0]));
    }

    #[test]
    #[should_panic(expected = "0 or 1")]
    fn binary_word_rejects_non_bits() {
        BinaryWord::new(vec![0, 2]);
    }

    #[test]
    fn adjacency_is_consistent_and_sorted() {
        let code = ParityCheckCode::from_check_neighborhoods(
            3,
            vec![vec![1, 0], vec![2, 1]],
        )
        .unwrap();
        assert_eq!(code.check_neighbors(0), &[0, 1]);
        assert_eq!(code.check_neighbors(1), &[1, 2]);
        assert_eq!(code.bit_neighbors(0), &[0]);
        assert_eq!(code.bit_neighbors(1), &[0, 1]);
        assert_eq!(code.bit_neighbors(2), &[1]);
        assert_eq!(code.edge_count(), 4);
        assert_eq!(code.design_rate(), 1.0 - 2.0 / 3.0);
    }

    #[test]
    fn rejects_multi_edges_and_bad_indices() {
        assert!(matches!(
            ParityCheckCode::from_check_neighborhoods(3, vec![vec![1, 1]]),
            Err(CodeError::Invalid(_))
        ));
        assert!(matches!(
            ParityCheckCode::from_check_neighborhoods(3, vec![vec![3]]),
            Err(CodeError::Invalid(_))
        ));
    }

    #[test]
    fn hamming_structure() {
        let code = hamming_7_4();
        assert_eq!((code.n(), code.m()), (7, 3));
        assert_eq!(code.uniform_check_degree(), Some(4));
        // Bit degrees are 1,1,2,1,2,2,3: check-regular but bit-irregular.
        assert_eq!(code.uniform_bit_degree(), None);
        assert_eq!(code.bit_degree(6), 3);
        assert!(code.is_codeword(&BinaryWord::zeros(7)).unwrap());
        assert!(code.is_codeword(&BinaryWord::new(vec![1, 1, 1, 1, 1, 1, 1])).unwrap());
        // 1110000 is a codeword (cols 0,1,2 of H sum to zero).
        assert!(code.is_codeword(&BinaryWord::new(vec![1, 1, 1, 0, 0, 0, 0])).unwrap());
        assert!(!code.is_codeword(&BinaryWord::new(vec![1, 0, 0, 0, 0, 0, 0])).unwrap());
        assert!(matches!(
            code.is_codeword(&BinaryWord::zeros(6)),
            Err(CodeError::LengthMismatch { got: 6, want: 7 })
        ));
    }

    #[test]
    fn random_regular_has_exact_degrees() {
        let code = random_regular_code(200, 3, 4, 1).unwrap();
        assert_eq!((code.n(), code.m()), (200, 150));
        assert_eq!(code.regular_degrees(), Some((3, 4)));
    }

    #[test]
    fn random_regular_is_deterministic_per_seed() {
        let a = random_regular_code(60, 3, 6, 7).unwrap();
        let b = random_regular_code(60, 3, 6, 7).unwrap();
        let c = random_regular_code(60, 3, 6, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_regular_matching_edge_case() {
        // dv = 1, dc = 2: a perfect matching pairing bits two at a time.
        let code = random_regular_code(4, 1, 2, 3).unwrap();
        assert_eq!(code.m(), 2);
        assert_eq!(code.regular_degrees(), Some((1, 2)));
    }

    #[test]
    fn random_regular_rejects_bad_parameters() {
        assert!(matches!(
            random_regular_code(5, 3, 4, 0),
            Err(CodeError::Divisibility { .. })
        ));
        assert!(matches!(
            random_regular_code(2, 3, 6, 0),
            Err(CodeError::Parameter(_))
        ));
    }

    #[test]
    fn tanner_code_structure() {
        let code = tanner_code();
        assert_eq!((code.n(), code.m()), (155, 93));
        assert_eq!(code.regular_degrees(), Some((3, 5)));
        assert_eq!(gf2_rank(&code), 91);
        // Dimension 64, so the true rate exceeds the design rate.
        assert!((code.rate() - 64.0 / 155.0).abs() < 1e-12);
        assert!((code.design_rate() - 62.0 / 155.0).abs() < 1e-12);
    }

    #[test]
    fn tanner_code_first_check_row() {
        // Block row 0 has shifts 5^0·2^j = 1, 2, 4, 8, 16; row r = 0 of each
        // block has its 1 in column (0 + shift) mod 31.
        let code = tanner_code();
        assert_eq!(code.check_neighbors(0), &[1, 33, 66, 101, 140]);
    }
}
