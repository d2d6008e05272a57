//! Decoders over the relaxed codeword polytope.
//!
//! The family, in increasing order of effort:
//!
//! * [`ml_decode_bruteforce`] — exhaustive maximum-likelihood search over
//!   all codewords; the oracle everything else is measured against.
//! * [`lp_decode`] — one LP solve over the polytope.  An integral optimum
//!   is a *certified* ML codeword; a fractional one is a decoding failure
//!   that hands back the offending pseudocodeword vertex.
//! * [`facet_guess_decode`] — on LP failure, re-solve restricted to facets
//!   the pseudocodeword does **not** lie on (all of them, or a seeded
//!   random sample without replacement), and keep the best integral
//!   optimum found.
//! * [`bit_guess_decode`] — on LP failure, pin a seeded random set of
//!   `⌈c·log₂ n⌉` bits to every 0/1 pattern and re-solve each restriction.
//! * [`sum_product_decode`] — the classic message-passing baseline, no
//!   polytope involved (see [`sumproduct`]).
//!
//! Alongside the decoders sit the analytical companions: the exact
//! characterization of when exhaustive facet guessing fails
//! ([`efg_failure_predicate`]), the enumeration of better-than-ML
//! pseudocodewords ([`pseudocodewords_above`]), and closed-form success
//! bounds for the randomized variants ([`rfg_success_lower_bound`],
//! [`rbg_success_lower_bound`]).
//!
//! Every decoder is a pure function of `(code, objective, budget)` —
//! identical inputs, seeds included, give identical outcomes.

mod sumproduct;

pub use sumproduct::sum_product_decode;

use crate::codes::{enumerate_codewords, BinaryWord, CodeError, ParityCheckCode};
use crate::llr::LlrVector;
use crate::lp::{is_integral, ArithmeticMode, LpError, LpProblem, LpStatus};
use crate::polytope::{
    PolytopeError, PolytopePoint, RelaxedPolytope, Tolerances, VertexEnumBudget,
};
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

/// Errors from decoding.
#[derive(Debug, Error)]
pub enum DecodeError {
    /// A code-level failure (enumeration budget, length mismatch).
    #[error(transparent)]
    Code(#[from] CodeError),
    /// A polytope-level failure.
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    /// An LP solver failure.
    #[error(transparent)]
    Lp(#[from] LpError),
    /// Bit guessing asked for more bits than the code has.
    #[error("cannot guess {k} distinct bits on a length-{n} code")]
    GuessWidth { k: usize, n: usize },
    /// A budget whose fields violate its invariants.
    #[error("invalid guess budget: {0}")]
    InvalidBudget(String),
    /// A run that would exceed a hard resource cap.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    /// An invariant violation inside a decoder.
    #[error("internal decoder error: {0}")]
    Internal(String),
}

/// How a decode attempt ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    /// The LP optimum was integral: the word is the ML codeword, certified.
    MlCertified,
    /// A codeword was produced without an ML certificate.
    Integral,
    /// The LP optimum was fractional; the pseudocodeword is attached.
    FractionalFailure,
    /// A guessing decoder found at least one integral candidate; the best
    /// one is attached.
    ListSuccess,
    /// No integral candidate was found.
    ListFailure,
}

/// The result of one decode attempt, with enough counters to cost it.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOutcome {
    /// Terminal status.
    pub status: DecodeStatus,
    /// The decoded word, when one was produced.  For [`DecodeStatus::ListFailure`]
    /// from the sum-product baseline this carries the (non-codeword) hard
    /// decision; LP-based decoders leave it empty on failure.
    pub word: Option<BinaryWord>,
    /// The fractional LP optimum, kept whenever step 1 failed.
    pub pseudocodeword: Option<PolytopePoint>,
    /// Restrictions tried by a guessing decoder (or iterations run by the
    /// message-passing baseline).
    pub candidates_examined: u64,
    /// Total LP solves, the initial decode included.
    pub lp_solves: u64,
    /// Random draws consumed from the budget's seeded generator.
    pub rng_draws: u64,
}

/// Iteration plan for the guessing decoders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuessStrategy {
    /// Try every facet in the pool.
    Exhaustive,
    /// Try `n_iters` facets sampled uniformly without replacement.
    Random { n_iters: u64 },
}

/// Budget and seeding for [`facet_guess_decode`] and [`bit_guess_decode`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GuessBudget {
    /// Facet iteration plan (ignored by bit guessing).
    pub strategy: GuessStrategy,
    /// Seed for all randomness a decoder consumes.
    pub seed: u64,
    /// Bit-guessing width exponent: `⌈c·log₂ n⌉` bits are pinned (ignored
    /// by facet guessing).
    pub c: f64,
}

impl GuessBudget {
    /// An exhaustive facet sweep (the seed still feeds bit guessing).
    pub fn exhaustive(seed: u64) -> Self {
        GuessBudget {
            strategy: GuessStrategy::Exhaustive,
            seed,
            c: 1.0,
        }
    }

    /// A random plan with `n_iters ≥ 1` facet draws.
    pub fn random(n_iters: u64, seed: u64) -> Result<Self, DecodeError> {
        if n_iters == 0 {
            return Err(DecodeError::InvalidBudget(
                "iteration count must be at least 1".into(),
            ));
        }
        Ok(GuessBudget {
            strategy: GuessStrategy::Random { n_iters },
            seed,
            c: 1.0,
        })
    }

    /// Replaces the bit-guessing exponent (`c > 0`).
    pub fn with_c(mut self, c: f64) -> Result<Self, DecodeError> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(DecodeError::InvalidBudget(format!(
                "bit-guessing exponent must be positive and finite, got {c}"
            )));
        }
        self.c = c;
        Ok(self)
    }
}

/// A code, its polytope, and the arithmetic mode — built once, shared by
/// every decode call of an experiment.
#[derive(Clone, Debug)]
pub struct DecodeContext {
    code: ParityCheckCode,
    polytope: RelaxedPolytope,
    mode: ArithmeticMode,
}

impl DecodeContext {
    /// Builds the polytope for `code` and fixes the arithmetic mode.
    pub fn new(code: ParityCheckCode, mode: ArithmeticMode) -> Result<Self, DecodeError> {
        let polytope = RelaxedPolytope::build(&code)?;
        Ok(DecodeContext {
            code,
            polytope,
            mode,
        })
    }

    /// The code being decoded.
    pub fn code(&self) -> &ParityCheckCode {
        &self.code
    }

    /// The code's relaxed polytope.
    pub fn polytope(&self) -> &RelaxedPolytope {
        &self.polytope
    }

    /// The arithmetic mode every LP in this context solves in.
    pub fn mode(&self) -> ArithmeticMode {
        self.mode
    }
}

/// The codeword maximizing `γ·x`, by exhaustive exact scoring; ties break
/// to the lexicographically smallest word.
///
/// Refuses codes whose dimension exceeds
/// [`crate::codes::DEFAULT_DIMENSION_BUDGET`].
pub fn ml_decode_bruteforce(
    code: &ParityCheckCode,
    gamma: &LlrVector,
) -> Result<BinaryWord, DecodeError> {
    let words = enumerate_codewords(code, crate::codes::DEFAULT_DIMENSION_BUDGET)?;
    let gr = gamma.to_rationals();
    let mut best: Option<(BinaryWord, BigRational)> = None;
    for w in words {
        let s = word_score_exact(&gr, &w);
        let better = match &best {
            None => true,
            Some((bw, bs)) => s > *bs || (s == *bs && w < *bw),
        };
        if better {
            best = Some((w, s));
        }
    }
    best.map(|(w, _)| w)
        .ok_or_else(|| DecodeError::Internal("a code always has the all-zeros codeword".into()))
}

/// One LP solve over the polytope: an integral optimum is the certified ML
/// codeword; a fractional one is a failure carrying the pseudocodeword.
pub fn lp_decode(ctx: &DecodeContext, gamma: &LlrVector) -> Result<DecodeOutcome, DecodeError> {
    let sol = LpProblem::new(ctx.polytope(), gamma, ctx.mode())?
        .with_basis_certificate(false)
        .solve()?;
    if sol.status != LpStatus::Optimal {
        return Err(DecodeError::Internal(
            "the unrestricted polytope contains the all-zeros point".into(),
        ));
    }
    let point = sol
        .point
        .ok_or_else(|| DecodeError::Internal("optimal solve returned no point".into()))?;
    let outcome = match integral_codeword(ctx.code(), &point)? {
        Some(word) => DecodeOutcome {
            status: DecodeStatus::MlCertified,
            word: Some(word),
            pseudocodeword: None,
            candidates_examined: 0,
            lp_solves: 1,
            rng_draws: 0,
        },
        None => DecodeOutcome {
            status: DecodeStatus::FractionalFailure,
            word: None,
            pseudocodeword: Some(point),
            candidates_examined: 0,
            lp_solves: 1,
            rng_draws: 0,
        },
    };
    Ok(outcome)
}

/// Facet guessing: run [`lp_decode`]; on fractional failure, re-solve the
/// LP restricted to facets the pseudocodeword does not lie on — every such
/// facet under [`GuessStrategy::Exhaustive`], or `n_iters` seeded uniform
/// draws without replacement under [`GuessStrategy::Random`] — and return
/// the highest-likelihood integral optimum collected.
pub fn facet_guess_decode(
    ctx: &DecodeContext,
    gamma: &LlrVector,
    budget: &GuessBudget,
) -> Result<DecodeOutcome, DecodeError> {
    let first = lp_decode(ctx, gamma)?;
    if first.status == DecodeStatus::MlCertified {
        return Ok(first);
    }
    let xpc = first
        .pseudocodeword
        .clone()
        .ok_or_else(|| DecodeError::Internal("fractional failure carries its vertex".into()))?;
    let poly = ctx.polytope();
    let active = poly.active_set(&xpc)?;
    let pool: Vec<usize> = (0..poly.num_inequalities())
        .filter(|&idx| !active.contains(idx))
        .collect();
    if pool.is_empty() {
        return Err(DecodeError::Internal(
            "no point of a full-dimensional polytope lies on every facet".into(),
        ));
    }
    let (selected, rng_draws) = match budget.strategy {
        GuessStrategy::Exhaustive => (pool, 0),
        GuessStrategy::Random { n_iters } => {
            let k = (n_iters as usize).min(pool.len());
            (sample_without_replacement(pool, k, budget.seed), k as u64)
        }
    };

    let mut lp_solves = first.lp_solves;
    let mut candidates: Vec<BinaryWord> = Vec::new();
    for &idx in &selected {
        let face = poly.restrict_to_facet(idx)?;
        let sol = LpProblem::over_face(&face, gamma, ctx.mode())?
            .with_basis_certificate(false)
            .solve()?;
        lp_solves += 1;
        if sol.status != LpStatus::Optimal {
            continue;
        }
        let point = sol
            .point
            .ok_or_else(|| DecodeError::Internal("optimal solve returned no point".into()))?;
        if let Some(word) = integral_codeword(ctx.code(), &point)? {
            candidates.push(word);
        }
    }
    Ok(list_outcome(
        ctx,
        gamma,
        candidates,
        Some(xpc),
        selected.len() as u64,
        lp_solves,
        rng_draws,
    ))
}

/// Bit guessing: run [`lp_decode`]; on fractional failure, draw
/// `k = ⌈c·log₂ n⌉` distinct bit positions (seeded), solve the LP once per
/// 0/1 pattern of those bits pinned, and return the highest-likelihood
/// integral optimum.  Patterns no codeword extends make the restricted LP
/// infeasible; those are skipped but still counted.
pub fn bit_guess_decode(
    ctx: &DecodeContext,
    gamma: &LlrVector,
    budget: &GuessBudget,
) -> Result<DecodeOutcome, DecodeError> {
    let n = ctx.code().n();
    let k = bits_to_guess(budget.c, n)?;
    let first = lp_decode(ctx, gamma)?;
    if first.status == DecodeStatus::MlCertified {
        return Ok(first);
    }
    let xpc = first
        .pseudocodeword
        .clone()
        .ok_or_else(|| DecodeError::Internal("fractional failure carries its vertex".into()))?;

    let mut bits = sample_without_replacement((0..n).collect(), k, budget.seed);
    bits.sort_unstable();

    let mut lp_solves = first.lp_solves;
    let mut candidates: Vec<BinaryWord> = Vec::new();
    let patterns: u64 = 1 << k;
    for pattern in 0..patterns {
        let pins: Vec<(usize, u8)> = bits
            .iter()
            .enumerate()
            .map(|(j, &bit)| (bit, ((pattern >> j) & 1) as u8))
            .collect();
        let face = ctx.polytope().pin_bits(&pins)?;
        let sol = LpProblem::over_face(&face, gamma, ctx.mode())?
            .with_basis_certificate(false)
            .solve()?;
        lp_solves += 1;
        if sol.status != LpStatus::Optimal {
            continue;
        }
        let point = sol
            .point
            .ok_or_else(|| DecodeError::Internal("optimal solve returned no point".into()))?;
        if let Some(word) = integral_codeword(ctx.code(), &point)? {
            candidates.push(word);
        }
    }
    Ok(list_outcome(
        ctx,
        gamma,
        candidates,
        Some(xpc),
        patterns,
        lp_solves,
        k as u64,
    ))
}

/// `⌈c·log₂ n⌉`, with a tiny slack so values that are integral up to
/// binary64 rounding do not get bumped a whole bit upward.
fn bits_to_guess(c: f64, n: usize) -> Result<usize, DecodeError> {
    let raw = c * (n as f64).log2();
    let k = (raw - 1e-9).ceil().max(0.0) as usize;
    if k > n {
        return Err(DecodeError::GuessWidth { k, n });
    }
    // 2^k restricted solves; past this cap the run would be unusable.
    const MAX_GUESS_BITS: usize = 24;
    if k > MAX_GUESS_BITS {
        return Err(DecodeError::BudgetExceeded(format!(
            "bit guessing would solve 2^{k} LPs (cap: 2^{MAX_GUESS_BITS})"
        )));
    }
    Ok(k)
}

/// First `k` elements of a seeded uniform shuffle of `items` — a uniform
/// sample without replacement, in draw order.
fn sample_without_replacement(mut items: Vec<usize>, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let len = items.len();
    for i in 0..k.min(len) {
        let j = rng.random_range(i..len);
        items.swap(i, j);
    }
    items.truncate(k.min(len));
    items
}

/// Packages a guessing decoder's candidate list: the best integral
/// candidate wins (highest likelihood, ties to the lexicographically
/// smallest word), or the run is a list failure.
fn list_outcome(
    ctx: &DecodeContext,
    gamma: &LlrVector,
    candidates: Vec<BinaryWord>,
    pseudocodeword: Option<PolytopePoint>,
    candidates_examined: u64,
    lp_solves: u64,
    rng_draws: u64,
) -> DecodeOutcome {
    let word = best_word(ctx.mode(), gamma, candidates);
    DecodeOutcome {
        status: if word.is_some() {
            DecodeStatus::ListSuccess
        } else {
            DecodeStatus::ListFailure
        },
        word,
        pseudocodeword,
        candidates_examined,
        lp_solves,
        rng_draws,
    }
}

/// The highest-likelihood word, ties to the lexicographically smallest.
/// Comparison arithmetic follows the mode, so exact runs are immune to
/// float rounding in the scores.
fn best_word(
    mode: ArithmeticMode,
    gamma: &LlrVector,
    candidates: Vec<BinaryWord>,
) -> Option<BinaryWord> {
    match mode {
        ArithmeticMode::Exact => {
            let gr = gamma.to_rationals();
            let mut best: Option<(BinaryWord, BigRational)> = None;
            for w in candidates {
                let s = word_score_exact(&gr, &w);
                let better = match &best {
                    None => true,
                    Some((bw, bs)) => s > *bs || (s == *bs && w < *bw),
                };
                if better {
                    best = Some((w, s));
                }
            }
            best.map(|(w, _)| w)
        }
        ArithmeticMode::Float => {
            let mut best: Option<(BinaryWord, f64)> = None;
            for w in candidates {
                let s = word_score_f64(gamma, &w);
                let better = match &best {
                    None => true,
                    Some((bw, bs)) => s > *bs || (s == *bs && w < *bw),
                };
                if better {
                    best = Some((w, s));
                }
            }
            best.map(|(w, _)| w)
        }
    }
}

/// `Σ γ_i` over the set bits, exactly.
fn word_score_exact(gamma: &[BigRational], word: &BinaryWord) -> BigRational {
    let mut acc = BigRational::from_integer(0.into());
    for (i, &b) in word.bits().iter().enumerate() {
        if b == 1 {
            acc += &gamma[i];
        }
    }
    acc
}

/// `Σ γ_i` over the set bits, in fixed index order.
fn word_score_f64(gamma: &LlrVector, word: &BinaryWord) -> f64 {
    word.bits()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(i, _)| gamma.get(i))
        .sum()
}

/// The word of an integral point, provided it really is a codeword.  In
/// float mode a near-integral point could round to a parity-violating
/// word; such a point is not accepted as a decode.
fn integral_codeword(
    code: &ParityCheckCode,
    point: &PolytopePoint,
) -> Result<Option<BinaryWord>, DecodeError> {
    if !is_integral(point) {
        return Ok(None);
    }
    let word = point
        .rounded_word(Tolerances::default().eps_int)
        .ok_or_else(|| DecodeError::Internal("integral point must round to a word".into()))?;
    Ok(if code.is_codeword(&word)? {
        Some(word)
    } else {
        None
    })
}

/// Exact characterization of exhaustive-facet-guessing failure: true iff
/// **every** row active at `x_ml` also passes through some fractional
/// vertex of strictly higher likelihood.  When true, no facet restriction
/// can surface `x_ml` as its LP optimum; when false, at least one facet
/// yields it.
///
/// Enumerates all vertices, so small codes only.
pub fn efg_failure_predicate(
    polytope: &RelaxedPolytope,
    gamma: &LlrVector,
    x_ml: &BinaryWord,
) -> Result<bool, DecodeError> {
    let gr = gamma.to_rationals();
    let ml_score = word_score_exact(&gr, x_ml);
    let verts = polytope.enumerate_vertices(&VertexEnumBudget::default())?;
    let mut covering: Vec<crate::polytope::ActiveSet> = Vec::new();
    for v in &verts {
        if is_integral(v) {
            continue;
        }
        if vertex_score_exact(&gr, v) > ml_score {
            covering.push(polytope.active_set(v)?);
        }
    }
    let ml_active = polytope.active_set(&PolytopePoint::from_word(x_ml))?;
    Ok(ml_active
        .indices()
        .iter()
        .all(|&row| covering.iter().any(|a| a.contains(row))))
}

/// All fractional vertices of strictly higher likelihood than `x_ml`, each
/// flagged `true` when it shares an active row with `x_ml` (the adjacency
/// that matters for the bit-guessing success bound).
///
/// Enumerates all vertices, so small codes only.
pub fn pseudocodewords_above(
    polytope: &RelaxedPolytope,
    gamma: &LlrVector,
    x_ml: &BinaryWord,
) -> Result<Vec<(PolytopePoint, bool)>, DecodeError> {
    let gr = gamma.to_rationals();
    let ml_score = word_score_exact(&gr, x_ml);
    let ml_active = polytope.active_set(&PolytopePoint::from_word(x_ml))?;
    let verts = polytope.enumerate_vertices(&VertexEnumBudget::default())?;
    let mut out = Vec::new();
    for v in verts {
        if is_integral(&v) || vertex_score_exact(&gr, &v) <= ml_score {
            continue;
        }
        let active = polytope.active_set(&v)?;
        let adjacent = ml_active.indices().iter().any(|&row| active.contains(row));
        out.push((v, adjacent));
    }
    Ok(out)
}

/// `γ·v` for an arbitrary (possibly fractional) point, exactly.
fn vertex_score_exact(gamma: &[BigRational], v: &PolytopePoint) -> BigRational {
    let x = v.to_exact();
    gamma
        .iter()
        .zip(&x)
        .map(|(g, c)| g * c)
        .fold(BigRational::from_integer(0.into()), |acc, t| acc + t)
}

/// Active rows at any codeword of a check-regular code, per code bit:
/// `(1−R)·d_c + 1` (each check keeps `d_c` forbidden rows tight, and every
/// box row is tight).
pub fn codeword_active_density(dc: usize, rate: f64) -> f64 {
    (1.0 - rate) * dc as f64 + 1.0
}

/// Guaranteed active rows per bit at any pseudocodeword of a certified
/// `(α, δ)` vertex expander:
/// `(1 − R − δ·d_v·α)·d_c + 2·δ·d_v·α + (1 − α)`.
pub fn pseudocodeword_active_density(
    dc: usize,
    dv: usize,
    rate: f64,
    alpha: f64,
    delta: f64,
) -> f64 {
    let frac_checks = delta * dv as f64 * alpha;
    (1.0 - rate - frac_checks) * dc as f64 + 2.0 * frac_checks + (1.0 - alpha)
}

/// Per-iteration success lower bound for randomized facet guessing when at
/// most `c1` pseudocodewords beat the ML codeword:
/// `(γ_cw − c1·γ_pc) / (2^(d_c−1)·(1−R) + 2)`, clamped to `[0, 1]`.
/// `gamma_cw` and `gamma_pc` are the per-bit active-row densities above.
pub fn rfg_success_lower_bound(
    dc: usize,
    rate: f64,
    gamma_cw: f64,
    gamma_pc: f64,
    c1: f64,
) -> f64 {
    let denom = (1u64 << (dc - 1)) as f64 * (1.0 - rate) + 2.0;
    ((gamma_cw - c1 * gamma_pc) / denom).clamp(0.0, 1.0)
}

/// Success lower bound for randomized bit guessing against `m_above`
/// adjacent higher-likelihood pseudocodewords on a certified `α` expander:
/// `1 − m_above · n^(c·log₂(1−α))`, clamped to `[0, 1]`.
pub fn rbg_success_lower_bound(m_above: u64, n: usize, c: f64, alpha: f64) -> f64 {
    let exponent = c * (1.0 - alpha).log2();
    (1.0 - m_above as f64 * (n as f64).powf(exponent)).clamp(0.0, 1.0)
}
