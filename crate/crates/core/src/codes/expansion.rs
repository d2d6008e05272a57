//! Exhaustive vertex-expansion certification for small codes.
//!
//! A bit-regular code of bit degree `dv` is an (α, δ)-expander when every
//! set `S` of at most `α·n` bits reaches at least `δ·dv·|S|` distinct
//! checks.  For small codes this is decidable by scanning all candidate
//! subsets; the scan is budgeted, so the result is a three-way outcome:
//! certified, refuted with a concrete witness subset, or undetermined
//! because the budget ran out first.
//!
//! Size thresholds are computed in exact rational arithmetic, so boundary
//! cases (`δ·dv·|S|` landing exactly on an integer) never depend on
//! floating-point rounding.

use super::{CodeError, ParityCheckCode};
use num::{BigRational, ToPrimitive};
use serde::Serialize;

/// Default cap on the number of subsets examined by [`check_expansion`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;

/// The three possible results of a budgeted exhaustive expansion scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionOutcome {
    /// Every subset within the size bound expands; the property holds.
    Certified,
    /// A concrete subset violates the expansion bound.
    Refuted,
    /// The subset budget was exhausted before the scan finished.
    Undetermined,
}

/// The result of an expansion scan: parameters, outcome, the witness for a
/// refutation, and how many subsets were examined.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionCertificate {
    /// Fraction of bits bounding the subset sizes scanned (`|S| ≤ α·n`).
    pub alpha: f64,
    /// Required expansion factor (`|N(S)| ≥ δ·dv·|S|`).
    pub delta: f64,
    /// Scan outcome.
    pub outcome: ExpansionOutcome,
    /// For [`ExpansionOutcome::Refuted`], the lexicographically first
    /// violating subset (sorted bit indices).
    pub witness: Option<Vec<usize>>,
    /// Number of nonempty subsets examined before the scan ended.
    pub subsets_checked: u64,
}

impl ExpansionCertificate {
    /// True exactly when the property was positively certified.
    pub fn certified(&self) -> bool {
        self.outcome == ExpansionOutcome::Certified
    }
}

/// Whether some check sees exactly one bit of `subset` (the unique-neighbor
/// property that makes expander arguments work when `δ > 1/2`).
pub fn has_unique_neighbor_check(code: &ParityCheckCode, subset: &[usize]) -> bool {
    let mut count = vec![0u32; code.m()];
    for &i in subset {
        for &a in code.bit_neighbors(i) {
            count[a] += 1;
        }
    }
    count.iter().any(|&c| c == 1)
}

/// [`check_expansion_with_budget`] with the default subset budget.
pub fn check_expansion(
    code: &ParityCheckCode,
    alpha: f64,
    delta: f64,
) -> Result<ExpansionCertificate, CodeError> {
    check_expansion_with_budget(code, alpha, delta, DEFAULT_SUBSET_BUDGET)
}

/// Scans all bit subsets of size at most `⌊α·n⌋` in lexicographic order and
/// checks `|N(S)| ≥ δ·dv·|S|` for each, stopping at the first violation or
/// when `budget` subsets have been examined.
///
/// Requires a bit-regular code (uniform bit degree `dv ≥ 1`) and parameters
/// `0 < α ≤ 1`, `0 < δ ≤ 1`.
pub fn check_expansion_with_budget(
    code: &ParityCheckCode,
    alpha: f64,
    delta: f64,
    budget: u64,
) -> Result<ExpansionCertificate, CodeError> {
    let Some(dv) = code.uniform_bit_degree() else {
        return Err(CodeError::IrregularCode(
            "a bit-regular code (uniform bit degree)",
        ));
    };
    if !(alpha > 0.0 && alpha <= 1.0) || !(delta > 0.0 && delta <= 1.0) {
        return Err(CodeError::Parameter(format!(
            "expansion parameters must satisfy 0 < α ≤ 1 and 0 < δ ≤ 1, got α = {alpha}, δ = {delta}"
        )));
    }

    let n = code.n();
    let alpha_r = BigRational::from_float(alpha).expect("finite");
    let delta_r = BigRational::from_float(delta).expect("finite");
    let s_max = (alpha_r * BigRational::from_integer(n.into()))
        .floor()
        .to_integer()
        .to_usize()
        .unwrap_or(n)
        .min(n);

    // min_neighbors[s] = smallest integer t with t ≥ δ·dv·s, computed once
    // per size in exact arithmetic.
    let min_neighbors: Vec<usize> = (0..=s_max)
        .map(|s| {
            (&delta_r * BigRational::from_integer((dv * s).into()))
                .ceil()
                .to_integer()
                .to_usize()
                .expect("threshold fits in usize")
        })
        .collect();

    let mut scan = Scan {
        code,
        min_neighbors: &min_neighbors,
        s_max,
        budget,
        subsets_checked: 0,
        hit_count: vec![0u32; code.m()],
        distinct_checks: 0,
        chosen: Vec::with_capacity(s_max),
    };
    let outcome = scan.run();
    let (outcome, witness) = match outcome {
        ScanEnd::Clean => (ExpansionOutcome::Certified, None),
        ScanEnd::Violation(w) => (ExpansionOutcome::Refuted, Some(w)),
        ScanEnd::OutOfBudget => (ExpansionOutcome::Undetermined, None),
    };
    Ok(ExpansionCertificate {
        alpha,
        delta,
        outcome,
        witness,
        subsets_checked: scan.subsets_checked,
    })
}

enum ScanEnd {
    Clean,
    Violation(Vec<usize>),
    OutOfBudget,
}

struct Scan<'a> {
    code: &'a ParityCheckCode,
    min_neighbors: &'a [usize],
    s_max: usize,
    budget: u64,
    subsets_checked: u64,
    hit_count: Vec<u32>,
    distinct_checks: usize,
    chosen: Vec<usize>,
}

impl Scan<'_> {
    fn run(&mut self) -> ScanEnd {
        if self.s_max == 0 {
            return ScanEnd::Clean;
        }
        self.extend(0)
    }

    /// Depth-first extension of the current subset by bits `from..n`,
    /// visiting subsets in lexicographic order.
    fn extend(&mut self, from: usize) -> ScanEnd {
        for i in from..self.code.n() {
            if self.subsets_checked == self.budget {
                return ScanEnd::OutOfBudget;
            }
            self.subsets_checked += 1;
            self.chosen.push(i);
            for &a in self.code.bit_neighbors(i) {
                self.hit_count[a] += 1;
                if self.hit_count[a] == 1 {
                    self.distinct_checks += 1;
                }
            }
            if self.distinct_checks < self.min_neighbors[self.chosen.len()] {
                return ScanEnd::Violation(self.chosen.clone());
            }
            if self.chosen.len() < self.s_max {
                match self.extend(i + 1) {
                    ScanEnd::Clean => {}
                    end => return end,
                }
            }
            self.chosen.pop();
            for &a in self.code.bit_neighbors(i) {
                self.hit_count[a] -= 1;
                if self.hit_count[a] == 0 {
                    self.distinct_checks -= 1;
                }
            }
        }
        ScanEnd::Clean
    }
}
