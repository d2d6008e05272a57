//! The relaxed codeword polytope and its combinatorial structure.
//!
//! For each parity check `a` with neighborhood `N(a)`, the local codeword
//! polytope is cut out of the unit box by one inequality per odd-weight
//! local pattern `z ⊆ N(a)` (the patterns violating the check):
//!
//! ```text
//! Σ_{i ∈ N(a), z_i = 0} x_i  −  Σ_{i ∈ N(a), z_i = 1} x_i  ≥  1 − weight(z)
//! ```
//!
//! The relaxed polytope is the intersection of all local polytopes with the
//! box `0 ≤ x_i ≤ 1`.  Its integral points are exactly the codewords; its
//! fractional vertices are the pseudocodewords that defeat LP decoding.
//!
//! Inequalities are indexed deterministically: forbidden-pattern rows
//! grouped by check in increasing check order (patterns in lexicographic
//! order within a check), then the `n` lower box rows, then the `n` upper
//! box rows.  Everything downstream (active sets, LP bases, facet guessing)
//! speaks this index language.

mod vertex_enum;

pub use vertex_enum::VertexEnumBudget;

use crate::codes::{BinaryWord, ParityCheckCode};
use num::{BigRational, One, Signed, Zero};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

/// Errors from polytope construction and queries.
#[derive(Debug, Error)]
pub enum PolytopeError {
    /// A check whose degree the construction refuses (zero, or so large the
    /// per-check row count `2^(deg−1)` would blow up).
    #[error("check {check} has degree {degree}, outside the supported range 1..={max}")]
    DegreeOutOfRange {
        check: usize,
        degree: usize,
        max: usize,
    },
    /// A point that violates the inequality with the given index.
    #[error("point is infeasible: inequality {index} is violated")]
    Infeasible { index: usize },
    /// An inequality index past the end of the polytope's list.
    #[error("inequality index {index} out of range (polytope has {count})")]
    IndexOutOfRange { index: usize, count: usize },
    /// The same bit pinned twice.
    #[error("bit {bit} is pinned more than once")]
    DuplicatePin { bit: usize },
    /// A bit pinned to both 0 and 1.
    #[error("bit {bit} is pinned to both 0 and 1")]
    ContradictoryPin { bit: usize },
    /// A bit index or pin value outside the code.
    #[error("invalid pin: {0}")]
    InvalidPin(String),
    /// A point whose length differs from the code length.
    #[error("point has {got} coordinates, code length is {want}")]
    LengthMismatch { got: usize, want: usize },
    /// Vertex enumeration refused or aborted by its budget.
    #[error("vertex enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    /// An operation needing uniform degrees applied to an irregular code.
    #[error("operation requires {0}")]
    IrregularCode(&'static str),
}

/// What a single inequality row means.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum IneqKind {
    /// The row forbidding local pattern `word` (over the sorted neighborhood
    /// of `check`).
    ForbiddenSet { check: usize, word: Vec<u8> },
    /// `x_bit ≥ 0`.
    BoxLower { bit: usize },
    /// `−x_bit ≥ −1`.
    BoxUpper { bit: usize },
}

/// One facet-defining inequality `Σ coeffs·x ≥ rhs` with integer data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearInequality {
    /// Row provenance.
    pub kind: IneqKind,
    /// Sparse coefficients `(bit, ±1)`, sorted by bit.
    pub coeffs: Vec<(usize, i8)>,
    /// Right-hand side.
    pub rhs: i32,
}

impl LinearInequality {
    /// Left-hand side at a float point.
    pub fn lhs_f64(&self, x: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .map(|&(i, c)| c as f64 * x[i])
            .sum()
    }

    /// Slack `lhs − rhs` at a float point (negative means violated).
    pub fn slack_f64(&self, x: &[f64]) -> f64 {
        self.lhs_f64(x) - self.rhs as f64
    }

    /// Slack at an exact rational point.
    pub fn slack_exact(&self, x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::from_integer((-self.rhs).into());
        for &(i, c) in &self.coeffs {
            if c == 1 {
                acc += &x[i];
            } else {
                acc -= &x[i];
            }
        }
        acc
    }
}

/// Numerical tolerances for float-mode polytope queries.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// A row with `|slack| ≤ eps_act` counts as active; a row with
    /// `slack < −eps_act` counts as violated.
    pub eps_act: f64,
    /// A coordinate within `eps_int` of 0 or 1 counts as integral.
    pub eps_int: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_act: 1e-8,
            eps_int: 1e-6,
        }
    }
}

/// A point of the ambient space, carried either as exact rationals or as
/// floats depending on the arithmetic mode that produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum PolytopePoint {
    /// Exact rational coordinates.
    Exact(Vec<BigRational>),
    /// Binary64 coordinates.
    Float(Vec<f64>),
}

impl PolytopePoint {
    /// The exact embedding of a binary word.
    pub fn from_word(word: &BinaryWord) -> Self {
        PolytopePoint::Exact(
            word.bits()
                .iter()
                .map(|&b| BigRational::from_integer(b.into()))
                .collect(),
        )
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        match self {
            PolytopePoint::Exact(v) => v.len(),
            PolytopePoint::Float(v) => v.len(),
        }
    }

    /// True for a zero-length point.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate `i` as a float (rounded from the rational in exact mode).
    pub fn coord_f64(&self, i: usize) -> f64 {
        match self {
            PolytopePoint::Exact(v) => rational_to_f64(&v[i]),
            PolytopePoint::Float(v) => v[i],
        }
    }

    /// All coordinates as floats.
    pub fn to_f64_vec(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.coord_f64(i)).collect()
    }

    /// All coordinates as exact rationals (floats embed exactly).
    pub fn to_exact(&self) -> Vec<BigRational> {
        match self {
            PolytopePoint::Exact(v) => v.clone(),
            PolytopePoint::Float(v) => v
                .iter()
                .map(|&x| BigRational::from_float(x).expect("finite coordinate"))
                .collect(),
        }
    }

    /// Whether every coordinate is (within `eps_int`, in float mode) 0 or 1.
    pub fn is_integral(&self, eps_int: f64) -> bool {
        match self {
            PolytopePoint::Exact(v) => v.iter().all(|c| c.is_zero() || c.is_one()),
            PolytopePoint::Float(v) => v
                .iter()
                .all(|&c| c.abs() <= eps_int || (c - 1.0).abs() <= eps_int),
        }
    }

    /// The binary word this point rounds to, when integral.
    pub fn rounded_word(&self, eps_int: f64) -> Option<BinaryWord> {
        if !self.is_integral(eps_int) {
            return None;
        }
        Some(BinaryWord::new(
            (0..self.len())
                .map(|i| u8::from(self.coord_f64(i) > 0.5))
                .collect(),
        ))
    }

    /// JSON form: exact coordinates as `"p/q"` strings, floats as numbers.
    pub fn json_value(&self) -> serde_json::Value {
        match self {
            PolytopePoint::Exact(v) => {
                json!(v.iter().map(rational_string).collect::<Vec<_>>())
            }
            PolytopePoint::Float(v) => json!(v),
        }
    }
}

/// `"p/q"` with the denominator always written, e.g. `"0/1"`, `"1/2"`.
pub(crate) fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back on a lossy division for pathological magnitudes.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// The sorted indices of the inequalities active (tight) at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActiveSet {
    indices: Vec<usize>,
}

impl ActiveSet {
    pub(crate) fn new(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        ActiveSet { indices }
    }

    /// Number of active inequalities.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// True when no inequality is active.
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Whether inequality `idx` is active.
    pub fn contains(&self, idx: usize) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    /// The sorted indices.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Indices active here but not in `other` (set difference, sorted).
    pub fn difference(&self, other: &ActiveSet) -> Vec<usize> {
        self.indices
            .iter()
            .copied()
            .filter(|&i| !other.contains(i))
            .collect()
    }
}

/// Which bits and checks of a point are fractional, and how the fractional
/// part decomposes into connected pieces of the Tanner graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FractionalProfile {
    /// Bits with non-integral coordinates, sorted.
    pub fractional_bits: Vec<usize>,
    /// Checks with at least one fractional neighbor, sorted.
    pub fractional_checks: Vec<usize>,
    /// Connected components of the fractional subgraph (bit sets, each
    /// sorted; components ordered by smallest member).
    pub components: Vec<Vec<usize>>,
}

impl FractionalProfile {
    /// True when the point is integral.
    pub fn is_integral(&self) -> bool {
        self.fractional_bits.is_empty()
    }
}

/// Classifies each coordinate of `point` as integral or fractional and
/// decomposes the fractional bits into Tanner-graph components.
pub fn fractional_profile(
    code: &ParityCheckCode,
    point: &PolytopePoint,
    tol: &Tolerances,
) -> Result<FractionalProfile, PolytopeError> {
    if point.len() != code.n() {
        return Err(PolytopeError::LengthMismatch {
            got: point.len(),
            want: code.n(),
        });
    }
    let fractional = |i: usize| -> bool {
        match point {
            PolytopePoint::Exact(v) => !(v[i].is_zero() || v[i].is_one()),
            PolytopePoint::Float(v) => {
                v[i].abs() > tol.eps_int && (v[i] - 1.0).abs() > tol.eps_int
            }
        }
    };
    let frac_bit: Vec<bool> = (0..code.n()).map(fractional).collect();
    let fractional_bits: Vec<usize> = (0..code.n()).filter(|&i| frac_bit[i]).collect();
    let fractional_checks: Vec<usize> = (0..code.m())
        .filter(|&a| code.check_neighbors(a).iter().any(|&i| frac_bit[i]))
        .collect();

    // Breadth-first walk over fractional bits, stepping through any check
    // that touches a fractional bit.
    let mut component_of = vec![usize::MAX; code.n()];
    let mut components = Vec::new();
    for &start in &fractional_bits {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component_of[start] = id;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &a in code.bit_neighbors(i) {
                for &j in code.check_neighbors(a) {
                    if frac_bit[j] && component_of[j] == usize::MAX {
                        component_of[j] = id;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    Ok(FractionalProfile {
        fractional_bits,
        fractional_checks,
        components,
    })
}

/// Fractional checks of `profile` touching exactly one fractional bit.
///
/// At a polytope vertex this list is always empty: a lone fractional bit in
/// an otherwise integral check neighborhood could be moved toward 0 or 1
/// without leaving the local polytope, so the point would not be extreme.
pub fn lonely_fractional_checks(
    code: &ParityCheckCode,
    profile: &FractionalProfile,
) -> Vec<usize> {
    let frac: std::collections::HashSet<usize> =
        profile.fractional_bits.iter().copied().collect();
    profile
        .fractional_checks
        .iter()
        .copied()
        .filter(|&a| {
            code.check_neighbors(a)
                .iter()
                .filter(|i| frac.contains(i))
                .count()
                == 1
        })
        .collect()
}

/// Upper bound on the active-set size of a point with the given fractional
/// profile, on a check-regular code of check degree `dc`:
///
/// ```text
/// (m − |C_frac|)·dc + 2·|C_frac| + n − |V_frac|
/// ```
///
/// Integral checks contribute at most `dc` active forbidden rows each,
/// fractional checks at most 2, and each fractional bit loses its active
/// box row.
pub fn active_set_upper_bound(
    code: &ParityCheckCode,
    profile: &FractionalProfile,
) -> Result<usize, PolytopeError> {
    let Some(dc) = code.uniform_check_degree() else {
        return Err(PolytopeError::IrregularCode(
            "a check-regular code (uniform check degree)",
        ));
    };
    let c_frac = profile.fractional_checks.len();
    let v_frac = profile.fractional_bits.len();
    Ok((code.m() - c_frac) * dc + 2 * c_frac + code.n() - v_frac)
}

/// All odd-weight binary words of the given length, in lexicographic order:
/// the local patterns a parity check forbids.
pub fn forbidden_sequences(degree: usize) -> Result<Vec<Vec<u8>>, PolytopeError> {
    if degree == 0 || degree > DEGREE_BUDGET {
        return Err(PolytopeError::DegreeOutOfRange {
            check: usize::MAX,
            degree,
            max: DEGREE_BUDGET,
        });
    }
    let mut out = Vec::with_capacity(1usize << (degree - 1));
    for v in 0u32..1 << degree {
        if v.count_ones() % 2 == 1 {
            // Bit t of the word is the (degree−1−t)-th bit of v, so counting
            // v upward walks the words in lexicographic order.
            out.push((0..degree).map(|t| (v >> (degree - 1 - t) & 1) as u8).collect());
        }
    }
    Ok(out)
}

/// Largest check degree accepted when building a polytope (each check of
/// degree `d` contributes `2^(d−1)` rows).
pub const DEGREE_BUDGET: usize = 16;

/// The relaxed codeword polytope of a code: the full inequality list plus
/// deterministic index bookkeeping.
#[derive(Clone, Debug)]
pub struct RelaxedPolytope {
    code: ParityCheckCode,
    inequalities: Vec<LinearInequality>,
    /// Prefix sums: forbidden rows of check `a` occupy
    /// `check_offset[a]..check_offset[a+1]`.
    check_offset: Vec<usize>,
    /// Total number of forbidden-pattern rows (box rows follow).
    forbidden_count: usize,
}

/// Builds the relaxed polytope of `code`.  Every check must have degree
/// between 1 and [`DEGREE_BUDGET`].
pub fn build_polytope(code: &ParityCheckCode) -> Result<RelaxedPolytope, PolytopeError> {
    RelaxedPolytope::build(code)
}

impl RelaxedPolytope {
    /// See [`build_polytope`].
    pub fn build(code: &ParityCheckCode) -> Result<Self, PolytopeError> {
        let n = code.n();
        let mut inequalities = Vec::new();
        let mut check_offset = Vec::with_capacity(code.m() + 1);
        check_offset.push(0);
        for a in 0..code.m() {
            let nb = code.check_neighbors(a);
            let degree = nb.len();
            if degree == 0 || degree > DEGREE_BUDGET {
                return Err(PolytopeError::DegreeOutOfRange {
                    check: a,
                    degree,
                    max: DEGREE_BUDGET,
                });
            }
            for word in forbidden_sequences(degree)? {
                let coeffs: Vec<(usize, i8)> = nb
                    .iter()
                    .zip(&word)
                    .map(|(&i, &z)| (i, if z == 1 { -1 } else { 1 }))
                    .collect();
                let weight = word.iter().filter(|&&z| z == 1).count() as i32;
                inequalities.push(LinearInequality {
                    kind: IneqKind::ForbiddenSet { check: a, word },
                    coeffs,
                    rhs: 1 - weight,
                });
            }
            check_offset.push(inequalities.len());
        }
        let forbidden_count = inequalities.len();
        for i in 0..n {
            inequalities.push(LinearInequality {
                kind: IneqKind::BoxLower { bit: i },
                coeffs: vec![(i, 1)],
                rhs: 0,
            });
        }
        for i in 0..n {
            inequalities.push(LinearInequality {
                kind: IneqKind::BoxUpper { bit: i },
                coeffs: vec![(i, -1)],
                rhs: -1,
            });
        }
        Ok(RelaxedPolytope {
            code: code.clone(),
            inequalities,
            check_offset,
            forbidden_count,
        })
    }

    /// The underlying code.
    pub fn code(&self) -> &ParityCheckCode {
        &self.code
    }

    /// Ambient dimension (code length).
    pub fn dim(&self) -> usize {
        self.code.n()
    }

    /// Total number of inequalities (forbidden rows plus `2n` box rows).
    pub fn num_inequalities(&self) -> usize {
        self.inequalities.len()
    }

    /// Number of forbidden-pattern rows.
    pub fn forbidden_count(&self) -> usize {
        self.forbidden_count
    }

    /// The inequality at `idx`.
    pub fn inequality(&self, idx: usize) -> &LinearInequality {
        &self.inequalities[idx]
    }

    /// All inequalities in index order.
    pub fn inequalities(&self) -> &[LinearInequality] {
        &self.inequalities
    }

    /// The row indices of check `a`'s forbidden patterns.
    pub fn check_rows(&self, a: usize) -> std::ops::Range<usize> {
        self.check_offset[a]..self.check_offset[a + 1]
    }

    /// Index of the row forbidding `word` on check `a` (word over the sorted
    /// neighborhood; must have odd weight).
    pub fn forbidden_index(&self, a: usize, word: &[u8]) -> Option<usize> {
        let degree = self.code.check_degree(a);
        if word.len() != degree || word.iter().map(|&z| z as u32).sum::<u32>() % 2 != 1 {
            return None;
        }
        let v = word.iter().fold(0usize, |acc, &z| acc << 1 | z as usize);
        // Odd-parity values occupy every other slot: rank of v among them
        // is v >> 1.
        Some(self.check_offset[a] + (v >> 1))
    }

    /// Index of `x_bit ≥ 0`.
    pub fn box_lower_index(&self, bit: usize) -> usize {
        self.forbidden_count + bit
    }

    /// Index of `−x_bit ≥ −1`.
    pub fn box_upper_index(&self, bit: usize) -> usize {
        self.forbidden_count + self.code.n() + bit
    }

    /// Verifies feasibility of a point; on violation reports the smallest
    /// violated index.
    pub fn check_feasible(
        &self,
        point: &PolytopePoint,
        tol: &Tolerances,
    ) -> Result<(), PolytopeError> {
        self.scan_rows(point, tol).map(|_| ())
    }

    /// The active set of a feasible point, under default tolerances.
    pub fn active_set(&self, point: &PolytopePoint) -> Result<ActiveSet, PolytopeError> {
        self.active_set_with(point, &Tolerances::default())
    }

    /// The active set of a feasible point.  A violation beyond `eps_act`
    /// is an error carrying the violated row index.
    pub fn active_set_with(
        &self,
        point: &PolytopePoint,
        tol: &Tolerances,
    ) -> Result<ActiveSet, PolytopeError> {
        self.scan_rows(point, tol).map(ActiveSet::new)
    }

    fn scan_rows(
        &self,
        point: &PolytopePoint,
        tol: &Tolerances,
    ) -> Result<Vec<usize>, PolytopeError> {
        if point.len() != self.code.n() {
            return Err(PolytopeError::LengthMismatch {
                got: point.len(),
                want: self.code.n(),
            });
        }
        let mut active = Vec::new();
        match point {
            PolytopePoint::Exact(v) => {
                for (idx, ineq) in self.inequalities.iter().enumerate() {
                    let slack = ineq.slack_exact(v);
                    if slack.is_negative() {
                        return Err(PolytopeError::Infeasible { index: idx });
                    }
                    if slack.is_zero() {
                        active.push(idx);
                    }
                }
            }
            PolytopePoint::Float(v) => {
                for (idx, ineq) in self.inequalities.iter().enumerate() {
                    let slack = ineq.slack_f64(v);
                    if slack < -tol.eps_act {
                        return Err(PolytopeError::Infeasible { index: idx });
                    }
                    if slack <= tol.eps_act {
                        active.push(idx);
                    }
                }
            }
        }
        Ok(active)
    }

    /// Whether a feasible point is a vertex: its active rows span the full
    /// ambient dimension.  Exact points get an exact rank computation;
    /// float points a pivoted elimination with tolerance.
    pub fn is_vertex(&self, point: &PolytopePoint) -> Result<bool, PolytopeError> {
        let tol = Tolerances::default();
        let active = self.active_set_with(point, &tol)?;
        let n = self.code.n();
        if active.len() < n {
            return Ok(false);
        }
        let rows: Vec<&LinearInequality> = active
            .indices()
            .iter()
            .map(|&i| &self.inequalities[i])
            .collect();
        Ok(coefficient_rank(&rows, n, matches!(point, PolytopePoint::Exact(_))) == n)
    }

    /// Enumerates every vertex exactly, in increasing lexicographic order
    /// of coordinates.  See [`VertexEnumBudget`] for the resource limits.
    pub fn enumerate_vertices(
        &self,
        budget: &VertexEnumBudget,
    ) -> Result<Vec<PolytopePoint>, PolytopeError> {
        vertex_enum::enumerate(self, &[], budget)
    }

    /// Restricts the polytope to the hyperplane where inequality `idx`
    /// holds with equality (a facet, unless the row is redundant).
    pub fn restrict_to_facet(&self, idx: usize) -> Result<RestrictedPolytope<'_>, PolytopeError> {
        RestrictedPolytope::new(self, Restriction::default()).and_facet(idx)
    }

    /// Pins bits to fixed values: pin `(i, 0)` makes the lower box row of
    /// `i` an equality, pin `(i, 1)` the upper one.  Duplicate or
    /// contradictory pins are rejected.
    pub fn pin_bits(&self, pins: &[(usize, u8)]) -> Result<RestrictedPolytope<'_>, PolytopeError> {
        RestrictedPolytope::new(self, Restriction::default()).and_pins(pins)
    }

    /// A machine-readable description of every row index, for report
    /// sidecars.
    pub fn index_legend(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .inequalities
            .iter()
            .enumerate()
            .map(|(idx, ineq)| match &ineq.kind {
                IneqKind::ForbiddenSet { check, word } => json!({
                    "index": idx,
                    "kind": "forbidden_set",
                    "check": check,
                    "word": word.iter().map(|z| z.to_string()).collect::<String>(),
                }),
                IneqKind::BoxLower { bit } => {
                    json!({ "index": idx, "kind": "box_lower", "bit": bit })
                }
                IneqKind::BoxUpper { bit } => {
                    json!({ "index": idx, "kind": "box_upper", "bit": bit })
                }
            })
            .collect();
        json!(rows)
    }
}

/// Rank of the coefficient rows (ignoring right-hand sides).
fn coefficient_rank(rows: &[&LinearInequality], n: usize, exact: bool) -> usize {
    if exact {
        if n <= vertex_enum::EXACT_DIM_LIMIT {
            return vertex_enum::integer_coefficient_rank(rows, n);
        }
        return rational_rank(rows, n);
    }
    // Partial-pivoted float elimination: adequate for float-mode points and
    // for dimensions past the exact engine's width.
    let mut mat: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![0.0; n];
            for &(i, c) in &r.coeffs {
                row[i] = c as f64;
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(best) = (rank..mat.len())
            .max_by(|&a, &b| mat[a][col].abs().total_cmp(&mat[b][col].abs()))
        else {
            break;
        };
        if mat[best][col].abs() < 1e-7 {
            continue;
        }
        mat.swap(rank, best);
        let pivot_row = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            let f = row[col] / pivot_row[col];
            if f != 0.0 {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank over the rationals, for exact points past the integer
/// engine's width.
fn rational_rank(rows: &[&LinearInequality], n: usize) -> usize {
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![BigRational::zero(); n];
            for &(i, c) in &r.coeffs {
                row[i] = BigRational::from_integer(c.into());
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(found) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, found);
        let pivot_row = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// A set of rows required to hold with equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Restriction {
    equalities: std::collections::BTreeSet<usize>,
}

impl Restriction {
    /// No equalities: the unrestricted polytope.
    pub fn none() -> Self {
        Restriction::default()
    }

    /// The sorted equality row indices.
    pub fn equality_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.equalities.iter().copied()
    }

    /// Number of equality rows.
    pub fn len(&self) -> usize {
        self.equalities.len()
    }

    /// True when no row is restricted.
    pub fn is_empty(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Whether row `idx` is restricted to equality.
    pub fn contains(&self, idx: usize) -> bool {
        self.equalities.contains(&idx)
    }
}

/// A polytope together with equality restrictions: the face where the
/// restricted rows are tight.
#[derive(Clone, Debug)]
pub struct RestrictedPolytope<'a> {
    base: &'a RelaxedPolytope,
    restriction: Restriction,
}

impl<'a> RestrictedPolytope<'a> {
    fn new(base: &'a RelaxedPolytope, restriction: Restriction) -> Self {
        RestrictedPolytope { base, restriction }
    }

    /// The underlying polytope.
    pub fn base(&self) -> &'a RelaxedPolytope {
        self.base
    }

    /// The equality set.
    pub fn restriction(&self) -> &Restriction {
        &self.restriction
    }

    /// Also require row `idx` to hold with equality.  Restricting the same
    /// row twice is idempotent; restricting both box rows of one bit is a
    /// contradiction.
    pub fn and_facet(mut self, idx: usize) -> Result<Self, PolytopeError> {
        let count = self.base.num_inequalities();
        if idx >= count {
            return Err(PolytopeError::IndexOutOfRange { index: idx, count });
        }
        if let IneqKind::BoxLower { bit } | IneqKind::BoxUpper { bit } =
            self.base.inequality(idx).kind
        {
            let partner = if idx == self.base.box_lower_index(bit) {
                self.base.box_upper_index(bit)
            } else {
                self.base.box_lower_index(bit)
            };
            if self.restriction.contains(partner) {
                return Err(PolytopeError::ContradictoryPin { bit });
            }
        }
        self.restriction.equalities.insert(idx);
        Ok(self)
    }

    /// Pin the given bits; see [`RelaxedPolytope::pin_bits`].
    pub fn and_pins(mut self, pins: &[(usize, u8)]) -> Result<Self, PolytopeError> {
        let mut seen = std::collections::HashSet::new();
        for &(bit, value) in pins {
            if bit >= self.base.code.n() {
                return Err(PolytopeError::InvalidPin(format!(
                    "bit {bit} out of range for code length {}",
                    self.base.code.n()
                )));
            }
            if value > 1 {
                return Err(PolytopeError::InvalidPin(format!(
                    "bit {bit} pinned to {value}, expected 0 or 1"
                )));
            }
            if !seen.insert(bit) {
                return Err(PolytopeError::DuplicatePin { bit });
            }
            let idx = if value == 0 {
                self.base.box_lower_index(bit)
            } else {
                self.base.box_upper_index(bit)
            };
            self = self.and_facet(idx)?;
        }
        Ok(self)
    }

    /// The pinned value of `bit`, if its box row is among the equalities.
    pub fn pinned_value(&self, bit: usize) -> Option<u8> {
        if self.restriction.contains(self.base.box_lower_index(bit)) {
            Some(0)
        } else if self.restriction.contains(self.base.box_upper_index(bit)) {
            Some(1)
        } else {
            None
        }
    }

    /// Feasibility within the face: base feasibility plus equality on every
    /// restricted row.
    pub fn check_feasible(
        &self,
        point: &PolytopePoint,
        tol: &Tolerances,
    ) -> Result<(), PolytopeError> {
        self.base.check_feasible(point, tol)?;
        for idx in self.restriction.equality_indices() {
            let ineq = self.base.inequality(idx);
            let tight = match point {
                PolytopePoint::Exact(v) => ineq.slack_exact(v).is_zero(),
                PolytopePoint::Float(v) => ineq.slack_f64(v).abs() <= tol.eps_act,
            };
            if !tight {
                return Err(PolytopeError::Infeasible { index: idx });
            }
        }
        Ok(())
    }

    /// Enumerates the vertices of the face exactly.  The face's vertices
    /// are vertices of the base polytope with all restricted rows tight.
    pub fn enumerate_vertices(
        &self,
        budget: &VertexEnumBudget,
    ) -> Result<Vec<PolytopePoint>, PolytopeError> {
        let eq: Vec<usize> = self.restriction.equality_indices().collect();
        vertex_enum::enumerate(self.base, &eq, budget)
    }
}

#[cfg(test)]
mod tests;
