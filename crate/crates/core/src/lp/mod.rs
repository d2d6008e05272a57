//! Linear programming over the relaxed codeword polytope.
//!
//! The one operation this module exports is: maximize a per-bit correlation
//! objective `γ·x` over the polytope (or over one of its faces, when rows
//! are restricted to equality), and return an optimal **vertex** together
//! with a certificate — `n` active rows of full rank — plus the objective
//! value and pivot count.
//!
//! Two arithmetic modes share one simplex implementation:
//!
//! * **Exact** — arbitrary-precision rationals.  The objective is the exact
//!   rational embedding of the given binary64 LLRs, every comparison is
//!   exact, and ties among optimal vertices break to the lexicographically
//!   smallest coordinate vector, making results bit-reproducible.
//! * **Float** — binary64 throughout, for long Monte-Carlo runs.  The
//!   deterministic pivoting rule from a fixed starting basis makes float
//!   runs reproducible too, though ties are broken by pivoting order rather
//!   than lexicographic minimality.
//!
//! Infeasible faces (e.g. bits pinned to values no codeword extends) are a
//! status, not an error.

mod scalar;
mod simplex;

use crate::llr::LlrVector;
use crate::polytope::{
    PolytopeError, PolytopePoint, RelaxedPolytope, RestrictedPolytope, Restriction, Tolerances,
};
use num::BigRational;
use simplex::Solver;
use thiserror::Error;

/// Errors from LP construction and solving.
#[derive(Debug, Error)]
pub enum LpError {
    /// A polytope-level failure (bad restriction index, contradictory pin).
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    /// Objective length differs from the polytope dimension.
    #[error("objective has {got} entries, polytope dimension is {want}")]
    ObjectiveLength { got: usize, want: usize },
    /// A solver invariant failed; unreachable unless the implementation is
    /// wrong (the anti-cycling rule guarantees termination).
    #[error("internal solver error: {0}")]
    Internal(String),
}

/// Which arithmetic the solver runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithmeticMode {
    /// Arbitrary-precision rational arithmetic; certified optimality and a
    /// lexicographic tie-break.
    Exact,
    /// Binary64 arithmetic with small tolerances; for large experiments.
    Float,
}

impl std::str::FromStr for ArithmeticMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(ArithmeticMode::Exact),
            "float" => Ok(ArithmeticMode::Float),
            other => Err(format!("unknown arithmetic mode {other:?}, expected \"exact\" or \"float\"")),
        }
    }
}

/// An objective value in the arithmetic that produced it.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarValue {
    /// Exact rational value.
    Exact(BigRational),
    /// Binary64 value.
    Float(f64),
}

impl ScalarValue {
    /// The value as a float (rounded in exact mode).
    pub fn to_f64(&self) -> f64 {
        match self {
            ScalarValue::Exact(r) => crate::polytope::rational_to_f64(r),
            ScalarValue::Float(v) => *v,
        }
    }

    /// The exact rational value (floats embed exactly).
    pub fn to_exact(&self) -> BigRational {
        match self {
            ScalarValue::Exact(r) => r.clone(),
            ScalarValue::Float(v) => {
                BigRational::from_float(*v).expect("objective values are finite")
            }
        }
    }
}

/// Solver verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    /// An optimal vertex was found.
    Optimal,
    /// The (restricted) feasible region is empty.
    Infeasible,
}

/// A maximization of `γ·x` over the relaxed polytope or one of its faces.
#[derive(Clone, Debug)]
pub struct LpProblem<'a> {
    polytope: &'a RelaxedPolytope,
    restriction: Restriction,
    objective: &'a LlrVector,
    mode: ArithmeticMode,
    want_basis: bool,
}

impl<'a> LpProblem<'a> {
    /// A problem over the full polytope.
    pub fn new(
        polytope: &'a RelaxedPolytope,
        objective: &'a LlrVector,
        mode: ArithmeticMode,
    ) -> Result<Self, LpError> {
        if objective.len() != polytope.dim() {
            return Err(LpError::ObjectiveLength {
                got: objective.len(),
                want: polytope.dim(),
            });
        }
        Ok(LpProblem {
            polytope,
            restriction: Restriction::none(),
            objective,
            mode,
            want_basis: true,
        })
    }

    /// A problem over a face (rows restricted to equality).
    pub fn over_face(
        face: &RestrictedPolytope<'a>,
        objective: &'a LlrVector,
        mode: ArithmeticMode,
    ) -> Result<Self, LpError> {
        let mut p = LpProblem::new(face.base(), objective, mode)?;
        p.restriction = face.restriction().clone();
        Ok(p)
    }

    /// Whether to extract the vertex-certifying basis rows (default: yes).
    /// Skipping saves time in bulk runs that only need the point.
    pub fn with_basis_certificate(mut self, want: bool) -> Self {
        self.want_basis = want;
        self
    }

    /// The arithmetic mode this problem will solve in.
    pub fn mode(&self) -> ArithmeticMode {
        self.mode
    }

    /// Runs the simplex method and packages the outcome.
    pub fn solve(&self) -> Result<LpSolution, LpError> {
        match self.mode {
            ArithmeticMode::Float => {
                let solver: Solver<'_, f64> =
                    Solver::new(self.polytope, &self.restriction, self.objective.as_slice());
                let out = solver.solve(self.want_basis)?;
                Ok(LpSolution::from_outcome(
                    out.feasible,
                    PolytopePoint::Float(out.x),
                    ScalarValue::Float(out.objective),
                    out.pivots,
                    out.basis_rows,
                ))
            }
            ArithmeticMode::Exact => {
                let solver: Solver<'_, BigRational> =
                    Solver::new(self.polytope, &self.restriction, self.objective.as_slice());
                let out = solver.solve(self.want_basis)?;
                Ok(LpSolution::from_outcome(
                    out.feasible,
                    PolytopePoint::Exact(out.x),
                    ScalarValue::Exact(out.objective),
                    out.pivots,
                    out.basis_rows,
                ))
            }
        }
    }
}

/// The outcome of a solve.
#[derive(Clone, Debug)]
pub struct LpSolution {
    /// Whether an optimum exists.
    pub status: LpStatus,
    /// The optimal vertex (absent when infeasible).
    pub point: Option<PolytopePoint>,
    /// `γ ·` point (absent when infeasible).
    pub objective_value: Option<ScalarValue>,
    /// Indices of `n` linearly independent rows active at the point,
    /// certifying it is a vertex; present when requested and feasible.
    pub basis: Option<Vec<usize>>,
    /// Simplex pivots performed (bound flips included).
    pub pivot_count: u64,
}

impl LpSolution {
    fn from_outcome(
        feasible: bool,
        point: PolytopePoint,
        value: ScalarValue,
        pivots: u64,
        basis: Option<Vec<usize>>,
    ) -> Self {
        if feasible {
            LpSolution {
                status: LpStatus::Optimal,
                point: Some(point),
                objective_value: Some(value),
                basis,
                pivot_count: pivots,
            }
        } else {
            LpSolution {
                status: LpStatus::Infeasible,
                point: None,
                objective_value: None,
                basis: None,
                pivot_count: pivots,
            }
        }
    }
}

/// Whether a point has every coordinate at 0 or 1 — exactly in exact mode,
/// within the default integrality tolerance in float mode.
pub fn is_integral(point: &PolytopePoint) -> bool {
    point.is_integral(Tolerances::default().eps_int)
}
