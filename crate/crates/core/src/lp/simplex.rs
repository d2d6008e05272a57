//! Bounded-variable primal simplex with Bland's rule and a product-form
//! inverse.
//!
//! The linear program is `maximize γ·x` over the polytope's forbidden-set
//! rows, with the box rows carried as variable bounds rather than explicit
//! constraints.  Each forbidden row `r` gets a surplus variable `s_r ≥ 0`
//! (`A x − s = b`); rows restricted to equality fix their surplus at zero.
//! Box-row restrictions pin the corresponding structural variable.  A
//! phase-1 pass with artificial variables establishes feasibility whenever
//! the all-lower-bounds start violates some row; phase 2 optimizes γ.
//!
//! Variable order for Bland's rule: structurals `0..n`, then surpluses,
//! then artificials.  Entering picks the smallest-index improving variable;
//! leaving picks the smallest-index blocking basic variable.  In exact mode
//! every comparison is exact, which makes the rule's termination guarantee
//! unconditional; float mode uses small tolerances and a generous iteration
//! cap as a safety net.
//!
//! All constraint coefficients in this system are ±1, so the inner loops
//! add and subtract instead of multiplying.

use super::scalar::LpScalar;
use super::LpError;
use crate::polytope::{IneqKind, RelaxedPolytope, Restriction};
use num::BigRational;

/// Entering-candidate tolerance (float mode).
const EPS_ENTER: f64 = 1e-9;
/// Slack-to-bound comparisons in the ratio test (float mode).
const EPS_RATIO: f64 = 1e-9;
/// Direction components smaller than this are treated as zero (float mode).
const EPS_PIVOT: f64 = 1e-9;
/// Terminal feasibility verification tolerance (float mode).
const EPS_VERIFY: f64 = 1e-7;

/// Result of one solver run.
pub(super) struct SimplexOutcome<S> {
    pub feasible: bool,
    /// Structural variable values (empty when infeasible).
    pub x: Vec<S>,
    pub objective: S,
    pub pivots: u64,
    /// Row indices into the polytope's inequality list certifying the
    /// returned point is a vertex; present when requested and feasible.
    pub basis_rows: Option<Vec<usize>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VStat {
    Basic,
    AtLower,
    AtUpper,
}

/// One elementary transformation of the product-form inverse: the column
/// that replaces column `p` of the identity.
struct Eta<S> {
    p: u32,
    col: Vec<(u32, S)>,
}

enum Ratio<S> {
    BoundFlip,
    Pivot { row: usize, theta: S },
    Unbounded,
    NoBlock,
}

enum Phase {
    Feasibility,
    Objective,
    /// Minimize one coordinate while staying on the optimal face.
    Refine { coord: usize },
}

pub(super) struct Solver<'a, S: LpScalar> {
    poly: &'a RelaxedPolytope,
    n: usize,
    nrows: usize,
    /// Structural columns: (row, coefficient) pairs, rows ascending.
    cols: Vec<Vec<(u32, i8)>>,
    rhs: Vec<i32>,
    row_eq: Vec<bool>,
    /// Per-variable bounds; `None` upper means unbounded above.
    lower: Vec<S>,
    upper: Vec<Option<S>>,
    fixed: Vec<bool>,
    vstat: Vec<VStat>,
    xval: Vec<S>,
    /// Basic variable of each row.
    basic: Vec<u32>,
    /// Artificial variables: (row, sign) per id offset.
    arts: Vec<(u32, i8)>,
    /// Seed diagonal of the product-form inverse (±1 per row).
    d0: Vec<i8>,
    etas: Vec<Eta<S>>,
    gamma: Vec<S>,
    pivots: u64,
    cap: u64,
}

impl<'a, S: LpScalar> Solver<'a, S> {
    pub(super) fn new(
        poly: &'a RelaxedPolytope,
        restriction: &Restriction,
        objective: &[f64],
    ) -> Self {
        let n = poly.dim();
        let nrows = poly.forbidden_count();
        let mut cols: Vec<Vec<(u32, i8)>> = vec![Vec::new(); n];
        let mut rhs = Vec::with_capacity(nrows);
        for r in 0..nrows {
            let ineq = poly.inequality(r);
            for &(bit, c) in &ineq.coeffs {
                cols[bit].push((r as u32, c));
            }
            rhs.push(ineq.rhs);
        }

        let mut row_eq = vec![false; nrows];
        let mut lower: Vec<S> = (0..n).map(|_| S::zero()).collect();
        let mut upper: Vec<Option<S>> = (0..n).map(|_| Some(S::one())).collect();
        let mut fixed = vec![false; n];
        for idx in restriction.equality_indices() {
            if idx < nrows {
                row_eq[idx] = true;
            } else {
                match poly.inequality(idx).kind {
                    IneqKind::BoxLower { bit } => {
                        upper[bit] = Some(S::zero());
                        fixed[bit] = true;
                    }
                    IneqKind::BoxUpper { bit } => {
                        lower[bit] = S::one();
                        fixed[bit] = true;
                    }
                    IneqKind::ForbiddenSet { .. } => {
                        unreachable!("forbidden rows sit below the box rows")
                    }
                }
            }
        }

        // Surplus variables: [0, ∞) on plain rows, fixed at 0 on equalities.
        for r in 0..nrows {
            lower.push(S::zero());
            if row_eq[r] {
                upper.push(Some(S::zero()));
                fixed.push(true);
            } else {
                upper.push(None);
                fixed.push(false);
            }
        }

        let gamma = objective.iter().map(|&g| S::from_f64(g)).collect();
        let nvars = n + nrows;
        let cap = 2_000 + 60 * (nvars as u64 + nrows as u64);
        Solver {
            poly,
            n,
            nrows,
            cols,
            rhs,
            row_eq,
            lower,
            upper,
            fixed,
            vstat: vec![VStat::AtLower; nvars],
            xval: Vec::new(),
            basic: Vec::new(),
            arts: Vec::new(),
            d0: Vec::new(),
            etas: Vec::new(),
            gamma,
            pivots: 0,
            cap,
        }
    }

    fn is_artificial(&self, var: usize) -> bool {
        var >= self.n + self.nrows
    }

    /// Applies `f(row, sign)` over the constraint column of `var`; every
    /// coefficient in the system is ±1.
    fn for_col(&self, var: usize, mut f: impl FnMut(usize, i8)) {
        if var < self.n {
            for &(r, c) in &self.cols[var] {
                f(r as usize, c);
            }
        } else if var < self.n + self.nrows {
            f(var - self.n, -1);
        } else {
            let (r, g) = self.arts[var - self.n - self.nrows];
            f(r as usize, g);
        }
    }

    /// Installs the starting point (every variable at its lower bound), the
    /// all-surplus/artificial basis, and the seed diagonal.
    fn install_start(&mut self) {
        let n = self.n;
        self.xval = self.lower.clone();
        // Row left-hand sides at the starting structural values.
        let mut lhs: Vec<S> = (0..self.nrows).map(|_| S::zero()).collect();
        for i in 0..n {
            if self.xval[i].is_zero() {
                continue;
            }
            for &(r, c) in &self.cols[i] {
                let v = self.xval[i].clone();
                if c == 1 {
                    lhs[r as usize].add_assign_ref(&v);
                } else {
                    lhs[r as usize].sub_assign_ref(&v);
                }
            }
        }
        self.basic = Vec::with_capacity(self.nrows);
        self.d0 = Vec::with_capacity(self.nrows);
        for r in 0..self.nrows {
            let s0 = lhs[r].sub_ref(&S::from_i32(self.rhs[r]));
            let surplus_ok = !self.row_eq[r] && !s0.lt_neg_eps(0.0);
            if surplus_ok {
                let sv = n + r;
                self.basic.push(sv as u32);
                self.vstat[sv] = VStat::Basic;
                self.xval[sv] = s0;
                self.d0.push(-1);
            } else {
                // Artificial signed so that its starting value is >= 0.
                let g: i8 = if s0.gt_eps(0.0) { -1 } else { 1 };
                let id = self.lower.len();
                self.arts.push((r as u32, g));
                self.lower.push(S::zero());
                self.upper.push(None);
                self.fixed.push(false);
                self.vstat.push(VStat::Basic);
                let value = if g == 1 { s0.neg() } else { s0 };
                self.xval.push(value);
                self.basic.push(id as u32);
                self.d0.push(g);
            }
        }
    }

    /// `y = B⁻¹ · (column of var)`, written into `y` (reset inside).
    fn ftran(&self, var: usize, y: &mut Vec<S>) {
        y.clear();
        y.resize(self.nrows, S::zero());
        self.for_col(var, |r, c| {
            y[r] = if c * self.d0[r] == 1 {
                S::one()
            } else {
                S::one().neg()
            };
        });
        for eta in &self.etas {
            let p = eta.p as usize;
            if y[p].is_zero() {
                continue;
            }
            let t = y[p].clone();
            for (i, v) in &eta.col {
                let i = *i as usize;
                if i == p {
                    y[p] = v.mul_ref(&t);
                } else {
                    let term = v.mul_ref(&t);
                    y[i].add_assign_ref(&term);
                }
            }
        }
    }

    /// `w = objᵀ_B · B⁻¹`, written into `w`.
    fn btran(&self, obj: &[S], w: &mut Vec<S>) {
        w.clear();
        w.extend(self.basic.iter().map(|&b| obj[b as usize].clone()));
        for eta in self.etas.iter().rev() {
            let mut acc = S::zero();
            for (i, v) in &eta.col {
                let wi = &w[*i as usize];
                if !wi.is_zero() && !v.is_zero() {
                    acc.add_assign_ref(&v.mul_ref(wi));
                }
            }
            w[eta.p as usize] = acc;
        }
        for r in 0..self.nrows {
            if self.d0[r] == -1 {
                w[r] = w[r].neg();
            }
        }
    }

    /// Reduced cost of `var`: its objective weight minus `w`·column.
    fn reduced_cost(&self, cj: &S, w: &[S], var: usize) -> S {
        let mut d = cj.clone();
        self.for_col(var, |r, c| {
            if c == 1 {
                d.sub_assign_ref(&w[r]);
            } else {
                d.add_assign_ref(&w[r]);
            }
        });
        d
    }

    /// Bland entering rule: smallest-index nonbasic, non-fixed variable with
    /// an improving reduced cost.  In refinement phases the move must also
    /// keep the primary objective unchanged: zero reduced cost under the
    /// γ multipliers `face`.
    fn price(&self, obj: &[S], w: &[S], face: Option<(&[S], &[S])>) -> Option<usize> {
        let nvars = self.lower.len();
        for j in 0..nvars {
            if self.vstat[j] == VStat::Basic || self.fixed[j] || self.is_artificial(j) {
                continue;
            }
            let d = self.reduced_cost(&obj[j], w, j);
            let improving = match self.vstat[j] {
                VStat::AtLower => d.gt_eps(EPS_ENTER),
                VStat::AtUpper => d.lt_neg_eps(EPS_ENTER),
                VStat::Basic => unreachable!(),
            };
            if !improving {
                continue;
            }
            if let Some((gobj, gw)) = face {
                if !self.reduced_cost(&gobj[j], gw, j).is_zero() {
                    continue;
                }
            }
            return Some(j);
        }
        None
    }

    /// The phase-2 objective over all variables (γ on structurals).
    fn gamma_obj(&self) -> Vec<S> {
        let mut obj: Vec<S> = (0..self.lower.len()).map(|_| S::zero()).collect();
        obj[..self.n].clone_from_slice(&self.gamma);
        obj
    }

    /// Ratio test for entering variable `q` moving in direction `sigma`.
    fn ratio_test(&self, q: usize, sigma: i8, y: &[S]) -> Ratio<S> {
        // The entering variable's own range blocks first by default.
        let mut theta: Option<S> = self.upper[q].as_ref().map(|u| u.sub_ref(&self.lower[q]));
        let mut self_bound = theta.is_some();
        for r in 0..self.nrows {
            if y[r].is_zero() {
                continue;
            }
            // Basic value moves at rate delta = -sigma * y_r.
            let delta = if sigma == 1 { y[r].neg() } else { y[r].clone() };
            let b = self.basic[r] as usize;
            let ratio = if delta.lt_neg_eps(EPS_PIVOT) {
                let mut room = self.xval[b].sub_ref(&self.lower[b]);
                if room.lt_neg_eps(0.0) {
                    room = S::zero();
                }
                room.div_ref(&delta.neg())
            } else if delta.gt_eps(EPS_PIVOT) {
                match &self.upper[b] {
                    Some(u) => {
                        let mut room = u.sub_ref(&self.xval[b]);
                        if room.lt_neg_eps(0.0) {
                            room = S::zero();
                        }
                        room.div_ref(&delta)
                    }
                    None => continue,
                }
            } else {
                continue;
            };
            let tighter = match &theta {
                None => true,
                Some(t) => ratio < *t,
            };
            if tighter {
                theta = Some(ratio);
                self_bound = false;
            }
        }
        let Some(theta) = theta else {
            return Ratio::Unbounded;
        };
        if self_bound {
            return Ratio::BoundFlip;
        }
        // Bland leaving rule: smallest-index basic variable among the rows
        // that block at the minimum ratio.
        let mut best: Option<(usize, usize)> = None;
        for r in 0..self.nrows {
            if y[r].is_zero() {
                continue;
            }
            let delta = if sigma == 1 { y[r].neg() } else { y[r].clone() };
            let b = self.basic[r] as usize;
            let blocked = if delta.lt_neg_eps(EPS_PIVOT) {
                let room = self.xval[b].sub_ref(&self.lower[b]);
                let need = theta.mul_ref(&delta.neg());
                !room.sub_ref(&need).gt_eps(EPS_RATIO)
            } else if delta.gt_eps(EPS_PIVOT) {
                match &self.upper[b] {
                    Some(u) => {
                        let room = u.sub_ref(&self.xval[b]);
                        let need = theta.mul_ref(&delta);
                        !room.sub_ref(&need).gt_eps(EPS_RATIO)
                    }
                    None => false,
                }
            } else {
                false
            };
            if blocked && best.map_or(true, |(bv, _)| b < bv) {
                best = Some((b, r));
            }
        }
        match best {
            Some((_, row)) => Ratio::Pivot { row, theta },
            None => Ratio::NoBlock,
        }
    }

    /// Moves the entering variable by `sigma * theta`, updating all basic
    /// values along `y`.
    fn move_along(&mut self, q: usize, sigma: i8, theta: &S, y: &[S]) {
        if theta.is_zero() {
            return;
        }
        let step = if sigma == 1 { theta.clone() } else { theta.neg() };
        for r in 0..self.nrows {
            if y[r].is_zero() {
                continue;
            }
            let b = self.basic[r] as usize;
            let delta = step.mul_ref(&y[r]);
            self.xval[b].sub_assign_ref(&delta);
        }
        self.xval[q].add_assign_ref(&step);
    }

    fn apply_bound_flip(&mut self, q: usize, y: &[S]) {
        let (sigma, target) = match self.vstat[q] {
            VStat::AtLower => (1, VStat::AtUpper),
            VStat::AtUpper => (-1, VStat::AtLower),
            VStat::Basic => unreachable!(),
        };
        let theta = self
            .upper[q]
            .as_ref()
            .expect("a bound flip needs a finite range")
            .sub_ref(&self.lower[q]);
        self.move_along(q, sigma, &theta, y);
        // Snap to the exact bound to avoid float drift.
        self.xval[q] = match target {
            VStat::AtUpper => self.upper[q].clone().unwrap(),
            _ => self.lower[q].clone(),
        };
        self.vstat[q] = target;
        self.pivots += 1;
    }

    fn apply_pivot(&mut self, q: usize, row: usize, theta: &S, y: &[S]) {
        let sigma: i8 = match self.vstat[q] {
            VStat::AtLower => 1,
            VStat::AtUpper => -1,
            VStat::Basic => unreachable!(),
        };
        self.move_along(q, sigma, theta, y);
        let leaving = self.basic[row] as usize;
        // The leaving variable exits at the bound it ran into.
        let hit_lower = if sigma == 1 {
            y[row].gt_eps(0.0)
        } else {
            y[row].lt_neg_eps(0.0)
        };
        if hit_lower {
            self.xval[leaving] = self.lower[leaving].clone();
            self.vstat[leaving] = VStat::AtLower;
        } else {
            self.xval[leaving] = self
                .upper[leaving]
                .clone()
                .expect("leaving variable hit a finite bound");
            self.vstat[leaving] = VStat::AtUpper;
        }
        // Product-form update: store the elementary column replacing `row`.
        let pivot = y[row].clone();
        let inv = S::one().div_ref(&pivot);
        let mut col = Vec::with_capacity(8);
        for r in 0..self.nrows {
            if r == row || y[r].is_zero() {
                continue;
            }
            col.push((r as u32, y[r].neg().mul_ref(&inv)));
        }
        col.push((row as u32, inv));
        self.etas.push(Eta { p: row as u32, col });
        self.basic[row] = q as u32;
        self.vstat[q] = VStat::Basic;
        self.pivots += 1;
    }

    /// Runs one simplex phase to optimality.  Returns an error only on
    /// internal failures (iteration cap, unbounded direction).
    fn run_phase(&mut self, phase: &Phase) -> Result<(), LpError> {
        let obj: Vec<S> = match phase {
            Phase::Feasibility => {
                let mut o: Vec<S> = (0..self.lower.len()).map(|_| S::zero()).collect();
                for k in 0..self.arts.len() {
                    o[self.n + self.nrows + k] = S::one().neg();
                }
                o
            }
            Phase::Objective => self.gamma_obj(),
            Phase::Refine { coord } => {
                let mut o: Vec<S> = (0..self.lower.len()).map(|_| S::zero()).collect();
                o[*coord] = S::one().neg();
                o
            }
        };
        let gamma_obj = match phase {
            Phase::Refine { .. } => Some(self.gamma_obj()),
            _ => None,
        };
        let mut w: Vec<S> = Vec::new();
        let mut wg: Vec<S> = Vec::new();
        let mut y: Vec<S> = Vec::new();
        loop {
            if self.pivots >= self.cap {
                return Err(LpError::Internal(format!(
                    "pivot cap {} reached; the anti-cycling rule should prevent this",
                    self.cap
                )));
            }
            self.btran(&obj, &mut w);
            let face = if let Some(g) = &gamma_obj {
                self.btran(g, &mut wg);
                Some((g.as_slice(), wg.as_slice()))
            } else {
                None
            };
            let Some(q) = self.price(&obj, &w, face) else {
                return Ok(());
            };
            self.ftran(q, &mut y);
            let sigma: i8 = match self.vstat[q] {
                VStat::AtLower => 1,
                VStat::AtUpper => -1,
                VStat::Basic => unreachable!(),
            };
            match self.ratio_test(q, sigma, &y) {
                Ratio::BoundFlip => self.apply_bound_flip(q, &y),
                Ratio::Pivot { row, theta } => self.apply_pivot(q, row, &theta, &y),
                Ratio::Unbounded => {
                    return Err(LpError::Internal(
                        "unbounded improving direction in a bounded polytope".into(),
                    ))
                }
                Ratio::NoBlock => {
                    return Err(LpError::Internal(
                        "ratio test found a minimum but no blocking row".into(),
                    ))
                }
            }
        }
    }

    /// Total infeasibility left after phase 1.
    fn artificial_residual(&self) -> S {
        let mut acc = S::zero();
        for k in 0..self.arts.len() {
            acc.add_assign_ref(&self.xval[self.n + self.nrows + k]);
        }
        acc
    }

    /// True when some nonbasic, non-fixed variable has an exactly zero
    /// reduced cost under γ — the signal that the optimum may be non-unique.
    fn has_degenerate_tie(&self) -> bool {
        let obj = self.gamma_obj();
        let mut w = Vec::new();
        self.btran(&obj, &mut w);
        let nvars = self.lower.len();
        for j in 0..nvars {
            if self.vstat[j] == VStat::Basic || self.fixed[j] || self.is_artificial(j) {
                continue;
            }
            if self.reduced_cost(&obj[j], &w, j).is_zero() {
                return true;
            }
        }
        false
    }

    fn objective_value(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            if !self.gamma[i].is_zero() && !self.xval[i].is_zero() {
                acc.add_assign_ref(&self.gamma[i].mul_ref(&self.xval[i]));
            }
        }
        acc
    }

    /// Float-mode terminal check: the produced point must satisfy every
    /// polytope row and restriction within verification tolerance.
    fn verify_float(&self) -> Result<(), LpError> {
        let x: Vec<f64> = self.xval[..self.n].iter().map(|v| v.to_f64()).collect();
        for r in 0..self.nrows {
            let slack = self.poly.inequality(r).slack_f64(&x);
            if slack < -EPS_VERIFY || (self.row_eq[r] && slack.abs() > EPS_VERIFY) {
                return Err(LpError::Internal(format!(
                    "terminal point violates row {r} by {slack:.3e}"
                )));
            }
        }
        for (i, v) in x.iter().enumerate() {
            let lo = self.lower[i].to_f64();
            let hi = self.upper[i].as_ref().map_or(1.0, |u| u.to_f64());
            if *v < lo - EPS_VERIFY || *v > hi + EPS_VERIFY {
                return Err(LpError::Internal(format!(
                    "terminal coordinate {i} = {v} outside [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }

    /// Vertex certificate from the terminal basis: box rows of nonbasic
    /// structurals plus every row whose surplus is nonbasic.  When leftover
    /// basic artificials make the collection overcomplete, or when the
    /// refinement fixed coordinates at fractional values, fall back to a
    /// greedy independent subset of the rows active at the point.
    fn basis_rows(&self, refined: bool) -> Vec<usize> {
        let basic_arts = (0..self.arts.len())
            .filter(|k| self.vstat[self.n + self.nrows + k] == VStat::Basic)
            .count();
        if !refined && basic_arts == 0 {
            let mut rows = Vec::with_capacity(self.n);
            for i in 0..self.n {
                if self.vstat[i] == VStat::Basic {
                    continue;
                }
                if self.xval[i].is_zero() {
                    rows.push(self.poly.box_lower_index(i));
                } else {
                    rows.push(self.poly.box_upper_index(i));
                }
            }
            for r in 0..self.nrows {
                if self.vstat[self.n + r] != VStat::Basic {
                    rows.push(r);
                }
            }
            rows.sort_unstable();
            debug_assert_eq!(rows.len(), self.n);
            return rows;
        }
        // Fallback: greedy rank selection over the rows active at the point.
        let mut candidates = Vec::new();
        if S::EXACT {
            let x: Vec<BigRational> = self.xval[..self.n].iter().map(|v| v.to_rational()).collect();
            for (idx, ineq) in self.poly.inequalities().iter().enumerate() {
                if num::Zero::is_zero(&ineq.slack_exact(&x)) {
                    candidates.push(idx);
                }
            }
        } else {
            let x: Vec<f64> = self.xval[..self.n].iter().map(|v| v.to_f64()).collect();
            for (idx, ineq) in self.poly.inequalities().iter().enumerate() {
                if ineq.slack_f64(&x).abs() <= 1e-8 {
                    candidates.push(idx);
                }
            }
        }
        select_independent_rows(self.poly, &candidates, self.n)
    }

    /// Full solve: start, feasibility phase, objective phase, optional
    /// exact-mode lexicographic refinement.
    pub(super) fn solve(mut self, want_basis: bool) -> Result<SimplexOutcome<S>, LpError> {
        self.install_start();
        if !self.arts.is_empty() {
            self.run_phase(&Phase::Feasibility)?;
            if self.artificial_residual().gt_eps(EPS_VERIFY) {
                return Ok(SimplexOutcome {
                    feasible: false,
                    x: Vec::new(),
                    objective: S::zero(),
                    pivots: self.pivots,
                    basis_rows: None,
                });
            }
            // Artificials may stay basic at zero on redundant rows; freeze
            // them so they never move again.
            for k in 0..self.arts.len() {
                let id = self.n + self.nrows + k;
                self.upper[id] = Some(S::zero());
                self.fixed[id] = true;
                if self.vstat[id] != VStat::Basic {
                    self.xval[id] = S::zero();
                }
            }
        }
        self.run_phase(&Phase::Objective)?;

        // With a possibly non-unique optimum, walk the optimal face to the
        // lexicographically smallest vertex, one coordinate at a time.
        let mut refined = false;
        if S::EXACT && self.has_degenerate_tie() {
            refined = true;
            for i in 0..self.n {
                if self.fixed[i] {
                    continue;
                }
                if self.xval[i] > self.lower[i] {
                    self.run_phase(&Phase::Refine { coord: i })?;
                }
                let v = self.xval[i].clone();
                self.lower[i] = v.clone();
                self.upper[i] = Some(v);
                self.fixed[i] = true;
            }
        }

        if !S::EXACT {
            self.verify_float()?;
        }
        let basis_rows = if want_basis {
            Some(self.basis_rows(refined))
        } else {
            None
        };
        let mut x = self.xval[..self.n].to_vec();
        if !S::EXACT {
            for v in &mut x {
                let f = v.to_f64();
                if f < 0.0 {
                    *v = S::zero();
                } else if f > 1.0 {
                    *v = S::one();
                }
            }
        }
        Ok(SimplexOutcome {
            feasible: true,
            objective: self.objective_value(),
            x,
            pivots: self.pivots,
            basis_rows,
        })
    }
}

/// Greedily selects up to `need` linearly independent rows (by exact
/// rational elimination over their coefficient vectors), scanning the
/// candidates in ascending index order.
pub(super) fn select_independent_rows(
    poly: &RelaxedPolytope,
    candidates: &[usize],
    need: usize,
) -> Vec<usize> {
    let n = poly.dim();
    let mut pivot_rows: Vec<(usize, Vec<BigRational>)> = Vec::with_capacity(need);
    let mut kept = Vec::with_capacity(need);
    for &idx in candidates {
        if kept.len() == need {
            break;
        }
        let mut row: Vec<BigRational> = vec![num::Zero::zero(); n];
        for &(bit, c) in &poly.inequality(idx).coeffs {
            row[bit] = BigRational::from_integer((c as i32).into());
        }
        for (pc, prow) in &pivot_rows {
            if num::Zero::is_zero(&row[*pc]) {
                continue;
            }
            let f = row[*pc].clone();
            for j in 0..n {
                if !num::Zero::is_zero(&prow[j]) {
                    let t = &f * &prow[j];
                    row[j] -= t;
                }
            }
        }
        if let Some(pc) = row.iter().position(|v| !num::Zero::is_zero(v)) {
            let inv = row[pc].clone();
            for v in &mut row {
                if !num::Zero::is_zero(v) {
                    *v = &*v / &inv;
                }
            }
            pivot_rows.push((pc, row));
            kept.push(idx);
        }
    }
    kept
}
