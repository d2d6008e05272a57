//! Exact vertex enumeration for small polytopes.
//!
//! A vertex is a feasible point with `n` linearly independent tight rows, so
//! every vertex is the unique solution of some nonsingular `n×n` subsystem.
//! The engine walks all candidate row subsets depth-first in increasing
//! index order, maintaining a fraction-free (Bareiss) echelon form so that
//! dependent prefixes are pruned immediately and each accepted subset is
//! solved exactly.
//!
//! All arithmetic is 64-bit integer.  Row coefficients are ±1 and right-hand
//! sides are small, so for dimension at most [`EXACT_DIM_LIMIT`] every
//! intermediate value is a minor bounded via Hadamard's inequality by a few
//! times `10^8`, far inside `i64`.  Solutions come out as integer vectors
//! over a common denominator (the basis determinant) and are deduplicated and
//! sorted, so the output is a canonical list independent of scan order.

use super::{LinearInequality, PolytopeError, PolytopePoint, RelaxedPolytope};
use num::BigRational;
use std::collections::HashSet;

/// Hard width limit of the `i64` fraction-free engine.
pub(crate) const EXACT_DIM_LIMIT: usize = 12;

/// Resource limits for [`RelaxedPolytope::enumerate_vertices`].
#[derive(Clone, Copy, Debug)]
pub struct VertexEnumBudget {
    /// Largest accepted ambient dimension (capped at [`EXACT_DIM_LIMIT`]).
    pub max_dim: usize,
    /// Largest accepted total inequality count.
    pub max_inequalities: usize,
    /// Cap on row-reduction steps across the whole scan.
    pub max_nodes: u64,
}

impl Default for VertexEnumBudget {
    fn default() -> Self {
        VertexEnumBudget {
            max_dim: 12,
            max_inequalities: 96,
            max_nodes: 2_000_000_000,
        }
    }
}

/// Incremental fraction-free echelon form over `i64`.
///
/// Rows have `n` coefficient columns plus a trailing right-hand-side column;
/// pivots are only ever chosen among coefficient columns.
struct Echelon {
    width: usize,
    pivot_rows: Vec<Vec<i64>>,
    pivot_cols: Vec<usize>,
}

impl Echelon {
    fn new(n: usize) -> Self {
        Echelon {
            width: n + 1,
            pivot_rows: Vec::with_capacity(n),
            pivot_cols: Vec::with_capacity(n),
        }
    }

    fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Bareiss determinant of the current pivot stack (sign included).
    fn det(&self) -> i64 {
        self.pivot_rows
            .last()
            .map(|r| r[*self.pivot_cols.last().unwrap()])
            .unwrap_or(1)
    }

    /// Reduces `row` against the pivot stack, fraction-free.  Returns the
    /// first nonzero coefficient column afterwards, or `None` when every
    /// coefficient column vanished (the row is dependent; a leftover
    /// right-hand-side residue means it is inconsistent with tightness).
    fn reduce(&self, row: &mut [i64]) -> Option<usize> {
        let mut prev_pivot = 1i64;
        for (k, prow) in self.pivot_rows.iter().enumerate() {
            let pcol = self.pivot_cols[k];
            let p = prow[pcol];
            let f = row[pcol];
            for j in 0..self.width {
                let v = p * row[j] - f * prow[j];
                debug_assert_eq!(v % prev_pivot, 0, "Bareiss division must be exact");
                row[j] = v / prev_pivot;
            }
            prev_pivot = p;
        }
        (0..self.width - 1).find(|&j| row[j] != 0)
    }

    fn push(&mut self, col: usize, row: Vec<i64>) {
        self.pivot_cols.push(col);
        self.pivot_rows.push(row);
    }

    fn pop(&mut self) {
        self.pivot_cols.pop();
        self.pivot_rows.pop();
    }

    /// Solves the rank-`n` pivot system exactly: returns `(coords, den)`
    /// with `x_j = coords[j] / den` and `den > 0`.
    fn solve(&self) -> (Vec<i64>, i64) {
        let n = self.width - 1;
        debug_assert_eq!(self.rank(), n);
        let mut den = self.det();
        let mut coords = vec![0i64; n];
        for k in (0..n).rev() {
            let row = &self.pivot_rows[k];
            let col = self.pivot_cols[k];
            let mut num = row[n] * den;
            for &cj in self.pivot_cols.iter().skip(k + 1) {
                num -= row[cj] * coords[cj];
            }
            debug_assert_eq!(num % row[col], 0, "Cramer back-substitution is integral");
            coords[col] = num / row[col];
        }
        if den < 0 {
            den = -den;
            for c in &mut coords {
                *c = -*c;
            }
        }
        (coords, den)
    }
}

/// Dense integer form of a polytope row: `n` coefficients then the rhs.
fn dense_row(ineq: &LinearInequality, n: usize) -> Vec<i64> {
    let mut row = vec![0i64; n + 1];
    for &(i, c) in &ineq.coeffs {
        row[i] = c as i64;
    }
    row[n] = ineq.rhs as i64;
    row
}

/// Exact rank of the coefficient part of the given rows (rhs ignored).
/// Only valid for `n ≤ EXACT_DIM_LIMIT`.
pub(crate) fn integer_coefficient_rank(rows: &[&LinearInequality], n: usize) -> usize {
    let mut ech = Echelon::new(n);
    for ineq in rows {
        let mut row = dense_row(ineq, n);
        row[n] = 0;
        if let Some(col) = ech.reduce(&mut row) {
            ech.push(col, row);
            if ech.rank() == n {
                break;
            }
        }
    }
    ech.rank()
}

struct Scan {
    rows: Vec<Vec<i64>>,
    is_equality: Vec<bool>,
    n: usize,
    max_nodes: u64,
    nodes: u64,
    ech: Echelon,
    seen: HashSet<Vec<(i64, i64)>>,
    found: Vec<Vec<(i64, i64)>>,
}

impl Scan {
    fn spend_node(&mut self) -> Result<(), PolytopeError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(PolytopeError::BudgetExceeded(format!(
                "row-reduction limit of {} steps reached",
                self.max_nodes
            )));
        }
        Ok(())
    }

    /// Checks the candidate solution against every row and records it when
    /// feasible.  Equality rows must hold exactly.
    fn try_leaf(&mut self) {
        let (coords, den) = self.ech.solve();
        for (row, &eq) in self.rows.iter().zip(&self.is_equality) {
            let mut lhs = 0i64;
            for (j, &c) in row[..self.n].iter().enumerate() {
                if c != 0 {
                    lhs += c * coords[j];
                }
            }
            let rhs = row[self.n] * den;
            if lhs < rhs || (eq && lhs != rhs) {
                return;
            }
        }
        let key: Vec<(i64, i64)> = coords
            .iter()
            .map(|&c| {
                let g = gcd(c.unsigned_abs(), den.unsigned_abs()) as i64;
                (c / g, den / g)
            })
            .collect();
        if self.seen.insert(key.clone()) {
            self.found.push(key);
        }
    }

    fn dfs(&mut self, from: usize) -> Result<(), PolytopeError> {
        let need = self.n - self.ech.rank();
        for idx in from..self.rows.len() {
            if self.rows.len() - idx < need {
                break;
            }
            self.spend_node()?;
            let mut row = self.rows[idx].clone();
            if let Some(col) = self.ech.reduce(&mut row) {
                self.ech.push(col, row);
                if self.ech.rank() == self.n {
                    self.try_leaf();
                } else {
                    self.dfs(idx + 1)?;
                }
                self.ech.pop();
            }
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Enumerates all vertices of `poly` (restricted to the rows in
/// `equalities` holding tightly), exactly, sorted by coordinates.
pub(crate) fn enumerate(
    poly: &RelaxedPolytope,
    equalities: &[usize],
    budget: &VertexEnumBudget,
) -> Result<Vec<PolytopePoint>, PolytopeError> {
    let n = poly.dim();
    let max_dim = budget.max_dim.min(EXACT_DIM_LIMIT);
    if n > max_dim {
        return Err(PolytopeError::BudgetExceeded(format!(
            "dimension {n} exceeds the enumeration limit {max_dim}"
        )));
    }
    let count = poly.num_inequalities();
    if count > budget.max_inequalities {
        return Err(PolytopeError::BudgetExceeded(format!(
            "{count} inequalities exceed the enumeration limit {}",
            budget.max_inequalities
        )));
    }
    for &idx in equalities {
        if idx >= count {
            return Err(PolytopeError::IndexOutOfRange { index: idx, count });
        }
    }

    let rows: Vec<Vec<i64>> = poly
        .inequalities()
        .iter()
        .map(|ineq| dense_row(ineq, n))
        .collect();
    let mut is_equality = vec![false; count];
    for &idx in equalities {
        is_equality[idx] = true;
    }

    let mut scan = Scan {
        rows,
        is_equality,
        n,
        max_nodes: budget.max_nodes,
        nodes: 0,
        ech: Echelon::new(n),
        seen: HashSet::new(),
        found: Vec::new(),
    };

    // Seed the echelon with the equality rows: they are tight at every
    // vertex of the face.  An equality reducing to `0 = c ≠ 0` makes the
    // face empty.
    for &idx in equalities {
        scan.spend_node()?;
        let mut row = scan.rows[idx].clone();
        match scan.ech.reduce(&mut row) {
            Some(col) => scan.ech.push(col, row),
            None => {
                if row[n] != 0 {
                    return Ok(Vec::new());
                }
            }
        }
    }

    if scan.ech.rank() == n {
        scan.try_leaf();
    } else {
        scan.dfs(0)?;
    }

    let mut found = std::mem::take(&mut scan.found);
    // Exact lexicographic coordinate order; all values are tiny, so cross
    // multiplication in i128 is safe.
    found.sort_unstable_by(|a, b| {
        for (&(an, ad), &(bn, bd)) in a.iter().zip(b) {
            let left = an as i128 * bd as i128;
            let right = bn as i128 * ad as i128;
            match left.cmp(&right) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
    Ok(found
        .into_iter()
        .map(|coords| {
            PolytopePoint::Exact(
                coords
                    .into_iter()
                    .map(|(num, den)| BigRational::new(num.into(), den.into()))
                    .collect(),
            )
        })
        .collect())
}
