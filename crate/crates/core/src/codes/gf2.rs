//! GF(2) linear algebra on parity-check matrices.
//!
//! Rows are packed into `u64` blocks; elimination is plain Gaussian
//! elimination over GF(2) with deterministic pivot choice (lowest column,
//! lowest row), so basis output order is reproducible.

use super::{BinaryWord, CodeError, ParityCheckCode};

/// Default cap on the code dimension accepted by [`enumerate_codewords`].
pub const DEFAULT_DIMENSION_BUDGET: usize = 20;

fn packed_rows(code: &ParityCheckCode) -> Vec<Vec<u64>> {
    let width = code.n().div_ceil(64);
    (0..code.m())
        .map(|a| {
            let mut row = vec![0u64; width];
            for &i in code.check_neighbors(a) {
                row[i / 64] |= 1u64 << (i % 64);
            }
            row
        })
        .collect()
}

fn get_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn xor_row(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Reduced row echelon form; returns (rows, pivot columns).  Zero rows are
/// dropped.
fn rref(mut rows: Vec<Vec<u64>>, n: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..n {
        let Some(found) = (next_row..rows.len()).find(|&r| get_bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(next_row, found);
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && get_bit(row, col) {
                xor_row(row, &pivot_row);
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    (rows, pivots)
}

/// Rank of the parity-check matrix over GF(2).
pub fn gf2_rank(code: &ParityCheckCode) -> usize {
    rref(packed_rows(code), code.n()).1.len()
}

/// A deterministic basis of the code (the nullspace of H over GF(2)).
///
/// The basis has `n − rank(H)` words, one per non-pivot column of the
/// reduced echelon form, emitted in increasing free-column order.
pub fn gf2_nullspace_basis(code: &ParityCheckCode) -> Vec<BinaryWord> {
    let n = code.n();
    let (rows, pivots) = rref(packed_rows(code), n);
    let is_pivot = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut bits = vec![0u8; n];
        bits[free] = 1;
        // Pivot variable p solves row r: x_p = Σ_{free f} R[r][f]·x_f.
        for (r, &p) in pivots.iter().enumerate() {
            if get_bit(&rows[r], free) {
                bits[p] = 1;
            }
        }
        basis.push(BinaryWord::new(bits));
    }
    basis
}

/// Every codeword, in lexicographic order.
///
/// Refuses codes of dimension above `max_dimension` (the word count is
/// `2^k`); use [`DEFAULT_DIMENSION_BUDGET`]-sized codes for exhaustive work.
pub fn enumerate_codewords(
    code: &ParityCheckCode,
    max_dimension: usize,
) -> Result<Vec<BinaryWord>, CodeError> {
    let basis = gf2_nullspace_basis(code);
    let k = basis.len();
    if k > max_dimension {
        return Err(CodeError::BudgetExceeded(format!(
            "code dimension {k} exceeds the enumeration cap {max_dimension}"
        )));
    }
    let mut words = Vec::with_capacity(1usize << k);
    // Gray-code order: successive masks differ in one basis element.
    let mut current = BinaryWord::zeros(code.n());
    words.push(current.clone());
    for step in 1u64..(1u64 << k) {
        let flip = step.trailing_zeros() as usize;
        current.xor_assign(&basis[flip]);
        words.push(current.clone());
    }
    words.sort_unstable();
    Ok(words)
}
