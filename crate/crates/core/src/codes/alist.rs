//! Reading and writing codes in the alist text format.
//!
//! The layout, in order, one record per line:
//!
//! ```text
//! n m
//! max_bit_degree max_check_degree
//! <n bit degrees>
//! <m check degrees>
//! <n lines: per bit, its 1-based check indices, zero-padded to max_bit_degree>
//! <m lines: per check, its 1-based bit indices, zero-padded to max_check_degree>
//! ```
//!
//! Zero entries are padding and ignored on input.  [`save_alist`] always
//! emits the canonical form: sorted index lists, zero padding to the exact
//! maximum degrees, single spaces, and a trailing newline, so two structurally
//! equal codes serialize to byte-identical documents.

use super::{CodeError, ParityCheckCode};

struct LineReader<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> LineReader<'a> {
    fn new(text: &'a str) -> Self {
        LineReader {
            lines: text.lines(),
            line_no: 0,
        }
    }

    /// The next non-empty line parsed as whitespace-separated usize fields.
    fn record(&mut self, what: &str) -> Result<(usize, Vec<usize>), CodeError> {
        loop {
            let Some(line) = self.lines.next() else {
                return Err(CodeError::Parse {
                    line: self.line_no + 1,
                    msg: format!("unexpected end of input, expected {what}"),
                });
            };
            self.line_no += 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut values = Vec::new();
            for tok in line.split_whitespace() {
                let v = tok.parse::<usize>().map_err(|_| CodeError::Parse {
                    line: self.line_no,
                    msg: format!("expected a non-negative integer, found {tok:?} ({what})"),
                })?;
                values.push(v);
            }
            return Ok((self.line_no, values));
        }
    }

    fn expect_end(&mut self) -> Result<(), CodeError> {
        for line in self.lines.by_ref() {
            self.line_no += 1;
            if !line.trim().is_empty() {
                return Err(CodeError::Parse {
                    line: self.line_no,
                    msg: "trailing content after the last check line".into(),
                });
            }
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CodeError {
    CodeError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads one adjacency block: `count` neighbor lines of exactly `width`
/// 1-based entries each (zeros are padding), validated against the declared
/// degree list.
fn read_block(
    r: &mut LineReader<'_>,
    count: usize,
    declared: &[usize],
    width: usize,
    range: usize,
    node: &str,
    other: &str,
) -> Result<Vec<Vec<usize>>, CodeError> {
    let mut block = Vec::with_capacity(count);
    for node_idx in 0..count {
        let (ln, entries) = r.record(&format!("the neighbor line of {node} {node_idx}"))?;
        if entries.len() != width {
            return Err(parse_err(
                ln,
                format!(
                    "expected {width} entries (zero-padded), found {}",
                    entries.len()
                ),
            ));
        }
        let mut neighbors = Vec::new();
        for &e in &entries {
            if e == 0 {
                continue;
            }
            if e > range {
                return Err(parse_err(
                    ln,
                    format!("{other} index {e} out of range 1..={range}"),
                ));
            }
            neighbors.push(e - 1);
        }
        if neighbors.len() != declared[node_idx] {
            return Err(parse_err(
                ln,
                format!(
                    "{node} {node_idx} declares degree {} but lists {} neighbors",
                    declared[node_idx],
                    neighbors.len()
                ),
            ));
        }
        neighbors.sort_unstable();
        if neighbors.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(ln, format!("{node} {node_idx} repeats a neighbor")));
        }
        block.push(neighbors);
    }
    Ok(block)
}

/// Parses an alist document into a code.
///
/// Both adjacency blocks are read and cross-checked against each other and
/// against the declared degree lists; any disagreement is reported with the
/// 1-based line number it was detected on.
pub fn load_alist(text: &str) -> Result<ParityCheckCode, CodeError> {
    let mut r = LineReader::new(text);

    let (ln, header) = r.record("the `n m` header")?;
    let [n, m] = header[..] else {
        return Err(parse_err(ln, "header must contain exactly `n m`"));
    };
    if n == 0 {
        return Err(parse_err(ln, "code length n must be positive"));
    }

    let (ln, maxima) = r.record("the `max_bit_degree max_check_degree` line")?;
    let [max_bit_deg, max_check_deg] = maxima[..] else {
        return Err(parse_err(
            ln,
            "expected exactly `max_bit_degree max_check_degree`",
        ));
    };

    let (ln, bit_degrees) = r.record("the bit degree list")?;
    if bit_degrees.len() != n {
        return Err(parse_err(
            ln,
            format!("expected {n} bit degrees, found {}", bit_degrees.len()),
        ));
    }
    let (ln, check_degrees) = r.record("the check degree list")?;
    if check_degrees.len() != m {
        return Err(parse_err(
            ln,
            format!("expected {m} check degrees, found {}", check_degrees.len()),
        ));
    }
    if let Some(d) = bit_degrees.iter().find(|&&d| d > max_bit_deg) {
        return Err(parse_err(
            ln - 1,
            format!("bit degree {d} exceeds declared maximum {max_bit_deg}"),
        ));
    }
    if let Some(d) = check_degrees.iter().find(|&&d| d > max_check_deg) {
        return Err(parse_err(
            ln,
            format!("check degree {d} exceeds declared maximum {max_check_deg}"),
        ));
    }

    let per_bit = read_block(&mut r, n, &bit_degrees, max_bit_deg, m, "bit", "check")?;
    let first_check_line = r.line_no + 1;
    let per_check = read_block(&mut r, m, &check_degrees, max_check_deg, n, "check", "bit")?;
    r.expect_end()?;

    // The two blocks must describe the same bipartite graph.
    let mut from_bits: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, checks) in per_bit.iter().enumerate() {
        for &a in checks {
            from_bits[a].push(i);
        }
    }
    for (a, listed) in per_check.iter().enumerate() {
        if &from_bits[a] != listed {
            return Err(parse_err(
                first_check_line + a,
                format!("check {a} disagrees with the bit-side adjacency lists"),
            ));
        }
    }

    ParityCheckCode::from_check_neighborhoods(n, per_check)
}

/// Serializes a code as a canonical alist document.
///
/// Fails on a code containing an empty check: the format cannot represent a
/// zero-degree check line unambiguously, and such checks constrain nothing.
pub fn save_alist(code: &ParityCheckCode) -> Result<String, CodeError> {
    if let Some(a) = (0..code.m()).find(|&a| code.check_degree(a) == 0) {
        return Err(CodeError::Invalid(format!(
            "check {a} has no neighbors; empty checks cannot be serialized"
        )));
    }
    let (n, m) = (code.n(), code.m());
    let max_bit_deg = code.max_bit_degree();
    let max_check_deg = code.max_check_degree();

    let mut out = String::new();
    let push_ints = |out: &mut String, vals: &mut dyn Iterator<Item = usize>| {
        let mut first = true;
        for v in vals {
            if !first {
                out.push(' ');
            }
            out.push_str(&v.to_string());
            first = false;
        }
        out.push('\n');
    };

    push_ints(&mut out, &mut [n, m].into_iter());
    push_ints(&mut out, &mut [max_bit_deg, max_check_deg].into_iter());
    push_ints(&mut out, &mut (0..n).map(|i| code.bit_degree(i)));
    push_ints(&mut out, &mut (0..m).map(|a| code.check_degree(a)));
    for i in 0..n {
        let nb = code.bit_neighbors(i);
        push_ints(
            &mut out,
            &mut nb
                .iter()
                .map(|&a| a + 1)
                .chain(std::iter::repeat(0).take(max_bit_deg - nb.len())),
        );
    }
    for a in 0..m {
        let nb = code.check_neighbors(a);
        push_ints(
            &mut out,
            &mut nb
                .iter()
                .map(|&i| i + 1)
                .chain(std::iter::repeat(0).take(max_check_deg - nb.len())),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::tests::hamming_7_4;
    use super::*;
    use crate::codes::random_regular_code;

    #[test]
    fn two_check_example_round_trip() {
        // H = [1 1 0; 0 1 1] written out by hand.
        let code =
            ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let text = save_alist(&code).unwrap();
        assert_eq!(
            text,
            "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n"
        );
        let back = load_alist(&text).unwrap();
        assert_eq!(back, code);
    }

    #[test]
    fn padding_zeros_are_ignored() {
        // Same code, padded lines for the degree-1 bits.
        let text = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n0 2\n1 2\n2 3\n";
        let code = load_alist(text).unwrap();
        assert_eq!(code.bit_neighbors(2), &[1]);
    }

    #[test]
    fn round_trip_is_canonical() {
        for &(n, dv, dc, seed) in &[(20usize, 3usize, 4usize, 11u64), (24, 2, 4, 2)] {
            let code = random_regular_code(n, dv, dc, seed).unwrap();
            let text = save_alist(&code).unwrap();
            let back = load_alist(&text).unwrap();
            assert_eq!(back, code);
            // Canonical form: serializing again is byte-identical.
            assert_eq!(save_alist(&back).unwrap(), text);
        }
    }

    #[test]
    fn hamming_round_trip() {
        let code = hamming_7_4();
        let back = load_alist(&save_alist(&code).unwrap()).unwrap();
        assert_eq!(back, code);
    }

    #[test]
    fn error_reports_carry_line_numbers() {
        // Header with one field.
        let e = load_alist("3\n").unwrap_err();
        assert!(matches!(e, CodeError::Parse { line: 1, .. }), "{e}");

        // Degree list too short (line 3).
        let e = load_alist("3 2\n2 2\n1 2\n2 2\n").unwrap_err();
        assert!(matches!(e, CodeError::Parse { line: 3, .. }), "{e}");

        // Out-of-range check index on the first bit line (line 5).
        let e = load_alist("3 2\n2 2\n1 2 1\n2 2\n9 0\n1 2\n2 0\n1 2\n2 3\n").unwrap_err();
        assert!(matches!(e, CodeError::Parse { line: 5, .. }), "{e}");

        // Check side disagrees with bit side (first check line is 8).
        let e = load_alist("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 3\n2 3\n").unwrap_err();
        assert!(matches!(e, CodeError::Parse { line: 8, .. }), "{e}");

        // Non-integer token.
        let e = load_alist("3 x\n").unwrap_err();
        assert!(matches!(e, CodeError::Parse { line: 1, .. }), "{e}");
    }

    #[test]
    fn empty_check_is_rejected_on_save() {
        let code = ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1], vec![]]).unwrap();
        assert!(matches!(save_alist(&code), Err(CodeError::Invalid(_))));
    }
}
