use super::*;
use crate::codes::{enumerate_codewords, random_regular_code, ParityCheckCode};

fn word(s: &str) -> BinaryWord {
    BinaryWord::new(s.bytes().map(|b| b - b'0').collect())
}

/// Exact rational point from (numerator, denominator) pairs.
fn point(coords: &[(i64, i64)]) -> PolytopePoint {
    PolytopePoint::Exact(
        coords
            .iter()
            .map(|&(n, d)| BigRational::new(n.into(), d.into()))
            .collect(),
    )
}

fn single_check_3() -> ParityCheckCode {
    ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1, 2]]).unwrap()
}

fn hamming_7_4() -> ParityCheckCode {
    ParityCheckCode::from_check_neighborhoods(
        7,
        vec![vec![0, 2, 4, 6], vec![1, 2, 5, 6], vec![3, 4, 5, 6]],
    )
    .unwrap()
}

/// The cycle code of K4: bits are edges 01,02,03,12,13,23; each graph vertex
/// is a parity check over its incident edges.  The smallest code whose
/// relaxed polytope has fractional vertices (half-integral, on triangles).
fn k4_cycle_code() -> ParityCheckCode {
    ParityCheckCode::from_check_neighborhoods(
        6,
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]],
    )
    .unwrap()
}

#[test]
fn forbidden_sequences_degree_3() {
    assert_eq!(
        forbidden_sequences(3).unwrap(),
        vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![1, 1, 1],
        ]
    );
}

#[test]
fn forbidden_sequences_degree_4_in_lex_order() {
    let seqs = forbidden_sequences(4).unwrap();
    assert_eq!(seqs.len(), 8);
    // Odd-weight words of length 4, lexicographically.
    assert_eq!(seqs[0], vec![0, 0, 0, 1]);
    assert_eq!(seqs[1], vec![0, 0, 1, 0]);
    assert_eq!(seqs[3], vec![0, 1, 1, 1]);
    assert_eq!(seqs[7], vec![1, 1, 1, 0]);
    assert!(seqs.windows(2).all(|w| w[0] < w[1]));
    assert!(seqs
        .iter()
        .all(|s| s.iter().filter(|&&z| z == 1).count() % 2 == 1));
}

#[test]
fn forbidden_sequences_rejects_bad_degrees() {
    assert!(forbidden_sequences(0).is_err());
    assert!(forbidden_sequences(DEGREE_BUDGET + 1).is_err());
    assert_eq!(forbidden_sequences(1).unwrap(), vec![vec![1]]);
}

#[test]
fn row_counts_and_indexing() {
    let poly = RelaxedPolytope::build(&hamming_7_4()).unwrap();
    // 3 checks of degree 4 → 3·2^3 = 24 forbidden rows, plus 14 box rows.
    assert_eq!(poly.forbidden_count(), 24);
    assert_eq!(poly.num_inequalities(), 38);
    assert_eq!(poly.check_rows(1), 8..16);
    assert_eq!(poly.box_lower_index(0), 24);
    assert_eq!(poly.box_upper_index(6), 24 + 7 + 6);

    // forbidden_index inverts the construction order.
    for a in 0..3 {
        for (offset, seq) in forbidden_sequences(4).unwrap().iter().enumerate() {
            let idx = poly.forbidden_index(a, seq).unwrap();
            assert_eq!(idx, poly.check_rows(a).start + offset);
            match &poly.inequality(idx).kind {
                IneqKind::ForbiddenSet { check, word } => {
                    assert_eq!(*check, a);
                    assert_eq!(word, seq);
                }
                other => panic!("expected forbidden row, got {other:?}"),
            }
        }
    }
    // Even-weight or wrong-length patterns have no row.
    assert_eq!(poly.forbidden_index(0, &[1, 1, 0, 0]), None);
    assert_eq!(poly.forbidden_index(0, &[1, 0, 0]), None);
}

#[test]
fn row_coefficients_and_rhs() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    // Pattern 001 → +x0 +x1 −x2 ≥ 0.
    let r = poly.inequality(0);
    assert_eq!(r.coeffs, vec![(0, 1), (1, 1), (2, -1)]);
    assert_eq!(r.rhs, 0);
    // Pattern 111 → −x0 −x1 −x2 ≥ −2.
    let r = poly.inequality(3);
    assert_eq!(r.coeffs, vec![(0, -1), (1, -1), (2, -1)]);
    assert_eq!(r.rhs, -2);
    // Box rows.
    let r = poly.inequality(poly.box_upper_index(1));
    assert_eq!(r.coeffs, vec![(1, -1)]);
    assert_eq!(r.rhs, -1);
}

#[test]
fn regular_row_count_formula() {
    // On a (dv, dc)-regular code the total is m·2^(dc−1) + 2n.
    let code = crate::codes::tanner_code();
    let poly = RelaxedPolytope::build(&code).unwrap();
    assert_eq!(poly.num_inequalities(), 93 * 16 + 2 * 155);
    assert_eq!(poly.num_inequalities(), 1798);
}

#[test]
fn degree_zero_check_is_rejected() {
    let code = ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1], vec![]]).unwrap();
    assert!(matches!(
        RelaxedPolytope::build(&code),
        Err(PolytopeError::DegreeOutOfRange { check: 1, degree: 0, .. })
    ));
}

#[test]
fn codeword_active_sets_match_hand_computation() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();

    // At 000 the active forbidden rows are the three weight-1 patterns
    // (distance 1 from the local codeword), plus the three lower box rows.
    let a = poly.active_set(&PolytopePoint::from_word(&word("000"))).unwrap();
    assert_eq!(a.indices(), &[0, 1, 2, 4, 5, 6]);

    // At 110: patterns 010, 100, 111 are at distance 1; bits 0,1 sit on the
    // upper box rows, bit 2 on its lower row.
    let a = poly.active_set(&PolytopePoint::from_word(&word("110"))).unwrap();
    assert_eq!(a.indices(), &[1, 2, 3, 6, 7, 8]);

    // Size m·dc + n in both cases.
    assert_eq!(a.len(), 1 * 3 + 3);
    assert!(a.contains(3));
    assert!(!a.contains(0));
}

#[test]
fn codeword_active_set_size_on_regular_codes() {
    // |A(codeword)| = m·dc + n for every codeword of a check-regular code.
    let code = random_regular_code(24, 3, 4, 9).unwrap();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let expected = code.m() * 4 + code.n();
    for cw in enumerate_codewords(&code, 20).unwrap().iter().take(8) {
        let a = poly.active_set(&PolytopePoint::from_word(cw)).unwrap();
        assert_eq!(a.len(), expected);
    }
}

#[test]
fn infeasible_points_raise_the_violated_index() {
    // A checkless code isolates the box rows.
    let code = ParityCheckCode::from_check_neighborhoods(3, vec![]).unwrap();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let e = poly.active_set(&point(&[(-1, 2), (0, 1), (0, 1)])).unwrap_err();
    assert!(matches!(e, PolytopeError::Infeasible { index: 0 }));
    let e = poly
        .active_set(&PolytopePoint::Float(vec![0.3, 1.4, 0.0]))
        .unwrap_err();
    assert!(matches!(e, PolytopeError::Infeasible { index: 4 }));

    // Within tolerance is not a violation.
    let a = poly
        .active_set(&PolytopePoint::Float(vec![-1e-9, 0.5, 1.0 + 1e-9]))
        .unwrap();
    assert_eq!(a.indices(), &[0, 5]);
}

#[test]
fn length_mismatch_is_rejected() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    assert!(matches!(
        poly.active_set(&PolytopePoint::Float(vec![0.0; 4])),
        Err(PolytopeError::LengthMismatch { got: 4, want: 3 })
    ));
}

#[test]
fn box_only_polytope_has_all_binary_vertices() {
    let code = ParityCheckCode::from_check_neighborhoods(3, vec![]).unwrap();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    assert_eq!(verts.len(), 8);
    // Lexicographic coordinate order.
    let as_words: Vec<BinaryWord> = verts.iter().map(|v| v.rounded_word(0.0).unwrap()).collect();
    let expected: Vec<BinaryWord> =
        ["000", "001", "010", "011", "100", "101", "110", "111"]
            .iter()
            .map(|s| word(s))
            .collect();
    assert_eq!(as_words, expected);
}

#[test]
fn single_check_vertices_are_exactly_the_local_codewords() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    let words: Vec<BinaryWord> = verts
        .iter()
        .map(|v| v.rounded_word(0.0).expect("all vertices integral"))
        .collect();
    assert_eq!(
        words,
        vec![word("000"), word("011"), word("101"), word("110")]
    );
}

#[test]
fn degree_2_checks_force_equal_coordinates() {
    // Checks {0,1} and {1,2} make P the segment x0 = x1 = x2 in [0,1].
    let code =
        ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    let words: Vec<BinaryWord> = verts
        .iter()
        .map(|v| v.rounded_word(0.0).unwrap())
        .collect();
    assert_eq!(words, vec![word("000"), word("111")]);
}

/// Independent oracle for the K4 cycle code: its relaxed polytope is
/// half-integral, so scanning the grid {0, 1/2, 1}^6 and keeping the points
/// that pass feasibility and the vertex rank test recovers every vertex.
fn k4_vertices_by_grid_scan(poly: &RelaxedPolytope) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for v in 0..3usize.pow(6) {
        let mut coords = Vec::with_capacity(6);
        let mut rest = v;
        for _ in 0..6 {
            coords.push(BigRational::new((rest % 3).into(), 2.into()));
            rest /= 3;
        }
        let p = PolytopePoint::Exact(coords);
        if poly.check_feasible(&p, &Tolerances::default()).is_ok()
            && poly.is_vertex(&p).unwrap()
        {
            out.push(match &p {
                PolytopePoint::Exact(c) => c.iter().map(rational_string).collect(),
                _ => unreachable!(),
            });
        }
    }
    out.sort();
    out
}

#[test]
fn k4_cycle_code_polytope_is_integral() {
    // Cycle-code polytopes are half-integral, so the grid scan over
    // {0, 1/2, 1}^6 is a complete independent oracle here.  For K4 every
    // triangle is itself a codeword, so the would-be half-triangle points
    // are edge midpoints, not vertices: the polytope is integral.
    let code = k4_cycle_code();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();

    let mut got: Vec<Vec<String>> = verts
        .iter()
        .map(|p| match p {
            PolytopePoint::Exact(c) => c.iter().map(rational_string).collect(),
            _ => unreachable!(),
        })
        .collect();
    got.sort();
    assert_eq!(got, k4_vertices_by_grid_scan(&poly));

    let mut integral: Vec<BinaryWord> = verts
        .iter()
        .map(|v| v.rounded_word(0.0).expect("K4 vertices are integral"))
        .collect();
    integral.sort_unstable();
    assert_eq!(integral, enumerate_codewords(&code, 20).unwrap());
    assert_eq!(integral.len(), 8);

    // The half-triangle point is feasible but sits mid-edge between the
    // all-zeros codeword and the triangle codeword.
    let half_triangle = point(&[(1, 2), (1, 2), (0, 1), (1, 2), (0, 1), (0, 1)]);
    poly.check_feasible(&half_triangle, &Tolerances::default())
        .unwrap();
    assert!(!poly.is_vertex(&half_triangle).unwrap());
}

/// Two overlapping degree-3 checks {0,1,2} and {1,2,3}: the smallest
/// hand-checkable code whose polytope has fractional vertices.
fn overlap_code() -> ParityCheckCode {
    ParityCheckCode::from_check_neighborhoods(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap()
}

#[test]
fn overlap_code_has_the_hand_derived_fractional_vertex() {
    // At (1, 1/2, 1/2, 0): check {0,1,2} is tight on patterns 100, 011,
    // 101, 110 and check {1,2,3} on 010, 100; with the two box rows
    // x0 = 1, x3 = 0 the active rows span all four coordinates, so the
    // point is a vertex, and it is fractional.
    let code = overlap_code();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let v = point(&[(1, 1), (1, 2), (1, 2), (0, 1)]);
    assert!(poly.is_vertex(&v).unwrap());

    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    assert!(verts.contains(&v), "enumeration finds the fractional vertex");

    let codewords = enumerate_codewords(&code, 20).unwrap();
    assert_eq!(codewords.len(), 4);
    let integral: Vec<BinaryWord> = verts.iter().filter_map(|p| p.rounded_word(0.0)).collect();
    assert_eq!(integral.len(), 4, "integral vertices = codewords");
    for w in &integral {
        assert!(codewords.contains(w));
    }

    let fractional: Vec<&PolytopePoint> =
        verts.iter().filter(|p| !p.is_integral(0.0)).collect();
    assert!(!fractional.is_empty());
    for p in &fractional {
        assert!(poly.is_vertex(p).unwrap());
        let profile = fractional_profile(&code, p, &Tolerances::default()).unwrap();
        assert!(lonely_fractional_checks(&code, &profile).is_empty());
        let bound = active_set_upper_bound(&code, &profile).unwrap();
        assert!(poly.active_set(p).unwrap().len() <= bound);
    }
}

#[test]
fn disjoint_checks_multiply_vertex_sets() {
    // Two disjoint degree-3 checks: the polytope is a product, so vertices
    // are all 4×4 combinations of local codewords.
    let code = ParityCheckCode::from_check_neighborhoods(
        6,
        vec![vec![0, 1, 2], vec![3, 4, 5]],
    )
    .unwrap();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    assert_eq!(verts.len(), 16);
    assert!(verts.iter().all(|v| v.is_integral(0.0)));
}

#[test]
fn hamming_vertices_structural_invariants() {
    let code = hamming_7_4();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let verts = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();

    let codewords = enumerate_codewords(&code, 20).unwrap();
    let mut integral = Vec::new();
    let mut fractional = 0usize;
    for v in &verts {
        assert!(poly.is_vertex(v).unwrap(), "enumerated point must be a vertex");
        match v.rounded_word(0.0) {
            Some(w) => integral.push(w),
            None => {
                fractional += 1;
                let profile = fractional_profile(&code, v, &Tolerances::default()).unwrap();
                assert!(lonely_fractional_checks(&code, &profile).is_empty());
                let bound = active_set_upper_bound(&code, &profile).unwrap();
                assert!(poly.active_set(v).unwrap().len() <= bound);
            }
        }
    }
    integral.sort_unstable();
    assert_eq!(integral, codewords, "integral vertices = codewords");
    assert!(fractional > 0, "the Hamming polytope has pseudocodewords");
}

#[test]
fn restriction_to_forbidden_facet() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    // Row 0 is pattern 001: x0 + x1 − x2 = 0 keeps codewords 000, 011, 101.
    let face = poly.restrict_to_facet(0).unwrap();
    let verts = face.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    let words: Vec<BinaryWord> = verts.iter().map(|v| v.rounded_word(0.0).unwrap()).collect();
    assert_eq!(words, vec![word("000"), word("011"), word("101")]);
    for v in &verts {
        face.check_feasible(v, &Tolerances::default()).unwrap();
    }
    // 110 violates the equality.
    assert!(face
        .check_feasible(&PolytopePoint::from_word(&word("110")), &Tolerances::default())
        .is_err());
}

#[test]
fn pinned_bits_restrict_the_vertex_set() {
    let code = hamming_7_4();
    let poly = RelaxedPolytope::build(&code).unwrap();
    let all = poly.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    let face = poly.pin_bits(&[(0, 1), (1, 0)]).unwrap();
    assert_eq!(face.pinned_value(0), Some(1));
    assert_eq!(face.pinned_value(1), Some(0));
    assert_eq!(face.pinned_value(2), None);
    let pinned = face.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    assert!(!pinned.is_empty());
    for v in &pinned {
        assert_eq!(v.coord_f64(0), 1.0);
        assert_eq!(v.coord_f64(1), 0.0);
        assert!(all.contains(v), "face vertices are polytope vertices");
    }
    // Every full vertex with those coordinates shows up in the face.
    let expected = all
        .iter()
        .filter(|v| v.coord_f64(0) == 1.0 && v.coord_f64(1) == 0.0)
        .count();
    assert_eq!(pinned.len(), expected);
}

#[test]
fn pin_validation() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    assert!(matches!(
        poly.pin_bits(&[(0, 0), (0, 0)]),
        Err(PolytopeError::DuplicatePin { bit: 0 })
    ));
    assert!(matches!(
        poly.pin_bits(&[(1, 0), (1, 1)]),
        Err(PolytopeError::DuplicatePin { bit: 1 })
    ));
    assert!(matches!(
        poly.pin_bits(&[(7, 0)]),
        Err(PolytopeError::InvalidPin(_))
    ));
    assert!(matches!(
        poly.pin_bits(&[(0, 2)]),
        Err(PolytopeError::InvalidPin(_))
    ));
    // Composing restrictions catches the box contradiction.
    let face = poly.pin_bits(&[(0, 0)]).unwrap();
    assert!(matches!(
        face.and_pins(&[(0, 1)]),
        Err(PolytopeError::ContradictoryPin { bit: 0 })
    ));
    assert!(matches!(
        poly.restrict_to_facet(99),
        Err(PolytopeError::IndexOutOfRange { index: 99, count: 10 })
    ));
}

#[test]
fn contradictory_pins_make_an_empty_face() {
    // Pinning a bit to 0 while restricting a forbidden row that needs it at
    // 1 leaves nothing; enumeration reports the empty face rather than
    // erroring.
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    // Row 3 is pattern 111: x0+x1+x2 = 2 on the face.
    let face = poly
        .restrict_to_facet(3)
        .unwrap()
        .and_pins(&[(0, 0), (1, 0)])
        .unwrap();
    let verts = face.enumerate_vertices(&VertexEnumBudget::default()).unwrap();
    assert!(verts.is_empty());
}

#[test]
fn is_vertex_distinguishes_vertices_edges_and_interior() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    assert!(poly.is_vertex(&PolytopePoint::from_word(&word("011"))).unwrap());
    // Midpoint of the edge 000–011: feasible, active rank 2.
    assert!(!poly.is_vertex(&point(&[(0, 1), (1, 2), (1, 2)])).unwrap());
    // Interior point: empty active set.
    assert!(!poly.is_vertex(&point(&[(1, 2), (1, 2), (1, 2)])).unwrap());
    // Same answers in float arithmetic.
    assert!(poly
        .is_vertex(&PolytopePoint::Float(vec![0.0, 1.0, 1.0]))
        .unwrap());
    assert!(!poly
        .is_vertex(&PolytopePoint::Float(vec![0.0, 0.5, 0.5]))
        .unwrap());
}

#[test]
fn fractional_profile_classifies_and_groups() {
    let code = k4_cycle_code();
    // Half on the triangle {v0,v1,v2} = edges 0,1,3.
    let p = point(&[(1, 2), (1, 2), (0, 1), (1, 2), (0, 1), (0, 1)]);
    let profile = fractional_profile(&code, &p, &Tolerances::default()).unwrap();
    assert_eq!(profile.fractional_bits, vec![0, 1, 3]);
    assert_eq!(profile.fractional_checks, vec![0, 1, 2]);
    assert_eq!(profile.components, vec![vec![0, 1, 3]]);
    assert!(!profile.is_integral());
    assert!(lonely_fractional_checks(&code, &profile).is_empty());
    assert_eq!(active_set_upper_bound(&code, &profile).unwrap(), 3 + 6 + 3);

    // An integral word has an empty profile.
    let profile =
        fractional_profile(&code, &PolytopePoint::from_word(&word("000000")), &Tolerances::default())
            .unwrap();
    assert!(profile.is_integral());
    assert!(profile.fractional_checks.is_empty());
    assert!(profile.components.is_empty());
    assert_eq!(
        active_set_upper_bound(&code, &profile).unwrap(),
        code.m() * 3 + code.n()
    );

    // Two disjoint fractional pairs form two components.
    let chain = ParityCheckCode::from_check_neighborhoods(
        4,
        vec![vec![0, 1], vec![2, 3]],
    )
    .unwrap();
    let p = point(&[(1, 2), (1, 2), (1, 3), (1, 3)]);
    let profile = fractional_profile(&chain, &p, &Tolerances::default()).unwrap();
    assert_eq!(profile.components, vec![vec![0, 1], vec![2, 3]]);
}

#[test]
fn active_set_upper_bound_requires_check_regularity() {
    let code =
        ParityCheckCode::from_check_neighborhoods(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
    let p = PolytopePoint::from_word(&word("000"));
    let profile = fractional_profile(&code, &p, &Tolerances::default()).unwrap();
    assert!(matches!(
        active_set_upper_bound(&code, &profile),
        Err(PolytopeError::IrregularCode(_))
    ));
}

#[test]
fn enumeration_budgets_are_enforced() {
    // Dimension over the exact engine's width.
    let wide = ParityCheckCode::from_check_neighborhoods(13, vec![vec![0, 1, 2]]).unwrap();
    let poly = RelaxedPolytope::build(&wide).unwrap();
    assert!(matches!(
        poly.enumerate_vertices(&VertexEnumBudget::default()),
        Err(PolytopeError::BudgetExceeded(_))
    ));

    let poly = RelaxedPolytope::build(&hamming_7_4()).unwrap();
    let tiny_rows = VertexEnumBudget {
        max_inequalities: 10,
        ..VertexEnumBudget::default()
    };
    assert!(matches!(
        poly.enumerate_vertices(&tiny_rows),
        Err(PolytopeError::BudgetExceeded(_))
    ));
    let tiny_nodes = VertexEnumBudget {
        max_nodes: 100,
        ..VertexEnumBudget::default()
    };
    assert!(matches!(
        poly.enumerate_vertices(&tiny_nodes),
        Err(PolytopeError::BudgetExceeded(_))
    ));
}

#[test]
fn polytope_point_queries() {
    let p = point(&[(1, 2), (1, 1), (0, 1)]);
    assert!(!p.is_integral(0.0));
    assert_eq!(p.rounded_word(0.0), None);
    assert_eq!(p.coord_f64(0), 0.5);
    assert_eq!(
        p.json_value(),
        serde_json::json!(["1/2", "1/1", "0/1"])
    );

    let q = PolytopePoint::Float(vec![1e-7, 1.0 - 1e-7, 1.0]);
    assert!(q.is_integral(1e-6));
    assert!(!q.is_integral(1e-8));
    assert_eq!(q.rounded_word(1e-6).unwrap(), word("011"));
    assert_eq!(q.json_value(), serde_json::json!([1e-7, 1.0 - 1e-7, 1.0]));

    let r = PolytopePoint::from_word(&word("10"));
    assert_eq!(r.to_exact(), vec![BigRational::one(), BigRational::zero()]);
    assert_eq!(r.to_f64_vec(), vec![1.0, 0.0]);
}

#[test]
fn active_set_difference() {
    let a = ActiveSet::new(vec![0, 2, 5, 9]);
    let b = ActiveSet::new(vec![2, 9, 11]);
    assert_eq!(a.difference(&b), vec![0, 5]);
    assert_eq!(b.difference(&a), vec![11]);
}

#[test]
fn index_legend_describes_rows() {
    let poly = RelaxedPolytope::build(&single_check_3()).unwrap();
    let legend = poly.index_legend();
    let rows = legend.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0]["kind"], "forbidden_set");
    assert_eq!(rows[0]["word"], "001");
    assert_eq!(rows[4]["kind"], "box_lower");
    assert_eq!(rows[4]["bit"], 0);
    assert_eq!(rows[9]["kind"], "box_upper");
    assert_eq!(rows[9]["bit"], 2);
}
