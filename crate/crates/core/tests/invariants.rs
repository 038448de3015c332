//! Cross-module invariant sweeps: every closed form is pitted against an
//! independent brute-force route over a parameter grid.

mod common;

use common::{
    assert_both_recurrences, leibniz_char_poly, leibniz_det, parse_dot, recursion_triangle,
    recursion_triangle_seeded, TestRng,
};
use hosoya_core::eigen::{
    antidiagonal_char_poly, antidiagonal_general_eigen, diagonalize_antidiagonal, dot, gram_eigen,
    hadamard_eigen, rank_one_eigen, rank_one_factor, rank_one_factor_general, EigenValue,
};
use hosoya_core::IntPolynomial;
use hosoya_core::fib::{fib, general_fib, hosoya_general, lucas, SeedPair};
use hosoya_core::graph::{adjacency_graph, components, mod2_matrix, to_dot};
use hosoya_core::identities::{lemma1a, lemma1b};
use hosoya_core::triangle::{backslash_diagonal, median, row, slash_diagonal};
use hosoya_core::{
    antidiagonal, backslash_matrix, backslash_matrix_general, hosoya, inverse_rational,
    persymmetric, skew_band, ExactMatrix, RationalMatrix,
};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn triangle_recursion_oracle_matches_product_form() {
    let tri = recursion_triangle(60);
    assert_both_recurrences(&tri);
    for (ri, row) in tri.iter().enumerate() {
        let r = (ri + 1) as i64;
        for (ki, value) in row.iter().enumerate() {
            let k = (ki + 1) as i64;
            assert_eq!(value, &hosoya(r, k).unwrap(), "H({r},{k})");
        }
    }
}

#[test]
fn seeded_triangle_recursion_oracle_matches_product_form() {
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            if a == 0 && b == 0 {
                continue;
            }
            let seed = SeedPair::from_i64(a, b).unwrap();
            let tri = recursion_triangle_seeded(a, b, 30);
            assert_both_recurrences(&tri);
            for (ri, row) in tri.iter().enumerate() {
                let r = (ri + 1) as i64;
                for (ki, value) in row.iter().enumerate() {
                    let k = (ki + 1) as i64;
                    assert_eq!(
                        value,
                        &hosoya_general(&seed, r, k).unwrap(),
                        "seed ({a},{b}), H({r},{k})"
                    );
                }
            }
        }
    }
}

#[test]
fn seeded_triangle_equals_general_fib_products() {
    for a in -3..=3i64 {
        for b in -3..=3i64 {
            if a == 0 && b == 0 {
                continue;
            }
            let seed = SeedPair::from_i64(a, b).unwrap();
            for r in 1..=30i64 {
                for k in 1..=r {
                    let product =
                        general_fib(&seed, k).unwrap() * general_fib(&seed, r - k + 1).unwrap();
                    assert_eq!(hosoya_general(&seed, r, k).unwrap(), product);
                }
            }
        }
    }
}

#[test]
fn slice_points_satisfy_both_recurrences() {
    let slices = [
        row(12).unwrap(),
        backslash_diagonal(3, 9).unwrap(),
        slash_diagonal(4, 9).unwrap(),
        median(8).unwrap(),
    ];
    for slice in &slices {
        for p in &slice.points {
            if p.r >= 3 && p.k <= p.r - 2 {
                let rec1 = hosoya(p.r - 1, p.k).unwrap() + hosoya(p.r - 2, p.k).unwrap();
                assert_eq!(p.value, rec1, "column recurrence at ({}, {})", p.r, p.k);
            }
            if p.r >= 3 && p.k >= 3 {
                let rec2 = hosoya(p.r - 1, p.k - 1).unwrap() + hosoya(p.r - 2, p.k - 2).unwrap();
                assert_eq!(p.value, rec2, "shifted recurrence at ({}, {})", p.r, p.k);
            }
        }
    }
}

#[test]
fn median_values_are_the_antidiagonal_entries() {
    for n in 1..=20i64 {
        let med = median(n).unwrap();
        let a = antidiagonal(n).unwrap();
        let dim = n as usize;
        for (i, p) in med.points.iter().enumerate() {
            assert_eq!(&p.value, a.get(i, dim - 1 - i));
        }
    }
}

#[test]
fn backslash_matrices_are_rank_one_outer_products() {
    for n in 1..=15i64 {
        for m in 1..=n {
            for t in 1..=n {
                let b = backslash_matrix(m, n, t).unwrap();
                assert_eq!(b.rank(), 1, "rank of B({m},{n},{t})");
                let (u, v) = rank_one_factor(m, n, t).unwrap();
                let outer = ExactMatrix::from_fn(t as usize, t as usize, |i, j| &u[i] * &v[j]);
                assert_eq!(b, outer, "B({m},{n},{t}) != u v^T");
            }
        }
    }
}

#[test]
fn skew_band_determinant_is_independent_of_the_band_bound() {
    for n in 2..=12i64 {
        let reference = antidiagonal(n).unwrap().det().unwrap();
        for lo in 2..=n + 1 {
            assert_eq!(
                skew_band(n, lo).unwrap().det().unwrap(),
                reference,
                "det T({n},{lo})"
            );
        }
    }
}

#[test]
fn bareiss_matches_leibniz_on_constructed_families() {
    for n in 1..=6i64 {
        for (label, m) in [
            ("persymmetric", persymmetric(n).unwrap()),
            ("antidiagonal", antidiagonal(n).unwrap()),
        ] {
            assert_eq!(m.det().unwrap(), leibniz_det(&m), "{label}({n})");
        }
        if n >= 2 {
            for lo in 2..=n + 1 {
                let m = skew_band(n, lo).unwrap();
                assert_eq!(m.det().unwrap(), leibniz_det(&m), "skew_band({n},{lo})");
            }
        }
    }
}

#[test]
fn bareiss_matches_leibniz_on_random_matrices() {
    let mut rng = TestRng::new(0x5eed);
    for case in 0..20 {
        let n = rng.in_range(1, 8);
        let m = ExactMatrix::from_fn(n, n, |_, _| BigInt::from(rng.small()));
        assert_eq!(m.det().unwrap(), leibniz_det(&m), "random case {case}");
    }
}

#[test]
fn char_poly_matches_leibniz_expansion() {
    let mut rng = TestRng::new(0xca5e);
    for case in 0..12 {
        let n = rng.in_range(1, 6);
        let m = ExactMatrix::from_fn(n, n, |_, _| BigInt::from(rng.small()));
        let p = m.char_poly().unwrap();
        assert_eq!(p.coeffs(), leibniz_char_poly(&m), "random case {case}");
    }
    for n in 1..=6i64 {
        let a = antidiagonal(n).unwrap();
        assert_eq!(a.char_poly().unwrap().coeffs(), leibniz_char_poly(&a));
    }
}

#[test]
fn char_poly_endpoints_match_det_and_trace() {
    let mut rng = TestRng::new(0xfeed);
    let mut matrices: Vec<ExactMatrix> = (1..=8i64).map(|n| persymmetric(n).unwrap()).collect();
    matrices.extend((1..=8i64).map(|n| antidiagonal(n).unwrap()));
    for _ in 0..10 {
        let n = rng.in_range(1, 8);
        matrices.push(ExactMatrix::from_fn(n, n, |_, _| BigInt::from(rng.small())));
    }
    for m in &matrices {
        let n = m.rows();
        let p = m.char_poly().unwrap();
        let at_zero = p.coeff(0);
        let expected = if n % 2 == 0 {
            m.det().unwrap()
        } else {
            -m.det().unwrap()
        };
        assert_eq!(at_zero, expected, "constant term vs (-1)^n det");
        assert_eq!(p.coeff(n - 1), -m.trace().unwrap(), "x^(n-1) term vs -trace");
        assert_eq!(p.coeff(n), BigInt::from(1), "monic");
    }
}

#[test]
fn inverse_times_matrix_is_the_identity() {
    let mut rng = TestRng::new(0x1def);
    let mut matrices: Vec<ExactMatrix> = (1..=10i64).map(|n| antidiagonal(n).unwrap()).collect();
    matrices.extend((2..=10i64).map(|n| skew_band(n, 3).unwrap()));
    let mut found = 0;
    while found < 10 {
        let n = rng.in_range(1, 6);
        let m = ExactMatrix::from_fn(n, n, |_, _| BigInt::from(rng.small()));
        if !m.det().unwrap().is_zero() {
            matrices.push(m);
            found += 1;
        }
    }
    for m in &matrices {
        let inv = inverse_rational(m).unwrap();
        let product = RationalMatrix::from_exact(m).matmul(&inv).unwrap();
        assert!(product.is_identity());
    }
}

#[test]
fn persymmetric_matrices_reflect_across_the_antidiagonal() {
    for n in 1..=30i64 {
        let b = persymmetric(n).unwrap();
        let dim = n as usize;
        for i in 0..dim {
            for j in 0..dim {
                assert_eq!(
                    b.get(i, j),
                    b.get(dim - 1 - j, dim - 1 - i),
                    "persymmetry fails for n={n} at ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn antidiagonal_product_char_poly_matches_general_routine() {
    for n in 1..=12i64 {
        assert_eq!(
            antidiagonal_char_poly(n).unwrap(),
            antidiagonal(n).unwrap().char_poly().unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn antidiagonal_diagonalization_holds_for_both_parities() {
    for n in 1..=12i64 {
        let diag = diagonalize_antidiagonal(n).unwrap();
        let a = antidiagonal(n).unwrap();
        assert_eq!(
            a.matmul(&diag.q).unwrap(),
            diag.q.matmul(&diag.d).unwrap(),
            "A P != P D for n = {n}"
        );
        assert!(!diag.q.det().unwrap().is_zero());
    }
}

#[test]
fn generalized_backslash_matrices_stay_rank_one() {
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            let seed = SeedPair::from_i64(a, b).unwrap();
            for n in 1..=10i64 {
                for m in 1..=n {
                    for t in 1..=n {
                        let bg = backslash_matrix_general(&seed, m, n, t).unwrap();
                        assert_eq!(bg.rank(), 1, "seed ({a},{b}), B({m},{n},{t})");
                        let (u, v) = rank_one_factor_general(&seed, m, n, t).unwrap();
                        let lambda = dot(&u, &v);
                        assert!(!lambda.is_zero());
                        assert_eq!(lambda, bg.trace().unwrap());
                        let bu = bg.mul_vec(&u).unwrap();
                        let scaled: Vec<BigInt> = u.iter().map(|x| x * &lambda).collect();
                        assert_eq!(bu, scaled, "B u != (u.v) u");
                    }
                }
            }
        }
    }
}

#[test]
fn every_returned_eigenvector_satisfies_its_eigen_equation() {
    // Rank-one, antidiagonal, and gram cases up to n = 20, re-multiplied
    // here rather than trusting the constructors' internal checks.
    let verify = |m: &ExactMatrix, value: &EigenValue, vectors: &[Vec<BigInt>], what: &str| {
        let EigenValue::Integer(lambda) = value else {
            panic!("{what}: expected integer eigenvalue");
        };
        for w in vectors {
            let mw = m.mul_vec(w).unwrap();
            let scaled: Vec<BigInt> = w.iter().map(|x| x * lambda).collect();
            assert_eq!(mw, scaled, "{what}: M w != lambda w");
        }
    };
    for n in 1..=20i64 {
        let b = persymmetric(n).unwrap();
        for pair in rank_one_eigen(1, n, n).unwrap() {
            verify(&b, &pair.value, &pair.eigenvectors, "rank-one");
        }
        let a = antidiagonal(n).unwrap();
        for pair in antidiagonal_eigen_pairs(n) {
            verify(&a, &pair.value, &pair.eigenvectors, "antidiagonal");
        }
        let gram = b.transpose().matmul(&b).unwrap();
        let pair = gram_eigen(n).unwrap();
        verify(&gram, &pair.value, &pair.eigenvectors, "gram");
        let hadamard = b.hadamard(&b).unwrap();
        let pair = hadamard_eigen(n).unwrap();
        verify(&hadamard, &pair.value, &pair.eigenvectors, "hadamard");
    }

    fn antidiagonal_eigen_pairs(n: i64) -> Vec<hosoya_core::eigen::EigenPair> {
        hosoya_core::eigen::antidiagonal_eigen(n).unwrap()
    }
}

#[test]
fn general_antidiagonal_eigenvalues_square_to_char_poly_factors() {
    // The quadratic factors (x^2 - value^2) together with the linear center
    // factor rebuild det(xI - M) exactly.
    let mut cases: Vec<ExactMatrix> = (1..=8i64).map(|n| antidiagonal(n).unwrap()).collect();
    let mut rng = TestRng::new(0xad1a);
    for _ in 0..10 {
        let n = rng.in_range(1, 6);
        // Mirror entries share their sign, keeping every product nonnegative.
        let magnitudes: Vec<i64> = (0..n).map(|_| rng.small()).collect();
        cases.push(ExactMatrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                let sign = if i.min(j) % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign * magnitudes[i.min(j)])
            } else {
                BigInt::zero()
            }
        }));
    }
    for m in &cases {
        let values = antidiagonal_general_eigen(m).unwrap();
        let n = m.rows();
        let mut product = IntPolynomial::one();
        let mut seen = 0usize;
        for pair in values.chunks(2) {
            if pair.len() == 2 {
                assert_eq!(pair[0].squared(), pair[1].squared());
                product = product.mul(&IntPolynomial::x_squared_minus(&pair[0].squared()));
                seen += 2;
            } else {
                let center = pair[0].as_integer().expect("center entry is an integer");
                product = product.mul(&IntPolynomial::x_minus(&center));
                seen += 1;
            }
        }
        assert_eq!(seen, n);
        assert_eq!(product, m.char_poly().unwrap());
    }
}

#[test]
fn lemma_sweeps_hold_with_negative_inner_indices() {
    for m in 1..=20i64 {
        for n in 1..=20i64 {
            for t in 0..=20i64 {
                let a = lemma1a(m, n, t).unwrap();
                assert!(a.is_equal(), "lemma1a({m},{n},{t}): {} != {}", a.lhs, a.rhs);
                let b = lemma1b(m, n, t).unwrap();
                assert!(b.is_equal(), "lemma1b({m},{n},{t}): {} != {}", b.lhs, b.rhs);
            }
        }
    }
}

#[test]
fn negative_index_scalars_extend_both_recurrences() {
    for k in -100..=100i64 {
        assert_eq!(
            fib(k).unwrap(),
            fib(k - 1).unwrap() + fib(k - 2).unwrap(),
            "F({k})"
        );
        assert_eq!(
            lucas(k).unwrap(),
            fib(k - 1).unwrap() + fib(k + 1).unwrap(),
            "L({k})"
        );
    }
}

#[test]
fn mod2_zero_pattern_follows_the_divisibility_rule() {
    for n in 1..=40i64 {
        let m = mod2_matrix(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let expect_zero = i % 3 == 0 || (n - j + 1) % 3 == 0;
                let is_zero = m.get((i - 1) as usize, (j - 1) as usize).is_zero();
                assert_eq!(is_zero, expect_zero, "n={n}, ({i},{j})");
            }
        }
    }
}

#[test]
fn components_partition_the_vertex_set() {
    for n in [1i64, 2, 5, 8, 11, 14] {
        let graph = adjacency_graph(n).unwrap();
        let summary = components(&graph);
        let mut seen: Vec<usize> = summary
            .components
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .collect();
        seen.sort_unstable();
        let expected: Vec<usize> = (1..=n as usize).collect();
        assert_eq!(seen, expected, "components do not partition for n={n}");
    }
}

#[test]
fn dot_export_round_trips_through_a_parser() {
    for n in [1i64, 2, 5, 8, 11] {
        let graph = adjacency_graph(n).unwrap();
        let text = to_dot(&graph);
        let (vertices, edges) = parse_dot(&text);
        assert_eq!(vertices, (1..=n as usize).collect::<Vec<_>>());
        assert_eq!(edges.len(), graph.edge_count());
        for (u, v) in edges {
            assert!(graph.has_edge(u, v));
        }
        // Byte-stable across repeated rendering.
        assert_eq!(text, to_dot(&graph));
    }
}

proptest! {
    #[test]
    fn random_backslash_blocks_match_the_triangle(n in 1i64..=12, seed in 0u64..1000) {
        let mut rng = TestRng::new(seed + 1);
        let m = rng.in_range(1, n as usize) as i64;
        let t = rng.in_range(1, n as usize) as i64;
        let b = backslash_matrix(m, n, t).unwrap();
        // Entry (i, j) is the triangle point H(m+n-1+(i-1) - (j-1), m+i-1).
        for i in 1..=t {
            for j in 1..=t {
                let r = m + n - 1 + (i - 1) - (j - 1);
                let k = m + i - 1;
                prop_assert_eq!(
                    b.get((i - 1) as usize, (j - 1) as usize),
                    &hosoya(r, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn random_matrices_transpose_det_invariant(seed in 0u64..200) {
        let mut rng = TestRng::new(seed + 7);
        let n = rng.in_range(1, 6);
        let m = ExactMatrix::from_fn(n, n, |_, _| BigInt::from(rng.small()));
        prop_assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }
}
