//! Library results checked against brute-force computations written independently here.

use num_bigint::BigUint;
use setramsey_core::bounds::{first_moment_lower, simple_upper, turan_number, turan_upper};
use setramsey_core::codes::{
    ball_volume, coloring_to_code, exhaustive_max_code, greedy_gv_code, gv_lower_bound,
    partition_color_classes, singleton_bound, PartitionOutcome, DEFAULT_ENUMERATION_LIMIT,
};
use setramsey_core::constructions::{
    default_abc, default_d1_d2, gaussian_binomial, k_subspaces, product_coloring, step_up_3_to_4,
    step_up_graph_to_3, step_up_k, AffineParams, StepUpLimits,
};
use setramsey_core::field::GaloisField;
use setramsey_core::solver::{affine_coloring, solve_exact, SolveConfig};
use setramsey_core::{find_mono_clique, Budget, ColorSet, SetColoring};

/// All `size`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

/// Whether some color lies on every k-subset of some n-subset.
fn brute_has_mono(c: &SetColoring, n: usize) -> bool {
    let k = c.uniformity();
    subsets(c.num_vertices(), n).iter().any(|group| {
        let common = subsets(n, k)
            .iter()
            .fold(ColorSet::prefix(c.num_colors()), |acc, idx| {
                let edge: Vec<usize> = idx.iter().map(|&i| group[i]).collect();
                acc.intersection(c.colors(&edge))
            });
        !common.is_empty()
    })
}

fn hamming(u: &[u32], v: &[u32]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

#[test]
fn affine_small_cases_against_brute_force() {
    for (q, d, k, n, r, s, points) in [
        (2, 2, 1, 3, 3, 2, 4),
        (3, 2, 1, 4, 4, 3, 9),
        (2, 3, 1, 5, 7, 6, 8),
        (2, 3, 2, 3, 7, 4, 8),
    ] {
        let p = AffineParams::new(q, d, k).unwrap();
        assert_eq!((p.n, p.r, p.s, p.num_vertices), (n, r, s, points));
        let c = affine_coloring(&p).unwrap();
        assert!(c.validate().is_ok());
        assert!(!brute_has_mono(&c, n as usize), "q={q} d={d} k={k}");
        assert!(find_mono_clique(&c, n as usize, Budget::UNLIMITED)
            .unwrap()
            .is_none());
    }
}

#[test]
fn gaussian_binomial_matches_subspace_count() {
    for q in [2u32, 3, 4, 5] {
        let field = GaloisField::new(q).unwrap();
        for d in 1..=3 {
            for k in 0..=d {
                if (q as u64).pow(d) > 125 {
                    continue;
                }
                let counted = k_subspaces(&field, d, k).len();
                assert_eq!(
                    gaussian_binomial(d, k, q),
                    BigUint::from(counted),
                    "q={q} d={d} k={k}"
                );
            }
        }
    }
}

#[test]
fn ball_volume_and_gv_by_enumeration() {
    for q in 2u32..=4 {
        for m in 1..=4usize {
            let total = (q as u64).pow(m as u32);
            let words: Vec<Vec<u32>> = (0..total)
                .map(|mut i| {
                    (0..m)
                        .map(|_| {
                            let x = (i % q as u64) as u32;
                            i /= q as u64;
                            x
                        })
                        .collect()
                })
                .collect();
            for radius in 0..=m {
                let inside = words
                    .iter()
                    .filter(|w| hamming(w, &words[0]) <= radius)
                    .count();
                assert_eq!(
                    ball_volume(q as u64, m as u64, radius as u64),
                    BigUint::from(inside)
                );
            }
            for d in 1..=m {
                let code = greedy_gv_code(q, m, d, DEFAULT_ENUMERATION_LIMIT).unwrap();
                for (i, u) in code.words().iter().enumerate() {
                    for v in &code.words()[i + 1..] {
                        assert!(hamming(u, v) >= d);
                    }
                }
                assert!(BigUint::from(code.len()) >= gv_lower_bound(q as u64, m as u64, d as u64));
                assert!(BigUint::from(code.len()) <= singleton_bound(q as u64, m as u64, d as u64));
                // maximality: every word is within d-1 of the code
                assert!(words
                    .iter()
                    .all(|w| code.words().iter().any(|c| hamming(c, w) < d)));
            }
        }
    }
}

#[test]
fn exhaustive_code_sizes_match_known_values() {
    // A_2(3,2)=4, A_2(4,3)=2, A_2(5,3)=4, A_3(3,2)=9, A_2(6,3)=8, A_3(4,3)=9
    for (q, m, d, a) in [
        (2, 3, 2, 4),
        (2, 4, 3, 2),
        (2, 5, 3, 4),
        (3, 3, 2, 9),
        (2, 6, 3, 8),
        (3, 4, 3, 9),
    ] {
        assert_eq!(
            exhaustive_max_code(q, m, d, Budget::UNLIMITED).unwrap(),
            a,
            "A_{q}({m},{d})"
        );
    }
}

#[test]
fn code_bridge_round_trip() {
    let c = affine_coloring(&AffineParams::new(2, 2, 1).unwrap()).unwrap();
    let PartitionOutcome::Partitioned(pf) =
        partition_color_classes(&c, 2, Budget::UNLIMITED).unwrap()
    else {
        panic!("affine color classes are bipartite");
    };
    let code = coloring_to_code(&c, &pf).unwrap();
    assert_eq!(
        (
            code.alphabet_size(),
            code.length(),
            code.claimed_distance(),
            code.len()
        ),
        (2, 3, 2, 4)
    );
    // pentagon classes are 5-cycles: not bipartite
    assert_eq!(
        partition_color_classes(&SetColoring::pentagon(), 2, Budget::UNLIMITED).unwrap(),
        PartitionOutcome::NotPartite { color: 0 }
    );
}

#[test]
fn product_of_pentagon_has_no_triangle() {
    let base = SetColoring::pentagon();
    let code = greedy_gv_code(5, 2, 1, DEFAULT_ENUMERATION_LIMIT).unwrap();
    let c = product_coloring(&base, &code).unwrap();
    assert_eq!(c.num_vertices(), 25);
    for (e, set) in c.edges() {
        let d = hamming(&code.words()[e[0]], &code.words()[e[1]]);
        assert_eq!(set.len(), d);
    }
    let trimmed = c.trim_to_exact().unwrap();
    assert!(!brute_has_mono(&trimmed, 3));
}

#[test]
fn graph_step_up_has_no_mono_k4() {
    let base = affine_coloring(&AffineParams::new(2, 2, 1).unwrap()).unwrap();
    let up = step_up_graph_to_3(&base, StepUpLimits::default()).unwrap();
    assert_eq!(
        (up.num_vertices(), up.num_colors(), up.colors_per_edge()),
        (16, 6, 2)
    );
    assert!(!brute_has_mono(&up, 4));
    // pentagon: no mono triangle, so no mono K_4 in the 3-uniform lift on 32 vertices
    let up = step_up_graph_to_3(&SetColoring::pentagon(), StepUpLimits::default()).unwrap();
    assert!(find_mono_clique(&up, 4, Budget::UNLIMITED)
        .unwrap()
        .is_none());
}

/// A 3-uniform `(r, s)`-coloring on 4 vertices whose four triples share no color, so
/// there is no monochromatic `K_4`.
fn base_3_uniform(r: usize, s: usize) -> SetColoring {
    let mut sets = Vec::new();
    for i in 0..4 {
        sets.push(ColorSet::from_colors((0..s).map(|j| (i * s + j) % r)));
    }
    SetColoring::from_edges(3, 4, r, s, false, sets).unwrap()
}

#[test]
fn higher_step_ups_avoid_their_targets() {
    let base = base_3_uniform(4, 2);
    assert!(!brute_has_mono(&base, 4));
    let (d1, d2) = default_d1_d2(4, 2).unwrap();
    let up = step_up_k(&base, d1, d2, StepUpLimits::default()).unwrap();
    assert_eq!((up.uniformity(), up.num_vertices()), (4, 16));
    // 2n - 1 = 7
    assert!(find_mono_clique(&up, 7, Budget::UNLIMITED)
        .unwrap()
        .is_none());

    let base = base_3_uniform(3, 2);
    assert!(!brute_has_mono(&base, 4));
    let (a, b, c) = default_abc(3, 2).unwrap();
    let up = step_up_3_to_4(&base, a, b, c, StepUpLimits::default()).unwrap();
    assert_eq!(up.num_vertices(), 16);
    // 2n^2 = 32 exceeds the vertex count, so check the strongest size that fits
    assert!(find_mono_clique(&up, 16, Budget::UNLIMITED)
        .unwrap()
        .is_none());
}

#[test]
fn bounds_against_direct_arithmetic() {
    // simple upper: (3,2,1) -> 2 * 2^3
    assert_eq!(simple_upper(3, 2, 1).unwrap().value, BigUint::from(16u32));
    // ex(N, K_n) as the best complete multipartite graph with n-1 parts
    for vertices in 1..=12u64 {
        for n in 2..=6u64 {
            let parts = (n - 1) as usize;
            let best = best_partite_edges(vertices as usize, parts);
            assert_eq!(
                turan_number(vertices, n).unwrap(),
                BigUint::from(best),
                "N={vertices} n={n}"
            );
        }
    }
    // 2 * 3^(1/3) = 2.88
    let v = first_moment_lower(3, 2, 1).unwrap().value;
    assert_eq!(v, BigUint::from(2u32));
    assert_eq!(
        turan_upper(3, 3, 2, 100).unwrap().unwrap().value,
        BigUint::from(5u32)
    );
}

/// Maximum edges of a complete multipartite graph with at most `parts` parts.
fn best_partite_edges(vertices: usize, parts: usize) -> u64 {
    fn rec(
        left: usize,
        parts: usize,
        max_part: usize,
        sizes: &mut Vec<usize>,
        best: &mut u64,
        total: usize,
    ) {
        if left == 0 {
            let inside: usize = sizes.iter().map(|&x| x * x.saturating_sub(1) / 2).sum();
            *best = (*best).max((total * total.saturating_sub(1) / 2 - inside) as u64);
            return;
        }
        if parts == 0 {
            return;
        }
        for size in 1..=left.min(max_part) {
            sizes.push(size);
            rec(left - size, parts - 1, size, sizes, best, total);
            sizes.pop();
        }
    }
    let mut best = 0;
    rec(
        vertices,
        parts,
        vertices,
        &mut Vec::new(),
        &mut best,
        vertices,
    );
    best
}

#[test]
fn solver_values_match_brute_force_search() {
    // brute force over all 2-colorings of K_5 and K_6 for triangles
    for (vertices, expect_free) in [(5usize, true), (6, false)] {
        let edges = vertices * (vertices - 1) / 2;
        let mut free = false;
        for mask in 0u32..(1 << edges) {
            let c = SetColoring::from_edges(
                2,
                vertices,
                2,
                1,
                false,
                (0..edges)
                    .map(|i| ColorSet::from_colors([((mask >> i) & 1) as usize]))
                    .collect(),
            )
            .unwrap();
            if !brute_has_mono(&c, 3) {
                free = true;
                break;
            }
        }
        assert_eq!(free, expect_free);
    }
    let res = solve_exact(3, 2, 1, SolveConfig::new(8, Budget::UNLIMITED)).unwrap();
    assert_eq!(res.value(), Some(6));
    assert!(!brute_has_mono(res.witness.as_ref().unwrap(), 3));
}

/// Highest bit position where `u` and `v` differ, found by scanning down from bit 63.
fn top_bit_diff(u: usize, v: usize) -> usize {
    (0..64)
        .rev()
        .find(|&i| (u >> i) & 1 != (v >> i) & 1)
        .unwrap()
}

fn offset(set: ColorSet, by: usize) -> ColorSet {
    ColorSet::from_colors(set.iter().map(|x| x + by))
}

#[test]
fn step_up_labels_match_an_independent_classifier() {
    let base = SetColoring::pentagon();
    let up = step_up_graph_to_3(&base, StepUpLimits::default()).unwrap();
    for e in subsets(32, 3) {
        let (a, b) = (top_bit_diff(e[0], e[1]), top_bit_diff(e[1], e[2]));
        let expected = if a < b {
            base.pair(a, b)
        } else {
            offset(base.pair(a, b), base.num_colors())
        };
        assert_eq!(up.colors(&e), expected, "graph step-up edge {e:?}");
    }

    let base = base_3_uniform(4, 2);
    let (d1, d2) = default_d1_d2(4, 2).unwrap();
    let up = step_up_k(&base, d1, d2, StepUpLimits::default()).unwrap();
    for e in subsets(16, 4) {
        let d: Vec<usize> = e.windows(2).map(|w| top_bit_diff(w[0], w[1])).collect();
        let rising = d[0] < d[1] && d[1] < d[2];
        let falling = d[0] > d[1] && d[1] > d[2];
        let expected = if rising || falling {
            base.colors(&d)
        } else if d[0] < d[1] {
            d1
        } else {
            d2
        };
        assert_eq!(up.colors(&e), expected, "k step-up edge {e:?}");
    }

    let base = base_3_uniform(3, 2);
    let (a, b, c) = default_abc(3, 2).unwrap();
    let up = step_up_3_to_4(&base, a, b, c, StepUpLimits::default()).unwrap();
    for e in subsets(16, 4) {
        let d: Vec<usize> = e.windows(2).map(|w| top_bit_diff(w[0], w[1])).collect();
        let expected = if (d[0] < d[1] && d[1] < d[2]) || (d[0] > d[1] && d[1] > d[2]) {
            base.colors(&d)
        } else if d[1] > d[0] && d[1] > d[2] {
            c
        } else if d[2] > d[0] {
            a
        } else {
            b
        };
        assert_eq!(up.colors(&e), expected, "3 to 4 step-up edge {e:?}");
    }
}
