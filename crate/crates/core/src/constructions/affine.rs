//! Colorings from the partitions of `F_q^d` into translates of its k-dimensional
//! subspaces.
//!
//! For each k-dimensional subspace `S_i`, partition `P_i` splits the `q^d` points into
//! the `q^(d-k)` cosets `x + S_i`. Edge `uv` gets color `i` when `u` and `v` lie in
//! different cosets of `S_i`. Every color class is then complete `q^(d-k)`-partite (so
//! has no `K_n` for `n = q^(d-k) + 1`), and every pair of points is separated by the same
//! number `s` of partitions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::codes::PartitionFamily;
use crate::combin::LexSubsets;
use crate::field::{prime_power, prime_powers_up_to, GaloisField, MAX_FIELD_ORDER};
use crate::{ColorSet, Error, Result, SetColoring, MAX_COLORS};

/// Cap on `r * q^d` label entries held by an affine partition family.
pub const AFFINE_ENTRY_LIMIT: u64 = 1 << 24;

/// `[d choose k]_q = prod_{i<k} (q^(d-i) - 1) / (q^(k-i) - 1)`, the number of
/// k-dimensional subspaces of `F_q^d`.
pub fn gaussian_binomial(d: u32, k: u32, q: u32) -> BigUint {
    if k > d {
        return BigUint::default();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= num_traits::pow(q.clone(), (d - i) as usize) - 1u32;
        den *= num_traits::pow(q.clone(), (k - i) as usize) - 1u32;
    }
    num / den
}

/// Parameters of the affine construction over `F_q^d` with k-dimensional subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineParams {
    pub q: u32,
    pub d: u32,
    pub k: u32,
    /// `q^(d-k) + 1`: the clique size avoided.
    pub n: u64,
    /// Number of subspaces (colors).
    pub r: u64,
    /// Partitions separating any two distinct points.
    pub s: u64,
    /// `q^d` points.
    pub num_vertices: u64,
}

impl AffineParams {
    pub fn new(q: u32, d: u32, k: u32) -> Result<Self> {
        if prime_power(q).is_none() || q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedField(q));
        }
        if k == 0 || k >= d {
            return Err(Error::InvalidParameters(format!(
                "need 0 < k < d, got k={k}, d={d}"
            )));
        }
        let too_big =
            || Error::InvalidParameters(format!("affine parameters q={q}, d={d}, k={k} overflow"));
        let qq = q as u64;
        let num_vertices = qq.checked_pow(d).ok_or_else(too_big)?;
        let n = qq.checked_pow(d - k).ok_or_else(too_big)? + 1;
        let r = gaussian_binomial(d, k, q).to_u64().ok_or_else(too_big)?;
        // s = (1 - (q^k - 1)/(q^d - 1)) r, an integer since r (q^k-1)/(q^d-1) counts the
        // subspaces through a fixed nonzero vector
        let together_num = r as u128 * (qq.pow(k) - 1) as u128;
        let together_den = (num_vertices - 1) as u128;
        if together_num % together_den != 0 {
            return Err(Error::InvalidParameters(format!(
                "s is not an integer for q={q}, d={d}, k={k}"
            )));
        }
        let s = r - (together_num / together_den) as u64;
        Ok(AffineParams {
            q,
            d,
            k,
            n,
            r,
            s,
            num_vertices,
        })
    }
}

/// Affine parameters producing exactly `(n, r, s)`, with at most `max_vertices` points.
pub fn find_affine_params(n: u64, r: u64, s: u64, max_vertices: u64) -> Option<AffineParams> {
    for q in prime_powers_up_to(MAX_FIELD_ORDER) {
        let mut d = 2;
        while (q as u64).checked_pow(d).is_some_and(|v| v <= max_vertices) {
            for k in 1..d {
                if let Ok(p) = AffineParams::new(q, d, k) {
                    if (p.n, p.r, p.s) == (n, r, s) {
                        return Some(p);
                    }
                }
            }
            d += 1;
        }
    }
    None
}

fn index_to_vec(mut idx: usize, q: u32, d: u32) -> Vec<u32> {
    let mut out = vec![0; d as usize];
    for slot in out.iter_mut() {
        *slot = (idx % q as usize) as u32;
        idx /= q as usize;
    }
    out
}

fn vec_to_index(v: &[u32], q: u32) -> usize {
    v.iter()
        .rev()
        .fold(0, |acc, &x| acc * q as usize + x as usize)
}

/// Bases of all k-dimensional subspaces of `F_q^d`, one per reduced row echelon form.
///
/// Rows have a 1 at their pivot column, zeros in the other pivot columns and before the
/// pivot, and arbitrary entries in the remaining (free) positions.
pub fn k_subspaces(field: &GaloisField, d: u32, k: u32) -> Vec<Vec<Vec<u32>>> {
    let q = field.order();
    let d = d as usize;
    let k = k as usize;
    let mut out = Vec::new();
    for pivots in LexSubsets::new(d, k) {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|row| {
                let pivots = &pivots;
                (pivots[row] + 1..d)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (row, c))
            })
            .collect();
        let count = (q as usize).pow(free.len() as u32);
        for fill in 0..count {
            let mut rows = vec![vec![0u32; d]; k];
            for (row, &p) in pivots.iter().enumerate() {
                rows[row][p] = 1;
            }
            let mut f = fill;
            for &(row, col) in &free {
                rows[row][col] = (f % q as usize) as u32;
                f /= q as usize;
            }
            out.push(rows);
        }
    }
    out
}

/// All vectors of the span of `basis`, as point indices.
fn span(field: &GaloisField, basis: &[Vec<u32>], d: u32) -> Vec<usize> {
    let q = field.order();
    let k = basis.len();
    let mut out = Vec::with_capacity((q as usize).pow(k as u32));
    for coeffs in 0..(q as usize).pow(k as u32) {
        let lambda = index_to_vec(coeffs, q, k as u32);
        let mut v = vec![0u32; d as usize];
        for (row, &l) in basis.iter().zip(&lambda) {
            for (slot, &x) in v.iter_mut().zip(row) {
                *slot = field.add(*slot, field.mul(l, x));
            }
        }
        out.push(vec_to_index(&v, q));
    }
    out
}

/// One partition of `F_q^d` per k-dimensional subspace, into its cosets. Parts are
/// labelled in order of their smallest point.
pub fn affine_partition_family(p: &AffineParams) -> Result<PartitionFamily> {
    let entries = p.r.saturating_mul(p.num_vertices);
    if entries > AFFINE_ENTRY_LIMIT {
        return Err(Error::ResourceLimit {
            what: "affine partition entries",
            size: entries as u128,
            limit: AFFINE_ENTRY_LIMIT as u128,
        });
    }
    let field = GaloisField::new(p.q)?;
    let points = p.num_vertices as usize;
    let q = p.q;
    let vectors: Vec<Vec<u32>> = (0..points).map(|i| index_to_vec(i, q, p.d)).collect();
    let mut assignment = Vec::with_capacity(p.r as usize);
    for basis in k_subspaces(&field, p.d, p.k) {
        let members = span(&field, &basis, p.d);
        let mut labels = vec![u32::MAX; points];
        let mut next = 0u32;
        for x in 0..points {
            if labels[x] != u32::MAX {
                continue;
            }
            for &m in &members {
                let y: Vec<u32> = vectors[x]
                    .iter()
                    .zip(&vectors[m])
                    .map(|(&a, &b)| field.add(a, b))
                    .collect();
                labels[vec_to_index(&y, q)] = next;
            }
            next += 1;
        }
        assignment.push(labels);
    }
    debug_assert_eq!(assignment.len() as u64, p.r);
    PartitionFamily::new(points, (p.n - 1) as usize, assignment)
}

/// Graph coloring where edge `uv` gets every partition index separating `u` and `v`.
///
/// The result is non-slack when every pair is separated equally often, and slack (with
/// `s` the minimum) otherwise. Fails if some pair is never separated.
pub fn partitions_to_coloring(pf: &PartitionFamily) -> Result<SetColoring> {
    let r = pf.num_partitions();
    if r > MAX_COLORS {
        return Err(Error::PaletteOverflow { colors: r });
    }
    if pf.num_vertices < 2 {
        return Err(Error::Precondition("need at least two vertices".into()));
    }
    let mut sets = Vec::new();
    for e in crate::combin::ColexSubsets::new(pf.num_vertices, 2) {
        sets.push(ColorSet::from_colors(
            (0..r).filter(|&i| pf.assignment[i][e[0]] != pf.assignment[i][e[1]]),
        ));
    }
    let min = sets.iter().map(|s| s.len()).min().unwrap_or(0);
    let max = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    if min == 0 {
        return Err(Error::Precondition(
            "some pair of vertices is never separated".into(),
        ));
    }
    SetColoring::from_edges(2, pf.num_vertices, r, min, min != max, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{clique_number_of_color, find_mono_clique, Budget};

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1, 2), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(5, 0, 7), BigUint::one());
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(3, 1, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::default());
    }

    #[test]
    fn subspace_enumeration_counts() {
        for (q, d, k) in [
            (2, 2, 1),
            (2, 3, 1),
            (2, 4, 2),
            (3, 4, 2),
            (4, 3, 1),
            (3, 3, 2),
        ] {
            let f = GaloisField::new(q).unwrap();
            let subs = k_subspaces(&f, d, k);
            assert_eq!(
                BigUint::from(subs.len()),
                gaussian_binomial(d, k, q),
                "q={q} d={d} k={k}"
            );
            let mut spans: Vec<Vec<usize>> = subs
                .iter()
                .map(|b| {
                    let mut s = span(&f, b, d);
                    s.sort_unstable();
                    s
                })
                .collect();
            assert!(spans.iter().all(|s| s.len() == (q as usize).pow(k)));
            spans.sort();
            spans.dedup();
            assert_eq!(
                spans.len(),
                subs.len(),
                "duplicate subspaces for q={q} d={d} k={k}"
            );
        }
    }

    #[test]
    fn params() {
        let p = AffineParams::new(2, 2, 1).unwrap();
        assert_eq!((p.n, p.r, p.s, p.num_vertices), (3, 3, 2, 4));
        let p = AffineParams::new(3, 2, 1).unwrap();
        assert_eq!((p.n, p.r, p.s, p.num_vertices), (4, 4, 3, 9));
        let p = AffineParams::new(2, 3, 1).unwrap();
        assert_eq!((p.n, p.r, p.s, p.num_vertices), (5, 7, 6, 8));
        assert!(AffineParams::new(6, 2, 1).is_err());
        assert!(AffineParams::new(2, 2, 2).is_err());
        assert_eq!(
            find_affine_params(4, 4, 3, 1000),
            Some(AffineParams::new(3, 2, 1).unwrap())
        );
        assert_eq!(find_affine_params(3, 2, 1, 1000), None);
    }

    #[test]
    fn smallest_family() {
        let p = AffineParams::new(2, 2, 1).unwrap();
        let pf = affine_partition_family(&p).unwrap();
        assert_eq!(pf.num_partitions(), 3);
        for i in 0..3 {
            assert_eq!(pf.parts_used(i), 2);
        }
        // every pair of points together in exactly one partition
        for u in 0..4 {
            for v in u + 1..4 {
                let together = (0..3)
                    .filter(|&i| pf.assignment[i][u] == pf.assignment[i][v])
                    .count();
                assert_eq!(together, 1);
            }
        }
        let c = partitions_to_coloring(&pf).unwrap();
        assert!(!c.is_slack());
        assert_eq!((c.num_colors(), c.colors_per_edge()), (3, 2));
        assert!(find_mono_clique(&c, 3, Budget::UNLIMITED)
            .unwrap()
            .is_none());
        for color in 0..3 {
            assert_eq!(
                clique_number_of_color(&c, color, None, Budget::UNLIMITED).unwrap(),
                2
            );
        }
    }

    #[test]
    fn separation_count_is_uniform() {
        for (q, d, k) in [
            (2, 3, 1),
            (2, 3, 2),
            (3, 2, 1),
            (4, 2, 1),
            (2, 4, 2),
            (3, 3, 1),
        ] {
            let p = AffineParams::new(q, d, k).unwrap();
            let pf = affine_partition_family(&p).unwrap();
            assert!((0..pf.num_partitions()).all(|i| pf.parts_used(i) as u64 == p.n - 1));
            let c = partitions_to_coloring(&pf).unwrap();
            assert!(!c.is_slack(), "q={q} d={d} k={k}");
            assert_eq!(c.colors_per_edge() as u64, p.s);
            // s = (1 - (q^k-1)/(q^d-1)) r as a rational identity
            let lhs = p.s as u128 * (p.num_vertices as u128 - 1);
            let rhs = p.r as u128 * (p.num_vertices as u128 - (q as u128).pow(k));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn singleton_partition_gives_monochrome() {
        let pf = PartitionFamily::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let c = partitions_to_coloring(&pf).unwrap();
        assert!(c
            .edge_sets()
            .iter()
            .all(|&s| s == ColorSet::from_colors([0])));
        let never = PartitionFamily::new(3, 2, vec![vec![0, 0, 1]]).unwrap();
        assert!(partitions_to_coloring(&never).is_err());
    }
}
