use alloc::format;

use crate::bounds::{lower_bound_plan, Regime};
use crate::clique::{find_mono_clique, Budget};
use crate::codes::{greedy_gv_code, DEFAULT_ENUMERATION_LIMIT};
use crate::constructions::{
    affine_partition_family, find_affine_params, partitions_to_coloring, product_coloring,
    AffineParams,
};
use crate::{Error, Result, SetColoring};

use super::exact::{search_coloring, MAX_SEARCH_VERTICES};

/// The affine-geometry coloring of `K_{q^d}` for `p`.
pub fn affine_coloring(p: &AffineParams) -> Result<SetColoring> {
    partitions_to_coloring(&affine_partition_family(p)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerStrategy {
    /// An affine construction with exactly these `(n, r, s)`.
    Affine,
    /// A base `(a, b)`-coloring combined with a greedy code of length `r / a` and distance
    /// `ceil(s / b)`. Without explicit `a` and `b` the lower-bound plan picks them.
    Product { a: Option<u64>, b: Option<u64> },
    /// Backtracking search.
    Search,
}

/// An `(r, s)`-coloring of `K_vertices` with no monochromatic `K_n`, re-verified before
/// it is returned.
pub fn prove_lower(
    n: u64,
    r: u64,
    s: u64,
    vertices: u64,
    strategy: LowerStrategy,
    budget: Budget,
) -> Result<SetColoring> {
    if n < 3 || vertices < 2 || s == 0 || s > r {
        return Err(Error::InvalidParameters(format!(
            "need n >= 3, at least two vertices and 1 <= s <= r, got n={n}, r={r}, s={s}, N={vertices}"
        )));
    }
    let coloring = match strategy {
        LowerStrategy::Affine => {
            let p = find_affine_params(n, r, s, 1 << 16).ok_or_else(|| {
                Error::Inapplicable(format!(
                    "no affine construction has (n, r, s) = ({n}, {r}, {s})"
                ))
            })?;
            let c = affine_coloring(&p)?;
            fit(c, vertices)?
        }
        LowerStrategy::Product { a, b } => {
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    let plan = lower_bound_plan(n, r, s)?;
                    match (plan.regime, plan.product) {
                        (Regime::ProductOfCodes, Some(p)) => (p.a, p.b),
                        _ => {
                            return Err(Error::Inapplicable(format!(
                                "({n}, {r}, {s}) is in the direct regime; give a and b explicitly"
                            )))
                        }
                    }
                }
            };
            fit(product_lower(n, r, s, a, b, budget)?, vertices)?
        }
        LowerStrategy::Search => {
            let found = search_coloring(
                n as usize,
                r as usize,
                s as usize,
                vertices as usize,
                budget,
            )?;
            found.ok_or(Error::NoColoring { n, r, s, vertices })?
        }
    };
    if let Some(w) = find_mono_clique(&coloring, n as usize, Budget::UNLIMITED)? {
        return Err(Error::Inapplicable(format!(
            "construction failed verification: color {} is complete on {:?}",
            w.color, w.vertices
        )));
    }
    Ok(coloring)
}

fn fit(c: SetColoring, vertices: u64) -> Result<SetColoring> {
    if (c.num_vertices() as u64) < vertices {
        return Err(Error::Inapplicable(format!(
            "construction reaches only {} vertices, {vertices} requested",
            c.num_vertices()
        )));
    }
    c.prefix(vertices as usize)
}

/// The largest base coloring found by climbing vertex counts, then the code product,
/// trimmed to `s` colors and declared over the full palette of `r`.
fn product_lower(n: u64, r: u64, s: u64, a: u64, b: u64, budget: Budget) -> Result<SetColoring> {
    if b == 0 || b > a || a > r {
        return Err(Error::Inapplicable(format!(
            "need 1 <= b <= a <= r, got a={a}, b={b}"
        )));
    }
    let m = r / a;
    let d = s.div_ceil(b);
    if d > m {
        return Err(Error::Inapplicable(format!(
            "distance {d} exceeds the code length {m} for a={a}, b={b}"
        )));
    }
    let mut base = None;
    for q in n.saturating_sub(1).max(2)..=MAX_SEARCH_VERTICES as u64 {
        match search_coloring(n as usize, a as usize, b as usize, q as usize, budget) {
            Ok(Some(c)) => base = Some(c),
            Ok(None) | Err(Error::BudgetExceeded { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    let base =
        base.ok_or_else(|| Error::Inapplicable(format!("no base ({a}, {b})-coloring found")))?;
    let code = greedy_gv_code(
        base.num_vertices() as u32,
        m as usize,
        d as usize,
        DEFAULT_ENUMERATION_LIMIT,
    )?;
    if code.len() < 2 {
        return Err(Error::Inapplicable(
            "the code has fewer than two words".into(),
        ));
    }
    product_coloring(&base, &code)?
        .with_declared(r as usize, s as usize, true)?
        .trim_to_exact()
}
