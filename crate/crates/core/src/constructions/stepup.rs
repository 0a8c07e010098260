//! Stepping-up: lifting a k-uniform coloring on `N` vertices to a (k+1)-uniform coloring
//! on the `2^N` vertices `0..2^N`.
//!
//! For `u != v`, `delta(u, v)` is the most significant bit where they differ. For
//! `v_1 < v_2 < v_3`, `delta(v_1, v_2) != delta(v_2, v_3)`, and along any increasing chain
//! `delta(v_1, v_t)` is the maximum of the consecutive deltas. An output edge
//! `v_1 < .. < v_{k+1}` is colored from its delta sequence `delta_i = delta(v_i, v_{i+1})`.

use alloc::format;
use alloc::vec::Vec;

use crate::combin::binomial;
use crate::{ColorSet, Error, Result, SetColoring, MAX_COLORS};

/// Index of the most significant bit where `u` and `v` differ.
///
/// # Panics
/// If `u == v`.
#[inline]
pub fn delta(u: u64, v: u64) -> usize {
    assert_ne!(u, v, "delta is undefined for equal vertices");
    63 - (u ^ v).leading_zeros() as usize
}

/// Shape of a delta sequence, as used by the step-up colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepUpCase {
    Increasing,
    Decreasing,
    /// First direction change is `delta_i < delta_{i+1} > delta_{i+2}`.
    LocalMax,
    /// First direction change is `delta_i > delta_{i+1} < delta_{i+2}`.
    LocalMin,
    /// `delta_3 > delta_1 > delta_2`.
    A,
    /// `delta_1 > delta_3 > delta_2`.
    B,
    /// `delta_2 > max(delta_1, delta_3)`.
    C,
}

/// Which step-up rule labels the tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepUpScheme {
    GraphTo3,
    KStep,
    ThreeTo4,
}

/// Delta sequence of a tuple together with its case label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepUpTrace {
    pub deltas: Vec<usize>,
    pub case: StepUpCase,
}

/// Consecutive deltas of a strictly increasing tuple.
pub fn delta_sequence(tuple: &[u64]) -> Vec<usize> {
    tuple.windows(2).map(|w| delta(w[0], w[1])).collect()
}

/// Increasing/decreasing for monotone sequences, otherwise the type of the first turn.
pub fn classify_k_step(deltas: &[usize]) -> StepUpCase {
    if deltas.windows(2).all(|w| w[0] < w[1]) {
        return StepUpCase::Increasing;
    }
    if deltas.windows(2).all(|w| w[0] > w[1]) {
        return StepUpCase::Decreasing;
    }
    for w in deltas.windows(3) {
        if w[0] < w[1] && w[1] > w[2] {
            return StepUpCase::LocalMax;
        }
        if w[0] > w[1] && w[1] < w[2] {
            return StepUpCase::LocalMin;
        }
    }
    unreachable!("consecutive deltas are distinct, so a non-monotone sequence turns")
}

/// The four-way split used when stepping a 3-uniform coloring up to 4-uniform.
/// Returns `None` for sequences that cannot arise from increasing tuples.
pub fn classify_3_to_4(d: [usize; 3]) -> Option<StepUpCase> {
    let [d1, d2, d3] = d;
    if d1 < d2 && d2 < d3 {
        Some(StepUpCase::Increasing)
    } else if d1 > d2 && d2 > d3 {
        Some(StepUpCase::Decreasing)
    } else if d2 > d1 && d2 > d3 {
        Some(StepUpCase::C)
    } else if d3 > d1 && d1 > d2 {
        Some(StepUpCase::A)
    } else if d1 > d3 && d3 > d2 {
        Some(StepUpCase::B)
    } else {
        None
    }
}

/// Label of one output tuple under a scheme.
pub fn step_up_trace(tuple: &[u64], scheme: StepUpScheme) -> Option<StepUpTrace> {
    let deltas = delta_sequence(tuple);
    let case = match scheme {
        StepUpScheme::GraphTo3 | StepUpScheme::KStep => classify_k_step(&deltas),
        StepUpScheme::ThreeTo4 => classify_3_to_4(deltas.as_slice().try_into().ok()?)?,
    };
    Some(StepUpTrace { deltas, case })
}

/// Size caps for step-up outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepUpLimits {
    pub max_output_edges: u128,
}

impl Default for StepUpLimits {
    fn default() -> Self {
        StepUpLimits {
            max_output_edges: 1 << 22,
        }
    }
}

fn output_vertices(base: &SetColoring, limits: StepUpLimits) -> Result<usize> {
    let n = base.num_vertices();
    let k = base.uniformity() + 1;
    let too_big = |size| Error::ResourceLimit {
        what: "step-up output edges",
        size,
        limit: limits.max_output_edges,
    };
    if n >= 40 {
        return Err(too_big(u128::MAX));
    }
    let vertices = 1usize << n;
    let edges = binomial(vertices as u64, k as u64).unwrap_or(u128::MAX);
    if edges > limits.max_output_edges {
        return Err(too_big(edges));
    }
    Ok(vertices)
}

fn check_set(set: ColorSet, name: &str, r: usize, s: usize) -> Result<()> {
    if set.len() != s || set.max().is_some_and(|c| c >= r) {
        return Err(Error::Precondition(format!(
            "{name} = {set:?} must be an {s}-subset of 0..{r}"
        )));
    }
    Ok(())
}

/// Graph to 3-uniform: `{u < v < w}` gets `chi(delta(u,v), delta(v,w))` when the deltas
/// increase and the same set shifted by `r` when they decrease. Palette `2r`, same `s`.
/// No monochromatic `K_n` in the base means none of size `n+1` in the output.
pub fn step_up_graph_to_3(base: &SetColoring, limits: StepUpLimits) -> Result<SetColoring> {
    if base.uniformity() != 2 {
        return Err(Error::Precondition(
            "graph step-up needs a 2-uniform base".into(),
        ));
    }
    let r = base.num_colors();
    if 2 * r > MAX_COLORS {
        return Err(Error::PaletteOverflow { colors: 2 * r });
    }
    let vertices = output_vertices(base, limits)?;
    SetColoring::from_fn(
        3,
        vertices,
        2 * r,
        base.colors_per_edge(),
        base.is_slack(),
        |e| {
            let d1 = delta(e[0] as u64, e[1] as u64);
            let d2 = delta(e[1] as u64, e[2] as u64);
            let set = base.pair(d1, d2);
            if d1 < d2 {
                set
            } else {
                ColorSet(set.0 << r)
            }
        },
    )
}

/// `D1 = {0..s-1}`, `D2 = {s..2s-1}`.
pub fn default_d1_d2(r: usize, s: usize) -> Result<(ColorSet, ColorSet)> {
    if 2 * s > r {
        return Err(Error::Precondition(format!(
            "need s <= r/2, got r={r}, s={s}"
        )));
    }
    Ok((ColorSet::prefix(s), ColorSet::range(s, s)))
}

/// k-uniform to (k+1)-uniform for `k >= 3` and `s <= r/2`: monotone delta sequences take
/// the base color of `{delta_1, .., delta_k}`; otherwise the first turn decides between
/// the fixed disjoint sets `D1` (local maximum) and `D2` (local minimum).
pub fn step_up_k(
    base: &SetColoring,
    d1: ColorSet,
    d2: ColorSet,
    limits: StepUpLimits,
) -> Result<SetColoring> {
    let k = base.uniformity();
    if k < 3 {
        return Err(Error::Precondition(
            "this step-up needs a base of uniformity >= 3".into(),
        ));
    }
    let (r, s) = (base.num_colors(), base.colors_per_edge());
    if 2 * s > r {
        return Err(Error::Precondition(format!(
            "need s <= r/2, got r={r}, s={s}"
        )));
    }
    check_set(d1, "D1", r, s)?;
    check_set(d2, "D2", r, s)?;
    if !d1.intersection(d2).is_empty() {
        return Err(Error::Precondition("D1 and D2 must be disjoint".into()));
    }
    let vertices = output_vertices(base, limits)?;
    let mut deltas = alloc::vec![0usize; k];
    SetColoring::from_fn(k + 1, vertices, r, s, base.is_slack(), |e| {
        for (slot, w) in deltas.iter_mut().zip(e.windows(2)) {
            *slot = delta(w[0] as u64, w[1] as u64);
        }
        match classify_k_step(&deltas) {
            StepUpCase::Increasing => base.colors_of_sorted(&deltas),
            StepUpCase::Decreasing => base.colors(&deltas),
            StepUpCase::LocalMax => d1,
            _ => d2,
        }
    })
}

/// `A` = first `s` colors, `B` = last `s` colors, `C` = least `s`-set avoiding `A ∩ B`.
/// Admissible whenever `3s <= 2r`.
pub fn default_abc(r: usize, s: usize) -> Result<(ColorSet, ColorSet, ColorSet)> {
    if 3 * s > 2 * r || s > r {
        return Err(Error::Precondition(format!(
            "need s <= 2r/3, got r={r}, s={s}"
        )));
    }
    let a = ColorSet::prefix(s);
    let b = ColorSet::range(r - s, s);
    let both = a.intersection(b);
    let c = ColorSet::from_colors((0..r).filter(|&x| !both.contains(x)).take(s));
    Ok((a, b, c))
}

/// 3-uniform to 4-uniform for `s <= 2r/3`: monotone delta sequences take the base color
/// of `{delta_1, delta_2, delta_3}`; the other patterns get `A`, `B` or `C` (see
/// [`StepUpCase`]), where `A ∩ B ∩ C` is empty. No monochromatic `K_n` in the base means
/// none of size `2n^2` in the output.
pub fn step_up_3_to_4(
    base: &SetColoring,
    a: ColorSet,
    b: ColorSet,
    c: ColorSet,
    limits: StepUpLimits,
) -> Result<SetColoring> {
    if base.uniformity() != 3 {
        return Err(Error::Precondition(
            "this step-up needs a 3-uniform base".into(),
        ));
    }
    let (r, s) = (base.num_colors(), base.colors_per_edge());
    if 3 * s > 2 * r {
        return Err(Error::Precondition(format!(
            "need s <= 2r/3, got r={r}, s={s}"
        )));
    }
    check_set(a, "A", r, s)?;
    check_set(b, "B", r, s)?;
    check_set(c, "C", r, s)?;
    if !a.intersection(b).intersection(c).is_empty() {
        return Err(Error::Precondition(
            "A, B and C must have empty common intersection".into(),
        ));
    }
    let vertices = output_vertices(base, limits)?;
    SetColoring::from_fn(4, vertices, r, s, base.is_slack(), |e| {
        let d = [
            delta(e[0] as u64, e[1] as u64),
            delta(e[1] as u64, e[2] as u64),
            delta(e[2] as u64, e[3] as u64),
        ];
        match classify_3_to_4(d) {
            Some(StepUpCase::Increasing) => base.colors_of_sorted(&d),
            Some(StepUpCase::Decreasing) => base.colors(&d),
            Some(StepUpCase::A) => a,
            Some(StepUpCase::B) => b,
            Some(StepUpCase::C) => c,
            _ => unreachable!("increasing 4-tuples always classify"),
        }
    })
}
