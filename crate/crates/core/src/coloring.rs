//! Set-colorings of complete k-uniform hypergraphs.
//!
//! Edges are stored densely, indexed by the colexicographic rank of their sorted vertex
//! tuple. Color sets are bitmasks over a palette of at most [`MAX_COLORS`] colors.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::combin::{binomial, ColexSubsets, RankTable};
use crate::{Error, Result};

/// Largest supported palette.
pub const MAX_COLORS: usize = 128;

/// A set of colors from `0..128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(pub u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_colors(colors: impl IntoIterator<Item = usize>) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in colors {
            set.insert(c);
        }
        set
    }

    /// `{0, 1, .., len-1}`.
    pub fn prefix(len: usize) -> Self {
        ColorSet::range(0, len)
    }

    /// `{start, .., start+len-1}`.
    pub fn range(start: usize, len: usize) -> Self {
        if len == 0 {
            return ColorSet::EMPTY;
        }
        let mask = if len >= 128 {
            u128::MAX
        } else {
            (1u128 << len) - 1
        };
        ColorSet(mask << start)
    }

    #[inline]
    pub fn insert(&mut self, color: usize) {
        self.0 |= 1u128 << color;
    }

    #[inline]
    pub fn remove(&mut self, color: usize) {
        self.0 &= !(1u128 << color);
    }

    #[inline]
    pub fn contains(self, color: usize) -> bool {
        color < 128 && (self.0 >> color) & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The `count` smallest colors of the set.
    pub fn smallest(self, count: usize) -> ColorSet {
        let mut out = ColorSet::EMPTY;
        for c in self.iter().take(count) {
            out.insert(c);
        }
        out
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(t)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// One way a coloring breaks its declared shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongSize {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },
    TooFewColors {
        edge: Vec<usize>,
        minimum: usize,
        found: usize,
    },
    ColorOutOfRange {
        edge: Vec<usize>,
        color: usize,
    },
}

impl Violation {
    pub fn edge(&self) -> &[usize] {
        match self {
            Violation::WrongSize { edge, .. }
            | Violation::TooFewColors { edge, .. }
            | Violation::ColorOutOfRange { edge, .. } => edge,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A set-coloring of the complete `k`-uniform hypergraph on `N` vertices.
///
/// Every edge carries a subset of `0..r`. A non-slack coloring has exactly `s` colors on
/// each edge; a slack one has at least `s`. Shape is checked on construction, color
/// contents by [`SetColoring::validate`].
#[derive(Clone, PartialEq, Eq)]
pub struct SetColoring {
    uniformity: usize,
    num_vertices: usize,
    num_colors: usize,
    colors_per_edge: usize,
    slack: bool,
    edges: Vec<ColorSet>,
    ranks: RankTable,
}

impl fmt::Debug for SetColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetColoring")
            .field("k", &self.uniformity)
            .field("N", &self.num_vertices)
            .field("r", &self.num_colors)
            .field("s", &self.colors_per_edge)
            .field("slack", &self.slack)
            .field("edges", &self.edges)
            .finish()
    }
}

fn check_shape(k: usize, n_vertices: usize, r: usize, s: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("uniformity {k} < 2")));
    }
    if n_vertices < k {
        return Err(Error::InvalidParameters(format!(
            "{n_vertices} vertices is fewer than the uniformity {k}"
        )));
    }
    if r > MAX_COLORS {
        return Err(Error::PaletteOverflow { colors: r });
    }
    if r == 0 || s == 0 || s > r {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= s <= r, got r={r}, s={s}"
        )));
    }
    let count = binomial(n_vertices as u64, k as u64)
        .filter(|&c| c <= (usize::MAX / 32) as u128)
        .ok_or(Error::ResourceLimit {
            what: "edge count",
            size: u128::MAX,
            limit: (usize::MAX / 32) as u128,
        })?;
    Ok(count as usize)
}

impl SetColoring {
    /// Builds a coloring from edge color sets listed in colex edge order.
    pub fn from_edges(
        k: usize,
        n_vertices: usize,
        r: usize,
        s: usize,
        slack: bool,
        edges: Vec<ColorSet>,
    ) -> Result<Self> {
        let count = check_shape(k, n_vertices, r, s)?;
        if edges.len() != count {
            return Err(Error::LengthMismatch {
                left: edges.len(),
                right: count,
            });
        }
        Ok(SetColoring {
            uniformity: k,
            num_vertices: n_vertices,
            num_colors: r,
            colors_per_edge: s,
            slack,
            edges,
            ranks: RankTable::new(n_vertices, k),
        })
    }

    /// Builds a coloring by evaluating `f` on every sorted k-subset, in colex order.
    pub fn from_fn(
        k: usize,
        n_vertices: usize,
        r: usize,
        s: usize,
        slack: bool,
        mut f: impl FnMut(&[usize]) -> ColorSet,
    ) -> Result<Self> {
        let count = check_shape(k, n_vertices, r, s)?;
        let mut edges = Vec::with_capacity(count);
        for e in ColexSubsets::new(n_vertices, k) {
            edges.push(f(&e));
        }
        SetColoring::from_edges(k, n_vertices, r, s, slack, edges)
    }

    /// Every edge gets the same color set.
    pub fn constant(k: usize, n_vertices: usize, r: usize, colors: ColorSet) -> Result<Self> {
        SetColoring::from_fn(k, n_vertices, r, colors.len().max(1), false, |_| colors)
    }

    /// Uniformly random `s`-subset on every edge.
    pub fn random<R: Rng + ?Sized>(
        k: usize,
        n_vertices: usize,
        r: usize,
        s: usize,
        rng: &mut R,
    ) -> Result<Self> {
        let mut palette: Vec<usize> = (0..r).collect();
        SetColoring::from_fn(k, n_vertices, r, s, false, |_| {
            // partial Fisher-Yates
            for i in 0..s {
                let j = rng.gen_range(i..r);
                palette.swap(i, j);
            }
            ColorSet::from_colors(palette[..s].iter().copied())
        })
    }

    /// The 2-coloring of `K_5` whose color classes are the pentagon `i ~ i+1` (color 0)
    /// and the pentagram (color 1). It has no monochromatic triangle.
    pub fn pentagon() -> Self {
        SetColoring::from_fn(2, 5, 2, 1, false, |e| {
            let gap = e[1] - e[0];
            if gap == 1 || gap == 4 {
                ColorSet::from_colors([0])
            } else {
                ColorSet::from_colors([1])
            }
        })
        .expect("fixed shape")
    }

    #[inline]
    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    #[inline]
    pub fn colors_per_edge(&self) -> usize {
        self.colors_per_edge
    }

    #[inline]
    pub fn is_slack(&self) -> bool {
        self.slack
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Color sets in colex edge order.
    pub fn edge_sets(&self) -> &[ColorSet] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vec<usize>, ColorSet)> + '_ {
        ColexSubsets::new(self.num_vertices, self.uniformity).zip(self.edges.iter().copied())
    }

    /// Colors of a sorted edge.
    #[inline]
    pub fn colors_of_sorted(&self, edge: &[usize]) -> ColorSet {
        debug_assert_eq!(edge.len(), self.uniformity);
        self.edges[self.ranks.rank(edge)]
    }

    /// Colors of an edge given in any vertex order.
    pub fn colors(&self, edge: &[usize]) -> ColorSet {
        assert_eq!(
            edge.len(),
            self.uniformity,
            "edge size must equal the uniformity"
        );
        self.edges[self.ranks.rank_unsorted(edge)]
    }

    /// Graph shorthand for `colors(&[u, v])`.
    #[inline]
    pub fn pair(&self, u: usize, v: usize) -> ColorSet {
        debug_assert_eq!(self.uniformity, 2);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges[a + b * (b.saturating_sub(1)) / 2]
    }

    /// Number of edges whose set contains `color`.
    pub fn color_count(&self, color: usize) -> usize {
        self.edges.iter().filter(|c| c.contains(color)).count()
    }

    /// Checks set sizes and color ranges against the declared `(r, s, slack)`.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let palette = ColorSet::prefix(self.num_colors);
        for (edge, set) in self.edges() {
            if !set.is_subset(palette) {
                let color = set
                    .iter()
                    .find(|&c| c >= self.num_colors)
                    .unwrap_or(self.num_colors);
                violations.push(Violation::ColorOutOfRange {
                    edge: edge.clone(),
                    color,
                });
            }
            let found = set.len();
            if self.slack {
                if found < self.colors_per_edge {
                    violations.push(Violation::TooFewColors {
                        edge,
                        minimum: self.colors_per_edge,
                        found,
                    });
                }
            } else if found != self.colors_per_edge {
                violations.push(Violation::WrongSize {
                    edge,
                    expected: self.colors_per_edge,
                    found,
                });
            }
        }
        ValidationReport { violations }
    }

    /// Keeps the `s` smallest colors of every edge; the result is non-slack.
    pub fn trim_to_exact(&self) -> Result<SetColoring> {
        let s = self.colors_per_edge;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (edge, set) in self.edges() {
            if set.len() < s {
                return Err(Error::TooFewColors {
                    edge,
                    found: set.len(),
                    required: s,
                });
            }
            edges.push(set.smallest(s));
        }
        SetColoring::from_edges(
            self.uniformity,
            self.num_vertices,
            self.num_colors,
            s,
            false,
            edges,
        )
    }

    /// Replaces color `i` by the block `t*i .. t*i+t-1`, giving a `(t*r, t*s)`-coloring.
    pub fn duplicate_colors(&self, t: usize) -> Result<SetColoring> {
        if t == 0 {
            return Err(Error::Precondition(
                "duplication factor must be >= 1".into(),
            ));
        }
        let r = self.num_colors * t;
        if r > MAX_COLORS {
            return Err(Error::PaletteOverflow { colors: r });
        }
        let edges = self
            .edges
            .iter()
            .map(|set| {
                set.iter().fold(ColorSet::EMPTY, |acc, c| {
                    acc.union(ColorSet::range(c * t, t))
                })
            })
            .collect();
        SetColoring::from_edges(
            self.uniformity,
            self.num_vertices,
            r,
            self.colors_per_edge * t,
            self.slack,
            edges,
        )
    }

    /// Drops color `dropped` from the palette, giving an `(r-1, s-1)`-coloring.
    ///
    /// Edges carrying `dropped` lose it; every other edge loses its largest color.
    /// Colors above `dropped` shift down by one.
    pub fn delete_color(&self, dropped: usize) -> Result<SetColoring> {
        if self.colors_per_edge < 2 {
            return Err(Error::Precondition(
                "deleting a color needs at least 2 colors per edge".into(),
            ));
        }
        if dropped >= self.num_colors {
            return Err(Error::Precondition(format!(
                "color {dropped} is outside the palette of {}",
                self.num_colors
            )));
        }
        let low = ColorSet::prefix(dropped);
        let edges = self
            .edges
            .iter()
            .map(|&set| {
                let mut set = set;
                if set.contains(dropped) {
                    set.remove(dropped);
                } else if let Some(top) = set.max() {
                    set.remove(top);
                }
                let below = set.intersection(low);
                let above = ColorSet((set.0 & !low.0) >> 1);
                below.union(above)
            })
            .collect();
        SetColoring::from_edges(
            self.uniformity,
            self.num_vertices,
            self.num_colors - 1,
            self.colors_per_edge - 1,
            self.slack,
            edges,
        )
    }

    /// The sub-coloring induced on `vertices` (sorted, distinct), relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Result<SetColoring> {
        let k = self.uniformity;
        let mut buf = alloc::vec![0usize; k];
        SetColoring::from_fn(
            k,
            vertices.len(),
            self.num_colors,
            self.colors_per_edge,
            self.slack,
            |e| {
                for (slot, &i) in buf.iter_mut().zip(e) {
                    *slot = vertices[i];
                }
                self.colors_of_sorted(&buf)
            },
        )
    }

    /// The coloring restricted to the first `count` vertices.
    pub fn prefix(&self, count: usize) -> Result<SetColoring> {
        if count > self.num_vertices {
            return Err(Error::Precondition(format!(
                "cannot restrict {} vertices to {count}",
                self.num_vertices
            )));
        }
        let len = binomial(count as u64, self.uniformity as u64).unwrap_or(0) as usize;
        // colex order puts every edge inside 0..count first
        SetColoring::from_edges(
            self.uniformity,
            count,
            self.num_colors,
            self.colors_per_edge,
            self.slack,
            self.edges[..len].to_vec(),
        )
    }

    /// Same edges under a different declared palette size or `s` (e.g. after trimming).
    pub fn with_declared(&self, r: usize, s: usize, slack: bool) -> Result<SetColoring> {
        SetColoring::from_edges(
            self.uniformity,
            self.num_vertices,
            r,
            s,
            slack,
            self.edges.clone(),
        )
    }
}
