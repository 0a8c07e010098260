//! q-ary block codes, their size bounds, and the translation between codes and
//! set-colorings whose color classes are multipartite.
//!
//! A code of length `r` over `q = n-1` symbols with distance `s` is the same thing as an
//! `(r, s)`-coloring in which every color class is `(n-1)`-partite: vertex `v` gets
//! codeword `x(v)` where `x_i(v)` is the part of `v` in the `i`-th partition, and edge
//! `uv` gets color `i` exactly when `x_i(u) != x_i(v)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::bitset::BitSet;
use crate::clique::{Budget, Meter};
use crate::combin::binomial_big;
use crate::{ColorSet, Error, Result, SetColoring};

pub type Word = Vec<u32>;

/// Default cap on `q^m` for enumerative constructions.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 24;

/// A set of distinct length-`m` words over `0..q` with pairwise distance at least
/// `claimed_distance`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    alphabet_size: u32,
    length: usize,
    claimed_distance: usize,
    words: Vec<Word>,
}

impl Code {
    /// Checks every invariant, including the pairwise distances.
    pub fn new(
        alphabet_size: u32,
        length: usize,
        claimed_distance: usize,
        words: Vec<Word>,
    ) -> Result<Code> {
        if alphabet_size < 2 || length == 0 || claimed_distance == 0 || claimed_distance > length {
            return Err(Error::InvalidParameters(format!(
                "code needs q >= 2 and 1 <= d <= m, got q={alphabet_size}, m={length}, d={claimed_distance}"
            )));
        }
        for w in &words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: length,
                });
            }
            if let Some(&sym) = w.iter().find(|&&x| x >= alphabet_size) {
                return Err(Error::InvalidParameters(format!(
                    "symbol {sym} outside alphabet of size {alphabet_size}"
                )));
            }
        }
        let code = Code {
            alphabet_size,
            length,
            claimed_distance,
            words,
        };
        if let Some((i, j)) = code.distance_violation() {
            return Err(Error::InvalidParameters(format!(
                "words {i} and {j} are at distance {} < {claimed_distance}",
                hamming(&code.words[i], &code.words[j])
            )));
        }
        Ok(code)
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn claimed_distance(&self) -> usize {
        self.claimed_distance
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Actual minimum pairwise distance (`None` for fewer than two words).
    pub fn min_distance(&self) -> Option<usize> {
        let mut best = None;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = hamming(u, v);
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
        best
    }

    /// A pair of word indices closer than the claimed distance, if any. Identical
    /// words count as distance 0.
    ///
    /// Compares all pairs when that is cheap; otherwise probes the Hamming ball of
    /// radius `d-1` around every word against a sorted index of the code.
    pub fn distance_violation(&self) -> Option<(usize, usize)> {
        let d = self.claimed_distance;
        let pairs = (self.words.len() as u128).pow(2) / 2;
        let ball = ball_volume(
            self.alphabet_size as u64,
            self.length as u64,
            (d - 1) as u64,
        );
        let probe_cost = BigUint::from(self.words.len()) * &ball;
        let fits_u64 = (self.alphabet_size as u64)
            .checked_pow(self.length as u32)
            .is_some();
        if !fits_u64 || BigUint::from(pairs) <= probe_cost {
            for (i, u) in self.words.iter().enumerate() {
                for (j, v) in self.words.iter().enumerate().skip(i + 1) {
                    if hamming(u, v) < d {
                        return Some((i, j));
                    }
                }
            }
            return None;
        }
        let q = self.alphabet_size;
        let mut index: Vec<(u64, usize)> = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (word_to_index(w, q), i))
            .collect();
        index.sort_unstable();
        if let Some(pair) = index.windows(2).find(|p| p[0].0 == p[1].0) {
            return Some((pair[0].1.min(pair[1].1), pair[0].1.max(pair[1].1)));
        }
        let mut found = None;
        for (i, w) in self.words.iter().enumerate() {
            let mut probe = w.clone();
            for_each_in_ball(&mut probe, q, d - 1, 0, &mut |x| {
                if found.is_some() || x == w.as_slice() {
                    return;
                }
                let key = word_to_index(x, q);
                if let Ok(pos) = index.binary_search_by(|e| e.0.cmp(&key)) {
                    let j = index[pos].1;
                    found = Some((i.min(j), i.max(j)));
                }
            });
            if found.is_some() {
                break;
            }
        }
        found
    }

    /// True when no word of `[q]^m` can be added without breaking the distance.
    pub fn is_maximal(&self) -> bool {
        let q = self.alphabet_size;
        let total = (q as u64).pow(self.length as u32);
        (0..total).all(|idx| {
            let w = index_to_word(idx, q, self.length);
            self.words
                .iter()
                .any(|c| hamming(c, &w) < self.claimed_distance)
        })
    }
}

#[inline]
fn hamming(u: &[u32], v: &[u32]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

/// Number of coordinates where `u` and `v` differ.
pub fn hamming_distance(u: &[u32], v: &[u32]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(hamming(u, v))
}

/// Words of `[q]^m` are indexed lexicographically: the first coordinate is the most
/// significant base-`q` digit.
pub fn word_to_index(w: &[u32], q: u32) -> u64 {
    w.iter().fold(0u64, |acc, &x| acc * q as u64 + x as u64)
}

pub fn index_to_word(mut idx: u64, q: u32, m: usize) -> Word {
    let mut w = vec![0u32; m];
    for slot in w.iter_mut().rev() {
        *slot = (idx % q as u64) as u32;
        idx /= q as u64;
    }
    w
}

/// Calls `f` on every word within distance `radius` of `w`, changing only positions
/// `>= from`. `w` is restored afterwards.
fn for_each_in_ball(w: &mut Word, q: u32, radius: usize, from: usize, f: &mut impl FnMut(&[u32])) {
    f(w);
    if radius == 0 {
        return;
    }
    for pos in from..w.len() {
        let original = w[pos];
        for sym in 0..q {
            if sym != original {
                w[pos] = sym;
                for_each_in_ball(w, q, radius - 1, pos + 1, f);
            }
        }
        w[pos] = original;
    }
}

/// Volume of a Hamming ball: `sum_{i <= radius} C(m, i) (q-1)^i`.
pub fn ball_volume(q: u64, m: u64, radius: u64) -> BigUint {
    let radius = radius.min(m);
    let base = BigUint::from(q.saturating_sub(1));
    (0..=radius).fold(BigUint::zero(), |acc, i| {
        acc + binomial_big(m, i) * num_traits::pow(base.clone(), i as usize)
    })
}

/// Gilbert–Varshamov: `ceil(q^m / B(d-1))`.
pub fn gv_lower_bound(q: u64, m: u64, d: u64) -> BigUint {
    let total = num_traits::pow(BigUint::from(q), m as usize);
    let ball = ball_volume(q, m, d.saturating_sub(1));
    Integer::div_ceil(&total, &ball)
}

/// Singleton: `q^(m-d+1)`.
pub fn singleton_bound(q: u64, m: u64, d: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), (m + 1).saturating_sub(d) as usize)
}

fn check_code_params(q: u32, m: usize, d: usize, limit: u64) -> Result<u64> {
    if q < 2 || m == 0 || d == 0 || d > m {
        return Err(Error::InvalidParameters(format!(
            "need q >= 2 and 1 <= d <= m, got q={q}, m={m}, d={d}"
        )));
    }
    let total = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > limit as u128 {
        return Err(Error::ResourceLimit {
            what: "q^m",
            size: total,
            limit: limit as u128,
        });
    }
    Ok(total as u64)
}

/// Greedy (lexicographic) code: scan `[q]^m` in order, keeping each word at distance
/// `>= d` from all words kept so far. The result is maximal and meets the
/// Gilbert–Varshamov bound.
pub fn greedy_gv_code(q: u32, m: usize, d: usize, limit: u64) -> Result<Code> {
    let total = check_code_params(q, m, d, limit)?;
    greedy_gv_code_in_order(q, m, d, 0..total, limit)
}

/// Greedy code over a caller-supplied scan order of word indices (see
/// [`word_to_index`]). Repeated or out-of-range indices are ignored. The result is
/// maximal only if `order` visits every word.
pub fn greedy_gv_code_in_order(
    q: u32,
    m: usize,
    d: usize,
    order: impl IntoIterator<Item = u64>,
    limit: u64,
) -> Result<Code> {
    let total = check_code_params(q, m, d, limit)?;
    let mut blocked = vec![false; total as usize];
    let mut words = Vec::new();
    for idx in order {
        if idx >= total || blocked[idx as usize] {
            continue;
        }
        let mut w = index_to_word(idx, q, m);
        for_each_in_ball(&mut w, q, d - 1, 0, &mut |x| {
            blocked[word_to_index(x, q) as usize] = true;
        });
        words.push(w);
    }
    Ok(Code {
        alphabet_size: q,
        length: m,
        claimed_distance: d,
        words,
    })
}

/// How much is known about `A_q(m, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeSizeBound {
    /// A code of this size was constructed; the true value may be larger.
    Constructed(usize),
    /// An exhaustive search proved this is the maximum.
    Certified(usize),
}

impl CodeSizeBound {
    pub fn value(self) -> usize {
        match self {
            CodeSizeBound::Constructed(v) | CodeSizeBound::Certified(v) => v,
        }
    }
}

/// Exact `A_q(m, d)` by maximum-clique search on the graph of words at distance `>= d`.
///
/// Translating a code by a fixed word preserves distances, so the search assumes the
/// all-zero word is in the code. Only feasible for `q^m <= 4096`.
pub fn exhaustive_max_code(q: u32, m: usize, d: usize, budget: Budget) -> Result<usize> {
    let total = check_code_params(q, m, d, 4096)? as usize;
    let words: Vec<Word> = (0..total as u64).map(|i| index_to_word(i, q, m)).collect();
    let mut adj = vec![BitSet::new(total); total];
    for i in 0..total {
        for j in i + 1..total {
            if hamming(&words[i], &words[j]) >= d {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut meter = Meter::new(budget);
    let mut best = 1usize;
    let cand = adj[0].clone();
    max_clique_size(&adj, 1, cand, &mut best, &mut meter)?;
    Ok(best)
}

fn max_clique_size(
    adj: &[BitSet],
    size: usize,
    cand: BitSet,
    best: &mut usize,
    meter: &mut Meter,
) -> Result<()> {
    if size > *best {
        *best = size;
    }
    let mut remaining = cand.count();
    for v in cand.iter() {
        if size + remaining <= *best {
            break;
        }
        remaining -= 1;
        meter.tick()?;
        let mut next = cand.intersection(&adj[v]);
        next.clear_through(v);
        max_clique_size(adj, size + 1, next, best, meter)?;
    }
    Ok(())
}

/// Best available statement about `A_q(m, d)`: certified when the exhaustive search
/// finishes within `budget`, otherwise the greedy construction's size.
pub fn code_size_bound(q: u32, m: usize, d: usize, budget: Budget) -> Result<CodeSizeBound> {
    let small = (q as u128).checked_pow(m as u32).is_some_and(|t| t <= 4096);
    if small {
        match exhaustive_max_code(q, m, d, budget) {
            Ok(v) => return Ok(CodeSizeBound::Certified(v)),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    greedy_gv_code(q, m, d, DEFAULT_ENUMERATION_LIMIT).map(|c| CodeSizeBound::Constructed(c.len()))
}

/// `r` partitions of `num_vertices` vertices, each into at most `parts_per_partition`
/// labelled parts. `assignment[i][v]` is the part of `v` in partition `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFamily {
    pub num_vertices: usize,
    pub parts_per_partition: usize,
    pub assignment: Vec<Vec<u32>>,
}

impl PartitionFamily {
    pub fn new(
        num_vertices: usize,
        parts_per_partition: usize,
        assignment: Vec<Vec<u32>>,
    ) -> Result<Self> {
        for (i, labels) in assignment.iter().enumerate() {
            if labels.len() != num_vertices {
                return Err(Error::LengthMismatch {
                    left: labels.len(),
                    right: num_vertices,
                });
            }
            if labels.iter().any(|&l| l as usize >= parts_per_partition) {
                return Err(Error::InvalidParameters(format!(
                    "partition {i} uses a label outside 0..{parts_per_partition}"
                )));
            }
        }
        Ok(PartitionFamily {
            num_vertices,
            parts_per_partition,
            assignment,
        })
    }

    pub fn num_partitions(&self) -> usize {
        self.assignment.len()
    }

    /// Number of distinct labels actually used by partition `i`.
    pub fn parts_used(&self, i: usize) -> usize {
        let mut seen = vec![false; self.parts_per_partition];
        for &l in &self.assignment[i] {
            seen[l as usize] = true;
        }
        seen.iter().filter(|&&x| x).count()
    }
}

/// The complete graph on the codewords; edge `uv` gets color `i` for every coordinate
/// where the words differ. Slack, with `s` = the claimed distance.
pub fn code_to_coloring(code: &Code) -> Result<SetColoring> {
    if code.len() < 2 {
        return Err(Error::Precondition(
            "a code coloring needs at least two words".into(),
        ));
    }
    SetColoring::from_fn(
        2,
        code.len(),
        code.length(),
        code.claimed_distance(),
        true,
        |e| {
            let (u, v) = (&code.words[e[0]], &code.words[e[1]]);
            ColorSet::from_colors((0..u.len()).filter(|&i| u[i] != v[i]))
        },
    )
}

/// Partition `i` groups vertices by the `i`-th coordinate of their codeword.
pub fn code_partition_family(code: &Code) -> PartitionFamily {
    let assignment = (0..code.length())
        .map(|i| code.words.iter().map(|w| w[i]).collect())
        .collect();
    PartitionFamily {
        num_vertices: code.len(),
        parts_per_partition: code.alphabet_size() as usize,
        assignment,
    }
}

/// Result of trying to split every color class into independent sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionOutcome {
    Partitioned(PartitionFamily),
    /// The class of this color provably needs more parts.
    NotPartite {
        color: usize,
    },
}

/// Splits each color class of a graph coloring into at most `parts` independent sets,
/// greedily first and by exhaustive backtracking when greedy needs too many parts.
pub fn partition_color_classes(
    c: &SetColoring,
    parts: usize,
    budget: Budget,
) -> Result<PartitionOutcome> {
    if c.uniformity() != 2 {
        return Err(Error::Precondition(
            "color classes can only be partitioned for graphs".into(),
        ));
    }
    if parts == 0 {
        return Err(Error::Precondition("need at least one part".into()));
    }
    let n = c.num_vertices();
    let mut meter = Meter::new(budget);
    let mut assignment = Vec::with_capacity(c.num_colors());
    for color in 0..c.num_colors() {
        let mut adj = vec![BitSet::new(n); n];
        for (e, set) in c.edges() {
            if set.contains(color) {
                adj[e[0]].insert(e[1]);
                adj[e[1]].insert(e[0]);
            }
        }
        match color_class(&adj, parts, &mut meter)? {
            Some(labels) => assignment.push(labels),
            None => return Ok(PartitionOutcome::NotPartite { color }),
        }
    }
    Ok(PartitionOutcome::Partitioned(PartitionFamily {
        num_vertices: n,
        parts_per_partition: parts,
        assignment,
    }))
}

/// Proper vertex coloring with at most `parts` colors, or `None` if none exists.
fn color_class(adj: &[BitSet], parts: usize, meter: &mut Meter) -> Result<Option<Vec<u32>>> {
    let n = adj.len();
    let mut greedy = vec![0u32; n];
    let mut fits = true;
    for v in 0..n {
        let used: Vec<u32> = adj[v]
            .iter()
            .filter(|&u| u < v)
            .map(|u| greedy[u])
            .collect();
        let label = (0u32..).find(|l| !used.contains(l)).unwrap();
        if label as usize >= parts {
            fits = false;
            break;
        }
        greedy[v] = label;
    }
    if fits {
        return Ok(Some(greedy));
    }
    // highest degree first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(adj[v].count()), v));
    let mut labels = vec![u32::MAX; n];
    if backtrack_color(adj, &order, 0, parts, 0, &mut labels, meter)? {
        Ok(Some(labels))
    } else {
        Ok(None)
    }
}

fn backtrack_color(
    adj: &[BitSet],
    order: &[usize],
    at: usize,
    parts: usize,
    used: usize,
    labels: &mut [u32],
    meter: &mut Meter,
) -> Result<bool> {
    let Some(&v) = order.get(at) else {
        return Ok(true);
    };
    // a fresh label is only ever the next unused one
    for label in 0..parts.min(used + 1) {
        meter.tick()?;
        if adj[v].iter().any(|u| labels[u] == label as u32) {
            continue;
        }
        labels[v] = label as u32;
        if backtrack_color(
            adj,
            order,
            at + 1,
            parts,
            used.max(label + 1),
            labels,
            meter,
        )? {
            return Ok(true);
        }
        labels[v] = u32::MAX;
    }
    Ok(false)
}

/// Reads off codeword `x(v) = (x_1(v), .., x_r(v))` from the partition family. Any two
/// vertices differ in every coordinate of a color on their edge, so the code has
/// distance at least `s`.
pub fn coloring_to_code(c: &SetColoring, pf: &PartitionFamily) -> Result<Code> {
    if c.uniformity() != 2 {
        return Err(Error::Precondition(
            "codes come from graph colorings".into(),
        ));
    }
    if pf.num_partitions() != c.num_colors() || pf.num_vertices != c.num_vertices() {
        return Err(Error::Precondition(format!(
            "partition family covers {} colors on {} vertices, coloring has {} colors on {}",
            pf.num_partitions(),
            pf.num_vertices,
            c.num_colors(),
            c.num_vertices()
        )));
    }
    if pf.parts_per_partition < 2 {
        return Err(Error::Precondition(
            "codes need an alphabet of at least 2 symbols".into(),
        ));
    }
    for (e, set) in c.edges() {
        if set.len() < c.colors_per_edge() {
            return Err(Error::TooFewColors {
                edge: e,
                found: set.len(),
                required: c.colors_per_edge(),
            });
        }
        for color in set.iter() {
            let labels = &pf.assignment[color];
            if labels[e[0]] == labels[e[1]] {
                return Err(Error::ImproperPartition {
                    partition: color,
                    u: e[0],
                    v: e[1],
                });
            }
        }
    }
    let words = (0..c.num_vertices())
        .map(|v| pf.assignment.iter().map(|labels| labels[v]).collect())
        .collect();
    Code::new(
        pf.parts_per_partition as u32,
        c.num_colors(),
        c.colors_per_edge(),
        words,
    )
}

/// `ceil(q^m / B(d-1)) <= |code|`, checked exactly.
pub fn meets_gv(code: &Code) -> bool {
    let q = code.alphabet_size() as u64;
    let bound = gv_lower_bound(q, code.length() as u64, code.claimed_distance() as u64);
    BigUint::from(code.len()) >= bound
}
