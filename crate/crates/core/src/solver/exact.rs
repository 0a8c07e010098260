use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{trivial_value, turan_upper, TURAN_SCAN_LIMIT};
use crate::clique::{find_mono_clique, Budget, Meter};
use crate::combin::{binomial, LexSubsets};
use crate::constructions::find_affine_params;
use crate::{ColorSet, Error, Result, SetColoring, MAX_COLORS};

use super::lower::affine_coloring;

/// Largest vertex count the backtracking search handles (one `u64` adjacency row).
pub const MAX_SEARCH_VERTICES: usize = 64;

/// Default cap on `C(r, s)`, the branching factor of the search.
pub const DEFAULT_MAX_COLOR_SETS: u128 = 1 << 12;

/// Default for [`SolveConfig::confirm_nodes`].
pub const DEFAULT_CONFIRM_NODES: u64 = 200_000;

/// Default cap on the number of colorings [`replay_exhaustive`] enumerates.
pub const DEFAULT_REPLAY_LIMIT: u128 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    /// Largest vertex count that is searched.
    pub max_vertices: u64,
    /// Node budget shared by all searches of one run.
    pub budget: Budget,
    pub max_color_sets: u128,
    pub turan_scan_limit: u64,
    /// Nodes spent trying to rule out the Turán vertex count by search before the Turán
    /// certificate is used instead.
    pub confirm_nodes: u64,
}

impl SolveConfig {
    pub fn new(max_vertices: u64, budget: Budget) -> Self {
        SolveConfig {
            max_vertices,
            budget,
            max_color_sets: DEFAULT_MAX_COLOR_SETS,
            turan_scan_limit: TURAN_SCAN_LIMIT,
            confirm_nodes: DEFAULT_CONFIRM_NODES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// `lower == upper`.
    Exact,
    /// A witness beyond the trivial bound was found, or an upper bound is known, but the
    /// two do not meet.
    LowerOnly,
    /// Nothing beyond `R >= n` could be shown.
    Unknown,
}

/// Why `R <= upper` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperCertificate {
    /// Every coloring on `upper` vertices was ruled out by search.
    Exhaustive,
    /// The density condition against `ex(upper, K_n)` holds.
    Turan,
    /// `(r-s) C(n,2) < r`.
    Trivial,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Vertex counts that went through backtracking search.
    pub searched: Vec<u64>,
    pub budget_exhausted: bool,
}

/// Certified interval `lower <= R(n; r, s) <= upper` for graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub n: u64,
    pub r: u64,
    pub s: u64,
    pub k: u64,
    pub status: SolveStatus,
    pub lower: u64,
    pub upper: Option<u64>,
    /// A coloring of `K_{lower-1}` without monochromatic `K_n` (absent when `lower < 3`).
    pub witness: Option<SetColoring>,
    pub upper_certificate: Option<UpperCertificate>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn value(&self) -> Option<u64> {
        (self.status == SolveStatus::Exact).then_some(self.lower)
    }
}

/// `Some(n)` with a witness on `n-1` vertices when `(r-s) C(n,2) < r`.
pub fn trivial_case(n: u64, r: u64, s: u64) -> Option<(u64, Option<SetColoring>)> {
    let value = trivial_value(n, r, s)?;
    Some((value, filler(n, r, s)))
}

/// Any coloring of `K_{n-1}`: too small to hold a `K_n`.
fn filler(n: u64, r: u64, s: u64) -> Option<SetColoring> {
    (n >= 3 && r as usize <= MAX_COLORS)
        .then(|| {
            SetColoring::constant(2, n as usize - 1, r as usize, ColorSet::prefix(s as usize)).ok()
        })
        .flatten()
}

fn check_params(n: u64, r: u64, s: u64) -> Result<()> {
    if n < 2 || s == 0 || s > r || r as usize > MAX_COLORS {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and 1 <= s <= r <= {MAX_COLORS}, got n={n}, r={r}, s={s}"
        )));
    }
    Ok(())
}

/// Computes `R(n; r, s)` for graphs by climbing `N = n, n+1, ..`: each `N` gets a
/// witness from the affine construction when one matches, otherwise from backtracking
/// search. The climb ends when search rules out `N` (exhaustive certificate), when `N`
/// reaches the Turán bound, or when the vertex cap or budget runs out.
pub fn solve_exact(n: u64, r: u64, s: u64, config: SolveConfig) -> Result<SolveResult> {
    check_params(n, r, s)?;
    let mut result = SolveResult {
        n,
        r,
        s,
        k: 2,
        status: SolveStatus::Unknown,
        lower: n,
        upper: None,
        witness: filler(n, r, s),
        upper_certificate: None,
        stats: SearchStats::default(),
    };
    if let Some((value, witness)) = trivial_case(n, r, s) {
        result.status = SolveStatus::Exact;
        result.lower = value;
        result.upper = Some(value);
        result.witness = witness;
        result.upper_certificate = Some(UpperCertificate::Trivial);
        return Ok(result);
    }
    let sets = binomial(r, s).unwrap_or(u128::MAX);
    if sets > config.max_color_sets {
        return Err(Error::ResourceLimit {
            what: "color sets per edge",
            size: sets,
            limit: config.max_color_sets,
        });
    }
    let turan = turan_upper(n, r, s, config.turan_scan_limit)?
        .and_then(|rep| u64::try_from(&rep.value).ok());
    if turan.is_some() {
        result.upper = turan;
        result.upper_certificate = Some(UpperCertificate::Turan);
    }
    let affine = find_affine_params(n, r, s, 1 << 16)
        .map(|p| affine_coloring(&p))
        .transpose()?;
    let mut meter = Meter::new(config.budget);
    let mut vertices = n;
    loop {
        if turan == Some(vertices) {
            // the Turán bound already closes the interval; an exhaustive proof is a bonus
            let mut confirm = Meter::new(Budget::nodes(config.confirm_nodes));
            if vertices as usize <= MAX_SEARCH_VERTICES {
                result.stats.searched.push(vertices);
                let outcome = search_with_meter(
                    n as usize,
                    r as usize,
                    s as usize,
                    vertices as usize,
                    &mut confirm,
                );
                result.stats.nodes += confirm.used();
                if let Ok(None) = outcome {
                    result.upper_certificate = Some(UpperCertificate::Exhaustive);
                }
            }
            break;
        }
        if vertices > config.max_vertices || vertices as usize > MAX_SEARCH_VERTICES {
            break;
        }
        let constructed = match &affine {
            Some(c) if c.num_vertices() as u64 >= vertices => Some(c.prefix(vertices as usize)?),
            _ => None,
        };
        let found = match constructed {
            Some(c) => Some(c),
            None => {
                result.stats.searched.push(vertices);
                match search_with_meter(
                    n as usize,
                    r as usize,
                    s as usize,
                    vertices as usize,
                    &mut meter,
                ) {
                    Ok(found) => found,
                    Err(Error::BudgetExceeded { .. }) => {
                        result.stats.budget_exhausted = true;
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
        };
        match found {
            Some(c) => {
                if find_mono_clique(&c, n as usize, Budget::UNLIMITED)?.is_some() {
                    return Err(Error::InvalidParameters(format!(
                        "internal witness on {vertices} vertices contains a monochromatic K_{n}"
                    )));
                }
                result.lower = vertices + 1;
                result.witness = Some(c);
                vertices += 1;
            }
            None => {
                result.upper = Some(vertices);
                result.upper_certificate = Some(UpperCertificate::Exhaustive);
                break;
            }
        }
    }
    result.stats.nodes += meter.used();
    result.status = if result.upper == Some(result.lower) {
        SolveStatus::Exact
    } else if result.lower > n || result.upper.is_some() {
        SolveStatus::LowerOnly
    } else {
        SolveStatus::Unknown
    };
    Ok(result)
}

/// An `(r, s)`-coloring of `K_vertices` with no monochromatic `K_n`, or `None` when the
/// search proves there is none.
///
/// Edges are assigned in colex order, color sets in lexicographic order. Colors are
/// forced to appear for the first time in increasing order, which loses nothing since
/// renaming colors preserves the absence of monochromatic cliques. A color set is
/// rejected as soon as one of its colors closes a `K_n`.
pub fn search_coloring(
    n: usize,
    r: usize,
    s: usize,
    vertices: usize,
    budget: Budget,
) -> Result<Option<SetColoring>> {
    check_params(n as u64, r as u64, s as u64)?;
    search_with_meter(n, r, s, vertices, &mut Meter::new(budget))
}

fn search_with_meter(
    n: usize,
    r: usize,
    s: usize,
    vertices: usize,
    meter: &mut Meter,
) -> Result<Option<SetColoring>> {
    if vertices > MAX_SEARCH_VERTICES {
        return Err(Error::ResourceLimit {
            what: "search vertices",
            size: vertices as u128,
            limit: MAX_SEARCH_VERTICES as u128,
        });
    }
    if vertices < 2 {
        return Err(Error::InvalidParameters(
            "search needs at least two vertices".into(),
        ));
    }
    if vertices < n {
        return Ok(Some(SetColoring::constant(
            2,
            vertices,
            r,
            ColorSet::prefix(s),
        )?));
    }
    let sets: Vec<u128> = LexSubsets::new(r, s)
        .map(|c| ColorSet::from_colors(c).0)
        .collect();
    let edges: Vec<(usize, usize)> = (1..vertices)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .collect();
    let mut search = Backtrack {
        n,
        vertices,
        sets: &sets,
        edges: &edges,
        assignment: vec![0; edges.len()],
        adj: vec![0; r * vertices],
        meter,
    };
    if !search.assign(0, 0)? {
        return Ok(None);
    }
    let sets = search.assignment.into_iter().map(ColorSet).collect();
    Ok(Some(SetColoring::from_edges(
        2, vertices, r, s, false, sets,
    )?))
}

struct Backtrack<'a> {
    n: usize,
    vertices: usize,
    sets: &'a [u128],
    edges: &'a [(usize, usize)],
    assignment: Vec<u128>,
    /// `adj[c * vertices + v]`: neighbors of `v` in color `c`.
    adj: Vec<u64>,
    meter: &'a mut Meter,
}

impl Backtrack<'_> {
    fn row(&self, color: usize, v: usize) -> u64 {
        self.adj[color * self.vertices + v]
    }

    fn toggle(&mut self, set: u128, a: usize, b: usize) {
        for c in ColorSet(set).iter() {
            self.adj[c * self.vertices + a] ^= 1 << b;
            self.adj[c * self.vertices + b] ^= 1 << a;
        }
    }

    /// Whether `cand` holds a clique of size `need` in `color`.
    fn has_clique(&self, color: usize, cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.has_clique(color, rest & self.row(color, v), need - 1) {
                return true;
            }
        }
        false
    }

    /// Whether every unassigned edge still has `s` colors that close no `K_n`. Colors
    /// only become forbidden as edges are added, so failing this rules out the subtree.
    fn later_edges_colorable(&self, idx: usize) -> bool {
        let r = self.adj.len() / self.vertices;
        let s = self.sets[0].count_ones() as usize;
        self.edges[idx + 1..].iter().all(|&(x, y)| {
            let mut allowed = r;
            for c in 0..r {
                let common = self.row(c, x) & self.row(c, y);
                if self.has_clique(c, common, self.n - 2) {
                    allowed -= 1;
                    if allowed < s {
                        return false;
                    }
                }
            }
            true
        })
    }

    fn assign(&mut self, idx: usize, used: usize) -> Result<bool> {
        let Some(&(a, b)) = self.edges.get(idx) else {
            return Ok(true);
        };
        let seen = ColorSet::prefix(used).0;
        // Try sets whose colors are rarest at the endpoints first; the order does not
        // affect which subtrees are ruled out, only how soon a coloring turns up.
        let load: Vec<u32> = (0..self.adj.len() / self.vertices)
            .map(|c| self.row(c, a).count_ones() + self.row(c, b).count_ones())
            .collect();
        let mut order: Vec<(u32, u128)> = self
            .sets
            .iter()
            .map(|&set| (ColorSet(set).iter().map(|c| load[c]).sum(), set))
            .collect();
        order.sort_by_key(|&(key, _)| key);
        for (_, set) in order {
            let fresh = set & !seen;
            let fresh_count = fresh.count_ones() as usize;
            if fresh != ColorSet::range(used, fresh_count).0 {
                continue;
            }
            self.meter.tick()?;
            let closes = ColorSet(set).iter().any(|c| {
                let common = self.row(c, a) & self.row(c, b);
                self.has_clique(c, common, self.n - 2)
            });
            if closes {
                continue;
            }
            self.toggle(set, a, b);
            self.assignment[idx] = set;
            if self.later_edges_colorable(idx) && self.assign(idx + 1, used + fresh_count)? {
                return Ok(true);
            }
            self.toggle(set, a, b);
        }
        Ok(false)
    }
}

/// Independent check that every `(r, s)`-coloring of `K_vertices` has a monochromatic
/// `K_n`, by enumerating all `C(r,s)^C(vertices,2)` colorings and all `n`-subsets.
/// Shares no code with [`search_coloring`].
pub fn replay_exhaustive(
    n: usize,
    r: usize,
    s: usize,
    vertices: usize,
    limit: u128,
) -> Result<bool> {
    let sets: Vec<Vec<usize>> = LexSubsets::new(r, s).collect();
    let num_edges = vertices * vertices.saturating_sub(1) / 2;
    let total = (sets.len() as u128).checked_pow(num_edges as u32);
    if total.map_or(true, |t| t > limit) {
        return Err(Error::ResourceLimit {
            what: "replayed colorings",
            size: total.unwrap_or(u128::MAX),
            limit,
        });
    }
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        b * (b - 1) / 2 + a
    };
    let groups: Vec<Vec<usize>> = LexSubsets::new(vertices, n).collect();
    let mut digits = vec![0usize; num_edges];
    let mono = |digits: &[usize]| {
        groups.iter().any(|g| {
            (0..r).any(|color| {
                g.iter().enumerate().all(|(i, &u)| {
                    g[i + 1..]
                        .iter()
                        .all(|&v| sets[digits[index(u, v)]].contains(&color))
                })
            })
        })
    };
    loop {
        if !mono(&digits) {
            return Ok(false);
        }
        let mut pos = 0;
        loop {
            if pos == num_edges {
                return Ok(true);
            }
            digits[pos] += 1;
            if digits[pos] < sets.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Re-derives a Turán certificate: builds the balanced `(n-1)`-partite graph on
/// `vertices` vertices, counts its edges directly and checks `s C(N,2) > r ex(N, K_n)`.
pub fn check_turan_certificate(n: u64, r: u64, s: u64, vertices: u64) -> bool {
    if n < 2 || vertices < n {
        return false;
    }
    let parts = n - 1;
    let mut cross: u128 = 0;
    for v in 0..vertices {
        for u in 0..v {
            if u % parts != v % parts {
                cross += 1;
            }
        }
    }
    let pairs = vertices as u128 * (vertices as u128 - 1) / 2;
    s as u128 * pairs > r as u128 * cross
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_triangle() {
        let res = solve_exact(3, 2, 1, SolveConfig::new(10, Budget::UNLIMITED)).unwrap();
        assert_eq!(res.value(), Some(6));
        assert_eq!(res.upper_certificate, Some(UpperCertificate::Exhaustive));
        assert_eq!(res.witness.unwrap().num_vertices(), 5);
        assert!(replay_exhaustive(3, 2, 1, 6, DEFAULT_REPLAY_LIMIT).unwrap());
        assert!(!replay_exhaustive(3, 2, 1, 5, DEFAULT_REPLAY_LIMIT).unwrap());
    }

    #[test]
    fn affine_then_exhaustive() {
        let res = solve_exact(3, 3, 2, SolveConfig::new(6, Budget::UNLIMITED)).unwrap();
        assert_eq!(res.value(), Some(5));
        assert_eq!(res.stats.searched, vec![5]);
        assert_eq!(res.upper_certificate, Some(UpperCertificate::Exhaustive));
        assert!(replay_exhaustive(3, 3, 2, 5, DEFAULT_REPLAY_LIMIT).unwrap());
    }

    #[test]
    fn trivial_shortcut() {
        let res = solve_exact(3, 4, 3, SolveConfig::new(6, Budget::UNLIMITED)).unwrap();
        assert_eq!(res.value(), Some(3));
        assert_eq!(res.upper_certificate, Some(UpperCertificate::Trivial));
    }

    #[test]
    fn turan_closes() {
        let res = solve_exact(4, 4, 3, SolveConfig::new(12, Budget::UNLIMITED)).unwrap();
        assert_eq!(res.value(), Some(10));
        assert!(res.upper_certificate.is_some());
        assert!(check_turan_certificate(4, 4, 3, 10));
        assert!(!check_turan_certificate(4, 4, 3, 9));
    }

    #[test]
    fn budget_is_reported() {
        let res = solve_exact(3, 2, 1, SolveConfig::new(10, Budget::nodes(3))).unwrap();
        assert!(res.stats.budget_exhausted);
        assert_ne!(res.status, SolveStatus::Exact);
    }

    #[test]
    fn search_matches_replay_on_tiny_cases() {
        for (n, r, s) in [(3, 2, 1), (3, 3, 2), (3, 3, 1), (4, 2, 1), (3, 4, 2)] {
            for v in n..=6 {
                let limit = 1 << 20;
                let Ok(all_mono) = replay_exhaustive(n, r, s, v, limit) else {
                    continue;
                };
                let found = search_coloring(n, r, s, v, Budget::UNLIMITED).unwrap();
                assert_eq!(found.is_none(), all_mono, "n={n} r={r} s={s} v={v}");
            }
        }
    }
}
