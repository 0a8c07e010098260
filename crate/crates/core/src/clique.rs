//! Monochromatic clique search.
//!
//! A set of vertices is a clique in color `i` when every k-subset of it carries `i`.
//! Searches are exhaustive and run one color at a time on the sub-hypergraph of edges
//! containing that color. Graphs (`k = 2`) use bitset adjacency rows; hypergraphs filter
//! candidate lists as vertices are added.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::combin::{binomial, LexSubsets};
use crate::{Error, Result, SetColoring};

/// Node budget for exhaustive searches. Running out yields [`Error::BudgetExceeded`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(limit: u64) -> Self {
        Budget {
            max_nodes: Some(limit),
        }
    }
}

/// Counts search nodes against a [`Budget`].
#[derive(Debug, Clone)]
pub struct Meter {
    used: u64,
    limit: Option<u64>,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            used: 0,
            limit: budget.max_nodes,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// A monochromatic clique: every k-subset of `vertices` carries `color`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueWitness {
    pub vertices: Vec<usize>,
    pub color: usize,
}

impl CliqueWitness {
    /// Re-checks the witness against `c` by enumerating every edge inside it.
    pub fn holds(&self, c: &SetColoring) -> bool {
        let k = c.uniformity();
        if self.vertices.len() < k || self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if self.vertices.last().is_some_and(|&v| v >= c.num_vertices()) {
            return false;
        }
        let mut edge = alloc::vec![0usize; k];
        LexSubsets::new(self.vertices.len(), k).all(|idx| {
            for (slot, &i) in edge.iter_mut().zip(&idx) {
                *slot = self.vertices[i];
            }
            c.colors_of_sorted(&edge).contains(self.color)
        })
    }
}

/// Colors ordered by descending class size, ties broken by lower index.
pub fn color_search_order(c: &SetColoring) -> Vec<usize> {
    let mut counts = alloc::vec![0usize; c.num_colors()];
    for set in c.edge_sets() {
        for color in set.iter() {
            if color < counts.len() {
                counts[color] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..c.num_colors()).collect();
    order.sort_by(|&a, &b| counts[b].cmp(&counts[a]).then(a.cmp(&b)));
    order
}

/// Searches every color for a monochromatic `K_n` and returns the first one found,
/// scanning colors in [`color_search_order`]. Within a color the lexicographically
/// least clique is reported.
pub fn find_mono_clique(
    c: &SetColoring,
    n: usize,
    budget: Budget,
) -> Result<Option<CliqueWitness>> {
    if n < c.uniformity() {
        return Err(Error::Precondition(alloc::format!(
            "clique size {n} is below the uniformity {}",
            c.uniformity()
        )));
    }
    let mut meter = Meter::new(budget);
    for color in color_search_order(c) {
        if let Some(vertices) = find_clique_in_color(c, color, n, None, &mut meter)? {
            return Ok(Some(CliqueWitness { vertices, color }));
        }
    }
    Ok(None)
}

/// Lexicographically least `n`-clique of `color`, optionally restricted to `within`.
pub fn find_clique_in_color(
    c: &SetColoring,
    color: usize,
    n: usize,
    within: Option<&[usize]>,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let k = c.uniformity();
    let needed = binomial(n as u64, k as u64).unwrap_or(u128::MAX);
    if n > c.num_vertices() || (c.color_count(color) as u128) < needed {
        return Ok(None);
    }
    let mut search = ColorSearch::new(c, color, within);
    let mut clique = Vec::with_capacity(n);
    let found = match &search.engine {
        Engine::Graph { .. } => {
            let cand = search.initial_bits();
            search.exists_graph(&mut clique, cand, n, meter)?
        }
        Engine::Hyper => {
            let cand = search.initial_list();
            search.exists_hyper(&mut clique, cand, n, meter)?
        }
    };
    Ok(found.then_some(clique))
}

/// Size of the largest vertex set all of whose edges carry `color`.
///
/// With `within`, only that vertex subset is considered. Any `k-1` vertices count as a
/// clique, so an empty class gives `k-1` (capped by the number of available vertices).
pub fn clique_number_of_color(
    c: &SetColoring,
    color: usize,
    within: Option<&[usize]>,
    budget: Budget,
) -> Result<usize> {
    if color >= c.num_colors() {
        return Err(Error::Precondition(alloc::format!(
            "color {color} is outside the palette of {}",
            c.num_colors()
        )));
    }
    let mut meter = Meter::new(budget);
    Ok(max_clique_in_color(c, color, within, usize::MAX, &mut meter)?.len())
}

/// A maximum clique of `color`, or any clique of size `cap` as soon as one is found.
pub fn max_clique_in_color(
    c: &SetColoring,
    color: usize,
    within: Option<&[usize]>,
    cap: usize,
    meter: &mut Meter,
) -> Result<Vec<usize>> {
    let mut search = ColorSearch::new(c, color, within);
    let mut best = Vec::new();
    let mut clique = Vec::new();
    match &search.engine {
        Engine::Graph { .. } => {
            let cand = search.initial_bits();
            search.max_graph(&mut clique, cand, &mut best, cap, meter)?;
        }
        Engine::Hyper => {
            let cand = search.initial_list();
            search.max_hyper(&mut clique, cand, &mut best, cap, meter)?;
        }
    }
    Ok(best)
}

enum Engine {
    Graph { adj: Vec<BitSet> },
    Hyper,
}

struct ColorSearch<'a> {
    c: &'a SetColoring,
    color: usize,
    within: Option<&'a [usize]>,
    engine: Engine,
    edge_buf: Vec<usize>,
}

impl<'a> ColorSearch<'a> {
    fn new(c: &'a SetColoring, color: usize, within: Option<&'a [usize]>) -> Self {
        let n = c.num_vertices();
        let engine = if c.uniformity() == 2 {
            let mut adj = alloc::vec![BitSet::new(n); n];
            for (e, set) in c.edges() {
                if set.contains(color) {
                    adj[e[0]].insert(e[1]);
                    adj[e[1]].insert(e[0]);
                }
            }
            Engine::Graph { adj }
        } else {
            Engine::Hyper
        };
        ColorSearch {
            c,
            color,
            within,
            engine,
            edge_buf: alloc::vec![0; c.uniformity()],
        }
    }

    fn initial_bits(&self) -> BitSet {
        let n = self.c.num_vertices();
        match self.within {
            Some(vs) => BitSet::from_iter_with_len(n, vs.iter().copied()),
            None => BitSet::full(n),
        }
    }

    fn initial_list(&self) -> Vec<usize> {
        match self.within {
            Some(vs) => {
                let mut v = vs.to_vec();
                v.sort_unstable();
                v.dedup();
                v
            }
            None => (0..self.c.num_vertices()).collect(),
        }
    }

    fn adj(&self) -> &[BitSet] {
        match &self.engine {
            Engine::Graph { adj } => adj,
            Engine::Hyper => unreachable!("graph engine only"),
        }
    }

    fn exists_graph(
        &self,
        clique: &mut Vec<usize>,
        cand: BitSet,
        target: usize,
        meter: &mut Meter,
    ) -> Result<bool> {
        if clique.len() == target {
            return Ok(true);
        }
        let mut remaining = cand.count();
        for v in cand.iter() {
            if clique.len() + remaining < target {
                break;
            }
            remaining -= 1;
            meter.tick()?;
            let mut next = cand.intersection(&self.adj()[v]);
            next.clear_through(v);
            clique.push(v);
            if self.exists_graph(clique, next, target, meter)? {
                return Ok(true);
            }
            clique.pop();
        }
        Ok(false)
    }

    fn max_graph(
        &self,
        clique: &mut Vec<usize>,
        cand: BitSet,
        best: &mut Vec<usize>,
        cap: usize,
        meter: &mut Meter,
    ) -> Result<()> {
        if clique.len() > best.len() {
            best.clone_from(clique);
        }
        let mut remaining = cand.count();
        for v in cand.iter() {
            if best.len() >= cap || clique.len() + remaining <= best.len() {
                break;
            }
            remaining -= 1;
            meter.tick()?;
            let mut next = cand.intersection(&self.adj()[v]);
            next.clear_through(v);
            clique.push(v);
            self.max_graph(clique, next, best, cap, meter)?;
            clique.pop();
        }
        Ok(())
    }

    /// Candidates `w > v` that stay compatible once `v` joins `clique`.
    fn filter_hyper(&mut self, clique: &[usize], v: usize, cand: &[usize]) -> Vec<usize> {
        let k = self.c.uniformity();
        let later = cand.iter().copied().filter(|&w| w > v);
        if clique.len() + 1 < k - 1 {
            return later.collect();
        }
        let subsets: Vec<Vec<usize>> = LexSubsets::new(clique.len(), k - 2).collect();
        let mut out = Vec::new();
        'w: for w in later {
            for idx in &subsets {
                for (slot, &i) in self.edge_buf.iter_mut().zip(idx) {
                    *slot = clique[i];
                }
                self.edge_buf[k - 2] = v;
                self.edge_buf[k - 1] = w;
                if !self.c.colors_of_sorted(&self.edge_buf).contains(self.color) {
                    continue 'w;
                }
            }
            out.push(w);
        }
        out
    }

    fn exists_hyper(
        &mut self,
        clique: &mut Vec<usize>,
        cand: Vec<usize>,
        target: usize,
        meter: &mut Meter,
    ) -> Result<bool> {
        if clique.len() == target {
            return Ok(true);
        }
        for (i, &v) in cand.iter().enumerate() {
            if clique.len() + cand.len() - i < target {
                break;
            }
            meter.tick()?;
            let next = self.filter_hyper(clique, v, &cand[i + 1..]);
            clique.push(v);
            if self.exists_hyper(clique, next, target, meter)? {
                return Ok(true);
            }
            clique.pop();
        }
        Ok(false)
    }

    fn max_hyper(
        &mut self,
        clique: &mut Vec<usize>,
        cand: Vec<usize>,
        best: &mut Vec<usize>,
        cap: usize,
        meter: &mut Meter,
    ) -> Result<()> {
        if clique.len() > best.len() {
            best.clone_from(clique);
        }
        for (i, &v) in cand.iter().enumerate() {
            if best.len() >= cap || clique.len() + cand.len() - i <= best.len() {
                break;
            }
            meter.tick()?;
            let next = self.filter_hyper(clique, v, &cand[i + 1..]);
            clique.push(v);
            self.max_hyper(clique, next, best, cap, meter)?;
            clique.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ColorSet;
    use alloc::vec;

    fn brute_force_has_mono(c: &SetColoring, n: usize) -> bool {
        LexSubsets::new(c.num_vertices(), n).any(|vs| {
            (0..c.num_colors()).any(|color| {
                CliqueWitness {
                    vertices: vs.clone(),
                    color,
                }
                .holds(c)
            })
        })
    }

    #[test]
    fn monochrome_graph_gives_everything() {
        let c = SetColoring::constant(2, 4, 2, ColorSet::from_colors([0])).unwrap();
        let w = find_mono_clique(&c, 4, Budget::UNLIMITED).unwrap().unwrap();
        assert_eq!(
            w,
            CliqueWitness {
                vertices: vec![0, 1, 2, 3],
                color: 0
            }
        );
        assert_eq!(
            clique_number_of_color(&c, 0, None, Budget::UNLIMITED).unwrap(),
            4
        );
        assert_eq!(
            clique_number_of_color(&c, 1, None, Budget::UNLIMITED).unwrap(),
            1
        );
    }

    #[test]
    fn pentagon_has_no_triangle() {
        let p = SetColoring::pentagon();
        assert!(!brute_force_has_mono(&p, 3));
        assert_eq!(find_mono_clique(&p, 3, Budget::UNLIMITED).unwrap(), None);
        for color in 0..2 {
            assert_eq!(
                clique_number_of_color(&p, color, None, Budget::UNLIMITED).unwrap(),
                2
            );
        }
    }

    #[test]
    fn empty_class_in_hypergraph_is_k_minus_one() {
        let c = SetColoring::constant(3, 6, 2, ColorSet::from_colors([0])).unwrap();
        assert_eq!(
            clique_number_of_color(&c, 1, None, Budget::UNLIMITED).unwrap(),
            2
        );
        assert_eq!(
            clique_number_of_color(&c, 0, None, Budget::UNLIMITED).unwrap(),
            6
        );
        let within = [1, 3, 5];
        assert_eq!(
            clique_number_of_color(&c, 0, Some(&within), Budget::UNLIMITED).unwrap(),
            3
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c = SetColoring::constant(2, 30, 1, ColorSet::from_colors([0])).unwrap();
        assert!(matches!(
            find_mono_clique(&c, 30, Budget::nodes(5)),
            Err(Error::BudgetExceeded { limit: 5 })
        ));
    }

    #[test]
    fn n_below_uniformity_is_rejected() {
        let c = SetColoring::constant(3, 5, 2, ColorSet::from_colors([0])).unwrap();
        assert!(find_mono_clique(&c, 2, Budget::UNLIMITED).is_err());
    }

    #[test]
    fn witness_check_rejects_bad_vertices() {
        let p = SetColoring::pentagon();
        assert!(!CliqueWitness {
            vertices: vec![1, 0],
            color: 0
        }
        .holds(&p));
        assert!(!CliqueWitness {
            vertices: vec![0, 9],
            color: 0
        }
        .holds(&p));
        assert!(CliqueWitness {
            vertices: vec![0, 1],
            color: 0
        }
        .holds(&p));
    }

    #[test]
    fn density_order_prefers_large_classes() {
        let c = SetColoring::from_fn(2, 4, 3, 1, false, |e| {
            ColorSet::from_colors([if e == [0, 1] { 0 } else { 2 }])
        })
        .unwrap();
        assert_eq!(color_search_order(&c), vec![2, 0, 1]);
    }
}
