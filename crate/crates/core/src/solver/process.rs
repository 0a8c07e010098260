use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::clique::{max_clique_in_color, Budget, CliqueWitness, Meter};
use crate::{ColorSet, Error, Result, SetColoring};

/// One step of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProcessStep {
    /// An ON color has density above 1/2; pass to the color neighborhood of `vertex`.
    Majority {
        color: usize,
        vertex: usize,
        size_before: usize,
        size_after: usize,
        omega_before: usize,
        omega_after: usize,
    },
    /// An OFF color of density at least `s/r` is turned on.
    TurnOn {
        color: usize,
        size_before: usize,
        /// `|T|`: vertices of degree density at least `1 - 2 eps`.
        dense: usize,
        /// `Q`: a maximum clique of the color inside `T`.
        clique: Vec<usize>,
        /// `|U|`: vertices outside `Q` with density at least `1 - 10 eps` to `Q`.
        attached: usize,
        /// `Q'`: the non-neighbors in `Q` tolerated in the next set.
        excluded: Vec<usize>,
        size_after: usize,
        omega_after: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessEnd {
    /// At most `10 n` vertices remain.
    Small,
    /// No ON color is dense and no OFF color reaches density `s/r`.
    NoDenseColor,
    /// The maximum clique search ran out of budget.
    CliqueBudget,
    /// A monochromatic `K_n` turned up.
    Witness,
}

/// Full record of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessState {
    pub num_colors: usize,
    pub colors_per_edge: usize,
    /// `1 - s/r`.
    pub epsilon: Ratio<u64>,
    /// The final vertex set.
    pub set: Vec<usize>,
    pub on: ColorSet,
    /// Upper bounds on the clique number of each color inside the current set.
    pub omega: Vec<usize>,
    /// Largest number of simultaneously ON colors seen.
    pub max_on: usize,
    pub steps: Vec<ProcessStep>,
    pub end: ProcessEnd,
}

impl ProcessState {
    /// `3(r - s)`.
    pub fn on_limit(&self) -> usize {
        3 * (self.num_colors - self.colors_per_edge)
    }

    /// Checks the logged run: sets strictly shrink, majority steps keep at least half the
    /// set and lower the clique bound of their color, and the ON set stays within
    /// `3(r - s)`.
    pub fn invariants_hold(&self) -> bool {
        let steps_ok = self.steps.iter().all(|step| match *step {
            ProcessStep::Majority {
                size_before,
                size_after,
                omega_before,
                omega_after,
                ..
            } => {
                size_after < size_before
                    && 2 * size_after >= size_before
                    && omega_after < omega_before
            }
            ProcessStep::TurnOn {
                size_before,
                size_after,
                ..
            } => size_after < size_before,
        });
        steps_ok && self.max_on <= self.on_limit() && self.on.len() <= self.max_on
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessOutcome {
    pub witness: Option<CliqueWitness>,
    pub state: ProcessState,
}

/// Runs the on/off color process on a graph coloring.
///
/// While more than `10 n` vertices remain: if some ON color has density above 1/2 in
/// the current set, move to the color neighborhood of the lowest vertex whose degree in
/// that color is above half. Otherwise turn on the lowest OFF color of density at least
/// `s/r`: take the vertices `T` of degree density at least `1 - 2 eps`, a maximum clique
/// `Q` inside `T`, the vertices `U` of `T \ Q` with density at least `1 - 10 eps` to `Q`,
/// and keep the vertices of `U` whose non-neighbors in `Q` lie inside the most common
/// non-neighbor set `Q'`.
///
/// The vertices picked for a color, together with `Q \ Q'`, form a clique of that color
/// joined to everything that remains; a witness is reported as soon as it can be
/// completed to `n` vertices.
pub fn extract_clique_process(c: &SetColoring, n: usize, budget: Budget) -> Result<ProcessOutcome> {
    if c.uniformity() != 2 || c.is_slack() {
        return Err(Error::Precondition(
            "the process needs a non-slack graph coloring".into(),
        ));
    }
    if n < 2 {
        return Err(Error::Precondition("clique size must be at least 2".into()));
    }
    let (r, s) = (c.num_colors(), c.colors_per_edge());
    let mut state = ProcessState {
        num_colors: r,
        colors_per_edge: s,
        epsilon: Ratio::new((r - s) as u64, r as u64),
        set: (0..c.num_vertices()).collect(),
        on: ColorSet::EMPTY,
        omega: vec![n - 1; r],
        max_on: 0,
        steps: Vec::new(),
        end: ProcessEnd::Small,
    };
    let mut chains: Vec<Vec<usize>> = vec![Vec::new(); r];
    let mut meter = Meter::new(budget);
    let witness = loop {
        if let Some(w) = completed_chain(&chains, &state.set, n) {
            state.end = ProcessEnd::Witness;
            break Some(w);
        }
        let size = state.set.len();
        if size <= 10 * n {
            state.end = ProcessEnd::Small;
            break None;
        }
        let pairs = (size * (size - 1) / 2) as u128;
        let counts = color_counts(c, &state.set);
        let majority = state.on.iter().find(|&i| 2 * counts[i] as u128 > pairs);
        if let Some(color) = majority {
            let vertex = state
                .set
                .iter()
                .copied()
                .find(|&v| 2 * degree(c, &state.set, v, color) >= size)
                .expect("a color of density above 1/2 has a vertex of degree above half");
            let next: Vec<usize> = neighbors(c, &state.set, vertex, color).collect();
            let omega_before = state.omega[color];
            state.omega[color] = omega_before.saturating_sub(1);
            chains[color].push(vertex);
            state.steps.push(ProcessStep::Majority {
                color,
                vertex,
                size_before: size,
                size_after: next.len(),
                omega_before,
                omega_after: state.omega[color],
            });
            state.set = next;
            continue;
        }
        let Some(color) = (0..r)
            .filter(|&i| !state.on.contains(i))
            .find(|&i| counts[i] as u128 * r as u128 >= s as u128 * pairs)
        else {
            state.end = ProcessEnd::NoDenseColor;
            break None;
        };
        let (r_i, s_i) = (r as i128, s as i128);
        let dense: Vec<usize> = state
            .set
            .iter()
            .copied()
            .filter(|&v| {
                degree(c, &state.set, v, color) as i128 * r_i
                    >= (2 * s_i - r_i) * (size as i128 - 1)
            })
            .collect();
        let clique = match max_clique_in_color(c, color, Some(&dense), n, &mut meter) {
            Ok(q) => q,
            Err(Error::BudgetExceeded { .. }) => {
                state.end = ProcessEnd::CliqueBudget;
                break None;
            }
            Err(e) => return Err(e),
        };
        if clique.len() >= n {
            state.end = ProcessEnd::Witness;
            let mut vertices = clique;
            vertices.sort_unstable();
            vertices.truncate(n);
            break Some(CliqueWitness { vertices, color });
        }
        let threshold = (10 * s_i - 9 * r_i) * clique.len() as i128;
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut attached = 0;
        for &u in dense.iter().filter(|u| !clique.contains(u)) {
            let missing: Vec<usize> = clique
                .iter()
                .copied()
                .filter(|&q| !c.pair(u, q).contains(color))
                .collect();
            if (clique.len() - missing.len()) as i128 * r_i >= threshold {
                attached += 1;
                groups.entry(missing).or_default().push(u);
            }
        }
        let excluded = groups
            .iter()
            .max_by(|x, y| x.1.len().cmp(&y.1.len()).then(y.0.cmp(x.0)))
            .map(|(k, _)| k.clone())
            .unwrap_or_default();
        let mut next: Vec<usize> = groups
            .iter()
            .filter(|(k, _)| k.iter().all(|q| excluded.contains(q)))
            .flat_map(|(_, members)| members.iter().copied())
            .collect();
        next.sort_unstable();
        state.on.insert(color);
        state.max_on = state.max_on.max(state.on.len());
        state.omega[color] = excluded.len();
        chains[color] = clique
            .iter()
            .copied()
            .filter(|q| !excluded.contains(q))
            .collect();
        state.steps.push(ProcessStep::TurnOn {
            color,
            size_before: size,
            dense: dense.len(),
            clique,
            attached,
            excluded: excluded.clone(),
            size_after: next.len(),
            omega_after: excluded.len(),
        });
        state.set = next;
    };
    Ok(ProcessOutcome { witness, state })
}

/// A chain plus one remaining vertex, when that reaches `n` vertices.
fn completed_chain(chains: &[Vec<usize>], set: &[usize], n: usize) -> Option<CliqueWitness> {
    chains.iter().enumerate().find_map(|(color, chain)| {
        let extra = usize::from(!set.is_empty());
        if chain.is_empty() || chain.len() + extra < n {
            return None;
        }
        let mut vertices = chain.clone();
        if vertices.len() < n {
            vertices.push(set[0]);
        }
        vertices.sort_unstable();
        vertices.truncate(n);
        Some(CliqueWitness { vertices, color })
    })
}

fn color_counts(c: &SetColoring, set: &[usize]) -> Vec<usize> {
    let mut counts = vec![0usize; c.num_colors()];
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            for color in c.pair(u, v).iter() {
                counts[color] += 1;
            }
        }
    }
    counts
}

fn neighbors<'a>(
    c: &'a SetColoring,
    set: &'a [usize],
    v: usize,
    color: usize,
) -> impl Iterator<Item = usize> + 'a {
    set.iter()
        .copied()
        .filter(move |&u| u != v && c.pair(u, v).contains(color))
}

fn degree(c: &SetColoring, set: &[usize], v: usize, color: usize) -> usize {
    neighbors(c, set, v, color).count()
}
