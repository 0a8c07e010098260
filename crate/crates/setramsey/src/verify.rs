//! Monochromatic clique verification spread over threads.

use std::thread;

use setramsey_core::clique::{color_search_order, find_clique_in_color, Meter};
use setramsey_core::{find_mono_clique, Budget, CliqueWitness, Result, SetColoring};

/// Same answer as [`find_mono_clique`]: colors are dealt round-robin to `threads`
/// workers in the sequential search order and the witness of the earliest color in
/// that order wins. The node budget applies to each color separately.
pub fn find_mono_clique_parallel(
    c: &SetColoring,
    n: usize,
    budget: Budget,
    threads: usize,
) -> Result<Option<CliqueWitness>> {
    if threads <= 1 {
        return find_mono_clique(c, n, budget);
    }
    // surface precondition errors exactly as the sequential path does
    if n < c.uniformity() {
        return find_mono_clique(c, n, budget);
    }
    let order = color_search_order(c);
    let per_color: Vec<Result<Option<Vec<usize>>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let order = &order;
                scope.spawn(move || {
                    order
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| i % threads == t)
                        .map(|(i, &color)| {
                            let mut meter = Meter::new(budget);
                            (i, find_clique_in_color(c, color, n, None, &mut meter))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut results: Vec<(usize, Result<Option<Vec<usize>>>)> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect();
        results.sort_by_key(|(i, _)| *i);
        results.into_iter().map(|(_, r)| r).collect()
    });
    for (color, found) in order.into_iter().zip(per_color) {
        if let Some(vertices) = found? {
            return Ok(Some(CliqueWitness { vertices, color }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matches_sequential() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let c = SetColoring::random(2, 12, 5, 2, &mut rng).unwrap();
            for n in 3..=5 {
                let seq = find_mono_clique(&c, n, Budget::UNLIMITED).unwrap();
                for threads in [2, 3, 8] {
                    assert_eq!(
                        find_mono_clique_parallel(&c, n, Budget::UNLIMITED, threads).unwrap(),
                        seq
                    );
                }
            }
        }
    }
}
