use super::{CellCollection, Point};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Grows a random collection from a single cell, deterministically for a fixed seed.
///
/// With `require_polyomino` the result has exactly `max_rank` cells and each new
/// cell is edge-adjacent to the current set. Otherwise the rank is drawn from
/// `1..=max_rank` and new cells may sit anywhere within distance two of the set,
/// so the result may be weakly connected or disconnected.
pub fn random_collection(max_rank: usize, seed: u64, require_polyomino: bool) -> CellCollection {
    let max_rank = max_rank.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = if require_polyomino { max_rank } else { rng.gen_range(1..=max_rank) };
    let mut cells: BTreeSet<Point> = BTreeSet::new();
    cells.insert(Point::new(0, 0));
    while cells.len() < target {
        let mut frontier: Vec<Point> = if require_polyomino {
            cells
                .iter()
                .flat_map(|c| [c.offset(1, 0), c.offset(-1, 0), c.offset(0, 1), c.offset(0, -1)])
                .filter(|n| !cells.contains(n))
                .collect()
        } else {
            cells
                .iter()
                .flat_map(|c| (-2..=2).flat_map(move |di| (-2..=2).map(move |dj| c.offset(di, dj))))
                .filter(|n| !cells.contains(n))
                .collect()
        };
        frontier.sort();
        frontier.dedup();
        let next = *frontier.choose(&mut rng).expect("frontier of a finite set is nonempty");
        cells.insert(next);
    }
    CellCollection::new(cells)
}
