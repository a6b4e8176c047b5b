//! Exhaustive enumeration of polyominoes and the verification campaign.

mod campaign;

pub use campaign::{
    run_campaign, CampaignOptions, CampaignReport, CampaignSummary, Check, CheckTally, Classification, InstanceRecord,
};

use crate::error::{Error, Result};
use crate::grid::{CellCollection, Point};
use std::collections::BTreeSet;

/// Largest rank accepted by [`enumerate_polyominoes`].
pub const DEFAULT_MAX_RANK: usize = 10;

/// All fixed polyominoes of rank `n` up to translation, in increasing order.
/// With `mod_symmetry` only the symmetry-canonical representative of each orbit is kept.
pub fn enumerate_polyominoes(n: usize, mod_symmetry: bool) -> Result<Vec<CellCollection>> {
    enumerate_polyominoes_up_to(n, mod_symmetry, DEFAULT_MAX_RANK)
}

/// As [`enumerate_polyominoes`] with an explicit rank cap.
pub fn enumerate_polyominoes_up_to(n: usize, mod_symmetry: bool, max_rank: usize) -> Result<Vec<CellCollection>> {
    if n == 0 || n > max_rank {
        return Err(Error::InvalidArgument(format!("rank {n} outside 1..={max_rank}")));
    }
    let mut out = Vec::new();
    for_each_fixed(n, |cells| {
        if cells.len() == n {
            let p = CellCollection::new(cells.iter().copied());
            if !mod_symmetry || p == p.symmetry_canonical() {
                out.push(p);
            }
        }
    });
    out.sort();
    Ok(out)
}

/// Number of fixed polyominoes of each rank `1..=n`.
pub fn count_fixed(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n];
    for_each_fixed(n, |cells| counts[cells.len() - 1] += 1);
    counts
}

/// Redelmeier's growth: calls `f` once for every fixed polyomino of rank at most `n`,
/// anchored at its lowest-then-leftmost cell `(0, 0)`.
pub fn for_each_fixed(n: usize, mut f: impl FnMut(&[Point])) {
    if n == 0 {
        return;
    }
    let w = 2 * n + 1;
    let h = n + 1;
    // cells with j < 0, or j == 0 and i < 0, are never allowed
    let idx = |p: Point| ((p.i + n as i32) as usize) * h + p.j as usize;
    let allowed = |p: Point| p.j > 0 || (p.j == 0 && p.i >= 0);
    let mut reached = vec![false; w * h];
    reached[idx(Point::new(0, 0))] = true;
    let mut poly = Vec::with_capacity(n);
    grow(n, &mut vec![Point::new(0, 0)], &mut poly, &mut reached, &idx, &allowed, &mut f);
}

fn grow(
    n: usize,
    untried: &mut Vec<Point>,
    poly: &mut Vec<Point>,
    reached: &mut [bool],
    idx: &impl Fn(Point) -> usize,
    allowed: &impl Fn(Point) -> bool,
    f: &mut impl FnMut(&[Point]),
) {
    while let Some(c) = untried.pop() {
        poly.push(c);
        f(poly);
        if poly.len() < n {
            let mut fresh = Vec::new();
            for nb in [c.offset(1, 0), c.offset(-1, 0), c.offset(0, 1), c.offset(0, -1)] {
                if allowed(nb) && !reached[idx(nb)] {
                    reached[idx(nb)] = true;
                    fresh.push(nb);
                }
            }
            let mut next = untried.clone();
            next.extend(fresh.iter().copied());
            grow(n, &mut next, poly, reached, idx, allowed, f);
            for nb in fresh {
                reached[idx(nb)] = false;
            }
        }
        poly.pop();
    }
}

/// Weakly connected collections of rank `n` (cells joined through shared vertices),
/// including the polyominoes. Only small ranks are practical.
pub fn enumerate_weakly_connected(n: usize) -> Result<Vec<CellCollection>> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!("rank {n} outside 1..=6")));
    }
    let mut level: BTreeSet<CellCollection> = BTreeSet::from([CellCollection::from_pairs(&[(1, 1)])]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for p in &level {
            for c in p.cells() {
                for di in -1..=1 {
                    for dj in -1..=1 {
                        let q = c.offset(di, dj);
                        if !p.contains(q) {
                            next.insert(CellCollection::new(p.cells().chain([q])));
                        }
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Closed paths of rank `n` up to translation (optionally one per symmetry orbit), in
/// increasing order. Built as cell cycles, so ranks far beyond [`DEFAULT_MAX_RANK`] are cheap.
pub fn enumerate_closed_paths(n: usize, mod_symmetry: bool) -> Vec<CellCollection> {
    if n < 6 {
        return Vec::new();
    }
    // the lex-least cell is followed by its right neighbour and preceded by the one above it
    let start = Point::new(0, 0);
    let last = Point::new(0, 1);
    let mut cycle = vec![start, Point::new(1, 0)];
    let mut found = BTreeSet::new();
    extend_cycle(n, last, &mut cycle, &mut found, mod_symmetry);
    found.into_iter().collect()
}

fn extend_cycle(
    n: usize,
    last: Point,
    cycle: &mut Vec<Point>,
    found: &mut BTreeSet<CellCollection>,
    mod_symmetry: bool,
) {
    let k = cycle.len();
    let cur = cycle[k - 1];
    for c in [cur.offset(1, 0), cur.offset(-1, 0), cur.offset(0, 1), cur.offset(0, -1)] {
        if c <= cycle[0] || cycle.contains(&c) || (k + 1 == n) != (c == last) {
            continue;
        }
        let clash = cycle.iter().enumerate().any(|(j, &d)| {
            let gap = (k - j).min(n - k + j);
            gap > 2 && (c.i - d.i).abs() <= 1 && (c.j - d.j).abs() <= 1
        });
        if clash {
            continue;
        }
        cycle.push(c);
        if k + 1 == n {
            let p = CellCollection::new(cycle.iter().copied());
            if crate::shape::classify_path(&p).is_ok_and(|d| d.kind == crate::shape::PathKind::ClosedPath) {
                found.insert(if mod_symmetry { p.symmetry_canonical() } else { p });
            }
        } else {
            extend_cycle(n, last, cycle, found, mod_symmetry);
        }
        cycle.pop();
    }
}
