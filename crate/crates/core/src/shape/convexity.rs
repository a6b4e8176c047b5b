use crate::error::{Error, Result};
use crate::grid::{Cell, CellCollection, Point};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// No 2x2 square of cells.
pub fn is_thin(p: &CellCollection) -> bool {
    !p.cells().any(|c| p.contains(c.offset(1, 0)) && p.contains(c.offset(0, 1)) && p.contains(c.offset(1, 1)))
}

const DIRS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

// fewest turns of a monotone cell path from `a` to `b`, if one exists
fn min_turns(p: &CellCollection, a: Cell, b: Cell) -> Option<usize> {
    if a == b {
        return Some(0);
    }
    let allowed: Vec<usize> = (0..4)
        .filter(|&d| {
            let (di, dj) = DIRS[d];
            (di != 0 && di == (b.i - a.i).signum()) || (dj != 0 && dj == (b.j - a.j).signum())
        })
        .collect();
    let (lo, hi) = p.bounding_box()?;
    let w = (hi.i - lo.i + 1) as usize;
    let h = (hi.j - lo.j + 1) as usize;
    let idx = |c: Cell, d: usize| (((c.i - lo.i) as usize) * h + (c.j - lo.j) as usize) * 4 + d;
    let mut dist = vec![usize::MAX; w * h * 4];
    let mut queue = VecDeque::new();
    for &d in &allowed {
        dist[idx(a, d)] = 0;
        queue.push_back((a, d));
    }
    // 0-1 BFS: continuing straight is free, turning costs one
    while let Some((c, d)) = queue.pop_front() {
        let cost = dist[idx(c, d)];
        if c == b {
            return Some(cost);
        }
        for &nd in &allowed {
            let n = c.offset(DIRS[nd].0, DIRS[nd].1);
            if !p.contains(n) {
                continue;
            }
            let nc = cost + usize::from(nd != d);
            if nc < dist[idx(n, nd)] {
                dist[idx(n, nd)] = nc;
                if nd == d {
                    queue.push_front((n, nd));
                } else {
                    queue.push_back((n, nd));
                }
            }
        }
    }
    None
}

/// Every two cells are joined by a monotone path of cells with at most `k` changes of direction.
pub fn is_k_convex(p: &CellCollection, k: usize) -> Result<bool> {
    if !p.is_polyomino() {
        return Err(Error::NotAPolyomino);
    }
    if !p.is_convex() {
        return Err(Error::NotConvex);
    }
    let cells: Vec<Cell> = p.cells().collect();
    for (x, &a) in cells.iter().enumerate() {
        for &b in &cells[x + 1..] {
            match min_turns(p, a, b) {
                Some(t) if t <= k => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Least `k` for which a convex polyomino is k-convex.
pub fn convexity_degree(p: &CellCollection) -> Result<usize> {
    if !p.is_polyomino() {
        return Err(Error::NotAPolyomino);
    }
    if !p.is_convex() {
        return Err(Error::NotConvex);
    }
    let cells: Vec<Cell> = p.cells().collect();
    let mut best = 0;
    for (x, &a) in cells.iter().enumerate() {
        for &b in &cells[x + 1..] {
            best = best.max(min_turns(p, a, b).ok_or(Error::NotConvex)?);
        }
    }
    Ok(best)
}

/// A polyomino obtained from its bounding rectangle by removing a convex polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HqComplement {
    /// Removed cells, in the coordinates of the input.
    pub removed: Vec<Cell>,
    /// Whether the removed part reaches the border of the rectangle.
    pub touches_boundary: bool,
    /// Lower-left and upper-right vertices of the bounding rectangle.
    pub rectangle: (Point, Point),
}

impl HqComplement {
    /// The lexicographically least vertex of the removed cells.
    pub fn least_hole_vertex(&self) -> Point {
        *self.removed.iter().min().expect("nonempty")
    }
}

/// Detects `P = R \ Q` with `R` the bounding rectangle and `Q` a nonempty convex polyomino.
pub fn hq_complement(p: &CellCollection) -> Option<HqComplement> {
    if !p.is_polyomino() || p.is_empty() {
        return None;
    }
    let (lo, hi) = p.bounding_box()?;
    let removed: Vec<Cell> =
        (lo.i..=hi.i).flat_map(|i| (lo.j..=hi.j).map(move |j| Point::new(i, j))).filter(|c| !p.contains(*c)).collect();
    if removed.is_empty() {
        return None;
    }
    let q = CellCollection::new(removed.iter().copied());
    if !q.is_polyomino() || !q.is_convex() {
        return None;
    }
    let touches_boundary = removed.iter().any(|c| c.i == lo.i || c.i == hi.i || c.j == lo.j || c.j == hi.j);
    Some(HqComplement { removed, touches_boundary, rectangle: (lo, hi.offset(1, 1)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame3() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)])
    }

    #[test]
    fn thinness() {
        assert!(is_thin(&CellCollection::from_pairs(&[(1, 1), (2, 1), (2, 2)])));
        assert!(!is_thin(&CellCollection::rectangle(2, 2)));
        assert!(is_thin(&frame3()));
    }

    #[test]
    fn row_is_zero_convex() {
        assert!(is_k_convex(&CellCollection::rectangle(6, 1), 0).unwrap());
        assert!(!is_k_convex(&CellCollection::rectangle(2, 2), 0).unwrap());
        assert!(is_k_convex(&CellCollection::rectangle(2, 2), 1).unwrap());
    }

    #[test]
    fn ferrers_diagrams_are_one_convex() {
        // rows of lengths 4, 3, 1 stacked from the bottom, left-justified
        let p = CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (3, 2), (1, 3)]);
        assert!(is_k_convex(&p, 1).unwrap());
        assert_eq!(convexity_degree(&p).unwrap(), 1);
    }

    #[test]
    fn staircase_is_two_convex() {
        // rows [1,2], [1,3], [2,3] of a diagonal band
        let p = CellCollection::from_pairs(&[(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)]);
        assert!(!is_k_convex(&p, 1).unwrap());
        assert!(is_k_convex(&p, 2).unwrap());
    }

    #[test]
    fn k_convex_needs_convexity() {
        assert_eq!(is_k_convex(&frame3(), 3).unwrap_err(), Error::NotConvex);
    }

    #[test]
    fn hq_complement_of_frame() {
        let h = hq_complement(&frame3()).unwrap();
        assert_eq!(h.removed, vec![Point::new(2, 2)]);
        assert!(!h.touches_boundary);
        assert_eq!(h.least_hole_vertex(), Point::new(2, 2));
        assert!(hq_complement(&CellCollection::rectangle(3, 2)).is_none());
        let l = CellCollection::from_pairs(&[(1, 1), (2, 1), (1, 2)]);
        assert!(hq_complement(&l).unwrap().touches_boundary);
    }
}
