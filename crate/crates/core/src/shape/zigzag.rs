use crate::error::{Error, Result};
use crate::grid::{CellCollection, Interval, Orientation, Point};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;

pub const DEFAULT_ZIGZAG_BUDGET: u64 = 10_000_000;

/// Corner bookkeeping for one interval of a walk. `v` and `z` are opposite corners,
/// `u` and `v_next` are the other pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WalkStep {
    pub interval: Interval,
    pub v: Point,
    pub z: Point,
    pub u: Point,
    pub v_next: Point,
}

impl WalkStep {
    /// Whether `v, z` is the diagonal pair `a, b` (otherwise it is the anti-diagonal).
    pub fn v_on_diagonal(&self) -> bool {
        self.v == self.interval.a || self.v == self.interval.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ZigZagWalk {
    pub steps: Vec<WalkStep>,
}

impl ZigZagWalk {
    /// Builds the walk through `intervals` entering the first one at `v1`.
    pub fn from_intervals(intervals: &[Interval], v1: Point) -> Result<Self> {
        let l = intervals.len();
        if l < 2 {
            return Err(bad("fewer than two intervals"));
        }
        let mut steps = Vec::with_capacity(l);
        let mut v = v1;
        for k in 0..l {
            let iv = intervals[k];
            let next = intervals[(k + 1) % l];
            let meet = iv.intersection(&next).ok_or_else(|| bad(&format!("{iv} and {next} are disjoint")))?;
            if meet.a != meet.b || !iv.is_corner(v) {
                return Err(bad(&format!("{iv} and {next} do not meet in a single corner")));
            }
            let v_next = meet.a;
            steps.push(WalkStep { interval: iv, v, z: iv.opposite(v), u: iv.opposite(v_next), v_next });
            v = v_next;
        }
        if v != v1 {
            return Err(bad("the walk does not close up"));
        }
        Ok(ZigZagWalk { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.steps.iter().map(|s| s.interval).collect()
    }

    pub fn z_points(&self) -> Vec<Point> {
        self.steps.iter().map(|s| s.z).collect()
    }

    pub fn u_points(&self) -> Vec<Point> {
        self.steps.iter().map(|s| s.u).collect()
    }

    pub fn v_points(&self) -> Vec<Point> {
        self.steps.iter().map(|s| s.v).collect()
    }
}

// "some inner interval contains both points", via the maximal inner intervals
struct Cover {
    maximal: Vec<Interval>,
    memo: RefCell<HashMap<(Point, Point), bool>>,
}

impl Cover {
    fn new(p: &CellCollection) -> Self {
        Cover { maximal: p.maximal_inner_intervals(), memo: RefCell::new(HashMap::new()) }
    }

    fn share(&self, x: Point, y: Point) -> bool {
        let key = if x <= y { (x, y) } else { (y, x) };
        *self
            .memo
            .borrow_mut()
            .entry(key)
            .or_insert_with(|| self.maximal.iter().any(|m| m.contains(x) && m.contains(y)))
    }
}

fn bad(msg: &str) -> Error {
    Error::InvalidWalk(msg.to_string())
}

fn meets_in(a: &Interval, b: &Interval, v: Point) -> bool {
    a.intersection(b).is_some_and(|m| m.a == v && m.b == v)
}

/// Checks conditions (i)-(iii) independently of the search.
pub fn validate_walk(p: &CellCollection, w: &ZigZagWalk) -> Result<()> {
    let l = w.len();
    if l < 2 {
        return Err(bad("fewer than two intervals"));
    }
    let cover = Cover::new(p);
    for (k, s) in w.steps.iter().enumerate() {
        let next = &w.steps[(k + 1) % l];
        let iv = s.interval;
        let ok = p.is_inner(&iv)
            && iv.is_corner(s.v)
            && s.z == iv.opposite(s.v)
            && s.u == iv.opposite(s.v_next)
            && s.v_next != s.v
            && s.v_next != s.z
            && iv.is_corner(s.v_next)
            && next.v == s.v_next
            && meets_in(&iv, &next.interval, s.v_next);
        if !ok {
            return Err(bad(&format!("corner conditions fail at step {}", k + 1)));
        }
        let o = if s.v.j == s.v_next.j { Orientation::Horizontal } else { Orientation::Vertical };
        let on_edge = p.edge_interval_through(s.v, o).is_some_and(|e| e.contains(s.v_next));
        if !on_edge {
            return Err(bad(&format!("{} and {} are not on a common edge interval", s.v, s.v_next)));
        }
    }
    for a in 0..l {
        for b in a + 1..l {
            if w.steps[a].interval == w.steps[b].interval {
                return Err(bad(&format!("interval {} repeats", w.steps[a].interval)));
            }
            if cover.share(w.steps[a].z, w.steps[b].z) {
                return Err(bad(&format!("{} and {} lie in a common inner interval", w.steps[a].z, w.steps[b].z)));
            }
        }
    }
    Ok(())
}

struct Search<'a> {
    inner: Vec<Interval>,
    by_corner: HashMap<Point, Vec<usize>>,
    cover: Cover,
    budget: u64,
    nodes: u64,
    used: Vec<bool>,
    path: Vec<WalkStep>,
    found: Vec<ZigZagWalk>,
    max_walks: usize,
    _p: &'a CellCollection,
}

impl Search<'_> {
    // the walk so far is `path`; `k` is the current interval entered at `v`
    fn dfs(&mut self, start: usize, k: usize, v: Point) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        let iv = self.inner[k];
        let z = iv.opposite(v);
        if self.path.iter().any(|s| self.cover.share(s.z, z)) {
            return Ok(());
        }
        let v1 = self.path.first().map_or(v, |s| s.v);
        for v_next in [Point::new(v.i, z.j), Point::new(z.i, v.j)] {
            let step = WalkStep { interval: iv, v, z, u: iv.opposite(v_next), v_next };
            self.path.push(step);
            self.used[k] = true;
            if self.path.len() >= 2 && v_next == v1 && meets_in(&iv, &self.inner[start], v1) {
                self.found.push(ZigZagWalk { steps: self.path.clone() });
            }
            if self.found.len() < self.max_walks {
                let cands = self.by_corner.get(&v_next).cloned().unwrap_or_default();
                for m in cands {
                    if m > start && !self.used[m] && meets_in(&iv, &self.inner[m], v_next) {
                        self.dfs(start, m, v_next)?;
                        if self.found.len() >= self.max_walks {
                            break;
                        }
                    }
                }
            }
            self.used[k] = false;
            self.path.pop();
            if self.found.len() >= self.max_walks {
                break;
            }
        }
        Ok(())
    }
}

/// Exhaustive depth-first search for zig-zag walks. Each cyclic walk is reported once per
/// direction of travel, starting at its least interval. Stops after `max_walks` walks.
pub fn find_zigzag_walks(p: &CellCollection, max_walks: usize, budget: u64) -> Result<Vec<ZigZagWalk>> {
    let inner = p.inner_intervals();
    let mut by_corner: HashMap<Point, Vec<usize>> = HashMap::new();
    for (k, iv) in inner.iter().enumerate() {
        for c in iv.corners() {
            by_corner.entry(c).or_default().push(k);
        }
    }
    let n = inner.len();
    let mut s = Search {
        inner,
        by_corner,
        cover: Cover::new(p),
        budget,
        nodes: 0,
        used: vec![false; n],
        path: Vec::new(),
        found: Vec::new(),
        max_walks,
        _p: p,
    };
    if max_walks == 0 {
        return Ok(Vec::new());
    }
    'outer: for start in 0..n {
        for v in s.inner[start].corners() {
            s.dfs(start, start, v)?;
            if s.found.len() >= max_walks {
                break 'outer;
            }
        }
    }
    Ok(s.found)
}

/// Some zig-zag walk, if one exists.
pub fn find_zigzag_walk(p: &CellCollection, budget: u64) -> Result<Option<ZigZagWalk>> {
    Ok(find_zigzag_walks(p, 1, budget)?.pop())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame3() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)])
    }

    /// The smallest closed path without L-configuration or long ladder.
    fn notched_ring() -> CellCollection {
        CellCollection::from_pairs(&[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 1),
            (2, 2),
            (2, 4),
            (2, 5),
            (3, 1),
            (3, 5),
            (4, 1),
            (4, 2),
            (4, 4),
            (4, 5),
            (5, 2),
            (5, 3),
            (5, 4),
        ])
    }

    #[test]
    fn frame_has_no_walk() {
        assert!(find_zigzag_walks(&frame3(), 10, DEFAULT_ZIGZAG_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn row_has_no_walk() {
        assert!(find_zigzag_walk(&CellCollection::rectangle(4, 2), DEFAULT_ZIGZAG_BUDGET).unwrap().is_none());
    }

    #[test]
    fn walks_validate_and_have_even_length() {
        let p = notched_ring();
        let walks = find_zigzag_walks(&p, 50, DEFAULT_ZIGZAG_BUDGET).unwrap();
        assert!(!walks.is_empty());
        for w in &walks {
            assert_eq!(w.len() % 2, 0);
            validate_walk(&p, w).unwrap();
        }
    }

    #[test]
    fn notched_ring_walks() {
        let walks = find_zigzag_walks(&notched_ring(), usize::MAX, DEFAULT_ZIGZAG_BUDGET).unwrap();
        let lens: Vec<usize> = walks.iter().map(|w| w.len()).collect();
        // one walk, once in each direction
        assert_eq!(lens, vec![4, 4]);
        assert_eq!(
            walks[0].z_points().iter().collect::<std::collections::BTreeSet<_>>(),
            walks[1].u_points().iter().collect()
        );
        let w = &walks[0];
        let r = ZigZagWalk::from_intervals(&w.intervals(), w.steps[0].v).unwrap();
        assert_eq!(&r, w);
    }

    #[test]
    fn budget_is_reported() {
        let err = find_zigzag_walks(&frame3(), 1, 3).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded(3));
    }

    #[test]
    fn from_intervals_rejects_non_chains() {
        let a = Interval::new(Point::new(1, 1), Point::new(2, 2));
        let b = Interval::new(Point::new(3, 3), Point::new(4, 4));
        assert!(matches!(ZigZagWalk::from_intervals(&[a, b], Point::new(1, 1)), Err(Error::InvalidWalk(_))));
    }

    #[test]
    fn tampered_walk_fails_validation() {
        let p = notched_ring();
        let mut w = find_zigzag_walk(&p, DEFAULT_ZIGZAG_BUDGET).unwrap().unwrap();
        w.steps[0].z = w.steps[0].u;
        assert!(validate_walk(&p, &w).is_err());
    }
}
