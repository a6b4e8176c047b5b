use crate::error::{Error, Result};
use crate::grid::{Cell, CellCollection, Interval};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PathKind {
    OpenPath,
    ClosedPath,
    NotAPath,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PathDecomposition {
    pub kind: PathKind,
    /// Cells in path order. Closed paths start at the lex-least cell and step right first;
    /// open paths start at the lex-least end. Empty for `NotAPath`.
    pub ordered_cells: Vec<Cell>,
    /// Maximal blocks in path order, as cell intervals.
    pub maximal_blocks: Vec<Interval>,
    /// Indices into `ordered_cells` of the cells where the path turns.
    pub changes_of_direction: Vec<usize>,
}

impl PathDecomposition {
    fn not_a_path() -> Self {
        PathDecomposition {
            kind: PathKind::NotAPath,
            ordered_cells: Vec::new(),
            maximal_blocks: Vec::new(),
            changes_of_direction: Vec::new(),
        }
    }

    pub fn block_ranks(&self) -> Vec<usize> {
        self.maximal_blocks.iter().map(|b| b.rank()).collect()
    }
}

/// Cells sharing at least a vertex.
pub(crate) fn cells_touch(a: Cell, b: Cell) -> bool {
    (a.i - b.i).abs() <= 1 && (a.j - b.j).abs() <= 1
}

fn collinear(a: Cell, b: Cell, c: Cell) -> bool {
    (a.i == b.i && b.i == c.i) || (a.j == b.j && b.j == c.j)
}

fn block_interval(cells: &[Cell]) -> Interval {
    let lo = *cells.iter().min().unwrap();
    let hi = *cells.iter().max().unwrap();
    Interval::of_cells(lo, hi)
}

/// Open path, closed path or neither.
pub fn classify_path(p: &CellCollection) -> Result<PathDecomposition> {
    if !p.is_polyomino() {
        return Err(Error::NotAPolyomino);
    }
    let n = p.rank();
    if n == 0 {
        return Ok(PathDecomposition::not_a_path());
    }
    let degree = |c: Cell| p.neighbours(c).count();
    if p.cells().any(|c| degree(c) > 2) {
        return Ok(PathDecomposition::not_a_path());
    }
    let ends: Vec<Cell> = p.cells().filter(|&c| degree(c) <= 1).collect();
    let closed = ends.is_empty();
    if closed && n <= 5 {
        return Ok(PathDecomposition::not_a_path());
    }

    let start = if closed { p.cells().next().unwrap() } else { ends[0] };
    let mut order = vec![start];
    let mut prev: Option<Cell> = None;
    let mut cur = start;
    loop {
        let next = if prev.is_none() && closed {
            // the lex-least cell of a cycle has its neighbours to the right and above
            Some(cur.offset(1, 0)).filter(|c| p.contains(*c))
        } else {
            p.neighbours(cur).find(|&c| Some(c) != prev)
        };
        let Some(next) = next else { break };
        if next == start {
            break;
        }
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    if order.len() != n {
        return Ok(PathDecomposition::not_a_path());
    }

    // far-apart cells must be disjoint
    for a in 0..n {
        for b in a + 1..n {
            let gap = if closed { (b - a).min(n - (b - a)) } else { b - a };
            if gap > 2 && cells_touch(order[a], order[b]) {
                return Ok(PathDecomposition::not_a_path());
            }
        }
    }

    let turns: Vec<usize> = (0..n)
        .filter(|&k| {
            if closed {
                !collinear(order[(k + n - 1) % n], order[k], order[(k + 1) % n])
            } else {
                k > 0 && k + 1 < n && !collinear(order[k - 1], order[k], order[k + 1])
            }
        })
        .collect();

    let mut blocks = Vec::new();
    if closed {
        // order[0] is a turn, so blocks run between consecutive turns
        for (t, &s) in turns.iter().enumerate() {
            let e = turns.get(t + 1).copied().unwrap_or(n);
            let cells: Vec<Cell> = (s..=e).map(|k| order[k % n]).collect();
            blocks.push(block_interval(&cells));
        }
    } else {
        let mut bounds = vec![0];
        bounds.extend(turns.iter().copied());
        bounds.push(n - 1);
        if n == 1 {
            blocks.push(block_interval(&order));
        } else {
            for w in bounds.windows(2) {
                blocks.push(block_interval(&order[w[0]..=w[1]]));
            }
        }
    }

    Ok(PathDecomposition {
        kind: if closed { PathKind::ClosedPath } else { PathKind::OpenPath },
        ordered_cells: order,
        maximal_blocks: blocks,
        changes_of_direction: turns,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedPathFeatures {
    pub has_l_configuration: bool,
    pub max_ladder_steps: usize,
}

/// L-configurations and ladders of a closed path.
///
/// An L-configuration is a turning cell whose two blocks both have rank at least 3.
/// A ladder is a run of blocks `B_1, C_1, B_2, ..., C_{k-1}, B_k` in cyclic order whose
/// connecting blocks `C_i` have rank 2 and which climbs monotonically in both
/// coordinates; its number of steps is `k`.
pub fn closed_path_features(p: &CellCollection) -> Result<ClosedPathFeatures> {
    let d = classify_path(p)?;
    if d.kind != PathKind::ClosedPath {
        return Err(Error::NotAClosedPath);
    }
    let ranks = d.block_ranks();
    let m = ranks.len();
    let has_l = (0..m).any(|k| ranks[k] >= 3 && ranks[(k + 1) % m] >= 3);
    Ok(ClosedPathFeatures { has_l_configuration: has_l, max_ladder_steps: max_ladder_steps(&d) })
}

// direction of travel through a block, as a unit step
fn block_step(d: &PathDecomposition, k: usize) -> (i32, i32) {
    let n = d.ordered_cells.len();
    let s = d.changes_of_direction[k];
    let a = d.ordered_cells[s];
    let b = d.ordered_cells[(s + 1) % n];
    (b.i - a.i, b.j - a.j)
}

fn max_ladder_steps(d: &PathDecomposition) -> usize {
    let ranks = d.block_ranks();
    let m = ranks.len();
    let steps: Vec<(i32, i32)> = (0..m).map(|k| block_step(d, k)).collect();
    let mut best = 0;
    // a ladder starts at a parallel block B = block k and alternates through rank-2 connectors
    for k in 0..m {
        let mut count = 1;
        let mut pos = k;
        loop {
            let c = (pos + 1) % m;
            let b = (pos + 2) % m;
            if ranks[c] != 2 || count >= m / 2 {
                break;
            }
            // monotone: every parallel block and every connector keeps its direction
            if steps[b] != steps[k] || steps[c] != steps[(k + 1) % m] {
                break;
            }
            count += 1;
            pos = b;
        }
        best = best.max(count);
    }
    best
}

/// One stair of an open path: consecutive maximal rectangles whose interior members all have rank 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Stair {
    pub start_index: usize,
    pub rectangle_count: usize,
}

impl Stair {
    pub fn is_odd(&self) -> bool {
        self.rectangle_count % 2 == 1
    }

    pub fn is_bad(&self) -> bool {
        matches!(self.rectangle_count, 4 | 6) || self.rectangle_count >= 8
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StairReport {
    pub stairs: Vec<Stair>,
    pub odd_stairs: Vec<usize>,
    pub bad_stairs: Vec<usize>,
    /// Ranks `l_1, ..., l_s` of the maximal rectangles in path order.
    pub rectangle_ranks: Vec<usize>,
}

/// Stairs of an open path: each maximal run of interior rank-2 rectangles, together with
/// the two rectangles flanking it.
pub fn stair_analysis(p: &CellCollection) -> Result<StairReport> {
    let d = classify_path(p)?;
    if d.kind != PathKind::OpenPath {
        return Err(Error::NotAPath);
    }
    let ranks = d.block_ranks();
    let s = ranks.len();
    let mut stairs = Vec::new();
    let mut k = 1;
    while k + 1 < s {
        if ranks[k] == 2 {
            let start = k;
            while k + 1 < s && ranks[k] == 2 {
                k += 1;
            }
            stairs.push(Stair { start_index: start - 1, rectangle_count: k - start + 2 });
        } else {
            k += 1;
        }
    }
    let odd_stairs = (0..stairs.len()).filter(|&i| stairs[i].is_odd()).collect();
    let bad_stairs = (0..stairs.len()).filter(|&i| stairs[i].is_bad()).collect();
    Ok(StairReport { stairs, odd_stairs, bad_stairs, rectangle_ranks: ranks })
}
