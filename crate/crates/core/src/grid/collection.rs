use super::{cell_vertices, Cell, EdgeInterval, Interval, Orientation, Point};
use std::collections::{BTreeSet, HashSet};
use std::hash::{Hash, Hasher};

/// A finite set of cells, normalized so that its bounding box starts at (1,1).
///
/// Equality and hashing use the canonical cells only; the translation that was
/// applied on construction is kept in `offset` (original = canonical + offset).
#[derive(Clone, Debug)]
pub struct CellCollection {
    cells: BTreeSet<Cell>,
    offset: Point,
}

impl PartialEq for CellCollection {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for CellCollection {}

impl Hash for CellCollection {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl PartialOrd for CellCollection {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CellCollection {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank()).then_with(|| self.cells.iter().cmp(other.cells.iter()))
    }
}

/// The eight symmetries of the square acting on cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipI,
    FlipJ,
    Transpose,
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::FlipI,
        Symmetry::FlipJ,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    /// Acts on cell coordinates; cells of the image are again unit cells.
    pub fn apply(self, c: Cell) -> Cell {
        let (i, j) = (c.i, c.j);
        let (x, y) = match self {
            Symmetry::Identity => (i, j),
            Symmetry::Rot90 => (-j, i),
            Symmetry::Rot180 => (-i, -j),
            Symmetry::Rot270 => (j, -i),
            Symmetry::FlipI => (-i, j),
            Symmetry::FlipJ => (i, -j),
            Symmetry::Transpose => (j, i),
            Symmetry::AntiTranspose => (-j, -i),
        };
        Point::new(x, y)
    }
}

impl CellCollection {
    /// Deduplicates and translates so that the minimal corner of the bounding box is (1,1).
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let raw: BTreeSet<Cell> = cells.into_iter().collect();
        let (mi, mj) = raw.iter().fold((i32::MAX, i32::MAX), |(mi, mj), c| (mi.min(c.i), mj.min(c.j)));
        if raw.is_empty() {
            return CellCollection { cells: raw, offset: Point::new(0, 0) };
        }
        let offset = Point::new(mi - 1, mj - 1);
        let cells = raw.into_iter().map(|c| c.offset(-offset.i, -offset.j)).collect();
        CellCollection { cells, offset }
    }

    pub fn from_pairs(pairs: &[(i32, i32)]) -> Self {
        Self::new(pairs.iter().map(|&(i, j)| Point::new(i, j)))
    }

    pub fn empty() -> Self {
        Self::new(std::iter::empty())
    }

    /// Cells of the rectangle `[1..=w] x [1..=h]`.
    pub fn rectangle(w: i32, h: i32) -> Self {
        Self::new((1..=w).flat_map(|i| (1..=h).map(move |j| Point::new(i, j))))
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn offset(&self) -> Point {
        self.offset
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Cells in the original (untranslated) coordinates.
    pub fn original_cells(&self) -> Vec<Cell> {
        self.cells.iter().map(|c| c.offset(self.offset.i, self.offset.j)).collect()
    }

    /// Lower-left corners of the extreme cells `(min, max)`.
    pub fn bounding_box(&self) -> Option<(Cell, Cell)> {
        if self.cells.is_empty() {
            return None;
        }
        let (mut lo, mut hi) = (Point::new(i32::MAX, i32::MAX), Point::new(i32::MIN, i32::MIN));
        for c in &self.cells {
            lo = Point::new(lo.i.min(c.i), lo.j.min(c.j));
            hi = Point::new(hi.i.max(c.i), hi.j.max(c.j));
        }
        Some((lo, hi))
    }

    pub fn vertices(&self) -> BTreeSet<Point> {
        self.cells.iter().flat_map(|&c| cell_vertices(c)).collect()
    }

    pub fn transform(&self, sym: Symmetry) -> CellCollection {
        CellCollection::new(self.cells.iter().map(|&c| sym.apply(c)))
    }

    /// Lexicographically least image under the eight symmetries.
    pub fn symmetry_canonical(&self) -> CellCollection {
        Symmetry::ALL
            .iter()
            .map(|&s| self.transform(s))
            .min_by(|x, y| x.cells.iter().cmp(y.cells.iter()))
            .expect("eight symmetries")
    }

    /// Whether `[a, b]` is a proper interval all of whose cells belong to the collection.
    pub fn is_inner(&self, iv: &Interval) -> bool {
        iv.is_proper() && iv.cells().all(|c| self.contains(c))
    }

    /// All inner intervals, sorted by `(a, b)`.
    pub fn inner_intervals(&self) -> Vec<Interval> {
        let Some((_, hi)) = self.bounding_box() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        // Every inner interval is a union of cells, so it suffices to scan the corner
        // pairs whose lower-left corner is a cell of the collection.
        for &a in &self.cells {
            // Grow to the right column by column, tracking the tallest admissible height.
            let mut max_h = hi.j - a.j + 1;
            for bi in a.i..=hi.i {
                let mut h = 0;
                while h < max_h && self.contains(Point::new(bi, a.j + h)) {
                    h += 1;
                }
                max_h = h;
                if max_h == 0 {
                    break;
                }
                for bj in a.j..a.j + max_h {
                    out.push(Interval::new(a, Point::new(bi + 1, bj + 1)));
                }
            }
        }
        out.sort();
        out
    }

    /// Maximal inner intervals (inclusion-maximal rectangles of cells).
    pub fn maximal_inner_intervals(&self) -> Vec<Interval> {
        let all = self.inner_intervals();
        let set: HashSet<Interval> = all.iter().copied().collect();
        all.into_iter()
            .filter(|iv| {
                let grow = [
                    Interval { a: iv.a.offset(-1, 0), b: iv.b },
                    Interval { a: iv.a.offset(0, -1), b: iv.b },
                    Interval { a: iv.a, b: iv.b.offset(1, 0) },
                    Interval { a: iv.a, b: iv.b.offset(0, 1) },
                ];
                grow.iter().all(|g| !set.contains(g))
            })
            .collect()
    }

    /// Whether the unit segment from `p` to `p + (1,0)` (horizontal) or `p + (0,1)`
    /// (vertical) is an edge of some cell.
    pub fn has_edge(&self, p: Point, o: Orientation) -> bool {
        match o {
            Orientation::Horizontal => self.contains(p) || self.contains(p.offset(0, -1)),
            Orientation::Vertical => self.contains(p) || self.contains(p.offset(-1, 0)),
        }
    }

    /// Maximal edge intervals of the given orientation, sorted.
    pub fn maximal_edge_intervals(&self, o: Orientation) -> Vec<EdgeInterval> {
        let step = |p: Point, k: i32| match o {
            Orientation::Horizontal => p.offset(k, 0),
            Orientation::Vertical => p.offset(0, k),
        };
        let mut out = Vec::new();
        for v in self.vertices() {
            // start of a run: edge leaving v forward, no edge arriving from behind
            if self.has_edge(v, o) && !self.has_edge(step(v, -1), o) {
                let mut end = step(v, 1);
                while self.has_edge(end, o) {
                    end = step(end, 1);
                }
                out.push(EdgeInterval { interval: Interval::new(v, end), orientation: o, maximal: true });
            }
        }
        out.sort();
        out
    }

    /// The maximal edge interval of orientation `o` through vertex `v`, if any.
    pub fn edge_interval_through(&self, v: Point, o: Orientation) -> Option<EdgeInterval> {
        self.maximal_edge_intervals(o).into_iter().find(|e| e.contains(v))
    }

    /// Edge-adjacent neighbours of a cell inside the collection.
    pub fn neighbours(&self, c: Cell) -> impl Iterator<Item = Cell> + '_ {
        [c.offset(1, 0), c.offset(-1, 0), c.offset(0, 1), c.offset(0, -1)]
            .into_iter()
            .filter(move |n| self.contains(*n))
    }
}
