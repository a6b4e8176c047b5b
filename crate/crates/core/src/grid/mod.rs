//! Lattice geometry: points, intervals, cells and finite collections of cells.

mod collection;
mod parse;
mod random;
mod structure;

pub use collection::{CellCollection, Symmetry};
pub use parse::{format_cells, parse_cells, parse_cells_json, CellsJson};
pub use random::random_collection;
pub use structure::StructureReport;

use serde::{Deserialize, Serialize};
use std::fmt;

/// A point of the integer lattice. The derived `Ord` is lexicographic in `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub i: i32,
    pub j: i32,
}

impl Point {
    pub const fn new(i: i32, j: i32) -> Self {
        Point { i, j }
    }

    /// Componentwise partial order.
    pub fn le(&self, other: &Point) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn offset(&self, di: i32, dj: i32) -> Point {
        Point::new(self.i + di, self.j + dj)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A cell is identified with its lower-left corner.
pub type Cell = Point;

/// The four vertices of the cell with lower-left corner `c`.
pub fn cell_vertices(c: Cell) -> [Point; 4] {
    [c, c.offset(1, 0), c.offset(0, 1), c.offset(1, 1)]
}

/// An interval `[a, b]` of the lattice with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub a: Point,
    pub b: Point,
}

impl Interval {
    /// Panics if `a` is not below `b` in the partial order.
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a.le(&b), "interval corners out of order: {a} {b}");
        Interval { a, b }
    }

    /// The interval spanned by the cells `lo` and `hi` (lower-left corners, `lo <= hi`).
    pub fn of_cells(lo: Cell, hi: Cell) -> Self {
        Interval::new(lo, hi.offset(1, 1))
    }

    pub fn is_proper(&self) -> bool {
        self.a.i < self.b.i && self.a.j < self.b.j
    }

    /// Upper-left anti-diagonal corner.
    pub fn c(&self) -> Point {
        Point::new(self.a.i, self.b.j)
    }

    /// Lower-right anti-diagonal corner.
    pub fn d(&self) -> Point {
        Point::new(self.b.i, self.a.j)
    }

    pub fn corners(&self) -> [Point; 4] {
        [self.a, self.b, self.c(), self.d()]
    }

    pub fn contains(&self, p: Point) -> bool {
        self.a.le(&p) && p.le(&self.b)
    }

    pub fn width(&self) -> i32 {
        self.b.i - self.a.i
    }

    pub fn height(&self) -> i32 {
        self.b.j - self.a.j
    }

    /// Lower-left corners of the cells covered by a proper interval.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.a.i..self.b.i).flat_map(move |i| (self.a.j..self.b.j).map(move |j| Point::new(i, j)))
    }

    pub fn rank(&self) -> usize {
        (self.width().max(0) * self.height().max(0)) as usize
    }

    /// The corner opposite to `p` (which must be a corner).
    pub fn opposite(&self, p: Point) -> Point {
        Point::new(self.a.i + self.b.i - p.i, self.a.j + self.b.j - p.j)
    }

    pub fn is_corner(&self, p: Point) -> bool {
        (p.i == self.a.i || p.i == self.b.i) && (p.j == self.a.j || p.j == self.b.j)
    }

    /// Intersection as a point set, if nonempty.
    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let a = Point::new(self.a.i.max(other.a.i), self.a.j.max(other.a.j));
        let b = Point::new(self.b.i.min(other.b.i), self.b.j.min(other.b.j));
        a.le(&b).then_some(Interval { a, b })
    }

    /// Lattice points contained in the interval.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.a.i..=self.b.i).flat_map(move |i| (self.a.j..=self.b.j).map(move |j| Point::new(i, j)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// An interval degenerate in one coordinate, made of cell edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeInterval {
    pub interval: Interval,
    pub orientation: Orientation,
    pub maximal: bool,
}

impl EdgeInterval {
    pub fn contains(&self, p: Point) -> bool {
        self.interval.contains(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_corners() {
        let iv = Interval::new(Point::new(1, 1), Point::new(3, 2));
        assert_eq!(iv.c(), Point::new(1, 2));
        assert_eq!(iv.d(), Point::new(3, 1));
        assert_eq!(iv.opposite(iv.c()), iv.d());
        assert_eq!(iv.cells().count(), 2);
        assert!(iv.is_proper());
        assert!(!Interval::new(Point::new(1, 1), Point::new(1, 4)).is_proper());
    }

    #[test]
    fn partial_order() {
        assert!(Point::new(1, 1).le(&Point::new(1, 2)));
        assert!(!Point::new(2, 1).le(&Point::new(1, 2)));
    }

    #[test]
    fn intersections() {
        let x = Interval::new(Point::new(1, 1), Point::new(2, 2));
        let y = Interval::new(Point::new(2, 2), Point::new(3, 3));
        let z = Interval::new(Point::new(3, 3), Point::new(4, 4));
        assert_eq!(x.intersection(&y), Some(Interval::new(Point::new(2, 2), Point::new(2, 2))));
        assert_eq!(x.intersection(&z), None);
    }
}
