use super::{cell_vertices, Cell, CellCollection, Point};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub rank: usize,
    pub is_polyomino: bool,
    /// Edge-connected components, each as a sorted list of cells.
    pub connected_components: Vec<Vec<Cell>>,
    /// Vertex-connected components.
    pub weakly_connected_components: Vec<Vec<Cell>>,
    pub is_row_convex: bool,
    pub is_column_convex: bool,
    pub is_convex: bool,
    pub is_simple: bool,
    pub holes: usize,
    /// Lower-left corners of the extreme cells.
    pub bounding_box: Option<(Cell, Cell)>,
}

fn components<F, N>(cells: &BTreeSet<Cell>, neighbours: F) -> Vec<Vec<Cell>>
where
    F: Fn(Cell) -> N,
    N: IntoIterator<Item = Cell>,
{
    let mut seen: HashSet<Cell> = HashSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in neighbours(c) {
                if cells.contains(&n) && seen.insert(n) {
                    comp.push(n);
                    queue.push_back(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn edge_neighbours(c: Cell) -> [Cell; 4] {
    [c.offset(1, 0), c.offset(-1, 0), c.offset(0, 1), c.offset(0, -1)]
}

impl CellCollection {
    pub fn connected_components(&self) -> Vec<Vec<Cell>> {
        components(self.cell_set(), edge_neighbours)
    }

    pub fn weakly_connected_components(&self) -> Vec<Vec<Cell>> {
        // cells sharing a vertex are within Chebyshev distance one
        components(self.cell_set(), |c: Cell| (-1..=1).flat_map(move |di| (-1..=1).map(move |dj| c.offset(di, dj))))
    }

    pub fn is_polyomino(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected regions of the complement inside the bounding box grown by one ring.
    /// The first region returned is the unbounded one.
    pub fn complement_regions(&self) -> Vec<Vec<Cell>> {
        let Some((lo, hi)) = self.bounding_box() else {
            return Vec::new();
        };
        let (lo, hi) = (lo.offset(-1, -1), hi.offset(1, 1));
        let free: BTreeSet<Cell> = (lo.i..=hi.i)
            .flat_map(|i| (lo.j..=hi.j).map(move |j| Point::new(i, j)))
            .filter(|c| !self.contains(*c))
            .collect();
        // `lo` is outside the collection, so the component of `lo` is the outer region
        let mut regions = components(&free, edge_neighbours);
        let outer = regions.iter().position(|r| r.contains(&lo)).expect("outer ring is free");
        let o = regions.remove(outer);
        regions.insert(0, o);
        regions
    }

    /// Bounded regions of the complement, each sorted.
    pub fn holes(&self) -> Vec<Vec<Cell>> {
        let mut r = self.complement_regions();
        if !r.is_empty() {
            r.remove(0);
        }
        r
    }

    pub fn is_simple(&self) -> bool {
        self.complement_regions().len() <= 1
    }

    fn line_convex(&self, horizontal: bool) -> bool {
        let mut lines: std::collections::BTreeMap<i32, Vec<i32>> = Default::default();
        for c in self.cells() {
            let (key, pos) = if horizontal { (c.j, c.i) } else { (c.i, c.j) };
            lines.entry(key).or_default().push(pos);
        }
        lines.values().all(|v| {
            let (mn, mx) = (v.iter().min().unwrap(), v.iter().max().unwrap());
            (mx - mn + 1) as usize == v.len()
        })
    }

    pub fn is_row_convex(&self) -> bool {
        self.line_convex(true)
    }

    pub fn is_column_convex(&self) -> bool {
        self.line_convex(false)
    }

    pub fn is_convex(&self) -> bool {
        self.is_row_convex() && self.is_column_convex()
    }

    pub fn structure(&self) -> StructureReport {
        let connected = self.connected_components();
        let weak = self.weakly_connected_components();
        let regions = self.complement_regions();
        let (row, col) = (self.is_row_convex(), self.is_column_convex());
        StructureReport {
            rank: self.rank(),
            is_polyomino: connected.len() <= 1,
            connected_components: connected,
            weakly_connected_components: weak,
            is_row_convex: row,
            is_column_convex: col,
            is_convex: row && col,
            is_simple: regions.len() <= 1,
            holes: regions.len().saturating_sub(1),
            bounding_box: self.bounding_box(),
        }
    }

    /// Vertices of a set of cells (helper for hole geometry).
    pub fn vertices_of(cells: &[Cell]) -> BTreeSet<Point> {
        cells.iter().flat_map(|&c| cell_vertices(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)])
    }

    #[test]
    fn square_tetromino() {
        let s = CellCollection::rectangle(2, 2).structure();
        assert!(s.is_polyomino && s.is_convex && s.is_simple);
        assert_eq!(s.holes, 0);
    }

    #[test]
    fn frame_has_one_hole() {
        let f = frame();
        let s = f.structure();
        assert!(s.is_polyomino);
        assert!(!s.is_simple);
        assert_eq!(s.holes, 1);
        assert_eq!(f.complement_regions().len(), 2);
        assert_eq!(f.holes(), vec![vec![Point::new(2, 2)]]);
        assert!(!s.is_row_convex);
    }

    #[test]
    fn diagonal_cells() {
        let p = CellCollection::from_pairs(&[(1, 1), (2, 2)]);
        let s = p.structure();
        assert!(!s.is_polyomino);
        assert_eq!(s.connected_components.len(), 2);
        assert_eq!(s.weakly_connected_components.len(), 1);
        // the two free cells touching the diagonal are connected around the outside
        assert!(s.is_simple);
    }

    #[test]
    fn empty_is_vacuous() {
        let s = CellCollection::empty().structure();
        assert!(s.is_polyomino && s.is_convex && s.is_simple);
        assert!(s.connected_components.is_empty());
        assert_eq!(s.bounding_box, None);
    }

    #[test]
    fn components_refine_weak_components() {
        let p = CellCollection::from_pairs(&[(1, 1), (2, 2), (2, 3), (5, 5), (6, 5)]);
        let s = p.structure();
        let total: usize = s.connected_components.iter().map(Vec::len).sum();
        assert_eq!(total, p.rank());
        for c in &s.connected_components {
            assert!(s.weakly_connected_components.iter().any(|w| c.iter().all(|x| w.contains(x))));
        }
        assert_eq!(s.weakly_connected_components.len(), 2);
    }
}
