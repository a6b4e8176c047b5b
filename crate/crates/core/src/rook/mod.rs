//! Rook configurations, rook polynomials and switching equivalence.

use crate::error::{Error, Result};
use crate::grid::{Cell, CellCollection, Interval, Point};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

/// Configurations are stored as bit sets over the cells, so ranks are capped.
pub const MAX_ROOK_RANK: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RookConfiguration {
    pub rooks: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingClass {
    pub representative: RookConfiguration,
    pub size: usize,
}

/// Two distinct cells of `p` in attacking position.
pub fn attacks(p: &CellCollection, c1: Cell, c2: Cell) -> Result<bool> {
    for c in [c1, c2] {
        if !p.contains(c) {
            return Err(Error::CellNotInCollection(c));
        }
    }
    Ok(attack_unchecked(p, c1, c2))
}

fn attack_unchecked(p: &CellCollection, c1: Cell, c2: Cell) -> bool {
    if c1 == c2 {
        return false;
    }
    if c1.j == c2.j {
        (c1.i.min(c2.i)..=c1.i.max(c2.i)).all(|i| p.contains(Point::new(i, c1.j)))
    } else if c1.i == c2.i {
        (c1.j.min(c2.j)..=c1.j.max(c2.j)).all(|j| p.contains(Point::new(c1.i, j)))
    } else {
        false
    }
}

type Mask = u128;

struct Board {
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
    attack: Vec<Mask>,
}

impl Board {
    fn new(p: &CellCollection) -> Result<Self> {
        if p.rank() > MAX_ROOK_RANK {
            return Err(Error::InvalidArgument(format!("rook computations support rank <= {MAX_ROOK_RANK}")));
        }
        let cells: Vec<Cell> = p.cells().collect();
        let index = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let attack = cells
            .iter()
            .map(|&a| {
                cells.iter().enumerate().filter(|(_, &b)| attack_unchecked(p, a, b)).fold(0, |m, (k, _)| m | (1 << k))
            })
            .collect();
        Ok(Board { cells, index, attack })
    }

    // non-attacking sets of size `k`, in lexicographic order of cell indices
    fn configurations(&self, k: usize) -> Vec<Mask> {
        let mut out = Vec::new();
        self.extend(0, 0, 0, k, &mut out);
        out
    }

    fn extend(&self, from: usize, set: Mask, blocked: Mask, left: usize, out: &mut Vec<Mask>) {
        if left == 0 {
            out.push(set);
            return;
        }
        for c in from..self.cells.len() {
            if self.cells.len() - c < left {
                break;
            }
            if blocked >> c & 1 == 0 {
                self.extend(c + 1, set | 1 << c, blocked | self.attack[c], left - 1, out);
            }
        }
    }

    fn valid(&self, set: Mask) -> bool {
        bits(set).all(|c| self.attack[c] & set == 0)
    }

    fn to_config(&self, set: Mask) -> RookConfiguration {
        RookConfiguration { rooks: bits(set).map(|c| self.cells[c]).collect() }
    }

    // all configurations one switch away from `set`
    fn switches(&self, p: &CellCollection, set: Mask) -> Vec<Mask> {
        let rooks: Vec<usize> = bits(set).collect();
        let mut out = Vec::new();
        for (x, &r1) in rooks.iter().enumerate() {
            for &r2 in &rooks[x + 1..] {
                let (a, b) = (self.cells[r1], self.cells[r2]);
                if a.i == b.i || a.j == b.j {
                    continue;
                }
                let lo = Point::new(a.i.min(b.i), a.j.min(b.j));
                let hi = Point::new(a.i.max(b.i), a.j.max(b.j));
                if !p.is_inner(&Interval::of_cells(lo, hi)) {
                    continue;
                }
                let c = self.index[&Point::new(a.i, b.j)];
                let d = self.index[&Point::new(b.i, a.j)];
                if set >> c & 1 == 1 || set >> d & 1 == 1 {
                    continue;
                }
                let moved = (set & !(1 << r1) & !(1 << r2)) | 1 << c | 1 << d;
                if self.valid(moved) {
                    out.push(moved);
                }
            }
        }
        out
    }
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// All `k`-rook configurations, each listing its cells in increasing order.
pub fn rook_configurations(p: &CellCollection, k: usize) -> Result<Vec<RookConfiguration>> {
    let board = Board::new(p)?;
    Ok(board.configurations(k).into_iter().map(|m| board.to_config(m)).collect())
}

/// Coefficients `r_0, ..., r_{r(P)}`.
pub fn rook_polynomial(p: &CellCollection) -> Result<Vec<u64>> {
    let board = Board::new(p)?;
    let mut counts = vec![0u64; p.rank() + 1];
    count_rec(&board, 0, 0, 0, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

fn count_rec(b: &Board, from: usize, blocked: Mask, size: usize, counts: &mut [u64]) {
    counts[size] += 1;
    for c in from..b.cells.len() {
        if blocked >> c & 1 == 0 {
            count_rec(b, c + 1, blocked | b.attack[c], size + 1, counts);
        }
    }
}

pub fn rook_number(p: &CellCollection) -> Result<usize> {
    Ok(rook_polynomial(p)?.len() - 1)
}

/// Classes of `k`-rook configurations under switches, ordered by representative.
pub fn switching_classes(p: &CellCollection, k: usize) -> Result<Vec<SwitchingClass>> {
    let board = Board::new(p)?;
    let configs = board.configurations(k);
    let pos: HashMap<Mask, usize> = configs.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut class = vec![usize::MAX; configs.len()];
    let mut out = Vec::new();
    for start in 0..configs.len() {
        if class[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        class[start] = id;
        let mut queue = VecDeque::from([start]);
        let mut members = vec![start];
        while let Some(x) = queue.pop_front() {
            for y in board.switches(p, configs[x]) {
                let yi = pos[&y];
                if class[yi] == usize::MAX {
                    class[yi] = id;
                    members.push(yi);
                    queue.push_back(yi);
                }
            }
        }
        let rep = members.iter().map(|&m| board.to_config(configs[m])).min().unwrap();
        out.push(SwitchingClass { representative: rep, size: members.len() });
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

/// Coefficient `j` counts switching classes of `j`-rook configurations.
pub fn switching_rook_polynomial(p: &CellCollection) -> Result<Vec<u64>> {
    let degree = rook_number(p)?;
    (0..=degree).map(|k| Ok(switching_classes(p, k)?.len() as u64)).collect()
}

pub fn standard_rook_polynomial(_p: &CellCollection) -> Result<Vec<u64>> {
    Err(Error::Unimplemented(
        "standard rook polynomial: no definition available; use rook_polynomial or switching_rook_polynomial".into(),
    ))
}

pub fn standard_rook_number(_p: &CellCollection) -> Result<usize> {
    Err(Error::Unimplemented("standard rook number: no definition available; use rook_number".into()))
}

/// `1 + 4t + t^2` style rendering.
pub fn format_t_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}{mono}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
