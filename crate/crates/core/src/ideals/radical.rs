use super::prime::{binomial_ideal_is_prime, exponent_differences, PrimalityVerdict};
use super::{inner_minor_ideal, vertex_index, zigzag_binomial};
use crate::algebra::lattice::{rank, to_big};
use crate::algebra::{groebner_basis, intersect, saturate, Field, GbOptions, Poly, Ring};
use crate::error::{Error, Result};
use crate::grid::{cell_vertices, Cell, CellCollection, Interval, Point};
use crate::shape::{classify_path, find_zigzag_walks, PathKind};
use serde::Serialize;
use std::collections::HashMap;

/// Search nodes allowed while enumerating admissible sets.
pub const DEFAULT_ADMISSIBLE_BUDGET: u64 = 50_000_000;

type Mask = u128;

#[derive(Clone, Debug)]
pub struct AdmissibleReport<E> {
    pub admissible_sets: u64,
    /// The admissible sets whose ideals `J_X` survive the containment filter.
    pub components: Vec<Vec<Point>>,
    /// Reduced GB of the intersection of the surviving `J_X`.
    pub radical: Vec<Poly<E>>,
}

struct Constraint {
    points: Mask,
    edges: [Mask; 4],
    last: usize,
}

fn bit(k: usize) -> Mask {
    1 << k
}

fn constraints(p: &CellCollection, index: &HashMap<Point, usize>) -> Vec<Constraint> {
    p.inner_intervals()
        .iter()
        .map(|iv| {
            let points = iv.points().fold(0, |m, a| m | bit(index[&a]));
            let [a, b, c, d] = [iv.a, iv.b, iv.c(), iv.d()].map(|x| bit(index[&x]));
            Constraint {
                points,
                edges: [a | c, a | d, b | c, b | d],
                last: Mask::BITS as usize - 1 - points.leading_zeros() as usize,
            }
        })
        .collect()
}

fn satisfied(c: &Constraint, x: Mask) -> bool {
    x & c.points == 0 || c.edges.iter().any(|&e| x & e == e)
}

/// All admissible vertex sets, as masks over the ring's variables.
fn admissible_sets(p: &CellCollection, index: &HashMap<Point, usize>, n: usize, budget: u64) -> Result<Vec<Mask>> {
    let cons = constraints(p, index);
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, c) in cons.iter().enumerate() {
        by_last[c.last].push(k);
    }
    let mut out = Vec::new();
    let mut nodes = 0u64;
    // explicit stack of (next variable, partial set)
    let mut stack: Vec<(usize, Mask)> = vec![(0, 0)];
    while let Some((k, x)) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::BudgetExceeded { what: "admissible sets", budget });
        }
        if k == n {
            out.push(x);
            continue;
        }
        for y in [x | bit(k), x] {
            if by_last[k].iter().all(|&c| satisfied(&cons[c], y)) {
                stack.push((k + 1, y));
            }
        }
    }
    Ok(out)
}

/// Exponent difference `u` of a lattice element in cell coordinates: `c(i,j) = Σ_{a ≤ (i,j)} u(a)`.
fn cell_support(u: &[i64], vertices: &[Point], cells: &[Cell]) -> Mask {
    cells.iter().enumerate().fold(0, |m, (k, c)| {
        let s: i64 = vertices.iter().zip(u).filter(|(a, _)| a.i <= c.i && a.j <= c.j).map(|(_, x)| x).sum();
        if s != 0 {
            m | bit(k)
        } else {
            m
        }
    })
}

struct Component<E> {
    x: Mask,
    gens: Vec<Poly<E>>,
    // per GB binomial: supports of the two terms and the cell support of the difference
    shape: Vec<(Mask, Mask, Mask)>,
}

fn term_mask<E: Clone>(f: &Poly<E>, t: usize) -> Mask {
    f.terms()[t].0.support().fold(0, |m, k| m | bit(k))
}

/// `J_X ⊆ J_Y` for `X ⊆ Y`, where `touch` marks the cells with a vertex in `Y`.
fn contained<E>(c: &Component<E>, y: Mask, touch: Mask) -> bool {
    c.shape.iter().all(|&(a, b, s)| match (a & y != 0, b & y != 0) {
        (true, true) => true,
        (false, false) => s & touch == 0,
        _ => false,
    })
}

/// `√I_P = ∩_X J_X` over the admissible sets `X`, where `J_X = (x_a : a ∈ X) + L_X` and `L_X` is
/// the lattice ideal of the cells with no vertex in `X`. Components contained-above a smaller
/// one are dropped before intersecting.
pub fn radical_via_admissible<F: Field>(
    ring: &Ring<F>,
    p: &CellCollection,
    budget: u64,
    opts: &GbOptions,
) -> Result<AdmissibleReport<F::Elem>> {
    let n = ring.nvars();
    let cells: Vec<Cell> = p.cells().collect();
    if n > Mask::BITS as usize || cells.len() > Mask::BITS as usize {
        return Err(Error::BudgetExceeded { what: "admissible sets", budget });
    }
    let index = vertex_index(ring);
    let vertices: Vec<Point> = {
        let mut v = vec![Point::new(0, 0); n];
        for (a, &k) in &index {
            v[k] = *a;
        }
        v
    };
    let cell_masks: Vec<Mask> =
        cells.iter().map(|&c| cell_vertices(c).iter().fold(0, |m, a| m | bit(index[a]))).collect();
    let mut sets = admissible_sets(p, &index, n, budget)?;
    let total = sets.len() as u64;
    sets.sort_by_key(|x| (x.count_ones(), *x));

    let mut lattice_cache: HashMap<Mask, (Vec<Poly<F::Elem>>, Vec<(Mask, Mask, Mask)>)> = HashMap::new();
    let mut kept: Vec<Component<F::Elem>> = Vec::new();
    for &x in &sets {
        let touch = cell_masks.iter().enumerate().filter(|(_, &m)| m & x != 0).fold(0, |m, (k, _)| m | bit(k));
        if kept.iter().any(|c| c.x & !x == 0 && contained(c, x, touch)) {
            continue;
        }
        let free = !touch & ((1 << cells.len()) - 1);
        if !lattice_cache.contains_key(&free) {
            let gens = lattice_of_cells(ring, &index, &cells, free, opts)?;
            let diffs = exponent_differences(ring, &gens)?;
            let shape = gens
                .iter()
                .zip(&diffs)
                .map(|(g, u)| (term_mask(g, 0), term_mask(g, 1), cell_support(u, &vertices, &cells)))
                .collect();
            lattice_cache.insert(free, (gens, shape));
        }
        let (l, shape) = lattice_cache[&free].clone();
        let mut gens: Vec<Poly<F::Elem>> = (0..n).filter(|&k| x & bit(k) != 0).map(|k| ring.var(k)).collect();
        gens.extend(l);
        kept.push(Component { x, gens, shape });
    }

    let mut acc: Option<Vec<Poly<F::Elem>>> = None;
    for c in &kept {
        acc = Some(match acc {
            None => groebner_basis(ring, &c.gens, opts)?.into_gens(),
            Some(a) => intersect(ring, &a, &c.gens, opts)?,
        });
    }
    let components =
        kept.iter().map(|c| (0..n).filter(|&k| c.x & bit(k) != 0).map(|k| vertices[k]).collect()).collect();
    Ok(AdmissibleReport { admissible_sets: total, components, radical: acc.unwrap_or_default() })
}

// lattice ideal spanned by the chosen cells, as a reduced GB
fn lattice_of_cells<F: Field>(
    ring: &Ring<F>,
    index: &HashMap<Point, usize>,
    cells: &[Cell],
    chosen: Mask,
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let n = ring.nvars();
    let mut gens = Vec::new();
    let mut vars = std::collections::BTreeSet::new();
    for (k, &c) in cells.iter().enumerate() {
        if chosen & bit(k) != 0 {
            let u = super::minor_vector(index, n, &Interval::of_cells(c, c))?;
            vars.extend(u.iter().enumerate().filter(|(_, &e)| e != 0).map(|(v, _)| v));
            gens.push(ring.lattice_binomial(&u));
        }
    }
    let vars: Vec<usize> = vars.into_iter().collect();
    saturate(ring, &gens, &vars, crate::algebra::SaturationMethod::Homogeneous, opts)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct P1Report<E> {
    pub walks: usize,
    #[serde(skip)]
    pub generators: Vec<Poly<E>>,
    pub verdict: PrimalityVerdict,
    /// Rank of the lattice spanned by the exponent differences of the generators.
    pub height: usize,
}

/// `p₁ = I_P + (f_W : W a zig-zag walk)` for a closed path with a zig-zag walk, as a reduced GB.
pub fn closed_path_p1<F: Field>(
    ring: &Ring<F>,
    p: &CellCollection,
    zigzag_budget: u64,
    opts: &GbOptions,
) -> Result<P1Report<F::Elem>> {
    if classify_path(p)?.kind != PathKind::ClosedPath {
        return Err(Error::NotAClosedPath);
    }
    let walks = find_zigzag_walks(p, usize::MAX, zigzag_budget)?;
    if walks.is_empty() {
        return Err(Error::NotApplicable("the closed path has no zig-zag walk, so I_P is prime".into()));
    }
    let mut gens = inner_minor_ideal(ring, p)?;
    for w in &walks {
        gens.push(zigzag_binomial(ring, p, w)?);
    }
    let verdict = binomial_ideal_is_prime(ring, &gens, opts)?;
    let height = rank(&to_big(&exponent_differences(ring, &gens)?));
    let generators = groebner_basis(ring, &gens, opts)?.into_gens();
    Ok(P1Report { walks: walks.len(), generators, verdict, height })
}
