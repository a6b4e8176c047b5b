//! Polyomino ideals and their primality and radical machinery.

mod prime;
mod radical;
mod toric;

pub use prime::{
    binomial_ideal_is_prime, height, is_prime, prime_by_fallback, Certificate, PrimalityVerdict, PrimeOptions,
    PrimeStatus,
};
pub use radical::{closed_path_p1, radical_via_admissible, AdmissibleReport, P1Report, DEFAULT_ADMISSIBLE_BUDGET};
pub use toric::{toric_exponent_matrix, toric_ideal, ToricModel, ToricModelKind};

use crate::algebra::lattice::{smith_invariants, to_big};
use crate::algebra::{Field, Monomial, MonomialOrder, Poly, PrimeField, Ring, Var};
use crate::error::{Error, Result};
use crate::grid::{CellCollection, Interval, Point};
use crate::shape::{validate_walk, ZigZagWalk};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Reading of the vertex grid that fixes the variable order: the first letter is the
/// primary direction in which variables grow, the second breaks ties.
/// `EN` means `x_a > x_b` if `a` lies further east, or in the same column and further north.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    NE,
    NW,
    SE,
    SW,
    #[default]
    EN,
    WN,
    ES,
    WS,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::NE,
        Direction::NW,
        Direction::SE,
        Direction::SW,
        Direction::EN,
        Direction::WN,
        Direction::ES,
        Direction::WS,
    ];

    // larger key = larger variable
    fn key(self, p: Point) -> (i32, i32) {
        match self {
            Direction::NE => (p.j, p.i),
            Direction::NW => (p.j, -p.i),
            Direction::SE => (-p.j, p.i),
            Direction::SW => (-p.j, -p.i),
            Direction::EN => (p.i, p.j),
            Direction::WN => (-p.i, p.j),
            Direction::ES => (p.i, -p.j),
            Direction::WS => (-p.i, -p.j),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Direction::ALL
            .into_iter()
            .find(|d| d.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown direction {s:?}")))
    }
}

/// Vertices of `p` ordered so that variable 0 is the largest under `dir`.
pub fn ordered_vertices(p: &CellCollection, dir: Direction) -> Vec<Point> {
    let mut v: Vec<Point> = p.vertices().into_iter().collect();
    v.sort_by_key(|&a| std::cmp::Reverse(dir.key(a)));
    v
}

/// The polynomial ring `K[x_a : a ∈ V(P)]`.
pub fn vertex_ring<F: Field>(p: &CellCollection, field: F, order: MonomialOrder, dir: Direction) -> Ring<F> {
    Ring::new(field, order, ordered_vertices(p, dir).into_iter().map(Var::Vertex).collect())
}

/// GF(32003), degrevlex, `EN` reading.
pub fn default_ring(p: &CellCollection) -> Ring<PrimeField> {
    vertex_ring(p, PrimeField::default(), MonomialOrder::DegRevLex, Direction::default())
}

/// Vertex → variable index.
pub fn vertex_index<F: Field>(ring: &Ring<F>) -> HashMap<Point, usize> {
    ring.vars()
        .iter()
        .enumerate()
        .filter_map(|(k, v)| match v {
            Var::Vertex(p) => Some((*p, k)),
            Var::Aux(_) => None,
        })
        .collect()
}

fn var_of(index: &HashMap<Point, usize>, p: Point) -> Result<usize> {
    index.get(&p).copied().ok_or(Error::CellNotInCollection(p))
}

/// Exponent vector of the inner 2-minor `x_a x_b - x_c x_d` of `iv`.
pub fn minor_vector(index: &HashMap<Point, usize>, n: usize, iv: &Interval) -> Result<Vec<i64>> {
    let mut u = vec![0i64; n];
    u[var_of(index, iv.a)?] += 1;
    u[var_of(index, iv.b)?] += 1;
    u[var_of(index, iv.c())?] -= 1;
    u[var_of(index, iv.d())?] -= 1;
    Ok(u)
}

fn minor<F: Field>(ring: &Ring<F>, index: &HashMap<Point, usize>, iv: &Interval) -> Result<Poly<F::Elem>> {
    Ok(ring.lattice_binomial(&minor_vector(index, ring.nvars(), iv)?))
}

/// One inner 2-minor per inner interval, in interval order.
pub fn inner_minor_ideal<F: Field>(ring: &Ring<F>, p: &CellCollection) -> Result<Vec<Poly<F::Elem>>> {
    let index = vertex_index(ring);
    p.inner_intervals().iter().map(|iv| minor(ring, &index, iv)).collect()
}

/// The 2-minors of the single cells.
pub fn adjacent_minor_ideal<F: Field>(ring: &Ring<F>, p: &CellCollection) -> Result<Vec<Poly<F::Elem>>> {
    let index = vertex_index(ring);
    p.cells().map(|c| minor(ring, &index, &Interval::of_cells(c, c))).collect()
}

/// The lattice spanned by the inner 2-minors; the cell minors form a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorLattice {
    pub vertices: Vec<Point>,
    /// One row per cell, columns indexed by `vertices`.
    pub matrix: Vec<Vec<i64>>,
    pub invariant_factors: Vec<String>,
    pub rank: usize,
    pub saturated: bool,
}

pub fn minor_lattice<F: Field>(ring: &Ring<F>, p: &CellCollection) -> Result<MinorLattice> {
    let index = vertex_index(ring);
    let n = ring.nvars();
    let matrix: Vec<Vec<i64>> =
        p.cells().map(|c| minor_vector(&index, n, &Interval::of_cells(c, c))).collect::<Result<_>>()?;
    let inv: Vec<BigInt> = smith_invariants(&to_big(&matrix));
    let vertices = ring
        .vars()
        .iter()
        .map(|v| match v {
            Var::Vertex(p) => Ok(*p),
            Var::Aux(s) => Err(Error::InvalidArgument(format!("unexpected variable {s}"))),
        })
        .collect::<Result<_>>()?;
    Ok(MinorLattice {
        vertices,
        rank: inv.len(),
        saturated: inv.iter().all(|d| d.is_one()),
        invariant_factors: inv.iter().map(|d| d.to_string()).collect(),
        matrix,
    })
}

/// `I_P : (∏ x_a)^∞`, the lattice ideal of the minor lattice, as a reduced GB.
pub fn lattice_ideal<F: Field>(
    ring: &Ring<F>,
    p: &CellCollection,
    opts: &crate::algebra::GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let gens = inner_minor_ideal(ring, p)?;
    crate::algebra::saturate_all(ring, &gens, opts)
}

/// `f_W = ∏ x_{z_k} - ∏ x_{u_k}`, after validating the walk against `p`.
pub fn zigzag_binomial<F: Field>(ring: &Ring<F>, p: &CellCollection, w: &ZigZagWalk) -> Result<Poly<F::Elem>> {
    validate_walk(p, w)?;
    let index = vertex_index(ring);
    let n = ring.nvars();
    let (mut z, mut u) = (vec![0u16; n], vec![0u16; n]);
    for s in &w.steps {
        z[var_of(&index, s.z)?] += 1;
        u[var_of(&index, s.u)?] += 1;
    }
    Ok(ring.binomial(Monomial::from_exponents(z), Monomial::from_exponents(u)))
}

/// The variable `x_v` as a polynomial.
pub fn vertex_variable<F: Field>(ring: &Ring<F>, v: Point) -> Result<Poly<F::Elem>> {
    Ok(ring.var(var_of(&vertex_index(ring), v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{format_poly, groebner_basis, GbOptions};

    fn l_tromino() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (2, 2)])
    }

    #[test]
    fn l_tromino_generators_verbatim() {
        let p = l_tromino();
        let r = default_ring(&p);
        let mut got: Vec<String> = inner_minor_ideal(&r, &p).unwrap().iter().map(|f| format_poly(&r, f)).collect();
        got.sort();
        let mut want = vec![
            "x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)",
            "x_(2,1)*x_(3,2)-x_(2,2)*x_(3,1)",
            "x_(2,2)*x_(3,3)-x_(2,3)*x_(3,2)",
            "x_(1,1)*x_(3,2)-x_(1,2)*x_(3,1)",
            "x_(2,1)*x_(3,3)-x_(2,3)*x_(3,1)",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn small_builders() {
        let cell = CellCollection::rectangle(1, 1);
        let r = default_ring(&cell);
        assert_eq!(inner_minor_ideal(&r, &cell).unwrap().len(), 1);
        assert_eq!(adjacent_minor_ideal(&r, &cell).unwrap(), inner_minor_ideal(&r, &cell).unwrap());
        let domino = CellCollection::rectangle(2, 1);
        let r = default_ring(&domino);
        assert_eq!(inner_minor_ideal(&r, &domino).unwrap().len(), 3);
        assert_eq!(adjacent_minor_ideal(&r, &domino).unwrap().len(), 2);
        let sq = CellCollection::rectangle(2, 2);
        assert_eq!(adjacent_minor_ideal(&default_ring(&sq), &sq).unwrap().len(), 4);
        let e = CellCollection::empty();
        assert!(inner_minor_ideal(&default_ring(&e), &e).unwrap().is_empty());
    }

    #[test]
    fn vertex_orders() {
        let p = CellCollection::rectangle(1, 1);
        let en = ordered_vertices(&p, Direction::EN);
        assert_eq!(en, vec![Point::new(2, 2), Point::new(2, 1), Point::new(1, 2), Point::new(1, 1)]);
        let ne = ordered_vertices(&p, Direction::NE);
        assert_eq!(ne, vec![Point::new(2, 2), Point::new(1, 2), Point::new(2, 1), Point::new(1, 1)]);
        let ws = ordered_vertices(&p, Direction::WS);
        assert_eq!(ws[0], Point::new(1, 1));
        assert_eq!("en".parse::<Direction>().unwrap(), Direction::EN);
        assert!("XY".parse::<Direction>().is_err());
    }

    #[test]
    fn lattice_of_cells() {
        let cell = CellCollection::rectangle(1, 1);
        let l = minor_lattice(&default_ring(&cell), &cell).unwrap();
        assert_eq!(l.matrix.len(), 1);
        assert_eq!(l.invariant_factors, vec!["1"]);
        assert!(l.saturated);
        let sq = CellCollection::rectangle(2, 2);
        assert_eq!(minor_lattice(&default_ring(&sq), &sq).unwrap().rank, 4);
    }

    #[test]
    fn simple_lattice_ideal_is_i_p() {
        let p = l_tromino();
        let r = default_ring(&p);
        let opts = GbOptions::default();
        let gb = groebner_basis(&r, &inner_minor_ideal(&r, &p).unwrap(), &opts).unwrap();
        assert_eq!(lattice_ideal(&r, &p, &opts).unwrap(), gb.gens());
        assert!(gb.has_squarefree_initial_ideal());
        assert_eq!(gb.len(), 5);
    }
}
