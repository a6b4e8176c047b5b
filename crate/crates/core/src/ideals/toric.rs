use super::{inner_minor_ideal, minor_vector, vertex_index};
use crate::algebra::lattice::{kernel, to_big, to_i64};
use crate::algebra::{saturate_all, Field, GbOptions, Poly, Ring, Var};
use crate::error::{Error, Result};
use crate::grid::{CellCollection, Orientation, Point};
use crate::shape::hq_complement;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ToricModelKind {
    /// `x_a ↦ v_i h_j` for the maximal edge intervals through `a`.
    Graph,
    /// Graph model times `u` on the special interval `[a, e]` of a one-hole rectangle-minus-convex polyomino.
    Shikama,
    /// Graph model times `w_k` on the region `F_k` below-left of each hole.
    Mrr,
}

impl fmt::Display for ToricModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ToricModelKind::Graph => "graph",
            ToricModelKind::Shikama => "shikama",
            ToricModelKind::Mrr => "mrr",
        })
    }
}

impl FromStr for ToricModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph" => Ok(ToricModelKind::Graph),
            "shikama" => Ok(ToricModelKind::Shikama),
            "mrr" => Ok(ToricModelKind::Mrr),
            _ => Err(Error::Parse(format!("unknown toric model {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ToricModel {
    pub kind: ToricModelKind,
    pub model_vars: Vec<String>,
    /// Rows = model variables, columns = ring variables.
    pub exponent_matrix: Vec<Vec<i64>>,
    /// Corner `e` of each special region, when the model has one.
    pub special_corners: Vec<Point>,
}

fn graph_rows(p: &CellCollection, vertices: &[Point]) -> (Vec<String>, Vec<Vec<i64>>) {
    let mut names = Vec::new();
    let mut rows = Vec::new();
    for (o, tag) in [(Orientation::Vertical, "v"), (Orientation::Horizontal, "h")] {
        for (k, e) in p.maximal_edge_intervals(o).iter().enumerate() {
            names.push(format!("{tag}{}", k + 1));
            rows.push(vertices.iter().map(|&a| i64::from(e.contains(a))).collect());
        }
    }
    (names, rows)
}

fn region_row(vertices: &[Point], e: Point) -> Vec<i64> {
    vertices.iter().map(|a| i64::from(a.i <= e.i && a.j <= e.j)).collect()
}

pub fn toric_exponent_matrix<F: Field>(ring: &Ring<F>, p: &CellCollection, kind: ToricModelKind) -> Result<ToricModel> {
    let vertices: Vec<Point> = ring
        .vars()
        .iter()
        .map(|v| match v {
            Var::Vertex(a) => Ok(*a),
            Var::Aux(s) => Err(Error::InvalidArgument(format!("unexpected variable {s}"))),
        })
        .collect::<Result<_>>()?;
    let (mut names, mut rows) = graph_rows(p, &vertices);
    let mut corners = Vec::new();
    match kind {
        ToricModelKind::Graph => {}
        ToricModelKind::Shikama => {
            let hq = hq_complement(p).filter(|h| !h.touches_boundary).ok_or_else(|| {
                Error::ShapeMismatch("shikama model needs a rectangle minus an interior convex polyomino".into())
            })?;
            let e = hq.least_hole_vertex();
            names.push("u".into());
            rows.push(region_row(&vertices, e));
            corners.push(e);
        }
        ToricModelKind::Mrr => {
            for (k, hole) in p.holes().iter().enumerate() {
                let e = *hole.iter().min().expect("holes are nonempty");
                names.push(format!("w{}", k + 1));
                rows.push(region_row(&vertices, e));
                corners.push(e);
            }
        }
    }
    Ok(ToricModel { kind, model_vars: names, exponent_matrix: rows, special_corners: corners })
}

/// Kernel of the monomial map of `kind`, as a reduced GB in `ring`.
pub fn toric_ideal<F: Field>(
    ring: &Ring<F>,
    p: &CellCollection,
    kind: ToricModelKind,
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let model = toric_exponent_matrix(ring, p, kind)?;
    let n = ring.nvars();
    let basis = to_i64(&kernel(&to_big(&model.exponent_matrix), n))
        .ok_or_else(|| Error::InvalidArgument("kernel entries overflow".into()))?;
    let mut gens: Vec<Poly<F::Elem>> = basis.iter().map(|u| ring.lattice_binomial(u)).collect();
    // minors in the kernel make the saturation cheaper; they do not change the ideal
    let index = vertex_index(ring);
    let a = &model.exponent_matrix;
    for (iv, f) in p.inner_intervals().iter().zip(inner_minor_ideal(ring, p)?) {
        let u = minor_vector(&index, n, iv)?;
        if a.iter().all(|row| row.iter().zip(&u).map(|(x, y)| x * y).sum::<i64>() == 0) {
            gens.push(f);
        }
    }
    saturate_all(ring, &gens, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groebner_basis;
    use crate::ideals::default_ring;

    fn frame3() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)])
    }

    fn i_p_gb(p: &CellCollection) -> Vec<Poly<u32>> {
        let r = default_ring(p);
        groebner_basis(&r, &inner_minor_ideal(&r, p).unwrap(), &GbOptions::default()).unwrap().into_gens()
    }

    #[test]
    fn graph_model_of_l_tromino() {
        let p = CellCollection::from_pairs(&[(1, 1), (2, 1), (2, 2)]);
        let r = default_ring(&p);
        let t = toric_ideal(&r, &p, ToricModelKind::Graph, &GbOptions::default()).unwrap();
        assert_eq!(t, i_p_gb(&p));
    }

    #[test]
    fn every_vertex_maps_to_one_v_and_one_h() {
        let p = frame3();
        let r = default_ring(&p);
        let m = toric_exponent_matrix(&r, &p, ToricModelKind::Graph).unwrap();
        let nv = m.model_vars.iter().filter(|s| s.starts_with('v')).count();
        for col in 0..r.nvars() {
            let vs: i64 = (0..nv).map(|k| m.exponent_matrix[k][col]).sum();
            let hs: i64 = (nv..m.model_vars.len()).map(|k| m.exponent_matrix[k][col]).sum();
            assert_eq!((vs, hs), (1, 1));
        }
    }

    #[test]
    fn shikama_model_of_frame() {
        let p = frame3();
        let r = default_ring(&p);
        let m = toric_exponent_matrix(&r, &p, ToricModelKind::Shikama).unwrap();
        assert_eq!(m.special_corners, vec![Point::new(2, 2)]);
        let t = toric_ideal(&r, &p, ToricModelKind::Shikama, &GbOptions::default()).unwrap();
        assert_eq!(t, i_p_gb(&p));
        let mrr = toric_ideal(&r, &p, ToricModelKind::Mrr, &GbOptions::default()).unwrap();
        let quadratic: Vec<_> = mrr.iter().filter(|g| g.total_degree() == 2).cloned().collect();
        assert_eq!(quadratic, i_p_gb(&p));
    }

    #[test]
    fn shikama_needs_interior_hole() {
        let p = CellCollection::from_pairs(&[(1, 1), (2, 1), (1, 2)]);
        let r = default_ring(&p);
        assert!(matches!(toric_exponent_matrix(&r, &p, ToricModelKind::Shikama), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn graph_model_of_frame_is_larger_than_i_p() {
        // the graph model ignores the hole, so its kernel is strictly larger
        let p = frame3();
        let r = default_ring(&p);
        let t = toric_ideal(&r, &p, ToricModelKind::Graph, &GbOptions::default()).unwrap();
        assert_ne!(t, i_p_gb(&p));
        let gb = groebner_basis(&r, &t, &GbOptions::default()).unwrap();
        assert!(gb.contains_all(&i_p_gb(&p)));
    }

    #[test]
    fn model_names_parse() {
        assert_eq!("MRR".parse::<ToricModelKind>().unwrap(), ToricModelKind::Mrr);
        assert!("torus".parse::<ToricModelKind>().is_err());
    }
}
