//! Hilbert series, regularity, Gorenstein, pseudo-Gorenstein and level probes, CM type.

mod socle;

pub use socle::{cm_type_via_socle, socle_via_reduction, SocleData};

use crate::algebra::hilbert::HilbertData;
use crate::algebra::{groebner_basis, Field, GbOptions, Ring};
use crate::error::{Error, Result};
use crate::grid::{Cell, CellCollection};
use crate::ideals::{default_ring, inner_minor_ideal, is_prime, PrimeOptions, PrimeStatus};
use crate::shape::{classify_path, stair_analysis, PathKind};
use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// `h(t)` and `d` of `K[P]` from the initial ideal of `I_P` in `ring`.
pub fn hilbert_data<F: Field>(ring: &Ring<F>, p: &CellCollection, opts: &GbOptions) -> Result<HilbertData> {
    let gb = groebner_basis(ring, &inner_minor_ideal(ring, p)?, opts)?;
    Ok(HilbertData::of_monomials(&gb.leading_monomials(), ring.nvars()))
}

/// Hilbert data in the default ring.
pub fn default_hilbert_data(p: &CellCollection, opts: &GbOptions) -> Result<HilbertData> {
    hilbert_data(&default_ring(p), p, opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularityProxy {
    /// `deg h(t)`, which is the regularity when `K[P]` is Cohen-Macaulay.
    pub deg_h: usize,
    /// `P` is simple or a closed path, so `K[P]` is known to be Cohen-Macaulay.
    pub cm_known: bool,
}

pub fn regularity_proxy(p: &CellCollection, opts: &GbOptions) -> Result<RegularityProxy> {
    let h = default_hilbert_data(p, opts)?;
    let closed = p.is_polyomino() && !p.is_empty() && classify_path(p)?.kind == PathKind::ClosedPath;
    Ok(RegularityProxy { deg_h: h.h_degree().unwrap_or(0), cm_known: p.is_simple() || closed })
}

pub fn is_palindromic(c: &[i64]) -> bool {
    c.iter().eq(c.iter().rev())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GorensteinVerdict {
    Gorenstein,
    NotGorenstein,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GorensteinProbe {
    pub verdict: GorensteinVerdict,
    pub h: Vec<i64>,
    pub reasons: Vec<String>,
}

/// Closed paths: all maximal blocks of rank 3. Domains: palindromic `h`. Otherwise a
/// non-palindromic `h` rules Gorenstein out and a palindromic one decides nothing.
pub fn gorenstein_probe(p: &CellCollection, opts: &PrimeOptions) -> Result<GorensteinProbe> {
    let h = default_hilbert_data(p, &opts.gb)?.h;
    let prime = is_prime(p, opts)?.status;
    gorenstein_from(p, h, prime)
}

/// The probe for known `h` and primality status.
pub fn gorenstein_from(p: &CellCollection, h: Vec<i64>, prime: PrimeStatus) -> Result<GorensteinProbe> {
    let palindromic = is_palindromic(&h);
    let mut reasons = vec![format!("h is {}palindromic", if palindromic { "" } else { "not " })];
    let path = if p.is_polyomino() && !p.is_empty() { Some(classify_path(p)?) } else { None };
    let verdict = match (&path, prime) {
        (Some(d), _) if d.kind == PathKind::ClosedPath => {
            let blocks3 = d.block_ranks().iter().all(|&r| r == 3);
            reasons.push(format!("closed path, maximal blocks {}all of rank 3", if blocks3 { "" } else { "not " }));
            if prime == PrimeStatus::Prime && blocks3 != palindromic {
                reasons.push("block criterion and palindromicity disagree".into());
            }
            if blocks3 {
                GorensteinVerdict::Gorenstein
            } else {
                GorensteinVerdict::NotGorenstein
            }
        }
        (_, PrimeStatus::Prime) => {
            reasons.push("K[P] is a domain".into());
            if palindromic {
                GorensteinVerdict::Gorenstein
            } else {
                GorensteinVerdict::NotGorenstein
            }
        }
        _ if !palindromic => GorensteinVerdict::NotGorenstein,
        _ => {
            reasons.push("K[P] is not known to be a domain".into());
            GorensteinVerdict::Inconclusive
        }
    };
    Ok(GorensteinProbe { verdict, h, reasons })
}

/// Leading coefficient of `h(t)` equals 1.
pub fn is_pseudo_gorenstein(p: &CellCollection, opts: &GbOptions) -> Result<bool> {
    Ok(default_hilbert_data(p, opts)?.h.last() == Some(&1))
}

/// Pseudo-Gorenstein criterion for paths: a single cell, or at least two maximal rectangles with
/// end rectangles of rank 2, inner rectangles of rank at most 3 and no odd stair.
pub fn pseudo_gorenstein_path_criterion(p: &CellCollection) -> Result<bool> {
    if p.rank() == 1 {
        return Ok(true);
    }
    let s = stair_analysis(p)?;
    let l = &s.rectangle_ranks;
    if l.len() < 2 {
        return Ok(false);
    }
    let ends = l[0] == 2 && l[l.len() - 1] == 2;
    let inner = l[1..l.len() - 1].iter().all(|&r| r <= 3);
    Ok(ends && inner && s.odd_stairs.is_empty())
}

/// Level iff the path has no bad stair.
pub fn level_probe_for_paths(p: &CellCollection) -> Result<bool> {
    Ok(stair_analysis(p)?.bad_stairs.is_empty())
}

/// `C_p(n) = binom(np, p) / ((n - 1)p + 1)`.
pub fn fuss_catalan(p: u64, n: u64) -> Result<BigUint> {
    if p == 0 || n == 0 {
        return Err(Error::InvalidArgument("fuss-catalan needs p, n >= 1".into()));
    }
    let b = num_integer::binomial(BigUint::from(n * p), BigUint::from(p));
    let (q, r) = b.div_rem(&BigUint::from((n - 1) * p + 1));
    debug_assert!(r == BigUint::from(0u32));
    Ok(q)
}

/// Ferrers diagram whose first `r_1` columns have `u_1` cells, the next `r_2` columns
/// `u_1 + u_2` cells, and so on.
pub fn ferrers_diagram(u: &[usize], r: &[usize]) -> Result<CellCollection> {
    if u.len() != r.len() || u.is_empty() {
        return Err(Error::InvalidArgument("u and r must be nonempty and of equal length".into()));
    }
    let mut cells = Vec::new();
    let (mut col, mut height) = (1, 0);
    for (&du, &dr) in u.iter().zip(r) {
        height += du;
        for _ in 0..dr {
            cells.extend((1..=height as i32).map(|j| Cell::new(col, j)));
            col += 1;
        }
    }
    Ok(CellCollection::new(cells))
}
