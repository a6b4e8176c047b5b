use super::{default_ring, inner_minor_ideal, minor_lattice, zigzag_binomial};
use crate::algebra::lattice::{smith_invariants, to_big};
use crate::algebra::{format_poly, groebner_basis, saturate_all, Field, GbOptions, Poly, Ring};
use crate::error::{Error, Result};
use crate::grid::CellCollection;
use crate::shape::{
    classify_path, closed_path_features, find_zigzag_walk, hq_complement, ClosedPathFeatures, PathKind, ZigZagWalk,
    DEFAULT_ZIGZAG_BUDGET,
};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PrimeStatus {
    Prime,
    NotPrime,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Certificate {
    SimpleShape,
    HqComplement,
    ClosedPathShape {
        features: ClosedPathFeatures,
    },
    ZigZagWalk {
        walk: ZigZagWalk,
        binomial: String,
    },
    /// A binomial of the saturation that is not in `I_P`.
    SaturationGap {
        binomial: String,
    },
    LatticeNotSaturated {
        invariant_factors: Vec<String>,
    },
    /// `I_P` equals its saturation and the minor lattice is saturated.
    ExactFallback,
    /// Why the verdict is indeterminate.
    Budget {
        reason: String,
    },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::SimpleShape => "simpleShape",
            Certificate::HqComplement => "hqComplement",
            Certificate::ClosedPathShape { .. } => "closedPathShape",
            Certificate::ZigZagWalk { .. } => "zigZagWalk",
            Certificate::SaturationGap { .. } => "saturationGap",
            Certificate::LatticeNotSaturated { .. } => "latticeNotSaturated",
            Certificate::ExactFallback => "exactFallback",
            Certificate::Budget { .. } => "budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimalityVerdict {
    pub status: PrimeStatus,
    pub certificate: Certificate,
}

impl PrimalityVerdict {
    fn new(status: PrimeStatus, certificate: Certificate) -> Self {
        PrimalityVerdict { status, certificate }
    }

    pub fn is_prime(&self) -> bool {
        self.status == PrimeStatus::Prime
    }
}

impl fmt::Display for PrimalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.status {
            PrimeStatus::Prime => "prime",
            PrimeStatus::NotPrime => "not prime",
            PrimeStatus::Indeterminate => "indeterminate",
        };
        write!(f, "{s} (certificate: {})", self.certificate.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrimeOptions {
    pub gb: GbOptions,
    pub zigzag_budget: u64,
    /// Use the shape theorems before searching.
    pub shortcuts: bool,
}

impl Default for PrimeOptions {
    fn default() -> Self {
        PrimeOptions { gb: GbOptions::default(), zigzag_budget: DEFAULT_ZIGZAG_BUDGET, shortcuts: true }
    }
}

fn indeterminate(e: Error) -> Result<PrimalityVerdict> {
    if e.is_budget() {
        Ok(PrimalityVerdict::new(PrimeStatus::Indeterminate, Certificate::Budget { reason: e.to_string() }))
    } else {
        Err(e)
    }
}

/// Shape shortcuts, then zig-zag search, then the exact fallback.
pub fn is_prime(p: &CellCollection, opts: &PrimeOptions) -> Result<PrimalityVerdict> {
    let polyomino = p.is_polyomino() && !p.is_empty();
    if opts.shortcuts && polyomino {
        if p.is_simple() {
            return Ok(PrimalityVerdict::new(PrimeStatus::Prime, Certificate::SimpleShape));
        }
        if hq_complement(p).is_some() {
            return Ok(PrimalityVerdict::new(PrimeStatus::Prime, Certificate::HqComplement));
        }
        if classify_path(p)?.kind == PathKind::ClosedPath {
            let features = closed_path_features(p)?;
            if features.has_l_configuration || features.max_ladder_steps >= 3 {
                return Ok(PrimalityVerdict::new(PrimeStatus::Prime, Certificate::ClosedPathShape { features }));
            }
        }
    }
    match find_zigzag_walk(p, opts.zigzag_budget) {
        Ok(Some(walk)) => {
            let ring = default_ring(p);
            let f = zigzag_binomial(&ring, p, &walk)?;
            let binomial = format_poly(&ring, &f);
            return Ok(PrimalityVerdict::new(PrimeStatus::NotPrime, Certificate::ZigZagWalk { walk, binomial }));
        }
        Ok(None) => {}
        Err(e) => return indeterminate(e),
    }
    prime_by_fallback(p, &opts.gb)
}

/// Decides primality of `I_P` exactly: prime iff `I_P = I_P : (∏x)^∞` and the minor lattice is saturated.
pub fn prime_by_fallback(p: &CellCollection, gb: &GbOptions) -> Result<PrimalityVerdict> {
    let ring = default_ring(p);
    let gens = inner_minor_ideal(&ring, p)?;
    match binomial_ideal_is_prime(&ring, &gens, gb) {
        Ok(v) => Ok(v),
        Err(e) => indeterminate(e),
    }
}

/// Primality of an ideal generated by pure difference binomials `x^u - x^v`.
///
/// Such an ideal is prime iff it is saturated by the product of all variables and the
/// lattice spanned by its exponent differences is saturated.
pub fn binomial_ideal_is_prime<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F::Elem>],
    gb: &GbOptions,
) -> Result<PrimalityVerdict> {
    let basis = groebner_basis(ring, gens, gb)?;
    if basis.is_unit_ideal() {
        return Err(Error::InvalidArgument("unit ideal".into()));
    }
    let sat = saturate_all(ring, gens, gb)?;
    if let Some(g) = sat.iter().find(|g| !basis.contains(g)) {
        let binomial = format_poly(ring, g);
        return Ok(PrimalityVerdict::new(PrimeStatus::NotPrime, Certificate::SaturationGap { binomial }));
    }
    let rows = exponent_differences(ring, gens)?;
    let inv = smith_invariants(&to_big(&rows));
    if !inv.iter().all(|d| d.is_one()) {
        let invariant_factors = inv.iter().map(|d| d.to_string()).collect();
        return Ok(PrimalityVerdict::new(
            PrimeStatus::NotPrime,
            Certificate::LatticeNotSaturated { invariant_factors },
        ));
    }
    Ok(PrimalityVerdict::new(PrimeStatus::Prime, Certificate::ExactFallback))
}

/// Rows `u - v` for generators `x^u - x^v`.
pub(crate) fn exponent_differences<F: Field>(ring: &Ring<F>, gens: &[Poly<F::Elem>]) -> Result<Vec<Vec<i64>>> {
    let n = ring.nvars();
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let t = g.terms();
            let pure = t.len() == 2 && ring.field.is_zero(&ring.field.add(&t[0].1, &t[1].1));
            if !pure {
                return Err(Error::InvalidArgument(format!(
                    "not a pure difference binomial: {}",
                    format_poly(ring, g)
                )));
            }
            Ok((0..n).map(|k| i64::from(t[1].0.exponent(k)) - i64::from(t[0].0.exponent(k))).collect())
        })
        .collect()
}

/// `ht(I_P)` as the rank of the minor lattice.
pub fn height<F: Field>(ring: &Ring<F>, p: &CellCollection) -> Result<usize> {
    Ok(minor_lattice(ring, p)?.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::validate_walk;

    fn frame3() -> CellCollection {
        CellCollection::from_pairs(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)])
    }

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
    fn l_tromino_is_simple_prime() {
        let p = CellCollection::from_pairs(&[(1, 1), (2, 1), (2, 2)]);
        let v = is_prime(&p, &PrimeOptions::default()).unwrap();
        assert_eq!(v, PrimalityVerdict::new(PrimeStatus::Prime, Certificate::SimpleShape));
        assert!(prime_by_fallback(&p, &GbOptions::default()).unwrap().is_prime());
    }

    #[test]
    fn frame_is_hq_prime_and_fallback_agrees() {
        let v = is_prime(&frame3(), &PrimeOptions::default()).unwrap();
        assert_eq!(v.to_string(), "prime (certificate: hqComplement)");
        let f = prime_by_fallback(&frame3(), &GbOptions::default()).unwrap();
        assert_eq!(f.certificate, Certificate::ExactFallback);
    }

    #[test]
    fn notched_ring_has_walk_certificate() {
        let p = notched_ring();
        let v = is_prime(&p, &PrimeOptions::default()).unwrap();
        assert_eq!(v.status, PrimeStatus::NotPrime);
        let Certificate::ZigZagWalk { walk, .. } = &v.certificate else { panic!("{v:?}") };
        validate_walk(&p, walk).unwrap();
    }

    #[test]
    fn disconnected_cells_are_prime() {
        let p = CellCollection::from_pairs(&[(1, 1), (3, 1)]);
        let v = is_prime(&p, &PrimeOptions::default()).unwrap();
        assert_eq!(v.status, PrimeStatus::Prime);
        assert_eq!(v.certificate, Certificate::ExactFallback);
    }

    #[test]
    fn non_saturated_lattice_is_detected() {
        // x^2 - y^2 spans the lattice 2(e1 - e2)
        let ring = crate::algebra::Ring::new(
            crate::algebra::PrimeField::default(),
            crate::algebra::MonomialOrder::DegRevLex,
            vec![crate::algebra::Var::Aux("x".into()), crate::algebra::Var::Aux("y".into())],
        );
        let f = ring.lattice_binomial(&[2, -2]);
        let v = binomial_ideal_is_prime(&ring, &[f], &GbOptions::default()).unwrap();
        assert_eq!(v.certificate, Certificate::LatticeNotSaturated { invariant_factors: vec!["2".into()] });
    }

    #[test]
    fn budget_gives_indeterminate() {
        let opts = PrimeOptions { zigzag_budget: 2, shortcuts: false, ..Default::default() };
        let v = is_prime(&frame3(), &opts).unwrap();
        assert_eq!(v.status, PrimeStatus::Indeterminate);
    }
}
