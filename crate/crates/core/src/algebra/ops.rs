//! Ideal operations built on Gröbner bases.

use super::field::Field;
use super::groebner::{groebner_basis, GbOptions, GroebnerBasis};
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SaturationMethod {
    /// Degrevlex with the variable last, then divide out its powers. Needs homogeneous input.
    #[default]
    Homogeneous,
    /// Adjoin `y*v - 1` and eliminate `y`.
    TagVariable,
}

/// Reduced GBs agree (both are computed in `ring`'s order).
pub fn ideal_equal<F: Field>(
    ring: &Ring<F>,
    i: &[Poly<F::Elem>],
    j: &[Poly<F::Elem>],
    opts: &GbOptions,
) -> Result<bool> {
    let a = groebner_basis(ring, i, opts)?;
    let b = groebner_basis(ring, j, opts)?;
    Ok(a.gens() == b.gens())
}

/// `I ⊆ J` by reduction of the generators of `I`.
pub fn ideal_contains<F: Field>(j: &GroebnerBasis<F>, i: &[Poly<F::Elem>]) -> bool {
    j.contains_all(i)
}

/// `I : v^∞` for a single variable.
pub fn saturate_var<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F::Elem>],
    v: usize,
    method: SaturationMethod,
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    match method {
        SaturationMethod::Homogeneous => {
            if !ring.is_homogeneous_set(gens) {
                return Err(Error::NotHomogeneous);
            }
            let n = ring.nvars();
            // move v to the end so it is the smallest variable
            let perm: Vec<usize> = (0..n)
                .map(|k| match k.cmp(&v) {
                    std::cmp::Ordering::Less => k,
                    std::cmp::Ordering::Equal => n - 1,
                    std::cmp::Ordering::Greater => k - 1,
                })
                .collect();
            let mut inv = vec![0; n];
            for (k, &p) in perm.iter().enumerate() {
                inv[p] = k;
            }
            let work = ring.permuted(&perm, MonomialOrder::DegRevLex);
            let moved: Vec<_> = gens.iter().map(|g| work.import(g, &perm)).collect();
            let gb = groebner_basis(&work, &moved, opts)?;
            Ok(gb.gens().iter().map(|g| ring.import(&work.divide_out_var(g, n - 1), &inv)).collect())
        }
        SaturationMethod::TagVariable => {
            let n = ring.nvars();
            let work = ring.with_leading_aux(&["_sat"], MonomialOrder::Elimination(1));
            let shift: Vec<usize> = (1..=n).collect();
            let mut moved: Vec<_> = gens.iter().map(|g| work.import(g, &shift)).collect();
            let mut e = vec![0u16; n + 1];
            e[0] = 1;
            e[v + 1] = 1;
            moved.push(work.sub(&work.monomial(Monomial::from_exponents(e)), &work.one()));
            let gb = groebner_basis(&work, &moved, opts)?;
            let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
            Ok(gb.gens().iter().filter(|g| !g.involves(0)).map(|g| import_dropping(ring, g, &back)).collect())
        }
    }
}

/// `I : (∏ vars)^∞` by one pass of single-variable saturations, which is exact.
pub fn saturate<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F::Elem>],
    vars: &[usize],
    method: SaturationMethod,
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let mut cur = gens.to_vec();
    for &v in vars {
        cur = saturate_var(ring, &cur, v, method, opts)?;
    }
    Ok(groebner_basis(ring, &cur, opts)?.into_gens())
}

/// Saturation by all variables of the ring.
pub fn saturate_all<F: Field>(ring: &Ring<F>, gens: &[Poly<F::Elem>], opts: &GbOptions) -> Result<Vec<Poly<F::Elem>>> {
    let method =
        if ring.is_homogeneous_set(gens) { SaturationMethod::Homogeneous } else { SaturationMethod::TagVariable };
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    saturate(ring, gens, &vars, method, opts)
}

// maps variables by `map` (old → new); old variables mapped to usize::MAX must not occur
fn import_dropping<F: Field>(ring: &Ring<F>, f: &Poly<F::Elem>, map: &[usize]) -> Poly<F::Elem> {
    let n = ring.nvars();
    ring.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (k, &x) in m.exponents().iter().enumerate() {
                    if x > 0 {
                        e[map[k]] = x;
                    }
                }
                (Monomial::from_exponents(e), c.clone())
            })
            .collect(),
    )
}

/// `I ∩ K[keep]` via a block elimination order.
pub fn eliminate<F: Field>(
    ring: &Ring<F>,
    gens: &[Poly<F::Elem>],
    keep: &[usize],
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let n = ring.nvars();
    let drop: Vec<usize> = (0..n).filter(|k| !keep.contains(k)).collect();
    let mut perm = vec![0; n];
    for (pos, &k) in drop.iter().chain(keep.iter()).enumerate() {
        perm[k] = pos;
    }
    let mut inv = vec![0; n];
    for (k, &p) in perm.iter().enumerate() {
        inv[p] = k;
    }
    let work = ring.permuted(&perm, MonomialOrder::Elimination(drop.len()));
    let moved: Vec<_> = gens.iter().map(|g| work.import(g, &perm)).collect();
    let gb = groebner_basis(&work, &moved, opts)?;
    let k = drop.len();
    Ok(gb.gens().iter().filter(|g| (0..k).all(|v| !g.involves(v))).map(|g| ring.import(g, &inv)).collect())
}

/// `I ∩ J` as the elimination of `t` from `t·I + (1−t)·J`.
pub fn intersect<F: Field>(
    ring: &Ring<F>,
    i: &[Poly<F::Elem>],
    j: &[Poly<F::Elem>],
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let n = ring.nvars();
    let work = ring.with_leading_aux(&["_t"], MonomialOrder::Elimination(1));
    let shift: Vec<usize> = (1..=n).collect();
    let t = work.var(0);
    let one_minus_t = work.sub(&work.one(), &t);
    let mut gens = Vec::with_capacity(i.len() + j.len());
    for f in i {
        gens.push(work.mul(&t, &work.import(f, &shift)));
    }
    for g in j {
        gens.push(work.mul(&one_minus_t, &work.import(g, &shift)));
    }
    let gb = groebner_basis(&work, &gens, opts)?;
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let out: Vec<_> = gb.gens().iter().filter(|g| !g.involves(0)).map(|g| import_dropping(ring, g, &back)).collect();
    Ok(groebner_basis(ring, &out, opts)?.into_gens())
}

/// Generators of `I : f` for a single polynomial `f`, via `(I ∩ (f)) / f`.
pub fn colon<F: Field>(
    ring: &Ring<F>,
    i: &[Poly<F::Elem>],
    f: &Poly<F::Elem>,
    opts: &GbOptions,
) -> Result<Vec<Poly<F::Elem>>> {
    let inter = intersect(ring, i, std::slice::from_ref(f), opts)?;
    inter.iter().map(|g| exact_divide(ring, g, f)).collect()
}

/// Exact division `g / f`, failing if `f` does not divide `g`.
pub fn exact_divide<F: Field>(ring: &Ring<F>, g: &Poly<F::Elem>, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    let mut rem = g.clone();
    let mut quot = Poly::zero();
    let lc_inv =
        ring.field.inv(f.leading_coefficient().ok_or_else(|| Error::InvalidArgument("division by zero".into()))?);
    while let Some((m, c)) = rem.terms().last().cloned() {
        if !f.lm().divides(&m) {
            return Err(Error::InvalidArgument("inexact division".into()));
        }
        let q = m.div(f.lm());
        let coef = ring.field.mul(&c, &lc_inv);
        quot = ring.add(&quot, &ring.from_terms(vec![(q.clone(), coef.clone())]));
        rem = ring.sub_mul_term(&rem, &q, &coef, f);
    }
    Ok(quot)
}
