//! Hilbert series of monomial quotients.

use super::monomial::Monomial;
use serde::Serialize;

/// Integer polynomial in `t`, index = exponent, trailing zeros trimmed.
pub type UniPoly = Vec<i64>;

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(a: &mut UniPoly, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `1 - t^d`.
fn one_minus_power(d: u32) -> UniPoly {
    let mut p = vec![0; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    trim(p)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for (a, g) in gens.iter().enumerate() {
        for h in &gens[a + 1..] {
            if !g.is_coprime(h) {
                return false;
            }
        }
    }
    true
}

fn numerator_rec(gens: Vec<Monomial>) -> UniPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    if pairwise_coprime(&gens) {
        return gens.iter().fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_power(g.degree())));
    }
    // pivot on the variable occurring in the most non-linear generators
    let n = gens[0].nvars();
    let mut count = vec![0usize; n];
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let v = (0..n).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
    let p = Monomial::var(n, v, 1);

    // N(I) = N(I + (p)) + t * N(I : p)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(v) == 0).cloned().collect();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&p)).collect();
    let mut out = numerator_rec(minimalize(plus));
    add_shifted(&mut out, &numerator_rec(minimalize(colon)), 1, 1);
    trim(out)
}

/// Numerator `N(t)` of `HS_{S/(gens)} = N(t) / (1 - t)^n`.
pub fn hilbert_numerator(gens: &[Monomial]) -> UniPoly {
    numerator_rec(minimalize(gens.to_vec()))
}

/// Reduced Hilbert series data `h(t) / (1 - t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub numerator: UniPoly,
    pub h: UniPoly,
    pub dim: usize,
    pub multiplicity: i64,
}

impl HilbertData {
    pub fn from_numerator(numerator: UniPoly, nvars: usize) -> Self {
        let mut h = numerator.clone();
        let mut k = 0;
        while !h.is_empty() && h.iter().sum::<i64>() == 0 {
            h = divide_by_one_minus_t(&h);
            k += 1;
        }
        let multiplicity = h.iter().sum();
        let dim = if numerator.is_empty() { 0 } else { nvars.saturating_sub(k) };
        HilbertData { numerator, h, dim, multiplicity }
    }

    pub fn of_monomials(gens: &[Monomial], nvars: usize) -> Self {
        Self::from_numerator(hilbert_numerator(gens), nvars)
    }

    /// Degree of `h`, or `None` for the zero module.
    pub fn h_degree(&self) -> Option<usize> {
        (!self.h.is_empty()).then(|| self.h.len() - 1)
    }

    /// `dim_K (S/I)_k` for `k = 0..len`.
    pub fn series(&self, len: usize) -> Vec<i64> {
        series_expansion(&self.h, self.dim, len)
    }
}

/// Synthetic division by `1 - t`; assumes `p(1) = 0`.
fn divide_by_one_minus_t(p: &[i64]) -> UniPoly {
    // p = (1 - t) q  ⇒  q_k = sum_{i ≤ k} p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(q)
}

/// First `len` coefficients of `p(t) / (1 - t)^d`.
pub fn series_expansion(p: &[i64], d: usize, len: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..len).map(|k| p.get(k).copied().unwrap_or(0)).collect();
    for _ in 0..d {
        for k in 1..len {
            s[k] += s[k - 1];
        }
    }
    s
}

/// Brute-force count of degree-`k` monomials outside the ideal, for `k = 0..len`.
pub fn count_standard_monomials(gens: &[Monomial], nvars: usize, len: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(len);
    for deg in 0..len {
        let mut count = 0;
        let mut exps = vec![0u16; nvars];
        enumerate_degree(&mut exps, 0, deg as u16, &mut |e| {
            let m = Monomial::from_exponents(e.to_vec());
            if !gens.iter().any(|g| g.divides(&m)) {
                count += 1;
            }
        });
        out.push(count);
    }
    out
}

fn enumerate_degree(exps: &mut [u16], pos: usize, left: u16, f: &mut impl FnMut(&[u16])) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        f(exps);
        exps[pos] = 0;
        return;
    }
    if exps.is_empty() {
        if left == 0 {
            f(exps);
        }
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        enumerate_degree(exps, pos + 1, left - e, f);
    }
    exps[pos] = 0;
}
