use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Smallest lcm first.
    Normal,
    /// Smallest sugar degree first, ties by lcm.
    Sugar,
}

#[derive(Clone, Copy, Debug)]
pub struct GbOptions {
    pub max_pairs: u64,
    /// `None` picks normal selection for graded orders and sugar otherwise.
    pub selection: Option<Selection>,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { max_pairs: DEFAULT_PAIR_BUDGET, selection: None }
    }
}

impl GbOptions {
    pub fn with_budget(max_pairs: u64) -> Self {
        GbOptions { max_pairs, ..Default::default() }
    }
}

/// A reduced Gröbner basis, monic and sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub ring: Ring<F>,
    gens: Vec<Poly<F::Elem>>,
}

/// Full reduction of `f` by `basis`; no term of the result is divisible by a leading monomial of `basis`.
pub fn reduce<F: Field>(ring: &Ring<F>, f: &Poly<F::Elem>, basis: &[&Poly<F::Elem>]) -> Poly<F::Elem> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = p.terms().last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm());
                let coef = ring.field.mul(&c, &ring.field.inv(g.leading_coefficient().unwrap()));
                p = ring.sub_mul_term(&p, &q, &coef, g);
            }
            None => rem.extend(p.pop_leading()),
        }
    }
    ring.from_terms(rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Builder<'a, F: Field> {
    ring: &'a Ring<F>,
    polys: Vec<Poly<F::Elem>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a, F: Field> Builder<'a, F> {
    fn reduce_active(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let basis: Vec<&Poly<F::Elem>> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce(self.ring, f, &basis)
    }

    // Gebauer–Möller installation of a new basis element.
    fn insert(&mut self, h: Poly<F::Elem>, sugar: u32) {
        let hi = self.polys.len();
        let hm = h.lm().clone();
        self.polys.push(h);
        self.sugar.push(sugar);

        let mut c: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, hm.lcm(self.polys[g].lm()))).collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let coprime = hm.is_coprime(self.polys[g1].lm());
            if coprime || !(c.iter().any(|(_, l2)| l2.divides(&l1)) || d.iter().any(|(_, l2)| l2.divides(&l1))) {
                d.push((g1, l1));
            }
        }
        let polys = &self.polys;
        self.pairs
            .retain(|p| !(hm.divides(&p.lcm) && hm.lcm(polys[p.i].lm()) != p.lcm && hm.lcm(polys[p.j].lm()) != p.lcm));
        for (g, l) in d {
            if hm.is_coprime(self.polys[g].lm()) {
                continue;
            }
            let sg = self.sugar[g] + l.degree() - self.polys[g].lm().degree();
            let sh = sugar + l.degree() - hm.degree();
            self.pairs.push(Pair { i: g, j: hi, lcm: l, sugar: sg.max(sh) });
        }
        let polys = &self.polys;
        self.active.retain(|&g| !hm.divides(polys[g].lm()));
        self.active.push(hi);
    }

    fn next_pair(&mut self, sel: Selection) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = self.ring;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                match sel {
                    Selection::Normal => ring.cmp(&p.lcm, &q.lcm).then(p.sugar.cmp(&q.sugar)),
                    Selection::Sugar => p.sugar.cmp(&q.sugar).then_with(|| ring.cmp(&p.lcm, &q.lcm)),
                }
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }
}

/// Buchberger's algorithm with the Gebauer–Möller criteria.
pub fn groebner_basis<F: Field>(ring: &Ring<F>, gens: &[Poly<F::Elem>], opts: &GbOptions) -> Result<GroebnerBasis<F>> {
    let sel = opts.selection.unwrap_or(if ring.order.is_graded() { Selection::Normal } else { Selection::Sugar });
    let mut b = Builder { ring, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut input: Vec<&Poly<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|x, y| ring.cmp(x.lm(), y.lm()));
    for g in input {
        let h = b.reduce_active(g);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(GroebnerBasis { ring: ring.clone(), gens: vec![ring.one()] });
        }
        let s = g.total_degree();
        b.insert(ring.monic(&h), s);
    }

    let mut count = 0u64;
    while let Some(p) = b.next_pair(sel) {
        count += 1;
        if count > opts.max_pairs {
            return Err(Error::BudgetExceeded { what: "critical pair", budget: opts.max_pairs });
        }
        let s = ring.s_poly(&b.polys[p.i], &b.polys[p.j]);
        let h = b.reduce_active(&s);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(GroebnerBasis { ring: ring.clone(), gens: vec![ring.one()] });
        }
        b.insert(ring.monic(&h), p.sugar);
    }

    // the active set is already minimal; interreduce tails
    let mins: Vec<Poly<F::Elem>> = b.active.iter().map(|&k| b.polys[k].clone()).collect();
    let mut out = Vec::with_capacity(mins.len());
    for (k, g) in mins.iter().enumerate() {
        let others: Vec<&Poly<F::Elem>> = mins.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p).collect();
        out.push(ring.monic(&reduce(ring, g, &others)));
    }
    out.sort_by(|x, y| ring.cmp(x.lm(), y.lm()));
    Ok(GroebnerBasis { ring: ring.clone(), gens: out })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn gens(&self) -> &[Poly<F::Elem>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Poly<F::Elem>> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.lm().is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let basis: Vec<&Poly<F::Elem>> = self.gens.iter().collect();
        reduce(&self.ring, f, &basis)
    }

    pub fn contains(&self, f: &Poly<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_all(&self, fs: &[Poly<F::Elem>]) -> bool {
        fs.iter().all(|f| self.contains(f))
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        for a in 0..self.gens.len() {
            for b in a + 1..self.gens.len() {
                let s = self.ring.s_poly(&self.gens[a], &self.gens[b]);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// True when all leading monomials are squarefree.
    pub fn has_squarefree_initial_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.lm().is_squarefree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::monomial::MonomialOrder;
    use crate::algebra::poly::Var;

    fn ring<F: Field>(field: F, names: &[&str], order: MonomialOrder) -> Ring<F> {
        Ring::new(field, order, names.iter().map(|s| Var::Aux(s.to_string())).collect())
    }

    fn m(v: &[u16]) -> Monomial {
        Monomial::from_exponents(v.to_vec())
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let r = ring(PrimeField::default(), &["a", "b", "c", "d"], MonomialOrder::DegRevLex);
        let f = r.binomial(m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1]));
        let gb = groebner_basis(&r, &[f.clone()], &GbOptions::default()).unwrap();
        assert_eq!(gb.gens(), &[f]);
        assert!(gb.verify());
    }

    #[test]
    fn hand_trace_lex() {
        // lex x > y: in(y^2 - x) = x, and x^2 - y reduces by x -> y^2 to y^4 - y,
        // so the reduced basis is {y^4 - y, x - y^2}
        let r = ring(Rationals, &["x", "y"], MonomialOrder::Lex);
        let f = r.binomial(m(&[2, 0]), m(&[0, 1]));
        let g = r.binomial(m(&[0, 2]), m(&[1, 0]));
        let gb = groebner_basis(&r, &[f.clone(), g.clone()], &GbOptions::default()).unwrap();
        assert!(gb.verify());
        let lms = gb.leading_monomials();
        assert_eq!(lms, vec![m(&[0, 4]), m(&[1, 0])]);
        // x - y^2 and y^4 - y
        assert_eq!(gb.gens()[1], r.binomial(m(&[1, 0]), m(&[0, 2])));
        assert_eq!(gb.gens()[0], r.binomial(m(&[0, 4]), m(&[0, 1])));
        assert!(gb.contains(&f) && gb.contains(&g));
    }

    #[test]
    fn unit_ideal() {
        let r = ring(PrimeField::default(), &["x"], MonomialOrder::DegRevLex);
        let f = r.sub(&r.var(0), &r.one());
        let g = r.var(0);
        let gb = groebner_basis(&r, &[f, g], &GbOptions::default()).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(PrimeField::default(), &["x", "y", "z"], MonomialOrder::Lex);
        let f = r.binomial(m(&[2, 0, 0]), m(&[0, 1, 1]));
        let g = r.binomial(m(&[0, 2, 0]), m(&[1, 0, 1]));
        let h = r.binomial(m(&[0, 0, 2]), m(&[1, 1, 0]));
        let err = groebner_basis(&r, &[f, g, h], &GbOptions::with_budget(0)).unwrap_err();
        assert!(err.is_budget());
    }
}
