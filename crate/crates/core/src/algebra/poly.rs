use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use crate::grid::Point;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A ring variable: either a lattice vertex or an auxiliary tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Vertex(Point),
    Aux(String),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Vertex(p) => write!(f, "x_({},{})", p.i, p.j),
            Var::Aux(s) => f.write_str(s),
        }
    }
}

/// Sparse polynomial; terms are kept in ascending monomial order, so the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from smallest to largest.
    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.last().map(|t| &t.1)
    }

    /// Panics on the zero polynomial.
    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    pub fn is_binomial(&self) -> bool {
        self.terms.len() == 2
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.0)
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, E)> {
        self.terms.pop()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponent(var) > 0)
    }
}

/// Polynomial ring `K[vars]` with a fixed monomial order; variable 0 is the largest.
#[derive(Clone, Debug)]
pub struct Ring<F: Field> {
    pub field: F,
    pub order: MonomialOrder,
    vars: Arc<Vec<Var>>,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, order: MonomialOrder, vars: Vec<Var>) -> Self {
        Ring { field, order, vars: Arc::new(vars) }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var_label(&self, i: usize) -> &Var {
        &self.vars[i]
    }

    pub fn index_of(&self, v: &Var) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ring { field: self.field.clone(), order, vars: self.vars.clone() }
    }

    /// Same variables reindexed: old variable `i` becomes new variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize], order: MonomialOrder) -> Self {
        let mut vars = vec![Var::Aux(String::new()); self.nvars()];
        for (i, v) in self.vars.iter().enumerate() {
            vars[perm[i]] = v.clone();
        }
        Ring::new(self.field.clone(), order, vars)
    }

    /// A ring with `extra` auxiliary variables prepended (they become the largest).
    pub fn with_leading_aux(&self, names: &[&str], order: MonomialOrder) -> Self {
        let mut vars: Vec<Var> = names.iter().map(|s| Var::Aux((*s).to_string())).collect();
        vars.extend(self.vars.iter().cloned());
        Ring::new(self.field.clone(), order, vars)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    // ---- constructors ----

    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Poly<F::Elem> {
        let mut terms: Vec<(Monomial, F::Elem)> = terms.into_iter().filter(|t| !self.field.is_zero(&t.1)).collect();
        terms.sort_by(|a, b| self.cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(&last.1, &c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| self.field.is_zero(&t.1)) {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_terms(vec![(self.one_monomial(), c)])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn var(&self, i: usize) -> Poly<F::Elem> {
        self.monomial(Monomial::var(self.nvars(), i, 1))
    }

    pub fn monomial(&self, m: Monomial) -> Poly<F::Elem> {
        Poly { terms: vec![(m, self.field.one())] }
    }

    /// `x^a - x^b`.
    pub fn binomial(&self, a: Monomial, b: Monomial) -> Poly<F::Elem> {
        let minus = self.field.neg(&self.field.one());
        self.from_terms(vec![(a, self.field.one()), (b, minus)])
    }

    /// The binomial `x^{u+} - x^{u-}` of an integer vector.
    pub fn lattice_binomial(&self, u: &[i64]) -> Poly<F::Elem> {
        let pos: Vec<u16> = u.iter().map(|&e| e.max(0) as u16).collect();
        let neg: Vec<u16> = u.iter().map(|&e| (-e).max(0) as u16).collect();
        self.binomial(Monomial::from_exponents(pos), Monomial::from_exponents(neg))
    }

    // ---- arithmetic ----

    fn merge(&self, a: &[(Monomial, F::Elem)], b: impl Iterator<Item = (Monomial, F::Elem)>) -> Poly<F::Elem> {
        let mut out = Vec::with_capacity(a.len() + 2);
        let mut ia = a.iter().peekable();
        let mut ib = b.peekable();
        loop {
            let ord = match (ia.peek(), ib.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => self.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(ia.next().unwrap().clone()),
                Ordering::Greater => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let (m, c) = ia.next().unwrap().clone();
                    let (_, d) = ib.next().unwrap();
                    let s = self.field.add(&c, &d);
                    if !self.field.is_zero(&s) {
                        out.push((m, s));
                    }
                }
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.merge(&a.terms, b.terms.iter().cloned())
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.merge(&a.terms, b.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, d)| (m.clone(), self.field.mul(c, d))).collect() }
    }

    /// `a * c * m`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, a: &Poly<F::Elem>, m: &Monomial, c: &F::Elem) -> Poly<F::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(n, d)| (n.mul(m), self.field.mul(c, d))).collect() }
    }

    /// `a - c * m * b`.
    pub fn sub_mul_term(&self, a: &Poly<F::Elem>, m: &Monomial, c: &F::Elem, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let negc = self.field.neg(c);
        self.merge(&a.terms, b.terms.iter().map(|(n, d)| (n.mul(m), self.field.mul(&negc, d))))
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = Poly::zero();
        for (m, c) in &b.terms {
            acc = self.add(&acc, &self.mul_term(a, m, c));
        }
        acc
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading_coefficient() {
            None => Poly::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => self.scale(a, &self.field.inv(c)),
        }
    }

    pub fn s_poly(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let l = f.lm().lcm(g.lm());
        let a = self.mul_term(f, &l.div(f.lm()), &self.field.inv(f.leading_coefficient().unwrap()));
        let b = self.mul_term(g, &l.div(g.lm()), &self.field.inv(g.leading_coefficient().unwrap()));
        self.sub(&a, &b)
    }

    /// Re-expresses a polynomial of `from` in this ring after the variable map `perm` (old index → new index).
    pub fn import(&self, f: &Poly<F::Elem>, perm: &[usize]) -> Poly<F::Elem> {
        let n = self.nvars();
        self.from_terms(f.terms.iter().map(|(m, c)| (m.permute(perm, n), c.clone())).collect())
    }

    /// Re-sorts a polynomial whose variables already match this ring.
    pub fn reorder(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_terms(f.terms.clone())
    }

    /// Divides by the largest power of variable `v` dividing every term.
    pub fn divide_out_var(&self, f: &Poly<F::Elem>, v: usize) -> Poly<F::Elem> {
        let k = f.terms.iter().map(|t| t.0.exponent(v)).min().unwrap_or(0);
        if k == 0 {
            return f.clone();
        }
        let d = Monomial::var(self.nvars(), v, k);
        Poly { terms: f.terms.iter().map(|(m, c)| (m.div(&d), c.clone())).collect() }
    }

    /// Substitutes zero for every variable in `zero_vars`.
    pub fn kill_vars(&self, f: &Poly<F::Elem>, zero_vars: &[usize]) -> Poly<F::Elem> {
        Poly { terms: f.terms.iter().filter(|(m, _)| zero_vars.iter().all(|&v| m.exponent(v) == 0)).cloned().collect() }
    }

    pub fn is_homogeneous_set(&self, gens: &[Poly<F::Elem>]) -> bool {
        gens.iter().all(|g| g.is_homogeneous())
    }
}
