//! Canonical polynomial text: variables ascending inside a monomial, monomials
//! ascending by their variable words, e.g. `x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)`.

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Poly, Ring, Var};
use crate::error::{Error, Result};
use crate::grid::Point;
use num_bigint::BigInt;

// variable indices of the ring sorted by label
fn label_order<F: Field>(ring: &Ring<F>) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..ring.nvars()).collect();
    idx.sort_by(|&a, &b| ring.var_label(a).cmp(ring.var_label(b)));
    idx
}

// monomial as a word of (variable rank, exponent) pairs
fn word(m: &Monomial, rank_of: &[usize]) -> Vec<(usize, u16)> {
    let mut w: Vec<(usize, u16)> = m.support().map(|v| (rank_of[v], m.exponent(v))).collect();
    w.sort();
    w
}

pub fn format_monomial<F: Field>(ring: &Ring<F>, m: &Monomial) -> String {
    let order = label_order(ring);
    let mut rank_of = vec![0; ring.nvars()];
    for (r, &v) in order.iter().enumerate() {
        rank_of[v] = r;
    }
    format_word(ring, &word(m, &rank_of), &order)
}

fn format_word<F: Field>(ring: &Ring<F>, w: &[(usize, u16)], order: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&(r, e)| {
            let v = ring.var_label(order[r]);
            if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn format_poly<F: Field>(ring: &Ring<F>, f: &Poly<F::Elem>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let order = label_order(ring);
    let mut rank_of = vec![0; ring.nvars()];
    for (r, &v) in order.iter().enumerate() {
        rank_of[v] = r;
    }
    let mut terms: Vec<(Vec<(usize, u16)>, &F::Elem)> = f.terms().iter().map(|(m, c)| (word(m, &rank_of), c)).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::new();
    for (k, (w, c)) in terms.iter().enumerate() {
        let mut coef = ring.field.format(c);
        let neg = coef.starts_with('-');
        if neg {
            coef.remove(0);
        }
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let mono = format_word(ring, w, &order);
        match (coef.as_str(), w.is_empty()) {
            ("1", false) => out.push_str(&mono),
            (_, true) => out.push_str(&coef),
            _ => {
                out.push_str(&coef);
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

pub fn format_polys<F: Field>(ring: &Ring<F>, fs: &[Poly<F::Elem>]) -> Vec<String> {
    fs.iter().map(|f| format_poly(ring, f)).collect()
}

/// `f` scaled so that its first printed term has coefficient 1.
pub fn print_monic<F: Field>(ring: &Ring<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let order = label_order(ring);
    let mut rank_of = vec![0; ring.nvars()];
    for (r, &v) in order.iter().enumerate() {
        rank_of[v] = r;
    }
    match f.terms().iter().min_by(|a, b| word(&a.0, &rank_of).cmp(&word(&b.0, &rank_of))) {
        Some((_, c)) => ring.scale(f, &ring.field.inv(c)),
        None => f.clone(),
    }
}

/// Generator listing: each polynomial made [`print_monic`], then formatted.
pub fn format_generators<F: Field>(ring: &Ring<F>, fs: &[Poly<F::Elem>]) -> Vec<String> {
    fs.iter().map(|f| format_poly(ring, &print_monic(ring, f))).collect()
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.s.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse().map_err(|_| self.err("expected integer"))
    }

    fn number(&mut self) -> Result<(BigInt, BigInt)> {
        let n = self.integer()?;
        if self.eat(b'/') {
            Ok((n, self.integer()?))
        } else {
            Ok((n, BigInt::from(1)))
        }
    }

    fn variable(&mut self) -> Result<Var> {
        self.skip_ws();
        let start = self.pos;
        if self.s[self.pos..].starts_with(b"x_(") {
            self.pos += 3;
            let i = self.integer()?;
            if !self.eat(b',') {
                return Err(self.err("expected ','"));
            }
            let j = self.integer()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            let conv = |v: BigInt| i32::try_from(v).map_err(|_| Error::Parse("coordinate out of range".into()));
            return Ok(Var::Vertex(Point::new(conv(i)?, conv(j)?)));
        }
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected variable"));
        }
        Ok(Var::Aux(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()))
    }
}

/// Parses a polynomial in the grammar produced by [`format_poly`].
pub fn parse_poly<F: Field>(ring: &Ring<F>, text: &str) -> Result<Poly<F::Elem>> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let n = ring.nvars();
    let mut terms = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let mut sign = 1i64;
        if lx.eat(b'-') {
            sign = -1;
        } else if !lx.eat(b'+') && !first {
            return Err(lx.err("expected '+' or '-'"));
        }
        first = false;
        let mut coef = ring.field.from_i64(sign);
        let mut exps = vec![0u16; n];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let (num, den) = lx.number()?;
                    let c = ring.field.from_ratio(&num, &den).ok_or_else(|| lx.err("zero denominator"))?;
                    coef = ring.field.mul(&coef, &c);
                }
                Some(_) => {
                    let v = lx.variable()?;
                    let k = ring.index_of(&v).ok_or_else(|| Error::Parse(format!("unknown variable {v}")))?;
                    let e = if lx.eat(b'^') {
                        u16::try_from(lx.integer()?).map_err(|_| lx.err("bad exponent"))?
                    } else {
                        1
                    };
                    exps[k] += e;
                }
                None => return Err(lx.err("unexpected end")),
            }
            if !lx.eat(b'*') {
                break;
            }
        }
        terms.push((Monomial::from_exponents(exps), coef));
    }
    if first {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(ring.from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_listing_is_print_monic() {
        let r = Ring::new(
            crate::algebra::PrimeField::new(7),
            crate::algebra::MonomialOrder::DegRevLex,
            vec![crate::algebra::Var::Aux("a".into()), crate::algebra::Var::Aux("b".into())],
        );
        let f = parse_poly(&r, "-a+3*b").unwrap();
        assert_eq!(format_generators(&r, &[f.clone()]), ["a-3*b"]);
        assert_eq!(format_poly(&r, &f), "-a+3*b");
    }
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::monomial::MonomialOrder;

    fn cell_ring<F: Field>(field: F) -> Ring<F> {
        let vars = [(2, 2), (2, 1), (1, 2), (1, 1)].iter().map(|&(i, j)| Var::Vertex(Point::new(i, j))).collect();
        Ring::new(field, MonomialOrder::DegRevLex, vars)
    }

    #[test]
    fn canonical_cell_minor() {
        let r = cell_ring(PrimeField::default());
        let f = r.binomial(Monomial::from_exponents(vec![1, 0, 0, 1]), Monomial::from_exponents(vec![0, 1, 1, 0]));
        assert_eq!(format_poly(&r, &f), "x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)");
        assert_eq!(parse_poly(&r, "x_(1,1)*x_(2,2)-x_(1,2)*x_(2,1)").unwrap(), f);
    }

    #[test]
    fn round_trip_with_coefficients() {
        let r = cell_ring(Rationals);
        let txt = "-1/2*x_(1,1)^2+3*x_(2,1)-7";
        let f = parse_poly(&r, txt).unwrap();
        assert_eq!(format_poly(&r, &f), "-7-1/2*x_(1,1)^2+3*x_(2,1)");
        assert_eq!(parse_poly(&r, &format_poly(&r, &f)).unwrap(), f);
    }

    #[test]
    fn rejects_garbage() {
        let r = cell_ring(PrimeField::default());
        assert!(parse_poly(&r, "x_(9,9)").is_err());
        assert!(parse_poly(&r, "").is_err());
        assert!(parse_poly(&r, "x_(1,1) x_(2,2)").is_err());
    }
}
