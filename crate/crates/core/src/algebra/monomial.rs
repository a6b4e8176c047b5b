use std::cmp::Ordering;

/// Dense exponent vector with cached total degree and a support bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
    mask: u64,
}

fn support_mask(exps: &[u16]) -> u64 {
    let mut m = 0u64;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n].into_boxed_slice(), deg: 0, mask: 0 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let mask = support_mask(&exps);
        Monomial { exps: exps.into_boxed_slice(), deg, mask }
    }

    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Self::from_exponents(v)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg || self.mask & !other.mask != 0 {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps: exps.into_boxed_slice(), deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial::from_exponents(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 && self.exps.len() <= 64 {
            return true;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Colon `self : other` = self / gcd(self, other).
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect();
        Monomial::from_exponents(exps)
    }

    /// Reindexes variables: exponent of old variable `i` moves to `perm[i]` in a ring of `n` variables.
    pub fn permute(&self, perm: &[usize], n: usize) -> Monomial {
        let mut v = vec![0u16; n];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                v[perm[i]] = e;
            }
        }
        Monomial::from_exponents(v)
    }
}

/// A monomial order on a ring whose variable 0 is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order: degrevlex on the first `k` variables, ties broken by degrevlex on the rest.
    Elimination(usize),
}

fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable means larger monomial
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| revlex_tail(&a.exps, &b.exps)),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.exps.len());
                degrevlex(&a.exps[..k], &b.exps[..k]).then_with(|| degrevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u16]) -> Monomial {
        Monomial::from_exponents(v.to_vec())
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 0, 2]);
        let b = m(&[1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), m(&[0, 1, 1]));
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[1, 2, 2]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
        assert_eq!(b.colon(&a), m(&[0, 1, 1]));
    }

    #[test]
    fn orders() {
        // x > y > z
        let x = m(&[1, 0, 0]);
        let y2 = m(&[0, 2, 0]);
        let xz = m(&[1, 0, 1]);
        let y = m(&[0, 1, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&x, &y2), Ordering::Less);
        // degrevlex: y^2 > xz since z is the smallest variable
        assert_eq!(MonomialOrder::DegRevLex.cmp(&y2, &xz), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&y2, &xz), Ordering::Less);
        // elimination of x: anything with x beats anything without
        assert_eq!(MonomialOrder::Elimination(1).cmp(&x, &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::Elimination(1).cmp(&y, &m(&[0, 0, 1])), Ordering::Greater);
    }
}
