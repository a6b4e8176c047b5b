//! Exact integer lattice arithmetic: Hermite and Smith forms, kernels, membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Converts back to machine integers; `None` on overflow.
pub fn to_i64(rows: &IntMatrix) -> Option<Vec<Vec<i64>>> {
    rows.iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
}

fn row_sub_mul(rows: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (a, b) = if target < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Row-style Hermite normal form: nonzero rows in echelon form with positive pivots
/// and entries above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite(rows: &IntMatrix) -> IntMatrix {
    let mut m: IntMatrix = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column at or below `top`
            let piv =
                (top..m.len()).filter(|&r| !m[r][col].is_zero()).min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(piv) = piv else { break };
            m.swap(top, piv);
            let mut done = true;
            for r in top + 1..m.len() {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&m[top][col]);
                    row_sub_mul(&mut m, r, top, &q);
                    if !m[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if top < m.len() && !m[top][col].is_zero() {
            if m[top][col].is_negative() {
                for x in m[top].iter_mut() {
                    *x = -x.clone();
                }
            }
            for r in 0..top {
                let q = m[r][col].div_floor(&m[top][col]);
                row_sub_mul(&mut m, r, top, &q);
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

pub fn rank(rows: &IntMatrix) -> usize {
    hermite(rows).len()
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
pub fn smith_invariants(rows: &IntMatrix) -> Vec<BigInt> {
    let mut m = hermite(rows);
    let nr = m.len();
    let nc = m.first().map_or(0, |r| r.len());
    let mut out = Vec::with_capacity(nr);
    for t in 0..nr {
        // choose the smallest nonzero entry in the remaining block as pivot
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..nr {
                for c in t..nc {
                    if !m[r][c].is_zero() && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                out.sort();
                return out;
            };
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
            let mut clean = true;
            for r in t + 1..nr {
                if !m[r][t].is_zero() {
                    let q = m[r][t].div_floor(&m[t][t]);
                    row_sub_mul(&mut m, r, t, &q);
                    clean &= m[r][t].is_zero();
                }
            }
            for c in t + 1..nc {
                if !m[t][c].is_zero() {
                    let q = m[t][c].div_floor(&m[t][t]);
                    for r in t..nr {
                        let d = &q * &m[r][t];
                        m[r][c] -= d;
                    }
                    clean &= m[t][c].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the rest of the block
            let bad = (t + 1..nr)
                .flat_map(|r| (t + 1..nc).map(move |c| (r, c)))
                .find(|&(r, c)| !m[r][c].is_multiple_of(&m[t][t]));
            match bad {
                Some((r, _)) => {
                    let add = m[r].clone();
                    for (x, y) in m[t].iter_mut().zip(add.iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        out.push(m[t][t].abs());
    }
    out.sort();
    out
}

/// Saturated in `Z^n` iff every invariant factor is 1.
pub fn is_saturated(rows: &IntMatrix) -> bool {
    smith_invariants(rows).iter().all(|d| d.is_one())
}

/// A basis of `{x ∈ Z^n : A x = 0}` for the `m × n` matrix `a`.
pub fn kernel(a: &IntMatrix, n: usize) -> IntMatrix {
    let m = a.len();
    // row-reduce [A^T | I_n]
    let mut aug: IntMatrix = (0..n)
        .map(|j| {
            let mut r: Vec<BigInt> = (0..m).map(|i| a[i][j].clone()).collect();
            r.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let mut top = 0;
    for col in 0..m {
        loop {
            let piv =
                (top..n).filter(|&r| !aug[r][col].is_zero()).min_by(|&x, &y| aug[x][col].abs().cmp(&aug[y][col].abs()));
            let Some(piv) = piv else { break };
            aug.swap(top, piv);
            let mut done = true;
            for r in top + 1..n {
                if !aug[r][col].is_zero() {
                    let q = aug[r][col].div_floor(&aug[top][col]);
                    row_sub_mul(&mut aug, r, top, &q);
                    done &= aug[r][col].is_zero();
                }
            }
            if done {
                top += 1;
                break;
            }
        }
    }
    let basis: IntMatrix = aug[top..].iter().map(|r| r[m..].to_vec()).collect();
    size_reduce(basis)
}

fn norm2(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

/// Cheap pairwise size reduction; keeps the lattice, shortens vectors.
pub fn size_reduce(mut b: IntMatrix) -> IntMatrix {
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 50 {
        changed = false;
        rounds += 1;
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                let nj = norm2(&b[j]);
                if nj.is_zero() {
                    continue;
                }
                let dot: BigInt = b[i].iter().zip(b[j].iter()).map(|(x, y)| x * y).sum();
                // nearest integer to dot / nj
                let two = BigInt::from(2);
                let q = (&dot * &two + &nj).div_floor(&(&nj * &two));
                if !q.is_zero() {
                    let cand: Vec<BigInt> = b[i].iter().zip(b[j].iter()).map(|(x, y)| x - &q * y).collect();
                    if norm2(&cand) < norm2(&b[i]) {
                        b[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
    b
}

/// Lattice spanned by the rows of a matrix, kept in Hermite form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    hnf: IntMatrix,
    dim: usize,
}

impl Lattice {
    pub fn new(rows: &IntMatrix, dim: usize) -> Self {
        Lattice { hnf: hermite(rows), dim }
    }

    pub fn from_i64(rows: &[Vec<i64>], dim: usize) -> Self {
        Self::new(&to_big(rows), dim)
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for row in &self.hnf {
            let col = row.iter().position(|x| !x.is_zero()).unwrap();
            if v[..col].iter().any(|x| !x.is_zero()) {
                return false;
            }
            if !v[col].is_multiple_of(&row[col]) {
                return false;
            }
            let q = &v[col] / &row[col];
            for (x, y) in v.iter_mut().zip(row.iter()) {
                *x -= &q * y;
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        self.contains(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.hnf.iter().all(|r| self.contains(r))
    }

    pub fn is_saturated(&self) -> bool {
        is_saturated(&self.hnf)
    }

    /// `(L ⊗ Q) ∩ Z^n`.
    pub fn saturation(&self) -> Lattice {
        // the kernel of the kernel
        let k = kernel(&self.hnf, self.dim);
        Lattice::new(&kernel(&k, self.dim), self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn mat_vec(a: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
    }

    #[test]
    fn hermite_form() {
        let h = hermite(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(h.len(), 3);
        assert_eq!(rank(&big(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn smith_of_diagonal() {
        let inv = smith_invariants(&big(&[&[2, 0], &[0, 3]]));
        assert_eq!(inv, vec![BigInt::from(1), BigInt::from(6)]);
        let inv = smith_invariants(&big(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
        assert_eq!(inv, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn saturation_flags() {
        assert!(is_saturated(&big(&[&[1, -1, 0], &[0, 1, -1]])));
        assert!(!is_saturated(&big(&[&[2, 0, 0]])));
        assert!(!is_saturated(&big(&[&[1, 1, 0], &[1, -1, 0]])));
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = big(&[&[1, 1, 1, 0], &[0, 1, 2, 3]]);
        let k = kernel(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
        assert!(is_saturated(&k));
    }

    #[test]
    fn membership() {
        let l = Lattice::from_i64(&[vec![2, 0], vec![1, 1]], 2);
        assert!(l.contains_i64(&[3, 1]));
        assert!(!l.contains_i64(&[1, 0]));
        assert!(!l.is_saturated());
        let s = l.saturation();
        assert!(s.contains_i64(&[1, 0]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn saturation_of_sublattice() {
        let l = Lattice::from_i64(&[vec![2, -2, 0]], 3);
        let s = l.saturation();
        assert!(s.contains_i64(&[1, -1, 0]));
        assert_eq!(s.rank(), 1);
        assert!(l.contains_lattice(&l));
        assert!(s.contains_lattice(&l));
        assert!(!l.contains_lattice(&s));
    }
}
