use crate::algebra::field::is_prime as is_prime_number;
use crate::algebra::hilbert::HilbertData;
use crate::algebra::{groebner_basis, Field, GbOptions, Monomial, MonomialOrder, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::grid::CellCollection;
use crate::ideals::{inner_minor_ideal, vertex_ring, Direction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// Socle of `K[P]` modulo `d` random linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SocleData {
    pub cm_type: usize,
    /// `socle_dims[k]` = dimension of the socle in degree `k`.
    pub socle_dims: Vec<usize>,
    /// Seeds whose reductions were used.
    pub seeds: Vec<u64>,
}

impl SocleData {
    /// A single socle degree, i.e. a level ring when `K[P]` is Cohen-Macaulay.
    pub fn is_level(&self) -> bool {
        self.socle_dims.iter().filter(|&&d| d > 0).count() <= 1
    }
}

fn prime_ring(p: &CellCollection, prime: u32) -> Result<Ring<PrimeField>> {
    if !(2..1 << 31).contains(&prime) || !is_prime_number(prime) {
        return Err(Error::InvalidArgument(format!("{prime} is not a prime below 2^31")));
    }
    Ok(vertex_ring(p, PrimeField::new(prime), MonomialOrder::DegRevLex, Direction::EN))
}

// rank by Gaussian elimination
fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&k| !field.is_zero(&rows[k][c])) else { continue };
        rows.swap(r, piv);
        let inv = field.inv(&rows[r][c]);
        let pivot: Vec<F::Elem> = rows[r].iter().map(|x| field.mul(x, &inv)).collect();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !field.is_zero(&row[c]) {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(x, &field.mul(&f, y));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// One Artinian reduction with linear forms drawn from `seed`.
pub fn socle_via_reduction(p: &CellCollection, prime: u32, seed: u64, opts: &GbOptions) -> Result<SocleData> {
    let ring = prime_ring(p, prime)?;
    let n = ring.nvars();
    let mut gens = inner_minor_ideal(&ring, p)?;
    let d = HilbertData::of_monomials(&groebner_basis(&ring, &gens, opts)?.leading_monomials(), n).dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..d {
        let terms =
            (0..n).map(|k| (Monomial::var(n, k, 1), ring.field.from_i64(rng.gen_range(1..i64::from(prime))))).collect();
        gens.push(ring.from_terms(terms));
    }
    let gb = groebner_basis(&ring, &gens, opts)?;
    let lms = gb.leading_monomials();
    if HilbertData::of_monomials(&lms, n).dim != 0 {
        return Err(Error::NotArtinianAfterReduction);
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut basis: Vec<Vec<Monomial>> = vec![vec![Monomial::one(n)]];
    loop {
        let next: BTreeSet<Sorted> = basis
            .last()
            .expect("nonempty")
            .iter()
            .flat_map(|m| (0..n).map(move |k| m.mul(&Monomial::var(n, k, 1))))
            .filter(standard)
            .map(Sorted)
            .collect();
        if next.is_empty() {
            break;
        }
        basis.push(next.into_iter().map(|s| s.0).collect());
    }
    let mut socle_dims = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let above: &[Monomial] = basis.get(k + 1).map_or(&[], Vec::as_slice);
        if above.is_empty() {
            socle_dims.push(basis[k].len());
            continue;
        }
        let pos: HashMap<&Monomial, usize> = above.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows: Vec<Vec<_>> = basis[k]
            .iter()
            .map(|m| {
                let mut row = vec![ring.field.zero(); n * above.len()];
                for v in 0..n {
                    let f = gb.normal_form(&ring.monomial(m.mul(&Monomial::var(n, v, 1))));
                    for (t, c) in f.terms() {
                        row[v * above.len() + pos[t]] = c.clone();
                    }
                }
                row
            })
            .collect();
        socle_dims.push(basis[k].len() - rank(&ring.field, rows));
    }
    Ok(SocleData { cm_type: socle_dims.iter().sum(), socle_dims, seeds: vec![seed] })
}

// Monomials ordered by exponent vector, for a deterministic basis order.
#[derive(PartialEq, Eq)]
struct Sorted(Monomial);

impl PartialOrd for Sorted {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sorted {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.exponents().cmp(other.0.exponents())
    }
}

const MAX_ATTEMPTS: u64 = 8;

/// Cohen-Macaulay type as the socle dimension of a random Artinian reduction. Two reductions
/// with different seeds must agree; non-Artinian draws are retried with the next seed.
pub fn cm_type_via_socle(p: &CellCollection, prime: u32, seed: u64, opts: &GbOptions) -> Result<SocleData> {
    let mut found: Vec<SocleData> = Vec::new();
    for s in seed..seed + MAX_ATTEMPTS {
        match socle_via_reduction(p, prime, s, opts) {
            Ok(data) => {
                if let Some(prev) = found.iter().find(|f| f.socle_dims == data.socle_dims) {
                    return Ok(SocleData { seeds: vec![prev.seeds[0], s], ..data });
                }
                found.push(data);
            }
            Err(Error::NotArtinianAfterReduction) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::NotArtinianAfterReduction)
}
