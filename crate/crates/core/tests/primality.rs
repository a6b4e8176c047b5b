use polyomino_core::enumerate::enumerate_polyominoes;
use polyomino_core::ideals::{is_prime, PrimeOptions, PrimeStatus};
use polyomino_core::shape::{find_zigzag_walk, DEFAULT_ZIGZAG_BUDGET};
use rayon::prelude::*;

#[test]
fn rank_nine_with_holes_prime_iff_no_walk() {
    let holed: Vec<_> =
        enumerate_polyominoes(9, true).unwrap().into_iter().filter(|p| !p.structure().is_simple).collect();
    let opts = PrimeOptions { shortcuts: false, ..PrimeOptions::default() };
    let non_prime: usize = holed
        .par_iter()
        .map(|p| {
            let v = is_prime(p, &opts).unwrap();
            let walk = find_zigzag_walk(p, DEFAULT_ZIGZAG_BUDGET).unwrap();
            assert_ne!(v.status, PrimeStatus::Indeterminate);
            assert_eq!(v.status == PrimeStatus::Prime, walk.is_none(), "{p:?}");
            usize::from(walk.is_some())
        })
        .sum();
    assert_eq!(non_prime, 2);
}
