use polyomino_core::algebra::hilbert::count_standard_monomials;
use polyomino_core::algebra::{
    format_poly, groebner_basis, ideal_equal, parse_poly, saturate_all, GbOptions, HilbertData,
};
use polyomino_core::grid::{format_cells, parse_cells, random_collection, CellCollection, Symmetry};
use polyomino_core::ideals::{default_ring, inner_minor_ideal, is_prime, PrimeOptions};
use polyomino_core::invariants::default_hilbert_data;
use polyomino_core::rook::{rook_number, rook_polynomial, switching_rook_polynomial};
use proptest::prelude::*;

fn polyomino(max_rank: usize) -> impl Strategy<Value = CellCollection> {
    (1..=max_rank, any::<u64>()).prop_map(|(n, seed)| random_collection(n, seed, true))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn s_polynomials_reduce_to_zero(p in polyomino(7)) {
        let r = default_ring(&p);
        let gb = groebner_basis(&r, &inner_minor_ideal(&r, &p).unwrap(), &GbOptions::default()).unwrap();
        prop_assert!(gb.verify());
    }

    #[test]
    fn normal_form_is_idempotent(p in polyomino(6), k in 0usize..64) {
        let r = default_ring(&p);
        let gens = inner_minor_ideal(&r, &p).unwrap();
        let gb = groebner_basis(&r, &gens, &GbOptions::default()).unwrap();
        let x = r.var(k % r.nvars());
        let f = r.add(&r.mul(&gens[k % gens.len()], &x), &r.mul(&x, &x));
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&r.sub(&f, &nf)));
    }

    #[test]
    fn saturation_is_closed(p in polyomino(7)) {
        let r = default_ring(&p);
        let o = GbOptions::default();
        let sat = saturate_all(&r, &inner_minor_ideal(&r, &p).unwrap(), &o).unwrap();
        let again = saturate_all(&r, &sat, &o).unwrap();
        prop_assert!(ideal_equal(&r, &sat, &again, &o).unwrap());
    }

    #[test]
    fn hilbert_series_matches_counting(p in polyomino(6)) {
        let r = default_ring(&p);
        let gb = groebner_basis(&r, &inner_minor_ideal(&r, &p).unwrap(), &GbOptions::default()).unwrap();
        let lms = gb.leading_monomials();
        let data = HilbertData::of_monomials(&lms, r.nvars());
        prop_assert_eq!(data.series(7), count_standard_monomials(&lms, r.nvars(), 7));
    }

    #[test]
    fn invariants_are_symmetric(p in polyomino(7)) {
        let o = GbOptions::default();
        let h = default_hilbert_data(&p, &o).unwrap().h;
        let prime = is_prime(&p, &PrimeOptions::default()).unwrap().status;
        for s in Symmetry::ALL {
            let q = p.transform(s);
            prop_assert_eq!(&default_hilbert_data(&q, &o).unwrap().h, &h);
            prop_assert_eq!(rook_polynomial(&q).unwrap(), rook_polynomial(&p).unwrap());
            prop_assert_eq!(switching_rook_polynomial(&q).unwrap(), switching_rook_polynomial(&p).unwrap());
            prop_assert_eq!(is_prime(&q, &PrimeOptions::default()).unwrap().status, prime);
        }
    }

    #[test]
    fn h_is_switching_rook_polynomial(p in polyomino(7)) {
        let h = default_hilbert_data(&p, &GbOptions::default()).unwrap().h;
        let s: Vec<i64> = switching_rook_polynomial(&p).unwrap().into_iter().map(|c| c as i64).collect();
        prop_assert_eq!(&h, &s);
        prop_assert_eq!(h.len() - 1, rook_number(&p).unwrap());
    }

    #[test]
    fn cell_text_round_trips(p in polyomino(10)) {
        prop_assert_eq!(parse_cells(&format_cells(&p)).unwrap(), p);
    }

    #[test]
    fn poly_text_round_trips(p in polyomino(6)) {
        let r = default_ring(&p);
        for f in inner_minor_ideal(&r, &p).unwrap() {
            prop_assert_eq!(parse_poly(&r, &format_poly(&r, &f)).unwrap(), f);
        }
    }

    #[test]
    fn prime_without_shortcuts_agrees(p in polyomino(7)) {
        let with = is_prime(&p, &PrimeOptions::default()).unwrap().status;
        let without = is_prime(&p, &PrimeOptions { shortcuts: false, ..PrimeOptions::default() }).unwrap().status;
        prop_assert_eq!(with, without);
    }
}
