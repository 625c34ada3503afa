use std::cmp::Ordering;

use proptest::prelude::*;
use qsym_core::compositions::{Composition, GenComposition};
use qsym_core::gbverify::check_lattice;
use qsym_core::polyring::cmp_lex;
use qsym_core::qsym::{fundamental_qsym, fundamental_qsym_by_chains};
use qsym_core::{Family, Monomial, Poly, Rational};

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..4, 0..5).prop_map(|v| Composition::new(v).unwrap())
}

fn gen_composition(len: usize) -> impl Strategy<Value = GenComposition> {
    prop::collection::vec(0u32..4, 0..=len).prop_map(GenComposition::new)
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, n).prop_map(Monomial::new)
}

fn poly(n: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(n), -4i64..5), 0..6).prop_map(move |terms| {
        Poly::from_terms(n, terms.into_iter().map(|(m, c)| (m, Rational::from_integer(c.into())))).unwrap()
    })
}

fn nonzero_poly(n: usize) -> impl Strategy<Value = Poly> {
    poly(n).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn descent_set_round_trip(a in composition()) {
        let back = Composition::from_subset(&a.descent_set(), a.degree()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn refinements_share_degree_and_refine(a in composition()) {
        for b in a.refinements() {
            prop_assert_eq!(b.degree(), a.degree());
            prop_assert!(b.refines(&a));
        }
    }

    #[test]
    fn refinement_is_a_partial_order(d in 1u32..6, i in 0usize..32, j in 0usize..32, k in 0usize..32) {
        let all = Composition::all_of_degree(d);
        let (a, b, c) = (&all[i % all.len()], &all[j % all.len()], &all[k % all.len()]);
        prop_assert!(a.refines(a));
        if a.refines(b) && b.refines(a) {
            prop_assert_eq!(a, b);
        }
        if a.refines(b) && b.refines(c) {
            prop_assert!(a.refines(c));
        }
    }

    #[test]
    fn catalan_iff_not_reaching(a in gen_composition(6), e in 0u32..4) {
        prop_assert_eq!(a.is_e_catalan(e), !a.reaches_level(e));
    }

    #[test]
    fn levels_are_nested(a in gen_composition(6), e in 0u32..4) {
        if a.reaches_level(e + 1) {
            prop_assert!(a.reaches_level(e));
        }
    }

    #[test]
    fn lattice_property(a in gen_composition(5), bump in prop::collection::vec(0u32..3, 5), e in 0u32..3) {
        let rho = GenComposition::new((0..5).map(|i| a.part(i) + bump[i]).collect());
        prop_assert!(check_lattice(&a, &rho, e));
    }

    #[test]
    fn order_is_multiplicative(a in monomial(3), b in monomial(3), c in monomial(3)) {
        let before = cmp_lex(&a, &b).unwrap();
        let after = cmp_lex(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn order_agrees_with_ord(a in monomial(3), b in monomial(3)) {
        prop_assert_eq!(cmp_lex(&a, &b).unwrap(), a.cmp(&b));
        if a.degree() < b.degree() {
            prop_assert_eq!(a.cmp(&b), Ordering::Greater);
        }
    }

    #[test]
    fn leading_monomial_of_product(p in nonzero_poly(3), q in nonzero_poly(3)) {
        let pq = p.mul(&q).unwrap();
        let want = p.leading_monomial().unwrap().mul(q.leading_monomial().unwrap()).unwrap();
        prop_assert_eq!(pq.leading_monomial().unwrap(), &want);
    }

    #[test]
    fn ring_axioms(p in poly(2), q in poly(2), r in poly(2)) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        let left = p.mul(&q.add(&r).unwrap()).unwrap();
        let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn shift_is_a_ring_map(p in poly(3), q in poly(3)) {
        prop_assert_eq!(p.mul(&q).unwrap().shift_variables(), p.shift_variables().mul(&q.shift_variables()).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().shift_variables(), p.shift_variables().add(&q.shift_variables()).unwrap());
    }

    #[test]
    fn truncation_is_a_ring_map(p in poly(3), q in poly(3)) {
        prop_assert_eq!(p.mul(&q).unwrap().truncate(2), p.truncate(2).mul(&q.truncate(2)).unwrap());
    }

    #[test]
    fn fundamental_routes_agree(a in composition(), n in 0usize..5) {
        let refinements: Poly = fundamental_qsym(&a, n);
        let chains: Poly = fundamental_qsym_by_chains(&a, n);
        prop_assert_eq!(refinements, chains);
    }

    #[test]
    fn fundamental_truncates_coherently(a in composition(), n in 1usize..5) {
        let big: Poly = fundamental_qsym(&a, n + 1);
        let small: Poly = fundamental_qsym(&a, n);
        prop_assert_eq!(big.truncate(n), small);
    }

    #[test]
    fn gfun_truncates_coherently(a in gen_composition(4), extra in 0usize..3) {
        let fam = Family::new();
        let n = a.stripped().len().max(1);
        let big = fam.gfun(&a, n + extra).unwrap();
        let small = fam.gfun(&a, n).unwrap();
        prop_assert_eq!(big.truncate(n), (*small).clone());
    }

    #[test]
    fn gfun_leading_monomial(a in gen_composition(4), extra in 0usize..3) {
        let fam = Family::new();
        let n = a.stripped().len().max(1) + extra;
        prop_assert!(fam.check_lm(&a, n).unwrap());
    }
}
