//! Property-based tests: algebraic laws that must hold for arbitrary
//! inputs, checked with randomized shrinkable cases.

use std::collections::BTreeMap;

use proptest::prelude::*;

use toppling_core::algebra::{format_rat, parse_rat, rat, BigRational, ParamPoly};
use toppling_core::graph::Configuration;
use toppling_core::group::GroupElement;
use toppling_core::tableaux::{
    is_yamanouchi, syt_to_word, word_to_syt, Partition, YamanouchiWord,
};

const VARS: &[&str] = &["u", "v"];

fn arb_poly() -> impl Strategy<Value = ParamPoly> {
    proptest::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = ParamPoly::zero(VARS);
        for ((a, b), c) in terms {
            p = p
                .add(&ParamPoly::monomial(VARS, &[a, b], rat(c)))
                .unwrap();
        }
        p
    })
}

fn arb_point() -> impl Strategy<Value = BTreeMap<String, BigRational>> {
    ((-9i64..=9, 1i64..=9), (-9i64..=9, 1i64..=9)).prop_map(|((un, ud), (vn, vd))| {
        let mut m = BTreeMap::new();
        m.insert("u".to_string(), BigRational::new(un.into(), ud.into()));
        m.insert("v".to_string(), BigRational::new(vn.into(), vd.into()));
        m
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(
            p.add(&q).unwrap().add(&r).unwrap(),
            p.add(&q.add(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.mul(&q).unwrap().mul(&r).unwrap(),
            p.mul(&q.mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.sub(&p).unwrap(), ParamPoly::zero(VARS));
        prop_assert_eq!(p.mul(&ParamPoly::one(VARS)).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), pt in arb_point()) {
        let pe = p.eval(&pt).unwrap();
        let qe = q.eval(&pt).unwrap();
        prop_assert_eq!(p.add(&q).unwrap().eval(&pt).unwrap(), pe.clone() + qe.clone());
        prop_assert_eq!(p.mul(&q).unwrap().eval(&pt).unwrap(), pe * qe);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), q in arb_poly()) {
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(prod.div_exact(&q).unwrap(), p);
    }

    #[test]
    fn rational_format_roundtrip(n in -1000i64..=1000, d in 1i64..=1000) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn normalize_is_idempotent(a in proptest::collection::vec(-6i64..=6, 1..=8)) {
        let g = GroupElement::normalize(&a);
        let again: Vec<i64> = g.exponents().iter().map(|&x| x as i64).collect();
        prop_assert_eq!(GroupElement::normalize(&again), g.clone());
        // multiplying by the inverse gives the identity
        prop_assert!(g.multiply(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn normalize_quotients_constants(
        a in proptest::collection::vec(0i64..=6, 2..=8),
        k in -4i64..=4,
    ) {
        let b: Vec<i64> = a.iter().map(|x| x + k).collect();
        prop_assert_eq!(GroupElement::normalize(&a), GroupElement::normalize(&b));
    }

    #[test]
    fn conjugate_is_an_involution(parts in proptest::collection::vec(1u64..=6, 0..=6)) {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(sorted).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn word_tableau_roundtrip(letters in proptest::collection::vec(1usize..=3, 0..=8)) {
        prop_assume!(is_yamanouchi(&letters));
        let w = YamanouchiWord::new(letters).unwrap();
        let t = word_to_syt(&w);
        prop_assert_eq!(t.shape(), w.type_partition());
        prop_assert_eq!(syt_to_word(&t), w);
    }

    #[test]
    fn configuration_parse_roundtrip(weights in proptest::collection::vec(-99i64..=99, 1..=8)) {
        let c = Configuration::new(weights);
        prop_assert_eq!(Configuration::parse(&c.to_string()).unwrap(), c);
    }
}
