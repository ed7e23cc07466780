use std::sync::OnceLock;

use hx_core::{
    Bond, CoxeterSystem, ElemId, HeckeAlgebra, HeckeElement, IBig, LaurentPoly, WeightFunction,
};
use proptest::prelude::*;

const LABELS: [&str; 6] = ["A3", "B3", "D4", "G2", "F4", "~A2"];

fn systems() -> &'static [CoxeterSystem] {
    static S: OnceLock<Vec<CoxeterSystem>> = OnceLock::new();
    S.get_or_init(|| LABELS.iter().map(|l| CoxeterSystem::from_label(l).unwrap()).collect())
}

fn alternating(i: usize, j: usize, m: u32) -> Vec<usize> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..LABELS.len()).prop_flat_map(|k| {
        let r = systems()[k].rank();
        (Just(k), prop::collection::vec(0..r, 0..14))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normal_form_ignores_rewrites((k, word) in word_strategy(), pos in any::<prop::sample::Index>(), pick in any::<(prop::sample::Index, prop::sample::Index)>()) {
        let sys = &systems()[k];
        let base = sys.normal_form(&word).unwrap();
        let at = pos.index(word.len() + 1);
        let (i, j) = (pick.0.index(sys.rank()), pick.1.index(sys.rank()));
        // inserting s s is a no-op
        let mut w2 = word.clone();
        w2.splice(at..at, [i, i]);
        prop_assert_eq!(sys.normal_form(&w2).unwrap(), base.clone());
        // a braid relation (ij...)(ji...)^-1 inserted anywhere is a no-op
        if let Bond::Order(m) = sys.bond(i, j) {
            if i != j {
                let mut w3 = word.clone();
                let mut rel = alternating(i, j, m);
                rel.extend(alternating(j, i, m).into_iter().rev());
                w3.splice(at..at, rel);
                prop_assert_eq!(sys.normal_form(&w3).unwrap(), base.clone());
            }
        }
        let canon: Vec<usize> = base.letters().collect();
        prop_assert_eq!(sys.normal_form(&canon).unwrap(), base);
    }

    #[test]
    fn generator_changes_length_by_one((k, word) in word_strategy(), s in any::<prop::sample::Index>()) {
        let sys = &systems()[k];
        let w = sys.normal_form(&word).unwrap();
        let s = s.index(sys.rank());
        let sw = sys.multiply(&sys.generator(s).unwrap(), &w).unwrap();
        prop_assert_eq!(sw.length().abs_diff(w.length()), 1);
        prop_assert_eq!(sys.left_descents(&w).unwrap().contains(&s), sw.length() < w.length());
        let ws = sys.multiply(&w, &sys.generator(s).unwrap()).unwrap();
        prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
        prop_assert!(sys.bruhat_leq(&w.clone().min(sw.clone()), &w.max(sw)).unwrap());
    }
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..7, -40i64..41), 0..6).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.eval_at_one() * b.eval_at_one(), (&a * &b).eval_at_one());
        if !a.is_zero() && !b.is_zero() {
            let (da, db) = (a.degree().finite().unwrap(), b.degree().finite().unwrap());
            prop_assert_eq!((&a * &b).degree().finite(), Some(da + db));
        }
    }
}

struct Fixture {
    alg: HeckeAlgebra,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        let make = |l: &str, w: &[i64], radius: Option<usize>| {
            let s = CoxeterSystem::from_label(l).unwrap();
            let wt = WeightFunction::new(&s, w).unwrap();
            let alg = match radius {
                Some(r) => HeckeAlgebra::with_radius(&s, wt, r).unwrap(),
                None => HeckeAlgebra::new(&s, wt).unwrap(),
            };
            Fixture { alg }
        };
        vec![
            make("B3", &[1, 1, 2], None),
            make("G2", &[3, 1], None),
            make("A3", &[1, 1, 1], None),
            make("~A1", &[2, 5], Some(9)),
        ]
    })
}

/// Random combinations of basis elements of length at most 3.
fn hecke_element(alg: &HeckeAlgebra, picks: &[(prop::sample::Index, LaurentPoly)]) -> HeckeElement {
    let t = alg.table();
    let small = t.ids().take_while(|&x| t.length(x) <= 3).count();
    alg.from_terms(picks.iter().map(|(i, p)| (ElemId(i.index(small) as u32), p.clone()))).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(prop::sample::Index, LaurentPoly)>> {
    prop::collection::vec((any::<prop::sample::Index>(), poly()), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hecke_multiplication_is_associative(f in 0..4usize, a in picks(), b in picks(), c in picks()) {
        let alg = &fixtures()[f].alg;
        let (a, b, c) = (hecke_element(alg, &a), hecke_element(alg, &b), hecke_element(alg, &c));
        let left = alg.t_mul(&alg.t_mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.t_mul(&a, &alg.t_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bar_is_a_ring_involution(f in 0..4usize, a in picks(), b in picks()) {
        let alg = &fixtures()[f].alg;
        let (a, b) = (hecke_element(alg, &a), hecke_element(alg, &b));
        let ab = alg.t_mul(&a, &b).unwrap();
        prop_assert_eq!(alg.bar(&ab).unwrap(), alg.t_mul(&alg.bar(&a).unwrap(), &alg.bar(&b).unwrap()).unwrap());
        prop_assert_eq!(alg.bar(&alg.bar(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn weights_add_along_reduced_products(f in 0..4usize, x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let alg = &fixtures()[f].alg;
        let t = alg.table();
        let small = t.ids().take_while(|&z| t.length(z) <= 4).count();
        let (x, y) = (ElemId(x.index(small) as u32), ElemId(y.index(small) as u32));
        let xy = t.multiply(x, y).unwrap();
        let w = alg.weight();
        let (lx, ly, lxy) = (w.of(t.element(x)), w.of(t.element(y)), w.of(t.element(xy)));
        if t.length(xy) == t.length(x) + t.length(y) {
            prop_assert_eq!(lxy, lx + ly);
            let f = alg.f_constants(x, y).unwrap();
            prop_assert_eq!(f.terms(), &[(xy, LaurentPoly::one())][..]);
        }
        prop_assert!(lxy <= lx + ly);
        prop_assert_eq!((lx + ly - lxy) % 2, 0);
    }

    #[test]
    fn quadratic_relation_scaled(f in 0..4usize, s in any::<prop::sample::Index>(), c in -5i64..6) {
        let alg = &fixtures()[f].alg;
        let s = s.index(alg.table().rank());
        let id = alg.id_of_word(&[s]).unwrap();
        let ts = alg.monomial(id, LaurentPoly::constant(IBig::from(c)));
        let l = alg.weight().value(s);
        let lhs = alg.t_mul(&ts, &alg.basis(id)).unwrap();
        let rhs = &alg.monomial(ElemId::IDENTITY, LaurentPoly::constant(IBig::from(c)))
            + &ts.scale(&LaurentPoly::xi(l));
        prop_assert_eq!(lhs, rhs);
    }
}
