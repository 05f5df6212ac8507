use proptest::prelude::*;
use vfun_core::oracle::{oracle_ass, oracle_v, oracle_v_local, DEFAULT_BUDGET};
use vfun_core::structure::product_factors;
use vfun_core::{
    ass, minimalize, v_local, v_number, AmbientRing, Monomial, MonomialIdeal, MonomialPrime,
    PrimeSet, Ring,
};

fn ring(n: usize) -> Ring {
    AmbientRing::indexed("x", n).unwrap()
}

fn arb_exps(n: usize, max_exp: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_exp, n)
}

/// Random generator lists in `n <= 4` variables.
fn arb_gens() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(arb_exps(n, 3), 1..=5)))
}

/// Random proper nonzero ideals.
fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    arb_gens()
        .prop_filter("needs a nonconstant generator", |(_, gens)| {
            gens.iter().all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(|(n, gens)| MonomialIdeal::from_exponents(&ring(n), &gens).unwrap())
}

fn arb_ideal_with_monomials(count: usize) -> impl Strategy<Value = (MonomialIdeal, Vec<Monomial>)> {
    arb_ideal().prop_flat_map(move |i| {
        let n = i.ring().len();
        (
            Just(i),
            prop::collection::vec(arb_exps(n, 4).prop_map(Monomial::new), count),
        )
    })
}

fn arb_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let gens = || prop::collection::vec(arb_exps(n, 3), 1..=4);
            (Just(n), gens(), gens())
        })
        .prop_map(|(n, a, b)| {
            let r = ring(n);
            (
                MonomialIdeal::from_exponents(&r, &a).unwrap(),
                MonomialIdeal::from_exponents(&r, &b).unwrap(),
            )
        })
}

/// Ideals in disjoint blocks `x1..xa` and `x(a+1)..x(a+b)`.
fn arb_disjoint_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(|(a, b)| {
            (
                Just((a, b)),
                prop::collection::vec(arb_exps(a, 2), 1..=3),
                prop::collection::vec(arb_exps(b, 2), 1..=3),
            )
        })
        .prop_filter("nonconstant generators", |(_, l, r)| {
            l.iter().chain(r).all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(|((a, b), l, r)| {
            let rg = ring(a + b);
            let pad = |g: &Vec<u32>, left: bool| {
                let mut e = vec![0; a + b];
                let off = if left { 0 } else { a };
                e[off..off + g.len()].copy_from_slice(g);
                e
            };
            let li: Vec<_> = l.iter().map(|g| pad(g, true)).collect();
            let ri: Vec<_> = r.iter().map(|g| pad(g, false)).collect();
            (
                MonomialIdeal::from_exponents(&rg, &li).unwrap(),
                MonomialIdeal::from_exponents(&rg, &ri).unwrap(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimalize_is_canonical((n, gens) in arb_gens()) {
        let r = ring(n);
        let i = MonomialIdeal::from_exponents(&r, &gens).unwrap();
        let again = minimalize(&r, i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for (a, g) in i.gens().iter().enumerate() {
            for (b, h) in i.gens().iter().enumerate() {
                prop_assert!(a == b || !g.divides(h));
            }
        }
        prop_assert!(i.gens().windows(2).all(|w| w[0] < w[1]));
        // every input generator stays in the ideal
        for g in &gens {
            prop_assert!(i.contains(&Monomial::new(g.clone())).unwrap());
        }
    }

    #[test]
    fn membership_matches_divisibility((i, ms) in arb_ideal_with_monomials(4)) {
        for m in &ms {
            let brute = i.gens().iter().any(|g| g.exponents().iter().zip(m.exponents()).all(|(a, b)| a <= b));
            prop_assert_eq!(i.contains(m).unwrap(), brute);
        }
    }

    #[test]
    fn colon_identities((i, ms) in arb_ideal_with_monomials(2)) {
        let (u, v) = (&ms[0], &ms[1]);
        let iu = i.colon_monomial(u).unwrap();
        prop_assert!(i.is_subset(&iu).unwrap());
        let uv = u.checked_mul(v).unwrap();
        prop_assert_eq!(i.colon_monomial(&uv).unwrap(), iu.colon_monomial(v).unwrap());
        // u (I:u) ⊆ I
        let back = iu.product(&MonomialIdeal::principal(i.ring(), u.clone()).unwrap()).unwrap();
        prop_assert!(back.is_subset(&i).unwrap());
        // colon by an ideal agrees with the intersection of monomial colons
        let j = minimalize(i.ring(), ms.clone()).unwrap();
        let by_gens = j.gens().iter().map(|g| i.colon_monomial(g).unwrap())
            .reduce(|a, b| a.intersect(&b).unwrap()).unwrap();
        prop_assert_eq!(i.colon_ideal(&j).unwrap(), by_gens);
    }

    #[test]
    fn colon_distributes((i, j) in arb_pair(), u in arb_exps(4, 3)) {
        let n = i.ring().len();
        let u = Monomial::new(u[..n].to_vec());
        prop_assert_eq!(
            i.sum(&j).unwrap().colon_monomial(&u).unwrap(),
            i.colon_monomial(&u).unwrap().sum(&j.colon_monomial(&u).unwrap()).unwrap()
        );
        prop_assert_eq!(
            i.intersect(&j).unwrap().colon_monomial(&u).unwrap(),
            i.colon_monomial(&u).unwrap().intersect(&j.colon_monomial(&u).unwrap()).unwrap()
        );
        let ij = i.product(&j).unwrap();
        prop_assert!(ij.is_subset(&i.intersect(&j).unwrap()).unwrap());
    }

    #[test]
    fn disjoint_product_is_intersection((i, j) in arb_disjoint_pair()) {
        prop_assert_eq!(i.product(&j).unwrap(), i.intersect(&j).unwrap());
    }

    #[test]
    fn disjoint_colon_splits((i, j) in arb_disjoint_pair(), a in arb_exps(6, 3)) {
        // (I+J) : u = (I : u_I) + (J : u_J) when u splits along the blocks
        let n = i.ring().len();
        let u = Monomial::new(a[..n].to_vec());
        let ui = u.restrict(i.support_mask());
        let uj = u.restrict(j.support_mask());
        let whole = i.sum(&j).unwrap().colon_monomial(&u).unwrap();
        let parts = i.colon_monomial(&ui).unwrap().sum(&j.colon_monomial(&uj).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn powers_multiply(i in arb_ideal()) {
        let p2 = i.power(2).unwrap();
        prop_assert_eq!(&p2, &i.product(&i).unwrap());
        prop_assert_eq!(i.power(3).unwrap(), p2.product(&i).unwrap());
    }

    #[test]
    fn witness_exponents_can_be_capped((i, ms) in arb_ideal_with_monomials(1), extra in arb_exps(4, 6)) {
        let top = i.lcm_gens().unwrap();
        let n = i.ring().len();
        let f: Vec<u32> = ms[0].exponents().iter().zip(&extra[..n]).map(|(a, b)| a + b).collect();
        let capped: Vec<u32> = f.iter().zip(top.exponents()).map(|(&a, &m)| a.min(m)).collect();
        prop_assert_eq!(
            i.colon_monomial(&Monomial::new(f)).unwrap(),
            i.colon_monomial(&Monomial::new(capped)).unwrap()
        );
    }

    #[test]
    fn ass_matches_oracle(i in arb_ideal()) {
        let fast = ass(&i).unwrap();
        let witnesses = oracle_ass(&i, DEFAULT_BUDGET).unwrap();
        let slow: PrimeSet = witnesses.iter().map(|w| w.prime().clone()).collect();
        prop_assert_eq!(&fast, &slow);
        for w in &witnesses {
            // each witness really realizes its prime
            prop_assert_eq!(i.colon_monomial(w.witness()).unwrap(), w.prime().to_ideal());
            prop_assert_eq!(v_local(&i, w.prime()).unwrap(), w.degree());
            prop_assert_eq!(oracle_v_local(&i, w.prime(), DEFAULT_BUDGET).unwrap(), w.degree());
        }
        prop_assert_eq!(v_number(&i).unwrap().value, oracle_v(&i, DEFAULT_BUDGET).unwrap());
        // minimal primes of I are always associated
        for p in fast.iter() {
            prop_assert!(i.is_subset(&p.to_ideal()).unwrap());
        }
    }

    #[test]
    fn ass_of_disjoint_sum_and_product((i, j) in arb_disjoint_pair()) {
        let ai = ass(&i).unwrap();
        let aj = ass(&j).unwrap();
        let joins: PrimeSet = ai.iter()
            .flat_map(|p| aj.iter().map(move |q| p.join(q).unwrap()))
            .collect();
        prop_assert_eq!(ass(&i.sum(&j).unwrap()).unwrap(), joins);
        prop_assert_eq!(ass(&i.product(&j).unwrap()).unwrap(), ai.union(&aj));
    }

    #[test]
    fn product_factors_rebuild_the_ideal((i, j) in arb_disjoint_pair()) {
        let ij = i.product(&j).unwrap();
        if let Some(factors) = product_factors(&ij) {
            prop_assert!(factors.len() >= 2);
            let rebuilt = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| acc.product(f).unwrap());
            prop_assert_eq!(rebuilt, ij.clone());
            let masks: Vec<u128> = factors.iter().map(|f| f.support_mask()).collect();
            for (a, m) in masks.iter().enumerate() {
                prop_assert!(masks[a + 1..].iter().all(|o| o & m == 0));
            }
        }
        // a product of two proper ideals in disjoint variables always splits
        if i.gens().len() * j.gens().len() >= 2 {
            prop_assert!(product_factors(&ij).is_some());
        }
    }

    #[test]
    fn localization_keeps_membership_of_restrictions(i in arb_ideal(), mask in 1u128..16) {
        let n = i.ring().len();
        let mask = mask & ((1u128 << n) - 1);
        prop_assume!(mask != 0);
        let p = MonomialPrime::from_mask(i.ring(), mask).unwrap();
        let local = i.localize(&p).unwrap();
        prop_assert!(i.is_subset(&local).unwrap());
        prop_assert!(local.gens().iter().all(|g| g.support_mask() & !mask == 0));
    }

    #[test]
    fn lower_bound_on_small_powers(i in arb_ideal()) {
        let alpha = i.alpha().unwrap();
        for k in 1..=2usize {
            let v = v_number(&i.power(k).unwrap()).unwrap().value;
            prop_assert!(v + 1 >= alpha * k as u64, "v = {} alpha = {} k = {}", v, alpha, k);
        }
    }
}
