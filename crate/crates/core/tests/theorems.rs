mod common;

use common::*;
use proptest::prelude::*;
use topann_core::cohdim::{cd_poly, cd_quotient, cech_cd_oracle, OracleOptions};
use topann_core::decomposition::{associated_primes, krull_dim_height, primary_decomposition};
use topann_core::theorems::{
    ann_checks, ann_top, att_codim1_membership, att_codim1_onedim, att_lower_bound, att_top,
    att_upper_bound, att_upper_check, mult_criterion, t_submodule, t_submodule_routes, t_submodule_routes_with,
    AttMode,
};
use topann_core::{CdValue, Decomposition, Field, MonomialIdeal, MonomialPrime, PrimaryComponent, VarSet};

const Q: Field = Field::Rational;

fn prime(n: usize, vars: &[usize]) -> MonomialPrime {
    MonomialPrime::new(n, VarSet::from_indices(vars.iter().copied())).unwrap()
}

fn prime_power(p: &MonomialPrime, k: u32) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(p.nvars());
    for _ in 0..k {
        acc = acc.product(&p.ideal()).unwrap();
    }
    acc
}

/// `u ∈ T_I` iff the cyclic submodule `R ū ≅ R/(I : u)` has `cd < c`.
fn t_member_by_cd(a: &MonomialIdeal, i: &MonomialIdeal, c: CdValue, u: &topann_core::Monomial) -> bool {
    let q = i.colon_monomial(u).unwrap();
    let oracle = OracleOptions::default();
    q.is_unit() || cech_cd_oracle(a, &q.radical(), Q, &oracle).unwrap() < c
}

#[test]
fn maximal_ideal_example() {
    let m = MonomialIdeal::maximal(3);
    let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
    let r = ann_top(&m, &i, Q).unwrap();
    assert!(r.hypothesis_met);
    assert_eq!(r.c, CdValue::Finite(2));
    assert_eq!(r.ann, ideal(3, &[&[1, 0, 0]]));
    let att = att_top(&m, &i, Q).unwrap();
    assert_eq!(att.mode, AttMode::Exact);
    assert_eq!(att.primes, vec![prime(3, &[0])]);
    assert!(!ann_checks(&m, &i, Q).unwrap().ann_equals_ann_m);
}

#[test]
fn one_dimensional_example() {
    let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
    let set = att_codim1_onedim(&a, Q).unwrap();
    assert_eq!(set.mode, AttMode::MembershipOnly);
    assert_eq!(set.primes, vec![MonomialPrime::zero(3), prime(3, &[2])]);
    assert!(att_codim1_onedim(&ideal(3, &[&[1, 0, 0]]), Q).is_err());
    assert!(att_codim1_membership(&MonomialIdeal::maximal(3), &prime(3, &[0]), Q).is_err());
}

#[test]
fn vanishing_top_cohomology() {
    let a = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
    let r = ann_top(&a, &MonomialIdeal::zero(3), Q).unwrap();
    assert!(!r.hypothesis_met);
    assert!(r.ann.is_unit());
    assert!(mult_criterion(&a, &MonomialIdeal::zero(3), &mono(&[1, 0, 0]), Q).is_err());
    assert!(ann_top(&a, &MonomialIdeal::unit(3), Q).is_err());
}

#[test]
fn primary_to_maximal_ideal_has_zero_annihilator() {
    let a = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 0]]);
    assert_eq!(ann_top(&a, &MonomialIdeal::zero(3), Q).unwrap().ann, MonomialIdeal::zero(3));
}

/// Pairs `(a, I)` where half the draws take `a = m`, for which `cd = dim` always holds.
fn top_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (any::<bool>(), squarefree_strategy(4, 5), ideal_strategy(4, 2, 4))
        .prop_map(|(use_m, a, i)| (if use_m { MonomialIdeal::maximal(4) } else { a }, i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_submodule_by_cyclic_membership(a in squarefree_strategy(4, 5), i in ideal_strategy(4, 2, 4)) {
        let c = cd_quotient(&a, &i, Q).unwrap();
        prop_assume!(c != CdValue::NoSupport);
        let t = t_submodule(&a, &i, Q).unwrap();
        prop_assert!(i.is_subset(&t));
        for u in box_monomials(4, max_exp(&[&i]) + 1) {
            prop_assert_eq!(t.contains(&u), t_member_by_cd(&a, &i, c, &u), "u = {:?}", u);
        }
    }

    #[test]
    fn t_routes_ignore_embedded_components(a in squarefree_strategy(4, 5), i in ideal_strategy(4, 3, 4), k in 1u32..4) {
        prop_assume!(cd_quotient(&a, &i, Q).unwrap() != CdValue::NoSupport);
        let base = t_submodule_routes(&a, &i, Q).unwrap();
        let d = primary_decomposition(&i).unwrap();
        let mass = associated_primes(&i).unwrap().mass;
        // q + p^e is still p-primary, and for e past the largest exponent the
        // intersection is unchanged
        let e = max_exp(&[&i]) * 4 + k;
        let components = d.components.iter().map(|pc| {
            let component = if mass.contains(&pc.rad_prime) {
                pc.component.clone()
            } else {
                pc.component.sum(&prime_power(&pc.rad_prime, e)).unwrap()
            };
            PrimaryComponent { component, rad_prime: pc.rad_prime }
        }).collect();
        let alt = Decomposition { components };
        prop_assert_eq!(alt.intersection().unwrap().unwrap(), i.clone());
        let routes = t_submodule_routes_with(&a, &i, &alt, Q).unwrap();
        prop_assert_eq!(&routes.by_saturation, &base.by_saturation);
        prop_assert_eq!(&routes.by_components, &base.by_components);
        prop_assert_eq!(&base.by_saturation, &base.by_components);
    }

    #[test]
    fn annihilator_identities((a, i) in top_pair()) {
        let r = ann_top(&a, &i, Q).unwrap();
        prop_assume!(r.hypothesis_met);
        prop_assert!(i.is_subset(&r.ann) && r.ann.is_proper());
        let checks = ann_checks(&a, &i, Q).unwrap();
        prop_assert!(checks.all_hold(), "{:?}", checks);
        let att = att_top(&a, &i, Q).unwrap();
        let meet = att.primes.iter().fold(MonomialIdeal::unit(4), |acc, p| acc.intersect(&p.ideal()).unwrap());
        prop_assert_eq!(r.ann.radical(), meet);
    }

    #[test]
    fn attached_sets_are_sandwiched((a, i) in top_pair()) {
        let r = ann_top(&a, &i, Q).unwrap();
        prop_assume!(r.hypothesis_met);
        let att = att_top(&a, &i, Q).unwrap();
        let upper = att_upper_bound(&a, &i, Q).unwrap();
        prop_assert!(!att.primes.is_empty());
        prop_assert!(att.primes.iter().all(|p| upper.contains(p)));
        let zero = MonomialIdeal::zero(4);
        if cd_poly(&a, Q).unwrap() != CdValue::Finite(0) {
            for p in att_lower_bound(&a, Q).unwrap() {
                prop_assert!(att_upper_check(&a, &zero, &p, Q).unwrap());
            }
        }
    }

    #[test]
    fn codim_one_sets_agree((n, mask) in (3usize..=5).prop_flat_map(|n| (Just(n), 1u32..(1 << n)))) {
        // intersection of the height-(n-1) primes selected by `mask`
        let a = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| MonomialIdeal::from_vars(n, VarSet::full(n).without(j)))
            .reduce(|x, y| x.intersect(&y).unwrap())
            .unwrap();
        prop_assert_eq!(krull_dim_height(&a).unwrap().dim, 1);
        let set = att_codim1_onedim(&a, Q).unwrap();
        for p in MonomialPrime::all(n) {
            let member = set.primes.contains(&p);
            prop_assert_eq!(att_codim1_membership(&a, &p, Q).unwrap(), member);
            let oracle = cech_cd_oracle(&a, &p.ideal(), Q, &OracleOptions::default()).unwrap();
            prop_assert_eq!(oracle == CdValue::Finite(n - 1), member, "p = {:?}", p);
        }
    }

    #[test]
    fn multiplication_criterion((a, i) in top_pair(), x in monomial_strategy(4, 2)) {
        let r = ann_top(&a, &i, Q).unwrap();
        prop_assume!(r.hypothesis_met);
        let mc = mult_criterion(&a, &i, &x, Q).unwrap();
        prop_assert_eq!(mc.kills, mc.cd_drop);
        let q = i.colon_monomial(&x).unwrap();
        let drop = q.is_unit() || cech_cd_oracle(&a, &q.radical(), Q, &OracleOptions::default()).unwrap() < r.c;
        prop_assert_eq!(mc.cd_drop, drop);
    }
}
