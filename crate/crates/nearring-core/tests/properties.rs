//! Randomized structural properties over small groups, schemes and
//! near-rings.

use proptest::prelude::*;

use nearring_core::autos::{automorphism_group, AutomorphismSet};
use nearring_core::group::{small_groups, ElementSet, FiniteGroup};
use nearring_core::nearring::{restriction_isomorphism, NearRing};
use nearring_core::ngroup::NGroupAction;
use nearring_core::primitivity::cross_check;
use nearring_core::sandwich::{build_phi, enumerate_recipes, SandwichScheme};

/// A random (group, automorphism subgroup, recipe) triple drawn from the
/// full catalog up to order 10, with the near-ring capped at 1024
/// elements.
fn scheme_strategy() -> impl Strategy<Value = SandwichScheme> {
    let catalog: Vec<(String, FiniteGroup)> = small_groups(10);
    (0..catalog.len(), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map(
        "group admits a scheme",
        move |(gi, si, ri)| {
            let gamma = &catalog[gi].1;
            let auts = automorphism_group(gamma).ok()?;
            let subs = auts.subgroups();
            let s = &subs[si.index(subs.len())];
            let recipes = enumerate_recipes(gamma, s, 1024).ok()?;
            if recipes.is_empty() {
                return None;
            }
            build_phi(gamma, s, &recipes[ri.index(recipes.len())]).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    /// The structural and enumerative primitivity routes agree on every
    /// randomly drawn non-ring scheme (cross_check errors otherwise).
    #[test]
    fn decision_routes_agree(scheme in scheme_strategy()) {
        let v = cross_check(&scheme, 1024).expect("routes agree");
        if v.applicable {
            prop_assert_eq!(v.agree, Some(true));
        }
        // 2-primitive implies 1-primitive on every verdict
        if v.two_primitive == Some(true) {
            prop_assert_eq!(v.one_primitive, Some(true));
        }
    }

    /// Every N-ideal of a scheme action is also an N-subgroup.
    #[test]
    fn n_ideals_are_n_subgroups(scheme in scheme_strategy()) {
        let nr = NearRing::enumerate_centralizer(&scheme, 1024).expect("within cap");
        let a = NGroupAction::from_scheme(&nr, &scheme).expect("laws hold");
        let subgroups = a.n_subgroups().expect("small carrier");
        for ideal in a.n_ideals().expect("small carrier") {
            prop_assert!(subgroups.contains(&ideal));
        }
    }

    /// The ~ classes refine the phi fibers: phi is constant on each
    /// class, and each class maps into one S-orbit of X.
    #[test]
    fn equiv_classes_refine_phi_fibers(scheme in scheme_strategy()) {
        let nr = NearRing::enumerate_centralizer(&scheme, 1024).expect("within cap");
        let a = NGroupAction::from_scheme(&nr, &scheme).expect("laws hold");
        for class in a.equiv_classes() {
            let first = scheme.phi_at(class.iter().next().unwrap());
            for gamma in class.iter() {
                prop_assert_eq!(scheme.phi_at(gamma), first);
            }
        }
    }

    /// Restricting the annihilating near-ring of any zero set Z to the
    /// complement is an isomorphism onto the scheme near-ring with
    /// phi = id off Z (trivial S).
    #[test]
    fn annihilating_nearrings_restrict_isomorphically(
        order in 2usize..5,
        mask in any::<u32>(),
    ) {
        let gamma = FiniteGroup::cyclic(order).expect("positive");
        let mut z = ElementSet::singleton(0);
        for a in 1..order {
            if mask >> a & 1 == 1 {
                z.insert(a);
            }
        }
        prop_assume!(z.len() < order); // X1 must be nonempty
        let n = NearRing::annihilating(&gamma, &z, 1024).expect("within cap");
        let phi: Vec<usize> = (0..order).map(|a| if z.contains(a) { 0 } else { a }).collect();
        let scheme = SandwichScheme::from_parts(gamma, AutomorphismSet::trivial(order), phi)
            .expect("well-formed");
        let cert = restriction_isomorphism(&n, &scheme, 1024).expect("isomorphic");
        prop_assert_eq!(cert.pairs.len(), n.len());
    }
}
