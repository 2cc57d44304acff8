use std::sync::Arc;

use super::*;
use crate::dynkin::simply_laced_up_to;

fn tree(f: Family, n: usize) -> Arc<DynkinTree> {
    Arc::new(DynkinTree::build(f, n).unwrap())
}

fn parse(t: &Arc<DynkinTree>, s: &str) -> SlicedAutomorphism {
    parse_generator(t.clone(), s).unwrap()
}

#[test]
fn translation_moves_left() {
    let t = tree(Family::A, 3);
    let tau = SlicedAutomorphism::translation(t.clone());
    assert_eq!(tau.apply(ZVertex::new(0, 0)), ZVertex::new(-1, 0));
    assert!(tau.compose(&tau.inverse()).unwrap().is_identity());
}

#[test]
fn suspension_examples() {
    let a2 = tree(Family::A, 2);
    let s = SlicedAutomorphism::suspension(a2).unwrap();
    assert_eq!(s.apply(ZVertex::new(0, 0)), ZVertex::new(1, 1));

    let e7 = tree(Family::E, 7);
    let s = SlicedAutomorphism::suspension(e7).unwrap();
    for q in 0..7 {
        assert_eq!(s.apply(ZVertex::new(0, q)), ZVertex::new(9, q));
    }

    let d5 = tree(Family::D, 5);
    let s = SlicedAutomorphism::suspension(d5).unwrap();
    assert_eq!(s.apply(ZVertex::new(0, 4)), ZVertex::new(4, 3));
}

#[test]
fn suspension_undefined_for_l() {
    let l = tree(Family::L, 3);
    assert_eq!(
        SlicedAutomorphism::suspension(l).unwrap_err().code(),
        "UnsupportedFamily"
    );
}

#[test]
fn serre_functor_examples() {
    let nu = SlicedAutomorphism::serre_nu(tree(Family::A, 1)).unwrap();
    assert!(nu.is_identity());
    let nu = SlicedAutomorphism::serre_nu(tree(Family::E, 7)).unwrap();
    assert_eq!(nu.as_tau_power(), Some(-8));
}

#[test]
fn suspension_squares_to_coxeter_translation() {
    for t in simply_laced_up_to(8) {
        let t = Arc::new(t);
        let h = t.coxeter_number().unwrap() as i64;
        let s = SlicedAutomorphism::suspension(t.clone()).unwrap();
        let tau = SlicedAutomorphism::translation(t.clone());
        assert_eq!(s.power(2).as_tau_power(), Some(-h), "{}", t.name());
        assert_eq!(s.compose(&tau).unwrap(), tau.compose(&s).unwrap());
        let nu = SlicedAutomorphism::serre_nu(t.clone()).unwrap();
        assert_eq!(nu.compose(&s.inverse()).unwrap(), tau);
        // smallest such h
        for k in 1..h {
            assert!(s.power(2).as_tau_power() != Some(-k));
        }
    }
}

#[test]
fn rho_squares_to_inverse_translation() {
    for n in [2, 4, 6, 8] {
        let t = tree(Family::A, n);
        let rho = SlicedAutomorphism::rho(t.clone()).unwrap();
        assert_eq!(rho.power(2), SlicedAutomorphism::tau_power(t, -1));
    }
}

#[test]
fn a3_suspension_squared() {
    let t = tree(Family::A, 3);
    let s = parse(&t, "S");
    assert!(s.compose(&s).unwrap().equals(&parse(&t, "tau^-4")).unwrap());
    assert!(s.power(0).is_identity());
}

#[test]
fn tree_mismatch() {
    let a = SlicedAutomorphism::translation(tree(Family::A, 3));
    let b = SlicedAutomorphism::translation(tree(Family::A, 4));
    assert_eq!(a.compose(&b).unwrap_err().code(), "TreeMismatch");
    assert_eq!(a.equals(&b).unwrap_err().code(), "TreeMismatch");
}

#[test]
fn admissibility_examples() {
    let a2 = tree(Family::A, 2);
    let rho = parse(&a2, "rho");
    assert!(rho.is_weakly_admissible().unwrap());
    assert!(!rho.is_admissible().unwrap());

    let a3 = tree(Family::A, 3);
    assert!(parse(&a3, "tau").is_weakly_admissible().unwrap());
    assert!(parse(&a3, "tau").is_admissible().unwrap());
    assert_eq!(parse(&a3, "id").is_weakly_admissible(), Err(AutError::IdentityInput));
    // phi fixes (p, 2) so it is not weakly admissible
    assert!(!parse(&a3, "phi").is_weakly_admissible().unwrap());
}

#[test]
fn only_rho_is_weakly_but_not_admissible() {
    for t in simply_laced_up_to(7) {
        let t = Arc::new(t);
        for g in enumerate_weakly_admissible(t.clone(), 4).unwrap() {
            let adm = g.aut.is_admissible().unwrap();
            let expect_non_admissible = t.family() == Family::A && g.name == "rho";
            assert_eq!(adm, !expect_non_admissible, "{} {}", t.name(), g.name);
        }
    }
}

#[test]
fn enumeration_examples() {
    let names = |t: Arc<DynkinTree>, r| -> Vec<String> {
        enumerate_weakly_admissible(t, r)
            .unwrap()
            .into_iter()
            .map(|g| g.name)
            .collect()
    };
    assert_eq!(names(tree(Family::A, 3), 2), ["tau", "tau^2", "phi*tau", "phi*tau^2"]);
    assert_eq!(names(tree(Family::E, 8), 1), ["tau"]);
    assert_eq!(names(tree(Family::A, 2), 3), ["rho", "rho^2", "rho^3"]);
    assert_eq!(names(tree(Family::D, 4), 1).len(), 6);
    assert_eq!(names(tree(Family::A, 1), 2), ["tau", "tau^2"]);
}

#[test]
fn enumerated_generators_parse_back() {
    for t in simply_laced_up_to(8) {
        let t = Arc::new(t);
        let gens = enumerate_weakly_admissible(t.clone(), 3).unwrap();
        for (i, g) in gens.iter().enumerate() {
            assert_eq!(parse(&t, &g.name), g.aut, "{} {}", t.name(), g.name);
            for h in &gens[..i] {
                assert_ne!(h.aut, g.aut);
            }
        }
    }
}

#[test]
fn grammar_errors() {
    let d4 = tree(Family::D, 4);
    assert_eq!(
        parse_generator(d4.clone(), "rho").unwrap_err().code(),
        "UndefinedSymbolForFamily"
    );
    assert_eq!(parse_generator(d4.clone(), "tau^").unwrap_err().code(), "ParseError");
    assert_eq!(parse_generator(d4.clone(), "tau**S").unwrap_err().code(), "ParseError");
    assert_eq!(parse_generator(d4.clone(), "sigma").unwrap_err().code(), "ParseError");
    assert_eq!(parse_generator(d4.clone(), "phi(14)").unwrap_err().code(), "ParseError");
    assert_eq!(parse_generator(d4, "tau x").unwrap_err().code(), "ParseError");
    let a3 = tree(Family::A, 3);
    assert_eq!(
        parse_generator(a3, "phi(12)").unwrap_err().code(),
        "UndefinedSymbolForFamily"
    );
    let e7 = tree(Family::E, 7);
    assert_eq!(
        parse_generator(e7, "phi").unwrap_err().code(),
        "UndefinedSymbolForFamily"
    );
    let l2 = tree(Family::L, 2);
    assert_eq!(parse_generator(l2, "S").unwrap_err().code(), "UndefinedSymbolForFamily");
}

#[test]
fn grammar_composition_order() {
    let a3 = tree(Family::A, 3);
    let g = parse(&a3, " tau^-1 * S ");
    let expect = SlicedAutomorphism::tau_power(a3.clone(), -1)
        .compose(&SlicedAutomorphism::suspension(a3.clone()).unwrap())
        .unwrap();
    assert_eq!(g, expect);
    assert_eq!(parse(&a3, "phi"), parse(&a3, "tau^2*S"));
}

#[test]
fn d4_phi_notation() {
    let d4 = tree(Family::D, 4);
    // leaves 1, 3, 4 are indices 0, 2, 3
    assert_eq!(parse(&d4, "phi").perm(), &[0, 1, 3, 2]);
    assert_eq!(parse(&d4, "phi(12)").perm(), &[2, 1, 0, 3]);
    assert_eq!(parse(&d4, "phi(123)").perm(), &[2, 1, 3, 0]);
    assert_eq!(parse(&d4, "phi(123)^3"), parse(&d4, "id"));
    assert_eq!(parse(&d4, "phi(12)(23)"), parse(&d4, "phi(123)"));
}

#[test]
fn d4_conjugacy_classes() {
    let d4 = tree(Family::D, 4);
    let a = parse(&d4, "phi(12)*tau");
    let b = parse(&d4, "phi(23)*tau");
    let c = parse(&d4, "phi(123)*tau");
    let d = parse(&d4, "phi(132)*tau");
    assert!(a.conjugacy_equal(&b).unwrap());
    assert!(c.conjugacy_equal(&d).unwrap());
    assert!(!a.conjugacy_equal(&c).unwrap());
    assert!(!a.conjugacy_equal(&parse(&d4, "tau")).unwrap());
}

#[test]
fn group_membership() {
    let a3 = tree(Family::A, 3);
    let g = parse(&a3, "tau^-1*S");
    assert!(parse(&a3, "tau^-6").is_in_group_of(&g).unwrap());
    assert!(!parse(&a3, "tau^-1").is_in_group_of(&g).unwrap());
    assert!(parse(&a3, "id").is_in_group_of(&g).unwrap());
}

#[test]
fn bad_parts_are_rejected() {
    let a3 = tree(Family::A, 3);
    assert!(SlicedAutomorphism::from_parts(a3.clone(), vec![0, 1, 0], vec![0, 1, 2]).is_err());
    assert!(SlicedAutomorphism::from_parts(a3.clone(), vec![0, 0, 0], vec![0, 0, 2]).is_err());
    assert!(SlicedAutomorphism::from_parts(a3, vec![1, 2, 3], vec![2, 1, 0]).is_ok());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn word(t: &Arc<DynkinTree>, w: &[(u8, i8)]) -> SlicedAutomorphism {
        let base = [
            SlicedAutomorphism::translation(t.clone()),
            SlicedAutomorphism::suspension(t.clone()).unwrap(),
        ];
        w.iter().fold(SlicedAutomorphism::identity(t.clone()), |acc, &(i, k)| {
            acc.compose(&base[i as usize % 2].power(k as i64)).unwrap()
        })
    }

    fn trees() -> Vec<Arc<DynkinTree>> {
        simply_laced_up_to(8).into_iter().map(Arc::new).collect()
    }

    proptest! {
        #[test]
        fn group_laws(t in 0usize..20, a in prop::collection::vec((0u8..2, -3i8..4), 0..4),
                      b in prop::collection::vec((0u8..2, -3i8..4), 0..4),
                      c in prop::collection::vec((0u8..2, -3i8..4), 0..4),
                      m in -4i64..5, n in -4i64..5) {
            let ts = trees();
            let t = &ts[t % ts.len()];
            let (ga, gb, gc) = (word(t, &a), word(t, &b), word(t, &c));
            let left = ga.compose(&gb).unwrap().compose(&gc).unwrap();
            let right = ga.compose(&gb.compose(&gc).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(ga.power(m + n), ga.power(m).compose(&ga.power(n)).unwrap());
            prop_assert!(ga.compose(&ga.inverse()).unwrap().is_identity());
            // tau is central
            let tau = SlicedAutomorphism::translation(t.clone());
            prop_assert_eq!(ga.compose(&tau).unwrap(), tau.compose(&ga).unwrap());
        }
    }
}
