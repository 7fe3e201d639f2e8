//! Property tests: parser round trips, semantic preservation of the
//! connegation rewrite, lattice laws on random sets, and the pointwise
//! negation invariants.

use proptest::prelude::*;

use trineg::degree::{
    con_neg, int_neg, opp_neg, Lambda, NegationConfig, NegationVariant, TruthDegree,
};
use trineg::semantics::{entails, eval, is_valid, Assignment, SemanticsConfig, TruthValue3};
use trineg::set::FuzzySet;
use trineg::syntax::{parse, render, Formula};

fn atom_name() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("A".to_string()),
        Just("B".to_string()),
        Just("C".to_string()),
        Just("p1".to_string()),
        Just("q_2".to_string()),
    ]
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = atom_name().prop_map(Formula::Atom);
    leaf.prop_recursive(8, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::con_neg),
            inner.clone().prop_map(Formula::opp_neg),
            inner.clone().prop_map(Formula::int_neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

fn degree() -> impl Strategy<Value = TruthDegree> {
    (0.0f64..=1.0).prop_map(TruthDegree::clamped)
}

fn lambda() -> impl Strategy<Value = Lambda> {
    (0.01f64..=0.99).prop_map(|l| Lambda::new(l).unwrap())
}

fn config() -> impl Strategy<Value = NegationConfig> {
    (lambda(), prop_oneof![
        Just(NegationVariant::Verbatim),
        Just(NegationVariant::Symmetric)
    ])
        .prop_map(|(l, v)| NegationConfig::with_variant(l, v))
}

fn small_set() -> impl Strategy<Value = FuzzySet> {
    prop::collection::vec(0.0f64..=1.0, 1..6).prop_map(|degrees| {
        FuzzySet::new(
            degrees
                .into_iter()
                .enumerate()
                .map(|(k, v)| (format!("x{k}"), TruthDegree::clamped(v))),
        )
        .unwrap()
    })
}

fn all_assignments(atoms: &[String]) -> Vec<Assignment> {
    let mut out = vec![Assignment::new()];
    for name in atoms {
        let mut next = Vec::with_capacity(out.len() * 3);
        for a in &out {
            for v in TruthValue3::ALL {
                let mut b = a.clone();
                b.insert(name.clone(), v);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

proptest! {
    #[test]
    fn parse_render_round_trip(f in formula()) {
        let text = render(&f);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rendered_text_is_stable(f in formula()) {
        let text = render(&f);
        prop_assert_eq!(render(&parse(&text).unwrap()), text);
    }

    #[test]
    fn expand_connegation_removes_and_preserves(f in formula()) {
        let expanded = f.expand_connegation();
        // no contradictory negation survives
        fn has_conneg(f: &Formula) -> bool {
            match f {
                Formula::Atom(_) => false,
                Formula::ConNeg(_) => true,
                Formula::OppNeg(g) | Formula::IntNeg(g) => has_conneg(g),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                    has_conneg(a) || has_conneg(b)
                }
            }
        }
        prop_assert!(!has_conneg(&expanded));
        prop_assert_eq!(expanded.expand_connegation(), expanded.clone());
        // same value under every assignment (formula strategy has <= 5 atoms)
        let cfg = SemanticsConfig::paper();
        for a in all_assignments(&f.atoms()) {
            prop_assert_eq!(eval(&f, &a, cfg).unwrap(), eval(&expanded, &a, cfg).unwrap());
        }
    }

    #[test]
    fn opposite_clause_and_connegation_split(f in formula()) {
        let cfg = SemanticsConfig::paper();
        let opp = Formula::opp_neg(f.clone());
        let con = Formula::con_neg(f.clone());
        let split = Formula::or(
            Formula::opp_neg(f.clone()),
            Formula::int_neg(f.clone()),
        );
        for a in all_assignments(&f.atoms()) {
            let v = eval(&f, &a, cfg).unwrap().numeric();
            prop_assert_eq!(eval(&opp, &a, cfg).unwrap().numeric(), 1.0 - v);
            prop_assert_eq!(
                eval(&con, &a, cfg).unwrap(),
                eval(&split, &a, cfg).unwrap()
            );
        }
    }

    #[test]
    fn validity_agrees_with_empty_entailment(f in formula()) {
        let cfg = SemanticsConfig::paper();
        prop_assert_eq!(
            is_valid(&f, cfg).unwrap().verdict,
            entails(&[], &f, cfg).unwrap().verdict
        );
    }

    #[test]
    fn negations_stay_in_unit_interval(d in degree(), cfg in config()) {
        for v in [
            opp_neg(d).value(),
            int_neg(d, cfg).value(),
            con_neg(d, cfg).value(),
        ] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn opposite_involution_within_rounding(d in degree()) {
        let back = opp_neg(opp_neg(d)).value();
        prop_assert!((back - d.value()).abs() <= 1e-15);
    }

    #[test]
    fn intermediary_band_containment(d in degree(), cfg in config()) {
        let l = cfg.lambda.value();
        let (lo, hi) = (l.min(1.0 - l), l.max(1.0 - l));
        let v = int_neg(d, cfg).value();
        let x = d.value();
        if cfg.variant == NegationVariant::Verbatim && x > lo && x < hi {
            prop_assert_eq!(v, x, "identity expected on the middle band");
        } else {
            prop_assert!(v >= lo - 1e-12 && v <= hi + 1e-12);
        }
    }

    #[test]
    fn contradictory_is_pointwise_max(d in degree(), cfg in config()) {
        let expect = opp_neg(d).value().max(int_neg(d, cfg).value());
        prop_assert_eq!(con_neg(d, cfg).value(), expect);
    }

    #[test]
    fn sandwich_and_dominance(d in degree(), cfg in config()) {
        let x = d.value();
        let i = int_neg(d, cfg).value();
        let o = opp_neg(d).value();
        let c = con_neg(d, cfg).value();
        let tol = 1e-12;
        prop_assert!(
            (x >= i - tol && i >= o - tol) || (o >= i - tol && i >= x - tol),
            "sandwich fails at lambda {} d {x}", cfg.lambda.value()
        );
        if x <= 0.5 {
            prop_assert!((c - o).abs() <= tol);
        }
        if x >= 0.5 {
            prop_assert!((c - i).abs() <= tol);
        }
    }

    #[test]
    fn lattice_laws_exact(a in small_set(), b in small_set(), c in small_set()) {
        // regenerate over a shared universe by truncating to the smallest
        let n = a.universe().len().min(b.universe().len()).min(c.universe().len());
        let shrink = |s: &FuzzySet| {
            FuzzySet::new(
                s.iter()
                    .take(n)
                    .map(|(id, d)| (id.to_string(), d)),
            )
            .unwrap()
        };
        let (a, b, c) = (shrink(&a), shrink(&b), shrink(&c));
        let union_comm = a.union(&b).unwrap().equals(&b.union(&a).unwrap(), 0.0).unwrap();
        prop_assert!(union_comm);
        let assoc = a.union(&b).unwrap().union(&c).unwrap()
            .equals(&a.union(&b.union(&c).unwrap()).unwrap(), 0.0)
            .unwrap();
        prop_assert!(assoc);
        let absorb = a.intersect(&a.union(&b).unwrap()).unwrap().equals(&a, 0.0).unwrap();
        prop_assert!(absorb);
        let distrib = a.union(&b.intersect(&c).unwrap()).unwrap()
            .equals(
                &a.union(&b).unwrap().intersect(&a.union(&c).unwrap()).unwrap(),
                0.0,
            )
            .unwrap();
        prop_assert!(distrib);
    }

    #[test]
    fn fuzzy_set_json_round_trip(s in small_set()) {
        let json = serde_json::to_string(&s).unwrap();
        let back: FuzzySet = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, s);
    }
}
