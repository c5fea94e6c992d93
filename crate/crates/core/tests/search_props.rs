use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

use tpe_core::families::{in_family, FamilySearch, NineClass};
use tpe_core::search::{
    decompose, direct_search, generate_equations, pair_and_solve, run_pipeline, satisfies, Candidate, DirectBounds,
    EquationRecord, Exponent, SearchConfig, Shape53, Shape54, Shapes, Side,
};
use tpe_core::solve::enumerate_solutions;
use tpe_core::triple::build_triple;

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![1 => Just(Exponent::Free), 4 => (1u32..8).prop_map(Exponent::Fixed)]
}

fn b(n: u64) -> BigUint {
    BigUint::from(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]
    #[test]
    fn solved_systems_satisfy_all_four_equations(
        a1 in 1u64..4, b1 in 1u64..4,
        x1 in exponent(), x2 in exponent(),
        w1 in 1u32..8, y1 in 1u32..8, z1 in 1u32..8,
        w2 in 1u32..8, y2 in 1u32..8, z2 in 1u32..8,
    ) {
        let (x1, x2) = if a1 == 1 { (Exponent::Free, Exponent::Free) } else { (x1, x2) };
        let s53 = Shape53 { g: b(7), w1, a1: b(a1), x1, b1: b(b1), y1, c1: b(5), z1 };
        let s54 = Shape54 { a1: b(a1), x2, g: b(7), w2, b1: b(b1), y2, c1: b(5), z2 };
        if let Ok(sys) = pair_and_solve(&s53, &s54) {
            prop_assert!(satisfies(&sys, &s53, &s54));
            prop_assert!(sys.alpha > 0 && sys.beta > 0 && sys.gamma > 0);
            if a1 == 1 {
                prop_assert_eq!(sys.alpha, 1);
                prop_assert_eq!(sys.x1, z1 * sys.gamma + w1);
                prop_assert_eq!(sys.x2, z2 * sys.gamma);
            }
        }
    }
}

fn pairwise_coprime(v: &[&BigUint]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i].gcd(v[j]).is_one()))
}

#[test]
fn decomposed_shapes_hold() {
    for eq in generate_equations(300, 20_000) {
        for oriented in [eq.clone(), eq.swapped()] {
            if let Shapes::S53(v) = decompose(&oriented, Side::Left) {
                for s in v {
                    assert!(s.holds(), "{s:?}");
                    assert!(pairwise_coprime(&[&s.g, &s.a1, &s.b1, &s.c1]));
                }
            }
            if let Shapes::S54(v) = decompose(&oriented, Side::Right) {
                for s in v {
                    assert!(s.holds(), "{s:?}");
                    assert!(pairwise_coprime(&[&s.g, &s.a1, &s.b1, &s.c1]));
                }
            }
        }
    }
}

fn assert_sound(c: &Candidate) {
    let n = &c.nine;
    assert!(!n.a.gcd(&n.b).is_one());
    let t = build_triple(&n.a, &n.b, &n.c).unwrap();
    let set = enumerate_solutions(&t, c.bound_bits);
    assert_eq!(set.solutions.len(), 2, "{n}");
    assert!(!n.solutions_correspond(), "{n}");
    if let NineClass::Anomalous { .. } = c.class {
        assert!(matches!(in_family(n, None), FamilySearch::Absent { .. }), "{n}");
    }
}

#[test]
fn direct_results_are_sound() {
    let r = direct_search(DirectBounds { a1_max: 6, g_max: 12, b1_max: 80, exp_max: 5 }, &SearchConfig::default());
    assert!(!r.results.is_empty());
    for c in &r.results {
        assert_sound(c);
    }
}

#[test]
fn pipeline_results_are_sound_and_recall_known_pairs() {
    let mut records = generate_equations(300, 100_000);
    for (a, bb, c) in [(3, 2, 5), (1, 24, 25), (16, 3, 19), (1, 18, 19)] {
        records.push(EquationRecord::from_u64(a, bb, c).unwrap());
    }
    let r = run_pipeline(&records, &SearchConfig::default());
    for c in &r.results {
        assert_sound(c);
    }
    let found: Vec<String> = r.results.iter().map(|c| c.nine.to_string()).collect();
    assert!(found.contains(&"(3, 6, 15, 2, 1, 1, 2, 3, 2)".to_string()));
    assert!(found.contains(&"(2, 6, 38, 1, 2, 1, 5, 1, 1)".to_string()));
}
