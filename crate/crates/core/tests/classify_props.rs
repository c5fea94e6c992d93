mod common;

use tpe_core::classify::{
    equal_support_type_a_pairs, cross_prime_screen, matches_rigid_shape, mixes_type_c, type_a_data, type_c_data,
    type_o_census, type_profile, PrimeType,
};
use tpe_core::known::KNOWN_ANOMALOUS;
use tpe_core::solve::{enumerate_solutions, Solution};
use tpe_core::triple::Triple;

fn corpus() -> Vec<(Triple, Vec<Solution>)> {
    let mut triples = common::solvable_triples(150, 5000, 80);
    triples.extend(KNOWN_ANOMALOUS.iter().map(|k| (k[0], k[1], k[2])));
    triples
        .into_iter()
        .map(|(a, b, c)| {
            let t = Triple::from_u64(a, b, c).unwrap();
            let sols = enumerate_solutions(&t, 128).solutions;
            (t, sols)
        })
        .filter(|(_, s)| !s.is_empty())
        .collect()
}

#[test]
fn typing_invariants_over_solvable_triples() {
    let corpus = corpus();
    let mut type_a = 0;
    let mut type_c = 0;
    let mut rigid = 0;
    for (t, sols) in &corpus {
        for s in sols {
            let profile = type_profile(t, s).unwrap_or_else(|e| panic!("{:?} {s}: {e}", (&t.a, &t.b, &t.c)));
            for e in &profile.entries {
                match e.tag {
                    PrimeType::A => {
                        let d = type_a_data(t, &e.p, s).unwrap();
                        assert_eq!(&d.d * &d.f_n, t.a.pow(s.x));
                        assert_eq!(s.y, d.n * d.s);
                        assert_eq!(s.z, d.n * d.t);
                        type_a += 1;
                    }
                    PrimeType::C => {
                        let d = type_c_data(t, &e.p, s).unwrap();
                        assert_eq!(&d.d * &d.f_n, t.c.pow(s.z));
                        type_c += 1;
                    }
                    _ => {}
                }
            }
        }
        assert!(!mixes_type_c(t, sols).unwrap(), "{:?}", (&t.a, &t.b, &t.c));
        assert!(type_o_census(t, sols).unwrap().values().all(|&n| n <= 1), "{:?}", (&t.a, &t.b, &t.c));
        assert!(cross_prime_screen(t, sols).unwrap().is_empty(), "{:?}", (&t.a, &t.b, &t.c));
        if !equal_support_type_a_pairs(t, sols).unwrap().is_empty() {
            rigid += 1;
            assert!(matches_rigid_shape(t), "{:?} {sols:?}", (&t.a, &t.b, &t.c));
        }
    }
    println!("{} triples, {type_a} Type A and {type_c} Type C data, {rigid} rigid pairs", corpus.len());
    assert!(type_a > 0 && type_c > 0 && rigid > 0);
}
