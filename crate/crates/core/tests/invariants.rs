use proptest::prelude::*;
use zipcone::arith::{to_big, Int};
use zipcone::cones::{fm, Cone};
use zipcone::hasse::{classify_with, enumerate_triples, ClassifyOptions};
use zipcone::par::Exec;
use zipcone::rootdata::{build_root_datum, RootDatum};
use zipcone::weyl::{enumerate_parabolic_with, from_word, inversion_count, reflect};

const TYPES: [&str; 6] = ["A3", "B3", "C3", "D4", "G2", "F4"];

fn gens_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=4).prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(-3i64..=3, d), 1..=6)))
}

fn root_datum(idx: usize) -> RootDatum {
    build_root_datum(TYPES[idx % TYPES.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facet_membership_agrees_with_elimination(
        (dim, gens) in gens_strategy(),
        points in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..=8),
    ) {
        let cone = Cone::from_generators_i64(dim, &gens).unwrap();
        let big: Vec<Vec<Int>> = gens.iter().map(|g| to_big(g)).collect();
        for p in &points {
            let v = to_big(&p[..dim]);
            prop_assert_eq!(cone.member(&v).unwrap(), fm::in_cone(&big, &v));
        }
    }

    #[test]
    fn both_conversions_describe_the_same_cone((dim, gens) in gens_strategy()) {
        let big: Vec<Vec<Int>> = gens.iter().map(|g| to_big(g)).collect();
        let (ineqs, eqs) = fm::v_to_h(dim, &big);
        let mut rows = ineqs;
        for e in eqs {
            rows.push(e.iter().map(|x| -x).collect());
            rows.push(e);
        }
        let from_fm = Cone::from_inequalities(dim, rows).unwrap();
        let from_dd = Cone::from_generators_i64(dim, &gens).unwrap();
        prop_assert!(from_fm.equal(&from_dd).unwrap());
    }

    #[test]
    fn cone_json_round_trip((dim, gens) in gens_strategy()) {
        let cone = Cone::from_generators_i64(dim, &gens).unwrap();
        let back = Cone::from_json(&cone.to_json().unwrap()).unwrap();
        prop_assert!(cone.equal(&back).unwrap());
        prop_assert_eq!(cone.dim().unwrap(), back.dim().unwrap());
    }

    #[test]
    fn weyl_length_counts_inversions(t in 0usize..TYPES.len(), word in prop::collection::vec(0usize..8, 0..12)) {
        let rd = root_datum(t);
        let word: Vec<usize> = word.into_iter().map(|i| i % rd.semisimple_rank()).collect();
        let w = from_word(&rd, &word).unwrap();
        prop_assert_eq!(w.length(), inversion_count(&rd, &w.matrix));
        prop_assert!(w.length() <= word.len());
        prop_assert_eq!(w.length() % 2, word.len() % 2);
        let inv = w.inverse();
        prop_assert!(w.compose(&rd, &inv).unwrap().matrix.is_identity());
        prop_assert_eq!(inv.length(), w.length());
    }

    #[test]
    fn reflections_are_involutions(t in 0usize..TYPES.len(), a in 0usize..8, lam in prop::collection::vec(-5i64..=5, 4)) {
        let rd = root_datum(t);
        let a = a % rd.semisimple_rank();
        let lam = &lam[..rd.rank()];
        let once = reflect(&rd, a, lam).unwrap();
        prop_assert_eq!(reflect(&rd, a, &once).unwrap(), lam.to_vec());
    }

    #[test]
    fn parabolic_enumeration_independent_of_exec(t in 0usize..TYPES.len(), mask in 0u8..16) {
        let rd = root_datum(t);
        let k: Vec<usize> = (0..rd.semisimple_rank()).filter(|i| mask >> i & 1 == 1).collect();
        let seq = enumerate_parabolic_with(&rd, &k, 100_000, Exec::Sequential).unwrap();
        let par = enumerate_parabolic_with(&rd, &k, 100_000, Exec::Parallel).unwrap();
        prop_assert_eq!(seq.len(), par.len());
        for (a, b) in seq.iter().zip(&par) {
            prop_assert_eq!(&a.word, &b.word);
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn triple_enumeration_independent_of_exec() {
    let seq = enumerate_triples(6, false, Exec::Sequential).unwrap();
    let par = enumerate_triples(6, false, Exec::Parallel).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn classification_sorted_and_repeatable() {
    let opts = ClassifyOptions::default();
    let a = classify_with(6, opts, Exec::Parallel).unwrap();
    let b = classify_with(6, opts, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    let keys: Vec<_> = a.iter().map(|c| (c.rank, c.to_json().to_string())).collect();
    assert!(keys.windows(2).all(|w| w[0].0 <= w[1].0));
}
