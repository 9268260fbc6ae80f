//! Cross-module invariants: containment hierarchy, triple/pattern-set
//! equalities, and randomized properties of the series engine.

use proptest::prelude::*;

use invlab::enumerate::{iter_invseqs, PatternSet, PATTERN_ALPHABET};
use invlab::series::{q_ratio, Fps, Q};
use invlab::{avoids_all, avoids_triple, contains_pattern, lehmer_code, Pattern, Permutation, RelTriple};

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

#[test]
fn containment_hierarchy_up_to_n8() {
    // avoiding 001 forces avoiding 101, 102 and 201;
    // avoiding 021 forces avoiding 210 and 201
    let p001 = pat("001");
    let p021 = pat("021");
    let above_001 = [pat("101"), pat("102"), pat("201")];
    let above_021 = [pat("210"), pat("201")];
    for n in 0..=8 {
        for e in iter_invseqs(n).unwrap() {
            let w = e.entries();
            if !contains_pattern(w, &p001) {
                assert!(above_001.iter().all(|p| !contains_pattern(w, p)), "{:?}", w);
            }
            if !contains_pattern(w, &p021) {
                assert!(above_021.iter().all(|p| !contains_pattern(w, p)), "{:?}", w);
            }
        }
    }
}

#[test]
fn characterizations_equal_avoidance_up_to_n8() {
    use invlab::enumerate::{matches_characterization, ClassId};
    for class in ClassId::ALL {
        let ps = PatternSet::from_patterns(class.patterns());
        for n in 0..=8 {
            for e in iter_invseqs(n).unwrap() {
                assert_eq!(
                    matches_characterization(class, &e),
                    ps.is_avoided_by(e.entries()),
                    "class {} e {:?}",
                    class.name(),
                    e.entries()
                );
            }
        }
    }
}

#[test]
fn triple_pattern_set_equalities_up_to_n8() {
    let cases: [(&str, &[&str]); 5] = [
        (">=,!=,>=", &["101", "110", "201", "210"]),
        ("<,-,<", &["012", "021", "011"]),
        (">,-,<=", &["101", "102"]),
        ("-,>,>=", &["110", "210", "120", "010"]),
        ("!=,>=,>=", &["100", "210", "120", "010"]),
    ];
    for (triple_s, pats) in cases {
        let t: RelTriple = triple_s.parse().unwrap();
        let ps: Vec<Pattern> = pats.iter().map(|s| s.parse().unwrap()).collect();
        for n in 0..=8 {
            for e in iter_invseqs(n).unwrap() {
                let w = e.entries();
                assert_eq!(
                    avoids_triple(w, &t),
                    avoids_all(w, &ps),
                    "{} vs {:?} at {:?}",
                    triple_s,
                    pats,
                    w
                );
            }
        }
    }
}

/// Random inversion sequence of length up to 9.
fn invseq_strategy() -> impl Strategy<Value = Vec<u32>> {
    (0usize..=9).prop_flat_map(|n| {
        let entries: Vec<BoxedStrategy<u32>> =
            (0..n).map(|i| (0..=i as u32).boxed()).collect();
        entries
    })
}

fn perm_strategy() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=8).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<u32>>()).prop_shuffle())
}

/// Unit series with small rational coefficients.
fn unit_series_strategy() -> impl Strategy<Value = Fps> {
    proptest::collection::vec((-20i64..=20, 1i64..=6), 10).prop_map(|cs| {
        let mut coeffs: Vec<Q> = cs.into_iter().map(|(n, d)| q_ratio(n, d)).collect();
        coeffs.insert(0, Q::from_integer(1.into()));
        Fps::from_coeffs(coeffs)
    })
}

proptest! {
    #[test]
    fn avoidance_is_monotone_in_the_pattern_set(e in invseq_strategy(), mask in 0u16..(1 << 13), sub in 0u16..(1 << 13)) {
        // ps = qs restricted by a submask: avoiding qs implies avoiding ps
        let qs: Vec<Pattern> = PATTERN_ALPHABET
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, s)| s.parse().unwrap())
            .collect();
        let ps: Vec<Pattern> = PATTERN_ALPHABET
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask & sub) >> i & 1 == 1)
            .map(|(_, s)| s.parse().unwrap())
            .collect();
        if avoids_all(&e, &qs) {
            prop_assert!(avoids_all(&e, &ps));
        }
    }

    #[test]
    fn stat_vector_invariants_hold(e in invseq_strategy()) {
        let n = e.len();
        let seq = invlab::InvSeq::new(e).unwrap();
        let v = seq.stats();
        prop_assert_eq!(v.rep, n - v.dist);
        prop_assert!(v.zero + v.dist <= n);
        if n >= 1 {
            prop_assert!(v.satu >= 1);
            prop_assert_eq!(v.last, *seq.entries().last().unwrap() as usize);
        }
        prop_assert!(v.rmin >= usize::from(n >= 1));
    }

    #[test]
    fn lehmer_code_is_valid_and_sorted_free(p in perm_strategy()) {
        let perm = Permutation::new(p).unwrap();
        let code = lehmer_code(&perm);
        // the constructor re-validates the defining bound
        prop_assert!(invlab::InvSeq::new(code.entries().to_vec()).is_ok());
    }

    #[test]
    fn sqrt_then_square_is_identity(f in unit_series_strategy()) {
        let g = f.sqrt().unwrap();
        prop_assert_eq!(g.mul(&g).unwrap(), f);
    }

    #[test]
    fn divide_then_multiply_is_identity(f in unit_series_strategy(), g in unit_series_strategy()) {
        let q = f.div(&g).unwrap();
        prop_assert_eq!(q.mul(&g).unwrap(), f);
    }

    #[test]
    fn pattern_sets_count_like_their_label(e in invseq_strategy()) {
        // is_avoided_by agrees with the two primitive predicates
        let ps = PatternSet::parse_patterns("101,110").unwrap()
            .with_triple("<,-,<".parse().unwrap());
        let by_hand = avoids_all(&e, &ps.word_patterns)
            && ps.triples.iter().all(|t| avoids_triple(&e, t));
        prop_assert_eq!(ps.is_avoided_by(&e), by_hand);
    }
}
