use dascent::burge::{gamma, is_burge_word, Biword, BurgeWord};
use dascent::hat::{all_hats, hat, is_self_modified, min_d, unhat};
use dascent::perm::{contains_f, contains_f_d, Permutation};
use dascent::word::{
    d_ascent_set, is_cayley, is_d_ascent_sequence, is_inversion_sequence, lrmax_set, nub, weak_descent_set, Letter,
    Word,
};
use proptest::prelude::*;

/// Folds arbitrary seeds into a d-ascent sequence by reducing each entry
/// modulo the bound allowed by the prefix.
fn d_ascent_from_seeds(d: u64, seeds: &[u64]) -> Vec<Letter> {
    let mut w: Vec<Letter> = Vec::with_capacity(seeds.len());
    let mut asc = 0u64;
    for &s in seeds {
        let a = 1 + s % (asc + 1);
        let is_asc = match w.last() {
            None => true,
            Some(&prev) => a + d > prev,
        };
        asc += is_asc as u64;
        w.push(a);
    }
    w
}

fn cayley_from_seeds(seeds: &[u64]) -> Vec<Letter> {
    let mut values: Vec<u64> = seeds.to_vec();
    let mut sorted = values.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for v in values.iter_mut() {
        *v = sorted.binary_search(v).unwrap() as u64 + 1;
    }
    values
}

fn perm_from_seeds(seeds: &[u64]) -> Permutation {
    let mut idx: Vec<usize> = (0..seeds.len()).collect();
    idx.sort_by_key(|&i| (seeds[i], i));
    let mut p = vec![0; seeds.len()];
    for (rank, &i) in idx.iter().enumerate() {
        p[i] = rank as Letter + 1;
    }
    Permutation::new(Word::new(p).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn d_ascent_sets_grow_with_d(seeds in prop::collection::vec(0u64..50, 0..12), d in 0u64..5) {
        let w = d_ascent_from_seeds(d, &seeds);
        prop_assert!(d_ascent_set(&w, d).is_subset(&d_ascent_set(&w, d + 1)));
        prop_assert!(is_d_ascent_sequence(&w, d + 1));
    }

    #[test]
    fn hat_unhat_roundtrip(seeds in prop::collection::vec(0u64..50, 0..12), d in 0u64..5) {
        let w = d_ascent_from_seeds(d, &seeds);
        prop_assert!(is_d_ascent_sequence(&w, d));
        let r = hat(&w, d).unwrap();
        prop_assert!(is_cayley(&r.modified));
        prop_assert_eq!(nub(&r.modified), d_ascent_set(&w, d));
        prop_assert_eq!(unhat(&r.modified, d).unwrap().into_vec(), w.clone());
        prop_assert_eq!(is_self_modified(&w, d).unwrap(), r.modified.as_slice() == w.as_slice());
    }

    #[test]
    fn lrmax_inside_nub(seeds in prop::collection::vec(0u64..6, 0..12)) {
        let w = cayley_from_seeds(&seeds);
        prop_assert!(lrmax_set(&w).is_subset(&nub(&w)));
    }

    #[test]
    fn inversion_sequences_lie_in_a_n(seeds in prop::collection::vec(0u64..100, 0..10)) {
        let w: Vec<Letter> = seeds.iter().enumerate().map(|(i, s)| 1 + s % (i as u64 + 1)).collect();
        prop_assert!(is_inversion_sequence(&w));
        prop_assert!(is_d_ascent_sequence(&w, w.len() as u64));
        let d0 = min_d(&w).unwrap();
        prop_assert!(is_d_ascent_sequence(&w, d0));
        prop_assert!(d0 == 0 || !is_d_ascent_sequence(&w, d0 - 1));
        prop_assert!(!all_hats(&w).unwrap().is_empty());
    }

    #[test]
    fn transpose_is_an_involution(seeds in prop::collection::vec(0u64..6, 0..10)) {
        let c = cayley_from_seeds(&seeds);
        let b = BurgeWord::new(Biword::new(Word::identity(c.len()), Word::new(c).unwrap()).unwrap()).unwrap();
        let t = b.transpose();
        prop_assert!(is_burge_word(t.biword()));
        prop_assert_eq!(t.transpose(), b);
    }

    #[test]
    fn gamma_inverts_permutations(seeds in prop::collection::vec(any::<u64>(), 0..10)) {
        let p = perm_from_seeds(&seeds);
        prop_assert_eq!(gamma(&p).unwrap(), p.inverse());
    }

    #[test]
    fn f_d_avoidance_weakens_with_d(seeds in prop::collection::vec(any::<u64>(), 0..9), d in 0u64..4) {
        let p = perm_from_seeds(&seeds);
        prop_assert_eq!(contains_f_d(&p, 0), contains_f(&p));
        if contains_f_d(&p, d + 1) {
            prop_assert!(contains_f_d(&p, d));
        }
    }

    #[test]
    fn weak_descents_of_transposed_identity(seeds in prop::collection::vec(0u64..5, 1..9)) {
        let c = cayley_from_seeds(&seeds);
        let p = gamma(&c).unwrap();
        prop_assert_eq!(weak_descent_set(&c).len(), p.ides());
    }
}
