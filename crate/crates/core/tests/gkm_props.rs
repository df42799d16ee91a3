use proptest::prelude::*;
use symloc::gkm::{cp_graph, euler, morse_betti};

/// Distinct nonzero entries make every weight `e_i - e_j` and `e_i` pair
/// nontrivially.
fn generic_direction(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(1i64..=50, n)
        .prop_flat_map(|set| {
            let v: Vec<i64> = set.into_iter().collect();
            (Just(v.clone()), prop::collection::vec(any::<bool>(), v.len()))
        })
        .prop_map(|(v, signs)| v.iter().zip(signs).map(|(x, s)| if s { *x } else { -x }).collect::<Vec<_>>())
        .prop_shuffle()
}

proptest! {
    #[test]
    fn morse_betti_independent_of_direction((n, xi) in (1usize..=8).prop_flat_map(|n| (Just(n), generic_direction(n)))) {
        let g = cp_graph(n);
        let b = morse_betti(&g, &xi).unwrap();
        let expected: Vec<u64> = (0..=2 * n).map(|i| u64::from(i % 2 == 0)).collect();
        prop_assert_eq!(&b, &expected);
        prop_assert_eq!(b.iter().sum::<u64>() as usize, euler(&g));
        let neg: Vec<i64> = xi.iter().map(|x| -x).collect();
        let mut rev = morse_betti(&g, &neg).unwrap();
        rev.reverse();
        prop_assert_eq!(rev, b);
    }
}
