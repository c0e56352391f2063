use proptest::prelude::*;
use ramsey_cli::graph6::{decode, encode};
use ramsey_core::Graph;

fn graph() -> impl Strategy<Value = Graph> {
    (0usize..=20).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn decode_inverts_encode(g in graph()) {
        let s = encode(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(decode(&s).unwrap(), g);
    }
}

proptest! {
    #[test]
    fn decode_never_panics(s in "\\PC{0,12}") {
        if let Ok(g) = decode(&s) {
            prop_assert_eq!(encode(&g).unwrap(), s.trim());
        }
    }
}
