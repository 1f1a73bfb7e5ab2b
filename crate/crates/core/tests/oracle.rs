//! The optimised solvers against the exhaustive oracle on random graphs.

use proptest::prelude::*;

use chromasum::solver::brute_force_oracle;
use chromasum::{solve, Graph, Quantity, SearchBudget};

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_oracle(g in graph()) {
        let budget = SearchBudget::default();
        let chi = brute_force_oracle(&g, Quantity::Chi, g.n_vertices(), &budget).unwrap().value as usize;
        let phi = brute_force_oracle(&g, Quantity::BChromatic, g.max_degree() + 1, &budget).unwrap().value as usize;
        for q in Quantity::ALL {
            let k = match q {
                Quantity::Chi => g.n_vertices(),
                Quantity::BChromatic => g.max_degree() + 1,
                Quantity::ChiSumMin | Quantity::ChiSumMax => chi,
                Quantity::BSumMin | Quantity::BSumMax => phi,
            };
            let want = brute_force_oracle(&g, q, k, &budget).unwrap();
            let got = solve(&g, q, &budget).unwrap();
            prop_assert_eq!(got.value, want.value, "{}", q);
            prop_assert!(got.validate(&g).is_ok());
        }
    }
}

#[test]
fn wheels_match_oracle() {
    let budget = SearchBudget::default();
    for n in 3..=9 {
        let g = chromasum::generators::wheel(n).unwrap();
        for q in [Quantity::Chi, Quantity::ChiSumMin, Quantity::ChiSumMax, Quantity::BChromatic] {
            let k = match q {
                Quantity::Chi => g.n_vertices(),
                Quantity::BChromatic => g.max_degree() + 1,
                _ => solve(&g, Quantity::Chi, &budget).unwrap().value as usize,
            };
            assert_eq!(
                solve(&g, q, &budget).unwrap().value,
                brute_force_oracle(&g, q, k, &budget).unwrap().value,
                "wheel({n}) {q}"
            );
        }
    }
}
