//! Cross-module invariants, mostly property-based.

use fullerene_core::classify::{canonical_word, classify_pattern, color};
use fullerene_core::cycle::canonical_order;
use fullerene_core::discharge::{apply_rules, initial_charges};
use fullerene_core::generate::{buckyball, nanotube};
use fullerene_core::graph::FullereneGraph;
use fullerene_core::io::{encode_planar_code, parse_planar_code, ParseError};
use fullerene_core::search::{brute_force_longest_cycle, longest_cycle_exact, SearchBudget};
use proptest::prelude::*;

#[test]
fn generated_family_satisfies_all_invariants() {
    for k in 0..=6 {
        let g = nanotube(k);
        let report = g.validate();
        assert!(report.all_ok(), "nanotube({k}): {:?}", report);
        // face boundaries partition the 3n directed edges
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 3 * g.n());
    }
    assert!(buckyball().validate().all_ok());
}

#[test]
fn two_dodecahedra_joined_by_two_edges_fail_three_connectivity() {
    let a = nanotube(0);
    let mut rotation: Vec<Vec<usize>> = a.rotation().iter().map(|r| r.to_vec()).collect();
    // second copy shifted by 20
    for v in 0..20 {
        rotation.push(a.neighbors(v).iter().map(|&w| w + 20).collect());
    }
    // swap the edge {0,1} of each copy for the cross edges {0,20} and {1,21}
    let replace = |list: &mut Vec<usize>, from: usize, to: usize| {
        let i = list.iter().position(|&x| x == from).unwrap();
        list[i] = to;
    };
    replace(&mut rotation[0], 1, 20);
    replace(&mut rotation[1], 0, 21);
    replace(&mut rotation[20], 21, 0);
    replace(&mut rotation[21], 20, 1);
    let g = FullereneGraph::from_rotation(&rotation).unwrap();
    let report = g.validate();
    assert!(!report.three_connected);
    let cut = report.cut.clone().unwrap();
    assert!(cut.len() <= 2);
    assert!(!report.all_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn planar_code_round_trip_and_corruption(ks in proptest::collection::vec(0usize..4, 1..4),
                                             flip_pos in 0usize..200,
                                             flip_val in 0u8..255) {
        let graphs: Vec<FullereneGraph> = ks.iter().map(|&k| nanotube(k)).collect();
        let bytes = encode_planar_code(&graphs).unwrap();
        let parsed = parse_planar_code(&bytes).unwrap();
        let again = encode_planar_code(&parsed).unwrap();
        prop_assert_eq!(&bytes, &again);

        // a mutated stream must produce an error or parse cleanly, never panic
        let mut corrupted = bytes.clone();
        let pos = flip_pos % corrupted.len();
        corrupted[pos] = flip_val;
        match parse_planar_code(&corrupted) {
            Ok(_) => {}
            Err(ParseError::MissingHeader { offset }) => prop_assert_eq!(offset, 0),
            Err(ParseError::Truncated { offset })
            | Err(ParseError::BadOrder { offset, .. })
            | Err(ParseError::NeighborOutOfRange { offset, .. })
            | Err(ParseError::BadRotation { offset, .. })
            | Err(ParseError::NotFullerene { offset, .. }) => {
                prop_assert!(offset <= corrupted.len());
            }
        }
    }

    #[test]
    fn canonical_order_is_representation_independent(rot in 0usize..10, reflect in any::<bool>()) {
        let g = nanotube(1);
        let c = longest_cycle_exact(&g, &[], &SearchBudget::default())
            .unwrap().cycle.unwrap();
        let mut order: Vec<usize> = c.order().to_vec();
        let m = order.len();
        order.rotate_left(rot % m);
        if reflect {
            order.reverse();
        }
        prop_assert_eq!(canonical_order(&order), c.order().to_vec());
    }

    #[test]
    fn forbidding_more_never_lengthens(extra in 0usize..20) {
        let g = nanotube(0);
        let base = brute_force_longest_cycle(&g, &[0]).map_or(0, |c| c.len());
        let more = brute_force_longest_cycle(&g, &[0, extra]).map_or(0, |c| c.len());
        prop_assert!(more <= base);
    }

    #[test]
    fn coloring_counts_and_conservation(pair in proptest::sample::subsequence((0..30usize).collect::<Vec<_>>(), 2)) {
        let g = nanotube(1);
        let out = longest_cycle_exact(&g, &pair, &SearchBudget::default()).unwrap();
        let c = out.cycle.expect("two forbidden vertices leave a cycle");
        let coloring = color(&g, &c);
        // white count complements the cycle length
        prop_assert_eq!(coloring.white_count() + c.len(), g.n());
        // each white vertex lies on three faces
        let per_face: usize = (0..g.num_faces())
            .map(|f| coloring.face_whites(f).len())
            .sum();
        prop_assert_eq!(per_face, 3 * coloring.white_count());
        // charge is conserved through the rules, bit-exactly
        let ledger = apply_rules(&g, &c, &coloring, initial_charges(&g, &c, &coloring));
        prop_assert_eq!(ledger.total(), 6 * coloring.white_count() as i64);
    }

    #[test]
    fn patterns_are_invariant_under_relabeling(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = nanotube(1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for v in 0..g.n() {
            rotation[perm[v]] = g.neighbors(v).iter().map(|&w| perm[w]).collect();
        }
        let h = FullereneGraph::from_rotation(&rotation).unwrap();

        let c = longest_cycle_exact(&g, &[5, 14], &SearchBudget::default())
            .unwrap().cycle.unwrap();
        let mapped: Vec<usize> = c.order().iter().map(|&v| perm[v]).collect();
        let ch = fullerene_core::CycleState::new(&h, mapped).unwrap();

        let col_g = color(&g, &c);
        let col_h = color(&h, &ch);
        for f in g.faces() {
            let (u, v) = f.edge(0);
            let fh = h.face_of_directed(perm[u], perm[v]);
            let pg = classify_pattern(&g, f.id, &col_g, &c);
            let ph = classify_pattern(&h, fh, &col_h, &ch);
            prop_assert_eq!(&pg.canonical, &ph.canonical);
            prop_assert_eq!(pg.catalogue_id, ph.catalogue_id);
        }
        // and the canonical word really is rotation/reflection invariant
        let f0 = &g.faces()[0];
        let word: Vec<(bool, bool)> = (0..f0.len())
            .map(|i| {
                let (u, v) = f0.edge(i);
                (c.contains_vertex(u), c.contains_edge(&g, u, v))
            })
            .collect();
        let mut rotated = word.clone();
        rotated.rotate_left(2);
        prop_assert_eq!(canonical_word(&word), canonical_word(&rotated));
    }
}
