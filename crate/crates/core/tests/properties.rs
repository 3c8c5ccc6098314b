use proptest::prelude::*;
use wsc_core::budget::Budget;
use wsc_core::complex::{span, FlagComplex};
use wsc_core::conditions::{
    check_locally_k_large, check_sd2_star, check_sd2_star_links, check_sdn, is_weakly_systolic, PendantMode,
};
use wsc_core::convexity::{is_3_convex, is_convex, is_locally_3_convex};
use wsc_core::corpus;
use wsc_core::cover::{build_cover, validate_cover};
use wsc_core::graph::Graph;
use wsc_core::io;
use wsc_core::iso::find_isomorphism;
use wsc_core::thickening::CoxeterNerve;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn sd2_everywhere(x: &FlagComplex, b: &Budget) -> bool {
    x.skeleton().vertices().all(|v| check_sdn(x, &span(x, &[v]).unwrap(), 2, b).unwrap().holds)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn local_conditions_imply_sd2_star(g in graph_strategy(9)) {
        let b = Budget::default();
        let x = FlagComplex::new(g);
        let star = check_sd2_star(&x, &b).unwrap();
        if let Some(c) = &star.certificate {
            prop_assert!(c.validate(&x));
        }
        if sd2_everywhere(&x, &b) || check_locally_k_large(&x, 6, &b).unwrap().holds {
            prop_assert!(star.holds);
        }
        if x.is_connected() && is_weakly_systolic(&x).unwrap().holds {
            prop_assert!(star.holds);
        }
        // the link version is stronger: it forbids more pendant configurations
        if check_sd2_star_links(&x, 6, PendantMode::NonAdjacentApex, &b).unwrap().holds {
            prop_assert!(star.holds);
        }
    }

    #[test]
    fn certificates_validate(g in graph_strategy(9), k in 4usize..8) {
        let b = Budget::default();
        let x = FlagComplex::new(g);
        let v = check_locally_k_large(&x, k, &b).unwrap();
        prop_assert_eq!(v.holds, v.certificate.is_none());
        if let Some(c) = v.certificate {
            prop_assert!(c.validate(&x));
        }
    }

    #[test]
    fn truncated_budgets_never_change_verdicts(g in graph_strategy(9), limit in 1u64..200) {
        let x = FlagComplex::new(g);
        let full = check_sd2_star(&x, &Budget::unlimited()).unwrap();
        match check_sd2_star(&x, &Budget::new(limit)) {
            Ok(v) => prop_assert_eq!(v.holds, full.holds),
            Err(e) => prop_assert!(e.is_inconclusive(), "unexpected error {}", e),
        }
    }

    #[test]
    fn text_format_round_trips(g in graph_strategy(10)) {
        let bytes = io::graph_to_bytes(&g);
        let h = io::parse_graph(&bytes).unwrap();
        prop_assert_eq!(g.labels(), h.labels());
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
    }

    #[test]
    fn permuted_graphs_are_isomorphic(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = Graph::from_edges(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        let m = find_isomorphism(&g, &h, &Budget::default()).unwrap().unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.adjacent(u, v), h.adjacent(m[u], m[v]));
            }
        }
    }

    #[test]
    fn convexity_notions_agree_on_connected_sets(which in 0usize..3, seed in 0usize..1000, size in 1usize..12) {
        let b = Budget::default();
        let x = match which {
            0 => corpus::hexpatch(3),
            1 => corpus::heptagonal_disk(2).unwrap(),
            _ => corpus::cone_pendant_wheel(),
        };
        // grow a connected set deterministically from the seed
        let g = x.skeleton();
        let mut set = vec![seed % g.len()];
        let mut step = seed;
        while set.len() < size {
            let frontier: Vec<usize> = g.vertices().filter(|v| !set.contains(v) && set.iter().any(|&s| g.adjacent(s, *v))).collect();
            if frontier.is_empty() {
                break;
            }
            step = step.wrapping_mul(31).wrapping_add(7);
            set.push(frontier[step % frontier.len()]);
        }
        let y = span(&x, &set).unwrap();
        let c = is_convex(&x, &y, &b).unwrap().holds;
        prop_assert_eq!(c, is_3_convex(&x, &y, &b).unwrap().holds);
        prop_assert_eq!(c, is_locally_3_convex(&x, &y, &b).unwrap().holds);
    }

    #[test]
    fn covers_are_local_isomorphisms(which in 0usize..3, base in 0usize..24, radius in 1usize..4) {
        let b = Budget::default();
        let x = match which {
            0 => corpus::flag_torus(7, 7).unwrap(),
            1 => corpus::klein_quartic(),
            _ => corpus::cycle(6),
        };
        let base = base % x.len();
        let pc = build_cover(&x, base, radius, &b).unwrap();
        prop_assert!(validate_cover(&pc, &b).unwrap().holds);
        prop_assert_eq!(pc.map[pc.basepoint], base);
        for u in pc.cover.skeleton().vertices().filter(|&u| pc.levels[u] < radius) {
            let mut images: Vec<usize> = pc.cover.skeleton().neighbors(u).iter().map(|&w| pc.map[w]).collect();
            images.sort_unstable();
            let mut expected = x.skeleton().neighbors(pc.map[u]).to_vec();
            expected.sort_unstable();
            prop_assert_eq!(images, expected);
        }
    }

    #[test]
    fn words_times_their_reverse_are_trivial(word in proptest::collection::vec(0usize..5, 0..12)) {
        let nerve = CoxeterNerve::new(corpus::cycle(5).skeleton().clone());
        let nf = nerve.normal_form(&word);
        prop_assert_eq!(nerve.normal_form(&nf), nf.clone());
        prop_assert!(nf.len() <= word.len());
        let mut both = word.clone();
        both.extend(word.iter().rev());
        prop_assert!(nerve.normal_form(&both).is_empty());
    }
}
