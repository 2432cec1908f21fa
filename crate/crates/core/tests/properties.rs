use backedge_core::blockade::{rainbow_copy, trace_table, Blockade, Host};
use backedge_core::enumerate::is_isomorphic;
use backedge_core::format::{ordered_to_text, parse, tournament_to_text};
use backedge_core::optimal::{interval_violations, min_backedge_numbering};
use backedge_core::patterns::{find_srseh_certificate, verify_certificate};
use backedge_core::search::{backedge_to_pure, contains_ordered, max_pure_pair, pure_to_backedge, PairKind, PurePair};
use backedge_core::{
    backedge_count, backedge_graph, canonical_form, tournament_from_backedges, walk_imbalance,
    Numbering, Object, OrderedGraph, Tournament, Walk,
};
use proptest::prelude::*;
use proptest::sample::Index;

fn tournament(max_n: usize) -> impl Strategy<Value = Tournament> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut beats = vec![vec![false; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let b = it.next().unwrap();
                    beats[i][j] = b;
                    beats[j][i] = !b;
                }
            }
            Tournament::from_fn(n, |i, j| beats[i][j]).unwrap()
        })
    })
}

fn with_numbering(max_n: usize) -> impl Strategy<Value = (Tournament, Numbering)> {
    tournament(max_n).prop_flat_map(|t| {
        let n = t.n();
        (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(t, p)| (t, Numbering::new(p).unwrap()))
    })
}

fn ordered_on(n: usize, density: f64) -> impl Strategy<Value = OrderedGraph> {
    proptest::collection::vec(proptest::bool::weighted(density), n * (n - 1) / 2).prop_map(
        move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        edges.push((a, b));
                    }
                }
            }
            OrderedGraph::from_edges(n, &edges).unwrap()
        },
    )
}

fn ordered(max_n: usize, density: f64) -> impl Strategy<Value = OrderedGraph> {
    (1..=max_n).prop_flat_map(move |n| ordered_on(n, density))
}

fn random_walk(g: &OrderedGraph, start: Index, steps: &[Index]) -> Walk {
    let mut w = vec![start.index(g.n())];
    for s in steps {
        let nb: Vec<usize> = (0..g.n())
            .filter(|&u| g.adjacent(*w.last().unwrap(), u))
            .collect();
        if nb.is_empty() {
            break;
        }
        w.push(nb[s.index(nb.len())]);
    }
    Walk(w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trips(t in tournament(12), g in ordered(12, 0.3)) {
        prop_assert_eq!(parse(&tournament_to_text(&t)), Ok(Object::Tournament(t)));
        prop_assert_eq!(parse(&ordered_to_text(&g)), Ok(Object::Ordered(g)));
    }

    #[test]
    fn backedge_duality((t, nu) in with_numbering(10)) {
        let b = backedge_graph(&t, &nu).unwrap();
        prop_assert_eq!(tournament_from_backedges(&b).unwrap(), t.relabel(&nu).unwrap());
        prop_assert_eq!(backedge_count(&t, &nu).unwrap(), b.edge_count());
    }

    #[test]
    fn reversal_mirrors_backedge_graph((t, nu) in with_numbering(10)) {
        let b = backedge_graph(&t, &nu).unwrap();
        let mirrored = backedge_graph(&t.reverse(), &nu.reversed()).unwrap();
        prop_assert_eq!(mirrored, b.reverse_order());
    }

    #[test]
    fn involutions(t in tournament(10), g in ordered(10, 0.4)) {
        prop_assert_eq!(t.reverse().reverse(), t);
        prop_assert_eq!(g.reverse_order().reverse_order(), g.clone());
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn imbalance_negates_and_adds(
        g in ordered(9, 0.5),
        start in any::<Index>(),
        steps in proptest::collection::vec(any::<Index>(), 0..8),
        cut in any::<Index>(),
    ) {
        let w = random_walk(&g, start, &steps);
        let total = walk_imbalance(&g, &w).unwrap();
        prop_assert_eq!(walk_imbalance(&g, &w.reversed()).unwrap(), -total);
        let k = cut.index(w.0.len());
        let head = Walk(w.0[..=k].to_vec());
        let tail = Walk(w.0[k..].to_vec());
        prop_assert_eq!(
            walk_imbalance(&g, &head).unwrap() + walk_imbalance(&g, &tail).unwrap(),
            total
        );
    }

    #[test]
    fn canonical_form_is_a_class_invariant((t, nu) in with_numbering(7)) {
        let r = t.relabel(&nu).unwrap();
        prop_assert_eq!(canonical_form(&t).unwrap(), canonical_form(&r).unwrap());
        prop_assert!(is_isomorphic(&t, &r).unwrap());
    }

    #[test]
    fn optimum_is_invariant((t, nu) in with_numbering(8)) {
        let best = min_backedge_numbering(&t).unwrap();
        prop_assert_eq!(min_backedge_numbering(&t.relabel(&nu).unwrap()).unwrap().backedge_count, best.backedge_count);
        prop_assert_eq!(min_backedge_numbering(&t.reverse()).unwrap().backedge_count, best.backedge_count);
        prop_assert!(backedge_count(&t, &nu).unwrap() >= best.backedge_count);
        prop_assert!(interval_violations(&t, &best.numbering).unwrap().is_empty());
    }

    #[test]
    fn pure_pair_order_survives_reversal(t in tournament(9)) {
        let order = |t: &Tournament| max_pure_pair(t).unwrap().map_or(0, |p| p.order());
        prop_assert_eq!(order(&t), order(&t.reverse()));
    }

    #[test]
    fn translations_keep_half((t, nu) in with_numbering(14)) {
        if let Some(p) = max_pure_pair(&t).unwrap() {
            let q = pure_to_backedge(&t, &nu, &p).unwrap();
            prop_assert!(2 * q.order() >= p.order());
            prop_assert!(q.kind != PairKind::Tournament);
        }
        let b = backedge_graph(&t, &nu).unwrap();
        if let Some(q) = brute_anticomplete_pair(&b) {
            let p = backedge_to_pure(&t, &nu, &q).unwrap();
            prop_assert!(2 * p.order() >= q.order());
            prop_assert_eq!(p.kind, PairKind::Tournament);
        }
    }

    #[test]
    fn singleton_rainbow_is_containment(g in ordered(9, 0.4), h in ordered(4, 0.5)) {
        let b = Blockade::singletons(g.n()).unwrap();
        let r = rainbow_copy(&Host::Ordered(g.clone()), &b, &Host::Ordered(h.clone())).unwrap();
        prop_assert_eq!(r.is_some(), contains_ordered(&g, &h).is_some());
    }

    #[test]
    fn trace_is_monotone_under_contraction(
        g in ordered_on(12, 0.3),
        keep in proptest::collection::vec(any::<bool>(), 12),
    ) {
        let b = Blockade::intervals(4, 3).unwrap();
        // Drop a position from a block only when the block keeps another.
        let blocks: Vec<u64> = b
            .blocks()
            .iter()
            .map(|&m| {
                let mut kept = m;
                for v in 0..12 {
                    if m >> v & 1 == 1 && !keep[v] && (kept & !(1 << v)) != 0 {
                        kept &= !(1 << v);
                    }
                }
                kept
            })
            .collect();
        let c = Blockade::new(12, blocks).unwrap();
        prop_assert!(c.is_contraction_of(&b));
        let host = Host::Ordered(g);
        let big = trace_table(&host, &b, 3, u64::MAX).unwrap();
        let small = trace_table(&host, &c, 3, u64::MAX).unwrap();
        for (k, v) in &small {
            prop_assert!(v.is_subset(&big[k]));
        }
    }

    #[test]
    fn minor_operations_commute(
        keep in proptest::collection::vec(any::<bool>(), 12),
        pick in proptest::sample::subsequence((0..4usize).collect::<Vec<_>>(), 1..=4),
    ) {
        let b = Blockade::intervals(4, 3).unwrap();
        let shrink = |m: u64| {
            let low = m & m.wrapping_neg();
            (0..12).filter(|&v| m >> v & 1 == 1 && keep[v]).fold(low, |a, v| a | 1 << v)
        };
        let contraction = Blockade::new(12, b.blocks().iter().map(|&m| shrink(m)).collect()).unwrap();
        let sub_of_contraction = contraction.sub_blockade(&pick).unwrap();
        let sub = b.sub_blockade(&pick).unwrap();
        let contraction_of_sub = Blockade::new(12, sub.blocks().iter().map(|&m| shrink(m)).collect()).unwrap();
        prop_assert_eq!(&sub_of_contraction, &contraction_of_sub);
        prop_assert!(contraction_of_sub.is_contraction_of(&sub));
    }

    #[test]
    fn interval_blockades_are_respectful(k in 2..6usize, w in 1..4usize, swap in any::<Index>()) {
        let b = Blockade::intervals(k, w).unwrap();
        prop_assert!(b.is_respectful());
        let i = swap.index(k - 1);
        let mut order: Vec<usize> = (0..k).collect();
        order.swap(i, i + 1);
        prop_assert!(!b.sub_blockade(&order).unwrap().is_respectful());
    }
}

/// Largest anticomplete pair of the backedge graph, found by brute force
/// over left parts.
fn brute_anticomplete_pair(b: &OrderedGraph) -> Option<PurePair> {
    let n = b.n();
    let all = (1u64 << n) - 1;
    let mut best: Option<PurePair> = None;
    for a in 1..=all {
        let mut common = all & !a;
        for v in 0..n {
            if a >> v & 1 == 1 {
                common &= !b.neighbours(v);
            }
        }
        let order = a.count_ones().min(common.count_ones()) as usize;
        if common != 0 && best.as_ref().is_none_or(|p| order > p.order()) {
            best = Some(PurePair { a, b: common, kind: PairKind::Anticomplete });
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn certificates_mirror_under_reversal(t in tournament(6)) {
        let here = find_srseh_certificate(&t, 1 << 20).unwrap();
        let there = find_srseh_certificate(&t.reverse(), 1 << 20).unwrap();
        prop_assert_eq!(here.is_some(), there.is_some());
        for (tt, cert) in [(&t, &here), (&t.reverse(), &there)] {
            if let Some(c) = cert {
                prop_assert!(verify_certificate(tt, c).is_empty());
            }
        }
    }
}
