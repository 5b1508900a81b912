use alliance_core::alliance::{catalog_spec, check_alliance, AllianceSpec, NeutralDomination};
use alliance_core::direct::{check_signed, maj_step, SignedFunction, SignedVariant};
use alliance_core::graph::{parse_edge_list, serialize_edge_list, Graph, VertexSet};
use alliance_core::intset::IntSet;
use alliance_core::solvers::{bb_min_alliance, solve_extremal, Objective};
use proptest::prelude::*;

/// A graph on `1..=max_n` vertices together with one of its vertex subsets.
fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        let edge_mask = if pairs == 64 {
            u64::MAX
        } else {
            (1u64 << pairs) - 1
        };
        (any::<u64>(), any::<u64>()).prop_map(move |(code, s)| {
            (
                Graph::from_edge_code(n, code & edge_mask),
                VertexSet::from_mask(n, s),
            )
        })
    })
}

fn small_intset() -> impl Strategy<Value = IntSet> {
    prop_oneof![
        Just(IntSet::All),
        (-4i64..=4).prop_map(IntSet::AtLeast),
        (-4i64..=4).prop_map(IntSet::AtMost),
        prop::collection::vec(-6i64..=6, 0..4).prop_map(IntSet::finite),
    ]
}

proptest! {
    #[test]
    fn defensive_thresholds_are_nested((g, s) in graph_and_set(10), r in -4i64..=4) {
        let strong = AllianceSpec::new(IntSet::AtLeast(r), IntSet::All).global();
        let weak = AllianceSpec::new(IntSet::AtLeast(r - 1), IntSet::All).global();
        if check_alliance(&g, &s, &strong).unwrap() {
            prop_assert!(check_alliance(&g, &s, &weak).unwrap());
        }
    }

    #[test]
    fn global_implies_plain((g, s) in graph_and_set(10), d in small_intset(), o in small_intset()) {
        let plain = AllianceSpec::new(d, o);
        if check_alliance(&g, &s, &plain.clone().global()).unwrap() {
            prop_assert!(check_alliance(&g, &s, &plain).unwrap());
            prop_assert!(g.is_dominating(&s));
        }
    }

    #[test]
    fn o_only_constrains_the_boundary((g, s) in graph_and_set(10), d in small_intset(), o in small_intset()) {
        // Two O sets that agree on every boundary difference give the same verdict.
        let boundary: Vec<i64> = g
            .boundary(&s)
            .iter()
            .map(|v| 2 * g.degree_in(&s, v) as i64 - g.degree(v) as i64)
            .filter(|x| o.contains(*x))
            .collect();
        let a = AllianceSpec::new(d.clone(), o);
        let b = AllianceSpec::new(d, IntSet::finite(boundary));
        prop_assert_eq!(check_alliance(&g, &s, &a).unwrap(), check_alliance(&g, &s, &b).unwrap());
    }

    #[test]
    fn empty_neutrals_change_nothing(
        (g, s) in graph_and_set(10),
        d in small_intset(),
        o in small_intset(),
        global in any::<bool>(),
    ) {
        let mut spec = AllianceSpec::new(d, o);
        spec.global = global;
        let expected = check_alliance(&g, &s, &spec).unwrap();
        for mode in [NeutralDomination::InGraph, NeutralDomination::InReducedGraph, NeutralDomination::Both] {
            let with = spec.clone().with_neutrals(VertexSet::empty(g.n())).with_neutral_domination(mode);
            prop_assert_eq!(check_alliance(&g, &s, &with).unwrap(), expected);
        }
    }

    #[test]
    fn maj_step_is_monotone_and_extensive((g, p) in graph_and_set(11), extra in any::<u64>()) {
        let q = p.union(&VertexSet::from_mask(g.n(), extra));
        let mp = maj_step(&g, &p);
        prop_assert!(p.is_subset(&mp));
        prop_assert!(mp.is_subset(&maj_step(&g, &q)));
    }

    #[test]
    fn edge_list_round_trips((g, _) in graph_and_set(11)) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_edge_list(&back), text);
    }

    #[test]
    fn signed_dominating_matches_catalog((g, s) in graph_and_set(11), k in 1i64..=3) {
        let entry = catalog_spec("signed-dominating", &[("k".to_string(), k)]).unwrap();
        let direct = check_signed(&g, &SignedFunction::from_positive_set(&s), k, SignedVariant::Closed).unwrap();
        prop_assert_eq!(entry.holds(&g, &s).unwrap(), direct);
    }

    #[test]
    fn branch_and_bound_matches_exhaustive(
        (g, _) in graph_and_set(10),
        d in small_intset(),
        o in small_intset(),
        nonempty in any::<bool>(),
    ) {
        let mut spec = AllianceSpec::new(d, o).global();
        spec.require_nonempty = nonempty;
        let bb = bb_min_alliance(&g, &spec).unwrap();
        let ex = solve_extremal(&g, |s| check_alliance(&g, s, &spec).unwrap(), Objective::Min).unwrap();
        prop_assert_eq!(bb.feasible, ex.feasible);
        prop_assert_eq!(bb.size, ex.size);
        prop_assert_eq!(bb.witness, ex.witness);
    }
}
