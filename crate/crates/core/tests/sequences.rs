use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use valquiver::{AdmissibleSequence, Filter, Orientation, PrincipalSequenceId, TqVertex};
use valquiver_oracles::catalog::{self, CatalogQuiver};
use valquiver_oracles::{enumerate_admissible, equivalence_closure};

fn quivers() -> Vec<CatalogQuiver> {
    catalog::RANK_LE_4.iter().map(|e| e.load()).collect()
}

/// An admissible sequence chosen by a list of sink picks.
fn walk(base: &Arc<Orientation>, picks: &[usize]) -> AdmissibleSequence {
    let mut o = (**base).clone();
    let mut letters = Vec::new();
    for &p in picks {
        let sinks: Vec<_> = o.sinks().collect();
        let x = sinks[p % sinks.len()];
        o = o.reflect(x).unwrap();
        letters.push(x);
    }
    AdmissibleSequence::new(Arc::clone(base), letters).unwrap()
}

#[test]
fn complete_sequences_return_to_the_base() {
    for q in quivers() {
        let k = AdmissibleSequence::complete(Arc::clone(&q.orientation));
        assert_eq!(k.final_orientation(), *q.orientation, "{}", q.name);
        assert_eq!(k.len(), q.graph.rank());
    }
}

#[test]
fn sinks_become_sources() {
    for q in quivers() {
        for x in q.orientation.sinks() {
            let r = q.orientation.reflect(x).unwrap();
            assert!(r.is_source(x), "{}", q.name);
            assert_eq!(r.reflect(x).unwrap(), *q.orientation);
        }
    }
}

#[test]
fn hulls_are_monotone_and_extensive() {
    for q in quivers() {
        let o = &q.orientation;
        let n = q.graph.rank();
        let filters: Vec<Filter> = (0u32..1 << n)
            .map(|mask| {
                (1..=n)
                    .filter(|v| mask & (1 << (v - 1)) != 0)
                    .collect::<BTreeSet<_>>()
            })
            .filter(|set| o.is_filter(set))
            .map(|set| Filter::new(o, set).unwrap())
            .collect();
        for f in &filters {
            let h = o.hull(f).unwrap();
            assert!(f.is_subset(&h));
            for g in &filters {
                if f.is_subset(g) {
                    assert!(h.is_subset(&o.hull(g).unwrap()), "{}", q.name);
                }
            }
        }
    }
}

#[test]
fn translation_quiver_order_is_a_partial_order() {
    for q in quivers() {
        let o = &q.orientation;
        let points: Vec<TqVertex> = (0..3)
            .flat_map(|l| o.vertices().map(move |v| TqVertex::new(l, v)))
            .collect();
        for &a in &points {
            assert!(o.tq_reachable(a, a));
            for &b in &points {
                if a != b && o.tq_reachable(a, b) {
                    assert!(!o.tq_reachable(b, a), "{}: {a} {b}", q.name);
                }
                for &c in &points {
                    if o.tq_reachable(a, b) && o.tq_reachable(b, c) {
                        assert!(o.tq_reachable(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn closure_members_are_admissible_and_equivalent() {
    for q in quivers() {
        for s in enumerate_admissible(&q.orientation, 6) {
            for t in equivalence_closure(&q.orientation, s.letters()) {
                let t = AdmissibleSequence::new(Arc::clone(&q.orientation), t).unwrap();
                assert!(s.is_equivalent(&t).unwrap());
            }
        }
    }
}

#[test]
fn canonical_forms_are_equivalent_with_nested_supports() {
    for q in quivers() {
        for s in enumerate_admissible(&q.orientation, 7).into_iter().skip(1) {
            let c = s.canonical_form().unwrap();
            let canon = AdmissibleSequence::new(Arc::clone(&q.orientation), c.letters()).unwrap();
            assert!(s.is_equivalent(&canon).unwrap());
            let supports = c.supports();
            for pair in supports.windows(2) {
                assert!(pair[1].is_subset(&pair[0]), "{}: {s}", q.name);
            }
        }
    }
}

#[test]
fn principal_sequences_are_distinct_and_recognised() {
    for q in quivers() {
        let mut seen = BTreeSet::new();
        for r in 1..=5 {
            for x in q.orientation.vertices() {
                let id = PrincipalSequenceId::new(r, x);
                let s = AdmissibleSequence::principal(Arc::clone(&q.orientation), id).unwrap();
                assert_eq!(s.principal_id().unwrap(), Some(id), "{}", q.name);
                assert!(seen.insert(s.multiplicity()), "{}: repeated {id:?}", q.name);
            }
        }
    }
}

#[test]
fn repeating_a_complete_sequence_is_admissible() {
    for q in quivers() {
        let k = AdmissibleSequence::complete(Arc::clone(&q.orientation));
        let k3 = k.repeat(3).unwrap();
        assert_eq!(k3.len(), 3 * q.graph.rank());
        assert_eq!(k3.multiplicity().max_count(), 3);
    }
}

proptest! {
    #[test]
    fn lattice_laws(
        which in 0usize..14,
        a in prop::collection::vec(0usize..4, 0..10),
        b in prop::collection::vec(0usize..4, 0..10),
        c in prop::collection::vec(0usize..4, 0..10),
    ) {
        let q = catalog::RANK_LE_4[which % catalog::RANK_LE_4.len()].load();
        let (a, b, c) = (walk(&q.orientation, &a), walk(&q.orientation, &b), walk(&q.orientation, &c));
        let m = |s: &AdmissibleSequence| s.multiplicity();

        prop_assert_eq!(m(&a.meet(&b).unwrap()), m(&b.meet(&a).unwrap()));
        prop_assert_eq!(m(&a.join(&b).unwrap()), m(&b.join(&a).unwrap()));
        prop_assert_eq!(
            m(&a.meet(&b).unwrap().meet(&c).unwrap()),
            m(&a.meet(&b.meet(&c).unwrap()).unwrap())
        );
        prop_assert_eq!(
            m(&a.join(&b).unwrap().join(&c).unwrap()),
            m(&a.join(&b.join(&c).unwrap()).unwrap())
        );
        prop_assert_eq!(m(&a.meet(&a.join(&b).unwrap()).unwrap()), m(&a));
        prop_assert_eq!(m(&a.join(&a.meet(&b).unwrap()).unwrap()), m(&a));
        prop_assert!(a.meet(&b).unwrap().is_subsequence(&a).unwrap());
        prop_assert!(a.is_subsequence(&a.join(&b).unwrap()).unwrap());
        prop_assert_eq!(m(&a.meet_blockwise(&b).unwrap()), m(&a.meet(&b).unwrap()));
        prop_assert_eq!(m(&a.join_blockwise(&b).unwrap()), m(&a.join(&b).unwrap()));
    }

    #[test]
    fn canonical_form_round_trips(which in 0usize..14, picks in prop::collection::vec(0usize..4, 1..16)) {
        let q = catalog::RANK_LE_4[which % catalog::RANK_LE_4.len()].load();
        let s = walk(&q.orientation, &picks);
        prop_assume!(!s.is_empty());
        let supports = s.canonical_form().unwrap().supports();
        let rebuilt = AdmissibleSequence::from_block_supports(Arc::clone(&q.orientation), &supports).unwrap();
        prop_assert!(rebuilt.is_equivalent(&s).unwrap());
        let from_m = AdmissibleSequence::from_multiplicity(Arc::clone(&q.orientation), &s.multiplicity()).unwrap();
        prop_assert!(from_m.is_equivalent(&s).unwrap());
    }
}
