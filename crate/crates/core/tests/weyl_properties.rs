use proptest::prelude::*;
use valquiver::{EdgeSpec, RootVector, ValuedGraph, WeylElement, WeylError, WeylGroup, Word};
use valquiver_oracles::catalog;
use valquiver_oracles::{bfs_ball, word_matrix};

fn rank2(b12: u32, b21: u32) -> WeylGroup {
    let g = ValuedGraph::new(2, &[EdgeSpec::new(1, 2, b12, b21)]).unwrap();
    WeylGroup::new(g.cartan_matrix())
}

fn chain3() -> WeylGroup {
    WeylGroup::new(catalog::CHAIN3_DOUBLE.load().graph.cartan_matrix())
}

fn order_of_braid(w: &WeylGroup, i: usize, j: usize, max: u32) -> Option<u32> {
    let si = w.simple_reflection(i).unwrap();
    let sj = w.simple_reflection(j).unwrap();
    // Powers of a finite-order element cycle through finitely many
    // matrices, so overflow means infinite order.
    match w.order(&si.compose(sj).unwrap(), max) {
        Ok(order) => order,
        Err(WeylError::Overflow(_)) => None,
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn braid_orders_follow_the_product_of_valuations() {
    // Non-adjacent vertices commute.
    let a3 = WeylGroup::new(catalog::A3_LINEAR.load().graph.cartan_matrix());
    assert_eq!(order_of_braid(&a3, 1, 3, 50), Some(2));
    assert_eq!(order_of_braid(&rank2(1, 1), 1, 2, 50), Some(3));
    assert_eq!(order_of_braid(&rank2(2, 1), 1, 2, 50), Some(4));
    assert_eq!(order_of_braid(&rank2(3, 1), 1, 2, 50), Some(6));
    for (b12, b21) in [(2, 2), (4, 1), (3, 2), (5, 1), (3, 3)] {
        assert_eq!(
            order_of_braid(&rank2(b12, b21), 1, 2, 50),
            None,
            "({b12},{b21})"
        );
    }
}

#[test]
fn lengths_match_bfs_on_a_ball() {
    let w = chain3();
    let ball = bfs_ball(w.cartan(), 7);
    for (m, &len) in &ball.lengths {
        let e = WeylElement::from_matrix(m.clone());
        assert_eq!(w.length(&e, 100).unwrap(), len);
        let word = w.reduced_word(&e, 100).unwrap();
        assert_eq!(word.len(), len);
        assert_eq!(&word_matrix(w.cartan(), word.letters()), m);
    }
}

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 0..=max_len)
}

proptest! {
    #[test]
    fn reflections_are_involutions(coords in prop::collection::vec(-50i64..50, 3), i in 1usize..=3) {
        let w = chain3();
        let v = RootVector::new(coords);
        let back = w.reflect(i, &w.reflect(i, &v).unwrap()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn inverse_has_the_same_length(letters in word_strategy(3, 12)) {
        let w = chain3();
        let e = w.element_of(&Word::new(letters.clone())).unwrap();
        let inv = w.element_of(&Word::new(letters.clone()).reversed()).unwrap();
        prop_assert_eq!(&e.inverse().unwrap(), &inv);
        let cap = w.default_length_cap(letters.len());
        prop_assert_eq!(w.length(&e, cap).unwrap(), w.length(&inv, cap).unwrap());
    }

    #[test]
    fn one_reflection_changes_length_by_one(letters in word_strategy(3, 12), i in 1usize..=3) {
        let w = chain3();
        let e = w.element_of(&Word::new(letters.clone())).unwrap();
        let f = w.simple_reflection(i).unwrap().compose(&e).unwrap();
        let cap = w.default_length_cap(letters.len() + 1);
        let (a, b) = (w.length(&e, cap).unwrap(), w.length(&f, cap).unwrap());
        prop_assert_eq!(a.abs_diff(b), 1);
    }

    #[test]
    fn reduced_means_length_equals_word_length(letters in word_strategy(3, 14)) {
        let w = chain3();
        let word = Word::new(letters.clone());
        let e = w.element_of(&word).unwrap();
        let len = w.length(&e, w.default_length_cap(letters.len())).unwrap();
        prop_assert_eq!(w.is_reduced(&word).unwrap(), len == letters.len());
    }
}
