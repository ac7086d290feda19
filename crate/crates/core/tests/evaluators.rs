use metamorph::instances::heapsort::{
    flat_classifier, pop_min_coalgebra, pop_total_coalgebra, push_algebra, sort_piece, straight,
};
use metamorph::instances::{BaseConversion, Digit, ExtVal};
use metamorph::jigsaw::{board_trace, fill_general, fill_ih, fill_iv, jigsaw_general, jigsaw_ih, jigsaw_iv};
use metamorph::streaming::{stream, StreamProcessor};
use metamorph::verify::lists_up_to;
use metamorph::{
    cbp, cbp_right, foldl, foldr, unfoldr, Coalgebra, Colist, ContractViolation, LeftAlgebra, Prefix,
    RightAlgebra,
};
use proptest::prelude::*;

use ExtVal::{Finite, Infinity};

fn countdown() -> Coalgebra<u32, u32> {
    Coalgebra::new(|n: &u32| (*n > 0).then(|| (*n, n - 1)))
}

fn ext(xs: &[u64]) -> Vec<ExtVal> {
    xs.iter().map(|&x| Finite(x)).collect()
}

/// Sorting oracle for the infinite heapsort: sorted input, then ∞ forever.
fn sorted_then_infinity(input: &[ExtVal], n: usize) -> Vec<ExtVal> {
    let mut v: Vec<ExtVal> = input.to_vec();
    v.sort();
    v.into_iter().chain(std::iter::repeat(Infinity)).take(n).collect()
}

#[test]
fn length_as_a_right_fold() {
    let length = RightAlgebra::new(0usize, |_: &char, n: &usize| n + 1);
    assert_eq!(foldr(&length, &['x', 'y', 'z']), 3);
    assert_eq!(foldr(&length, &[]), 0);
}

#[test]
fn heap_fold_gives_the_multiset() {
    let h = foldr(&push_algebra(), &ext(&[2, 3, 1]));
    assert_eq!(h.canonical(), ext(&[1, 2, 3]));
}

#[test]
fn countdown_unfold_and_take() {
    let c = unfoldr(&countdown(), 3);
    assert_eq!(c.take(2).unwrap(), Prefix { items: vec![3, 2], ended: false });
    assert_eq!(c.take(10).unwrap(), Prefix { items: vec![3, 2, 1], ended: true });
    assert_eq!(Colist::<u32>::end().take(5).unwrap(), Prefix { items: vec![], ended: true });
    assert_eq!(unfoldr(&Coalgebra::<u32, u32>::silent(), 9).take(3).unwrap().items, Vec::<u32>::new());
}

#[test]
fn take_is_pure_and_prefixes_extend() {
    let conv = BaseConversion::new(10, 3).unwrap();
    let c = cbp(&conv.left_algebra(), &conv.eager_coalgebra(), conv.initial_state(), &[Digit(3)]);
    let first = c.take(12).unwrap();
    assert_eq!(c.take(12).unwrap(), first);
    for n in 0..12 {
        let shorter = c.take(n).unwrap();
        assert!(!shorter.ended);
        assert_eq!(shorter.items[..], first.items[..n]);
    }
}

#[test]
fn cbp_is_unfold_after_fold() {
    let conv = BaseConversion::new(10, 3).unwrap();
    let alg = conv.left_algebra();
    let g = conv.eager_coalgebra();
    for ds in lists_up_to(&[Digit(0), Digit(3), Digit(7), Digit(9)], 3) {
        let direct = unfoldr(&g, foldl(&alg, conv.initial_state(), &ds));
        let defn = cbp(&alg, &g, conv.initial_state(), &ds);
        assert_eq!(defn.take(15).unwrap(), direct.take(15).unwrap(), "{ds:?}");
    }
}

#[test]
fn cbp_right_heapsort() {
    let sorted = cbp_right(&push_algebra(), &pop_min_coalgebra(), &ext(&[2, 3, 1]));
    assert_eq!(sorted.take(10).unwrap(), Prefix { items: ext(&[1, 2, 3]), ended: true });
    assert!(cbp_right(&push_algebra(), &pop_min_coalgebra(), &[]).take(1).unwrap().ended);
    let padded = cbp_right(&push_algebra(), &pop_total_coalgebra().to_partial(), &ext(&[2, 3, 1]));
    assert_eq!(padded.take(5).unwrap().items, sorted_then_infinity(&ext(&[2, 3, 1]), 5));
}

#[test]
fn stream_produces_before_consuming() {
    let conv = BaseConversion::new(10, 2).unwrap();
    let s = conv.consume(&conv.initial_state(), Digit(6)).unwrap();
    let out = stream(&conv.streaming_spec(false), s, &[]);
    assert_eq!(out.take(1).unwrap().items, vec![Digit(1)]);
}

#[test]
fn stream_on_a_silent_state_ends() {
    let spec = metamorph::streaming::StreamingSpec::new(
        LeftAlgebra::new(|s: &u32, a: &u32| s + a),
        Coalgebra::<u32, u32>::silent(),
    );
    assert!(stream(&spec, 4, &[]).take(3).unwrap().ended);
}

#[test]
fn eager_streaming_disagrees_with_cbp() {
    let conv = BaseConversion::new(10, 2).unwrap();
    let eager = metamorph::streaming::StreamingSpec::new(conv.left_algebra(), conv.eager_coalgebra());
    let input = [Digit(6), Digit(5)];
    let streamed = stream(&eager, conv.initial_state(), &input).take(8).unwrap();
    let reference = cbp(&conv.left_algebra(), &conv.eager_coalgebra(), conv.initial_state(), &input)
        .take(8)
        .unwrap();
    // 0.65 = 0.1010011001..₂
    let want: Vec<Digit> = [1, 0, 1, 0, 0, 1, 1, 0].into_iter().map(Digit).collect();
    assert_eq!(reference.items, want);
    assert_ne!(streamed, reference);
}

#[test]
fn finish_with_flusher_after_full_input() {
    let conv = BaseConversion::new(10, 2).unwrap();
    let mut p = StreamProcessor::new(conv.streaming_spec(true), conv.initial_state());
    for d in [6, 2, 5] {
        p.feed(&Digit(d));
    }
    assert!(p.finish().take(4).unwrap().ended);
}

#[test]
fn finish_expands_three_tenths_in_base_three() {
    let conv = BaseConversion::new(10, 3).unwrap();
    let mut p = StreamProcessor::new(conv.streaming_spec(true), conv.initial_state());
    let early = p.feed(&Digit(3));
    let rest = p.finish().take(4 - early.len()).unwrap();
    let got: Vec<Digit> = early.into_iter().chain(rest.items).collect();

    let oracle = unfoldr(
        &conv.eager_coalgebra(),
        foldl(&conv.left_algebra(), conv.initial_state(), &[Digit(3)]),
    );
    assert_eq!(got, oracle.take(4).unwrap().items);
    assert_eq!(got, vec![Digit(0), Digit(2), Digit(2), Digit(0)]);
}

#[test]
fn driver_matches_stream() {
    let conv = BaseConversion::new(10, 2).unwrap();
    let alphabet: Vec<Digit> = (0..10).map(Digit).collect();
    for flush in [false, true] {
        for ds in lists_up_to(&alphabet, 3) {
            let mut p = StreamProcessor::new(conv.streaming_spec(flush), conv.initial_state());
            let mut out = p.drain();
            for d in &ds {
                out.extend(p.feed(d));
            }
            let tail = p.finish().take(10).unwrap();
            out.extend(tail.items);
            let whole = stream(&conv.streaming_spec(flush), conv.initial_state(), &ds)
                .take(out.len() + 1)
                .unwrap();
            assert_eq!(whole.items[..out.len()], out[..], "{ds:?}");
            assert_eq!(whole.ended, tail.ended && whole.items.len() == out.len(), "{ds:?}");
        }
    }
}

#[test]
fn fill_ih_examples() {
    let (p, st) = (sort_piece(), straight());
    assert_eq!(fill_ih(&p, &st, &[]), (Infinity, vec![]));
    assert_eq!(fill_ih(&p, &st, &ext(&[1])), (Finite(1), vec![Infinity]));
    assert_eq!(
        fill_ih(&p, &st, &ext(&[2, 3, 1])),
        (Finite(1), vec![Finite(2), Finite(3), Infinity])
    );
}

#[test]
fn jigsaw_examples() {
    let (p, st) = (sort_piece(), straight());
    assert_eq!(jigsaw_ih(&p, &st, &[]).take(3).unwrap().items, vec![Infinity; 3]);
    assert_eq!(
        jigsaw_ih(&p, &st, &ext(&[5])).take(3).unwrap().items,
        vec![Finite(5), Infinity, Infinity]
    );
    assert_eq!(jigsaw_iv(&p, &st, &[]).take(2).unwrap().items, vec![Infinity; 2]);
    assert_eq!(
        jigsaw_iv(&p, &st, &ext(&[7, 7])).take(4).unwrap().items,
        vec![Finite(7), Finite(7), Infinity, Infinity]
    );
}

#[test]
fn fill_iv_examples() {
    let p = sort_piece();
    let column = Colist::cons(Finite(3), Colist::repeat(Infinity));
    assert_eq!(
        fill_iv(&p, Finite(2), column).take(4).unwrap().items,
        vec![Finite(2), Finite(3), Infinity, Infinity]
    );
    assert_eq!(
        fill_iv(&p, Infinity, Colist::repeat(Infinity)).take(2).unwrap().items,
        vec![Infinity; 2]
    );
    let err = fill_iv(&p, Finite(1), Colist::end()).take(1).unwrap_err();
    assert_eq!(err, ContractViolation::EndedColumn);
    assert_eq!(err.to_string(), "ended column in infinite jigsaw");
}

#[test]
fn fill_general_examples() {
    let (p, st, flat) = (sort_piece(), straight(), flat_classifier());
    assert!(fill_general(&p, &st, &flat, Infinity, Colist::end()).take(1).unwrap().ended);
    assert_eq!(
        fill_general(&p, &st, &flat, Finite(4), Colist::end()).take(2).unwrap(),
        Prefix { items: vec![Finite(4)], ended: true }
    );
    let column: Colist<ExtVal> = vec![Finite(3)].into();
    assert_eq!(
        fill_general(&p, &st, &flat, Finite(2), column).take(3).unwrap(),
        Prefix { items: ext(&[2, 3]), ended: true }
    );
}

#[test]
fn jigsaw_general_examples() {
    let (p, st, flat) = (sort_piece(), straight(), flat_classifier());
    assert!(jigsaw_general(&p, &st, &flat, &[]).take(1).unwrap().ended);
    assert_eq!(
        jigsaw_general(&p, &st, &flat, &ext(&[2, 3, 1])).take(4).unwrap(),
        Prefix { items: ext(&[1, 2, 3]), ended: true }
    );
    assert_eq!(
        jigsaw_general(&p, &st, &flat, &[Infinity]).take(1).unwrap(),
        Prefix { items: vec![], ended: true }
    );
}

#[test]
fn board_examples() {
    let (p, st) = (sort_piece(), straight());
    let board = board_trace(&p, &st, &ext(&[2, 3, 1]), 3);
    assert_eq!(board.output().cloned().collect::<Vec<_>>(), ext(&[1, 2, 3]));
    assert!(board.is_consistent());

    let empty = board_trace(&p, &st, &[], 2);
    assert_eq!(empty.rows.len(), 2);
    assert!(empty.output().all(|b| *b == Infinity));

    let one = board_trace(&p, &st, &ext(&[5]), 1);
    let piece = &one.rows[0].pieces[0];
    assert_eq!(
        (piece.top, piece.right, piece.left, piece.bottom),
        (Finite(5), Infinity, Finite(5), Infinity)
    );
}

fn ext_strategy() -> impl Strategy<Value = ExtVal> {
    prop_oneof![4 => (0u64..20).prop_map(Finite), 1 => Just(Infinity)]
}

proptest! {
    #[test]
    fn fill_ih_preserves_length(xs in prop::collection::vec(ext_strategy(), 0..12)) {
        let (_, below) = fill_ih(&sort_piece(), &straight(), &xs);
        prop_assert_eq!(below.len(), xs.len());
    }

    #[test]
    fn horizontal_and_vertical_agree(xs in prop::collection::vec(ext_strategy(), 0..10), n in 0usize..16) {
        let (p, st) = (sort_piece(), straight());
        let h = jigsaw_ih(&p, &st, &xs).take(n).unwrap();
        let v = jigsaw_iv(&p, &st, &xs).take(n).unwrap();
        prop_assert_eq!(&h, &v);
        prop_assert_eq!(h.items, sorted_then_infinity(&xs, n));
    }

    #[test]
    fn general_jigsaw_sorts(xs in prop::collection::vec(ext_strategy(), 0..10)) {
        let out = jigsaw_general(&sort_piece(), &straight(), &flat_classifier(), &xs)
            .take(xs.len() + 1)
            .unwrap();
        let mut want: Vec<ExtVal> = xs.iter().copied().filter(|x| x.is_finite()).collect();
        want.sort();
        prop_assert!(out.ended);
        prop_assert_eq!(out.items, want);
    }

    #[test]
    fn boards_are_consistent(xs in prop::collection::vec(ext_strategy(), 0..8), rows in 0usize..10) {
        let board = board_trace(&sort_piece(), &straight(), &xs, rows);
        prop_assert!(board.is_consistent());
        let jig = jigsaw_ih(&sort_piece(), &straight(), &xs).take(rows).unwrap();
        prop_assert_eq!(board.output().cloned().collect::<Vec<_>>(), jig.items);
    }
}
