use crate::algebra::{foldl, foldr, Coalgebra, LeftAlgebra, RightAlgebra, TotalCoalgebra};
use crate::jigsaw::{fill_ih, FlatClassifier, Flatness, Piece, StraightEdge};
use crate::Value;

use super::sample::{pairs, run_cases, singles};
use super::{CheckResult, Condition, Coverage, DomainSampler, Outcome, SamplePlan, StateEq, Violation};

/// The fold index of a list under a right algebra.
pub fn recompute_index<A, S: Clone>(alg: &RightAlgebra<A, S>, input: &[A]) -> S {
    foldr(alg, input)
}

/// The fold index of a list under a left algebra from `init`.
pub fn recompute_left_index<A, S>(alg: &LeftAlgebra<A, S>, init: S, input: &[A]) -> S {
    foldl(alg, init, input)
}

fn violation<S, A, B: PartialEq>(
    condition: Condition,
    state: &S,
    elems: Vec<A>,
    expected: Outcome<B, S>,
    actual: Outcome<B, S>,
    eq: &StateEq<S>,
) -> Option<Violation<S, A, B>>
where
    S: Clone,
{
    if expected.admits(&actual, eq) {
        None
    } else {
        Some(Violation {
            condition,
            state: state.clone(),
            elems,
            expected,
            actual,
        })
    }
}

/// If `coalg` produces `(b, s')` from `s`, then from `s ▷ a` it must produce
/// `(b, s' ▷ a)`.
pub fn streaming_condition_at<A, B, S>(
    alg: &LeftAlgebra<A, S>,
    coalg: &Coalgebra<B, S>,
    eq: &StateEq<S>,
    s: &S,
    a: &A,
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: PartialEq,
    S: Clone,
{
    let (b, after) = coalg.next(s)?;
    let expected = Outcome::Produces {
        elem: b,
        state: alg.step(&after, a),
    };
    let actual = coalg.next(&alg.step(s, a)).into();
    violation(Condition::StreamingCondition, s, vec![a.clone()], expected, actual, eq)
}

pub fn check_streaming_condition<A, B, S>(
    alg: &LeftAlgebra<A, S>,
    coalg: &Coalgebra<B, S>,
    states: &DomainSampler<S>,
    elems: &DomainSampler<A>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: PartialEq,
    S: Value,
{
    run_cases(pairs(states, elems, plan), plan.budget, |(s, a)| {
        streaming_condition_at(alg, coalg, eq, &s, &a)
    })
}

/// If `coalg` produces `(b, s')` from `s`, then from `foldl(s, as)` it must
/// produce `(b, foldl(s', as))`.
pub fn streaming_lemma_at<A, B, S>(
    alg: &LeftAlgebra<A, S>,
    coalg: &Coalgebra<B, S>,
    eq: &StateEq<S>,
    s: &S,
    rest: &[A],
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: PartialEq,
    S: Clone,
{
    let (b, after) = coalg.next(s)?;
    let expected = Outcome::Produces {
        elem: b,
        state: foldl(alg, after, rest),
    };
    let actual = coalg.next(&foldl(alg, s.clone(), rest)).into();
    violation(Condition::StreamingLemma, s, rest.to_vec(), expected, actual, eq)
}

pub fn check_streaming_lemma<A, B, S>(
    alg: &LeftAlgebra<A, S>,
    coalg: &Coalgebra<B, S>,
    states: &DomainSampler<S>,
    lists: &DomainSampler<Vec<A>>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: PartialEq,
    S: Value,
{
    run_cases(pairs(states, lists, plan), plan.budget, |(s, rest)| {
        streaming_lemma_at(alg, coalg, eq, &s, &rest)
    })
}

/// `g∞(e) = (straight, e)`.
pub fn check_straight_production<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g_inf: &TotalCoalgebra<B, S>,
    straight: &StraightEdge<B>,
    eq: &StateEq<S>,
) -> CheckResult<Violation<S, A, B>>
where
    B: Clone + PartialEq,
    S: Clone,
{
    let e = alg.empty();
    let expected = Outcome::Produces {
        elem: straight.0.clone(),
        state: e.clone(),
    };
    let actual = Some(g_inf.next(e)).into();
    one_case(violation(Condition::StraightProduction, e, vec![], expected, actual, eq))
}

fn one_case<W>(found: Option<W>) -> CheckResult<W> {
    match found {
        Some(witness) => CheckResult::Counterexample { witness },
        None => CheckResult::Holds(Coverage {
            samples: 1,
            truncated: false,
        }),
    }
}

/// With `g∞(s) = (b, s')` and `piece(a, b) = (b', a')`:
/// `g∞(a ◁ s) = (b', a' ◁ s')`.
pub fn jigsaw_infinite_at<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g_inf: &TotalCoalgebra<B, S>,
    piece: &Piece<A, B>,
    eq: &StateEq<S>,
    s: &S,
    a: &A,
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: PartialEq,
    S: Clone,
{
    let (b, after) = g_inf.next(s);
    let (left, bottom) = piece.apply(a, &b);
    let expected = Outcome::Produces {
        elem: left,
        state: alg.step(&bottom, &after),
    };
    let actual = Some(g_inf.next(&alg.step(a, s))).into();
    violation(Condition::JigsawInfinite, s, vec![a.clone()], expected, actual, eq)
}

/// Straight-production, then the infinite jigsaw condition on every sampled
/// `(s, a)`.
#[allow(clippy::too_many_arguments)]
pub fn check_jigsaw_infinite<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g_inf: &TotalCoalgebra<B, S>,
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    states: &DomainSampler<S>,
    elems: &DomainSampler<A>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: Clone + PartialEq,
    S: Value,
{
    check_straight_production(alg, g_inf, straight, eq).and_then(|| {
        run_cases(pairs(states, elems, plan), plan.budget, |(s, a)| {
            jigsaw_infinite_at(alg, g_inf, piece, eq, &s, &a)
        })
    })
}

/// `g(e)` is absent.
pub fn check_nothing_from_e<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g: &Coalgebra<B, S>,
    eq: &StateEq<S>,
) -> CheckResult<Violation<S, A, B>>
where
    B: PartialEq,
    S: Clone,
{
    let e = alg.empty();
    let actual = g.next(e).into();
    one_case(violation(Condition::NothingFromE, e, vec![], Outcome::Absent, actual, eq))
}

/// Flat elements keep empty states empty; all other elements make every
/// state non-empty.
pub fn flat_classifier_at<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g: &Coalgebra<B, S>,
    flat: &FlatClassifier<A>,
    eq: &StateEq<S>,
    s: &S,
    a: &A,
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: PartialEq,
    S: Clone,
{
    let actual: Outcome<B, S> = g.next(&alg.step(a, s)).into();
    match flat.classify(a) {
        Flatness::Flat => {
            if g.next(s).is_some() {
                return None;
            }
            violation(Condition::FlatSoundness, s, vec![a.clone()], Outcome::Absent, actual, eq)
        }
        Flatness::NotFlat => violation(
            Condition::NotFlatSoundness,
            s,
            vec![a.clone()],
            Outcome::Present,
            actual,
            eq,
        ),
    }
}

pub fn check_flat_classifier<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g: &Coalgebra<B, S>,
    flat: &FlatClassifier<A>,
    states: &DomainSampler<S>,
    elems: &DomainSampler<A>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: PartialEq,
    S: Value,
{
    run_cases(pairs(states, elems, plan), plan.budget, |(s, a)| {
        flat_classifier_at(alg, g, flat, eq, &s, &a)
    })
}

/// The relaxed jigsaw condition. When `g(s) = (b, s')` it is the infinite
/// condition with `just`; when `s` is empty but `a ◁ s` is not, the piece is
/// placed against the straight edge and `s' = s`. Otherwise there is nothing
/// to check.
pub fn jigsaw_general_at<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g: &Coalgebra<B, S>,
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    eq: &StateEq<S>,
    s: &S,
    a: &A,
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: Clone + PartialEq,
    S: Clone,
{
    let consumed = g.next(&alg.step(a, s));
    let (b, after) = match g.next(s) {
        Some(step) => step,
        None if consumed.is_some() => (straight.0.clone(), s.clone()),
        None => return None,
    };
    let (left, bottom) = piece.apply(a, &b);
    let expected = Outcome::Produces {
        elem: left,
        state: alg.step(&bottom, &after),
    };
    violation(Condition::JigsawGeneral, s, vec![a.clone()], expected, consumed.into(), eq)
}

/// Nothing-from-e, flat-classifier soundness, then the relaxed jigsaw
/// condition.
#[allow(clippy::too_many_arguments)]
pub fn check_jigsaw_general<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g: &Coalgebra<B, S>,
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    flat: &FlatClassifier<A>,
    states: &DomainSampler<S>,
    elems: &DomainSampler<A>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: Clone + PartialEq,
    S: Value,
{
    check_nothing_from_e(alg, g, eq)
        .and_then(|| check_flat_classifier(alg, g, flat, states, elems, eq, plan))
        .and_then(|| {
            run_cases(pairs(states, elems, plan), plan.budget, |(s, a)| {
                jigsaw_general_at(alg, g, piece, straight, eq, &s, &a)
            })
        })
}

/// With `(b, as') = fill_ih(as)`: `g∞(foldr(as)) = (b, foldr(as'))`.
pub fn fill_ih_index_law_at<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g_inf: &TotalCoalgebra<B, S>,
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    eq: &StateEq<S>,
    input: &[A],
) -> Option<Violation<S, A, B>>
where
    A: Clone,
    B: Clone + PartialEq,
    S: Clone,
{
    let (b, below) = fill_ih(piece, straight, input);
    let index = recompute_index(alg, input);
    let expected = Outcome::Produces {
        elem: b,
        state: recompute_index(alg, &below),
    };
    let actual = Some(g_inf.next(&index)).into();
    violation(Condition::FillIhIndexLaw, &index, input.to_vec(), expected, actual, eq)
}

pub fn check_fill_ih_index_law<A, B, S>(
    alg: &RightAlgebra<A, S>,
    g_inf: &TotalCoalgebra<B, S>,
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    lists: &DomainSampler<Vec<A>>,
    eq: &StateEq<S>,
    plan: &SamplePlan,
) -> CheckResult<Violation<S, A, B>>
where
    A: Value,
    B: Clone + PartialEq,
    S: Clone,
{
    run_cases(singles(lists, plan), plan.budget, |input| {
        fill_ih_index_law_at(alg, g_inf, piece, straight, eq, &input)
    })
}
