//! Dynamic checking of the side conditions each evaluation strategy relies
//! on, and of the strategies themselves against the definitional evaluator.
//!
//! Conditions are checked over finite samples of states and elements, drawn
//! either exhaustively up to a bound or pseudo-randomly from a seed (see
//! [`SamplePlan`]). A failing check returns the first [`Violation`] in
//! enumeration order; replaying it through the matching `*_at` function fails
//! again. A passing check only covers the sampled cases, which [`Coverage`]
//! reports.

mod conditions;
mod equivalence;
mod sample;
pub mod suites;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use conditions::{
    check_fill_ih_index_law, check_flat_classifier, check_jigsaw_general, check_jigsaw_infinite,
    check_nothing_from_e, check_straight_production, check_streaming_condition,
    check_streaming_lemma, fill_ih_index_law_at, flat_classifier_at, jigsaw_general_at,
    jigsaw_infinite_at, recompute_index, recompute_left_index, streaming_condition_at,
    streaming_lemma_at,
};
pub use equivalence::{exhaustive_equivalence, oracle_prefix_equal, Disagreement, Observed};
pub use sample::{lists_up_to, DomainSampler, SampleMode, SamplePlan, DEFAULT_BUDGET};

/// How much of the domain a passing check actually looked at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub samples: usize,
    /// The budget ran out before the sample domain was exhausted.
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum CheckResult<W> {
    Holds(Coverage),
    Counterexample { witness: W },
}

impl<W> CheckResult<W> {
    pub fn holds(&self) -> bool {
        matches!(self, CheckResult::Holds(_))
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            CheckResult::Holds(_) => None,
            CheckResult::Counterexample { witness } => Some(witness),
        }
    }

    pub fn coverage(&self) -> Option<Coverage> {
        match self {
            CheckResult::Holds(c) => Some(*c),
            CheckResult::Counterexample { .. } => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> CheckResult<V> {
        match self {
            CheckResult::Holds(c) => CheckResult::Holds(c),
            CheckResult::Counterexample { witness } => CheckResult::Counterexample {
                witness: f(witness),
            },
        }
    }

    /// Runs `next` only if `self` holds, adding up the coverage.
    pub fn and_then(self, next: impl FnOnce() -> CheckResult<W>) -> CheckResult<W> {
        match self {
            CheckResult::Counterexample { .. } => self,
            CheckResult::Holds(first) => match next() {
                CheckResult::Holds(second) => CheckResult::Holds(Coverage {
                    samples: first.samples + second.samples,
                    truncated: first.truncated || second.truncated,
                }),
                ce => ce,
            },
        }
    }
}

/// The side conditions known to the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    StreamingCondition,
    StreamingLemma,
    StraightProduction,
    JigsawInfinite,
    NothingFromE,
    FlatSoundness,
    NotFlatSoundness,
    JigsawGeneral,
    FillIhIndexLaw,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::StreamingCondition => "streaming-condition",
            Condition::StreamingLemma => "streaming-lemma",
            Condition::StraightProduction => "straight-production",
            Condition::JigsawInfinite => "jigsaw-infinite",
            Condition::NothingFromE => "nothing-from-e",
            Condition::FlatSoundness => "flat-soundness",
            Condition::NotFlatSoundness => "not-flat-soundness",
            Condition::JigsawGeneral => "jigsaw-general",
            Condition::FillIhIndexLaw => "fill-ih-index-law",
        };
        f.write_str(name)
    }
}

/// What a coalgebra step was required to, or did, return.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome<B, S> {
    Absent,
    /// Some output, whatever it is.
    Present,
    Produces { elem: B, state: S },
}

impl<B, S> From<Option<(B, S)>> for Outcome<B, S> {
    fn from(step: Option<(B, S)>) -> Self {
        match step {
            None => Outcome::Absent,
            Some((elem, state)) => Outcome::Produces { elem, state },
        }
    }
}

impl<B: PartialEq, S> Outcome<B, S> {
    /// Whether `actual` satisfies `self`, comparing states with `eq`.
    pub fn admits(&self, actual: &Outcome<B, S>, eq: &StateEq<S>) -> bool {
        match (self, actual) {
            (Outcome::Absent, Outcome::Absent) => true,
            (Outcome::Present, Outcome::Produces { .. }) => true,
            (
                Outcome::Produces { elem, state },
                Outcome::Produces {
                    elem: elem2,
                    state: state2,
                },
            ) => elem == elem2 && eq.eq(state, state2),
            _ => false,
        }
    }
}

/// A failed instance of a side condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation<S, A, B> {
    pub condition: Condition,
    /// The state the condition was instantiated at.
    pub state: S,
    /// The element(s) consumed: one for single-step conditions, a list for
    /// the streaming lemma and the index law, none for conditions about the
    /// empty state alone.
    pub elems: Vec<A>,
    pub expected: Outcome<B, S>,
    pub actual: Outcome<B, S>,
}

/// The intended notion of state equality, as a runtime predicate.
pub struct StateEq<S> {
    eq: Arc<dyn Fn(&S, &S) -> bool + Send + Sync>,
}

impl<S> Clone for StateEq<S> {
    fn clone(&self) -> Self {
        StateEq {
            eq: Arc::clone(&self.eq),
        }
    }
}

impl<S> fmt::Debug for StateEq<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("StateEq(..)")
    }
}

impl<S> StateEq<S> {
    pub fn structural() -> Self
    where
        S: PartialEq,
    {
        StateEq {
            eq: Arc::new(|a: &S, b: &S| a == b),
        }
    }

    /// States are equal when their canonical keys are.
    pub fn by_key<K: PartialEq>(key: impl Fn(&S) -> K + Send + Sync + 'static) -> Self {
        StateEq {
            eq: Arc::new(move |a: &S, b: &S| key(a) == key(b)),
        }
    }

    pub fn eq(&self, a: &S, b: &S) -> bool {
        (self.eq)(a, b)
    }
}
