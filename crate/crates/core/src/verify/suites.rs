//! Samplers and ready-made checks for the bundled instances.
//!
//! The free functions build sample domains for base conversion and
//! heapsort. [`Scenario`] bundles an instance, a condition and a sample plan
//! into one runnable check whose [`Report`] serializes to JSON.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{Coalgebra, LeftAlgebra};
use crate::instances::heapsort::{
    flat_classifier, pop_min_coalgebra, pop_total_coalgebra, push_algebra, sort_piece, straight,
};
use crate::instances::{BaseConvState, BaseConversion, Digit, ExtVal, Heap, Rational};
use crate::jigsaw::{jigsaw_general, jigsaw_ih, jigsaw_iv};
use crate::streaming::{stream, StreamingSpec};
use crate::{cbp, cbp_right, Colist};

use super::{
    check_fill_ih_index_law, check_jigsaw_general, check_jigsaw_infinite, check_streaming_condition,
    check_streaming_lemma, exhaustive_equivalence, CheckResult, Coverage, DomainSampler, SampleMode,
    SamplePlan, StateEq,
};

/// Values heaps are drawn from in the default heapsort domain.
pub const HEAP_VALUES: [u64; 6] = [0, 1, 2, 3, 4, 5];

/// States reachable from the initial state in at most `max_steps` steps,
/// each step consuming one input digit or eagerly producing one output
/// digit. Breadth-first, so smaller witnesses come first.
///
/// Eager production reaches every state the streaming coalgebra can, since
/// the two agree whenever the streaming one produces.
pub fn reachable_states(conv: &BaseConversion, max_steps: usize) -> Vec<BaseConvState> {
    let init = conv.initial_state();
    let mut seen = HashSet::from([init.clone()]);
    let mut order = vec![init.clone()];
    let mut queue = VecDeque::from([(init, 0usize)]);
    let digits: Vec<Digit> = (0..u64::from(conv.from.get())).map(Digit).collect();
    while let Some((s, depth)) = queue.pop_front() {
        if depth == max_steps {
            continue;
        }
        let produced = conv.produce_eager(&s).map(|(_, next)| next);
        let consumed = digits.iter().map(|d| conv.consume_unchecked(&s, *d));
        for next in consumed.chain(produced) {
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back((next, depth + 1));
            }
        }
    }
    order
}

/// Reachable states, with `bound` as the step budget.
pub fn state_sampler(conv: &BaseConversion) -> DomainSampler<BaseConvState> {
    let conv = *conv;
    DomainSampler::new(move |bound| reachable_states(&conv, bound))
}

/// Triples `(v, w_i, w_o)` with `v ≥ 0` and positive weights, not
/// necessarily reachable. Enumeration uses numerators and denominators up to
/// `bound`; draws go up to 1000.
pub fn arbitrary_state_sampler() -> DomainSampler<BaseConvState> {
    DomainSampler::new(|bound| {
        let bound = bound.max(1) as i64;
        let mut positives = Vec::new();
        for q in 1..=bound {
            for p in 1..=bound {
                let x = Rational::new(p, q);
                if !positives.contains(&x) {
                    positives.push(x);
                }
            }
        }
        let mut values = vec![Rational::zero()];
        values.extend(positives.iter().cloned());
        let mut out = Vec::new();
        for v in &values {
            for w_i in &positives {
                for w_o in &positives {
                    out.push(BaseConvState::new(v.clone(), w_i.clone(), w_o.clone()));
                }
            }
        }
        out
    })
    .with_draw(|rng, _| {
        let pos = |rng: &mut rand_chacha::ChaCha8Rng| {
            Rational::new(rng.gen_range(1..=1000i64), rng.gen_range(1..=1000i64))
        };
        let v = Rational::new(rng.gen_range(0..=1000i64), rng.gen_range(1..=1000i64));
        BaseConvState::new(v, pos(rng), pos(rng))
    })
}

/// Every digit of the input base.
pub fn digit_sampler(conv: &BaseConversion) -> DomainSampler<Digit> {
    DomainSampler::fixed((0..u64::from(conv.from.get())).map(Digit).collect())
}

/// Every heap of at most `bound` elements over `values`, smallest first.
pub fn heap_sampler(values: &[u64]) -> DomainSampler<Heap> {
    let values = values.to_vec();
    let drawn = values.clone();
    DomainSampler::new(move |bound| {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
        out.push(Heap::empty());
        for _ in 0..bound {
            let mut next = Vec::new();
            for ms in &layer {
                let floor = ms.last().copied();
                for &v in &values {
                    if floor.is_some_and(|f| v < f) {
                        continue;
                    }
                    let mut grown = ms.clone();
                    grown.push(v);
                    next.push(grown);
                }
            }
            out.extend(next.iter().map(|ms| ms.iter().map(|&v| ExtVal::Finite(v)).collect()));
            layer = next;
        }
        out
    })
    .with_draw(move |rng, bound| {
        let len = rng.gen_range(0..=bound);
        (0..len)
            .map(|_| ExtVal::Finite(drawn[rng.gen_range(0..drawn.len())]))
            .collect()
    })
}

pub fn value_sampler(values: &[u64], with_infinity: bool) -> DomainSampler<ExtVal> {
    let mut all: Vec<ExtVal> = values.iter().map(|&v| ExtVal::Finite(v)).collect();
    if with_infinity {
        all.push(ExtVal::Infinity);
    }
    DomainSampler::fixed(all)
}

pub fn heap_eq() -> StateEq<Heap> {
    StateEq::by_key(Heap::canonical)
}

/// Heap insertion as a left algebra, for asking whether heapsort streams.
pub fn push_left_algebra() -> LeftAlgebra<ExtVal, Heap> {
    LeftAlgebra::new(|h: &Heap, a: &ExtVal| h.push(*a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceChoice {
    BaseConversion(BaseConversion),
    Heapsort,
}

impl fmt::Display for InstanceChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceChoice::BaseConversion(c) => {
                write!(f, "baseconv {}->{}", c.from.get(), c.to.get())
            }
            InstanceChoice::Heapsort => f.write_str("heapsort"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionChoice {
    Streaming,
    StreamingLemma,
    JigsawInfinite,
    JigsawGeneral,
    FillIhIndexLaw,
    Equivalence,
}

impl fmt::Display for ConditionChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ConditionChoice::Streaming => "streaming",
            ConditionChoice::StreamingLemma => "streaming-lemma",
            ConditionChoice::JigsawInfinite => "jigsaw-infinite",
            ConditionChoice::JigsawGeneral => "jigsaw-general",
            ConditionChoice::FillIhIndexLaw => "fill-ih-index-law",
            ConditionChoice::Equivalence => "equivalence",
        };
        f.write_str(name)
    }
}

/// Which base-conversion coalgebra a streaming check uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoalgebraChoice {
    Eager,
    #[default]
    Streaming,
}

/// Where base-conversion states come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateDomain {
    #[default]
    Reachable,
    Arbitrary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub instance: InstanceChoice,
    pub condition: ConditionChoice,
    pub coalgebra: CoalgebraChoice,
    pub states: StateDomain,
    pub plan: SamplePlan,
    /// Prefix length compared by equivalence checks.
    pub prefix: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    #[error("condition {condition} does not apply to {instance}")]
    Unsupported {
        instance: String,
        condition: ConditionChoice,
    },
}

/// One named sub-check within a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(flatten)]
    pub result: CheckResult<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub instance: String,
    pub condition: ConditionChoice,
    pub plan: SamplePlan,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.result.holds())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.plan.mode {
            SampleMode::Exhaustive { bound } => format!("exhaustive, bound {bound}"),
            SampleMode::Random { bound, seed, draws } => {
                format!("random, bound {bound}, seed {seed}, {draws} draws")
            }
        };
        writeln!(f, "{} / {} ({mode})", self.instance, self.condition)?;
        for c in &self.checks {
            match &c.result {
                CheckResult::Holds(Coverage { samples, truncated }) => {
                    let note = if *truncated { ", truncated by budget" } else { "" };
                    writeln!(f, "  {}: holds ({samples} cases{note})", c.check)?;
                }
                CheckResult::Counterexample { witness } => {
                    writeln!(f, "  {}: counterexample", c.check)?;
                    writeln!(f, "    {witness}")?;
                }
            }
        }
        Ok(())
    }
}

fn to_json<W: Serialize>(result: CheckResult<W>) -> CheckResult<serde_json::Value> {
    result.map(|w| serde_json::to_value(w).expect("witnesses serialize"))
}

fn entry<W: Serialize>(check: &str, result: CheckResult<W>) -> CheckReport {
    CheckReport {
        check: check.to_string(),
        result: to_json(result),
    }
}

impl Scenario {
    pub fn new(instance: InstanceChoice, condition: ConditionChoice, plan: SamplePlan) -> Self {
        Scenario {
            instance,
            condition,
            coalgebra: CoalgebraChoice::default(),
            states: StateDomain::default(),
            plan,
            prefix: 8,
        }
    }

    pub fn run(&self) -> Result<Report, ScenarioError> {
        let checks = match self.instance {
            InstanceChoice::BaseConversion(conv) => self.run_base_conversion(&conv)?,
            InstanceChoice::Heapsort => self.run_heapsort(),
        };
        Ok(Report {
            instance: self.instance.to_string(),
            condition: self.condition,
            plan: self.plan,
            checks,
        })
    }

    fn unsupported(&self) -> ScenarioError {
        ScenarioError::Unsupported {
            instance: self.instance.to_string(),
            condition: self.condition,
        }
    }

    fn run_base_conversion(&self, conv: &BaseConversion) -> Result<Vec<CheckReport>, ScenarioError> {
        let alg = conv.left_algebra();
        let coalg: Coalgebra<Digit, BaseConvState> = match self.coalgebra {
            CoalgebraChoice::Eager => conv.eager_coalgebra(),
            CoalgebraChoice::Streaming => conv.streaming_coalgebra(),
        };
        let states = match self.states {
            StateDomain::Reachable => state_sampler(conv),
            StateDomain::Arbitrary => arbitrary_state_sampler(),
        };
        let digits = digit_sampler(conv);
        let eq = StateEq::structural();
        let plan = &self.plan;
        let checks = match self.condition {
            ConditionChoice::Streaming => vec![entry(
                "streaming-condition",
                check_streaming_condition(&alg, &coalg, &states, &digits, &eq, plan),
            )],
            ConditionChoice::StreamingLemma => vec![entry(
                "streaming-lemma",
                check_streaming_lemma(&alg, &coalg, &states, &digits.lists(), &eq, plan),
            )],
            ConditionChoice::Equivalence => {
                let init = conv.initial_state();
                let all: Vec<Digit> = digits.enumerate(0);
                let max_len = plan.bound();
                let spec = StreamingSpec::new(alg.clone(), coalg.clone());
                let flushed = spec.clone().with_flusher(conv.eager_coalgebra());
                let eager = conv.eager_coalgebra();
                vec![
                    entry(
                        "stream-vs-cbp",
                        exhaustive_equivalence(
                            &all,
                            max_len,
                            self.prefix,
                            plan.budget,
                            |ds| stream(&spec, init.clone(), ds),
                            |ds| cbp(&alg, &coalg, init.clone(), ds),
                        ),
                    ),
                    entry(
                        "stream-flush-vs-cbp-eager",
                        exhaustive_equivalence(
                            &all,
                            max_len,
                            self.prefix,
                            plan.budget,
                            |ds| stream(&flushed, init.clone(), ds),
                            |ds| cbp(&alg, &eager, init.clone(), ds),
                        ),
                    ),
                ]
            }
            ConditionChoice::JigsawInfinite
            | ConditionChoice::JigsawGeneral
            | ConditionChoice::FillIhIndexLaw => return Err(self.unsupported()),
        };
        Ok(checks)
    }

    fn run_heapsort(&self) -> Vec<CheckReport> {
        let heaps = heap_sampler(&HEAP_VALUES);
        let finite = value_sampler(&HEAP_VALUES, false);
        let extended = value_sampler(&HEAP_VALUES, true);
        let eq = heap_eq();
        let plan = &self.plan;
        let push = push_algebra();
        match self.condition {
            ConditionChoice::Streaming => vec![entry(
                "streaming-condition",
                check_streaming_condition(
                    &push_left_algebra(),
                    &pop_min_coalgebra(),
                    &heaps,
                    &extended,
                    &eq,
                    plan,
                ),
            )],
            ConditionChoice::StreamingLemma => vec![entry(
                "streaming-lemma",
                check_streaming_lemma(
                    &push_left_algebra(),
                    &pop_min_coalgebra(),
                    &heaps,
                    &extended.lists(),
                    &eq,
                    plan,
                ),
            )],
            ConditionChoice::JigsawInfinite => vec![entry(
                "jigsaw-infinite",
                check_jigsaw_infinite(
                    &push,
                    &pop_total_coalgebra(),
                    &sort_piece(),
                    &straight(),
                    &heaps,
                    &extended,
                    &eq,
                    plan,
                ),
            )],
            ConditionChoice::JigsawGeneral => vec![entry(
                "jigsaw-general",
                check_jigsaw_general(
                    &push,
                    &pop_min_coalgebra(),
                    &sort_piece(),
                    &straight(),
                    &flat_classifier(),
                    &heaps,
                    &extended,
                    &eq,
                    plan,
                ),
            )],
            ConditionChoice::FillIhIndexLaw => vec![entry(
                "fill-ih-index-law",
                check_fill_ih_index_law(
                    &push,
                    &pop_total_coalgebra(),
                    &sort_piece(),
                    &straight(),
                    &extended.lists(),
                    &eq,
                    plan,
                ),
            )],
            ConditionChoice::Equivalence => {
                let max_len = plan.bound();
                let finite_vals = finite.enumerate(0);
                let all_vals = extended.enumerate(0);
                let total = pop_total_coalgebra().to_partial();
                let partial = pop_min_coalgebra();
                let piece = sort_piece();
                let edge = straight();
                let flat = flat_classifier();
                let infinite_ref = |xs: &[ExtVal]| cbp_right(&push, &total, xs);
                vec![
                    entry(
                        "jigsaw-ih-vs-cbp-right",
                        exhaustive_equivalence(
                            &finite_vals,
                            max_len,
                            self.prefix,
                            plan.budget,
                            |xs| jigsaw_ih(&piece, &edge, xs),
                            infinite_ref,
                        ),
                    ),
                    entry(
                        "jigsaw-iv-vs-cbp-right",
                        exhaustive_equivalence(
                            &finite_vals,
                            max_len,
                            self.prefix,
                            plan.budget,
                            |xs| jigsaw_iv(&piece, &edge, xs),
                            infinite_ref,
                        ),
                    ),
                    entry(
                        "jigsaw-general-vs-cbp-right",
                        exhaustive_equivalence(
                            &all_vals,
                            max_len,
                            self.prefix,
                            plan.budget,
                            |xs| jigsaw_general(&piece, &edge, &flat, xs),
                            |xs| -> Colist<ExtVal> { cbp_right(&push, &partial, xs) },
                        ),
                    ),
                ]
            }
        }
    }
}
