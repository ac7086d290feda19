use serde::Serialize;

use crate::colist::{Colist, ContractViolation, Prefix};
use crate::Value;

use super::sample::{lists_up_to, run_cases};
use super::CheckResult;

/// What a bounded look at a colist saw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Observed<B> {
    Prefix(Prefix<B>),
    Violation(ContractViolation),
}

impl<B: Value> Observed<B> {
    pub fn of(colist: &Colist<B>, n: usize) -> Self {
        match colist.take(n) {
            Ok(prefix) => Observed::Prefix(prefix),
            Err(violation) => Observed::Violation(violation),
        }
    }
}

/// Whether the first `n` deconstructions of both colists agree, including
/// on where (or whether) they end.
pub fn oracle_prefix_equal<B: Value + PartialEq>(c1: &Colist<B>, c2: &Colist<B>, n: usize) -> bool {
    Observed::of(c1, n) == Observed::of(c2, n)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Disagreement<A, B> {
    pub input: Vec<A>,
    pub candidate: Observed<B>,
    pub reference: Observed<B>,
}

/// Runs `candidate` and `reference` on every list over `elems` of length at
/// most `max_len`, shortest first, comparing `prefix`-long observations.
pub fn exhaustive_equivalence<A, B>(
    elems: &[A],
    max_len: usize,
    prefix: usize,
    budget: usize,
    candidate: impl Fn(&[A]) -> Colist<B>,
    reference: impl Fn(&[A]) -> Colist<B>,
) -> CheckResult<Disagreement<A, B>>
where
    A: Clone,
    B: Value + PartialEq,
{
    run_cases(lists_up_to(elems, max_len).into_iter(), budget, |input| {
        let got = Observed::of(&candidate(&input), prefix);
        let want = Observed::of(&reference(&input), prefix);
        (got != want).then(|| Disagreement {
            input,
            candidate: got,
            reference: want,
        })
    })
}
