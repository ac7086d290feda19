use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{CheckResult, Coverage};

/// Hard cap on the number of cases a single check evaluates.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SampleMode {
    /// Every combination of samples enumerated up to `bound`.
    Exhaustive { bound: usize },
    /// `draws` pseudo-random cases, reproducible from `seed`.
    Random { bound: usize, seed: u64, draws: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplePlan {
    pub mode: SampleMode,
    pub budget: usize,
}

impl SamplePlan {
    pub fn exhaustive(bound: usize) -> Self {
        SamplePlan {
            mode: SampleMode::Exhaustive { bound },
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn random(bound: usize, seed: u64, draws: usize) -> Self {
        SamplePlan {
            mode: SampleMode::Random { bound, seed, draws },
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn bound(&self) -> usize {
        match self.mode {
            SampleMode::Exhaustive { bound } | SampleMode::Random { bound, .. } => bound,
        }
    }
}

type Enumerate<X> = Arc<dyn Fn(usize) -> Vec<X> + Send + Sync>;
type Draw<X> = Arc<dyn Fn(&mut ChaCha8Rng, usize) -> X + Send + Sync>;

/// A finite domain of test values, enumerable up to a size bound and
/// optionally drawable at random.
pub struct DomainSampler<X> {
    enumerate: Enumerate<X>,
    draw: Option<Draw<X>>,
}

impl<X> Clone for DomainSampler<X> {
    fn clone(&self) -> Self {
        DomainSampler {
            enumerate: Arc::clone(&self.enumerate),
            draw: self.draw.clone(),
        }
    }
}

impl<X> fmt::Debug for DomainSampler<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DomainSampler")
            .field("drawable", &self.draw.is_some())
            .finish()
    }
}

impl<X: Clone + Send + Sync + 'static> DomainSampler<X> {
    /// `enumerate(bound)` must be deterministic and, ideally, smallest first.
    pub fn new(enumerate: impl Fn(usize) -> Vec<X> + Send + Sync + 'static) -> Self {
        DomainSampler {
            enumerate: Arc::new(enumerate),
            draw: None,
        }
    }

    /// The same values whatever the bound.
    pub fn fixed(values: Vec<X>) -> Self {
        DomainSampler::new(move |_| values.clone())
    }

    pub fn with_draw(mut self, draw: impl Fn(&mut ChaCha8Rng, usize) -> X + Send + Sync + 'static) -> Self {
        self.draw = Some(Arc::new(draw));
        self
    }

    pub fn enumerate(&self, bound: usize) -> Vec<X> {
        (self.enumerate)(bound)
    }

    /// All lists of at most `bound` elements from this domain, shortest
    /// first.
    pub fn lists(&self) -> DomainSampler<Vec<X>> {
        let elems = self.clone();
        let drawer = self.clone();
        DomainSampler::new(move |bound| lists_up_to(&elems.enumerate(bound), bound)).with_draw(
            move |rng, bound| {
                let len = rng.gen_range(0..=bound);
                let mut pool = None;
                (0..len).map(|_| drawer.draw_cached(rng, bound, &mut pool)).collect()
            },
        )
    }

    fn draw_cached(&self, rng: &mut ChaCha8Rng, bound: usize, pool: &mut Option<Vec<X>>) -> X {
        match &self.draw {
            Some(draw) => draw(rng, bound),
            None => {
                let pool = pool.get_or_insert_with(|| self.enumerate(bound));
                assert!(!pool.is_empty(), "cannot draw from an empty domain");
                pool[rng.gen_range(0..pool.len())].clone()
            }
        }
    }
}

/// All lists over `elems` of length at most `max_len`, ordered by length and
/// then lexicographically by position in `elems`.
pub fn lists_up_to<X: Clone>(elems: &[X], max_len: usize) -> Vec<Vec<X>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<X>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * elems.len());
        for prefix in &layer {
            for e in elems {
                let mut l = prefix.clone();
                l.push(e.clone());
                next.push(l);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
        if elems.is_empty() {
            break;
        }
    }
    out
}

/// The `(state, element)` cases a plan prescribes, state-major when
/// exhaustive.
pub(crate) fn pairs<S, A>(
    states: &DomainSampler<S>,
    elems: &DomainSampler<A>,
    plan: &SamplePlan,
) -> Box<dyn Iterator<Item = (S, A)>>
where
    S: Clone + Send + Sync + 'static,
    A: Clone + Send + Sync + 'static,
{
    match plan.mode {
        SampleMode::Exhaustive { bound } => {
            let ss = states.enumerate(bound);
            let es = elems.enumerate(bound);
            Box::new(
                ss.into_iter()
                    .flat_map(move |s| es.clone().into_iter().map(move |a| (s.clone(), a))),
            )
        }
        SampleMode::Random { bound, seed, draws } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let states = states.clone();
            let elems = elems.clone();
            let mut spool = None;
            let mut epool = None;
            Box::new((0..draws).map(move |_| {
                let s = states.draw_cached(&mut rng, bound, &mut spool);
                let a = elems.draw_cached(&mut rng, bound, &mut epool);
                (s, a)
            }))
        }
    }
}

/// The single-domain analogue of [`pairs`].
pub(crate) fn singles<X>(domain: &DomainSampler<X>, plan: &SamplePlan) -> Box<dyn Iterator<Item = X>>
where
    X: Clone + Send + Sync + 'static,
{
    match plan.mode {
        SampleMode::Exhaustive { bound } => Box::new(domain.enumerate(bound).into_iter()),
        SampleMode::Random { bound, seed, draws } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let domain = domain.clone();
            let mut pool = None;
            Box::new((0..draws).map(move |_| domain.draw_cached(&mut rng, bound, &mut pool)))
        }
    }
}

/// Evaluates cases in order until one fails or the budget runs out.
pub(crate) fn run_cases<C, W>(
    cases: impl Iterator<Item = C>,
    budget: usize,
    mut check: impl FnMut(C) -> Option<W>,
) -> CheckResult<W> {
    let mut cases = cases.peekable();
    let mut samples = 0;
    while cases.peek().is_some() {
        if samples == budget {
            return CheckResult::Holds(Coverage {
                samples,
                truncated: true,
            });
        }
        let case = cases.next().expect("peeked");
        samples += 1;
        if let Some(witness) = check(case) {
            return CheckResult::Counterexample { witness };
        }
    }
    CheckResult::Holds(Coverage {
        samples,
        truncated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_smallest_first() {
        let ls = lists_up_to(&[0, 1], 2);
        assert_eq!(
            ls,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1]
            ]
        );
        assert_eq!(lists_up_to(&[0u8; 0], 3), vec![Vec::<u8>::new()]);
        assert_eq!(lists_up_to(&(0..10).collect::<Vec<_>>(), 3).len(), 1111);
    }

    #[test]
    fn random_pairs_are_reproducible() {
        let states = DomainSampler::new(|b| (0..b as u32).collect());
        let elems = DomainSampler::fixed(vec!['a', 'b', 'c']);
        let plan = SamplePlan::random(50, 7, 20);
        let first: Vec<_> = pairs(&states, &elems, &plan).collect();
        let second: Vec<_> = pairs(&states, &elems, &plan).collect();
        assert_eq!(first, second);
        assert_eq!(first.len(), 20);
        let other: Vec<_> = pairs(&states, &elems, &SamplePlan::random(50, 8, 20)).collect();
        assert_ne!(first, other);
    }

    #[test]
    fn budget_truncates() {
        let r: CheckResult<()> = run_cases(0..10, 4, |_| None);
        assert_eq!(
            r,
            CheckResult::Holds(Coverage {
                samples: 4,
                truncated: true
            })
        );
        let r: CheckResult<()> = run_cases(0..4, 4, |_| None);
        assert_eq!(
            r,
            CheckResult::Holds(Coverage {
                samples: 4,
                truncated: false
            })
        );
        let r = run_cases(0..10, 100, |i| (i == 3).then_some(i));
        assert_eq!(r.counterexample(), Some(&3));
    }
}
