//! Algebras, coalgebras, folds and unfolds over lists.

use std::fmt;
use std::sync::Arc;

use crate::colist::{Colist, Step};
use crate::Value;

/// `(◁, e)`: subsumes list elements into a state from the right.
pub struct RightAlgebra<A, S> {
    step: Arc<dyn Fn(&A, &S) -> S + Send + Sync>,
    empty: S,
}

impl<A, S: Clone> Clone for RightAlgebra<A, S> {
    fn clone(&self) -> Self {
        RightAlgebra {
            step: Arc::clone(&self.step),
            empty: self.empty.clone(),
        }
    }
}

impl<A, S> RightAlgebra<A, S> {
    pub fn new(empty: S, step: impl Fn(&A, &S) -> S + Send + Sync + 'static) -> Self {
        RightAlgebra {
            step: Arc::new(step),
            empty,
        }
    }

    pub fn step(&self, a: &A, s: &S) -> S {
        (self.step)(a, s)
    }

    pub fn empty(&self) -> &S {
        &self.empty
    }
}

/// `▷`: subsumes list elements into a state from the left.
pub struct LeftAlgebra<A, S> {
    step: Arc<dyn Fn(&S, &A) -> S + Send + Sync>,
}

impl<A, S> Clone for LeftAlgebra<A, S> {
    fn clone(&self) -> Self {
        LeftAlgebra {
            step: Arc::clone(&self.step),
        }
    }
}

impl<A, S> LeftAlgebra<A, S> {
    pub fn new(step: impl Fn(&S, &A) -> S + Send + Sync + 'static) -> Self {
        LeftAlgebra {
            step: Arc::new(step),
        }
    }

    pub fn step(&self, s: &S, a: &A) -> S {
        (self.step)(s, a)
    }
}

/// `g : S → Maybe (B × S)`.
pub struct Coalgebra<B, S> {
    next: Arc<dyn Fn(&S) -> Option<(B, S)> + Send + Sync>,
}

impl<B, S> Clone for Coalgebra<B, S> {
    fn clone(&self) -> Self {
        Coalgebra {
            next: Arc::clone(&self.next),
        }
    }
}

impl<B, S> Coalgebra<B, S> {
    pub fn new(next: impl Fn(&S) -> Option<(B, S)> + Send + Sync + 'static) -> Self {
        Coalgebra {
            next: Arc::new(next),
        }
    }

    /// The coalgebra that never produces.
    pub fn silent() -> Self
    where
        B: 'static,
        S: 'static,
    {
        Coalgebra::new(|_| None)
    }

    pub fn next(&self, s: &S) -> Option<(B, S)> {
        (self.next)(s)
    }
}

/// `g∞ : S → B × S`, a coalgebra that always produces.
pub struct TotalCoalgebra<B, S> {
    next: Arc<dyn Fn(&S) -> (B, S) + Send + Sync>,
}

impl<B, S> Clone for TotalCoalgebra<B, S> {
    fn clone(&self) -> Self {
        TotalCoalgebra {
            next: Arc::clone(&self.next),
        }
    }
}

impl<B, S> TotalCoalgebra<B, S> {
    pub fn new(next: impl Fn(&S) -> (B, S) + Send + Sync + 'static) -> Self {
        TotalCoalgebra {
            next: Arc::new(next),
        }
    }

    pub fn next(&self, s: &S) -> (B, S) {
        (self.next)(s)
    }

    /// `just ∘ g∞`.
    pub fn to_partial(&self) -> Coalgebra<B, S>
    where
        B: 'static,
        S: 'static,
    {
        let total = self.clone();
        Coalgebra::new(move |s| Some(total.next(s)))
    }
}

impl<A, S> fmt::Debug for RightAlgebra<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RightAlgebra(..)")
    }
}

impl<A, S> fmt::Debug for LeftAlgebra<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LeftAlgebra(..)")
    }
}

impl<B, S> fmt::Debug for Coalgebra<B, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Coalgebra(..)")
    }
}

impl<B, S> fmt::Debug for TotalCoalgebra<B, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TotalCoalgebra(..)")
    }
}

/// A state transformer, the carrier of [`from_left_alg`].
pub type StateFn<S> = Arc<dyn Fn(S) -> S + Send + Sync>;

pub fn foldr<A, S: Clone>(alg: &RightAlgebra<A, S>, input: &[A]) -> S {
    input
        .iter()
        .rev()
        .fold(alg.empty().clone(), |s, a| alg.step(a, &s))
}

pub fn foldl<A, S>(alg: &LeftAlgebra<A, S>, init: S, input: &[A]) -> S {
    input.iter().fold(init, |s, a| alg.step(&s, a))
}

/// Turns a left algebra into a right algebra on state transformers, so that
/// `foldr(&from_left_alg(alg), xs)(init) == foldl(alg, init, xs)`.
///
/// Consuming `a` into the transformer `t` yields `x ↦ t(x ▷ a)`; the empty
/// state is the identity.
pub fn from_left_alg<A, S>(alg: &LeftAlgebra<A, S>) -> RightAlgebra<A, StateFn<S>>
where
    A: Value,
    S: 'static,
{
    let alg = alg.clone();
    let identity: StateFn<S> = Arc::new(|s| s);
    RightAlgebra::new(identity, move |a: &A, t: &StateFn<S>| {
        let alg = alg.clone();
        let a = a.clone();
        let t = Arc::clone(t);
        Arc::new(move |s: S| t(alg.step(&s, &a))) as StateFn<S>
    })
}

/// Unfolds a colist from `seed`, one coalgebra step per deconstruction.
pub fn unfoldr<B: Value, S: Value>(coalg: &Coalgebra<B, S>, seed: S) -> Colist<B> {
    let coalg = coalg.clone();
    Colist::defer(move || match coalg.next(&seed) {
        None => Step::End,
        Some((b, next)) => Step::Cons(b, unfoldr(&coalg, next)),
    })
}
