//! Demand-driven, possibly infinite sequences.
//!
//! A [`Colist`] is defined by what happens when it is deconstructed: it is
//! either [`Step::End`] or [`Step::Cons`] of a head and another colist.
//! Nodes are suspended until first deconstructed and the result is memoized,
//! so walking a shared colist twice never re-runs the computation that
//! produced it.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::Value;

/// A deconstruction reached a node whose producer broke its contract.
///
/// The only producer that can fail is the vertical jigsaw column filler, which
/// requires an infinite column on its right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, thiserror::Error)]
#[serde(rename_all = "kebab-case")]
pub enum ContractViolation {
    #[error("ended column in infinite jigsaw")]
    EndedColumn,
}

/// One deconstruction of a colist.
#[derive(Clone)]
pub enum Step<B> {
    End,
    Cons(B, Colist<B>),
}

impl<B: fmt::Debug> fmt::Debug for Step<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::End => f.write_str("End"),
            Step::Cons(b, _) => f.debug_tuple("Cons").field(b).field(&"..").finish(),
        }
    }
}

type Decon<B> = Result<Step<B>, ContractViolation>;
type Thunk<B> = Box<dyn FnOnce() -> Decon<B> + Send>;

enum Node<B> {
    Suspended {
        forced: OnceLock<Decon<B>>,
        thunk: Mutex<Option<Thunk<B>>>,
    },
    /// `b :: self`, without allocating a fresh node per deconstruction.
    Repeat(B),
}

/// A lazily evaluated, memoized, possibly infinite list.
///
/// Cloning is cheap and shares the underlying nodes. Colists are immutable
/// and may be sent between threads; concurrent first deconstructions of the
/// same node run its producer exactly once.
pub struct Colist<B>(Arc<Node<B>>);

impl<B> Clone for Colist<B> {
    fn clone(&self) -> Self {
        Colist(Arc::clone(&self.0))
    }
}

impl<B> fmt::Debug for Colist<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Colist(..)")
    }
}

impl<B: Value> Colist<B> {
    fn forced(step: Decon<B>) -> Self {
        Colist(Arc::new(Node::Suspended {
            forced: OnceLock::from(step),
            thunk: Mutex::new(None),
        }))
    }

    /// The empty colist.
    pub fn end() -> Self {
        Self::forced(Ok(Step::End))
    }

    pub fn cons(head: B, tail: Colist<B>) -> Self {
        Self::forced(Ok(Step::Cons(head, tail)))
    }

    /// The infinite colist `b :: b :: ...`, represented by a single
    /// self-referential node.
    pub fn repeat(b: B) -> Self {
        Colist(Arc::new(Node::Repeat(b)))
    }

    /// A colist whose deconstruction always reports `violation`.
    pub fn broken(violation: ContractViolation) -> Self {
        Self::forced(Err(violation))
    }

    /// Suspends `producer` until the colist is first deconstructed.
    pub fn defer<F>(producer: F) -> Self
    where
        F: FnOnce() -> Step<B> + Send + 'static,
    {
        Self::defer_fallible(move || Ok(producer()))
    }

    /// Like [`Colist::defer`], for producers that can detect a broken
    /// contract.
    pub fn defer_fallible<F>(producer: F) -> Self
    where
        F: FnOnce() -> Result<Step<B>, ContractViolation> + Send + 'static,
    {
        Colist(Arc::new(Node::Suspended {
            forced: OnceLock::new(),
            thunk: Mutex::new(Some(Box::new(producer))),
        }))
    }

    /// Deconstructs one node. Repeated calls on the same node return equal
    /// results without re-running its producer.
    pub fn decon(&self) -> Result<Step<B>, ContractViolation> {
        match &*self.0 {
            Node::Repeat(b) => Ok(Step::Cons(b.clone(), self.clone())),
            Node::Suspended { forced, thunk } => forced
                .get_or_init(|| {
                    let producer = thunk
                        .lock()
                        .unwrap_or_else(|poisoned| poisoned.into_inner())
                        .take()
                        .expect("suspended colist node forced twice");
                    producer()
                })
                .clone(),
        }
    }

    /// The first `n` elements, and whether the colist ended within `n`
    /// deconstructions.
    pub fn take(&self, n: usize) -> Result<Prefix<B>, ContractViolation> {
        let mut items = Vec::with_capacity(n.min(1024));
        let mut cursor = self.clone();
        while items.len() < n {
            match cursor.decon()? {
                Step::End => return Ok(Prefix { items, ended: true }),
                Step::Cons(b, rest) => {
                    items.push(b);
                    cursor = rest;
                }
            }
        }
        // `n` elements were requested; the colist may still end right here.
        // Looking one node further would force a producer the caller did
        // not ask for, so `ended` stays false.
        Ok(Prefix {
            items,
            ended: false,
        })
    }

    /// Iterates over the elements, stopping after the first contract
    /// violation.
    pub fn iter(&self) -> Iter<B> {
        Iter {
            cursor: Some(self.clone()),
        }
    }
}

impl<B: Value> FromIterator<B> for Colist<B> {
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let items: Vec<B> = iter.into_iter().collect();
        items
            .into_iter()
            .rev()
            .fold(Colist::end(), |tail, b| Colist::cons(b, tail))
    }
}

impl<B: Value> From<Vec<B>> for Colist<B> {
    fn from(items: Vec<B>) -> Self {
        items.into_iter().collect()
    }
}

pub struct Iter<B> {
    cursor: Option<Colist<B>>,
}

impl<B: Value> Iterator for Iter<B> {
    type Item = Result<B, ContractViolation>;

    fn next(&mut self) -> Option<Self::Item> {
        let cursor = self.cursor.take()?;
        match cursor.decon() {
            Ok(Step::End) => None,
            Ok(Step::Cons(b, rest)) => {
                self.cursor = Some(rest);
                Some(Ok(b))
            }
            Err(violation) => Some(Err(violation)),
        }
    }
}

/// A finite observation of a colist, as returned by [`Colist::take`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Prefix<B> {
    pub items: Vec<B>,
    /// `End` was reached within the requested number of deconstructions.
    pub ended: bool,
}

impl<B> Prefix<B> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}
