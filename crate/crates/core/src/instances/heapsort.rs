//! Heapsort as a right metamorphism, and its jigsaw piece.
//!
//! Values are naturals extended with an `Infinity` sentinel. The heap never
//! stores `Infinity`: pushing it is a no-op, which makes `Infinity` a flat
//! element and keeps canonical forms free of it.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::InstanceError;
use crate::algebra::{Coalgebra, RightAlgebra, TotalCoalgebra};
use crate::jigsaw::{FlatClassifier, Flatness, Piece, StraightEdge};

/// A natural number or infinity, with infinity above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtVal {
    Finite(u64),
    Infinity,
}

impl ExtVal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtVal::Finite(_))
    }
}

impl From<u64> for ExtVal {
    fn from(n: u64) -> Self {
        ExtVal::Finite(n)
    }
}

impl fmt::Display for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtVal::Finite(n) => write!(f, "{n}"),
            ExtVal::Infinity => f.write_str("∞"),
        }
    }
}

impl FromStr for ExtVal {
    type Err = InstanceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" => Ok(ExtVal::Infinity),
            t => t
                .parse()
                .map(ExtVal::Finite)
                .map_err(|_| InstanceError::BadValue(s.to_string())),
        }
    }
}

/// Finite values as JSON numbers, infinity as `"inf"`.
impl Serialize for ExtVal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtVal::Finite(n) => serializer.serialize_u64(*n),
            ExtVal::Infinity => serializer.serialize_str("inf"),
        }
    }
}

/// Parses `v1,v2,...` where each value is a natural or `inf`.
pub fn parse_values(s: &str) -> Result<Vec<ExtVal>, InstanceError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

/// A persistent min-heap (leftist tree). Equality is equality of the
/// underlying multisets.
#[derive(Clone, Default)]
pub struct Heap(Option<Arc<HeapNode>>);

struct HeapNode {
    rank: usize,
    value: u64,
    left: Heap,
    right: Heap,
}

impl Heap {
    pub fn empty() -> Self {
        Heap(None)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn len(&self) -> usize {
        match &self.0 {
            None => 0,
            Some(node) => 1 + node.left.len() + node.right.len(),
        }
    }

    fn rank(&self) -> usize {
        self.0.as_ref().map_or(0, |n| n.rank)
    }

    fn node(value: u64, a: Heap, b: Heap) -> Heap {
        let (left, right) = if a.rank() >= b.rank() { (a, b) } else { (b, a) };
        Heap(Some(Arc::new(HeapNode {
            rank: right.rank() + 1,
            value,
            left,
            right,
        })))
    }

    fn merge(a: &Heap, b: &Heap) -> Heap {
        match (&a.0, &b.0) {
            (None, _) => b.clone(),
            (_, None) => a.clone(),
            (Some(x), Some(y)) => {
                if x.value <= y.value {
                    Heap::node(x.value, x.left.clone(), Heap::merge(&x.right, b))
                } else {
                    Heap::node(y.value, y.left.clone(), Heap::merge(a, &y.right))
                }
            }
        }
    }

    /// Inserts a value. Pushing `Infinity` returns the heap unchanged.
    pub fn push(&self, v: ExtVal) -> Heap {
        match v {
            ExtVal::Infinity => self.clone(),
            ExtVal::Finite(n) => Heap::merge(&Heap::node(n, Heap(None), Heap(None)), self),
        }
    }

    pub fn pop_min(&self) -> Option<(ExtVal, Heap)> {
        self.0.as_ref().map(|node| {
            (
                ExtVal::Finite(node.value),
                Heap::merge(&node.left, &node.right),
            )
        })
    }

    /// The stored multiset in nondecreasing order.
    pub fn canonical(&self) -> Vec<ExtVal> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<&Heap> = vec![self];
        while let Some(h) = stack.pop() {
            if let Some(node) = &h.0 {
                out.push(ExtVal::Finite(node.value));
                stack.push(&node.left);
                stack.push(&node.right);
            }
        }
        out.sort();
        out
    }
}

impl FromIterator<ExtVal> for Heap {
    fn from_iter<I: IntoIterator<Item = ExtVal>>(iter: I) -> Self {
        iter.into_iter().fold(Heap::empty(), |h, v| h.push(v))
    }
}

impl PartialEq for Heap {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for Heap {}

impl Hash for Heap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl PartialOrd for Heap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Heap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical().cmp(&other.canonical())
    }
}

impl fmt::Debug for Heap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("heap")?;
        f.debug_set().entries(self.canonical()).finish()
    }
}

impl Serialize for Heap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.canonical().serialize(serializer)
    }
}

/// `g∞`: pops the minimum, or yields `(∞, empty)` on the empty heap.
pub fn pop_or_infinity(h: &Heap) -> (ExtVal, Heap) {
    h.pop_min().unwrap_or((ExtVal::Infinity, Heap::empty()))
}

/// `(min a b, max a b)`.
pub fn piece_sort(a: &ExtVal, b: &ExtVal) -> (ExtVal, ExtVal) {
    (*a.min(b), *a.max(b))
}

pub fn flat_ext(a: &ExtVal) -> Flatness {
    match a {
        ExtVal::Infinity => Flatness::Flat,
        ExtVal::Finite(_) => Flatness::NotFlat,
    }
}

/// `(push, empty)`.
pub fn push_algebra() -> RightAlgebra<ExtVal, Heap> {
    RightAlgebra::new(Heap::empty(), |a: &ExtVal, h: &Heap| h.push(*a))
}

/// `popMin`.
pub fn pop_min_coalgebra() -> Coalgebra<ExtVal, Heap> {
    Coalgebra::new(Heap::pop_min)
}

pub fn pop_total_coalgebra() -> TotalCoalgebra<ExtVal, Heap> {
    TotalCoalgebra::new(pop_or_infinity)
}

pub fn sort_piece() -> Piece<ExtVal, ExtVal> {
    Piece::new(piece_sort)
}

pub fn straight() -> StraightEdge<ExtVal> {
    StraightEdge(ExtVal::Infinity)
}

pub fn flat_classifier() -> FlatClassifier<ExtVal> {
    FlatClassifier::new(flat_ext)
}
