//! Jigsaw evaluation of right metamorphisms.
//!
//! The board's top boundary is the input list and its right boundary is the
//! `straight` edge. A [`Piece`] maps the top and right edges of a cell to its
//! left and bottom edges; the left boundary, read top to bottom, is the
//! output. None of the evaluators here receive an algebra or a coalgebra:
//! the states of the metamorphism never take part in the computation, they
//! only describe what it must compute.
//!
//! * [`jigsaw_ih`] fills the infinite board one row at a time.
//! * [`jigsaw_iv`] fills it one column at a time.
//! * [`jigsaw_general`] handles boards whose columns may end, using a
//!   [`FlatClassifier`] to decide whether a column below an exhausted one
//!   produces anything.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::colist::{Colist, ContractViolation, Step};
use crate::Value;

/// `piece : A × B → B × A`, from (top, right) to (left, bottom).
pub struct Piece<A, B> {
    apply: Arc<dyn Fn(&A, &B) -> (B, A) + Send + Sync>,
}

impl<A, B> Clone for Piece<A, B> {
    fn clone(&self) -> Self {
        Piece {
            apply: Arc::clone(&self.apply),
        }
    }
}

impl<A, B> fmt::Debug for Piece<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Piece(..)")
    }
}

impl<A, B> Piece<A, B> {
    pub fn new(apply: impl Fn(&A, &B) -> (B, A) + Send + Sync + 'static) -> Self {
        Piece {
            apply: Arc::new(apply),
        }
    }

    pub fn apply(&self, top: &A, right: &B) -> (B, A) {
        (self.apply)(top, right)
    }
}

/// The edge value on the board's initial right boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StraightEdge<B>(pub B);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flatness {
    /// Consuming the element into an empty state leaves it empty.
    Flat,
    NotFlat,
}

pub struct FlatClassifier<A> {
    classify: Arc<dyn Fn(&A) -> Flatness + Send + Sync>,
}

impl<A> Clone for FlatClassifier<A> {
    fn clone(&self) -> Self {
        FlatClassifier {
            classify: Arc::clone(&self.classify),
        }
    }
}

impl<A> fmt::Debug for FlatClassifier<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FlatClassifier(..)")
    }
}

impl<A> FlatClassifier<A> {
    pub fn new(classify: impl Fn(&A) -> Flatness + Send + Sync + 'static) -> Self {
        FlatClassifier {
            classify: Arc::new(classify),
        }
    }

    pub fn classify(&self, a: &A) -> Flatness {
        (self.classify)(a)
    }
}

/// Places one row of pieces under `row_input`, right to left, starting from
/// the straight edge. Returns the row's left edge and its bottom edges.
pub fn fill_ih<A: Clone, B: Clone>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    row_input: &[A],
) -> (B, Vec<A>) {
    let mut edge = straight.0.clone();
    let mut bottoms = Vec::with_capacity(row_input.len());
    for a in row_input.iter().rev() {
        let (left, bottom) = piece.apply(a, &edge);
        bottoms.push(bottom);
        edge = left;
    }
    bottoms.reverse();
    (edge, bottoms)
}

/// Horizontal placement: each deconstruction fills one more row.
pub fn jigsaw_ih<A: Value, B: Value>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    input: &[A],
) -> Colist<B> {
    let piece = piece.clone();
    let straight = straight.clone();
    let input = input.to_vec();
    Colist::defer(move || {
        let (b, below) = fill_ih(&piece, &straight, &input);
        Step::Cons(b, jigsaw_ih(&piece, &straight, &below))
    })
}

/// Fills the column under `a`, given the colist of edges on its right.
///
/// The column on the right must be infinite. Reaching its end is reported as
/// [`ContractViolation::EndedColumn`] when the offending node is deconstructed.
pub fn fill_iv<A: Value, B: Value>(piece: &Piece<A, B>, a: A, column_input: Colist<B>) -> Colist<B> {
    let piece = piece.clone();
    Colist::defer_fallible(move || match column_input.decon()? {
        Step::End => Err(ContractViolation::EndedColumn),
        Step::Cons(b, rest) => {
            let (left, bottom) = piece.apply(&a, &b);
            Ok(Step::Cons(left, fill_iv(&piece, bottom, rest)))
        }
    })
}

/// Vertical placement: the rightmost column is all straight edges, and each
/// input element, from last to first, contributes a column to its left.
pub fn jigsaw_iv<A: Value, B: Value>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    input: &[A],
) -> Colist<B> {
    input
        .iter()
        .rev()
        .fold(Colist::repeat(straight.0.clone()), |column, a| {
            fill_iv(piece, a.clone(), column)
        })
}

/// Fills the column under `a` when the column on its right may end.
///
/// Below the end of the right column, a flat `a` ends this column too; any
/// other `a` keeps placing pieces against the straight edge, still looking at
/// the same ended column.
pub fn fill_general<A: Value, B: Value>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    flat: &FlatClassifier<A>,
    a: A,
    column_input: Colist<B>,
) -> Colist<B> {
    let piece = piece.clone();
    let straight = straight.clone();
    let flat = flat.clone();
    Colist::defer_fallible(move || match column_input.decon()? {
        Step::End => match flat.classify(&a) {
            Flatness::Flat => Ok(Step::End),
            Flatness::NotFlat => {
                let (left, bottom) = piece.apply(&a, &straight.0);
                let tail = fill_general(&piece, &straight, &flat, bottom, column_input);
                Ok(Step::Cons(left, tail))
            }
        },
        Step::Cons(b, rest) => {
            let (left, bottom) = piece.apply(&a, &b);
            let tail = fill_general(&piece, &straight, &flat, bottom, rest);
            Ok(Step::Cons(left, tail))
        }
    })
}

/// Jigsaw evaluation where the empty board produces nothing.
pub fn jigsaw_general<A: Value, B: Value>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    flat: &FlatClassifier<A>,
    input: &[A],
) -> Colist<B> {
    input.iter().rev().fold(Colist::end(), |column, a| {
        fill_general(piece, straight, flat, a.clone(), column)
    })
}

/// The four edges of one placed piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacedPiece<A, B> {
    pub top: A,
    pub right: B,
    pub left: B,
    pub bottom: A,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoardRow<A, B> {
    /// Left to right.
    pub pieces: Vec<PlacedPiece<A, B>>,
    /// The row's contribution to the output.
    pub left: B,
}

/// The first few rows of a horizontally filled board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoardTrace<A, B> {
    pub input: Vec<A>,
    pub straight: B,
    pub rows: Vec<BoardRow<A, B>>,
}

impl<A, B> BoardTrace<A, B> {
    /// The left boundary, top to bottom.
    pub fn output(&self) -> impl Iterator<Item = &B> {
        self.rows.iter().map(|row| &row.left)
    }
}

impl<A: PartialEq, B: PartialEq> BoardTrace<A, B> {
    /// Checks that neighbouring pieces agree on their shared edges and that
    /// the boundaries are the input and the straight edge.
    pub fn is_consistent(&self) -> bool {
        let mut top: Vec<&A> = self.input.iter().collect();
        for row in &self.rows {
            if row.pieces.len() != top.len() {
                return false;
            }
            let mut right = &self.straight;
            for (p, t) in row.pieces.iter().zip(&top).rev() {
                if &p.top != *t || &p.right != right {
                    return false;
                }
                right = &p.left;
            }
            if right != &row.left {
                return false;
            }
            top = row.pieces.iter().map(|p| &p.bottom).collect();
        }
        true
    }
}

/// Records `rows` passes of [`fill_ih`].
pub fn board_trace<A: Clone, B: Clone>(
    piece: &Piece<A, B>,
    straight: &StraightEdge<B>,
    input: &[A],
    rows: usize,
) -> BoardTrace<A, B> {
    let mut top = input.to_vec();
    let mut trace = Vec::with_capacity(rows);
    for _ in 0..rows {
        let mut edge = straight.0.clone();
        let mut pieces = Vec::with_capacity(top.len());
        for a in top.iter().rev() {
            let (left, bottom) = piece.apply(a, &edge);
            pieces.push(PlacedPiece {
                top: a.clone(),
                right: edge,
                left: left.clone(),
                bottom,
            });
            edge = left;
        }
        pieces.reverse();
        top = pieces.iter().map(|p| p.bottom.clone()).collect();
        trace.push(BoardRow { pieces, left: edge });
    }
    BoardTrace {
        input: input.to_vec(),
        straight: straight.0.clone(),
        rows: trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Plain integers with u32::MAX standing in for infinity; the heapsort
    // instance proper lives in `instances::heapsort`.
    const INF: u32 = u32::MAX;

    fn minmax() -> Piece<u32, u32> {
        Piece::new(|a: &u32, b: &u32| ((*a).min(*b), (*a).max(*b)))
    }

    fn flat() -> FlatClassifier<u32> {
        FlatClassifier::new(|a: &u32| {
            if *a == INF {
                Flatness::Flat
            } else {
                Flatness::NotFlat
            }
        })
    }

    #[test]
    fn fill_ih_row() {
        let s = StraightEdge(INF);
        assert_eq!(fill_ih(&minmax(), &s, &[]), (INF, vec![]));
        assert_eq!(fill_ih(&minmax(), &s, &[1]), (1, vec![INF]));
        assert_eq!(fill_ih(&minmax(), &s, &[2, 3, 1]), (1, vec![2, 3, INF]));
    }

    #[test]
    fn horizontal_and_vertical_agree() {
        let s = StraightEdge(INF);
        let h = jigsaw_ih(&minmax(), &s, &[4, 1, 3, 1]).take(6).unwrap();
        let v = jigsaw_iv(&minmax(), &s, &[4, 1, 3, 1]).take(6).unwrap();
        assert_eq!(h, v);
        assert_eq!(h.items, vec![1, 1, 3, 4, INF, INF]);
    }

    #[test]
    fn fill_iv_rejects_ended_column() {
        let c = fill_iv(&minmax(), 3, Colist::end());
        assert_eq!(c.take(1), Err(ContractViolation::EndedColumn));
        let c = fill_iv(&minmax(), 3, vec![5].into());
        assert_eq!(c.take(1).unwrap().items, vec![3]);
        assert_eq!(c.take(2), Err(ContractViolation::EndedColumn));
    }

    #[test]
    fn fill_general_branches() {
        let s = StraightEdge(INF);
        let flat_end = fill_general(&minmax(), &s, &flat(), INF, Colist::end());
        assert!(flat_end.take(1).unwrap().ended);

        let c = fill_general(&minmax(), &s, &flat(), 4, Colist::end());
        let p = c.take(2).unwrap();
        assert_eq!((p.items, p.ended), (vec![4], true));

        let c = fill_general(&minmax(), &s, &flat(), 2, vec![3].into());
        let p = c.take(3).unwrap();
        assert_eq!((p.items, p.ended), (vec![2, 3], true));
    }

    #[test]
    fn general_jigsaw_is_finite() {
        let s = StraightEdge(INF);
        let p = jigsaw_general(&minmax(), &s, &flat(), &[2, 3, 1]).take(4).unwrap();
        assert_eq!((p.items, p.ended), (vec![1, 2, 3], true));
        assert!(jigsaw_general(&minmax(), &s, &flat(), &[])
            .take(1)
            .unwrap()
            .ended);
    }

    #[test]
    fn trace_matches_rows() {
        let s = StraightEdge(INF);
        let trace = board_trace(&minmax(), &s, &[2, 3, 1], 3);
        assert_eq!(trace.output().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(trace.is_consistent());

        let empty = board_trace(&minmax(), &s, &[], 2);
        assert_eq!(empty.rows.len(), 2);
        assert!(empty.rows.iter().all(|r| r.pieces.is_empty() && r.left == INF));
    }

    #[test]
    fn tampered_trace_is_inconsistent() {
        let s = StraightEdge(INF);
        let mut trace = board_trace(&minmax(), &s, &[2, 3, 1], 2);
        trace.rows[1].pieces[0].top = 9;
        assert!(!trace.is_consistent());
    }
}
