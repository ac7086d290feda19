//! List metamorphisms: a fold that consumes a finite list into a state,
//! followed by an unfold that produces a possibly infinite colist from it.
//!
//! The crate offers several ways to evaluate the same metamorphism:
//!
//! * [`cbp`] and [`cbp_right`] consume the whole input before producing.
//! * [`streaming::stream`] interleaves consumption and production.
//! * [`jigsaw`] evaluates right metamorphisms with a local `piece` function,
//!   never materialising a state.
//!
//! Each strategy is only correct under a side condition relating the
//! algebra, the coalgebra and (for the jigsaw) the piece. The [`verify`]
//! module checks those conditions over finite domains and compares every
//! strategy against the definitional one. [`instances`] provides base
//! conversion for fractions and heapsort.

pub mod algebra;
pub mod colist;
pub mod instances;
pub mod jigsaw;
mod metamorphism;
pub mod streaming;
pub mod verify;

pub use algebra::{
    foldl, foldr, from_left_alg, unfoldr, Coalgebra, LeftAlgebra, RightAlgebra, StateFn,
    TotalCoalgebra,
};
pub use colist::{Colist, ContractViolation, Prefix, Step};
pub use metamorphism::{cbp, cbp_right};

/// Bounds shared by everything that flows through a lazy colist.
pub trait Value: Clone + Send + Sync + 'static {}

impl<T: Clone + Send + Sync + 'static> Value for T {}
