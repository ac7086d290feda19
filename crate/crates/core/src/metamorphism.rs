//! The definitional evaluators: fold the whole input, then unfold.

use crate::algebra::{foldl, foldr, unfoldr, Coalgebra, LeftAlgebra, RightAlgebra};
use crate::colist::Colist;
use crate::Value;

/// Consume-then-produce evaluation of the left metamorphism
/// `unfoldr coalg ∘ foldl alg init`.
///
/// Nothing is computed until the result is first deconstructed; at that
/// point the entire input is consumed before the first element is produced.
pub fn cbp<A, B, S>(
    alg: &LeftAlgebra<A, S>,
    coalg: &Coalgebra<B, S>,
    init: S,
    input: &[A],
) -> Colist<B>
where
    A: Value,
    B: Value,
    S: Value,
{
    let alg = alg.clone();
    let coalg = coalg.clone();
    let input = input.to_vec();
    Colist::defer_fallible(move || {
        let state = foldl(&alg, init, &input);
        unfoldr(&coalg, state).decon()
    })
}

/// Consume-then-produce evaluation of the right metamorphism
/// `unfoldr coalg ∘ foldr alg`.
pub fn cbp_right<A, B, S>(alg: &RightAlgebra<A, S>, coalg: &Coalgebra<B, S>, input: &[A]) -> Colist<B>
where
    A: Value,
    B: Value,
    S: Value,
{
    let alg = alg.clone();
    let coalg = coalg.clone();
    let input = input.to_vec();
    Colist::defer_fallible(move || {
        let state = foldr(&alg, &input);
        unfoldr(&coalg, state).decon()
    })
}
