//! Streaming evaluation of left metamorphisms.
//!
//! [`stream`] interleaves production and consumption: it produces whenever
//! the coalgebra allows and only consumes the next input element when it
//! does not. When `(alg, coalg)` satisfies the streaming condition (see
//! [`crate::verify::check_streaming_condition`]) the output agrees with the
//! definitional [`crate::cbp`].
//!
//! Coalgebras that satisfy the streaming condition are usually too
//! conservative to finish the job once the input runs out. A
//! [`StreamingSpec`] may therefore carry a *flusher*, a second coalgebra
//! that takes over from the state reached after the last input element.
//! Whether flushing terminates depends on the instance.

use std::sync::Arc;

use crate::algebra::{unfoldr, Coalgebra, LeftAlgebra};
use crate::colist::{Colist, Step};
use crate::Value;

#[derive(Debug)]
pub struct StreamingSpec<A, B, S> {
    pub alg: LeftAlgebra<A, S>,
    pub coalg: Coalgebra<B, S>,
    pub flusher: Option<Coalgebra<B, S>>,
}

impl<A, B, S> Clone for StreamingSpec<A, B, S> {
    fn clone(&self) -> Self {
        StreamingSpec {
            alg: self.alg.clone(),
            coalg: self.coalg.clone(),
            flusher: self.flusher.clone(),
        }
    }
}

impl<A, B, S> StreamingSpec<A, B, S> {
    pub fn new(alg: LeftAlgebra<A, S>, coalg: Coalgebra<B, S>) -> Self {
        StreamingSpec {
            alg,
            coalg,
            flusher: None,
        }
    }

    pub fn with_flusher(mut self, flusher: Coalgebra<B, S>) -> Self {
        self.flusher = Some(flusher);
        self
    }
}

/// Streams `input` through `spec` starting from `init`.
pub fn stream<A, B, S>(spec: &StreamingSpec<A, B, S>, init: S, input: &[A]) -> Colist<B>
where
    A: Value,
    B: Value,
    S: Value,
{
    stream_from(spec.clone(), init, input.to_vec().into(), 0)
}

fn stream_from<A, B, S>(
    spec: StreamingSpec<A, B, S>,
    init: S,
    input: Arc<[A]>,
    start: usize,
) -> Colist<B>
where
    A: Value,
    B: Value,
    S: Value,
{
    Colist::defer_fallible(move || {
        let mut state = init;
        let mut pos = start;
        loop {
            // Production takes priority over consumption.
            if let Some((b, next)) = spec.coalg.next(&state) {
                let tail = stream_from(spec, next, input, pos);
                return Ok(Step::Cons(b, tail));
            }
            match input.get(pos) {
                Some(a) => {
                    state = spec.alg.step(&state, a);
                    pos += 1;
                }
                None => {
                    return match &spec.flusher {
                        Some(flusher) => unfoldr(flusher, state).decon(),
                        None => Ok(Step::End),
                    };
                }
            }
        }
    })
}

/// Push-driven front end to [`stream`].
///
/// Input arrives one element at a time through [`feed`](Self::feed), which
/// returns everything that became producible. Call [`finish`](Self::finish)
/// once the input is exhausted to obtain the remaining output.
#[derive(Debug)]
pub struct StreamProcessor<A, B, S> {
    spec: StreamingSpec<A, B, S>,
    state: S,
}

impl<A, B, S> StreamProcessor<A, B, S> {
    pub fn new(spec: StreamingSpec<A, B, S>, init: S) -> Self {
        StreamProcessor { spec, state: init }
    }

    pub fn state(&self) -> &S {
        &self.state
    }

    /// Produces everything available from the current state without
    /// consuming input. Only the initial state can have pending output,
    /// since every [`feed`](Self::feed) drains greedily.
    pub fn drain(&mut self) -> Vec<B> {
        let mut out = Vec::new();
        while let Some((b, next)) = self.spec.coalg.next(&self.state) {
            out.push(b);
            self.state = next;
        }
        out
    }

    /// Consumes `a` and returns the outputs it unlocked, in order.
    pub fn feed(&mut self, a: &A) -> Vec<B> {
        let mut out = self.drain();
        self.state = self.spec.alg.step(&self.state, a);
        out.extend(self.drain());
        out
    }

    /// Ends the input. The remaining output is unfolded by the flusher if
    /// the spec has one, and by the streaming coalgebra otherwise.
    pub fn finish(self) -> Colist<B>
    where
        B: Value,
        S: Value,
    {
        let coalg = self.spec.flusher.as_ref().unwrap_or(&self.spec.coalg);
        unfoldr(coalg, self.state)
    }
}
