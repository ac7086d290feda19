use metamorph::instances::ExtVal;
use metamorph::{Colist, Value};

use crate::Failure;

pub fn ext(v: &ExtVal, ascii: bool) -> String {
    match v {
        ExtVal::Infinity if ascii => "inf".to_string(),
        v => v.to_string(),
    }
}

pub fn joined<T>(items: &[T], show: impl Fn(&T) -> String) -> String {
    items.iter().map(show).collect::<Vec<_>>().join(",")
}

/// `items (note)`, or just `(note)` when there are no items.
pub fn with_note(body: &str, note: &str) -> String {
    if body.is_empty() {
        format!("({note})")
    } else {
        format!("{body} ({note})")
    }
}

pub fn arrow(ascii: bool) -> &'static str {
    if ascii {
        "->"
    } else {
        "→"
    }
}

/// The first `n` elements and whether the colist ends right after them.
/// Looks one element further than `n` so that a colist of exactly `n`
/// elements counts as ended.
pub fn bounded<B: Value>(colist: &Colist<B>, n: usize) -> Result<(Vec<B>, bool), Failure> {
    let mut prefix = colist
        .take(n.saturating_add(1))
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    if prefix.items.len() > n {
        prefix.items.truncate(n);
        Ok((prefix.items, false))
    } else {
        Ok((prefix.items, true))
    }
}
