//! Every chapter of the guide in `book/src` is included here so that its
//! Rust snippets compile and run under `cargo test`.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub mod $name {}
        )*
    };
}

chapters! {
    introduction => "introduction.md",
    colists_and_folds => "colists-and-folds.md",
    definitional => "definitional.md",
    streaming => "streaming.md",
    jigsaw => "jigsaw.md",
    general_jigsaw => "general-jigsaw.md",
    checking_conditions => "checking-conditions.md",
    cli => "cli.md",
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
