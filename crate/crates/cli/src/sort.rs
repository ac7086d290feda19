use std::process::ExitCode;

use clap::ValueEnum;
use metamorph::cbp_right;
use metamorph::instances::heapsort::{flat_classifier, pop_min_coalgebra, push_algebra, sort_piece, straight};
use metamorph::instances::{parse_values, ExtVal};
use metamorph::jigsaw::{jigsaw_general, jigsaw_ih, jigsaw_iv};
use serde::Serialize;

use crate::render::{bounded, ext, joined, with_note};
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Push everything into a heap, then pop until it is empty.
    Cbp,
    /// Infinite jigsaw, one row at a time.
    JigsawH,
    /// Infinite jigsaw, one column at a time.
    JigsawV,
    /// Jigsaw that stops once only flat values remain.
    JigsawGeneral,
}

#[derive(clap::Args)]
pub struct Args {
    /// Naturals or `inf`, e.g. `2,3,1`.
    #[arg(long, allow_hyphen_values = true)]
    values: String,
    #[arg(long, value_enum, default_value_t = Algorithm::Cbp)]
    algorithm: Algorithm,
    /// Print at most this many outputs.
    #[arg(long, default_value_t = 16)]
    prefix: usize,
    #[arg(long)]
    json: bool,
    /// Spell infinity as `inf`.
    #[arg(long)]
    ascii: bool,
}

#[derive(Serialize)]
struct Sorted {
    algorithm: Algorithm,
    input: Vec<ExtVal>,
    output: Vec<ExtVal>,
    ended: bool,
}

pub fn run(args: &Args) -> Result<ExitCode, Failure> {
    let input = parse_values(&args.values).map_err(|e| Failure::Usage(e.to_string()))?;
    let out = match args.algorithm {
        Algorithm::Cbp => cbp_right(&push_algebra(), &pop_min_coalgebra(), &input),
        Algorithm::JigsawH => jigsaw_ih(&sort_piece(), &straight(), &input),
        Algorithm::JigsawV => jigsaw_iv(&sort_piece(), &straight(), &input),
        Algorithm::JigsawGeneral => jigsaw_general(&sort_piece(), &straight(), &flat_classifier(), &input),
    };
    let (output, ended) = bounded(&out, args.prefix)?;
    if args.json {
        let sorted = Sorted {
            algorithm: args.algorithm,
            input,
            output,
            ended,
        };
        println!("{}", serde_json::to_string_pretty(&sorted).expect("serializable"));
    } else {
        let body = joined(&output, |v| ext(v, args.ascii));
        println!("{}", with_note(&body, if ended { "ended" } else { "truncated" }));
    }
    Ok(ExitCode::SUCCESS)
}
