use std::process::ExitCode;

use clap::ValueEnum;
use metamorph::instances::{parse_digit_list, BaseConversion, Digit};
use metamorph::streaming::StreamProcessor;
use metamorph::{cbp, Colist};
use serde::Serialize;

use crate::render::{arrow, bounded, joined, with_note};
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Consume every digit, then produce with the eager coalgebra.
    Eager,
    /// Interleave production and consumption with the guarded coalgebra.
    Streaming,
    /// Streaming, then switch to the eager coalgebra once input runs out.
    StreamingFlush,
}

#[derive(clap::Args)]
pub struct Args {
    /// Input base.
    #[arg(long)]
    from: u32,
    /// Output base.
    #[arg(long)]
    to: u32,
    /// Fractional digits in the input base, e.g. `6,2,5`.
    #[arg(long, allow_hyphen_values = true)]
    digits: String,
    #[arg(long, value_enum, default_value_t = Mode::Eager)]
    mode: Mode,
    /// Print at most this many output digits.
    #[arg(long, default_value_t = 32)]
    max_output: usize,
    #[arg(long)]
    json: bool,
    /// Use `->` instead of `→`.
    #[arg(long)]
    ascii: bool,
}

/// What the streaming processor emitted at one point of the run.
#[derive(Debug, Serialize)]
#[serde(tag = "phase", rename_all = "kebab-case")]
enum LedgerEntry {
    Start { out: Vec<Digit> },
    Input { digit: Digit, out: Vec<Digit> },
    Finish { out: Vec<Digit> },
}

#[derive(Debug, Serialize)]
struct Conversion {
    from: u32,
    to: u32,
    mode: Mode,
    input: Vec<Digit>,
    output: Vec<Digit>,
    terminated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    ledger: Option<Vec<LedgerEntry>>,
}

pub fn run(args: &Args) -> Result<ExitCode, Failure> {
    let conv = BaseConversion::new(args.from, args.to).map_err(|e| Failure::Usage(e.to_string()))?;
    let raw = parse_digit_list(&args.digits).map_err(|e| Failure::Usage(e.to_string()))?;
    let input = conv.digits(&raw).map_err(|e| Failure::Usage(e.to_string()))?;

    let result = match args.mode {
        Mode::Eager => {
            let out = cbp(&conv.left_algebra(), &conv.eager_coalgebra(), conv.initial_state(), &input);
            let (output, terminated) = bounded(&out, args.max_output)?;
            Conversion {
                from: args.from,
                to: args.to,
                mode: args.mode,
                input,
                output,
                terminated,
                ledger: None,
            }
        }
        Mode::Streaming | Mode::StreamingFlush => streamed(&conv, args, input)?,
    };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
    } else {
        let to = arrow(args.ascii);
        for entry in result.ledger.iter().flatten() {
            match entry {
                LedgerEntry::Start { out } => println!("start {to} out:[{}]", digits(out)),
                LedgerEntry::Input { digit, out } => println!("in:{} {to} out:[{}]", digit.0, digits(out)),
                LedgerEntry::Finish { out } => println!("end {to} out:[{}]", digits(out)),
            }
        }
        let note = if result.terminated { "terminated" } else { "truncated" };
        println!("{}", with_note(&digits(&result.output), note));
    }
    Ok(ExitCode::SUCCESS)
}

fn digits(ds: &[Digit]) -> String {
    joined(ds, |d| d.0.to_string())
}

fn streamed(conv: &BaseConversion, args: &Args, input: Vec<Digit>) -> Result<Conversion, Failure> {
    let spec = conv.streaming_spec(args.mode == Mode::StreamingFlush);
    let mut processor = StreamProcessor::new(spec, conv.initial_state());
    let mut output = Vec::new();
    let mut ledger = Vec::new();
    let mut room = args.max_output;
    let early = processor.drain();
    let mut overflow = early.len() > room;
    if !early.is_empty() {
        ledger.push(LedgerEntry::Start {
            out: clip(early, &mut room, &mut output),
        });
    }
    for d in &input {
        let out = processor.feed(d);
        overflow |= out.len() > room;
        ledger.push(LedgerEntry::Input {
            digit: *d,
            out: clip(out, &mut room, &mut output),
        });
    }
    let rest: Colist<Digit> = processor.finish();
    let (tail, ended) = bounded(&rest, room)?;
    ledger.push(LedgerEntry::Finish {
        out: clip(tail, &mut room, &mut output),
    });
    Ok(Conversion {
        from: args.from,
        to: args.to,
        mode: args.mode,
        input,
        output,
        terminated: ended && !overflow,
        ledger: Some(ledger),
    })
}

/// Keeps as much of `out` as still fits under the output cap.
fn clip(mut out: Vec<Digit>, room: &mut usize, output: &mut Vec<Digit>) -> Vec<Digit> {
    out.truncate(*room);
    *room -= out.len();
    output.extend(out.iter().copied());
    out
}
