use std::process::ExitCode;

use clap::ValueEnum;
use metamorph::instances::heapsort::{sort_piece, straight};
use metamorph::instances::{parse_values, ExtVal};
use metamorph::jigsaw::{board_trace, BoardTrace};

use crate::render::ext;
use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
pub struct Args {
    /// Naturals or `inf`, e.g. `2,3,1`.
    #[arg(long, allow_hyphen_values = true)]
    values: String,
    /// Number of rows to place. Defaults to one more than the input length.
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Spell infinity as `inf` and mark pieces with `#`.
    #[arg(long)]
    ascii: bool,
}

pub fn run(args: &Args) -> Result<ExitCode, Failure> {
    let input = parse_values(&args.values).map_err(|e| Failure::Usage(e.to_string()))?;
    let rows = args.rows.unwrap_or(input.len() + 1);
    let board = board_trace(&sort_piece(), &straight(), &input, rows);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&board).expect("serializable")),
        Format::Text => print!("{}", grid(&board, args.ascii)),
    }
    Ok(ExitCode::SUCCESS)
}

/// Lays the board out on alternating edge and piece columns. Lines of
/// horizontal edges show each piece's top and bottom; lines of vertical
/// edges show the edges between pieces, the output on the far left and the
/// straight edge on the far right.
fn grid(board: &BoardTrace<ExtVal, ExtVal>, ascii: bool) -> String {
    let show = |v: &ExtVal| ext(v, ascii);
    let mark = if ascii { "#" } else { "·" };
    let width = board
        .rows
        .iter()
        .flat_map(|r| r.pieces.iter().flat_map(|p| [p.top, p.left, p.bottom]))
        .chain(board.input.iter().copied())
        .chain([board.straight])
        .map(|v| show(&v).chars().count())
        .max()
        .unwrap_or(1)
        + 2;
    let cell = |s: &str| format!("{s:^width$}");
    let blank = cell("");

    let horizontal = |values: &[ExtVal]| -> String {
        let mut line = blank.clone();
        for v in values {
            line.push_str(&cell(&show(v)));
            line.push_str(&blank);
        }
        line.trim_end().to_string()
    };

    let mut out = String::new();
    out.push_str(&horizontal(&board.input));
    out.push('\n');
    for row in &board.rows {
        let mut line = cell(&show(&row.left));
        for p in &row.pieces {
            line.push_str(&cell(mark));
            line.push_str(&cell(&show(&p.right)));
        }
        if row.pieces.is_empty() {
            line = cell(&show(&board.straight));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        let bottoms: Vec<ExtVal> = row.pieces.iter().map(|p| p.bottom).collect();
        out.push_str(&horizontal(&bottoms));
        out.push('\n');
    }
    out
}
