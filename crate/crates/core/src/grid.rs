//! Text-grid encoding of a basic module: `n` lines, line `i` holding the
//! `n - i + 1` boxes of row `i` of the staircase in the column order
//! `(i,n), (i,n-1), ..., (i,i)`, filled boxes as `■` (or `1` in ASCII mode)
//! and empty ones as `□` (or `0`).

use crate::error::FabalError;
use crate::interval::Interval;
use crate::module::BasicModule;

/// Parses a grid. Lines may be separated by newlines, `/`, `|`, or the
/// two-character sequence `\n`; filled cells are `■`, `1` or `x`, empty
/// cells `□`, `0`, `.` or `_`.
pub fn parse_grid(text: &str) -> Result<BasicModule, FabalError> {
    let normalized = text.replace("\\n", "\n").replace(['/', '|'], "\n");
    let lines: Vec<&str> = normalized
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(FabalError::Parse("empty grid".into()));
    }
    let n = lines.len();
    let mut summands = Vec::new();
    for (row, line) in lines.iter().enumerate() {
        let i = row + 1;
        let cells: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
        if cells.len() != n - i + 1 {
            return Err(FabalError::Parse(format!(
                "line {i} has {} cells, expected {}",
                cells.len(),
                n - i + 1
            )));
        }
        for (k, &c) in cells.iter().enumerate() {
            let j = n - k;
            match c {
                '■' | '1' | 'x' => summands.push(Interval::new(i, j)),
                '□' | '0' | '.' | '_' => {}
                other => {
                    return Err(FabalError::Parse(format!(
                        "unexpected cell character {other:?} in line {i}"
                    )))
                }
            }
        }
    }
    BasicModule::new(n, summands).map_err(|e| FabalError::Parse(e.to_string()))
}

/// Prints the grid of a module, lines joined with `\n`.
pub fn grid_string(m: &BasicModule, ascii: bool) -> String {
    let n = m.n();
    let (full, empty) = if ascii { ('1', '0') } else { ('■', '□') };
    let mut out = String::new();
    for i in 1..=n {
        if i > 1 {
            out.push('\n');
        }
        for j in (i..=n).rev() {
            out.push(if m.contains(Interval::new(i, j)) { full } else { empty });
        }
    }
    out
}
