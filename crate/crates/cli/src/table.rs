//! The property table of the classical examples.

use std::fmt::Write;

use cyclotri::constructions::builtin_example;
use cyclotri::flip::non_exchangeable_arc;
use cyclotri::Result;

const MAXIMAL: [u32; 6] = [4, 5, 6, 9, 10, 11];

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "×"
    }
}

/// Connected, maximal, triangulation and locally finite for `S_i`.
pub fn properties(i: u32) -> Result<[bool; 4]> {
    let s = builtin_example(i)?;
    Ok([
        s.is_connected()?,
        s.is_maximal()?,
        s.is_triangulation()?,
        s.is_locally_finite()?,
    ])
}

/// Whether every arc of the maximal example `S_i` is exchangeable.
pub fn all_exchangeable(i: u32) -> Result<bool> {
    Ok(non_exchangeable_arc(&builtin_example(i)?)?.is_none())
}

fn row(out: &mut String, name: &str, width: usize, cells: impl Iterator<Item = bool>) {
    let _ = write!(out, "{name:<width$}");
    for c in cells {
        let _ = write!(out, " {:>2}", mark(c));
    }
    out.push('\n');
}

pub fn render() -> Result<String> {
    let names = ["Connected", "Maximal", "Triangulation", "Locally finite"];
    let all: Vec<[bool; 4]> = (1..=11).map(properties).collect::<Result<_>>()?;
    let mut out = String::from("Properties of the examples S1-S11\n\n");
    let width = 14;
    let _ = write!(out, "{:width$}", "");
    for i in 1..=11 {
        let _ = write!(out, " {i:>2}");
    }
    out.push('\n');
    for (k, name) in names.iter().enumerate() {
        row(&mut out, name, width, all.iter().map(|r| r[k]));
    }
    out.push_str("\nExchangeability in the maximal examples\n\n");
    let width = 21;
    let _ = write!(out, "{:width$}", "");
    for i in MAXIMAL {
        let _ = write!(out, " {i:>2}");
    }
    out.push('\n');
    for (k, name) in names.iter().enumerate() {
        row(&mut out, name, width, MAXIMAL.iter().map(|&i| all[i as usize - 1][k]));
    }
    let exchangeable: Vec<bool> = MAXIMAL.iter().map(|&i| all_exchangeable(i)).collect::<Result<_>>()?;
    row(&mut out, "All arcs exchangeable", width, exchangeable.into_iter());
    Ok(out)
}
