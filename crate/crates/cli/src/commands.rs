//! The subcommands, as functions from inputs to printed output.

use std::fmt::Write;

use cyclotri::cluster::{enumerate_triangulations, exchange_graph, render, Seed};
use cyclotri::constructions::builtin_example;
use cyclotri::flip::{self, FlipStep};
use cyclotri::{Arc, CyclicOrder, Deficiency, Error, SymbolicArcSet};
use thiserror::Error;

use crate::format::{self, ParseError};
use crate::{dot, svg, table};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Internal(_) => 1,
            CommandError::Parse(_) | CommandError::Usage(_) => 2,
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::NotLaurent => CommandError::Internal(e.to_string()),
            _ => CommandError::Usage(e.to_string()),
        }
    }
}

pub type Output = Result<String, CommandError>;

fn deficiency(order: CyclicOrder, d: &Deficiency) -> String {
    let kind = if d.is_edge { "edge" } else { "arc" };
    let want = if d.is_edge { 1 } else { 2 };
    let (a, b) = (format::point(order, d.a), format::point(order, d.b));
    format!("{kind} {a} {b} lies in {} triangles, expected {want}", d.triangles)
}

pub fn check(text: &str) -> Output {
    let set = format::parse(text)?;
    let order = set.order();
    let mut out = String::new();
    if let Some((p, q)) = set.noncrossing_witness()? {
        let _ = writeln!(
            out,
            "noncrossing: false ({} crosses {})",
            format::arc(order, &p),
            format::arc(order, &q)
        );
        out.push_str("the remaining properties need a noncrossing set\n");
        return Ok(out);
    }
    out.push_str("noncrossing: true\n");
    let connected = set.is_connected()?;
    let _ = writeln!(out, "connected: {connected}");
    match set.maximality_witness()? {
        None => out.push_str("maximal: true\n"),
        Some(p) => {
            let _ = writeln!(out, "maximal: false (can add {})", format::arc(order, &p));
        }
    }
    let triangulation = match set.triangulation_witness()? {
        None => {
            out.push_str("triangulation: true\n");
            true
        }
        Some(d) => {
            let _ = writeln!(out, "triangulation: false ({})", deficiency(order, &d));
            false
        }
    };
    match set.locally_finite_witness()? {
        None => out.push_str("locally finite: true\n"),
        Some(a) => {
            let _ = writeln!(
                out,
                "locally finite: false ({} has infinitely many arcs)",
                format::point(order, a)
            );
        }
    }
    let _ = writeln!(out, "cluster-tilting: {}", connected && triangulation);
    Ok(out)
}

fn step_line(order: CyclicOrder, step: &FlipStep) -> String {
    let q: Vec<String> = step.quadrilateral.iter().map(|&p| format::point(order, p)).collect();
    format!(
        "flip {} -> {} in quadrilateral {}",
        format::arc(order, &step.removed),
        format::arc(order, &step.added),
        q.join(" ")
    )
}

fn load(text: &str, arc: &str) -> Result<(SymbolicArcSet, Arc), CommandError> {
    let set = format::parse(text)?;
    let p = format::parse_arc(set.order(), arc)?;
    Ok((set, p))
}

pub fn flip(text: &str, arc: &str) -> Output {
    let (set, p) = load(text, arc)?;
    let order = set.order();
    if !set.contains(&p)? {
        return Err(CommandError::Usage(format!(
            "{} is not in the set",
            format::arc(order, &p)
        )));
    }
    let Some(step) = flip::exchangeable(&set, &p)? else {
        return Err(CommandError::Usage(format!(
            "{} is not exchangeable",
            format::arc(order, &p)
        )));
    };
    let result = flip::flip(&set, &p)?;
    Ok(format!("{}\n{}", step_line(order, &step), format::print(&result)))
}

pub fn reach(text: &str, arc: &str) -> Output {
    let (set, p) = load(text, arc)?;
    let order = set.order();
    let seq = flip::reach(&set, &p)?;
    let mut out = String::new();
    for step in &seq.steps {
        let _ = writeln!(out, "{}", step_line(order, step));
    }
    let _ = writeln!(out, "{} flips", seq.steps.len());
    out.push_str(&format::print(&seq.end));
    Ok(out)
}

pub fn var(text: &str, arc: &str) -> Output {
    let (set, p) = load(text, arc)?;
    let seed = Seed::new(set)?;
    let value = seed.cluster_variable(&p)?;
    if !value.has_positive_coefficients() {
        return Err(CommandError::Internal(format!(
            "negative coefficient in {}",
            render(&seed.order(), &value)
        )));
    }
    Ok(format!("{}\n", render(&seed.order(), &value)))
}

pub fn enumerate(n: u32, graph: bool) -> Output {
    if graph {
        return Ok(dot::exchange_graph(n, &exchange_graph(n)?));
    }
    Ok(format!("{}\n", enumerate_triangulations(n)?.len()))
}

pub fn draw(text: &str, window: i64) -> Output {
    let set = format::parse(text)?;
    Ok(svg::draw(&set, window)?)
}

pub fn examples(table_only: bool) -> Output {
    if table_only {
        return Ok(table::render()?);
    }
    let mut out = String::new();
    for i in 1..=11 {
        let _ = writeln!(out, "# S{i}");
        out.push_str(&format::print(&builtin_example(i)?));
        out.push('\n');
    }
    out.push_str(&table::render()?);
    Ok(out)
}

pub fn truncate(text: &str, window: i64) -> Output {
    let set = format::parse(text)?;
    Ok(format::print(&set.truncate(window)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PENTAGON: &str = "order finite 5\narc 0 2\narc 0 3\n";

    #[test]
    fn pentagon_commands() {
        assert_eq!(var(PENTAGON, "1 3").unwrap(), "(1 + x_0_3) / x_0_2\n");
        assert_eq!(var(PENTAGON, "0 2").unwrap(), "x_0_2\n");
        let f = flip(PENTAGON, "0 2").unwrap();
        assert_eq!(
            f,
            "flip 0 2 -> 1 3 in quadrilateral 0 1 2 3\norder finite 5\narc 0 3\narc 1 3\n"
        );
        let r = reach(PENTAGON, "1 4").unwrap();
        assert!(r.contains("2 flips\n"), "{r}");
        assert_eq!(enumerate(6, false).unwrap(), "14\n");
    }

    #[test]
    fn check_reports_witnesses() {
        let out = check("order finite 6\narc 0 2\n").unwrap();
        assert!(out.contains("maximal: false (can add"), "{out}");
        assert!(out.contains("cluster-tilting: false"), "{out}");
        let out = check("order finite 6\narc 0 3\narc 1 4\n").unwrap();
        assert!(out.starts_with("noncrossing: false (0 3 crosses 1 4)"), "{out}");
        let s11 = format::print(&builtin_example(11).unwrap());
        let out = check(&s11).unwrap();
        assert_eq!(out.matches(": true").count(), 6, "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(check("order finite 5\narc 0 1").unwrap_err().exit_code(), 2);
        assert_eq!(flip(PENTAGON, "1 3").unwrap_err().exit_code(), 2);
        assert_eq!(enumerate(3, false).unwrap_err().exit_code(), 2);
        assert_eq!(CommandError::from(Error::NotLaurent).exit_code(), 1);
    }
}
