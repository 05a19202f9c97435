//! Chord diagrams as standalone SVG.
//!
//! Points sit on a circle at their `circle_position`; member arcs are drawn
//! as chords. On infinity-gons only points and arcs with offsets in
//! `[-window, window]` are drawn and the legend says so. The output depends
//! only on the input, so it can be compared byte for byte.

use std::f64::consts::TAU;
use std::fmt::Write;

use cyclotri::{CyclicOrder, Point, Result, SymbolicArcSet};

use crate::format;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;
const LEGEND: f64 = 40.0;

/// Two decimals, with no negative zero.
fn num(x: f64) -> String {
    let r = (x * 100.0).round() / 100.0;
    format!("{:.2}", if r == 0.0 { 0.0 } else { r })
}

fn position(order: &CyclicOrder, p: Point, window: i64, radius: f64) -> Result<(f64, f64)> {
    let r = order.circle_position(p, window)?;
    let turn = *r.numer() as f64 / *r.denom() as f64;
    let angle = TAU * turn - TAU / 4.0;
    Ok((SIZE / 2.0 + radius * angle.cos(), SIZE / 2.0 + radius * angle.sin()))
}

fn points(order: &CyclicOrder, window: i64) -> Vec<Point> {
    match order {
        CyclicOrder::FiniteGon(n) => (0..*n as i64).map(Point::finite).collect(),
        CyclicOrder::ThreadGon(k) => (0..*k)
            .flat_map(|t| (-window..=window).map(move |e| Point::threaded(t, e)))
            .collect(),
    }
}

pub fn draw(set: &SymbolicArcSet, window: i64) -> Result<String> {
    let order = set.order();
    let pts = points(&order, window);
    let arcs = set.arcs_in_window(window)?;
    let height = SIZE + LEGEND;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = SIZE,
        h = height
    );
    let _ = writeln!(out, r#"  <rect width="{SIZE}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="lightgray"/>"#,
        c = SIZE / 2.0
    );
    let _ = writeln!(out, r#"  <g stroke-width="1.5" fill="none">"#);
    for p in &arcs {
        let (x1, y1) = position(&order, p.lo(), window, RADIUS)?;
        let (x2, y2) = position(&order, p.hi(), window, RADIUS)?;
        let colour = if set.explicit().contains(p) {
            "black"
        } else {
            "steelblue"
        };
        let _ = writeln!(
            out,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}"><title>{}</title></line>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            format::arc(order, p)
        );
    }
    out.push_str("  </g>\n");
    let labelled = pts.len() <= 48;
    let _ = writeln!(
        out,
        r#"  <g font-family="sans-serif" font-size="10" text-anchor="middle">"#
    );
    for &p in &pts {
        let (x, y) = position(&order, p, window, RADIUS)?;
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="2.5" fill="black"/>"#,
            num(x),
            num(y)
        );
        if labelled || p.offset == 0 {
            let (lx, ly) = position(&order, p, window, RADIUS + 14.0)?;
            let _ = writeln!(
                out,
                r#"    <text x="{}" y="{}" dominant-baseline="middle">{}</text>"#,
                num(lx),
                num(ly),
                format::point(order, p)
            );
        }
    }
    out.push_str("  </g>\n");
    let legend = match order {
        CyclicOrder::FiniteGon(n) => format!("{n}-gon, {} arcs", arcs.len()),
        CyclicOrder::ThreadGon(k) => {
            let cut = if set.is_explicit() { "" } else { ", families truncated" };
            format!(
                "{k} thread(s), offsets in [-{window}, {window}], {} arcs shown{cut}",
                arcs.len()
            )
        }
    };
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{legend}</text>"#,
        num(SIZE / 2.0),
        num(SIZE + LEGEND / 2.0)
    );
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclotri::constructions::builtin_example;

    #[test]
    fn deterministic_and_marked() {
        let s = builtin_example(10).unwrap();
        let a = draw(&s, 5).unwrap();
        assert_eq!(a, draw(&s, 5).unwrap());
        assert!(a.contains("families truncated"));
        assert_eq!(a.matches("<line").count(), s.arcs_in_window(5).unwrap().len());
        assert!(!a.contains("-0.00"));
    }
}
