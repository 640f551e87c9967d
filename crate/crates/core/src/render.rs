//! Link-pattern drawings: SVG with semicircular arcs and a plain-text
//! bracket diagram. Both are deterministic byte for byte.

use std::fmt::Write as _;

use crate::linkpattern::{Arc, LinkPattern};

const SPACING: usize = 40;
const MARGIN: usize = 20;
const LABEL_GAP: usize = 18;
const DOT_RADIUS: usize = 3;

/// An SVG picture: points on a baseline, an upper semicircle per arc and
/// point labels beneath.
pub fn svg(sigma: &LinkPattern) -> String {
    let n = sigma.n();
    let radius = |a: &Arc| (a.right - a.left) * SPACING / 2;
    let tallest = sigma.arcs().iter().map(radius).max().unwrap_or(0);
    let width = 2 * MARGIN + SPACING * n.saturating_sub(1);
    let base = MARGIN + tallest;
    let height = base + LABEL_GAP + MARGIN;
    let x = |p: usize| MARGIN + SPACING * (p - 1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>{sigma}</title>");
    let _ = writeln!(out, r#"  <line x1="{MARGIN}" y1="{base}" x2="{}" y2="{base}" stroke="lightgray"/>"#, x(n.max(1)));
    for a in sigma.arcs() {
        let r = radius(a);
        let _ = writeln!(
            out,
            r#"  <path class="arc" d="M {} {base} A {r} {r} 0 0 1 {} {base}" fill="none" stroke="black"/>"#,
            x(a.left),
            x(a.right)
        );
    }
    for p in 1..=n {
        let _ = writeln!(
            out,
            r#"  <circle class="point" cx="{}" cy="{base}" r="{DOT_RADIUS}"/>"#,
            x(p)
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-family="monospace" font-size="12" text-anchor="middle">{p}</text>"#,
            x(p),
            base + LABEL_GAP
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Arcs stacked in rows above a bracket row (`(` left end, `)` right end,
/// `.` fixed point) and a row of labels. Each point takes three columns.
///
/// ```text
///    +--+  +--+
///  . (  )  (  ) .
///  1 2  3  4  5 6
/// ```
pub fn ascii(sigma: &LinkPattern) -> String {
    let n = sigma.n();
    let col = |p: usize| 3 * (p - 1) + 1;
    let width = 3 * n;

    // lowest row whose arcs do not overlap, narrow arcs first
    let mut order: Vec<Arc> = sigma.arcs().to_vec();
    order.sort_by_key(|a| (a.right - a.left, a.left));
    let mut rows: Vec<Vec<Arc>> = Vec::new();
    let mut placed: Vec<(Arc, usize)> = Vec::new();
    for a in order {
        let clear = |row: &Vec<Arc>| row.iter().all(|b| b.right < a.left || a.right < b.left);
        let r = match rows.iter().position(clear) {
            Some(r) => r,
            None => {
                rows.push(Vec::new());
                rows.len() - 1
            }
        };
        rows[r].push(a);
        placed.push((a, r));
    }

    let mut grid = vec![vec![b' '; width]; rows.len()];
    for &(a, r) in &placed {
        grid[r][col(a.left)..=col(a.right)].fill(b'-');
        grid[r][col(a.left)] = b'+';
        grid[r][col(a.right)] = b'+';
    }
    for &(a, r) in &placed {
        for row in grid.iter_mut().take(r) {
            row[col(a.left)] = b'|';
            row[col(a.right)] = b'|';
        }
    }

    let mates = sigma.mates();
    let mut brackets = vec![b' '; width];
    let mut labels = vec![b' '; width + 2];
    for p in 1..=n {
        brackets[col(p)] = match mates[p] {
            m if m > p => b'(',
            m if m < p => b')',
            _ => b'.',
        };
        let label = p.to_string();
        let end = col(p) + 1;
        labels[end - label.len()..end].copy_from_slice(label.as_bytes());
    }

    let mut out = String::new();
    let line = |bytes: &[u8]| String::from_utf8_lossy(bytes).trim_end().to_string();
    for row in grid.iter().rev() {
        out.push_str(&line(row));
        out.push('\n');
    }
    out.push_str(&line(&brackets));
    out.push('\n');
    out.push_str(&line(&labels));
    out.push('\n');
    out
}
