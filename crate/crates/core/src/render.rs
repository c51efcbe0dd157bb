//! Text and SVG pictures of Brauer diagrams. Both depend only on the
//! matching, not on the δ power.

use std::fmt::Write as _;

use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};

/// Largest `t` accepted by [`render_ascii`].
pub const MAX_ASCII_T: usize = 30;

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

struct Grid {
    cells: Vec<Vec<u8>>,
    dots: Vec<(usize, usize)>,
}

impl Grid {
    fn new(width: usize, height: usize) -> Self {
        Grid {
            cells: vec![vec![0; width]; height],
            dots: Vec::new(),
        }
    }

    fn vline(&mut self, x: usize, from: usize, to: usize) {
        let (a, b) = (from.min(to), from.max(to));
        for y in a..=b {
            if y > a {
                self.cells[y][x] |= UP;
            }
            if y < b {
                self.cells[y][x] |= DOWN;
            }
        }
    }

    fn hline(&mut self, y: usize, from: usize, to: usize) {
        let (a, b) = (from.min(to), from.max(to));
        for x in a..=b {
            if x > a {
                self.cells[y][x] |= LEFT;
            }
            if x < b {
                self.cells[y][x] |= RIGHT;
            }
        }
    }

    fn draw(&self) -> String {
        let mut rows: Vec<Vec<char>> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&c| match c {
                        0 => ' ',
                        c if c == UP | DOWN => '│',
                        c if c == LEFT | RIGHT => '─',
                        c if c == DOWN | RIGHT => '╭',
                        c if c == DOWN | LEFT => '╮',
                        c if c == UP | RIGHT => '╰',
                        c if c == UP | LEFT => '╯',
                        c if c == UP | DOWN | LEFT | RIGHT => '┼',
                        c if c & (UP | DOWN) != 0 => '│',
                        _ => '─',
                    })
                    .collect()
            })
            .collect();
        for &(y, x) in &self.dots {
            rows[y][x] = '●';
        }
        let mut out = String::new();
        for row in rows {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Box-drawing picture: arcs for top cups above the top dot row, arcs for
/// bottom cups below the bottom dot row, and through strands in between.
/// A through strand that changes column is routed right to its own jog
/// column on an upper lane and back left on a lower lane.
pub fn render_ascii(d: &BrauerDiagram) -> Result<String> {
    if d.t() > MAX_ASCII_T {
        return Err(Error::UnsupportedSize(format!(
            "ascii rendering supports t <= {MAX_ASCII_T}, got t = {}",
            d.t()
        )));
    }
    let n = d.strands();
    let col = |pos: usize| 2 * (pos - 1);

    let by_span = |mut cups: Vec<(usize, usize)>| {
        cups.sort_by_key(|&(i, j)| (std::cmp::Reverse(j - i), i));
        cups
    };
    let top = by_span(d.top_cups());
    let bottom = by_span(d.bottom_cups());
    let through = d.through_strands();
    let jogging: Vec<(usize, usize)> = through.iter().copied().filter(|&(a, b)| a != b).collect();

    let middle = (2 * jogging.len()).max(1);
    let top_row = top.len();
    let bottom_row = top_row + middle + 1;
    let height = bottom_row + bottom.len() + 1;
    let width = 2 * n - 1 + 2 * jogging.len();
    let mut g = Grid::new(width, height);

    for x in 0..n {
        g.dots.push((top_row, 2 * x));
        g.dots.push((bottom_row, 2 * x));
    }
    for (lane, &(i, j)) in top.iter().enumerate() {
        g.vline(col(i), lane, top_row);
        g.vline(col(j), lane, top_row);
        g.hline(lane, col(i), col(j));
    }
    for (lane, &(i, j)) in bottom.iter().enumerate() {
        let y = height - 1 - lane;
        g.vline(col(i), bottom_row, y);
        g.vline(col(j), bottom_row, y);
        g.hline(y, col(i), col(j));
    }
    for &(a, _) in through.iter().filter(|&&(a, b)| a == b) {
        g.vline(col(a), top_row, bottom_row);
    }
    let lanes = jogging.len();
    for (q, &(a, b)) in jogging.iter().enumerate() {
        let upper = top_row + 1 + q;
        let lower = top_row + 1 + lanes + q;
        let jog = 2 * n + 2 * q;
        g.vline(col(a), top_row, upper);
        g.hline(upper, col(a), jog);
        g.vline(jog, upper, lower);
        g.hline(lower, col(b), jog);
        g.vline(col(b), lower, bottom_row);
    }
    Ok(g.draw())
}

/// SVG picture with strands drawn as cubic Bézier curves.
pub fn render_svg(d: &BrauerDiagram) -> String {
    const GAP: usize = 40;
    const MARGIN: usize = 30;
    let n = d.strands();
    let height = GAP * 3;
    let (y_top, y_bottom) = (MARGIN, MARGIN + height);
    let x = |pos: usize| MARGIN + GAP * (pos - 1);
    let width = 2 * MARGIN + GAP * (n - 1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{}" viewBox="0 0 {width} {}">"#,
        height + 2 * MARGIN,
        height + 2 * MARGIN
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    let depth = |i: usize, j: usize| (GAP / 2 + 10 * (j - i)).min(height / 2 - 5);
    for (i, j) in d.top_cups() {
        let h = y_top + depth(i, j);
        let _ = writeln!(
            out,
            r#"<path d="M {} {y_top} C {} {h} {} {h} {} {y_top}"/>"#,
            x(i),
            x(i),
            x(j),
            x(j)
        );
    }
    for (i, j) in d.bottom_cups() {
        let h = y_bottom - depth(i, j);
        let _ = writeln!(
            out,
            r#"<path d="M {} {y_bottom} C {} {h} {} {h} {} {y_bottom}"/>"#,
            x(i),
            x(i),
            x(j),
            x(j)
        );
    }
    let mid = (y_top + y_bottom) / 2;
    for (a, b) in d.through_strands() {
        let _ = writeln!(
            out,
            r#"<path d="M {} {y_top} C {} {mid} {} {mid} {} {y_bottom}"/>"#,
            x(a),
            x(a),
            x(b),
            x(b)
        );
    }
    let _ = writeln!(out, "</g>");
    for pos in 1..=n {
        for y in [y_top, y_bottom] {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{y}" r="4" fill="black"/>"#,
                x(pos)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
