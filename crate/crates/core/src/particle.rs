//! A particle bouncing diagonally in the lattice box `[1, 2m] × [0, 2k−1]`.
//!
//! The particle starts at `(1, 2k−1)` heading right and down. Floor and
//! ceiling act as mirrors half a unit outside the box, so a step that would
//! leave the row range keeps `y` and flips the vertical direction. At a
//! side wall the particle spends one step moving vertically (with the same
//! mirror rule) and then reverses horizontally. It stops on reaching one of
//! the four corners.
//!
//! Unfolding replaces each wall reversal by continuing to the right, which
//! turns the trajectory into the graph of a zig-zag of period `4k`.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{invalid, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoxSpec {
    m: usize,
    k: usize,
}

impl BoxSpec {
    /// Requires `1 < 2k <= m`.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if k < 1 || 2 * k > m {
            return Err(invalid(format!(
                "box needs 1 < 2k <= m, got m = {m}, k = {k}"
            )));
        }
        Ok(BoxSpec { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        2 * self.m
    }

    /// Largest row index, `2k − 1`.
    pub fn top(&self) -> usize {
        2 * self.k - 1
    }

    pub fn lcm(&self) -> usize {
        self.k.lcm(&self.m)
    }

    /// Every box with `m <= max_m`, ordered by `m` then `k`.
    pub fn all_up_to(max_m: usize) -> Vec<BoxSpec> {
        (2..=max_m)
            .flat_map(|m| (1..=m / 2).map(move |k| BoxSpec { m, k }))
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ParticleState {
    pub x: usize,
    pub y: usize,
    pub dx: i8,
    pub dy: i8,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StopPoint {
    /// `(1, 0)`
    BottomLeft,
    /// `(2m, 0)`
    BottomRight,
    /// `(1, 2k−1)`
    TopLeft,
    /// `(2m, 2k−1)`
    TopRight,
}

impl StopPoint {
    pub fn coords(&self, spec: &BoxSpec) -> (usize, usize) {
        match self {
            StopPoint::BottomLeft => (1, 0),
            StopPoint::BottomRight => (spec.width(), 0),
            StopPoint::TopLeft => (1, spec.top()),
            StopPoint::TopRight => (spec.width(), spec.top()),
        }
    }

    fn at(spec: &BoxSpec, x: usize, y: usize) -> Option<StopPoint> {
        let left = x == 1;
        let right = x == spec.width();
        let bottom = y == 0;
        let top = y == spec.top();
        match (left, right, bottom, top) {
            (true, _, true, _) => Some(StopPoint::BottomLeft),
            (true, _, _, true) => Some(StopPoint::TopLeft),
            (_, true, true, _) => Some(StopPoint::BottomRight),
            (_, true, _, true) => Some(StopPoint::TopRight),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Simulation {
    pub stop: StopPoint,
    /// Every visited state, starting state included.
    pub trace: Vec<ParticleState>,
}

impl Simulation {
    pub fn steps(&self) -> usize {
        self.trace.len() - 1
    }
}

fn step(spec: &BoxSpec, s: ParticleState) -> ParticleState {
    let ny = s.y as i64 + s.dy as i64;
    let (y, dy) = if ny < 0 || ny > spec.top() as i64 {
        (s.y, -s.dy)
    } else {
        (ny as usize, s.dy)
    };
    let at_wall = (s.dx > 0 && s.x == spec.width()) || (s.dx < 0 && s.x == 1);
    if at_wall {
        ParticleState {
            x: s.x,
            y,
            dx: -s.dx,
            dy,
        }
    } else {
        let x = (s.x as i64 + s.dx as i64) as usize;
        ParticleState { x, y, dx: s.dx, dy }
    }
}

pub fn simulate(spec: &BoxSpec) -> Simulation {
    let mut s = ParticleState {
        x: 1,
        y: spec.top(),
        dx: 1,
        dy: -1,
    };
    let mut trace = vec![s];
    let bound = 4 * spec.k * spec.lcm();
    for _ in 0..bound {
        s = step(spec, s);
        trace.push(s);
        if let Some(stop) = StopPoint::at(spec, s.x, s.y) {
            return Simulation { stop, trace };
        }
    }
    unreachable!(
        "particle in box m = {}, k = {} did not stop within {bound} steps",
        spec.m, spec.k
    )
}

/// Stop point from the parities of `l/m` and `l/k`, `l = lcm(k, m)`.
pub fn closed_form(spec: &BoxSpec) -> StopPoint {
    let l = spec.lcm();
    match ((l / spec.m).is_even(), (l / spec.k).is_even()) {
        (true, _) => StopPoint::BottomLeft,
        (false, false) => StopPoint::BottomRight,
        (false, true) => StopPoint::TopRight,
    }
}

/// Unfolded coordinates: horizontal segment `s` of the trajectory is placed
/// on `[2sm + 1, 2(s+1)m]`, mirrored when it runs leftwards.
pub fn unfold(spec: &BoxSpec, trace: &[ParticleState]) -> Vec<(usize, usize)> {
    let w = spec.width();
    let mut segment = 0;
    let mut prev_dx = trace.first().map_or(1, |s| s.dx);
    trace
        .iter()
        .map(|s| {
            if s.dx != prev_dx {
                segment += 1;
                prev_dx = s.dx;
            }
            let local = if s.dx > 0 { s.x } else { w + 1 - s.x };
            (segment * w + local, s.y)
        })
        .collect()
}

/// The ξ-relation whose right-hand side matches the stop point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum XiForm {
    /// `e0 [r1 r0 …]_{2k−1} e0 = δ^ξ [r1 r0 …]_{2m−1} e0`
    LongWordE0,
    /// `e0 [r1 r0 …]_{2k−1} e0 = δ^ξ e0`
    E0,
    /// `e0 [r1 r0 …]_{2k−1} e0 = δ^ξ e0 e1 e0`
    E0E1E0,
}

impl XiForm {
    pub fn tag(&self) -> &'static str {
        match self {
            XiForm::LongWordE0 => "0.1.13",
            XiForm::E0 => "0.1.14",
            XiForm::E0E1E0 => "0.1.15",
        }
    }

    pub const ALL: [XiForm; 3] = [XiForm::LongWordE0, XiForm::E0, XiForm::E0E1E0];
}

pub fn classify_relation(spec: &BoxSpec) -> XiForm {
    match simulate(spec).stop {
        StopPoint::BottomRight => XiForm::LongWordE0,
        StopPoint::BottomLeft => XiForm::E0,
        StopPoint::TopRight => XiForm::E0E1E0,
        StopPoint::TopLeft => unreachable!("the particle never stops at (1, 2k-1)"),
    }
}

/// Trace as text, one `x y` pair per line.
pub fn trace_text(trace: &[ParticleState]) -> String {
    trace.iter().fold(String::new(), |mut out, s| {
        let _ = writeln!(out, "{} {}", s.x, s.y);
        out
    })
}

const SVG_SCALE: usize = 20;

/// Folded path in the box above the unfolded path, both as polylines.
/// Coordinates are scaled by 20 with the origin at the top left.
pub fn trace_svg(spec: &BoxSpec, sim: &Simulation) -> String {
    let unfolded = unfold(spec, &sim.trace);
    let folded: Vec<(usize, usize)> = sim.trace.iter().map(|s| (s.x, s.y)).collect();
    let max_x = unfolded.last().map_or(spec.width(), |p| p.0);
    let band = (spec.top() + 2) * SVG_SCALE;
    let width = (max_x + 1) * SVG_SCALE;
    let height = 2 * band;

    let points = |path: &[(usize, usize)], y0: usize| -> String {
        path.iter()
            .map(|&(x, y)| {
                format!(
                    "{},{}",
                    x * SVG_SCALE,
                    y0 + (spec.top() - y + 1) * SVG_SCALE
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="gray"/>"#,
        SVG_SCALE,
        SVG_SCALE,
        (spec.width() - 1) * SVG_SCALE,
        spec.top() * SVG_SCALE
    );
    let _ = writeln!(
        out,
        r#"  <polyline class="folded" fill="none" stroke="black" points="{}"/>"#,
        points(&folded, 0)
    );
    let _ = writeln!(
        out,
        r#"  <polyline class="unfolded" fill="none" stroke="blue" points="{}"/>"#,
        points(&unfolded, band)
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, k: usize) -> BoxSpec {
        BoxSpec::new(m, k).unwrap()
    }

    #[test]
    fn box_validation() {
        assert!(BoxSpec::new(3, 2).is_err());
        assert!(BoxSpec::new(4, 0).is_err());
        assert!(BoxSpec::new(2, 1).is_ok());
        assert_eq!(BoxSpec::all_up_to(40).len(), 400);
    }

    #[test]
    fn simulated_stops() {
        assert_eq!(simulate(&spec(5, 2)).stop, StopPoint::BottomLeft);
        assert_eq!(simulate(&spec(3, 1)).stop, StopPoint::BottomRight);
        assert_eq!(simulate(&spec(4, 2)).stop, StopPoint::TopRight);
        assert_eq!(StopPoint::TopRight.coords(&spec(4, 2)), (8, 3));
        assert_eq!(StopPoint::BottomRight.coords(&spec(3, 1)), (6, 0));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(&spec(5, 2)), StopPoint::BottomLeft);
        assert_eq!(closed_form(&spec(3, 1)), StopPoint::BottomRight);
        assert_eq!(closed_form(&spec(4, 2)), StopPoint::TopRight);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_relation(&spec(5, 2)).tag(), "0.1.14");
        assert_eq!(classify_relation(&spec(3, 1)).tag(), "0.1.13");
        assert_eq!(classify_relation(&spec(4, 2)).tag(), "0.1.15");
    }

    #[test]
    fn m5_k2_trajectory() {
        // first leg: diagonal down from (1, 3), floor bounce at x = 5
        let sim = simulate(&spec(5, 2));
        let pts: Vec<(usize, usize)> = sim.trace.iter().take(12).map(|s| (s.x, s.y)).collect();
        assert_eq!(
            pts,
            vec![
                (1, 3),
                (2, 2),
                (3, 1),
                (4, 0),
                (5, 0),
                (6, 1),
                (7, 2),
                (8, 3),
                (9, 3),
                (10, 2),
                (10, 1),
                (9, 0)
            ]
        );
    }

    #[test]
    fn unfolded_path() {
        let s = spec(5, 2);
        let sim = simulate(&s);
        let path = unfold(&s, &sim.trace);
        assert_eq!(path.first(), Some(&(1, 3)));
        assert_eq!(path.last().unwrap().0, 20);
        assert!(path.windows(2).all(|w| w[1].0 == w[0].0 + 1));
    }

    #[test]
    fn sweep_matches_closed_form() {
        for s in BoxSpec::all_up_to(40) {
            let sim = simulate(&s);
            assert_eq!(sim.stop, closed_form(&s), "m = {}, k = {}", s.m, s.k);
            assert_ne!(sim.stop, StopPoint::TopLeft);
            assert_eq!(sim.steps(), 2 * s.lcm() - 1);
            assert!(sim.steps() <= 4 * s.k * s.lcm());
            let path = unfold(&s, &sim.trace);
            assert_eq!(path.last().unwrap().0 - path[0].0, 2 * s.lcm() - 1);
        }
    }

    #[test]
    fn text_and_svg() {
        let s = spec(3, 1);
        let sim = simulate(&s);
        let text = trace_text(&sim.trace);
        assert!(text.starts_with("1 1\n2 0\n"));
        assert_eq!(text.lines().count(), sim.trace.len());
        let svg = trace_svg(&s, &sim);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"class="unfolded""#));
    }
}
