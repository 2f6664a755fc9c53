//! SVG and ASCII pictures of path diagrams.
//!
//! Both renderers cover the rows spanned by the diagram (and always level 0).
//! Row `j` is the strip between levels `j` and `j + 1`; its count is printed
//! in the right margin.

use std::fmt::Write;

use osweep::{ArrowColor, PathDiagram};

/// Pixels per lattice unit in the SVG output.
const SCALE: i64 = 40;
/// Lattice units reserved on each side for labels.
const MARGIN: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

impl Format {
    /// Picks the format from an output file name: `.svg` or `.txt`.
    pub fn from_file_name(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        if lower.ends_with(".svg") {
            Some(Format::Svg)
        } else if lower.ends_with(".txt") {
            Some(Format::Ascii)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Svg => "svg",
            Format::Ascii => "ascii",
        }
    }
}

pub fn render(diagram: &PathDiagram, format: Format) -> String {
    match format {
        Format::Svg => svg(diagram),
        Format::Ascii => ascii(diagram),
    }
}

/// Lowest and highest level touched by the diagram, with level 0 included.
fn level_range(d: &PathDiagram) -> (i64, i64) {
    (d.min_level().unwrap_or(0).min(0), d.max_level().unwrap_or(0).max(0))
}

fn color_name(c: ArrowColor) -> &'static str {
    match c {
        ArrowColor::Red => "red",
        ArrowColor::Blue => "blue",
        ArrowColor::Purple => "purple",
    }
}

/// SVG with a unit grid drawn in lattice coordinates. The grid and arrows sit
/// in a group flipped with `scale(1,-1)`, so a point at level `y` is written
/// with coordinate `y`. Labels are placed outside the flipped group.
pub fn svg(d: &PathDiagram) -> String {
    let (lo, hi) = level_range(d);
    let n = d.len() as i64;
    let width = n + 2 * MARGIN;
    let height = hi - lo + 2;
    let (min_x, min_y) = (-MARGIN, -(hi + 1));
    let counts = d.row_counts();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{min_x} {min_y} {width} {height}">"#,
        width * SCALE,
        height * SCALE
    );
    let _ = writeln!(
        s,
        r#"<rect x="{min_x}" y="{min_y}" width="{width}" height="{height}" fill="white"/>"#
    );
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    s.push_str("<g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.02\">\n");
    for x in 0..=n {
        let _ = writeln!(s, r#"<line x1="{x}" y1="{lo}" x2="{x}" y2="{hi}"/>"#);
    }
    for y in lo..=hi {
        let _ = writeln!(s, r#"<line x1="0" y1="{y}" x2="{n}" y2="{y}"/>"#);
    }
    s.push_str("</g>\n");
    s.push_str("<g class=\"arrows\" stroke-width=\"0.08\" stroke-linecap=\"round\">\n");
    for i in 0..d.len() {
        let color = color_name(d.color(i));
        let (r, e) = (d.ranks()[i], d.end_rank(i));
        let _ = writeln!(
            s,
            r#"<line class="arrow {color}" data-column="{}" x1="{i}" y1="{r}" x2="{}" y2="{e}" stroke="{color}"/>"#,
            i + 1,
            i + 1
        );
    }
    s.push_str("</g>\n</g>\n");
    s.push_str("<g class=\"labels\" font-family=\"monospace\" font-size=\"0.4\">\n");
    for y in lo..=hi {
        let _ = writeln!(
            s,
            r#"<text class="level" data-level="{y}" x="-0.3" y="{}" text-anchor="end" dominant-baseline="middle">{y}</text>"#,
            -y
        );
    }
    for j in lo..hi {
        let c = counts.count(j);
        let _ = writeln!(
            s,
            r#"<text class="row-count" data-row="{j}" x="{n}.3" y="{}" text-anchor="start" dominant-baseline="middle">{c}</text>"#,
            half(-(2 * j + 1))
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

/// `twice / 2` written exactly.
fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        let sign = if twice < 0 { "-" } else { "" };
        format!("{sign}{}.5", twice.unsigned_abs() / 2)
    }
}

/// One text line per row, top row first: level label, one cell per column
/// (`R` up, `B` down, `P` a level arrow resting on the row's floor, `.`
/// empty), then the row count.
pub fn ascii(d: &PathDiagram) -> String {
    let (lo, hi) = level_range(d);
    let counts = d.row_counts();
    let label_w = (lo..hi).map(|j| j.to_string().len()).max().unwrap_or(1);
    let count_w = (lo..hi).map(|j| counts.count(j).to_string().len()).max().unwrap_or(1);
    let mut s = String::new();
    for j in (lo..hi).rev() {
        let cells: String = (0..d.len())
            .map(|i| {
                let (r, e) = (d.ranks()[i], d.end_rank(i));
                match d.color(i) {
                    ArrowColor::Red if r <= j && j < e => 'R',
                    ArrowColor::Blue if e <= j && j < r => 'B',
                    ArrowColor::Purple if r == j => 'P',
                    _ => '.',
                }
            })
            .collect();
        let _ = writeln!(s, "{j:>label_w$} |{cells}| {:>count_w$}", counts.count(j));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_from_extension() {
        assert_eq!(Format::from_file_name("a.svg"), Some(Format::Svg));
        assert_eq!(Format::from_file_name("A.TXT"), Some(Format::Ascii));
        assert_eq!(Format::from_file_name("a.png"), None);
    }

    #[test]
    fn ascii_single_peak() {
        let d = PathDiagram::new(vec![1, -1], vec![0, 1]).unwrap();
        assert_eq!(ascii(&d), "0 |RB| 0\n");
    }

    #[test]
    fn ascii_marks_level_arrows() {
        let d = PathDiagram::new(vec![1, 0, -1], vec![0, 1, 1]).unwrap();
        assert_eq!(ascii(&d), "0 |R.B| 0\n");
        let d = PathDiagram::new(vec![2, 0, -2], vec![0, 1, 2]).unwrap();
        assert_eq!(ascii(&d), "1 |RPB| 0\n0 |R.B| 0\n");
    }

    #[test]
    fn half_units() {
        assert_eq!(half(-1), "-0.5");
        assert_eq!(half(-3), "-1.5");
        assert_eq!(half(4), "2");
        assert_eq!(half(1), "0.5");
    }

    #[test]
    fn svg_is_deterministic() {
        let d = PathDiagram::new(vec![2, 0, -1, -1], vec![0, 1, 2, 1]).unwrap();
        assert_eq!(svg(&d), svg(&d.clone()));
        assert_eq!(svg(&d).matches("class=\"arrow ").count(), 4);
    }
}
