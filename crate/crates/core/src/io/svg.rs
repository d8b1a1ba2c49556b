//! Deterministic SVG pictures of an instance, a selection and its lattice.

use std::fmt::Write;

use crate::lattice::{AnyLattice, Lattice};
use crate::selector::Assignment;
use crate::union_area::DiskSet;

const SCALE: f64 = 40.0;
const MARGIN: f64 = 1.0;
const UNSELECTED: &str = "#bbbbbb";
const PALETTE: [&str; 3] = ["#e41a1c", "#377eb8", "#4daf4a"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgOptions {
    pub lattice_points: bool,
    /// Voronoi cells of the lattice points in view.
    pub cells: bool,
}

pub fn colour_fill(colour: usize, k: usize) -> String {
    if k <= PALETTE.len() {
        PALETTE[colour % PALETTE.len()].to_string()
    } else {
        format!("hsl({:.1},70%,50%)", 360.0 * colour as f64 / k as f64)
    }
}

/// Disks are grey unless selected, then filled by colour. The lattice
/// layers draw `lattice`, or the assignment's lattice when `lattice` is
/// `None`.
pub fn render_svg(
    disks: &DiskSet,
    assignment: Option<&Assignment>,
    lattice: Option<&AnyLattice>,
    opts: &SvgOptions,
) -> String {
    let Some(bbox) = disks.bbox() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"10\" height=\"10\" viewBox=\"0 0 10 10\"></svg>\n"
            .to_string();
    };
    let view = bbox.expanded(MARGIN);
    let (w, h) = (view.width() * SCALE, view.height() * SCALE);
    let px = |x: f64| (x - view.min.x) * SCALE;
    let py = |y: f64| (view.max.y - y) * SCALE;

    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.6}\" height=\"{h:.6}\" viewBox=\"0 0 {w:.6} {h:.6}\">"
    )
    .unwrap();
    writeln!(
        s,
        "<rect width=\"{w:.6}\" height=\"{h:.6}\" fill=\"white\"/>"
    )
    .unwrap();

    let lattice = lattice.or(assignment.map(|a| &a.lattice));
    if let (Some(l), true) = (lattice, opts.cells) {
        s.push_str("<g id=\"cells\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\">\n");
        for p in l.points_in_box(&view.expanded(l.side())) {
            let pts: Vec<String> = l
                .voronoi_cell(p.i, p.j)
                .vertices()
                .iter()
                .map(|v| format!("{:.6},{:.6}", px(v.x), py(v.y)))
                .collect();
            writeln!(s, "<polygon points=\"{}\"/>", pts.join(" ")).unwrap();
        }
        s.push_str("</g>\n");
    }

    s.push_str("<g id=\"disks\" stroke=\"black\" stroke-width=\"1\" fill-opacity=\"0.5\">\n");
    let k = assignment.map_or(1, |a| a.k);
    for (i, c) in disks.circles().enumerate() {
        let fill = match assignment.and_then(|a| a.labels.get(i).copied().flatten()) {
            Some(col) => colour_fill(col, k),
            None => UNSELECTED.to_string(),
        };
        writeln!(
            s,
            "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"{fill}\"/>",
            px(c.center.x),
            py(c.center.y),
            c.radius * SCALE
        )
        .unwrap();
    }
    s.push_str("</g>\n");

    if let (Some(l), true) = (lattice, opts.lattice_points) {
        s.push_str("<g id=\"lattice\" stroke=\"none\">\n");
        for p in l.points_in_box(&view) {
            writeln!(
                s,
                "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"3\" fill=\"{}\"/>",
                px(p.position.x),
                py(p.position.y),
                colour_fill(p.colour, l.colour_count())
            )
            .unwrap();
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::selector::solve_basic_3colour;

    fn group<'a>(svg: &'a str, id: &str) -> &'a str {
        let start = svg.find(&format!("<g id=\"{id}\"")).expect("group present");
        let end = start + svg[start..].find("</g>").unwrap();
        &svg[start..end]
    }

    #[test]
    fn empty_instance_canvas() {
        let svg = render_svg(&DiskSet::empty(), None, None, &SvgOptions::default());
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("width=\"10\""));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn structure_and_determinism() {
        let d = DiskSet::unit(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.2),
            Point::new(0.4, 1.1),
        ])
        .unwrap();
        let (a, _) = solve_basic_3colour(&d).unwrap();
        let opts = SvgOptions {
            lattice_points: true,
            cells: true,
        };
        let svg = render_svg(&d, Some(&a), None, &opts);
        assert_eq!(svg, render_svg(&d, Some(&a), None, &opts));
        assert_eq!(group(&svg, "disks").matches("<circle").count(), 3);
        let coloured = PALETTE
            .iter()
            .map(|c| group(&svg, "disks").matches(c).count())
            .sum::<usize>();
        assert_eq!(coloured, a.selected_count());
        assert_eq!(
            group(&svg, "disks").matches(UNSELECTED).count(),
            3 - a.selected_count()
        );
        assert!(group(&svg, "lattice").matches("<circle").count() >= 1);
        assert!(group(&svg, "cells").matches("<polygon").count() >= 1);
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn optional_layers_absent() {
        let d = DiskSet::unit(vec![Point::new(0.0, 0.0)]).unwrap();
        let svg = render_svg(&d, None, None, &SvgOptions::default());
        assert!(!svg.contains("id=\"lattice\""));
        assert!(!svg.contains("id=\"cells\""));
        assert!(svg.contains(UNSELECTED));
    }

    #[test]
    fn many_colours_use_hues() {
        assert_eq!(colour_fill(1, 3), "#377eb8");
        assert_eq!(colour_fill(2, 12), "hsl(60.0,70%,50%)");
    }
}
