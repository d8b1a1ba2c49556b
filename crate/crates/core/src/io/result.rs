//! Result files: a solver's labels, the lattice it used and its report,
//! tied to an instance by hash.
//!
//! ```text
//! schema_version 1
//! instance_sha256 <64 hex digits>
//! method weighted3
//! params grid=256 vertices=true centers=true
//! k 3
//! lattice tri <side> three
//! offset <x> <y>
//! union_area <A>
//! selected_area <A_C>
//! ratio <A_C/A>
//! guarantee <bound>
//! lattice_points_hit <count>
//! cell_accounting <sum>
//! labels <n>
//! <colour or -> (one line per disk)
//! ```

use super::instance::{parse_f64, Lines};
use super::{fmt_f64, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::lattice::{
    AnyLattice, Lattice, LoeschianColouring, SquareLattice, TriColouring, TriLattice,
};
use crate::selector::{Assignment, CoverageReport, Method};

#[derive(Debug, Clone, PartialEq)]
pub struct ResultFile {
    pub instance_sha256: String,
    /// Free-form solver parameters, e.g. `grid=256`; `-` when none.
    pub params: String,
    pub assignment: Assignment,
    pub report: CoverageReport,
}

pub fn serialize_result(r: &ResultFile) -> String {
    let a = &r.assignment;
    let rep = &r.report;
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        out.push_str(k);
        out.push(' ');
        out.push_str(&v);
        out.push('\n');
    };
    line("schema_version", SCHEMA_VERSION.to_string());
    line("instance_sha256", r.instance_sha256.clone());
    line("method", a.method.to_string());
    line(
        "params",
        if r.params.is_empty() {
            "-".into()
        } else {
            r.params.clone()
        },
    );
    line("k", a.k.to_string());
    line("lattice", lattice_descr(&a.lattice));
    line(
        "offset",
        format!("{} {}", fmt_f64(rep.offset.x), fmt_f64(rep.offset.y)),
    );
    line("union_area", fmt_f64(rep.union_area));
    line("selected_area", fmt_f64(rep.selected_area));
    line("ratio", fmt_f64(rep.ratio));
    line("guarantee", fmt_f64(rep.guarantee));
    line("lattice_points_hit", rep.lattice_points_hit.to_string());
    line("cell_accounting", fmt_f64(rep.cell_accounting));
    line("labels", a.labels.len().to_string());
    for l in &a.labels {
        match l {
            Some(c) => out.push_str(&c.to_string()),
            None => out.push('-'),
        }
        out.push('\n');
    }
    out
}

fn lattice_descr(l: &AnyLattice) -> String {
    match l {
        AnyLattice::Tri(t) => {
            let colouring = match t.colouring() {
                TriColouring::Mono => "mono".to_string(),
                TriColouring::Three => "three".to_string(),
                TriColouring::Loeschian(c) => format!("loeschian {}", c.k()),
            };
            format!("tri {} {colouring}", fmt_f64(t.side()))
        }
        AnyLattice::Square(s) => format!("square {}", fmt_f64(s.side())),
    }
}

pub fn parse_result(text: &str) -> Result<ResultFile> {
    let mut lines = Lines::new(text);
    lines.schema()?;
    let (no, hash) = lines.key("instance_sha256")?;
    if hash.len() != 64 || !hash.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(Error::parse(no, "instance_sha256 must be 64 hex digits"));
    }
    let (no, m) = lines.key("method")?;
    let method: Method = m
        .parse()
        .map_err(|e: Error| Error::parse(no, e.to_string()))?;
    let (_, params) = lines.key("params")?;
    let k = lines.key_usize("k")?;
    let (lat_no, lat) = lines.key("lattice")?;
    let (no, off) = lines.key("offset")?;
    let offset = match off.split_whitespace().collect::<Vec<_>>()[..] {
        [x, y] => Point::new(parse_f64(no, x)?, parse_f64(no, y)?),
        _ => return Err(Error::parse(no, "offset needs two coordinates")),
    };
    let lattice = parse_lattice(lat_no, lat, offset)?;
    let union_area = lines.key_f64("union_area")?;
    let selected_area = lines.key_f64("selected_area")?;
    let ratio = lines.key_f64("ratio")?;
    let guarantee = lines.key_f64("guarantee")?;
    let lattice_points_hit = lines.key_usize("lattice_points_hit")?;
    let cell_accounting = lines.key_f64("cell_accounting")?;
    let n = lines.key_usize("labels")?;
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, l) = lines.next_line("a label")?;
        labels.push(if l == "-" {
            None
        } else {
            Some(l.parse().map_err(|_| {
                Error::parse(no, format!("label must be a colour or '-', got {l:?}"))
            })?)
        });
    }
    lines.finish()?;
    Ok(ResultFile {
        instance_sha256: hash.to_string(),
        params: if params == "-" {
            String::new()
        } else {
            params.to_string()
        },
        assignment: Assignment {
            labels,
            k,
            method,
            lattice,
        },
        report: CoverageReport {
            union_area,
            selected_area,
            ratio,
            guarantee,
            lattice_points_hit,
            cell_accounting,
            offset,
        },
    })
}

fn parse_lattice(no: usize, s: &str, offset: Point) -> Result<AnyLattice> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    let wrap = |e: Error| Error::parse(no, e.to_string());
    match parts[..] {
        ["square", side] => Ok(AnyLattice::Square(
            SquareLattice::new(parse_f64(no, side)?, offset).map_err(wrap)?,
        )),
        ["tri", side, ref rest @ ..] => {
            let colouring = match rest {
                ["mono"] => TriColouring::Mono,
                ["three"] => TriColouring::Three,
                ["loeschian", k] => {
                    let k: i64 = k
                        .parse()
                        .map_err(|_| Error::parse(no, "loeschian needs an integer k"))?;
                    TriColouring::Loeschian(LoeschianColouring::new(k).map_err(wrap)?)
                }
                _ => return Err(Error::parse(no, format!("unknown colouring in {s:?}"))),
            };
            Ok(AnyLattice::Tri(
                TriLattice::new(parse_f64(no, side)?, offset, colouring).map_err(wrap)?,
            ))
        }
        _ => Err(Error::parse(no, format!("unknown lattice {s:?}"))),
    }
}
