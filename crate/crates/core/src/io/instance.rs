//! Instance files.
//!
//! ```text
//! schema_version 1
//! radius 1.0000000000000000e0
//! n 2
//! 0.0000000000000000e0 0.0000000000000000e0
//! 1.5000000000000000e0 -2.5000000000000000e-1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored when parsing.

use sha2::{Digest, Sha256};

use super::{fmt_f64, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::union_area::DiskSet;

pub fn serialize_instance(disks: &DiskSet) -> String {
    let mut out = format!(
        "schema_version {SCHEMA_VERSION}\nradius {}\nn {}\n",
        fmt_f64(disks.radius()),
        disks.len()
    );
    for c in disks.centers() {
        out.push_str(&fmt_f64(c.x));
        out.push(' ');
        out.push_str(&fmt_f64(c.y));
        out.push('\n');
    }
    out
}

pub fn parse_instance(text: &str) -> Result<DiskSet> {
    let mut lines = Lines::new(text);
    lines.schema()?;
    let radius = lines.key_f64("radius")?;
    let n = lines.key_usize("n")?;
    let mut centers = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines.next_line("a center line")?;
        let mut parts = line.split_whitespace();
        let mut coord = || -> Result<f64> {
            let tok = parts
                .next()
                .ok_or_else(|| Error::parse(no, "expected two coordinates"))?;
            parse_f64(no, tok)
        };
        let (x, y) = (coord()?, coord()?);
        if parts.next().is_some() {
            return Err(Error::parse(no, "expected exactly two coordinates"));
        }
        centers.push(Point::try_new(x, y).map_err(|e| Error::parse(no, e.to_string()))?);
    }
    lines.finish()?;
    DiskSet::new(radius, centers)
}

/// Hex SHA-256 of the canonical serialization.
pub fn instance_hash(disks: &DiskSet) -> String {
    Sha256::digest(serialize_instance(disks).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub(crate) fn parse_f64(line: usize, tok: &str) -> Result<f64> {
    let x: f64 = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("not a number: {tok:?}")))?;
    if !x.is_finite() {
        return Err(Error::parse(line, format!("not finite: {tok:?}")));
    }
    Ok(x)
}

/// Significant lines with 1-based line numbers.
pub(crate) struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    pub(crate) fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((no, l)) => {
                self.last = no;
                Ok((no, l))
            }
            None => Err(Error::parse(
                self.last + 1,
                format!("unexpected end of file, expected {what}"),
            )),
        }
    }

    /// Value of a `key value` line.
    pub(crate) fn key(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (no, line) = self.next_line(key)?;
        match line.split_once(char::is_whitespace) {
            Some((k, v)) if k == key => Ok((no, v.trim())),
            _ if line == key => Ok((no, "")),
            _ => Err(Error::parse(
                no,
                format!("expected `{key} ...`, found {line:?}"),
            )),
        }
    }

    pub(crate) fn key_f64(&mut self, key: &str) -> Result<f64> {
        let (no, v) = self.key(key)?;
        parse_f64(no, v)
    }

    pub(crate) fn key_usize(&mut self, key: &str) -> Result<usize> {
        let (no, v) = self.key(key)?;
        v.parse().map_err(|_| {
            Error::parse(
                no,
                format!("{key} must be a non-negative integer, got {v:?}"),
            )
        })
    }

    pub(crate) fn schema(&mut self) -> Result<()> {
        let (no, v) = self.key("schema_version")?;
        if v != SCHEMA_VERSION.to_string() {
            return Err(Error::parse(
                no,
                format!("unsupported schema_version {v:?}"),
            ));
        }
        Ok(())
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            Some((no, l)) => Err(Error::parse(no, format!("unexpected trailing line {l:?}"))),
            None => Ok(()),
        }
    }
}
