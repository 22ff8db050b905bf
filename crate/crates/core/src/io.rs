//! Line-oriented text formats, 1-based labels throughout.
//!
//! ```text
//! graph N M          paths N COUNT        matchings N COUNT      matrix M
//! u v                v1 v2 ... vN         a-b c-d ...            a11 a12 ... a1M
//! ...                ...                  ...                    ...
//! ```
//!
//! Blank lines are ignored. Writers emit graph edges with `u < v` in sorted
//! order, paths in canonical orientation, and matching pairs sorted by
//! their smaller endpoint.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::counting::BiadjacencyMatrix;
use crate::error::{Error, Result};
use crate::graph::{HamPath, LabeledGraph, PerfectMatching};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next nonblank line with its 1-based number.
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        self.inner
            .by_ref()
            .map(|(i, l)| (i + 1, l.trim()))
            .find(|(_, l)| !l.is_empty())
    }

    fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.inner.clone().count();
        self.next_line().ok_or_else(|| perr(last, format!("unexpected end of input, expected {what}")))
    }

    fn finish(mut self) -> Result<()> {
        match self.next_line() {
            Some((no, _)) => Err(perr(no, "trailing content after declared records")),
            None => Ok(()),
        }
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| perr(line, format!("not a number: {tok:?}")))
}

/// Parses `keyword a b ...` returning the numeric fields.
fn header(lines: &mut Lines<'_>, keyword: &str, fields: usize) -> Result<(usize, Vec<usize>)> {
    let (no, line) = lines.expect_line("header")?;
    let mut toks = line.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(perr(no, format!("expected header starting with {keyword:?}")));
    }
    let vals = toks.map(|t| parse_num(no, t)).collect::<Result<Vec<usize>>>()?;
    if vals.len() != fields {
        return Err(perr(no, format!("{keyword} header needs {fields} numbers")));
    }
    Ok((no, vals))
}

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut s = format!("graph {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "graph", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines.expect_line("edge")?;
        let toks: Vec<usize> = line.split_whitespace().map(|t| parse_num(no, t)).collect::<Result<_>>()?;
        match toks[..] {
            [u, v] => edges.push((no, u, v)),
            _ => return Err(perr(no, "edge line needs two labels")),
        }
    }
    lines.finish()?;
    let mut g = LabeledGraph::empty(n);
    for (no, u, v) in edges {
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(perr(no, format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(perr(no, e.to_string())),
        }
    }
    Ok(g)
}

pub fn write_paths(n: usize, paths: &[HamPath]) -> String {
    let mut s = format!("paths {} {}\n", n, paths.len());
    for p in paths {
        let line: Vec<String> = p.order().iter().map(ToString::to_string).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

pub fn parse_paths(text: &str) -> Result<(usize, Vec<HamPath>)> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "paths", 2)?;
    let (n, count) = (h[0], h[1]);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines.expect_line("path")?;
        let order: Vec<usize> = line.split_whitespace().map(|t| parse_num(no, t)).collect::<Result<_>>()?;
        if order.len() != n {
            return Err(perr(no, format!("path has {} labels, expected {n}", order.len())));
        }
        out.push(HamPath::new(order).map_err(|e| perr(no, e.to_string()))?);
    }
    lines.finish()?;
    Ok((n, out))
}

pub fn write_matchings(n: usize, family: &[PerfectMatching]) -> String {
    let mut s = format!("matchings {} {}\n", n, family.len());
    for m in family {
        let line: Vec<String> = m.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

pub fn parse_matchings(text: &str) -> Result<(usize, Vec<PerfectMatching>)> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "matchings", 2)?;
    let (n, count) = (h[0], h[1]);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (no, line) = lines.expect_line("matching")?;
        let pairs = line
            .split_whitespace()
            .map(|tok| {
                let (a, b) = tok.split_once('-').ok_or_else(|| perr(no, format!("bad pair {tok:?}")))?;
                Ok((parse_num(no, a)?, parse_num(no, b)?))
            })
            .collect::<Result<Vec<(usize, usize)>>>()?;
        out.push(PerfectMatching::new(n, pairs).map_err(|e| perr(no, e.to_string()))?);
    }
    lines.finish()?;
    Ok((n, out))
}

pub fn write_matrix(a: &BiadjacencyMatrix<BigInt>) -> String {
    let mut s = format!("matrix {}\n", a.size());
    for row in a.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<BiadjacencyMatrix<BigInt>> {
    let mut lines = Lines::new(text);
    let (_, h) = header(&mut lines, "matrix", 1)?;
    let m = h[0];
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines.expect_line("matrix row")?;
        let row: Vec<BigInt> = line.split_whitespace().map(|t| parse_num(no, t)).collect::<Result<_>>()?;
        if row.len() != m {
            return Err(perr(no, format!("row has {} entries, expected {m}", row.len())));
        }
        rows.push(row);
    }
    lines.finish()?;
    BiadjacencyMatrix::from_rows(rows)
}
